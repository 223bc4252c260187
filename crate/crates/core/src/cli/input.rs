//! Line-oriented input format and builtin example ids.
//!
//! ```text
//! # comments and blank lines are ignored
//! group cyclic 4                 | group product cyclic 2 cyclic 2 | group table
//! cocycle cyclic 1               | cocycle trivial                 | cocycle table
//! ```
//!
//! `group table` is followed by the rows of a Cayley table (0-based
//! indices). `cocycle table` is followed by `root_order N` and lines
//! `a b c -> e` meaning ω(a,b,c) = ζ_N^e; missing entries are 0.

use std::path::Path;

use crate::twisted::{cyclic_cocycle, v4_table, Cocycle3, FiniteGroup, V4_TABLE_IDS};

use super::CliError;

fn syntax(line: usize, message: impl Into<String>) -> CliError {
    CliError::Syntax {
        line,
        message: message.into(),
    }
}

/// Group expression: `cyclic n` or `product <expr> <expr>`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum GroupExpr {
    Cyclic(usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    fn build(&self) -> FiniteGroup {
        match self {
            GroupExpr::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupExpr::Product(a, b) => FiniteGroup::direct_product(&a.build(), &b.build()),
        }
    }
}

fn parse_int<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, CliError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("expected {what}, found `{tok}`")))
}

fn parse_group_expr<'a>(line: usize, toks: &mut impl Iterator<Item = &'a str>) -> Result<GroupExpr, CliError> {
    match toks.next() {
        Some("cyclic") => {
            let n: usize = parse_int(line, toks.next(), "group order")?;
            if n == 0 {
                return Err(syntax(line, "group order must be positive"));
            }
            Ok(GroupExpr::Cyclic(n))
        }
        Some("product") => {
            let a = parse_group_expr(line, toks)?;
            let b = parse_group_expr(line, toks)?;
            Ok(GroupExpr::Product(Box::new(a), Box::new(b)))
        }
        Some(other) => Err(syntax(line, format!("unknown group form `{other}`"))),
        None => Err(syntax(line, "missing group form")),
    }
}

enum GroupStanza {
    Expr(GroupExpr),
    Table(Vec<Vec<usize>>, usize),
}

enum CocycleStanza {
    Trivial,
    Cyclic(i64, usize),
    Table {
        root_order: Option<u32>,
        entries: Vec<([usize; 3], i64, usize)>,
        line: usize,
    },
}

/// Parses the text of an input file.
pub fn parse_input_str(text: &str) -> Result<(FiniteGroup, Cocycle3), CliError> {
    let mut group: Option<(GroupStanza, usize)> = None;
    let mut cocycle: Option<CocycleStanza> = None;
    // 0 = none, 1 = group table rows, 2 = cocycle table entries
    let mut mode = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let head = toks.next().expect("nonempty line");
        match head {
            "group" => {
                if group.is_some() {
                    return Err(syntax(line, "duplicate group stanza"));
                }
                let rest: Vec<&str> = toks.collect();
                if rest == ["table"] {
                    group = Some((GroupStanza::Table(Vec::new(), line), line));
                    mode = 1;
                } else {
                    let mut it = rest.into_iter();
                    let expr = parse_group_expr(line, &mut it)?;
                    if let Some(extra) = it.next() {
                        return Err(syntax(line, format!("unexpected `{extra}`")));
                    }
                    group = Some((GroupStanza::Expr(expr), line));
                    mode = 0;
                }
            }
            "cocycle" => {
                if cocycle.is_some() {
                    return Err(syntax(line, "duplicate cocycle stanza"));
                }
                let rest: Vec<&str> = toks.collect();
                cocycle = Some(match rest.as_slice() {
                    ["trivial"] => CocycleStanza::Trivial,
                    ["cyclic", k] => CocycleStanza::Cyclic(parse_int(line, Some(k), "twist level")?, line),
                    ["table"] => CocycleStanza::Table {
                        root_order: None,
                        entries: Vec::new(),
                        line,
                    },
                    _ => return Err(syntax(line, format!("unknown cocycle form `{}`", rest.join(" ")))),
                });
                mode = if matches!(cocycle, Some(CocycleStanza::Table { .. })) { 2 } else { 0 };
            }
            "root_order" if mode == 2 => {
                let n: u32 = parse_int(line, toks.next(), "root order")?;
                if n == 0 {
                    return Err(syntax(line, "root order must be positive"));
                }
                if let Some(CocycleStanza::Table { root_order, .. }) = &mut cocycle {
                    if root_order.replace(n).is_some() {
                        return Err(syntax(line, "duplicate root_order"));
                    }
                }
            }
            _ if mode == 1 => {
                let row = content
                    .split_whitespace()
                    .map(|t| parse_int(line, Some(t), "table entry"))
                    .collect::<Result<Vec<usize>, _>>()?;
                if let Some((GroupStanza::Table(rows, _), _)) = &mut group {
                    rows.push(row);
                }
            }
            _ if mode == 2 => {
                let (lhs, rhs) = content
                    .split_once("->")
                    .ok_or_else(|| syntax(line, "expected `a b c -> e`"))?;
                let args: Vec<&str> = lhs.split_whitespace().collect();
                if args.len() != 3 {
                    return Err(syntax(line, "expected three group elements before `->`"));
                }
                let mut triple = [0usize; 3];
                for (slot, tok) in triple.iter_mut().zip(&args) {
                    *slot = parse_int(line, Some(tok), "group element")?;
                }
                let mut rest = rhs.split_whitespace();
                let e: i64 = parse_int(line, rest.next(), "exponent")?;
                if let Some(extra) = rest.next() {
                    return Err(syntax(line, format!("unexpected `{extra}`")));
                }
                if let Some(CocycleStanza::Table { entries, .. }) = &mut cocycle {
                    entries.push((triple, e, line));
                }
            }
            other => return Err(syntax(line, format!("unexpected `{other}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let (stanza, group_line) = group.ok_or_else(|| syntax(last, "missing group stanza"))?;
    let (group, expr) = match stanza {
        GroupStanza::Expr(e) => (e.build(), Some(e)),
        GroupStanza::Table(rows, line) => {
            let g = FiniteGroup::from_table(rows).map_err(|source| CliError::Group { line, source })?;
            (g, None)
        }
    };
    let n = group.order();
    let cocycle = match cocycle.ok_or_else(|| syntax(last, "missing cocycle stanza"))? {
        CocycleStanza::Trivial => Cocycle3::trivial(group),
        CocycleStanza::Cyclic(k, line) => match expr {
            Some(GroupExpr::Cyclic(m)) => cyclic_cocycle(m, k),
            _ => {
                return Err(syntax(
                    line,
                    format!("`cocycle cyclic` needs `group cyclic n` (group declared on line {group_line})"),
                ))
            }
        },
        CocycleStanza::Table {
            root_order,
            entries,
            line,
        } => {
            let root_order = root_order.ok_or_else(|| syntax(line, "cocycle table needs `root_order N`"))?;
            let mut w = Cocycle3::from_fn(group, root_order, |_, _, _| 0);
            for ([a, b, c], e, l) in entries {
                if a >= n || b >= n || c >= n {
                    return Err(syntax(l, format!("group element out of range 0..{n}")));
                }
                w.set_exp(a, b, c, e);
            }
            w
        }
    };
    Ok((cocycle.group().clone(), cocycle))
}

pub fn parse_input(path: &Path) -> Result<(FiniteGroup, Cocycle3), CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_input_str(&text)
}

/// Resolves `zn:<n>:<k>`, `trivial:<n>` and `v4:<table-id>`.
pub fn resolve_builtin(id: &str) -> Result<Cocycle3, CliError> {
    let unknown = || CliError::UnknownExample(id.to_string());
    let parts: Vec<&str> = id.splitn(3, ':').collect();
    let order = |s: &str| s.parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(unknown);
    match parts.as_slice() {
        ["zn", n, k] => {
            let k: i64 = k.parse().map_err(|_| unknown())?;
            Ok(cyclic_cocycle(order(n)?, k))
        }
        ["trivial", n] => Ok(Cocycle3::trivial(FiniteGroup::cyclic(order(n)?))),
        ["v4", t] => v4_table(t).ok_or_else(|| {
            CliError::UnknownExample(format!("{id} (known tables: {})", V4_TABLE_IDS.join(", ")))
        }),
        _ => Err(unknown()),
    }
}
