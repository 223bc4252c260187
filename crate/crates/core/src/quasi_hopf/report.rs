use serde::Serialize;

use crate::algebra::SparseTensor;
use crate::scalar::Field;

/// Number of offending entries kept in rendered summaries.
pub const MAX_OFFENDING: usize = 10;

/// One tensor identity `lhs = rhs`, kept together with `lhs - rhs`.
#[derive(Clone, Debug)]
pub struct IdentityCheck<E> {
    pub label: String,
    pub lhs: SparseTensor<E>,
    pub rhs: SparseTensor<E>,
    pub discrepancy: SparseTensor<E>,
}

impl<E: Clone> IdentityCheck<E> {
    pub fn new<F: Field<Elem = E>>(
        field: &F,
        label: impl Into<String>,
        lhs: SparseTensor<E>,
        rhs: SparseTensor<E>,
    ) -> Self {
        let label = label.into();
        let discrepancy = lhs
            .sub(field, &rhs)
            .unwrap_or_else(|e| panic!("{label}: sides have different shapes: {e}"));
        IdentityCheck {
            label,
            lhs,
            rhs,
            discrepancy,
        }
    }

    pub fn passed(&self) -> bool {
        self.discrepancy.is_empty()
    }

    /// Offending multi-indices (in key order) with both coefficients.
    pub fn offending<F: Field<Elem = E>>(&self, field: &F, limit: usize) -> Vec<(Vec<usize>, E, E)> {
        self.discrepancy
            .iter()
            .take(limit)
            .map(|(idx, _)| {
                let l = self.lhs.get(&idx).cloned().unwrap_or_else(|| field.zero());
                let r = self.rhs.get(&idx).cloned().unwrap_or_else(|| field.zero());
                (idx, l, r)
            })
            .collect()
    }

    pub fn summary<F: Field<Elem = E>>(&self, field: &F) -> CheckSummary {
        CheckSummary {
            label: self.label.clone(),
            passed: self.passed(),
            discrepancies: self.discrepancy.len(),
            offending: self
                .offending(field, MAX_OFFENDING)
                .into_iter()
                .map(|(index, l, r)| Offending {
                    index,
                    lhs: field.render(&l),
                    rhs: field.render(&r),
                })
                .collect(),
        }
    }
}

/// Rendered, field-independent view of an [`IdentityCheck`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub label: String,
    pub passed: bool,
    pub discrepancies: usize,
    pub offending: Vec<Offending>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Offending {
    pub index: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// An ordered list of identity checks.
#[derive(Clone, Debug)]
pub struct CheckReport<E> {
    pub checks: Vec<IdentityCheck<E>>,
}

impl<E: Clone> Default for CheckReport<E> {
    fn default() -> Self {
        CheckReport { checks: Vec::new() }
    }
}

impl<E: Clone> CheckReport<E> {
    pub fn push(&mut self, check: IdentityCheck<E>) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport<E>) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn get(&self, label: &str) -> Option<&IdentityCheck<E>> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck<E>> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn summaries<F: Field<Elem = E>>(&self, field: &F) -> Vec<CheckSummary> {
        self.checks.iter().map(|c| c.summary(field)).collect()
    }
}
