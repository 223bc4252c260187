use crate::algebra::{Coproduct, LinearMap, SparseTensor, StructureConstants};
use crate::quasi_hopf::{QuasiHopfAlgebra, QuasiHopfData, QuasiHopfError};
use crate::scalar::Field;

use super::Cocycle3;

/// The quasi-Hopf algebra k^ω(G) on the basis `δ_a` (index `a`):
/// `δ_aδ_b = δ_{a,b}δ_a`, `Δ(δ_a) = Σ_{gh=a} δ_g⊗δ_h`, `ε(δ_a) = δ_{a,1}`,
/// `Φ = Σ ω(a,b,c)⁻¹ δ_a⊗δ_b⊗δ_c`, `S(δ_a) = δ_{a⁻¹}`, `α = 1` and
/// `β = Σ ω(a,a⁻¹,a) δ_a`.
///
/// The cocycle is not validated here.
pub fn build_k_omega_g<F: Field>(field: F, w: &Cocycle3) -> Result<QuasiHopfAlgebra<F>, QuasiHopfError> {
    QuasiHopfAlgebra::new(field.clone(), k_omega_data(&field, w))
}

pub(crate) fn k_omega_data<F: Field>(field: &F, w: &Cocycle3) -> QuasiHopfData<F::Elem> {
    let g = w.group();
    let n = g.order();
    let ones = vec![field.one(); n];
    let mult = StructureConstants::from_fn(field, n, ones.clone(), |a, b| {
        if a == b {
            vec![(a, field.one())]
        } else {
            vec![]
        }
    });
    let mut terms = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            terms[g.mul(x, y)].push((x, y, field.one()));
        }
    }
    let coproduct = Coproduct::new(field, terms);
    let counit = (0..n)
        .map(|a| if a == g.identity() { field.one() } else { field.zero() })
        .collect();
    let mut associator = SparseTensor::zero(n, 3);
    let mut associator_inv = SparseTensor::zero(n, 3);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = w.value(field, a, b, c);
                associator.add_term(field, &[a, b, c], field.inv(&v).expect("roots of unity are units"));
                associator_inv.add_term(field, &[a, b, c], v);
            }
        }
    }
    let beta = (0..n).map(|a| w.value(field, a, g.inv(a), a)).collect();
    let antipode = LinearMap::from_columns(field, (0..n).map(|a| vec![(g.inv(a), field.one())]).collect());
    QuasiHopfData {
        mult,
        coproduct,
        counit,
        associator,
        associator_inv,
        alpha: ones,
        beta,
        antipode,
    }
}
