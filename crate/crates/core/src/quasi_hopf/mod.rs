//! Quasi-Hopf algebras given by tables: axiom verification and the derived
//! elements γ, δ, f, q_R, p_L, U and Ṽ.
//!
//! Notation follows the usual conventions: `Φ = X¹⊗X²⊗X³`,
//! `Φ⁻¹ = x¹⊗x²⊗x³`, `f⁻¹ = g¹⊗g²`, and a "family" tensor `Σ_i e_i ⊗ e_i`
//! carries a label leg in front so that an identity quantified over basis
//! elements becomes one tensor identity.

mod axioms;
mod derived;
mod report;

use thiserror::Error;

use crate::algebra::{
    basis_family, contract, coproduct_leg, functional_leg, invert_map, map_leg, AlgebraError,
    Coproduct, LinearMap, Slot, SparseTensor, StructureConstants,
};
use crate::scalar::Field;

pub use axioms::{check_quasi_antipode, check_quasi_bialgebra};
pub use derived::{
    check_u_vtilde_identities, check_qr_pl_identities, check_twist_identities, compute_qr_pl, compute_twist,
    compute_u_vtilde, DerivedElements, Twist,
};
pub use report::{CheckReport, CheckSummary, IdentityCheck, Offending, MAX_OFFENDING};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasiHopfError {
    #[error("{what} has dimension {found}, expected {expected}")]
    Shape {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("antipode is not bijective")]
    AntipodeNotBijective,
    #[error("inconsistent derived data: {0} failed")]
    Inconsistent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The raw tuple `(H, Δ, ε, Φ, Φ⁻¹, α, β, S)`.
#[derive(Clone, Debug)]
pub struct QuasiHopfData<E> {
    pub mult: StructureConstants<E>,
    pub coproduct: Coproduct<E>,
    pub counit: Vec<E>,
    pub associator: SparseTensor<E>,
    pub associator_inv: SparseTensor<E>,
    pub alpha: Vec<E>,
    pub beta: Vec<E>,
    pub antipode: LinearMap<E>,
}

/// A quasi-Hopf algebra with S⁻¹ computed at construction.
///
/// Construction checks shapes only; the axioms are verified by
/// [`check_quasi_bialgebra`] and [`check_quasi_antipode`].
#[derive(Clone, Debug)]
pub struct QuasiHopfAlgebra<F: Field> {
    field: F,
    data: QuasiHopfData<F::Elem>,
    antipode_inv: Option<LinearMap<F::Elem>>,
}

impl<F: Field> QuasiHopfAlgebra<F> {
    pub fn new(field: F, data: QuasiHopfData<F::Elem>) -> Result<Self, QuasiHopfError> {
        let dim = data.mult.dim();
        let shapes = [
            ("coproduct", data.coproduct.dim()),
            ("counit", data.counit.len()),
            ("associator", data.associator.dim()),
            ("inverse associator", data.associator_inv.dim()),
            ("alpha", data.alpha.len()),
            ("beta", data.beta.len()),
            ("antipode", data.antipode.dim()),
        ];
        for (what, found) in shapes {
            if found != dim {
                return Err(QuasiHopfError::Shape {
                    what,
                    expected: dim,
                    found,
                });
            }
        }
        for (what, t) in [("associator", &data.associator), ("inverse associator", &data.associator_inv)] {
            if t.degree() != 3 {
                return Err(QuasiHopfError::Shape {
                    what,
                    expected: 3,
                    found: t.degree(),
                });
            }
        }
        let antipode_inv = invert_map(&field, &data.antipode).ok();
        Ok(QuasiHopfAlgebra {
            field,
            data,
            antipode_inv,
        })
    }

    /// Replaces the cached S⁻¹ (used to build deliberately broken algebras).
    pub fn with_antipode_inv(mut self, map: LinearMap<F::Elem>) -> Self {
        self.antipode_inv = Some(map);
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn data(&self) -> &QuasiHopfData<F::Elem> {
        &self.data
    }

    pub fn into_data(self) -> QuasiHopfData<F::Elem> {
        self.data
    }

    pub fn dim(&self) -> usize {
        self.data.mult.dim()
    }

    pub fn mult(&self) -> &StructureConstants<F::Elem> {
        &self.data.mult
    }

    pub fn coproduct(&self) -> &Coproduct<F::Elem> {
        &self.data.coproduct
    }

    pub fn counit(&self) -> &[F::Elem] {
        &self.data.counit
    }

    pub fn unit(&self) -> &[F::Elem] {
        self.data.mult.unit()
    }

    pub fn associator(&self) -> &SparseTensor<F::Elem> {
        &self.data.associator
    }

    pub fn associator_inv(&self) -> &SparseTensor<F::Elem> {
        &self.data.associator_inv
    }

    pub fn alpha(&self) -> &[F::Elem] {
        &self.data.alpha
    }

    pub fn beta(&self) -> &[F::Elem] {
        &self.data.beta
    }

    pub fn antipode(&self) -> &LinearMap<F::Elem> {
        &self.data.antipode
    }

    pub fn antipode_inv(&self) -> Result<&LinearMap<F::Elem>, QuasiHopfError> {
        self.antipode_inv
            .as_ref()
            .ok_or(QuasiHopfError::AntipodeNotBijective)
    }

    // Expression helpers shared by the checks.

    pub(crate) fn vector(&self, v: &[F::Elem]) -> SparseTensor<F::Elem> {
        SparseTensor::from_vector(&self.field, v)
    }

    pub(crate) fn units(&self, degree: usize) -> SparseTensor<F::Elem> {
        self.data.mult.unit_tensor(&self.field, degree)
    }

    pub(crate) fn family(&self) -> SparseTensor<F::Elem> {
        basis_family(&self.field, self.dim())
    }

    pub(crate) fn mul(&self, a: &SparseTensor<F::Elem>, b: &SparseTensor<F::Elem>) -> SparseTensor<F::Elem> {
        self.data
            .mult
            .multiply(&self.field, a, b)
            .expect("operands built with matching shapes")
    }

    pub(crate) fn contract(&self, sources: &[&SparseTensor<F::Elem>], out: &[&[Slot]]) -> SparseTensor<F::Elem> {
        contract(&self.field, &self.data.mult, sources, out)
    }

    pub(crate) fn delta_at(&self, t: &SparseTensor<F::Elem>, leg: usize) -> SparseTensor<F::Elem> {
        coproduct_leg(&self.field, t, leg, &self.data.coproduct)
    }

    pub(crate) fn counit_at(&self, t: &SparseTensor<F::Elem>, leg: usize) -> SparseTensor<F::Elem> {
        functional_leg(&self.field, t, leg, &self.data.counit)
    }

    pub(crate) fn s_at(&self, t: &SparseTensor<F::Elem>, legs: &[usize]) -> SparseTensor<F::Elem> {
        apply_on(&self.field, t, legs, &self.data.antipode)
    }

    pub(crate) fn sinv_at(
        &self,
        t: &SparseTensor<F::Elem>,
        legs: &[usize],
    ) -> Result<SparseTensor<F::Elem>, QuasiHopfError> {
        Ok(apply_on(&self.field, t, legs, self.antipode_inv()?))
    }

    pub(crate) fn check(
        &self,
        label: &str,
        lhs: SparseTensor<F::Elem>,
        rhs: SparseTensor<F::Elem>,
    ) -> IdentityCheck<F::Elem> {
        IdentityCheck::new(&self.field, label, lhs, rhs)
    }
}

fn apply_on<F: Field>(
    field: &F,
    t: &SparseTensor<F::Elem>,
    legs: &[usize],
    map: &LinearMap<F::Elem>,
) -> SparseTensor<F::Elem> {
    legs.iter().fold(t.clone(), |acc, &l| map_leg(field, &acc, l, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{root_of_unity, Cyclotomic};
    use crate::twisted::{build_k_omega_g, cyclic_cocycle};

    fn k_omega(n: usize, k: i64) -> QuasiHopfAlgebra<Cyclotomic> {
        build_k_omega_g(Cyclotomic::new(n as u32), &cyclic_cocycle(n, k)).unwrap()
    }

    #[test]
    fn sign_cocycle_axioms() {
        let h = k_omega(2, 1);
        assert_eq!(h.beta(), &[h.field().one(), root_of_unity(2, 1)]);
        let r = check_quasi_bialgebra(&h);
        assert!(r.passed(), "{:?}", r.failures().map(|c| &c.label).collect::<Vec<_>>());
        assert!(check_quasi_antipode(&h).passed());
    }

    #[test]
    fn derived_identities_z3() {
        let h = k_omega(3, 1);
        let d = DerivedElements::compute(&h).unwrap();
        let r = check_twist_identities(&h, &d.twist);
        assert!(r.passed(), "{:?}", r.failures().map(|c| &c.label).collect::<Vec<_>>());
        let r = check_qr_pl_identities(&h, &d.twist, &d.q_r, &d.p_l).unwrap();
        assert!(r.passed(), "{:?}", r.failures().map(|c| &c.label).collect::<Vec<_>>());
        let r = check_u_vtilde_identities(&h, &d.u, &d.v_tilde);
        assert!(r.passed(), "{:?}", r.failures().map(|c| &c.label).collect::<Vec<_>>());
    }
}
