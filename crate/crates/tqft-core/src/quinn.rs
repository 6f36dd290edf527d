//! The generalized Euler-characteristic theories.
//!
//! A theory in this family assigns to a marked complex `(M, Σ)` the formal
//! value `Z_M = u^{c1·χ(M) + c2·χ(Σ_in) + c3·χ(Σ_out)}` for fixed rational
//! constants `c1..c4`, where `u` is an abstract nonzero base that is never
//! evaluated numerically. A gluing morphism acts by multiplication with
//! `u^{c4·χ(Σ₂)}`. The assignment is functorial exactly when
//! `c1 + c2 + c3 + c4 = 0`; [`verify_functoriality`] checks the functor
//! equation over a corpus of gluing morphisms and reports the first
//! counterexample.

use core::fmt;
use core::ops::Mul;

use num_traits::Zero;

use crate::complex::{Label, MarkedComplex, SimplicialComplex};
use crate::gluing::{GluingError, GluingMorphism};
use crate::rational::{frac, rat, Rational};

/// The constants of one theory. `c1` weights χ(M), `c2` the in-boundary,
/// `c3` the out-boundary, and `c4` the evaluation pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTheoryParams {
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
    pub c4: Rational,
}

impl EulerTheoryParams {
    pub fn new(c1: Rational, c2: Rational, c3: Rational, c4: Rational) -> Self {
        EulerTheoryParams { c1, c2, c3, c4 }
    }

    /// The Euler theory: `(1, −1, 0, 0)`.
    pub fn euler() -> Self {
        Self::new(rat(1), rat(-1), rat(0), rat(0))
    }

    /// The skew Euler theory: `(1, 0, −1, 0)`.
    pub fn skew() -> Self {
        Self::new(rat(1), rat(0), rat(-1), rat(0))
    }

    /// The balanced solution: `(1, −1/2, −1/2, 0)`.
    pub fn balanced() -> Self {
        Self::new(rat(1), frac(-1, 2), frac(-1, 2), rat(0))
    }

    /// Does `c1 + c2 + c3 + c4 = 0` hold exactly?
    pub fn check_constraint(&self) -> bool {
        (&self.c1 + &self.c2 + &self.c3 + &self.c4).is_zero()
    }
}

/// A formal power `u^q` with exact rational exponent. Multiplication adds
/// exponents; `u^0` is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZValue {
    pub exponent: Rational,
}

impl ZValue {
    pub fn one() -> Self {
        ZValue { exponent: rat(0) }
    }

    pub fn from_exponent(exponent: Rational) -> Self {
        ZValue { exponent }
    }
}

impl Mul for ZValue {
    type Output = ZValue;

    // Formal powers multiply by adding exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: ZValue) -> ZValue {
        ZValue { exponent: self.exponent + rhs.exponent }
    }
}

impl fmt::Display for ZValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.exponent;
        if q.is_integer() && !q.numer().sign().eq(&num_bigint::Sign::Minus) {
            write!(f, "u^{}", q.numer())
        } else {
            write!(f, "u^({q})")
        }
    }
}

/// `Z_M` for a marked complex under the given theory:
/// exponent `c1·χ(M) + c2·χ(Σ_in) + c3·χ(Σ_out)`.
pub fn z_value(m: &MarkedComplex, p: &EulerTheoryParams) -> ZValue {
    let chi_m = rat(m.complex.euler_characteristic());
    let chi_in = rat(m.boundary_union(Label::In).euler_characteristic());
    let chi_out = rat(m.boundary_union(Label::Out).euler_characteristic());
    ZValue::from_exponent(&p.c1 * chi_m + &p.c2 * chi_in + &p.c3 * chi_out)
}

/// Exponent of the evaluation pairing on `V_Σ`: `c4·χ(Σ)`.
pub fn evaluation_exponent(sigma: &SimplicialComplex, p: &EulerTheoryParams) -> Rational {
    &p.c4 * rat(sigma.euler_characteristic())
}

/// The action of a gluing morphism on values: multiplication by
/// `u^{c4·χ(Σ₂)}`. Applies uniformly whether or not boundary remains after
/// the gluing.
pub fn apply_gluing(
    g: &GluingMorphism,
    z: &ZValue,
    p: &EulerTheoryParams,
) -> Result<ZValue, GluingError> {
    let sigma2 = g.spec.sigma2_union()?;
    Ok(ZValue::from_exponent(&z.exponent + evaluation_exponent(&sigma2, p)))
}

/// A functor-equation violation: the two sides' exponents at one corpus
/// index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub index: usize,
    pub lhs_exponent: Rational,
    pub rhs_exponent: Rational,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "corpus gluing #{}: glued value u^({}) but target value u^({})",
            self.index, self.lhs_exponent, self.rhs_exponent
        )
    }
}

/// Checks `Z_{(f,φ)}(Z_source) = Z_target` for every gluing morphism in the
/// corpus, in order, returning the first violation.
#[allow(clippy::result_large_err)] // the counterexample carries both exponents
pub fn verify_functoriality(
    corpus: &[GluingMorphism],
    p: &EulerTheoryParams,
) -> Result<(), Counterexample> {
    for (index, g) in corpus.iter().enumerate() {
        let source_z = z_value(g.source(), p);
        let lhs = apply_gluing(g, &source_z, p).expect("corpus morphisms are well-formed");
        let rhs = z_value(&g.target, p);
        if lhs.exponent != rhs.exponent {
            return Err(Counterexample {
                index,
                lhs_exponent: lhs.exponent,
                rhs_exponent: rhs.exponent,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{BoundaryComponent, Label};
    use crate::gluing::{glue, GluingSpec};
    use alloc::string::ToString;
    use alloc::vec;

    fn point_component(name: &str, label: Label, v: u32) -> BoundaryComponent {
        BoundaryComponent {
            name: name.to_string(),
            label,
            complex: SimplicialComplex::from_vertex_tuples([vec![v]]),
        }
    }

    fn interval_in_marked() -> MarkedComplex {
        MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([vec![0, 1]]),
            vec![point_component("A", Label::In, 0)],
        )
    }

    fn path4_gluing() -> GluingMorphism {
        let m = MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![1, 2], vec![2, 3]]),
            vec![point_component("A", Label::In, 0), point_component("B", Label::Out, 3)],
        );
        glue(&GluingSpec {
            source: m,
            sigma1: vec!["A".to_string()],
            sigma2: vec!["B".to_string()],
            phi: [(0, 3)].into_iter().collect(),
        })
        .unwrap()
    }

    #[test]
    fn presets_satisfy_the_constraint() {
        assert!(EulerTheoryParams::euler().check_constraint());
        assert!(EulerTheoryParams::skew().check_constraint());
        assert!(EulerTheoryParams::balanced().check_constraint());
        assert!(!EulerTheoryParams::new(rat(1), rat(0), rat(0), rat(0)).check_constraint());
    }

    #[test]
    fn euler_theory_on_the_interval_rel_endpoint() {
        // exponent = 1·χ(I) − 1·χ(pt) = 0.
        let z = z_value(&interval_in_marked(), &EulerTheoryParams::euler());
        assert_eq!(z.exponent, rat(0));
        assert_eq!(alloc::format!("{z}"), "u^0");
    }

    #[test]
    fn empty_complex_has_unit_value() {
        let params = EulerTheoryParams::new(frac(3, 7), rat(-2), frac(1, 2), rat(5));
        let z = z_value(&MarkedComplex::default(), &params);
        assert_eq!(z, ZValue::one());
    }

    #[test]
    fn balanced_theory_on_the_split_circle() {
        // Circle with an In arc (χ=1) and an Out vertex (χ=1):
        // exponent = 1·0 − 1/2 − 1/2 = −1.
        let circle = SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![1, 2], vec![0, 2]]);
        let m = MarkedComplex::new(
            circle,
            vec![
                BoundaryComponent {
                    name: "ArcIn".into(),
                    label: Label::In,
                    complex: SimplicialComplex::from_vertex_tuples([vec![0, 1]]),
                },
                point_component("PtOut", Label::Out, 2),
            ],
        );
        assert_eq!(m.validate(), Ok(()));
        let z = z_value(&m, &EulerTheoryParams::balanced());
        assert_eq!(z.exponent, rat(-1));
        assert_eq!(alloc::format!("{z}"), "u^(-1)");
    }

    #[test]
    fn evaluation_exponent_examples() {
        let point = SimplicialComplex::from_vertex_tuples([vec![0]]);
        assert_eq!(evaluation_exponent(&point, &EulerTheoryParams::euler()), rat(0));
        let c4_one = EulerTheoryParams::new(rat(1), rat(-1), rat(-1), rat(1));
        assert_eq!(evaluation_exponent(&point, &c4_one), rat(1));
        // Multiplicativity over disjoint union.
        let two_points = SimplicialComplex::from_vertex_tuples([vec![0], vec![5]]);
        assert_eq!(
            evaluation_exponent(&two_points, &c4_one),
            evaluation_exponent(&point, &c4_one) + evaluation_exponent(&point, &c4_one)
        );
    }

    #[test]
    fn apply_gluing_is_identity_when_c4_vanishes() {
        let g = path4_gluing();
        let z = ZValue::from_exponent(frac(5, 3));
        let out = apply_gluing(&g, &z, &EulerTheoryParams::euler()).unwrap();
        assert_eq!(out, z);
    }

    #[test]
    fn apply_gluing_adds_c4_weight_of_sigma2() {
        let g = path4_gluing();
        let c4_one = EulerTheoryParams::new(rat(1), rat(-1), rat(-1), rat(1));
        let out = apply_gluing(&g, &ZValue::one(), &c4_one).unwrap();
        assert_eq!(out.exponent, rat(1)); // Σ₂ is a point.
    }

    #[test]
    fn functor_equation_on_the_self_glued_path() {
        // Both sides hand-evaluated: z(path) = u^{1−1} = u^0; the gluing
        // contributes u^0; z(circle) = u^0.
        let g = path4_gluing();
        let p = EulerTheoryParams::euler();
        let src = z_value(g.source(), &p);
        assert_eq!(src.exponent, rat(0));
        let lhs = apply_gluing(&g, &src, &p).unwrap();
        assert_eq!(lhs.exponent, rat(0));
        assert_eq!(z_value(&g.target, &p).exponent, rat(0));
        assert_eq!(verify_functoriality(&[g], &p), Ok(()));
    }

    #[test]
    fn constraint_violation_is_detected_on_point_gluings() {
        let g = path4_gluing();
        let bad = EulerTheoryParams::new(rat(1), rat(0), rat(0), rat(0));
        let err = verify_functoriality(&[g], &bad).unwrap_err();
        assert_eq!(err.index, 0);
        assert_ne!(err.lhs_exponent, err.rhs_exponent);
    }

    #[test]
    fn any_params_pass_on_gluings_along_chi_zero_pieces() {
        // Two hollow-square "bowls" glued along their 4-vertex rims (χ=0).
        let bowl = |base: u32| {
            SimplicialComplex::from_vertex_tuples([
                vec![base, base + 1, base + 4],
                vec![base + 1, base + 2, base + 4],
                vec![base + 2, base + 3, base + 4],
                vec![base, base + 3, base + 4],
            ])
        };
        let rim = |base: u32| {
            SimplicialComplex::from_vertex_tuples([
                vec![base, base + 1],
                vec![base + 1, base + 2],
                vec![base + 2, base + 3],
                vec![base, base + 3],
            ])
        };
        let m = MarkedComplex::new(
            bowl(0).union(&bowl(5)),
            vec![
                BoundaryComponent { name: "R1".into(), label: Label::Out, complex: rim(0) },
                BoundaryComponent { name: "R2".into(), label: Label::In, complex: rim(5) },
            ],
        );
        assert_eq!(m.validate(), Ok(()));
        let g = glue(&GluingSpec {
            source: m,
            sigma1: vec!["R1".to_string()],
            sigma2: vec!["R2".to_string()],
            phi: [(0, 5), (1, 6), (2, 7), (3, 8)].into_iter().collect(),
        })
        .unwrap();
        // Octahedron sphere.
        assert_eq!(g.target.complex.euler_characteristic(), 2);
        let wild = EulerTheoryParams::new(rat(2), frac(7, 3), rat(-5), frac(1, 9));
        assert!(!wild.check_constraint());
        assert_eq!(verify_functoriality(&[g], &wild), Ok(()));
    }

    #[test]
    fn z_value_is_additive_over_disjoint_union() {
        let a = interval_in_marked();
        let b = MarkedComplex::new(
            SimplicialComplex::from_vertex_tuples([vec![0, 1], vec![1, 2], vec![0, 2]]),
            vec![point_component("P", Label::Out, 1)],
        );
        let p = EulerTheoryParams::balanced();
        let u = a.disjoint_union(&b);
        assert_eq!(
            z_value(&u, &p).exponent,
            z_value(&a, &p).exponent + z_value(&b, &p).exponent
        );
    }

    #[test]
    fn z_value_is_invariant_under_relabelling() {
        let m = interval_in_marked();
        let shifted = m.relabel(|v| v + 100);
        for p in [
            EulerTheoryParams::euler(),
            EulerTheoryParams::skew(),
            EulerTheoryParams::balanced(),
        ] {
            assert_eq!(z_value(&m, &p), z_value(&shifted, &p));
        }
    }

    #[test]
    fn normalized_constraint_reads_as_minus_one() {
        // With c1 = 1 the constraint is c2 + c3 + c4 = −1.
        let mut rng = crate::rng::SplitMix64::new(5);
        for _ in 0..50 {
            let c2 = frac(rng.next_range_i64(-5, 5), rng.next_range_i64(1, 5));
            let c3 = frac(rng.next_range_i64(-5, 5), rng.next_range_i64(1, 5));
            let c4 = frac(rng.next_range_i64(-5, 5), rng.next_range_i64(1, 5));
            let p = EulerTheoryParams::new(rat(1), c2.clone(), c3.clone(), c4.clone());
            assert_eq!(p.check_constraint(), c2 + c3 + c4 == rat(-1));
        }
    }

    #[test]
    fn display_formats_exponents_exactly() {
        assert_eq!(alloc::format!("{}", ZValue::from_exponent(rat(0))), "u^0");
        assert_eq!(alloc::format!("{}", ZValue::from_exponent(rat(3))), "u^3");
        assert_eq!(alloc::format!("{}", ZValue::from_exponent(frac(-1, 2))), "u^(-1/2)");
        assert_eq!(alloc::format!("{}", ZValue::from_exponent(frac(3, 2))), "u^(3/2)");
        assert_eq!(alloc::format!("{}", ZValue::from_exponent(rat(-2))), "u^(-2)");
    }
}
