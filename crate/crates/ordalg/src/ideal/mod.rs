//! Exact fractional-ideal arithmetic over quadratic orders, with
//! divisorial closures, homogeneity and potency analysis, polynomial
//! content probes, and export of the finite-ideal monoid.
//!
//! Every ring here is `Z[ω]` for `ω = √d` or `ω = (1+√d)/2`, so every
//! nonzero fractional ideal is a rank-2 integer lattice with a unique
//! Hermite-form basis. All arithmetic is exact.

mod fractional;
pub mod fim;
mod hnf;
mod homog;
mod poly;
mod primes;
mod principal;

pub use fractional::FractionalIdeal;
pub use fim::{export_star_fim, schreier_probe, IdealMonoid, SchreierReport};
pub use homog::{
    build_homogeneous_from, build_homogeneous_in, check_sum_criterion, comaximal_family_count,
    is_f_rigid, is_homogeneous_ideal, m_of, potency_report, PotencyEntry, PotencyReport,
};
pub use poly::{property_p_check, psp_probe, IdealPolynomial, PspReport};
pub use primes::{
    factor_into_primes, ideal_divisors, ideals_of_norm_at_most, maximal_t_ideals_containing,
    maximal_t_ideals_up_to, primes_above,
};
pub use principal::{principal_generator, PrincipalityOutcome};

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("ring mismatch")]
    RingMismatch,
    #[error("unit input: {0}")]
    UnitInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("norm too large: {norm} exceeds bound {bound}")]
    NormTooLarge { norm: i64, bound: i64 },
    #[error("not homogeneous: contained in {0} maximal t-ideals")]
    NotHomogeneous(usize),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("schema error: {0}")]
    Schema(String),
}

/// Which quadratic order of `Q(√d)` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderForm {
    /// The maximal order: `ω = (1+√d)/2` when `d ≡ 1 (mod 4)`, else `ω = √d`.
    Maximal,
    /// Always `Z[√d]`; a proper suborder exactly when `d ≡ 1 (mod 4)`.
    SqrtOrder,
}

/// A quadratic order `Z[ω]` with `ω² = s + t·ω` for integers `s`, `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticRing {
    d: i64,
    half: bool,
}

impl QuadraticRing {
    pub fn new(d: i64, form: OrderForm) -> Result<Self, IdealError> {
        if d == 0 || d == 1 {
            return Err(IdealError::InvalidRing(format!("d = {d} is excluded")));
        }
        if !is_squarefree(d) {
            return Err(IdealError::InvalidRing(format!("d = {d} is not squarefree")));
        }
        let half = matches!(form, OrderForm::Maximal) && d.rem_euclid(4) == 1;
        Ok(QuadraticRing { d, half })
    }

    pub fn d(self) -> i64 {
        self.d
    }

    /// true when ω = (1+√d)/2.
    pub fn half_basis(self) -> bool {
        self.half
    }

    /// ω² = s + t·ω.
    pub fn omega_rule(self) -> (i64, i64) {
        if self.half {
            ((self.d - 1) / 4, 1)
        } else {
            (self.d, 0)
        }
    }

    pub fn discriminant(self) -> i64 {
        if self.half {
            self.d
        } else {
            4 * self.d
        }
    }

    /// Index of this order in the maximal order of `Q(√d)`.
    pub fn conductor_index(self) -> i64 {
        if !self.half && self.d.rem_euclid(4) == 1 {
            2
        } else {
            1
        }
    }

    pub fn is_maximal(self) -> bool {
        self.conductor_index() == 1
    }

    /// The conductor as an integral ideal of this order (the unit ideal when
    /// the order is maximal).
    pub fn conductor_ideal(self) -> FractionalIdeal {
        if self.is_maximal() {
            FractionalIdeal::unit(self)
        } else {
            // f·O_K = Z·2 + Z·(1+ω) for conductor index 2.
            FractionalIdeal::from_rows(self, 2, 1, 1, 1).expect("conductor is an ideal")
        }
    }

    pub fn describe(self) -> String {
        if self.half {
            format!("Z[(1+sqrt({}))/2]", self.d)
        } else {
            format!("Z[sqrt({})]", self.d)
        }
    }

    /// Parse "d=-5", "d=-5,form=sqrt_order", "d=-5,form=maximal".
    pub fn parse(spec: &str) -> Result<Self, IdealError> {
        let mut d: Option<i64> = None;
        let mut form = OrderForm::Maximal;
        for part in spec.split(',') {
            let part = part.trim();
            if let Some(v) = part.strip_prefix("d=") {
                d = Some(
                    v.parse::<i64>()
                        .map_err(|_| IdealError::Schema(format!("bad d value: {v}")))?,
                );
            } else if let Some(v) = part.strip_prefix("form=") {
                form = match v {
                    "maximal" => OrderForm::Maximal,
                    "sqrt_order" | "sqrt" => OrderForm::SqrtOrder,
                    other => {
                        return Err(IdealError::Schema(format!("unknown form: {other}")));
                    }
                };
            } else if let Ok(v) = part.parse::<i64>() {
                d = Some(v);
            } else {
                return Err(IdealError::Schema(format!("unparsed ring field: {part}")));
            }
        }
        let d = d.ok_or_else(|| IdealError::Schema("ring spec needs d=<int>".into()))?;
        QuadraticRing::new(d, form)
    }
}

/// JSON ring document: `{"d": -5, "form": "maximal" | "sqrt_order"}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecDocument {
    pub d: i64,
    #[serde(default)]
    pub form: Option<String>,
}

impl RingSpecDocument {
    pub fn build(&self) -> Result<QuadraticRing, IdealError> {
        let form = match self.form.as_deref() {
            None | Some("maximal") => OrderForm::Maximal,
            Some("sqrt_order") => OrderForm::SqrtOrder,
            Some(other) => return Err(IdealError::Schema(format!("unknown form: {other}"))),
        };
        QuadraticRing::new(self.d, form)
    }
}

fn is_squarefree(d: i64) -> bool {
    let mut n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Ring element `a + b·ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub a: i64,
    pub b: i64,
}

impl RingElement {
    pub fn new(a: i64, b: i64) -> Self {
        RingElement { a, b }
    }

    pub fn int(a: i64) -> Self {
        RingElement { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn norm(self, ring: QuadraticRing) -> i64 {
        let (s, t) = ring.omega_rule();
        let (a, b) = (self.a as i128, self.b as i128);
        let n = a * a + a * b * t as i128 - b * b * s as i128;
        i64::try_from(n).expect("element norm overflows i64")
    }

    pub fn conj(self, ring: QuadraticRing) -> Self {
        let (_, t) = ring.omega_rule();
        RingElement { a: self.a + t * self.b, b: -self.b }
    }

    pub fn mul(self, other: Self, ring: QuadraticRing) -> Self {
        let (s, t) = ring.omega_rule();
        let (a1, b1, a2, b2) = (self.a as i128, self.b as i128, other.a as i128, other.b as i128);
        let a = a1 * a2 + b1 * b2 * s as i128;
        let b = a1 * b2 + a2 * b1 + b1 * b2 * t as i128;
        RingElement {
            a: i64::try_from(a).expect("element product overflows i64"),
            b: i64::try_from(b).expect("element product overflows i64"),
        }
    }

    pub fn mul_omega(self, ring: QuadraticRing) -> Self {
        self.mul(RingElement { a: 0, b: 1 }, ring)
    }

    pub fn is_unit(self, ring: QuadraticRing) -> bool {
        self.norm(ring).abs() == 1
    }

    pub fn render(self) -> String {
        format!("[{},{}]", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_validation() {
        assert!(QuadraticRing::new(-5, OrderForm::Maximal).is_ok());
        assert!(QuadraticRing::new(12, OrderForm::Maximal).is_err());
        assert!(QuadraticRing::new(0, OrderForm::Maximal).is_err());
        assert!(QuadraticRing::new(1, OrderForm::Maximal).is_err());
    }

    #[test]
    fn omega_rule_matches_discriminant() {
        // d = -5: omega = sqrt(-5), omega^2 = -5
        let r = QuadraticRing::new(-5, OrderForm::Maximal).unwrap();
        assert_eq!(r.omega_rule(), (-5, 0));
        assert_eq!(r.discriminant(), -20);
        // d = -3 maximal: omega = (1+sqrt(-3))/2, omega^2 = omega - 1
        let r = QuadraticRing::new(-3, OrderForm::Maximal).unwrap();
        assert_eq!(r.omega_rule(), (-1, 1));
        assert_eq!(r.discriminant(), -3);
        // d = -3 sqrt order: conductor 2
        let r = QuadraticRing::new(-3, OrderForm::SqrtOrder).unwrap();
        assert_eq!(r.omega_rule(), (-3, 0));
        assert_eq!(r.conductor_index(), 2);
    }

    #[test]
    fn norms_and_conjugates() {
        let r = QuadraticRing::new(-5, OrderForm::Maximal).unwrap();
        let x = RingElement::new(1, 1); // 1 + sqrt(-5)
        assert_eq!(x.norm(r), 6);
        let c = x.conj(r);
        assert_eq!(x.mul(c, r), RingElement::int(6));

        let g = QuadraticRing::new(-1, OrderForm::Maximal).unwrap();
        assert_eq!(RingElement::new(1, 1).norm(g), 2);

        let h = QuadraticRing::new(-3, OrderForm::Maximal).unwrap();
        let w = RingElement::new(0, 1);
        assert_eq!(w.norm(h), 1); // (1+sqrt(-3))/2 is a unit
    }
}
