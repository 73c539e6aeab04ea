//! Polynomial content probes: primitivity, superprimitivity, and the
//! divisibility-group interpolation property for element tuples.

use super::primes::factor_integer;
use super::principal::elements_of_norm;
use super::{FractionalIdeal, IdealError, QuadraticRing, RingElement};
use crate::verdict::Verdict;

/// A nonzero polynomial over the ring, represented by its coefficients
/// (constant term first). Only integral coefficients are handled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPolynomial {
    pub coeffs: Vec<RingElement>,
}

impl IdealPolynomial {
    pub fn new(coeffs: Vec<RingElement>) -> Result<Self, IdealError> {
        if coeffs.is_empty() || coeffs.iter().all(|c| c.is_zero()) {
            return Err(IdealError::ZeroIdeal);
        }
        Ok(IdealPolynomial { coeffs })
    }

    /// Content ideal generated by the coefficients.
    pub fn content(&self, ring: QuadraticRing) -> Result<FractionalIdeal, IdealError> {
        let gens: Vec<(RingElement, i64)> =
            self.coeffs.iter().filter(|c| !c.is_zero()).map(|&c| (c, 1)).collect();
        FractionalIdeal::from_generators(ring, &gens)
    }
}

#[derive(Clone, Debug)]
pub struct PspReport {
    pub content: FractionalIdeal,
    pub primitive: bool,
    pub superprimitive: bool,
    /// A non-unit common divisor of the coefficients, when one exists.
    pub common_divisor: Option<RingElement>,
}

/// A non-unit element a with I ⊆ aR, if any. Any such a has |N(a)| dividing
/// the norm of I, so the search over norm divisors is exhaustive.
pub fn common_divisor(i: &FractionalIdeal) -> Result<Option<RingElement>, IdealError> {
    let n = i.norm_int();
    for (m, _) in divisors_of(n)? {
        if m < 2 {
            continue;
        }
        for a in elements_of_norm(i.ring(), m) {
            let ar = FractionalIdeal::principal(i.ring(), a)?;
            if ar.contains_ideal(i) {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

fn divisors_of(n: i64) -> Result<Vec<(i64, ())>, IdealError> {
    let factors = factor_integer(n, 10_000_000)?;
    let mut divs = vec![1i64];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut acc = *d;
            next.push(acc);
            for _ in 0..e {
                acc *= p;
                next.push(acc);
            }
        }
        next.sort_unstable();
        next.dedup();
        divs = next;
    }
    Ok(divs.into_iter().map(|d| (d, ())).collect())
}

/// Primitivity (no non-unit common divisor of the coefficients) and
/// superprimitivity (trivial divisorial closure of the content).
pub fn psp_probe(ring: QuadraticRing, f: &IdealPolynomial) -> Result<PspReport, IdealError> {
    let content = f.content(ring)?;
    let common = common_divisor(&content)?;
    let superprimitive = content.v_closure()?.is_unit_ideal();
    Ok(PspReport { primitive: common.is_none(), superprimitive, common_divisor: common, content })
}

/// For each tuple of nonzero elements: either the divisorial closure of the
/// generated ideal is trivial, or the tuple has a common non-unit divisor.
/// This decides whether the group of divisibility interpolates on the
/// sampled tuples.
pub fn property_p_check(
    ring: QuadraticRing,
    tuples: &[Vec<RingElement>],
) -> Result<Verdict<RingElement>, IdealError> {
    let mut checked = 0;
    for tuple in tuples {
        if tuple.iter().any(|x| x.is_zero()) {
            return Err(IdealError::ZeroIdeal);
        }
        checked += 1;
        let i = FractionalIdeal::from_generators(
            ring,
            &tuple.iter().map(|&x| (x, 1)).collect::<Vec<_>>(),
        )?;
        if i.v_closure()?.is_unit_ideal() {
            continue;
        }
        if common_divisor(&i)?.is_some() {
            continue;
        }
        return Ok(Verdict::fails(tuple.clone(), checked, 0));
    }
    Ok(Verdict::holds(checked, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::OrderForm;

    #[test]
    fn primitive_but_not_superprimitive_over_zsqrt_minus5() {
        // f = 2 + (1+sqrt(-5))·X has content P2: no common divisor of norm 2
        // exists, yet P2_v = P2 is proper.
        let r = QuadraticRing::new(-5, OrderForm::Maximal).unwrap();
        let f = IdealPolynomial::new(vec![RingElement::int(2), RingElement::new(1, 1)]).unwrap();
        let rep = psp_probe(r, &f).unwrap();
        assert!(rep.primitive);
        assert!(!rep.superprimitive);
        assert_eq!(rep.content.rows(), ((2, 0), (1, 1)));
    }

    #[test]
    fn gaussian_example_is_imprimitive() {
        // f = (1+i) + 2X: 1+i divides both coefficients
        let g = QuadraticRing::new(-1, OrderForm::Maximal).unwrap();
        let f = IdealPolynomial::new(vec![RingElement::new(1, 1), RingElement::int(2)]).unwrap();
        let rep = psp_probe(g, &f).unwrap();
        assert!(!rep.primitive);
        assert_eq!(rep.common_divisor.map(|d| d.norm(g).abs()), Some(2));
        // imprimitive but the content is principal, so still superprimitive
        // fails: content = (1+i) has proper closure
        assert!(!rep.superprimitive);
    }

    #[test]
    fn unit_coefficient_makes_both_trivial() {
        let r = QuadraticRing::new(-5, OrderForm::Maximal).unwrap();
        let f = IdealPolynomial::new(vec![RingElement::int(1), RingElement::int(2)]).unwrap();
        let rep = psp_probe(r, &f).unwrap();
        assert!(rep.primitive && rep.superprimitive);
    }

    #[test]
    fn property_p_fails_on_the_classical_pair() {
        let r = QuadraticRing::new(-5, OrderForm::Maximal).unwrap();
        let bad = vec![vec![RingElement::int(2), RingElement::new(1, 1)]];
        let v = property_p_check(r, &bad).unwrap();
        assert!(v.failed());

        // a tuple with a unit passes trivially
        let ok = vec![vec![RingElement::int(1), RingElement::new(1, 1)]];
        assert!(property_p_check(r, &ok).unwrap().holds_true());
    }
}
