//! Principality testing by bounded norm-equation search.

use super::{FractionalIdeal, IdealError, QuadraticRing, RingElement};

/// Result of a principality search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrincipalityOutcome {
    Principal(RingElement),
    /// Certified non-principal: the norm-equation search box is exhaustive.
    NotPrincipal,
}

impl PrincipalityOutcome {
    pub fn is_principal(&self) -> bool {
        matches!(self, PrincipalityOutcome::Principal(_))
    }
}

/// Minimal nontrivial solution of x² − d·y² = ±1 for squarefree d > 1, by
/// the continued-fraction expansion of √d.
pub fn pell_fundamental(d: i64) -> (i64, i64) {
    let a0 = isqrt(d);
    let (mut m, mut dd, mut a) = (0i128, 1i128, a0 as i128);
    let (mut p0, mut p1) = (1i128, a0 as i128);
    let (mut q0, mut q1) = (0i128, 1i128);
    loop {
        let v = p1 * p1 - d as i128 * q1 * q1;
        if v == 1 || v == -1 {
            return (
                i64::try_from(p1).expect("fundamental unit overflows i64"),
                i64::try_from(q1).expect("fundamental unit overflows i64"),
            );
        }
        m = dd * a - m;
        dd = (d as i128 - m * m) / dd;
        a = (a0 as i128 + m) / dd;
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
    }
}

fn isqrt(n: i64) -> i64 {
    if n < 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn perfect_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = isqrt(i64::try_from(n).ok()?) as i128;
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// All elements of the ring with |norm| = n inside the certified search box,
/// in canonical order (ascending |N|, a, b). For imaginary rings the box is
/// exhaustive outright; for real rings it is exhaustive up to units, derived
/// from the fundamental Pell unit, which suffices for principality tests.
pub fn elements_of_norm(ring: QuadraticRing, n: i64) -> Vec<RingElement> {
    let mut out = Vec::new();
    if n <= 0 {
        return out;
    }
    let d = ring.d();
    if d < 0 {
        let ad = -d;
        if ring.half_basis() {
            // N = (a + b/2)² + |d|(b/2)² = n : |b| ≤ 2√(n/|d|)
            let bmax = 2 * isqrt(n / ad) + 2;
            for b in -bmax..=bmax {
                // a² + ab + b²(1+|d|)/4 = n  ⇒ (2a + b)² = 4n − |d|b²
                let disc = 4 * n as i128 - ad as i128 * (b as i128) * (b as i128);
                if let Some(s) = perfect_sqrt(disc) {
                    for sgn in [s, -s] {
                        let two_a = sgn - b as i128;
                        if two_a % 2 == 0 {
                            out.push(RingElement::new((two_a / 2) as i64, b));
                        }
                        if s == 0 {
                            break;
                        }
                    }
                }
            }
        } else {
            // a² + |d|·b² = n
            let bmax = isqrt(n / ad);
            for b in -bmax..=bmax {
                let rem = n as i128 - ad as i128 * (b as i128) * (b as i128);
                if let Some(s) = perfect_sqrt(rem) {
                    out.push(RingElement::new(s as i64, b));
                    if s != 0 {
                        out.push(RingElement::new(-s as i64, b));
                    }
                }
            }
        }
    } else {
        // real quadratic: bound |coordinates| via the fundamental unit
        let (x0, y0) = pell_fundamental(d);
        let eps = x0 as f64 + y0 as f64 * (d as f64).sqrt();
        if ring.half_basis() {
            // g = ((2a+b) + b√d)/2, |U² − dV²| = 4n
            let vmax = ((4.0 * n as f64).sqrt() * (eps + 1.0) / (2.0 * (d as f64).sqrt())).ceil()
                as i64
                + 2;
            for v in -vmax..=vmax {
                for sign in [1i128, -1] {
                    let u2 = d as i128 * (v as i128) * (v as i128) + sign * 4 * n as i128;
                    if let Some(u) = perfect_sqrt(u2) {
                        for uu in [u, -u] {
                            let two_a = uu - v as i128;
                            if two_a % 2 == 0 {
                                out.push(RingElement::new((two_a / 2) as i64, v));
                            }
                            if u == 0 {
                                break;
                            }
                        }
                    }
                }
            }
        } else {
            let vmax =
                ((n as f64).sqrt() * (eps + 1.0) / (2.0 * (d as f64).sqrt())).ceil() as i64 + 2;
            for v in -vmax..=vmax {
                for sign in [1i128, -1] {
                    let u2 = d as i128 * (v as i128) * (v as i128) + sign * n as i128;
                    if let Some(u) = perfect_sqrt(u2) {
                        for uu in [u, -u] {
                            out.push(RingElement::new(uu as i64, v));
                            if u == 0 {
                                break;
                            }
                        }
                    }
                }
            }
        }
        out.retain(|e| e.norm(ring).abs() == n);
        out.sort_by_key(|e| (e.a, e.b));
        out.dedup();
    }
    out.sort_by_key(|e| (e.norm(ring).abs(), e.a, e.b));
    out
}

/// Search for a generator: the ideal is principal iff it equals x·R for some
/// element x with |N(x)| equal to the ideal norm.
pub fn principal_generator(i: &FractionalIdeal) -> Result<PrincipalityOutcome, IdealError> {
    if !i.is_integral() {
        return Err(IdealError::Unsupported("principality search expects an integral ideal".into()));
    }
    let n = i.norm_int();
    for g in elements_of_norm(i.ring(), n) {
        if FractionalIdeal::principal(i.ring(), g)? == *i {
            return Ok(PrincipalityOutcome::Principal(g));
        }
    }
    Ok(PrincipalityOutcome::NotPrincipal)
}

/// Human-readable description of the search box used, for reports.
pub fn search_box_description(ring: QuadraticRing, n: i64) -> String {
    let d = ring.d();
    if d < 0 {
        format!("|b| <= {}", if ring.half_basis() { 2 * isqrt(n / -d) + 2 } else { isqrt(n / -d) })
    } else {
        let (x0, y0) = pell_fundamental(d);
        format!("unit-normalized box from fundamental unit {x0}+{y0}*sqrt({d})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::OrderForm;

    #[test]
    fn pell_small_cases() {
        assert_eq!(pell_fundamental(2), (1, 1)); // 1² − 2·1² = −1
        assert_eq!(pell_fundamental(3), (2, 1)); // 4 − 3 = 1
        let (x, y) = pell_fundamental(61);
        assert_eq!((x as i128 * x as i128 - 61 * y as i128 * y as i128).abs(), 1);
    }

    #[test]
    fn no_element_of_norm_two_in_zsqrt_minus5() {
        let r = QuadraticRing::new(-5, OrderForm::Maximal).unwrap();
        assert!(elements_of_norm(r, 2).is_empty());
        assert!(elements_of_norm(r, 3).is_empty());
        // norm 6 has the four associates of 1±sqrt(-5)
        assert_eq!(elements_of_norm(r, 6).len(), 4);
    }

    #[test]
    fn p2_is_not_principal() {
        let r = QuadraticRing::new(-5, OrderForm::Maximal).unwrap();
        let p2 = FractionalIdeal::from_rows(r, 2, 1, 1, 1).unwrap();
        assert_eq!(principal_generator(&p2).unwrap(), PrincipalityOutcome::NotPrincipal);
        let two = FractionalIdeal::principal(r, RingElement::int(2)).unwrap();
        assert!(principal_generator(&two).unwrap().is_principal());
    }

    #[test]
    fn real_quadratic_principality() {
        // Z[sqrt(2)] is a PID; the prime over 2 is (sqrt 2)
        let r = QuadraticRing::new(2, OrderForm::Maximal).unwrap();
        let p = FractionalIdeal::from_generators(r, &[(RingElement::new(0, 1), 1)]).unwrap();
        assert_eq!(p.norm_int(), 2);
        match principal_generator(&p).unwrap() {
            PrincipalityOutcome::Principal(g) => assert_eq!(g.norm(r).abs(), 2),
            other => panic!("expected principal, got {other:?}"),
        }
    }
}
