//! Prime enumeration and factorization in quadratic orders.

use super::{FractionalIdeal, IdealError, QuadraticRing};

/// Trial-division factoring cap; norms above `bound²` of this would signal a
/// misuse at desk scale.
const FACTOR_BOUND: i64 = 10_000_000;

pub fn factor_integer(n: i64, bound: i64) -> Result<Vec<(i64, u32)>, IdealError> {
    let mut n = n.abs();
    if n > bound {
        return Err(IdealError::NormTooLarge { norm: n, bound });
    }
    let mut out = Vec::new();
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// The primes of the order above the rational prime `p`, by factoring the
/// minimal polynomial of ω modulo p (valid whenever p does not divide the
/// conductor index).
pub fn primes_above(ring: QuadraticRing, p: i64) -> Result<Vec<FractionalIdeal>, IdealError> {
    if ring.conductor_index() % p == 0 {
        return Err(IdealError::Unsupported(format!(
            "prime {p} divides the conductor index of {}",
            ring.describe()
        )));
    }
    let (s, t) = ring.omega_rule();
    // f(x) = x² − t·x − s (mod p)
    let mut roots = Vec::new();
    for r in 0..p {
        let v = (r as i128 * r as i128 - t as i128 * r as i128 - s as i128).rem_euclid(p as i128);
        if v == 0 {
            roots.push(r);
        }
    }
    let prime_over = |r: i64| -> FractionalIdeal {
        // (p, ω − r): rows (p, 0), (r mod p ... b, 1) with b = (−r) mod p
        let b = (-r).rem_euclid(p);
        FractionalIdeal::from_rows(ring, p, b, 1, 1).expect("split prime is an ideal")
    };
    match roots.len() {
        2 => Ok(vec![prime_over(roots[0]), prime_over(roots[1])]),
        1 => Ok(vec![prime_over(roots[0])]),
        0 => Ok(vec![FractionalIdeal::from_rows(ring, p, 0, p, 1).expect("inert prime")]),
        _ => unreachable!("a quadratic has at most two roots mod a prime"),
    }
}

fn require_integral_proper(i: &FractionalIdeal) -> Result<(), IdealError> {
    if !i.is_integral() {
        return Err(IdealError::Unsupported("ideal must be integral".into()));
    }
    if i.is_unit_ideal() {
        return Err(IdealError::Unsupported("ideal must be proper".into()));
    }
    Ok(())
}

fn check_conductor_comaximal(i: &FractionalIdeal) -> Result<(), IdealError> {
    let ring = i.ring();
    if ring.is_maximal() {
        return Ok(());
    }
    let cond = ring.conductor_ideal();
    if !i.add_sum(&cond)?.is_unit_ideal() {
        return Err(IdealError::Unsupported(format!(
            "ideal {} is not comaximal with the conductor of {}",
            i.render(),
            ring.describe()
        )));
    }
    Ok(())
}

/// The maximal t-ideals containing an integral proper ideal, found by
/// splitting the rational primes dividing its norm. In a maximal order every
/// maximal ideal is a maximal t-ideal; in a non-maximal order the ideal must
/// be comaximal with the conductor.
pub fn maximal_t_ideals_containing(
    i: &FractionalIdeal,
) -> Result<Vec<FractionalIdeal>, IdealError> {
    require_integral_proper(i)?;
    check_conductor_comaximal(i)?;
    let mut out = Vec::new();
    for (p, _) in factor_integer(i.norm_int(), FACTOR_BOUND)? {
        for prime in primes_above(i.ring(), p)? {
            if prime.contains_ideal(i) {
                out.push(prime);
            }
        }
    }
    out.sort_by(|x, y| x.canon_cmp(y));
    out.dedup();
    Ok(out)
}

/// Factor an integral proper ideal into primes with exponents.
pub fn factor_into_primes(
    i: &FractionalIdeal,
) -> Result<Vec<(FractionalIdeal, u32)>, IdealError> {
    let primes = maximal_t_ideals_containing(i)?;
    let mut out = Vec::new();
    for p in primes {
        let mut power = p.clone();
        let mut e = 0u32;
        while power.contains_ideal(i) {
            e += 1;
            power = power.multiply(&p)?;
        }
        out.push((p, e));
    }
    Ok(out)
}

/// All integral ideals containing `i` (its divisor lattice), including the
/// unit ideal. Complete whenever `i` factors into invertible primes, which
/// holds in maximal orders and for conductor-comaximal ideals.
pub fn ideal_divisors(i: &FractionalIdeal) -> Result<Vec<FractionalIdeal>, IdealError> {
    let factors = factor_into_primes(i)?;
    let mut out = vec![FractionalIdeal::unit(i.ring())];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = acc.multiply(&p)?;
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.sort_by(|x, y| x.canon_cmp(y));
    out.dedup();
    Ok(out)
}

/// Every integral ideal of norm ≤ bound, in canonical order. Enumerates
/// Hermite triples `(a, b, c)` with `a·c = n`, `c | a`, `c | b`, filtered by
/// closure under ω.
pub fn ideals_of_norm_at_most(
    ring: QuadraticRing,
    bound: i64,
) -> Result<Vec<FractionalIdeal>, IdealError> {
    if bound < 1 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for n in 1..=bound {
        for c in 1..=n {
            if n % c != 0 {
                continue;
            }
            let a = n / c;
            if a % c != 0 {
                continue;
            }
            let mut b = 0;
            while b < a {
                if let Ok(i) = FractionalIdeal::from_rows(ring, a, b, c, 1) {
                    out.push(i);
                }
                b += c;
            }
        }
    }
    Ok(out)
}

/// Every maximal t-ideal of norm ≤ bound: t-ideals that are proper and have
/// no proper t-ideal strictly between them and the ring. Complete within the
/// bound because an ideal strictly containing `I` has smaller norm.
pub fn maximal_t_ideals_up_to(
    ring: QuadraticRing,
    bound: i64,
) -> Result<Vec<FractionalIdeal>, IdealError> {
    let all = ideals_of_norm_at_most(ring, bound)?;
    let t_ideals: Vec<FractionalIdeal> = all
        .into_iter()
        .filter(|i| !i.is_unit_ideal())
        .filter(|i| i.t_closure().map(|t| &t == i).unwrap_or(false))
        .collect();
    let mut out = Vec::new();
    'outer: for i in &t_ideals {
        for j in &t_ideals {
            if j.norm_int() < i.norm_int() && j.contains_ideal(i) {
                continue 'outer;
            }
        }
        out.push(i.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{OrderForm, RingElement};

    fn zs5() -> QuadraticRing {
        QuadraticRing::new(-5, OrderForm::Maximal).unwrap()
    }

    #[test]
    fn splitting_in_zsqrt_minus5() {
        let r = zs5();
        // 2 ramifies: unique prime (2, 1+ω)
        let p2 = primes_above(r, 2).unwrap();
        assert_eq!(p2.len(), 1);
        assert_eq!(p2[0].rows(), ((2, 0), (1, 1)));
        // 3 splits
        assert_eq!(primes_above(r, 3).unwrap().len(), 2);
        // 7 splits: x² ≡ −5 ≡ 2 (mod 7) has roots 3, 4
        assert_eq!(primes_above(r, 7).unwrap().len(), 2);
        // 11 is inert
        let p11 = primes_above(r, 11).unwrap();
        assert_eq!(p11.len(), 1);
        assert_eq!(p11[0].norm_int(), 121);
    }

    #[test]
    fn maximal_ideals_over_six() {
        let r = zs5();
        let six = FractionalIdeal::principal(r, RingElement::int(6)).unwrap();
        let ms = maximal_t_ideals_containing(&six).unwrap();
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[0].norm_int(), 2);
        assert_eq!(ms[1].norm_int(), 3);
        assert_eq!(ms[2].norm_int(), 3);
    }

    #[test]
    fn six_factors_as_p2sq_p3_p3bar() {
        let r = zs5();
        let six = FractionalIdeal::principal(r, RingElement::int(6)).unwrap();
        let f = factor_into_primes(&six).unwrap();
        let exps: Vec<(i64, u32)> = f.iter().map(|(p, e)| (p.norm_int(), *e)).collect();
        assert_eq!(exps, vec![(2, 2), (3, 1), (3, 1)]);
        // product of the factorization reproduces the ideal
        let mut prod = FractionalIdeal::unit(r);
        for (p, e) in &f {
            for _ in 0..*e {
                prod = prod.multiply(p).unwrap();
            }
        }
        assert_eq!(prod, six);
    }

    #[test]
    fn divisor_lattice_of_six_has_twelve_members() {
        let r = zs5();
        let six = FractionalIdeal::principal(r, RingElement::int(6)).unwrap();
        let divs = ideal_divisors(&six).unwrap();
        assert_eq!(divs.len(), 12); // (2+1)·2·2
        assert!(divs.iter().all(|d| d.contains_ideal(&six)));
    }

    #[test]
    fn enumeration_matches_splitting_counts() {
        let r = zs5();
        let all = ideals_of_norm_at_most(r, 10).unwrap();
        // norm 2: P2 only; norm 3: P3 and its conjugate
        assert_eq!(all.iter().filter(|i| i.norm_int() == 2).count(), 1);
        assert_eq!(all.iter().filter(|i| i.norm_int() == 3).count(), 2);
        // norm 7: two split primes
        assert_eq!(all.iter().filter(|i| i.norm_int() == 7).count(), 2);
        // the Dedekind ring: every enumerated ideal is divisorial
        for i in &all {
            assert_eq!(i.v_closure().unwrap(), *i);
        }
    }

    #[test]
    fn conductor_obstruction_reported() {
        let r = QuadraticRing::new(-3, OrderForm::SqrtOrder).unwrap();
        let m = FractionalIdeal::from_rows(r, 2, 1, 1, 1).unwrap();
        assert!(matches!(
            maximal_t_ideals_containing(&m),
            Err(IdealError::Unsupported(_))
        ));
        // comaximal with the conductor works: (5, ω − r)
        let five = FractionalIdeal::principal(r, RingElement::int(5)).unwrap();
        let ms = maximal_t_ideals_containing(&five).unwrap();
        assert!(!ms.is_empty());
    }

    #[test]
    fn maximal_t_ideal_enumeration_zsqrt_minus5() {
        let r = zs5();
        let ms = maximal_t_ideals_up_to(r, 20).unwrap();
        let norms: Vec<i64> = ms.iter().map(|m| m.norm_int()).collect();
        assert_eq!(norms, vec![2, 3, 3, 5, 7, 7]);
    }
}
