//! Independent oracles used to compute expected values before freezing
//! them into tests. These deliberately avoid the library's own
//! implementation paths: membership by coefficient enumeration, divisor
//! scans from the definition, primality by raw decomposition search.

#![allow(dead_code)]

use ordalg::monoid::{MonoidInstance, SumOutcome};
use ordalg::Element;

/// Numerical-semigroup membership by exhaustive coefficient enumeration.
pub fn ns_member_oracle(gens: &[u64], n: u64) -> bool {
    fn rec(gens: &[u64], remaining: u64) -> bool {
        if remaining == 0 {
            return true;
        }
        match gens.split_first() {
            None => false,
            Some((&g, rest)) => {
                let mut k = 0;
                while k * g <= remaining {
                    if rec(rest, remaining - k * g) {
                        return true;
                    }
                    k += 1;
                }
                false
            }
        }
    }
    rec(gens, n)
}

/// Divisibility from the definition: some window x with a + x = b.
pub fn divides_oracle(m: &MonoidInstance, a: &Element, b: &Element) -> bool {
    m.elements().iter().any(|x| {
        matches!(m.add(a, x), Ok(SumOutcome::Element(ref s)) if s == b)
    })
}

/// Common lower bounds by raw window scan with the oracle divisibility.
pub fn clb_oracle(m: &MonoidInstance, xs: &[Element]) -> Vec<Element> {
    m.elements()
        .iter()
        .filter(|z| xs.iter().all(|x| divides_oracle(m, z, x)))
        .cloned()
        .collect()
}

/// Primality by raw decomposition search, quantifying over all window
/// pairs whose sum stays in the window.
pub fn primal_oracle(m: &MonoidInstance, x: &Element) -> Option<(Element, Element)> {
    let decomps: Vec<(Element, Element)> = m
        .elements()
        .iter()
        .flat_map(|x1| {
            m.elements().iter().filter_map(move |x2| {
                matches!(m.add(x1, x2), Ok(SumOutcome::Element(ref s)) if s == x)
                    .then(|| (x1.clone(), x2.clone()))
            })
        })
        .collect();
    for y1 in m.elements() {
        for y2 in m.elements() {
            let SumOutcome::Element(z) = m.add(y1, y2).unwrap() else { continue };
            if !divides_oracle(m, x, &z) {
                continue;
            }
            let ok = decomps
                .iter()
                .any(|(x1, x2)| divides_oracle(m, x1, y1) && divides_oracle(m, x2, y2));
            if !ok {
                return Some((y1.clone(), y2.clone()));
            }
        }
    }
    None
}

/// Zero-sum multisets of length <= maxlen over residues mod n, sorted.
pub fn block_elements_oracle(n: u32, maxlen: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for f in &frontier {
            let lo = f.last().copied().unwrap_or(0);
            for r in lo..n {
                let mut g = f.clone();
                g.push(r);
                next.push(g);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.retain(|v| v.iter().map(|&r| r as u64).sum::<u64>() % n as u64 == 0);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out.dedup();
    out
}

/// Atoms of the block monoid: nonempty zero-sum multisets with no proper
/// nonempty zero-sum sub-multiset whose complement is also zero-sum.
pub fn block_atoms_oracle(n: u32, maxlen: usize) -> Vec<Vec<u32>> {
    let all = block_elements_oracle(n, maxlen);
    let is_zero_sum =
        |v: &[u32]| v.iter().map(|&r| r as u64).sum::<u64>() % n as u64 == 0;
    all.iter()
        .filter(|v| !v.is_empty())
        .filter(|v| {
            // no split into two nonempty zero-sum parts
            let k = v.len();
            !(1..(1u32 << k) - 1).any(|mask| {
                let (mut a, mut b) = (Vec::new(), Vec::new());
                for (i, &r) in v.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        a.push(r);
                    } else {
                        b.push(r);
                    }
                }
                !a.is_empty() && !b.is_empty() && is_zero_sum(&a) && is_zero_sum(&b)
            })
        })
        .cloned()
        .collect()
}

/// Primes up to n by trial division.
pub fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| (2..k).all(|d| k % d != 0)).collect()
}

/// Integer gcd (positive-integers-under-multiplication glb oracle).
pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Does a² + 5b² = n have an integer solution? (norm-form oracle for
/// principality in Z[sqrt(-5)])
pub fn norm_form_minus5_solvable(n: i64) -> bool {
    let mut b = 0i64;
    while 5 * b * b <= n {
        let rem = n - 5 * b * b;
        let a = (rem as f64).sqrt() as i64;
        for cand in [a - 1, a, a + 1] {
            if cand >= 0 && cand * cand == rem {
                return true;
            }
        }
        b += 1;
    }
    false
}
