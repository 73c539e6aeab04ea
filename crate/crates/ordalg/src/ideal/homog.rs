//! Homogeneous ideals, potency and factorial rigidity.

use super::primes::{ideal_divisors, maximal_t_ideals_containing, maximal_t_ideals_up_to};
use super::principal::{principal_generator, search_box_description};
use super::{FractionalIdeal, IdealError, QuadraticRing, RingElement};
use crate::verdict::Verdict;

/// Holds iff the t-closure of the ideal lies in exactly one maximal t-ideal;
/// otherwise fails with the full set of maximal t-ideals as witness.
pub fn is_homogeneous_ideal(i: &FractionalIdeal) -> Result<Verdict<FractionalIdeal>, IdealError> {
    let t = i.t_closure()?;
    let ms = maximal_t_ideals_containing(&t)?;
    if ms.len() == 1 {
        Ok(Verdict::holds(1, 0))
    } else {
        Ok(Verdict::fails(ms, 1, 0))
    }
}

/// The unique maximal t-ideal over a homogeneous ideal. Spot-verifies the
/// defining membership predicate: `(x, I)` is proper exactly for x in M.
pub fn m_of(i: &FractionalIdeal) -> Result<FractionalIdeal, IdealError> {
    let t = i.t_closure()?;
    let ms = maximal_t_ideals_containing(&t)?;
    if ms.len() != 1 {
        return Err(IdealError::NotHomogeneous(ms.len()));
    }
    let m = ms.into_iter().next().unwrap();
    // sample inside: the generators of M must make (x, I) proper
    for (g, d) in m.generators() {
        debug_assert_eq!(d, 1);
        let join = i.add_sum(&FractionalIdeal::principal(i.ring(), g)?)?;
        if join.t_closure()?.is_unit_ideal() {
            return Err(IdealError::Invariant(format!(
                "membership predicate failed inside M for {}",
                g.render()
            )));
        }
    }
    // sample outside: small canonical elements not in M must make (x, I) trivial
    let mut outside = 0;
    for x in elements_by_norm(i.ring(), 1, 12) {
        if m.contains_element(x, 1) {
            continue;
        }
        let join = i.add_sum(&FractionalIdeal::principal(i.ring(), x)?)?;
        if !join.t_closure()?.is_unit_ideal() {
            return Err(IdealError::Invariant(format!(
                "membership predicate failed outside M for {}",
                x.render()
            )));
        }
        outside += 1;
        if outside >= 3 {
            break;
        }
    }
    Ok(m)
}

/// Canonical element enumeration: nonzero elements ordered by (|N|, a, b),
/// up to coordinate height `hmax`.
fn elements_by_height(ring: QuadraticRing, hmax: i64) -> Vec<RingElement> {
    let mut out = Vec::new();
    for a in -hmax..=hmax {
        for b in -hmax..=hmax {
            let e = RingElement::new(a, b);
            if !e.is_zero() {
                out.push(e);
            }
        }
    }
    out.sort_by_key(|e| (e.norm(ring).abs(), e.a, e.b));
    out
}

fn elements_by_norm(ring: QuadraticRing, min_norm: i64, hmax: i64) -> Vec<RingElement> {
    elements_by_height(ring, hmax)
        .into_iter()
        .filter(|e| e.norm(ring).abs() >= min_norm)
        .collect()
}

/// Proper t-ideals of finite type containing `i`, with norm at most `bound`:
/// the divisor lattice of the factorization plus t-closures of small
/// generator perturbations `(I, w)`.
fn finite_type_t_ideals_over(
    i: &FractionalIdeal,
    bound: i64,
) -> Result<Vec<FractionalIdeal>, IdealError> {
    let t = i.t_closure()?;
    let mut out: Vec<FractionalIdeal> = ideal_divisors(&t)?
        .into_iter()
        .filter(|d| !d.is_unit_ideal() && d.norm_int() <= bound)
        .filter(|d| d.t_closure().map(|x| &x == d).unwrap_or(false))
        .collect();
    for w in elements_by_norm(i.ring(), 2, 6).into_iter().take(12) {
        let j = t.add_sum(&FractionalIdeal::principal(i.ring(), w)?)?.t_closure()?;
        if !j.is_unit_ideal() && j.norm_int() <= bound {
            out.push(j);
        }
    }
    out.sort_by(|x, y| x.canon_cmp(y));
    out.dedup();
    Ok(out)
}

/// The pairwise-sum criterion for homogeneity: every pair X, Y of proper
/// finite-type t-ideals containing I must have proper t-sum. Enumerates
/// candidates with norm ≤ bound; a failing pair is returned as witness.
pub fn check_sum_criterion(
    i: &FractionalIdeal,
    bound: i64,
) -> Result<Verdict<FractionalIdeal>, IdealError> {
    let over = finite_type_t_ideals_over(i, bound)?;
    let mut checked = 0;
    for (xi, x) in over.iter().enumerate() {
        for y in &over[xi + 1..] {
            checked += 1;
            if x.add_sum(y)?.t_closure()?.is_unit_ideal() {
                return Ok(Verdict::fails(vec![x.clone(), y.clone()], checked, 0));
            }
        }
    }
    Ok(Verdict::holds(checked, 0))
}

/// Constructive homogeneous-ideal builder targeting the first maximal
/// t-ideal over x in canonical order.
pub fn build_homogeneous_from(
    ring: QuadraticRing,
    x: RingElement,
) -> Result<FractionalIdeal, IdealError> {
    if x.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    if x.is_unit(ring) {
        return Err(IdealError::UnitInput(x.render()));
    }
    let xr = FractionalIdeal::principal(ring, x)?;
    let ms = maximal_t_ideals_containing(&xr)?;
    build_homogeneous_in(ring, x, &ms[0])
}

/// Given x in the maximal t-ideal M: list the other maximal t-ideals
/// M₁..Mₙ over x, pick xᵢ ∈ M \ Mᵢ by canonical search, and return the
/// t-closure of (x, x₁, ..., xₙ), verified homogeneous with witness M.
pub fn build_homogeneous_in(
    ring: QuadraticRing,
    x: RingElement,
    m: &FractionalIdeal,
) -> Result<FractionalIdeal, IdealError> {
    if x.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    if x.is_unit(ring) {
        return Err(IdealError::UnitInput(x.render()));
    }
    let xr = FractionalIdeal::principal(ring, x)?;
    let ms = maximal_t_ideals_containing(&xr)?;
    if !ms.contains(m) {
        return Err(IdealError::Invariant("target maximal t-ideal does not contain x".into()));
    }
    let result = if ms.len() == 1 {
        // x lies in no other maximal t-ideal, so xR is already homogeneous
        xr.t_closure()?
    } else {
        let mut gens = vec![(x, 1)];
        for mi in ms.iter().filter(|mi| *mi != m) {
            let xi = separating_element(ring, m, mi)?;
            gens.push((xi, 1));
        }
        FractionalIdeal::from_generators(ring, &gens)?.t_closure()?
    };
    // verify the construction
    let verdict = is_homogeneous_ideal(&result)?;
    if !verdict.holds_true() {
        return Err(IdealError::Invariant("construction produced a non-homogeneous ideal".into()));
    }
    if &m_of(&result)? != m {
        return Err(IdealError::Invariant(
            "constructed ideal lies under a different maximal t-ideal".into(),
        ));
    }
    Ok(result)
}

/// First element of `m \ other` in canonical order.
fn separating_element(
    ring: QuadraticRing,
    m: &FractionalIdeal,
    other: &FractionalIdeal,
) -> Result<RingElement, IdealError> {
    for hmax in [2i64, 4, 8, 16, 64] {
        for e in elements_by_height(ring, hmax) {
            if m.contains_element(e, 1) && !other.contains_element(e, 1) {
                return Ok(e);
            }
        }
    }
    Err(IdealError::Invariant("no separating element found at desk height".into()))
}

/// Factorial rigidity: rR is t-homogeneous and every finite-type
/// t-homogeneous ideal containing r (norm ≤ bound) is principal.
pub fn is_f_rigid(
    ring: QuadraticRing,
    r: RingElement,
    bound: i64,
) -> Result<Verdict<FractionalIdeal>, IdealError> {
    if r.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    if r.is_unit(ring) {
        return Err(IdealError::UnitInput(r.render()));
    }
    let rr = FractionalIdeal::principal(ring, r)?;
    let homog = is_homogeneous_ideal(&rr)?;
    if let Some(w) = homog.witness() {
        return Ok(Verdict::fails(w.to_vec(), 1, 0));
    }
    // every proper t-ideal over rR lies under the same maximal t-ideal,
    // hence is homogeneous; enumerate the divisor lattice up to the bound
    let over = finite_type_t_ideals_over(&rr, bound)?;
    let skipped = rr.norm_int() > bound;
    let mut checked = 1;
    for j in &over {
        checked += 1;
        if !principal_generator(j)?.is_principal() {
            return Ok(Verdict::fails(vec![j.clone()], checked, skipped as u64));
        }
    }
    Ok(Verdict::holds(checked, skipped as u64))
}

#[derive(Clone, Debug)]
pub struct PotencyEntry {
    pub maximal_ideal: FractionalIdeal,
    /// A contained t-homogeneous ideal produced by the constructive builder.
    pub homogeneous_witness: FractionalIdeal,
    /// A t-f-rigid element found under the norm bound, if any.
    pub f_rigid_element: Option<RingElement>,
}

#[derive(Clone, Debug)]
pub struct PotencyReport {
    pub ring: String,
    pub norm_bound: i64,
    pub entries: Vec<PotencyEntry>,
    pub domain_potent: bool,
    pub domain_f_potent: bool,
    pub principality_search: String,
}

/// For every maximal t-ideal of norm ≤ bound: exhibit a contained
/// t-homogeneous ideal and search for a t-f-rigid element under the bound.
pub fn potency_report(ring: QuadraticRing, norm_bound: i64) -> Result<PotencyReport, IdealError> {
    let mut entries = Vec::new();
    for m in maximal_t_ideals_up_to(ring, norm_bound)? {
        // canonical nonzero element of M
        let x = *elements_by_height(ring, m.norm_int().min(64))
            .iter()
            .find(|e| m.contains_element(**e, 1))
            .ok_or_else(|| IdealError::Invariant("maximal ideal has no small element".into()))?;
        let homogeneous_witness = build_homogeneous_in(ring, x, &m)?;
        let mut f_rigid_element = None;
        for cand in elements_by_norm(ring, 2, 16) {
            if cand.norm(ring).abs() > norm_bound {
                break;
            }
            if !m.contains_element(cand, 1) {
                continue;
            }
            if is_f_rigid(ring, cand, norm_bound)?.holds_true() {
                f_rigid_element = Some(cand);
                break;
            }
        }
        entries.push(PotencyEntry { maximal_ideal: m, homogeneous_witness, f_rigid_element });
    }
    let domain_potent = !entries.is_empty() || norm_bound < 2;
    let domain_f_potent =
        !entries.is_empty() && entries.iter().all(|e| e.f_rigid_element.is_some());
    Ok(PotencyReport {
        ring: ring.describe(),
        norm_bound,
        entries,
        domain_potent,
        domain_f_potent,
        principality_search: search_box_description(ring, norm_bound),
    })
}

/// Maximum size of a family of mutually t-comaximal proper finite-type
/// t-ideals containing A (norms ≤ bound), by exhaustive search over the
/// enumerated candidates. Must equal the number of maximal t-ideals over A.
pub fn comaximal_family_count(a: &FractionalIdeal, bound: i64) -> Result<usize, IdealError> {
    let over = finite_type_t_ideals_over(a, bound)?;
    let n = over.len();
    let mut comax = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let c = over[i].add_sum(&over[j])?.t_closure()?.is_unit_ideal();
            comax[i][j] = c;
            comax[j][i] = c;
        }
    }
    let mut best = if n == 0 { 0 } else { 1 };
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((family, next)) = stack.pop() {
        best = best.max(family.len());
        for k in next..n {
            if family.iter().all(|&f| comax[f][k]) {
                let mut fam = family.clone();
                fam.push(k);
                stack.push((fam, k + 1));
            }
        }
    }
    Ok(best)
}
