//! Element-level order theory: primal, rigid, prime-quantum and homogeneous
//! elements, disjointness, pre-Riesz verification, Conrad's finiteness
//! condition, and bases of homogeneous elements.

use crate::bits::{and_into, any, ones};
use crate::element::Element;
use crate::monoid::{MonoidError, MonoidInstance};
use crate::verdict::{Status, Verdict};

fn positive(m: &MonoidInstance, i: usize) -> bool {
    i != m.identity_idx()
}

fn require_positive(m: &MonoidInstance, e: &Element) -> Result<usize, MonoidError> {
    let i = m.validate(e)?;
    if positive(m, i) {
        Ok(i)
    } else {
        Err(MonoidError::IdentityInput)
    }
}

/// Ordered pairs of window elements whose sum leaves the window; the
/// complement of the space `is_primal` can sweep.
fn out_of_window_pairs(m: &MonoidInstance) -> u64 {
    m.out_of_window_pair_count()
}

/// x is primal if whenever x ≤ y₁ + y₂ (sum within the window) there is a
/// decomposition x = x₁ + x₂ with x₁ ≤ y₁ and x₂ ≤ y₂.
pub fn is_primal(m: &MonoidInstance, x: &Element) -> Result<Verdict, MonoidError> {
    let xi = m.validate(x)?;
    Ok(is_primal_idx(m, xi))
}

pub(crate) fn is_primal_idx(m: &MonoidInstance, xi: usize) -> Verdict {
    let x_pairs = m.sum_pairs_idx(xi);
    let mut checked = 0u64;
    for z in 0..m.len() {
        if !m.leq_idx(xi, z) {
            continue;
        }
        for &(y1, y2) in &m.sum_pairs_idx(z) {
            checked += 1;
            let split = x_pairs
                .iter()
                .any(|&(x1, x2)| m.leq_idx(x1, y1) && m.leq_idx(x2, y2));
            if !split {
                return Verdict::fails(
                    vec![m.element(y1).clone(), m.element(y2).clone()],
                    checked,
                    out_of_window_pairs(m),
                );
            }
        }
    }
    Verdict::holds(checked, out_of_window_pairs(m))
}

/// Every divisor of x must be primal.
pub fn is_completely_primal(m: &MonoidInstance, x: &Element) -> Result<Verdict, MonoidError> {
    let xi = m.validate(x)?;
    let mut checked = 0u64;
    let mut unchecked = 0u64;
    for d in m.lower_set_idx(xi) {
        let v = is_primal_idx(m, d);
        checked += v.checked;
        unchecked = v.unchecked;
        if v.failed() {
            return Ok(Verdict::fails(vec![m.element(d).clone()], checked, unchecked));
        }
    }
    Ok(Verdict::holds(checked, unchecked))
}

/// The divisor set of r must be a chain.
pub fn is_rigid(m: &MonoidInstance, r: &Element) -> Result<Verdict, MonoidError> {
    let ri = require_positive(m, r)?;
    Ok(is_rigid_idx(m, ri))
}

pub(crate) fn is_rigid_idx(m: &MonoidInstance, ri: usize) -> Verdict {
    let divs = m.lower_set_idx(ri);
    let mut checked = 0u64;
    for (a, &i) in divs.iter().enumerate() {
        for &j in &divs[a + 1..] {
            checked += 1;
            if !m.leq_idx(i, j) && !m.leq_idx(j, i) {
                return Verdict::fails(
                    vec![m.element(i).clone(), m.element(j).clone()],
                    checked,
                    0,
                );
            }
        }
    }
    Verdict::holds(checked, 0)
}

/// Every pair of strictly positive divisors of h has a strictly positive
/// common lower bound.
pub fn is_homogeneous(m: &MonoidInstance, h: &Element) -> Result<Verdict, MonoidError> {
    let hi = require_positive(m, h)?;
    Ok(is_homogeneous_idx(m, hi))
}

pub(crate) fn is_homogeneous_idx(m: &MonoidInstance, hi: usize) -> Verdict {
    let divs: Vec<usize> =
        m.lower_set_idx(hi).into_iter().filter(|&d| positive(m, d)).collect();
    let mut checked = 0u64;
    for (a, &r) in divs.iter().enumerate() {
        for &s in &divs[a..] {
            checked += 1;
            let meet = (0..m.len())
                .any(|t| positive(m, t) && m.leq_idx(t, r) && m.leq_idx(t, s));
            if !meet {
                return Verdict::fails(
                    vec![m.element(r).clone(), m.element(s).clone()],
                    checked,
                    0,
                );
            }
        }
    }
    Verdict::holds(checked, 0)
}

/// inf(x, y) = 0: the common lower bounds are exactly the identity.
pub fn are_disjoint(m: &MonoidInstance, x: &Element, y: &Element) -> Result<bool, MonoidError> {
    let xi = require_positive(m, x)?;
    let yi = require_positive(m, y)?;
    Ok(are_disjoint_idx(m, xi, yi))
}

pub(crate) fn are_disjoint_idx(m: &MonoidInstance, xi: usize, yi: usize) -> bool {
    let clb = m.common_lower_bound_idxs(&[xi, yi]);
    clb.len() == 1 && clb[0] == m.identity_idx()
}

/// Prime-quantum test at exponent bound nmax: q must absorb a power of each
/// of its divisors, the divisors of every q-power must form a chain, and
/// every divisor of every q-power must be primal.
pub fn is_prime_quantum(
    m: &MonoidInstance,
    q: &Element,
    nmax: u32,
) -> Result<Verdict, MonoidError> {
    if nmax < 1 {
        return Err(MonoidError::PreconditionUnmet("nmax must be at least 1".into()));
    }
    let qi = require_positive(m, q)?;

    // power ladder q, q², ..., q^nmax
    let mut powers = vec![qi];
    for _ in 1..nmax {
        match m.add_idx(*powers.last().unwrap(), qi) {
            Some(next) => powers.push(next),
            None => {
                return Ok(Verdict::inconclusive(format!(
                    "power {} of {} leaves the window",
                    powers.len() + 1,
                    m.render_element(q)
                )))
            }
        }
    }

    let mut checked = 0u64;

    // (1) for each non-identity divisor r of q: q ≤ n·r for some n ≤ nmax
    let q_divs: Vec<usize> =
        m.lower_set_idx(qi).into_iter().filter(|&d| positive(m, d)).collect();
    for &r in &q_divs {
        let mut cur = r;
        let mut found = false;
        for _ in 0..nmax {
            checked += 1;
            if m.leq_idx(qi, cur) {
                found = true;
                break;
            }
            match m.add_idx(cur, r) {
                Some(next) => cur = next,
                None => {
                    return Ok(Verdict::inconclusive(format!(
                        "powers of divisor {} leave the window",
                        m.render_element(m.element(r))
                    )))
                }
            }
        }
        if !found {
            return Ok(Verdict::fails(vec![m.element(r).clone()], checked, 0));
        }
    }

    // (2) divisors of each power form a chain
    for &p in &powers {
        let v = is_rigid_idx(m, p);
        checked += v.checked;
        if let Status::FailsWith(w) = v.status {
            return Ok(Verdict { status: Status::FailsWith(w), checked, unchecked: 0 });
        }
    }

    // (3) every divisor of every power is primal
    let mut seen = std::collections::HashSet::new();
    for &p in &powers {
        for t in m.lower_set_idx(p) {
            if !positive(m, t) || !seen.insert(t) {
                continue;
            }
            let v = is_primal_idx(m, t);
            checked += v.checked;
            if let Status::FailsWith(mut w) = v.status {
                let mut witness = vec![m.element(t).clone()];
                witness.append(&mut w);
                return Ok(Verdict { status: Status::FailsWith(witness), checked, unchecked: 0 });
            }
        }
    }

    Ok(Verdict::holds(checked, 0))
}

/// Upper directedness plus: every finite set of strictly positive elements
/// has identity glb or a strictly positive common lower bound. On a window
/// the second condition can only fail when the set has no common lower
/// bound at all.
pub fn check_pre_riesz(m: &MonoidInstance, max_arity: usize) -> Result<Verdict, MonoidError> {
    if max_arity < 2 {
        return Err(MonoidError::PreconditionUnmet("max_arity must be at least 2".into()));
    }
    let n = m.len();
    let Some(_) = m.up_row(0) else {
        return Ok(Verdict::inconclusive("window too large for a dense pre-Riesz sweep"));
    };

    let mut checked = 0u64;
    let mut unchecked = 0u64;

    // (a) directedness: every pair has an in-window upper bound
    for i in 0..n {
        for j in i..n {
            let ui = m.up_row(i).unwrap();
            let uj = m.up_row(j).unwrap();
            let mut acc = ui.to_vec();
            and_into(&mut acc, uj);
            if any(&acc) {
                checked += 1;
            } else if m.add_idx(i, j).is_none() {
                unchecked += 1;
            } else {
                return Ok(Verdict::fails(
                    vec![m.element(i).clone(), m.element(j).clone()],
                    checked,
                    unchecked,
                ));
            }
        }
    }

    // (b) tuples of strictly positive elements up to max_arity
    let positives: Vec<usize> = (0..n).filter(|&i| positive(m, i)).collect();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        m: &MonoidInstance,
        positives: &[usize],
        from: usize,
        stack: &mut Vec<usize>,
        acc: &[u64],
        left: usize,
        checked: &mut u64,
    ) -> Option<Vec<usize>> {
        if left == 0 {
            return None;
        }
        for (k, &e) in positives.iter().enumerate().skip(from) {
            stack.push(e);
            let mut next = acc.to_vec();
            and_into(&mut next, m.down_row(e).unwrap());
            *checked += 1;
            if !any(&next) {
                return Some(stack.clone());
            }
            if let Some(w) = rec(m, positives, k + 1, stack, &next, left - 1, checked) {
                return Some(w);
            }
            stack.pop();
        }
        None
    }
    let full = vec![u64::MAX; m.down_row(0).unwrap().len()];
    if let Some(w) = rec(m, &positives, 0, &mut stack, &full, max_arity, &mut checked) {
        return Ok(Verdict::fails(
            w.into_iter().map(|i| m.element(i).clone()).collect(),
            checked,
            unchecked,
        ));
    }
    Ok(Verdict::holds(checked, unchecked))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConradOutcome {
    Finite(usize),
    ExceedsCap,
}

/// Maximum size of a pairwise-disjoint family of strictly positive elements
/// below x, by exhaustive search over the divisor set.
pub fn conrad_f_bound(
    m: &MonoidInstance,
    x: &Element,
    cap: usize,
) -> Result<ConradOutcome, MonoidError> {
    let xi = require_positive(m, x)?;
    Ok(max_disjoint_below(m, xi, cap, None))
}

fn max_disjoint_below(
    m: &MonoidInstance,
    xi: usize,
    cap: usize,
    restrict: Option<&[usize]>,
) -> ConradOutcome {
    let candidates: Vec<usize> = match restrict {
        Some(set) => set.iter().copied().filter(|&d| m.leq_idx(d, xi)).collect(),
        None => m.lower_set_idx(xi).into_iter().filter(|&d| positive(m, d)).collect(),
    };
    let n = candidates.len();
    let mut disjoint = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = are_disjoint_idx(m, candidates[i], candidates[j]);
            disjoint[i][j] = d;
            disjoint[j][i] = d;
        }
    }
    let mut best = 0usize;
    let mut family: Vec<usize> = Vec::new();
    fn dfs(
        disjoint: &[Vec<bool>],
        n: usize,
        from: usize,
        family: &mut Vec<usize>,
        best: &mut usize,
        cap: usize,
    ) -> bool {
        *best = (*best).max(family.len());
        if *best > cap {
            return true;
        }
        for k in from..n {
            if family.iter().all(|&f| disjoint[f][k]) {
                family.push(k);
                if dfs(disjoint, n, k + 1, family, best, cap) {
                    return true;
                }
                family.pop();
            }
        }
        false
    }
    if dfs(&disjoint, n, 0, &mut family, &mut best, cap) {
        ConradOutcome::ExceedsCap
    } else {
        ConradOutcome::Finite(best)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisOutcome {
    Basis(Vec<Element>),
    /// A strictly positive element with no homogeneous divisor (the
    /// existence property fails).
    NoBasis(Element),
}

#[derive(Clone, Debug)]
pub struct BasisResult {
    pub outcome: BasisOutcome,
    /// Certification of the returned basis by the replacement criterion.
    pub certified: bool,
}

fn homogeneous_flags(m: &MonoidInstance) -> Vec<bool> {
    (0..m.len())
        .map(|i| positive(m, i) && is_homogeneous_idx(m, i).holds_true())
        .collect()
}

/// Greedy extension of an independent set of homogeneous elements in
/// canonical order, certified by `verify_basis`.
pub fn find_basis(m: &MonoidInstance) -> Result<BasisResult, MonoidError> {
    let homog = homogeneous_flags(m);
    // existence property: every strictly positive element exceeds a
    // homogeneous element
    for i in 0..m.len() {
        if !positive(m, i) {
            continue;
        }
        let has = m.lower_set_idx(i).into_iter().any(|d| homog[d]);
        if !has {
            return Ok(BasisResult {
                outcome: BasisOutcome::NoBasis(m.element(i).clone()),
                certified: false,
            });
        }
    }
    let mut selected: Vec<usize> = Vec::new();
    for i in 0..m.len() {
        if homog[i] && selected.iter().all(|&s| are_disjoint_idx(m, s, i)) {
            selected.push(i);
        }
    }
    let basis: Vec<Element> = selected.iter().map(|&i| m.element(i).clone()).collect();
    let certified = verify_basis(m, &basis)?.holds_true();
    Ok(BasisResult { outcome: BasisOutcome::Basis(basis), certified })
}

/// Replacement criterion for bases: S is pairwise disjoint, and replacing
/// any s ∈ S by two distinct strictly positive elements drawn from outside
/// S (or s itself) never yields a disjoint family.
pub fn verify_basis(m: &MonoidInstance, s: &[Element]) -> Result<Verdict, MonoidError> {
    if s.is_empty() {
        return Err(MonoidError::PreconditionUnmet("basis candidate must be nonempty".into()));
    }
    let mut sel: Vec<usize> = Vec::with_capacity(s.len());
    for e in s {
        sel.push(require_positive(m, e)?);
    }
    let mut checked = 0u64;
    for (a, &i) in sel.iter().enumerate() {
        for &j in &sel[a + 1..] {
            checked += 1;
            if !are_disjoint_idx(m, i, j) {
                return Ok(Verdict::fails(
                    vec![m.element(i).clone(), m.element(j).clone()],
                    checked,
                    0,
                ));
            }
        }
    }
    let outside: Vec<usize> = (0..m.len())
        .filter(|&e| positive(m, e) && !sel.contains(&e))
        .collect();
    for &si in &sel {
        let rest: Vec<usize> = sel.iter().copied().filter(|&t| t != si).collect();
        let mut cands = outside.clone();
        cands.push(si);
        cands.sort_unstable();
        for (a, &x) in cands.iter().enumerate() {
            for &y in &cands[a + 1..] {
                checked += 1;
                let disjoint = are_disjoint_idx(m, x, y)
                    && rest
                        .iter()
                        .all(|&t| are_disjoint_idx(m, x, t) && are_disjoint_idx(m, y, t));
                if disjoint {
                    return Ok(Verdict::fails(
                        vec![m.element(si).clone(), m.element(x).clone(), m.element(y).clone()],
                        checked,
                        0,
                    ));
                }
            }
        }
    }
    Ok(Verdict::holds(checked, 0))
}

#[derive(Clone, Debug)]
pub struct ConradEquivalence {
    pub f_condition: Verdict,
    pub homogeneous_bound: Verdict,
    pub gamma_form: Verdict,
    pub agree: bool,
}

const DISJOINT_CAP: usize = 64;

/// Three equivalent finiteness statements, evaluated independently: the
/// disjoint-family bound, the homogeneous-divisor form, and the Γ-form
/// (Γ defaulting to all homogeneous window elements). The verdicts must
/// agree; any disagreement is a suite failure at the caller.
pub fn check_conrad_equivalence(
    m: &MonoidInstance,
    gamma: Option<&[Element]>,
) -> Result<ConradEquivalence, MonoidError> {
    let homog = homogeneous_flags(m);
    let positives: Vec<usize> = (0..m.len()).filter(|&i| positive(m, i)).collect();

    let mut f_condition = Verdict::holds(positives.len() as u64, 0);
    for &x in &positives {
        if max_disjoint_below(m, x, DISJOINT_CAP, None) == ConradOutcome::ExceedsCap {
            f_condition = Verdict::fails(vec![m.element(x).clone()], 0, 0);
            break;
        }
    }

    let homog_set: Vec<usize> = (0..m.len()).filter(|&i| homog[i]).collect();
    let mut homogeneous_bound = Verdict::holds(positives.len() as u64, 0);
    for &x in &positives {
        let exceeds_one = m.lower_set_idx(x).into_iter().any(|d| homog[d]);
        let bounded =
            max_disjoint_below(m, x, DISJOINT_CAP, Some(&homog_set)) != ConradOutcome::ExceedsCap;
        if !exceeds_one || !bounded {
            homogeneous_bound = Verdict::fails(vec![m.element(x).clone()], 0, 0);
            break;
        }
    }

    let gamma_set: Vec<usize> = match gamma {
        Some(g) => g.iter().map(|e| require_positive(m, e)).collect::<Result<_, _>>()?,
        None => homog_set.clone(),
    };
    let mut gamma_form = Verdict::holds(positives.len() as u64, 0);
    for &x in &positives {
        let exceeds_one = gamma_set.iter().any(|&g| m.leq_idx(g, x));
        let bounded =
            max_disjoint_below(m, x, DISJOINT_CAP, Some(&gamma_set)) != ConradOutcome::ExceedsCap;
        if !exceeds_one || !bounded {
            gamma_form = Verdict::fails(vec![m.element(x).clone()], 0, 0);
            break;
        }
    }

    let agree = f_condition.holds_true() == homogeneous_bound.holds_true()
        && (gamma.is_some() || homogeneous_bound.holds_true() == gamma_form.holds_true());
    Ok(ConradEquivalence { f_condition, homogeneous_bound, gamma_form, agree })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointSumReport {
    pub glb_is_identity: bool,
    pub sum_is_minimal_upper_bound: bool,
    pub sum_is_least_upper_bound: bool,
    /// glb(a,b) = 0 ⇔ a+b is a minimal upper bound.
    pub minimal_reading: bool,
    /// glb(a,b) = 0 ⇔ a+b is the least upper bound.
    pub least_reading: bool,
}

/// Both readings of the disjoint-sum law for a strictly positive pair whose
/// sum stays in the window. Hypotheses (cancellative divisibility pre-Riesz
/// monoid) are the caller's responsibility via `check_disjoint_sum`.
pub(crate) fn disjoint_sum_raw(
    m: &MonoidInstance,
    ai: usize,
    bi: usize,
) -> Result<DisjointSumReport, MonoidError> {
    let Some(si) = m.add_idx(ai, bi) else {
        return Err(MonoidError::PreconditionUnmet("a + b leaves the window".into()));
    };
    let glb_is_identity = m.glb_idx(&[ai, bi]) == Some(m.identity_idx());
    let ubs: Vec<usize> = (0..m.len())
        .filter(|&z| m.leq_idx(ai, z) && m.leq_idx(bi, z))
        .collect();
    let sum_is_minimal_upper_bound = !ubs.iter().any(|&z| z != si && m.leq_idx(z, si));
    let sum_is_least_upper_bound = ubs.iter().all(|&z| m.leq_idx(si, z));
    Ok(DisjointSumReport {
        glb_is_identity,
        sum_is_minimal_upper_bound,
        sum_is_least_upper_bound,
        minimal_reading: glb_is_identity == sum_is_minimal_upper_bound,
        least_reading: glb_is_identity == sum_is_least_upper_bound,
    })
}

/// glb(a,b) = 0 versus extremality of a+b among upper bounds, with both the
/// minimal and the least reading reported.
pub fn check_disjoint_sum(
    m: &MonoidInstance,
    a: &Element,
    b: &Element,
) -> Result<DisjointSumReport, MonoidError> {
    let ai = require_positive(m, a)?;
    let bi = require_positive(m, b)?;
    if !m.check_cancellative().holds_true() {
        return Err(MonoidError::HypothesisUnmet("monoid is not cancellative".into()));
    }
    if !m.check_divisibility_order().holds_true() {
        return Err(MonoidError::HypothesisUnmet("order is not divisibility".into()));
    }
    if !check_pre_riesz(m, 2)?.holds_true() {
        return Err(MonoidError::HypothesisUnmet("monoid is not pre-Riesz on the window".into()));
    }
    disjoint_sum_raw(m, ai, bi)
}

// ---- sweeps used by suites and acceptance --------------------------------

/// First element failing `is_primal`, in canonical order.
pub fn all_primal_sweep(m: &MonoidInstance) -> Verdict {
    let found = crate::par::find_first(m.len(), |i| {
        let v = is_primal_idx(m, i);
        if v.failed() {
            Some(v)
        } else {
            None
        }
    });
    match found {
        Some((i, v)) => Verdict::fails(vec![m.element(i).clone()], i as u64 + 1, v.unchecked),
        None => Verdict::holds(m.len() as u64, out_of_window_pairs(m)),
    }
}

/// Rigid elements must be homogeneous.
pub fn rigid_implies_homogeneous_sweep(m: &MonoidInstance) -> Verdict {
    let mut checked = 0u64;
    for i in 0..m.len() {
        if !positive(m, i) {
            continue;
        }
        checked += 1;
        if is_rigid_idx(m, i).holds_true() && !is_homogeneous_idx(m, i).holds_true() {
            return Verdict::fails(vec![m.element(i).clone()], checked, 0);
        }
    }
    Verdict::holds(checked, 0)
}

/// Prime quanta must be rigid (the chain condition at exponent one).
pub fn quantum_implies_rigid_sweep(m: &MonoidInstance, nmax: u32) -> Verdict {
    let mut checked = 0u64;
    let mut unchecked = 0u64;
    for i in 0..m.len() {
        if !positive(m, i) {
            continue;
        }
        let q = is_prime_quantum(m, m.element(i), nmax).expect("valid element");
        match q.status {
            Status::WindowInconclusive(_) => unchecked += 1,
            Status::Holds => {
                checked += 1;
                if !is_rigid_idx(m, i).holds_true() {
                    return Verdict::fails(vec![m.element(i).clone()], checked, unchecked);
                }
            }
            Status::FailsWith(_) => checked += 1,
        }
    }
    Verdict::holds(checked, unchecked)
}

/// Disjointness is inherited by divisors: x ⊥ y and 0 < z ≤ x force z ⊥ y.
pub fn disjoint_inheritance_sweep(m: &MonoidInstance) -> Verdict {
    let mut checked = 0u64;
    for x in 0..m.len() {
        if !positive(m, x) {
            continue;
        }
        for y in 0..m.len() {
            if !positive(m, y) || !are_disjoint_idx(m, x, y) {
                continue;
            }
            for z in m.lower_set_idx(x) {
                if !positive(m, z) {
                    continue;
                }
                checked += 1;
                if !are_disjoint_idx(m, z, y) {
                    return Verdict::fails(
                        vec![m.element(x).clone(), m.element(y).clone(), m.element(z).clone()],
                        checked,
                        0,
                    );
                }
            }
        }
    }
    Verdict::holds(checked, 0)
}

/// A homogeneous element cannot meet both members of a disjoint pair.
pub fn homogeneous_disjoint_pair_sweep(m: &MonoidInstance) -> Verdict {
    let homog = homogeneous_flags(m);
    let mut checked = 0u64;
    for h in 0..m.len() {
        if !homog[h] {
            continue;
        }
        for x in 0..m.len() {
            if !positive(m, x) {
                continue;
            }
            for y in x + 1..m.len() {
                if !positive(m, y) || !are_disjoint_idx(m, x, y) {
                    continue;
                }
                checked += 1;
                if !are_disjoint_idx(m, h, x) && !are_disjoint_idx(m, h, y) {
                    return Verdict::fails(
                        vec![m.element(h).clone(), m.element(x).clone(), m.element(y).clone()],
                        checked,
                        0,
                    );
                }
            }
        }
    }
    Verdict::holds(checked, 0)
}

/// The disjoint-sum law swept over every in-window strictly positive pair:
/// the minimal reading must hold everywhere; the least reading returns its
/// first counterexample.
pub struct DisjointSumSweep {
    pub minimal_reading: Verdict,
    pub least_reading: Verdict,
}

pub fn disjoint_sum_sweep(m: &MonoidInstance) -> Result<DisjointSumSweep, MonoidError> {
    if !m.check_cancellative().holds_true() {
        return Err(MonoidError::HypothesisUnmet("monoid is not cancellative".into()));
    }
    if !m.check_divisibility_order().holds_true() {
        return Err(MonoidError::HypothesisUnmet("order is not divisibility".into()));
    }
    if !check_pre_riesz(m, 2)?.holds_true() {
        return Err(MonoidError::HypothesisUnmet("monoid is not pre-Riesz on the window".into()));
    }
    let mut minimal = Verdict::holds(0, 0);
    let mut least = Verdict::holds(0, 0);
    let mut checked = 0u64;
    let mut unchecked = 0u64;
    for a in 0..m.len() {
        if !positive(m, a) {
            continue;
        }
        for b in a..m.len() {
            if !positive(m, b) {
                continue;
            }
            if m.add_idx(a, b).is_none() {
                unchecked += 1;
                continue;
            }
            checked += 1;
            let rep = disjoint_sum_raw(m, a, b)?;
            if !rep.minimal_reading && minimal.holds_true() {
                minimal =
                    Verdict::fails(vec![m.element(a).clone(), m.element(b).clone()], checked, 0);
            }
            if !rep.least_reading && least.holds_true() {
                least =
                    Verdict::fails(vec![m.element(a).clone(), m.element(b).clone()], checked, 0);
            }
        }
    }
    if minimal.holds_true() {
        minimal = Verdict::holds(checked, unchecked);
    }
    if least.holds_true() {
        least = Verdict::holds(checked, unchecked);
    }
    Ok(DisjointSumSweep { minimal_reading: minimal, least_reading: least })
}

/// Feasibility of interpolation between sets As ≤ Bs by exhaustive bitset
/// search: is there d with every a ≤ d ≤ every b?
pub fn interpolation_feasible(m: &MonoidInstance, asv: &[usize], bsv: &[usize]) -> bool {
    let words = m.up_row(0).expect("dense window required").len();
    let mut acc = vec![u64::MAX; words];
    for &a in asv {
        and_into(&mut acc, m.up_row(a).unwrap());
    }
    for &b in bsv {
        and_into(&mut acc, m.down_row(b).unwrap());
    }
    any(&acc)
}

/// Exhaustive (n, m) interpolation sweep with n, m ≤ arity over distinct
/// element sets (duplicates never change feasibility). Returns the first
/// failing pair of sets in canonical order, encoded as A ++ B.
pub fn interpolation_nm_sweep(m: &MonoidInstance, arity: usize) -> Verdict {
    let n = m.len();
    if m.up_row(0).is_none() {
        return Verdict::inconclusive("window too large for a dense interpolation sweep");
    }
    let words = m.up_row(0).unwrap().len();
    let mut checked = 0u64;

    // enumerate B-sets of size 1..=arity in canonical order
    let mut bs: Vec<usize> = Vec::new();
    fn rec_b(
        m: &MonoidInstance,
        from: usize,
        bs: &mut Vec<usize>,
        lower: &[u64],
        arity: usize,
        checked: &mut u64,
        words: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if !bs.is_empty() {
            // candidate a-elements live in the common lower set
            let cand = ones(lower);
            let mut asv: Vec<usize> = Vec::new();
            if let Some(fail) = rec_a(m, &cand, 0, &mut asv, &vec![u64::MAX; words], lower, arity, checked)
            {
                return Some((fail, bs.clone()));
            }
        }
        if bs.len() == arity {
            return None;
        }
        for k in from..m.len() {
            // comparable members are redundant constraints; sweeping
            // antichains is complete and keeps witnesses minimal
            if bs.iter().any(|&x| m.leq_idx(x, k) || m.leq_idx(k, x)) {
                continue;
            }
            bs.push(k);
            let mut next = lower.to_vec();
            and_into(&mut next, m.down_row(k).unwrap());
            if let Some(f) = rec_b(m, k + 1, bs, &next, arity, checked, words) {
                return Some(f);
            }
            bs.pop();
        }
        None
    }
    #[allow(clippy::too_many_arguments)]
    fn rec_a(
        m: &MonoidInstance,
        cand: &[usize],
        from: usize,
        asv: &mut Vec<usize>,
        upper: &[u64],
        lower: &[u64],
        arity: usize,
        checked: &mut u64,
    ) -> Option<Vec<usize>> {
        if !asv.is_empty() {
            *checked += 1;
            let mut acc = upper.to_vec();
            and_into(&mut acc, lower);
            if !any(&acc) {
                return Some(asv.clone());
            }
        }
        if asv.len() == arity {
            return None;
        }
        for (i, &a) in cand.iter().enumerate().skip(from) {
            if asv.iter().any(|&x| m.leq_idx(x, a) || m.leq_idx(a, x)) {
                continue;
            }
            asv.push(a);
            let mut next = upper.to_vec();
            and_into(&mut next, m.up_row(a).unwrap());
            if let Some(f) = rec_a(m, cand, i + 1, asv, &next, lower, arity, checked) {
                return Some(f);
            }
            asv.pop();
        }
        None
    }

    let full = vec![u64::MAX; words];
    let _ = n;
    match rec_b(m, 0, &mut bs, &full, arity, &mut checked, words) {
        Some((asv, bsv)) => {
            let mut w: Vec<Element> = asv.iter().map(|&i| m.element(i).clone()).collect();
            w.extend(bsv.iter().map(|&i| m.element(i).clone()));
            Verdict::fails(w, checked, 0)
        }
        None => Verdict::holds(checked, 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{load_monoid, MonoidSpecDocument};

    fn ns23() -> MonoidInstance {
        load_monoid(
            "ns:2,3".into(),
            MonoidSpecDocument::NumericalSemigroup { generators: vec![2, 3], window: 40 },
        )
        .unwrap()
    }

    fn posmul(w: u64) -> MonoidInstance {
        load_monoid("posmul".into(), MonoidSpecDocument::PositiveMul { window: w }).unwrap()
    }

    fn bm3() -> MonoidInstance {
        load_monoid("bm:3".into(), MonoidSpecDocument::BlockMonoid { modulus: 3, window: 9 })
            .unwrap()
    }

    #[test]
    fn primality_examples() {
        let m = ns23();
        let v = is_primal(&m, &Element::Nat(2)).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::Nat(3), Element::Nat(3)]);

        let b = bm3();
        let v = is_primal(&b, &Element::Multiset(vec![1, 2])).unwrap();
        assert_eq!(
            v.witness().unwrap(),
            &[Element::Multiset(vec![1, 1, 1]), Element::Multiset(vec![2, 2, 2])]
        );

        // total order: everything is primal
        let nat = load_monoid("nat".into(), MonoidSpecDocument::NaturalAdd { window: 20 }).unwrap();
        for e in nat.elements() {
            assert!(is_primal(&nat, e).unwrap().holds_true());
        }
    }

    #[test]
    fn completely_primal_examples() {
        let p = posmul(50);
        assert!(is_completely_primal(&p, &Element::PosInt(8)).unwrap().holds_true());
        let m = ns23();
        let v = is_completely_primal(&m, &Element::Nat(4)).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::Nat(2)]);
        assert!(is_completely_primal(&m, &Element::Nat(0)).unwrap().holds_true());
    }

    #[test]
    fn rigidity_examples() {
        let p = posmul(50);
        assert!(is_rigid(&p, &Element::PosInt(8)).unwrap().holds_true());
        let v = is_rigid(&p, &Element::PosInt(6)).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::PosInt(2), Element::PosInt(3)]);
        let m = ns23();
        let v = is_rigid(&m, &Element::Nat(5)).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::Nat(2), Element::Nat(3)]);
        assert!(matches!(is_rigid(&m, &Element::Nat(0)), Err(MonoidError::IdentityInput)));
    }

    #[test]
    fn homogeneity_examples() {
        let p = posmul(50);
        assert!(is_homogeneous(&p, &Element::PosInt(8)).unwrap().holds_true());
        let v = is_homogeneous(&p, &Element::PosInt(6)).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::PosInt(2), Element::PosInt(3)]);
        let m = ns23();
        let v = is_homogeneous(&m, &Element::Nat(5)).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::Nat(2), Element::Nat(3)]);
    }

    #[test]
    fn disjointness_examples() {
        let m = ns23();
        assert!(are_disjoint(&m, &Element::Nat(2), &Element::Nat(3)).unwrap());
        assert!(!are_disjoint(&m, &Element::Nat(4), &Element::Nat(5)).unwrap());
        let p = posmul(50);
        assert!(are_disjoint(&p, &Element::PosInt(4), &Element::PosInt(9)).unwrap());
    }

    #[test]
    fn prime_quantum_examples() {
        let p = posmul(4096);
        assert!(is_prime_quantum(&p, &Element::PosInt(8), 4).unwrap().holds_true());

        let p6 = posmul(46656);
        let v = is_prime_quantum(&p6, &Element::PosInt(6), 6).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::PosInt(2)]);

        let nat = load_monoid("nat".into(), MonoidSpecDocument::NaturalAdd { window: 30 }).unwrap();
        assert!(is_prime_quantum(&nat, &Element::Nat(3), 3).unwrap().holds_true());

        // window too small for the power ladder
        let small = posmul(50);
        assert!(matches!(
            is_prime_quantum(&small, &Element::PosInt(8), 4).unwrap().status,
            Status::WindowInconclusive(_)
        ));
    }

    #[test]
    fn pre_riesz_on_catalog_instances() {
        assert!(check_pre_riesz(&ns23(), 3).unwrap().holds_true());
        assert!(check_pre_riesz(&posmul(50), 3).unwrap().holds_true());
        assert!(check_pre_riesz(&bm3(), 3).unwrap().holds_true());
    }

    #[test]
    fn pre_riesz_fails_on_meetless_table() {
        // two atoms below a top element, no common lower bound at all
        // (the identity is not below the atoms in the declared order)
        let m = load_monoid(
            "meetless".into(),
            MonoidSpecDocument::Table {
                elements: vec!["0".into(), "a".into(), "b".into(), "t".into()],
                add: vec![
                    vec![Some(0), Some(1), Some(2), Some(3)],
                    vec![Some(1), Some(3), Some(3), None],
                    vec![Some(2), Some(3), Some(3), None],
                    vec![Some(3), None, None, None],
                ],
                leq: vec![
                    vec![true, false, false, true],
                    vec![false, true, false, true],
                    vec![false, false, true, true],
                    vec![false, false, false, true],
                ],
                window: None,
            },
        )
        .unwrap();
        let v = check_pre_riesz(&m, 2).unwrap();
        assert_eq!(v.witness().unwrap(), &[Element::Table(1), Element::Table(2)]);
    }

    #[test]
    fn conrad_bound_examples() {
        let p = posmul(50);
        assert_eq!(
            conrad_f_bound(&p, &Element::PosInt(30), 5).unwrap(),
            ConradOutcome::Finite(3)
        );
        assert_eq!(conrad_f_bound(&p, &Element::PosInt(8), 5).unwrap(), ConradOutcome::Finite(1));
        let m = ns23();
        assert_eq!(conrad_f_bound(&m, &Element::Nat(7), 5).unwrap(), ConradOutcome::Finite(2));
        assert_eq!(conrad_f_bound(&p, &Element::PosInt(30), 2).unwrap(), ConradOutcome::ExceedsCap);
    }

    #[test]
    fn basis_examples() {
        let p = posmul(30);
        let r = find_basis(&p).unwrap();
        let primes: Vec<Element> =
            [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29].iter().map(|&v| Element::PosInt(v)).collect();
        assert_eq!(r.outcome, BasisOutcome::Basis(primes));
        assert!(r.certified);

        let m = ns23();
        let r = find_basis(&m).unwrap();
        assert_eq!(r.outcome, BasisOutcome::Basis(vec![Element::Nat(2), Element::Nat(3)]));
        assert!(r.certified);

        let f = load_monoid(
            "fc:2".into(),
            MonoidSpecDocument::FreeCommutative { rank: 2, window: 6 },
        )
        .unwrap();
        let r = find_basis(&f).unwrap();
        assert_eq!(
            r.outcome,
            BasisOutcome::Basis(vec![Element::Vector(vec![0, 1]), Element::Vector(vec![1, 0])])
        );
        assert!(r.certified);
    }

    #[test]
    fn basis_verification_examples() {
        let p = posmul(10);
        let s: Vec<Element> = [2u64, 3, 5, 7].iter().map(|&v| Element::PosInt(v)).collect();
        assert!(verify_basis(&p, &s).unwrap().holds_true());

        let bad: Vec<Element> = [4u64, 9].iter().map(|&v| Element::PosInt(v)).collect();
        let v = verify_basis(&p, &bad).unwrap();
        assert_eq!(
            v.witness().unwrap(),
            &[Element::PosInt(4), Element::PosInt(2), Element::PosInt(5)]
        );
    }

    #[test]
    fn conrad_equivalence_agrees_on_catalog() {
        for m in [ns23(), posmul(30), bm3()] {
            let eq = check_conrad_equivalence(&m, None).unwrap();
            assert!(eq.agree, "disagreement on {}", m.id());
            assert!(eq.f_condition.holds_true());
        }
    }

    #[test]
    fn disjoint_sum_examples() {
        let f = load_monoid(
            "fc:2".into(),
            MonoidSpecDocument::FreeCommutative { rank: 2, window: 6 },
        )
        .unwrap();
        let rep =
            check_disjoint_sum(&f, &Element::Vector(vec![1, 0]), &Element::Vector(vec![0, 1]))
                .unwrap();
        assert!(rep.glb_is_identity && rep.sum_is_minimal_upper_bound && rep.sum_is_least_upper_bound);

        let m = ns23();
        let rep = check_disjoint_sum(&m, &Element::Nat(2), &Element::Nat(3)).unwrap();
        assert!(rep.glb_is_identity);
        assert!(rep.sum_is_minimal_upper_bound);
        assert!(!rep.sum_is_least_upper_bound);
        assert!(rep.minimal_reading && !rep.least_reading);

        let p = posmul(50);
        let rep = check_disjoint_sum(&p, &Element::PosInt(4), &Element::PosInt(6)).unwrap();
        assert!(!rep.glb_is_identity);
        assert!(!rep.sum_is_minimal_upper_bound);
    }

    #[test]
    fn disjoint_sum_sweep_ns_least_fails_at_2_3() {
        let m = ns23();
        let sweep = disjoint_sum_sweep(&m).unwrap();
        assert!(sweep.minimal_reading.holds_true());
        assert_eq!(sweep.least_reading.witness().unwrap(), &[Element::Nat(2), Element::Nat(3)]);
    }

    #[test]
    fn implication_sweeps_hold_on_catalog() {
        for m in [ns23(), posmul(50), bm3()] {
            assert!(rigid_implies_homogeneous_sweep(&m).holds_true(), "{}", m.id());
            assert!(quantum_implies_rigid_sweep(&m, 3).holds_true(), "{}", m.id());
            assert!(disjoint_inheritance_sweep(&m).holds_true(), "{}", m.id());
            assert!(homogeneous_disjoint_pair_sweep(&m).holds_true(), "{}", m.id());
        }
    }

    #[test]
    fn nm_sweep_matches_22_on_ns() {
        let m = ns23();
        let v = interpolation_nm_sweep(&m, 3);
        // first failure in canonical order is A = {2,3}, B = {5,6}
        assert_eq!(
            v.witness().unwrap(),
            &[Element::Nat(2), Element::Nat(3), Element::Nat(5), Element::Nat(6)]
        );
    }
}
