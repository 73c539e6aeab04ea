//! Riesz interpolation at monoid and group level: exhaustive search,
//! constructive replays of the interpolation arguments, the (n, m)
//! reduction, and the group of differences of a cancellative conic monoid.

use crate::element::Element;
use crate::ideal::FractionalIdeal;
use crate::monoid::{Backend, MonoidError, MonoidInstance};
use crate::order;
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Search,
    Constructive,
}

/// A labeled equation between two sums of monoid elements. Every recorded
/// equation re-verifies exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub label: String,
    pub lhs: Vec<Element>,
    pub rhs: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderFact {
    pub label: String,
    pub lo: Element,
    pub hi: Element,
}

/// Interpolant plus the full derivation that produced it.
#[derive(Clone, Debug)]
pub struct MonoidWitness {
    pub z: Element,
    pub mode: Mode,
    pub equations: Vec<Equation>,
    pub bounds: Vec<OrderFact>,
}

#[derive(Clone, Debug)]
pub enum Interp22Outcome {
    Witness(MonoidWitness),
    NoInterpolant,
}

impl Interp22Outcome {
    pub fn witness(&self) -> Option<&MonoidWitness> {
        match self {
            Interp22Outcome::Witness(w) => Some(w),
            Interp22Outcome::NoInterpolant => None,
        }
    }

    pub fn found(&self) -> bool {
        matches!(self, Interp22Outcome::Witness(_))
    }
}

fn require_riesz_hypotheses(m: &MonoidInstance) -> Result<(), MonoidError> {
    if !m.check_cancellative().holds_true() {
        return Err(MonoidError::HypothesisUnmet("monoid is not cancellative".into()));
    }
    if !m.check_divisibility_order().holds_true() {
        return Err(MonoidError::HypothesisUnmet(
            "declared order differs from divisibility".into(),
        ));
    }
    Ok(())
}

fn sum_all(m: &MonoidInstance, parts: &[Element]) -> Result<Element, String> {
    let mut acc = m.identity().clone();
    for p in parts {
        match m.add(&acc, p).map_err(|e| e.to_string())? {
            crate::monoid::SumOutcome::Element(e) => acc = e,
            crate::monoid::SumOutcome::OutOfWindow => {
                return Err(format!("sum of {parts:?} leaves the window"))
            }
        }
    }
    Ok(acc)
}

/// Re-verify every recorded equation and order fact of a witness.
pub fn verify_monoid_witness(m: &MonoidInstance, w: &MonoidWitness) -> Result<(), String> {
    for eq in &w.equations {
        let l = sum_all(m, &eq.lhs)?;
        let r = sum_all(m, &eq.rhs)?;
        if l != r {
            return Err(format!("equation {} fails: {l} != {r}", eq.label));
        }
    }
    for b in &w.bounds {
        if !m.leq(&b.lo, &b.hi).map_err(|e| e.to_string())? {
            return Err(format!("bound {} fails: {} !<= {}", b.label, b.lo, b.hi));
        }
    }
    Ok(())
}

/// (2,2) interpolation: find z with a, b ≤ z ≤ x, y.
///
/// Search mode scans the window exhaustively. Constructive mode replays the
/// two-step primal-decomposition argument and records every intermediate
/// equation; it fails with `PrimalWitnessUnavailable` when a required
/// decomposition does not exist.
pub fn interpolate_22(
    m: &MonoidInstance,
    a: &Element,
    b: &Element,
    x: &Element,
    y: &Element,
    mode: Mode,
) -> Result<Interp22Outcome, MonoidError> {
    require_riesz_hypotheses(m)?;
    let (ai, bi, xi, yi) =
        (m.validate(a)?, m.validate(b)?, m.validate(x)?, m.validate(y)?);
    for (lo, hi, what) in
        [(ai, xi, "a <= x"), (ai, yi, "a <= y"), (bi, xi, "b <= x"), (bi, yi, "b <= y")]
    {
        if !m.leq_idx(lo, hi) {
            return Err(MonoidError::PreconditionUnmet(format!("{what} does not hold")));
        }
    }
    match mode {
        Mode::Search => Ok(search_22(m, ai, bi, xi, yi)),
        Mode::Constructive => constructive_22(m, ai, bi, xi, yi),
    }
}

fn search_22(m: &MonoidInstance, ai: usize, bi: usize, xi: usize, yi: usize) -> Interp22Outcome {
    for z in 0..m.len() {
        if m.leq_idx(ai, z) && m.leq_idx(bi, z) && m.leq_idx(z, xi) && m.leq_idx(z, yi) {
            let ze = m.element(z).clone();
            return Interp22Outcome::Witness(MonoidWitness {
                z: ze.clone(),
                mode: Mode::Search,
                equations: vec![],
                bounds: vec![
                    OrderFact { label: "a <= z".into(), lo: m.element(ai).clone(), hi: ze.clone() },
                    OrderFact { label: "b <= z".into(), lo: m.element(bi).clone(), hi: ze.clone() },
                    OrderFact { label: "z <= x".into(), lo: ze.clone(), hi: m.element(xi).clone() },
                    OrderFact { label: "z <= y".into(), lo: ze, hi: m.element(yi).clone() },
                ],
            });
        }
    }
    Interp22Outcome::NoInterpolant
}

/// First decomposition u = u₁ + u₂ (canonical order) with u₁ ≤ c₁, u₂ ≤ c₂.
fn primal_split(
    m: &MonoidInstance,
    u: usize,
    c1: usize,
    c2: usize,
) -> Option<(usize, usize)> {
    m.sum_pairs_idx(u)
        .into_iter()
        .find(|&(u1, u2)| m.leq_idx(u1, c1) && m.leq_idx(u2, c2))
}

fn constructive_22(
    m: &MonoidInstance,
    ai: usize,
    bi: usize,
    xi: usize,
    yi: usize,
) -> Result<Interp22Outcome, MonoidError> {
    let el = |i: usize| m.element(i).clone();
    let witness = |lo: usize, hi: usize| -> usize {
        m.witness_idx(lo, hi).expect("verified divisibility has a witness")
    };
    // x = x1 + a = x2 + b, y = y1 + a = y2 + b
    let x1 = witness(ai, xi);
    let x2 = witness(bi, xi);
    let y1 = witness(ai, yi);
    let y2 = witness(bi, yi);

    // b <= x1 + a, so b splits across (x1, a)
    let Some((b1, b2)) = primal_split(m, bi, x1, ai) else {
        return Err(MonoidError::PrimalWitnessUnavailable(format!(
            "{} admits no decomposition against ({}, {})",
            el(bi),
            el(x1),
            el(ai)
        )));
    };
    let a1 = witness(b2, ai); // a = a1 + b2
    let x1p = witness(b1, x1); // x1 = x1' + b1
    if m.add_idx(x1p, a1) != Some(x2) {
        return Err(MonoidError::Invariant("derived equation x2 = x1' + a1 failed".into()));
    }

    // b1 <= y1 + a1, so b1 splits across (y1, a1)
    let Some((b3, b4)) = primal_split(m, b1, y1, a1) else {
        return Err(MonoidError::PrimalWitnessUnavailable(format!(
            "{} admits no decomposition against ({}, {})",
            el(b1),
            el(y1),
            el(a1)
        )));
    };
    let a1p = witness(b4, a1); // a1 = a1' + b4
    let y1p = witness(b3, y1); // y1 = y1' + b3
    if m.add_idx(y1p, a1p) != Some(y2) {
        return Err(MonoidError::Invariant("derived equation y2 = y1' + a1' failed".into()));
    }

    let z = m
        .add_idx(a1p, bi)
        .ok_or_else(|| MonoidError::Invariant("interpolant left the window".into()))?;

    let w = MonoidWitness {
        z: el(z),
        mode: Mode::Constructive,
        equations: vec![
            Equation { label: "x = x1 + a".into(), lhs: vec![el(x1), el(ai)], rhs: vec![el(xi)] },
            Equation { label: "x = x2 + b".into(), lhs: vec![el(x2), el(bi)], rhs: vec![el(xi)] },
            Equation { label: "y = y1 + a".into(), lhs: vec![el(y1), el(ai)], rhs: vec![el(yi)] },
            Equation { label: "y = y2 + b".into(), lhs: vec![el(y2), el(bi)], rhs: vec![el(yi)] },
            Equation { label: "b = b1 + b2".into(), lhs: vec![el(b1), el(b2)], rhs: vec![el(bi)] },
            Equation {
                label: "x1 = x1' + b1".into(),
                lhs: vec![el(x1p), el(b1)],
                rhs: vec![el(x1)],
            },
            Equation { label: "a = a1 + b2".into(), lhs: vec![el(a1), el(b2)], rhs: vec![el(ai)] },
            Equation {
                label: "x2 = x1' + a1".into(),
                lhs: vec![el(x1p), el(a1)],
                rhs: vec![el(x2)],
            },
            Equation {
                label: "b1 = b3 + b4".into(),
                lhs: vec![el(b3), el(b4)],
                rhs: vec![el(b1)],
            },
            Equation {
                label: "y1 = y1' + b3".into(),
                lhs: vec![el(y1p), el(b3)],
                rhs: vec![el(y1)],
            },
            Equation {
                label: "a1 = a1' + b4".into(),
                lhs: vec![el(a1p), el(b4)],
                rhs: vec![el(a1)],
            },
            Equation {
                label: "y2 = y1' + a1'".into(),
                lhs: vec![el(y1p), el(a1p)],
                rhs: vec![el(y2)],
            },
            Equation { label: "z = a1' + b".into(), lhs: vec![el(a1p), el(bi)], rhs: vec![el(z)] },
        ],
        bounds: vec![
            OrderFact { label: "b1 <= x1".into(), lo: el(b1), hi: el(x1) },
            OrderFact { label: "b2 <= a".into(), lo: el(b2), hi: el(ai) },
            OrderFact { label: "b3 <= y1".into(), lo: el(b3), hi: el(y1) },
            OrderFact { label: "b4 <= a1".into(), lo: el(b4), hi: el(a1) },
            OrderFact { label: "a <= z".into(), lo: el(ai), hi: el(z) },
            OrderFact { label: "b <= z".into(), lo: el(bi), hi: el(z) },
            OrderFact { label: "z <= x".into(), lo: el(z), hi: el(xi) },
            OrderFact { label: "z <= y".into(), lo: el(z), hi: el(yi) },
        ],
    };
    verify_monoid_witness(m, &w).map_err(MonoidError::Invariant)?;
    Ok(Interp22Outcome::Witness(w))
}

#[derive(Clone, Debug)]
pub struct NmWitness {
    pub d: Element,
    pub steps: Vec<MonoidWitness>,
}

#[derive(Clone, Debug)]
pub enum NmOutcome {
    Witness(NmWitness),
    NoInterpolant,
}

impl NmOutcome {
    pub fn found(&self) -> bool {
        matches!(self, NmOutcome::Witness(_))
    }
}

/// (n, m) interpolation by repeated (2,2) steps: fold the upper list first
/// for the leading pair of lower elements, then absorb the remaining lower
/// elements one by one.
pub fn interpolate_nm(
    m: &MonoidInstance,
    lower: &[Element],
    upper: &[Element],
    mode: Mode,
) -> Result<NmOutcome, MonoidError> {
    require_riesz_hypotheses(m)?;
    if lower.is_empty() || upper.is_empty() {
        return Err(MonoidError::PreconditionUnmet("both element lists must be nonempty".into()));
    }
    for a in lower {
        for b in upper {
            if !m.leq(a, b)? {
                return Err(MonoidError::PreconditionUnmet(format!(
                    "{a} is not below {b}"
                )));
            }
        }
    }
    let mut steps = Vec::new();
    // fold two lower elements against the whole upper list
    let mut two_vs_many = |u: &Element, v: &Element| -> Result<Option<Element>, MonoidError> {
        let mut d = if upper.len() == 1 {
            match interpolate_22(m, u, v, &upper[0], &upper[0], mode)? {
                Interp22Outcome::Witness(w) => {
                    let z = w.z.clone();
                    steps.push(w);
                    z
                }
                Interp22Outcome::NoInterpolant => return Ok(None),
            }
        } else {
            match interpolate_22(m, u, v, &upper[0], &upper[1], mode)? {
                Interp22Outcome::Witness(w) => {
                    let z = w.z.clone();
                    steps.push(w);
                    z
                }
                Interp22Outcome::NoInterpolant => return Ok(None),
            }
        };
        for b in &upper[2.min(upper.len())..] {
            match interpolate_22(m, u, v, &d, b, mode)? {
                Interp22Outcome::Witness(w) => {
                    d = w.z.clone();
                    steps.push(w);
                }
                Interp22Outcome::NoInterpolant => return Ok(None),
            }
        }
        Ok(Some(d))
    };

    let mut d = if lower.len() == 1 {
        lower[0].clone()
    } else {
        match two_vs_many(&lower[0], &lower[1])? {
            Some(d) => d,
            None => return Ok(NmOutcome::NoInterpolant),
        }
    };
    for a in &lower[2.min(lower.len())..] {
        d = match two_vs_many(&d, a)? {
            Some(next) => next,
            None => return Ok(NmOutcome::NoInterpolant),
        };
    }
    // re-verify the final interpolant against every input
    for a in lower {
        if !m.leq(a, &d)? {
            return Err(MonoidError::Invariant(format!("final interpolant misses {a} <= d")));
        }
    }
    for b in upper {
        if !m.leq(&d, b)? {
            return Err(MonoidError::Invariant(format!("final interpolant misses d <= {b}")));
        }
    }
    Ok(NmOutcome::Witness(NmWitness { d, steps }))
}

// ---- group of differences -------------------------------------------------

/// Formal difference pos − neg of two monoid elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub pos: Element,
    pub neg: Element,
}

/// Backend normal forms for group elements, used to decide equality and the
/// cone order exactly (beyond the window where necessary).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    Int(i64),
    IntVec(Vec<i64>),
    Counts(Vec<i64>),
    Ratio(u64, u64),
    Frac(FractionalIdeal),
}

/// The group generated by a cancellative conic divisibility monoid, with
/// the monoid as positive cone.
pub struct GroupContext<'m> {
    m: &'m MonoidInstance,
}

/// Build the group of differences; the monoid must be cancellative and
/// conic on its window.
pub fn build_group(m: &MonoidInstance) -> Result<GroupContext<'_>, MonoidError> {
    if !m.check_cancellative().holds_true() {
        return Err(MonoidError::HypothesisUnmet("monoid is not cancellative".into()));
    }
    if !m.check_conic().holds_true() {
        return Err(MonoidError::HypothesisUnmet("monoid is not conic".into()));
    }
    if !m.check_divisibility_order().holds_true() {
        return Err(MonoidError::HypothesisUnmet(
            "declared order differs from divisibility".into(),
        ));
    }
    Ok(GroupContext { m })
}

impl<'m> GroupContext<'m> {
    pub fn monoid(&self) -> &'m MonoidInstance {
        self.m
    }

    pub fn embed(&self, e: &Element) -> Result<GroupElement, MonoidError> {
        self.m.validate(e)?;
        Ok(GroupElement { pos: e.clone(), neg: self.m.identity().clone() })
    }

    pub fn neg(&self, g: &GroupElement) -> GroupElement {
        GroupElement { pos: g.neg.clone(), neg: g.pos.clone() }
    }

    /// Backend normal form of pos − neg.
    pub fn normal_form(&self, g: &GroupElement) -> Result<NormalForm, MonoidError> {
        let pi = self.m.validate(&g.pos)?;
        let ni = self.m.validate(&g.neg)?;
        let (pos, neg) = (self.m.element(pi), self.m.element(ni));
        Ok(match (self.m.backend(), pos, neg) {
            (Backend::NaturalAdd, Element::Nat(p), Element::Nat(n))
            | (Backend::NumericalSemigroup { .. }, Element::Nat(p), Element::Nat(n)) => {
                NormalForm::Int(*p as i64 - *n as i64)
            }
            (Backend::FreeCommutative { .. }, Element::Vector(p), Element::Vector(n)) => {
                NormalForm::IntVec(
                    p.iter().zip(n).map(|(a, b)| *a as i64 - *b as i64).collect(),
                )
            }
            (Backend::BlockMonoid { modulus }, Element::Multiset(p), Element::Multiset(n)) => {
                let mut counts = vec![0i64; *modulus as usize];
                for &r in p {
                    counts[r as usize] += 1;
                }
                for &r in n {
                    counts[r as usize] -= 1;
                }
                NormalForm::Counts(counts)
            }
            (Backend::PositiveIntegersMul, Element::PosInt(p), Element::PosInt(n)) => {
                let g = num_integer::gcd(*p, *n);
                NormalForm::Ratio(p / g, n / g)
            }
            (Backend::IdealMonoid(f), Element::Ideal(p), Element::Ideal(n)) => {
                let num = f.ideal(*p);
                let den = f.ideal(*n);
                let quotient = num
                    .multiply(&den.inverse().map_err(|e| {
                        MonoidError::Unsupported(format!("non-invertible denominator: {e}"))
                    })?)
                    .and_then(|q| q.t_closure())
                    .map_err(|e| MonoidError::Unsupported(e.to_string()))?;
                NormalForm::Frac(quotient)
            }
            _ => {
                return Err(MonoidError::Unsupported(
                    "no normal form for this backend; use cross-sum comparisons".into(),
                ))
            }
        })
    }

    /// Cross-sum equality: (a, b) = (c, d) iff a + d = c + b. Decided via
    /// normal forms; for table backends via in-window sums.
    pub fn eq(&self, u: &GroupElement, v: &GroupElement) -> Result<bool, MonoidError> {
        match (self.normal_form(u), self.normal_form(v)) {
            (Ok(x), Ok(y)) => Ok(x == y),
            _ => {
                let l = self.m.add(&u.pos, &v.neg)?;
                let r = self.m.add(&v.pos, &u.neg)?;
                match (l, r) {
                    (
                        crate::monoid::SumOutcome::Element(a),
                        crate::monoid::SumOutcome::Element(b),
                    ) => Ok(a == b),
                    _ => Err(MonoidError::Unsupported(
                        "cross-sum comparison left the window".into(),
                    )),
                }
            }
        }
    }

    /// Componentwise pair addition.
    pub fn add(&self, u: &GroupElement, v: &GroupElement) -> Result<GroupElement, MonoidError> {
        let pos = match self.m.add(&u.pos, &v.pos)? {
            crate::monoid::SumOutcome::Element(e) => e,
            crate::monoid::SumOutcome::OutOfWindow => {
                return Err(MonoidError::Unsupported("group sum left the window".into()))
            }
        };
        let neg = match self.m.add(&u.neg, &v.neg)? {
            crate::monoid::SumOutcome::Element(e) => e,
            crate::monoid::SumOutcome::OutOfWindow => {
                return Err(MonoidError::Unsupported("group sum left the window".into()))
            }
        };
        Ok(GroupElement { pos, neg })
    }

    /// Cone order: u ≤ v iff v − u lies in the monoid.
    pub fn leq(&self, u: &GroupElement, v: &GroupElement) -> Result<bool, MonoidError> {
        match (self.normal_form(u), self.normal_form(v)) {
            (Ok(x), Ok(y)) => self.nf_cone(&nf_sub(&y, &x)?),
            _ => {
                // search an in-window h with u + h = v
                for h in 0..self.m.len() {
                    let he = self.m.element(h).clone();
                    let shifted = GroupElement {
                        pos: match self.m.add(&u.pos, &he)? {
                            crate::monoid::SumOutcome::Element(e) => e,
                            crate::monoid::SumOutcome::OutOfWindow => continue,
                        },
                        neg: u.neg.clone(),
                    };
                    if self.eq(&shifted, v)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    fn nf_cone(&self, d: &NormalForm) -> Result<bool, MonoidError> {
        Ok(match d {
            NormalForm::Int(v) => {
                if *v < 0 {
                    false
                } else {
                    match self.m.backend() {
                        Backend::NumericalSemigroup { member, .. } => {
                            (*v as usize) < member.len() && member[*v as usize]
                        }
                        _ => true,
                    }
                }
            }
            NormalForm::IntVec(v) => v.iter().all(|&x| x >= 0),
            NormalForm::Counts(v) => v.iter().all(|&x| x >= 0),
            NormalForm::Ratio(n, d) => n % d == 0,
            NormalForm::Frac(i) => i.is_integral(),
        })
    }

    /// The in-window monoid element representing v − u, when it exists.
    pub fn diff_cone(
        &self,
        u: &GroupElement,
        v: &GroupElement,
    ) -> Result<Option<Element>, MonoidError> {
        match (self.normal_form(u), self.normal_form(v)) {
            (Ok(x), Ok(y)) => {
                let d = nf_sub(&y, &x)?;
                if !self.nf_cone(&d)? {
                    return Ok(None);
                }
                Ok(self.nf_to_window_element(&d))
            }
            _ => {
                for h in 0..self.m.len() {
                    let he = self.m.element(h).clone();
                    let shifted = GroupElement {
                        pos: match self.m.add(&u.pos, &he)? {
                            crate::monoid::SumOutcome::Element(e) => e,
                            crate::monoid::SumOutcome::OutOfWindow => continue,
                        },
                        neg: u.neg.clone(),
                    };
                    if self.eq(&shifted, v)? {
                        return Ok(Some(he));
                    }
                }
                Ok(None)
            }
        }
    }

    fn nf_to_window_element(&self, d: &NormalForm) -> Option<Element> {
        let e = match d {
            NormalForm::Int(v) => Element::Nat(u64::try_from(*v).ok()?),
            NormalForm::IntVec(v) => {
                Element::Vector(v.iter().map(|&x| u32::try_from(x).ok()).collect::<Option<_>>()?)
            }
            NormalForm::Counts(v) => {
                let mut ms = Vec::new();
                for (r, &c) in v.iter().enumerate() {
                    let c = usize::try_from(c).ok()?;
                    ms.extend(std::iter::repeat_n(r as u32, c));
                }
                Element::Multiset(ms)
            }
            NormalForm::Ratio(n, dd) => {
                if n % dd != 0 {
                    return None;
                }
                Element::PosInt(n / dd)
            }
            NormalForm::Frac(i) => {
                if !i.is_integral() {
                    return None;
                }
                match self.m.backend() {
                    Backend::IdealMonoid(f) => Element::Ideal(f.index_of(i)?),
                    _ => return None,
                }
            }
        };
        self.m.index_of(&e).map(|_| e)
    }
}

fn nf_sub(a: &NormalForm, b: &NormalForm) -> Result<NormalForm, MonoidError> {
    Ok(match (a, b) {
        (NormalForm::Int(x), NormalForm::Int(y)) => NormalForm::Int(x - y),
        (NormalForm::IntVec(x), NormalForm::IntVec(y)) => {
            NormalForm::IntVec(x.iter().zip(y).map(|(p, q)| p - q).collect())
        }
        (NormalForm::Counts(x), NormalForm::Counts(y)) => {
            NormalForm::Counts(x.iter().zip(y).map(|(p, q)| p - q).collect())
        }
        (NormalForm::Ratio(xn, xd), NormalForm::Ratio(yn, yd)) => {
            let n = xn * yd;
            let d = xd * yn;
            let g = num_integer::gcd(n, d);
            NormalForm::Ratio(n / g, d / g)
        }
        (NormalForm::Frac(x), NormalForm::Frac(y)) => NormalForm::Frac(
            x.multiply(&y.inverse().map_err(|e| MonoidError::Unsupported(e.to_string()))?)
                .and_then(|q| q.t_closure())
                .map_err(|e| MonoidError::Unsupported(e.to_string()))?,
        ),
        _ => return Err(MonoidError::Unsupported("mismatched normal forms".into())),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupPath {
    /// The four-way splitting derived from a primal decomposition.
    Constructive,
    /// Exhaustive search over the cone after the splitting search failed.
    FallbackSearch,
}

#[derive(Clone, Debug)]
pub struct GroupWitness {
    pub z: GroupElement,
    pub path: GroupPath,
    /// Monoid-level facts (the splitting equations), re-verifiable.
    pub monoid_facts: Vec<Equation>,
    /// Group-level equalities, stored as (label, lhs, rhs) with lhs/rhs
    /// formal sums `base + element`.
    pub group_facts: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum GroupInterpOutcome {
    Witness(GroupWitness),
    NoInterpolant,
}

impl GroupInterpOutcome {
    pub fn found(&self) -> bool {
        matches!(self, GroupInterpOutcome::Witness(_))
    }

    pub fn witness(&self) -> Option<&GroupWitness> {
        match self {
            GroupInterpOutcome::Witness(w) => Some(w),
            GroupInterpOutcome::NoInterpolant => None,
        }
    }
}

/// Group-level (2,2) interpolation for p, q ≤ r, s: derive the four cone
/// differences, split them through a primal decomposition, and return
/// p + a′; falls back to exhaustive cone search when no splitting exists.
pub fn group_interpolate(
    g: &GroupContext<'_>,
    p: &GroupElement,
    q: &GroupElement,
    r: &GroupElement,
    s: &GroupElement,
) -> Result<GroupInterpOutcome, MonoidError> {
    let m = g.monoid();
    for (lo, hi, what) in [(p, r, "p <= r"), (p, s, "p <= s"), (q, r, "q <= r"), (q, s, "q <= s")]
    {
        if !g.leq(lo, hi)? {
            return Err(MonoidError::PreconditionUnmet(format!("{what} does not hold")));
        }
    }
    // cone differences: r = p + a, s = p + c, r = q + d, s = q + b
    let a = g.diff_cone(p, r)?;
    let c = g.diff_cone(p, s)?;
    let d = g.diff_cone(q, r)?;
    let b = g.diff_cone(q, s)?;
    let (Some(a), Some(c), Some(d), Some(b)) = (a, c, d, b) else {
        return Err(MonoidError::Unsupported(
            "a cone difference left the window; enlarge the window".into(),
        ));
    };
    // re-verify the translated inequalities: r = p + a, s = p + c,
    // r = q + d, s = q + b
    for (base, diff, target, label) in
        [(p, &a, r, "r = p + a"), (p, &c, s, "s = p + c"), (q, &d, r, "r = q + d"), (q, &b, s, "s = q + b")]
    {
        let shifted = GroupElement {
            pos: match m.add(&base.pos, diff)? {
                crate::monoid::SumOutcome::Element(e) => e,
                crate::monoid::SumOutcome::OutOfWindow => {
                    return Err(MonoidError::Unsupported(
                        "translated inequality left the window".into(),
                    ))
                }
            },
            neg: base.neg.clone(),
        };
        if !g.eq(&shifted, target)? {
            return Err(MonoidError::Invariant(format!("derived equation {label} failed")));
        }
    }
    let (ai, bi, ci, di) = (
        m.validate(&a)?,
        m.validate(&b)?,
        m.validate(&c)?,
        m.validate(&d)?,
    );

    // a + b = c + d in the monoid (verified through the group to tolerate
    // sums beyond the window)
    let lhs = GroupElement { pos: a.clone(), neg: b.clone() };
    let rhs = GroupElement { pos: c.clone(), neg: d.clone() };
    let cross_ok = match (m.add_idx(ai, bi), m.add_idx(ci, di)) {
        (Some(x), Some(y)) => x == y,
        _ => g.eq(
            &GroupElement { pos: lhs.pos.clone(), neg: rhs.pos.clone() },
            &GroupElement { pos: rhs.neg.clone(), neg: lhs.neg.clone() },
        )?,
    };
    if !cross_ok {
        return Err(MonoidError::Invariant("derived equation a + b = c + d failed".into()));
    }

    // four-way splitting: a = a' + a'', c = a' + b', d = a'' + b'', b = b' + b''
    for (a1, a2) in m.sum_pairs_idx(ai) {
        if !m.leq_idx(a1, ci) || !m.leq_idx(a2, di) {
            continue;
        }
        let b1 = m.witness_idx(a1, ci).expect("divisibility witness");
        let b2 = m.witness_idx(a2, di).expect("divisibility witness");
        if m.add_idx(b1, b2) != Some(bi) {
            continue;
        }
        let el = |i: usize| m.element(i).clone();
        let z = GroupElement {
            pos: match m.add(&p.pos, &el(a1))? {
                crate::monoid::SumOutcome::Element(e) => e,
                crate::monoid::SumOutcome::OutOfWindow => continue,
            },
            neg: p.neg.clone(),
        };
        // (5): p + a' = q + b''
        let q_shift = GroupElement {
            pos: match m.add(&q.pos, &el(b2))? {
                crate::monoid::SumOutcome::Element(e) => e,
                crate::monoid::SumOutcome::OutOfWindow => continue,
            },
            neg: q.neg.clone(),
        };
        if !g.eq(&z, &q_shift)? {
            return Err(MonoidError::Invariant("derived equation p + a' = q + b'' failed".into()));
        }
        for (lo, hi, what) in [(p, &z, "p <= z"), (q, &z, "q <= z")] {
            if !g.leq(lo, hi)? {
                return Err(MonoidError::Invariant(format!("bound {what} failed")));
            }
        }
        for (lo, hi, what) in [(&z, r, "z <= r"), (&z, s, "z <= s")] {
            if !g.leq(lo, hi)? {
                return Err(MonoidError::Invariant(format!("bound {what} failed")));
            }
        }
        let w = GroupWitness {
            z,
            path: GroupPath::Constructive,
            monoid_facts: vec![
                Equation {
                    label: "a = a' + a''".into(),
                    lhs: vec![el(a1), el(a2)],
                    rhs: vec![el(ai)],
                },
                Equation {
                    label: "c = a' + b'".into(),
                    lhs: vec![el(a1), el(b1)],
                    rhs: vec![el(ci)],
                },
                Equation {
                    label: "d = a'' + b''".into(),
                    lhs: vec![el(a2), el(b2)],
                    rhs: vec![el(di)],
                },
                Equation {
                    label: "b = b' + b''".into(),
                    lhs: vec![el(b1), el(b2)],
                    rhs: vec![el(bi)],
                },
            ],
            group_facts: vec![
                format!("r = p + {}", el(ai)),
                format!("s = p + {}", el(ci)),
                format!("r = q + {}", el(di)),
                format!("s = q + {}", el(bi)),
                format!("p + {} = q + {}", el(a1), el(b2)),
            ],
        };
        for eq in &w.monoid_facts {
            verify_equation(m, eq).map_err(MonoidError::Invariant)?;
        }
        return Ok(GroupInterpOutcome::Witness(w));
    }

    // fallback: exhaustive search over the cone above p
    for h in m.lower_set_idx(ai) {
        let he = m.element(h).clone();
        let z = GroupElement {
            pos: match m.add(&p.pos, &he)? {
                crate::monoid::SumOutcome::Element(e) => e,
                crate::monoid::SumOutcome::OutOfWindow => continue,
            },
            neg: p.neg.clone(),
        };
        if g.leq(q, &z)? && g.leq(&z, r)? && g.leq(&z, s)? {
            return Ok(GroupInterpOutcome::Witness(GroupWitness {
                z,
                path: GroupPath::FallbackSearch,
                monoid_facts: vec![],
                group_facts: vec![format!("z = p + {he}")],
            }));
        }
    }
    Ok(GroupInterpOutcome::NoInterpolant)
}

fn verify_equation(m: &MonoidInstance, eq: &Equation) -> Result<(), String> {
    let l = sum_all(m, &eq.lhs)?;
    let r = sum_all(m, &eq.rhs)?;
    if l != r {
        return Err(format!("equation {} fails: {l} != {r}", eq.label));
    }
    Ok(())
}

// ---- the equivalence suite -------------------------------------------------

#[derive(Clone, Debug)]
pub struct RieszEquivalenceReport {
    pub all_primal: Verdict,
    pub interpolation_22: Verdict,
    pub interpolation_nm: Verdict,
    /// The three verdicts above must agree.
    pub equivalence_respected: bool,
    /// When the monoid is Riesz: the pre-Riesz property must hold.
    pub pre_riesz_consequence: Option<bool>,
    /// When the monoid is Riesz: conic must hold.
    pub conic_consequence: Option<bool>,
    pub suite_failures: Vec<String>,
}

/// Exhaustive (2,2) sweep: for every a, b ≤ x, y in the window, an
/// interpolant must exist. Witness is [a, b, x, y] in canonical order.
pub fn interpolation_22_sweep(m: &MonoidInstance) -> Verdict {
    let n = m.len();
    if m.up_row(0).is_none() {
        return Verdict::inconclusive("window too large for a dense interpolation sweep");
    }
    let mut checked = 0u64;
    for x in 0..n {
        for y in x..n {
            let clb = m.common_lower_bound_idxs(&[x, y]);
            for (i, &a) in clb.iter().enumerate() {
                for &b in &clb[i..] {
                    checked += 1;
                    if !order::interpolation_feasible(m, &[a, b], &[x, y]) {
                        return Verdict::fails(
                            vec![
                                m.element(a).clone(),
                                m.element(b).clone(),
                                m.element(x).clone(),
                                m.element(y).clone(),
                            ],
                            checked,
                            0,
                        );
                    }
                }
            }
        }
    }
    Verdict::holds(checked, 0)
}

/// Evaluate the equivalence between all-primal, (2,2) interpolation, and
/// (n,m) interpolation (n, m ≤ 3), plus the Riesz consequences.
pub fn check_riesz_monoid(m: &MonoidInstance) -> Result<RieszEquivalenceReport, MonoidError> {
    require_riesz_hypotheses(m)?;
    let all_primal = order::all_primal_sweep(m);
    let interpolation_22 = interpolation_22_sweep(m);
    let interpolation_nm = order::interpolation_nm_sweep(m, 3);
    let mut suite_failures = Vec::new();
    let equivalence_respected = all_primal.holds_true() == interpolation_22.holds_true()
        && interpolation_22.holds_true() == interpolation_nm.holds_true();
    if !equivalence_respected {
        suite_failures.push(format!(
            "interpolation equivalence broken: primal={}, (2,2)={}, (n,m)={}",
            all_primal.holds_true(),
            interpolation_22.holds_true(),
            interpolation_nm.holds_true()
        ));
    }
    let (pre_riesz_consequence, conic_consequence) = if all_primal.holds_true() {
        let pr = order::check_pre_riesz(m, 3)?.holds_true();
        let co = m.check_conic().holds_true();
        if !pr {
            suite_failures.push("Riesz monoid fails the pre-Riesz property".into());
        }
        if !co {
            suite_failures.push("Riesz monoid fails to be conic".into());
        }
        (Some(pr), Some(co))
    } else {
        (None, None)
    };
    Ok(RieszEquivalenceReport {
        all_primal,
        interpolation_22,
        interpolation_nm,
        equivalence_respected,
        pre_riesz_consequence,
        conic_consequence,
        suite_failures,
    })
}
