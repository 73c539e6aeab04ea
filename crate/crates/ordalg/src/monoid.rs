//! Finitely described commutative p.o. monoids with exact addition,
//! decidable divisibility, and window-bounded enumeration.
//!
//! Every instance is immutable after load and all operations are pure, so
//! instances are safe to share across threads. Enumeration is canonical:
//! two loads of the same document enumerate identical sequences.

use crate::bits::BitMatrix;
use crate::element::Element;
use crate::ideal::IdealMonoid;
use crate::verdict::Verdict;
use serde::Deserialize;
use std::collections::HashMap;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonoidError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),
    #[error("element not valid for this instance: {0}")]
    InvalidElement(String),
    #[error("identity element is not allowed here")]
    IdentityInput,
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("primal decomposition unavailable: {0}")]
    PrimalWitnessUnavailable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Result of an addition: the sum, or a marker that it left the window.
/// Escaping the window is an outcome, never an error, so sweeps can skip
/// such tuples while recording incompleteness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumOutcome {
    Element(Element),
    OutOfWindow,
}

/// Enumeration window. The bound is backend-specific: numeric cap, maximum
/// exponent-vector L1 norm, maximum multiset length, maximum integer, or
/// maximum ideal norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub size_bound: u64,
}

#[derive(Clone, Debug)]
pub struct TableData {
    pub names: Vec<String>,
    pub add: Vec<Vec<Option<usize>>>,
    pub leq: Vec<Vec<bool>>,
}

#[derive(Clone, Debug)]
pub enum Backend {
    NaturalAdd,
    NumericalSemigroup { generators: Vec<u64>, gcd: u64, member: Vec<bool> },
    BlockMonoid { modulus: u32 },
    FreeCommutative { rank: usize },
    PositiveIntegersMul,
    IdealMonoid(IdealMonoid),
    Table(TableData),
}

impl Backend {
    fn name(&self) -> &'static str {
        match self {
            Backend::NaturalAdd => "natural_add",
            Backend::NumericalSemigroup { .. } => "numerical_semigroup",
            Backend::BlockMonoid { .. } => "block_monoid",
            Backend::FreeCommutative { .. } => "free_commutative",
            Backend::PositiveIntegersMul => "positive_mul",
            Backend::IdealMonoid(_) => "ideal_monoid",
            Backend::Table(_) => "table",
        }
    }
}

/// Windows up to this size get dense order matrices and full structural
/// sweeps; larger windows fall back to arithmetic paths and strided samples.
const DENSE_LIMIT: usize = 2048;
const FULL_COMM_LIMIT: usize = 1500;
const FULL_ASSOC_LIMIT: usize = 150;

pub struct MonoidInstance {
    id: String,
    backend: Backend,
    window: Window,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    identity: usize,
    /// up.get(i, j) ⇔ elements[i] ≤ elements[j] in the declared order.
    up: Option<BitMatrix>,
    /// down.get(i, j) ⇔ elements[j] ≤ elements[i].
    down: Option<BitMatrix>,
    sum_pairs: OnceLock<Option<Vec<Vec<(u32, u32)>>>>,
    cancellative: OnceLock<Verdict>,
    conic: OnceLock<Verdict>,
    escaping_pairs: OnceLock<u64>,
}

impl std::fmt::Debug for MonoidInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MonoidInstance({}, |W| = {})", self.id, self.elements.len())
    }
}

impl MonoidInstance {
    pub fn new(id: String, backend: Backend, window: Window) -> Result<Self, MonoidError> {
        let elements = enumerate(&backend, window)?;
        if elements.is_empty() {
            return Err(MonoidError::Invariant("empty enumeration".into()));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(MonoidError::Invariant(format!("duplicate element {e}")));
            }
        }
        let mut inst = MonoidInstance {
            id,
            backend,
            window,
            elements,
            index,
            identity: 0,
            up: None,
            down: None,
            sum_pairs: OnceLock::new(),
            cancellative: OnceLock::new(),
            conic: OnceLock::new(),
            escaping_pairs: OnceLock::new(),
        };
        inst.identity = inst.find_identity()?;
        if inst.elements.len() <= DENSE_LIMIT {
            let n = inst.elements.len();
            let mut up = BitMatrix::new(n);
            let mut down = BitMatrix::new(n);
            for i in 0..n {
                for j in 0..n {
                    if inst.leq_raw(i, j) {
                        up.set(i, j);
                        down.set(j, i);
                    }
                }
            }
            inst.up = Some(up);
            inst.down = Some(down);
        }
        inst.verify_structure()?;
        Ok(inst)
    }

    pub fn from_ideal_monoid(id: String, fim: IdealMonoid) -> Result<Self, MonoidError> {
        let bound = fim.bound().max(1) as u64;
        Self::new(id, Backend::IdealMonoid(fim), Window { size_bound: bound })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn backend_name(&self) -> &'static str {
        self.backend.name()
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn window_description(&self) -> String {
        format!(
            "{} backend, bound {}, {} elements",
            self.backend.name(),
            self.window.size_bound,
            self.elements.len()
        )
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn identity(&self) -> &Element {
        &self.elements[self.identity]
    }

    pub fn identity_idx(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Validate that an element belongs to this instance's window.
    pub fn validate(&self, e: &Element) -> Result<usize, MonoidError> {
        let variant_ok = matches!(
            (&self.backend, e),
            (Backend::NaturalAdd, Element::Nat(_))
                | (Backend::NumericalSemigroup { .. }, Element::Nat(_))
                | (Backend::BlockMonoid { .. }, Element::Multiset(_))
                | (Backend::FreeCommutative { .. }, Element::Vector(_))
                | (Backend::PositiveIntegersMul, Element::PosInt(_))
                | (Backend::IdealMonoid(_), Element::Ideal(_))
                | (Backend::Table(_), Element::Table(_))
        );
        if !variant_ok {
            return Err(MonoidError::BackendMismatch(format!(
                "{e} does not fit backend {}",
                self.backend.name()
            )));
        }
        self.index_of(e).ok_or_else(|| MonoidError::InvalidElement(e.to_string()))
    }

    fn find_identity(&self) -> Result<usize, MonoidError> {
        match &self.backend {
            Backend::Table(t) => {
                'cand: for i in 0..self.elements.len() {
                    for j in 0..self.elements.len() {
                        if t.add[i][j] != Some(j) {
                            continue 'cand;
                        }
                    }
                    return Ok(i);
                }
                Err(MonoidError::Invariant("table has no identity element".into()))
            }
            _ => Ok(0),
        }
    }

    // ---- addition -------------------------------------------------------

    /// Exact monoid sum of two window elements.
    pub fn add(&self, a: &Element, b: &Element) -> Result<SumOutcome, MonoidError> {
        let i = self.validate(a)?;
        let j = self.validate(b)?;
        Ok(match self.add_idx(i, j) {
            Some(k) => SumOutcome::Element(self.elements[k].clone()),
            None => SumOutcome::OutOfWindow,
        })
    }

    /// Index-level addition; `None` means the sum left the window.
    pub fn add_idx(&self, i: usize, j: usize) -> Option<usize> {
        match &self.backend {
            Backend::NaturalAdd | Backend::NumericalSemigroup { .. } => {
                let (Element::Nat(x), Element::Nat(y)) = (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                let s = x + y;
                if s <= self.window.size_bound {
                    self.index_of(&Element::Nat(s))
                } else {
                    None
                }
            }
            Backend::BlockMonoid { .. } => {
                let (Element::Multiset(x), Element::Multiset(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                if (x.len() + y.len()) as u64 > self.window.size_bound {
                    return None;
                }
                let mut s = x.clone();
                s.extend_from_slice(y);
                s.sort_unstable();
                self.index_of(&Element::Multiset(s))
            }
            Backend::FreeCommutative { .. } => {
                let (Element::Vector(x), Element::Vector(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                let s: Vec<u32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                let l1: u64 = s.iter().map(|&v| v as u64).sum();
                if l1 > self.window.size_bound {
                    return None;
                }
                self.index_of(&Element::Vector(s))
            }
            Backend::PositiveIntegersMul => {
                let (Element::PosInt(x), Element::PosInt(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                let s = x.checked_mul(*y)?;
                if s <= self.window.size_bound {
                    self.index_of(&Element::PosInt(s))
                } else {
                    None
                }
            }
            Backend::IdealMonoid(f) => f.mul(i, j),
            Backend::Table(t) => t.add[i][j],
        }
    }

    // ---- order ----------------------------------------------------------

    fn leq_raw(&self, i: usize, j: usize) -> bool {
        match &self.backend {
            Backend::Table(t) => t.leq[i][j],
            Backend::IdealMonoid(f) => f.le(i, j),
            _ => self.divides_raw(i, j),
        }
    }

    /// Declared partial order (divisibility for all catalog backends).
    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        if let Some(up) = &self.up {
            up.get(i, j)
        } else {
            self.leq_raw(i, j)
        }
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool, MonoidError> {
        let i = self.validate(a)?;
        let j = self.validate(b)?;
        Ok(self.leq_idx(i, j))
    }

    /// Divisibility: does some x in the monoid satisfy a + x = b?
    pub fn divides(&self, a: &Element, b: &Element) -> Result<bool, MonoidError> {
        let i = self.validate(a)?;
        let j = self.validate(b)?;
        Ok(self.divides_idx(i, j))
    }

    pub fn divides_idx(&self, i: usize, j: usize) -> bool {
        self.divides_raw(i, j)
    }

    fn divides_raw(&self, i: usize, j: usize) -> bool {
        match &self.backend {
            Backend::NaturalAdd => {
                let (Element::Nat(x), Element::Nat(y)) = (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                x <= y
            }
            Backend::NumericalSemigroup { member, .. } => {
                let (Element::Nat(x), Element::Nat(y)) = (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                x <= y && member[(y - x) as usize]
            }
            Backend::BlockMonoid { .. } => {
                let (Element::Multiset(x), Element::Multiset(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                multiset_contains(y, x)
            }
            Backend::FreeCommutative { .. } => {
                let (Element::Vector(x), Element::Vector(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                x.iter().zip(y).all(|(a, b)| a <= b)
            }
            Backend::PositiveIntegersMul => {
                let (Element::PosInt(x), Element::PosInt(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                y % x == 0
            }
            Backend::IdealMonoid(f) => {
                // honest divisibility: some window factor X with t(I·X) = J
                if f.le(i, j) {
                    // containment is necessary; search for an exact factor
                    (0..f.len()).any(|k| f.mul(i, k) == Some(j))
                } else {
                    false
                }
            }
            Backend::Table(t) => (0..self.elements.len()).any(|k| t.add[i][k] == Some(j)),
        }
    }

    /// The x with a + x = b, when a divides b. Unique in cancellative
    /// instances; otherwise the canonically first witness.
    pub fn witness(&self, a: &Element, b: &Element) -> Result<Option<Element>, MonoidError> {
        let i = self.validate(a)?;
        let j = self.validate(b)?;
        Ok(self.witness_idx(i, j).map(|k| self.elements[k].clone()))
    }

    pub fn witness_idx(&self, i: usize, j: usize) -> Option<usize> {
        match &self.backend {
            Backend::NaturalAdd => {
                let (Element::Nat(x), Element::Nat(y)) = (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                if x <= y {
                    self.index_of(&Element::Nat(y - x))
                } else {
                    None
                }
            }
            Backend::NumericalSemigroup { member, .. } => {
                let (Element::Nat(x), Element::Nat(y)) = (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                if x <= y && member[(y - x) as usize] {
                    self.index_of(&Element::Nat(y - x))
                } else {
                    None
                }
            }
            Backend::BlockMonoid { .. } => {
                let (Element::Multiset(x), Element::Multiset(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                multiset_difference(y, x).and_then(|d| self.index_of(&Element::Multiset(d)))
            }
            Backend::FreeCommutative { .. } => {
                let (Element::Vector(x), Element::Vector(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                if x.iter().zip(y).all(|(a, b)| a <= b) {
                    let d: Vec<u32> = y.iter().zip(x).map(|(b, a)| b - a).collect();
                    self.index_of(&Element::Vector(d))
                } else {
                    None
                }
            }
            Backend::PositiveIntegersMul => {
                let (Element::PosInt(x), Element::PosInt(y)) =
                    (&self.elements[i], &self.elements[j])
                else {
                    unreachable!()
                };
                if y % x == 0 {
                    self.index_of(&Element::PosInt(y / x))
                } else {
                    None
                }
            }
            _ => (0..self.elements.len()).find(|&k| self.add_idx(i, k) == Some(j)),
        }
    }

    /// Indices ≤ i in the declared order.
    pub fn lower_set_idx(&self, i: usize) -> Vec<usize> {
        if let Some(down) = &self.down {
            down.row_indices(i)
        } else {
            (0..self.elements.len()).filter(|&j| self.leq_raw(j, i)).collect()
        }
    }

    pub fn upper_set_idx(&self, i: usize) -> Vec<usize> {
        if let Some(up) = &self.up {
            up.row_indices(i)
        } else {
            (0..self.elements.len()).filter(|&j| self.leq_raw(i, j)).collect()
        }
    }

    /// Row of elements below i, as a bit row (dense windows only).
    pub fn down_row(&self, i: usize) -> Option<&[u64]> {
        self.down.as_ref().map(|m| m.row(i))
    }

    pub fn up_row(&self, i: usize) -> Option<&[u64]> {
        self.up.as_ref().map(|m| m.row(i))
    }

    /// All ordered pairs (i, j) with i + j = k.
    pub fn sum_pairs_idx(&self, k: usize) -> Vec<(usize, usize)> {
        match &self.backend {
            Backend::NaturalAdd => {
                let Element::Nat(z) = self.elements[k] else { unreachable!() };
                (0..=z)
                    .map(|x| {
                        (
                            self.index_of(&Element::Nat(x)).unwrap(),
                            self.index_of(&Element::Nat(z - x)).unwrap(),
                        )
                    })
                    .collect()
            }
            Backend::NumericalSemigroup { member, .. } => {
                let Element::Nat(z) = self.elements[k] else { unreachable!() };
                (0..=z)
                    .filter(|&x| member[x as usize] && member[(z - x) as usize])
                    .map(|x| {
                        (
                            self.index_of(&Element::Nat(x)).unwrap(),
                            self.index_of(&Element::Nat(z - x)).unwrap(),
                        )
                    })
                    .collect()
            }
            Backend::PositiveIntegersMul => {
                let Element::PosInt(z) = self.elements[k] else { unreachable!() };
                let mut out = Vec::new();
                let mut d = 1;
                while d * d <= z {
                    if z % d == 0 {
                        let i = self.index_of(&Element::PosInt(d)).unwrap();
                        let j = self.index_of(&Element::PosInt(z / d)).unwrap();
                        out.push((i, j));
                        if d != z / d {
                            out.push((j, i));
                        }
                    }
                    d += 1;
                }
                out.sort_unstable();
                out
            }
            _ => {
                let map = self.sum_pairs.get_or_init(|| {
                    let n = self.elements.len();
                    if n > DENSE_LIMIT {
                        return None;
                    }
                    let mut map: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
                    for i in 0..n {
                        for j in 0..n {
                            if let Some(s) = self.add_idx(i, j) {
                                map[s].push((i as u32, j as u32));
                            }
                        }
                    }
                    Some(map)
                });
                match map {
                    Some(m) => m[k].iter().map(|&(a, b)| (a as usize, b as usize)).collect(),
                    None => (0..self.elements.len())
                        .flat_map(|i| {
                            (0..self.elements.len())
                                .filter(move |&j| self.add_idx(i, j) == Some(k))
                                .map(move |j| (i, j))
                        })
                        .collect(),
                }
            }
        }
    }

    /// Ordered pairs whose sum leaves the window.
    pub fn out_of_window_pair_count(&self) -> u64 {
        *self.escaping_pairs.get_or_init(|| {
            let n = self.len() as u64;
            let mut in_window = 0u64;
            for k in 0..self.len() {
                in_window += self.sum_pairs_idx(k).len() as u64;
            }
            n * n - in_window
        })
    }

    // ---- window-bounded lattice operations ------------------------------

    /// All window elements below every member of xs (complete for backends
    /// with bounded lower sets, which covers the whole catalog).
    pub fn common_lower_bounds(&self, xs: &[Element]) -> Result<Vec<Element>, MonoidError> {
        if xs.is_empty() {
            return Err(MonoidError::PreconditionUnmet("empty element set".into()));
        }
        let idxs: Vec<usize> = xs.iter().map(|x| self.validate(x)).collect::<Result<_, _>>()?;
        Ok(self
            .common_lower_bound_idxs(&idxs)
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect())
    }

    pub fn common_lower_bound_idxs(&self, idxs: &[usize]) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&z| idxs.iter().all(|&x| self.leq_idx(z, x)))
            .collect()
    }

    /// The greatest lower bound, when one exists: the unique common lower
    /// bound dominating every other.
    pub fn glb(&self, xs: &[Element]) -> Result<Option<Element>, MonoidError> {
        let idxs: Vec<usize> = xs.iter().map(|x| self.validate(x)).collect::<Result<_, _>>()?;
        Ok(self.glb_idx(&idxs).map(|i| self.elements[i].clone()))
    }

    pub fn glb_idx(&self, idxs: &[usize]) -> Option<usize> {
        let clb = self.common_lower_bound_idxs(idxs);
        clb.iter().copied().find(|&g| clb.iter().all(|&z| self.leq_idx(z, g)))
    }

    /// Minimal elements of the in-window upper set of {a, b}. Inconclusive
    /// when a + b leaves the window, since the candidate set can no longer
    /// be certified complete.
    pub fn minimal_upper_bounds(
        &self,
        a: &Element,
        b: &Element,
    ) -> Result<MubOutcome, MonoidError> {
        let i = self.validate(a)?;
        let j = self.validate(b)?;
        if self.add_idx(i, j).is_none() {
            return Ok(MubOutcome::WindowInconclusive);
        }
        let ubs: Vec<usize> = (0..self.elements.len())
            .filter(|&z| self.leq_idx(i, z) && self.leq_idx(j, z))
            .collect();
        let minimal: Vec<Element> = ubs
            .iter()
            .filter(|&&z| !ubs.iter().any(|&w| w != z && self.leq_idx(w, z)))
            .map(|&z| self.elements[z].clone())
            .collect();
        Ok(MubOutcome::Set(minimal))
    }

    // ---- structural checks ----------------------------------------------

    /// Cancellativity over all window triples whose sums stay in window.
    pub fn check_cancellative(&self) -> Verdict {
        self.cancellative
            .get_or_init(|| {
                let n = self.elements.len();
                let full = n <= FULL_ASSOC_LIMIT * 2;
                let stride = if full { 1 } else { (n / 128).max(1) };
                let mut checked = 0u64;
                let mut unchecked = 0u64;
                for a in (0..n).step_by(stride) {
                    let mut seen: HashMap<usize, usize> = HashMap::new();
                    for b in 0..n {
                        match self.add_idx(a, b) {
                            Some(s) => {
                                checked += 1;
                                if let Some(&prev) = seen.get(&s) {
                                    return Verdict::fails(
                                        vec![
                                            self.elements[a].clone(),
                                            self.elements[prev].clone(),
                                            self.elements[b].clone(),
                                        ],
                                        checked,
                                        unchecked,
                                    );
                                }
                                seen.insert(s, b);
                            }
                            None => unchecked += 1,
                        }
                    }
                }
                Verdict::holds(checked, unchecked)
            })
            .clone()
    }

    /// Conic: no two non-identity elements sum to the identity.
    pub fn check_conic(&self) -> Verdict {
        self.conic
            .get_or_init(|| {
                let n = self.elements.len();
                let mut checked = 0u64;
                for a in 0..n {
                    if a == self.identity {
                        continue;
                    }
                    for b in a..n {
                        if b == self.identity {
                            continue;
                        }
                        checked += 1;
                        if self.add_idx(a, b) == Some(self.identity) {
                            return Verdict::fails(
                                vec![self.elements[a].clone(), self.elements[b].clone()],
                                checked,
                                0,
                            );
                        }
                    }
                }
                Verdict::holds(checked, 0)
            })
            .clone()
    }

    /// Does the declared order coincide with divisibility on the window?
    pub fn check_divisibility_order(&self) -> Verdict {
        let n = self.elements.len();
        let dense = n <= DENSE_LIMIT;
        let stride = if dense { 1 } else { (n / 256).max(1) };
        let mut checked = 0u64;
        for i in (0..n).step_by(stride) {
            for j in (0..n).step_by(stride) {
                checked += 1;
                if self.leq_idx(i, j) != self.divides_raw(i, j) {
                    return Verdict::fails(
                        vec![self.elements[i].clone(), self.elements[j].clone()],
                        checked,
                        0,
                    );
                }
            }
        }
        Verdict::holds(checked, 0)
    }

    /// Antisymmetry of divisibility on the window.
    pub fn check_antisymmetry(&self) -> Verdict {
        let n = self.elements.len();
        let stride = if n <= DENSE_LIMIT { 1 } else { (n / 256).max(1) };
        let mut checked = 0u64;
        for i in (0..n).step_by(stride) {
            for j in (i + 1..n).step_by(stride) {
                checked += 1;
                if self.divides_raw(i, j) && self.divides_raw(j, i) {
                    return Verdict::fails(
                        vec![self.elements[i].clone(), self.elements[j].clone()],
                        checked,
                        0,
                    );
                }
            }
        }
        Verdict::holds(checked, 0)
    }

    fn verify_structure(&self) -> Result<(), MonoidError> {
        let n = self.elements.len();
        // identity law, all elements
        for i in 0..n {
            if self.add_idx(self.identity, i) != Some(i) || self.add_idx(i, self.identity) != Some(i)
            {
                return Err(MonoidError::Invariant(format!(
                    "identity law fails at {}",
                    self.elements[i]
                )));
            }
        }
        // commutativity
        let comm_stride = if n <= FULL_COMM_LIMIT { 1 } else { (n / 1000).max(1) };
        for i in (0..n).step_by(comm_stride) {
            for j in (i..n).step_by(comm_stride) {
                if self.add_idx(i, j) != self.add_idx(j, i) {
                    return Err(MonoidError::Invariant(format!(
                        "addition is not commutative at ({}, {})",
                        self.elements[i], self.elements[j]
                    )));
                }
            }
        }
        // associativity
        let assoc_stride = if n <= FULL_ASSOC_LIMIT { 1 } else { (n / 64).max(1) };
        for i in (0..n).step_by(assoc_stride) {
            for j in (0..n).step_by(assoc_stride) {
                for k in (0..n).step_by(assoc_stride) {
                    let left = self.add_idx(i, j).and_then(|s| self.add_idx(s, k));
                    let right = self.add_idx(j, k).and_then(|s| self.add_idx(i, s));
                    if let (Some(l), Some(r)) = (left, right) {
                        if l != r {
                            return Err(MonoidError::Invariant(format!(
                                "addition is not associative at ({}, {}, {})",
                                self.elements[i], self.elements[j], self.elements[k]
                            )));
                        }
                    }
                }
            }
        }
        // declared order: reflexive and transitive on the window
        if let (Some(up), true) = (&self.up, n <= DENSE_LIMIT) {
            for i in 0..n {
                if !up.get(i, i) {
                    return Err(MonoidError::Invariant(format!(
                        "order is not reflexive at {}",
                        self.elements[i]
                    )));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if up.get(i, j) && !up.row_subset(j, i) {
                        return Err(MonoidError::Invariant(format!(
                            "order is not transitive through ({}, {})",
                            self.elements[i], self.elements[j]
                        )));
                    }
                }
            }
        }
        // catalog backends declare divisibility, which is antisymmetric
        if !matches!(self.backend, Backend::Table(_)) && n <= DENSE_LIMIT {
            if let crate::verdict::Status::FailsWith(w) = self.check_antisymmetry().status {
                return Err(MonoidError::Invariant(format!(
                    "divisibility is not antisymmetric: {} and {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    // ---- rendering -------------------------------------------------------

    pub fn render_element(&self, e: &Element) -> String {
        match (&self.backend, e) {
            (Backend::NaturalAdd, Element::Nat(v)) => format!("NAT:{v}"),
            (Backend::NumericalSemigroup { .. }, Element::Nat(v)) => format!("NS:{v}"),
            (Backend::BlockMonoid { modulus }, Element::Multiset(_)) => {
                format!("BM{modulus}:{e}")
            }
            (Backend::FreeCommutative { .. }, Element::Vector(_)) => format!("FC:{e}"),
            (Backend::PositiveIntegersMul, Element::PosInt(v)) => format!("PM:{v}"),
            (Backend::IdealMonoid(f), Element::Ideal(i)) => format!("IM:{}", f.render(*i)),
            (Backend::Table(t), Element::Table(i)) => format!("TB:{}", t.names[*i]),
            _ => e.to_string(),
        }
    }

    /// Parse an element from its canonical rendering or a bare payload.
    pub fn parse_element(&self, s: &str) -> Result<Element, MonoidError> {
        let body = s
            .split_once(':')
            .map(|(_, b)| b)
            .unwrap_or(s)
            .trim();
        let parsed = match &self.backend {
            Backend::NaturalAdd | Backend::NumericalSemigroup { .. } => body
                .parse::<u64>()
                .map(Element::Nat)
                .map_err(|_| MonoidError::Schema(format!("bad natural: {body}")))?,
            Backend::PositiveIntegersMul => body
                .parse::<u64>()
                .map(Element::PosInt)
                .map_err(|_| MonoidError::Schema(format!("bad positive integer: {body}")))?,
            Backend::FreeCommutative { .. } => {
                let inner = body
                    .strip_prefix('(')
                    .and_then(|b| b.strip_suffix(')'))
                    .ok_or_else(|| MonoidError::Schema(format!("bad vector: {body}")))?;
                let v: Result<Vec<u32>, _> =
                    inner.split(',').map(|p| p.trim().parse::<u32>()).collect();
                Element::Vector(v.map_err(|_| MonoidError::Schema(format!("bad vector: {body}")))?)
            }
            Backend::BlockMonoid { .. } => {
                let inner = body
                    .strip_prefix('[')
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| MonoidError::Schema(format!("bad multiset: {body}")))?;
                let v: Vec<u32> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|p| p.trim().parse::<u32>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| MonoidError::Schema(format!("bad multiset: {body}")))?
                };
                let mut v = v;
                v.sort_unstable();
                Element::Multiset(v)
            }
            Backend::IdealMonoid(f) => {
                if body == "R" {
                    Element::Ideal(0)
                } else {
                    let inner = body
                        .strip_prefix('(')
                        .and_then(|b| b.strip_suffix(')'))
                        .ok_or_else(|| MonoidError::Schema(format!("bad ideal: {body}")))?;
                    let parts: Vec<i64> = inner
                        .split(',')
                        .map(|p| p.trim().parse::<i64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| MonoidError::Schema(format!("bad ideal: {body}")))?;
                    if parts.len() != 3 {
                        return Err(MonoidError::Schema(format!("ideal needs (a,b,c): {body}")));
                    }
                    let ideal = crate::ideal::FractionalIdeal::from_rows(
                        f.ring(),
                        parts[0],
                        parts[1],
                        parts[2],
                        1,
                    )
                    .map_err(|e| MonoidError::Schema(e.to_string()))?;
                    Element::Ideal(
                        f.index_of(&ideal)
                            .ok_or_else(|| MonoidError::InvalidElement(body.to_string()))?,
                    )
                }
            }
            Backend::Table(t) => {
                let i = t
                    .names
                    .iter()
                    .position(|n| n == body)
                    .ok_or_else(|| MonoidError::InvalidElement(body.to_string()))?;
                Element::Table(i)
            }
        };
        self.validate(&parsed)?;
        Ok(parsed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MubOutcome {
    Set(Vec<Element>),
    WindowInconclusive,
}

fn multiset_contains(big: &[u32], small: &[u32]) -> bool {
    let mut it = big.iter();
    'outer: for s in small {
        for b in it.by_ref() {
            match b.cmp(s) {
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => {}
            }
        }
        return false;
    }
    true
}

fn multiset_difference(big: &[u32], small: &[u32]) -> Option<Vec<u32>> {
    let mut out = Vec::with_capacity(big.len() - small.len().min(big.len()));
    let mut si = 0;
    for &b in big {
        if si < small.len() && small[si] == b {
            si += 1;
        } else {
            out.push(b);
        }
    }
    if si == small.len() {
        Some(out)
    } else {
        None
    }
}

// ---- enumeration ---------------------------------------------------------

fn enumerate(backend: &Backend, window: Window) -> Result<Vec<Element>, MonoidError> {
    let cap = window.size_bound;
    Ok(match backend {
        Backend::NaturalAdd => (0..=cap).map(Element::Nat).collect(),
        Backend::NumericalSemigroup { member, .. } => (0..=cap)
            .filter(|&v| member[v as usize])
            .map(Element::Nat)
            .collect(),
        Backend::PositiveIntegersMul => {
            if cap < 1 {
                return Err(MonoidError::Invariant("multiplicative window needs cap >= 1".into()));
            }
            (1..=cap).map(Element::PosInt).collect()
        }
        Backend::FreeCommutative { rank } => {
            let mut out = Vec::new();
            for total in 0..=cap as u32 {
                let mut v = vec![0u32; *rank];
                compositions(&mut v, 0, total, &mut out);
            }
            out
        }
        Backend::BlockMonoid { modulus } => {
            let mut out = Vec::new();
            for len in 0..=cap as usize {
                let mut v = Vec::with_capacity(len);
                zero_sum_multisets(*modulus, len, 0, &mut v, &mut out);
            }
            out
        }
        Backend::IdealMonoid(f) => (0..f.len()).map(Element::Ideal).collect(),
        Backend::Table(t) => (0..t.names.len()).map(Element::Table).collect(),
    })
}

fn compositions(v: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Element>) {
    if pos + 1 == v.len() {
        v[pos] = remaining;
        out.push(Element::Vector(v.clone()));
        return;
    }
    for x in 0..=remaining {
        v[pos] = x;
        compositions(v, pos + 1, remaining - x, out);
    }
}

fn zero_sum_multisets(n: u32, len: usize, min: u32, v: &mut Vec<u32>, out: &mut Vec<Element>) {
    if v.len() == len {
        let sum: u32 = v.iter().sum();
        if sum % n == 0 {
            out.push(Element::Multiset(v.clone()));
        }
        return;
    }
    for r in min..n {
        v.push(r);
        zero_sum_multisets(n, len, r, v, out);
        v.pop();
    }
}

// ---- document loading ----------------------------------------------------

/// JSON monoid description. Examples:
/// `{"backend": "numerical_semigroup", "generators": [2,3], "window": 40}`
/// `{"backend": "table", "elements": ["0","a"], "add": [[0,1],[1,null]],
///   "leq": [[true,true],[false,true]], "window": 2}`
#[derive(Debug, Deserialize)]
#[serde(tag = "backend", rename_all = "snake_case", deny_unknown_fields)]
pub enum MonoidSpecDocument {
    NaturalAdd { window: u64 },
    NumericalSemigroup { generators: Vec<u64>, window: u64 },
    BlockMonoid { modulus: u32, window: u64 },
    FreeCommutative { rank: usize, window: u64 },
    PositiveMul { window: u64 },
    Table {
        elements: Vec<String>,
        add: Vec<Vec<Option<usize>>>,
        leq: Vec<Vec<bool>>,
        #[serde(default)]
        window: Option<u64>,
    },
}

/// Build an instance from a parsed document, verifying structural
/// invariants on the window.
pub fn load_monoid(id: String, doc: MonoidSpecDocument) -> Result<MonoidInstance, MonoidError> {
    match doc {
        MonoidSpecDocument::NaturalAdd { window } => {
            MonoidInstance::new(id, Backend::NaturalAdd, Window { size_bound: window })
        }
        MonoidSpecDocument::NumericalSemigroup { generators, window } => {
            let backend = numerical_semigroup_backend(&generators, window)?;
            MonoidInstance::new(id, backend, Window { size_bound: window })
        }
        MonoidSpecDocument::BlockMonoid { modulus, window } => {
            if modulus < 2 {
                return Err(MonoidError::Schema("block monoid needs modulus >= 2".into()));
            }
            MonoidInstance::new(id, Backend::BlockMonoid { modulus }, Window { size_bound: window })
        }
        MonoidSpecDocument::FreeCommutative { rank, window } => {
            if rank < 1 {
                return Err(MonoidError::Schema("free commutative monoid needs rank >= 1".into()));
            }
            MonoidInstance::new(id, Backend::FreeCommutative { rank }, Window { size_bound: window })
        }
        MonoidSpecDocument::PositiveMul { window } => {
            MonoidInstance::new(id, Backend::PositiveIntegersMul, Window { size_bound: window })
        }
        MonoidSpecDocument::Table { elements, add, leq, window } => {
            let n = elements.len();
            if n == 0 {
                return Err(MonoidError::Schema("table needs at least one element".into()));
            }
            if let Some(w) = window {
                if w as usize != n {
                    return Err(MonoidError::Schema(format!(
                        "table window {w} disagrees with {n} listed elements"
                    )));
                }
            }
            if add.len() != n || add.iter().any(|r| r.len() != n) {
                return Err(MonoidError::Schema("add table must be n x n".into()));
            }
            if leq.len() != n || leq.iter().any(|r| r.len() != n) {
                return Err(MonoidError::Schema("leq table must be n x n".into()));
            }
            if let Some(bad) = add.iter().flatten().flatten().find(|&&i| i >= n) {
                return Err(MonoidError::Schema(format!("add table index {bad} out of range")));
            }
            MonoidInstance::new(
                id,
                Backend::Table(TableData { names: elements, add, leq }),
                Window { size_bound: n as u64 },
            )
        }
    }
}

pub fn load_monoid_json(id: String, json: &str) -> Result<MonoidInstance, MonoidError> {
    let doc: MonoidSpecDocument =
        serde_json::from_str(json).map_err(|e| MonoidError::Schema(e.to_string()))?;
    load_monoid(id, doc)
}

pub fn numerical_semigroup_backend(
    generators: &[u64],
    window: u64,
) -> Result<Backend, MonoidError> {
    if generators.is_empty() || generators.contains(&0) {
        return Err(MonoidError::Schema("generators must be positive".into()));
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let gcd = gens.iter().fold(0u64, |acc, &g| num_integer::gcd(acc, g));
    // membership table covers twice the window so group-of-differences
    // comparisons of in-window elements stay decidable
    let table_len = (2 * window + 1) as usize;
    let mut member = vec![false; table_len];
    member[0] = true;
    for i in 1..table_len {
        member[i] = gens.iter().any(|&g| i as u64 >= g && member[i - g as usize]);
    }
    Ok(Backend::NumericalSemigroup { generators: gens, gcd, member })
}
