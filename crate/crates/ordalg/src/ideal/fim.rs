//! The finite-ideal monoid: proper integral t-ideals of finite type under
//! t-multiplication, ordered by reverse containment, exported as a monoid
//! backend for the order-analysis machinery.

use super::primes::ideals_of_norm_at_most;
use super::principal::principal_generator;
use super::{FractionalIdeal, IdealError, QuadraticRing};
use crate::verdict::Verdict;
use std::collections::HashMap;

/// Window-bounded monoid of t-ideals. Index 0 is the ring (the identity);
/// the proper ideals follow in canonical order. Immutable after
/// construction; the product and order tables are precomputed.
#[derive(Clone, Debug)]
pub struct IdealMonoid {
    ring: QuadraticRing,
    bound: i64,
    ideals: Vec<FractionalIdeal>,
    index: HashMap<(i64, i64, i64), usize>,
    products: Vec<Vec<Option<usize>>>,
    /// `le[i][j]`: ideal i contains ideal j (i ≤ j in the monoid order).
    le: Vec<Vec<bool>>,
}

impl IdealMonoid {
    fn build(
        ring: QuadraticRing,
        bound: i64,
        members: Vec<FractionalIdeal>,
    ) -> Result<Self, IdealError> {
        let mut ideals = vec![FractionalIdeal::unit(ring)];
        ideals.extend(members.into_iter().filter(|i| !i.is_unit_ideal()));
        let mut index = HashMap::new();
        for (k, i) in ideals.iter().enumerate() {
            let ((a, _), (b, c)) = i.rows();
            index.insert((a, b, c), k);
        }
        let n = ideals.len();
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                le[i][j] = ideals[i].contains_ideal(&ideals[j]);
            }
        }
        let mut products = vec![vec![None; n]; n];
        for i in 0..n {
            for j in i..n {
                let p = ideals[i].multiply(&ideals[j])?.t_closure()?;
                let ((a, _), (b, c)) = p.rows();
                let k = index.get(&(a, b, c)).copied();
                products[i][j] = k;
                products[j][i] = k;
            }
        }
        Ok(IdealMonoid { ring, bound, ideals, index, products, le })
    }

    pub fn ring(&self) -> QuadraticRing {
        self.ring
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideal(&self, i: usize) -> &FractionalIdeal {
        &self.ideals[i]
    }

    pub fn ideals(&self) -> &[FractionalIdeal] {
        &self.ideals
    }

    pub fn index_of(&self, i: &FractionalIdeal) -> Option<usize> {
        if !i.is_integral() {
            return None;
        }
        let ((a, _), (b, c)) = i.rows();
        self.index.get(&(a, b, c)).copied()
    }

    /// t-product; `None` when the result's norm exceeds the window bound.
    pub fn mul(&self, i: usize, j: usize) -> Option<usize> {
        self.products[i][j]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    pub fn render(&self, i: usize) -> String {
        self.ideals[i].render()
    }

    /// The monoid meet: the t-closure of the ideal sum realizes inf(H, K).
    /// Verified for every in-window pair.
    fn verify_meet_law(&self) -> Result<(), IdealError> {
        let n = self.ideals.len();
        for i in 1..n {
            for j in i..n {
                let meet = self.ideals[i].add_sum(&self.ideals[j])?.t_closure()?;
                let k = self
                    .index_of(&meet)
                    .ok_or_else(|| IdealError::Invariant("meet escaped the window".into()))?;
                // meet is a lower bound
                if !(self.le(k, i) && self.le(k, j)) {
                    return Err(IdealError::Invariant(format!(
                        "t-sum {} is not below {} and {}",
                        meet.render(),
                        self.render(i),
                        self.render(j)
                    )));
                }
                // every lower bound lies below the meet
                for l in 0..n {
                    if self.le(l, i) && self.le(l, j) && !self.le(l, k) {
                        return Err(IdealError::Invariant(format!(
                            "lower bound {} of ({}, {}) does not precede the t-sum {}",
                            self.render(l),
                            self.render(i),
                            self.render(j),
                            meet.render()
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The monoid of proper integral t-ideals of finite type with norm ≤ bound,
/// plus the ring as identity, under t-multiplication, ordered by reverse
/// containment. The meet law inf(H, K) = t(H + K) is checked on export.
pub fn export_star_fim(ring: QuadraticRing, bound: i64) -> Result<IdealMonoid, IdealError> {
    let members: Vec<FractionalIdeal> = ideals_of_norm_at_most(ring, bound)?
        .into_iter()
        .filter(|i| i.t_closure().map(|t| &t == i).unwrap_or(false))
        .collect();
    let m = IdealMonoid::build(ring, bound, members)?;
    m.verify_meet_law()?;
    Ok(m)
}

/// The sub-monoid of t-invertible t-ideals with norm ≤ bound.
pub fn invertible_fim(ring: QuadraticRing, bound: i64) -> Result<IdealMonoid, IdealError> {
    let members: Vec<FractionalIdeal> = ideals_of_norm_at_most(ring, bound)?
        .into_iter()
        .filter(|i| i.t_closure().map(|t| &t == i).unwrap_or(false))
        .filter(|i| i.is_t_invertible().unwrap_or(false))
        .collect();
    IdealMonoid::build(ring, bound, members)
}

#[derive(Clone, Debug)]
pub struct SchreierReport {
    pub ring: String,
    pub bound: i64,
    pub members: usize,
    /// Primality of every member of the invertible-ideal monoid, computed by
    /// the order-analysis sweep on the exported adapter.
    pub all_primal: Verdict<FractionalIdeal>,
    pub all_principal: bool,
    pub non_principal_witness: Option<FractionalIdeal>,
    /// Principal-implies-primal consistency, asserted for maximal orders
    /// (where window-wide principality certifies unique factorization).
    /// `None` when not applicable.
    pub vx_consistent: Option<bool>,
}

/// Probe the monoid of integral t-invertible t-ideals: primality of each
/// member, principality of each member, and their consistency.
pub fn schreier_probe(ring: QuadraticRing, bound: i64) -> Result<SchreierReport, IdealError> {
    let fim = invertible_fim(ring, bound)?;
    let members = fim.len() - 1;

    let mut all_principal = true;
    let mut non_principal_witness = None;
    for i in 1..fim.len() {
        if !principal_generator(fim.ideal(i))?.is_principal() {
            all_principal = false;
            non_principal_witness = Some(fim.ideal(i).clone());
            break;
        }
    }

    let instance = crate::monoid::MonoidInstance::from_ideal_monoid(
        format!("schreier:{}", ring.describe()),
        fim.clone(),
    )
    .map_err(|e| IdealError::Invariant(format!("adapter rejected: {e}")))?;
    let mut all_primal = Verdict::holds(0, 0);
    let mut checked = 0;
    let mut unchecked = 0;
    for idx in 0..fim.len() {
        let v = crate::order::is_primal(&instance, &crate::Element::Ideal(idx))
            .map_err(|e| IdealError::Invariant(format!("primality sweep failed: {e}")))?;
        checked += v.checked;
        unchecked += v.unchecked;
        if v.failed() {
            all_primal = Verdict::fails(vec![fim.ideal(idx).clone()], checked, unchecked);
            break;
        }
    }
    if !all_primal.failed() {
        all_primal = Verdict::holds(checked, unchecked);
    }

    let vx_consistent = if ring.is_maximal() && all_principal {
        Some(all_primal.holds_true())
    } else {
        None
    };

    Ok(SchreierReport {
        ring: ring.describe(),
        bound,
        members,
        all_primal,
        all_principal,
        non_principal_witness,
        vx_consistent,
    })
}
