//! Machine-readable analysis reports.
//!
//! Reports are byte-stable across runs for the same inputs and version,
//! except for the `elapsed_ms` timing fields; comparisons should normalize
//! those to zero first (see [`normalized`]).

use crate::element::Element;
use crate::monoid::MonoidInstance;
use crate::verdict::{Status, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    /// Plain-language statement of the property being checked.
    pub statement: String,
    /// "holds" | "fails" | "inconclusive"
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub checked: u64,
    pub unchecked: u64,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn from_verdict(
        name: &str,
        statement: &str,
        v: &Verdict,
        m: &MonoidInstance,
        elapsed_ms: u64,
    ) -> Self {
        let (verdict, witness, reason) = match &v.status {
            Status::Holds => ("holds".to_string(), None, None),
            Status::FailsWith(w) => (
                "fails".to_string(),
                Some(w.iter().map(|e| m.render_element(e)).collect()),
                None,
            ),
            Status::WindowInconclusive(r) => {
                ("inconclusive".to_string(), None, Some(r.clone()))
            }
        };
        CheckResult {
            name: name.to_string(),
            statement: statement.to_string(),
            verdict,
            witness,
            reason,
            checked: v.checked,
            unchecked: v.unchecked,
            elapsed_ms,
        }
    }

    pub fn plain(name: &str, statement: &str, ok: bool, elapsed_ms: u64) -> Self {
        CheckResult {
            name: name.to_string(),
            statement: statement.to_string(),
            verdict: if ok { "holds" } else { "fails" }.to_string(),
            witness: None,
            reason: None,
            checked: 1,
            unchecked: 0,
            elapsed_ms,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == "holds"
    }

    pub fn fails(&self) -> bool {
        self.verdict == "fails"
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AnalysisReport {
    pub instance_id: String,
    pub window: String,
    pub checks: Vec<CheckResult>,
    /// Broken equivalence contracts; always fatal for the front end.
    pub suite_failures: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn any_failure(&self) -> bool {
        self.checks.iter().any(|c| c.fails())
    }

    /// Copy with timing normalized to zero, for byte-stable comparisons.
    pub fn normalized(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }
}

/// Re-verify a failure witness against its defining predicate on reload.
/// Returns `None` for checks without a registered re-verifier.
pub fn reverify_witness(
    m: &MonoidInstance,
    check_name: &str,
    witness: &[String],
) -> Option<Result<bool, String>> {
    let parse = |s: &String| m.parse_element(s).map_err(|e| e.to_string());
    let els: Result<Vec<Element>, String> = witness.iter().map(parse).collect();
    let els = match els {
        Ok(v) => v,
        Err(e) => return Some(Err(e)),
    };
    let err = |e: crate::monoid::MonoidError| e.to_string();
    let ok: Result<bool, String> = match (check_name, els.as_slice()) {
        ("all_primal", [x]) => {
            crate::order::is_primal(m, x).map(|v| v.failed()).map_err(err)
        }
        ("cancellative", [a, b, c]) => (|| {
            let l = m.add(a, b).map_err(err)?;
            let r = m.add(a, c).map_err(err)?;
            Ok(l == r && b != c)
        })(),
        ("conic", [a, b]) => (|| {
            let s = m.add(a, b).map_err(err)?;
            Ok(s == crate::monoid::SumOutcome::Element(m.identity().clone()))
        })(),
        ("divisibility_order", [a, b]) => (|| {
            let leq = m.leq(a, b).map_err(err)?;
            let div = m.divides(a, b).map_err(err)?;
            Ok(leq != div)
        })(),
        ("antisymmetry", [a, b]) => (|| {
            Ok(m.divides(a, b).map_err(err)? && m.divides(b, a).map_err(err)? && a != b)
        })(),
        ("interpolation_2_2", [a, b, x, y]) => {
            crate::riesz::interpolate_22(m, a, b, x, y, crate::riesz::Mode::Search)
                .map(|o| !o.found())
                .map_err(err)
        }
        ("pre_riesz", ws) if !ws.is_empty() => {
            // tuple with no common lower bound at all
            m.common_lower_bounds(ws).map(|clb| clb.is_empty()).map_err(err)
        }
        ("rigid_implies_homogeneous", [x]) => (|| {
            Ok(crate::order::is_rigid(m, x).map_err(err)?.holds_true()
                && !crate::order::is_homogeneous(m, x).map_err(err)?.holds_true())
        })(),
        ("disjoint_sum_least", [a, b]) => (|| {
            let (ai, bi) = (m.validate(a).map_err(err)?, m.validate(b).map_err(err)?);
            crate::order::disjoint_sum_raw(m, ai, bi)
                .map(|rep| !rep.least_reading)
                .map_err(err)
        })(),
        ("disjoint_sum_minimal", [a, b]) => (|| {
            let (ai, bi) = (m.validate(a).map_err(err)?, m.validate(b).map_err(err)?);
            crate::order::disjoint_sum_raw(m, ai, bi)
                .map(|rep| !rep.minimal_reading)
                .map_err(err)
        })(),
        _ => return None,
    };
    Some(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{load_monoid, MonoidSpecDocument};

    #[test]
    fn report_round_trips() {
        let r = AnalysisReport {
            instance_id: "ns:2,3".into(),
            window: "40".into(),
            checks: vec![CheckResult {
                name: "all_primal".into(),
                statement: "every element is primal".into(),
                verdict: "fails".into(),
                witness: Some(vec!["NS:2".into()]),
                reason: None,
                checked: 40,
                unchecked: 3,
                elapsed_ms: 17,
            }],
            suite_failures: vec![],
        };
        let back = AnalysisReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.normalized().checks[0].elapsed_ms, 0);
    }

    #[test]
    fn witnesses_reverify_on_reload() {
        let m = load_monoid(
            "ns:2,3".into(),
            MonoidSpecDocument::NumericalSemigroup { generators: vec![2, 3], window: 40 },
        )
        .unwrap();
        let ok = reverify_witness(&m, "all_primal", &["NS:2".into()]).unwrap().unwrap();
        assert!(ok);
        let ok = reverify_witness(
            &m,
            "interpolation_2_2",
            &["NS:2".into(), "NS:3".into(), "NS:5".into(), "NS:6".into()],
        )
        .unwrap()
        .unwrap();
        assert!(ok);
        // a bogus witness re-verifies to false
        let ok = reverify_witness(&m, "all_primal", &["NS:0".into()]).unwrap().unwrap();
        assert!(!ok);
    }
}
