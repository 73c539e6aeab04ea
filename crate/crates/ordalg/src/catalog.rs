//! Built-in instances.

use crate::ideal::{export_star_fim, OrderForm, QuadraticRing};
use crate::monoid::{
    load_monoid, numerical_semigroup_backend, Backend, MonoidError, MonoidInstance,
    MonoidSpecDocument, Window,
};

pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub default_window: u64,
}

/// The six built-in instances.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "nat",
            description: "natural numbers under addition",
            default_window: 40,
        },
        CatalogEntry {
            id: "ns:2,3",
            description: "numerical semigroup <2,3>",
            default_window: 40,
        },
        CatalogEntry {
            id: "fc:2",
            description: "free commutative monoid of rank 2",
            default_window: 6,
        },
        CatalogEntry {
            id: "bm:3",
            description: "block monoid of zero-sum multisets mod 3",
            default_window: 9,
        },
        CatalogEntry {
            id: "posmul",
            description: "positive integers under multiplication",
            default_window: 50,
        },
        CatalogEntry {
            id: "fim:-5",
            description: "t-ideal monoid of Z[sqrt(-5)]",
            default_window: 36,
        },
    ]
}

/// Load an instance by id: a catalog id (with parameters, e.g. "ns:2,3,7",
/// "fc:3", "bm:4", "fim:-1") or "@path.json" for a document on disk.
pub fn load_instance(id: &str, window: Option<u64>) -> Result<MonoidInstance, MonoidError> {
    if let Some(path) = id.strip_prefix('@') {
        let json = std::fs::read_to_string(path)
            .map_err(|e| MonoidError::Schema(format!("cannot read {path}: {e}")))?;
        return crate::monoid::load_monoid_json(id.to_string(), &json);
    }
    let default = catalog().into_iter().find(|e| e.id == id).map(|e| e.default_window);
    let parts: Vec<&str> = id.splitn(2, ':').collect();
    match parts.as_slice() {
        ["nat"] => {
            let w = window.or(default).unwrap_or(40);
            load_monoid(id.into(), MonoidSpecDocument::NaturalAdd { window: w })
        }
        ["posmul"] => {
            let w = window.or(default).unwrap_or(50);
            load_monoid(id.into(), MonoidSpecDocument::PositiveMul { window: w })
        }
        ["ns", gens] => {
            let generators: Vec<u64> = gens
                .split(',')
                .map(|g| g.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|_| MonoidError::Schema(format!("bad generators: {gens}")))?;
            let w = window.or(default).unwrap_or(40);
            let backend = numerical_semigroup_backend(&generators, w)?;
            MonoidInstance::new(id.into(), backend, Window { size_bound: w })
        }
        ["fc", rank] => {
            let rank: usize = rank
                .parse()
                .map_err(|_| MonoidError::Schema(format!("bad rank: {rank}")))?;
            let w = window.or(default).unwrap_or(6);
            load_monoid(id.into(), MonoidSpecDocument::FreeCommutative { rank, window: w })
        }
        ["bm", modulus] => {
            let modulus: u32 = modulus
                .parse()
                .map_err(|_| MonoidError::Schema(format!("bad modulus: {modulus}")))?;
            let w = window.or(default).unwrap_or(9);
            load_monoid(id.into(), MonoidSpecDocument::BlockMonoid { modulus, window: w })
        }
        ["fim", d] => {
            let d: i64 =
                d.parse().map_err(|_| MonoidError::Schema(format!("bad discriminant base: {d}")))?;
            let ring = QuadraticRing::new(d, OrderForm::Maximal)
                .map_err(|e| MonoidError::Schema(e.to_string()))?;
            let w = window.or(default).unwrap_or(36);
            let fim = export_star_fim(ring, w as i64)
                .map_err(|e| MonoidError::Invariant(e.to_string()))?;
            MonoidInstance::from_ideal_monoid(id.into(), fim)
        }
        _ => Err(MonoidError::Schema(format!("unknown instance id: {id}"))),
    }
}

/// The five monoid-side acceptance instances (everything but the ideal
/// monoid), at their standard windows.
pub fn acceptance_instances() -> Vec<MonoidInstance> {
    ["nat", "fc:2", "posmul", "ns:2,3", "bm:3"]
        .iter()
        .map(|id| load_instance(id, None).expect("catalog instances load"))
        .collect()
}

pub fn backend_is_ideal(m: &MonoidInstance) -> bool {
    matches!(m.backend(), Backend::IdealMonoid(_))
}
