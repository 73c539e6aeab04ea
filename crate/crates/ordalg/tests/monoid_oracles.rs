//! Frozen expected values for monoid-core and order-analysis operations.
//! Every derived value here was first computed by the independent oracles
//! in `common` and is cross-checked against them at test time.

mod common;

use common::*;
use ordalg::catalog::load_instance;
use ordalg::monoid::{MubOutcome, SumOutcome};
use ordalg::order;
use ordalg::Element;

#[test]
fn ns_membership_agrees_with_coefficient_enumeration() {
    let m = load_instance("ns:2,3", None).unwrap();
    for n in 0..=40u64 {
        let in_window = m.index_of(&Element::Nat(n)).is_some();
        assert_eq!(in_window, ns_member_oracle(&[2, 3], n), "membership of {n}");
    }
    // window of <2,3> up to 40: everything except 1
    assert_eq!(m.len(), 40);
}

#[test]
fn ns_divides_examples_from_oracle() {
    let m = load_instance("ns:2,3", None).unwrap();
    // oracle: 4 - 2 = 2 is a member, 3 - 2 = 1 is not
    assert!(ns_member_oracle(&[2, 3], 2));
    assert!(!ns_member_oracle(&[2, 3], 1));
    assert!(m.divides(&Element::Nat(2), &Element::Nat(4)).unwrap());
    assert!(!m.divides(&Element::Nat(2), &Element::Nat(3)).unwrap());
    for e in m.elements() {
        assert!(m.divides(&Element::Nat(0), e).unwrap());
        assert_eq!(m.divides(&Element::Nat(2), e).unwrap(), divides_oracle(&m, &Element::Nat(2), e));
    }
}

#[test]
fn ns_lower_bound_scans_match_oracle() {
    let m = load_instance("ns:2,3", None).unwrap();
    let pairs: [(&[u64; 2], &[u64]); 2] = [(&[2, 3], &[0]), (&[5, 6], &[0, 2, 3])];
    for (xs, expect) in pairs {
        let xs: Vec<Element> = xs.iter().map(|&v| Element::Nat(v)).collect();
        let got = m.common_lower_bounds(&xs).unwrap();
        let expect: Vec<Element> = expect.iter().map(|&v| Element::Nat(v)).collect();
        assert_eq!(got, expect);
        assert_eq!(got, clb_oracle(&m, &xs));
    }
    assert_eq!(m.glb(&[Element::Nat(2), Element::Nat(3)]).unwrap(), Some(Element::Nat(0)));
    assert_eq!(m.glb(&[Element::Nat(5), Element::Nat(6)]).unwrap(), None);
}

#[test]
fn posmul_lattice_ops_are_gcd_lcm() {
    let m = load_instance("posmul", None).unwrap();
    for a in 1..=12u64 {
        for b in 1..=12u64 {
            let g = m.glb(&[Element::PosInt(a), Element::PosInt(b)]).unwrap();
            assert_eq!(g, Some(Element::PosInt(gcd(a, b))));
            let lcm = a / gcd(a, b) * b;
            match m.minimal_upper_bounds(&Element::PosInt(a), &Element::PosInt(b)).unwrap() {
                MubOutcome::Set(s) if lcm <= 50 => assert_eq!(s, vec![Element::PosInt(lcm)]),
                MubOutcome::Set(s) => assert!(s.is_empty() || s[0] != Element::PosInt(lcm)),
                MubOutcome::WindowInconclusive => assert!(a * b > 50),
            }
        }
    }
}

#[test]
fn block_monoid_enumeration_and_atoms_match_oracle() {
    let m = load_instance("bm:3", Some(3)).unwrap();
    let expect = block_elements_oracle(3, 3);
    let got: Vec<Vec<u32>> = m
        .elements()
        .iter()
        .map(|e| match e {
            Element::Multiset(v) => v.clone(),
            other => panic!("unexpected {other:?}"),
        })
        .collect();
    assert_eq!(got, expect);

    // atoms of the window: [0], [1,2], [1,1,1], [2,2,2]
    let atoms = block_atoms_oracle(3, 3);
    assert_eq!(
        atoms,
        vec![vec![0], vec![1, 2], vec![1, 1, 1], vec![2, 2, 2]]
    );
    // and they are exactly the elements with no nontrivial divisor pair
    for a in &atoms {
        let e = Element::Multiset(a.clone());
        let proper: Vec<&Element> = m
            .elements()
            .iter()
            .filter(|d| {
                **d != e
                    && **d != Element::Multiset(vec![])
                    && m.divides(d, &e).unwrap()
            })
            .collect();
        assert!(proper.is_empty(), "atom {a:?} has proper divisors {proper:?}");
    }
}

#[test]
fn primality_witnesses_verified_by_raw_decomposition_scan() {
    let ns = load_instance("ns:2,3", Some(12)).unwrap();
    let w = primal_oracle(&ns, &Element::Nat(2)).expect("2 is not primal");
    assert_eq!(w, (Element::Nat(3), Element::Nat(3)));
    let v = order::is_primal(&ns, &Element::Nat(2)).unwrap();
    assert_eq!(v.witness().unwrap(), &[w.0, w.1]);

    let bm = load_instance("bm:3", Some(6)).unwrap();
    let x = Element::Multiset(vec![1, 2]);
    let w = primal_oracle(&bm, &x).expect("[1,2] is not primal");
    let v = order::is_primal(&bm, &x).unwrap();
    assert_eq!(v.witness().unwrap(), &[w.0, w.1]);
}

#[test]
fn posmul_conrad_bound_matches_coprime_family_oracle() {
    let m = load_instance("posmul", None).unwrap();
    // largest pairwise-coprime divisor family of 30 is {2, 3, 5}
    let divisors: Vec<u64> = (2..=30).filter(|d| 30 % d == 0).collect();
    let mut best = 0;
    for mask in 0u32..1 << divisors.len() {
        let fam: Vec<u64> = divisors
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| d)
            .collect();
        let coprime = fam.iter().enumerate().all(|(i, &a)| {
            fam.iter().skip(i + 1).all(|&b| gcd(a, b) == 1)
        });
        if coprime {
            best = best.max(fam.len());
        }
    }
    assert_eq!(best, 3);
    assert_eq!(
        order::conrad_f_bound(&m, &Element::PosInt(30), 5).unwrap(),
        order::ConradOutcome::Finite(3)
    );
}

#[test]
fn ns_conrad_bound_for_seven() {
    let m = load_instance("ns:2,3", None).unwrap();
    // divisors of 7 in <2,3>: 0, 2, 3, 4, 5, 7; the largest pairwise
    // disjoint family of positive divisors is {2, 3}
    let divisors: Vec<Element> = m
        .elements()
        .iter()
        .filter(|d| divides_oracle(&m, d, &Element::Nat(7)))
        .cloned()
        .collect();
    assert_eq!(
        divisors,
        vec![
            Element::Nat(0),
            Element::Nat(2),
            Element::Nat(3),
            Element::Nat(4),
            Element::Nat(5),
            Element::Nat(7)
        ]
    );
    assert_eq!(
        order::conrad_f_bound(&m, &Element::Nat(7), 5).unwrap(),
        order::ConradOutcome::Finite(2)
    );
}

#[test]
fn basis_of_posmul_30_is_the_primes() {
    let m = load_instance("posmul", Some(30)).unwrap();
    let expect: Vec<Element> = primes_upto(30).into_iter().map(Element::PosInt).collect();
    match order::find_basis(&m).unwrap().outcome {
        order::BasisOutcome::Basis(b) => assert_eq!(b, expect),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn table_backend_order_fixture() {
    // declared order strictly finer than divisibility: 0 <= a only
    let doc = r#"{
        "backend": "table",
        "elements": ["0", "a", "b"],
        "add": [[0,1,2],[1,null,null],[2,null,null]],
        "leq": [[true,true,false],[false,true,false],[false,false,true]],
        "window": 3
    }"#;
    let m = ordalg::monoid::load_monoid_json("finer".into(), doc).unwrap();
    let v = m.check_divisibility_order();
    // 0 divides b (0 + b = b) but the declared order denies 0 <= b
    assert_eq!(v.witness().unwrap(), &[Element::Table(0), Element::Table(2)]);
}

#[test]
fn sums_leaving_the_window_are_outcomes_not_errors() {
    let m = load_instance("fc:2", None).unwrap();
    let big = Element::Vector(vec![3, 3]);
    assert_eq!(m.add(&big, &big).unwrap(), SumOutcome::OutOfWindow);
}

#[test]
fn singleton_basis_certifies_in_a_chain() {
    // the naturals have the single atom 1; nothing can replace it
    let m = load_instance("nat", Some(12)).unwrap();
    match order::find_basis(&m).unwrap().outcome {
        order::BasisOutcome::Basis(b) => {
            assert_eq!(b, vec![Element::Nat(1)]);
            assert!(order::verify_basis(&m, &b).unwrap().holds_true());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn free_monoid_is_pre_riesz_via_componentwise_min() {
    let m = load_instance("fc:2", None).unwrap();
    assert!(order::check_pre_riesz(&m, 3).unwrap().holds_true());
}

#[test]
fn completely_primal_in_a_factorial_monoid() {
    let m = load_instance("posmul", None).unwrap();
    assert!(order::is_completely_primal(&m, &Element::PosInt(8)).unwrap().holds_true());
    assert!(order::is_completely_primal(&m, &Element::PosInt(1)).unwrap().holds_true());
}
