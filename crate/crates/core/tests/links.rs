use qhom_core::chain::{coboundary, evaluate, Cochain, Complex, IotaPullback, Ring, SigmaPullback};
use qhom_core::cocycles::{cocycle_basis, phi, theta};
use qhom_core::links::*;
use qhom_core::{Quandle, XSet};

const LINKS: &[&str] = &["unknot", "trefoil", "figure8", "hopf+", "hopf-", "torus(2,5)"];

fn quandles() -> Vec<(&'static str, Quandle)> {
    vec![
        ("T2", Quandle::trivial(2).unwrap()),
        ("R3", Quandle::dihedral(3).unwrap()),
        ("R5", Quandle::dihedral(5).unwrap()),
        ("S4", Quandle::tetrahedral()),
    ]
}

#[test]
fn fundamental_cycles_are_cycles() {
    for name in LINKS {
        for (label, d) in builtin_variants(name).unwrap() {
            for (qn, q) in quandles() {
                let over_x = Complex::generalized(&XSet::itself(&q));
                for base in 0..q.size() {
                    for s in shadow_colorings(&d, &q, base).unwrap() {
                        let c = fundamental_cycle(&d, &s);
                        assert!(over_x.boundary(&c).unwrap().is_zero(), "{label} over {qn}: ∂|D| ≠ 0 for {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn shadow_sum_is_pairing_with_fundamental_cycle() {
    let th = theta(3).unwrap();
    let iota = IotaPullback { phi: &th.cochain };
    for name in LINKS {
        let d = builtin(name).unwrap();
        for base in 0..3 {
            let direct = shadow_invariant(&d, &th.quandle, &th.cochain, base).unwrap();
            let via_cycles = StateSum::from_values(
                Ring::Mod(3),
                shadow_colorings(&d, &th.quandle, base)
                    .unwrap()
                    .iter()
                    .map(|s| evaluate(&iota, &fundamental_cycle(&d, s)).unwrap()),
            );
            assert_eq!(direct, via_cycles, "{name}, base {base}");
        }
    }
}

#[test]
fn shifted_cocycle_gives_the_same_invariant() {
    let phi = phi().unwrap();
    let q = &phi.quandle;
    let complex = Complex::plain(q);
    // φ plus coboundaries δf of a few 1-cochains
    let mut cocycles = vec![phi.cochain.clone()];
    for f in [[1, 0, 0, 0], [0, 1, 3, 2], [2, 2, 1, 0]] {
        let f = Cochain::from_fn_plain(q, 1, Ring::Mod(4), |xs| f[xs[0]]);
        cocycles.push(phi.cochain.add_scaled(&coboundary(&f, &complex).unwrap(), 1).unwrap());
    }
    let r3 = Quandle::dihedral(3).unwrap();
    let r3_cocycles = cocycle_basis(&r3, 2, 3).unwrap();
    for name in LINKS {
        for (label, d) in builtin_variants(name).unwrap() {
            for (q, list) in [(q, &cocycles), (&r3, &r3_cocycles)] {
                for c in list {
                    let plain = cocycle_invariant(&d, q, c).unwrap();
                    let shifted = SigmaPullback { phi: c };
                    for base in 0..q.size() {
                        assert_eq!(shadow_invariant(&d, q, &shifted, base).unwrap(), plain, "{label}, base {base}");
                    }
                }
            }
        }
    }
}

#[test]
fn every_base_region_gives_the_same_shifted_invariant() {
    let phi = phi().unwrap();
    let shifted = SigmaPullback { phi: &phi.cochain };
    for name in LINKS {
        let d = builtin(name).unwrap();
        let plain = cocycle_invariant(&d, &phi.quandle, &phi.cochain).unwrap();
        for r in 0..d.region_count() {
            let d = d.clone().with_base_region(r).unwrap();
            for base in 0..4 {
                assert_eq!(shadow_invariant(&d, &phi.quandle, &shifted, base).unwrap(), plain);
            }
        }
    }
}

#[test]
fn shifted_one_cocycles_are_trivial() {
    for q in [Quandle::trivial(2).unwrap(), Quandle::dihedral(3).unwrap()] {
        let p = q.size() as u64;
        for kappa in cocycle_basis(&q, 1, p).unwrap() {
            for name in LINKS {
                let d = builtin(name).unwrap();
                let s = cocycle_invariant_1(&d, &q, &kappa).unwrap();
                assert!(s.is_trivial(), "{name}: {s}");
                assert_eq!(s.colorings(), colorings(&d, &q).len());
            }
        }
    }
}

#[test]
fn coboundaries_give_trivial_invariants() {
    let q = Quandle::tetrahedral();
    let complex = Complex::plain(&q);
    let f = Cochain::from_fn_plain(&q, 1, Ring::Mod(4), |xs| [0, 1, 3, 2][xs[0]]);
    let df = coboundary(&f, &complex).unwrap();
    for name in LINKS {
        assert!(cocycle_invariant(&builtin(name).unwrap(), &q, &df).unwrap().is_trivial());
    }
}

#[test]
fn invariants_agree_across_diagrams_of_one_link() {
    let phi = phi().unwrap();
    let th = theta(3).unwrap();
    let r3 = &th.quandle;
    for name in LINKS {
        let vs = builtin_variants(name).unwrap();
        let (_, d0) = &vs[0];
        for (label, d) in &vs[1..] {
            for (_, q) in quandles() {
                assert_eq!(colorings(d, &q).len(), colorings(d0, &q).len(), "{label}");
            }
            assert_eq!(
                cocycle_invariant(d, &phi.quandle, &phi.cochain).unwrap(),
                cocycle_invariant(d0, &phi.quandle, &phi.cochain).unwrap(),
                "{label}"
            );
            for base in 0..3 {
                assert_eq!(
                    shadow_invariant(d, r3, &th.cochain, base).unwrap(),
                    shadow_invariant(d0, r3, &th.cochain, base).unwrap(),
                    "{label}, base {base}"
                );
            }
        }
    }
}

#[test]
fn trefoil_detects_theta() {
    let th = theta(3).unwrap();
    let s = shadow_invariant(&builtin("trefoil").unwrap(), &th.quandle, &th.cochain, 0).unwrap();
    assert_eq!(s.colorings(), 9);
    assert!(!s.is_trivial(), "{s}");
}

#[test]
fn phi_detects_trefoil_and_figure8() {
    let phi = phi().unwrap();
    for name in ["trefoil", "figure8"] {
        let s = cocycle_invariant(&builtin(name).unwrap(), &phi.quandle, &phi.cochain).unwrap();
        assert_eq!(s.counts.into_iter().collect::<Vec<_>>(), vec![(0, 4), (2, 12)], "{name}");
    }
    for name in ["unknot", "hopf+", "torus(2,5)"] {
        assert!(cocycle_invariant(&builtin(name).unwrap(), &phi.quandle, &phi.cochain).unwrap().is_trivial());
    }
}
