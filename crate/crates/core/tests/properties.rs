use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use qhom_core::chain::{
    coboundary, cohomology, cohomology_via_quotient, evaluate, homology, homology_via_quotient, pullback_sigma, Chain,
    Cochain, Complex, Generator, Ring,
};
use qhom_core::cocycles::phi;
use qhom_core::linalg::{invariant_factors, invariant_factors_dense, quotient_group, smith_normal_form, solve_mod};
use qhom_core::links::{builtin, cocycle_invariant};
use qhom_core::{AbelianGroup, Direction, IntMatrix, Point, Quandle, SparseMatrix, XSet};

fn shipped() -> Vec<Quandle> {
    vec![
        Quandle::trivial(2).unwrap(),
        Quandle::dihedral(3).unwrap(),
        Quandle::dihedral(4).unwrap(),
        Quandle::dihedral(5).unwrap(),
        Quandle::tetrahedral(),
    ]
}

fn brute_force_axioms(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    let q1 = (0..n).all(|i| t[i][i] == i);
    let q2 = (0..n).all(|j| {
        let mut seen = vec![false; n];
        (0..n).all(|i| !std::mem::replace(&mut seen[t[i][j]], true))
    });
    let q3 = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| t[t[i][j]][k] == t[t[i][k]][t[j][k]])));
    q1 && q2 && q3
}

/// Alexander quandles `Z_n` with `i * j = t i + (1 - t) j`; `t` a unit.
fn alexander(n: usize, t: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (t * i + (n + 1 - t % n) * j) % n).collect())
        .collect()
}

fn table_strategy() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(0..n, n), n))
}

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r).prop_map(move |rows| IntMatrix::from_rows(&rows, c))
    })
}

fn random_chain(complex: &Complex, n: usize, picks: &[(usize, i64)]) -> Chain {
    let basis = complex.basis(n).unwrap();
    Chain::from_terms(n, picks.iter().map(|&(i, k)| (basis[i % basis.len()].clone(), k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn validation_matches_brute_force(t in table_strategy()) {
        prop_assert_eq!(Quandle::from_table(&t).is_ok(), brute_force_axioms(&t));
    }

    #[test]
    fn alexander_quandles_validate(n in 2usize..=9, t in 1usize..9) {
        let t = t % n;
        prop_assume!(num_integer::gcd(t, n) == 1);
        let table = alexander(n, t);
        prop_assert!(brute_force_axioms(&table));
        let q = Quandle::from_table(&table).unwrap();
        for y in 0..n {
            for x in 0..n {
                let z = q.inv_op(y, x);
                prop_assert_eq!(q.op(z, x), y);
                prop_assert_eq!((0..n).filter(|&w| q.op(w, x) == y).count(), 1);
            }
        }
    }

    #[test]
    fn generator_actions_are_invertible(a in -50i64..50, x in 0usize..4, y in 0usize..4) {
        let q = Quandle::tetrahedral();
        let z = XSet::integers(&q);
        let xz = XSet::product(&XSet::itself(&q), &z);
        for (set, p) in [
            (XSet::itself(&q), Point::Elem(y)),
            (XSet::singleton(&q), Point::Unit),
            (z.clone(), Point::Int(a)),
            (xz, Point::pair(Point::Elem(y), Point::Int(a))),
        ] {
            for d in Direction::BOTH {
                prop_assert_eq!(set.act(&set.act(&p, x, d), x, d.flip()), p.clone());
            }
        }
        prop_assert_eq!(z.act(&Point::Int(a), x, Direction::Forward), Point::Int(a + 1));
    }

    #[test]
    fn smith_form_is_a_factorization(m in matrix_strategy()) {
        let (u, d, v) = smith_normal_form(&m);
        prop_assert_eq!(u.mul(&m).mul(&v), d.clone());
        let diag: Vec<BigInt> = (0..m.rows().min(m.cols())).map(|i| d.get(i, i).clone()).filter(|x| !x.is_zero()).collect();
        for w in diag.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
        }
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                prop_assert!(i == j || d.get(i, j).is_zero());
            }
        }
        prop_assert_eq!(invariant_factors(&SparseMatrix::from_dense(&m)), invariant_factors_dense(&m));
    }

    #[test]
    fn solutions_satisfy_the_system(m in matrix_strategy(), seed in prop::collection::vec(-5i64..=5, 5), modulus in prop::sample::select(vec![0u64, 2, 4, 5, 6, 7, 12])) {
        // half the right-hand sides are consistent by construction
        let x0: Vec<BigInt> = seed[..m.cols()].iter().map(|&v| BigInt::from(v)).collect();
        let consistent = m.mul_vec(&x0);
        let arbitrary: Vec<BigInt> = (0..m.rows()).map(|i| BigInt::from(seed[i % seed.len()] * 3 + 1)).collect();
        for b in [consistent.clone(), arbitrary] {
            let sol = solve_mod(&m, &b, modulus).unwrap();
            if let Some(x) = &sol {
                let mx = m.mul_vec(x);
                for (l, r) in mx.iter().zip(&b) {
                    let diff = l - r;
                    let ok = if modulus == 0 { diff.is_zero() } else { (diff % modulus).is_zero() };
                    prop_assert!(ok);
                }
            }
            if b == consistent {
                prop_assert!(sol.is_some());
            }
        }
    }

    #[test]
    fn quotient_ignores_basis_order(m in matrix_strategy(), rot in 0usize..5) {
        // L_K = Z^r, L_I = column span of m
        let r = m.rows();
        let id = IntMatrix::identity(r);
        let g = quotient_group(&id, &m).unwrap();
        let row_perm: Vec<usize> = (0..r).map(|i| (i + rot) % r).collect();
        let col_perm: Vec<usize> = (0..m.cols()).rev().collect();
        let shuffled = m.permute_rows(&row_perm).permute_columns(&col_perm);
        prop_assert_eq!(quotient_group(&id.permute_columns(&row_perm), &shuffled).unwrap(), g);
    }

    #[test]
    fn boundary_squares_to_zero(qi in 0usize..5, n in 2usize..=4, picks in prop::collection::vec((0usize..10_000, -3i64..=3), 1..6), over_x in any::<bool>()) {
        let q = &shipped()[qi];
        let complex = if over_x { Complex::generalized(&XSet::itself(q)) } else { Complex::plain(q) };
        let c = random_chain(&complex, n, &picks);
        prop_assert!(complex.boundary(&complex.boundary(&c).unwrap()).unwrap().is_zero());
        let d0 = complex.boundary0(&complex.boundary0(&c).unwrap()).unwrap();
        let d1 = complex.boundary1(&complex.boundary1(&c).unwrap()).unwrap();
        prop_assert!(d0.is_zero() && d1.is_zero());
    }

    #[test]
    fn coboundary_is_adjoint_to_boundary(qi in 0usize..5, n in 1usize..=3, values in prop::collection::vec(0i64..12, 64), picks in prop::collection::vec((0usize..10_000, -3i64..=3), 1..6)) {
        let q = &shipped()[qi];
        let complex = Complex::plain(q);
        let ring = Ring::Mod(12);
        let f = Cochain::from_entries(n, ring, complex.basis(n).unwrap().into_iter().zip(values.iter().cycle().copied()));
        let c = random_chain(&complex, n + 1, &picks);
        let df = coboundary(&f, &complex).unwrap();
        prop_assert!(ring.eq_elements(evaluate(&df, &c).unwrap(), evaluate(&f, &complex.boundary(&c).unwrap()).unwrap()));
        let sf = pullback_sigma(&f, &complex).unwrap();
        prop_assert!(ring.eq_elements(evaluate(&sf, &c).unwrap(), evaluate(&f, &complex.sigma(&c).unwrap()).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundaries_do_not_change_the_invariant(f in prop::collection::vec(0i64..4, 4), k in 0usize..4) {
        let phi = phi().unwrap();
        let q = &phi.quandle;
        let complex = Complex::plain(q);
        let f = Cochain::from_fn_plain(q, 1, Ring::Mod(4), |xs| f[xs[0]]);
        let perturbed = phi.cochain.add_scaled(&coboundary(&f, &complex).unwrap(), 1).unwrap();
        let d = builtin(["trefoil", "figure8", "hopf+", "torus(2,5)"][k]).unwrap();
        prop_assert_eq!(cocycle_invariant(&d, q, &perturbed).unwrap(), cocycle_invariant(&d, q, &phi.cochain).unwrap());
    }
}

#[test]
fn homology_routes_agree() {
    for q in shipped() {
        let c = Complex::plain(&q);
        for n in 1..=4 {
            assert_eq!(homology(&c, n).unwrap(), homology_via_quotient(&c, n).unwrap(), "{q:?} H_{n}");
        }
    }
}

#[test]
fn cohomology_matches_universal_coefficients() {
    for q in shipped() {
        let c = Complex::plain(&q);
        let h: Vec<_> = (0..=4).map(|n| if n == 0 { AbelianGroup::trivial() } else { homology(&c, n).unwrap() }).collect();
        for m in [2u64, 3, 4] {
            for n in 1..=4 {
                let direct = cohomology(&c, Ring::Mod(m), n).unwrap();
                assert_eq!(direct, cohomology_via_quotient(&c, Ring::Mod(m), n).unwrap());
                let predicted = h[n].hom_order(m) * h[n - 1].ext_order(m);
                assert_eq!(direct.order(), Some(predicted), "{q:?} H^{n}(Z{m})");
            }
        }
    }
}

#[test]
fn degenerate_generators_vanish() {
    let q = Quandle::dihedral(3).unwrap();
    let complex = Complex::plain(&q);
    let c = Chain::from_terms(2, [(Generator::plain(&[1, 1]), 5)]);
    assert!(c.is_zero() || complex.boundary(&c).unwrap().is_zero());
    assert!(complex.basis(2).unwrap().iter().all(|g| !g.is_degenerate()));
}
