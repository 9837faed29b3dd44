//! Property tests for the linear algebra, normalization, lattice and
//! threshold invariants.

mod common;

use hyperrlct::lattice::{build_lattice, inclusion_dag};
use hyperrlct::oracle::{lattice_bruteforce, longest_chain_bruteforce};
use hyperrlct::rational::{self, Rational};
use hyperrlct::volume::{self, SamplingBox};
use hyperrlct::{
    normalize, parse_factored_product, rlct_central, subspace_leq, to_factored_text, ArrangementSpec,
    RationalMatrix,
};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| rational::ratio(p, q))
}

fn matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(prop::collection::vec(rat(), cols), 0..=max_rows)
        .prop_map(move |rows| RationalMatrix::from_rows(rows, cols).unwrap())
}

fn any_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5).prop_flat_map(|c| matrix(5, c))
}

fn seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.matrix.rank(), r.rank);
    }

    #[test]
    fn rank_nullity(m in any_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
        if k.rows() > 0 {
            prop_assert!(m.mul(&k.transpose().unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn canonical_form_ignores_invertible_row_ops(m in any_matrix(), s in seed()) {
        prop_assume!(m.rows() > 0);
        let mut rng = common::rng(s);
        let p = common::random_invertible(&mut rng, m.rows());
        prop_assert_eq!(p.mul(&m).unwrap().row_space_canonical(), m.row_space_canonical());
    }

    #[test]
    fn subspace_leq_is_a_partial_order(a in matrix(3, 3), b in matrix(3, 3), c in matrix(3, 3)) {
        let (a, b, c) = (a.row_space_canonical(), b.row_space_canonical(), c.row_space_canonical());
        prop_assert!(subspace_leq(&a, &a).unwrap());
        if subspace_leq(&a, &b).unwrap() && subspace_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if subspace_leq(&a, &b).unwrap() && subspace_leq(&b, &c).unwrap() {
            prop_assert!(subspace_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn appending_a_normal_gives_a_smaller_flat(a in matrix(3, 4), v in prop::collection::vec(rat(), 4)) {
        let mut bigger = a.clone();
        bigger.push_row(&v).unwrap();
        prop_assert!(subspace_leq(&bigger.row_space_canonical(), &a.row_space_canonical()).unwrap());
    }

    #[test]
    fn normalize_is_idempotent_and_order_free(s in seed()) {
        let mut rng = common::rng(s);
        let arr = common::random_central(&mut rng, 4, 7, 3);
        prop_assert_eq!(&normalize(&arr.to_spec()).unwrap(), &arr);

        let mut spec = arr.to_spec();
        let rows = spec.normals.to_rows();
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.reverse();
        spec.normals = spec.normals.select_rows(&order);
        spec.multiplicities = order.iter().map(|&i| spec.multiplicities[i]).collect();
        prop_assert_eq!(normalize(&spec).unwrap(), arr);
    }

    #[test]
    fn printed_text_parses_back(s in seed()) {
        let mut rng = common::rng(s);
        let arr = common::random_central(&mut rng, 4, 6, 3);
        let text = to_factored_text(&arr);
        let back = normalize(&parse_factored_product(&text).unwrap()).unwrap();
        prop_assert_eq!(back.normals(), arr.normals());
        prop_assert_eq!(back.multiplicities(), arr.multiplicities());
        prop_assert_eq!(back.offsets(), arr.offsets());
    }

    #[test]
    fn lattice_matches_bruteforce(s in seed()) {
        let mut rng = common::rng(s);
        let arr = common::random_central(&mut rng, 5, 10, 4);
        let lat = build_lattice(&arr).unwrap();
        prop_assert_eq!(&lat, &lattice_bruteforce(&arr).unwrap());
        for f in &lat.flats {
            let max = f.members.iter().map(|&j| arr.multiplicities()[j]).max().unwrap();
            prop_assert!(max <= f.s && f.s <= arr.total_multiplicity());
            prop_assert_eq!(f.normal_space.rank(), f.codim);
        }
        for j in 0..arr.len() {
            let single = RationalMatrix::new(1, arr.dim(), arr.normal(j).to_vec()).unwrap();
            prop_assert!(lat.index_of(&single).is_some());
        }
    }

    #[test]
    fn inclusion_matches_pairwise_subspace_test(s in seed()) {
        let mut rng = common::rng(s);
        let arr = common::random_central(&mut rng, 4, 6, 2);
        let lat = build_lattice(&arr).unwrap();
        let dag = inclusion_dag(&lat.flats);
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                let expected = i != j && subspace_leq(&lat.flats[i].normal_space, &lat.flats[j].normal_space).unwrap();
                prop_assert_eq!(dag.contains(i, j), expected);
            }
        }
    }

    #[test]
    fn lattice_shape_is_coordinate_free(s in seed()) {
        let mut rng = common::rng(s);
        let arr = common::random_central(&mut rng, 4, 7, 3);
        let t = common::random_invertible(&mut rng, arr.dim());
        let shape = |lat: &hyperrlct::IntersectionLattice| {
            let mut v: Vec<(usize, u64)> = lat.flats.iter().map(|f| (f.codim, f.s)).collect();
            v.sort();
            v
        };
        let a = build_lattice(&arr).unwrap();
        let b = build_lattice(&common::substitute(&arr, &t)).unwrap();
        prop_assert_eq!(shape(&a), shape(&b));
    }

    #[test]
    fn witness_chain_is_valid(s in seed()) {
        let mut rng = common::rng(s);
        let arr = common::random_central(&mut rng, 5, 9, 4);
        let res = rlct_central(&arr).unwrap();
        prop_assert_eq!(res.witness_chain.len(), res.pair.m);
        for w in res.witness_chain.windows(2) {
            prop_assert!(w[0].strictly_inside(&w[1]));
        }
        for f in res.witness_chain.iter().chain(&res.minimizer_flats) {
            prop_assert_eq!(Rational::new(f.codim.into(), f.s.into()), res.pair.lambda.clone());
        }
        prop_assert_eq!(longest_chain_bruteforce(&res.minimizer_flats).unwrap(), res.pair.m);
        // Bit-identical on recomputation.
        prop_assert_eq!(rlct_central(&arr).unwrap(), res);
    }
}

#[test]
fn generic_flat_count() {
    let mut rng = common::rng(11);
    for (d, n) in [(2, 5), (3, 6), (4, 7), (5, 8)] {
        let arr = common::random_generic(&mut rng, d, n);
        let lat = build_lattice(&arr).unwrap();
        let binom = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        // Below codim d every subset is its own flat; codim d is the origin.
        let expected: usize = (1..d).map(|c| binom(n, c)).sum::<usize>() + 1;
        assert_eq!(lat.len(), expected, "d={d} n={n}");
    }
}

#[test]
fn volume_is_deterministic_and_standard_error_scales() {
    let arr = normalize(&ArrangementSpec::central(RationalMatrix::from_i64(&[&[1, 0], &[0, 1]]), vec![1, 1])).unwrap();
    let region = SamplingBox::symmetric_unit(2);
    let a = volume::estimate_volume(&arr, &region, 0.05, 40_000, 3).unwrap();
    let b = volume::estimate_volume(&arr, &region, 0.05, 40_000, 3).unwrap();
    assert_eq!(a, b);
    let c = volume::estimate_volume(&arr, &region, 0.05, 160_000, 3).unwrap();
    let ratio = a.std_error / c.std_error;
    assert!((ratio - 2.0).abs() <= 0.4, "std error shrank by {ratio}");
}

#[test]
fn volume_matches_xy_closed_form() {
    let arr = normalize(&parse_factored_product("x*y").unwrap()).unwrap();
    let region = SamplingBox::symmetric_unit(2);
    let grid = volume::geometric_grid(1e-4, 1e-1, 5).unwrap();
    for s in volume::estimate_volume_grid(&arr, &region, &grid, 200_000, 99).unwrap() {
        let exact = 4.0 * s.epsilon * (1.0 - s.epsilon.ln());
        assert!((s.volume_estimate - exact).abs() <= 3.5 * s.std_error, "{s:?} vs {exact}");
    }
}
