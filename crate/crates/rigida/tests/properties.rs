//! Property-based invariants over randomly generated inputs.
//!
//! These complement the seeded suites in the acceptance tests: proptest
//! explores the input space and shrinks counterexamples, which is the right
//! tool for the algebraic laws the crate is built on.

use num_traits::{One, Zero};
use proptest::prelude::*;

use rigida::cohomology::{coboundary, is_cocycle};
use rigida::exactlin::{elementary_divisors, integer_kernel, rat, QMatrix, QPoly, QVector};
use rigida::jordan::jordan_chevalley;
use rigida::lie::{LieLaw, StructureConstants};

fn small_entry() -> impl Strategy<Value = i64> {
    -9i64..=9
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(small_entry(), rows * cols).prop_map(move |entries| {
        QMatrix::from_fn(rows, cols, |r, c| rat(entries[r * cols + c]))
    })
}

fn any_small_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| matrix(r, c))
}

fn square_matrix(max: usize) -> impl Strategy<Value = QMatrix> {
    (1usize..=max).prop_flat_map(|n| matrix(n, n))
}

fn skew_table(n: usize) -> impl Strategy<Value = StructureConstants> {
    let pairs = n * (n - 1) / 2;
    prop::collection::vec(small_entry(), pairs * n).prop_map(move |vals| {
        let mut sc = StructureConstants::new(n);
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                let v: Vec<_> = (0..n).map(|k| rat(vals[idx * n + k])).collect();
                sc.set_bracket(i, j, QVector::new(v));
                idx += 1;
            }
        }
        sc
    })
}

fn law_pool() -> Vec<LieLaw> {
    vec![
        rigida::catalog::heis3(),
        rigida::catalog::sl2(),
        rigida::catalog::g2_law(),
        rigida::catalog::abelian(4),
    ]
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_the_column_count(m in any_small_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn cayley_hamilton(m in square_matrix(4)) {
        let p = m.char_poly().unwrap();
        prop_assert!(p.eval_matrix(&m).is_zero());
        prop_assert_eq!(p.degree(), Some(m.rows()));
    }

    #[test]
    fn transport_is_a_right_action(sc in skew_table(3), f in matrix(3, 3), g in matrix(3, 3)) {
        prop_assume!(f.rank() == 3 && g.rank() == 3);
        let lhs = sc.transport(&f.mul(&g)).unwrap();
        let rhs = sc.transport(&f).unwrap().transport(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn diagonal_transport_agrees_with_the_full_action(
        sc in skew_table(3),
        l1 in 1i64..=6, l2 in 1i64..=6, l3 in 1i64..=6,
    ) {
        let lambda = QVector::from_ints(&[l1, l2, l3]);
        let fast = sc.diagonal_transport(&lambda).unwrap();
        let slow = sc.transport(&QMatrix::diagonal(lambda.entries())).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn transported_laws_stay_in_the_lie_variety(case in 0usize..4, f in matrix(3, 3)) {
        let pool = law_pool();
        let law = &pool[case % pool.len()];
        let n = law.dim();
        prop_assume!(n == 3 && f.rank() == 3);
        let transported = law.sc().transport(&f).unwrap();
        prop_assert!(transported.jacobi_defect().is_empty());
    }

    #[test]
    fn coboundaries_are_cocycles(case in 0usize..4, entries in prop::collection::vec(small_entry(), 16)) {
        let pool = law_pool();
        let law = &pool[case % pool.len()];
        let n = law.dim();
        let f = QMatrix::from_fn(n, n, |r, c| rat(entries[r * 4 + c]));
        let phi = coboundary(law, &f);
        prop_assert!(is_cocycle(law, &phi).unwrap());
    }

    #[test]
    fn jordan_pairs_are_certified(m in square_matrix(4)) {
        let pair = jordan_chevalley(&m).unwrap();
        prop_assert_eq!(pair.s.add(&pair.n), m.clone());
        prop_assert_eq!(pair.s.mul(&pair.n), pair.n.mul(&pair.s));
        prop_assert!(pair.n.pow(m.rows()).is_zero());
        prop_assert_eq!(pair.conductor.eval_matrix(&m), pair.s);
    }

    #[test]
    fn squarefree_part_divides_and_is_coprime_with_its_derivative(
        coeffs in prop::collection::vec(small_entry(), 1..6),
    ) {
        let mut v: Vec<_> = coeffs.iter().map(|&c| rat(c)).collect();
        v.push(rat(1));
        let p = QPoly::new(v);
        let s = p.squarefree_part().unwrap();
        prop_assert!(p.rem(&s).is_zero());
        prop_assert_eq!(s.gcd(&s.derivative()), QPoly::one());
    }

    #[test]
    fn integer_kernels_are_saturated(m in any_small_matrix()) {
        let lattice = integer_kernel(&m);
        prop_assert_eq!(lattice.rank(), m.cols() - m.rank());
        for p in lattice.basis_vectors() {
            prop_assert!(m.mul_vec(&p).is_zero());
        }
        if lattice.rank() > 0 {
            prop_assert!(elementary_divisors(lattice.basis()).iter().all(One::is_one));
        }
    }

    #[test]
    fn minimal_polynomial_divides_the_characteristic_polynomial(m in square_matrix(4)) {
        let min = rigida::jordan::minimal_polynomial(&m).unwrap();
        let chi = m.char_poly().unwrap();
        prop_assert!(chi.rem(&min).is_zero());
        prop_assert!(min.eval_matrix(&m).is_zero());
    }
}
