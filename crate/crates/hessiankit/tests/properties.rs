//! Randomized algebraic invariants of the exact kernel.

use num::traits::Zero;
use proptest::prelude::*;

use hessiankit::linalg::RatMatrix;
use hessiankit::poly::{Monomial, MonomialOrder, MultiPoly, Ring};
use hessiankit::rat::{rat, ratq, Rat};
use hessiankit::unipoly::UniPoly;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratq(n, d))
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::array::uniform4(0u16..=2).prop_map(|e| Monomial::from_exps(&e))
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((arb_monomial(), arb_rat()), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(Ring::x4(), terms))
}

fn arb_cubic_poly() -> impl Strategy<Value = MultiPoly> {
    // homogeneous degree 3 with a handful of terms
    proptest::collection::vec(
        ((0usize..4, 0usize..4, 0usize..4), arb_rat()),
        1..8,
    )
    .prop_map(|entries| {
        let ring = Ring::x4();
        let mut f = MultiPoly::zero(ring);
        for ((i, j, k), c) in entries {
            let m = Monomial::var(i).mul(&Monomial::var(j)).mul(&Monomial::var(k));
            f.add_term(&m, c);
        }
        f
    })
}

fn arb_unipoly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-9i64..=9, 1..6).prop_map(|c| UniPoly::from_i64(&c))
}

fn arb_matrix4() -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(arb_rat(), 16).prop_map(|entries| {
        RatMatrix::from_fn(4, 4, |i, j| entries[i * 4 + j].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn partials_commute(f in arb_cubic_poly(), i in 0usize..4, j in 0usize..4) {
        prop_assert_eq!(
            f.differentiate(i).differentiate(j),
            f.differentiate(j).differentiate(i)
        );
    }

    #[test]
    fn euler_identity_for_cubics(f in arb_cubic_poly()) {
        // sum_i x_i d_i f = 3 f for homogeneous degree 3
        let ring = Ring::x4();
        let mut acc = MultiPoly::zero(ring);
        for i in 0..4 {
            acc = acc.add(&MultiPoly::var(ring, i).mul(&f.differentiate(i)));
        }
        prop_assert_eq!(acc, f.scale(&rat(3)));
    }

    #[test]
    fn squarefree_reassembles(f in arb_unipoly(), g in arb_unipoly(), m in 1u32..4) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let poly = f.mul(&g.pow(m));
        prop_assume!(!poly.is_constant());
        let facs = poly.squarefree_factorization().unwrap();
        let mut acc = UniPoly::constant(poly.leading_coeff());
        for (fac, mult) in &facs {
            acc = acc.mul(&fac.pow(*mult));
        }
        prop_assert_eq!(acc, poly);
        // multiplicities are distinct
        let mut mults: Vec<u32> = facs.iter().map(|(_, m)| *m).collect();
        mults.sort_unstable();
        mults.dedup();
        prop_assert_eq!(mults.len(), facs.len());
    }

    #[test]
    fn rational_roots_evaluate_to_zero(f in arb_unipoly()) {
        prop_assume!(!f.is_zero());
        let roots = f.rational_roots().unwrap();
        for r in &roots {
            prop_assert!(f.eval(r).is_zero());
        }
        // roots appear among the squarefree factors' roots
        for (fac, _) in f.squarefree_factorization().unwrap() {
            for r in fac.rational_roots().unwrap() {
                prop_assert!(roots.contains(&r));
            }
        }
    }

    #[test]
    fn cayley_hamilton(m in arb_matrix4()) {
        let cp = m.charpoly().unwrap();
        let mut acc = RatMatrix::zeros(4, 4);
        // evaluate cp at m via Horner
        for k in (0..cp.coeffs().len()).rev() {
            acc = acc.matmul(&m);
            let c = cp.coeff(k);
            for i in 0..4 {
                let v = acc.get(i, i) + &c;
                acc.set(i, i, v);
            }
        }
        prop_assert_eq!(acc, RatMatrix::zeros(4, 4));
    }

    #[test]
    fn kernel_is_exact_and_rank_permutation_invariant(m in arb_matrix4(), swap in (0usize..4, 0usize..4)) {
        let (rank, kernel) = m.rref_kernel();
        prop_assert_eq!(rank + kernel.len(), 4);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
        }
        // row permutation preserves rank
        let (a, b) = swap;
        let perm = RatMatrix::from_fn(4, 4, |i, j| {
            let src = if i == a { b } else if i == b { a } else { i };
            m.get(src, j).clone()
        });
        prop_assert_eq!(perm.rank(), rank);
    }

    #[test]
    fn minor_alternates_on_row_swap(m in arb_matrix4()) {
        // swapping two rows of a 3x3 minor flips the sign
        let base = m.minor(&[0, 1, 2], &[0, 1, 2]).unwrap();
        let swapped = RatMatrix::from_fn(4, 4, |i, j| {
            let src = match i {
                0 => 1,
                1 => 0,
                other => other,
            };
            m.get(src, j).clone()
        });
        let after = swapped.minor(&[0, 1, 2], &[0, 1, 2]).unwrap();
        prop_assert_eq!(after, -base);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        f in arb_poly(),
        g in arb_cubic_poly(),
        h in arb_cubic_poly(),
    ) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        use hessiankit::groebner::{buchberger, normal_form, Ideal};
        let ideal = Ideal::new(Ring::x4(), vec![g, h]);
        let gb = buchberger(&ideal, MonomialOrder::DegRevLex);
        let nf = normal_form(&f, &gb).unwrap();
        prop_assert_eq!(normal_form(&nf, &gb).unwrap(), nf.clone());
        // ideal members reduce to zero
        for e in gb.elements() {
            prop_assert!(normal_form(e, &gb).unwrap().is_zero());
        }
        // f - nf(f) is in the ideal
        let diff = f.sub(&nf);
        prop_assert!(normal_form(&diff, &gb).unwrap().is_zero());
    }
}
