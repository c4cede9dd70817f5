use clifford_core::blade::{blade_product, reciprocal_blade, BladeMask};
use clifford_core::oracle::{oracle_product, reduce_word, reduce_word_counted, GeneratorWord};
use clifford_core::{Multivector, Signature};
use proptest::prelude::*;

fn signature(max_n: usize) -> impl Strategy<Value = Signature> {
    (1..=max_n)
        .prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::new(p, n - p).unwrap()))
}

fn multivector(sig: Signature) -> impl Strategy<Value = Multivector<i64>> {
    prop::collection::vec(-20i64..=20, sig.dim())
        .prop_map(move |c| Multivector::from_coeffs(sig, c).unwrap())
}

fn triple(max_n: usize) -> impl Strategy<Value = (Multivector<i64>, Multivector<i64>, Multivector<i64>)> {
    signature(max_n).prop_flat_map(|s| (multivector(s), multivector(s), multivector(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_associative((a, b, c) in triple(5)) {
        let left = a.gp(&b).unwrap().gp(&c).unwrap();
        let right = a.gp(&b.gp(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_distributes((a, b, c) in triple(4)) {
        prop_assert_eq!(a.gp(&(&b + &c)).unwrap(), &a.gp(&b).unwrap() + &a.gp(&c).unwrap());
        prop_assert_eq!((&a + &b).gp(&c).unwrap(), &a.gp(&c).unwrap() + &b.gp(&c).unwrap());
    }

    #[test]
    fn involutions_respect_products((a, b, _) in triple(5)) {
        let ab = a.gp(&b).unwrap();
        prop_assert_eq!(ab.principal_involution(),
            a.principal_involution().gp(&b.principal_involution()).unwrap());
        prop_assert_eq!(ab.reversion(), b.reversion().gp(&a.reversion()).unwrap());
        prop_assert_eq!(ab.conjugation(), b.conjugation().gp(&a.conjugation()).unwrap());
        prop_assert_eq!(a.principal_involution().principal_involution(), a.clone());
        prop_assert_eq!(a.reversion().reversion(), a.clone());
        prop_assert_eq!(a.conjugation().conjugation(), a.clone());
        prop_assert_eq!(a.conjugation(), a.reversion().principal_involution());
    }

    #[test]
    fn grades_partition((a, _, _) in triple(6)) {
        let n = a.sig().n();
        let total = (0..=n).fold(Multivector::zero(a.sig()), |acc, k| &acc + &a.grade_project(k).unwrap());
        prop_assert_eq!(total, a.clone());
        let g0 = a.grade_project(0).unwrap();
        prop_assert!(g0.is_scalar());
    }

    #[test]
    fn text_format_round_trip((a, _, _) in triple(6)) {
        let text = a.to_string();
        prop_assert_eq!(Multivector::<i64>::parse(a.sig(), &text).unwrap(), a);
    }

    #[test]
    fn float_text_round_trip(coeffs in prop::collection::vec(-1e6f64..1e6, 8)) {
        let s = Signature::new(1, 2).unwrap();
        let a = Multivector::from_coeffs(s, coeffs).unwrap();
        prop_assert_eq!(Multivector::<f64>::parse(s, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn kernel_matches_oracle(s in signature(8), a in 0u32..256, b in 0u32..256) {
        let mask = (1u32 << s.n()) - 1;
        let (a, b) = (BladeMask::new(a & mask), BladeMask::new(b & mask));
        prop_assert_eq!(blade_product(s, a, b), oracle_product(a, b, s));
    }

    #[test]
    fn reciprocal_inverts(s in signature(12), j in 0u32..4096) {
        let j = BladeMask::new(j & ((1u32 << s.n()) - 1));
        let r = reciprocal_blade(s, j);
        let prod = blade_product(s, j, r.mask);
        prop_assert_eq!(prod.mask, BladeMask::SCALAR);
        prop_assert_eq!(prod.sign * r.sign, clifford_core::Sign::Pos);
    }

    #[test]
    fn reduction_is_quadratic_at_most(
        s in signature(6),
        letters in prop::collection::vec(1usize..=6, 0..24),
    ) {
        let letters: Vec<usize> = letters.into_iter().map(|i| (i - 1) % s.n() + 1).collect();
        let w = GeneratorWord::new(s, letters).unwrap();
        let (_, steps) = reduce_word_counted(&w);
        prop_assert!(steps <= w.letters().len().pow(2));
    }

    #[test]
    fn inserting_a_square_scales_by_metric(
        s in signature(6),
        letters in prop::collection::vec(1usize..=6, 0..12),
        at in 0usize..13,
        gen in 1usize..=6,
    ) {
        let letters: Vec<usize> = letters.into_iter().map(|i| (i - 1) % s.n() + 1).collect();
        let gen = (gen - 1) % s.n() + 1;
        let at = at.min(letters.len());
        let base = reduce_word(&GeneratorWord::new(s, letters.clone()).unwrap());
        let mut longer = letters;
        longer.splice(at..at, [gen, gen]);
        let with_pair = reduce_word(&GeneratorWord::new(s, longer).unwrap());
        prop_assert_eq!(with_pair.mask, base.mask);
        prop_assert_eq!(with_pair.sign.to_i32(), base.sign.to_i32() * s.square(gen).unwrap());
    }
}

#[test]
fn metric_law_on_generators() {
    for s in Signature::all_up_to(6).unwrap() {
        for i in 1..=s.n() {
            let ei = Multivector::<i64>::blade(s, BladeMask::generator(s, i).unwrap(), 1);
            let sq = ei.gp(&ei).unwrap();
            let expect = if i <= s.p() { 1 } else { -1 };
            assert_eq!(sq, Multivector::scalar(s, expect));
            for j in (1..=s.n()).filter(|&j| j != i) {
                let ej = Multivector::<i64>::blade(s, BladeMask::generator(s, j).unwrap(), 1);
                assert_eq!(ei.gp(&ej).unwrap(), -&ej.gp(&ei).unwrap());
            }
        }
    }
}
