use proptest::prelude::*;
use superschur::characters::{check_character, reduction_char, su_zhang_char};
use superschur::combinatorics::CompositePartition;
use superschur::jacobi_trudi::{dimension, general_char};
use superschur::symfunc::SymFuncContext;
use superschur::weights::{special_class, Weight};
use superschur::LaurentPoly;

fn decreasing(len: usize, e: i64) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-e..=e, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn dominant() -> impl Strategy<Value = Weight> {
    (1usize..=3, 1usize..=2)
        .prop_flat_map(|(m, n)| (decreasing(m, 3), decreasing(n, 3)))
        .prop_map(|(l, u)| Weight::new(l, u))
}

fn constant_delta() -> impl Strategy<Value = Weight> {
    (1usize..=3, 1usize..=2)
        .prop_flat_map(|(m, n)| (decreasing(m, 4), -4i64..=4, Just(n)))
        .prop_map(|(l, d, n)| Weight::new(l, vec![d; n]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn su_zhang_is_a_character(w in dominant()) {
        let ch = su_zhang_char(&w).unwrap();
        check_character(&w, &ch).unwrap();
        if let Some(c) = special_class(&w) {
            prop_assert_eq!(reduction_char(&c).unwrap(), ch);
        }
    }

    #[test]
    fn general_char_matches_su_zhang(w in constant_delta()) {
        let g = general_char(&w).unwrap();
        prop_assert_eq!(&g, &su_zhang_char(&w).unwrap());
        prop_assert_eq!(dimension(&w).unwrap(), g.coefficient_sum().to_bigint());
    }

    #[test]
    fn character_json_roundtrip(w in dominant()) {
        let ch = su_zhang_char(&w).unwrap();
        prop_assert_eq!(LaurentPoly::from_json(&ch.to_json()).unwrap(), ch);
    }

    #[test]
    fn weight_text_roundtrip(w in dominant()) {
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }
}

#[test]
fn s_function_of_a_special_weight_is_its_character() {
    let ctx = SymFuncContext::new(3, 2);
    let c: CompositePartition = "3|3,2".parse().unwrap();
    let w: Weight = "3,2,-1;-1,-1".parse().unwrap();
    assert_eq!(ctx.composite_super_schur(&c), su_zhang_char(&w).unwrap());
}
