use optseq::asds::{classify, complement, SubsetPair};
use optseq::seqcore::{autocorrelation_spectrum, is_oqs, QuaternarySeq};
use optseq::transforms::{array_to_quat, array_to_sequence, quat_to_array, sequence_to_array, GrayPair};
use optseq::BinarySeq;
use proptest::prelude::*;

fn quaternary(max_len: usize) -> impl Strategy<Value = QuaternarySeq> {
    prop::collection::vec(0u8..4, 1..=max_len).prop_map(|e| QuaternarySeq::new(e).unwrap())
}

fn binary(len: impl Into<prop::collection::SizeRange>) -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { 1 } else { -1 }), len)
}

/// Odd m in 3..=15 and a binary sequence of length 2m.
fn gobs_shaped() -> impl Strategy<Value = BinarySeq> {
    (1usize..=7).prop_flat_map(|h| binary(2 * (2 * h + 1))).prop_map(|v| BinarySeq::new(v).unwrap())
}

fn pair() -> impl Strategy<Value = SubsetPair> {
    (1usize..=15)
        .prop_flat_map(|m| {
            (Just(m), prop::collection::btree_set(0..m, 0..=m), prop::collection::btree_set(0..m, 0..=m))
        })
        .prop_map(|(m, b, d)| {
            SubsetPair::new(m, &b.into_iter().collect::<Vec<_>>(), &d.into_iter().collect::<Vec<_>>()).unwrap()
        })
}

proptest! {
    #[test]
    fn quaternary_text_round_trip(f in quaternary(40)) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<QuaternarySeq>().unwrap(), f);
    }

    #[test]
    fn binary_text_round_trip(v in binary(1..40usize)) {
        let phi = BinarySeq::new(v).unwrap();
        prop_assert_eq!(phi.to_string().parse::<BinarySeq>().unwrap(), phi);
    }

    #[test]
    fn quat_array_round_trip(f in quaternary(40)) {
        prop_assert_eq!(array_to_quat(&quat_to_array(&f)), f);
    }

    #[test]
    fn array_quat_round_trip(rows in (1usize..30).prop_flat_map(|m| (binary(m), binary(m)))) {
        let phi = GrayPair::from_rows(&rows.0, &rows.1).unwrap();
        prop_assert_eq!(quat_to_array(&array_to_quat(&phi)), phi);
    }

    #[test]
    fn sequence_array_round_trip(varphi in gobs_shaped()) {
        let phi = sequence_to_array(&varphi).unwrap();
        prop_assert_eq!(array_to_sequence(&phi).unwrap(), varphi);
    }

    #[test]
    fn unit_shift_conjugate_preserve_oqs(f in quaternary(9).prop_filter("odd", |f| f.len() % 2 == 1), s in 0usize..9, u in 0u8..4) {
        let g = f.shifted(s % f.len()).times_unit(u);
        prop_assert_eq!(is_oqs(&g).unwrap(), is_oqs(&f).unwrap());
        prop_assert_eq!(is_oqs(&f.conjugate()).unwrap(), is_oqs(&f).unwrap());
        let norms = |h: &QuaternarySeq| autocorrelation_spectrum(h).iter().map(|r| r.norm()).collect::<Vec<_>>();
        prop_assert_eq!(norms(&g), norms(&f));
    }

    #[test]
    fn complement_is_involution(p in pair()) {
        let m = p.m();
        prop_assert_eq!(complement(m, &complement(m, p.b())), p.b().to_vec());
        prop_assert_eq!(p.complement_both().complement_both(), p.clone());
        prop_assert_eq!(p.complement_b().k1(), m - p.k1());
        prop_assert_eq!(p.complement_d().k2(), m - p.k2());
    }

    #[test]
    fn classification_is_shift_invariant(p in pair(), s in 0usize..15) {
        let m = p.m();
        let shift = |xs: &[usize]| xs.iter().map(|x| (x + s) % m).collect::<Vec<_>>();
        let q = SubsetPair::new(m, &shift(p.b()), &shift(p.d())).unwrap();
        prop_assert_eq!(classify(&q), classify(&p));
    }
}
