use chowtaut_core::{CycleClass, Generator, Grading, RawProduct, RingParams, SignConvention, TautRing, Q};
use proptest::prelude::*;

fn generator(m: usize) -> impl Strategy<Value = Generator> {
    (0..3u8, 1..=m, 1..m).prop_map(move |(kind, i, shift)| match kind {
        0 => Generator::H(i),
        1 => Generator::O(i),
        _ => Generator::Tau(i, (i - 1 + shift) % m + 1),
    })
}

fn params() -> impl Strategy<Value = RingParams> {
    (prop::sample::select(vec![1u32, 2, 3, 4, 22]), prop::sample::select(vec![0u32, 1, 2, 5, 10, 52]), 2..=5usize, any::<bool>())
        .prop_map(|(d, b, m, literal)| {
            let signs = if literal { SignConvention::literal() } else { SignConvention::adjudicated() };
            RingParams::with_signs(d, b, m, signs).unwrap()
        })
}

fn raw(m: usize) -> impl Strategy<Value = RawProduct> {
    (prop::collection::vec(generator(m), 0..7), -5i64..6)
        .prop_map(|(gens, c)| RawProduct::scaled(Q::from_integer(c.into()), gens))
}

fn case() -> impl Strategy<Value = (RingParams, RawProduct, Vec<usize>)> {
    params().prop_flat_map(|p| (Just(p), raw(p.m), prop::collection::vec(0usize..64, 16)))
}

fn class_of(ring: &TautRing, raws: &[RawProduct]) -> CycleClass {
    let mut out = ring.zero();
    for r in raws {
        out = &out + &ring.normal_form(r).unwrap();
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rewriting_is_confluent((p, r, picks) in case()) {
        let ring = TautRing::new(p);
        let first = ring.normal_form(&r).unwrap();
        let mut k = 0;
        let other = ring
            .rewriter()
            .normal_form_by(&r, |n| {
                k += 1;
                picks[k % picks.len()] % n
            })
            .unwrap();
        prop_assert_eq!(first, other);
    }

    #[test]
    fn products_are_homogeneous_of_added_codim((p, r, _) in case()) {
        let ring = TautRing::new(p);
        let nf = ring.normal_form(&r).unwrap();
        match nf.grading() {
            Grading::Zero => {}
            Grading::Homogeneous(c) => prop_assert_eq!(c, r.codim()),
            Grading::Mixed => prop_assert!(false, "mixed normal form"),
        }
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        p in params(),
        seed in prop::collection::vec(raw(5), 3),
    ) {
        let ring = TautRing::new(p);
        let fix = |r: &RawProduct| RawProduct::scaled(
            r.coeff.clone(),
            r.gens.iter().filter(|g| match **g {
                Generator::H(i) | Generator::O(i) => i <= p.m,
                Generator::Tau(i, j) => i <= p.m && j <= p.m,
            }).copied().collect(),
        );
        let x = class_of(&ring, &[fix(&seed[0])]);
        let y = class_of(&ring, &[fix(&seed[1]), fix(&seed[2])]);
        let z = class_of(&ring, &[fix(&seed[2])]);
        prop_assert_eq!(ring.multiply(&x, &y).unwrap(), ring.multiply(&y, &x).unwrap());
        let left = ring.multiply(&ring.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = ring.multiply(&x, &ring.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}
