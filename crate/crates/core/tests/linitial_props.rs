use proptest::prelude::*;

use crossfam_core::linitial::max_cross_size;
use crossfam_core::{binomial, size_from_id, size_from_id_direct, LInitialFamily, Natural};

fn shape() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=40).prop_flat_map(|n| (Just(n), 1..n)).prop_flat_map(|(n, a)| (Just(n), Just(a), 1..=n - a))
}

fn pick(total: &Natural, seed: u64) -> Natural {
    Natural::from(seed) % total + 1u32
}

proptest! {
    #[test]
    fn sizes_round_trip((n, a, _b) in shape(), seed in any::<u64>()) {
        let r = pick(&binomial(n as i64, a as i64), seed);
        let f = LInitialFamily::from_size(n, a, &r).unwrap();
        prop_assert_eq!(f.size(), &r);
        prop_assert_eq!(size_from_id(f.id()), r.clone());
        prop_assert_eq!(size_from_id_direct(f.id()), r);
    }

    #[test]
    fn threshold_directions_agree((n, a, b) in shape(), s in any::<u64>(), u in any::<u64>()) {
        let ra = pick(&binomial(n as i64, a as i64), s);
        let rb = pick(&binomial(n as i64, b as i64), u);
        let fa = LInitialFamily::from_size(n, a, &ra).unwrap();
        let fb = LInitialFamily::from_size(n, b, &rb).unwrap();
        let forward = rb <= max_cross_size(fa.id(), b);
        let backward = ra <= max_cross_size(fb.id(), a);
        prop_assert_eq!(forward, backward);
    }
}
