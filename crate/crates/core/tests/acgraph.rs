mod common;

use common::{check_pipeline, random_ac_drawing};
use fap::AngleSpec;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn angles() -> Vec<AngleSpec> {
    vec![
        AngleSpec::frac_pi(1, 3),
        AngleSpec::frac_pi(1, 4),
        AngleSpec::frac_pi(1, 5),
        AngleSpec::frac_pi(2, 5),
        AngleSpec::frac_pi(1, 2),
        AngleSpec::irrational(1.0).unwrap(),
    ]
}

#[test]
fn red_pipeline_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut instances = 0;
    let mut with_tier1 = 0;
    let mut with_overlaps = 0;
    for alpha in angles() {
        for n in [6, 8, 10, 12] {
            let d = random_ac_drawing(&mut rng, n, alpha, 200);
            let out = check_pipeline(&d).unwrap();
            instances += 1;
            with_tier1 += usize::from(out.tier1);
            with_overlaps += usize::from(out.overlaps);
        }
    }
    assert!(instances >= 20);
    assert!(with_tier1 > 0);
    assert!(with_overlaps > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn red_pipeline_holds(seed in any::<u64>(), which in 0usize..6, n in 4usize..=12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_ac_drawing(&mut rng, n, angles()[which], 250);
        check_pipeline(&d).unwrap();
    }
}
