use lepaths::paths::{count_paths, count_paths_q, LevelAnchors, LevelDecomposition};
use lepaths::region::{enumerate_regions, poset_of_region, random_region, region_of};
use lepaths::{Chain, GridPoint, QPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// With absolute step weights (an East step leaving `(i, j)` weighs
/// `i + j + 1`) the two anchor steps of a first-chain level weigh `L(x) +
/// L(y) = 2w + k`, so every level is that monomial times a product of three
/// path counts.
#[test]
fn first_chain_levels_carry_the_anchor_weight() {
    let mut checked = 0;
    for a in 2..=4 {
        for b in 0..=3 {
            for r in enumerate_regions(a, b) {
                let anchors = LevelAnchors {
                    chain: Chain::First,
                    s: 1,
                    r: a - 1,
                };
                let dec = LevelDecomposition::new(&r, anchors).unwrap();
                let n = (a + b) as i64;
                for w in 1..=n {
                    for k in 1..n {
                        let level = dec.level(w, k);
                        assert_eq!(level, dec.level_brute(w, k));
                        if level.is_zero() {
                            continue;
                        }
                        let (y, v) = (anchors.y_point(w), anchors.v_point(w + k));
                        let bare = &(&count_paths_q(&r, GridPoint::ORIGIN, y)
                            * &count_paths_q(&r, y + GridPoint::EAST, v))
                            * &count_paths_q(&r, v + GridPoint::EAST, r.corner());
                        assert_eq!(level, bare.shift((2 * w + k) as u32));
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn path_counts_match_extension_counts_on_random_regions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let r = random_region(5, 4, &mut rng);
        let (p, cp) = poset_of_region(&r);
        assert_eq!(region_of(&p, &cp), r);
        assert_eq!(
            count_paths(&r, GridPoint::ORIGIN, r.corner()),
            p.count_extensions()
        );
        let total: QPoly = count_paths_q(&r, GridPoint::ORIGIN, r.corner());
        assert_eq!(total.eval_one(), p.count_extensions());
    }
}

proptest! {
    #[test]
    fn path_counts_are_multiplicative_along_a_forced_point(a in 1usize..=4, b in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = random_region(a, b, &mut rng);
        // Paths through the corner's west neighbour or south neighbour
        // partition all paths.
        let q = r.corner();
        let total = count_paths_q(&r, GridPoint::ORIGIN, q).eval_one();
        let west = GridPoint::new(q.x - 1, q.y);
        let south = GridPoint::new(q.x, q.y - 1);
        let split = count_paths(&r, GridPoint::ORIGIN, west) + count_paths(&r, GridPoint::ORIGIN, south);
        prop_assert_eq!(total, split);
    }
}
