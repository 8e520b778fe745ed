use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pathrsk_core::continuous::{gamma, gc_phi, random_path, sup_integration_by_parts};
use pathrsk_core::lattice::{inf_conv, queue_length, sup_conv, word_to_walk, Path, Word};
use pathrsk_core::queueing::{bessel_i, transient_k2};
use pathrsk_core::symfunc::{rational, schur, schur_bialternant, Rational};
use pathrsk_core::tableaux::{greene, rs, rs_inverse, Insertion, Partition};
use pathrsk_core::transform::{gmap, reconstruct, sup_fold};

fn path(steps: &[bool]) -> Path {
    Path::from_steps(steps)
}

fn word_strategy(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=k as u8, 0..max_len).prop_map(move |v| Word::new(v, k).unwrap())
}

fn pair_strategy(max_len: usize) -> impl Strategy<Value = (Vec<bool>, Vec<bool>)> {
    (0..max_len).prop_flat_map(|n| (prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n)))
}

proptest! {
    #[test]
    fn convolutions_split_the_sum((a, b) in pair_strategy(60)) {
        let (x, y) = (path(&a), path(&b));
        let lo = inf_conv(&x, &y).unwrap();
        let hi = sup_conv(&y, &x).unwrap();
        for l in 0..=x.horizon() {
            prop_assert_eq!(lo.value(l) + hi.value(l), x.value(l) + y.value(l));
        }
        prop_assert!(lo.values().windows(2).all(|w| w[0] <= w[1]));
        let q = queue_length(&x, &y).unwrap();
        for (l, ql) in q.iter().enumerate() {
            prop_assert_eq!(*ql, x.value(l) - lo.value(l));
        }
    }

    #[test]
    fn transform_lands_in_chamber(w in word_strategy(4, 40)) {
        let x = word_to_walk(&w);
        let g = gmap(&x);
        prop_assert!(g.in_chamber());
        prop_assert_eq!(g.path().component(3), &sup_fold(&x));
        for n in 0..=w.len() {
            prop_assert_eq!(g.at(n).iter().sum::<u32>(), n as u32);
        }
    }

    #[test]
    fn shape_partial_sums_are_greene(w in word_strategy(3, 25)) {
        let (p, _) = rs(&w, Insertion::Column);
        let shape = p.shape().padded(3);
        let g = gmap(&word_to_walk(&w)).at(w.len());
        for i in 1..=3 {
            let partial: u32 = shape[..i].iter().sum();
            prop_assert_eq!(greene(&w, i), partial);
            prop_assert_eq!(g[3 - i..].iter().sum::<u32>(), partial);
        }
    }

    #[test]
    fn insertion_is_invertible(w in word_strategy(5, 30), row in any::<bool>()) {
        let mode = if row { Insertion::Row } else { Insertion::Column };
        let (p, q) = rs(&w, mode);
        prop_assert_eq!(rs_inverse(&p, &q, mode).unwrap(), w);
    }

    #[test]
    fn certified_recovery_is_exact(w in word_strategy(3, 30)) {
        let x = word_to_walk(&w);
        let rec = reconstruct(&gmap(&x));
        for n in 0..=w.len() {
            let r = rec.at(n);
            for i in 0..3 {
                if r.certified[i] {
                    prop_assert_eq!(r.values[i], i64::from(x.at(n)[i]));
                }
            }
        }
    }

    #[test]
    fn bialternant_matches_branching(parts in prop::collection::vec(0u32..4, 3), a in 1i64..9, b in 1i64..9) {
        let mut parts = parts;
        parts.sort_unstable_by(|u, v| v.cmp(u));
        let l = Partition::new(parts).unwrap();
        let x = [rational(a, 10), rational(b, 10) + rational(1, 100), rational(1, 7)];
        prop_assume!(x[0] != x[1] && x[0] != x[2] && x[1] != x[2]);
        prop_assert_eq!(schur_bialternant(&l, &x).unwrap(), schur(&l, &x));
    }

    #[test]
    fn continuous_transform_properties(seed in any::<u64>(), k in 2usize..4, pieces in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_path(k, pieces, &mut rng);
        let g = gamma(&f).unwrap();
        let one = Rational::one();
        let total = |v: Vec<Rational>| v.into_iter().sum::<Rational>();
        prop_assert_eq!(total(g.eval(&one).unwrap()), total(f.eval(&one).unwrap()));
        prop_assert!(gc_phi(&f).unwrap().interlaces());
        let (l, r) = sup_integration_by_parts(&f.coords()[0], &f.coords()[1]).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn two_station_law_is_a_probability(m1 in 0.05f64..0.95, t in 0.0f64..3.0) {
        let mu = [m1, 1.0 - m1];
        let mut total = 0.0;
        for d1 in 0..40 {
            for d2 in 0..=d1 {
                let v = transient_k2(&mu, t, [d1, d2]).unwrap();
                prop_assert!(v >= 0.0);
                total += v;
            }
        }
        prop_assert!((total - 1.0).abs() < 1e-9);
    }
}

#[test]
fn bessel_reference_values() {
    // I_0(1) and I_1(2) from the ascending series summed in extended precision
    assert_eq!(bessel_i(0, 0.0), 1.0);
    assert_eq!(bessel_i(1, 0.0), 0.0);
    assert!((bessel_i(0, 1.0) - 1.266_065_877_752_008_4).abs() < 1e-15);
    assert!((bessel_i(1, 2.0) - 1.590_636_854_637_329).abs() < 1e-14);
}
