use std::collections::BTreeMap;

use pathrsk_core::queueing::{depoissonized_dist, simulate_poisson, transient_dist, PoissonDrive};
use pathrsk_core::symfunc::{rational, to_f64, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rates(mu: &[(i64, i64)]) -> (Vec<Rational>, Vec<f64>) {
    let p: Vec<Rational> = mu.iter().map(|&(a, b)| rational(a, b)).collect();
    let f = p.iter().map(to_f64).collect();
    (p, f)
}

#[test]
fn poisson_run_conditioned_on_event_count() {
    let laws: [&[(i64, i64)]; 3] = [&[(1, 1)], &[(2, 5), (3, 5)], &[(1, 2), (1, 3), (1, 6)]];
    let runs = 200_000u64;
    for (idx, mu) in laws.iter().enumerate() {
        let (p, f) = rates(mu);
        let drive = PoissonDrive::new(f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7 + idx as u64);
        let mut counts: BTreeMap<usize, BTreeMap<Vec<u32>, u64>> = BTreeMap::new();
        for _ in 0..runs {
            let run = simulate_poisson(&drive, 3.0, &mut rng);
            if run.events <= 6 {
                *counts.entry(run.events).or_default().entry(run.departures).or_default() += 1;
            }
        }
        for n in 0..=6u32 {
            let seen = counts.remove(&(n as usize)).unwrap_or_default();
            let total: u64 = seen.values().sum();
            assert!(total > 1_000, "k={} n={n}: only {total} runs", mu.len());
            let exact = depoissonized_dist(&p, n);
            for (d, q) in &exact {
                let q = to_f64(q);
                let hits = seen.get(d).copied().unwrap_or(0);
                let freq = hits as f64 / total as f64;
                let se = (q * (1.0 - q) / total as f64).sqrt();
                assert!((freq - q).abs() <= 3.0 * se + 1e-12, "k={} n={n} d={d:?}: {freq} vs {q}", mu.len());
            }
            for d in seen.keys() {
                assert!(exact.iter().any(|(e, _)| e == d), "k={} n={n}: unexpected {d:?}", mu.len());
            }
        }
    }
}

fn departure_vectors(k: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for v in &out {
            let top = v.last().copied().unwrap_or(cap);
            for x in 0..=top {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

#[test]
fn transient_dist_is_normalized() {
    let cases: [(&[f64], f64); 4] = [(&[1.0], 2.5), (&[0.3, 0.7], 2.0), (&[2.0, 1.0], 1.0), (&[0.5, 0.25, 0.25], 2.0)];
    let cap = 24;
    for (mu, t) in cases {
        let drive = PoissonDrive::new(mu.to_vec()).unwrap();
        let mut mass = 0.0;
        let mut tail = 0.0f64;
        for d in departure_vectors(mu.len(), cap) {
            let b = transient_dist(&drive, t, &d, 1e-12, 10_000).unwrap();
            mass += b.value;
            tail = tail.max(b.tail_bound);
        }
        // every vector with D1 > cap needs more than cap events
        let scaled = t * drive.total();
        let mut w = (-scaled).exp();
        let mut below = w;
        for n in 1..=cap {
            w *= scaled / f64::from(n);
            below += w;
        }
        let missing = (1.0 - below).max(0.0);
        assert!(mass + missing + tail >= 1.0 - 1e-9, "mu={mu:?} t={t}: mass {mass}");
        assert!(mass <= 1.0 + 1e-9, "mu={mu:?} t={t}: mass {mass}");
    }
}
