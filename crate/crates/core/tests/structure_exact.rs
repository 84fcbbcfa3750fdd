//! Link solvers checked against exhaustive subset enumeration, plus the
//! packing/covering duality property.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperproc::{
    max_quasi_disjoint, min_transversal, quasi_profile, sample_gnm, Hypergraph, Seed,
};

/// Random link instance: distinct petals of size `d - 1` over a small pool,
/// realized as a hypergraph centered at vertex 1.
fn random_link(rng: &mut ChaCha8Rng) -> Hypergraph {
    let d = rng.gen_range(2..=4u32);
    let pool = rng.gen_range(4..=9u32);
    let degree = rng.gen_range(1..=8usize);
    let mut petals: Vec<Vec<u32>> = Vec::new();
    let mut guard = 0;
    while petals.len() < degree && guard < 200 {
        guard += 1;
        let mut petal = Vec::new();
        while petal.len() < (d - 1) as usize {
            let v = rng.gen_range(2..=pool + 1);
            if !petal.contains(&v) {
                petal.push(v);
            }
        }
        petal.sort_unstable();
        if !petals.contains(&petal) {
            petals.push(petal);
        }
    }
    let edges: Vec<Vec<u32>> = petals
        .iter()
        .map(|p| {
            let mut e = vec![1u32];
            e.extend_from_slice(p);
            e
        })
        .collect();
    Hypergraph::build(pool + 1, d, &edges).unwrap()
}

fn petals_of(h: &Hypergraph, v: u32) -> Vec<Vec<u32>> {
    hyperproc::link_of(h, v).petals
}

fn brute_max_packing(petals: &[Vec<u32>]) -> usize {
    let n = petals.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let picked: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let ok = picked.iter().enumerate().all(|(a, &i)| {
            picked[a + 1..]
                .iter()
                .all(|&j| petals[i].iter().all(|x| !petals[j].contains(x)))
        });
        if ok {
            best = best.max(picked.len());
        }
    }
    best
}

fn brute_min_hitting(petals: &[Vec<u32>]) -> usize {
    let mut universe: Vec<u32> = petals.iter().flatten().copied().collect();
    universe.sort_unstable();
    universe.dedup();
    let u = universe.len();
    let mut best = petals.len();
    for mask in 0u32..(1 << u) {
        let count = mask.count_ones() as usize;
        if count >= best {
            continue;
        }
        let hits_all = petals.iter().all(|p| {
            p.iter()
                .any(|x| mask >> universe.binary_search(x).unwrap() & 1 == 1)
        });
        if hits_all {
            best = count;
        }
    }
    best
}

#[test]
fn solvers_match_exhaustive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x71AC_u64);
    for case in 0..500 {
        let h = random_link(&mut rng);
        let petals = petals_of(&h, 1);
        let qd = max_quasi_disjoint(&h, 1).unwrap();
        assert_eq!(
            qd.size as usize,
            brute_max_packing(&petals),
            "packing mismatch on case {case}: {petals:?}"
        );
        // witness is pairwise quasi-disjoint
        for (a, &i) in qd.witness.iter().enumerate() {
            for &j in &qd.witness[a + 1..] {
                let ei: Vec<u32> = h.edge(i as usize).to_vec();
                let ej: Vec<u32> = h.edge(j as usize).to_vec();
                let shared: Vec<u32> =
                    ei.iter().copied().filter(|v| ej.contains(v)).collect();
                assert_eq!(shared, vec![1], "witness edges {i},{j} overlap beyond center");
            }
        }
        let tr = min_transversal(&h, 1).unwrap();
        assert_eq!(
            tr.size as usize,
            brute_min_hitting(&petals),
            "transversal mismatch on case {case}: {petals:?}"
        );
        // witness hits every petal and avoids the center
        assert!(!tr.witness.contains(&1));
        for p in &petals {
            assert!(
                p.iter().any(|x| tr.witness.contains(x)),
                "petal {p:?} missed by {:?}",
                tr.witness
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Weak duality on every vertex of random hypergraphs:
    /// packing <= covering <= degree.
    #[test]
    fn duality_holds_everywhere(master in any::<u64>(), m in 0u64..40) {
        let h = sample_gnm(9, 3, m.min(hyperproc::binomial(9, 3).unwrap()), Seed::new(master, 0)).unwrap();
        for &v in h.vertices() {
            let qd = max_quasi_disjoint(&h, v).unwrap();
            let tr = min_transversal(&h, v).unwrap();
            let deg = h.degree_of(v);
            prop_assert!(qd.size <= tr.size, "packing {} > covering {}", qd.size, tr.size);
            prop_assert!(tr.size <= deg, "covering {} > degree {}", tr.size, deg);
        }
    }

    #[test]
    fn profile_total_is_vertex_count(master in any::<u64>(), m in 0u64..56) {
        let h = sample_gnm(8, 3, m.min(hyperproc::binomial(8, 3).unwrap()), Seed::new(master, 1)).unwrap();
        let profile = quasi_profile(&h).unwrap();
        prop_assert_eq!(profile.total(), h.vertex_count() as u64);
    }
}
