//! Seeded random generators shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use finspace_core::Poset;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random poset on `min..=max` elements. Relations only point from lower to
/// higher index, so the relation set fed to the builder is always acyclic;
/// the builder takes the transitive closure.
pub fn random_poset(r: &mut ChaCha8Rng, min: usize, max: usize) -> Poset {
    let n = r.gen_range(min..=max);
    let elements: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_range(0u32..10) < 3 {
                relations.push((elements[i].clone(), elements[j].clone()));
            }
        }
    }
    Poset::build_owned(elements, relations).expect("acyclic by construction")
}

/// Random poset with at most `cap` chains in total (rejection sampling), to
/// keep the chain complexes of subdivisions at a tractable size.
pub fn random_small_poset(r: &mut ChaCha8Rng, min: usize, max: usize, cap: usize) -> Poset {
    loop {
        let p = random_poset(r, min, max);
        if p.chain_count() <= cap {
            return p;
        }
    }
}

/// Like `random_small_poset` but guaranteed to carry at least one relation.
pub fn random_small_nondiscrete_poset(
    r: &mut ChaCha8Rng,
    min: usize,
    max: usize,
    cap: usize,
) -> Poset {
    loop {
        let p = random_small_poset(r, min.max(2), max, cap);
        if p.covers().next().is_some() {
            return p;
        }
    }
}

/// Random open (= downward-closed) subset.
pub fn random_open_subset(r: &mut ChaCha8Rng, p: &Poset) -> Vec<String> {
    let mut out: BTreeSet<String> = BTreeSet::new();
    for x in p.elements() {
        if r.gen_range(0u32..2) == 0 {
            out.extend(p.down_set(x, false).unwrap());
        }
    }
    out.into_iter().collect()
}

/// Random nonempty convex subset: a random seed set together with every
/// element lying between two seeds. One closure pass suffices, because an
/// element between two closure points is already between two seeds.
pub fn random_convex_subset(r: &mut ChaCha8Rng, p: &Poset) -> Vec<String> {
    let n = p.len();
    assert!(n > 0);
    let mut seed = vec![false; n];
    for s in seed.iter_mut() {
        *s = r.gen_range(0u32..4) == 0;
    }
    if !seed.iter().any(|&b| b) {
        seed[r.gen_range(0..n)] = true;
    }
    let mut inside = seed.clone();
    for z in 0..n {
        if !inside[z] {
            let below = (0..n).any(|x| seed[x] && p.leq(x, z));
            let above = (0..n).any(|y| seed[y] && p.leq(z, y));
            if below && above {
                inside[z] = true;
            }
        }
    }
    p.elements()
        .iter()
        .enumerate()
        .filter(|(i, _)| inside[*i])
        .map(|(_, e)| e.clone())
        .collect()
}

/// Random antichain-induced filtration: a random bottom level, then repeated
/// extraction of random antichains from the remaining elements.
pub fn random_filtration(r: &mut ChaCha8Rng, p: &Poset) -> Vec<Vec<String>> {
    let n = p.len();
    let mut level: Vec<usize> = (0..n).filter(|_| r.gen_range(0u32..3) == 0).collect();
    let mut remaining: Vec<usize> = (0..n).filter(|i| !level.contains(i)).collect();
    let names = |idx: &[usize]| -> Vec<String> {
        idx.iter().map(|&i| p.name(i).to_string()).collect()
    };
    let mut levels = vec![names(&level)];
    while !remaining.is_empty() {
        remaining.shuffle(r);
        let mut antichain = vec![remaining[0]];
        for &cand in &remaining[1..] {
            if r.gen_range(0u32..2) == 0
                && antichain.iter().all(|&c| !p.comparable(c, cand))
            {
                antichain.push(cand);
            }
        }
        remaining.retain(|i| !antichain.contains(i));
        level.extend(antichain);
        levels.push(names(&level));
    }
    levels
}
