//! Exact element-order census by breadth-first closure over a generating set.
//!
//! Elements are stored packed: degree ≤ 16 in one `u64` (4 bits per image),
//! degree ≤ 25 in one `u128` (5 bits per image), larger degrees as byte or
//! `u16` arrays. The visited set is split into shards, each behind its own
//! lock, so workers expanding one BFS level can insert concurrently. Counts
//! are summed per level, so the result does not depend on the worker count.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use super::perm::{order_of_images, Perm};
use crate::error::{Error, Result};

/// Default bound on the number of elements a census may visit.
pub const DEFAULT_ELEMENT_CAP: u64 = 1 << 21;

const SHARDS: usize = 64;
const CHUNK: usize = 1024;

trait Packed: Clone + Eq + Hash + Send + Sync {
    fn pack(images: &[u32]) -> Self;
    fn unpack(&self, out: &mut [u32]);
}

impl Packed for u64 {
    fn pack(images: &[u32]) -> Self {
        images.iter().rev().fold(0, |acc, &x| acc << 4 | x as u64)
    }
    fn unpack(&self, out: &mut [u32]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = (self >> (4 * i) & 0xf) as u32;
        }
    }
}

impl Packed for u128 {
    fn pack(images: &[u32]) -> Self {
        images.iter().rev().fold(0, |acc, &x| acc << 5 | x as u128)
    }
    fn unpack(&self, out: &mut [u32]) {
        for (i, o) in out.iter_mut().enumerate() {
            *o = (self >> (5 * i) & 0x1f) as u32;
        }
    }
}

impl Packed for Box<[u8]> {
    fn pack(images: &[u32]) -> Self {
        images.iter().map(|&x| x as u8).collect()
    }
    fn unpack(&self, out: &mut [u32]) {
        for (o, &x) in out.iter_mut().zip(self.iter()) {
            *o = x as u32;
        }
    }
}

impl Packed for Box<[u16]> {
    fn pack(images: &[u32]) -> Self {
        images.iter().map(|&x| x as u16).collect()
    }
    fn unpack(&self, out: &mut [u32]) {
        for (o, &x) in out.iter_mut().zip(self.iter()) {
            *o = x as u32;
        }
    }
}

/// Order counts of the group generated by `gens`, acting on `degree` points.
///
/// Fails with [`Error::CapExceeded`] once more than `cap` elements are seen.
pub fn enumerate_order_counts(
    degree: usize,
    gens: &[Perm],
    cap: u64,
    threads: usize,
) -> Result<BTreeMap<u64, u128>> {
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::domain("generator degree mismatch"));
    }
    if degree > 1 << 16 {
        return Err(Error::Unsupported(format!("degree {degree} is too large to enumerate")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    pool.install(|| match degree {
        0..=16 => bfs::<u64>(degree, gens, cap),
        17..=25 => bfs::<u128>(degree, gens, cap),
        26..=256 => bfs::<Box<[u8]>>(degree, gens, cap),
        _ => bfs::<Box<[u16]>>(degree, gens, cap),
    })
}

fn shard_of<K: Hash>(key: &K) -> usize {
    let mut h = DefaultHasher::new();
    key.hash(&mut h);
    (h.finish() >> 7) as usize % SHARDS
}

fn bfs<K: Packed>(degree: usize, gens: &[Perm], cap: u64) -> Result<BTreeMap<u64, u128>> {
    let shards: Vec<Mutex<HashSet<K>>> = (0..SHARDS).map(|_| Mutex::new(HashSet::new())).collect();
    let identity = K::pack(Perm::identity(degree).images());
    shards[shard_of(&identity)].lock().expect("unpoisoned").insert(identity.clone());
    let visited = AtomicU64::new(1);
    let overflow = AtomicBool::new(false);
    if cap == 0 {
        return Err(Error::CapExceeded { cap, visited: 1 });
    }

    let mut counts: BTreeMap<u64, u128> = BTreeMap::from([(1, 1)]);
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let results: Vec<(Vec<K>, BTreeMap<u64, u128>)> = frontier
            .par_chunks(CHUNK)
            .map(|chunk| {
                let mut next = Vec::new();
                let mut local: BTreeMap<u64, u128> = BTreeMap::new();
                let mut cur = vec![0u32; degree];
                let mut prod = vec![0u32; degree];
                for key in chunk {
                    if overflow.load(Ordering::Relaxed) {
                        break;
                    }
                    key.unpack(&mut cur);
                    for g in gens {
                        for (p, &c) in prod.iter_mut().zip(&cur) {
                            *p = g.apply(c);
                        }
                        let k = K::pack(&prod);
                        let fresh = shards[shard_of(&k)].lock().expect("unpoisoned").insert(k.clone());
                        if !fresh {
                            continue;
                        }
                        if visited.fetch_add(1, Ordering::Relaxed) + 1 > cap {
                            overflow.store(true, Ordering::Relaxed);
                            break;
                        }
                        let order = order_of_images(&prod).expect("element orders of enumerable groups fit in u64");
                        *local.entry(order).or_default() += 1;
                        next.push(k);
                    }
                }
                (next, local)
            })
            .collect();
        if overflow.load(Ordering::Relaxed) {
            return Err(Error::CapExceeded {
                cap,
                visited: visited.load(Ordering::Relaxed).min(cap + 1),
            });
        }
        frontier = Vec::new();
        for (next, local) in results {
            frontier.extend(next);
            for (k, c) in local {
                *counts.entry(k).or_default() += c;
            }
        }
    }
    Ok(counts)
}
