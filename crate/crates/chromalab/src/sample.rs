//! Seeded `G(n,p)` sampling driven by a counter-based stream.
//!
//! Every random draw is a pure function of `(seed, trial_index, counter)`, so
//! sampled graphs are identical across platforms, thread schedules and
//! execution orders. The generator is a splitmix-style counter hash: the
//! stream position is mixed through two rounds of the 64-bit finalizer.

use crate::graph::{Graph, GraphError};
use crate::graph::VertexSet;

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// 64-bit avalanche finalizer (splitmix64).
#[inline]
pub fn mix64(mut x: u64) -> u64 {
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^= x >> 31;
    x
}

/// Combines seed components into one stream key.
pub fn derive_key(parts: &[u64]) -> u64 {
    let mut acc = 0x853c_49e6_748f_ea9bu64;
    for &p in parts {
        acc = mix64(acc ^ mix64(p.wrapping_add(GOLDEN)));
    }
    acc
}

#[inline]
fn draw(key: u64, counter: u64) -> u64 {
    mix64(key.wrapping_add(counter.wrapping_mul(GOLDEN)))
}

#[inline]
fn unit_from(bits: u64) -> f64 {
    // 53 uniform bits in [0, 1).
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// A deterministic counter stream for auxiliary randomness (subset sampling,
/// per-trial seeds). Independent streams are obtained from distinct keys.
#[derive(Clone, Debug)]
pub struct CounterStream {
    key: u64,
    counter: u64,
}

impl CounterStream {
    pub fn new(key: u64) -> Self {
        CounterStream { key, counter: 0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        let v = draw(self.key, self.counter);
        self.counter += 1;
        v
    }

    /// Uniform in `[0, 1)`.
    pub fn next_unit(&mut self) -> f64 {
        unit_from(self.next_u64())
    }

    /// Uniform integer in `[0, bound)`. `bound` must be positive.
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }
}

/// Parameters pinning one sampled graph: identical specs yield identical
/// edge sets regardless of platform or thread schedule.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub trial_index: u64,
}

impl SampleSpec {
    pub fn new(n: usize, p: f64, seed: u64, trial_index: u64) -> Result<Self, GraphError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(GraphError::InvalidProbability { p });
        }
        Ok(SampleSpec {
            n,
            p,
            seed,
            trial_index,
        })
    }
}

/// Samples `G(n,p)`: each unordered pair is an edge independently with
/// probability `p`, decided by the pair's position in the keyed stream.
pub fn sample_gnp(spec: &SampleSpec) -> Graph {
    let n = spec.n;
    let mut g = Graph::empty(n);
    if n < 2 {
        return g;
    }
    let key = derive_key(&[spec.seed, spec.trial_index]);
    let mut pair = 0u64;
    let mut edges = 0usize;
    for u in 0..n - 1 {
        for v in u + 1..n {
            if unit_from(draw(key, pair)) < spec.p {
                g.row_mut(u)[crate::bits::word_of(v)] |= crate::bits::mask_of(v);
                g.row_mut(v)[crate::bits::word_of(u)] |= crate::bits::mask_of(u);
                edges += 1;
            }
            pair += 1;
        }
    }
    g.set_edge_count(edges);
    g
}

/// Uniformly random `k`-subset of `0..n` via a partial Fisher-Yates shuffle.
pub fn random_subset(n: usize, k: usize, stream: &mut CounterStream) -> VertexSet {
    let k = k.min(n);
    let mut pool: Vec<usize> = (0..n).collect();
    let mut set = VertexSet::empty(n);
    for i in 0..k {
        let j = i + stream.next_below(n - i);
        pool.swap(i, j);
        set.insert(pool[i]);
    }
    set
}
