//! Counter-based seed derivation.
//!
//! Every random choice in the crate is a pure function of a 64-bit master
//! seed and a counter, so results do not depend on iteration order or on
//! how work is split across threads. The stream is SplitMix64: output `i` of
//! key `k` is `mix64(k + (i + 1) * GOLDEN)`. Distinct uses are separated by
//! XOR-ing a domain constant into the master seed before keying.

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// Domain for the per-pair edge stream of `sample_gnp`.
pub const DOMAIN_EDGES: u64 = 0x6564_6765_735f_676e;
/// Domain for per-trial seeds in experiments.
pub const DOMAIN_TRIALS: u64 = 0x7472_6961_6c73_5f78;

/// SplitMix64 finalizer: a bijective avalanche permutation of `u64`.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Output `counter` of the stream keyed by `(seed, domain)`.
#[inline]
pub fn stream(seed: u64, domain: u64, counter: u64) -> u64 {
    let key = mix64(seed ^ domain);
    mix64(key.wrapping_add(counter.wrapping_add(1).wrapping_mul(GOLDEN)))
}

/// Seed of trial `index` under `master`.
#[inline]
pub fn trial_seed(master: u64, index: u64) -> u64 {
    stream(master, DOMAIN_TRIALS, index)
}

/// Maps a 64-bit word to a uniform float in `[0, 1)` using its top 53 bits.
#[inline]
pub fn unit_f64(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
