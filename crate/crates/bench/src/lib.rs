//! Shared fixtures for the criterion benchmarks in `benches/`.

use bcr_core::{random_data, SeifertData};

/// Seeded duality-consistent data with every block of size `size`
/// (the middle block, when there is one, rounded up to even size).
pub fn fixture(n: usize, size: usize, seed: u64) -> SeifertData {
    let sizes: Vec<usize> = (1..=n)
        .map(|d| if 2 * d == n + 1 { size + size % 2 } else { size })
        .collect();
    random_data(n, &sizes, 2, seed).expect("symmetric layout")
}
