//! Counts Tamari intervals four independent ways and prints them side by
//! side.

use tamari::compose::enumerate_interval_posets_upto;
use tamari::order::count_intervals_bruteforce;
use tamari::poly::{chapoton_count, phi_series};

fn main() -> tamari::Result<()> {
    let max = 6;
    let by_composition = enumerate_interval_posets_upto(max)?;
    let series = phi_series(max as u32).at_x_one();

    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>10}",
        "n", "formula", "compose", "brute", "series"
    );
    for (n, level) in by_composition.iter().enumerate() {
        println!(
            "{n:>3} {:>10} {:>10} {:>10} {:>10}",
            chapoton_count(n as u64),
            level.len(),
            count_intervals_bruteforce(n)?,
            series.coefficient(0, n as u32, 0),
        );
    }

    // the closed formula has no size limit
    println!("n = 50: {}", chapoton_count(50));
    Ok(())
}
