//! m-ballot paths: rotation covers, the (m+1)-ary tree read off in prefix
//! order, and the check that its polynomial at 1 counts the paths below.

use tamari::mtamari::{
    count_path_intervals, enumerate_ballot_paths, mary_tamari_poly, path_to_mary_prefix,
    phi_m_series, verify_path_counts,
};

fn main() -> tamari::Result<()> {
    let m = 2;
    for d in enumerate_ballot_paths(m, 3)? {
        let tree = path_to_mary_prefix(&d);
        let covers: Vec<String> = d.rotation_covers().iter().map(|c| c.word()).collect();
        println!(
            "{}  {tree}  P = {}  covers {covers:?}",
            d.word(),
            mary_tamari_poly(&tree)
        );
    }

    let checks = verify_path_counts(m, 4)?;
    let passed = checks.iter().filter(|c| c.passed()).count();
    println!("m = {m}, n = 4: {passed} of {} paths checked", checks.len());

    let phi = phi_m_series(m, 4)?.at_x_one();
    for n in 0..=4 {
        println!(
            "n = {n}: {} intervals by search, {} from the series",
            count_path_intervals(m, n)?,
            phi.coefficient(0, n as u32, 0)
        );
    }
    Ok(())
}
