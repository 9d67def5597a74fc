//! Composes two interval-posets, decomposes the results again and checks
//! that the statistics follow the bilinear form.

use tamari::interval_poset::stat_monomial;
use tamari::poly::{bilinear_b, bilinear_b_bivar};
use tamari::{compose, decompose, IntervalPoset, Polynomial};

fn main() -> tamari::Result<()> {
    let left: IntervalPoset = "n=3\n3<2".parse()?;
    let right: IntervalPoset = "n=3\n1<2,3<2".parse()?;

    let out = compose(&left, &right);
    for p in &out {
        println!("{}", p.to_string().replace('\n', "  "));
        assert_eq!(decompose(p)?, (left.clone(), right.clone()));
    }

    let sum: Polynomial = out.iter().map(stat_monomial).sum();
    let (f, g) = (stat_monomial(&left), stat_monomial(&right));
    println!("statistics        {sum}");
    println!("B(f, g) with b    {}", bilinear_b_bivar(&f, &g));
    println!(
        "B(f, g) at b = 1  {}",
        bilinear_b(&f.at_b_one(), &g.at_b_one())
    );
    Ok(())
}
