//! Builds the interval-poset of a pair of comparable trees and reads back
//! everything it encodes: the two bounding trees, the trees in between and
//! the linear extensions.

use tamari::interval_poset::{make_interval, trees_in_interval};
use tamari::{BinaryTree, IntervalPoset};

fn main() -> tamari::Result<()> {
    let lower: BinaryTree = "[[[_,[_,_]],_],_]".parse()?;
    let upper: BinaryTree = "[_,[[_,_],[_,_]]]".parse()?;

    let p = make_interval(&lower, &upper)?.expect("lower ≤ upper");
    println!("{p}");
    println!("lower {}  upper {}", p.lower_tree(), p.upper_tree());
    println!(
        "increasing part {:?}",
        p.increasing_part().cover_relations()
    );
    println!(
        "decreasing part {:?}",
        p.decreasing_part().cover_relations()
    );

    println!("trees in the interval:");
    for t in trees_in_interval(&p)? {
        println!("  {t}");
    }

    let ext = p.linear_extensions()?;
    println!(
        "{} linear extensions, from {} to {}",
        ext.len(),
        p.min_linear_extension(),
        p.max_linear_extension()
    );

    // the text format round-trips and rejects non-interval-posets
    let back: IntervalPoset = p.to_string().parse()?;
    assert_eq!(back, p);
    match "n=3\n1<3".parse::<IntervalPoset>() {
        Err(e) => println!("rejected 1<3 alone: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
