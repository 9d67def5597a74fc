//! Sylvester classes: the permutations whose binary search tree is a given
//! tree, and how Tamari intervals become weak-order intervals.

use tamari::interval_poset::make_interval;
use tamari::order::{sylvester_class, weak_leq};
use tamari::{BinaryTree, Permutation};

fn main() -> tamari::Result<()> {
    let t: BinaryTree = "[[_,_],[[_,_],[_,_]]]".parse()?;
    let class = sylvester_class(&t)?;
    println!("{t} has {} permutations:", class.len());
    for p in &class {
        println!("  {p}  coinversions {:?}", p.coinv());
    }

    let lower: BinaryTree = "[[[_,[_,_]],_],_]".parse()?;
    let upper: BinaryTree = "[_,[[_,_],[_,_]]]".parse()?;
    let p = make_interval(&lower, &upper)?.expect("comparable");
    let (lo, hi) = (p.min_linear_extension(), p.max_linear_extension());
    let inside: Vec<Permutation> = Permutation::all(4)?
        .into_iter()
        .filter(|s| weak_leq(&lo, s).unwrap() && weak_leq(s, &hi).unwrap())
        .collect();
    println!(
        "[{lo}, {hi}] in the weak order holds {} permutations",
        inside.len()
    );
    assert_eq!(
        inside
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>(),
        p.linear_extensions()?
    );
    Ok(())
}
