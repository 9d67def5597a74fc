//! Tamari polynomials of a tree: the number of trees below it, refined by
//! left border, by number of right subtrees, and the mirrored count of trees
//! above.

use tamari::order::{trees_above, trees_below};
use tamari::poly::{tamari_poly, tamari_poly_bivar, tamari_poly_mirror};
use tamari::BinaryTree;

fn main() -> tamari::Result<()> {
    let t: BinaryTree = "[[[_,[_,_]],_],[[_,_],_]]".parse()?;

    let p = tamari_poly(&t);
    println!("P(T)        = {p}");
    println!(
        "P(T)(1)     = {}  ({} trees below)",
        p.eval_at_one(),
        trees_below(&t)?.len()
    );
    println!("mirror      = {}", tamari_poly_mirror(&t));
    println!(
        "mirror(1)   = {}  ({} trees above)",
        tamari_poly_mirror(&t).eval_at_one(),
        trees_above(&t)?.len()
    );
    println!("bivariate   = {}", tamari_poly_bivar(&t));

    for s in trees_below(&t)? {
        println!("  {s}  left border {}", s.left_border_count());
    }
    Ok(())
}
