//! Walks the Tamari lattice of size 4 by right rotations and prints its
//! cover graph in DOT format.
//!
//! ```bash
//! cargo run --example lattice | dot -Tsvg > tamari4.svg
//! ```

use tamari::tree::enumerate_trees;
use tamari::BinaryTree;

fn main() {
    let trees = enumerate_trees(4);
    eprintln!(
        "{} trees, bottom {}, top {}",
        trees.len(),
        BinaryTree::left_comb(4),
        BinaryTree::right_comb(4)
    );

    println!("digraph tamari_4 {{");
    for t in &trees {
        println!(
            "  \"{t}\" [tooltip=\"{}\"];",
            tamari::tree::steps_to_string(&t.to_dyck())
        );
    }
    for t in &trees {
        for u in t.tamari_covers_up() {
            println!("  \"{t}\" -> \"{u}\";");
        }
    }
    println!("}}");

    // a single rotation, addressed by in-order label
    let t: BinaryTree = "[[_,_],[_,[_,_]]]".parse().unwrap();
    let rotated = t
        .rotate_right_at(2)
        .unwrap()
        .expect("node 2 has a left child");
    eprintln!("rotating {t} at 2 gives {rotated}");
}
