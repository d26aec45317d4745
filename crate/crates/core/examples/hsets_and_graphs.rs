// H-sets of a fixed size and the graph subgroups of G x Σn they determine.

use ninfty::gset::{graph_subgroup, hset_structures};
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<usize> {
    let limits = Limits::default();
    let c6 = SubgroupLattice::new(catalog::parse_group("C6", &limits)?, &limits)?;
    let mut total = 0;
    for class in c6.classes() {
        let h = class.representative;
        for t in hset_structures(&c6, h, 3)? {
            let graph = graph_subgroup(&c6, &t);
            let images: Vec<String> = c6
                .subgroup(h)
                .generators()
                .iter()
                .map(|&g| graph.image(g).expect("generator of H").to_string())
                .collect();
            println!("{:<3} {:<22} f = {}", class.label, t.label(&c6), images.join(", "));
            total += 1;
        }
    }
    println!("{total} size-3 H-sets over the subgroups of C6");
    Ok(total)
}

fn main() -> ninfty::Result<()> {
    run_example().map(|_| ())
}
