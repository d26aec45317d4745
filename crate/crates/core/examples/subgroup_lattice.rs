// Subgroup lattice of S4: conjugacy classes, normalizers, Möbius values and
// a Graphviz Hasse diagram.

use ninfty::{catalog, dot, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<String> {
    let limits = Limits::default();
    let s4 = SubgroupLattice::new(catalog::parse_group("S4", &limits)?, &limits)?;
    println!("{} has {} subgroups in {} classes", s4.group().label(), s4.len(), s4.classes().len());
    for class in s4.classes() {
        let h = class.representative;
        println!(
            "  {:<4} order {:>2}  conjugates {}  |N(H)| = {:>2}  mu(H, G) = {}",
            class.label,
            class.order,
            class.members.len(),
            s4.subgroup(s4.normalizer(h)).order(),
            s4.mobius(h, s4.whole())?,
        );
    }
    Ok(dot::lattice_dot(&s4))
}

fn main() -> ninfty::Result<()> {
    let graph = run_example()?;
    println!("\n{graph}");
    Ok(())
}
