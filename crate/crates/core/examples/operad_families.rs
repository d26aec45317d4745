// The minimal, maximal and a geometric N∞-operad over C6: admissible
// orbits, the arity-2 family and indexing-system validation.

use ninfty::operad::{validate_indexing_system, OperadModel};
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<Vec<usize>> {
    let limits = Limits::default();
    let c6 = SubgroupLattice::new(catalog::parse_group("C6", &limits)?, &limits)?;
    let c2 = c6.representative(c6.find_class("C2")?);
    let operads = [
        OperadModel::minimal(c6.clone()),
        OperadModel::geometric(c6.clone(), &[c2])?,
        OperadModel::maximal(c6.clone()),
    ];
    let mut sizes = Vec::new();
    for operad in &operads {
        let orbits: Vec<String> = operad
            .transfer_pairs()
            .iter()
            .map(|&(k, h)| format!("{}/{}", c6.label(h), c6.label(k)))
            .collect();
        let family = operad.family(2)?;
        let report = validate_indexing_system(operad, 6)?;
        println!(
            "{:<16} nontrivial orbits [{}]  |F_2| = {}  valid = {}",
            operad.kind().name(),
            orbits.join(", "),
            family.members.len(),
            report.is_valid()
        );
        sizes.push(family.members.len());
    }
    Ok(sizes)
}

fn main() -> ninfty::Result<()> {
    run_example().map(|_| ())
}
