// Counting transfer systems on small subgroup lattices.

use ninfty::transfer::enumerate_transfer_systems;
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<Vec<(String, usize)>> {
    let limits = Limits::default();
    let mut counts = Vec::new();
    for spec in ["C1", "C2", "C4", "C8", "C16", "C6", "V4", "S3", "Q8"] {
        let lattice = SubgroupLattice::new(catalog::parse_group(spec, &limits)?, &limits)?;
        let n = enumerate_transfer_systems(&lattice, &limits)?.len();
        println!("{spec:<4} {:>2} subgroups  {n:>3} transfer systems", lattice.len());
        counts.push((spec.to_string(), n));
    }
    Ok(counts)
}

fn main() -> ninfty::Result<()> {
    run_example().map(|_| ())
}
