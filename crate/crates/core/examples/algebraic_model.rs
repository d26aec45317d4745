// Factors of the algebraic model for D4 and the geometric fixed points of a
// wedge of orbits.

use ninfty::isotropy::Spectrum;
use ninfty::model::{algebraic_model, fixed_point_module, pi0_rank};
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<usize> {
    let limits = Limits::default();
    let d4 = SubgroupLattice::new(catalog::parse_group("D4", &limits)?, &limits)?;
    for factor in algebraic_model(&d4)?.factors {
        println!("{:<24} |W| = {}", factor.label, factor.weyl.group.order());
    }

    let e = Spectrum::parse(&d4, "orbit:G/1 v orbit:G/C4")?;
    for class in 0..d4.classes().len() {
        let m = fixed_point_module(&e, class)?;
        println!(
            "Φ^{:<4} dim {:>2}  W-orbits {}",
            d4.class(class).label,
            m.dimension,
            m.orbit_count
        );
    }
    let rank = pi0_rank(&e)?;
    println!("rank of π0 for {e}: {rank}");
    Ok(rank)
}

fn main() -> ninfty::Result<()> {
    run_example().map(|_| ())
}
