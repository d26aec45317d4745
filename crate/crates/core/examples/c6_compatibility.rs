// The suspension spectrum of C6/C2 against the linear-isometries operad of
// the universe generated by R[C6/C2].

use ninfty::compat::{check_compatibility, Method};
use ninfty::gset::HSetStructure;
use ninfty::isotropy::Spectrum;
use ninfty::operad::OperadModel;
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<bool> {
    let limits = Limits::default();
    let c6 = SubgroupLattice::new(catalog::parse_group("C6", &limits)?, &limits)?;
    let c2 = c6.representative(c6.find_class("C2")?);
    let operad = OperadModel::geometric(c6.clone(), &[c2])?;

    let free = HSetStructure::orbit(&c6, c2, c6.trivial())?;
    println!("C2/1 admissible for C2: {}", operad.admissible(&free));
    for n in 1..=4 {
        let t = HSetStructure::trivial(&c6, c2, n)?;
        println!("trivial C2-set of size {n} admissible: {}", operad.admissible(&t));
    }

    let spectrum = Spectrum::parse(&c6, "orbit:C6/C2")?;
    let report = check_compatibility(&operad, &spectrum, Method::OrbitReduction, 6)?;
    println!("{} compatible with {}: {}", spectrum, operad.kind().name(), report.compatible);
    Ok(report.compatible)
}

fn main() -> ninfty::Result<()> {
    run_example().map(|_| ())
}
