// Lifting verdicts for idempotent spheres: the complete operad is
// obstructed by a norm, the minimal one is not.

use ninfty::compat::lifting_verdict;
use ninfty::isotropy::Spectrum;
use ninfty::operad::OperadModel;
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<()> {
    let limits = Limits::default();
    let a4 = SubgroupLattice::new(catalog::parse_group("A4", &limits)?, &limits)?;
    let operads = [OperadModel::minimal(a4.clone()), OperadModel::maximal(a4.clone())];
    for class in 0..a4.classes().len() {
        let e = Spectrum::idempotent(&a4, class)?;
        for operad in &operads {
            let v = lifting_verdict(operad, &e)?;
            let witness = v
                .witness
                .map(|w| format!("  N: {}/1 at n = {}", a4.label(w.subgroup), w.n))
                .unwrap_or_default();
            println!("{:<10} {:<3} {:?}{witness}", e.to_string(), operad.kind().name(), v.tag);
        }
    }
    let v = lifting_verdict(&operads[1], &Spectrum::rational_sphere(&a4))?;
    println!("SQ         eG  {:?}", v.tag);
    Ok(())
}

fn main() -> ninfty::Result<()> {
    run_example()
}
