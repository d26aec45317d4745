// Geometric isotropy of spectrum expressions over S3.

use ninfty::isotropy::{is_free, isotropy, Spectrum};
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<()> {
    let limits = Limits::default();
    let s3 = SubgroupLattice::new(catalog::parse_group("S3", &limits)?, &limits)?;
    for input in [
        "orbit:S3/1",
        "orbit:S3/C2",
        "idem:(C3)",
        "SQ",
        "orbit:S3/C2 v idem:(C3)",
        "orbit:S3/C2 ^ orbit:S3/C3",
        "(orbit:S3/C2 v idem:(S3)) ^ SQ",
        "pt",
    ] {
        let e = Spectrum::parse(&s3, input)?;
        println!(
            "{:<34} {{{}}}{}",
            e.to_string(),
            isotropy(&e).labels(&s3).join(", "),
            if is_free(&e) { "  free" } else { "" }
        );
    }
    Ok(())
}

fn main() -> ninfty::Result<()> {
    run_example()
}
