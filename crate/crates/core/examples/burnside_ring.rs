// Table of marks of S3 and the primitive idempotents of its rational
// Burnside ring.

use ninfty::burnside::{burnside_product, idempotents, table_of_marks, BurnsideElement};
use ninfty::{catalog, Limits, SubgroupLattice};

pub fn run_example() -> ninfty::Result<()> {
    let limits = Limits::default();
    let s3 = SubgroupLattice::new(catalog::parse_group("S3", &limits)?, &limits)?;
    let tom = table_of_marks(&s3);

    println!("marks of {}:", s3.group().label());
    for (label, row) in tom.labels().iter().zip(tom.matrix()) {
        println!("  G/{label:<3} {row:?}");
    }

    let es = idempotents(&tom);
    let mut total = BurnsideElement::zero(&tom);
    for (label, e) in tom.labels().iter().zip(&es) {
        println!("e_({label}) = {e}");
        assert_eq!(&burnside_product(e, e)?, e);
        total = total.add(e)?;
    }
    assert_eq!(total, BurnsideElement::one(&tom));
    println!("idempotents are orthogonal and sum to 1");
    Ok(())
}

fn main() -> ninfty::Result<()> {
    run_example()
}
