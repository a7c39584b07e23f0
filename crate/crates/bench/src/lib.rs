//! Fixed inputs for the solver benchmarks.

use hopfwit::entwine::{yetter_drinfeld, DoiKoppinenDatum, Entwining};
use hopfwit::strucalg::{cyclic_table, group_algebra, s3_table, sweedler_h4};
use hopfwit::{Field, Hopf};

pub use hopfwit;

pub fn kc2_q() -> Hopf {
    group_algebra(&Field::rationals(), &cyclic_table(2)).expect("group table")
}

pub fn s3(field: &Field) -> Hopf {
    group_algebra(field, &s3_table()).expect("group table")
}

pub fn h4_q() -> Hopf {
    sweedler_h4(&Field::rationals())
}

/// Named entwinings, smallest first.
pub fn entwinings() -> Vec<(&'static str, Entwining)> {
    vec![
        (
            "relhopf kC2",
            DoiKoppinenDatum::regular_relative_hopf(kc2_q()).entwining(),
        ),
        ("yd kC2", yetter_drinfeld(&kc2_q())),
        (
            "relhopf H4",
            DoiKoppinenDatum::regular_relative_hopf(h4_q()).entwining(),
        ),
        ("yd H4", yetter_drinfeld(&h4_q())),
    ]
}
