//! Inputs shared by the benchmarks.

use hopf_core::families::{
    boolean_lattice, colored_partition_poset, partition_lattice, random_lattice,
};
use hopf_core::Interval;

pub fn antipode_inputs() -> Vec<(&'static str, Interval)> {
    vec![
        ("pi4", partition_lattice(4).unwrap()),
        ("pi5", partition_lattice(5).unwrap()),
        ("b4", boolean_lattice(4)),
        ("colored_2_2", colored_partition_poset(&[2, 2], 1).unwrap()),
    ]
}

pub fn canonical_inputs() -> Vec<(&'static str, Interval)> {
    vec![
        ("pi5", partition_lattice(5).unwrap()),
        ("b5", boolean_lattice(5)),
        ("random_lattice_14", random_lattice(3, 14).unwrap()),
    ]
}
