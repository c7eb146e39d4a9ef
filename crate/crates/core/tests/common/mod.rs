#![allow(dead_code)]

use hopf_core::families::{
    all_posets, boolean_lattice, chain_lattice, colored_partition_poset,
    distributive_lattice_of_ideals, figure_lattice, partition_lattice, random_lattice,
    random_non_lattice,
};
use hopf_core::Interval;

pub struct Case {
    pub name: String,
    pub interval: Interval,
}

fn case(name: impl Into<String>, interval: Interval) -> Case {
    Case {
        name: name.into(),
        interval,
    }
}

/// Figures, B_n (n <= 4), chains (n <= 5), J(Q) for |Q| <= 4, Π_n (n <= 4)
/// and `random` seeded random lattices of at most 10 elements.
pub fn lattice_pool(random: u64) -> Vec<Case> {
    let mut out = Vec::new();
    for which in 1..=3 {
        out.push(case(
            format!("figure {which}"),
            figure_lattice(which).unwrap(),
        ));
    }
    for n in 0..=4 {
        out.push(case(format!("B{n}"), boolean_lattice(n)));
    }
    for n in 0..=5 {
        out.push(case(format!("chain {n}"), chain_lattice(n)));
    }
    for (i, q) in all_posets(4).unwrap().iter().enumerate() {
        out.push(case(format!("J(Q{i})"), distributive_lattice_of_ideals(q)));
    }
    for n in 1..=4 {
        out.push(case(format!("Pi{n}"), partition_lattice(n).unwrap()));
    }
    for seed in 0..random {
        out.push(case(
            format!("random lattice {seed}"),
            random_lattice(seed, 10).unwrap(),
        ));
    }
    out
}

/// Colored partition posets with at most 4 points and at most 2 colors,
/// every admissible top color.
pub fn colored_pool() -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(case(
            format!("colored [{n}] top 1"),
            colored_partition_poset(&[n], 1).unwrap(),
        ));
    }
    for total in 1..=4 {
        for a in 0..=total {
            let counts = [a, total - a];
            for top in 1..=2 {
                let p = colored_partition_poset(&counts, top).unwrap();
                out.push(case(format!("colored {counts:?} top {top}"), p));
            }
        }
    }
    out
}

pub fn non_lattice_pool(count: u64) -> Vec<Case> {
    (0..count)
        .map(|seed| {
            case(
                format!("random non-lattice {seed}"),
                random_non_lattice(seed, 8).unwrap(),
            )
        })
        .collect()
}
