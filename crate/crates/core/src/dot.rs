//! Graphviz output for subgroup lattices and transfer systems.

use std::fmt::Write;

use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::transfer::TransferSystem;

/// Display name of a single subgroup: its class label, with a `.k` suffix
/// when the class has several members.
pub fn subgroup_name(lattice: &SubgroupLattice, id: SubgroupId) -> String {
    let class = lattice.class(lattice.class_of(id));
    if class.members.len() == 1 {
        class.label.clone()
    } else {
        let k = class.members.iter().position(|&m| m == id).expect("member");
        format!("{}.{}", class.label, k + 1)
    }
}

/// Hasse diagram of the subgroup lattice, bottom to top.
pub fn lattice_dot(lattice: &SubgroupLattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", lattice.group().label()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for id in 0..lattice.len() {
        writeln!(out, "  s{id} [label=\"{}\"];", subgroup_name(lattice, id)).unwrap();
    }
    for (k, h) in lattice.hasse_covers() {
        writeln!(out, "  s{k} -> s{h};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// One cluster per transfer system; edges are the covering pairs of each
/// relation.
pub fn transfer_systems_dot(lattice: &SubgroupLattice, systems: &[TransferSystem]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{} transfer systems\" {{", lattice.group().label()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, system) in systems.iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label=\"#{i}\";").unwrap();
        for id in 0..lattice.len() {
            writeln!(out, "    t{i}_{id} [label=\"{}\"];", subgroup_name(lattice, id)).unwrap();
        }
        for &(k, l) in &system.pairs {
            let covered = !system
                .pairs
                .iter()
                .any(|&(a, b)| a == k && b != l && system.contains(b, l));
            if covered {
                writeln!(out, "    t{i}_{k} -> t{i}_{l};").unwrap();
            }
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
