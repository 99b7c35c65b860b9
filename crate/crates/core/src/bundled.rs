//! System definitions shipped with the crate.

use crate::system::GarsideSystem;

pub const B3: &str = include_str!("../systems/b3.json");
pub const B4: &str = include_str!("../systems/b4.json");
pub const RANK1: &str = include_str!("../systems/rank1.json");
/// `⟨a,b,c | a² = b², ac = ca, bc = cb⟩` with `Δ = a²c`.
pub const SQUARE_CENTRAL: &str = include_str!("../systems/square_central.json");
/// `⟨a,b,c | aba = bab = c²⟩` with `Δ = aba`.
pub const DELTA_ROOT: &str = include_str!("../systems/delta_root.json");
/// `DELTA_ROOT` with one ν-table entry replaced by a non-ribbon.
pub const DELTA_ROOT_CORRUPTED: &str = include_str!("../systems/delta_root_corrupted.json");

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "b3",
    "b4",
    "rank1",
    "square_central",
    "delta_root",
    "delta_root_corrupted",
];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "b3" => B3,
        "b4" => B4,
        "rank1" => RANK1,
        "square_central" => SQUARE_CENTRAL,
        "delta_root" => DELTA_ROOT,
        "delta_root_corrupted" => DELTA_ROOT_CORRUPTED,
        _ => return None,
    })
}

pub fn by_name(name: &str) -> Option<GarsideSystem> {
    source(name).map(|s| GarsideSystem::from_json(s).expect("bundled system is valid"))
}

pub fn b3() -> GarsideSystem {
    by_name("b3").unwrap()
}

pub fn b4() -> GarsideSystem {
    by_name("b4").unwrap()
}

pub fn rank1() -> GarsideSystem {
    by_name("rank1").unwrap()
}

pub fn square_central() -> GarsideSystem {
    by_name("square_central").unwrap()
}

pub fn delta_root() -> GarsideSystem {
    by_name("delta_root").unwrap()
}

pub fn delta_root_corrupted() -> GarsideSystem {
    by_name("delta_root_corrupted").unwrap()
}
