//! Combinatorial maps on the sphere: derived maps, dualities, antipodal
//! self-duality and symmetric cycles.

pub mod antipodality;
pub mod derived;
pub mod duality;
pub mod families;
pub mod generate;
pub mod io;
pub mod labeling;
pub mod map;
pub mod morphism;
pub mod symmetry;

pub use antipodality::{is_antipodally_self_dual, odd_edge_obstruction, AntipodalVerdict};
pub use derived::{dual, incidence, medial, square, DerivedMap, Origin};
pub use duality::{enumerate_dualities, is_self_dual, is_strongly_involutive, DualityWitness};
pub use families::{adhesion, ear, fixture, pancake, wheel, Corner, FIXTURES};
pub use io::{parse_map, serialize_map};
pub use map::{build_map, CombinatorialMap, ElementKind, ElementRef, MapError, MapId};
pub use morphism::{automorphisms, enumerate_isomorphisms, MapMorphism, Orientation, Orientations};
pub use symmetry::{
    enumerate_symmetric_cycles, is_antipodally_symmetric, is_symmetric_cycle, theorem_ant1_report,
};
