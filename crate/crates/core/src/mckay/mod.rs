//! Binary polyhedral groups, their characters, McKay and Slodowy matrices, and the
//! generating functions of the McKay correspondence.

mod characters;
mod group;
mod matrix;
mod orbit;
pub(crate) mod series;
mod slodowy;

pub use characters::{character_table, omega3, sqrt2, CharacterTable, ClassFunction};
pub use group::{build_group, BinaryPolyhedralGroup, ConjugacyClass, GroupKind, Mat2};
pub use matrix::{cartan_of, graph_from_cartan, match_extended, mckay_matrix, DiagramMatch, McKayMatrix};
pub use slodowy::{slodowy_matrices, SlodowyMatrices, SubgroupPair};
pub use series::{
    dynkin_of, ebeling_poincare, group_generating_function, kkgv_denominator, kkgv_series, kostant_multiplicities,
    kostant_numbers, kostant_operator, mckay_diagram, molien_series, series_quotient, EbelingQuotient,
    GeneratingFunctionReport, KostantNumbers, SeriesComponent,
};
pub use orbit::{orbit_assembling, orbit_matches_kostant, OrbitAssembling};
