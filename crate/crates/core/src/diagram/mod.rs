//! Valued graphs, the named catalog, partitions, orientations and surgery.

mod catalog;
mod dsl;
mod graph;
mod orientation;
mod partition;
mod surgery;
mod tpqr;

pub use catalog::{
    build_catalog, catalog_names, cycle, dynkin, extended, extended_names, star, tpqr, CatalogInfo, DiagramKind,
    Twisted,
};
pub use dsl::parse_graph;
pub use graph::{Edge, ValuedGraph};
pub use orientation::Orientation;
pub use partition::{bicolor, bicolored_form, BipartitePartition};
pub use surgery::{kolmykov, star_glue, tree_from_parents};
pub use tpqr::{classify_tpqr, TpqrClass, TpqrKind};

/// Transposed rigging, recomputed weights.
pub fn dual_graph(g: &ValuedGraph) -> ValuedGraph {
    g.dual()
}

/// A catalog name or, failing that, graph DSL text.
pub fn resolve(spec: &str) -> crate::Result<ValuedGraph> {
    if spec.contains('\n') || spec.trim_start().starts_with("vertex") {
        parse_graph(spec)
    } else {
        build_catalog(spec)
    }
}
