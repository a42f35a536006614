//! Graph transformations and the solution mappings that go with them.

mod clique;
mod collapse;
mod gadget;
mod lred;

pub use clique::{augment_with_clique, default_clique_size, mis_from_coloring, AugmentedGraph};
pub use collapse::collapse_1k_to_12;
pub use gadget::{expand_multigraph, expand_parallel_edges, gadget_k, repair_gadget_coloring, GadgetCopy, GadgetMap};
pub use lred::{
    build_lred_multigraph, extract_maxcut, lred_edge_total, repair_multigraph_coloring, CutExtraction, Embedding,
    LRedMultigraph, LReduction,
};
