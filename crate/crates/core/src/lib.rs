//! Energy graphs: directed acyclic graphs with a fixed topological labeling,
//! an exact energy-propagation model, black arcs and black arc numbers.
//!
//! ```
//! use energy_graph::{jaco_graph, jaco_black_arc_algorithm, propagate, SequenceSpec};
//!
//! let g = jaco_graph(&SequenceSpec::Natural, 8).unwrap();
//! assert_eq!(jaco_black_arc_algorithm(&g).unwrap().black_arc_count, 7);
//! assert_eq!(propagate(&g).unwrap().total_black_energy.to_string(), "7/8 xi + 7 mc2");
//! ```

pub mod blackarc;
pub mod blocks;
pub mod codes;
pub mod dot;
pub mod energy;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod number;
pub mod orient;
pub mod propagation;
pub mod sequence;

pub use blackarc::{
    black_arc_table, head_neighborhood, jaco_black_arc_algorithm, mod4_closed_form,
    primitive_degree_sum, solid_subgraph, BlackArcOutcome, BlackCloud, SolidSubgraph,
};
pub use blocks::{arc_partition_blocks, cut_vertices};
pub use codes::{
    binary_code_graph, binary_code_table, code_table_graph, gray_code_table, union_copies, CodeRow,
    CodeTable,
};
pub use dot::to_dot;
pub use energy::{Energy, Rational};
pub use error::{Error, Result};
pub use graph::{
    validate, Arc, ArcList, EdgeList, EnergyGraph, UndirectedGraph, VertexId, VertexMap, Violation,
};
pub use number::{
    black_arc_number_min, black_arc_number_min_with_limit, block_black_counts, block_graph,
    decompose_and_sum, DEFAULT_MIN_ORIENT_LIMIT,
};
pub use orient::{
    enumerate_acyclic_orientations, orient_topologically, orient_with_labels, AcyclicOrientations,
    MAX_ENUMERATION_VERTICES,
};
pub use propagation::{
    arrival_strings, black_arcs_by_arrival, check_conservation, levels, propagate,
    total_black_energy, ArcDissipation, ArcKineticEnergy, ArrivalString, PropagationReport,
    SinkCapacitation,
};
pub use sequence::{graph_from_out_degrees, jaco_graph, SequenceSpec};
