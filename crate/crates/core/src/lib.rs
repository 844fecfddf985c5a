//! Recognition of equimatchable split graphs.
//!
//! A graph is *equimatchable* when all of its maximal matchings have the
//! same size, and *split* when its vertices partition into a clique and an
//! independent set. [`recognize`] decides membership in the intersection of
//! the two classes in O(n + m) time from the degree sequence and one
//! adjacency query.
//!
//! Alongside the fast path the crate carries exhaustive oracles
//! ([`is_split_oracle`], [`is_equimatchable_oracle`],
//! [`find_witness_matchings`]) for graphs of up to [`ORACLE_MAX_N`]
//! vertices, a literal condition checker ([`check_characterization`]),
//! generators for each of the five families of YES instances, and a batch
//! driver that compares all of them ([`crosscheck`]).
//!
//! ```
//! use equisplit_core::{parse_graph, recognize, Condition};
//!
//! // A triangle {1,2,3} with a pendant on 1 and vertex 5 seeing 2 and 3.
//! let g = parse_graph("5 6\n1 2\n1 3\n2 3\n1 4\n2 5\n3 5\n").unwrap();
//! let result = recognize(&g).unwrap();
//! assert!(result.is_yes());
//! assert_eq!(result.condition, Some(Condition::V));
//! ```

pub mod bench;
pub mod crosscheck;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod recognize;
pub mod split;

pub use generators::{
    gen_complete, gen_family_iii, gen_family_iv, gen_family_v, gen_random_graph, gen_random_split,
    gen_star, mutate_edge, FamilySpec, GenError,
};
pub use graph::{
    compute_degree_stats, parse_graph, DegreeStats, Graph, GraphError, ParseError, Vertex,
};
pub use matching::{
    find_witness_matchings, is_equimatchable_oracle, max_independent_crossing_edges,
    maximal_matching_sizes, Matching, OracleError, ORACLE_MAX_N,
};
pub use recognize::{
    check_characterization, classify, recognize, small_case, Characterization, Condition,
    ConditionProfile, Reason, RecognitionResult, RecognizeError, Verdict,
};
pub use split::{
    find_general_structure, is_split_oracle, normalize_partition, split_partition, SplitError,
    SplitPartition,
};
