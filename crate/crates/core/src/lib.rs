//! Online minimum dominating set: a game engine where vertices arrive with
//! their full neighborhoods along a connected order, the classic online
//! algorithms, adaptive adversaries that build hard inputs on the fly, exact
//! offline optima, graph class recognizers, and auditors for the charging
//! arguments behind the upper bounds.

pub mod adversaries;
pub mod algorithms;
pub mod charging;
pub mod classes;
pub mod graph;
pub mod harness;
pub mod opt;
pub mod ratio;
pub mod revelation;

pub use algorithms::{run_algorithm, AlgorithmSpec, OnlineAlgorithm};
pub use graph::{Graph, GraphError, GraphJson, Vertex, VertexSet};
pub use revelation::{validate_order, Game, GameTrace, OnlineInstance, Session, StepView};
