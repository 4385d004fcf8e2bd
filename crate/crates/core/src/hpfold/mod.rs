//! HP model folding on the 2D square lattice.
//!
//! A chain of `n` beads is a coordinate of `2^n ⊕ 3^(n-1)`: the binary
//! segment colours the beads (1 = H, 0 = P), the ternary segment is the
//! sequence of relative turns that lays the chain on the lattice. The
//! objective is `-(H-H contacts)` for self-avoiding folds and a positive
//! penalty otherwise.

mod fold;
mod instance;
mod problem;

pub use fold::{
    contacts, decode_fold, decode_fold_n, decode_fold_with_heading, objective, parse_digits, target_energy, weight,
    CollisionPenalty, FlatPenalty, FoldOutcome, ObjectiveValue, PenaltySchedule, Point, FORWARD,
    INITIAL_HEADING, TURN_LEFT, TURN_RIGHT,
};
pub use instance::{parse_instance_line, parse_instances, read_instances};
pub use problem::{make_problem, spiral_instance, HpProblem, InstanceSpec, Plan};
