//! Duality between dominating and scattered sets, domination cores and
//! kernels.

mod closure;
mod dual;
mod kernel;
mod tree;

pub use closure::{check_closure, closure, projection, xi_estimate, Closure};
pub use dual::{dominator_or_scattered, greedy_dual, DualityResult, GreedyDual};
pub use kernel::{
    domination_core, kernelize, q_threshold, reduce_core, small_core_threshold, CoreMode, CoreOutcome, DominationCore,
    Kernel, ReduceOutcome, RemovalRecord,
};
pub use tree::{independence_tree, is_scattered, max_left_chain, IndependenceTree, TreeNode};
