//! Certified real-root counting, isolation and refinement, plus approximate
//! complex roots for asymptotic checks.

pub mod aberth;
pub mod isolate;
pub mod sturm;

pub use aberth::{complex_roots, ComplexRootEstimate, RESIDUAL_TOLERANCE};
pub use isolate::{analyze, isolate_roots, refine, IsolatedRoots, ZeroReport};
pub use sturm::{
    distinct_real_zeros, nonreal_zero_count, real_zero_count, sturm_count, Bound, SturmChain,
};
