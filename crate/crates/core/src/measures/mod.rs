//! The 22 complexity measures, grouped by family.

pub mod dimensionality;
pub mod feature;
pub mod imbalance;
pub mod linearity;
pub mod neighborhood;
pub mod network;

pub use dimensionality::{t2, t3, t4};
pub use feature::{f1, f1v, f2, f3, f4};
pub use imbalance::{c1, c2};
pub use linearity::{l1, l2, l3};
pub use neighborhood::{lsc, n1, n2, n3, n4, t1};
pub use network::{build_epsilon_graph, cls_coef, density, hubs, EpsilonGraph};
