//! Edge division vectors of trees and the preorder they induce.

pub mod division;
pub mod enumeration;
pub mod families;
pub mod indices;
pub mod parse;
pub mod tree;
pub mod verify;

pub use division::{compare, compare_trees, edge_division_vector, edge_mu, EdgeDivisionVector, OrderRelation};
pub use families::FamilyParams;
pub use parse::{parse_tree, ParseError, TreeFormat};
pub use tree::{CanonicalCode, Tree, TreeError};
