//! Unipotent classes, symbols and the generalized Springer correspondence
//! for symplectic and orthogonal groups in odd and even characteristic.

pub mod branching;
pub mod combinat;
pub mod error;
pub mod springer;
pub mod splitforms;
pub mod symbols;
pub mod uniclass;
pub mod verify;

pub use combinat::{Bipartition, GF2Matrix, Partition};
pub use error::{Error, Result};
pub use springer::{CorrespondenceRow, CuspidalDatum, WeylType};
pub use symbols::{Symbol, SymbolParams};
pub use uniclass::{CharParity, ClassLabel, Eps, EpsilonMap, Family, Frobenius, GroupDescriptor, LocalSystem, SplitTag};
