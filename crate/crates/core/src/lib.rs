//! Exact q-series arithmetic, partition and overpartition enumeration, and a
//! verification harness for overpartition analogues of Rogers-Ramanujan type
//! identities.

pub mod bijection;
pub mod classes;
pub mod cli;
pub mod enumerate;
pub mod frobenius;
pub mod harness;
pub mod overpartition;
pub mod partition;
pub mod series;

pub use bijection::{BijectionError, GVariant, HVariant, MapId};
pub use classes::{lookup_class, ClassMember, ClassSpec};
pub use enumerate::{OverpartitionClass, PartitionClass, StembridgeVariant};
pub use frobenius::FrobeniusSymbol;
pub use harness::{verify, verify_all, IdentityRecord, Limits, Side, VerificationReport};
pub use overpartition::Overpartition;
pub use partition::{Partition, PartitionError};
pub use series::{LaurentSeries, PochhammerSpec, ProductSpec, SeriesError};
