pub mod code;
pub mod duality;
pub mod equivalence;
pub mod error;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod polycyclic;
pub mod reproduce;
pub mod scan;

pub use code::{LinearCode, WeightEnumerator};
pub use duality::{duality_flags, duality_report, DualityFlags, DualityReport, MinDistance};
pub use equivalence::{
    find_equivalence, is_isodual, verify_witness, EquivalenceStatus, EquivalenceVerdict,
    MonomialMap,
};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use matrix::Matrix;
pub use poly::{Factorization, Polynomial};
pub use polycyclic::{
    enumerate_family, family_correspondence, family_report, is_polycyclic_wrt, FamilyReport,
    PolycyclicCode,
};
pub use scan::{Finding, ScanReport};
