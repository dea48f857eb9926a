//! k-normal elements and minimal q-polynomials over finite fields.

pub mod arith;
pub mod cyclo;
pub mod error;
pub mod factor;
pub mod fields;
pub mod linalg;
pub mod linearized;
pub mod normality;
pub mod poly;
pub mod tower;
pub mod verify;

pub use error::{Error, ErrorKind, Result};
pub use normality::{Classifier, HistogramReport, Method, NormalityReport, OneNormalReport};
pub use tower::{FQElem, FQField, FieldTower, FqElem, FqField};
pub use verify::{CheckResult, CheckStatus, VerifyReport};
