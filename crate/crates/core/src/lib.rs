//! Exact computation of binomial power sums and their identities.
//!
//! * [`arith`]: big integers, reduced rationals, binomial coefficients.
//! * [`sequences`]: `binomial(2n,n)`, Franel, fourth Franel and Domb numbers
//!   by direct summation and by recurrence.
//! * [`identities`]: both sides of each identity, compared exactly.
//! * [`set_oracle`]: literal enumeration of the triple family whose size is
//!   the fourth Franel number, against its two counting formulas.
//! * [`oeis`]: OEIS b-file parsing, caching and cross-checking.

pub mod arith;
pub mod error;
pub mod identities;
pub mod oeis;
pub mod sequences;
pub mod set_oracle;

pub use arith::{binomial, binomial_gen, factorial, Integer, Natural, Rational};
pub use error::{IdentityError, OeisError, OracleError, ParseRationalError, SequenceError};
pub use identities::{check_range, CheckParams, IdentityCheckReport, IdentityId};
pub use sequences::{generate, Method, SequenceId, SequenceTable};
pub use set_oracle::{enumerate_y, Characterization, FamilySpec, IndexSet};
