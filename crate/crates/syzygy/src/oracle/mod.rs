//! Finite dimensional algebra oracle: exact linear algebra over the
//! rationals or a prime field, a Groebner-basis quotient of the path
//! algebra, and module-level functors (radical, syzygy, transpose,
//! stable homs) computed directly from their definitions.

pub mod algebra;
pub mod field;
pub mod linalg;
pub mod module;

pub use algebra::{Algebra, GroebnerError, Path};
pub use field::{
    is_prime, prime_modulus, set_prime_modulus, Field, FieldChoice, FieldError, Fp, Rat,
    DEFAULT_PRIME,
};
pub use linalg::Matrix;
pub use module::{Module, ModuleError};
