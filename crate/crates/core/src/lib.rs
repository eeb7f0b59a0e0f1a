//! Exact computations with Lie subalgebras of `gl_n`, `sl_n` and `pgl_n`.

pub mod error;
pub mod exactla;
pub mod fields;
pub mod gcr;
pub mod groupctx;
pub mod io;
pub mod jordan;
pub mod liealg;
pub mod modrep;
pub mod oracle;
pub mod papercheck;
pub mod sample;

pub use error::{Error, Result};
