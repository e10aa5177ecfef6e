//! The bundled languages: stream arithmetic, the razor, and value-passing
//! CCS.

pub mod ccs;
pub mod razor;
pub mod stream;
