//! Quantum convolutional and tail-biting stabilizer codes at the label level:
//! GF(4) arithmetic, code construction, table and trellis decoders, and
//! depolarizing-channel simulation.

pub mod code;
pub mod decode;
pub mod error;
pub mod gf;
pub mod pauli;
pub mod presets;
pub mod sim;
pub mod verify;

pub use error::{Error, Result};
