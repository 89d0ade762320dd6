//! Script language and command-line front end for the `matlis-core` engine.

pub mod ast;
pub mod error;
pub mod output;
pub mod parser;
pub mod presets;
pub mod session;

pub use error::{ErrorCode, Pos, ScriptError};
pub use parser::parse_script;
pub use session::{Emitted, Session, Settings};
