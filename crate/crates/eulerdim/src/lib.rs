//! File formats, interchange documents, SVG rendering and the `euler-dim`
//! command-line front end for [`eulerdim_core`].

pub mod cli;
mod error;
pub mod io;
pub mod json;
pub mod render;

pub use error::{Error, Result};
