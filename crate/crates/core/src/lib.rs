//! Tools for computing first-name genderedness from Wikidata truthy dumps
//! and relating it to citation distributions across author roles.

pub mod analytics;
pub mod biblio;
pub mod cli;
pub mod error;
pub mod extract;
pub mod io;
pub mod normalize;
pub mod ntriples;
pub mod table;

pub use error::{Error, Result};
