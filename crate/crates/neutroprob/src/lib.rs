//! Neutrosophic probability: (truth, indeterminacy, falsehood) triples over
//! sample spaces that contain explicit indeterminacy.
//!
//! A classical die has six outcomes; a die tossed onto a cracked surface can
//! also land wedged on an edge, readable as nothing. This library models that
//! third possibility as a first-class chance. The probability of an event is
//! the triple `(t, i, f)`: the chance it occurs, the chance the experiment
//! turns out indeterminate, and the chance it does not occur. The component
//! sum may equal 1 (complete), fall short (incomplete information), or exceed
//! it (paraconsistent, conflicting sources).
//!
//! On top of the value types the crate provides:
//!
//! - event algebra over discrete spaces: unions, complements, conditionals,
//!   Bayes, the multiplication rule for draws without replacement, expected
//!   values ([`space`]);
//! - product spaces of independent experiments with indeterminacy-order
//!   tracking and joint probabilities ([`product`]);
//! - fusion of subjective estimates from two sources: proportional conflict
//!   redistribution, pessimistic/optimistic schemes, t-norm combination
//!   ([`fusion`]);
//! - Markov chains over transition triples with pluggable operators
//!   ([`markov`]);
//! - measures and numeric integrals carrying indeterminacy ([`measure`],
//!   [`integral`]);
//! - n-valued refinement of triples ([`refined`]);
//! - seeded Monte Carlo estimation ([`montecarlo`]).
//!
//! Chances built from counts are exact rationals and worked results
//! reproduce exactly; chances given as floats carry ordinary float error.
//!
//! ```
//! use neutroprob::space::{NeutrosophicEvent, NeutrosophicSampleSpace};
//!
//! // an urn with 5 A-votes, 2 unreadable votes, and 3 B-votes
//! let urn = NeutrosophicSampleSpace::from_counts(
//!     vec![("A".into(), 5), ("B".into(), 3)],
//!     vec![("unreadable".into(), 2)],
//! )
//! .unwrap();
//! let np = urn.probability(&NeutrosophicEvent::new(["A"])).unwrap();
//! assert_eq!(np.to_string(), "(1/2, 1/5, 3/10)");
//! ```

pub mod chance;
pub mod cli;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod fusion;
pub mod integral;
pub mod json;
pub mod markov;
pub mod measure;
pub mod montecarlo;
pub mod product;
pub mod refined;
pub mod space;
pub mod value;

pub use chance::{Chance, CompletenessClass, IntervalChance, NeutrosophicProbability};
pub use error::{Error, Result};
pub use value::{Ratio, Value};
