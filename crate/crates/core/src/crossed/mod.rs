//! Crossed modules, crossed semi-modules and crossed semi-bimodules, with the
//! functors and (weak) morphisms relating them.

mod group;
mod morphism;
mod xbsmod;
mod xmod;
mod xsmod;

use thiserror::Error;

use crate::action::ActionError;
use crate::monoid::{HomError, MonoidError};
use crate::witness::Witness;

pub use group::{canonical_weak_iso, group_to_xmod, reconstruct_group_xbsmod, xmod_to_xbsmod, WeakIso};
pub use morphism::{compose_weak, validate_morphism, validate_weak_morphism, WeakMorphism, XbsMorphism};
pub use xbsmod::{semibimodule_embed, xbs_axiom_failures, xbs_axiom_witness, CrossedSemiBimodule};
pub use xmod::{validate_xmod, CrossedModule};
pub use xsmod::{phi, recover_xsmod, validate_xsmod, CrossedSemiModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossedError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error("{which}: {source}")]
    Action { which: &'static str, source: ActionError },
    #[error("{which}: {source}")]
    Hom { which: &'static str, source: HomError },
    #[error("{0}")]
    Shape(String),
    #[error("axiom {axiom} fails at {witness}")]
    AxiomFails { axiom: &'static str, witness: Witness },
    #[error("exchange law fails at ({0},{1})")]
    ExchangeLawFails(usize, usize),
    #[error("{0} is not a group")]
    NotAGroup(&'static str),
    #[error("left action is not trivial at ({0},{1})")]
    LambdaNotTrivial(usize, usize),
    #[error("hypothesis {hypothesis} fails at {witness}")]
    HypothesisFails { hypothesis: &'static str, witness: Witness },
    #[error("K is not commutative at ({0},{1})")]
    NotCommutative(usize, usize),
    #[error("actions are not compatible at ({0},{1},{2})")]
    CompatibilityFails(usize, usize, usize),
    #[error("condition {condition} fails at {witness}")]
    ConditionFails { condition: u8, witness: Witness },
    #[error("morphisms are not composable: {0}")]
    NotComposable(String),
    /// A property that holds for every valid input failed; the input or the
    /// implementation is broken.
    #[error("internal check `{claim}` fails at {witness}")]
    Internal { claim: &'static str, witness: Witness },
}

impl CrossedError {
    pub(crate) fn action(which: &'static str) -> impl FnOnce(ActionError) -> CrossedError {
        move |source| CrossedError::Action { which, source }
    }

    pub(crate) fn hom(which: &'static str) -> impl FnOnce(HomError) -> CrossedError {
        move |source| CrossedError::Hom { which, source }
    }

    pub(crate) fn internal(claim: &'static str, witness: &[usize]) -> CrossedError {
        CrossedError::Internal { claim, witness: Witness::of(witness) }
    }
}
