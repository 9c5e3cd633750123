//! `ℤM` as a free left `ℤM₀`-module for a trace submonoid `M₀ = M(Σ₀, I₀)`.
//!
//! The basis `B` consists of the unit and every trace whose first Foata
//! block avoids `Σ₀`. Each trace factors uniquely as `w = a·u` with
//! `a ∈ M₀` and `u ∈ B`; [`SubmonoidSpec::decompose`] computes the factors by
//! repeatedly peeling the `Σ₀`-letters off the first block.

use crate::error::Result;
use crate::trace::{traces_up_to, LetterSet, Presentation, Trace};

/// A submonoid generated by a subset `Σ₀` of the alphabet, with the induced
/// commutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmonoidSpec {
    pres: Presentation,
    sigma0: LetterSet,
    sub: Presentation,
}

/// `w = a · u` with `a ∈ M₀` and `u ∈ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// The `M₀` factor, as a trace of the submonoid's own presentation.
    pub a: Trace,
    /// The basis element, a trace of the whole monoid.
    pub u: Trace,
    /// Number of separation rounds performed.
    pub rounds: usize,
}

impl SubmonoidSpec {
    pub fn new(p: &Presentation, sigma0: LetterSet) -> Result<Self> {
        let sub = p.induced(sigma0)?;
        Ok(SubmonoidSpec { pres: p.clone(), sigma0, sub })
    }

    /// `Σ₀` written as in [`Presentation::letter_set`].
    pub fn parse(p: &Presentation, sigma0: &str) -> Result<Self> {
        Self::new(p, p.letter_set(sigma0)?)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn sigma0(&self) -> LetterSet {
        self.sigma0
    }

    /// Presentation of `M₀` itself.
    pub fn submonoid(&self) -> &Presentation {
        &self.sub
    }

    /// Whether `t` lies in `M₀`.
    pub fn contains(&self, t: &Trace) -> bool {
        t.alph().is_subset(self.sigma0)
    }

    pub fn is_in_basis(&self, t: &Trace) -> bool {
        t.first_block().is_disjoint(self.sigma0)
    }

    /// Embeds a trace of `M₀` into `M`.
    pub fn embed(&self, a: &Trace) -> Result<Trace> {
        a.transfer(&self.pres)
    }

    pub fn decompose(&self, w: &Trace) -> Result<Decomposition> {
        self.pres.ensure_same(w.presentation())?;
        let (a, u, rounds) = self.split(w);
        Ok(Decomposition { a: a.transfer(&self.sub)?, u, rounds })
    }

    /// Like [`decompose`](Self::decompose) but keeps the `M₀` factor in the
    /// whole monoid.
    pub(crate) fn split(&self, w: &Trace) -> (Trace, Trace, usize) {
        let mut a = Trace::unit(&self.pres);
        let mut rest = w.clone();
        // every productive round removes at least one letter
        for rounds in 0..=w.len() {
            let separated = rest.first_block().intersection(self.sigma0);
            if separated.is_empty() {
                return (a, rest, rounds);
            }
            a = a.concat(&Trace::from_commuting_set(&self.pres, separated));
            rest = rest.strip_front(separated);
        }
        unreachable!("separation did not terminate within {} rounds", w.len() + 1)
    }

    /// The basis element `u` of `w = a·u`, i.e. the canonical
    /// representative of `1 ⊗_{M₀} w`.
    pub fn reduce(&self, w: &Trace) -> Trace {
        self.split(w).1
    }

    /// Members of `B` of length at most `max_len`, sorted.
    pub fn enumerate_basis(&self, max_len: usize) -> Vec<Trace> {
        traces_up_to(&self.pres, max_len).into_iter().filter(|t| self.is_in_basis(t)).collect()
    }
}
