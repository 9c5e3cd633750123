//! Traces: elements of the free partially commutative monoid `M(Σ, I)`.
//!
//! A [`Trace`] is always stored in Foata normal form: a sequence of
//! non-empty blocks, each block a set of pairwise commuting letters written
//! in ascending alphabet order, and every letter of a block depending on
//! some letter of the previous block. Because the normal form is unique,
//! structural equality of the block lists is trace equality.
//! [`Trace::equals_via_projections`] decides equality independently, from
//! projections onto dependent letter pairs.

mod letters;
mod levi;
mod presentation;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

pub use letters::{Letter, LetterSet, Letters};
pub use levi::{levi_decompose, LeviWitness};
pub use presentation::{Presentation, PresentationFile};

use crate::error::{Error, Result};

/// Largest supported alphabet.
pub const MAX_LETTERS: usize = 64;

#[derive(Clone)]
pub struct Trace {
    pres: Presentation,
    blocks: Vec<LetterSet>,
}

/// Greedy leftmost placement: every letter goes into the block right after
/// the last block holding a letter it depends on.
fn foata_blocks(p: &Presentation, word: impl IntoIterator<Item = Letter>) -> Vec<LetterSet> {
    let mut height = [0usize; MAX_LETTERS];
    let mut blocks: Vec<LetterSet> = Vec::new();
    for a in word {
        let h = p.dependent_on(a).iter().map(|b| height[b.index()]).max().unwrap_or(0);
        if h == blocks.len() {
            blocks.push(LetterSet::EMPTY);
        }
        blocks[h].insert(a);
        height[a.index()] = h + 1;
    }
    blocks
}

impl Trace {
    pub fn unit(p: &Presentation) -> Self {
        Trace { pres: p.clone(), blocks: Vec::new() }
    }

    pub fn letter(p: &Presentation, a: Letter) -> Self {
        assert!(a.index() < p.len(), "letter outside presentation");
        Trace { pres: p.clone(), blocks: vec![LetterSet::singleton(a)] }
    }

    /// The trace represented by `word`, in Foata normal form.
    pub fn normalize(p: &Presentation, word: &[Letter]) -> Result<Self> {
        if let Some(a) = word.iter().find(|a| a.index() >= p.len()) {
            return Err(Error::UnknownLetter(format!("#{}", a.index())));
        }
        Ok(Trace { pres: p.clone(), blocks: foata_blocks(p, word.iter().copied()) })
    }

    /// Parses and normalizes a word such as `"cab"` (see
    /// [`Presentation::parse_letters`]).
    pub fn parse(p: &Presentation, word: &str) -> Result<Self> {
        let letters = p.parse_letters(word)?;
        Self::normalize(p, &letters)
    }

    /// Accepts a block list only if it already satisfies the Foata conditions.
    pub fn from_blocks(p: &Presentation, blocks: Vec<LetterSet>) -> Option<Self> {
        let t = Trace { pres: p.clone(), blocks };
        t.is_foata().then_some(t)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn blocks(&self) -> &[LetterSet] {
        &self.blocks
    }

    /// First Foata block, the set of letters that can start the trace.
    pub fn first_block(&self) -> LetterSet {
        self.blocks.first().copied().unwrap_or_default()
    }

    /// The normal-form word, blocks concatenated.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.blocks.iter().flat_map(|b| b.iter())
    }

    pub fn word(&self) -> Vec<Letter> {
        self.letters().collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_unit()
    }

    pub fn alph(&self) -> LetterSet {
        self.blocks.iter().fold(LetterSet::EMPTY, |acc, b| acc.union(*b))
    }

    /// Checks the three Foata conditions on the stored blocks.
    pub fn is_foata(&self) -> bool {
        let p = &self.pres;
        self.blocks.iter().all(|b| !b.is_empty() && b.is_subset(p.alphabet()) && p.is_commuting_set(*b))
            && self.blocks.windows(2).all(|w| {
                w[1].iter().all(|a| !p.dependent_on(a).is_disjoint(w[0]))
            })
    }

    pub fn multiply(&self, other: &Trace) -> Result<Trace> {
        self.pres.ensure_same(&other.pres)?;
        Ok(self.concat(other))
    }

    /// Product without the presentation check.
    pub(crate) fn concat(&self, other: &Trace) -> Trace {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        Trace { pres: self.pres.clone(), blocks: foata_blocks(&self.pres, self.letters().chain(other.letters())) }
    }

    pub(crate) fn append_letter(&self, a: Letter) -> Trace {
        Trace { pres: self.pres.clone(), blocks: foata_blocks(&self.pres, self.letters().chain([a])) }
    }

    /// Erases all letters outside `set`; the result lives in the induced
    /// presentation on `set`.
    pub fn project(&self, set: LetterSet) -> Result<Trace> {
        let sub = self.pres.induced(set)?;
        Ok(self.project_into(set, &sub))
    }

    fn project_into(&self, set: LetterSet, sub: &Presentation) -> Trace {
        // letter a of the parent becomes the rank of a inside `set`
        let rank = |a: Letter| Letter::new((set.bits() & (a.bit() - 1)).count_ones() as usize);
        let word = self.letters().filter(|&a| set.contains(a)).map(rank);
        Trace { pres: sub.clone(), blocks: foata_blocks(sub, word) }
    }

    /// Decides `self == other` by comparing the projections onto
    /// `{a, b}^*` for every dependent pair `(a, b)`, diagonal pairs included.
    pub fn equals_via_projections(&self, other: &Trace) -> Result<bool> {
        self.pres.ensure_same(&other.pres)?;
        let (u, v) = (self.word(), other.word());
        Ok(self.pres.dependent_pairs().into_iter().all(|(a, b)| {
            let keep = |x: &&Letter| **x == a || **x == b;
            u.iter().filter(keep).eq(v.iter().filter(keep))
        }))
    }

    /// Returns `q` with `self = prefix · q`, if `prefix` is a left divisor.
    pub fn left_quotient(&self, prefix: &Trace) -> Option<Trace> {
        if self.pres != prefix.pres {
            return None;
        }
        let mut word = self.word();
        for a in prefix.letters() {
            let pos = word.iter().position(|&b| b == a)?;
            if !word[..pos].iter().all(|&b| self.pres.commute(a, b)) {
                return None;
            }
            word.remove(pos);
        }
        Some(Trace { pres: self.pres.clone(), blocks: foata_blocks(&self.pres, word) })
    }

    /// Removes a letter of the first block from the front.
    pub(crate) fn strip_first(&self, a: Letter) -> Trace {
        self.strip_front(LetterSet::singleton(a))
    }

    /// Removes a subset of the first block from the front; since the first
    /// block commutes, `self = set · result`.
    pub(crate) fn strip_front(&self, set: LetterSet) -> Trace {
        debug_assert!(set.is_subset(self.first_block()));
        let mut letters: Vec<Letter> = self.first_block().difference(set).iter().collect();
        letters.extend(self.blocks.iter().skip(1).flat_map(|b| b.iter()));
        Trace { pres: self.pres.clone(), blocks: foata_blocks(&self.pres, letters) }
    }

    /// Product of a set of pairwise commuting letters.
    pub(crate) fn from_commuting_set(p: &Presentation, set: LetterSet) -> Trace {
        debug_assert!(p.is_commuting_set(set));
        let blocks = if set.is_empty() { Vec::new() } else { vec![set] };
        Trace { pres: p.clone(), blocks }
    }

    /// All left divisors, sorted.
    pub fn prefixes(&self) -> Vec<Trace> {
        let mut seen: BTreeSet<Trace> = BTreeSet::new();
        let mut stack = vec![(Trace::unit(&self.pres), self.clone())];
        seen.insert(Trace::unit(&self.pres));
        while let Some((prefix, rest)) = stack.pop() {
            for a in rest.first_block() {
                let next = prefix.append_letter(a);
                if seen.insert(next.clone()) {
                    stack.push((next, rest.strip_first(a)));
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Re-reads this trace in another presentation by letter name. The
    /// target must contain every letter of the trace with the same
    /// commutations among them (e.g. the whole monoid for a trace of a
    /// submonoid, or a submonoid containing the trace's letters).
    pub fn transfer(&self, target: &Presentation) -> Result<Trace> {
        let word = self
            .letters()
            .map(|a| target.letter(self.pres.name(a)))
            .collect::<Result<Vec<_>>>()?;
        let alph: Vec<Letter> = self.alph().iter().collect();
        for (i, &a) in alph.iter().enumerate() {
            for &b in &alph[i + 1..] {
                let (x, y) = (target.letter(self.pres.name(a))?, target.letter(self.pres.name(b))?);
                if self.pres.commute(a, b) != target.commute(x, y) {
                    return Err(Error::PresentationMismatch);
                }
            }
        }
        Trace::normalize(target, &word)
    }

    fn cmp_words(&self, other: &Trace) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters().cmp(other.letters()))
    }
}

/// Every trace of length at most `max_len`, sorted by (length, normal form).
pub fn traces_up_to(p: &Presentation, max_len: usize) -> Vec<Trace> {
    let mut all = vec![Trace::unit(p)];
    let mut layer = vec![Trace::unit(p)];
    for _ in 0..max_len {
        let next: BTreeSet<Trace> = layer.iter().flat_map(|t| p.letters().map(move |a| t.append_letter(a))).collect();
        layer = next.into_iter().collect();
        all.extend(layer.iter().cloned());
    }
    all
}

impl PartialEq for Trace {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks && self.pres == other.pres
    }
}

impl Eq for Trace {}

impl Hash for Trace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.blocks.hash(state);
    }
}

/// Shortlex on the normal-form word; ties across presentations are broken
/// by the presentation.
impl Ord for Trace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_words(other).then_with(|| self.pres.cmp(&other.pres))
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let sep = if self.pres.uses_single_char_names() { "" } else { " " };
        for block in &self.blocks {
            let names: Vec<&str> = block.iter().map(|a| self.pres.name(a)).collect();
            write!(f, "({})", names.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(n: usize, edges: &[(usize, usize)]) -> Presentation {
        Presentation::from_edges(n, edges)
    }

    fn nf(p: &Presentation, w: &str) -> Trace {
        Trace::parse(p, w).unwrap()
    }

    #[test]
    fn powers_of_a_letter_are_separate_blocks() {
        for p in [pres(1, &[]), pres(3, &[(0, 1), (0, 2)])] {
            let t = nf(&p, "aaa");
            assert_eq!(t.to_string(), "(a)(a)(a)");
            assert_eq!(t.len(), 3);
        }
    }

    #[test]
    fn empty_word_is_unit() {
        let p = pres(2, &[]);
        assert!(nf(&p, "").is_unit());
        assert_eq!(nf(&p, "").to_string(), "1");
        assert_eq!(nf(&p, "").len(), 0);
    }

    #[test]
    fn commuting_letters_share_a_block() {
        let p = pres(2, &[(0, 1)]);
        assert_eq!(nf(&p, "ba").to_string(), "(ab)");
        let p = pres(3, &[(0, 2)]);
        assert_eq!(nf(&p, "cab").to_string(), "(ac)(b)");
        assert_eq!(nf(&p, "cab").len(), 3);
    }

    #[test]
    fn normalize_is_idempotent() {
        let p = pres(4, &[(0, 2), (1, 3), (0, 3)]);
        for w in ["dcba", "abcdabcd", "ddaacb", "bdbdac"] {
            let t = nf(&p, w);
            assert!(t.is_foata());
            assert_eq!(Trace::normalize(&p, &t.word()).unwrap(), t);
        }
    }

    #[test]
    fn unknown_letter_is_rejected() {
        let p = pres(2, &[]);
        assert_eq!(Trace::parse(&p, "abz").unwrap_err(), Error::UnknownLetter("z".into()));
        assert!(Trace::normalize(&p, &[Letter::new(5)]).is_err());
    }

    #[test]
    fn multiply_examples() {
        let p = pres(2, &[(0, 1)]);
        let (a, b) = (nf(&p, "a"), nf(&p, "b"));
        assert_eq!(a.multiply(&b).unwrap().to_string(), "(ab)");
        assert_eq!(a.multiply(&a).unwrap().to_string(), "(a)(a)");
        let one = Trace::unit(&p);
        assert_eq!(one.multiply(&a).unwrap(), a);
        let q = pres(2, &[]);
        assert_eq!(a.multiply(&nf(&q, "a")).unwrap_err(), Error::PresentationMismatch);
    }

    #[test]
    fn projection_examples() {
        let p = pres(3, &[(0, 2)]);
        let t = nf(&p, "cab");
        let ab = LetterSet::first(2);
        let projected = t.project(ab).unwrap();
        let sub = p.induced(ab).unwrap();
        assert_eq!(projected, nf(&sub, "ab"));
        assert_eq!(t.project(p.alphabet()).unwrap(), t);
        assert!(t.project(LetterSet::EMPTY).unwrap().is_unit());
        assert!(t.project(LetterSet::first(5)).is_err());
    }

    #[test]
    fn alph_examples() {
        let p = pres(3, &[(0, 2)]);
        assert!(Trace::unit(&p).alph().is_empty());
        assert_eq!(nf(&p, "cab").alph(), LetterSet::first(3));
        assert_eq!(nf(&p, "aaa").alph(), LetterSet::first(1));
    }

    #[test]
    fn projection_equality_examples() {
        let p = pres(2, &[(0, 1)]);
        assert!(nf(&p, "ab").equals_via_projections(&nf(&p, "ba")).unwrap());
        let q = pres(2, &[]);
        assert!(!nf(&q, "ab").equals_via_projections(&nf(&q, "ba")).unwrap());
        let t = nf(&q, "abba");
        assert!(t.equals_via_projections(&t).unwrap());
        // different letter counts are caught by the diagonal pairs
        assert!(!nf(&p, "ab").equals_via_projections(&nf(&p, "abb")).unwrap());
    }

    #[test]
    fn left_quotient_and_prefixes() {
        let p = pres(3, &[(0, 2)]);
        let t = nf(&p, "cab");
        assert_eq!(t.left_quotient(&nf(&p, "c")).unwrap(), nf(&p, "ab"));
        assert_eq!(t.left_quotient(&nf(&p, "ac")).unwrap(), nf(&p, "b"));
        assert!(t.left_quotient(&nf(&p, "b")).is_none());
        let names: Vec<String> = t.prefixes().iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["1", "(a)", "(c)", "(ac)", "(ac)(b)"]);
    }

    #[test]
    fn strip_first_matches_left_quotient() {
        let p = pres(4, &[(0, 1), (1, 2), (2, 3)]);
        let t = nf(&p, "bdacbd");
        for a in t.first_block() {
            assert_eq!(t.strip_first(a), t.left_quotient(&Trace::letter(&p, a)).unwrap());
        }
    }

    #[test]
    fn transfer_between_sub_and_full_presentation() {
        let p = pres(3, &[(1, 2)]);
        let set: LetterSet = [Letter::new(1), Letter::new(2)].into_iter().collect();
        let sub = p.induced(set).unwrap();
        let t = nf(&sub, "cb");
        assert_eq!(t.transfer(&p).unwrap(), nf(&p, "bc"));
        assert_eq!(nf(&p, "cbc").transfer(&sub).unwrap().to_string(), "(bc)(c)");
        assert!(nf(&p, "a").transfer(&sub).is_err());
    }

    #[test]
    fn traces_up_to_counts() {
        // free monoid on two letters: 1 + 2 + 4 + 8
        assert_eq!(traces_up_to(&pres(2, &[]), 3).len(), 15);
        // free commutative monoid on two letters: monomials of degree <= 3
        assert_eq!(traces_up_to(&pres(2, &[(0, 1)]), 3).len(), 10);
        let all = traces_up_to(&pres(3, &[(0, 1)]), 3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn from_blocks_validates() {
        let p = pres(3, &[(0, 2)]);
        let ac = LetterSet::from_bits(0b101);
        let b = LetterSet::from_bits(0b010);
        assert!(Trace::from_blocks(&p, vec![ac, b]).is_some());
        // (b)(ac): c has no dependent letter in (b)? c depends on b, a depends on b -> valid
        assert!(Trace::from_blocks(&p, vec![b, ac]).is_some());
        // (a)(c): c commutes with a, so it should have been in the first block
        assert!(Trace::from_blocks(&p, vec![LetterSet::from_bits(1), LetterSet::from_bits(4)]).is_none());
        assert!(Trace::from_blocks(&p, vec![LetterSet::from_bits(0b011)]).is_none());
    }
}
