//! The commutation graph of a presentation and its complete subgraphs.

use std::cmp::Ordering;
use std::fmt;

use crate::trace::{Letter, LetterSet, Presentation};

/// Undirected loop-free graph on the alphabet whose edges join commuting
/// letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationGraph {
    pres: Presentation,
}

/// A complete subgraph, identified by its vertex set. Members iterate in
/// ascending alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Clique(LetterSet);

impl Clique {
    pub const EMPTY: Clique = Clique(LetterSet::EMPTY);

    /// Wraps a vertex set without checking completeness.
    pub fn from_set(members: LetterSet) -> Self {
        Clique(members)
    }

    pub fn members(self) -> LetterSet {
        self.0
    }

    pub fn size(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(self) -> impl Iterator<Item = Letter> {
        self.0.iter()
    }

    pub fn contains(self, a: Letter) -> bool {
        self.0.contains(a)
    }

    /// The face with `a` removed.
    pub fn without(self, a: Letter) -> Clique {
        Clique(self.0.without(a))
    }

    pub fn render(self, p: &Presentation) -> String {
        let sep = if p.uses_single_char_names() { "" } else { " " };
        let names: Vec<&str> = self.iter().map(|a| p.name(a)).collect();
        format!("[{}]", names.join(sep))
    }
}

/// Size first, then lexicographic on the ascending member lists.
impl Ord for Clique {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp_lex(other.0))
    }
}

impl PartialOrd for Clique {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clique{:?}", self.0)
    }
}

impl CommutationGraph {
    pub fn new(p: &Presentation) -> Self {
        CommutationGraph { pres: p.clone() }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn vertex_count(&self) -> usize {
        self.pres.len()
    }

    pub fn adjacent(&self, a: Letter, b: Letter) -> bool {
        self.pres.commute(a, b)
    }

    pub fn neighbours(&self, a: Letter) -> LetterSet {
        self.pres.independent_of(a)
    }

    pub fn edges(&self) -> Vec<(Letter, Letter)> {
        self.pres.commuting_pairs()
    }

    pub fn is_complete(&self) -> bool {
        self.pres.is_commuting_set(self.pres.alphabet())
    }

    pub fn is_clique(&self, set: LetterSet) -> bool {
        set.is_subset(self.pres.alphabet()) && self.pres.is_commuting_set(set)
    }

    /// All `k`-cliques in lexicographic order. `k = 0` yields the empty
    /// clique alone.
    pub fn cliques_of_size(&self, k: usize) -> Vec<Clique> {
        let mut out = Vec::new();
        self.extend(LetterSet::EMPTY, self.pres.alphabet(), k, &mut out);
        out
    }

    // Extends `current` only by letters larger than its members and adjacent
    // to all of them, so every clique is produced once, already sorted.
    fn extend(&self, current: LetterSet, candidates: LetterSet, k: usize, out: &mut Vec<Clique>) {
        if current.len() == k {
            out.push(Clique(current));
            return;
        }
        if current.len() + candidates.len() < k {
            return;
        }
        for a in candidates {
            let above = LetterSet::from_bits(candidates.bits() & !(a.bit() | (a.bit() - 1)));
            self.extend(current.with(a), above.intersection(self.neighbours(a)), k, out);
        }
    }

    /// Cliques of every size from 0 up to the clique number.
    pub fn all_cliques(&self) -> Vec<Vec<Clique>> {
        let mut by_size = vec![vec![Clique::EMPTY]];
        loop {
            let next = self.cliques_of_size(by_size.len());
            if next.is_empty() {
                return by_size;
            }
            by_size.push(next);
        }
    }

    /// Size of a largest clique; 0 for the empty alphabet.
    pub fn clique_number(&self) -> usize {
        let mut k = 0;
        while !self.cliques_of_size(k + 1).is_empty() {
            k += 1;
        }
        k
    }
}
