use std::fmt;

/// Index of a letter inside its presentation. The index order is the total
/// order on the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub(crate) u8);

impl Letter {
    pub fn new(index: usize) -> Self {
        assert!(index < super::MAX_LETTERS, "letter index {index} out of range");
        Letter(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn bit(self) -> u64 {
        1u64 << self.0
    }
}

/// A set of letters stored as a bitmask over letter indices.
///
/// Iteration yields letters in ascending alphabet order, which is also the
/// order in which a Foata block is written.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LetterSet(pub(crate) u64);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    /// The first `n` letters.
    pub fn first(n: usize) -> Self {
        assert!(n <= super::MAX_LETTERS);
        if n == 64 {
            LetterSet(u64::MAX)
        } else {
            LetterSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        LetterSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(a: Letter) -> Self {
        LetterSet(a.bit())
    }

    pub fn contains(self, a: Letter) -> bool {
        self.0 & a.bit() != 0
    }

    pub fn insert(&mut self, a: Letter) {
        self.0 |= a.bit();
    }

    pub fn remove(&mut self, a: Letter) {
        self.0 &= !a.bit();
    }

    pub fn with(self, a: Letter) -> Self {
        LetterSet(self.0 | a.bit())
    }

    pub fn without(self, a: Letter) -> Self {
        LetterSet(self.0 & !a.bit())
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        LetterSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        LetterSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        LetterSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest letter of the set.
    pub fn min(self) -> Option<Letter> {
        (self.0 != 0).then(|| Letter(self.0.trailing_zeros() as u8))
    }

    pub fn iter(self) -> Letters {
        Letters(self.0)
    }

    /// Lexicographic comparison of the ascending member lists.
    pub fn cmp_lex(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<Letter> for LetterSet {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        let mut s = LetterSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl IntoIterator for LetterSet {
    type Item = Letter;
    type IntoIter = Letters;

    fn into_iter(self) -> Letters {
        self.iter()
    }
}

impl fmt::Debug for LetterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|a| a.0)).finish()
    }
}

/// Ascending iterator over the members of a [`LetterSet`].
#[derive(Clone, Debug)]
pub struct Letters(u64);

impl Iterator for Letters {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(Letter(i as u8))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Letters {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s: LetterSet = [Letter(5), Letter(0), Letter(3)].into_iter().collect();
        assert_eq!(s.iter().map(Letter::index).collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(Letter(0)));
    }

    #[test]
    fn lex_order_differs_from_bit_order() {
        // {a, d} < {b} lexicographically although its mask is larger.
        let ad = LetterSet(0b1001);
        let b = LetterSet(0b0010);
        assert!(ad.cmp_lex(b).is_lt());
        assert!(ad.0 > b.0);
    }

    #[test]
    fn full_alphabet_mask() {
        assert_eq!(LetterSet::first(3).0, 0b111);
        assert_eq!(LetterSet::first(64).len(), 64);
        assert!(LetterSet::first(0).is_empty());
    }
}
