use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Letter, LetterSet, MAX_LETTERS};
use crate::error::{Error, Result};

/// A finite totally ordered alphabet together with a symmetric irreflexive
/// independence (commutation) relation.
///
/// Cloning is cheap; traces hold a clone of the presentation they live in.
#[derive(Clone)]
pub struct Presentation(Arc<Inner>);

struct Inner {
    names: Vec<String>,
    // independent[a] is the set of letters commuting with a
    independent: Vec<LetterSet>,
    single_char: bool,
}

/// On-disk form of a presentation.
///
/// ```toml
/// letters = ["a", "b", "c"]
/// commuting = [["a", "b"], ["b", "c"]]
/// ```
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub letters: Vec<String>,
    #[serde(default)]
    pub commuting: Vec<Vec<String>>,
}

impl Presentation {
    /// Builds a presentation from letter names (in alphabet order) and
    /// commuting pairs. Reflexive and duplicate pairs are rejected.
    pub fn new<S: AsRef<str>, T: AsRef<str>>(letters: &[S], commuting: &[(T, T)]) -> Result<Self> {
        if letters.len() > MAX_LETTERS {
            return Err(Error::TooManyLetters(letters.len()));
        }
        let names: Vec<String> = letters.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '(' || c == ')') {
                return Err(Error::Parse(format!("invalid letter name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateLetter(name.clone()));
            }
        }
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .map(Letter::new)
                .ok_or_else(|| Error::UnknownLetter(s.to_owned()))
        };
        let mut independent = vec![LetterSet::EMPTY; names.len()];
        for (x, y) in commuting {
            let (a, b) = (lookup(x.as_ref())?, lookup(y.as_ref())?);
            if a == b {
                return Err(Error::ReflexivePair(x.as_ref().to_owned()));
            }
            if independent[a.index()].contains(b) {
                return Err(Error::DuplicatePair(x.as_ref().to_owned(), y.as_ref().to_owned()));
            }
            independent[a.index()].insert(b);
            independent[b.index()].insert(a);
        }
        Ok(Self::from_parts(names, independent))
    }

    /// Builds a presentation on letters named by their index-th lowercase
    /// letter (`a`, `b`, ...) from per-letter independence masks.
    ///
    /// Panics if the masks are not symmetric and irreflexive.
    pub fn from_masks(independent: Vec<LetterSet>) -> Self {
        let n = independent.len();
        assert!(n <= 26, "from_masks names letters a..z");
        for (i, s) in independent.iter().enumerate() {
            assert!(!s.contains(Letter::new(i)), "irreflexive");
            assert!(s.is_subset(LetterSet::first(n)));
            for j in s.iter() {
                assert!(independent[j.index()].contains(Letter::new(i)), "symmetric");
            }
        }
        let names = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Self::from_parts(names, independent)
    }

    /// Presentation on `a, b, ...` whose commuting pairs are the edges
    /// `(i, j)` of the given list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut masks = vec![LetterSet::EMPTY; n];
        for &(i, j) in edges {
            masks[i].insert(Letter::new(j));
            masks[j].insert(Letter::new(i));
        }
        Self::from_masks(masks)
    }

    fn from_parts(names: Vec<String>, independent: Vec<LetterSet>) -> Self {
        let single_char = names.iter().all(|n| n.chars().count() == 1);
        Presentation(Arc::new(Inner { names, independent, single_char }))
    }

    pub fn parse_toml(text: &str) -> Result<Self> {
        let file: PresentationFile = toml::from_str(text).map_err(|e| Error::Parse(e.message().to_owned()))?;
        Self::from_file(&file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse_toml(&text)
    }

    pub fn from_file(file: &PresentationFile) -> Result<Self> {
        let mut pairs = Vec::with_capacity(file.commuting.len());
        for pair in &file.commuting {
            match pair.as_slice() {
                [x, y] => pairs.push((x.as_str(), y.as_str())),
                _ => return Err(Error::Parse(format!("commuting entry {pair:?} is not a pair"))),
            }
        }
        Self::new(&file.letters, &pairs)
    }

    pub fn to_file(&self) -> PresentationFile {
        PresentationFile {
            letters: self.0.names.clone(),
            commuting: self
                .commuting_pairs()
                .into_iter()
                .map(|(a, b)| vec![self.name(a).to_owned(), self.name(b).to_owned()])
                .collect(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&self.to_file()).expect("presentation serializes")
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(Letter::new)
    }

    pub fn alphabet(&self) -> LetterSet {
        LetterSet::first(self.len())
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, a: Letter) -> &str {
        &self.0.names[a.index()]
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.0
            .names
            .iter()
            .position(|n| n == name)
            .map(Letter::new)
            .ok_or_else(|| Error::UnknownLetter(name.to_owned()))
    }

    /// Parses a letter set written either as whitespace/comma separated
    /// names or, when every letter is a single character, as a plain string
    /// such as `"ab"`.
    pub fn letter_set(&self, text: &str) -> Result<LetterSet> {
        self.parse_letters(text).map(|w| w.into_iter().collect())
    }

    /// Splits a word into letters. `""` and `"1"` (when `1` is not a letter)
    /// denote the empty word.
    pub fn parse_letters(&self, text: &str) -> Result<Vec<Letter>> {
        let text = text.trim();
        if text.is_empty() || (text == "1" && self.letter("1").is_err()) {
            return Ok(Vec::new());
        }
        if text.contains(|c: char| c.is_whitespace() || c == ',') {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| self.letter(s))
                .collect()
        } else if self.0.single_char {
            text.chars().map(|c| self.letter(c.encode_utf8(&mut [0; 4]))).collect()
        } else {
            self.letter(text).map(|a| vec![a])
        }
    }

    pub fn uses_single_char_names(&self) -> bool {
        self.0.single_char
    }

    /// Letters commuting with `a`.
    pub fn independent_of(&self, a: Letter) -> LetterSet {
        self.0.independent[a.index()]
    }

    /// Letters not commuting with `a`, including `a` itself.
    pub fn dependent_on(&self, a: Letter) -> LetterSet {
        self.alphabet().difference(self.0.independent[a.index()])
    }

    pub fn commute(&self, a: Letter, b: Letter) -> bool {
        self.0.independent[a.index()].contains(b)
    }

    /// Pairs `(a, b)` of the dependence relation with `a <= b`, diagonal
    /// included.
    pub fn dependent_pairs(&self) -> Vec<(Letter, Letter)> {
        let mut out = Vec::new();
        for a in self.letters() {
            for b in self.letters().filter(|&b| b >= a) {
                if !self.commute(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Independence relation as unordered pairs `(a, b)` with `a < b`, in
    /// lexicographic order.
    pub fn commuting_pairs(&self) -> Vec<(Letter, Letter)> {
        let mut out = Vec::new();
        for a in self.letters() {
            for b in self.independent_of(a).iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    /// True when every set of letters in `set` commutes pairwise.
    pub fn is_commuting_set(&self, set: LetterSet) -> bool {
        set.iter().all(|a| set.without(a).is_subset(self.independent_of(a)))
    }

    /// The presentation `(A, I_A)` induced on a subset of the alphabet.
    /// Letter order is inherited.
    pub fn induced(&self, set: LetterSet) -> Result<Self> {
        self.check_subset(set)?;
        let kept: Vec<Letter> = set.iter().collect();
        let names = kept.iter().map(|&a| self.name(a).to_owned()).collect();
        let independent = kept
            .iter()
            .map(|&a| {
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.commute(a, b))
                    .map(|(j, _)| Letter::new(j))
                    .collect()
            })
            .collect();
        Ok(Self::from_parts(names, independent))
    }

    pub(crate) fn check_subset(&self, set: LetterSet) -> Result<()> {
        if set.is_subset(self.alphabet()) {
            Ok(())
        } else {
            let stray = set.difference(self.alphabet()).min().unwrap();
            Err(Error::UnknownLetter(format!("#{}", stray.index())))
        }
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    /// Renders a letter set, e.g. `{a, c}`.
    pub fn format_set(&self, set: LetterSet) -> String {
        let names: Vec<&str> = set.iter().map(|a| self.name(a)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.names == other.0.names && self.0.independent == other.0.independent)
    }
}

impl Eq for Presentation {}

impl Hash for Presentation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.names.hash(state);
        self.0.independent.hash(state);
    }
}

impl Ord for Presentation {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0
            .names
            .cmp(&other.0.names)
            .then_with(|| self.0.independent.iter().map(|s| s.0).cmp(other.0.independent.iter().map(|s| s.0)))
    }
}

impl PartialOrd for Presentation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .commuting_pairs()
            .into_iter()
            .map(|(a, b)| format!("{}{}", self.name(a), self.name(b)))
            .collect();
        write!(f, "<{} | {}>", self.0.names.join(","), pairs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_toml_file() {
        let p = Presentation::parse_toml("letters = [\"a\", \"b\", \"c\"]\ncommuting = [[\"a\", \"b\"], [\"c\", \"b\"]]\n")
            .unwrap();
        assert_eq!(p.len(), 3);
        let (a, b, c) = (Letter::new(0), Letter::new(1), Letter::new(2));
        assert!(p.commute(a, b) && p.commute(b, a) && p.commute(b, c));
        assert!(!p.commute(a, c));
        assert_eq!(p.commuting_pairs(), vec![(a, b), (b, c)]);
        assert_eq!(p.dependent_pairs(), vec![(a, a), (a, c), (b, b), (c, c)]);
    }

    #[test]
    fn commuting_defaults_to_empty() {
        let p = Presentation::parse_toml("letters = [\"x\"]").unwrap();
        assert!(p.commuting_pairs().is_empty());
    }

    #[test]
    fn rejects_reflexive_and_duplicate_pairs() {
        assert_eq!(
            Presentation::new(&["a", "b"], &[("a", "a")]).unwrap_err(),
            Error::ReflexivePair("a".into())
        );
        assert_eq!(
            Presentation::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err(),
            Error::DuplicatePair("b".into(), "a".into())
        );
        assert_eq!(Presentation::new::<&str, &str>(&["a", "a"], &[]).unwrap_err(), Error::DuplicateLetter("a".into()));
        assert_eq!(
            Presentation::new(&["a", "b"], &[("a", "z")]).unwrap_err(),
            Error::UnknownLetter("z".into())
        );
    }

    #[test]
    fn rejects_malformed_pairs() {
        let err = Presentation::parse_toml("letters = [\"a\", \"b\"]\ncommuting = [[\"a\"]]").unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
        let err = Presentation::parse_toml("letters = [\"a\"]\nextra = 1").unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn toml_round_trip() {
        let p = Presentation::from_edges(4, &[(0, 1), (2, 3), (1, 3)]);
        assert_eq!(Presentation::parse_toml(&p.to_toml()).unwrap(), p);
    }

    #[test]
    fn multi_character_names() {
        let p = Presentation::new(&["send", "recv", "tick"], &[("send", "tick")]).unwrap();
        let w = p.parse_letters("recv send, tick").unwrap();
        assert_eq!(w.iter().map(|&a| p.name(a)).collect::<Vec<_>>(), ["recv", "send", "tick"]);
        assert_eq!(p.parse_letters("tick").unwrap().len(), 1);
        assert!(p.parse_letters("sendrecv").is_err());
    }

    #[test]
    fn induced_keeps_order_and_relation() {
        let p = Presentation::from_edges(4, &[(0, 2), (1, 3), (2, 3)]);
        let sub = p.induced([Letter::new(0), Letter::new(2), Letter::new(3)].into_iter().collect()).unwrap();
        assert_eq!(sub.names(), ["a", "c", "d"]);
        assert_eq!(sub.commuting_pairs(), vec![(Letter::new(0), Letter::new(1)), (Letter::new(1), Letter::new(2))]);
    }
}
