//! Brute-force oracles shared by the integration tests. None of them call
//! into the normal-form, clique or resolution code under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::RngExt;
use tracehom::{Letter, Presentation, Trace};

pub type Word = Vec<u8>;

/// All pairs `(i, j)`, `i < j < n`.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Presentation on `n` letters whose commuting pairs are the pairs selected
/// by the bits of `mask` (in [`all_pairs`] order).
pub fn presentation_from_mask(n: usize, mask: u64) -> Presentation {
    let edges: Vec<_> = all_pairs(n).into_iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect();
    Presentation::from_edges(n, &edges)
}

/// Every independence relation on `n` letters.
pub fn all_presentations(n: usize) -> Vec<Presentation> {
    let m = all_pairs(n).len();
    (0..1u64 << m).map(|mask| presentation_from_mask(n, mask)).collect()
}

pub fn random_presentation(rng: &mut StdRng, n: usize) -> Presentation {
    let m = all_pairs(n).len();
    presentation_from_mask(n, rng.random_range(0..1u64 << m))
}

pub fn complete(n: usize) -> Presentation {
    Presentation::from_edges(n, &all_pairs(n))
}

pub fn path(n: usize) -> Presentation {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Presentation::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Presentation {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Presentation::from_edges(n, &edges)
}

/// Adjacency of the commutation graph as a plain matrix.
pub fn adjacency(p: &Presentation) -> Vec<Vec<bool>> {
    let n = p.len();
    (0..n).map(|i| (0..n).map(|j| i != j && p.commute(Letter::new(i), Letter::new(j))).collect()).collect()
}

/// All words of length at most `max_len` over `n` letters, shortest first.
pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..n as u8 {
                let mut x = w.clone();
                x.push(a);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_word(rng: &mut StdRng, n: usize, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    (0..len).map(|_| rng.random_range(0..n as u8)).collect()
}

pub fn to_trace(p: &Presentation, w: &[u8]) -> Trace {
    let letters: Vec<Letter> = w.iter().map(|&a| Letter::new(a as usize)).collect();
    Trace::normalize(p, &letters).expect("letters of the presentation")
}

/// The set of words reachable from `w` by swapping adjacent commuting letters.
pub fn commutation_closure(adj: &[Vec<bool>], w: &[u8]) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for i in 1..x.len() {
            if adj[x[i - 1] as usize][x[i] as usize] {
                let mut y = x.clone();
                y.swap(i - 1, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

/// Partition of `words` into commutation classes: `class[i]` is the index of
/// the first word equivalent to `words[i]`.
pub fn closure_classes(adj: &[Vec<bool>], words: &[Word]) -> Vec<usize> {
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut class = vec![usize::MAX; words.len()];
    for i in 0..words.len() {
        if class[i] != usize::MAX {
            continue;
        }
        for y in commutation_closure(adj, &words[i]) {
            if let Some(&j) = index.get(&y) {
                class[j] = i;
            }
        }
    }
    class
}

/// Left divisors of the trace of `w`, as words: every prefix of every word
/// in its commutation class.
pub fn left_divisor_words(adj: &[Vec<bool>], w: &[u8]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for x in commutation_closure(adj, w) {
        for k in 0..=x.len() {
            out.insert(x[..k].to_vec());
        }
    }
    out
}

/// Number of `k`-element subsets of the vertex set that are pairwise
/// adjacent, for every `k` from 0 to `n`.
pub fn clique_counts(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    let mut counts = vec![0; n + 1];
    for mask in 0u32..1 << n {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let complete = members.iter().enumerate().all(|(x, &i)| members[x + 1..].iter().all(|&j| adj[i][j]));
        if complete {
            counts[members.len()] += 1;
        }
    }
    counts
}

/// Size of the largest clique according to [`clique_counts`].
pub fn clique_number(adj: &[Vec<bool>]) -> usize {
    clique_counts(adj).iter().rposition(|&c| c > 0).unwrap_or(0)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
