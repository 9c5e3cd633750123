//! The free resolution of `ℤ` over `ℤM` whose degree-`k` module has one
//! generator per `k`-clique of the commutation graph:
//!
//! ```text
//! ... → F_2 → F_1 → F_0 = ℤM → ℤ → 0
//! δ_k[a_1…a_k] = Σ_j (-1)^(j-1) [a_1…â_j…a_k](a_j - 1)
//! ```
//!
//! plus the homology and dimension statements that follow from it.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{Clique, CommutationGraph};
use crate::ring::ModuleElement;
use crate::trace::{Presentation, Trace};

/// Generators of the resolution, degree by degree.
#[derive(Clone, Debug)]
pub struct Complex {
    graph: CommutationGraph,
    generators: Vec<Vec<Clique>>,
}

impl Complex {
    /// Enumerates generators through `min(max_degree, clique number)`;
    /// `None` stops at the clique number.
    pub fn new(p: &Presentation, max_degree: Option<usize>) -> Self {
        let graph = CommutationGraph::new(p);
        let mut generators = graph.all_cliques();
        if let Some(m) = max_degree {
            generators.truncate(m + 1);
        }
        Complex { graph, generators }
    }

    pub fn presentation(&self) -> &Presentation {
        self.graph.presentation()
    }

    pub fn graph(&self) -> &CommutationGraph {
        &self.graph
    }

    /// Highest degree with generators enumerated.
    pub fn max_degree(&self) -> usize {
        self.generators.len() - 1
    }

    /// Generators of `F_k`; empty above the clique number.
    pub fn generators(&self, k: usize) -> &[Clique] {
        self.generators.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `r_k`, with `r_0 = 1`.
    pub fn rank(&self, k: usize) -> usize {
        self.generators(k).len()
    }

    /// `(r_0, r_1, ..., r_max)`.
    pub fn ranks(&self) -> Vec<usize> {
        self.generators.iter().map(Vec::len).collect()
    }

    /// `δ_k` of a single generator.
    pub fn boundary_of_generator(&self, c: Clique) -> ModuleElement {
        assert!(!c.is_empty(), "F_0 has no boundary");
        let p = self.presentation();
        self.boundary_term(c, &Trace::unit(p), &BigInt::from(1), ModuleElement::zero(p, c.size() - 1))
    }

    fn boundary_term(&self, c: Clique, t: &Trace, n: &BigInt, mut acc: ModuleElement) -> ModuleElement {
        let p = self.presentation();
        for (j, a) in c.iter().enumerate() {
            let face = c.without(a);
            let signed = if j % 2 == 0 { n.clone() } else { -n };
            acc.add_term(face, Trace::letter(p, a).concat(t), signed.clone());
            acc.add_term(face, t.clone(), -signed);
        }
        acc
    }

    /// Applies `δ_k` to an element of `F_k`, `1 <= k <= max_degree`.
    pub fn boundary(&self, m: &ModuleElement) -> Result<ModuleElement> {
        self.presentation().ensure_same(m.presentation())?;
        let k = m.degree();
        if k == 0 || k > self.max_degree() {
            return Err(Error::DegreeOutOfRange { degree: k, max: self.max_degree() });
        }
        let mut acc = ModuleElement::zero(self.presentation(), k - 1);
        for (c, t, n) in m.terms() {
            acc = self.boundary_term(c, t, n, acc);
        }
        Ok(acc)
    }

    /// `ε` on `F_0`.
    pub fn augmentation(&self, m: &ModuleElement) -> Result<BigInt> {
        self.presentation().ensure_same(m.presentation())?;
        if m.degree() != 0 {
            return Err(Error::DegreeMismatch { expected: 0, found: m.degree() });
        }
        Ok(m.terms().map(|(_, _, n)| n).sum())
    }

    /// Checks `δ_{k-1} δ_k = 0` on every generator of degree `k >= 2`, and
    /// `ε δ_1 = 0` on degree 1.
    pub fn verify_dd_zero(&self) -> DdReport {
        let mut report = DdReport::default();
        for k in 1..=self.max_degree() {
            for &c in self.generators(k) {
                let once = self.boundary_of_generator(c);
                report.checked += 1;
                let ok = if k == 1 {
                    self.augmentation(&once).map(|e| e.is_zero()).unwrap_or(false)
                } else {
                    self.boundary(&once).map(|twice| twice.is_zero()).unwrap_or(false)
                };
                if !ok {
                    report.violations.push((k, c));
                }
            }
        }
        report.violations.sort();
        report
    }
}

/// Outcome of [`Complex::verify_dd_zero`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DdReport {
    pub checked: usize,
    /// `(degree, generator)` pairs whose double boundary is non-zero.
    pub violations: Vec<(usize, Clique)>,
}

impl DdReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Ranks of `H_n(M, ℤ)` for `n = 1 ..= clique number`; all higher groups
/// vanish.
pub fn homology_ranks(p: &Presentation) -> Vec<usize> {
    Complex::new(p, None).ranks().split_off(1)
}

/// `H_n(M, A) ≅ A^multiplicity` for a trivial module `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialHomology {
    pub degree: usize,
    pub multiplicity: usize,
    /// Whether `δ_n ⊗_M A` and `δ_{n+1} ⊗_M A` are zero maps, checked on
    /// every generator.
    pub differentials_vanish: bool,
}

pub fn homology_trivial_module(p: &Presentation, n: usize) -> TrivialHomology {
    let complex = Complex::new(p, Some(n + 1));
    let vanishes = |k: usize| {
        k == 0
            || complex
                .generators(k)
                .iter()
                .all(|&c| complex.boundary_of_generator(c).trivialize().is_empty())
    };
    TrivialHomology {
        degree: n,
        multiplicity: complex.rank(n),
        differentials_vanish: vanishes(n) && vanishes(n + 1),
    }
}

/// Bounds on the homological dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionBounds {
    /// Length of the resolution, i.e. the clique number.
    pub upper: usize,
    /// Largest `n` with `H_n(M, ℤ) ≠ 0`.
    pub lower: usize,
}

pub fn homological_dimension(p: &Presentation) -> DimensionBounds {
    let upper = CommutationGraph::new(p).clique_number();
    let lower = homology_ranks(p).iter().rposition(|&r| r > 0).map_or(0, |i| i + 1);
    DimensionBounds { upper, lower }
}
