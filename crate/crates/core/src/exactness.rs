//! Bounded-length certification that the resolution is exact, using exact
//! integer linear algebra on truncations of the free modules.
//!
//! A basis cell `[c]·t` of `F_k` has total length `|c| + |t|`. The boundary
//! never increases total length, so `δ_k` restricted to cells of total length
//! `≤ L` is a finite integer matrix. Kernel elements found at length `≤ L`
//! are searched for in the image of `δ_{k+1}` truncated at `L + h` for
//! `h = 0, 1, …, H`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::amalgam::{AmalgamSplit, Side};
use crate::error::{Error, Result};
use crate::graph::{Clique, CommutationGraph};
use crate::linalg::{Echelon, SparseVec};
use crate::resolution::Complex;
use crate::ring::ModuleElement;
use crate::trace::{traces_up_to, LetterSet, Presentation, Trace};

/// Default headroom for [`check_exactness_at`].
pub const DEFAULT_HEADROOM: usize = 2;

/// A basis element `[c] ⊗ t` of a truncated free module, optionally tagged
/// with the summand it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub side: Option<Side>,
    pub clique: Clique,
    pub trace: Trace,
}

impl Cell {
    pub fn new(side: Option<Side>, clique: Clique, trace: Trace) -> Self {
        Cell { side, clique, trace }
    }

    pub fn total_length(&self) -> usize {
        self.clique.size() + self.trace.len()
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_length()
            .cmp(&other.total_length())
            .then_with(|| self.clique.cmp(&other.clique))
            .then_with(|| self.trace.cmp(&other.trace))
            .then_with(|| self.side.cmp(&other.side))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(side) = self.side {
            write!(f, "{side}:")?;
        }
        write!(f, "{}{}", self.clique.render(self.trace.presentation()), self.trace)
    }
}

/// Cells `[c]·t` for the given cliques with total length at most `max_len`,
/// sorted.
fn cells(cliques: &[Clique], side: Option<Side>, traces: &[Trace], max_len: usize) -> Vec<Cell> {
    let mut out: Vec<Cell> = cliques
        .iter()
        .filter(|c| c.size() <= max_len)
        .flat_map(|&c| {
            traces.iter().filter(move |t| c.size() + t.len() <= max_len).map(move |t| Cell::new(side, c, t.clone()))
        })
        .collect();
    out.sort();
    out
}

/// An integer matrix between truncated free modules; column `j` is the image
/// of `cols[j]` written in the basis `rows`.
#[derive(Clone, Debug)]
pub struct TruncatedMatrix {
    rows: Vec<Cell>,
    cols: Vec<Cell>,
    columns: Vec<SparseVec>,
    row_index: HashMap<Cell, usize>,
}

impl TruncatedMatrix {
    fn build(rows: Vec<Cell>, cols: Vec<Cell>, image: impl Fn(&Cell) -> Vec<(Cell, BigInt)>) -> Self {
        let row_index: HashMap<Cell, usize> = rows.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let columns = cols
            .iter()
            .map(|col| {
                let mut v = SparseVec::new();
                for (cell, n) in image(col) {
                    let i = *row_index.get(&cell).unwrap_or_else(|| panic!("image cell {cell} outside the truncation"));
                    let entry = v.entry(i).or_default();
                    *entry += n;
                    if entry.is_zero() {
                        v.remove(&i);
                    }
                }
                v
            })
            .collect();
        TruncatedMatrix { rows, cols, columns, row_index }
    }

    pub fn rows(&self) -> &[Cell] {
        &self.rows
    }

    pub fn cols(&self) -> &[Cell] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        self.columns[j].get(&i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_empty)
    }

    pub fn row_of(&self, cell: &Cell) -> Option<usize> {
        self.row_index.get(cell).copied()
    }

    /// Coordinates of a combination of row cells.
    pub fn to_vector<'a>(&self, terms: impl IntoIterator<Item = (&'a Cell, &'a BigInt)>) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (cell, n) in terms {
            let i = self.row_of(cell).ok_or(Error::DimensionMismatch { expected: self.nrows(), found: self.nrows() + 1 })?;
            let entry = v.entry(i).or_default();
            *entry += n;
            if entry.is_zero() {
                v.remove(&i);
            }
        }
        Ok(v)
    }

    /// `self ∘ rhs`; the columns of `self` must be the rows of `rhs`.
    pub fn compose(&self, rhs: &TruncatedMatrix) -> Result<TruncatedMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.ncols(), found: rhs.nrows() });
        }
        let columns = rhs
            .columns
            .iter()
            .map(|x| crate::linalg::apply(&self.columns, x).expect("shapes checked"))
            .collect();
        Ok(TruncatedMatrix { rows: self.rows.clone(), cols: rhs.cols.clone(), columns, row_index: self.row_index.clone() })
    }

    pub fn echelon(&self, track: bool) -> Echelon {
        Echelon::new(self.nrows(), &self.columns, track).expect("columns index existing rows")
    }

    pub fn rank(&self) -> usize {
        self.echelon(false).rank()
    }
}

/// Whether `target` (a dense vector over the rows) lies in the integer span
/// of the columns.
pub fn integer_rank_and_image_test(m: &TruncatedMatrix, target: &[BigInt]) -> Result<bool> {
    if target.len() != m.nrows() {
        return Err(Error::DimensionMismatch { expected: m.nrows(), found: target.len() });
    }
    let sparse: SparseVec = target.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
    m.echelon(false).contains(&sparse)
}

fn module_cells(complex: &Complex, k: usize, traces: &[Trace], max_len: usize) -> Vec<Cell> {
    if k == 0 {
        return cells(&[Clique::EMPTY], None, traces, max_len);
    }
    cells(complex.generators(k), None, traces, max_len)
}

fn boundary_image(complex: &Complex, cell: &Cell) -> Vec<(Cell, BigInt)> {
    let m = ModuleElement::term(cell.clique, cell.trace.clone(), 1);
    let image = complex.boundary(&m).expect("degree within the complex");
    image.terms().map(|(c, t, n)| (Cell::new(None, c, t.clone()), n.clone())).collect()
}

/// The matrix of `δ_k` on cells of total length at most `max_len`. Empty
/// above the enumerated degrees.
pub fn truncate_boundary(complex: &Complex, k: usize, max_len: usize) -> Result<TruncatedMatrix> {
    if k == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, max: complex.max_degree() });
    }
    let traces = traces_up_to(complex.presentation(), max_len);
    let rows = if k - 1 <= complex.max_degree() { module_cells(complex, k - 1, &traces, max_len) } else { Vec::new() };
    let cols = if k <= complex.max_degree() { module_cells(complex, k, &traces, max_len) } else { Vec::new() };
    Ok(TruncatedMatrix::build(rows, cols, |cell| boundary_image(complex, cell)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Hit by the image truncated at `L + headroom`.
    Pass { headroom: usize },
    /// Not hit within the headroom.
    Inconclusive,
    /// Non-zero kernel element where the next module is zero.
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass { .. } => f.write_str("pass"),
            Verdict::Inconclusive => f.write_str("inconclusive"),
            Verdict::Fail => f.write_str("fail"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorVerdict {
    pub generator: ModuleElement,
    pub verdict: Verdict,
}

/// Result of [`check_exactness_at`].
#[derive(Clone, Debug)]
pub struct ExactnessReport {
    pub degree: usize,
    pub max_length: usize,
    pub headroom: usize,
    /// Number of cells of `F_k` with total length `≤ L`.
    pub cells: usize,
    /// Rank of `δ_k` (of `ε` when `k = 0`) on those cells.
    pub boundary_rank: usize,
    /// Rank of `δ_{k+1}` at the largest truncation searched.
    pub image_rank: usize,
    /// Largest headroom some generator needed.
    pub headroom_used: usize,
    pub generators: Vec<GeneratorVerdict>,
}

impl ExactnessReport {
    pub fn kernel_rank(&self) -> usize {
        self.generators.len()
    }

    pub fn count(&self, pred: impl Fn(Verdict) -> bool) -> usize {
        self.generators.iter().filter(|g| pred(g.verdict)).count()
    }

    pub fn passes(&self) -> usize {
        self.count(|v| matches!(v, Verdict::Pass { .. }))
    }

    pub fn inconclusive(&self) -> usize {
        self.count(|v| v == Verdict::Inconclusive)
    }

    pub fn failures(&self) -> usize {
        self.count(|v| v == Verdict::Fail)
    }

    pub fn passed(&self) -> bool {
        self.passes() == self.generators.len()
    }
}

fn kernel_generators(complex: &Complex, k: usize, max_len: usize) -> (Vec<Vec<(Cell, BigInt)>>, usize, usize) {
    let p = complex.presentation();
    if k == 0 {
        let one = Cell::new(None, Clique::EMPTY, Trace::unit(p));
        let traces = traces_up_to(p, max_len);
        let gens = traces[1..]
            .iter()
            .map(|t| vec![(Cell::new(None, Clique::EMPTY, t.clone()), BigInt::one()), (one.clone(), -BigInt::one())])
            .collect();
        return (gens, traces.len(), 1);
    }
    if k > complex.max_degree() {
        return (Vec::new(), 0, 0);
    }
    let m = truncate_boundary(complex, k, max_len).expect("k >= 1");
    let e = m.echelon(true);
    let gens = e
        .kernel_basis()
        .expect("tracked")
        .into_iter()
        .map(|x| x.into_iter().map(|(j, n)| (m.cols()[j].clone(), n)).collect())
        .collect();
    (gens, m.ncols(), e.rank())
}

/// Tests each element of an integer basis of `Ker δ_k` (of `Ker ε` for
/// `k = 0`) on total length `≤ max_len` for membership in the image of
/// `δ_{k+1}` truncated at `max_len + h`, `h ≤ headroom`.
pub fn check_exactness_at(complex: &Complex, k: usize, max_len: usize, headroom: usize) -> ExactnessReport {
    let p = complex.presentation();
    let (kernel, cells, boundary_rank) = kernel_generators(complex, k, max_len);
    let mut verdicts: Vec<Option<Verdict>> = vec![None; kernel.len()];
    let mut image_rank = 0;
    let mut headroom_used = 0;
    if k < complex.max_degree() {
        for h in 0..=headroom {
            if verdicts.iter().all(Option::is_some) {
                break;
            }
            let m = truncate_boundary(complex, k + 1, max_len + h).expect("k + 1 >= 1");
            let e = m.echelon(false);
            image_rank = e.rank();
            for (g, verdict) in kernel.iter().zip(verdicts.iter_mut()).filter(|(_, v)| v.is_none()) {
                let target = m.to_vector(g.iter().map(|(c, n)| (c, n))).expect("kernel cells lie in the truncation");
                if e.contains(&target).expect("rows match") {
                    *verdict = Some(Verdict::Pass { headroom: h });
                    headroom_used = h;
                }
            }
        }
    }
    let top = k >= complex.graph().clique_number();
    let generators = kernel
        .into_iter()
        .zip(verdicts)
        .map(|(g, v)| GeneratorVerdict {
            generator: ModuleElement::from_terms(p, k, g.into_iter().map(|(c, n)| (c.clique, c.trace, n)))
                .expect("cells of degree k"),
            verdict: v.unwrap_or(if top { Verdict::Fail } else { Verdict::Inconclusive }),
        })
        .collect();
    ExactnessReport { degree: k, max_length: max_len, headroom, cells, boundary_rank, image_rank, headroom_used, generators }
}

/// Runs [`check_exactness_at`] for `degree`, or for every degree from 0 to
/// the clique number.
pub fn verify(p: &Presentation, max_len: usize, headroom: usize, degree: Option<usize>) -> Vec<ExactnessReport> {
    let complex = Complex::new(p, None);
    let degrees: Vec<usize> = match degree {
        Some(k) => vec![k],
        None => (0..=complex.max_degree()).collect(),
    };
    degrees.into_iter().map(|k| check_exactness_at(&complex, k, max_len, headroom)).collect()
}

/// Generators of `F_n` sorted into the three kinds of the ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderClasses {
    /// Cliques of `Γ₁ = Γ ∖ x` containing `y`.
    pub a: Vec<Clique>,
    /// Cliques of `Γ₂ = Γ ∖ y` containing `x`.
    pub b: Vec<Clique>,
    /// Cliques of `Γ₀ = Γ ∖ {x, y}`.
    pub c: Vec<Clique>,
}

pub fn ladder_classes(split: &AmalgamSplit, n: usize) -> LadderClasses {
    let graph = CommutationGraph::new(split.presentation());
    let all = graph.cliques_of_size(n);
    let within = |set: LetterSet| all.iter().copied().filter(|c| c.members().is_subset(set)).collect::<Vec<_>>();
    let s0 = split.sigma(Side::M0);
    let not_in_0 = |v: Vec<Clique>| v.into_iter().filter(|c| !c.members().is_subset(s0)).collect();
    LadderClasses { a: not_in_0(within(split.sigma(Side::M1))), b: not_in_0(within(split.sigma(Side::M2))), c: within(s0) }
}

/// Truncations of
/// `0 → F⁰_n ⊗_{M₀} ℤM → F¹_n ⊗_{M₁} ℤM ⊕ F²_n ⊗_{M₂} ℤM → F_n → 0`,
/// where `Fʲ` is the resolution of `Mⱼ`. Each `Fʲ_n ⊗ ℤM` is free on the
/// cells `[c] ⊗ t`, `t ∈ M`.
#[derive(Clone, Debug)]
pub struct LadderMaps {
    pub degree: usize,
    pub i: TruncatedMatrix,
    pub p: TruncatedMatrix,
}

pub fn ladder_maps(complex: &Complex, split: &AmalgamSplit, n: usize, max_len: usize) -> Result<LadderMaps> {
    complex.presentation().ensure_same(split.presentation())?;
    if !split.check_presentation() {
        let p = split.presentation();
        return Err(Error::AdjacentSplit(p.name(split.x()).to_owned(), p.name(split.y()).to_owned()));
    }
    let traces = traces_up_to(complex.presentation(), max_len);
    let classes = ladder_classes(split, n);
    let mut m1: Vec<Clique> = classes.a.iter().chain(&classes.c).copied().collect();
    let mut m2: Vec<Clique> = classes.b.iter().chain(&classes.c).copied().collect();
    m1.sort();
    m2.sort();
    let mut whole: Vec<Clique> = classes.a.iter().chain(&classes.b).chain(&classes.c).copied().collect();
    whole.sort();

    let domain = cells(&classes.c, Some(Side::M0), &traces, max_len);
    let mut middle = cells(&m1, Some(Side::M1), &traces, max_len);
    middle.extend(cells(&m2, Some(Side::M2), &traces, max_len));
    middle.sort();
    let codomain = cells(&whole, None, &traces, max_len);

    let i = TruncatedMatrix::build(middle.clone(), domain, |cell| {
        [Side::M1, Side::M2]
            .into_iter()
            .map(|s| (Cell::new(Some(s), cell.clique, cell.trace.clone()), BigInt::one()))
            .collect()
    });
    let p = TruncatedMatrix::build(codomain, middle, |cell| {
        let sign = if cell.side == Some(Side::M1) { BigInt::one() } else { -BigInt::one() };
        vec![(Cell::new(None, cell.clique, cell.trace.clone()), sign)]
    });
    Ok(LadderMaps { degree: n, i, p })
}

/// Rank arithmetic for one row of the ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderReport {
    pub degree: usize,
    pub domain: usize,
    pub middle: usize,
    pub codomain: usize,
    pub rank_i: usize,
    pub rank_p: usize,
    pub kernel_p_rank: usize,
    pub composite_zero: bool,
    /// Every basis element of `Ker p_n` is an integer combination of the
    /// columns of `i_n`.
    pub kernel_in_image: bool,
}

impl LadderReport {
    pub fn passed(&self) -> bool {
        self.composite_zero
            && self.rank_i == self.domain
            && self.rank_p == self.codomain
            && self.kernel_p_rank == self.rank_i
            && self.kernel_in_image
    }
}

impl LadderMaps {
    pub fn check(&self) -> LadderReport {
        let composite_zero = self.p.compose(&self.i).map(|m| m.is_zero()).unwrap_or(false);
        let ei = self.i.echelon(false);
        let ep = self.p.echelon(true);
        let kernel = ep.kernel_basis().expect("tracked");
        let kernel_in_image = kernel.iter().all(|v| ei.contains(v).unwrap_or(false));
        LadderReport {
            degree: self.degree,
            domain: self.i.ncols(),
            middle: self.i.nrows(),
            codomain: self.p.nrows(),
            rank_i: ei.rank(),
            rank_p: ep.rank(),
            kernel_p_rank: kernel.len(),
            composite_zero,
            kernel_in_image,
        }
    }
}

/// The matrix of `i : ℤ ⊗_{M₀} ℤM → ℤ ⊗_{M₁} ℤM ⊕ ℤ ⊗_{M₂} ℤM` on coset
/// representatives of length at most `max_len`.
pub fn coset_map_matrix(split: &AmalgamSplit, max_len: usize) -> TruncatedMatrix {
    let basis = |side| -> Vec<Cell> {
        split.submonoid(side).enumerate_basis(max_len).into_iter().map(|u| Cell::new(Some(side), Clique::EMPTY, u)).collect()
    };
    let mut rows = basis(Side::M1);
    rows.extend(basis(Side::M2));
    rows.sort();
    TruncatedMatrix::build(rows, basis(Side::M0), |cell| {
        [Side::M1, Side::M2]
            .into_iter()
            .map(|s| (Cell::new(Some(s), Clique::EMPTY, split.reduce_coset(&cell.trace, s)), BigInt::one()))
            .collect()
    })
}
