//! Splitting `M` as an amalgamated product `M₁ *_{M₀} M₂` over two
//! non-commuting letters `x`, `y`, and the short exact sequence
//!
//! ```text
//! 0 → ℤ ⊗_{M₀} ℤM --i--> ℤ ⊗_{M₁} ℤM ⊕ ℤ ⊗_{M₂} ℤM --p--> ℤ → 0
//! ```
//!
//! with `M₀ = M(Σ∖{x,y})`, `M₁ = M(Σ∖x)`, `M₂ = M(Σ∖y)`. An element
//! `1 ⊗_{Mⱼ} w` is represented by the basis trace `u` of `w = a·u`
//! (see [`crate::basis`]).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::basis::SubmonoidSpec;
use crate::error::{Error, Result};
use crate::trace::{Letter, LetterSet, Presentation, Trace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    M0,
    M1,
    M2,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::M0 => "M0",
            Side::M1 => "M1",
            Side::M2 => "M2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmalgamSplit {
    pres: Presentation,
    x: Letter,
    y: Letter,
    m0: SubmonoidSpec,
    m1: SubmonoidSpec,
    m2: SubmonoidSpec,
}

/// A finite combination of cosets `1 ⊗_{M_side} u`, keyed by basis traces.
#[derive(Clone, PartialEq, Eq)]
pub struct CosetVector {
    side: Side,
    terms: BTreeMap<Trace, BigInt>,
}

fn accumulate(map: &mut BTreeMap<Trace, BigInt>, key: Trace, coeff: BigInt) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl CosetVector {
    pub fn zero(side: Side) -> Self {
        CosetVector { side, terms: BTreeMap::new() }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Trace, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, u: &Trace) -> BigInt {
        self.terms.get(u).cloned().unwrap_or_default()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.side != other.side {
            return Err(Error::PresentationMismatch);
        }
        let mut out = self.clone();
        for (u, n) in &other.terms {
            accumulate(&mut out.terms, u.clone(), n.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.side);
        for (u, n) in &self.terms {
            accumulate(&mut out.terms, u.clone(), n * k);
        }
        out
    }
}

impl fmt::Display for CosetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (u, n)) in self.terms.iter().enumerate() {
            let sign = if n.is_negative() { "-" } else { "+" };
            match (i, n.abs().is_one()) {
                (0, true) if !n.is_negative() => write!(f, "1⊗{u}")?,
                (0, true) => write!(f, "-1⊗{u}")?,
                (0, false) => write!(f, "{n}·1⊗{u}")?,
                (_, true) => write!(f, " {sign} 1⊗{u}")?,
                (_, false) => write!(f, " {sign} {}·1⊗{u}", n.abs())?,
            }
        }
        write!(f, " [{}]", self.side)
    }
}

impl fmt::Debug for CosetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Alternating factorization `u = a₁b₁…a_l b_l` as the list of `(a_k, b_k)`.
pub type Factorization = Vec<(Trace, Trace)>;

fn product<'a>(p: &Presentation, factors: impl IntoIterator<Item = &'a Trace>) -> Trace {
    factors.into_iter().fold(Trace::unit(p), |acc, t| acc.concat(t))
}

impl AmalgamSplit {
    /// Splits over the lexicographically first non-commuting pair; `None`
    /// when the commutation graph is complete.
    pub fn find(p: &Presentation) -> Option<Self> {
        for x in p.letters() {
            for y in p.letters().filter(|&y| y > x) {
                if !p.commute(x, y) {
                    return Some(Self::new_unchecked(p, x, y));
                }
            }
        }
        None
    }

    pub fn new(p: &Presentation, x: Letter, y: Letter) -> Result<Self> {
        p.check_subset(LetterSet::singleton(x).with(y))?;
        if x == y || p.commute(x, y) {
            return Err(Error::AdjacentSplit(p.name(x).to_owned(), p.name(y).to_owned()));
        }
        Ok(Self::new_unchecked(p, x, y))
    }

    /// Builds the three submonoids without checking that `x` and `y` fail to
    /// commute. [`check_presentation`](Self::check_presentation) detects such
    /// splits.
    pub fn new_unchecked(p: &Presentation, x: Letter, y: Letter) -> Self {
        let all = p.alphabet();
        let spec = |set| SubmonoidSpec::new(p, set).expect("subset of the alphabet");
        AmalgamSplit {
            pres: p.clone(),
            x,
            y,
            m0: spec(all.without(x).without(y)),
            m1: spec(all.without(x)),
            m2: spec(all.without(y)),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn x(&self) -> Letter {
        self.x
    }

    pub fn y(&self) -> Letter {
        self.y
    }

    pub fn submonoid(&self, side: Side) -> &SubmonoidSpec {
        match side {
            Side::M0 => &self.m0,
            Side::M1 => &self.m1,
            Side::M2 => &self.m2,
        }
    }

    pub fn sigma(&self, side: Side) -> LetterSet {
        self.submonoid(side).sigma0()
    }

    /// Whether `<Σ₁ ∪ Σ₂ | ab = ba, (a,b) ∈ I₁ ∪ I₂>` is the presentation of
    /// `M`, together with `Σ₁ ∩ Σ₂ = Σ₀`.
    pub fn check_presentation(&self) -> bool {
        let p = &self.pres;
        let (s0, s1, s2) = (self.sigma(Side::M0), self.sigma(Side::M1), self.sigma(Side::M2));
        let restricted = |set: LetterSet| -> Vec<(Letter, Letter)> {
            p.commuting_pairs().into_iter().filter(|&(a, b)| set.contains(a) && set.contains(b)).collect()
        };
        let mut union = restricted(s1);
        union.extend(restricted(s2));
        union.sort();
        union.dedup();
        s1.union(s2) == p.alphabet() && s1.intersection(s2) == s0 && union == p.commuting_pairs()
    }

    /// Canonical representative of `1 ⊗_{M_side} t`.
    pub fn reduce_coset(&self, t: &Trace, side: Side) -> Trace {
        self.submonoid(side).reduce(t)
    }

    /// `coeff · 1 ⊗_{M_side} t`.
    pub fn coset(&self, side: Side, t: &Trace, coeff: impl Into<BigInt>) -> Result<CosetVector> {
        self.pres.ensure_same(t.presentation())?;
        let mut v = CosetVector::zero(side);
        accumulate(&mut v.terms, self.reduce_coset(t, side), coeff.into());
        Ok(v)
    }

    /// Sums `coeff · 1 ⊗ t` over the given terms.
    pub fn coset_vector<C: Into<BigInt>>(&self, side: Side, terms: impl IntoIterator<Item = (Trace, C)>) -> Result<CosetVector> {
        let mut v = CosetVector::zero(side);
        for (t, c) in terms {
            self.pres.ensure_same(t.presentation())?;
            accumulate(&mut v.terms, self.reduce_coset(&t, side), c.into());
        }
        Ok(v)
    }

    /// `i(1 ⊗_{M₀} w) = 1 ⊗_{M₁} w + 1 ⊗_{M₂} w`.
    pub fn map_i(&self, v: &CosetVector) -> Result<(CosetVector, CosetVector)> {
        if v.side != Side::M0 {
            return Err(Error::PresentationMismatch);
        }
        let mut left = CosetVector::zero(Side::M1);
        let mut right = CosetVector::zero(Side::M2);
        for (u, n) in &v.terms {
            accumulate(&mut left.terms, self.reduce_coset(u, Side::M1), n.clone());
            accumulate(&mut right.terms, self.reduce_coset(u, Side::M2), n.clone());
        }
        Ok((left, right))
    }

    /// `p(1 ⊗_{M₁} v) = 1`, `p(1 ⊗_{M₂} u) = -1`.
    pub fn map_p(&self, left: &CosetVector, right: &CosetVector) -> Result<BigInt> {
        if left.side != Side::M1 || right.side != Side::M2 {
            return Err(Error::PresentationMismatch);
        }
        Ok(left.coefficient_sum() - right.coefficient_sum())
    }

    /// Greedy alternating factorization `u = a₁b₁…a_l b_l`, `a_k ∈ first`,
    /// `b_k ∈ second`, each factor the longest left divisor of what remains
    /// that lies in its submonoid. The unit has the empty factorization.
    pub fn alternating_factorization(&self, u: &Trace, first: Side, second: Side) -> Factorization {
        let mut out = Vec::new();
        let mut rest = u.clone();
        while !rest.is_unit() {
            let (a, after_a, _) = self.submonoid(first).split(&rest);
            let (b, after_b, _) = self.submonoid(second).split(&after_a);
            assert!(!(a.is_unit() && b.is_unit()), "submonoids do not generate the monoid");
            out.push((a, b));
            rest = after_b;
        }
        out
    }

    /// An `i`-preimage of `1 ⊗_{M₁} u + 1 ⊗_{M₂} v`:
    ///
    /// ```text
    /// w = Σ_{k<l} (b_k a_{k+1}b_{k+1}…a_l b_l − a_{k+1}b_{k+1}…a_l b_l) + b_l
    ///   + Σ_{j≤s} (c_j d_j…c_s d_s − d_j c_{j+1}…c_s d_s)
    /// ```
    ///
    /// for `u = a₁b₁…a_l b_l` and `v = c₁d₁…c_s d_s` with `a, c ∈ M₁` and
    /// `b, d ∈ M₂`. A unit `u` uses `l = 1`, `a₁ = b₁ = 1`. The result is
    /// checked by applying `i` before it is returned.
    pub fn preimage(&self, u: &Trace, v: &Trace) -> Result<CosetVector> {
        self.pres.ensure_same(u.presentation())?;
        self.pres.ensure_same(v.presentation())?;
        let p = &self.pres;
        let mut ab = self.alternating_factorization(u, Side::M1, Side::M2);
        if ab.is_empty() {
            ab.push((Trace::unit(p), Trace::unit(p)));
        }
        let cd = self.alternating_factorization(v, Side::M1, Side::M2);

        let mut w = CosetVector::zero(Side::M0);
        let mut add = |t: Trace, n: i32| accumulate(&mut w.terms, self.reduce_coset(&t, Side::M0), BigInt::from(n));

        let l = ab.len();
        // suffix[k] = a_{k+1} b_{k+1} … a_l b_l (0-based k)
        let suffix: Vec<Trace> =
            (0..=l).map(|k| product(p, ab[k..].iter().flat_map(|(a, b)| [a, b]))).collect();
        for k in 0..l - 1 {
            add(ab[k].1.concat(&suffix[k + 1]), 1);
            add(suffix[k + 1].clone(), -1);
        }
        add(ab[l - 1].1.clone(), 1);

        let s = cd.len();
        let suffix: Vec<Trace> =
            (0..=s).map(|j| product(p, cd[j..].iter().flat_map(|(c, d)| [c, d]))).collect();
        for j in 0..s {
            add(suffix[j].clone(), 1);
            add(cd[j].1.concat(&suffix[j + 1]), -1);
        }

        let (left, right) = self.map_i(&w)?;
        if left != self.coset(Side::M1, u, 1)? || right != self.coset(Side::M2, v, 1)? {
            return Err(Error::NotInKernel(format!("preimage check failed for u = {u}, v = {v}")));
        }
        Ok(w)
    }

    /// An `i`-preimage of an arbitrary element of `Ker p`, assembled from
    /// [`preimage`](Self::preimage) after padding both sides to the same
    /// number of positive and negative unit terms.
    pub fn kernel_preimage(&self, left: &CosetVector, right: &CosetVector) -> Result<CosetVector> {
        let p_value = self.map_p(left, right)?;
        if !p_value.is_zero() {
            return Err(Error::NotInKernel(p_value.to_string()));
        }
        let expand = |v: &CosetVector, positive: bool| -> Vec<Trace> {
            let mut out = Vec::new();
            for (u, n) in &v.terms {
                if n.is_positive() == positive {
                    let count: usize = n.abs().try_into().expect("coefficient fits in memory");
                    out.extend(std::iter::repeat_n(u.clone(), count));
                }
            }
            out
        };
        let (mut plus1, mut minus1) = (expand(left, true), expand(left, false));
        let (mut plus2, mut minus2) = (expand(right, true), expand(right, false));
        // add and subtract copies of 1 ⊗ 1 on the shorter side
        let unit = Trace::unit(&self.pres);
        if plus1.len() > plus2.len() {
            let pad = plus1.len() - plus2.len();
            plus2.extend(std::iter::repeat_n(unit.clone(), pad));
            minus2.extend(std::iter::repeat_n(unit, pad));
        } else {
            let pad = plus2.len() - plus1.len();
            plus1.extend(std::iter::repeat_n(unit.clone(), pad));
            minus1.extend(std::iter::repeat_n(unit, pad));
        }
        debug_assert_eq!(minus1.len(), minus2.len());

        let mut w = CosetVector::zero(Side::M0);
        for (u, v) in plus1.iter().zip(&plus2) {
            w = w.try_add(&self.preimage(u, v)?)?;
        }
        for (u, v) in minus1.iter().zip(&minus2) {
            w = w.try_sub(&self.preimage(u, v)?)?;
        }
        Ok(w)
    }
}
