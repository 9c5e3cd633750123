//! Exact arithmetic in the monoid ring `ℤM` and in the free right
//! `ℤM`-modules `F_k` whose bases are indexed by cliques.
//!
//! Coefficients are arbitrary-precision integers and zero coefficients are
//! never stored.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Clique;
use crate::trace::{Presentation, Trace};

fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, coeff: BigInt) {
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

/// Element of `ℤM`: a finite integer combination of traces.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    pres: Presentation,
    terms: BTreeMap<Trace, BigInt>,
}

impl RingElement {
    pub fn zero(p: &Presentation) -> Self {
        RingElement { pres: p.clone(), terms: BTreeMap::new() }
    }

    pub fn one(p: &Presentation) -> Self {
        Self::from_trace(Trace::unit(p))
    }

    pub fn from_trace(t: Trace) -> Self {
        Self::monomial(t, BigInt::one())
    }

    pub fn monomial(t: Trace, coeff: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(t.presentation());
        accumulate(&mut x.terms, t, coeff.into());
        x
    }

    /// Sums the given terms, which must all live in `p`.
    pub fn from_terms<C: Into<BigInt>>(p: &Presentation, terms: impl IntoIterator<Item = (Trace, C)>) -> Result<Self> {
        let mut x = Self::zero(p);
        for (t, c) in terms {
            p.ensure_same(t.presentation())?;
            accumulate(&mut x.terms, t, c.into());
        }
        Ok(x)
    }

    /// `t - 1` for a trace `t`.
    pub fn minus_one(t: Trace) -> Self {
        let one = Trace::unit(t.presentation());
        let mut x = Self::from_trace(t);
        accumulate(&mut x.terms, one, -BigInt::one());
        x
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Trace, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Trace) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.pres.ensure_same(&other.pres)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            accumulate(&mut out.terms, t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Convolution product induced by trace multiplication.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.pres.ensure_same(&other.pres)?;
        let mut out = Self::zero(&self.pres);
        for (t, m) in &self.terms {
            for (u, n) in &other.terms {
                accumulate(&mut out.terms, t.concat(u), m * n);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.pres);
        for (t, c) in &self.terms {
            accumulate(&mut out.terms, t.clone(), c * k);
        }
        out
    }

    /// The augmentation `ε`, sending every trace to 1.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Neg for &RingElement {
    type Output = RingElement;

    fn neg(self) -> RingElement {
        RingElement { pres: self.pres.clone(), terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect() }
    }
}

/// Panics when the operands belong to different presentations; use
/// [`RingElement::try_add`] for a fallible version.
impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        self.try_add(rhs).expect("ring elements from different presentations")
    }
}

impl Sub for &RingElement {
    type Output = RingElement;

    fn sub(self, rhs: &RingElement) -> RingElement {
        self.try_sub(rhs).expect("ring elements from different presentations")
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        self.try_mul(rhs).expect("ring elements from different presentations")
    }
}

// Display order: longer traces first, then normal form.
fn display_order<'a, V>(terms: impl Iterator<Item = (&'a Trace, V)>) -> Vec<(&'a Trace, V)> {
    let mut v: Vec<_> = terms.collect();
    v.sort_by(|(s, _), (t, _)| t.len().cmp(&s.len()).then_with(|| s.cmp(t)));
    v
}

fn write_signed(out: &mut String, negative: bool, body: &str) {
    match (out.is_empty(), negative) {
        (true, false) => out.push_str(body),
        (true, true) => {
            out.push('-');
            out.push_str(body);
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(body);
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(body);
        }
    }
}

fn monomial_body(coeff: &BigInt, t: &Trace, prefix: &str) -> String {
    let abs = coeff.abs();
    let mut s = String::new();
    if !abs.is_one() {
        write!(s, "{abs}").unwrap();
    }
    s.push_str(prefix);
    if !t.is_unit() {
        write!(s, "{t}").unwrap();
    } else if s.is_empty() {
        s.push('1');
    }
    s
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (t, c) in display_order(self.terms.iter()) {
            write_signed(&mut out, c.is_negative(), &monomial_body(c, t, ""));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of the free module `F_k`: an integer combination of pairs
/// `[c]·t` with `c` a `k`-clique and `t` a trace. Degree 0 uses the empty
/// clique, so `F_0 = ℤM`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    pres: Presentation,
    degree: usize,
    terms: BTreeMap<(Clique, Trace), BigInt>,
}

impl ModuleElement {
    pub fn zero(p: &Presentation, degree: usize) -> Self {
        ModuleElement { pres: p.clone(), degree, terms: BTreeMap::new() }
    }

    /// The basis element `[c]·1`.
    pub fn generator(p: &Presentation, c: Clique) -> Self {
        Self::term(c, Trace::unit(p), 1)
    }

    /// `coeff · [c]·t`.
    pub fn term(c: Clique, t: Trace, coeff: impl Into<BigInt>) -> Self {
        let mut m = Self::zero(t.presentation(), c.size());
        accumulate(&mut m.terms, (c, t), coeff.into());
        m
    }

    /// `[c]·x` for a ring element `x`.
    pub fn from_ring(c: Clique, x: &RingElement) -> Self {
        let mut m = Self::zero(&x.pres, c.size());
        for (t, n) in &x.terms {
            accumulate(&mut m.terms, (c, t.clone()), n.clone());
        }
        m
    }

    pub fn from_terms<C: Into<BigInt>>(
        p: &Presentation,
        degree: usize,
        terms: impl IntoIterator<Item = (Clique, Trace, C)>,
    ) -> Result<Self> {
        let mut m = Self::zero(p, degree);
        for (c, t, n) in terms {
            p.ensure_same(t.presentation())?;
            if c.size() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: c.size() });
            }
            accumulate(&mut m.terms, (c, t), n.into());
        }
        Ok(m)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Clique, &Trace, &BigInt)> {
        self.terms.iter().map(|((c, t), n)| (*c, t, n))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, c: Clique, t: &Trace) -> BigInt {
        self.terms.get(&(c, t.clone())).cloned().unwrap_or_default()
    }

    /// Coefficient of the generator `[c]` as an element of `ℤM`.
    pub fn component(&self, c: Clique) -> RingElement {
        let mut x = RingElement::zero(&self.pres);
        for ((d, t), n) in &self.terms {
            if *d == c {
                accumulate(&mut x.terms, t.clone(), n.clone());
            }
        }
        x
    }

    /// Generators with a non-zero component, ascending.
    pub fn support(&self) -> Vec<Clique> {
        let mut cs: Vec<Clique> = self.terms.keys().map(|(c, _)| *c).collect();
        cs.dedup();
        cs
    }

    pub(crate) fn add_term(&mut self, c: Clique, t: Trace, coeff: BigInt) {
        debug_assert_eq!(c.size(), self.degree);
        accumulate(&mut self.terms, (c, t), coeff);
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.pres.ensure_same(&other.pres)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, n) in &other.terms {
            accumulate(&mut out.terms, k.clone(), n.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.pres, self.degree);
        for (key, n) in &self.terms {
            accumulate(&mut out.terms, key.clone(), n * k);
        }
        out
    }

    /// Right action: `([c]·t)·u = [c]·(tu)`, extended bilinearly.
    pub fn act(&self, x: &RingElement) -> Result<Self> {
        self.pres.ensure_same(&x.pres)?;
        let mut out = Self::zero(&self.pres, self.degree);
        for ((c, t), m) in &self.terms {
            for (u, n) in &x.terms {
                accumulate(&mut out.terms, (*c, t.concat(u)), m * n);
            }
        }
        Ok(out)
    }

    /// Sum of coefficients of each generator, i.e. the image in
    /// `F_k ⊗_M ℤ` with the trivial action.
    pub fn trivialize(&self) -> BTreeMap<Clique, BigInt> {
        let mut out = BTreeMap::new();
        for ((c, _), n) in &self.terms {
            accumulate(&mut out, *c, n.clone());
        }
        out
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.degree == 0 {
            return fmt::Display::fmt(&self.component(Clique::EMPTY), f);
        }
        let mut out = String::new();
        for c in self.support() {
            let x = self.component(c);
            let label = c.render(&self.pres);
            if x.term_count() == 1 {
                let (t, n) = x.terms().next().unwrap();
                write_signed(&mut out, n.is_negative(), &monomial_body(n, t, &label));
            } else {
                let (_, lead) = display_order(x.terms()).into_iter().next().unwrap();
                let negative = lead.is_negative();
                let shown = if negative { -&x } else { x };
                write_signed(&mut out, negative, &format!("{label}({shown})"));
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}: {}", self.degree, self)
    }
}
