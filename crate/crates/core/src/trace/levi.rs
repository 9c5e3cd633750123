use super::Trace;
use crate::error::Result;

/// Factors `p, q, r, s` refining an equation `tu = vw`:
/// `t = pr`, `u = sq`, `v = ps`, `w = rq`, where `r` and `s` commute and
/// share no letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviWitness {
    pub p: Trace,
    pub q: Trace,
    pub r: Trace,
    pub s: Trace,
}

impl LeviWitness {
    /// Checks all five clauses against the original equation.
    pub fn certifies(&self, t: &Trace, u: &Trace, v: &Trace, w: &Trace) -> bool {
        let LeviWitness { p, q, r, s } = self;
        p.concat(r) == *t
            && s.concat(q) == *u
            && p.concat(s) == *v
            && r.concat(q) == *w
            && r.concat(s) == s.concat(r)
            && r.alph().is_disjoint(s.alph())
    }
}

/// Finds a Levi factorization of `tu = vw`, or `None` when `tu != vw`.
///
/// Searches the left divisors `p` of `v` from longest to shortest; for each
/// one that also divides `t`, the remaining factors are forced.
pub fn levi_decompose(t: &Trace, u: &Trace, v: &Trace, w: &Trace) -> Result<Option<LeviWitness>> {
    let pres = t.presentation();
    for x in [u, v, w] {
        pres.ensure_same(x.presentation())?;
    }
    if t.concat(u) != v.concat(w) {
        return Ok(None);
    }
    let mut candidates = v.prefixes();
    candidates.reverse();
    for p in candidates {
        let Some(r) = t.left_quotient(&p) else { continue };
        let s = v.left_quotient(&p).expect("p is a prefix of v");
        if !r.alph().is_disjoint(s.alph()) || r.concat(&s) != s.concat(&r) {
            continue;
        }
        let Some(q) = u.left_quotient(&s) else { continue };
        if r.concat(&q) == *w {
            return Ok(Some(LeviWitness { p, q, r, s }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::trace::Presentation;

    #[test]
    fn commuting_swap() {
        let p = Presentation::from_edges(2, &[(0, 1)]);
        let (a, b) = (Trace::parse(&p, "a").unwrap(), Trace::parse(&p, "b").unwrap());
        let wit = levi_decompose(&a, &b, &b, &a).unwrap().unwrap();
        assert!(wit.p.is_unit() && wit.q.is_unit());
        assert_eq!((wit.r.clone(), wit.s.clone()), (a.clone(), b.clone()));
        assert!(wit.certifies(&a, &b, &b, &a));
    }

    #[test]
    fn degenerate_equality() {
        let p = Presentation::from_edges(3, &[(0, 1)]);
        let x = Trace::parse(&p, "cab").unwrap();
        let one = Trace::unit(&p);
        let wit = levi_decompose(&x, &one, &x, &one).unwrap().unwrap();
        assert_eq!(wit, LeviWitness { p: x.clone(), q: one.clone(), r: one.clone(), s: one });
    }

    #[test]
    fn unequal_products_have_no_witness() {
        let p = Presentation::from_edges(2, &[]);
        let (a, b) = (Trace::parse(&p, "a").unwrap(), Trace::parse(&p, "b").unwrap());
        assert_eq!(levi_decompose(&a, &b, &b, &a).unwrap(), None);
    }

    #[test]
    fn mismatched_presentations() {
        let p = Presentation::from_edges(2, &[]);
        let q = Presentation::from_edges(2, &[(0, 1)]);
        let a = Trace::parse(&p, "a").unwrap();
        let b = Trace::parse(&q, "b").unwrap();
        assert_eq!(levi_decompose(&a, &a, &a, &b).unwrap_err(), Error::PresentationMismatch);
    }

    #[test]
    fn overlapping_factorization() {
        // t = ab, u = c, v = a, w = bc with b, c commuting
        let p = Presentation::from_edges(3, &[(1, 2)]);
        let tr = |w: &str| Trace::parse(&p, w).unwrap();
        let (t, u, v, w) = (tr("ab"), tr("c"), tr("a"), tr("cb"));
        let wit = levi_decompose(&t, &u, &v, &w).unwrap().unwrap();
        assert!(wit.certifies(&t, &u, &v, &w));
        assert_eq!(wit.p, tr("a"));
        assert_eq!(wit.r, tr("b"));
        assert_eq!(wit.s, tr(""));
    }
}
