//! Independent check of local intersection numbers through Gröbner bases.
//!
//! Polynomials here use their own representation and the lex order `y > z`,
//! sharing nothing with the graded arithmetic of [`crate::poly`] beyond the
//! coefficient type.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{IntersectionNumber, LocalPair};
use crate::error::{Error, Result};
use crate::poly::{MPoly, Rational};

/// Exponents `(a, b)` of `y^a z^b`; tuple order is lex with `y > z`.
type Exp = (u32, u32);

#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct LexPoly {
    terms: BTreeMap<Exp, Rational>,
}

impl LexPoly {
    fn from_mpoly(p: &MPoly) -> Self {
        let terms = p.terms().map(|(m, c)| ((m.0[0], m.0[1]), c.clone())).collect();
        Self { terms }
    }

    fn to_mpoly(&self) -> MPoly {
        MPoly::from_terms(2, self.terms.iter().map(|(&(a, b), c)| ([a, b, 0], c.clone())))
    }

    fn monomial(e: Exp) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(e, Rational::one());
        Self { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> Option<(Exp, &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// `self - c * y^a z^b * other`.
    fn sub_scaled_shift(&mut self, c: &Rational, shift: Exp, other: &LexPoly) {
        for (&(a, b), d) in &other.terms {
            let key = (a + shift.0, b + shift.1);
            let entry = self.terms.entry(key).or_insert_with(Rational::zero);
            *entry -= c * d;
            if entry.is_zero() {
                self.terms.remove(&key);
            }
        }
    }

    fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                Self {
                    terms: self.terms.iter().map(|(e, d)| (*e, d * &inv)).collect(),
                }
            }
        }
    }
}

fn divides(a: Exp, b: Exp) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

struct Budget {
    left: usize,
    limit: usize,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::OracleTimeout(self.limit));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Full reduction of `p` by `basis`.
fn reduce(p: &LexPoly, basis: &[LexPoly], budget: &mut Budget) -> Result<LexPoly> {
    let mut p = p.clone();
    let mut rest = LexPoly::default();
    while let Some((e, c)) = p.lead() {
        let c = c.clone();
        match basis
            .iter()
            .find(|g| g.lead().is_some_and(|(l, _)| divides(l, e)))
        {
            Some(g) => {
                budget.tick()?;
                let (l, lc) = g.lead().expect("nonzero");
                let factor = &c / lc;
                p.sub_scaled_shift(&factor, (e.0 - l.0, e.1 - l.1), g);
            }
            None => {
                p.terms.remove(&e);
                rest.terms.insert(e, c);
            }
        }
    }
    Ok(rest)
}

fn s_polynomial(f: &LexPoly, g: &LexPoly) -> LexPoly {
    let (lf, cf) = f.lead().expect("nonzero");
    let (lg, cg) = g.lead().expect("nonzero");
    let l = (lf.0.max(lg.0), lf.1.max(lg.1));
    let mut s = LexPoly::default();
    s.sub_scaled_shift(&-cf.recip(), (l.0 - lf.0, l.1 - lf.1), f);
    s.sub_scaled_shift(&cg.recip(), (l.0 - lg.0, l.1 - lg.1), g);
    s
}

fn buchberger(gens: Vec<LexPoly>, budget: &mut Budget) -> Result<Vec<LexPoly>> {
    let mut basis: Vec<LexPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let lcm = |basis: &[LexPoly], (i, j): (usize, usize)| {
        let (a, _) = basis[i].lead().expect("nonzero");
        let (b, _) = basis[j].lead().expect("nonzero");
        (a.0.max(b.0), a.1.max(b.1))
    };
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
    // Pairs with the smallest lcm (by total degree, then lex) go first.
    while let Some(pos) = (0..pairs.len()).min_by_key(|&k| {
        let l = lcm(&basis, pairs[k]);
        (l.0 + l.1, l)
    }) {
        let (i, j) = pairs.swap_remove(pos);
        done.insert((i, j));
        budget.tick()?;
        let (li, _) = basis[i].lead().expect("nonzero");
        let (lj, _) = basis[j].lead().expect("nonzero");
        // Coprime leading monomials reduce to zero.
        if li.0.min(lj.0) == 0 && li.1.min(lj.1) == 0 {
            continue;
        }
        // Chain criterion: some third leading monomial divides the lcm and
        // both of its pairs with i and j are already treated.
        let l = lcm(&basis, (i, j));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lead().expect("nonzero").0, l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis, budget)?;
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // Minimal basis, then interreduce.
    let mut minimal: Vec<LexPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let (l, _) = g.lead().expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(m, h)| {
            let (lh, _) = h.lead().expect("nonzero");
            m != k && divides(lh, l) && (lh != l || m < k)
        });
        if !redundant {
            minimal.push(g.monic());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<LexPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, g)| g.clone())
            .collect();
        let (l, _) = minimal[k].lead().expect("nonzero");
        let mut tail = minimal[k].clone();
        tail.terms.remove(&l);
        let mut r = reduce(&tail, &others, budget)?;
        r.terms.insert(l, Rational::one());
        reduced.push(r);
    }
    reduced.sort_by_key(|g| g.lead().expect("nonzero").0);
    Ok(reduced)
}

/// Default number of reduction steps granted to one oracle call.
pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Reduced monic Gröbner basis of the ideal generated by `gens` in `Q[y, z]`
/// under lex with `y > z`, sorted by ascending leading monomial.
pub fn lex_groebner_basis(gens: &[MPoly], budget: usize) -> Result<Vec<MPoly>> {
    let mut b = Budget {
        left: budget,
        limit: budget,
    };
    let basis = buchberger(gens.iter().map(LexPoly::from_mpoly).collect(), &mut b)?;
    Ok(basis.iter().map(LexPoly::to_mpoly).collect())
}

/// Number of monomials outside the leading-term ideal; the ideal must contain
/// powers of both variables.
fn standard_monomial_count(basis: &[LexPoly]) -> u64 {
    let leads: Vec<Exp> = basis.iter().map(|g| g.lead().expect("nonzero").0).collect();
    let ymax = leads.iter().filter(|e| e.1 == 0).map(|e| e.0).min();
    let zmax = leads.iter().filter(|e| e.0 == 0).map(|e| e.1).min();
    let (Some(ymax), Some(zmax)) = (ymax, zmax) else {
        panic!("ideal is not zero-dimensional");
    };
    let mut count = 0;
    for a in 0..ymax {
        for b in 0..zmax {
            if !leads.iter().any(|&l| divides(l, (a, b))) {
                count += 1;
            }
        }
    }
    count
}

/// `dim Q[y,z] / (f, g, m^N)` for growing `N`; the first `N` with equal
/// consecutive values gives the local intersection number, since
/// `m^N ⊆ I + m^(N+1)` implies `m^N ⊆ I` locally.
pub fn local_intersection_number(pair: &LocalPair, budget: usize) -> Result<IntersectionNumber> {
    let mut b = Budget {
        left: budget,
        limit: budget,
    };
    let base = [LexPoly::from_mpoly(&pair.f), LexPoly::from_mpoly(&pair.g)];
    let mut previous: Option<u64> = None;
    for n in 1u32.. {
        let mut gens = base.to_vec();
        gens.extend((0..=n).map(|i| LexPoly::monomial((i, n - i))));
        let count = standard_monomial_count(&buchberger(gens, &mut b)?);
        if previous == Some(count) {
            return Ok(IntersectionNumber::Finite(count));
        }
        previous = Some(count);
    }
    unreachable!()
}
