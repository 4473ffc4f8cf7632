//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a map from exponent vectors to nonzero coefficients.
//! A ring may carry positive integer weights, one per variable, which define
//! a grading used by the degreewise Koszul computations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, Rational};

pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PolyRing {
    variable_names: Vec<String>,
    weights: Option<Vec<u32>>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let variable_names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        for (i, a) in variable_names.iter().enumerate() {
            if variable_names[..i].contains(a) {
                return Err(Error::InvalidParameter(format!("duplicate variable `{a}`")));
            }
        }
        Ok(Arc::new(Self {
            variable_names,
            weights: None,
        }))
    }

    pub fn weighted<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<Arc<Self>> {
        if names.len() != weights.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(Error::InvalidParameter(
                "grading weights must be positive".into(),
            ));
        }
        let mut ring = Arc::try_unwrap(Self::new(names)?).expect("fresh ring");
        ring.weights = Some(weights.to_vec());
        Ok(Arc::new(ring))
    }

    pub fn nvars(&self) -> usize {
        self.variable_names.len()
    }

    pub fn variable_names(&self) -> &[String] {
        &self.variable_names
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.variable_names
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_owned()))
    }

    pub fn weighted_degree(&self, exps: &[u32]) -> Result<u32> {
        let w = self.weights.as_ref().ok_or(Error::NoWeights)?;
        Ok(exps.iter().zip(w).map(|(e, w)| e * w).sum())
    }
}

/// All monomials of weighted degree `degree`, in descending lexicographic
/// order of exponent vectors.
pub fn graded_basis(ring: &PolyRing, degree: u32) -> Result<Vec<Exponents>> {
    let weights = ring.weights().ok_or(Error::NoWeights)?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; weights.len()];
    fill_graded(weights, 0, degree, &mut cur, &mut out);
    Ok(out)
}

fn fill_graded(
    weights: &[u32],
    pos: usize,
    rest: u32,
    cur: &mut Exponents,
    out: &mut Vec<Exponents>,
) {
    if pos == weights.len() {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let w = weights[pos];
    for e in (0..=rest / w).rev() {
        cur[pos] = e;
        fill_graded(weights, pos + 1, rest - e * w, cur, out);
    }
    cur[pos] = 0;
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Exponents, Rational>,
}

#[derive(Clone, Debug)]
pub enum PolyOp<'a> {
    Add(&'a MultiPoly),
    Mul(&'a MultiPoly),
    Scale(&'a Rational),
}

pub fn poly_arith(p: &MultiPoly, op: PolyOp<'_>) -> Result<MultiPoly> {
    match op {
        PolyOp::Add(q) => p.checked_add(q),
        PolyOp::Mul(q) => p.checked_mul(q),
        PolyOp::Scale(c) => Ok(p.scale(c)),
    }
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Rational) -> Self {
        Self::monomial(ring, vec![0; ring.nvars()], c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring.index_of(name)?;
        let mut exps = vec![0; ring.nvars()];
        exps[i] = 1;
        Ok(Self::monomial(ring, exps, Rational::one()))
    }

    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Whether variable `i` occurs in any term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, var: &str) -> Result<Self> {
        let i = self.ring.index_of(var)?;
        Ok(self.derivative_at(i))
    }

    pub(crate) fn derivative_at(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Substitutes polynomials for variables. All images must live in one
    /// target ring, which must also contain every unbound variable of `self`
    /// (matched by name). With no bindings the polynomial is returned as is.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Result<Self> {
        let Some(first) = bindings.values().next() else {
            return Ok(self.clone());
        };
        let target = first.ring.clone();
        for (name, img) in bindings {
            self.ring.index_of(name)?;
            if *img.ring != *target {
                return Err(Error::RingMismatch);
            }
        }
        let images: Vec<MultiPoly> = self
            .ring
            .variable_names
            .iter()
            .enumerate()
            .map(|(i, name)| match bindings.get(name) {
                Some(img) => Ok(img.clone()),
                None if self.involves(i) => MultiPoly::var(&target, name),
                None => Ok(MultiPoly::zero(&target)),
            })
            .collect::<Result<_>>()?;
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![MultiPoly::one(&target), img.clone()])
            .collect();
        let mut out = MultiPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Weighted degrees occurring in `self`.
    pub fn weighted_degrees(&self) -> Result<Vec<u32>> {
        let mut degs: Vec<u32> = self
            .terms
            .keys()
            .map(|e| self.ring.weighted_degree(e))
            .collect::<Result<_>>()?;
        degs.sort_unstable();
        degs.dedup();
        Ok(degs)
    }

    pub fn is_homogeneous(&self) -> Result<Option<u32>> {
        let degs = self.weighted_degrees()?;
        Ok(if degs.len() == 1 { Some(degs[0]) } else { None })
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(&-rhs).expect("ring mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => factors.push(self.ring.variable_names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.variable_names[i], p)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join(" "))?;
            } else {
                write!(f, "{} {}", fmt_rational(&abs), factors.join(" "))?;
            }
        }
        Ok(())
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::weighted(&["x", "y", "t"], &[2, 1, 1]).unwrap()
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|terms| {
            let r = ring();
            MultiPoly::from_terms(
                &r,
                terms
                    .into_iter()
                    .map(|((a, b, c), k)| (vec![a, b, c], Rational::from_integer(k.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn leibniz(p in arb_poly(), q in arb_poly()) {
            let lhs = (&p * &q).derivative("t").unwrap();
            let rhs = &(&p.derivative("t").unwrap() * &q) + &(&p * &q.derivative("t").unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn substitution_is_a_ring_map(p in arb_poly(), q in arb_poly(), img in arb_poly()) {
            let mut b = BTreeMap::new();
            b.insert("x".to_string(), img);
            let s = |f: &MultiPoly| f.substitute(&b).unwrap();
            prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
            prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        }

        #[test]
        fn graded_counts(w in prop::collection::vec(1u32..4, 1..4), n in 0u32..9) {
            let names: Vec<String> = (0..w.len()).map(|i| format!("x{i}")).collect();
            let r = PolyRing::weighted(&names, &w).unwrap();
            let basis = graded_basis(&r, n).unwrap();
            let mut series = vec![0usize; n as usize + 1];
            series[0] = 1;
            for &wi in &w {
                for k in wi as usize..=n as usize {
                    series[k] += series[k - wi as usize];
                }
            }
            prop_assert_eq!(basis.len(), series[n as usize]);
            for e in &basis {
                prop_assert_eq!(r.weighted_degree(e).unwrap(), n);
            }
        }
    }
}
