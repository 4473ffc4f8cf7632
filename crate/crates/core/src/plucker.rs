//! Plücker coordinates: the exterior power ∧^m V, its symmetric powers
//! Sym^d(∧^m V) in monomial coordinates, and the derivation action of
//! sl(V) on both. No Plücker relations are imposed; Sym^d is the free
//! symmetric power.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Add;

use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{fmt_rational, rat, ExactMatrix, Rational};

/// `Sym^d(∧^m V)` with `dim V = m + n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Context {
    pub m: usize,
    pub n: usize,
    pub d: usize,
}

impl Context {
    pub fn new(m: usize, n: usize, d: usize) -> Self {
        Self { m, n, d }
    }

    pub fn dim_v(&self) -> usize {
        self.m + self.n
    }

    pub fn with_degree(self, d: usize) -> Self {
        Self { d, ..self }
    }

    /// binom(binom(m+n, m) + d - 1, d)
    pub fn ambient_dim(&self) -> usize {
        let wedge = binomial(self.dim_v(), self.m);
        binomial(wedge + self.d - 1, self.d)
    }
}

/// A basis vector e[I] of ∧^m V, `I` a strictly increasing 1-based subset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PluckerIndex(Vec<u8>);

impl PluckerIndex {
    pub fn new(subset: &[usize], dim_v: usize) -> Result<Self> {
        for &i in subset {
            if i == 0 || i > dim_v {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: dim_v,
                });
            }
        }
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "subset {subset:?} is not strictly increasing"
            )));
        }
        Ok(Self(subset.iter().map(|&i| i as u8).collect()))
    }

    pub fn subset(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    /// e[1..m], the highest-weight line of ∧^m V.
    pub fn top(m: usize) -> Self {
        Self((1..=m as u8).collect())
    }
}

impl fmt::Display for PluckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&i| i > 9) {
            ","
        } else {
            ""
        };
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "e[{}]", parts.join(sep))
    }
}

/// Sorts `indices` with the sign of the sorting permutation; `None` when an
/// index repeats (the wedge vanishes).
pub fn normalize_wedge(indices: &[usize], dim_v: usize) -> Result<Option<(PluckerIndex, i64)>> {
    for &i in indices {
        if i == 0 || i > dim_v {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: dim_v,
            });
        }
    }
    Ok(sort_with_sign(indices.iter().map(|&i| i as u8).collect())
        .map(|(v, s)| (PluckerIndex(v), s)))
}

fn sort_with_sign(mut v: Vec<u8>) -> Option<(Vec<u8>, i64)> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// A monomial of Sym^d(∧^m V): a sorted multiset of Plücker indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymMonomial(Vec<PluckerIndex>);

impl SymMonomial {
    pub fn new(mut factors: Vec<PluckerIndex>) -> Self {
        factors.sort();
        Self(factors)
    }

    pub fn factors(&self) -> &[PluckerIndex] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for SymMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let run = self.0[i..].iter().take_while(|p| **p == self.0[i]).count();
            write!(f, "{}", self.0[i])?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusWeight(pub Vec<i64>);

impl TorusWeight {
    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// Coefficients on the fundamental weights: w_i - w_{i+1}.
    pub fn fundamental_coords(&self) -> Vec<i64> {
        self.0.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.fundamental_coords().iter().all(|&c| c >= 0)
    }

    /// Equality modulo the all-ones vector, i.e. as sl-weights.
    pub fn sl_equivalent(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.fundamental_coords() == other.fundamental_coords()
    }
}

impl Add for &TorusWeight {
    type Output = TorusWeight;
    fn add(self, rhs: &TorusWeight) -> TorusWeight {
        TorusWeight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

pub fn torus_weight(mono: &SymMonomial, dim_v: usize) -> TorusWeight {
    let mut w = vec![0; dim_v];
    for f in &mono.0 {
        for i in f.subset() {
            w[i - 1] += 1;
        }
    }
    TorusWeight(w)
}

/// An element of Sym^d(∧^m V).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector {
    ctx: Context,
    coords: BTreeMap<SymMonomial, Rational>,
}

impl ModuleVector {
    pub fn zero(ctx: Context) -> Self {
        Self {
            ctx,
            coords: BTreeMap::new(),
        }
    }

    pub fn monomial(ctx: Context, mono: SymMonomial, c: Rational) -> Self {
        assert_eq!(mono.degree(), ctx.d, "monomial degree");
        let mut v = Self::zero(ctx);
        v.add_term(mono, c);
        v
    }

    /// Parses factor lists such as `[[1,2],[1,3]]` into a monomial vector.
    pub fn from_subsets(ctx: Context, factors: &[&[usize]], c: Rational) -> Result<Self> {
        if factors.len() != ctx.d {
            return Err(Error::DimensionMismatch {
                expected: ctx.d,
                found: factors.len(),
            });
        }
        let f = factors
            .iter()
            .map(|s| {
                if s.len() != ctx.m {
                    return Err(Error::DimensionMismatch {
                        expected: ctx.m,
                        found: s.len(),
                    });
                }
                PluckerIndex::new(s, ctx.dim_v())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::monomial(ctx, SymMonomial::new(f), c))
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn coords(&self) -> &BTreeMap<SymMonomial, Rational> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, mono: &SymMonomial) -> Rational {
        self.coords
            .get(mono)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, mono: SymMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coords.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.ctx);
        for (k, v) in &self.coords {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::InvalidParameter(format!(
                "context mismatch: {:?} vs {:?}",
                self.ctx, other.ctx
            )));
        }
        let mut out = self.clone();
        for (k, v) in &other.coords {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&rat(-1)))
    }

    /// If `self = c * other` for a nonzero scalar, returns `c`.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        if self.ctx != other.ctx || self.coords.len() != other.coords.len() || self.is_zero() {
            return None;
        }
        let (k, v) = self.coords.iter().next()?;
        let c = v / other.coords.get(k)?;
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn weights(&self) -> impl Iterator<Item = TorusWeight> + '_ {
        self.coords
            .keys()
            .map(|k| torus_weight(k, self.ctx.dim_v()))
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.coords.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{} {mono}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl Serialize for ModuleVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A traceless matrix acting on V by `e_i -> sum_j M[j][i] e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement {
    matrix: ExactMatrix,
    entries: Vec<(usize, usize, Rational)>,
}

impl LieElement {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if matrix.rows() != matrix.cols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        if !matrix.trace().is_zero() {
            return Err(Error::InvalidParameter(
                "Lie element must be traceless".into(),
            ));
        }
        let entries = (0..matrix.rows())
            .flat_map(|i| (0..matrix.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| !matrix[(i, j)].is_zero())
            .map(|(i, j)| (i, j, matrix[(i, j)].clone()))
            .collect();
        Ok(Self { matrix, entries })
    }

    /// Elementary matrix E_{ij} (1-based, i != j).
    pub fn elementary(dim: usize, i: usize, j: usize) -> Self {
        assert!(i != j && i >= 1 && j >= 1 && i <= dim && j <= dim);
        let mut m = ExactMatrix::zeros(dim, dim);
        m[(i - 1, j - 1)] = Rational::one();
        Self::new(m).unwrap()
    }

    /// H_i = E_{ii} - E_{i+1,i+1} (1-based).
    pub fn cartan(dim: usize, i: usize) -> Self {
        assert!(i >= 1 && i < dim);
        let mut m = ExactMatrix::zeros(dim, dim);
        m[(i - 1, i - 1)] = Rational::one();
        m[(i, i)] = -Rational::one();
        Self::new(m).unwrap()
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let xy = self.matrix.mul(&other.matrix)?;
        let yx = other.matrix.mul(&self.matrix)?;
        let mut m = xy;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                m[(i, j)] -= &yx[(i, j)];
            }
        }
        Self::new(m)
    }

    /// Image of a single wedge basis vector.
    pub fn act_on_wedge(&self, idx: &PluckerIndex) -> Vec<(PluckerIndex, Rational)> {
        let mut out: BTreeMap<PluckerIndex, Rational> = BTreeMap::new();
        for pos in 0..idx.0.len() {
            let src = idx.0[pos] as usize - 1;
            for (row, col, c) in &self.entries {
                if *col != src {
                    continue;
                }
                let mut v = idx.0.clone();
                v[pos] = (*row + 1) as u8;
                if let Some((sorted, sign)) = sort_with_sign(v) {
                    let e = out
                        .entry(PluckerIndex(sorted))
                        .or_insert_with(Rational::zero);
                    *e += c * rat(sign);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out.into_iter().collect()
    }
}

/// Basis E_{ij} (i != j, row-major) followed by H_1..H_{dim-1}.
pub fn sl_basis(dim: usize) -> Vec<LieElement> {
    let mut out = Vec::with_capacity(dim * dim - 1);
    for i in 1..=dim {
        for j in 1..=dim {
            if i != j {
                out.push(LieElement::elementary(dim, i, j));
            }
        }
    }
    for i in 1..dim {
        out.push(LieElement::cartan(dim, i));
    }
    out
}

/// Derivation action of `x` on a monomial, by the Leibniz rule over factors.
pub fn act_on_monomial(x: &LieElement, mono: &SymMonomial) -> Vec<(SymMonomial, Rational)> {
    let mut out = Vec::new();
    let f = &mono.0;
    let mut i = 0;
    while i < f.len() {
        let run = f[i..].iter().take_while(|p| **p == f[i]).count();
        for (img, c) in x.act_on_wedge(&f[i]) {
            let mut factors = f.clone();
            factors[i] = img;
            out.push((SymMonomial::new(factors), c * rat(run as i64)));
        }
        i += run;
    }
    out
}

pub fn lie_act(x: &LieElement, v: &ModuleVector) -> Result<ModuleVector> {
    if x.dim() != v.ctx.dim_v() {
        return Err(Error::DimensionMismatch {
            expected: v.ctx.dim_v(),
            found: x.dim(),
        });
    }
    let mut out = ModuleVector::zero(v.ctx);
    for (mono, c) in &v.coords {
        for (img, k) in act_on_monomial(x, mono) {
            out.add_term(img, k * c);
        }
    }
    Ok(out)
}

pub fn sym_mul(u: &ModuleVector, v: &ModuleVector) -> Result<ModuleVector> {
    if (u.ctx.m, u.ctx.n) != (v.ctx.m, v.ctx.n) {
        return Err(Error::InvalidParameter(
            "context mismatch in symmetric product".into(),
        ));
    }
    let mut out = ModuleVector::zero(u.ctx.with_degree(u.ctx.d + v.ctx.d));
    for (a, x) in &u.coords {
        for (b, y) in &v.coords {
            let mut f = a.0.clone();
            f.extend(b.0.iter().cloned());
            out.add_term(SymMonomial::new(f), x * y);
        }
    }
    Ok(out)
}

/// `v^k` in Sym^{k d}.
pub fn sym_pow(v: &ModuleVector, k: usize) -> Result<ModuleVector> {
    let mut acc = ModuleVector::monomial(
        v.ctx.with_degree(0),
        SymMonomial::new(vec![]),
        Rational::one(),
    );
    for _ in 0..k {
        acc = sym_mul(&acc, v)?;
    }
    Ok(acc)
}

/// Enumerated monomial basis of Sym^d(∧^m V), giving coordinates for the
/// linear algebra.
#[derive(Clone, Debug)]
pub struct SymPowerBasis {
    ctx: Context,
    monomials: Vec<SymMonomial>,
    index: HashMap<SymMonomial, usize>,
}

impl SymPowerBasis {
    pub fn new(ctx: Context) -> Self {
        let wedges = wedge_basis(ctx.m, ctx.dim_v());
        let mut monomials = Vec::new();
        let mut cur = Vec::with_capacity(ctx.d);
        multisets(&wedges, 0, ctx.d, &mut cur, &mut monomials);
        monomials.sort();
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self {
            ctx,
            monomials,
            index,
        }
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[SymMonomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &SymMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn coordinates(&self, v: &ModuleVector) -> Result<Vec<Rational>> {
        if v.ctx != self.ctx {
            return Err(Error::InvalidParameter(
                "vector context differs from basis context".into(),
            ));
        }
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, c) in &v.coords {
            out[self.index[k]] = c.clone();
        }
        Ok(out)
    }

    pub fn vector(&self, coords: &[Rational]) -> ModuleVector {
        let mut v = ModuleVector::zero(self.ctx);
        for (i, c) in coords.iter().enumerate() {
            v.add_term(self.monomials[i].clone(), c.clone());
        }
        v
    }
}

/// Plücker indices of ∧^m K^dim in lexicographic order.
pub fn wedge_basis(m: usize, dim: usize) -> Vec<PluckerIndex> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, m: usize, dim: usize, cur: &mut Vec<u8>, out: &mut Vec<PluckerIndex>) {
        if cur.len() == m {
            out.push(PluckerIndex(cur.clone()));
            return;
        }
        for i in start..=dim {
            cur.push(i as u8);
            rec(i + 1, m, dim, cur, out);
            cur.pop();
        }
    }
    rec(1, m, dim, &mut cur, &mut out);
    out
}

fn multisets(
    items: &[PluckerIndex],
    start: usize,
    left: usize,
    cur: &mut Vec<PluckerIndex>,
    out: &mut Vec<SymMonomial>,
) {
    if left == 0 {
        out.push(SymMonomial(cur.clone()));
        return;
    }
    for i in start..items.len() {
        cur.push(items[i].clone());
        multisets(items, i, left - 1, cur, out);
        cur.pop();
    }
}
