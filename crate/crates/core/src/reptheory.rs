//! Highest-weight decompositions.
//!
//! Two concrete modules are supported:
//!
//! * `Sym^d(∧^m V)` under sl(V), `dim V = m + n`;
//! * `Sym^k(W* ⊗ V/W)` under sl(W) × sl(V/W), `dim W = m`, `dim V/W = n`,
//!   realized on polynomials in variables `y_{ab}` (a row of V/W, b a column
//!   of W). A pair `(X_W, X_Q)` acts on the map `y` by `X_Q y - y X_W`, so
//!   the W-side acts on W* by negative transpose.
//!
//! Highest-weight vectors are the joint kernel of the simple raising
//! operators, computed one dominant weight space at a time. In
//! characteristic zero the multiplicity of an irreducible is the dimension
//! of its highest-weight space.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{kernel, rat, ExactMatrix, Rational, Subspace};
use crate::multipoly::{graded_basis, MultiPoly, PolyRing};
use crate::plucker::{act_on_monomial, Context, LieElement, SymPowerBasis, TorusWeight};

pub const DEFAULT_DIMENSION_CAP: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TargetModule {
    /// Sym^d(∧^m K^{m+n}) under sl(m+n).
    SymWedge { m: usize, n: usize, d: usize },
    /// Sym^k(W* ⊗ V/W) under sl(m) × sl(n).
    SymHom { m: usize, n: usize, k: usize },
}

impl TargetModule {
    pub fn ambient_dim(&self) -> usize {
        match *self {
            TargetModule::SymWedge { m, n, d } => Context::new(m, n, d).ambient_dim(),
            TargetModule::SymHom { m, n, k } => binomial(m * n + k - 1, k).max(usize::from(k == 0)),
        }
    }

    pub fn natural_algebra(&self) -> Algebra {
        match *self {
            TargetModule::SymWedge { m, n, .. } => Algebra::Sl(m + n),
            TargetModule::SymHom { m, n, .. } => Algebra::SlPair(m, n),
        }
    }

    fn validate(&self) -> Result<()> {
        let (m, n) = match *self {
            TargetModule::SymWedge { m, n, .. } | TargetModule::SymHom { m, n, .. } => (m, n),
        };
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter("need m, n >= 1".into()));
        }
        Ok(())
    }
}

impl fmt::Display for TargetModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TargetModule::SymWedge { m, n, d } => write!(f, "Sym^{d}(∧^{m} K^{})", m + n),
            TargetModule::SymHom { m, n, k } => {
                write!(f, "Sym^{k}(W* ⊗ V/W), dim W = {m}, dim V/W = {n}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Algebra {
    Sl(usize),
    SlPair(usize, usize),
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebra::Sl(n) => write!(f, "sl({n})"),
            Algebra::SlPair(m, n) => write!(f, "sl({m})xsl({n})"),
        }
    }
}

/// Highest weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "algebra", rename_all = "snake_case")]
pub enum IrrepLabel {
    Sl {
        rank: usize,
        highest_weight: Vec<u32>,
    },
    SlPair {
        w_side: Vec<u32>,
        q_side: Vec<u32>,
    },
}

impl IrrepLabel {
    pub fn sl(n: usize, coords: Vec<u32>) -> Self {
        assert_eq!(coords.len() + 1, n);
        IrrepLabel::Sl {
            rank: n,
            highest_weight: coords,
        }
    }

    /// Sym^a(K^m)* ⊗ Sym^b(K^n) style labels for sl(m) × sl(n).
    pub fn pair(w_side: Vec<u32>, q_side: Vec<u32>) -> Self {
        IrrepLabel::SlPair { w_side, q_side }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Sl {
                rank,
                highest_weight,
            } => write!(f, "sl({rank}){highest_weight:?}"),
            IrrepLabel::SlPair { w_side, q_side } => write!(f, "{w_side:?}x{q_side:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All partitions of `k`, largest first.
    pub fn all(k: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// Fundamental-weight coordinates for sl(n); `None` with more than n parts.
    pub fn to_weight(&self, n: usize) -> Option<Vec<u32>> {
        if self.0.len() > n {
            return None;
        }
        let mut p = self.0.clone();
        p.resize(n, 0);
        Some(p.windows(2).map(|w| w[0] - w[1]).collect())
    }
}

/// Weyl dimension formula: prod over i < j of <λ+ρ, e_i - e_j> / (j - i).
pub fn irrep_dim(label: &IrrepLabel) -> usize {
    match label {
        IrrepLabel::Sl {
            rank,
            highest_weight,
        } => weyl_sl(*rank, highest_weight),
        IrrepLabel::SlPair { w_side, q_side } => {
            weyl_sl(w_side.len() + 1, w_side) * weyl_sl(q_side.len() + 1, q_side)
        }
    }
}

fn weyl_sl(n: usize, coords: &[u32]) -> usize {
    assert_eq!(coords.len() + 1, n, "weight length");
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            let s: u64 = coords[i..j].iter().map(|&a| a as u64 + 1).sum();
            num *= s;
            den *= (j - i) as u64;
        }
    }
    let q = num / den;
    q.try_into().expect("dimension overflows usize")
}

/// Hook-content formula for dim S_λ(K^n).
pub fn schur_dim(lambda: &Partition, n: usize) -> usize {
    if lambda.0.len() > n {
        return 0;
    }
    let conj: Vec<u32> = (0..lambda.0.first().copied().unwrap_or(0))
        .map(|j| lambda.0.iter().filter(|&&p| p > j).count() as u32)
        .collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &row) in lambda.0.iter().enumerate() {
        for j in 0..row {
            let content = j as i64 - i as i64;
            let hook = (row - j - 1) + (conj[j as usize] - i as u32 - 1) + 1;
            num *= n as i64 + content;
            den *= hook;
        }
    }
    (num / den).try_into().expect("dimension overflows usize")
}

/// A module realized on an explicit weight basis, with the simple raising
/// operators tabulated as sparse images of basis vectors.
type Renderer = Box<dyn Fn(&[Rational]) -> String + Send + Sync>;

struct Realized {
    module: TargetModule,
    weights: Vec<TorusWeight>,
    raising: Vec<Vec<Vec<(usize, Rational)>>>,
    texts: Renderer,
}

impl Realized {
    fn build(module: TargetModule, cap: usize) -> Result<Self> {
        module.validate()?;
        let dim = module.ambient_dim();
        if dim > cap {
            return Err(Error::CapExceeded { dim, cap });
        }
        match module {
            TargetModule::SymWedge { m, n, d } => {
                Ok(Self::sym_wedge(module, Context::new(m, n, d)))
            }
            TargetModule::SymHom { m, n, k } => Self::sym_hom(module, m, n, k),
        }
    }

    fn sym_wedge(module: TargetModule, ctx: Context) -> Self {
        let basis = SymPowerBasis::new(ctx);
        let n = ctx.dim_v();
        let weights = basis
            .monomials()
            .iter()
            .map(|mono| crate::plucker::torus_weight(mono, n))
            .collect();
        let raising = (1..n)
            .map(|i| {
                let e = LieElement::elementary(n, i, i + 1);
                basis
                    .monomials()
                    .iter()
                    .map(|mono| {
                        act_on_monomial(&e, mono)
                            .into_iter()
                            .map(|(img, c)| (basis.index_of(&img).expect("image in basis"), c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self {
            module,
            weights,
            raising,
            texts: Box::new(move |v| basis.vector(v).to_string()),
        }
    }

    fn sym_hom(module: TargetModule, m: usize, n: usize, k: usize) -> Result<Self> {
        let ring = hom_ring(m, n)?;
        let monos = graded_basis(&ring, k as u32)?;
        let index: HashMap<Vec<u32>, usize> = monos
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let weights = monos.iter().map(|e| hom_weight(m, n, e)).collect();
        let mut raising = Vec::new();
        for map in hom_raising_maps(m, n, true) {
            raising.push(
                monos
                    .iter()
                    .map(|e| {
                        apply_linear_derivation(&map, e)
                            .into_iter()
                            .map(|(img, c)| (index[&img], c))
                            .collect()
                    })
                    .collect(),
            );
        }
        let texts_ring = ring.clone();
        let texts_monos = monos.clone();
        Ok(Self {
            module,
            weights,
            raising,
            texts: Box::new(move |v| {
                MultiPoly::from_terms(
                    &texts_ring,
                    texts_monos.iter().cloned().zip(v.iter().cloned()),
                )
                .to_string()
            }),
        })
    }

    fn label(&self, w: &TorusWeight) -> IrrepLabel {
        let coords = |x: &[i64]| {
            x.windows(2)
                .map(|p| (p[0] - p[1]) as u32)
                .collect::<Vec<_>>()
        };
        match self.module {
            TargetModule::SymWedge { m, n, .. } => IrrepLabel::sl(m + n, coords(&w.0)),
            TargetModule::SymHom { m, .. } => {
                IrrepLabel::pair(coords(&w.0[..m]), coords(&w.0[m..]))
            }
        }
    }

    fn is_dominant(&self, w: &TorusWeight) -> bool {
        let dom = |x: &[i64]| x.windows(2).all(|p| p[0] >= p[1]);
        match self.module {
            TargetModule::SymWedge { .. } => dom(&w.0),
            TargetModule::SymHom { m, .. } => dom(&w.0[..m]) && dom(&w.0[m..]),
        }
    }
}

/// Variables `y{a}_{b}`, a = 1..n (V/W), b = 1..m (W), each of weight 1.
pub fn hom_ring(m: usize, n: usize) -> Result<Arc<PolyRing>> {
    let names: Vec<String> = (1..=n)
        .flat_map(|a| (1..=m).map(move |b| format!("y{a}_{b}")))
        .collect();
    PolyRing::weighted(&names, &vec![1; m * n])
}

fn var_index(m: usize, a: usize, b: usize) -> usize {
    (a - 1) * m + (b - 1)
}

/// Torus weight of a monomial: W-part first (length m), then V/W-part.
fn hom_weight(m: usize, n: usize, exps: &[u32]) -> TorusWeight {
    let mut w = vec![0i64; m + n];
    for a in 1..=n {
        for b in 1..=m {
            let e = exps[var_index(m, a, b)] as i64;
            w[b - 1] -= e;
            w[m + a - 1] += e;
        }
    }
    TorusWeight(w)
}

/// Images of the variables under the raising operators, as
/// `var -> [(var', coeff)]`. With `simple_only`, only E_{j,j+1}; otherwise
/// every E_{jk}, j < k, on both sides.
fn hom_raising_maps(m: usize, n: usize, simple_only: bool) -> Vec<Vec<Vec<(usize, Rational)>>> {
    let pairs = |size: usize| -> Vec<(usize, usize)> {
        (1..=size)
            .flat_map(|j| (j + 1..=size).map(move |k| (j, k)))
            .filter(|(j, k)| !simple_only || *k == j + 1)
            .collect()
    };
    let mut maps = Vec::new();
    // W-side E_{jk}: y E_{jk} sends column j to column k, with the sign of -y X
    for (j, k) in pairs(m) {
        let mut map = vec![Vec::new(); m * n];
        for a in 1..=n {
            map[var_index(m, a, j)].push((var_index(m, a, k), rat(-1)));
        }
        maps.push(map);
    }
    // V/W-side E_{jk}: X y sends row k to row j
    for (j, k) in pairs(n) {
        let mut map = vec![Vec::new(); m * n];
        for b in 1..=m {
            map[var_index(m, k, b)].push((var_index(m, j, b), rat(1)));
        }
        maps.push(map);
    }
    maps
}

fn apply_linear_derivation(
    map: &[Vec<(usize, Rational)>],
    exps: &[u32],
) -> Vec<(Vec<u32>, Rational)> {
    let mut out = Vec::new();
    for (v, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        for (w, c) in &map[v] {
            let mut img = exps.to_vec();
            img[v] -= 1;
            img[*w] += 1;
            out.push((img, c * rat(e as i64)));
        }
    }
    out
}

/// A derivation given on variables, applied to a polynomial through the
/// chain rule.
fn derive_poly(map: &[Vec<(usize, Rational)>], p: &MultiPoly) -> MultiPoly {
    let ring = p.ring().clone();
    let mut out = MultiPoly::zero(&ring);
    for (v, images) in map.iter().enumerate() {
        if images.is_empty() || !p.involves(v) {
            continue;
        }
        let mut img = MultiPoly::zero(&ring);
        for (w, c) in images {
            let mut e = vec![0; ring.nvars()];
            e[*w] = 1;
            img = &img + &MultiPoly::monomial(&ring, e, c.clone());
        }
        out = &out + &(&p.derivative_at(v) * &img);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HighestWeightSpace {
    pub weight: TorusWeight,
    pub label: IrrepLabel,
    #[serde(skip)]
    pub space: Subspace,
    pub vectors: Vec<String>,
}

pub fn highest_weight_vectors(
    module: TargetModule,
    algebra: Algebra,
    cap: usize,
) -> Result<Vec<HighestWeightSpace>> {
    if algebra != module.natural_algebra() {
        return Err(Error::Unsupported(format!(
            "{module} is only decomposed under {}",
            module.natural_algebra()
        )));
    }
    let r = Realized::build(module, cap)?;
    hw_spaces(&r)
}

fn hw_spaces(r: &Realized) -> Result<Vec<HighestWeightSpace>> {
    let dim = r.weights.len();
    let mut by_weight: BTreeMap<TorusWeight, Vec<usize>> = BTreeMap::new();
    for (i, w) in r.weights.iter().enumerate() {
        by_weight.entry(w.clone()).or_default().push(i);
    }
    let mut out = Vec::new();
    // descending weights so larger components come first
    for (w, members) in by_weight.iter().rev() {
        if !r.is_dominant(w) {
            continue;
        }
        let mut row_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
        for (col, &b) in members.iter().enumerate() {
            for (op, table) in r.raising.iter().enumerate() {
                for (img, c) in &table[b] {
                    let next = row_of.len();
                    let row = *row_of.entry((op, *img)).or_insert(next);
                    entries.push((row, col, c.clone()));
                }
            }
        }
        let mut mat = ExactMatrix::zeros(row_of.len(), members.len());
        for (i, j, c) in entries {
            mat[(i, j)] += c;
        }
        let ker = kernel(&mat);
        if ker.is_empty() {
            continue;
        }
        let full: Vec<Vec<Rational>> = ker
            .iter()
            .map(|k| {
                let mut v = vec![Rational::zero(); dim];
                for (&b, c) in members.iter().zip(k) {
                    v[b] = c.clone();
                }
                v
            })
            .collect();
        let space = crate::exactla::span(&full, dim)?;
        let vectors = space
            .basis()
            .row_vecs()
            .iter()
            .map(|v| (r.texts)(v))
            .collect();
        out.push(HighestWeightSpace {
            weight: w.clone(),
            label: r.label(w),
            space,
            vectors,
        });
    }
    // post hoc: each returned vector is killed by every raising operator
    for hw in &out {
        for row in hw.space.basis().row_vecs() {
            for table in &r.raising {
                let mut img: HashMap<usize, Rational> = HashMap::new();
                for (b, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (t, k) in &table[b] {
                        *img.entry(*t).or_insert_with(Rational::zero) += c * k;
                    }
                }
                if img.values().any(|x| !x.is_zero()) {
                    return Err(Error::AuditFailure(format!(
                        "vector at {:?} is not highest weight",
                        hw.weight
                    )));
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Component {
    pub label: IrrepLabel,
    pub weight: TorusWeight,
    pub multiplicity: usize,
    pub dimension: usize,
    pub highest_weight_vectors: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub module: TargetModule,
    pub description: String,
    pub algebra: String,
    pub components: Vec<Component>,
    pub total_dim: usize,
    pub multiplicity_free: bool,
}

pub fn decompose(
    module: TargetModule,
    algebra: Algebra,
    cap: usize,
) -> Result<DecompositionReport> {
    let hws = highest_weight_vectors(module, algebra, cap)?;
    let total_dim = module.ambient_dim();
    let components: Vec<Component> = hws
        .into_iter()
        .map(|h| Component {
            dimension: irrep_dim(&h.label),
            multiplicity: h.space.dim(),
            label: h.label,
            weight: h.weight,
            highest_weight_vectors: h.vectors,
        })
        .collect();
    let sum: usize = components
        .iter()
        .map(|c| c.multiplicity * c.dimension)
        .sum();
    if sum != total_dim {
        return Err(Error::AuditFailure(format!(
            "{module}: components account for {sum} of {total_dim} dimensions"
        )));
    }
    Ok(DecompositionReport {
        module,
        description: module.to_string(),
        algebra: algebra.to_string(),
        multiplicity_free: components.iter().all(|c| c.multiplicity == 1),
        components,
        total_dim,
    })
}

/// Components of Sym^d(∧²K⁴): (d - 2i)ω₂ for i = 0..=floor(d/2).
pub fn predicted_sym_wedge_g24(d: usize) -> Vec<IrrepLabel> {
    (0..=d / 2)
        .map(|i| IrrepLabel::sl(4, vec![0, (d - 2 * i) as u32, 0]))
        .collect()
}

/// Components of Sym^k(W* ⊗ V/W) for m = n = 2: Sym^{2j+p} ⊗ Sym^{2j+p},
/// p = k mod 2, j = 0..=floor(k/2).
pub fn predicted_sym_hom_22(k: usize) -> Vec<IrrepLabel> {
    let p = k % 2;
    (0..=k / 2)
        .rev()
        .map(|j| {
            let a = (2 * j + p) as u32;
            IrrepLabel::pair(vec![a], vec![a])
        })
        .collect()
}

/// Number of irreducible components of Sym^d(∧²K⁴); errors if any
/// component repeats.
pub fn aut_rank(d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::InvalidParameter("need d >= 1".into()));
    }
    let rep = decompose(
        TargetModule::SymWedge { m: 2, n: 2, d },
        Algebra::Sl(4),
        usize::MAX,
    )?;
    if let Some(c) = rep.components.iter().find(|c| c.multiplicity > 1) {
        return Err(Error::MultiplicityViolation {
            label: c.label.to_string(),
            multiplicity: c.multiplicity,
        });
    }
    Ok(rep.components.len())
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionPair {
    pub w_side: Partition,
    pub q_side: Partition,
    pub multiplicity: usize,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CauchyReport {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub ambient_dim: usize,
    pub schur_pairing_sum: usize,
    pub decomposition_sum: usize,
    pub all_agree: bool,
    pub observed_pairs: Vec<PartitionPair>,
    /// Every component pairs λ with λ, and with multiplicity one.
    pub standard_pairing: bool,
}

pub fn cauchy_check(m: usize, n: usize, k: usize, cap: usize) -> Result<CauchyReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("need k >= 1".into()));
    }
    let ambient_dim = binomial(m * n + k - 1, k);
    let schur_pairing_sum = Partition::all(k as u32)
        .iter()
        .map(|l| schur_dim(l, m) * schur_dim(l, n))
        .sum();
    let rep = decompose(TargetModule::SymHom { m, n, k }, Algebra::SlPair(m, n), cap)?;
    let decomposition_sum = rep
        .components
        .iter()
        .map(|c| c.multiplicity * c.dimension)
        .sum();
    let observed_pairs: Vec<PartitionPair> = rep
        .components
        .iter()
        .map(|c| {
            // W-weight is minus the column counts, increasing for a highest weight
            let mut w: Vec<u32> = c.weight.0[..m].iter().map(|&x| (-x) as u32).collect();
            w.reverse();
            let q: Vec<u32> = c.weight.0[m..].iter().map(|&x| x as u32).collect();
            PartitionPair {
                w_side: Partition::new(w).expect("dominant weight gives a partition"),
                q_side: Partition::new(q).expect("dominant weight gives a partition"),
                multiplicity: c.multiplicity,
                dimension: c.dimension,
            }
        })
        .collect();
    let standard_pairing = observed_pairs
        .iter()
        .all(|p| p.w_side == p.q_side && p.multiplicity == 1);
    Ok(CauchyReport {
        m,
        n,
        k,
        ambient_dim,
        schur_pairing_sum,
        decomposition_sum,
        all_agree: ambient_dim == schur_pairing_sum && schur_pairing_sum == decomposition_sum,
        observed_pairs,
        standard_pairing,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorReport {
    pub m: usize,
    pub n: usize,
    pub i: usize,
    pub polynomial: String,
    #[serde(skip)]
    pub poly: MultiPoly,
    /// W-part then V/W-part.
    pub weight: TorusWeight,
    /// b_1⋯b_i / (a_{m-i+1}⋯a_m), differentiated.
    pub expected_weight: TorusWeight,
    pub annihilated: bool,
    pub verified: bool,
}

/// The i×i minor on rows 1..i of V/W and columns m-i+1..m of W.
pub fn minor_hwv(m: usize, n: usize, i: usize) -> Result<MinorReport> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("need m, n >= 1".into()));
    }
    if i == 0 || i > m.min(n) {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: m.min(n),
        });
    }
    let ring = hom_ring(m, n)?;
    let cols: Vec<usize> = (m - i + 1..=m).collect();
    let mut poly = MultiPoly::zero(&ring);
    for (perm, sign) in permutations(i) {
        let mut e = vec![0u32; m * n];
        for (row, &p) in perm.iter().enumerate() {
            e[var_index(m, row + 1, cols[p])] += 1;
        }
        poly = &poly + &MultiPoly::monomial(&ring, e, rat(sign));
    }
    let annihilated = hom_raising_maps(m, n, false)
        .iter()
        .all(|map| derive_poly(map, &poly).is_zero());
    let weights: Vec<TorusWeight> = poly.terms().keys().map(|e| hom_weight(m, n, e)).collect();
    let weight = weights[0].clone();
    let homogeneous = weights.iter().all(|w| *w == weight);
    let mut expected = vec![0i64; m + n];
    for b in m - i + 1..=m {
        expected[b - 1] = -1;
    }
    for a in 1..=i {
        expected[m + a - 1] = 1;
    }
    let expected_weight = TorusWeight(expected);
    Ok(MinorReport {
        m,
        n,
        i,
        polynomial: poly.to_string(),
        verified: annihilated && homogeneous && weight == expected_weight,
        poly,
        weight,
        expected_weight,
        annihilated,
    })
}

/// Permutations of 0..k with their signs, by Heap's algorithm.
fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    let mut sign = 1i64;
    out.push((a.clone(), sign));
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn weyl_matches_hook_content(k in 1u32..7, n in 2usize..6, pick in 0usize..64) {
            let parts = Partition::all(k);
            let lambda = &parts[pick % parts.len()];
            if let Some(w) = lambda.to_weight(n) {
                if lambda.0.len() < n {
                    prop_assert_eq!(irrep_dim(&IrrepLabel::sl(n, w)), schur_dim(lambda, n));
                }
            }
        }

        #[test]
        fn decompositions_account_for_every_dimension(m in 1usize..3, n in 1usize..3, d in 1usize..4) {
            let module = TargetModule::SymWedge { m, n, d };
            let r = decompose(module, module.natural_algebra(), DEFAULT_DIMENSION_CAP).unwrap();
            prop_assert_eq!(r.components.iter().map(|c| c.multiplicity * c.dimension).sum::<usize>(), r.total_dim);
            let module = TargetModule::SymHom { m, n, k: d };
            let r = decompose(module, module.natural_algebra(), DEFAULT_DIMENSION_CAP).unwrap();
            prop_assert_eq!(r.components.iter().map(|c| c.multiplicity * c.dimension).sum::<usize>(), r.total_dim);
        }

        #[test]
        fn cauchy_sides_agree(m in 1usize..4, n in 1usize..4, k in 1usize..4) {
            let r = cauchy_check(m, n, k, DEFAULT_DIMENSION_CAP).unwrap();
            prop_assert!(r.all_agree);
            prop_assert!(r.standard_pairing);
        }
    }
}
