//! Koszul complexes of a rank-one source, the incidence generators of
//! `O(d)` on the projective line, and the line-bundle bookkeeping around
//! their pushforwards.
//!
//! For a map `R → R^r` given by `(g_0, …, g_{r-1})` the p-th differential
//! sends `e_S`, `S = {s_1 < … < s_p}`, to `Σ_i (-1)^{i-1} g_{s_i} e_{S∖s_i}`.
//!
//! Gradings are strictly positive so that every graded piece is finite:
//! on chart 0, `deg u_i = d - i + 1` and `deg t = 1`; on chart 1,
//! `deg u_i = i + 1` and `deg s = 1`. Generator `k` then has degree
//! `d - k + 1` on both charts.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_integer::binomial;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{rank, rat, ExactMatrix, Rational};
use crate::multipoly::{graded_basis, Exponents, MultiPoly, PolyRing};

pub type PolyMatrix = Vec<Vec<MultiPoly>>;

/// A map of free modules `R^source_rank → R^target_rank`; row `i` of the
/// matrix is the image of the i-th source generator.
#[derive(Clone, Debug)]
pub struct FreeModuleMap {
    ring: Arc<PolyRing>,
    matrix: PolyMatrix,
    target_rank: usize,
}

impl FreeModuleMap {
    pub fn new(ring: &Arc<PolyRing>, matrix: PolyMatrix, target_rank: usize) -> Result<Self> {
        for row in &matrix {
            if row.len() != target_rank {
                return Err(Error::DimensionMismatch {
                    expected: target_rank,
                    found: row.len(),
                });
            }
            if row.iter().any(|p| p.ring() != ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            matrix,
            target_rank,
        })
    }

    /// The map `R → R^r` with the given images.
    pub fn row(gens: &[MultiPoly]) -> Result<Self> {
        let ring = gens
            .first()
            .ok_or_else(|| Error::InvalidParameter("need at least one generator".into()))?
            .ring()
            .clone();
        Self::new(&ring, vec![gens.to_vec()], gens.len())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn source_rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }
}

/// Size-p subsets of 0..r in lexicographic order.
pub fn subsets(r: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            if r - i < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, r, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= r {
        rec(0, r, p, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, Debug)]
pub struct KoszulMatrix {
    pub p: usize,
    /// Columns, indexed by p-subsets.
    pub source_basis: Vec<Vec<usize>>,
    /// Rows, indexed by (p-1)-subsets.
    pub target_basis: Vec<Vec<usize>>,
    pub entries: PolyMatrix,
}

pub fn koszul_differential(phi: &FreeModuleMap, p: usize) -> Result<KoszulMatrix> {
    if phi.source_rank() != 1 {
        return Err(Error::Unsupported(
            "differentials are assembled for rank-one sources only".into(),
        ));
    }
    let r = phi.target_rank();
    if p == 0 || p > r {
        return Err(Error::IndexOutOfRange { index: p, max: r });
    }
    let gens = &phi.matrix()[0];
    let source_basis = subsets(r, p);
    let target_basis = subsets(r, p - 1);
    let row_of: HashMap<&[usize], usize> = target_basis
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let mut entries =
        vec![vec![MultiPoly::zero(phi.ring()); source_basis.len()]; target_basis.len()];
    for (col, s) in source_basis.iter().enumerate() {
        for (pos, &k) in s.iter().enumerate() {
            let mut rest = s.clone();
            rest.remove(pos);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            entries[row_of[rest.as_slice()]][col] = gens[k].scale(&rat(sign));
        }
    }
    Ok(KoszulMatrix {
        p,
        source_basis,
        target_basis,
        entries,
    })
}

pub fn poly_matmul(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    let inner = b.len();
    if a.iter().any(|row| row.len() != inner) {
        return Err(Error::DimensionMismatch {
            expected: inner,
            found: a.first().map_or(0, |r| r.len()),
        });
    }
    let cols = b.first().map_or(0, |r| r.len());
    let ring = match b.first().and_then(|r| r.first()) {
        Some(p) => p.ring().clone(),
        None => return Ok(vec![Vec::new(); a.len()]),
    };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = MultiPoly::zero(&ring);
                    for (k, x) in row.iter().enumerate() {
                        acc = acc.checked_add(&x.checked_mul(&b[k][j])?)?;
                    }
                    Ok(acc)
                })
                .collect()
        })
        .collect()
}

/// Checks `d^{p-1} ∘ d^p = 0` for every `2 ≤ p ≤ r`.
pub fn d_squared_zero(phi: &FreeModuleMap) -> Result<bool> {
    for p in 2..=phi.target_rank() {
        let hi = koszul_differential(phi, p)?;
        let lo = koszul_differential(phi, p - 1)?;
        let prod = poly_matmul(&lo.entries, &hi.entries)?;
        if prod.iter().flatten().any(|x| !x.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Chart {
    #[serde(rename = "0")]
    /// Coordinate t, polynomial F(t) = Σ u_i t^i.
    Zero,
    /// Coordinate s, polynomial G(s) = Σ u_i s^{d-i}.
    #[serde(rename = "1")]
    One,
}

impl Chart {
    pub fn from_index(i: u32) -> Result<Self> {
        match i {
            0 => Ok(Chart::Zero),
            1 => Ok(Chart::One),
            _ => Err(Error::InvalidParameter(format!(
                "chart must be 0 or 1, got {i}"
            ))),
        }
    }

    fn coordinate(self) -> &'static str {
        match self {
            Chart::Zero => "t",
            Chart::One => "s",
        }
    }

    fn generator_prefix(self) -> &'static str {
        match self {
            Chart::Zero => "z",
            Chart::One => "w",
        }
    }

    /// Index of the coefficient variable carrying generator k with unit
    /// coefficient and no power of the coordinate.
    fn lead(self, d: usize, k: usize) -> usize {
        match self {
            Chart::Zero => k,
            Chart::One => d - k,
        }
    }
}

/// Coefficient ring of a chart. On chart 1 the coefficients are listed
/// from u_d down to u_0 so both charts print with the same shape.
pub fn chart_ring(d: usize, chart: Chart) -> Result<Arc<PolyRing>> {
    let idx: Vec<usize> = match chart {
        Chart::Zero => (0..=d).collect(),
        Chart::One => (0..=d).rev().collect(),
    };
    let mut names: Vec<String> = idx.iter().map(|i| format!("u{i}")).collect();
    names.push(chart.coordinate().to_string());
    let mut weights: Vec<u32> = idx
        .iter()
        .map(|&i| match chart {
            Chart::Zero => (d - i + 1) as u32,
            Chart::One => (i + 1) as u32,
        })
        .collect();
    weights.push(1);
    PolyRing::weighted(&names, &weights)
}

/// The generic polynomial of the chart, `Σ u_i t^i` or `Σ u_i s^{d-i}`.
pub fn generic_polynomial(ring: &Arc<PolyRing>, d: usize, chart: Chart) -> Result<MultiPoly> {
    let mut f = MultiPoly::zero(ring);
    let x = MultiPoly::var(ring, chart.coordinate())?;
    for i in 0..=d {
        let power = match chart {
            Chart::Zero => i,
            Chart::One => d - i,
        };
        f = &f + &(&MultiPoly::var(ring, &format!("u{i}"))? * &x.pow(power as u32));
    }
    Ok(f)
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(rat(1), |acc, i| acc * rat(i))
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartGenerators {
    pub d: usize,
    pub l: usize,
    pub chart: Chart,
    #[serde(skip)]
    pub ring: Arc<PolyRing>,
    /// Generators k = l, l-1, …, 0.
    #[serde(skip)]
    pub generators: Vec<MultiPoly>,
    pub degrees: Vec<u32>,
    pub rendered: Vec<String>,
}

impl ChartGenerators {
    pub fn generator(&self, k: usize) -> &MultiPoly {
        &self.generators[self.l - k]
    }

    pub fn name(&self, k: usize) -> String {
        format!("{}{k}", self.chart.generator_prefix())
    }

    pub fn descending_order(&self) -> Vec<usize> {
        (0..=self.l).rev().collect()
    }
}

/// Generator k is the k-th derivative of the chart polynomial divided by k!.
pub fn incidence_generators(d: usize, l: usize, chart: Chart) -> Result<ChartGenerators> {
    if l == 0 || l >= d {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= l < d, got l={l}, d={d}"
        )));
    }
    let ring = chart_ring(d, chart)?;
    let f = generic_polynomial(&ring, d, chart)?;
    let mut derivs = vec![f];
    for _ in 0..l {
        let next = derivs.last().unwrap().derivative(chart.coordinate())?;
        derivs.push(next);
    }
    let mut generators = Vec::new();
    let mut degrees = Vec::new();
    let mut rendered = Vec::new();
    let prefix = chart.generator_prefix();
    for k in (0..=l).rev() {
        let g = derivs[k].scale(&(rat(1) / factorial(k)));
        let deg = g
            .is_homogeneous()?
            .ok_or_else(|| Error::AuditFailure(format!("{prefix}{k} is not homogeneous")))?;
        if deg as usize != d - k + 1 {
            return Err(Error::AuditFailure(format!("{prefix}{k} has degree {deg}")));
        }
        rendered.push(format!("{prefix}{k} = {g}"));
        degrees.push(deg);
        generators.push(g);
    }
    Ok(ChartGenerators {
        d,
        l,
        chart,
        ring,
        generators,
        degrees,
        rendered,
    })
}

/// Compares f^{(k)}/k! for the generic degree-d polynomial with the closed
/// form Σ_{i≥k} binom(i,k) u_i t^{i-k}.
pub fn derivative_formula_check(d: usize, k: usize) -> bool {
    if k > d {
        return false;
    }
    let Ok(ring) = chart_ring(d, Chart::Zero) else {
        return false;
    };
    let Ok(mut f) = generic_polynomial(&ring, d, Chart::Zero) else {
        return false;
    };
    for _ in 0..k {
        f = f.derivative("t").expect("t is a variable");
    }
    let lhs = f.scale(&(rat(1) / factorial(k)));
    let t = ring.nvars() - 1;
    let rhs = MultiPoly::from_terms(
        &ring,
        (k..=d).map(|i| {
            let mut e = vec![0u32; ring.nvars()];
            e[i] = 1;
            e[t] = (i - k) as u32;
            (e, rat(binomial(i, k) as i64))
        }),
    );
    lhs == rhs
}

#[derive(Clone, Debug, Serialize)]
pub struct EliminationStep {
    pub generator: String,
    pub lead: String,
    /// The generator after substituting every earlier elimination.
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EliminationReport {
    pub chart: Chart,
    pub steps: Vec<EliminationStep>,
    pub eliminated: Vec<String>,
    pub success: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyEntry {
    pub p: usize,
    pub degree: u32,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    pub order: Vec<usize>,
    pub degree_bound: u32,
    pub entries: Vec<HomologyEntry>,
    pub positive_homology_vanishes: bool,
}

#[derive(Clone, Debug)]
pub enum RegularityMethod {
    Elimination,
    Homology { degree_bound: u32 },
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum RegularityOutcome {
    Elimination(EliminationReport),
    Homology(HomologyReport),
}

impl RegularityOutcome {
    pub fn success(&self) -> bool {
        match self {
            RegularityOutcome::Elimination(e) => e.success,
            RegularityOutcome::Homology(h) => h.positive_homology_vanishes,
        }
    }
}

pub fn regularity_check(
    gens: &ChartGenerators,
    method: RegularityMethod,
    order: Option<&[usize]>,
) -> Result<RegularityOutcome> {
    let descending = gens.descending_order();
    let order = order
        .map(<[usize]>::to_vec)
        .unwrap_or_else(|| descending.clone());
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..=gens.l).collect::<Vec<_>>() {
        return Err(Error::InvalidParameter(format!(
            "{order:?} is not a permutation of 0..={}",
            gens.l
        )));
    }
    match method {
        RegularityMethod::Elimination => {
            if order != descending {
                return Err(Error::Unsupported(
                    "elimination follows the descending order only; use the homology method".into(),
                ));
            }
            Ok(RegularityOutcome::Elimination(eliminate(gens)?))
        }
        RegularityMethod::Homology { degree_bound } => Ok(RegularityOutcome::Homology(
            graded_homology(gens, &order, degree_bound)?,
        )),
    }
}

fn eliminate(gens: &ChartGenerators) -> Result<EliminationReport> {
    let ring = &gens.ring;
    let mut bindings: BTreeMap<String, MultiPoly> = BTreeMap::new();
    let mut eliminated_idx: Vec<usize> = Vec::new();
    let mut steps = Vec::new();
    let mut success = true;
    for k in gens.descending_order() {
        let residual = gens.generator(k).substitute(&bindings)?;
        let lead_name = format!("u{}", gens.chart.lead(gens.d, k));
        let lead = ring.index_of(&lead_name)?;
        let mut unit = vec![0u32; ring.nvars()];
        unit[lead] = 1;
        let rest = &residual - &MultiPoly::monomial(ring, unit.clone(), rat(1));
        let ok = !residual.is_zero()
            && residual.coeff(&unit) == rat(1)
            && !rest.involves(lead)
            && eliminated_idx.iter().all(|&v| !rest.involves(v));
        steps.push(EliminationStep {
            generator: gens.name(k),
            lead: lead_name.clone(),
            residual: residual.to_string(),
        });
        if !ok {
            success = false;
            break;
        }
        bindings.insert(lead_name, -&rest);
        eliminated_idx.push(lead);
    }
    success &= eliminated_idx.len() == gens.l + 1;
    Ok(EliminationReport {
        chart: gens.chart,
        eliminated: eliminated_idx
            .iter()
            .map(|&i| ring.variable_names()[i].clone())
            .collect(),
        steps,
        success,
    })
}

/// Graded Koszul homology of the generators taken in `order`, through
/// rank-nullity in each degree up to `degree_bound`.
pub fn graded_homology(
    gens: &ChartGenerators,
    order: &[usize],
    degree_bound: u32,
) -> Result<HomologyReport> {
    let seq: Vec<&MultiPoly> = order.iter().map(|&k| gens.generator(k)).collect();
    let degs: Vec<u32> = order.iter().map(|&k| (gens.d - k + 1) as u32).collect();
    let r = seq.len();
    let ring = &gens.ring;
    let pieces: Vec<Vec<Exponents>> = (0..=degree_bound)
        .map(|e| graded_basis(ring, e))
        .collect::<Result<_>>()?;
    let per_degree: Vec<Vec<HomologyEntry>> = (0..=degree_bound)
        .into_par_iter()
        .map(|deg| {
            // basis of K_p in this degree: pairs (subset, monomial)
            let basis: Vec<Vec<(Vec<usize>, Exponents)>> = (0..=r)
                .map(|p| {
                    subsets(r, p)
                        .into_iter()
                        .flat_map(|s| {
                            let shift: u32 = s.iter().map(|&i| degs[i]).sum();
                            let piece: &[Exponents] = if shift <= deg {
                                &pieces[(deg - shift) as usize]
                            } else {
                                &[]
                            };
                            piece
                                .iter()
                                .map(move |m| (s.clone(), m.clone()))
                                .collect::<Vec<_>>()
                        })
                        .collect()
                })
                .collect();
            // ranks[p] = rank of d_p: K_p → K_{p-1}
            let mut ranks = vec![0usize; r + 2];
            for p in 1..=r {
                let rows: HashMap<&(Vec<usize>, Exponents), usize> = basis[p - 1]
                    .iter()
                    .enumerate()
                    .map(|(i, b)| (b, i))
                    .collect();
                let mut mat = ExactMatrix::zeros(basis[p - 1].len(), basis[p].len());
                for (col, (s, mono)) in basis[p].iter().enumerate() {
                    for (pos, &i) in s.iter().enumerate() {
                        let mut rest = s.clone();
                        rest.remove(pos);
                        let sign = if pos % 2 == 0 { rat(1) } else { rat(-1) };
                        for (e, c) in seq[i].terms() {
                            let prod: Exponents = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                            let row = rows[&(rest.clone(), prod)];
                            mat[(row, col)] += &sign * c;
                        }
                    }
                }
                ranks[p] = rank(&mat);
            }
            (0..=r)
                .map(|p| HomologyEntry {
                    p,
                    degree: deg,
                    dim: basis[p].len() - ranks[p] - ranks[p + 1],
                })
                .collect()
        })
        .collect();
    let entries: Vec<HomologyEntry> = per_degree.into_iter().flatten().collect();
    Ok(HomologyReport {
        order: order.to_vec(),
        degree_bound,
        positive_homology_vanishes: entries.iter().all(|e| e.p == 0 || e.dim == 0),
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulReport {
    pub d: usize,
    pub l: usize,
    pub d_squared_zero: bool,
    pub regularity_by_elimination: BTreeMap<String, bool>,
    pub elimination: Vec<EliminationReport>,
    pub homology: Vec<HomologyReport>,
    pub permutations_tested: Vec<Vec<usize>>,
}

impl KoszulReport {
    pub fn all_hold(&self) -> bool {
        self.d_squared_zero
            && self.regularity_by_elimination.values().all(|&b| b)
            && self.homology.iter().all(|h| h.positive_homology_vanishes)
    }
}

/// The full check of the incidence complex of `O(d)` with `l` derivatives:
/// `d² = 0`, elimination on both charts, and graded homology on chart 0 for
/// the descending order plus each of `extra_orders`.
pub fn koszul_report(
    d: usize,
    l: usize,
    extra_orders: &[Vec<usize>],
    degree_bound: u32,
) -> Result<KoszulReport> {
    let mut d_sq = true;
    let mut by_chart = BTreeMap::new();
    let mut elimination = Vec::new();
    for (name, chart) in [("chart0", Chart::Zero), ("chart1", Chart::One)] {
        let gens = incidence_generators(d, l, chart)?;
        d_sq &= d_squared_zero(&FreeModuleMap::row(&gens.generators)?)?;
        let RegularityOutcome::Elimination(e) =
            regularity_check(&gens, RegularityMethod::Elimination, None)?
        else {
            unreachable!()
        };
        by_chart.insert(name.to_string(), e.success);
        elimination.push(e);
    }
    let gens = incidence_generators(d, l, Chart::Zero)?;
    let mut orders = vec![gens.descending_order()];
    orders.extend(extra_orders.iter().cloned());
    let homology = orders
        .iter()
        .map(|o| graded_homology(&gens, o, degree_bound))
        .collect::<Result<Vec<_>>>()?;
    Ok(KoszulReport {
        d,
        l,
        d_squared_zero: d_sq,
        regularity_by_elimination: by_chart,
        elimination,
        homology,
        permutations_tested: orders,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineCohomology {
    pub h0: u64,
    pub h1: u64,
}

/// Cohomology of `O(k)` on the projective line.
pub fn line_cohomology(k: i64) -> LineCohomology {
    LineCohomology {
        h0: (k + 1).max(0) as u64,
        h1: (-k - 1).max(0) as u64,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PushforwardReport {
    pub d: usize,
    pub l: usize,
    pub j: usize,
    /// `j(d - l) < 2`: both direct images vanish except the `j = 0` column.
    pub vanishing_clause: bool,
    pub r0_predicted: u64,
    pub r1_predicted: u64,
    pub r0_computed: u64,
    pub r1_computed: u64,
    pub agree: bool,
}

/// Ranks of the direct images of `O(-j) ⊗ ∧^j (jets)^*`: predicted from
/// `Sym^{j(d-l)-2}(K²) ⊗ ∧^j Sym^l(K²)`, computed from line-bundle
/// cohomology of the split jet bundle.
pub fn pushforward_report(d: usize, l: usize, j: usize) -> Result<PushforwardReport> {
    if l == 0 || l >= d {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= l < d, got l={l}, d={d}"
        )));
    }
    if j > l + 1 {
        return Err(Error::InvalidParameter(format!(
            "need j <= l + 1, got j={j}"
        )));
    }
    let wedge = binomial(l + 1, j) as u64;
    let e = j * (d - l);
    let sym_dim = |r: usize| binomial(r + 1, r) as u64;
    let r1_predicted = if e >= 2 { sym_dim(e - 2) * wedge } else { 0 };
    let r0_predicted = if e >= 1 { 0 } else { wedge };
    let c = line_cohomology(j as i64 * (l as i64 - d as i64));
    let (r0_computed, r1_computed) = (c.h0 * wedge, c.h1 * wedge);
    Ok(PushforwardReport {
        d,
        l,
        j,
        vanishing_clause: e < 2,
        r0_predicted,
        r1_predicted,
        r0_computed,
        r1_computed,
        agree: r0_predicted == r0_computed && r1_predicted == r1_computed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Splitting {
    pub summands: usize,
    pub twist: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct JetReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub l: usize,
    pub rank_e: usize,
    /// rank_E · Σ_{i≤l} dim Sym^i of the tangent space.
    pub fiber_dim: usize,
    /// For projective space: the jet bundle of `O(d)` as a sum of line bundles.
    pub splitting: Option<Splitting>,
    pub telescoping_sum: usize,
    pub telescoping_closed_form: usize,
    pub telescoping_holds: bool,
}

pub fn jet_numerics(m: usize, n: usize, d: usize, l: usize, rank_e: usize) -> Result<JetReport> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("need m, n >= 1".into()));
    }
    let tangent = m * n;
    let fiber_dim = rank_e * (0..=l).map(|i| binomial(tangent + i - 1, i)).sum::<usize>();
    let telescoping_sum: usize = (0..=l).map(|i| binomial(n + i - 1, i)).sum();
    let telescoping_closed_form = binomial(n + l, n);
    let splitting = (m == 1).then(|| Splitting {
        summands: binomial(n + l, n),
        twist: d as i64 - l as i64,
    });
    Ok(JetReport {
        m,
        n,
        d,
        l,
        rank_e,
        fiber_dim,
        splitting,
        telescoping_sum,
        telescoping_closed_form,
        telescoping_holds: telescoping_sum == telescoping_closed_form,
    })
}

#[cfg(test)]
/// True when every entry of the Koszul matrix is a signed generator placed
/// at the position the sign rule dictates, and zero elsewhere.
fn entries_follow_sign_rule(phi: &FreeModuleMap, k: &KoszulMatrix) -> bool {
    let gens = &phi.matrix()[0];
    for (col, s) in k.source_basis.iter().enumerate() {
        for (row, t) in k.target_basis.iter().enumerate() {
            let expected = match s.iter().position(|x| !t.contains(x)) {
                Some(pos) if t.iter().all(|x| s.contains(x)) => {
                    gens[s[pos]].scale(&rat(if pos % 2 == 0 { 1 } else { -1 }))
                }
                _ => MultiPoly::zero(phi.ring()),
            };
            if k.entries[row][col] != expected {
                return false;
            }
        }
    }
    true
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_row() -> impl Strategy<Value = Vec<MultiPoly>> {
        (1usize..5).prop_flat_map(|r| {
            prop::collection::vec(
                prop::collection::vec(((0u32..3, 0u32..3), -3i64..4), 1..4),
                r,
            )
            .prop_map(|gens| {
                let ring = PolyRing::new(&["x", "y"]).unwrap();
                gens.into_iter()
                    .map(|terms| {
                        MultiPoly::from_terms(
                            &ring,
                            terms.into_iter().map(|((a, b), c)| (vec![a, b], rat(c))),
                        )
                    })
                    .collect()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn differentials_compose_to_zero(row in arb_row()) {
            let phi = FreeModuleMap::row(&row).unwrap();
            prop_assert!(d_squared_zero(&phi).unwrap());
            for p in 1..=row.len() {
                prop_assert!(entries_follow_sign_rule(&phi, &koszul_differential(&phi, p).unwrap()));
            }
        }

        #[test]
        fn pushforward_sides_agree(d in 2usize..7, l in 1usize..6, j in 0usize..7) {
            prop_assume!(l < d && j <= l + 1);
            let r = pushforward_report(d, l, j).unwrap();
            prop_assert!(r.agree);
            let e = j * (d - l);
            if e >= 2 {
                prop_assert_eq!((e - 1) as u64, line_cohomology(-(e as i64)).h1);
            }
        }

        #[test]
        fn telescoping(n in 1usize..7, l in 0usize..7) {
            prop_assert!(jet_numerics(1, n, l + 1, l, 1).unwrap().telescoping_holds);
        }

        #[test]
        fn generators_stay_homogeneous(d in 2usize..7, l in 1usize..6, chart in 0u32..2) {
            prop_assume!(l < d);
            let g = incidence_generators(d, l, Chart::from_index(chart).unwrap()).unwrap();
            for k in 0..=l {
                prop_assert_eq!(g.generator(k).is_homogeneous().unwrap(), Some((d - k + 1) as u32));
            }
        }
    }
}
