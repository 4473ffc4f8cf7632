//! The canonical filtration U_l(sl(V))·L^d ⊆ Sym^d(∧^m V) and the image of
//! L^{d-l} ⊗ Sym^l(g/p_L ⊗ L) under the embedding that sends
//! `L^{d-k} ⊗ x̄_1 ⊗ L ⋯ x̄_k ⊗ L` to `L^{d-k} x_1(L) ⋯ x_k(L)`.

mod g24;

pub use g24::{reproduce_g24, G24Entry, G24Report, LineStatus, G24_PRINT_ERRATA};

use num_integer::binomial;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{subspace_compare, Comparison, Subspace, Verdict};
use crate::plucker::{
    lie_act, sl_basis, sym_mul, sym_pow, Context, ModuleVector, PluckerIndex, SymMonomial,
    SymPowerBasis,
};

/// e[1..m]^d.
pub fn highest_weight_line(m: usize, n: usize, d: usize) -> ModuleVector {
    let ctx = Context::new(m, n, d);
    ModuleVector::monomial(
        ctx,
        SymMonomial::new(vec![PluckerIndex::top(m); d]),
        One::one(),
    )
}

fn check_shape(m: usize, n: usize, d: usize) -> Result<()> {
    if m == 0 || n == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "need m, n, d >= 1 (got m={m}, n={n}, d={d})"
        )));
    }
    Ok(())
}

/// The filtration pieces S_0 ⊆ S_1 ⊆ ... ⊆ S_l.
///
/// S_{k+1} = S_k + g·S_k, and since g·S_{k-1} ⊆ S_k only the vectors that
/// were new at step k need to be acted on.
pub fn filtration_chain(basis: &SymPowerBasis, l: usize) -> Result<Vec<Subspace>> {
    let ctx = basis.context();
    let ops = sl_basis(ctx.dim_v());
    let top = highest_weight_line(ctx.m, ctx.n, ctx.d);
    let mut space = Subspace::zero(basis.dim());
    space.insert(&basis.coordinates(&top)?)?;
    let mut chain = vec![space.clone()];
    let mut frontier = vec![top];
    for _ in 0..l {
        let mut next = Vec::new();
        for v in &frontier {
            for x in &ops {
                let img = lie_act(x, v)?;
                if img.is_zero() {
                    continue;
                }
                if space.insert(&basis.coordinates(&img)?)? {
                    next.push(img);
                }
            }
        }
        chain.push(space.clone());
        frontier = next;
    }
    Ok(chain)
}

pub fn build_filtration(m: usize, n: usize, d: usize, l: usize) -> Result<Subspace> {
    check_shape(m, n, d)?;
    let basis = SymPowerBasis::new(Context::new(m, n, d));
    Ok(filtration_chain(&basis, l)?.pop().unwrap())
}

/// Basis of span{x(L) : x in sl(V)} ⊆ ∧^m V, as degree-one vectors.
pub fn tangent_line_basis(m: usize, n: usize) -> Result<Vec<ModuleVector>> {
    let line = highest_weight_line(m, n, 1);
    let basis = SymPowerBasis::new(line.context());
    let mut s = Subspace::zero(basis.dim());
    for x in sl_basis(m + n) {
        s.insert(&basis.coordinates(&lie_act(&x, &line)?)?)?;
    }
    Ok(s.basis()
        .row_vecs()
        .iter()
        .map(|r| basis.vector(r))
        .collect())
}

/// Products L^{d-l}·v_1⋯v_l over multisets of `generators`.
pub fn comparison_generators(m: usize, n: usize, d: usize, l: usize) -> Result<Vec<ModuleVector>> {
    check_shape(m, n, d)?;
    if l > d {
        return Err(Error::InvalidParameter(format!(
            "l = {l} exceeds d = {d}; L^(d-l) is undefined"
        )));
    }
    let gens = tangent_line_basis(m, n)?;
    let twist = sym_pow(&highest_weight_line(m, n, 1), d - l)?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; l];
    loop {
        let mut v = twist.clone();
        for &i in &idx {
            v = sym_mul(&v, &gens[i])?;
        }
        out.push(v);
        // next weakly increasing index tuple
        let Some(pos) = (0..l).rev().find(|&p| idx[p] + 1 < gens.len()) else {
            break;
        };
        let next = idx[pos] + 1;
        for x in idx[pos..].iter_mut() {
            *x = next;
        }
    }
    Ok(out)
}

pub fn build_comparison(m: usize, n: usize, d: usize, l: usize) -> Result<Subspace> {
    let gens = comparison_generators(m, n, d, l)?;
    let basis = SymPowerBasis::new(Context::new(m, n, d));
    let mut s = Subspace::zero(basis.dim());
    for g in &gens {
        s.insert(&basis.coordinates(g)?)?;
    }
    Ok(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    /// `filtration` or `comparison`: the space containing the vector.
    pub side: &'static str,
    pub vector: ModuleVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub context: Context,
    pub l: usize,
    /// `1 <= l < d`, the range in which the isomorphism is asserted.
    pub in_stated_range: bool,
    pub ambient_dim: usize,
    pub dim_filtration: usize,
    pub dim_comparison: usize,
    pub predicted_dim_comparison: usize,
    pub predicted_dim_filtration_m1: Option<usize>,
    pub verdict: Comparison,
    pub witness: Option<Witness>,
}

impl FiltrationReport {
    /// Whether every available prediction matches the computation.
    pub fn predictions_hold(&self) -> bool {
        let cmp_ok = self.dim_comparison == self.predicted_dim_comparison;
        let m1_ok = self
            .predicted_dim_filtration_m1
            .is_none_or(|p| p == self.dim_filtration);
        let eq_ok = !(self.context.m == 1 || self.l == 1)
            || !self.in_stated_range
            || self.verdict.verdict == Verdict::Equal;
        cmp_ok && m1_ok && eq_ok
    }
}

pub fn filtration_report(m: usize, n: usize, d: usize, l: usize) -> Result<FiltrationReport> {
    check_shape(m, n, d)?;
    if l == 0 || l > d {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= l <= d (got l={l}, d={d})"
        )));
    }
    let ctx = Context::new(m, n, d);
    let basis = SymPowerBasis::new(ctx);
    let filt = filtration_chain(&basis, l)?.pop().unwrap();
    let comp = build_comparison(m, n, d, l)?;
    let verdict = subspace_compare(&filt, &comp)?;
    let witness = if verdict.verdict == Verdict::Equal {
        None
    } else {
        find_witness(&basis, &filt, &comp, "filtration")?.or(find_witness(
            &basis,
            &comp,
            &filt,
            "comparison",
        )?)
    };
    Ok(FiltrationReport {
        context: ctx,
        l,
        in_stated_range: l < d,
        ambient_dim: basis.dim(),
        dim_filtration: filt.dim(),
        dim_comparison: comp.dim(),
        predicted_dim_comparison: binomial(m * n + l, m * n),
        predicted_dim_filtration_m1: (m == 1).then(|| binomial(l + n, n)),
        verdict,
        witness,
    })
}

fn find_witness(
    basis: &SymPowerBasis,
    a: &Subspace,
    b: &Subspace,
    side: &'static str,
) -> Result<Option<Witness>> {
    for row in a.basis().row_vecs() {
        if !b.contains(&row)? {
            return Ok(Some(Witness {
                side,
                vector: basis.vector(&row),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::plucker::torus_weight;

    #[test]
    fn highest_weight_lines() {
        assert_eq!(highest_weight_line(1, 1, 3).to_string(), "e[1]^3");
        assert_eq!(highest_weight_line(2, 2, 2).to_string(), "e[12]^2");
        let v = highest_weight_line(3, 2, 4);
        let (mono, _) = v.coords().iter().next().unwrap();
        assert_eq!(torus_weight(mono, 5).0, vec![4, 4, 4, 0, 0]);
    }

    #[test]
    fn filtration_dimensions() {
        assert_eq!(build_filtration(1, 2, 3, 2).unwrap().dim(), 6);
        assert_eq!(build_filtration(2, 2, 3, 2).unwrap().dim(), 15);
        // sl_2 on Sym^2: U_1 L^2 = span{e1^2, e1 e2}
        let s = build_filtration(1, 1, 2, 1).unwrap();
        assert_eq!(s.dim(), 2);
        let basis = SymPowerBasis::new(Context::new(1, 1, 2));
        let e11 = ModuleVector::from_subsets(basis.context(), &[&[1], &[1]], rat(1)).unwrap();
        let e12 = ModuleVector::from_subsets(basis.context(), &[&[1], &[2]], rat(1)).unwrap();
        let e22 = ModuleVector::from_subsets(basis.context(), &[&[2], &[2]], rat(1)).unwrap();
        assert!(s.contains(&basis.coordinates(&e11).unwrap()).unwrap());
        assert!(s.contains(&basis.coordinates(&e12).unwrap()).unwrap());
        assert!(!s.contains(&basis.coordinates(&e22).unwrap()).unwrap());
    }

    #[test]
    fn comparison_dimensions() {
        for n in 1..=3 {
            for d in 1..=4 {
                for l in 1..=d {
                    assert_eq!(
                        build_comparison(1, n, d, l).unwrap().dim(),
                        binomial(n + l, n)
                    );
                }
            }
        }
        assert_eq!(build_comparison(2, 2, 2, 2).unwrap().dim(), 15);
        assert_eq!(build_comparison(2, 2, 4, 2).unwrap().dim(), 15);
        assert_eq!(build_comparison(2, 2, 1, 1).unwrap().dim(), 5);
        assert_eq!(tangent_line_basis(2, 2).unwrap().len(), 5);
        assert!(build_comparison(2, 2, 1, 2).is_err());
    }

    #[test]
    fn reports() {
        for l in 1..=3 {
            let r = filtration_report(1, 2, 4, l).unwrap();
            assert_eq!(r.verdict.verdict, Verdict::Equal);
            assert_eq!(r.dim_filtration, binomial(l + 2, 2));
            assert!(r.predictions_hold());
        }
        let r = filtration_report(2, 2, 3, 1).unwrap();
        assert_eq!(r.verdict.verdict, Verdict::Equal);
        assert_eq!(r.dim_filtration, 5);

        let r = filtration_report(2, 2, 3, 2).unwrap();
        assert_eq!(r.verdict.verdict, Verdict::Incomparable);
        assert_eq!((r.dim_filtration, r.dim_comparison), (15, 15));
        assert!(r.verdict.dim_intersection < 15);
        let w = r.witness.unwrap();
        assert_eq!(w.side, "filtration");
        assert!(w.vector.to_string().contains("e[34]"), "{}", w.vector);
        assert!(filtration_report(2, 2, 3, 4).is_err());
    }

    #[test]
    fn degenerate_range_is_flagged() {
        let r = filtration_report(1, 1, 2, 2).unwrap();
        assert!(!r.in_stated_range);
    }

    #[test]
    fn monotone_in_l() {
        for (m, n, d) in [(1, 2, 4), (2, 2, 3)] {
            let basis = SymPowerBasis::new(Context::new(m, n, d));
            let chain = filtration_chain(&basis, 3).unwrap();
            for w in chain.windows(2) {
                assert!(w[0].is_subspace_of(&w[1]).unwrap());
            }
            for l in 1..d {
                let a = build_comparison(m, n, d, l).unwrap();
                let b = build_comparison(m, n, d, l + 1).unwrap();
                assert!(a.is_subspace_of(&b).unwrap());
            }
        }
    }

    #[test]
    fn weights_within_l_roots() {
        for (m, n, d, l) in [(1, 3, 4, 2), (2, 2, 3, 2), (2, 1, 3, 2)] {
            let ctx = Context::new(m, n, d);
            let basis = SymPowerBasis::new(ctx);
            let top = torus_weight(
                highest_weight_line(m, n, d).coords().keys().next().unwrap(),
                m + n,
            );
            let s = build_filtration(m, n, d, l).unwrap();
            for row in s.basis().row_vecs() {
                for w in basis.vector(&row).weights() {
                    let excess: i64 = w.0.iter().zip(&top.0).map(|(a, b)| (a - b).max(0)).sum();
                    assert!(excess <= l as i64);
                }
            }
        }
    }

    #[test]
    fn leading_term_structure_m1() {
        // x_1⋯x_k(L^d) ≡ α L^{d-k} x_1(L)⋯x_k(L) modulo the (k-1)-st piece
        let (n, d) = (2, 4);
        let ops = sl_basis(n + 1);
        let line = highest_weight_line(1, n, 1);
        let basis = SymPowerBasis::new(Context::new(1, n, d));
        let picks: [&[usize]; 5] = [&[0], &[1, 3], &[2, 2], &[5, 1, 3], &[7, 4, 0]];
        for pick in picks {
            let k = pick.len();
            let mut u = highest_weight_line(1, n, d);
            let mut w = sym_pow(&line, d - k).unwrap();
            for &i in pick.iter().rev() {
                u = lie_act(&ops[i], &u).unwrap();
            }
            for &i in pick {
                w = sym_mul(&w, &lie_act(&ops[i], &line).unwrap()).unwrap();
            }
            let mut s = build_comparison(1, n, d, k - 1).unwrap();
            s.insert(&basis.coordinates(&w).unwrap()).unwrap();
            assert!(
                s.contains(&basis.coordinates(&u).unwrap()).unwrap(),
                "{pick:?}"
            );
        }
    }
}
