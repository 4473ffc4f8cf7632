//! The worked example on 𝔾(2,4): fifteen vectors spanning U_2(g)·L^d and
//! fifteen spanning L^{d-2}·Sym^2(g/p_L ⊗ L), recomputed from the operators
//! x = diag(0,1,-1,0), x1 = E31, x2 = E32, x3 = E41, x4 = E42 and checked
//! line by line against the printed values.
//!
//! Printed coefficients are symbolic in `d` with `a = d(d-1)`; they are
//! evaluated at the requested `d` before comparison.

use serde::Serialize;

use super::{build_comparison, filtration_chain, highest_weight_line};
use crate::error::{Error, Result};
use crate::exactla::{rat, subspace_compare, Comparison, ExactMatrix, Subspace};
use crate::plucker::{lie_act, sym_mul, sym_pow, Context, LieElement, ModuleVector, SymPowerBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    X,
    X1,
    X2,
    X3,
    X4,
}

impl Op {
    fn element(self) -> LieElement {
        match self {
            Op::X => {
                let mut m = ExactMatrix::zeros(4, 4);
                m[(1, 1)] = rat(1);
                m[(2, 2)] = rat(-1);
                LieElement::new(m).unwrap()
            }
            Op::X1 => LieElement::elementary(4, 3, 1),
            Op::X2 => LieElement::elementary(4, 3, 2),
            Op::X3 => LieElement::elementary(4, 4, 1),
            Op::X4 => LieElement::elementary(4, 4, 2),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Op::X => "x",
            Op::X1 => "x1",
            Op::X2 => "x2",
            Op::X3 => "x3",
            Op::X4 => "x4",
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Coef {
    One,
    D,
    /// d(d-1)
    A,
}

/// `sign · coef · L^{d-drop} · factors`
struct Term {
    sign: i64,
    coef: Coef,
    drop: usize,
    factors: &'static [[usize; 2]],
}

const fn t(sign: i64, coef: Coef, drop: usize, factors: &'static [[usize; 2]]) -> Term {
    Term {
        sign,
        coef,
        drop,
        factors,
    }
}

struct Line {
    ops: [Op; 2],
    printed: &'static [Term],
    typo: Option<&'static str>,
}

use Coef::{One, A, D};
use Op::{X, X1, X2, X3, X4};

const FILTRATION_LINES: [Line; 15] = [
    Line {
        ops: [X, X],
        printed: &[t(1, One, 2, &[[1, 2], [1, 2]])],
        typo: None,
    },
    Line {
        ops: [X2, X],
        printed: &[t(1, A, 2, &[[1, 2], [1, 3]]), t(1, D, 1, &[[1, 3]])],
        typo: None,
    },
    Line {
        ops: [X4, X],
        printed: &[t(1, A, 2, &[[1, 2], [1, 4]]), t(1, D, 1, &[[1, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X],
        printed: &[t(1, A, 2, &[[1, 2], [2, 3]]), t(-1, D, 1, &[[2, 3]])],
        typo: None,
    },
    Line {
        ops: [X3, X],
        printed: &[t(1, A, 2, &[[1, 2], [2, 4]]), t(-1, D, 1, &[[2, 4]])],
        typo: None,
    },
    Line {
        ops: [X2, X2],
        printed: &[t(1, A, 2, &[[1, 3], [1, 3]])],
        typo: None,
    },
    Line {
        ops: [X2, X4],
        printed: &[t(1, A, 2, &[[1, 3], [1, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X2],
        printed: &[t(1, A, 2, &[[1, 3], [2, 3]])],
        typo: None,
    },
    Line {
        ops: [X2, X3],
        printed: &[t(-1, A, 2, &[[1, 3], [2, 4]]), t(-1, D, 1, &[[3, 4]])],
        typo: Some("argument printed as l^D instead of L^d"),
    },
    Line {
        ops: [X4, X4],
        printed: &[t(1, One, 2, &[[1, 4], [1, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X4],
        printed: &[t(-1, A, 2, &[[1, 4], [2, 3]]), t(1, D, 1, &[[3, 4]])],
        typo: None,
    },
    Line {
        ops: [X3, X4],
        printed: &[t(-1, A, 2, &[[1, 4], [2, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X1],
        printed: &[t(1, A, 2, &[[2, 3], [2, 3]])],
        typo: None,
    },
    Line {
        ops: [X1, X3],
        printed: &[t(1, A, 2, &[[2, 3], [2, 4]])],
        typo: None,
    },
    Line {
        ops: [X3, X3],
        printed: &[t(1, A, 2, &[[2, 4], [2, 4]])],
        typo: None,
    },
];

const COMPARISON_LINES: [Line; 15] = [
    Line {
        ops: [X, X],
        printed: &[t(1, One, 2, &[[1, 2], [1, 2]])],
        typo: None,
    },
    Line {
        ops: [X2, X],
        printed: &[t(1, One, 2, &[[1, 2], [1, 3]])],
        typo: None,
    },
    Line {
        ops: [X4, X],
        printed: &[t(1, One, 2, &[[1, 2], [1, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X],
        printed: &[t(-1, One, 2, &[[1, 2], [2, 3]])],
        typo: None,
    },
    Line {
        ops: [X3, X],
        printed: &[t(-1, One, 2, &[[1, 2], [2, 4]])],
        typo: None,
    },
    Line {
        ops: [X2, X2],
        printed: &[t(1, One, 2, &[[1, 3], [1, 3]])],
        typo: None,
    },
    Line {
        ops: [X2, X4],
        printed: &[t(1, One, 2, &[[1, 3], [1, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X2],
        printed: &[t(-1, One, 2, &[[1, 3], [2, 3]])],
        typo: None,
    },
    Line {
        ops: [X2, X3],
        printed: &[t(-1, One, 2, &[[1, 3], [2, 4]])],
        typo: None,
    },
    Line {
        ops: [X4, X4],
        printed: &[t(-1, One, 2, &[[1, 4], [1, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X4],
        printed: &[t(-1, One, 2, &[[1, 4], [2, 3]])],
        typo: None,
    },
    Line {
        ops: [X3, X4],
        printed: &[t(-1, One, 2, &[[1, 4], [2, 4]])],
        typo: None,
    },
    Line {
        ops: [X1, X1],
        printed: &[t(1, One, 2, &[[2, 3], [2, 3]])],
        typo: Some("stray trailing factor `e` after e[23]^2"),
    },
    Line {
        ops: [X1, X3],
        printed: &[t(1, One, 2, &[[2, 3], [2, 4]])],
        typo: None,
    },
    Line {
        ops: [X3, X3],
        printed: &[t(1, One, 2, &[[2, 4], [2, 4]])],
        typo: None,
    },
];

/// Printed lines known to disagree with the computation, as
/// `(list, expression)`. Each is flagged in the report; anything flagged
/// outside this list is reported as undocumented.
pub const G24_PRINT_ERRATA: [(&str, &str, &str); 8] = [
    ("filtration", "x x(L^d)", "coefficient: printed 1, computed d^2"),
    ("filtration", "x1 x(L^d)", "sign: printed a L^{d-2}e[12]e[23] - d L^{d-1}e[23] = (a-d) L^{d-1}e[23], computed -d^2 L^{d-1}e[23]"),
    ("filtration", "x3 x(L^d)", "sign: printed (a-d) L^{d-1}e[24], computed -d^2 L^{d-1}e[24]"),
    ("filtration", "x1 x2(L^d)", "sign: printed +a, computed -a"),
    ("filtration", "x2 x3(L^d)", "typography only; value agrees"),
    ("filtration", "x4 x4(L^d)", "coefficient: printed 1, computed a"),
    ("comparison", "L^{d-2} x4(L) x4(L)", "sign: printed -e[14]^2, computed +e[14]^2"),
    ("comparison", "L^{d-2} x1(L) x1(L)", "typography only; value agrees"),
];

#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LineStatus {
    Exact,
    /// computed = ratio · printed
    Proportional {
        ratio: String,
    },
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct G24Entry {
    pub list: &'static str,
    pub expression: String,
    pub computed: ModuleVector,
    pub printed: ModuleVector,
    pub printed_text: String,
    pub status: LineStatus,
    pub typographic_note: Option<&'static str>,
}

impl G24Entry {
    pub fn is_discrepancy(&self) -> bool {
        self.status != LineStatus::Exact || self.typographic_note.is_some()
    }

    pub fn is_documented(&self) -> bool {
        G24_PRINT_ERRATA
            .iter()
            .any(|(list, expr, _)| *list == self.list && *expr == self.expression)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpanAgreement {
    pub filtration: bool,
    pub comparison: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct G24Report {
    pub d: usize,
    pub filtration_entries: Vec<G24Entry>,
    pub comparison_entries: Vec<G24Entry>,
    pub rank_filtration_list: usize,
    pub rank_comparison_list: usize,
    /// The restricted operator set {x, x1..x4} generates the same U_2 as all of sl_4.
    pub restricted_operators_agree: bool,
    pub comparison_list_matches_builder: bool,
    pub verdict: Comparison,
    pub spans_agree_with_printed: SpanAgreement,
    pub printed_discrepancies: Vec<(String, String)>,
    pub undocumented_discrepancies: Vec<String>,
}

impl G24Report {
    pub fn computed_filtration_basis(&self) -> Vec<&ModuleVector> {
        self.filtration_entries
            .iter()
            .map(|e| &e.computed)
            .collect()
    }

    pub fn computed_comparison_basis(&self) -> Vec<&ModuleVector> {
        self.comparison_entries
            .iter()
            .map(|e| &e.computed)
            .collect()
    }

    /// Ranks are 15, the spaces differ, and every flagged line is documented.
    pub fn structural_claims_hold(&self) -> bool {
        self.rank_filtration_list == 15
            && self.rank_comparison_list == 15
            && self.verdict.verdict != crate::exactla::Verdict::Equal
            && self.restricted_operators_agree
            && self.comparison_list_matches_builder
            && self.undocumented_discrepancies.is_empty()
    }
}

fn eval_printed(d: usize, terms: &[Term]) -> Result<ModuleVector> {
    let line = highest_weight_line(2, 2, 1);
    let ctx = Context::new(2, 2, d);
    let di = d as i64;
    let mut out = ModuleVector::zero(ctx);
    for term in terms {
        let c = match term.coef {
            One => 1,
            D => di,
            A => di * (di - 1),
        } * term.sign;
        let mut v = sym_pow(&line, d - term.drop)?;
        for f in term.factors {
            let e = ModuleVector::from_subsets(Context::new(2, 2, 1), &[&f[..]], rat(1))?;
            v = sym_mul(&v, &e)?;
        }
        out = out.checked_add(&v.scale(&rat(c)))?;
    }
    Ok(out)
}

fn printed_text(terms: &[Term]) -> String {
    let mut s = String::new();
    for (i, term) in terms.iter().enumerate() {
        let sign = if term.sign < 0 { "-" } else { "+" };
        if i > 0 || term.sign < 0 {
            s.push_str(if i == 0 {
                sign
            } else if term.sign < 0 {
                " - "
            } else {
                " + "
            });
        }
        match term.coef {
            One => {}
            D => s.push_str("d "),
            A => s.push_str("a "),
        }
        s.push_str(&format!("L^{{d-{}}}", term.drop));
        for f in term.factors {
            s.push_str(&format!("e[{}{}]", f[0], f[1]));
        }
    }
    s
}

fn classify(computed: &ModuleVector, printed: &ModuleVector) -> LineStatus {
    if computed == printed {
        LineStatus::Exact
    } else if let Some(r) = computed.ratio_to(printed) {
        LineStatus::Proportional {
            ratio: crate::exactla::fmt_rational(&r),
        }
    } else {
        LineStatus::Mismatch
    }
}

fn span_of(basis: &SymPowerBasis, vs: &[&ModuleVector]) -> Result<Subspace> {
    let mut s = Subspace::zero(basis.dim());
    for v in vs {
        s.insert(&basis.coordinates(v)?)?;
    }
    Ok(s)
}

pub fn reproduce_g24(d: usize) -> Result<G24Report> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "the example needs d >= 2 (got {d})"
        )));
    }
    let ctx = Context::new(2, 2, d);
    let basis = SymPowerBasis::new(ctx);
    let top = highest_weight_line(2, 2, d);
    let line = highest_weight_line(2, 2, 1);

    let mut filtration_entries = Vec::new();
    for l in &FILTRATION_LINES {
        let mut v = top.clone();
        for op in l.ops.iter().rev() {
            v = lie_act(&op.element(), &v)?;
        }
        let printed = eval_printed(d, l.printed)?;
        filtration_entries.push(G24Entry {
            list: "filtration",
            expression: format!("{} {}(L^d)", l.ops[0].name(), l.ops[1].name()),
            status: classify(&v, &printed),
            computed: v,
            printed,
            printed_text: printed_text(l.printed),
            typographic_note: l.typo,
        });
    }

    let mut comparison_entries = Vec::new();
    for l in &COMPARISON_LINES {
        let mut v = sym_pow(&line, d - 2)?;
        for op in &l.ops {
            v = sym_mul(&v, &lie_act(&op.element(), &line)?)?;
        }
        let printed = eval_printed(d, l.printed)?;
        comparison_entries.push(G24Entry {
            list: "comparison",
            expression: format!("L^{{d-2}} {}(L) {}(L)", l.ops[0].name(), l.ops[1].name()),
            status: classify(&v, &printed),
            computed: v,
            printed,
            printed_text: printed_text(l.printed),
            typographic_note: l.typo,
        });
    }

    let filt_list = span_of(
        &basis,
        &filtration_entries
            .iter()
            .map(|e| &e.computed)
            .collect::<Vec<_>>(),
    )?;
    let comp_list = span_of(
        &basis,
        &comparison_entries
            .iter()
            .map(|e| &e.computed)
            .collect::<Vec<_>>(),
    )?;
    let filt_printed = span_of(
        &basis,
        &filtration_entries
            .iter()
            .map(|e| &e.printed)
            .collect::<Vec<_>>(),
    )?;
    let comp_printed = span_of(
        &basis,
        &comparison_entries
            .iter()
            .map(|e| &e.printed)
            .collect::<Vec<_>>(),
    )?;

    // U_2 from the restricted operators: all words of length <= 2 on L^d.
    let restricted_ops = [X, X1, X2, X3, X4];
    let mut restricted = Subspace::zero(basis.dim());
    restricted.insert(&basis.coordinates(&top)?)?;
    for a in restricted_ops {
        let once = lie_act(&a.element(), &top)?;
        restricted.insert(&basis.coordinates(&once)?)?;
        for b in restricted_ops {
            restricted.insert(&basis.coordinates(&lie_act(&b.element(), &once)?)?)?;
        }
    }
    let full = filtration_chain(&basis, 2)?.pop().unwrap();
    let builder_comparison = build_comparison(2, 2, d, 2)?;

    let mut printed_discrepancies = Vec::new();
    let mut undocumented = Vec::new();
    for e in filtration_entries.iter().chain(&comparison_entries) {
        if e.is_discrepancy() {
            printed_discrepancies.push((
                format!("{} = {}", e.expression, e.printed_text),
                format!("{} = {}", e.expression, e.computed),
            ));
            if !e.is_documented() {
                undocumented.push(format!("{}: {}", e.list, e.expression));
            }
        } else if e.is_documented() {
            undocumented.push(format!(
                "{}: {} (listed as erratum but agrees)",
                e.list, e.expression
            ));
        }
    }

    Ok(G24Report {
        d,
        rank_filtration_list: filt_list.dim(),
        rank_comparison_list: comp_list.dim(),
        restricted_operators_agree: restricted == full && filt_list == full,
        comparison_list_matches_builder: comp_list == builder_comparison,
        verdict: subspace_compare(&filt_list, &comp_list)?,
        spans_agree_with_printed: SpanAgreement {
            filtration: filt_printed == filt_list,
            comparison: comp_printed == comp_list,
        },
        filtration_entries,
        comparison_entries,
        printed_discrepancies,
        undocumented_discrepancies: undocumented,
    })
}
