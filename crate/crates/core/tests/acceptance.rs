//! End-to-end acceptance checks. Each test prints one PASS/FAIL line with
//! its elapsed time and fails if the check or its time budget fails.

use std::process::Command;
use std::time::{Duration, Instant};

use canfilt::exactla::{rat, subspace_compare, Verdict};
use canfilt::filtration::{
    build_comparison, build_filtration, filtration_report, reproduce_g24, LineStatus,
};
use canfilt::koszul::{
    d_squared_zero, derivative_formula_check, graded_homology, incidence_generators, jet_numerics,
    line_cohomology, pushforward_report, regularity_check, Chart, FreeModuleMap, RegularityMethod,
};
use canfilt::multipoly::{MultiPoly, PolyRing};
use canfilt::plucker::{Context, ModuleVector, SymPowerBasis, TorusWeight};
use canfilt::reptheory::{
    aut_rank, cauchy_check, decompose, highest_weight_vectors, minor_hwv, schur_dim, Algebra,
    IrrepLabel, Partition, TargetModule,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Exact binomial coefficient by the multiplicative formula.
fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as usize
}

fn verdict(id: u32, name: &str, ok: bool, start: Instant, budget_s: u64, detail: String) {
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(budget_s);
    let pass = ok && in_time;
    println!(
        "{} criterion {id} ({name}): {detail}; {:.2}s of {budget_s}s",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(ok, "criterion {id} check failed: {detail}");
    assert!(in_time, "criterion {id} over its time budget: {elapsed:?}");
}

#[test]
fn criterion_01_projective_space_equality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=3 {
        for d in 2..=6 {
            for l in 1..d {
                cases += 1;
                let f = build_filtration(1, n, d, l).unwrap();
                let c = build_comparison(1, n, d, l).unwrap();
                let want = choose(l + n, n);
                if f != c || f.dim() != want {
                    failures.push(format!(
                        "n={n} d={d} l={l}: dims {}/{} want {want}",
                        f.dim(),
                        c.dim()
                    ));
                }
            }
        }
    }
    verdict(
        1,
        "filtration equals comparison on projective space",
        failures.is_empty(),
        start,
        60,
        format!("{cases} cases, failures {failures:?}"),
    );
}

#[test]
fn criterion_02_first_order_equality() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            for d in 1..=4 {
                let f = build_filtration(m, n, d, 1).unwrap();
                let c = build_comparison(m, n, d, 1).unwrap();
                if f != c || f.dim() != m * n + 1 {
                    failures.push(format!("m={m} n={n} d={d}: dims {}/{}", f.dim(), c.dim()));
                }
            }
        }
    }
    verdict(
        2,
        "first-order filtration equality",
        failures.is_empty(),
        start,
        60,
        format!("36 cases, failures {failures:?}"),
    );
}

#[test]
fn criterion_03_g24_example() {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for d in 2..=4 {
        let r = reproduce_g24(d).unwrap();
        let want = choose(4 + 2, 4);
        ok &= r.rank_filtration_list == want && r.rank_comparison_list == want;
        ok &= r.verdict.verdict != Verdict::Equal;
        // independent recomputation of both spans
        let direct = subspace_compare(
            &build_filtration(2, 2, d, 2).unwrap(),
            &build_comparison(2, 2, d, 2).unwrap(),
        )
        .unwrap();
        ok &= direct.dim_a == want && direct.dim_b == want && direct.verdict != Verdict::Equal;
        let entries = r.filtration_entries.iter().chain(&r.comparison_entries);
        let mut flagged = 0;
        for e in entries {
            if e.status != LineStatus::Exact || e.typographic_note.is_some() {
                flagged += 1;
                ok &= e.is_documented();
            }
        }
        ok &= r.undocumented_discrepancies.is_empty();
        notes.push(format!(
            "d={d}: ranks {}/{}, verdict {:?}, {flagged} flagged lines",
            r.rank_filtration_list, r.rank_comparison_list, r.verdict.verdict
        ));
    }
    verdict(3, "G(2,4) worked example", ok, start, 30, notes.join("; "));
}

#[test]
fn criterion_04_sym_wedge_g24() {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in 1..=6 {
        let r = decompose(
            TargetModule::SymWedge { m: 2, n: 2, d },
            Algebra::Sl(4),
            usize::MAX,
        )
        .unwrap();
        let labels: Vec<IrrepLabel> = r.components.iter().map(|c| c.label.clone()).collect();
        let want: Vec<IrrepLabel> = (0..=d / 2)
            .map(|i| IrrepLabel::sl(4, vec![0, (d - 2 * i) as u32, 0]))
            .collect();
        let dims: usize = r
            .components
            .iter()
            .map(|c| c.multiplicity * c.dimension)
            .sum();
        ok &= r.multiplicity_free
            && labels == want
            && dims == choose(6 + d - 1, d)
            && r.total_dim == dims;
        ok &= aut_rank(d).unwrap() == d / 2 + 1;
        notes.push(format!("d={d}: {} components", labels.len()));
    }
    // the invariant quadric is the Plücker relation
    let ctx = Context::new(2, 2, 2);
    let f = [
        (&[1usize, 2][..], &[3usize, 4][..], 1),
        (&[1, 3], &[2, 4], -1),
        (&[1, 4], &[2, 3], 1),
    ]
    .iter()
    .map(|(a, b, c)| ModuleVector::from_subsets(ctx, &[a, b], rat(*c)).unwrap())
    .reduce(|x, y| x.checked_add(&y).unwrap())
    .unwrap();
    let hw = highest_weight_vectors(
        TargetModule::SymWedge { m: 2, n: 2, d: 2 },
        Algebra::Sl(4),
        usize::MAX,
    )
    .unwrap();
    let trivial = hw
        .iter()
        .find(|h| h.label == IrrepLabel::sl(4, vec![0, 0, 0]))
        .unwrap();
    let basis = SymPowerBasis::new(ctx);
    let g = basis.vector(trivial.space.basis().row(0));
    let proportional = trivial.space.dim() == 1 && g.ratio_to(&f).is_some();
    ok &= proportional;
    notes.push(format!("invariant proportional to f: {proportional}"));
    verdict(
        4,
        "Sym^d of the Plücker space",
        ok,
        start,
        120,
        notes.join("; "),
    );
}

#[test]
fn criterion_05_sym_hom_parity() {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for k in 1..=5 {
        let r = decompose(
            TargetModule::SymHom { m: 2, n: 2, k },
            Algebra::SlPair(2, 2),
            usize::MAX,
        )
        .unwrap();
        let p = k % 2;
        let mut want: Vec<IrrepLabel> = (0..=k / 2)
            .map(|j| IrrepLabel::pair(vec![(2 * j + p) as u32], vec![(2 * j + p) as u32]))
            .collect();
        want.sort();
        let mut got: Vec<IrrepLabel> = r.components.iter().map(|c| c.label.clone()).collect();
        got.sort();
        let dims: usize = r
            .components
            .iter()
            .map(|c| c.multiplicity * c.dimension)
            .sum();
        ok &= got == want && dims == choose(4 + k - 1, k) && r.multiplicity_free;
        notes.push(format!("k={k}: {} components", got.len()));
    }
    verdict(
        5,
        "Sym^k(W* ⊗ V/W) for m = n = 2",
        ok,
        start,
        60,
        notes.join("; "),
    );
}

#[test]
fn criterion_06_cauchy() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            for k in 1..=4 {
                let r = cauchy_check(m, n, k, usize::MAX).unwrap();
                // independent: ambient dim by binomial, pairing sum through hook-content
                let ambient = choose(m * n + k - 1, k);
                let pairing: usize = Partition::all(k as u32)
                    .iter()
                    .map(|l| schur_dim(l, m) * schur_dim(l, n))
                    .sum();
                if !(r.all_agree
                    && r.ambient_dim == ambient
                    && r.schur_pairing_sum == pairing
                    && r.decomposition_sum == ambient)
                {
                    failures.push(format!("m={m} n={n} k={k}"));
                }
            }
        }
    }
    verdict(
        6,
        "three-way Cauchy dimension count",
        failures.is_empty(),
        start,
        120,
        format!("36 cases, failures {failures:?}"),
    );
}

#[test]
fn criterion_07_minors() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            for i in 1..=m.min(n) {
                cases += 1;
                let r = minor_hwv(m, n, i).unwrap();
                let mut w = vec![0i64; m + n];
                w[m - i..m].fill(-1);
                w[m..m + i].fill(1);
                if !(r.verified && r.annihilated && r.weight == TorusWeight(w)) {
                    failures.push(format!("m={m} n={n} i={i}"));
                }
            }
        }
    }
    verdict(
        7,
        "corner minors are highest-weight vectors",
        failures.is_empty(),
        start,
        30,
        format!("{cases} minors, failures {failures:?}"),
    );
}

fn random_row(rng: &mut StdRng, ring: &std::sync::Arc<PolyRing>, r: usize) -> Vec<MultiPoly> {
    (0..r)
        .map(|_| {
            let terms: Vec<(Vec<u32>, canfilt::exactla::Rational)> = (0..rng.gen_range(1..4))
                .map(|_| {
                    let e = (0..ring.nvars()).map(|_| rng.gen_range(0..3)).collect();
                    (e, rat(rng.gen_range(-5..6)))
                })
                .collect();
            MultiPoly::from_terms(ring, terms)
        })
        .collect()
}

#[test]
fn criterion_08_koszul_suite() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(8);
    let ring = PolyRing::new(&["x", "y", "z"]).unwrap();
    let mut notes = Vec::new();

    let d_sq = (0..20).all(|i| {
        d_squared_zero(&FreeModuleMap::row(&random_row(&mut rng, &ring, 1 + i % 4)).unwrap())
            .unwrap()
    });
    notes.push(format!("d²=0 on 20 maps: {d_sq}"));

    let formula = (0..=6).all(|d| (0..=d).all(|k| derivative_formula_check(d, k)));
    notes.push(format!("derivative formula: {formula}"));

    let mut elimination = true;
    for d in 2..=6 {
        for l in 1..d {
            for chart in [Chart::Zero, Chart::One] {
                let g = incidence_generators(d, l, chart).unwrap();
                elimination &= regularity_check(&g, RegularityMethod::Elimination, None)
                    .unwrap()
                    .success();
            }
        }
    }
    notes.push(format!("elimination on both charts: {elimination}"));

    let mut homology = true;
    let mut orders_tested = 0;
    for d in 2..=4 {
        for l in 1..d {
            let g = incidence_generators(d, l, Chart::Zero).unwrap();
            let mut orders = vec![g.descending_order()];
            for _ in 0..3 {
                let mut o: Vec<usize> = (0..=l).collect();
                o.shuffle(&mut rng);
                orders.push(o);
            }
            for o in orders {
                orders_tested += 1;
                homology &= graded_homology(&g, &o, 2 * d as u32)
                    .unwrap()
                    .positive_homology_vanishes;
            }
        }
    }
    notes.push(format!(
        "homology vanishes for {orders_tested} orders: {homology}"
    ));
    verdict(
        8,
        "Koszul suite",
        d_sq && formula && elimination && homology,
        start,
        300,
        notes.join("; "),
    );
}

#[test]
fn criterion_09_pushforward_and_jets() {
    let start = Instant::now();
    let mut ok = true;
    let mut vanishing = 0;
    for d in 2..=5 {
        for l in 1..d {
            for j in 0..=l + 1 {
                let r = pushforward_report(d, l, j).unwrap();
                let e = j * (d - l);
                let wedge = choose(l + 1, j) as u64;
                // direct images of a sum of copies of O(-e)
                let (h0, h1) = ((if e == 0 { 1 } else { 0 }), e.saturating_sub(1) as u64);
                ok &= r.agree && r.r0_computed == h0 * wedge && r.r1_computed == h1 * wedge;
                ok &= line_cohomology(-(e as i64)).h1 == h1;
                if e < 2 {
                    vanishing += 1;
                    ok &=
                        r.vanishing_clause && r.r1_computed == 0 && (j == 0 || r.r0_computed == 0);
                }
            }
        }
    }
    for n in 1..=6 {
        for l in 0..=6 {
            let r = jet_numerics(1, n, l + 2, l, 1).unwrap();
            let sum: usize = (0..=l).map(|i| choose(n + i - 1, i)).sum();
            let s = r.splitting.as_ref().unwrap();
            ok &= r.telescoping_holds
                && sum == choose(n + l, n)
                && s.summands == choose(n + l, n)
                && s.twist == 2;
        }
    }
    verdict(
        9,
        "pushforward ranks and jet splitting",
        ok,
        start,
        10,
        format!("{vanishing} cases in the vanishing clause"),
    );
}

#[test]
fn criterion_10_cli_determinism() {
    let start = Instant::now();
    let invocations: &[&[&str]] = &[
        &["filtration", "--m", "2", "--n", "2", "--d", "3", "--l", "2"],
        &["compare", "--m", "1", "--n", "2", "--d", "4", "--l", "2"],
        &["reproduce-g24", "--d", "3"],
        &[
            "decompose",
            "--module",
            "sym-wedge",
            "--m",
            "2",
            "--n",
            "2",
            "--d",
            "3",
        ],
        &[
            "decompose",
            "--module",
            "sym-hom",
            "--m",
            "2",
            "--n",
            "2",
            "--k",
            "3",
        ],
        &["cauchy-check", "--m", "2", "--n", "3", "--k", "2"],
        &["minor-hwv", "--m", "3", "--n", "2", "--i", "2"],
        &["aut-rank", "--d", "1..4"],
        &[
            "koszul-check",
            "--d",
            "3",
            "--l",
            "2",
            "--permutations",
            "2",
        ],
        &["incidence", "--d", "3", "--l", "2", "--chart", "0..1"],
        &["pushforward", "--d", "3", "--l", "1", "--j", "0..2"],
        &["jets", "--m", "1", "--n", "2", "--d", "4", "--l", "2"],
        &["cohomology", "--k", "-4"],
    ];
    let exe = env!("CARGO_BIN_EXE_canfilt");
    let mut failures = Vec::new();
    for args in invocations {
        let a = Command::new(exe).args(*args).output().unwrap();
        let b = Command::new(exe).args(*args).output().unwrap();
        let parses = serde_json::from_slice::<serde_json::Value>(&a.stdout).is_ok();
        if a.stdout != b.stdout || !a.status.success() || !parses {
            failures.push(args[0].to_string());
        }
    }
    verdict(
        10,
        "byte-identical CLI output",
        failures.is_empty(),
        start,
        120,
        format!("{} invocations, failures {failures:?}", invocations.len()),
    );
}

#[test]
fn filtration_reports_hold_on_the_acceptance_grid() {
    for (m, n, d, l) in [(1, 3, 5, 3), (2, 1, 3, 1), (3, 2, 2, 1)] {
        assert!(filtration_report(m, n, d, l).unwrap().predictions_hold());
    }
}
