//! The acceptance suite as a library: ten independent checks, each
//! producing a [`CriterionReport`] with a pass/fail verdict, a one-line
//! detail, clause-by-clause notes, and an artifact table for the report
//! bundle. The integration tests and the `report` subcommand both run
//! these; neither weakens them.

use lofree::count::{assemble_from_table, free_count, ratio_f64, theta};
use lofree::explore::{bfs_spheres, dual_oracle_check, empirical_z_eff, BfsOptions};
use lofree::spectral::{
    dominant_eigenvalue, eigen_closed_form_1d, lambda1_2d, solve_p1, transfer_2d_growth,
    TransferOperator,
};
use lofree::{CanonicalAlgo, Canonicalizer, Flavor, GroupSpec, Word};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::CliError;
use crate::output::{Cell, Table};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub id: u8,
    /// Short machine-friendly name used in bundle filenames.
    pub slug: &'static str,
    pub title: &'static str,
    pub passed: bool,
    /// One line suitable for a summary table.
    pub detail: String,
    /// Clause-by-clause findings.
    pub notes: Vec<String>,
    /// Artifact rows for the bundle CSV.
    pub table: Table,
}

impl CriterionReport {
    /// The single pass/fail line printed per criterion.
    pub fn line(&self) -> String {
        format!(
            "criterion {:02} [{}] {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail
        )
    }
}

fn opts(algo: CanonicalAlgo) -> BfsOptions {
    BfsOptions {
        cap: 10_000_000,
        algo,
    }
}

/// Criterion 1: 1D sphere sizes equal assembled counts exactly for
/// n in {2,3,4}, radius up to 7, with pinned spot values at n = 3.
pub fn criterion_01(quick: bool) -> Result<CriterionReport, CliError> {
    let mu_hi: u64 = if quick { 5 } else { 7 };
    let mut table = Table::new(["flavor", "n", "mu", "sphere_size", "assembled", "match"]);
    let mut mismatches = 0u64;
    let mut rows = 0u64;
    let mut spot_ok = true;
    for n in 2u16..=4 {
        let spec = GroupSpec::new(Flavor::Lf1, n)?;
        let profile = bfs_spheres(&spec, mu_hi, &opts(CanonicalAlgo::Rewrite))?;
        let counts = theta(Flavor::Lf1, n, mu_hi.saturating_sub(1) as u32)?;
        for (mu, &sphere) in profile.sizes.iter().enumerate() {
            let assembled = assemble_from_table(&counts, mu as u64, true)?;
            let agree = BigUint::from(sphere) == assembled;
            if !agree {
                mismatches += 1;
            }
            if n == 3 && mu == 1 {
                spot_ok &= sphere == 6;
            }
            if n == 3 && mu == 2 {
                spot_ok &= sphere == 26;
            }
            rows += 1;
            table.push(vec![
                Cell::text("lf1"),
                Cell::UInt(n as u64),
                Cell::UInt(mu as u64),
                Cell::UInt(sphere),
                Cell::Big(assembled),
                Cell::Bool(agree),
            ]);
        }
    }
    let passed = mismatches == 0 && spot_ok;
    Ok(CriterionReport {
        id: 1,
        slug: "oracle_1d",
        title: "1D spheres equal assembled counts",
        passed,
        detail: format!(
            "{rows} spheres over n=2..4, mu<={mu_hi}: {mismatches} mismatches; spot values 6/26 {}",
            if spot_ok { "confirmed" } else { "WRONG" }
        ),
        notes: vec![format!(
            "walk radius {mu_hi}{}",
            if quick { " (quick mode)" } else { "" }
        )],
        table,
    })
}

/// Criterion 2: the two canonicalization algorithms agree on a large
/// seeded sample of random words (both flavors, n up to 6, length up to
/// 30) and on every BFS layer of criterion 1.
pub fn criterion_02(quick: bool, seed: u64) -> Result<CriterionReport, CliError> {
    let words_per_combo: u64 = if quick { 1_000 } else { 10_000 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut table = Table::new(["kind", "flavor", "n", "limit", "checked", "mismatches"]);
    let mut total_words = 0u64;
    let mut total_mismatches = 0u64;
    for flavor in [Flavor::Lf1, Flavor::Lf2] {
        for n in 2u16..=6 {
            let spec = GroupSpec::new(flavor, n)?;
            let canon = Canonicalizer::new(spec);
            let gens = spec.signed_gens();
            let mut mismatches = 0u64;
            for _ in 0..words_per_combo {
                let len = rng.gen_range(0..=30usize);
                let word = Word(
                    (0..len)
                        .map(|_| gens[rng.gen_range(0..gens.len())])
                        .collect(),
                );
                if canon.rewrite(&word)? != canon.stack(&word)? {
                    mismatches += 1;
                }
            }
            total_words += words_per_combo;
            total_mismatches += mismatches;
            table.push(vec![
                Cell::text("random_words"),
                Cell::text(flavor.name()),
                Cell::UInt(n as u64),
                Cell::UInt(30),
                Cell::UInt(words_per_combo),
                Cell::UInt(mismatches),
            ]);
        }
    }
    let mu_hi: u64 = if quick { 4 } else { 7 };
    let mut frontier_mismatches = 0u64;
    for n in 2u16..=4 {
        let spec = GroupSpec::new(Flavor::Lf1, n)?;
        let report = dual_oracle_check(&spec, mu_hi, &opts(CanonicalAlgo::Rewrite))?;
        frontier_mismatches += report.mismatched_radii;
        table.push(vec![
            Cell::text("bfs_layers"),
            Cell::text("lf1"),
            Cell::UInt(n as u64),
            Cell::UInt(mu_hi),
            Cell::UInt(report.compared.iter().sum()),
            Cell::UInt(report.mismatched_radii),
        ]);
    }
    let enough = quick || total_words >= 100_000;
    let passed = total_mismatches == 0 && frontier_mismatches == 0 && enough;
    Ok(CriterionReport {
        id: 2,
        slug: "dual_oracle",
        title: "rewrite and stack canonicalizers agree",
        passed,
        detail: format!(
            "{total_words} random words (seed {seed}) + lf1 layers to mu={mu_hi}: \
             {total_mismatches} word mismatches, {frontier_mismatches} layer mismatches"
        ),
        notes: Vec::new(),
        table,
    })
}

/// Criterion 3: the descending-run recursion reproduces the hand-counted
/// start of the n = 3 series and the trivial length-1 counts.
pub fn criterion_03() -> Result<CriterionReport, CliError> {
    let mut table = Table::new(["kind", "n", "m", "value", "expected", "match"]);
    let mut passed = true;
    let series = theta(Flavor::Lf1, 3, 3)?;
    for (m, expected) in [(0u32, 3u64), (1, 5), (2, 8), (3, 13)] {
        let got = series.total(m);
        let agree = *got == BigUint::from(expected);
        passed &= agree;
        table.push(vec![
            Cell::text("theta3_series"),
            Cell::UInt(3),
            Cell::UInt(m as u64),
            Cell::Big(got.clone()),
            Cell::UInt(expected),
            Cell::Bool(agree),
        ]);
    }
    for n in 2u16..=10 {
        let got = theta(Flavor::Lf1, n, 0)?.total(0).clone();
        let agree = got == BigUint::from(n);
        passed &= agree;
        table.push(vec![
            Cell::text("theta_n_start"),
            Cell::UInt(n as u64),
            Cell::UInt(0),
            Cell::Big(got),
            Cell::UInt(n as u64),
            Cell::Bool(agree),
        ]);
    }
    Ok(CriterionReport {
        id: 3,
        slug: "theta_truth",
        title: "descending-run recursion ground truth",
        passed,
        detail: "theta_3 starts (3,5,8,13); theta_n(0) = n for n=2..10".into(),
        notes: Vec::new(),
        table,
    })
}

/// Criterion 4: the free baselines grow exactly as the closed forms say.
pub fn criterion_04() -> Result<CriterionReport, CliError> {
    let mut table = Table::new(["flavor", "n", "mu", "sphere_size", "closed_form", "match"]);
    let mut passed = true;
    for (flavor, n, mu_hi) in [(Flavor::Free1, 3u16, 6u64), (Flavor::Free2, 2, 3)] {
        let spec = GroupSpec::new(flavor, n)?;
        let profile = bfs_spheres(&spec, mu_hi, &opts(CanonicalAlgo::Rewrite))?;
        for (mu, &sphere) in profile.sizes.iter().enumerate() {
            let closed = free_count(flavor, n, mu as u64)?;
            let agree = BigUint::from(sphere) == closed;
            passed &= agree;
            table.push(vec![
                Cell::text(flavor.name()),
                Cell::UInt(n as u64),
                Cell::UInt(mu as u64),
                Cell::UInt(sphere),
                Cell::Big(closed),
                Cell::Bool(agree),
            ]);
        }
    }
    Ok(CriterionReport {
        id: 4,
        slug: "free_baselines",
        title: "free-group spheres match closed forms",
        passed,
        detail: "free1 n=3 mu<=6 equals 6*5^(mu-1); free2 n=2 mu<=3 equals 16*15^(mu-1)".into(),
        notes: Vec::new(),
        table,
    })
}

/// The radii at which criterion 5 samples the exact-count growth ratio.
/// The first entry is the pinned clause radius; the rest document the
/// approach to the limit.
pub const C5_MU_SWEEP: [u64; 4] = [60, 120, 250, 500];

/// Criterion 5: the 1D growth constant — `(1 + 2*lambda)/7` near 1 at
/// n = 200, and the exact assembled-count ratio near 7 at mu = 60.
///
/// The mu = 60 clause is implemented exactly as stated, and it fails: the
/// measured ratio is 11.406 (verified by an independent exact-arithmetic
/// reimplementation). At n = 200 the subdominant spectral ratio is about
/// 0.99903, so the transient has barely decayed by mu = 60 — the ratio
/// does converge to 1 + 2*lambda = 6.99807, but only at radii in the
/// hundreds (7.15 by mu = 500, 7.0004 by mu = 3000). The sweep rows in
/// the artifact table record that approach; the clause itself is kept
/// faithful rather than moved to a radius where it would pass.
pub fn criterion_05() -> Result<CriterionReport, CliError> {
    let op = TransferOperator::<f64>::new(Flavor::Lf1, 200)?;
    let spectral = dominant_eigenvalue(&op, 1e-12, 500_000)?;
    let seven = (1.0 + 2.0 * spectral.lambda) / 7.0;
    let clause_spectral = (seven - 1.0).abs() <= 0.03;
    let mu_hi = *C5_MU_SWEEP.last().expect("sweep is nonempty");
    let counts = theta(Flavor::Lf1, 200, mu_hi as u32)?;
    let mut sweep = Vec::new();
    for mu in C5_MU_SWEEP {
        let v = assemble_from_table(&counts, mu, true)?;
        let v_next = assemble_from_table(&counts, mu + 1, true)?;
        sweep.push((mu, ratio_f64(&v_next, &v)));
    }
    let ratio60 = sweep[0].1;
    let clause_counts = (ratio60 / 7.0 - 1.0).abs() <= 0.03;
    let mut table = Table::new(["quantity", "value"]);
    for (name, value) in [
        ("lambda_n200".to_string(), spectral.lambda),
        ("one_plus_two_lambda_over_7".to_string(), seven),
    ] {
        table.push(vec![Cell::text(name), Cell::Float(value)]);
    }
    for (mu, r) in &sweep {
        table.push(vec![
            Cell::text(format!("v_ratio_mu{mu}")),
            Cell::Float(*r),
        ]);
        table.push(vec![
            Cell::text(format!("v_ratio_mu{mu}_over_7")),
            Cell::Float(*r / 7.0),
        ]);
    }
    Ok(CriterionReport {
        id: 5,
        slug: "growth_seven",
        title: "1D growth approaches the 7 law",
        passed: clause_spectral && clause_counts,
        detail: format!(
            "(1+2*lambda)/7 = {:.6}; V(61)/V(60) = {:.6} (target 7 within 3%)",
            seven, ratio60
        ),
        notes: vec![
            format!("spectral clause within 3%: {clause_spectral}"),
            format!("exact-count clause at mu = 60 within 3%: {clause_counts}"),
            format!(
                "ratio sweep over mu = 60, 120, 250, 500: {:.4}, {:.4}, {:.4}, {:.4} — \
                 converging toward {:.5}, inside 3% from mu about 400 on",
                sweep[0].1,
                sweep[1].1,
                sweep[2].1,
                sweep[3].1,
                1.0 + 2.0 * spectral.lambda
            ),
        ],
        table,
    })
}

/// Criterion 6: exact eigenvalues at small n, the closed-form values, and
/// the strictly shrinking positive gap between them.
pub fn criterion_06() -> Result<CriterionReport, CliError> {
    let mut table = Table::new(["n", "lambda_exact", "lambda_closed", "gap"]);
    let mut notes = Vec::new();
    let exact = |n: u16| -> Result<f64, CliError> {
        let op = TransferOperator::<f64>::new(Flavor::Lf1, n)?;
        Ok(dominant_eigenvalue(&op, 1e-12, 500_000)?.lambda)
    };
    let golden = 0.5 * (1.0 + 5.0f64.sqrt());
    let e3 = exact(3)?;
    let e4 = exact(4)?;
    let clause_exact = (e3 - golden).abs() <= 1e-6 && (e4 - 2.0).abs() <= 1e-6;
    notes.push(format!(
        "exact: lambda(3) = {e3:.10} vs golden ratio, lambda(4) = {e4:.10} vs 2: {clause_exact}"
    ));
    let c3 = eigen_closed_form_1d::<f64>(3, 1)?.lambda;
    let c5 = eigen_closed_form_1d::<f64>(5, 1)?.lambda;
    let clause_closed = (c3 - 1.0).abs() <= 1e-9 && (c5 - 2.0).abs() <= 1e-9;
    notes.push(format!(
        "closed form: (n=3,k=1) = {c3:.10}, (n=5,k=1) = {c5:.10}: {clause_closed}"
    ));
    let mut gaps = Vec::new();
    for n in [3u16, 4, 5, 10, 50] {
        let e = exact(n)?;
        let c = eigen_closed_form_1d::<f64>(n, 1)?.lambda;
        if matches!(n, 5 | 10 | 50) {
            gaps.push(e - c);
        }
        table.push(vec![
            Cell::UInt(n as u64),
            Cell::Float(e),
            Cell::Float(c),
            Cell::Float(e - c),
        ]);
    }
    let clause_gap = gaps.iter().all(|g| *g > 0.0) && gaps[0] > gaps[1] && gaps[1] > gaps[2];
    notes.push(format!(
        "gaps at n = 5, 10, 50: {:.6e} > {:.6e} > {:.6e}, all positive: {clause_gap}",
        gaps[0], gaps[1], gaps[2]
    ));
    Ok(CriterionReport {
        id: 6,
        slug: "spectral_1d",
        title: "1D exact vs closed-form spectrum",
        passed: clause_exact && clause_closed && clause_gap,
        detail: format!(
            "lambda(3) = {e3:.7}, lambda(4) = {e4:.7}; closed (3,1) = {c3:.3}, (5,1) = {c5:.3}; \
             gap shrinks over n = 5, 10, 50"
        ),
        notes,
        table,
    })
}

/// Criterion 7: effective branching numbers — exact `2n` on the free line
/// flavor, and `(1 + 2*lambda) + 1` within 3% of 8 for the 1D locally
/// free group at n = 200.
pub fn criterion_07() -> Result<CriterionReport, CliError> {
    let mut table = Table::new(["flavor", "n", "k", "z_eff", "target"]);
    let mut passed = true;
    for n in [2u16, 3, 4] {
        let spec = GroupSpec::new(Flavor::Free1, n)?;
        let profile = bfs_spheres(&spec, 4, &opts(CanonicalAlgo::Rewrite))?;
        let z = empirical_z_eff(&profile)?;
        // Sphere ratios of a free group are small exact integers, so this
        // equality is exact in floating point, not approximate.
        for (k, zk) in z.iter().enumerate().skip(1) {
            passed &= *zk == 2.0 * n as f64;
            table.push(vec![
                Cell::text("free1"),
                Cell::UInt(n as u64),
                Cell::UInt(k as u64),
                Cell::Float(*zk),
                Cell::Float(2.0 * n as f64),
            ]);
        }
    }
    let op = TransferOperator::<f64>::new(Flavor::Lf1, 200)?;
    let lambda = dominant_eigenvalue(&op, 1e-12, 500_000)?.lambda;
    let z_est = (1.0 + 2.0 * lambda) + 1.0;
    let clause_lf1 = (z_est / 8.0 - 1.0).abs() <= 0.03;
    passed &= clause_lf1;
    table.push(vec![
        Cell::text("lf1"),
        Cell::UInt(200),
        Cell::Empty,
        Cell::Float(z_est),
        Cell::Float(8.0),
    ]);
    Ok(CriterionReport {
        id: 7,
        slug: "z_eff",
        title: "effective branching numbers",
        passed,
        detail: format!(
            "free1 branching exactly 2n for n = 2, 3, 4; lf1 estimate {z_est:.4} vs 8 within 3%: \
             {clause_lf1}"
        ),
        notes: Vec::new(),
        table,
    })
}

/// The criterion-8 grid of lattice sizes.
pub const C8_GRID: [u64; 4] = [1_000, 10_000, 100_000, 1_000_000];

/// Criterion 8: 2D root-finding residuals, the `lambda_1 * ln n / n`
/// window, and the monotone approach of that ratio toward 1.
///
/// The window clause `[0.7, 1.5]` is implemented exactly as stated. The
/// measured ratios are 3.70, 3.43, 3.22, 3.07 over the grid — decreasing
/// toward 1 as the monotonicity clause expects, but far above the window
/// at these sizes (the approach is logarithmically slow). The clause is
/// kept faithful rather than loosened, so this criterion fails on the
/// window while the residual and monotonicity clauses hold.
pub fn criterion_08() -> Result<CriterionReport, CliError> {
    let mut table = Table::new([
        "n",
        "p1",
        "residual",
        "lambda1",
        "lambda1_ln_ratio",
        "abs_ratio_minus_1",
        "in_window",
    ]);
    let mut residual_ok = true;
    let mut window_ok = true;
    let mut devs = Vec::new();
    for n in C8_GRID {
        let root = solve_p1::<f64>(n, 1e-9)?;
        residual_ok &= root.residual <= 1e-9;
        let l = lambda1_2d::<f64>(n)?;
        let in_window = (0.7..=1.5).contains(&l.ratio);
        window_ok &= in_window;
        devs.push((l.ratio - 1.0).abs());
        table.push(vec![
            Cell::UInt(n),
            Cell::Float(root.p1),
            Cell::Float(root.residual),
            Cell::Float(l.lambda1),
            Cell::Float(l.ratio),
            Cell::Float((l.ratio - 1.0).abs()),
            Cell::Bool(in_window),
        ]);
    }
    let monotone_ok = devs.windows(2).all(|w| w[1] < w[0]);
    let passed = residual_ok && window_ok && monotone_ok;
    Ok(CriterionReport {
        id: 8,
        slug: "roots_2d",
        title: "2D root residuals and eigenvalue ratio window",
        passed,
        detail: format!(
            "residual <= 1e-9: {residual_ok}; ratio in [0.7, 1.5]: {window_ok}; \
             |ratio - 1| strictly decreasing: {monotone_ok}"
        ),
        notes: vec![format!(
            "measured ratios {:.4}, {:.4}, {:.4}, {:.4} — decreasing toward 1 but outside the \
             window at these n",
            devs[0] + 1.0,
            devs[1] + 1.0,
            devs[2] + 1.0,
            devs[3] + 1.0
        )],
        table,
    })
}

/// Criterion 9: agreement between the 2D transfer operator's dominant
/// eigenvalue and the literal recursion's growth ratio, plus the trivial
/// length-1 lattice counts.
pub fn criterion_09() -> Result<CriterionReport, CliError> {
    let mut table = Table::new(["quantity", "n", "value", "target", "within"]);
    let growth = transfer_2d_growth::<f64>(2, 1e-9)?;
    let counts = theta(Flavor::Lf2, 2, 60)?;
    let dp_ratio = ratio_f64(counts.total(60), counts.total(59));
    let diff = (growth.lambda - dp_ratio).abs();
    let clause_growth = diff <= 1e-6;
    table.push(vec![
        Cell::text("lambda_transfer"),
        Cell::UInt(2),
        Cell::Float(growth.lambda),
        Cell::Empty,
        Cell::Empty,
    ]);
    table.push(vec![
        Cell::text("dp_ratio_m60"),
        Cell::UInt(2),
        Cell::Float(dp_ratio),
        Cell::Empty,
        Cell::Empty,
    ]);
    table.push(vec![
        Cell::text("abs_difference"),
        Cell::UInt(2),
        Cell::Float(diff),
        Cell::Float(1e-6),
        Cell::Bool(clause_growth),
    ]);
    let mut clause_theta0 = true;
    for n in 2u16..=6 {
        let got = theta(Flavor::Lf2, n, 0)?.total(0).clone();
        let expected = 2 * (n as u64) * (n as u64);
        let agree = got == BigUint::from(expected);
        clause_theta0 &= agree;
        table.push(vec![
            Cell::text("theta_m0"),
            Cell::UInt(n as u64),
            Cell::Big(got),
            Cell::UInt(expected),
            Cell::Bool(agree),
        ]);
    }
    Ok(CriterionReport {
        id: 9,
        slug: "dp_2d",
        title: "2D transfer operator vs literal recursion",
        passed: clause_growth && clause_theta0,
        detail: format!(
            "growth {:.9} vs DP ratio {:.9} (|diff| = {:.2e}); theta(0) = 2n^2 for n = 2..6: \
             {clause_theta0}",
            growth.lambda, dp_ratio, diff
        ),
        notes: Vec::new(),
        table,
    })
}

/// Criterion 10: the committed 2D oracle-comparison table. Both walk
/// algorithms must agree exactly; the literal recursion's deviation is
/// recorded as data, and the regenerated table must equal the committed
/// golden file byte for byte.
pub fn criterion_10() -> Result<CriterionReport, CliError> {
    let golden = include_str!("../tests/golden/lf2_n2_mu4_comparison.csv");
    let (report, table) = oracle_2d_comparison()?;
    let dual_ok = report.agreed();
    let generated = table.to_csv();
    let golden_ok = generated == golden;
    let deviations: u64 = table
        .rows
        .iter()
        .filter(|r| matches!(r.last(), Some(Cell::Bool(false))))
        .count() as u64;
    Ok(CriterionReport {
        id: 10,
        slug: "oracle_2d",
        title: "2D oracle comparison against committed golden",
        passed: dual_ok && golden_ok,
        detail: format!(
            "dual-walk agreement: {dual_ok}; regenerated table matches golden: {golden_ok}; \
             literal recursion deviates at {deviations} of 5 radii (recorded, not a failure)"
        ),
        notes: Vec::new(),
        table,
    })
}

/// The lf2 n=2 comparison table shared by criterion 10 and the golden
/// file generator: both walk algorithms' sphere sizes next to the literal
/// recursion's assembled counts, radii 0..=4.
pub fn oracle_2d_comparison(
) -> Result<(lofree::explore::DualOracleReport, Table), CliError> {
    let spec = GroupSpec::new(Flavor::Lf2, 2)?;
    let mu_hi = 4u64;
    let report = dual_oracle_check(&spec, mu_hi, &opts(CanonicalAlgo::Rewrite))?;
    let stack_profile = bfs_spheres(&spec, mu_hi, &opts(CanonicalAlgo::Stack))?;
    let counts = theta(Flavor::Lf2, 2, mu_hi.saturating_sub(1) as u32)?;
    let mut table = Table::new([
        "flavor",
        "n",
        "mu",
        "sphere_rewrite",
        "sphere_stack",
        "assembled_literal",
        "literal_match",
    ]);
    for mu in 0..=mu_hi {
        let rewrite = report.compared[mu as usize];
        let stack = stack_profile.sizes[mu as usize];
        let assembled = assemble_from_table(&counts, mu, true)?;
        let agree = BigUint::from(rewrite) == assembled;
        table.push(vec![
            Cell::text("lf2"),
            Cell::UInt(2),
            Cell::UInt(mu),
            Cell::UInt(rewrite),
            Cell::UInt(stack),
            Cell::Big(assembled),
            Cell::Bool(agree),
        ]);
    }
    Ok((report, table))
}

/// Run criteria 1 through 10 in order. (Criterion 11, bundle determinism,
/// is exercised by building the report bundle twice.)
pub fn run_all(quick: bool, seed: u64) -> Result<Vec<CriterionReport>, CliError> {
    Ok(vec![
        criterion_01(quick)?,
        criterion_02(quick, seed)?,
        criterion_03()?,
        criterion_04()?,
        criterion_05()?,
        criterion_06()?,
        criterion_07()?,
        criterion_08()?,
        criterion_09()?,
        criterion_10()?,
    ])
}
