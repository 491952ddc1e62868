//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any of them fails.

use std::collections::BTreeSet;
use std::time::Instant;

use clap::Parser;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use posspan::cli::{
    basis_report, check_pss_report, decompose_report, graph_report, run, verify_report, Cli,
    GraphAction, ReportInput, EXIT_NO, EXIT_YES,
};
use posspan::digraph::{
    find_oriented_cut, is_minimally_strongly_connected, network_matrix, parse_digraph,
    random_connected_digraph, random_spanning_tree, read_digraph_file, read_tree_file, Digraph,
};
use posspan::exact::{parse_matrix, rat, rat_vec, ratio, read_matrix_file, Mat, Rat};
use posspan::posbasis::{
    is_critical_vector, is_positive_basis, reduce_to_near_extreme_form, removal_oracle,
    replacement_oracle, BasisMethod, CriticalCone, CriticalStructure, NearExtremeForm,
    RemovalOutcome,
};
use posspan::pss::{
    decompose_in_ina, is_pss, stiemke_alternative, Decomposition, PssError, SeparatingVector,
    StiemkeOutcome,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `M` recovered from `canonical = B⁻¹ M P Δ`: column `perm[j]` of `M` is
/// `B · canonical[:, j] / scale[j]`.
fn undo_witness(d: &Decomposition) -> Mat {
    let w = d.witness();
    let canonical = d.canonical();
    let mut cols = vec![Vec::new(); w.perm.len()];
    for (j, &src) in w.perm.iter().enumerate() {
        cols[src] = w
            .basis
            .mul_vec(&canonical.column(j))
            .into_iter()
            .map(|v| v / &w.scale[j])
            .collect();
    }
    Mat::from_columns(canonical.rows(), &cols)
}

fn criterion_1() -> Outcome {
    let m1 = read_matrix_file(fixture("m1.mat")).map_err(|e| e.to_string())?;
    let expected = Mat::from_ints(&[
        [1, 0, 0, 0, -1, 0],
        [0, 1, 0, 0, -1, 0],
        [0, 0, 1, 0, -1, -1],
        [0, 0, 0, 1, 0, -1],
    ]);
    check(m1 == expected, || "fixture differs from M1".into())?;
    let combination = match stiemke_alternative(&m1) {
        StiemkeOutcome::Positive(c) => c,
        StiemkeOutcome::Separating(_) => return Err("M1 reported as non-PSS".into()),
    };
    check(combination.verify(&m1), || {
        "positive combination fails".into()
    })?;
    check(m1.mul_vec(&combination.x).iter().all(Zero::is_zero), || {
        "M1 x is not exactly zero".into()
    })?;
    let (code, report) = check_pss_report(&m1);
    check(code == EXIT_YES, || format!("check-pss exit code {code}"))?;
    verify_report(&report, ReportInput::Matrix(&m1))?;
    let d = decompose_in_ina(&m1).map_err(|e| e.to_string())?;
    let Decomposition::In(f) = &d else {
        return Err("M1 decomposes to an INA form".into());
    };
    check(f.ell == 4 && f.k > 0, || {
        format!("ell = {}, k = {}", f.ell, f.k)
    })?;
    d.verify(&m1)?;
    check(undo_witness(&d) == m1, || {
        "witness does not reproduce M1".into()
    })?;
    let (code, report) = decompose_report(&m1).map_err(|e| e.to_string())?;
    check(code == EXIT_YES, || format!("decompose exit code {code}"))?;
    verify_report(&report, ReportInput::Matrix(&m1))?;
    Ok(format!(
        "x = {}, IN form with ell = 4, k = {}",
        combination
            .x
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        f.k
    ))
}

fn criterion_2() -> Outcome {
    let m2 = read_matrix_file(fixture("m2.mat")).map_err(|e| e.to_string())?;
    let known_y = SeparatingVector {
        y: rat_vec(&[1, 1, 0, 0, 0, 0]),
    };
    check(known_y.verify(&m2), || {
        "y = (1,1,0,0,0,0) does not separate M2".into()
    })?;
    let y = match stiemke_alternative(&m2) {
        StiemkeOutcome::Separating(s) => s,
        StiemkeOutcome::Positive(_) => return Err("M2 reported as PSS".into()),
    };
    let yd = m2.left_mul_vec(&y.y);
    check(
        y.y.iter().any(|v| !v.is_zero())
            && yd.iter().all(|v| *v >= Rat::zero())
            && yd.iter().any(|v| !v.is_zero()),
        || "separating vector fails".into(),
    )?;
    let (code, report) = check_pss_report(&m2);
    check(code == EXIT_NO, || format!("check-pss exit code {code}"))?;
    verify_report(&report, ReportInput::Matrix(&m2))?;
    let d = decompose_in_ina(&m2).map_err(|e| e.to_string())?;
    let Decomposition::Ina(f) = &d else {
        return Err("M2 decomposes to an IN form".into());
    };
    d.verify(&m2)?;
    check(f.acyclic_certificate.verify(&f.acyclic), || {
        "Gordan vector fails".into()
    })?;
    check(undo_witness(&d) == m2, || {
        "witness does not reproduce M2".into()
    })?;
    let (code, report) = decompose_report(&m2).map_err(|e| e.to_string())?;
    check(code == EXIT_NO, || format!("decompose exit code {code}"))?;
    verify_report(&report, ReportInput::Matrix(&m2))?;
    Ok(format!(
        "y = {:?}, INA form with ell = {}, acyclic block {}x{}",
        y.y.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        f.ell,
        f.acyclic.rows(),
        f.acyclic.cols()
    ))
}

fn criterion_3() -> Outcome {
    let d = read_matrix_file(fixture("d58.mat")).map_err(|e| e.to_string())?;
    // I5, −e1−e2−e3, −e2−e3−e4, e2+e3−e5.
    let mut cols = Mat::identity(5).columns();
    cols.push(rat_vec(&[-1, -1, -1, 0, 0]));
    cols.push(rat_vec(&[0, -1, -1, -1, 0]));
    cols.push(rat_vec(&[0, 1, 1, 0, -1]));
    check(d == Mat::from_columns(5, &cols), || {
        "fixture differs from D5,8".into()
    })?;
    let sums: Vec<Rat> = (0..5).map(|i| d.row(i).iter().sum()).collect();
    check(sums.iter().all(Zero::is_zero), || {
        format!("column sum {sums:?}")
    })?;
    let ones = posspan::pss::PositiveCombination {
        x: vec![Rat::one(); 8],
    };
    check(ones.verify(&d), || "all-ones combination fails".into())?;
    check(d.rank() == 5, || "D5,8 is rank deficient".into())?;
    let report = is_positive_basis(&d);
    check(report.verdict, || "D5,8 not recognized".into())?;
    report.verify(&d)?;
    check(
        matches!(removal_oracle(&d), RemovalOutcome::Minimal { .. }),
        || "removal oracle disagrees".into(),
    )?;
    let (code, json) = basis_report(&d);
    check(code == EXIT_YES, || format!("basis exit code {code}"))?;
    verify_report(&json, ReportInput::Matrix(&d))?;
    Ok(format!("positive basis via {:?}", report.method))
}

/// Warshall transitive closure, independent of the library traversal.
fn strongly_connected_by_closure(g: &Digraph) -> bool {
    let n = g.vertex_count();
    let mut r = vec![vec![false; n]; n];
    for (v, row) in r.iter_mut().enumerate() {
        row[v] = true;
    }
    for &(t, h) in g.arcs() {
        r[t][h] = true;
    }
    for k in 0..n {
        let via = r[k].clone();
        for row in r.iter_mut() {
            if row[k] {
                for (cell, &reach) in row.iter_mut().zip(&via) {
                    *cell |= reach;
                }
            }
        }
    }
    r.iter().all(|row| row.iter().all(|&b| b))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut strong, mut weak) = (0, 0);
    for case in 0..1000 {
        let n = rng.gen_range(4..=8);
        let extra = rng.gen_range(0..=2 * n);
        let g = random_connected_digraph(n, extra, &mut rng);
        let t = random_spanning_tree(&g, &mut rng).ok_or("random digraph is disconnected")?;
        let m = network_matrix(&g, &t);
        let verdict = is_pss(&m);
        check(verdict.verify(&m), || {
            format!("case {case}: certificate fails")
        })?;
        let sc = g.is_strongly_connected();
        check(sc == strongly_connected_by_closure(&g), || {
            format!("case {case}: strong connectivity disagrees with closure")
        })?;
        check(verdict.is_pss_of_space() == sc, || {
            format!("case {case}: isPss = {} but strongly connected = {sc}", !sc)
        })?;
        if sc {
            strong += 1;
        } else {
            weak += 1;
            let cut = find_oriented_cut(&g)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("case {case}: no cut"))?;
            check(cut.verify(&g), || format!("case {case}: cut fails"))?;
        }
    }
    Ok(format!(
        "1000 digraphs, {strong} strongly connected, {weak} not, 0 mismatches"
    ))
}

/// Exhaustive `{−1,0,1}` matrices of the given shape, in row-major order.
fn ternary_matrices(n: usize, m: usize) -> impl Iterator<Item = Mat> {
    let total = 3usize.pow((n * m) as u32);
    (0..total).map(move |mut code| {
        let mut rows = vec![vec![Rat::zero(); m]; n];
        for row in rows.iter_mut() {
            for v in row.iter_mut() {
                *v = rat((code % 3) as i64 - 1);
                code /= 3;
            }
        }
        Mat::from_rows(rows)
    })
}

fn random_ternary(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Mat {
    Mat::from_rows(
        (0..n)
            .map(|_| (0..m).map(|_| rat(rng.gen_range(-1..=1))).collect())
            .collect(),
    )
}

fn random_rational(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Mat {
    Mat::from_rows(
        (0..n)
            .map(|_| {
                (0..m)
                    .map(|_| {
                        if rng.gen_bool(0.3) {
                            Rat::zero()
                        } else {
                            ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Classification by the Stiemke alternative plus rank against the
/// decomposition outcome.
fn classify_and_decompose(d: &Mat) -> Result<bool, String> {
    let stiemke = stiemke_alternative(d);
    check(stiemke.verify(d), || {
        format!("Stiemke certificate fails on\n{d}")
    })?;
    let spans = stiemke.is_positive() && d.rank() == d.rows();
    match decompose_in_ina(d) {
        Err(PssError::ZeroMatrix) => {
            check(d.is_zero(), || "spurious zero-matrix error".into())?;
            Ok(false)
        }
        Err(e) => Err(format!("{e} on\n{d}")),
        Ok(dec) => {
            dec.verify(d).map_err(|e| format!("{e} on\n{d}"))?;
            check(dec.certifies_pss() == spans, || {
                format!("classification mismatch (spans = {spans}) on\n{d}")
            })?;
            check(matches!(dec, Decomposition::In(_)) == spans, || {
                format!("form kind mismatch on\n{d}")
            })?;
            Ok(spans)
        }
    }
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    let mut positive = 0;
    let mut tally = |d: &Mat| -> Result<(), String> {
        cases += 1;
        if classify_and_decompose(d)? {
            positive += 1;
        }
        Ok(())
    };
    for m in 3..=4 {
        for d in ternary_matrices(2, m) {
            tally(&d)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (n, m, count) in [(2, 5, 2000), (3, 4, 2000), (3, 5, 1500), (3, 6, 1500)] {
        for _ in 0..count {
            tally(&random_ternary(n, m, &mut rng))?;
        }
    }
    for _ in 0..300 {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(n + 1..=n + 3);
        tally(&random_rational(n, m, &mut rng))?;
    }
    Ok(format!(
        "{cases} matrices ({positive} positively spanning), 0 mismatches"
    ))
}

fn criterion_6() -> Outcome {
    let mut cases = 0;
    let mut critical = 0;
    for n in 2..=3usize {
        for code in 0..5usize.pow(n as u32) {
            let v: Vec<Rat> = (0..n)
                .map(|i| rat((code / 5usize.pow(i as u32) % 5) as i64 - 2))
                .collect();
            let verdict = is_critical_vector(&v).map_err(|e| e.to_string())?;
            let oracle = replacement_oracle(&v).map_err(|e| e.to_string())?;
            check(verdict.is_critical == oracle, || {
                format!("{v:?}: closed form {} oracle {oracle}", verdict.is_critical)
            })?;
            if let Some(cone) = &verdict.cone {
                check(cone.contains(&v), || format!("{v:?} not in {cone:?}"))?;
                critical += 1;
            }
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} vectors ({critical} critical), 0 mismatches"
    ))
}

/// Random column inside one of the cones `K₁`, `K₂`, `K_{1,2}` of R².
fn cone_column(cone: &CriticalCone, rng: &mut ChaCha8Rng) -> Vec<Rat> {
    loop {
        let v = vec![rat(rng.gen_range(-2..=2)), rat(rng.gen_range(-2..=2))];
        if cone.contains(&v) {
            return v;
        }
    }
}

fn random_structure(rng: &mut ChaCha8Rng) -> CriticalStructure {
    let n = rng.gen_range(2..=6);
    let mut block_sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let b = if left >= 2 && rng.gen_bool(0.5) { 2 } else { 1 };
        block_sizes.push(b);
        left -= b;
    }
    let s = block_sizes.len();
    let row_offsets: Vec<usize> = block_sizes
        .iter()
        .scan(0, |acc, &b| {
            let start = *acc;
            *acc += b;
            Some(start)
        })
        .collect();
    let blocks = (0..s - 1)
        .map(|i| {
            let rows = block_sizes[i];
            let width = s - 1 - i;
            let biased = rng.gen_bool(0.6);
            let cone = [
                CriticalCone::Single(1),
                CriticalCone::Single(2),
                CriticalCone::Pair(1, 2),
            ]
            .choose(rng)
            .cloned()
            .expect("non-empty");
            let cols: Vec<Vec<Rat>> = (0..width)
                .map(|_| match (rows, biased) {
                    (1, true) => vec![Rat::zero()],
                    (2, true) => cone_column(&cone, rng),
                    _ => (0..rows).map(|_| rat(rng.gen_range(-2..=2))).collect(),
                })
                .collect();
            Mat::from_columns(rows, &cols)
        })
        .collect();
    CriticalStructure {
        block_sizes,
        row_offsets,
        blocks,
    }
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut bases, mut others) = (0, 0);
    for case in 0..500 {
        let cs = random_structure(&mut rng);
        let m = cs.reassemble();
        check(
            CriticalStructure::from_in_matrix(&m).as_ref() == Ok(&cs),
            || format!("case {case}: structure does not round-trip"),
        )?;
        let structural = cs
            .low_dim_verdicts()
            .ok_or("block with more than two rows")?
            .iter()
            .all(|&b| b);
        let oracle = match removal_oracle(&m) {
            RemovalOutcome::Minimal { .. } => true,
            RemovalOutcome::Removable { .. } => false,
            RemovalOutcome::NotPss(_) => return Err(format!("case {case}: IN matrix not PSS")),
        };
        check(structural == oracle, || {
            format!("case {case}: structure {structural}, oracle {oracle} on\n{m}")
        })?;
        let report = is_positive_basis(&m);
        check(
            report.verdict == oracle && report.method == BasisMethod::CriticalStructure,
            || format!("case {case}: recognizer {:?}", report.method),
        )?;
        report.verify(&m)?;
        if oracle {
            bases += 1;
        } else {
            others += 1;
        }
    }
    Ok(format!(
        "500 IN matrices ({bases} positive bases, {others} not), 0 mismatches"
    ))
}

fn generate_cli(args: &[String]) -> Result<posspan::cli::Outcome, String> {
    let argv = ["posspan", "generate"]
        .into_iter()
        .map(String::from)
        .chain(args.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
    run(&cli).map_err(|e| format!("{args:?}: {e}"))
}

fn criterion_8() -> Outcome {
    let mut draws = 0;
    for family in ["min-pb", "max-pb", "pb-2l-1", "pb-l-2"] {
        for seed in 0..100u64 {
            let low = if family.starts_with("pb-") { 2 } else { 1 };
            let ell = low + (seed % 4) as usize;
            let n = ell + (seed / 4 % 3) as usize;
            let args: Vec<String> = vec![
                family.into(),
                format!("--ell={ell}"),
                format!("--n={n}"),
                format!("--seed={seed}"),
            ];
            let out = generate_cli(&args)?;
            let d = parse_matrix(out.artifact.as_deref().ok_or("no artifact")?)
                .map_err(|e| e.to_string())?;
            let size = match family {
                "min-pb" => ell + 1,
                "max-pb" => 2 * ell,
                "pb-2l-1" => 2 * ell - 1,
                _ => ell + 2,
            };
            check(d.shape() == (n, size) && d.rank() == ell, || {
                format!("{args:?}: shape {:?}, rank {}", d.shape(), d.rank())
            })?;
            check(
                matches!(removal_oracle(&d), RemovalOutcome::Minimal { .. }),
                || format!("{args:?}: not a positive basis\n{d}"),
            )?;
            verify_report(&out.report, ReportInput::Embedded)?;
            draws += 1;
        }
    }
    for family in ["digraph-2n-3", "digraph-n-1"] {
        for seed in 0..100u64 {
            let n = 3 + (seed % 7) as usize;
            let args: Vec<String> =
                vec![family.into(), format!("--n={n}"), format!("--seed={seed}")];
            let out = generate_cli(&args)?;
            let g = parse_digraph(out.artifact.as_deref().ok_or("no artifact")?)
                .map_err(|e| e.to_string())?;
            let arcs = g.arc_count();
            let expected = if family == "digraph-2n-3" {
                2 * n - 3
            } else {
                n + 1
            };
            check(g.vertex_count() == n && arcs == expected, || {
                format!("{args:?}: {arcs} arcs")
            })?;
            check(n <= arcs && arcs <= 2 * (n - 1), || {
                format!("{args:?}: {arcs} arcs")
            })?;
            check(is_minimally_strongly_connected(&g), || {
                format!("{args:?}: not minimal")
            })?;
            // Minimality by brute force: every single-arc deletion breaks it.
            for a in 0..arcs {
                check(!strongly_connected_by_closure(&g.without_arc(a)), || {
                    format!("{args:?}: arc {a} is removable")
                })?;
            }
            verify_report(&out.report, ReportInput::Embedded)?;
            draws += 1;
        }
    }
    Ok(format!("{draws} draws over six families, 0 failures"))
}

/// Image of column `c` under the signed row permutation `(p, signs)`.
fn act(p: &[usize], signs: &[i64], c: &[i64]) -> Vec<i64> {
    (0..c.len()).map(|i| signs[i] * c[p[i]]).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn int_mat(n: usize, cols: &[Vec<i64>]) -> Mat {
    let cols: Vec<Vec<Rat>> = cols
        .iter()
        .map(|c| c.iter().map(|&v| rat(v)).collect())
        .collect();
    Mat::from_columns(n, &cols)
}

/// Checks that a positive basis reduces to every family its size allows.
fn reduce_and_check(d: &Mat) -> Result<(), String> {
    let ell = d.rank();
    let m = d.cols();
    let forms = reduce_to_near_extreme_form(d);
    let want_2l1 = m == 2 * ell - 1;
    let want_l2 = m == ell + 2;
    let has_2l1 = forms
        .iter()
        .any(|f| matches!(f, NearExtremeForm::TwoEllMinusOne { .. }));
    let has_l2 = forms
        .iter()
        .any(|f| matches!(f, NearExtremeForm::EllPlusTwo { .. }));
    check(has_2l1 == want_2l1 && has_l2 == want_l2, || {
        format!("missing canonical form ({} found) for\n{d}", forms.len())
    })?;
    for f in &forms {
        check(f.verify(d), || format!("form does not verify for\n{d}"))?;
        check(f.witness().verify(d, f.canonical()) == Ok(true), || {
            format!("witness fails for\n{d}")
        })?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut bases = 0;
    // ℓ = 2: every 2×3 and 2×4 matrix with entries in {−1,0,1}.
    for m in 3..=4 {
        for d in ternary_matrices(2, m) {
            if matches!(removal_oracle(&d), RemovalOutcome::Minimal { .. }) && d.rank() == 2 {
                reduce_and_check(&d)?;
                bases += 1;
            }
        }
    }
    // Rank 2 inside R³: every 3×3 matrix of rank 2 that is a positive basis.
    let mut embedded = 0;
    for d in ternary_matrices(3, 3) {
        if d.rank() == 2 && matches!(removal_oracle(&d), RemovalOutcome::Minimal { .. }) {
            reduce_and_check(&d)?;
            embedded += 1;
        }
    }
    // ℓ = 3: positive bases have distinct nonzero columns, so enumerate
    // 5-sets of nonzero columns up to signed row permutations (which map
    // positive bases to positive bases), in a shuffled column order.
    let vectors: Vec<Vec<i64>> = (0..27)
        .map(|c| vec![c % 3 - 1, c / 3 % 3 - 1, c / 9 - 1])
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let group: Vec<(Vec<usize>, Vec<i64>)> = permutations(3)
        .into_iter()
        .flat_map(|p| {
            (0..8).map(move |s| {
                (
                    p.clone(),
                    (0..3)
                        .map(|i| if s >> i & 1 == 1 { -1 } else { 1 })
                        .collect(),
                )
            })
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut orbits = 0;
    let mut ell3 = 0;
    let k = vectors.len();
    let mut idx = [0usize, 1, 2, 3, 4];
    loop {
        let set: Vec<Vec<i64>> = idx.iter().map(|&i| vectors[i].clone()).collect();
        let key = group
            .iter()
            .map(|(p, s)| {
                let mut img: Vec<Vec<i64>> = set.iter().map(|c| act(p, s, c)).collect();
                img.sort();
                img
            })
            .min()
            .expect("non-empty group");
        if seen.insert(key) {
            orbits += 1;
            let mut cols = set.clone();
            cols.shuffle(&mut rng);
            let d = int_mat(3, &cols);
            if d.rank() == 3 && matches!(removal_oracle(&d), RemovalOutcome::Minimal { .. }) {
                reduce_and_check(&d)?;
                ell3 += 1;
            }
        }
        // Next 5-combination of 0..k.
        let Some(pos) = (0..5).rev().find(|&i| idx[i] < k - 5 + i) else {
            break;
        };
        idx[pos] += 1;
        for i in pos + 1..5 {
            idx[i] = idx[i - 1] + 1;
        }
    }
    Ok(format!(
        "{bases} bases for ell = 2, {embedded} of rank 2 in R^3, {ell3} for ell = 3 \
         ({orbits} orbits of 5-sets), 0 failures"
    ))
}

fn round_trip(report: &Value, input: ReportInput<'_>) -> Result<(), String> {
    let text = serde_json::to_string(report).map_err(|e| e.to_string())?;
    let parsed: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    check(parsed.get("schema") == Some(&Value::from(1)), || {
        "schema missing".into()
    })?;
    verify_report(&parsed, input)
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    let mut matrices = Vec::new();
    for f in ["m1.mat", "m2.mat", "d58.mat", "redundant.mat"] {
        matrices.push(read_matrix_file(fixture(f)).map_err(|e| e.to_string())?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..150 {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(n + 1..=2 * n + 1);
        let d = if rng.gen_bool(0.5) {
            random_ternary(n, m, &mut rng)
        } else {
            random_rational(n, m, &mut rng)
        };
        if !d.is_zero() {
            matrices.push(d);
        }
    }
    for d in &matrices {
        round_trip(&check_pss_report(d).1, ReportInput::Matrix(d))?;
        let (_, r) = decompose_report(d).map_err(|e| e.to_string())?;
        round_trip(&r, ReportInput::Matrix(d))?;
        round_trip(&basis_report(d).1, ReportInput::Matrix(d))?;
        count += 3;
    }
    let mut graphs = Vec::new();
    for (dg, tree) in [
        ("two_ears.dg", None),
        ("two_circuits.dg", Some("two_circuits.tree")),
        ("weak7.dg", Some("weak7.tree")),
    ] {
        let g = read_digraph_file(fixture(dg)).map_err(|e| e.to_string())?;
        let t = tree
            .map(|p| read_tree_file(&g, fixture(p)))
            .transpose()
            .map_err(|e| e.to_string())?;
        graphs.push((g, t));
    }
    for _ in 0..60 {
        let n = rng.gen_range(3..=6);
        let g = random_connected_digraph(n, rng.gen_range(0..=n), &mut rng);
        let t = random_spanning_tree(&g, &mut rng);
        graphs.push((g, t));
    }
    let actions = [
        GraphAction::Check,
        GraphAction::Ears,
        GraphAction::Cut,
        GraphAction::Netmat,
        GraphAction::Minimal,
    ];
    for (g, t) in &graphs {
        for action in actions {
            for tree in [None, t.as_ref()] {
                // The network matrix is only defined relative to a tree.
                if action == GraphAction::Netmat && tree.is_none() {
                    check(graph_report(g, tree, action).is_err(), || {
                        "netmat without a tree succeeded".into()
                    })?;
                    continue;
                }
                let (_, r, _) = graph_report(g, tree, action).map_err(|e| e.to_string())?;
                round_trip(&r, ReportInput::Graph(g, tree))?;
                count += 1;
            }
        }
    }
    let families: [&[&str]; 6] = [
        &["min-pb", "--n=4"],
        &["max-pb", "--n=3", "--ell=2"],
        &["pb-2l-1", "--ell=4", "--seed=7"],
        &["pb-l-2", "--ell=4", "--k=2", "--x=0,-1"],
        &["digraph-2n-3", "--n=6", "--circuits=2"],
        &["digraph-n-1", "--n=5", "--overlap=1"],
    ];
    for args in families {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        round_trip(&generate_cli(&args)?.report, ReportInput::Embedded)?;
        count += 1;
    }
    // A tampered certificate must be rejected.
    let m1 = &matrices[0];
    let (_, mut r) = check_pss_report(m1);
    r["certificate"]["values"][0] = Value::from("-1");
    check(verify_report(&r, ReportInput::Matrix(m1)).is_err(), || {
        "tampered certificate accepted".into()
    })?;
    Ok(format!(
        "{count} reports re-parsed and re-verified, tampering detected"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("M1 fixture: PSS, IN form, exact witness", criterion_1),
        ("M2 fixture: separating vector, INA form", criterion_2),
        ("D5,8 fixture: positive basis", criterion_3),
        ("network matrices vs strong connectivity", criterion_4),
        ("decomposition vs Stiemke plus rank", criterion_5),
        ("critical vectors vs replacement oracle", criterion_6),
        ("critical structure vs removal oracle", criterion_7),
        ("generator families", criterion_8),
        ("near-extreme reduction", criterion_9),
        ("JSON certificate round trip", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = f();
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:6.2}s] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:6.2}s] {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
