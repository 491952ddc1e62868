//! JSON reports: emission for every subcommand and independent
//! re-verification of emitted reports against their inputs.

use serde_json::{json, Value};

use crate::digraph::{
    circulation_from_ears, cut_separating_vector, ear_decompose, find_oriented_cut,
    is_minimally_strongly_connected, network_matrix, parse_digraph, validate_ears, Digraph,
    DigraphError, EarDecomposition, OrientedCut, SpanningTree,
};
use crate::exact::{parse_matrix, parse_rat, EquivWitness, Mat, Rat};
use crate::posbasis::{
    removal_oracle, BasisMethod, BasisWitness, ColumnNecessity, CriticalStructure, PosBasisReport,
    RemovalOutcome,
};
use crate::pss::{
    decompose_in_ina, is_pss, validate_nem, Decomposition, GordanVector, InForm, InaForm,
    PositiveCombination, PssError, SeparatingVector, SpanVerdict,
};

pub const SCHEMA: u64 = 1;

/// Exit code for an affirmative verdict.
pub const EXIT_YES: i32 = 0;
/// Exit code for a negative verdict.
pub const EXIT_NO: i32 = 1;
/// Exit code for usage and parse errors.
pub const EXIT_ERROR: i32 = 2;

fn code(verdict: bool) -> i32 {
    if verdict {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

// ---- scalar and matrix encoding ----

pub fn rats_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn mat_json(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| rats_json(m.row(i))).collect())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, String> {
    v.get(key).ok_or_else(|| format!("missing field {key:?}"))
}

pub fn rats_from(v: &Value) -> Result<Vec<Rat>, String> {
    v.as_array()
        .ok_or("expected an array of rationals")?
        .iter()
        .map(|x| {
            let s = x.as_str().ok_or("rational entries must be strings")?;
            parse_rat(s).map_err(|e| e.to_string())
        })
        .collect()
}

pub fn mat_from(v: &Value) -> Result<Mat, String> {
    let rows = v
        .as_array()
        .ok_or("expected an array of rows")?
        .iter()
        .map(rats_from)
        .collect::<Result<Vec<_>, _>>()?;
    if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err("ragged matrix".into());
    }
    Ok(Mat::from_rows(rows))
}

fn usizes_from(v: &Value) -> Result<Vec<usize>, String> {
    serde_json::from_value(v.clone()).map_err(|e| e.to_string())
}

fn usize_from(v: &Value) -> Result<usize, String> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| "expected a non-negative integer".to_string())
}

fn certificate(kind: &str, values: &[Rat]) -> Value {
    json!({ "kind": kind, "values": rats_json(values) })
}

fn kind_of(v: &Value) -> Result<&str, String> {
    field(v, "kind")?
        .as_str()
        .ok_or_else(|| "certificate kind must be a string".into())
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn header(command: &str, verdict: Value) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("verdict".into(), verdict);
    m
}

pub fn witness_json(w: &EquivWitness) -> Value {
    json!({ "basis": mat_json(&w.basis), "perm": w.perm, "scale": rats_json(&w.scale) })
}

pub fn witness_from(v: &Value) -> Result<EquivWitness, String> {
    EquivWitness::new(
        mat_from(field(v, "basis")?)?,
        usizes_from(field(v, "perm")?)?,
        rats_from(field(v, "scale")?)?,
    )
    .map_err(|e| e.to_string())
}

/// Verifies a standalone matrix certificate against `d`.
pub fn verify_matrix_certificate(cert: &Value, d: &Mat) -> Result<(), String> {
    let kind = kind_of(cert)?;
    let values = || rats_from(field(cert, "values")?);
    match kind {
        "positive-combination" => ensure(
            PositiveCombination { x: values()? }.verify(d),
            "positive combination does not verify",
        ),
        "separating-vector" => ensure(
            SeparatingVector { y: values()? }.verify(d),
            "separating vector does not verify",
        ),
        "normal-vector" => {
            let y = values()?;
            ensure(
                y.len() == d.rows()
                    && y.iter().any(|v| *v != Rat::from_integer(0.into()))
                    && d.left_mul_vec(&y)
                        .iter()
                        .all(|v| *v == Rat::from_integer(0.into())),
                "normal vector does not annihilate every column",
            )
        }
        "gordan-vector" => ensure(
            GordanVector { y: values()? }.verify(d),
            "Gordan vector does not verify",
        ),
        other => Err(format!("unknown certificate kind {other:?}")),
    }
}

// ---- check-pss ----

pub fn check_pss_report(d: &Mat) -> (i32, Value) {
    let (verdict, cert) = match is_pss(d) {
        SpanVerdict::Spans(c) => ("pss", certificate("positive-combination", &c.x)),
        SpanVerdict::SpansSubspace { normal, .. } => {
            ("not-pss", certificate("normal-vector", &normal))
        }
        SpanVerdict::NotPss(s) => ("not-pss", certificate("separating-vector", &s.y)),
    };
    let mut m = header("check-pss", json!(verdict));
    m.insert("certificate".into(), cert);
    (code(verdict == "pss"), Value::Object(m))
}

// ---- decompose ----

fn form_json(d: &Decomposition) -> Value {
    match d {
        Decomposition::In(f) => json!({
            "kind": "in",
            "ell": f.ell,
            "k": f.k,
            "breakpoints": f.nem_shape.as_ref().map(|s| s.breakpoints()),
            "canonical": mat_json(&f.canonical),
        }),
        Decomposition::Ina(f) => json!({
            "kind": "ina",
            "ell": f.ell,
            "k": f.k,
            "tail_cols": f.tail.cols(),
            "null_cols": f.null_tail.cols(),
            "breakpoints": f.nem_shape.as_ref().map(|s| s.breakpoints()),
            "canonical": mat_json(&f.canonical),
        }),
    }
}

fn breakpoints_match(v: &Value, nem: &Mat, k: usize) -> Result<(), String> {
    let stored: Option<Vec<usize>> =
        serde_json::from_value(field(v, "breakpoints")?.clone()).map_err(|e| e.to_string())?;
    let actual = if k > 0 {
        validate_nem(nem).map(|s| s.breakpoints())
    } else {
        None
    };
    ensure(stored == actual, "breakpoints do not match the NEM block")
}

/// Rebuilds an IN form from its JSON encoding.
pub fn in_form_from(v: &Value, witness: EquivWitness) -> Result<InForm, String> {
    let canonical = mat_from(field(v, "canonical")?)?;
    let ell = usize_from(field(v, "ell")?)?;
    let k = usize_from(field(v, "k")?)?;
    let (n, m) = canonical.shape();
    ensure(ell + k <= m, "ℓ + k exceeds the column count")?;
    let nem = canonical.block(0, n, ell, ell + k);
    breakpoints_match(v, &nem, k)?;
    Ok(InForm {
        ell,
        k,
        nem_shape: if k > 0 { validate_nem(&nem) } else { None },
        tail: canonical.block(0, n, ell + k, m),
        nem,
        witness,
        canonical,
    })
}

fn ina_form_from(v: &Value, witness: EquivWitness, gordan: Vec<Rat>) -> Result<InaForm, String> {
    let canonical = mat_from(field(v, "canonical")?)?;
    let ell = usize_from(field(v, "ell")?)?;
    let k = usize_from(field(v, "k")?)?;
    let t = usize_from(field(v, "tail_cols")?)?;
    let z = usize_from(field(v, "null_cols")?)?;
    let (n, m) = canonical.shape();
    ensure(
        ell < n && ell + k + t + z == m,
        "INA block sizes do not add up",
    )?;
    let nem = canonical.block(0, ell, ell, ell + k);
    breakpoints_match(v, &nem, k)?;
    Ok(InaForm {
        ell,
        k,
        nem_shape: if k > 0 { validate_nem(&nem) } else { None },
        nem,
        tail: canonical.block(0, ell, ell + k, ell + k + t),
        null_tail: canonical.block(0, ell, ell + k + t, m),
        acyclic: canonical.block(ell, n, ell + k, ell + k + t),
        acyclic_certificate: GordanVector { y: gordan },
        witness,
        canonical,
    })
}

pub fn decompose_report(d: &Mat) -> Result<(i32, Value), PssError> {
    let dec = decompose_in_ina(d)?;
    dec.verify(d).map_err(PssError::SelfCheck)?;
    let (verdict, cert) = match &dec {
        Decomposition::In(_) => {
            let cert = match is_pss(d) {
                SpanVerdict::Spans(c) => certificate("positive-combination", &c.x),
                _ => Value::Null,
            };
            ("in", cert)
        }
        Decomposition::Ina(f) => (
            "ina",
            certificate("gordan-vector", &f.acyclic_certificate.y),
        ),
    };
    let mut m = header("decompose", json!(verdict));
    m.insert("certificate".into(), cert);
    m.insert("form".into(), form_json(&dec));
    m.insert("witness".into(), witness_json(dec.witness()));
    Ok((code(dec.certifies_pss()), Value::Object(m)))
}

fn verify_decompose(r: &Value, d: &Mat) -> Result<(), String> {
    let witness = witness_from(field(r, "witness")?)?;
    let form = field(r, "form")?;
    let cert = field(r, "certificate")?;
    match kind_of(form)? {
        "in" => {
            let f = in_form_from(form, witness)?;
            f.verify(d)?;
            let pss = f.ell == d.rows() && f.k > 0;
            ensure(
                field(r, "verdict")? == "in",
                "verdict does not match the form kind",
            )?;
            if pss {
                verify_matrix_certificate(cert, d)?;
            } else {
                ensure(cert.is_null(), "unexpected certificate")?;
            }
        }
        "ina" => {
            ensure(
                kind_of(cert)? == "gordan-vector",
                "INA forms carry a Gordan vector",
            )?;
            let f = ina_form_from(form, witness, rats_from(field(cert, "values")?)?)?;
            f.verify(d)?;
            ensure(
                field(r, "verdict")? == "ina",
                "verdict does not match the form kind",
            )?;
        }
        other => return Err(format!("unknown form kind {other:?}")),
    }
    Ok(())
}

// ---- basis ----

fn method_name(m: BasisMethod) -> &'static str {
    match m {
        BasisMethod::Separation => "separation",
        BasisMethod::CriticalStructure => "critical-structure",
        BasisMethod::RemovalOracle => "removal-oracle",
    }
}

fn method_from(s: &str) -> Result<BasisMethod, String> {
    match s {
        "separation" => Ok(BasisMethod::Separation),
        "critical-structure" => Ok(BasisMethod::CriticalStructure),
        "removal-oracle" => Ok(BasisMethod::RemovalOracle),
        other => Err(format!("unknown method {other:?}")),
    }
}

fn necessity_json(c: &ColumnNecessity) -> Value {
    match c {
        ColumnNecessity::RankDrop => json!({ "kind": "rank-drop" }),
        ColumnNecessity::Separated(s) => certificate("separating-vector", &s.y),
    }
}

fn necessity_from(v: &Value) -> Result<ColumnNecessity, String> {
    match kind_of(v)? {
        "rank-drop" => Ok(ColumnNecessity::RankDrop),
        "separating-vector" => Ok(ColumnNecessity::Separated(SeparatingVector {
            y: rats_from(field(v, "values")?)?,
        })),
        other => Err(format!("unknown column certificate {other:?}")),
    }
}

pub fn basis_certificate_json(w: &BasisWitness) -> (Value, Option<Value>) {
    match w {
        BasisWitness::NotPss(s) => (certificate("separating-vector", &s.y), None),
        BasisWitness::Removable {
            column,
            combination,
        } => (
            json!({ "kind": "removable-column", "column": column,
                    "values": rats_json(&combination.x) }),
            None,
        ),
        BasisWitness::Minimal {
            combination,
            columns,
        } => (
            json!({ "kind": "minimality", "values": rats_json(&combination.x),
                    "columns": columns.iter().map(necessity_json).collect::<Vec<_>>() }),
            None,
        ),
        BasisWitness::Structure {
            form,
            structure,
            block_verdicts,
            removable,
        } => {
            let mut cert = json!({
                "kind": "critical-structure",
                "block_sizes": structure.block_sizes,
                "row_offsets": structure.row_offsets,
                "blocks": structure.blocks.iter().map(mat_json).collect::<Vec<_>>(),
                "block_verdicts": block_verdicts,
                "form": form_json(&Decomposition::In(form.clone())),
            });
            if let Some((column, combination)) = removable {
                cert["column"] = json!(column);
                cert["values"] = rats_json(&combination.x);
            }
            (cert, Some(witness_json(&form.witness)))
        }
    }
}

pub fn basis_report_json(report: &PosBasisReport) -> Value {
    let mut m = header("basis", json!(report.verdict));
    m.insert("method".into(), json!(method_name(report.method)));
    let (cert, witness) = basis_certificate_json(&report.witness);
    m.insert("certificate".into(), cert);
    if let Some(w) = witness {
        m.insert("witness".into(), w);
    }
    Value::Object(m)
}

pub fn basis_report(d: &Mat) -> (i32, Value) {
    let report = crate::posbasis::is_positive_basis(d);
    (code(report.verdict), basis_report_json(&report))
}

/// Parses a `basis` report back into a [`PosBasisReport`].
pub fn basis_report_from(r: &Value) -> Result<PosBasisReport, String> {
    let verdict = field(r, "verdict")?
        .as_bool()
        .ok_or("verdict must be boolean")?;
    let method = method_from(
        field(r, "method")?
            .as_str()
            .ok_or("method must be a string")?,
    )?;
    let cert = field(r, "certificate")?;
    let witness = match kind_of(cert)? {
        "separating-vector" => BasisWitness::NotPss(SeparatingVector {
            y: rats_from(field(cert, "values")?)?,
        }),
        "removable-column" => BasisWitness::Removable {
            column: usize_from(field(cert, "column")?)?,
            combination: PositiveCombination {
                x: rats_from(field(cert, "values")?)?,
            },
        },
        "minimality" => BasisWitness::Minimal {
            combination: PositiveCombination {
                x: rats_from(field(cert, "values")?)?,
            },
            columns: field(cert, "columns")?
                .as_array()
                .ok_or("columns must be an array")?
                .iter()
                .map(necessity_from)
                .collect::<Result<_, _>>()?,
        },
        "critical-structure" => {
            let form = in_form_from(field(cert, "form")?, witness_from(field(r, "witness")?)?)?;
            let blocks = field(cert, "blocks")?
                .as_array()
                .ok_or("blocks must be an array")?
                .iter()
                .map(mat_from)
                .collect::<Result<_, _>>()?;
            BasisWitness::Structure {
                form,
                structure: CriticalStructure {
                    block_sizes: usizes_from(field(cert, "block_sizes")?)?,
                    row_offsets: usizes_from(field(cert, "row_offsets")?)?,
                    blocks,
                },
                block_verdicts: serde_json::from_value(field(cert, "block_verdicts")?.clone())
                    .map_err(|e| e.to_string())?,
                removable: match cert.get("column") {
                    Some(c) => Some((
                        usize_from(c)?,
                        PositiveCombination {
                            x: rats_from(field(cert, "values")?)?,
                        },
                    )),
                    None => None,
                },
            }
        }
        other => return Err(format!("unknown certificate kind {other:?}")),
    };
    Ok(PosBasisReport {
        verdict,
        method,
        witness,
    })
}

// ---- graph ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphAction {
    Check,
    Ears,
    Cut,
    Netmat,
    Minimal,
}

impl GraphAction {
    pub fn name(self) -> &'static str {
        match self {
            GraphAction::Check => "check",
            GraphAction::Ears => "ears",
            GraphAction::Cut => "cut",
            GraphAction::Netmat => "netmat",
            GraphAction::Minimal => "minimal",
        }
    }

    fn from_name(s: &str) -> Result<GraphAction, String> {
        [
            GraphAction::Check,
            GraphAction::Ears,
            GraphAction::Cut,
            GraphAction::Netmat,
            GraphAction::Minimal,
        ]
        .into_iter()
        .find(|a| a.name() == s)
        .ok_or_else(|| format!("unknown graph action {s:?}"))
    }
}

fn ears_json(d: &EarDecomposition) -> Value {
    json!({ "kind": "ear-decomposition", "start": d.start, "ears": d.ears })
}

fn ears_from(v: &Value) -> Result<EarDecomposition, String> {
    Ok(EarDecomposition {
        start: usize_from(field(v, "start")?)?,
        ears: serde_json::from_value(field(v, "ears")?.clone()).map_err(|e| e.to_string())?,
    })
}

fn cut_json(c: &OrientedCut, tree: Option<&SpanningTree>) -> Value {
    let mut v = json!({ "kind": "oriented-cut", "v1": c.v1, "v2": c.v2, "cut_arcs": c.cut_arcs });
    if let Some(t) = tree {
        let rows: Vec<usize> = t
            .arcs()
            .iter()
            .enumerate()
            .filter(|(_, a)| c.cut_arcs.contains(a))
            .map(|(r, _)| r)
            .collect();
        v["tree_rows"] = json!(rows);
    }
    v
}

fn cut_from(v: &Value) -> Result<OrientedCut, String> {
    Ok(OrientedCut {
        v1: usizes_from(field(v, "v1")?)?,
        v2: usizes_from(field(v, "v2")?)?,
        cut_arcs: usizes_from(field(v, "cut_arcs")?)?,
    })
}

fn verify_graph_certificate(cert: &Value, g: &Digraph) -> Result<(), String> {
    match kind_of(cert)? {
        "ear-decomposition" => validate_ears(g, &ears_from(cert)?),
        "oriented-cut" => ensure(cut_from(cert)?.verify(g), "oriented cut does not verify"),
        other => Err(format!("unexpected graph certificate {other:?}")),
    }
}

/// Certificate that the network matrix of `(g, t)` is or is not a PSS.
fn network_certificate(g: &Digraph, t: &SpanningTree) -> Result<Value, DigraphError> {
    Ok(match find_oriented_cut(g)? {
        None => certificate(
            "positive-combination",
            &circulation_from_ears(g, &ear_decompose(g)?),
        ),
        Some(cut) => certificate("separating-vector", &cut_separating_vector(t, &cut)),
    })
}

/// Report, exit code and, for `netmat`, the matrix in the text format.
pub fn graph_report(
    g: &Digraph,
    tree: Option<&SpanningTree>,
    action: GraphAction,
) -> Result<(i32, Value, Option<String>), DigraphError> {
    let cut = find_oriented_cut(g)?;
    let mut artifact = None;
    let (verdict, cert) = match action {
        GraphAction::Check | GraphAction::Ears => match &cut {
            None => (true, ears_json(&ear_decompose(g)?)),
            Some(c) => (false, cut_json(c, tree)),
        },
        GraphAction::Cut => match &cut {
            None => (false, ears_json(&ear_decompose(g)?)),
            Some(c) => (true, cut_json(c, tree)),
        },
        GraphAction::Netmat => {
            let t = tree.ok_or(DigraphError::InvalidTree("netmat needs --tree".into()))?;
            let m = network_matrix(g, t);
            artifact = Some(m.to_string());
            (
                true,
                json!({ "kind": "network-matrix", "matrix": mat_json(&m) }),
            )
        }
        GraphAction::Minimal => match &cut {
            Some(c) => (false, cut_json(c, tree)),
            None => match (0..g.arc_count()).find(|&a| g.without_arc(a).is_strongly_connected()) {
                Some(a) => (
                    false,
                    json!({ "kind": "removable-arc", "arc": a,
                            "ears": ears_json(&ear_decompose(&g.without_arc(a))?) }),
                ),
                None => {
                    let cuts = (0..g.arc_count())
                        .map(|a| {
                            let c = find_oriented_cut(&g.without_arc(a))?
                                .expect("minimal digraph loses strong connectivity");
                            Ok(cut_json(&c, None))
                        })
                        .collect::<Result<Vec<_>, DigraphError>>()?;
                    (true, json!({ "kind": "arc-cuts", "cuts": cuts }))
                }
            },
        },
    };
    let mut m = header("graph", json!(verdict));
    m.insert("action".into(), json!(action.name()));
    m.insert("certificate".into(), cert);
    if let (Some(t), GraphAction::Check) = (tree, action) {
        m.insert("network_certificate".into(), network_certificate(g, t)?);
    }
    Ok((code(verdict), Value::Object(m), artifact))
}

fn verify_graph(r: &Value, g: &Digraph, tree: Option<&SpanningTree>) -> Result<(), String> {
    let action = GraphAction::from_name(field(r, "action")?.as_str().ok_or("bad action")?)?;
    let verdict = field(r, "verdict")?
        .as_bool()
        .ok_or("verdict must be boolean")?;
    let cert = field(r, "certificate")?;
    let kind = kind_of(cert)?;
    match action {
        GraphAction::Check | GraphAction::Ears | GraphAction::Cut => {
            verify_graph_certificate(cert, g)?;
            let strongly = kind == "ear-decomposition";
            let expected = if action == GraphAction::Cut {
                !strongly
            } else {
                strongly
            };
            ensure(
                verdict == expected,
                "verdict does not match the certificate",
            )?;
            if let Some(nc) = r.get("network_certificate") {
                let t = tree.ok_or("network certificate needs the tree")?;
                verify_matrix_certificate(nc, &network_matrix(g, t))?;
                let positive = kind_of(nc)? == "positive-combination";
                ensure(
                    positive == strongly,
                    "network certificate contradicts the graph",
                )?;
            }
        }
        GraphAction::Netmat => {
            let t = tree.ok_or("netmat needs the tree")?;
            ensure(
                mat_from(field(cert, "matrix")?)? == network_matrix(g, t),
                "network matrix differs",
            )?;
        }
        GraphAction::Minimal => match kind {
            "oriented-cut" => {
                ensure(!verdict, "a cut refutes minimality")?;
                verify_graph_certificate(cert, g)?;
            }
            "removable-arc" => {
                ensure(!verdict, "a removable arc refutes minimality")?;
                let a = usize_from(field(cert, "arc")?)?;
                ensure(a < g.arc_count(), "arc out of range")?;
                validate_ears(&g.without_arc(a), &ears_from(field(cert, "ears")?)?)?;
            }
            "arc-cuts" => {
                ensure(verdict, "arc cuts certify minimality")?;
                ensure(
                    g.is_strongly_connected(),
                    "digraph is not strongly connected",
                )?;
                let cuts = field(cert, "cuts")?
                    .as_array()
                    .ok_or("cuts must be an array")?;
                ensure(cuts.len() == g.arc_count(), "one cut per arc is required")?;
                for (a, c) in cuts.iter().enumerate() {
                    ensure(
                        cut_from(c)?.verify(&g.without_arc(a)),
                        "cut of a reduced digraph does not verify",
                    )?;
                }
            }
            other => return Err(format!("unexpected certificate {other:?}")),
        },
    }
    Ok(())
}

// ---- generate ----

/// Certificate for a generated matrix (minimality via the removal oracle)
/// or digraph (one oriented cut per deleted arc).
pub fn generated_matrix_certificate(m: &Mat) -> Option<Value> {
    match removal_oracle(m) {
        RemovalOutcome::Minimal {
            combination,
            columns,
        } => Some(
            basis_certificate_json(&BasisWitness::Minimal {
                combination,
                columns,
            })
            .0,
        ),
        _ => None,
    }
}

pub fn generated_digraph_certificate(g: &Digraph) -> Option<Value> {
    if !is_minimally_strongly_connected(g) {
        return None;
    }
    graph_report(g, None, GraphAction::Minimal)
        .ok()
        .map(|(_, r, _)| r["certificate"].clone())
}

fn verify_generated(r: &Value) -> Result<(), String> {
    let cert = field(r, "certificate")?;
    if let Some(text) = r.get("matrix").and_then(Value::as_str) {
        let m = parse_matrix(text).map_err(|e| e.to_string())?;
        let report = basis_report_from(&json!({
            "verdict": true, "method": "removal-oracle", "certificate": cert,
        }))?;
        report.verify(&m)
    } else if let Some(text) = r.get("digraph").and_then(Value::as_str) {
        let g = parse_digraph(text).map_err(|e| e.to_string())?;
        verify_graph(
            &json!({ "action": "minimal", "verdict": true, "certificate": cert }),
            &g,
            None,
        )?;
        let n = g.vertex_count();
        ensure(
            n <= g.arc_count() && g.arc_count() + 2 <= 2 * n,
            "arc count outside [n, 2(n − 1)]",
        )
    } else {
        Err("generated report carries neither a matrix nor a digraph".into())
    }
}

// ---- round trip ----

/// Input a report was produced from.
#[derive(Clone, Copy, Debug)]
pub enum ReportInput<'a> {
    Matrix(&'a Mat),
    Graph(&'a Digraph, Option<&'a SpanningTree>),
    /// Generated reports embed their own artifact.
    Embedded,
}

/// Re-verifies an emitted report from its JSON alone and the input.
pub fn verify_report(r: &Value, input: ReportInput<'_>) -> Result<(), String> {
    ensure(field(r, "schema")? == &json!(SCHEMA), "unsupported schema")?;
    let command = field(r, "command")?
        .as_str()
        .ok_or("command must be a string")?;
    match (command, input) {
        ("check-pss", ReportInput::Matrix(d)) => {
            let cert = field(r, "certificate")?;
            verify_matrix_certificate(cert, d)?;
            let pss = kind_of(cert)? == "positive-combination";
            ensure(
                field(r, "verdict")? == if pss { "pss" } else { "not-pss" },
                "verdict does not match the certificate",
            )?;
            if pss {
                ensure(d.rank() == d.rows(), "columns do not span the space")?;
            }
            Ok(())
        }
        ("decompose", ReportInput::Matrix(d)) => verify_decompose(r, d),
        ("basis", ReportInput::Matrix(d)) => basis_report_from(r)?.verify(d),
        ("graph", ReportInput::Graph(g, t)) => verify_graph(r, g, t),
        ("generate", ReportInput::Embedded) => verify_generated(r),
        (c, _) => Err(format!("input kind does not fit command {c:?}")),
    }
}

/// Human-readable summary of a report.
pub fn summary(r: &Value) -> String {
    let verdict = match &r["verdict"] {
        Value::String(v) => v.clone(),
        v => v.to_string(),
    };
    let mut out = format!("verdict: {verdict}\n");
    if let Some(family) = r.get("family").and_then(Value::as_str) {
        out.push_str(&format!("family: {family}\n"));
    }
    if let Some(method) = r.get("method") {
        out.push_str(&format!("method: {}\n", method.as_str().unwrap_or("?")));
    }
    let cert = &r["certificate"];
    if let Some(kind) = cert.get("kind").and_then(Value::as_str) {
        out.push_str(&format!("certificate: {kind}\n"));
        if let Some(values) = cert.get("values").and_then(Value::as_array) {
            let parts: Vec<&str> = values.iter().filter_map(Value::as_str).collect();
            out.push_str(&format!("  values: {}\n", parts.join(" ")));
        }
        for key in [
            "column",
            "arc",
            "cut_arcs",
            "tree_rows",
            "ears",
            "block_sizes",
        ] {
            if let Some(v) = cert.get(key) {
                out.push_str(&format!("  {key}: {v}\n"));
            }
        }
    }
    if let Some(form) = r.get("form") {
        out.push_str(&format!(
            "form: {} (ℓ = {}, k = {})\n",
            form["kind"].as_str().unwrap_or("?"),
            form["ell"],
            form["k"]
        ));
    }
    out
}
