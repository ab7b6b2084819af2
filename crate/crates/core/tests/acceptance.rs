//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when
//! any criterion fails. Per-instance logs go to the cargo test tmp dir.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinnet::exactnum::{Spin, SqrtRational};
use spinnet::identities::{verify_be_grid, verify_orthogonality_grid, BeForm};
use spinnet::projective::{
    build_desargues, cross_section, isomorphic, quadrangle_members, space_dual_desargues, validate_configuration,
    ConfigurationSignature,
};
use spinnet::spinnet::{label_desargues, transfer_labeling, DesarguesSpinLabeling, Symbol, SymbolSpins};
use spinnet::symmetry::{
    canonicalize_quadruple, regularization_bounds, running_range, symmetry_orbit, CanonicalQuadruple,
    ClassicalSymmetry, SymmetryElement,
};
use spinnet::wigner::{sixj_value, SixJ};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn log_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    fs::create_dir_all(&dir).expect("log dir");
    dir
}

fn value(s: &SixJ) -> SqrtRational {
    sixj_value(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn small_symbols() -> Vec<SixJ> {
    common::valid_symbols(4).into_iter().map(SixJ::from_twice).collect()
}

fn classical_suite() -> Outcome {
    let symbols = small_symbols();
    let group = ClassicalSymmetry::all();
    let mut bad = Vec::new();
    for s in &symbols {
        let v = value(s);
        for g in &group {
            if value(&g.apply(s)) != v {
                bad.push(*s);
                break;
            }
        }
    }
    outcome(bad.is_empty(), format!("{} symbols x {} images, {} mismatches", symbols.len(), group.len(), bad.len()))
}

fn regge_suite() -> Outcome {
    let symbols = small_symbols();
    let mut memo: HashMap<SixJ, SqrtRational> = HashMap::new();
    let mut eval = |s: &SixJ| memo.entry(*s).or_insert_with(|| value(s)).clone();
    let mut mismatches = 0;
    let mut bad_orbits = 0;
    let mut images = 0;
    for s in &symbols {
        let v = eval(s);
        for g in SymmetryElement::all() {
            if let Some(img) = g.apply(s) {
                images += 1;
                if eval(&img) != v {
                    mismatches += 1;
                }
            }
        }
        if 144 % symmetry_orbit(s).len() != 0 {
            bad_orbits += 1;
        }
    }
    outcome(
        mismatches == 0 && bad_orbits == 0 && SymmetryElement::all().len() == 144,
        format!("{} symbols, {images} images, {mismatches} mismatches, {bad_orbits} orbits not dividing 144", symbols.len()),
    )
}

fn orthogonality_suite() -> Outcome {
    let (_, summary) = verify_orthogonality_grid(6).expect("grid runs");
    outcome(summary.failures == 0 && summary.instances == 7usize.pow(6), summary.to_string())
}

fn be_suite() -> Outcome {
    let (_, summary) = verify_be_grid(4, BeForm::Standard).expect("grid runs");
    let (literal, literal_summary) = verify_be_grid(4, BeForm::LiteralPaper).expect("grid runs");
    let path = log_dir().join("be_literal_form.jsonl");
    let mut f = fs::File::create(&path).expect("log file");
    for r in literal.iter().filter(|r| !r.equal) {
        writeln!(f, "{}", serde_json::to_string(r).unwrap()).unwrap();
    }
    outcome(
        summary.failures == 0 && summary.instances > 0,
        format!(
            "{summary}; without the (2x+1) weight: {literal_summary} (mismatches in {})",
            path.display()
        ),
    )
}

fn canonical_quadruples(max: u32) -> BTreeSet<CanonicalQuadruple> {
    let mut out = BTreeSet::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for d in 0..=max {
                    if let Ok(q) = canonicalize_quadruple(Spin::new(a), Spin::new(b), Spin::new(c), Spin::new(d)) {
                        out.insert(q);
                    }
                }
            }
        }
    }
    out
}

fn range_law() -> Outcome {
    let quads = canonical_quadruples(8);
    let bad: Vec<_> = quads
        .iter()
        .filter(|q| {
            let r = running_range(q);
            !q.satisfies_ordering() || r.x_width_twice() != 2 * q.a.twice() || r.y_width_twice() != 2 * q.a.twice()
        })
        .collect();
    outcome(bad.is_empty(), format!("{} canonical quadruples, {} violations", quads.len(), bad.len()))
}

fn regularization_chain() -> Outcome {
    let quads = canonical_quadruples(8);
    let path = log_dir().join("regularization.jsonl");
    let mut f = fs::File::create(&path).expect("log file");
    let mut violations = Vec::new();
    let mut rsym5_checked = 0;
    let mut rsym5_false = 0;
    for q in &quads {
        let report = regularization_bounds(q);
        if !report.rsym3_holds {
            violations.push(*q);
        }
        if let Some(ok) = report.rsym5_holds {
            rsym5_checked += 1;
            if !ok {
                rsym5_false += 1;
            }
        }
        writeln!(f, "{}", serde_json::json!({ "quadruple": q, "report": report })).unwrap();
    }
    let first = violations
        .first()
        .map(|q| format!(", first a={} b={} c={} d={} s={}", q.a, q.b, q.c, q.d, q.s))
        .unwrap_or_default();
    outcome(
        violations.is_empty(),
        format!(
            "{} of {} canonical quadruples violate s <= d + (b - a){first}; r <= (2x_min+1)+(2y_min+1) false on {rsym5_false} of {rsym5_checked} with r >= 3 (log {})",
            violations.len(),
            quads.len(),
            path.display()
        ),
    )
}

fn desargues_structure() -> Outcome {
    let d = build_desargues();
    let ten_three = validate_configuration(&d, ConfigurationSignature::symmetric(10, 3));
    let mut pairs_ok = 0;
    for i in 1..=5u8 {
        for j in i + 1..=5 {
            let (pi, _) = quadrangle_members(&d, i).unwrap();
            let (pj, _) = quadrangle_members(&d, j).unwrap();
            let shared: Vec<_> = pi.iter().filter(|p| pj.contains(p)).collect();
            if shared.len() == 1 && d.point_label(*shared[0]) == Some(format!("({i}{j})").as_str()) {
                pairs_ok += 1;
            }
        }
    }
    outcome(ten_three && pairs_ok == 10, format!("(10_3) valid: {ten_three}; {pairs_ok}/10 quadrangle pairs meet in (ij)"))
}

fn space_dual_round_trip() -> Outcome {
    let d = build_desargues();
    let c = space_dual_desargues(&d).expect("labeled input");
    let f = c.f_vector();
    let shared = (0..c.triangles.len()).all(|t| c.tetrahedra_containing_triangle(t) == 2);
    let section = cross_section(&c);
    let iso = isomorphic(&section, &d);
    outcome(
        f == [5, 10, 10, 5] && shared && iso,
        format!("f-vector {f:?}; every triangle in 2 tetrahedra: {shared}; cross section isomorphic: {iso}"),
    )
}

fn point_triads() -> Vec<[Symbol; 3]> {
    let d = build_desargues();
    d.points()
        .iter()
        .map(|&p| {
            let syms: Vec<Symbol> = d
                .lines_through(p)
                .iter()
                .map(|&l| Symbol::from_line_tag(d.line_label(l).unwrap()).unwrap())
                .collect();
            syms.try_into().unwrap()
        })
        .collect()
}

fn triad_ok(spins: &SymbolSpins, t: &[Symbol; 3]) -> bool {
    common::triad(spins[&t[0]].twice(), spins[&t[1]].twice(), spins[&t[2]].twice())
}

/// Assigns symbols one at a time, each uniformly among the values that keep
/// every completed triad valid; restarts on a dead end.
fn constrained_labeling(rng: &mut ChaCha8Rng, triads: &[[Symbol; 3]], max: u32) -> SymbolSpins {
    'restart: loop {
        let mut spins = SymbolSpins::new();
        for sym in Symbol::ALL {
            let options: Vec<u32> = (0..=max)
                .filter(|&v| {
                    spins.insert(sym, Spin::new(v));
                    let ok = triads
                        .iter()
                        .filter(|t| t.iter().all(|s| spins.contains_key(s)))
                        .all(|t| triad_ok(&spins, t));
                    spins.remove(&sym);
                    ok
                })
                .collect();
            if options.is_empty() {
                continue 'restart;
            }
            spins.insert(sym, Spin::new(options[rng.gen_range(0..options.len())]));
        }
        return spins;
    }
}

fn labeling_transfer() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_ed6a);
    let triads = point_triads();
    let complex = space_dual_desargues(&build_desargues()).unwrap();
    let mut samples: Vec<SymbolSpins> = (0..1500).map(|_| constrained_labeling(&mut rng, &triads, 4)).collect();
    samples.extend((0..1500).map(|_| Symbol::ALL.iter().map(|&s| (s, Spin::new(rng.gen_range(0..=4)))).collect()));

    let mut valid = 0;
    let mut disagreements = 0;
    let mut value_mismatches = 0;
    for spins in &samples {
        let label_ok = label_desargues(spins).is_ok();
        let raw = DesarguesSpinLabeling::assign(spins).unwrap();
        let transferred = transfer_labeling(&raw, &complex);
        if label_ok != transferred.is_ok() {
            disagreements += 1;
        }
        if let (true, Ok(simplex)) = (label_ok, transferred) {
            valid += 1;
            let quads = raw.quadrangle_sixj();
            let tets = simplex.tetrahedral_sixj();
            if quads.iter().zip(&tets).any(|(q, t)| value(q) != value(t)) {
                value_mismatches += 1;
            }
        }
    }
    outcome(
        valid >= 1000 && disagreements == 0 && value_mismatches == 0,
        format!(
            "{} labelings ({valid} valid), {disagreements} pass/fail disagreements, {value_mismatches} symbol value mismatches",
            samples.len()
        ),
    )
}

/// Moves a zero entry to the lower-left slot with column swaps and
/// upper/lower flips of two columns at a time.
fn zero_to_lower_left(t: [u32; 6]) -> Option<[u32; 6]> {
    let mut cols = [[t[0], t[3]], [t[1], t[4]], [t[2], t[5]]];
    let k = (0..3).find(|&k| cols[k].contains(&0))?;
    cols.swap(0, k);
    if cols[0][1] != 0 {
        cols[0].swap(0, 1);
        cols[1].swap(0, 1);
    }
    Some([cols[0][0], cols[1][0], cols[2][0], cols[0][1], cols[1][1], cols[2][1]])
}

fn oracle_equivalence() -> Outcome {
    let symbols = common::valid_symbols(4);
    let mut contraction_bad = 0;
    let mut closed_checked = 0;
    let mut closed_bad = 0;
    for &t in &symbols {
        let v = value(&SixJ::from_twice(t));
        if v != common::sixj_by_contraction(t) {
            contraction_bad += 1;
        }
        if let Some([a, b, x, 0, d, y]) = zero_to_lower_left(t) {
            closed_checked += 1;
            if d != x || y != b || v != common::one_zero_closed_form(a, b, x) {
                closed_bad += 1;
            }
        }
    }
    outcome(
        contraction_bad == 0 && closed_bad == 0,
        format!(
            "{} symbols: {contraction_bad} disagree with the 3j contraction; {closed_bad} of {closed_checked} with a zero entry disagree with the closed form",
            symbols.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("classical symmetry", classical_suite),
        ("Regge symmetry", regge_suite),
        ("orthogonality", orthogonality_suite),
        ("Biedenharn-Elliott", be_suite),
        ("range law", range_law),
        ("regularization chain", regularization_chain),
        ("Desargues structure", desargues_structure),
        ("space-dual round trip", space_dual_round_trip),
        ("labeling transfer", labeling_transfer),
        ("oracle equivalence", oracle_equivalence),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        let verdict = if result.pass { "PASS" } else { "FAIL" };
        if !result.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {name}: {verdict} [{:.1}s] {}",
            n + 1,
            start.elapsed().as_secs_f64(),
            result.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
