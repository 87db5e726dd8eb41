//! Acceptance suite. Runs every criterion, prints one line each and exits
//! non-zero if any fails.
//!
//! `UPDATE_GOLDEN=1` rewrites the derivative golden file instead of
//! comparing against it.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use linkinv::catalog::{self, catalog};
use linkinv::constructions::{
    bing_double, cable, random_clasper_on, random_cmk_move, random_self_ck_move, realize_milnor_clasper, trial_rng,
    whitehead_double, CableSpec, DEFAULT_CROSSING_BUDGET as BUDGET,
};
use linkinv::diagram::LinkDiagram;
use linkinv::harness::{derivative_report, verify_cmk, verify_self_ck, witness_index};
use linkinv::magnus::{arc_expansion, MilnorIndex, MilnorInvariants};
use linkinv::polynomials::{alexander, conway, jones, LaurentPoly, DEFAULT_BRACKET_BUDGET};
use linkinv::wirtinger::WirtingerPresentation;
use linkinv::Result;

const SEED: u64 = 7;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// mu(123123) of the Whitehead-doubled Borromean rings is ±1 modulo 0 and
/// every shorter index vanishes.
fn wh_double_borromean_mu() -> Result<Outcome> {
    let d = catalog("wh-double-borromean")?;
    let m = MilnorInvariants::for_diagram(&d, 6)?;
    let v = m.mu_bar(&MilnorIndex::parse("123123")?)?;
    let shorter = MilnorIndex::all(3, 5);
    let mut nonzero = Vec::new();
    for i in &shorter {
        let w = m.mu_bar(i)?;
        if !w.residue.is_zero() {
            nonzero.push(i.to_string());
        }
    }
    let ok = v.delta.is_zero() && v.residue.abs().is_one() && nonzero.is_empty();
    Ok(outcome(
        ok,
        format!(
            "mu(123123) = {} with delta {} (want residue ±1, delta 0); {} of {} indices of length < 6 nonzero{}",
            v.value,
            v.delta,
            nonzero.len(),
            shorter.len(),
            if nonzero.is_empty() {
                String::new()
            } else {
                format!(": {}", nonzero.join(" "))
            }
        ),
    ))
}

fn wh_double_borromean_polys() -> Result<Outcome> {
    let d = catalog("wh-double-borromean")?;
    let (z, a) = (conway(&d)?, alexander(&d)?);
    Ok(outcome(
        z.is_zero() && a.is_zero(),
        format!("conway = {}, alexander = {}", z.render("z"), a.render("t")),
    ))
}

fn published_jones() -> LaurentPoly {
    LaurentPoly::from_pairs([(-9, 1), (-7, -2), (-5, 1), (-3, -1), (3, -1), (5, 1), (7, -2), (9, 1)])
}

fn wh_wh_hopf_jones() -> Result<Outcome> {
    let d = catalog("wh-wh-hopf")?;
    let want = published_jones();
    let v = jones(&d, DEFAULT_BRACKET_BUDGET)?;
    let vm = jones(&d.mirror()?, DEFAULT_BRACKET_BUDGET)?;
    let which = if v == want {
        "as drawn"
    } else if vm == want {
        "mirror"
    } else {
        "neither"
    };
    Ok(outcome(
        v == want || vm == want,
        format!("{} crossings, V = {v} (match: {which})", d.crossing_count()),
    ))
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/jones_derivatives.txt")
}

fn derivative_golden() -> Result<Outcome> {
    let r = derivative_report("wh-wh-hopf", "unlink-2", 4)?;
    let text = r.render();
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).expect("golden directory");
        std::fs::write(&path, &text).expect("write golden file");
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_default();
    let found = r.first_difference_in_q().is_some() && r.first_difference_in_sqrt_q().is_some();
    Ok(outcome(
        stored == text && found,
        format!(
            "first distinguishing order {} in q, {} in sqrt(q); golden file {}",
            r.first_difference_in_q().map_or("none".into(), |o| o.to_string()),
            r.first_difference_in_sqrt_q().map_or("none".into(), |o| o.to_string()),
            if stored == text { "matches" } else { "differs" }
        ),
    ))
}

fn self_ck_invariance() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 1..=3 {
        let r = verify_self_ck(k, 6, 100, SEED)?;
        let failed = r.failed_trials();
        let above: usize = r.trials.iter().filter(|t| t.changed_above > 0).count();
        ok &= failed == 0 && r.trials.len() == 100;
        parts.push(format!(
            "k={k}: {failed} of 100 changed ({above} moved an index with k+1 repeats)"
        ));
    }
    Ok(outcome(ok, parts.join("; ")))
}

fn self_ck_non_invariance() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 1..=2 {
        let idx = witness_index(k);
        let n = idx.entries().iter().copied().max().unwrap();
        let before = MilnorInvariants::for_diagram(&catalog(&format!("unlink-{n}"))?, idx.len())?.mu_bar(&idx)?;
        let (d, cl) = realize_milnor_clasper(&idx, BUDGET)?;
        let after = MilnorInvariants::for_diagram(&d, idx.len())?.mu_bar(&idx)?;
        let on_first = cl.leaves.iter().filter(|l| l.component == 0).count();
        let good = before.value.is_zero()
            && before.delta.is_zero()
            && after.delta.is_zero()
            && after.residue.abs().is_one()
            && on_first == k + 1
            && cl.degree() == idx.len() - 1;
        ok &= good;
        parts.push(format!(
            "k={k}: mu({idx}) {} -> {} (delta {}), one clasper with {} leaves on component 1",
            before.value, after.value, after.delta, on_first
        ));
    }
    Ok(outcome(ok, parts.join("; ")))
}

fn cabling_identity() -> Result<Outcome> {
    let cases: [(&str, &[&[usize]]); 3] = [
        ("hopf", &[&[2, 1], &[1, 3], &[2, 2]]),
        ("borromean", &[&[2, 1, 1], &[1, 2, 2]]),
        ("whitehead", &[&[2, 1], &[1, 2], &[2, 2]]),
    ];
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for (name, specs) in cases {
        let d = catalog(name)?;
        let base = MilnorInvariants::for_diagram(&d, 4)?;
        for mult in specs {
            let c = cable(
                &d,
                &CableSpec {
                    multiplicities: mult.to_vec(),
                },
                BUDGET,
            )?;
            let m = MilnorInvariants::for_diagram(&c.diagram, 4)?;
            for i in MilnorIndex::all(c.diagram.n_components(), 4) {
                let image = MilnorIndex::new(i.entries().iter().map(|&e| c.h[e - 1] + 1).collect())?;
                let (x, y) = (m.mu_bar(&i)?, base.mu_bar(&image)?);
                checked += 1;
                if x.class() != y.class() {
                    failures.push(format!("{name} {mult:?} {i}"));
                }
            }
        }
    }
    Ok(outcome(
        failures.is_empty(),
        format!(
            "{} of {checked} indices disagree{}",
            failures.len(),
            failures.first().map_or(String::new(), |f| format!(", first {f}"))
        ),
    ))
}

/// Random constructions over the catalog: clasper surgeries of every kind,
/// doubles and cables.
fn random_diagram(t: u64) -> Result<LinkDiagram> {
    let mut rng = trial_rng(SEED, t);
    let names = catalog::names();
    let d = catalog(&names[rng.gen_range(0..names.len())])?;
    let n = d.n_components();
    let c = rng.gen_range(0..n);
    Ok(match rng.gen_range(0..6) {
        0 => random_self_ck_move(&d, c, rng.gen_range(1..=3), &mut rng, BUDGET)?.result,
        1 => random_cmk_move(&d, 2, 1, &mut rng, BUDGET)?.result,
        2 => {
            let comps: Vec<usize> = (0..rng.gen_range(2..=4)).map(|_| rng.gen_range(0..n)).collect();
            random_clasper_on(&d, &comps, &mut rng, BUDGET)?.result
        }
        3 => whitehead_double(&d, c, if rng.gen_bool(0.5) { 1 } else { -1 }, BUDGET)?,
        4 => bing_double(&d, c, BUDGET)?,
        _ => {
            let mult: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
            cable(&d, &CableSpec { multiplicities: mult }, BUDGET)?.diagram
        }
    })
}

fn length_two_is_linking(d: &LinkDiagram) -> Result<bool> {
    let lk = d.component_data()?.linking;
    let m = MilnorInvariants::for_diagram(d, 2)?;
    for (i, row) in lk.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let idx = MilnorIndex::new(vec![i + 1, j + 1])?;
            if m.mu(&idx)? != BigInt::from(v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn stabilizes(d: &LinkDiagram) -> Result<bool> {
    let p = WirtingerPresentation::from_pd(&d.pd)?;
    for q in 1..=4 {
        let a = arc_expansion::<BigInt>(&p, q)?;
        let b = arc_expansion::<BigInt>(&p, q + 1)?;
        for (x, y) in a.arcs.iter().zip(&b.arcs) {
            if y.terms().into_iter().any(|(w, c)| w.len() <= q && x.coeff(&w) != c) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn base_arc_independent(d: &LinkDiagram, max_len: usize) -> Result<bool> {
    let n = d.n_components();
    let reference = MilnorInvariants::for_diagram(d, max_len)?;
    let indices = MilnorIndex::all(n, max_len);
    for shift in 1..=3usize {
        let rot: Vec<usize> = (0..n).map(|c| shift * (c + 2) + c).collect();
        let p = WirtingerPresentation::from_pd_rotated(&d.pd, &rot)?;
        let m = MilnorInvariants::new(&p, max_len)?;
        for i in &indices {
            if m.mu_bar(i)?.class() != reference.mu_bar(i)?.class() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn isotopic_pairs_agree(max_len: usize) -> Result<(usize, Vec<String>)> {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for name in catalog::names() {
        let e = catalog::entry(&name)?;
        for alt in e.alternates {
            let (a, b) = (catalog(&name)?, catalog(alt)?);
            let (ma, mb) = (
                MilnorInvariants::for_diagram(&a, max_len)?,
                MilnorInvariants::for_diagram(&b, max_len)?,
            );
            pairs += 1;
            for i in MilnorIndex::all(a.n_components(), max_len) {
                if ma.mu_bar(&i)?.class() != mb.mu_bar(&i)?.class() {
                    bad.push(format!("{name}/{alt} {i}"));
                    break;
                }
            }
        }
    }
    Ok((pairs, bad))
}

fn oracle_suite() -> Result<Outcome> {
    let catalog_links = catalog::all()?;
    let mut lk_bad = Vec::new();
    for (name, d) in &catalog_links {
        if !length_two_is_linking(d)? {
            lk_bad.push(name.to_string());
        }
    }
    for t in 0..500 {
        let d = random_diagram(t)?;
        if !length_two_is_linking(&d)? {
            lk_bad.push(format!("random {t}"));
        }
    }
    let mut stab_bad = Vec::new();
    let mut base_bad = Vec::new();
    for (name, d) in &catalog_links {
        if !stabilizes(d)? {
            stab_bad.push(name.to_string());
        }
        let len = if d.n_components() == 3 { 5 } else { 6 };
        if !base_arc_independent(d, len)? {
            base_bad.push(name.to_string());
        }
    }
    let (pairs, iso_bad) = isotopic_pairs_agree(6)?;
    let ok = lk_bad.is_empty() && stab_bad.is_empty() && base_bad.is_empty() && iso_bad.is_empty();
    let list = |v: &[String]| if v.is_empty() { "ok".to_string() } else { v.join(",") };
    Ok(outcome(
        ok,
        format!(
            "length 2 = lk on {} catalog + 500 random: {}; stabilization: {}; base arc: {}; {} isotopic pairs up to length 6: {}",
            catalog_links.len(),
            list(&lk_bad),
            list(&stab_bad),
            list(&base_bad),
            pairs,
            list(&iso_bad)
        ),
    ))
}

fn cmk_campaign() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (m, k) in [(2, 1), (3, 2)] {
        let r = verify_cmk(m, k, 5, 100, SEED)?;
        ok &= r.passed() && r.trials.len() == 100;
        parts.push(format!("(m,k)=({m},{k}): {} of 100 changed", r.failed_trials()));
    }
    Ok(outcome(ok, parts.join("; ")))
}

type Criterion = (u32, &'static str, Duration, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            1,
            "wh-double-borromean mu(123123)",
            Duration::from_secs(30),
            wh_double_borromean_mu,
        ),
        (
            2,
            "wh-double-borromean conway/alexander",
            Duration::from_secs(10),
            wh_double_borromean_polys,
        ),
        (3, "wh-wh-hopf jones", Duration::from_secs(60), wh_wh_hopf_jones),
        (4, "jones derivative report", Duration::from_secs(1), derivative_golden),
        (5, "self C_k invariance", Duration::from_secs(300), self_ck_invariance),
        (
            6,
            "self C_k non-invariance",
            Duration::from_secs(60),
            self_ck_non_invariance,
        ),
        (7, "cabling identity", Duration::from_secs(120), cabling_identity),
        (8, "oracle suite", Duration::from_secs(300), oracle_suite),
        (9, "C_m^(k+1) campaign", Duration::from_secs(300), cmk_campaign),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (n, title, limit, run) in criteria {
        if !filter.is_empty()
            && !filter.iter().any(|f| match f.parse::<u64>() {
                Ok(k) => k == n as u64,
                Err(_) => title.contains(f.as_str()),
            })
        {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let (passed, detail) = match result {
            Ok(o) => (o.passed && took <= limit, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !passed {
            failed += 1;
        }
        println!(
            "criterion {n} [{}] {title}: {detail} ({:.2}s, limit {}s)",
            if passed { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
