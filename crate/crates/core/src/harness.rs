//! Seeded campaigns checking that Milnor invariants with few repeats survive
//! self C_k-moves and C_m^(k+1)-moves, and that one extra repeat breaks this.
//!
//! Trial `t` draws everything from `trial_rng(seed, t)`, so a report is a
//! pure function of its parameters.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::catalog;
use crate::constructions::{
    random_cmk_move, random_self_ck_move, realize_milnor_clasper, trial_rng, RandomMove, DEFAULT_CROSSING_BUDGET,
};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::magnus::{MilnorIndex, MilnorInvariants, MilnorValue};
use crate::polynomials::{derivatives_at_one, jones, DerivativeRow, LaurentPoly, DEFAULT_BRACKET_BUDGET};

/// Catalog links the campaigns draw from.
pub const CAMPAIGN_LINKS: &[&str] = &[
    "unknot",
    "unlink-2",
    "unlink-3",
    "hopf",
    "hopf-alt",
    "trefoil",
    "whitehead",
    "whitehead-alt",
    "borromean",
    "borromean-alt",
    "wh-double-borromean",
    "wh-wh-hopf",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub before: MilnorValue,
    pub after: MilnorValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: u64,
    pub link: String,
    pub crossings_before: usize,
    pub crossings_after: usize,
    pub provenance: Vec<String>,
    pub clasper: Value,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Indices with exactly one repeat too many that did change. Not a
    /// failure; shows the move was not an isotopy in disguise.
    pub changed_above: usize,
}

impl TrialRecord {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// A non-invariance witness: `mu(index)` on the unlink and on the result of
/// one clasper surgery on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationRecord {
    pub index: MilnorIndex,
    pub leaves_on_one_component: usize,
    pub before: MilnorValue,
    pub after: MilnorValue,
    pub provenance: Vec<String>,
}

impl RealizationRecord {
    pub fn passed(&self) -> bool {
        let zero = |v: &MilnorValue| v.delta.is_zero() && v.residue.is_zero();
        zero(&self.before)
            && self.after.delta.is_zero()
            && self.after.residue.abs().is_one()
            && self.leaves_on_one_component > self.index.r() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub campaign: String,
    pub seed: u64,
    /// Named integer parameters (k, m, max index length) in a fixed order.
    pub params: Vec<(&'static str, usize)>,
    pub trials: Vec<TrialRecord>,
    pub realizations: Vec<RealizationRecord>,
    /// Replay material for failed trials: base diagram and clasper.
    pub dumps: Vec<Value>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.trials.iter().all(TrialRecord::passed) && self.realizations.iter().all(RealizationRecord::passed)
    }

    pub fn failed_trials(&self) -> usize {
        self.trials.iter().filter(|t| !t.passed()).count()
    }

    pub fn to_json(&self) -> Value {
        let params: serde_json::Map<String, Value> =
            self.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({
            "campaign": self.campaign,
            "seed": self.seed,
            "params": params,
            "trial_count": self.trials.len(),
            "passed": self.passed(),
            "trials": self.trials.iter().map(|t| json!({
                "trial": t.trial,
                "link": t.link,
                "crossings": [t.crossings_before, t.crossings_after],
                "provenance": t.provenance,
                "clasper": t.clasper,
                "checked": t.checked,
                "changed_above": t.changed_above,
                "passed": t.passed(),
                "mismatches": t.mismatches.iter().map(|m| json!({
                    "before": m.before.to_json(),
                    "after": m.after.to_json(),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "realizations": self.realizations.iter().map(|r| json!({
                "I": r.index.to_string(),
                "leaves_on_one_component": r.leaves_on_one_component,
                "before": r.before.to_json(),
                "after": r.after.to_json(),
                "provenance": r.provenance,
                "passed": r.passed(),
            })).collect::<Vec<_>>(),
            "dumps": self.dumps,
        })
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(
            s,
            "campaign {} {} seed={} trials={}",
            self.campaign,
            params.join(" "),
            self.seed,
            self.trials.len()
        );
        for t in &self.trials {
            let _ = writeln!(
                s,
                "trial {:>3} {:<20} {:>3} -> {:>3} crossings  {:>4} indices  {:>3} above  {}",
                t.trial,
                t.link,
                t.crossings_before,
                t.crossings_after,
                t.checked,
                t.changed_above,
                if t.passed() {
                    "ok".to_string()
                } else {
                    format!("{} changed", t.mismatches.len())
                }
            );
            for m in &t.mismatches {
                let _ = writeln!(
                    s,
                    "    mu({}) {} mod {} -> {} mod {}",
                    m.before.index, m.before.residue, m.before.delta, m.after.residue, m.after.delta
                );
            }
        }
        for r in &self.realizations {
            let _ = writeln!(
                s,
                "realize {:<8} unlink {} -> {} (delta {}), {} leaves on one component  {}",
                r.index.to_string(),
                r.before.residue,
                r.after.residue,
                r.after.delta,
                r.leaves_on_one_component,
                if r.passed() { "ok" } else { "FAILED" }
            );
        }
        let _ = writeln!(
            s,
            "result: {} ({} of {} trials unchanged, {} of {} realizations)",
            if self.passed() { "pass" } else { "FAIL" },
            self.trials.len() - self.failed_trials(),
            self.trials.len(),
            self.realizations.iter().filter(|r| r.passed()).count(),
            self.realizations.len()
        );
        s
    }
}

/// Catalog diagrams and their invariants, computed once per campaign.
struct Baselines {
    max_len: usize,
    cache: BTreeMap<&'static str, (LinkDiagram, MilnorInvariants)>,
}

impl Baselines {
    fn new(max_len: usize) -> Baselines {
        Baselines {
            max_len,
            cache: BTreeMap::new(),
        }
    }

    fn get(&mut self, name: &'static str) -> Result<&(LinkDiagram, MilnorInvariants)> {
        if !self.cache.contains_key(name) {
            let d = catalog::catalog(name)?;
            let m = MilnorInvariants::for_diagram(&d, self.max_len)?;
            self.cache.insert(name, (d, m));
        }
        Ok(&self.cache[name])
    }
}

/// Every index on `n` components with at most `max_repeat` repeats of any
/// entry and length at most `max_len`.
pub fn indices_up_to(n: usize, max_len: usize, max_repeat: usize) -> Vec<MilnorIndex> {
    MilnorIndex::all(n, max_len)
        .into_iter()
        .filter(|i| i.r() <= max_repeat)
        .collect()
}

/// Compares normalised classes `(residue, delta)` on `indices`.
pub fn compare(before: &MilnorInvariants, after: &MilnorInvariants, indices: &[MilnorIndex]) -> Result<Vec<Mismatch>> {
    let mut out = Vec::new();
    for i in indices {
        let (b, a) = (before.mu_bar(i)?, after.mu_bar(i)?);
        if b.class() != a.class() {
            out.push(Mismatch { before: b, after: a });
        }
    }
    Ok(out)
}

fn run_trial(
    trial: u64,
    name: &str,
    base: &MilnorInvariants,
    mv: &RandomMove,
    k: usize,
    max_len: usize,
    dumps: &mut Vec<Value>,
) -> Result<TrialRecord> {
    let after = MilnorInvariants::for_diagram(&mv.result, max_len)?;
    let n = mv.base.n_components();
    let indices = indices_up_to(n, max_len, k);
    let mismatches = compare(base, &after, &indices)?;
    let above: Vec<MilnorIndex> = indices_up_to(n, max_len, k + 1)
        .into_iter()
        .filter(|i| i.r() == k + 1)
        .collect();
    let changed_above = compare(base, &after, &above)?.len();
    if !mismatches.is_empty() {
        dumps.push(json!({
            "trial": trial,
            "link": name,
            "base": mv.base.slice()?.to_string(),
            "clasper": mv.clasper.to_json(),
        }));
    }
    Ok(TrialRecord {
        trial,
        link: name.to_string(),
        crossings_before: mv.base.crossing_count(),
        crossings_after: mv.result.crossing_count(),
        provenance: mv.result.provenance.clone(),
        clasper: mv.clasper.to_json(),
        checked: indices.len(),
        mismatches,
        changed_above,
    })
}

fn check_config(trials: usize, max_len: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is needed".into()));
    }
    if max_len < 2 {
        return Err(Error::InvalidArgument("index length must be at least 2".into()));
    }
    Ok(())
}

/// The index `1^(k+1) 2 3` witnesses non-invariance under self C_k-moves.
/// Shorter candidates such as `1^(k+1) 2` have `mu = 0` on every link where
/// they are defined, so they cannot witness anything.
pub fn witness_index(k: usize) -> MilnorIndex {
    let mut e = vec![1; k + 1];
    e.extend([2, 3]);
    MilnorIndex::new(e).expect("witness indices are well formed")
}

fn realization_record(idx: MilnorIndex) -> Result<RealizationRecord> {
    let n = idx.entries().iter().copied().max().unwrap_or(1);
    let unlink = catalog::catalog(&format!("unlink-{n}"))?;
    let before = MilnorInvariants::for_diagram(&unlink, idx.len())?.mu_bar(&idx)?;
    let (d, cl) = realize_milnor_clasper(&idx, DEFAULT_CROSSING_BUDGET)?;
    let after = MilnorInvariants::for_diagram(&d, idx.len())?.mu_bar(&idx)?;
    let mut per_comp = vec![0; n];
    for l in &cl.leaves {
        per_comp[l.component] += 1;
    }
    Ok(RealizationRecord {
        index: idx,
        leaves_on_one_component: per_comp.into_iter().max().unwrap_or(0),
        before,
        after,
        provenance: d.provenance,
    })
}

/// Invariance arm: `trials` random self C_k-moves on catalog links, checking
/// every index with at most `k` repeats and length at most `max_len`.
/// Non-invariance arm: `mu(1^(k+1) 2 3)` realised from the unlink.
pub fn verify_self_ck(k: usize, max_len: usize, trials: usize, seed: u64) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    check_config(trials, max_len)?;
    let mut baselines = Baselines::new(max_len);
    let mut records = Vec::with_capacity(trials);
    let mut dumps = Vec::new();
    for t in 0..trials as u64 {
        let mut rng = trial_rng(seed, t);
        let name = CAMPAIGN_LINKS[rng.gen_range(0..CAMPAIGN_LINKS.len())];
        let (d, base) = baselines.get(name)?;
        let c = rng.gen_range(0..d.n_components());
        let mv = random_self_ck_move(d, c, k, &mut rng, DEFAULT_CROSSING_BUDGET)?;
        records.push(run_trial(t, name, base, &mv, k, max_len, &mut dumps)?);
    }
    Ok(VerificationReport {
        campaign: "self-ck".into(),
        seed,
        params: vec![("k", k), ("max_len", max_len)],
        trials: records,
        realizations: vec![realization_record(witness_index(k))?],
        dumps,
    })
}

/// `trials` random degree-`m` claspers with at least `k + 1` leaves on one
/// component; every index with at most `k` repeats and length at most
/// `max_len` must be unchanged.
pub fn verify_cmk(m: usize, k: usize, max_len: usize, trials: usize, seed: u64) -> Result<VerificationReport> {
    if k == 0 || m < k {
        return Err(Error::InvalidArgument(format!(
            "need m >= k >= 1, got m = {m}, k = {k}"
        )));
    }
    check_config(trials, max_len)?;
    let mut baselines = Baselines::new(max_len);
    let mut records = Vec::with_capacity(trials);
    let mut dumps = Vec::new();
    for t in 0..trials as u64 {
        let mut rng = trial_rng(seed, t);
        let name = CAMPAIGN_LINKS[rng.gen_range(0..CAMPAIGN_LINKS.len())];
        let (d, base) = baselines.get(name)?;
        let mv = random_cmk_move(d, m, k, &mut rng, DEFAULT_CROSSING_BUDGET)?;
        records.push(run_trial(t, name, base, &mv, k, max_len, &mut dumps)?);
    }
    Ok(VerificationReport {
        campaign: "cmk".into(),
        seed,
        params: vec![("m", m), ("k", k), ("max_len", max_len)],
        trials: records,
        realizations: Vec::new(),
        dumps,
    })
}

/// Side-by-side derivatives at `q = 1` of two Jones polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeReport {
    pub names: [String; 2],
    pub polys: [LaurentPoly; 2],
    pub rows: [Vec<DerivativeRow>; 2],
}

impl DerivativeReport {
    /// Lowest order whose derivative in `q` differs.
    pub fn first_difference_in_q(&self) -> Option<u32> {
        self.rows[0]
            .iter()
            .zip(&self.rows[1])
            .find(|(a, b)| a.full != b.full)
            .map(|(a, _)| a.order)
    }

    /// Lowest order whose derivative in `q^(1/2)` differs.
    pub fn first_difference_in_sqrt_q(&self) -> Option<u32> {
        self.rows[0]
            .iter()
            .zip(&self.rows[1])
            .find(|(a, b)| a.half != b.half)
            .map(|(a, _)| a.order)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (name, p) in self.names.iter().zip(&self.polys) {
            let _ = writeln!(s, "V({name}) = {p}");
        }
        let _ = writeln!(s, "derivatives at q = 1");
        let _ = writeln!(
            s,
            "{:<6}{:>14}{:>14}{:>16}{:>16}",
            "order", "d/dq A", "d/dq B", "d/dsqrt(q) A", "d/dsqrt(q) B"
        );
        for (a, b) in self.rows[0].iter().zip(&self.rows[1]) {
            let _ = writeln!(
                s,
                "{:<6}{:>14}{:>14}{:>16}{:>16}",
                a.order, a.full, b.full, a.half, b.half
            );
        }
        let _ = writeln!(s, "A = {}, B = {}", self.names[0], self.names[1]);
        let show = |o: Option<u32>| o.map_or("none".to_string(), |o| o.to_string());
        let _ = writeln!(
            s,
            "first distinguishing order in q: {}",
            show(self.first_difference_in_q())
        );
        let _ = writeln!(
            s,
            "first distinguishing order in sqrt(q): {}",
            show(self.first_difference_in_sqrt_q())
        );
        s
    }
}

/// Derivatives of orders `1..=max_order` at 1 of the Jones polynomials of two
/// catalog links.
pub fn derivative_report(a: &str, b: &str, max_order: u32) -> Result<DerivativeReport> {
    let pa = jones(&catalog::catalog(a)?, DEFAULT_BRACKET_BUDGET)?;
    let pb = jones(&catalog::catalog(b)?, DEFAULT_BRACKET_BUDGET)?;
    let rows = [derivatives_at_one(&pa, max_order)?, derivatives_at_one(&pb, max_order)?];
    Ok(DerivativeReport {
        names: [a.to_string(), b.to_string()],
        polys: [pa, pb],
        rows,
    })
}
