//! Link constructions on slice words: zero-framed cabling, Whitehead and
//! Bing doubling, band sums and tree-clasper surgery.
//!
//! Every construction emits a positionally valid word and then recomputes
//! cup orientations by tracing, so caps never need orientation bookkeeping.
//! Components keep their first cups, which keeps their numbering and
//! orientation stable.

pub mod clasper;

use crate::diagram::pd::slice_crossing_sign;
use crate::diagram::slice::{Trace, TL, TR};
use crate::diagram::{LinkDiagram, Orient, SliceEvent, SliceWord};
use crate::error::{Error, Result};

pub use clasper::{
    clasper_surgery, random_clasper_on, random_cmk_move, random_self_ck_move, random_tree, realize_milnor,
    realize_milnor_clasper, tree_link, trial_rng, Leaf, RandomMove, Tree, TreeClasper,
};

/// Largest diagram any construction will emit unless told otherwise.
pub const DEFAULT_CROSSING_BUDGET: usize = 512;

pub(crate) fn check_budget(w: &SliceWord, budget: usize) -> Result<()> {
    let crossings = w.crossing_count();
    if crossings > budget {
        return Err(Error::BudgetExceeded { crossings, budget });
    }
    Ok(())
}

pub(crate) fn finish(w: SliceWord, src: &LinkDiagram, step: String, budget: usize) -> Result<LinkDiagram> {
    check_budget(&w, budget)?;
    let mut d = LinkDiagram::from_slice(w.reoriented()?)?;
    d.provenance = src.provenance.clone();
    d.provenance.push(step);
    Ok(d)
}

fn require_component(d: &LinkDiagram, c: usize) -> Result<()> {
    if c >= d.n_components() {
        return Err(Error::InvalidArgument(format!(
            "no component {} (diagram has {})",
            c + 1,
            d.n_components()
        )));
    }
    Ok(())
}

/// Sign of crossing event `k` of a traced word.
pub(crate) fn event_sign(w: &SliceWord, t: &Trace, k: usize) -> i32 {
    slice_crossing_sign(&w.events[k], !t.port_out[k][TL], !t.port_out[k][TR])
}

/// Zero-framed parallels: component `i` becomes `multiplicities[i]` copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableSpec {
    pub multiplicities: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Cabled {
    pub diagram: LinkDiagram,
    /// Source component of every new component (0-based).
    pub h: Vec<usize>,
}

struct CableWord {
    word: SliceWord,
    /// Source event of every new event; `None` for framing twists.
    origin: Vec<Option<usize>>,
    /// First new event emitted for every source event.
    start: Vec<usize>,
}

fn cable_word(w: &SliceWord, t: &Trace, r: &[usize], writhes: &[i64]) -> CableWord {
    let mut events = Vec::new();
    let mut origin = Vec::new();
    let mut start = Vec::with_capacity(w.len());
    for (k, e) in w.events.iter().enumerate() {
        start.push(events.len());
        let width = |x: usize| r[t.strand(k, x).0];
        let offset = |x: usize| (0..x).map(width).sum::<usize>();
        let mut push = |ev: SliceEvent, o: Option<usize>| {
            events.push(ev);
            origin.push(o);
        };
        match *e {
            SliceEvent::Cup(i, o) => {
                let comp = t.port_comp[k][0];
                let (rr, p) = (r[comp], offset(i));
                for j in 0..rr {
                    push(SliceEvent::Cup(p + j, o), Some(k));
                }
                let wr = writhes[comp];
                if rr >= 2 && wr != 0 && t.first_cup[comp] == k {
                    // for parallel strands CrossUnder is positive
                    let twist = |i| {
                        if wr > 0 {
                            SliceEvent::CrossOver(i)
                        } else {
                            SliceEvent::CrossUnder(i)
                        }
                    };
                    for _ in 0..wr.unsigned_abs() * rr as u64 {
                        for s in 0..rr - 1 {
                            push(twist(p + s), None);
                        }
                    }
                }
            }
            SliceEvent::Cap(i) => {
                let (rr, p) = (r[t.port_comp[k][0]], offset(i));
                for j in (0..rr).rev() {
                    push(SliceEvent::Cap(p + j), Some(k));
                }
            }
            SliceEvent::CrossOver(i) | SliceEvent::CrossUnder(i) => {
                let (ra, rb, p) = (width(i), width(i + 1), offset(i));
                for a in (0..ra).rev() {
                    for b in 0..rb {
                        push(e.with_pos(p + a + b), Some(k));
                    }
                }
            }
        }
    }
    CableWord {
        word: SliceWord::new(events),
        origin,
        start,
    }
}

/// Source component of each component of a derived word, found through any
/// event with a recorded origin (ports map one to one).
fn source_components(new: &SliceWord, origin: &[Option<usize>], old: &Trace) -> Result<Vec<usize>> {
    let t = new.trace()?;
    let mut out = vec![usize::MAX; t.n_components];
    for (k, o) in origin.iter().enumerate() {
        let Some(o) = *o else { continue };
        let ports = if new.events[k].is_crossing() { 4 } else { 2 };
        for p in 0..ports {
            let c = t.port_comp[k][p];
            if out[c] == usize::MAX {
                out[c] = old.port_comp[o][p];
            }
        }
    }
    if out.contains(&usize::MAX) {
        return Err(Error::Consistency("cable component without a source".into()));
    }
    Ok(out)
}

/// Replaces each component by zero-framed blackboard parallels.
pub fn cable(d: &LinkDiagram, spec: &CableSpec, budget: usize) -> Result<Cabled> {
    let w = d.slice()?;
    let n = d.n_components();
    if spec.multiplicities.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} multiplicities for {} components",
            spec.multiplicities.len(),
            n
        )));
    }
    if spec.multiplicities.contains(&0) {
        return Err(Error::InvalidArgument("multiplicities must be at least 1".into()));
    }
    let t = w.trace()?;
    let cd = d.component_data()?;
    let cw = cable_word(w, &t, &spec.multiplicities, &cd.writhe);
    check_budget(&cw.word, budget)?;
    let h = source_components(&cw.word, &cw.origin, &t)?;
    let step = format!("cable {:?}", spec.multiplicities);
    let diagram = finish(cw.word, d, step, budget)?;
    Ok(Cabled { diagram, h })
}

fn clasp_kind(w: &SliceWord, k: usize, sign: i32) -> Result<SliceEvent> {
    let t = w.trace()?;
    let s = event_sign(w, &t, k);
    let e = w.events[k];
    Ok(if s == sign { e } else { e.mirrored() })
}

/// The 2-cable of component `c`, plus where its first cup pair and last cap
/// pair landed.
fn doubled(d: &LinkDiagram, c: usize) -> Result<(SliceWord, usize, usize)> {
    require_component(d, c)?;
    let w = d.slice()?;
    let t = w.trace()?;
    let cd = d.component_data()?;
    let mut r = vec![1; d.n_components()];
    r[c] = 2;
    let cw = cable_word(w, &t, &r, &cd.writhe);
    let last_cap = (0..w.len())
        .rev()
        .find(|&k| matches!(w.events[k], SliceEvent::Cap(_)) && t.port_comp[k][0] == c)
        .ok_or_else(|| Error::InvalidDiagram("component without a cap".into()))?;
    Ok((cw.word, cw.start[t.first_cup[c]], cw.start[last_cap]))
}

/// Replaces the nested cup pair at `s` by two side-by-side cups hooked by a
/// clasp; returns the index of the first clasp crossing.
fn hook_cups(w: &mut SliceWord, s: usize) -> usize {
    let SliceEvent::Cup(p, o) = w.events[s] else {
        unreachable!("cable emits cups here")
    };
    w.events.splice(
        s..s + 2,
        [
            SliceEvent::Cup(p, o),
            SliceEvent::Cup(p + 2, Orient::R),
            SliceEvent::CrossOver(p + 1),
            SliceEvent::CrossOver(p + 1),
        ],
    );
    s + 2
}

/// Replaces the nested cap pair at `s` by a clasp and two side-by-side caps.
fn hook_caps(w: &mut SliceWord, s: usize) -> usize {
    let SliceEvent::Cap(q1) = w.events[s] else {
        unreachable!("cable emits caps here")
    };
    let q = q1 - 1;
    w.events.splice(
        s..s + 2,
        [
            SliceEvent::CrossOver(q + 1),
            SliceEvent::CrossOver(q + 1),
            SliceEvent::Cap(q + 2),
            SliceEvent::Cap(q),
        ],
    );
    s
}

fn set_clasp(w: &mut SliceWord, k: usize, sign: i32) -> Result<()> {
    let kind = clasp_kind(&w.reoriented()?, k, sign)?;
    w.events[k] = kind;
    w.events[k + 1] = kind;
    Ok(())
}

/// Untwisted Whitehead double of component `c`, closed by a clasp whose two
/// crossings have sign `clasp_sign`.
pub fn whitehead_double(d: &LinkDiagram, c: usize, clasp_sign: i32, budget: usize) -> Result<LinkDiagram> {
    if clasp_sign.abs() != 1 {
        return Err(Error::InvalidArgument("clasp sign must be +1 or -1".into()));
    }
    let (mut w, top, _) = doubled(d, c)?;
    let k = hook_cups(&mut w, top);
    set_clasp(&mut w, k, clasp_sign)?;
    let step = format!("whitehead double of component {} (clasp {:+})", c + 1, clasp_sign);
    finish(w, d, step, budget)
}

/// Bing double of component `c`: two components running along the two arcs
/// of `c` between its first cup and last cap, clasped at both ends with
/// opposite signs. The new components are `c` and `c + 1`.
pub fn bing_double(d: &LinkDiagram, c: usize, budget: usize) -> Result<LinkDiagram> {
    let (mut w, top, bottom) = doubled(d, c)?;
    // splice the bottom first so the top index stays valid
    let kb = hook_caps(&mut w, bottom);
    let kt = hook_cups(&mut w, top);
    let kb = kb + 2;
    set_clasp(&mut w, kt, 1)?;
    set_clasp(&mut w, kb, -1)?;
    let mut name = d.component_names.clone();
    let base = name[c].clone();
    name[c] = format!("{base}a");
    name.insert(c + 1, format!("{base}b"));
    let mut out = finish(w, d, format!("bing double of component {}", c + 1), budget)?;
    out.component_names = name;
    Ok(out)
}

/// Path of a band at one level: from the strand at `from` to the strand at
/// `to`, with an over (`true`) or under directive for each strand in between,
/// nearest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandRoute {
    pub level: usize,
    pub from: usize,
    pub to: usize,
    pub over: Vec<bool>,
}

/// Joins the components at the two ends of `route` by a band. The strand at
/// `from` is pushed next to the strand at `to`, the saddle is done there, and
/// the new strand returns along the same path.
pub fn band_sum(d: &LinkDiagram, route: &BandRoute, budget: usize) -> Result<LinkDiagram> {
    let w = d.slice()?;
    let t = w.trace()?;
    let BandRoute { level, from, to, .. } = *route;
    if level >= t.levels.len() || from.max(to) >= t.levels[level].len() {
        return Err(Error::InvalidArgument(format!(
            "no strands at level {level}, positions {from}, {to}"
        )));
    }
    let (a, _) = t.strand(level, from);
    let (b, _) = t.strand(level, to);
    if a == b {
        return Err(Error::InvalidArgument("band ends lie on the same component".into()));
    }
    let needed = from.abs_diff(to) - 1;
    if route.over.len() < needed {
        return Err(Error::IncompleteRoute {
            needed,
            given: route.over.len(),
        });
    }
    let mut ins = Vec::new();
    if from < to {
        // moving right, the moving strand enters on the left
        let kind = |i: usize, over: bool| {
            if over {
                SliceEvent::CrossOver(i)
            } else {
                SliceEvent::CrossUnder(i)
            }
        };
        for s in 0..needed {
            ins.push(kind(from + s, route.over[s]));
        }
        let j = to - 1;
        ins.extend([SliceEvent::Cap(j), SliceEvent::Cup(j, Orient::R)]);
        for s in (0..needed).rev() {
            // moving back left, the moving strand enters on the right
            ins.push(kind(from + s, !route.over[s]));
        }
    } else {
        let kind = |i: usize, over: bool| {
            if over {
                SliceEvent::CrossUnder(i)
            } else {
                SliceEvent::CrossOver(i)
            }
        };
        for s in 0..needed {
            ins.push(kind(from - 1 - s, route.over[s]));
        }
        let j = to;
        ins.extend([SliceEvent::Cap(j), SliceEvent::Cup(j, Orient::R)]);
        for s in (0..needed).rev() {
            ins.push(kind(from - 1 - s, !route.over[s]));
        }
    }
    let mut events = w.events.clone();
    events.splice(level..level, ins);
    let step = format!("band sum of components {} and {} at level {}", a + 1, b + 1, level);
    finish(SliceWord::new(events), d, step, budget)
}
