//! Planar diagram codes.
//!
//! A crossing is a 4-tuple of edge labels read counterclockwise starting from
//! the incoming under-edge. Orientation of each component is recovered by
//! following its edges through the crossings; crossing signs are computed from
//! that, never stored.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::slice::{SliceEvent, SliceWord, BL, BR, CCW, TL, TR};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
    /// Edge label -> component (0-based). Crossingless components own one
    /// label that appears in no crossing.
    pub components: BTreeMap<u32, usize>,
    pub n_components: usize,
}

/// One pass of a component through a crossing, in travel order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PdPassage {
    pub crossing: usize,
    pub under: bool,
    /// Slot (0..4) through which the passage enters its crossing.
    pub in_slot: usize,
    pub in_arc: u32,
    pub out_arc: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingInfo {
    pub sign: i32,
    pub under_comp: usize,
    pub over_comp: usize,
    pub under_in: u32,
    pub under_out: u32,
    pub over_in: u32,
    pub over_out: u32,
}

/// Oriented reading of a PD code.
#[derive(Debug, Clone)]
pub struct PdAnalysis {
    pub crossings: Vec<CrossingInfo>,
    /// Per component, its passages starting with the one entered from the
    /// component's lowest edge label. Empty for crossingless components.
    pub walks: Vec<Vec<PdPassage>>,
    /// Lowest edge label of each component.
    pub base_label: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PdJson {
    crossings: Vec<[u32; 4]>,
    components: BTreeMap<String, usize>,
}

impl PdCode {
    pub fn to_json(&self) -> serde_json::Value {
        let components = self.components.iter().map(|(a, c)| (a.to_string(), c + 1)).collect();
        serde_json::to_value(PdJson {
            crossings: self.crossings.clone(),
            components,
        })
        .expect("pd code serializes")
    }

    /// Parses `{"crossings": [[a,b,c,d],...], "components": {"arc": comp, ...}}`
    /// with 1-based component numbers.
    pub fn from_json(text: &str) -> Result<PdCode> {
        let raw: PdJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let mut components = BTreeMap::new();
        for (k, c) in raw.components {
            let a: u32 = k.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("arc label `{k}` is not an integer"),
            })?;
            if c == 0 {
                return Err(Error::Parse {
                    line: 0,
                    msg: "components are numbered from 1".into(),
                });
            }
            components.insert(a, c - 1);
        }
        let n_components = components.values().map(|c| c + 1).max().unwrap_or(0);
        Ok(PdCode {
            crossings: raw.crossings,
            components,
            n_components,
        })
    }

    /// Orients the code and checks its invariants.
    pub fn analyze(&self) -> Result<PdAnalysis> {
        let bad = |m: String| Error::InvalidDiagram(m);
        let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.iter().enumerate() {
                occ.entry(a).or_default().push((c, s));
            }
        }
        for (a, v) in &occ {
            if v.len() != 2 {
                return Err(bad(format!("arc {a} occurs {} times", v.len())));
            }
            if !self.components.contains_key(a) {
                return Err(bad(format!("arc {a} has no component")));
            }
        }
        for (&a, &c) in &self.components {
            if c >= self.n_components {
                return Err(bad(format!(
                    "arc {a} names component {} of {}",
                    c + 1,
                    self.n_components
                )));
            }
        }
        let other = |a: u32, here: (usize, usize)| -> (usize, usize) {
            let v = &occ[&a];
            if v[0] == here {
                v[1]
            } else {
                v[0]
            }
        };

        // walk every cycle of edges
        let mut seen = vec![[false; 4]; self.crossings.len()];
        let mut cycles: Vec<Vec<PdPassage>> = Vec::new();
        for v in occ.values() {
            let start = v[0];
            if seen[start.0][start.1] {
                continue;
            }
            let mut passages = Vec::new();
            let mut cur = start;
            loop {
                let (c, s) = cur;
                let exit = (s + 2) % 4;
                seen[c][s] = true;
                seen[c][exit] = true;
                let x = self.crossings[c];
                passages.push(PdPassage {
                    crossing: c,
                    under: s % 2 == 0,
                    in_slot: s,
                    in_arc: x[s],
                    out_arc: x[exit],
                });
                let next = other(x[exit], (c, exit));
                if next == start {
                    break;
                }
                if seen[next.0][next.1] {
                    return Err(bad(format!("arc {} does not close up into a cycle", x[exit])));
                }
                cur = next;
            }
            // under passages must enter at slot 0
            let fwd = passages.iter().filter(|p| p.under && p.in_slot == 0).count();
            let unders = passages.iter().filter(|p| p.under).count();
            let reversed = if unders == 0 || fwd == unders {
                false
            } else if fwd == 0 {
                true
            } else {
                return Err(bad("a component passes under in both directions".into()));
            };
            if reversed {
                passages.reverse();
                for p in passages.iter_mut() {
                    std::mem::swap(&mut p.in_arc, &mut p.out_arc);
                    p.in_slot = (p.in_slot + 2) % 4;
                }
            }
            cycles.push(passages);
        }

        let mut walks: Vec<Option<Vec<PdPassage>>> = vec![None; self.n_components];
        let mut base_label = vec![u32::MAX; self.n_components];
        for cyc in cycles {
            let comp = self.components[&cyc[0].in_arc];
            if cyc.iter().any(|p| self.components[&p.in_arc] != comp) {
                return Err(bad(format!("component {} labels disagree along a cycle", comp + 1)));
            }
            if walks[comp].is_some() {
                return Err(bad(format!("component {} has more than one cycle", comp + 1)));
            }
            let (k, min) = cyc
                .iter()
                .enumerate()
                .map(|(k, p)| (k, p.in_arc))
                .min_by_key(|&(_, a)| a)
                .unwrap();
            base_label[comp] = min;
            let mut w = cyc[k..].to_vec();
            w.extend_from_slice(&cyc[..k]);
            walks[comp] = Some(w);
        }
        for (&a, &c) in &self.components {
            if !occ.contains_key(&a) {
                if walks[c].is_some() || base_label[c] != u32::MAX {
                    return Err(bad(format!("free arc {a} belongs to a component with crossings")));
                }
                base_label[c] = a;
            }
        }
        if let Some(c) = base_label.iter().position(|&b| b == u32::MAX) {
            return Err(bad(format!("component {} has no arcs", c + 1)));
        }
        let walks: Vec<Vec<PdPassage>> = walks.into_iter().map(|w| w.unwrap_or_default()).collect();

        let mut crossings = Vec::with_capacity(self.crossings.len());
        for (c, x) in self.crossings.iter().enumerate() {
            let over_in_d = walks
                .iter()
                .flatten()
                .find(|p| p.crossing == c && !p.under)
                .map(|p| p.in_slot == 3)
                .ok_or_else(|| bad(format!("crossing {} has no over passage", c + 1)))?;
            let (over_in, over_out) = if over_in_d { (x[3], x[1]) } else { (x[1], x[3]) };
            crossings.push(CrossingInfo {
                sign: if over_in_d { 1 } else { -1 },
                under_comp: self.components[&x[0]],
                over_comp: self.components[&x[1]],
                under_in: x[0],
                under_out: x[2],
                over_in,
                over_out,
            });
        }
        Ok(PdAnalysis {
            crossings,
            walks,
            base_label,
        })
    }

    /// Swaps over and under at every crossing.
    pub fn mirrored(&self) -> Result<PdCode> {
        let an = self.analyze()?;
        let crossings = self
            .crossings
            .iter()
            .zip(&an.crossings)
            .map(|(x, info)| {
                // the old over strand becomes the under strand; start from its incoming slot
                if info.sign > 0 {
                    [x[3], x[0], x[1], x[2]]
                } else {
                    [x[1], x[2], x[3], x[0]]
                }
            })
            .collect();
        Ok(PdCode {
            crossings,
            components: self.components.clone(),
            n_components: self.n_components,
        })
    }

    pub fn disjoint_union(&self, other: &PdCode) -> PdCode {
        let shift = self.components.keys().max().copied().unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| x.map(|a| a + shift)));
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|(a, c)| (a + shift, c + self.n_components)));
        PdCode {
            crossings,
            components,
            n_components: self.n_components + other.n_components,
        }
    }
}

/// PD code of a slice word. Edges of each component are labelled in travel
/// order from the component's first cup; components in first-cup order.
pub fn slice_to_pd(w: &SliceWord) -> Result<PdCode> {
    w.check()?;
    let t = w.trace()?;
    let ne = w.events.len();
    let mut port_label = vec![[0u32; 4]; ne];
    let mut components = BTreeMap::new();
    let mut next = 1u32;
    for (comp, walk) in t.walks.iter().enumerate() {
        let k = walk.len() as u32;
        if k == 0 {
            components.insert(next, comp);
            next += 1;
            continue;
        }
        for (i, p) in walk.iter().enumerate() {
            let i = i as u32;
            port_label[p.event][p.entry] = next + i;
            port_label[p.event][p.exit] = next + (i + 1) % k;
        }
        for a in next..next + k {
            components.insert(a, comp);
        }
        next += k;
    }
    let mut crossings = Vec::with_capacity(w.crossing_count());
    for (e, ev) in w.events.iter().enumerate() {
        let under = match ev {
            SliceEvent::CrossOver(_) => [TR, BL],
            SliceEvent::CrossUnder(_) => [TL, BR],
            _ => continue,
        };
        let under_in = if t.port_out[e][under[0]] { under[1] } else { under[0] };
        let start = CCW.iter().position(|&p| p == under_in).unwrap();
        let mut x = [0u32; 4];
        for (j, slot) in x.iter_mut().enumerate() {
            *slot = port_label[e][CCW[(start + j) % 4]];
        }
        crossings.push(x);
    }
    Ok(PdCode {
        crossings,
        components,
        n_components: t.n_components,
    })
}

/// Sign of a slice crossing read directly from strand directions.
pub(crate) fn slice_crossing_sign(ev: &SliceEvent, tl_down: bool, tr_down: bool) -> i32 {
    // strand through TL moves (+1,-1) when going down, strand through TR moves (-1,-1)
    let a = if tl_down { (1, -1) } else { (-1, 1) };
    let b = if tr_down { (-1, -1) } else { (1, 1) };
    let (over, under) = match ev {
        SliceEvent::CrossOver(_) => (a, b),
        _ => (b, a),
    };
    let z: i32 = over.0 * under.1 - over.1 * under.0;
    z.signum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::slice::Orient;

    #[test]
    fn unknot_pd() {
        let w = SliceWord::new(vec![SliceEvent::Cup(0, Orient::R), SliceEvent::Cap(0)]);
        let pd = slice_to_pd(&w).unwrap();
        assert!(pd.crossings.is_empty());
        assert_eq!(pd.n_components, 1);
        let an = pd.analyze().unwrap();
        assert_eq!(an.base_label, vec![1]);
    }

    #[test]
    fn hopf_pd_shape() {
        let pd = slice_to_pd(&SliceWord::braid_closure(2, &[1, 1])).unwrap();
        assert_eq!(pd.crossings.len(), 2);
        assert_eq!(pd.n_components, 2);
        let an = pd.analyze().unwrap();
        assert!(an.crossings.iter().all(|c| c.sign == 1));
    }

    #[test]
    fn trefoil_pd_shape() {
        let pd = slice_to_pd(&SliceWord::braid_closure(2, &[1, 1, 1])).unwrap();
        assert_eq!(pd.crossings.len(), 3);
        assert_eq!(pd.n_components, 1);
    }

    #[test]
    fn pd_signs_match_slice_geometry() {
        for w in [
            SliceWord::braid_closure(2, &[1, 1]),
            SliceWord::braid_closure(2, &[-1, -1, -1]),
            SliceWord::braid_closure(3, &[1, -2, 1, -2, 1, -2]),
            SliceWord::braid_closure(3, &[1, 1, -2, 1, -2]),
        ] {
            let t = w.trace().unwrap();
            let pd = slice_to_pd(&w).unwrap();
            let an = pd.analyze().unwrap();
            let geo: Vec<i32> = w
                .events
                .iter()
                .enumerate()
                .filter(|(_, e)| e.is_crossing())
                .map(|(k, e)| slice_crossing_sign(e, !t.port_out[k][TL], !t.port_out[k][TR]))
                .collect();
            let from_pd: Vec<i32> = an.crossings.iter().map(|c| c.sign).collect();
            assert_eq!(geo, from_pd);
        }
    }

    #[test]
    fn json_round_trip() {
        let pd = slice_to_pd(&SliceWord::braid_closure(3, &[1, -2, 1, -2, 1, -2])).unwrap();
        let text = pd.to_json().to_string();
        assert_eq!(PdCode::from_json(&text).unwrap(), pd);
    }

    #[test]
    fn rejects_bad_codes() {
        let bad = PdCode::from_json(r#"{"crossings": [[1,2,3,4]], "components": {"1":1,"2":1,"3":1,"4":1}}"#).unwrap();
        assert!(bad.analyze().is_err());
        assert!(PdCode::from_json("{").is_err());
        assert!(PdCode::from_json(r#"{"crossings": [], "components": {"x": 1}}"#).is_err());
        assert!(PdCode::from_json(r#"{"crossings": [], "components": {"1": 0}}"#).is_err());
    }

    #[test]
    fn imported_hopf_with_two_edge_components() {
        // KnotTheory-style Hopf link code
        let pd = PdCode::from_json(r#"{"crossings": [[4,1,3,2],[2,3,1,4]], "components": {"1":1,"2":1,"3":2,"4":2}}"#)
            .unwrap();
        let an = pd.analyze().unwrap();
        assert_eq!(an.crossings.len(), 2);
        let s: i32 = an.crossings.iter().map(|c| c.sign).sum();
        assert_eq!(s.abs(), 2);
    }

    #[test]
    fn mirror_flips_signs() {
        let pd = slice_to_pd(&SliceWord::braid_closure(2, &[1, 1, 1])).unwrap();
        let m = pd.mirrored().unwrap();
        let an = m.analyze().unwrap();
        assert!(an.crossings.iter().all(|c| c.sign == -1));
    }
}
