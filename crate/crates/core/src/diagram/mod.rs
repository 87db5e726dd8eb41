//! Oriented link diagrams.

pub mod pd;
pub mod slice;

use std::collections::BTreeSet;

use serde_json::json;

pub use pd::{slice_to_pd, CrossingInfo, PdAnalysis, PdCode, PdPassage};
pub use slice::{Orient, SliceEvent, SliceWord};

use crate::error::{Error, Result};

/// A link diagram. The PD code is always present; the slice word only when
/// the diagram was built or read in slice form, and is required for surgery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    pub slice: Option<SliceWord>,
    pub pd: PdCode,
    pub component_names: Vec<String>,
    pub provenance: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
    pub n_components: usize,
    pub n_crossings: usize,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentData {
    pub writhe: Vec<i64>,
    /// Symmetric, zero diagonal.
    pub linking: Vec<Vec<i64>>,
    pub crossings: usize,
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("L{i}")).collect()
}

impl LinkDiagram {
    pub fn from_slice(w: SliceWord) -> Result<LinkDiagram> {
        let pd = slice_to_pd(&w)?;
        Ok(LinkDiagram {
            component_names: default_names(pd.n_components),
            slice: Some(w),
            pd,
            provenance: Vec::new(),
        })
    }

    pub fn from_pd(pd: PdCode) -> Result<LinkDiagram> {
        pd.analyze()?;
        Ok(LinkDiagram {
            component_names: default_names(pd.n_components),
            slice: None,
            pd,
            provenance: Vec::new(),
        })
    }

    /// Reads either format: JSON (starts with `{`) or slice-word text.
    pub fn parse(text: &str) -> Result<LinkDiagram> {
        if text.trim_start().starts_with('{') {
            LinkDiagram::from_pd(PdCode::from_json(text)?)
        } else {
            LinkDiagram::from_slice(SliceWord::parse(text)?)
        }
    }

    pub fn with_provenance(mut self, step: impl Into<String>) -> Self {
        self.provenance.push(step.into());
        self
    }

    pub fn n_components(&self) -> usize {
        self.pd.n_components
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.crossings.len()
    }

    pub fn slice(&self) -> Result<&SliceWord> {
        self.slice.as_ref().ok_or(Error::MissingSliceWord)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if let Some(w) = &self.slice {
            violations.extend(w.violations());
            if violations.is_empty() {
                match slice_to_pd(w) {
                    Ok(pd) if pd != self.pd => violations.push("slice word and PD code disagree".into()),
                    Err(e) => violations.push(e.to_string()),
                    _ => {}
                }
            }
        }
        if let Err(e) = self.pd.analyze() {
            violations.push(e.to_string());
        }
        if self.component_names.len() != self.pd.n_components {
            violations.push(format!(
                "{} component names for {} components",
                self.component_names.len(),
                self.pd.n_components
            ));
        }
        ValidationReport {
            violations,
            n_components: self.pd.n_components,
            n_crossings: self.pd.crossings.len(),
        }
    }

    pub fn analysis(&self) -> Result<PdAnalysis> {
        self.pd.analyze()
    }

    pub fn component_data(&self) -> Result<ComponentData> {
        let an = self.pd.analyze()?;
        Ok(component_data_of(&an, self.pd.n_components))
    }

    /// Keeps only the components in `keep` (0-based), renumbered in order.
    pub fn sublink(&self, keep: &BTreeSet<usize>) -> Result<LinkDiagram> {
        if keep.is_empty() {
            return Err(Error::InvalidArgument("sublink needs at least one component".into()));
        }
        if let Some(&c) = keep.iter().find(|&&c| c >= self.n_components()) {
            return Err(Error::InvalidArgument(format!("no component {}", c + 1)));
        }
        let w = self.slice()?;
        let t = w.trace()?;
        let mut out = Vec::new();
        let mut kept: Vec<bool> = Vec::new();
        for (k, e) in w.events.iter().enumerate() {
            let reduced = |i: usize, kept: &Vec<bool>| kept[..i].iter().filter(|&&b| b).count();
            match *e {
                SliceEvent::Cup(i, o) => {
                    let keep_it = keep.contains(&t.port_comp[k][0]);
                    if keep_it {
                        out.push(SliceEvent::Cup(reduced(i, &kept), o));
                    }
                    kept.insert(i, keep_it);
                    kept.insert(i, keep_it);
                }
                SliceEvent::Cap(i) => {
                    if kept[i] {
                        out.push(SliceEvent::Cap(reduced(i, &kept)));
                    }
                    kept.drain(i..i + 2);
                }
                SliceEvent::CrossOver(i) | SliceEvent::CrossUnder(i) => {
                    if kept[i] && kept[i + 1] {
                        out.push(e.with_pos(reduced(i, &kept)));
                    }
                    kept.swap(i, i + 1);
                }
            }
        }
        let names = keep.iter().map(|&c| self.component_names[c].clone()).collect();
        let mut d = LinkDiagram::from_slice(SliceWord::new(out))?;
        d.component_names = names;
        d.provenance = self.provenance.clone();
        Ok(d.with_provenance(format!("sublink {:?}", keep.iter().map(|c| c + 1).collect::<Vec<_>>())))
    }

    pub fn disjoint_union(&self, other: &LinkDiagram) -> Result<LinkDiagram> {
        let mut d = match (&self.slice, &other.slice) {
            (Some(a), Some(b)) => {
                let mut ev = a.events.clone();
                ev.extend_from_slice(&b.events);
                LinkDiagram::from_slice(SliceWord::new(ev))?
            }
            _ => LinkDiagram::from_pd(self.pd.disjoint_union(&other.pd))?,
        };
        d.component_names = self
            .component_names
            .iter()
            .chain(&other.component_names)
            .cloned()
            .collect();
        d.provenance = self.provenance.clone();
        Ok(d.with_provenance("disjoint union"))
    }

    pub fn mirror(&self) -> Result<LinkDiagram> {
        let mut d = match &self.slice {
            Some(w) => LinkDiagram::from_slice(w.mirrored())?,
            None => LinkDiagram::from_pd(self.pd.mirrored()?)?,
        };
        d.component_names = self.component_names.clone();
        d.provenance = self.provenance.clone();
        Ok(d.with_provenance("mirror"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "slice": self.slice.as_ref().map(|w| w.to_string()),
            "pd": self.pd.to_json(),
            "component_names": self.component_names,
            "provenance": self.provenance,
        })
    }
}

impl SliceEvent {
    pub(crate) fn with_pos(&self, i: usize) -> SliceEvent {
        match *self {
            SliceEvent::Cup(_, o) => SliceEvent::Cup(i, o),
            SliceEvent::Cap(_) => SliceEvent::Cap(i),
            SliceEvent::CrossOver(_) => SliceEvent::CrossOver(i),
            SliceEvent::CrossUnder(_) => SliceEvent::CrossUnder(i),
        }
    }
}

pub(crate) fn component_data_of(an: &PdAnalysis, n: usize) -> ComponentData {
    let mut writhe = vec![0i64; n];
    let mut twice = vec![vec![0i64; n]; n];
    for c in &an.crossings {
        let s = c.sign as i64;
        if c.under_comp == c.over_comp {
            writhe[c.under_comp] += s;
        } else {
            twice[c.under_comp][c.over_comp] += s;
            twice[c.over_comp][c.under_comp] += s;
        }
    }
    let linking = twice.iter().map(|row| row.iter().map(|v| v / 2).collect()).collect();
    ComponentData {
        writhe,
        linking,
        crossings: an.crossings.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(w: SliceWord) -> LinkDiagram {
        LinkDiagram::from_slice(w).unwrap()
    }

    #[test]
    fn unlink_data() {
        let cd = d(SliceWord::unlink(2)).component_data().unwrap();
        assert_eq!(cd.linking, vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(cd.writhe, vec![0, 0]);
    }

    #[test]
    fn hopf_lk() {
        let cd = d(SliceWord::braid_closure(2, &[1, 1])).component_data().unwrap();
        assert_eq!(cd.linking[0][1], 1);
        assert_eq!(cd.linking[1][0], 1);
    }

    #[test]
    fn borromean_sublinks_unlinked() {
        let b = d(SliceWord::braid_closure(3, &[1, -2, 1, -2, 1, -2]));
        for pair in [[0, 1], [0, 2], [1, 2]] {
            let s = b.sublink(&pair.into_iter().collect()).unwrap();
            assert_eq!(s.n_components(), 2);
            assert_eq!(s.component_data().unwrap().linking[0][1], 0);
        }
        assert!(b.sublink(&BTreeSet::new()).is_err());
    }

    #[test]
    fn union_and_mirror() {
        let u = d(SliceWord::unlink(1));
        let uu = u.disjoint_union(&u).unwrap();
        assert_eq!(uu.n_components(), 2);
        assert_eq!(uu.crossing_count(), 0);
        let h = d(SliceWord::braid_closure(2, &[1, 1]));
        let m = h.mirror().unwrap();
        assert_eq!(m.component_data().unwrap().linking[0][1], -1);
        assert_eq!(m.mirror().unwrap().slice, h.slice);
    }

    #[test]
    fn validate_reports() {
        let bad = LinkDiagram {
            slice: Some(SliceWord::new(vec![SliceEvent::Cup(0, Orient::R)])),
            pd: PdCode {
                crossings: vec![],
                components: Default::default(),
                n_components: 0,
            },
            component_names: vec![],
            provenance: vec![],
        };
        let r = bad.validate();
        assert!(r.violations.iter().any(|v| v.contains("open strands at end")));
        assert!(d(SliceWord::default()).validate().is_valid());
    }

    #[test]
    fn parse_either_format() {
        let h = d(SliceWord::braid_closure(2, &[1, 1]));
        let from_text = LinkDiagram::parse(&h.slice.as_ref().unwrap().to_string()).unwrap();
        assert_eq!(from_text.pd, h.pd);
        let from_json = LinkDiagram::parse(&h.pd.to_json().to_string()).unwrap();
        assert_eq!(from_json.pd, h.pd);
        assert!(from_json.slice.is_none());
    }
}
