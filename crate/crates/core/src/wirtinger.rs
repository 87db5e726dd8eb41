//! Wirtinger presentations and zero-framed longitudes.
//!
//! Generators are the over-arcs of the diagram (maximal runs of edges between
//! under-passages). Travelling along a component from arc `g_in` to `g_out`
//! under the arc `u` at a crossing of sign `e` gives the relation
//! `g_out = u^-e g_in u^e`; with that convention the longitude read in travel
//! order, `u_1^e_1 ... u_k^e_k`, commutes with the base meridian.

use std::fmt::Write as _;

use crate::diagram::{component_data_of, PdCode};
use crate::error::{Error, Result};

/// A free-group word as (generator, exponent) letters.
pub type Word = Vec<(usize, i64)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Relation {
    pub crossing: usize,
    pub g_in: usize,
    pub g_out: usize,
    pub over: usize,
    pub sign: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WirtingerPresentation {
    /// Component of each generator.
    pub generators: Vec<usize>,
    /// One relation per crossing, in crossing order.
    pub relations: Vec<Relation>,
    /// Arcs of each component in travel order, starting at the base arc.
    pub component_arcs: Vec<Vec<usize>>,
    /// Under-passages of each component in travel order: relation `t` leads
    /// from `component_arcs[c][t]` to `component_arcs[c][t + 1]` (cyclically).
    pub passages: Vec<Vec<Relation>>,
    pub writhes: Vec<i64>,
    pub linking: Vec<Vec<i64>>,
}

impl WirtingerPresentation {
    pub fn from_pd(pd: &PdCode) -> Result<WirtingerPresentation> {
        Self::from_pd_rotated(pd, &vec![0; pd.n_components])
    }

    /// As [`from_pd`](Self::from_pd), but the base arc of component `c` is
    /// its `rot[c]`-th arc (mod the arc count) instead of the first.
    pub fn from_pd_rotated(pd: &PdCode, rot: &[usize]) -> Result<WirtingerPresentation> {
        let an = pd.analyze()?;
        let n = pd.n_components;
        if rot.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} base-arc offsets for {} components",
                rot.len(),
                n
            )));
        }
        let cd = component_data_of(&an, n);

        // edge label -> generator
        let mut gen_of = std::collections::BTreeMap::new();
        let mut generators = Vec::new();
        let mut component_arcs = Vec::with_capacity(n);
        for (c, walk) in an.walks.iter().enumerate() {
            let first = generators.len();
            generators.push(c);
            let mut arcs = vec![first];
            if walk.is_empty() {
                gen_of.insert(an.base_label[c], first);
                component_arcs.push(arcs);
                continue;
            }
            let mut cur = first;
            let last_under = walk.iter().rposition(|p| p.under);
            for (t, p) in walk.iter().enumerate() {
                gen_of.insert(p.in_arc, cur);
                if p.under && Some(t) == last_under {
                    cur = first;
                } else if p.under {
                    cur = generators.len();
                    generators.push(c);
                    arcs.push(cur);
                }
            }
            component_arcs.push(arcs);
        }

        let mut relations = Vec::with_capacity(an.crossings.len());
        for (k, x) in an.crossings.iter().enumerate() {
            relations.push(Relation {
                crossing: k,
                g_in: gen_of[&x.under_in],
                g_out: gen_of[&x.under_out],
                over: gen_of[&x.over_in],
                sign: x.sign,
            });
        }
        let mut passages: Vec<Vec<Relation>> = an
            .walks
            .iter()
            .map(|w| w.iter().filter(|p| p.under).map(|p| relations[p.crossing]).collect())
            .collect();

        for c in 0..n {
            let k = component_arcs[c].len();
            let r = rot[c] % k;
            component_arcs[c].rotate_left(r);
            if !passages[c].is_empty() {
                passages[c].rotate_left(r);
            }
        }

        Ok(WirtingerPresentation {
            generators,
            relations,
            component_arcs,
            passages,
            writhes: cd.writhe,
            linking: cd.linking,
        })
    }

    pub fn n_components(&self) -> usize {
        self.component_arcs.len()
    }

    pub fn base_arc(&self, c: usize) -> usize {
        self.component_arcs[c][0]
    }

    /// Zero-framed longitude of component `j`.
    pub fn longitude(&self, j: usize) -> Word {
        let mut w: Word = self.passages[j].iter().map(|r| (r.over, r.sign as i64)).collect();
        let wr = self.writhes[j];
        if wr != 0 {
            w.push((self.base_arc(j), -wr));
        }
        w
    }

    /// Exponent sums of every longitude in each component's generators.
    /// Off-diagonal entries must equal the linking matrix and the diagonal
    /// must vanish; anything else is an internal error.
    pub fn linking_matrix_check(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.n_components();
        let mut m = vec![vec![0i64; n]; n];
        for (j, row) in m.iter_mut().enumerate() {
            for (g, e) in self.longitude(j) {
                row[self.generators[g]] += e;
            }
        }
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let want = if i == j { 0 } else { self.linking[i][j] };
                if v != want {
                    return Err(Error::Consistency(format!(
                        "longitude {} has exponent sum {} in component {} generators, expected {}",
                        i + 1,
                        v,
                        j + 1,
                        want
                    )));
                }
            }
        }
        Ok(m)
    }

    /// One line per generator and relation.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (g, c) in self.generators.iter().enumerate() {
            let _ = writeln!(s, "gen a{} (comp {})", g + 1, c + 1);
        }
        for r in &self.relations {
            let (pre, post) = if r.sign > 0 { ('-', '+') } else { ('+', '-') };
            let _ = writeln!(
                s,
                "rel a{} = a{}^{} a{} a{}^{}",
                r.g_out + 1,
                r.over + 1,
                pre,
                r.g_in + 1,
                r.over + 1,
                post
            );
        }
        s
    }
}
