//! Simple tree claspers, realised by band-summing an iterated Bing double of
//! a Hopf link into the leaf strands.
//!
//! Surgery layout: at each leaf site the strand grows a finger (a saddle
//! leaves a thin pair of strands beside it). The finger crosses every strand
//! to its right, over or under by the leaf's local sign, and then runs down
//! the right edge of the diagram. Below the last event the fingers are sorted
//! and the tree link is built there, each finger standing in for the first
//! cup of its component. Nothing is inserted before a component's first cup,
//! so numbering and orientation of the original components never change.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{bing_double, check_budget, finish};
use crate::diagram::{LinkDiagram, Orient, SliceEvent, SliceWord};
use crate::error::{Error, Result};
use crate::magnus::{MilnorIndex, MilnorInvariants};
use num_traits::{One, Signed, Zero};

/// A trivalent tree with labelled leaves, written as nested pairs. The
/// top-level pair is the edge carrying the Hopf clasp.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn node(a: Tree, b: Tree) -> Tree {
        Tree::Node(Box::new(a), Box::new(b))
    }

    /// Left-combed tree `[[[0,1],2],...]` on `n >= 2` leaves.
    pub fn caterpillar(n: usize) -> Tree {
        let mut t = Tree::Leaf(0);
        for i in 1..n {
            t = Tree::node(t, Tree::Leaf(i));
        }
        t
    }

    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Tree::Leaf(i) => vec![*i],
            Tree::Node(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Tree::Leaf(i) => json!(i),
            Tree::Node(a, b) => json!([a.to_json(), b.to_json()]),
        }
    }

    pub fn from_json(v: &Value) -> Result<Tree> {
        match v {
            Value::Number(n) => n
                .as_u64()
                .map(|i| Tree::Leaf(i as usize))
                .ok_or_else(|| Error::InvalidArgument(format!("bad leaf label {n}"))),
            Value::Array(a) if a.len() == 2 => Ok(Tree::node(Tree::from_json(&a[0])?, Tree::from_json(&a[1])?)),
            _ => Err(Error::InvalidArgument(format!(
                "tree nodes are pairs or leaf labels, got {v}"
            ))),
        }
    }

    /// Subdivides the `target`-th edge (preorder over non-root nodes, the
    /// root's right child excluded since it shares the root edge) with a new
    /// leaf.
    fn subdivide(&mut self, target: &mut usize, leaf: usize, is_root: bool) -> bool {
        let Tree::Node(a, b) = self else { return false };
        for (child, counted) in [(a, true), (b, !is_root)] {
            if counted {
                if *target == 0 {
                    let old = std::mem::replace(child.as_mut(), Tree::Leaf(leaf));
                    **child = Tree::node(old, Tree::Leaf(leaf));
                    return true;
                }
                *target -= 1;
            }
            if child.subdivide(target, leaf, false) {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(i) => write!(f, "{i}"),
            Tree::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Uniformly random trivalent tree on `n >= 2` labelled leaves, by inserting
/// leaves one at a time on a uniformly chosen edge.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 2, "a tree clasper needs at least two leaves");
    let mut t = Tree::node(Tree::Leaf(0), Tree::Leaf(1));
    for i in 2..n {
        let mut target = rng.gen_range(0..2 * i - 3);
        t.subdivide(&mut target, i, true);
    }
    t
}

/// Where a leaf grabs the diagram: `site` indexes the component's strand
/// positions ordered by (level, position); `sign` says whether the leaf's
/// edge passes over (+1) or under (-1) the strands it crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Leaf {
    pub component: usize,
    pub site: usize,
    pub sign: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeClasper {
    pub tree: Tree,
    /// Indexed by leaf label.
    pub leaves: Vec<Leaf>,
    /// Sign of the Hopf clasp on the root edge.
    pub sign: i32,
}

impl TreeClasper {
    pub fn degree(&self) -> usize {
        self.leaves.len().saturating_sub(1)
    }

    pub fn is_self(&self) -> bool {
        self.leaves.windows(2).all(|w| w[0].component == w[1].component)
    }

    pub fn check(&self, n_components: usize) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        let mut labels = self.tree.leaves();
        labels.sort_unstable();
        if labels.len() < 2 || labels != (0..self.leaves.len()).collect::<Vec<_>>() {
            return bad(format!(
                "tree {} must use leaf labels 0..{} once each",
                self.tree,
                self.leaves.len()
            ));
        }
        if self.sign.abs() != 1 {
            return bad("clasper sign must be +1 or -1".into());
        }
        for l in &self.leaves {
            if l.component >= n_components {
                return bad(format!("leaf on component {} of {}", l.component + 1, n_components));
            }
            if l.sign.abs() != 1 {
                return bad("leaf signs must be +1 or -1".into());
            }
        }
        Ok(())
    }

    /// `{"tree": [[0,1],2], "leaves": [{"component": 1, "pos": 0, "sign": 1}, ...], "sign": 1}`
    /// with 1-based components.
    pub fn to_json(&self) -> Value {
        let leaves: Vec<Value> = self
            .leaves
            .iter()
            .map(|l| json!({"component": l.component + 1, "pos": l.site, "sign": l.sign}))
            .collect();
        json!({"tree": self.tree.to_json(), "leaves": leaves, "sign": self.sign})
    }

    pub fn from_json(text: &str) -> Result<TreeClasper> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })?;
        let field = |o: &Value, k: &str| -> Result<i64> {
            o.get(k)
                .and_then(Value::as_i64)
                .ok_or_else(|| Error::InvalidArgument(format!("missing integer `{k}`")))
        };
        let tree = Tree::from_json(
            v.get("tree")
                .ok_or_else(|| Error::InvalidArgument("missing `tree`".into()))?,
        )?;
        let leaves = v
            .get("leaves")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidArgument("missing `leaves` list".into()))?
            .iter()
            .map(|l| {
                let (c, p, s) = (field(l, "component")?, field(l, "pos")?, field(l, "sign")?);
                if c < 1 || p < 0 {
                    return Err(Error::InvalidArgument(
                        "components are 1-based, positions non-negative".into(),
                    ));
                }
                Ok(Leaf {
                    component: c as usize - 1,
                    site: p as usize,
                    sign: s.clamp(-2, 2) as i32,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let sign = field(&v, "sign")?.clamp(-2, 2) as i32;
        let t = TreeClasper { tree, leaves, sign };
        t.check(usize::MAX)?;
        Ok(t)
    }
}

/// Iterated Bing double of the Hopf link of the given sign along `tree`.
/// Returns the word and the leaf label carried by each component.
pub fn tree_link(tree: &Tree, sign: i32, budget: usize) -> Result<(SliceWord, Vec<usize>)> {
    let Tree::Node(a, b) = tree else {
        return Err(Error::InvalidArgument(
            "a tree clasper needs at least two leaves".into(),
        ));
    };
    let mut d = LinkDiagram::from_slice(SliceWord::braid_closure(2, &[sign, sign]))?;
    let mut labels: Vec<&Tree> = vec![a, b];
    while let Some(c) = labels.iter().position(|t| matches!(t, Tree::Node(..))) {
        let Tree::Node(x, y) = labels[c] else { unreachable!() };
        d = bing_double(&d, c, budget)?;
        labels.splice(c..=c, [x.as_ref(), y.as_ref()]);
    }
    let leaf_of = labels
        .iter()
        .map(|t| match t {
            Tree::Leaf(i) => *i,
            Tree::Node(..) => unreachable!(),
        })
        .collect();
    Ok((d.slice()?.clone(), leaf_of))
}

/// Surgery along a simple tree clasper.
pub fn clasper_surgery(d: &LinkDiagram, cl: &TreeClasper, budget: usize) -> Result<LinkDiagram> {
    let w = d.slice()?;
    cl.check(d.n_components())?;
    let t = w.trace()?;

    let mut sites = Vec::with_capacity(cl.leaves.len());
    for l in &cl.leaves {
        let s = w.sites(&t, l.component);
        let &site = s.get(l.site).ok_or(Error::NoRoom {
            component: l.component + 1,
            needed: l.site + 1,
            available: s.len(),
        })?;
        if sites.contains(&site) {
            return Err(Error::OverlappingCorridors {
                level: site.0,
                position: site.1 + 1,
            });
        }
        sites.push(site);
    }

    let (b, leaf_of) = tree_link(&cl.tree, cl.sign, budget)?;
    let mut comp_of = vec![0; leaf_of.len()];
    for (c, &l) in leaf_of.iter().enumerate() {
        comp_of[l] = c;
    }

    let mut order: Vec<usize> = (0..cl.leaves.len()).collect();
    order.sort_by_key(|&i| sites[i]);

    let mut ev = Vec::new();
    // leaf labels of the fingers waiting at the right edge, left to right
    let mut fingers: Vec<usize> = Vec::new();
    let mut next = 0;
    for level in 0..=w.len() {
        let n = t.levels[level].len();
        while next < order.len() && sites[order[next]].0 == level {
            let i = order[next];
            let x = sites[i].1;
            ev.extend([
                SliceEvent::Cup(x + 1, Orient::R),
                SliceEvent::Cap(x),
                SliceEvent::Cup(x, Orient::R),
            ]);
            // the finger enters each crossing from the left
            let kind = if cl.leaves[i].sign > 0 {
                SliceEvent::CrossOver
            } else {
                SliceEvent::CrossUnder
            };
            for j in x + 1..n {
                ev.extend([kind(j + 1), kind(j)]);
            }
            fingers.insert(0, i);
            next += 1;
        }
        if level < w.len() {
            ev.push(w.events[level]);
        }
    }

    // sort fingers into the order their components start in the tree link
    let f = fingers.len();
    for pass in 0..f {
        for j in 0..f - 1 - pass {
            if comp_of[fingers[j]] > comp_of[fingers[j + 1]] {
                let p = 2 * j;
                ev.extend([p + 1, p + 2, p, p + 1].map(SliceEvent::CrossOver));
                fingers.swap(j, j + 1);
            }
        }
    }

    let bt = b.trace()?;
    let mut live = 0usize;
    for (k, e) in b.events.iter().enumerate() {
        match *e {
            SliceEvent::Cup(p, _) if bt.first_cup[bt.port_comp[k][0]] == k => {
                debug_assert_eq!(comp_of[fingers[0]], bt.port_comp[k][0]);
                for s in (p..live).rev() {
                    ev.extend([SliceEvent::CrossUnder(s), SliceEvent::CrossUnder(s + 1)]);
                }
                fingers.remove(0);
                live += 2;
            }
            SliceEvent::Cup(..) => {
                ev.push(*e);
                live += 2;
            }
            SliceEvent::Cap(_) => {
                ev.push(*e);
                live -= 2;
            }
            _ => ev.push(*e),
        }
    }

    let word = SliceWord::new(ev);
    check_budget(&word, budget)?;
    let desc: Vec<String> = cl
        .leaves
        .iter()
        .zip(&sites)
        .map(|(l, &(lv, x))| {
            format!(
                "{}@{}:{}{}",
                l.component + 1,
                lv,
                x + 1,
                if l.sign > 0 { '+' } else { '-' }
            )
        })
        .collect();
    let step = format!("clasper {} sign {:+} leaves [{}]", cl.tree, cl.sign, desc.join(" "));
    finish(word, d, step, budget)
}

/// Adds zigzags to component `c` until it has at least `needed` sites.
pub fn ensure_sites(w: &SliceWord, c: usize, needed: usize) -> Result<SliceWord> {
    let mut w = w.clone();
    loop {
        let t = w.trace()?;
        let s = w.sites(&t, c);
        if s.len() >= needed {
            return w.reoriented();
        }
        let &(l, x) = s
            .first()
            .ok_or_else(|| Error::InvalidArgument(format!("no component {}", c + 1)))?;
        w = w.with_snake(l, x);
    }
}

/// Generator for trial `trial` of a campaign seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(trial);
    r
}

fn sign<R: Rng + ?Sized>(rng: &mut R) -> i32 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// One random surgery. `base` is the input after room was added; the
/// clasper's site indices refer to it, so `base` and `clasper` replay the move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomMove {
    pub base: LinkDiagram,
    pub clasper: TreeClasper,
    pub result: LinkDiagram,
}

/// Random clasper whose leaf `i` lies on `comps[i]`, applied to `d` after
/// adding room where needed.
pub fn random_clasper_on<R: Rng + ?Sized>(
    d: &LinkDiagram,
    comps: &[usize],
    rng: &mut R,
    budget: usize,
) -> Result<RandomMove> {
    let mut w = d.slice()?.clone();
    let n = d.n_components();
    let mut need = vec![0; n];
    for &c in comps {
        if c >= n {
            return Err(Error::InvalidArgument(format!("no component {}", c + 1)));
        }
        need[c] += 1;
    }
    for (c, &k) in need.iter().enumerate() {
        if k > 0 {
            w = ensure_sites(&w, c, k)?;
        }
    }
    let t = w.trace()?;
    let tree = random_tree(comps.len(), rng);
    let mut leaves = vec![None; comps.len()];
    for (c, &k) in need.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let avail = w.sites(&t, c).len();
        let picks = sample(rng, avail, k).into_vec();
        let mut picks = picks.into_iter();
        for (i, _) in comps.iter().enumerate().filter(|(_, &cc)| cc == c) {
            leaves[i] = Some(Leaf {
                component: c,
                site: picks.next().unwrap(),
                sign: 0,
            });
        }
    }
    let mut leaves: Vec<Leaf> = leaves.into_iter().map(Option::unwrap).collect();
    for l in &mut leaves {
        l.sign = sign(rng);
    }
    let cl = TreeClasper {
        tree,
        leaves,
        sign: sign(rng),
    };
    let mut base = LinkDiagram::from_slice(w)?;
    base.component_names = d.component_names.clone();
    base.provenance = d.provenance.clone();
    let result = clasper_surgery(&base, &cl, budget)?;
    Ok(RandomMove {
        base,
        clasper: cl,
        result,
    })
}

/// Surgery along a random degree-`k` clasper with every leaf on component `c`.
pub fn random_self_ck_move<R: Rng + ?Sized>(
    d: &LinkDiagram,
    c: usize,
    k: usize,
    rng: &mut R,
    budget: usize,
) -> Result<RandomMove> {
    if k == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    random_clasper_on(d, &vec![c; k + 1], rng, budget)
}

/// Surgery along a random degree-`m` clasper with at least `k + 1` leaves on
/// one randomly chosen component; the other leaves land anywhere.
pub fn random_cmk_move<R: Rng + ?Sized>(
    d: &LinkDiagram,
    m: usize,
    k: usize,
    rng: &mut R,
    budget: usize,
) -> Result<RandomMove> {
    if k == 0 || m < k {
        return Err(Error::InvalidArgument(format!(
            "need m >= k >= 1, got m = {m}, k = {k}"
        )));
    }
    let n = d.n_components();
    let c = rng.gen_range(0..n);
    let mut comps = vec![c; k + 1];
    comps.extend((k..m).map(|_| rng.gen_range(0..n)));
    random_clasper_on(d, &comps, rng, budget)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Surgery on the unlink along a caterpillar whose leaf `j` lies on
/// component `labels[j]` (1-based), at that component's next free site.
pub fn caterpillar_on_unlink(labels: &[usize], budget: usize) -> Result<(LinkDiagram, TreeClasper)> {
    let n = *labels.iter().max().unwrap();
    let mut w = SliceWord::unlink(n);
    let mut used = vec![0; n];
    let mut leaves = Vec::new();
    for &i in labels {
        leaves.push(Leaf {
            component: i - 1,
            site: used[i - 1],
            sign: 1,
        });
        used[i - 1] += 1;
    }
    for (c, &k) in used.iter().enumerate() {
        w = ensure_sites(&w, c, k)?;
    }
    let cl = TreeClasper {
        tree: Tree::caterpillar(labels.len()),
        leaves,
        sign: 1,
    };
    let base = LinkDiagram::from_slice(w)?.with_provenance(format!("unlink of {n}"));
    Ok((clasper_surgery(&base, &cl, budget)?, cl))
}

/// A link with `mu(I) = ±1` and `delta(I) = 0`, built from the unlink by one
/// caterpillar clasper whose leaves carry the entries of `I`. Leaf orders are
/// tried in lexicographic order and the first that works is returned; the
/// in-order labelling can fail because brackets such as `[[X1, X1], X2]`
/// vanish. Indices that no order realises (for example 112, where the shuffle
/// relation gives `2 mu(112) = 0`) are rejected.
pub fn realize_milnor(idx: &MilnorIndex, budget: usize) -> Result<LinkDiagram> {
    Ok(realize_milnor_clasper(idx, budget)?.0)
}

/// [`realize_milnor`], also returning the clasper used on the unlink.
pub fn realize_milnor_clasper(idx: &MilnorIndex, budget: usize) -> Result<(LinkDiagram, TreeClasper)> {
    let mut labels = idx.entries().to_vec();
    labels.sort_unstable();
    loop {
        let (d, cl) = caterpillar_on_unlink(&labels, budget)?;
        let v = MilnorInvariants::for_diagram(&d, idx.len())?.mu_bar(idx)?;
        if v.delta.is_zero() && v.value.abs().is_one() {
            let order: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
            return Ok((
                d.with_provenance(format!("realize {idx} with leaf order {}", order.join(""))),
                cl,
            ));
        }
        if !next_permutation(&mut labels) {
            return Err(Error::InvalidIndex(format!(
                "mu({idx}) is not realizable by a caterpillar clasper on the unlink"
            )));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::DEFAULT_CROSSING_BUDGET as B;
    use crate::magnus::{mu_bar, MilnorInvariants};
    use num_bigint::BigInt;

    fn unlink(n: usize) -> LinkDiagram {
        LinkDiagram::from_slice(SliceWord::unlink(n)).unwrap()
    }

    fn idx(s: &str) -> MilnorIndex {
        MilnorIndex::parse(s).unwrap()
    }

    #[test]
    fn tree_json_round_trip() {
        let t = TreeClasper {
            tree: Tree::caterpillar(3),
            leaves: vec![
                Leaf {
                    component: 0,
                    site: 0,
                    sign: 1,
                },
                Leaf {
                    component: 1,
                    site: 2,
                    sign: -1,
                },
                Leaf {
                    component: 2,
                    site: 1,
                    sign: 1,
                },
            ],
            sign: -1,
        };
        let s = t.to_json().to_string();
        assert_eq!(TreeClasper::from_json(&s).unwrap(), t);
        assert_eq!(t.tree.to_string(), "[[0,1],2]");
        assert!(TreeClasper::from_json(r#"{"tree":[0,0],"leaves":[],"sign":1}"#).is_err());
    }

    #[test]
    fn random_trees_are_trivalent() {
        let mut rng = trial_rng(1, 0);
        for n in 2..8 {
            let t = random_tree(n, &mut rng);
            let mut l = t.leaves();
            l.sort_unstable();
            assert_eq!(l, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn random_tree_shapes_cover_all_edges() {
        // four leaves: three unrooted shapes, each reachable
        let mut seen = std::collections::BTreeSet::new();
        let mut rng = trial_rng(3, 0);
        for _ in 0..200 {
            seen.insert(random_tree(4, &mut rng).to_string());
        }
        assert_eq!(seen.len(), 3, "{seen:?}");
    }

    #[test]
    fn tree_links() {
        let (w, leaf_of) = tree_link(&Tree::caterpillar(3), 1, B).unwrap();
        let d = LinkDiagram::from_slice(w).unwrap();
        assert_eq!(d.n_components(), 3);
        let mut l = leaf_of.clone();
        l.sort_unstable();
        assert_eq!(l, vec![0, 1, 2]);
        assert_eq!(mu_bar(&d, &idx("123")).unwrap().value.abs(), BigInt::from(1));
    }

    #[test]
    fn degree_one_on_unlink_gives_hopf() {
        let cl = TreeClasper {
            tree: Tree::caterpillar(2),
            leaves: vec![
                Leaf {
                    component: 0,
                    site: 0,
                    sign: 1,
                },
                Leaf {
                    component: 1,
                    site: 0,
                    sign: 1,
                },
            ],
            sign: 1,
        };
        let h = clasper_surgery(&unlink(2), &cl, B).unwrap();
        assert_eq!(h.n_components(), 2);
        assert_eq!(h.component_data().unwrap().linking[0][1].abs(), 1);
    }

    #[test]
    fn degree_two_on_unlink_gives_borromean() {
        let cl = TreeClasper {
            tree: Tree::caterpillar(3),
            leaves: (0..3)
                .map(|c| Leaf {
                    component: c,
                    site: 0,
                    sign: 1,
                })
                .collect(),
            sign: 1,
        };
        let d = clasper_surgery(&unlink(3), &cl, B).unwrap();
        let m = MilnorInvariants::for_diagram(&d, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(d.component_data().unwrap().linking[i][j].is_zero());
            }
        }
        assert_eq!(m.mu(&idx("123")).unwrap().abs(), BigInt::from(1));
    }

    #[test]
    fn site_errors() {
        let cl = TreeClasper {
            tree: Tree::caterpillar(2),
            leaves: vec![
                Leaf {
                    component: 0,
                    site: 0,
                    sign: 1,
                },
                Leaf {
                    component: 0,
                    site: 0,
                    sign: 1,
                },
            ],
            sign: 1,
        };
        assert!(matches!(
            clasper_surgery(&unlink(1), &cl, B),
            Err(Error::OverlappingCorridors { .. })
        ));
        let cl = TreeClasper {
            leaves: vec![
                Leaf {
                    component: 0,
                    site: 0,
                    sign: 1,
                },
                Leaf {
                    component: 0,
                    site: 9,
                    sign: 1,
                },
            ],
            ..cl
        };
        assert!(matches!(clasper_surgery(&unlink(1), &cl, B), Err(Error::NoRoom { .. })));
    }

    #[test]
    fn realize_small_indices() {
        for s in ["12", "123", "1123", "11123", "1234"] {
            let i = idx(s);
            let d = realize_milnor(&i, B).unwrap();
            let v = mu_bar(&d, &i).unwrap();
            assert_eq!(v.delta, BigInt::zero(), "{s}");
            assert_eq!(v.value.abs(), BigInt::from(1), "{s}");
        }
    }

    #[test]
    fn unrealizable_indices_rejected() {
        // shuffle relations force 2 mu(112) = 0 and 3 mu(1112) = 0; a fused
        // caterpillar gives mu(1122) in {0, ±2}
        for s in ["112", "1112", "1122", "11"] {
            assert!(realize_milnor(&idx(s), B).is_err(), "{s}");
        }
    }

    #[test]
    fn self_moves_keep_linking() {
        let d = LinkDiagram::from_slice(SliceWord::braid_closure(2, &[1, 1])).unwrap();
        let lk = d.component_data().unwrap().linking;
        for trial in 0..10 {
            let mut rng = trial_rng(11, trial);
            let mv = random_self_ck_move(&d, (trial % 2) as usize, 1 + (trial % 3) as usize, &mut rng, B).unwrap();
            assert!(mv.clasper.is_self());
            assert_eq!(mv.result.component_data().unwrap().linking, lk);
            assert_eq!(clasper_surgery(&mv.base, &mv.clasper, B).unwrap(), mv.result);
        }
    }

    #[test]
    fn seeded_moves_repeat() {
        let d = unlink(2);
        let a = random_self_ck_move(&d, 0, 2, &mut trial_rng(5, 3), B).unwrap();
        let b = random_self_ck_move(&d, 0, 2, &mut trial_rng(5, 3), B).unwrap();
        assert_eq!(a, b);
    }
}
