//! Magnus expansion of a Wirtinger presentation and Milnor's invariants.
//!
//! Arc images are found by Milnor's iteration: every arc starts as
//! `1 + X_c`, and each pass conjugates along every component from its base
//! arc using the previous pass's over-arc images. After `t` passes the images
//! are exact through degree `t + 1`, so `q` passes suffice for cap `q`.

pub mod series;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::json;

pub use series::{Coefficient, TruncatedSeries};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::wirtinger::WirtingerPresentation;

/// A multi-index `I = (i_1, ..., i_m)` of 1-based component numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MilnorIndex(Vec<usize>);

impl MilnorIndex {
    pub fn new(entries: Vec<usize>) -> Result<MilnorIndex> {
        if entries.len() < 2 {
            return Err(Error::InvalidIndex(format!("length {} < 2", entries.len())));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidIndex("components are numbered from 1".into()));
        }
        Ok(MilnorIndex(entries))
    }

    /// `"123123"` (one digit per entry) or `"1,2,10"`.
    pub fn parse(s: &str) -> Result<MilnorIndex> {
        let s = s.trim();
        let entries: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let entries = entries.ok_or_else(|| Error::InvalidIndex(format!("cannot read `{s}`")))?;
        MilnorIndex::new(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest multiplicity of any entry.
    pub fn r(&self) -> usize {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &i in &self.0 {
            *counts.entry(i).or_default() += 1;
        }
        counts.values().copied().max().unwrap_or(0)
    }

    pub fn check(&self, n_components: usize) -> Result<()> {
        if let Some(&i) = self.0.iter().find(|&&i| i > n_components) {
            return Err(Error::InvalidIndex(format!(
                "entry {i} exceeds {n_components} components"
            )));
        }
        Ok(())
    }

    pub fn rotated(&self, k: usize) -> MilnorIndex {
        let mut v = self.0.clone();
        let len = v.len();
        v.rotate_left(k % len);
        MilnorIndex(v)
    }

    /// Every `J` obtained by deleting at least one entry (keeping two or
    /// more) and rotating cyclically.
    pub fn reductions(&self) -> BTreeSet<MilnorIndex> {
        let m = self.0.len();
        let mut out = BTreeSet::new();
        for mask in 0u64..(1u64 << m) - 1 {
            if mask.count_ones() < 2 {
                continue;
            }
            let sub: Vec<usize> = (0..m).filter(|b| mask >> b & 1 == 1).map(|b| self.0[b]).collect();
            let j = MilnorIndex(sub);
            for k in 0..j.len() {
                out.insert(j.rotated(k));
            }
        }
        out
    }

    /// All indices over `n` components with length in `2..=max_len`, in
    /// length-then-lexicographic order.
    pub fn all(n: usize, max_len: usize) -> Vec<MilnorIndex> {
        let mut out = Vec::new();
        for len in 2..=max_len {
            let total = n.pow(len as u32);
            for v in 0..total {
                let mut e = vec![0; len];
                let mut x = v;
                for slot in e.iter_mut().rev() {
                    *slot = x % n + 1;
                    x /= n;
                }
                out.push(MilnorIndex(e));
            }
        }
        out
    }
}

impl fmt::Display for MilnorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&i| i < 10) {
            for i in &self.0 {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// `mu(I)` with its indeterminacy: the residue is `value mod delta` in
/// `[0, delta)` when `delta > 0`, and `value` itself when `delta = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorValue {
    pub index: MilnorIndex,
    pub value: BigInt,
    pub delta: BigInt,
    pub residue: BigInt,
}

impl MilnorValue {
    pub fn new(index: MilnorIndex, value: BigInt, delta: BigInt) -> MilnorValue {
        let residue = if delta.is_zero() {
            value.clone()
        } else {
            value.mod_floor(&delta)
        };
        MilnorValue {
            index,
            value,
            delta,
            residue,
        }
    }

    /// The well-defined part: `(delta, residue)`.
    pub fn class(&self) -> (BigInt, BigInt) {
        (self.delta.clone(), self.residue.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let num = |b: &BigInt| match b.to_i64() {
            Some(v) => json!(v),
            None => json!(b.to_string()),
        };
        json!({
            "I": self.index.entries(),
            "value": num(&self.value),
            "delta": num(&self.delta),
            "residue": num(&self.residue),
        })
    }
}

/// Images of every Wirtinger generator and of its inverse.
pub struct ArcExpansion<C: Coefficient = BigInt> {
    pub arcs: Vec<TruncatedSeries<C>>,
    pub inverses: Vec<TruncatedSeries<C>>,
}

pub fn arc_expansion<C: Coefficient>(p: &WirtingerPresentation, q: usize) -> Result<ArcExpansion<C>> {
    arc_expansion_iterations(p, q, q)
}

/// Expansion at cap `q` after exactly `passes` iterations.
pub fn arc_expansion_iterations<C: Coefficient>(
    p: &WirtingerPresentation,
    q: usize,
    passes: usize,
) -> Result<ArcExpansion<C>> {
    if q == 0 {
        return Err(Error::InvalidArgument("degree cap must be at least 1".into()));
    }
    let n = p.n_components();
    let mut arcs: Vec<TruncatedSeries<C>> = p
        .generators
        .iter()
        .map(|&c| TruncatedSeries::generator(n, q, c))
        .collect();
    let mut inverses = arcs.iter().map(|s| s.inverse()).collect::<Result<Vec<_>>>()?;
    for _ in 0..passes {
        let (prev, prev_inv) = (arcs.clone(), inverses.clone());
        for (c, comp_arcs) in p.component_arcs.iter().enumerate() {
            // the last passage returns to the base arc, which stays fixed
            for (t, rel) in p.passages[c].iter().enumerate().take(comp_arcs.len().saturating_sub(1)) {
                let (u, u_inv) = if rel.sign > 0 {
                    (&prev[rel.over], &prev_inv[rel.over])
                } else {
                    (&prev_inv[rel.over], &prev[rel.over])
                };
                let (from, to) = (comp_arcs[t], comp_arcs[t + 1]);
                arcs[to] = u_inv.mul(&arcs[from])?.mul(u)?;
                inverses[to] = u_inv.mul(&inverses[from])?.mul(u)?;
            }
        }
    }
    Ok(ArcExpansion { arcs, inverses })
}

fn longitude_expansions<C: Coefficient>(p: &WirtingerPresentation, q: usize) -> Result<Vec<TruncatedSeries<C>>> {
    let ex = arc_expansion::<C>(p, q)?;
    let n = p.n_components();
    (0..n)
        .map(|j| {
            let mut acc = TruncatedSeries::one(n, q);
            for (g, e) in p.longitude(j) {
                let f = if e > 0 { &ex.arcs[g] } else { &ex.inverses[g] };
                for _ in 0..e.unsigned_abs() {
                    acc = acc.mul(f)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Milnor numbers of one diagram up to a given index length, sharing one
/// expansion across all queries.
pub struct MilnorInvariants {
    n: usize,
    q: usize,
    longitudes: Vec<TruncatedSeries<BigInt>>,
}

impl MilnorInvariants {
    /// Expansion for indices of length up to `max_len`.
    pub fn new(p: &WirtingerPresentation, max_len: usize) -> Result<MilnorInvariants> {
        let q = max_len.max(2) - 1;
        let longitudes = match longitude_expansions::<i64>(p, q) {
            Ok(ls) => ls.iter().map(|s| s.to_big()).collect(),
            Err(Error::Overflow) => longitude_expansions::<BigInt>(p, q)?,
            Err(e) => return Err(e),
        };
        Ok(MilnorInvariants {
            n: p.n_components(),
            q,
            longitudes,
        })
    }

    pub fn for_diagram(d: &LinkDiagram, max_len: usize) -> Result<MilnorInvariants> {
        let p = WirtingerPresentation::from_pd(&d.pd)?;
        p.linking_matrix_check()?;
        MilnorInvariants::new(&p, max_len)
    }

    pub fn n_components(&self) -> usize {
        self.n
    }

    pub fn max_len(&self) -> usize {
        self.q + 1
    }

    pub fn longitude(&self, j: usize) -> &TruncatedSeries<BigInt> {
        &self.longitudes[j]
    }

    fn check(&self, idx: &MilnorIndex) -> Result<()> {
        idx.check(self.n)?;
        if idx.len() > self.q + 1 {
            return Err(Error::InvalidIndex(format!(
                "length {} exceeds the expansion's {}",
                idx.len(),
                self.q + 1
            )));
        }
        Ok(())
    }

    /// Coefficient of `X_{i_1}...X_{i_{m-1}}` in the longitude of `i_m`.
    pub fn mu(&self, idx: &MilnorIndex) -> Result<BigInt> {
        self.check(idx)?;
        let e = idx.entries();
        let (last, word) = e.split_last().unwrap();
        let word: Vec<usize> = word.iter().map(|i| i - 1).collect();
        Ok(self.longitudes[last - 1].coeff(&word))
    }

    /// gcd of `mu(J)` over all reductions `J` of `I`; 0 if there are none.
    pub fn delta(&self, idx: &MilnorIndex) -> Result<BigInt> {
        self.check(idx)?;
        let mut g = BigInt::zero();
        for j in idx.reductions() {
            g = g.gcd(&self.mu(&j)?);
            if g == BigInt::from(1) {
                break;
            }
        }
        Ok(g.abs())
    }

    pub fn mu_bar(&self, idx: &MilnorIndex) -> Result<MilnorValue> {
        Ok(MilnorValue::new(idx.clone(), self.mu(idx)?, self.delta(idx)?))
    }
}

pub fn mu_raw(d: &LinkDiagram, idx: &MilnorIndex) -> Result<BigInt> {
    idx.check(d.n_components())?;
    MilnorInvariants::for_diagram(d, idx.len())?.mu(idx)
}

pub fn delta(d: &LinkDiagram, idx: &MilnorIndex) -> Result<BigInt> {
    idx.check(d.n_components())?;
    MilnorInvariants::for_diagram(d, idx.len())?.delta(idx)
}

pub fn mu_bar(d: &LinkDiagram, idx: &MilnorIndex) -> Result<MilnorValue> {
    idx.check(d.n_components())?;
    MilnorInvariants::for_diagram(d, idx.len())?.mu_bar(idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::SliceWord;

    fn diag(w: SliceWord) -> LinkDiagram {
        LinkDiagram::from_slice(w).unwrap()
    }

    fn idx(s: &str) -> MilnorIndex {
        MilnorIndex::parse(s).unwrap()
    }

    #[test]
    fn index_parsing() {
        assert_eq!(idx("123123").entries(), &[1, 2, 3, 1, 2, 3]);
        assert_eq!(idx("1,2,10").entries(), &[1, 2, 10]);
        assert_eq!(idx("1122").r(), 2);
        assert!(MilnorIndex::parse("1").is_err());
        assert!(MilnorIndex::parse("10").is_err());
        assert!(MilnorIndex::parse("1a").is_err());
    }

    #[test]
    fn reductions_of_pair_are_empty() {
        assert!(idx("12").reductions().is_empty());
        let r = idx("123").reductions();
        assert_eq!(r.len(), 6); // 12 21 13 31 23 32
    }

    #[test]
    fn unlink_vanishes() {
        let d = diag(SliceWord::unlink(3));
        let m = MilnorInvariants::for_diagram(&d, 4).unwrap();
        for i in MilnorIndex::all(3, 4) {
            assert!(m.mu(&i).unwrap().is_zero());
        }
        let v = m.mu_bar(&idx("123")).unwrap();
        assert!(v.residue.is_zero());
    }

    #[test]
    fn hopf_lk() {
        let d = diag(SliceWord::braid_closure(2, &[1, 1]));
        assert_eq!(mu_raw(&d, &idx("12")).unwrap(), BigInt::from(1));
        assert_eq!(mu_raw(&d, &idx("21")).unwrap(), BigInt::from(1));
        let v = mu_bar(&d, &idx("12")).unwrap();
        assert_eq!(v.delta, BigInt::zero());
        assert_eq!(v.residue, BigInt::from(1));
    }

    #[test]
    fn borromean_triple() {
        let d = diag(SliceWord::braid_closure(3, &[1, -2, 1, -2, 1, -2]));
        let v = mu_bar(&d, &idx("123")).unwrap();
        assert_eq!(v.delta, BigInt::zero());
        assert_eq!(v.value.abs(), BigInt::from(1));
        assert_eq!(delta(&d, &idx("123")).unwrap(), BigInt::zero());
    }

    #[test]
    fn residue_normalization() {
        let v = MilnorValue::new(idx("123"), BigInt::from(-7), BigInt::from(3));
        assert_eq!(v.residue, BigInt::from(2));
        let w = MilnorValue::new(idx("123"), BigInt::from(-7), BigInt::zero());
        assert_eq!(w.residue, BigInt::from(-7));
    }

    #[test]
    fn bad_indices() {
        let d = diag(SliceWord::braid_closure(2, &[1, 1]));
        assert!(mu_raw(&d, &idx("13")).is_err());
        let m = MilnorInvariants::for_diagram(&d, 3).unwrap();
        assert!(m.mu(&idx("1212")).is_err());
    }

    #[test]
    fn stabilization() {
        let d = diag(SliceWord::braid_closure(3, &[1, -2, 1, -2, 1, -2]));
        let p = WirtingerPresentation::from_pd(&d.pd).unwrap();
        for q in 1..5 {
            let a = arc_expansion::<BigInt>(&p, q).unwrap();
            let b = arc_expansion::<BigInt>(&p, q + 1).unwrap();
            for (x, y) in a.arcs.iter().zip(&b.arcs) {
                for (w, c) in y.terms() {
                    if w.len() <= q {
                        assert_eq!(x.coeff(&w), c);
                    }
                }
            }
        }
    }
}
