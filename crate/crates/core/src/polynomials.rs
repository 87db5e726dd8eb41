//! Jones polynomial (Kauffman bracket state sum), one-variable Alexander and
//! Conway polynomials (Fox calculus), and exact derivatives.
//!
//! Exponents are stored doubled so half-integer powers of `q` and `t` stay
//! integral. Jones convention: `A = q^(-1/4)`, which gives
//! `V(positive Hopf) = -q^(1/2) - q^(5/2)` and
//! `V(right-handed trefoil) = q + q^3 - q^4`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::diagram::{LinkDiagram, PdCode};
use crate::error::{Error, Result};
use crate::wirtinger::WirtingerPresentation;

/// Default limit on crossings for the `2^c` bracket state sum.
pub const DEFAULT_BRACKET_BUDGET: usize = 24;

/// Integer Laurent polynomial in `x^(1/2)`; keys are doubled exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, 1)
    }

    /// `c * x^(twice / 2)`.
    pub fn monomial(twice: i64, c: impl Into<BigInt>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(twice, c.into());
        p
    }

    /// From `(twice_exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_pairs<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, twice: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(twice).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&twice);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, twice: i64) -> BigInt {
        self.terms.get(&twice).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, c) in &o.terms {
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                p.add_term(a + b, x * y);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies every exponent by `factor` (a substitution `x -> x^factor`).
    pub fn scale_exponents(&self, factor: i64) -> LaurentPoly {
        LaurentPoly::from_pairs(self.terms.iter().map(|(&e, c)| (e * factor, c.clone())))
    }

    pub fn shift(&self, twice: i64) -> LaurentPoly {
        LaurentPoly::from_pairs(self.terms.iter().map(|(&e, c)| (e + twice, c.clone())))
    }

    /// Value at `x = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `[[twice_exponent, coefficient], ...]` sorted by exponent.
    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| match c.to_i64() {
                Some(v) => json!([e, v]),
                None => json!([e, c.to_string()]),
            })
            .collect();
        Value::Array(pairs)
    }

    pub fn from_json(v: &Value) -> Result<LaurentPoly> {
        let bad = || Error::InvalidArgument("polynomials are lists of [twice_exponent, coefficient]".into());
        let arr = v.as_array().ok_or_else(bad)?;
        let mut p = LaurentPoly::zero();
        for pair in arr {
            let pr = pair.as_array().filter(|a| a.len() == 2).ok_or_else(bad)?;
            let e = pr[0].as_i64().ok_or_else(bad)?;
            let c: BigInt = match &pr[1] {
                Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad)?,
                Value::String(s) => s.parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            };
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Renders with the given variable name, e.g. `q^(-9/2) - 2q^(-7/2)`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let pow = match (e, e % 2 == 0) {
                (0, _) => String::new(),
                (2, _) => var.to_string(),
                (_, true) => format!("{var}^{}", e / 2),
                (_, false) => format!("{var}^({}/2)", e),
            };
            if pow.is_empty() || !a.is_one() {
                s.push_str(&a.to_string());
            }
            s.push_str(&pow);
        }
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

fn rational_power(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

/// Exact square root of a non-negative rational, if it has one.
fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    let r = BigRational::new(n, d);
    (&r * &r == *x).then_some(r)
}

/// `order`-th derivative in `x` (the polynomial's own variable, half-integer
/// exponents allowed) evaluated at `point`. Half-integer powers need `point`
/// to be a rational square.
pub fn derivative_at(p: &LaurentPoly, order: u32, point: &BigRational) -> Result<BigRational> {
    if point.is_zero() {
        return Err(Error::InvalidArgument("derivatives are taken away from 0".into()));
    }
    let root = rational_sqrt(point);
    let two = BigRational::from_integer(2.into());
    let mut total = BigRational::zero();
    for (&e, c) in &p.terms {
        // d^n/dx^n x^(e/2) = (e/2)(e/2 - 1)...(e/2 - n + 1) x^(e/2 - n)
        let mut f = BigRational::from_integer(c.clone());
        for j in 0..order as i64 {
            f *= BigRational::new(BigInt::from(e - 2 * j), BigInt::from(1)) / &two;
        }
        if f.is_zero() {
            continue;
        }
        let t = e - 2 * order as i64;
        let v = if t % 2 == 0 {
            rational_power(point, t / 2)
        } else {
            let r = root
                .as_ref()
                .ok_or_else(|| Error::InvalidArgument(format!("{point} has no rational square root")))?;
            rational_power(r, t)
        };
        total += f * v;
    }
    Ok(total)
}

/// `order`-th derivative in `s = x^(1/2)` at `s = point`.
pub fn derivative_at_half(p: &LaurentPoly, order: u32, point: &BigRational) -> Result<BigRational> {
    let q = LaurentPoly::from_pairs(p.terms.iter().map(|(&e, c)| (2 * e, c.clone())));
    derivative_at(&q, order, point)
}

/// Derivatives of one polynomial at a point, in both variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeRow {
    pub order: u32,
    /// In the polynomial's own variable `x`.
    pub full: BigRational,
    /// In `s = x^(1/2)`.
    pub half: BigRational,
}

/// Orders `1..=max_order` at `point` (given in `x`; the `s` column uses its
/// square root, so `point` must be a rational square).
pub fn derivative_table(p: &LaurentPoly, max_order: u32, point: &BigRational) -> Result<Vec<DerivativeRow>> {
    let root =
        rational_sqrt(point).ok_or_else(|| Error::InvalidArgument(format!("{point} has no rational square root")))?;
    (1..=max_order)
        .map(|order| {
            Ok(DerivativeRow {
                order,
                full: derivative_at(p, order, point)?,
                half: derivative_at_half(p, order, &root)?,
            })
        })
        .collect()
}

/// [`derivative_table`] at 1.
pub fn derivatives_at_one(p: &LaurentPoly, max_order: u32) -> Result<Vec<DerivativeRow>> {
    derivative_table(p, max_order, &BigRational::one())
}

/// Kauffman bracket in `A` (doubled exponents), normalised so a crossingless
/// unknot is 1.
pub fn kauffman_bracket(pd: &PdCode, budget: usize) -> Result<LaurentPoly> {
    let c = pd.crossings.len();
    if c > budget {
        return Err(Error::BudgetExceeded { crossings: c, budget });
    }
    pd.analyze()?;
    // dense labels for crossing arcs; crossingless components add free loops
    let mut id: BTreeMap<u32, usize> = BTreeMap::new();
    for x in &pd.crossings {
        for &a in x {
            let n = id.len();
            id.entry(a).or_insert(n);
        }
    }
    let free = pd.components.keys().filter(|a| !id.contains_key(a)).count();
    let m = id.len();
    let cr: Vec<[usize; 4]> = pd.crossings.iter().map(|x| x.map(|a| id[&a])).collect();

    // (A-smoothings minus B-smoothings, loops) -> number of states
    let mut counts: BTreeMap<(i64, usize), u64> = BTreeMap::new();
    let mut parent = vec![0usize; m];
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for state in 0u64..(1u64 << c) {
        for (i, v) in parent.iter_mut().enumerate() {
            *v = i;
        }
        let mut loops = m;
        for (k, &[a, b, cc, d]) in cr.iter().enumerate() {
            let pairs = if state >> k & 1 == 0 {
                [(a, b), (cc, d)]
            } else {
                [(a, d), (b, cc)]
            };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                    loops -= 1;
                }
            }
        }
        let b = state.count_ones() as i64;
        *counts.entry((c as i64 - 2 * b, loops + free)).or_default() += 1;
    }

    let delta = LaurentPoly::from_pairs([(4, -1), (-4, -1)]);
    let mut out = LaurentPoly::zero();
    for ((ab, loops), n) in counts {
        let term = LaurentPoly::monomial(2 * ab, BigInt::from(n)).mul(&delta.pow(loops as u32 - 1));
        out = out.add(&term);
    }
    Ok(out)
}

/// Jones polynomial in `q` (doubled exponents), `V = (-A^3)^(-w) <D>` with
/// `A = q^(-1/4)`.
pub fn jones(d: &LinkDiagram, budget: usize) -> Result<LaurentPoly> {
    let br = kauffman_bracket(&d.pd, budget)?;
    let an = d.analysis()?;
    let w: i64 = an.crossings.iter().map(|x| x.sign as i64).sum();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let v = br.mul(&LaurentPoly::monomial(-6 * w, sign));
    // A^k (doubled 2k) becomes q^(-k/4), doubled -k/2
    let mut out = LaurentPoly::zero();
    for (e, c) in v.terms() {
        if e % 4 != 0 {
            return Err(Error::Consistency(format!(
                "bracket exponent {} not divisible by 2",
                e / 2
            )));
        }
        out.add_term(-e / 4, c.clone());
    }
    Ok(out)
}

fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * prev
}

/// Coefficients (constant first) of the polynomial of degree < `xs.len()`
/// through the given points.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let den = BigRational::from_integer(&xs[i] - &xs[i - j]);
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    // Newton form to monomial form
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &coeffs[k] * BigRational::from_integer(xs[i].clone());
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Consistency("Alexander determinant is not integral".into()))
            }
        })
        .collect()
}

/// Reduced Alexander matrix minor: one-variable Alexander polynomial up to
/// a unit `±t^k`, as coefficients in `t` (constant first).
fn alexander_minor(p: &WirtingerPresentation) -> Result<Vec<BigInt>> {
    let g = p.generators.len();
    let size = g - 1;
    if p.relations.len() < size {
        return Ok(Vec::new());
    }
    // entries are a + b t
    let mut mat = vec![vec![(0i64, 0i64); g]; size];
    for (row, r) in mat.iter_mut().zip(&p.relations) {
        let mut put = |col: usize, a: i64, b: i64| {
            row[col].0 += a;
            row[col].1 += b;
        };
        if r.sign > 0 {
            put(r.over, -1, 1);
            put(r.g_in, 1, 0);
            put(r.g_out, 0, -1);
        } else {
            put(r.over, 1, -1);
            put(r.g_in, 0, 1);
            put(r.g_out, -1, 0);
        }
    }
    let xs: Vec<BigInt> = (0..=size as i64).map(BigInt::from).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|t| {
            let m = mat
                .iter()
                .map(|row| {
                    row[..size]
                        .iter()
                        .map(|&(a, b)| BigInt::from(a) + BigInt::from(b) * t)
                        .collect()
                })
                .collect();
            det_bareiss(m)
        })
        .collect();
    let mut c = interpolate(&xs, &ys)?;
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    Ok(c)
}

/// Conway-normalised one-variable Alexander polynomial
/// `Delta(t) = nabla(t^(1/2) - t^(-1/2))`, symmetric, in doubled exponents of
/// `t`. Sign fixed as in [`conway`].
pub fn alexander(d: &LinkDiagram) -> Result<LaurentPoly> {
    let z = conway(d)?;
    let s = LaurentPoly::from_pairs([(1, 1), (-1, -1)]);
    let mut out = LaurentPoly::zero();
    for (e, c) in z.terms() {
        out = out.add(&s.pow((e / 2) as u32).mul(&LaurentPoly::monomial(0, c.clone())));
    }
    Ok(out)
}

/// Leading Conway coefficient predicted by the linking numbers: any cofactor
/// of the linking Laplacian.
fn linking_cofactor(lk: &[Vec<i64>]) -> BigInt {
    let n = lk.len();
    if n <= 1 {
        return BigInt::one();
    }
    let m: Vec<Vec<BigInt>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| {
                    if i == j {
                        BigInt::from((0..n).filter(|&k| k != i).map(|k| lk[i][k]).sum::<i64>())
                    } else {
                        BigInt::from(-lk[i][j])
                    }
                })
                .collect()
        })
        .collect();
    det_bareiss(m)
}

/// Conway polynomial in `z` (doubled exponents, so `z^k` is stored at `2k`).
/// The sign is fixed by `nabla(0) = 1` for knots and, for links, by the
/// leading coefficient `z^(n-1)` agreeing with the linking-number cofactor;
/// when that vanishes the lowest nonzero coefficient is made positive.
pub fn conway(d: &LinkDiagram) -> Result<LaurentPoly> {
    let p = WirtingerPresentation::from_pd(&d.pd)?;
    let minor = alexander_minor(&p)?;
    if minor.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    // symmetrise: t^k f(t) with doubled exponents summing to zero
    let lo = minor.iter().position(|c| !c.is_zero()).unwrap() as i64;
    let hi = (minor.len() - 1) as i64;
    let mut rest = LaurentPoly::from_pairs(
        minor
            .iter()
            .enumerate()
            .map(|(i, c)| (2 * i as i64 - (lo + hi), c.clone())),
    );
    // peel off powers of z = s - 1/s, s = t^(1/2)
    let z = LaurentPoly::from_pairs([(1, 1), (-1, -1)]);
    let mut out = LaurentPoly::zero();
    while let Some(top) = rest.max_exp() {
        if top < 0 {
            return Err(Error::Consistency(format!(
                "Alexander polynomial is not symmetric: {rest}"
            )));
        }
        let c = rest.coeff(top);
        rest = rest.sub(&z.pow(top as u32).mul(&LaurentPoly::monomial(0, c.clone())));
        out.add_term(2 * top, c);
    }
    let n = d.n_components() as i64;
    let cd = d.component_data()?;
    let want = linking_cofactor(&cd.linking);
    let lead = out.coeff(2 * (n - 1));
    let flip = if !want.is_zero() && !lead.is_zero() {
        if lead.abs() != want.abs() {
            return Err(Error::Consistency(format!(
                "Conway coefficient of z^{} is {lead}, linking numbers predict ±{want}",
                n - 1
            )));
        }
        lead.sign() != want.sign()
    } else {
        out.min_exp().is_some_and(|e| out.coeff(e).is_negative())
    };
    Ok(if flip { out.neg() } else { out })
}

/// gcd of the coefficients; 0 for the zero polynomial.
pub fn content(p: &LaurentPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::SliceWord;

    fn d(w: SliceWord) -> LinkDiagram {
        LinkDiagram::from_slice(w).unwrap()
    }

    fn braid(n: usize, l: &[i32]) -> LinkDiagram {
        d(SliceWord::braid_closure(n, l))
    }

    fn q(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    const B: usize = DEFAULT_BRACKET_BUDGET;

    #[test]
    fn bracket_small() {
        assert_eq!(
            kauffman_bracket(&d(SliceWord::unlink(1)).pd, B).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(
            kauffman_bracket(&d(SliceWord::unlink(2)).pd, B).unwrap(),
            q(&[(4, -1), (-4, -1)])
        );
    }

    #[test]
    fn jones_values() {
        assert_eq!(jones(&d(SliceWord::unlink(1)), B).unwrap(), LaurentPoly::one());
        assert_eq!(jones(&d(SliceWord::unlink(2)), B).unwrap(), q(&[(1, -1), (-1, -1)]));
        assert_eq!(jones(&braid(2, &[1, 1]), B).unwrap(), q(&[(1, -1), (5, -1)]));
        assert_eq!(jones(&braid(2, &[1, 1, 1]), B).unwrap(), q(&[(2, 1), (6, 1), (8, -1)]));
        // figure eight is amphichiral
        assert_eq!(
            jones(&braid(3, &[1, -2, 1, -2]), B).unwrap(),
            q(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)])
        );
    }

    #[test]
    fn jones_mirror_inverts() {
        let t = braid(3, &[1, -2, 1, 1, -2, 1, 1]);
        let a = jones(&t, B).unwrap();
        let b = jones(&t.mirror().unwrap(), B).unwrap();
        assert_eq!(a.scale_exponents(-1), b);
    }

    #[test]
    fn bracket_budget() {
        let big = braid(2, &[1; 30]);
        assert!(matches!(
            kauffman_bracket(&big.pd, B),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn conway_values() {
        assert_eq!(conway(&d(SliceWord::unlink(1))).unwrap(), LaurentPoly::one());
        assert!(conway(&d(SliceWord::unlink(2))).unwrap().is_zero());
        // positive Hopf: z; trefoil: 1 + z^2; figure eight: 1 - z^2
        assert_eq!(conway(&braid(2, &[1, 1])).unwrap(), q(&[(2, 1)]));
        assert_eq!(conway(&braid(2, &[-1, -1])).unwrap(), q(&[(2, -1)]));
        assert_eq!(conway(&braid(2, &[1, 1, 1])).unwrap(), q(&[(0, 1), (4, 1)]));
        assert_eq!(conway(&braid(3, &[1, -2, 1, -2])).unwrap(), q(&[(0, 1), (4, -1)]));
        // Borromean rings: z^4 up to sign
        let b = conway(&braid(3, &[1, -2, 1, -2, 1, -2])).unwrap();
        assert_eq!(
            b.terms().map(|(e, c)| (e, c.abs())).collect::<Vec<_>>(),
            vec![(8, BigInt::from(1))]
        );
    }

    #[test]
    fn conway_of_split_union_vanishes() {
        let t = braid(2, &[1, 1, 1]);
        let u = t.disjoint_union(&braid(2, &[1, 1])).unwrap();
        assert!(conway(&u).unwrap().is_zero());
    }

    #[test]
    fn alexander_trefoil() {
        let a = alexander(&braid(2, &[1, 1, 1])).unwrap();
        assert_eq!(a, q(&[(-2, 1), (0, -1), (2, 1)]));
    }

    #[test]
    fn derivatives() {
        let one = BigRational::one();
        let half = LaurentPoly::monomial(1, 1);
        assert_eq!(
            derivative_at(&half, 1, &one).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        let u2 = q(&[(1, -1), (-1, -1)]);
        assert_eq!(
            derivative_at(&u2, 0, &one).unwrap(),
            BigRational::from_integer((-2).into())
        );
        // d/ds of -s - 1/s at 1 is 0; second derivative is -2
        assert!(derivative_at_half(&u2, 1, &one).unwrap().is_zero());
        assert_eq!(
            derivative_at_half(&u2, 2, &one).unwrap(),
            BigRational::from_integer((-2).into())
        );
        let four = BigRational::from_integer(4.into());
        assert_eq!(
            derivative_at(&half, 0, &four).unwrap(),
            BigRational::from_integer(2.into())
        );
        assert!(derivative_at(&half, 0, &BigRational::from_integer(2.into())).is_err());
    }

    #[test]
    fn derivative_table_columns() {
        let u2 = q(&[(1, -1), (-1, -1)]);
        let t = derivative_table(&u2, 2, &BigRational::one()).unwrap();
        assert_eq!(t.len(), 2);
        // d/dq (-q^(1/2) - q^(-1/2)) at 1 is -1/2 + 1/2
        assert!(t[0].full.is_zero() && t[0].half.is_zero());
        assert_eq!(t[1].half, BigRational::from_integer((-2).into()));
        assert!(derivative_table(&u2, 1, &BigRational::from_integer(2.into())).is_err());
    }

    #[test]
    fn render_and_json() {
        let p = q(&[(-9, 1), (-7, -2), (2, 1), (4, -3)]);
        assert_eq!(p.render("q"), "q^(-9/2) - 2q^(-7/2) + q - 3q^2");
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(p.to_json().to_string(), "[[-9,1],[-7,-2],[2,1],[4,-3]]");
    }
}
