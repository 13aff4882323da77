//! Exact polynomial arithmetic for spectral tie-breaking.
//!
//! Characteristic polynomials are computed in integer arithmetic by the
//! Faddeev–LeVerrier recurrence. Real roots are handled with Sturm sequences
//! over exact rationals, which is enough to compare largest roots and to take
//! the sign of another polynomial at a largest root without any rounding.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count handled by the exact path.
pub const EXACT_CAP: usize = 16;

/// Characteristic polynomial `det(xI - A)` as integer coefficients, lowest degree first.
pub fn char_poly(g: &Graph) -> Result<Vec<i128>> {
    let n = g.n();
    if n > EXACT_CAP {
        return Err(Error::Capacity {
            what: "exact characteristic polynomial",
            requested: n,
            limit: EXACT_CAP,
        });
    }
    let overflow = || Error::Capacity {
        what: "characteristic polynomial coefficient width",
        requested: n,
        limit: EXACT_CAP,
    };
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    if n == 0 {
        return Ok(c);
    }
    // m holds M_k; start from M_1 = I.
    let mut m = vec![vec![0i128; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for k in 1..=n {
        // am = A * M_k
        let mut am = vec![vec![0i128; n]; n];
        for i in 0..n {
            for l in Bits(g.neighbors(i)) {
                for j in 0..n {
                    am[i][j] = am[i][j].checked_add(m[l][j]).ok_or_else(overflow)?;
                }
            }
        }
        let tr: i128 = (0..n).try_fold(0i128, |acc, i| acc.checked_add(am[i][i])).ok_or_else(overflow)?;
        let coeff = -tr / k as i128;
        debug_assert_eq!(tr % k as i128, 0);
        c[n - k] = coeff;
        // M_{k+1} = A M_k + c_{n-k} I
        for (i, row) in am.iter_mut().enumerate() {
            row[i] = row[i].checked_add(coeff).ok_or_else(overflow)?;
        }
        m = am;
    }
    Ok(c)
}

/// Dense polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn from_ints(c: &[i128]) -> Poly {
        Poly::new(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn new(mut c: Vec<BigRational>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).cmp(&BigRational::zero())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        Poly::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        if r.len() < d.0.len() {
            return (Poly(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        let lead = d.lead().clone();
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] / &lead;
            if !f.is_zero() {
                for (i, c) in d.0.iter().enumerate() {
                    r[k + i] = &r[k + i] - &f * c;
                }
            }
            q[k] = f;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn squarefree(&self) -> Poly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Upper bound strictly above every real root (Cauchy).
    pub fn root_bound(&self) -> BigRational {
        let l = self.lead().abs();
        let m = self.0[..self.0.len() - 1]
            .iter()
            .map(|c| c.abs() / &l)
            .max()
            .unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct Sturm(Vec<Poly>);

impl Sturm {
    pub fn new(p: &Poly) -> Sturm {
        let p = p.squarefree();
        let mut seq = vec![p.clone()];
        if p.degree() == 0 {
            return Sturm(seq);
        }
        let mut prev = p.clone();
        let mut cur = p.derivative();
        while !cur.is_zero() {
            seq.push(cur.clone());
            let (_, r) = prev.div_rem(&cur);
            prev = cur;
            cur = Poly::new(r.0.into_iter().map(|c| -c).collect());
        }
        Sturm(seq)
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for p in &self.0 {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b || self.0[0].degree() == 0 {
            return 0;
        }
        self.variations(a).saturating_sub(self.variations(b))
    }

    pub fn poly(&self) -> &Poly {
        &self.0[0]
    }
}

/// Isolating interval `(lo, hi]` for the largest real root of a polynomial.
#[derive(Clone, Debug)]
pub struct LargestRoot {
    sturm: Sturm,
    lo: BigRational,
    hi: BigRational,
}

impl LargestRoot {
    /// `None` when the polynomial has no real root.
    pub fn new(p: &Poly) -> Option<LargestRoot> {
        if p.degree() == 0 {
            return None;
        }
        let sturm = Sturm::new(p);
        let hi = sturm.poly().root_bound();
        let lo = -hi.clone();
        let total = sturm.count(&lo, &hi);
        if total == 0 {
            return None;
        }
        let mut r = LargestRoot { sturm, lo, hi };
        // Bisect until only the largest root remains in the window.
        while r.sturm.count(&r.lo, &r.hi) > 1 {
            r.bisect();
        }
        Some(r)
    }

    pub fn from_ints(c: &[i128]) -> Option<LargestRoot> {
        LargestRoot::new(&Poly::from_ints(c))
    }

    fn bisect(&mut self) {
        let two = BigRational::from_integer(BigInt::from(2));
        let mid = (&self.lo + &self.hi) / two;
        if self.sturm.count(&mid, &self.hi) >= 1 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        self.bisect();
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn interval_f64(&self) -> (f64, f64) {
        (to_f64(&self.lo), to_f64(&self.hi))
    }

    /// Sign of `d` at this root, exactly.
    pub fn sign_of(&mut self, d: &Poly) -> Ordering {
        if d.is_zero() {
            return Ordering::Equal;
        }
        if d.degree() == 0 {
            return d.0[0].cmp(&BigRational::zero());
        }
        let common = Sturm::new(&d.gcd(self.sturm.poly()));
        if common.count(&self.lo, &self.hi) >= 1 {
            return Ordering::Equal;
        }
        let ds = Sturm::new(d);
        while ds.count(&self.lo, &self.hi) > 0 {
            self.bisect();
        }
        d.sign_at(&self.hi)
    }
}

pub fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact comparison of the largest real roots of two polynomials with real roots.
pub fn compare_largest_roots(a: &mut LargestRoot, b: &mut LargestRoot) -> Ordering {
    let common = Sturm::new(&a.sturm.poly().gcd(b.sturm.poly()));
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
        let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
        if common.count(&lo, &hi) >= 1 {
            return Ordering::Equal;
        }
        a.refine();
        b.refine();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::turan;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent route: fraction-free Gaussian elimination of `xI - A`.
    fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
        let n = m.len();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }

    fn eval_int(c: &[i128], x: i128) -> i128 {
        c.iter().rev().fold(0, |acc, &a| acc * x + a)
    }

    #[test]
    fn char_poly_matches_determinants() {
        let graphs = vec![
            Graph::cycle(5).unwrap(),
            Graph::complete(6).unwrap(),
            turan(9, 3).unwrap().0,
            Graph::path(7).unwrap(),
            crate::constructions::y_graph(11, 3).unwrap().0,
        ];
        for g in graphs {
            let c = char_poly(&g).unwrap();
            let n = g.n();
            for x in -3i128..=(n as i128) {
                let m: Vec<Vec<i128>> = (0..n)
                    .map(|i| (0..n).map(|j| if i == j { x } else if g.has_edge(i, j) { -1 } else { 0 }).collect())
                    .collect();
                assert_eq!(eval_int(&c, x), det_bareiss(m), "x={x} g={g:?}");
            }
        }
    }

    #[test]
    fn char_poly_known() {
        // K_3: (x-2)(x+1)^2 = x^3 - 3x - 2
        assert_eq!(char_poly(&Graph::complete(3).unwrap()).unwrap(), vec![-2, -3, 0, 1]);
        // C_4: x^4 - 4x^2
        assert_eq!(char_poly(&Graph::cycle(4).unwrap()).unwrap(), vec![0, 0, -4, 0, 1]);
        assert!(char_poly(&Graph::empty(17).unwrap()).is_err());
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x+3) = x^3 - 7x + 6
        let p = Poly::from_ints(&[6, -7, 0, 1]);
        let s = Sturm::new(&p);
        assert_eq!(s.count(&rat(-10, 1), &rat(10, 1)), 3);
        assert_eq!(s.count(&rat(1, 1), &rat(2, 1)), 1);
        assert_eq!(s.count(&rat(0, 1), &rat(1, 1)), 1);
        assert_eq!(s.count(&rat(3, 2), &rat(5, 2)), 1);
        // Repeated roots count once: (x-1)^2 (x+1)
        let q = Poly::from_ints(&[1, -1, -1, 1]);
        assert_eq!(Sturm::new(&q).count(&rat(-5, 1), &rat(5, 1)), 2);
    }

    #[test]
    fn largest_root_intervals() {
        // x^2 - 2
        let mut r = LargestRoot::from_ints(&[-2, 0, 1]).unwrap();
        for _ in 0..40 {
            r.refine();
        }
        let (lo, hi) = r.interval_f64();
        assert!(lo <= 2f64.sqrt() && 2f64.sqrt() <= hi && hi - lo < 1e-9);
        assert!(LargestRoot::from_ints(&[1, 0, 1]).is_none());
    }

    #[test]
    fn compares_roots_exactly() {
        // sqrt(6) vs 5/2 via x^2-6 and 2x-5.
        let mut a = LargestRoot::from_ints(&[-6, 0, 1]).unwrap();
        let mut b = LargestRoot::from_ints(&[-5, 2]).unwrap();
        assert_eq!(compare_largest_roots(&mut a, &mut b), Ordering::Less);
        // (x^2-2)(x-1) vs (x^2-2)(x+5): both largest roots are sqrt(2).
        let mut a = LargestRoot::from_ints(&[2, -2, -1, 1]).unwrap();
        let mut b = LargestRoot::from_ints(&[-10, -2, 5, 1]).unwrap();
        assert_eq!(compare_largest_roots(&mut a, &mut b), Ordering::Equal);
        // Shared root that is not the largest for one of them: (x^2-2)(x-3) vs x^2-2.
        let mut a = LargestRoot::from_ints(&[6, -2, -3, 1]).unwrap();
        let mut b = LargestRoot::from_ints(&[-2, 0, 1]).unwrap();
        assert_eq!(compare_largest_roots(&mut a, &mut b), Ordering::Greater);
    }

    #[test]
    fn sign_at_root() {
        let mut r = LargestRoot::from_ints(&[-2, 0, 1]).unwrap();
        assert_eq!(r.sign_of(&Poly::from_ints(&[-3, 2])), Ordering::Less); // 2√2-3 < 0
        assert_eq!(r.sign_of(&Poly::from_ints(&[-2, 0, 1])), Ordering::Equal);
        assert_eq!(r.sign_of(&Poly::from_ints(&[-1, 1])), Ordering::Greater);
    }
}
