//! Integer polynomials and exact characteristic polynomials.

use crate::graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; the vector never carries
/// trailing zeros, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients in ascending order of power.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    /// Sign of the value at a rational point, computed without division.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.coeffs.is_empty() {
            return Ordering::Equal;
        }
        // Σ cᵢ pⁱ q^(d-i) with q > 0 has the sign of p(x)
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc.cmp(&BigInt::zero())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides by the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Pseudo-remainder scaled by `|lc(b)|^k`, so its sign pattern matches
    /// the true remainder over the rationals.
    pub fn signed_prem(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.degree();
        let lb = b.leading();
        let lb_abs = lb.abs();
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            // r ← |lb|·r − sign(lb)·lr·x^(dr-db)·b
            for c in r.iter_mut() {
                *c *= &lb_abs;
            }
            let factor = if lb.is_negative() { -lr } else { lr };
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[dr - db + i] -= &factor * bc;
            }
            debug_assert!(r[dr].is_zero());
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Exact quotient `self / b`, or `None` when the division leaves a
    /// remainder or a non-integer coefficient.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < b.degree() {
            return None;
        }
        let db = b.degree();
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let top = r[k + db].clone();
            let (quo, rem) = top.div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= &quo * bc;
            }
            q[k] = quo;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() || (a.is_zero() && !b.is_zero()) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// `self / gcd(self, self')`, primitive.
    pub fn squarefree(&self) -> Self {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive()
            .div_exact(&g)
            .expect("gcd divides the polynomial")
            .primitive()
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn root_bound(&self) -> BigInt {
        let lead = self.leading().abs();
        let max = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        let (q, r) = max.div_rem(&lead);
        q + if r.is_zero() { 1 } else { 2 }
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// `det(xI − M)` for a square integer matrix, by the Faddeev–LeVerrier
/// recurrence `M_k = M·M_{k−1} + c_{n−k+1}·I`, `c_{n−k} = −tr(M·M_k)/k`.
/// All divisions are exact.
pub fn char_poly_matrix(m: &[Vec<BigInt>]) -> IntPolynomial {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    // mk = M·M_{k-1} is stored directly; M_0 = 0 so M·M_0 = 0.
    let mut cur = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = prod + c_{n-k+1} I
        for (i, row) in cur.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        let prod = mat_mul(m, &cur);
        let tr: BigInt = (0..n).map(|i| &prod[i][i]).sum();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        c[n - k] = -q;
        cur = prod;
    }
    IntPolynomial::new(c)
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            let aik = &a[i][k];
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Exact characteristic polynomial of the adjacency matrix of `g`.
///
/// Same recurrence as [`char_poly_matrix`], with the product by the 0/1
/// adjacency matrix reduced to row additions.
pub fn char_poly_exact(g: &Graph) -> IntPolynomial {
    let n = g.order();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut cur = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in cur.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        let mut prod = vec![vec![BigInt::zero(); n]; n];
        for (i, out) in prod.iter_mut().enumerate() {
            for u in g.neighbors(i).iter() {
                for (o, x) in out.iter_mut().zip(&cur[u]) {
                    *o += x;
                }
            }
        }
        let tr: BigInt = (0..n).map(|i| &prod[i][i]).sum();
        let (q, r) = tr.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier division must be exact");
        c[n - k] = -q;
        cur = prod;
    }
    IntPolynomial::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen, random_graph, RandomModel};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    /// Determinant of `xI − A` at an integer point by fraction-free
    /// Bareiss elimination; independent of the Faddeev–LeVerrier path.
    fn det_shifted(g: &Graph, x: i64) -> BigInt {
        let n = g.order();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = if g.has_edge(i, j) { 1 } else { 0 };
                        BigInt::from(if i == j { x } else { 0 } - a)
                    })
                    .collect()
            })
            .collect();
        let mut sign = 1;
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(piv) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, piv);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        m[n - 1][n - 1].clone() * sign
    }

    #[test]
    fn known_char_polys() {
        assert_eq!(char_poly_exact(&complete(3).unwrap()), p(&[-2, -3, 0, 1]));
        assert_eq!(char_poly_exact(&path(2).unwrap()), p(&[-1, 0, 1]));
        assert_eq!(char_poly_exact(&complete(1).unwrap()), p(&[0, 1]));
        // C4: x^4 − 4x^2
        assert_eq!(char_poly_exact(&cycle(4).unwrap()), p(&[0, 0, -4, 0, 1]));
        // Petersen: (x−3)(x−1)^5(x+2)^4
        let pet = char_poly_exact(&petersen().unwrap());
        for x in -5..6 {
            let expect = (x - 3) * (x - 1i64).pow(5) * (x + 2i64).pow(4);
            assert_eq!(pet.eval(&BigInt::from(x)), BigInt::from(expect));
        }
    }

    #[test]
    fn generic_matrix_matches_adjacency_path() {
        for seed in 0..10 {
            let g = random_graph(9, RandomModel::Probability(0.5), seed).unwrap();
            let m: Vec<Vec<BigInt>> = (0..9)
                .map(|i| (0..9).map(|j| BigInt::from(g.has_edge(i, j) as i64)).collect())
                .collect();
            assert_eq!(char_poly_matrix(&m), char_poly_exact(&g));
        }
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[1, 0, -2]).to_string(), "-2x^2 + 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x−1)^2 (x+2) and (x−1)(x−3)
        let a = p(&[2, -3, 0, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.squarefree(), p(&[-2, 1, 1]));
        let pet = char_poly_exact(&petersen().unwrap());
        // (x−3)(x−1)(x+2) = x^3 − 2x^2 − 5x + 6
        assert_eq!(pet.squarefree(), p(&[6, -5, -2, 1]));
        assert_eq!(p(&[6, -5, -2, 1]).div_exact(&p(&[-3, 1])), Some(p(&[-2, 1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])), None);
    }

    #[test]
    fn sign_at_rationals() {
        let f = p(&[-2, 0, 1]); // x^2 − 2
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(f.sign_at(&r(3, 2)), Ordering::Greater);
        assert_eq!(f.sign_at(&r(7, 5)), Ordering::Less);
        assert_eq!(f.sign_at(&r(-3, 2)), Ordering::Greater);
        assert_eq!(p(&[-4, 0, 1]).sign_at(&r(2, 1)), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn faddeev_matches_bareiss(n in 1usize..9, prob in 0.0f64..1.0, seed in any::<u64>(), x in -4i64..10) {
            let g = random_graph(n, RandomModel::Probability(prob), seed).unwrap();
            let f = char_poly_exact(&g);
            prop_assert!(f.is_monic());
            prop_assert_eq!(f.degree(), n);
            prop_assert!(f.coeff(n - 1).is_zero());
            if n >= 2 {
                prop_assert_eq!(f.coeff(n - 2), BigInt::from(-(g.edge_count() as i64)));
            }
            prop_assert_eq!(f.eval(&BigInt::from(x)), det_shifted(&g, x));
        }
    }
}
