//! Sturm chains and exact isolation of the largest real root.

use super::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;

fn reduce_positive(p: IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        return p;
    }
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Sturm chain of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Builds the chain of the squarefree part of `p`.
    pub fn new(p: &IntPolynomial) -> Self {
        let p0 = p.squarefree();
        let mut seq = vec![p0.clone()];
        if p0.degree() == 0 {
            return SturmChain { seq };
        }
        let mut a = p0;
        let mut b = a.derivative();
        while !b.is_zero() {
            let r = reduce_positive(a.signed_prem(&b).neg());
            seq.push(b.clone());
            a = b;
            b = r;
        }
        SturmChain { seq }
    }

    pub fn polynomial(&self) -> &IntPolynomial {
        &self.seq[0]
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.seq {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// An interval `(lo, hi]` that contains exactly one root of the chain's
/// polynomial, and no root lies above `hi`.
#[derive(Clone, Debug)]
pub struct LargestRoot {
    chain: SturmChain,
    lo: BigRational,
    hi: BigRational,
}

impl LargestRoot {
    /// Isolates the largest real root of `p`; `None` when `p` has no real
    /// roots (or is constant).
    pub fn isolate(p: &IntPolynomial) -> Option<Self> {
        let chain = SturmChain::new(p);
        let poly = chain.polynomial();
        if poly.degree() == 0 {
            return None;
        }
        let bound = BigRational::from_integer(poly.root_bound());
        let mut lo = -bound.clone();
        let mut hi = bound;
        if chain.count_roots(&lo, &hi) == 0 {
            return None;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        while chain.count_roots(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / &two;
            if chain.count_roots(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(LargestRoot { chain, lo, hi })
    }

    pub fn chain(&self) -> &SturmChain {
        &self.chain
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

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        let two = BigRational::from_integer(BigInt::from(2));
        let mid = (&self.lo + &self.hi) / two;
        if self.chain.count_roots(&mid, &self.hi) == 1 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Refines until the interval is no wider than `width`.
    pub fn refine_to(&mut self, width: &BigRational) {
        while &self.width() > width {
            self.refine();
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        rational_to_f64(&mid)
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};
    use crate::spectral::poly::char_poly_exact;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn counts_roots_of_known_polys() {
        // (x−1)^2 (x+2)(x−3): distinct roots −2, 1, 3
        let p = IntPolynomial::from_i64(&[6, -11, 3, 3, -1]).neg();
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rat(-10, 1), &rat(10, 1)), 3);
        assert_eq!(chain.count_roots(&rat(0, 1), &rat(1, 1)), 1);
        assert_eq!(chain.count_roots(&rat(1, 1), &rat(3, 1)), 1);
        assert_eq!(chain.count_roots(&rat(-2, 1), &rat(0, 1)), 0);
        assert_eq!(chain.count_roots(&rat(-3, 1), &rat(-2, 1)), 1);
    }

    #[test]
    fn largest_root_of_graphs() {
        let cases: Vec<(crate::graph::Graph, f64)> = vec![
            (complete(5).unwrap(), 4.0),
            (cycle(7).unwrap(), 2.0),
            (path(3).unwrap(), 2f64.sqrt()),
            (petersen().unwrap(), 3.0),
        ];
        for (g, rho) in cases {
            let mut root = LargestRoot::isolate(&char_poly_exact(&g)).unwrap();
            root.refine_to(&rat(1, 1 << 40));
            assert!((root.midpoint_f64() - rho).abs() < 1e-11);
            assert!(root.lo() < root.hi());
        }
    }

    #[test]
    fn no_real_roots() {
        assert!(LargestRoot::isolate(&IntPolynomial::from_i64(&[1, 0, 1])).is_none());
        assert!(LargestRoot::isolate(&IntPolynomial::from_i64(&[5])).is_none());
    }

    #[test]
    fn exact_rational_root_at_endpoint() {
        // x − 1/2 scaled: 2x − 1
        let mut r = LargestRoot::isolate(&IntPolynomial::from_i64(&[-1, 2])).unwrap();
        for _ in 0..20 {
            r.refine();
            assert!(r.lo() < &rat(1, 2) && &rat(1, 2) <= r.hi());
        }
    }
}
