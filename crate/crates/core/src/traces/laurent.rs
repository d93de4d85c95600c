//! Integer Laurent polynomials in `q`.

use num::{BigInt, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentSeriesZ(pub BTreeMap<i64, BigInt>);

impl LaurentSeriesZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(e, c.into());
        s
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        let v = self.0.entry(e).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::monomial(BigInt::one(), 0);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl Add for &LaurentSeriesZ {
    type Output = LaurentSeriesZ;
    fn add(self, o: &LaurentSeriesZ) -> LaurentSeriesZ {
        let mut s = self.clone();
        for (e, c) in &o.0 {
            s.add_term(*e, c.clone());
        }
        s
    }
}

impl Neg for &LaurentSeriesZ {
    type Output = LaurentSeriesZ;
    fn neg(self) -> LaurentSeriesZ {
        LaurentSeriesZ(self.0.iter().map(|(e, c)| (*e, -c)).collect())
    }
}

impl Sub for &LaurentSeriesZ {
    type Output = LaurentSeriesZ;
    fn sub(self, o: &LaurentSeriesZ) -> LaurentSeriesZ {
        self + &(-o)
    }
}

impl Mul for &LaurentSeriesZ {
    type Output = LaurentSeriesZ;
    fn mul(self, o: &LaurentSeriesZ) -> LaurentSeriesZ {
        let mut s = LaurentSeriesZ::zero();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &o.0 {
                s.add_term(e1 + e2, c1 * c2);
            }
        }
        s
    }
}

impl fmt::Debug for LaurentSeriesZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.0.iter().map(|(e, c)| format!("{c}q^{e}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}
