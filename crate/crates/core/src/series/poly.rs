//! Sparse multivariate polynomials over ℚ(i) in the residue indeterminates
//! `tau1, tau2, ...`, with exact division and gcd.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::gauss::GaussRat;

/// Exponent vector; index 0 is `tau1`. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(index: usize) -> Self {
        let mut v = SmallVec::from_elem(0, index + 1);
        v[index] = 1;
        Monomial(v)
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial(exps.iter().copied().collect());
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let n = self.0.len().max(o.0.len());
        let mut v: SmallVec<[u32; 4]> = SmallVec::with_capacity(n);
        for i in 0..n {
            v.push(self.exponent(i) + o.exponent(i));
        }
        Monomial(v)
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let n = self.0.len().max(o.0.len());
        let mut v: SmallVec<[u32; 4]> = SmallVec::with_capacity(n);
        for i in 0..n {
            let (a, b) = (self.exponent(i), o.exponent(i));
            if a < b {
                return None;
            }
            v.push(a - b);
        }
        let mut m = Monomial(v);
        m.trim();
        Some(m)
    }

    fn without(&self, var: usize) -> Monomial {
        let mut m = self.clone();
        if var < m.0.len() {
            m.0[var] = 0;
        }
        m.trim();
        m
    }

    fn with_power(&self, var: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        if e > 0 {
            if m.0.len() <= var {
                m.0.resize(var + 1, 0);
            }
            m.0[var] = e;
        }
        m
    }
}

/// Graded order, ties broken lexicographically from the highest variable.
impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for i in (0..n).rev() {
                match self.exponent(i).cmp(&o.exponent(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(index: usize) -> Self {
        let mut p = MPoly::zero();
        p.terms.insert(Monomial::var(index), GaussRat::one());
        p
    }

    pub fn term(m: Monomial, c: GaussRat) -> Self {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Monomial::one()))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn constant_value(&self) -> Option<GaussRat> {
        if self.is_zero() {
            Some(GaussRat::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::one()).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Monomial, &GaussRat)> {
        self.terms.iter().next_back()
    }

    /// Indices of the indeterminates occurring with positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        let mut vars = Vec::new();
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 && !vars.contains(&i) {
                    vars.push(i);
                }
            }
        }
        vars.sort_unstable();
        vars
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter(|m| !m.0.is_empty()).map(|m| m.0.len() - 1).max()
    }

    fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), c1 * c2);
            }
        }
        r
    }

    pub fn mul_term(&self, m: &Monomial, c: &GaussRat) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(mm, a)| (mm.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, lc)) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (lm_d, lc_d) = d.leading()?;
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inv()?));
        }
        let lc_inv = lc_d.inv()?;
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((lm_r, lc_r)) = r.leading() {
            let m = lm_r.div(lm_d)?;
            let c = lc_r * &lc_inv;
            r = r.sub(&d.mul_term(&m, &c));
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Coefficients of `self` viewed as a polynomial in `var`.
    fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let mut out: Vec<MPoly> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            if out.len() <= e {
                out.resize(e + 1, MPoly::zero());
            }
            out[e].add_term(m.without(var), c.clone());
        }
        out
    }

    fn from_coeffs_in(var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut r = MPoly::zero();
        for (e, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                r.add_term(m.with_power(var, e as u32), c.clone());
            }
        }
        r
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return MPoly::one();
        }
        if a == b {
            return a.monic();
        }
        let var = a.max_var().max(b.max_var()).expect("nonconstant");
        let ac = a.coeffs_in(var);
        let bc = b.coeffs_in(var);
        let ca = content(&ac);
        let cb = content(&bc);
        let c = MPoly::gcd(&ca, &cb);
        let mut p = primitive(&ac, &ca);
        let mut q = primitive(&bc, &cb);
        if p.len() < q.len() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_empty() {
            let r = prem(&p, &q);
            p = q;
            q = if r.is_empty() {
                Vec::new()
            } else {
                let cr = content(&r);
                primitive(&r, &cr)
            };
        }
        let cp = content(&p);
        let g = MPoly::from_coeffs_in(var, &primitive(&p, &cp));
        g.mul(&c).monic()
    }

    /// An `n`-th root when `self` is a perfect `n`-th power.
    pub fn nth_root(&self, n: u32) -> Option<MPoly> {
        if n == 1 || self.is_zero() {
            return Some(self.clone());
        }
        if let Some(c) = self.constant_value() {
            return c.nth_root(n).map(MPoly::constant);
        }
        let (lm, lc) = self.leading()?;
        let root_m = Monomial(lm.0.iter().map(|e| if e % n == 0 { Some(e / n) } else { None }).collect::<Option<_>>()?);
        let root_c = lc.nth_root(n)?;
        let (tm, _) = self.terms.iter().next()?;
        let mut r = MPoly::term(root_m.clone(), root_c.clone());
        // leading term of n·r0^(n-1)
        let lead_m = Monomial::from_exponents(&root_m.0.iter().map(|e| e * (n - 1)).collect::<Vec<_>>());
        let lead_c = &root_c.pow(n - 1) * &GaussRat::from_i64(n as i64);
        let lead_c_inv = lead_c.inv()?;
        loop {
            let e = self.sub(&r.pow(n));
            let Some((em, ec)) = e.leading() else {
                return Some(r);
            };
            let m = em.div(&lead_m)?;
            // once the correction falls below the root of the trailing term, no root exists
            if m.degree() * n < tm.degree() {
                return None;
            }
            let c = ec * &lead_c_inv;
            r.add_term(m, c);
            if r.len() > self.len() * (n as usize) + 8 {
                return None;
            }
        }
    }
}

fn content(coeffs: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in coeffs {
        g = MPoly::gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(coeffs: &[MPoly], content: &MPoly) -> Vec<MPoly> {
    coeffs.iter().map(|c| c.div_exact(content).expect("content divides every coefficient")).collect()
}

fn prem(p: &[MPoly], q: &[MPoly]) -> Vec<MPoly> {
    let mut r: Vec<MPoly> = p.to_vec();
    let dq = q.len() - 1;
    let lq = &q[dq];
    trim(&mut r);
    while r.len() >= q.len() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lq);
        }
        for (j, qc) in q.iter().enumerate() {
            let idx = j + dr - dq;
            r[idx] = r[idx].sub(&lr.mul(qc));
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<MPoly>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "tau{}", i + 1)?;
            } else {
                write!(f, "tau{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest term first
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, mag) = if c.is_negative_real() { (true, -c) } else { (false, c.clone()) };
            let body = if m.is_one() {
                mag.to_string()
            } else if mag.is_one() {
                m.to_string()
            } else {
                format!("{}*{}", mag, m)
            };
            if first {
                if neg {
                    write!(f, "-{}", body)?;
                } else {
                    write!(f, "{}", body)?;
                }
            } else if neg {
                write!(f, " - {}", body)?;
            } else {
                write!(f, " + {}", body)?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(i: usize) -> MPoly {
        MPoly::var(i)
    }

    fn c(n: i64) -> MPoly {
        MPoly::constant(GaussRat::from_i64(n))
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let t1 = tau(0);
        let a = t1.mul(&t1).sub(&c(1));
        let b = t1.sub(&c(1));
        assert_eq!(MPoly::gcd(&a, &b), b);
        assert_eq!(a.div_exact(&b).unwrap(), t1.add(&c(1)));
    }

    #[test]
    fn gcd_multivariate() {
        let (x, y) = (tau(0), tau(1));
        let g = x.add(&y).add(&c(2));
        let a = g.mul(&x.sub(&y));
        let b = g.mul(&x.mul(&y).add(&c(1)));
        assert_eq!(MPoly::gcd(&a, &b), g.monic());
        assert!(MPoly::gcd(&x, &y).is_one());
    }

    #[test]
    fn non_divisible() {
        assert!(tau(0).div_exact(&tau(1)).is_none());
        assert!(tau(0).add(&c(1)).div_exact(&tau(0)).is_none());
    }

    #[test]
    fn roots_of_polynomials() {
        let p = tau(0).add(&c(1));
        assert_eq!(p.pow(3).nth_root(3), Some(p.clone()));
        assert_eq!(tau(0).mul(&tau(0)).nth_root(2), Some(tau(0)));
        assert_eq!(tau(0).add(&c(1)).nth_root(2), None);
    }
}
