//! Dense univariate polynomials in `t` over [`Coefficient`], used for the
//! exact rational normal form of Laurent series.

use super::coeff::Coefficient;

pub type UPoly = Vec<Coefficient>;

pub fn trim(p: &mut UPoly) {
    while p.last().is_some_and(Coefficient::is_zero) {
        p.pop();
    }
}

pub fn degree(p: &[Coefficient]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn is_one(p: &[Coefficient]) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub fn low_zeros(p: &[Coefficient]) -> usize {
    p.iter().take_while(|c| c.is_zero()).count()
}

pub fn shift_up(p: &[Coefficient], k: usize) -> UPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Coefficient::zero(); k];
    out.extend_from_slice(p);
    out
}

pub fn add(a: &[Coefficient], b: &[Coefficient]) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(&mut out);
    out
}

pub fn neg(a: &[Coefficient]) -> UPoly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[Coefficient], b: &[Coefficient]) -> UPoly {
    add(a, &neg(b))
}

pub fn scale(a: &[Coefficient], c: &Coefficient) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn mul(a: &[Coefficient], b: &[Coefficient]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if is_one(a) {
        return b.to_vec();
    }
    if is_one(b) {
        return a.to_vec();
    }
    let mut out = vec![Coefficient::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division; `b` must be nonzero.
pub fn divrem(a: &[Coefficient], b: &[Coefficient]) -> (UPoly, UPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].inv().expect("trimmed polynomial has nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Coefficient::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead_inv;
        for (j, y) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &(&c * y);
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Coefficient], b: &[Coefficient]) -> UPoly {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    match x.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = l.inv().expect("nonzero");
            scale(&x, &inv)
        }
    }
}
