//! The affine nilCoxeter algebra `A_0` over the integers, with basis `A_w`
//! and product `A_u A_v = A_{uv}` when lengths add, `0` otherwise.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::affine_perm::AffinePerm;
use crate::error::{Error, Result};

/// `uv` if `l(uv) = l(u) + l(v)`, otherwise `None`.
pub fn a_product(u: &AffinePerm, v: &AffinePerm) -> Result<Option<AffinePerm>> {
    let uv = u.multiply(v)?;
    Ok((uv.length() == u.length() + v.length()).then_some(uv))
}

/// A finite integer combination of basis elements `A_w`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NilCoxElem {
    n: usize,
    terms: BTreeMap<AffinePerm, i64>,
}

impl NilCoxElem {
    pub fn zero(n: usize) -> Self {
        NilCoxElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(&AffinePerm::identity(n))
    }

    pub fn basis(w: &AffinePerm) -> Self {
        let mut x = Self::zero(w.rank());
        x.add_term(w.clone(), 1);
        x
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffinePerm, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: AffinePerm, c: i64) {
        assert_eq!(w.rank(), self.n, "rank mismatch");
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o
                    .get()
                    .checked_add(c)
                    .expect("nilCoxeter coefficient overflow");
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// The coefficient of `A_w`, i.e. `<x, A_w>` for the form making the
    /// basis orthonormal.
    pub fn coeff(&self, w: &AffinePerm) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (w, &x) in &self.terms {
            out.add_term(
                w.clone(),
                x.checked_mul(c).expect("nilCoxeter coefficient overflow"),
            );
        }
        out
    }

    /// Bilinear extension of [`a_product`].
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (u, &a) in &self.terms {
            let lu = u.length();
            for (v, &b) in &other.terms {
                let uv = u.compose(v);
                if uv.length() == lu + v.length() {
                    out.add_term(
                        uv,
                        a.checked_mul(b).expect("nilCoxeter coefficient overflow"),
                    );
                }
            }
        }
        Ok(out)
    }

    /// Right multiplication by `A_i`.
    pub fn rmul_generator(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (w, &c) in &self.terms {
            if !w.has_right_descent(i) {
                out.add_term(w.mul_generator(i), c);
            }
        }
        out
    }

    /// Applies a map on basis indices linearly, e.g. a Dynkin automorphism.
    pub fn map_basis(&self, f: impl Fn(&AffinePerm) -> AffinePerm) -> Self {
        let mut out = Self::zero(self.n);
        for (w, &c) in &self.terms {
            out.add_term(f(w), c);
        }
        out
    }

    /// Keeps only the terms whose basis element has length `len`.
    pub fn homogeneous_part(&self, len: usize) -> Self {
        NilCoxElem {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.length() == len)
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }
}

impl Add for &NilCoxElem {
    type Output = NilCoxElem;
    fn add(self, rhs: &NilCoxElem) -> NilCoxElem {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &NilCoxElem {
    type Output = NilCoxElem;
    fn sub(self, rhs: &NilCoxElem) -> NilCoxElem {
        self + &rhs.scale(-1)
    }
}

impl Mul for &NilCoxElem {
    type Output = NilCoxElem;
    fn mul(self, rhs: &NilCoxElem) -> NilCoxElem {
        self.product(rhs).expect("rank mismatch")
    }
}

impl fmt::Display for NilCoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, &c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "A{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NilCoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize)]
struct NilCoxTermJson<'a> {
    window: &'a [i64],
    coeff: i64,
}

impl Serialize for NilCoxElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(w, &coeff)| NilCoxTermJson {
            window: w.window(),
            coeff,
        }))
    }
}

/// The cyclically decreasing element `w_J` whose letters are exactly `J`.
///
/// Letters are read downward from just below some index missing from `J`,
/// which puts `s_{i+1}` before `s_i` whenever both occur.
pub fn cyclically_decreasing(n: usize, subset: &[usize]) -> Result<AffinePerm> {
    let invalid = || Error::InvalidSubset {
        n,
        subset: subset.to_vec(),
    };
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let mut present = vec![false; n];
    for &j in subset {
        if j >= n || present[j] {
            return Err(invalid());
        }
        present[j] = true;
    }
    let missing = present.iter().position(|&p| !p).ok_or_else(invalid)?;
    let letters: Vec<usize> = (1..n)
        .map(|d| (missing + n - d) % n)
        .filter(|&j| present[j])
        .collect();
    AffinePerm::from_word(n, &letters)
}

/// The Fomin-Stanley generator `h_i = sum_{|J| = i} A_{w_J}`, with `h_0 = 1`
/// and `h_i = 0` for `i < 0`.
pub fn h(n: usize, i: i64) -> Result<NilCoxElem> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if i < 0 {
        return Ok(NilCoxElem::zero(n));
    }
    if i >= n as i64 {
        return Err(Error::HIndexTooLarge { index: i, n });
    }
    let mut out = NilCoxElem::zero(n);
    for subset in (0..n).combinations(i as usize) {
        out.add_term(cyclically_decreasing(n, &subset)?, 1);
    }
    Ok(out)
}

/// `h_{lambda_1} h_{lambda_2} ...` for parts below `n`.
pub fn h_lambda(n: usize, parts: &[usize]) -> Result<NilCoxElem> {
    let mut out = NilCoxElem::one(n);
    for &p in parts {
        if p >= n {
            return Err(Error::PartTooLarge { part: p, k: n - 1 });
        }
        out = out.product(&h(n, p as i64)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_perm::elements_up_to_length;

    fn word(n: usize, letters: &[usize]) -> AffinePerm {
        AffinePerm::from_word(n, letters).unwrap()
    }

    fn a(n: usize, letters: &[usize]) -> NilCoxElem {
        NilCoxElem::basis(&word(n, letters))
    }

    #[test]
    fn a_product_examples() {
        let s0 = word(2, &[0]);
        assert_eq!(a_product(&s0, &s0).unwrap(), None);
        assert_eq!(
            a_product(&word(2, &[1]), &s0).unwrap(),
            Some(word(2, &[1, 0]))
        );
        let w = word(3, &[2, 1, 0]);
        assert_eq!(a_product(&AffinePerm::identity(3), &w).unwrap(), Some(w));
    }

    #[test]
    fn elem_product_examples() {
        let x = &a(2, &[0]) + &a(2, &[1]);
        let expected = &a(2, &[0, 1]) + &a(2, &[1, 0]);
        assert_eq!(&x * &x, expected);
        assert!((&x * &NilCoxElem::zero(2)).is_zero());
        let h1 = h(2, 1).unwrap();
        assert_eq!(&h1 * &h1, expected);
    }

    #[test]
    fn cyclically_decreasing_examples() {
        assert!(cyclically_decreasing(3, &[]).unwrap().is_identity());
        assert_eq!(cyclically_decreasing(3, &[0, 1]).unwrap(), word(3, &[1, 0]));
        assert_eq!(cyclically_decreasing(3, &[0, 2]).unwrap(), word(3, &[0, 2]));
        assert!(cyclically_decreasing(3, &[0, 1, 2]).is_err());
        assert!(cyclically_decreasing(3, &[0, 0]).is_err());
        for n in 2..6 {
            for k in 0..n {
                for subset in (0..n).combinations(k) {
                    let w = cyclically_decreasing(n, &subset).unwrap();
                    assert_eq!(w.length(), k);
                    let mut letters = w.canonical_reduced_word();
                    letters.sort();
                    assert_eq!(letters, subset);
                }
            }
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(h(2, 1).unwrap(), &a(2, &[0]) + &a(2, &[1]));
        let expected = &(&a(3, &[1, 0]) + &a(3, &[2, 1])) + &a(3, &[0, 2]);
        assert_eq!(h(3, 2).unwrap(), expected);
        for n in 2..5 {
            assert_eq!(h(n, 0).unwrap(), NilCoxElem::one(n));
            assert!(h(n, -1).unwrap().is_zero());
            assert!(h(n, n as i64).is_err());
        }
    }

    #[test]
    fn h_lambda_examples() {
        assert_eq!(h_lambda(3, &[]).unwrap(), NilCoxElem::one(3));
        assert_eq!(
            h_lambda(2, &[1, 1]).unwrap(),
            &a(2, &[0, 1]) + &a(2, &[1, 0])
        );
        assert_eq!(
            h_lambda(3, &[1]).unwrap(),
            &(&a(3, &[0]) + &a(3, &[1])) + &a(3, &[2])
        );
        assert!(h_lambda(3, &[3]).is_err());
    }

    #[test]
    fn coeff_examples() {
        let h1 = h(2, 1).unwrap();
        assert_eq!(h1.coeff(&word(2, &[0])), 1);
        assert_eq!(h1.coeff(&AffinePerm::identity(2)), 0);
        assert_eq!(h_lambda(2, &[1, 1]).unwrap().coeff(&word(2, &[1, 0])), 1);
    }

    #[test]
    fn h_generators_commute() {
        for n in 2..=4 {
            for i in 0..n as i64 {
                for j in 0..n as i64 {
                    let (hi, hj) = (h(n, i).unwrap(), h(n, j).unwrap());
                    assert_eq!(&hi * &hj, &hj * &hi, "h_{i} h_{j}, n = {n}");
                }
            }
        }
    }

    #[test]
    fn braid_consistency_over_all_reduced_words() {
        for n in [2, 3] {
            for w in elements_up_to_length(n, 5) {
                for letters in w.reduced_words() {
                    let prod = letters
                        .iter()
                        .fold(NilCoxElem::one(n), |acc, &i| acc.rmul_generator(i));
                    assert_eq!(prod, NilCoxElem::basis(&w));
                }
            }
        }
    }

    #[test]
    fn products_are_graded() {
        let elems = elements_up_to_length(3, 3);
        for u in &elems {
            for v in &elems {
                let p = &NilCoxElem::basis(u) * &NilCoxElem::basis(v);
                for (w, _) in p.terms() {
                    assert_eq!(w.length(), u.length() + v.length());
                }
            }
        }
    }

    #[test]
    fn json_form() {
        let x = &a(2, &[0]).scale(3) + &a(2, &[1]);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"[{"window":[0,3],"coeff":3},{"window":[2,1],"coeff":1}]"#
        );
    }
}
