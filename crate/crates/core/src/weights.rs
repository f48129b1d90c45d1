//! The level-zero weight lattice `P = Z^n / Z(1,...,1)` of `SL(n)` and the
//! coefficient ring `S = Sym(P)`.
//!
//! Weights are normalized so the last coordinate is zero; `S` is the integer
//! polynomial ring in `y_1, ..., y_{n-1}`, the images of `e_1, ..., e_{n-1}`.
//! Under this normalization the null root `delta` maps to zero and
//! `alpha_0 = -theta = e_n - e_1`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::affine_perm::{AffinePerm, Reflection};

/// A level-zero weight in normalized e-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    /// Normalizes `coords` by subtracting the last coordinate from every entry.
    pub fn new(mut coords: Vec<i64>) -> Self {
        assert!(coords.len() >= 2, "rank must be at least 2");
        let last = *coords.last().unwrap();
        for c in &mut coords {
            *c = c.checked_sub(last).expect("weight coordinate overflow");
        }
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight::new(vec![0; n])
    }

    /// The basis vector `e_i`, `1 <= i <= n`.
    pub fn basis(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut coords = vec![0; n];
        coords[i - 1] = 1;
        Weight::new(coords)
    }

    /// `alpha_i = e_i - e_{i+1}` for `i >= 1`, and `alpha_0 = e_n - e_1`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        assert!(i < n, "simple root index {i} out of range for rank {n}");
        let mut coords = vec![0; n];
        if i == 0 {
            coords[n - 1] += 1;
            coords[0] -= 1;
        } else {
            coords[i - 1] += 1;
            coords[i] -= 1;
        }
        Weight::new(coords)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    fn coord(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    /// `<alpha_i^vee, lambda>`: `lambda_i - lambda_{i+1}` for `i >= 1` and
    /// `lambda_n - lambda_1` for `i = 0`.
    pub fn pair_simple(&self, i: usize) -> i64 {
        let n = self.rank();
        assert!(i < n);
        if i == 0 {
            self.coord(n) - self.coord(1)
        } else {
            self.coord(i) - self.coord(i + 1)
        }
    }

    /// Pairing with the coroot of `t_{ab}`: `lambda_{a mod n} - lambda_{b mod n}`
    /// with residues taken in `1..=n`.
    pub fn pair_reflection(&self, t: &Reflection) -> i64 {
        let n = self.rank() as i64;
        assert_eq!(t.rank() as i64, n);
        let ra = (t.a() - 1).rem_euclid(n) as usize + 1;
        let rb = (t.b() - 1).rem_euclid(n) as usize + 1;
        self.coord(ra) - self.coord(rb)
    }

    /// The level-zero action of `s_i`.
    pub fn reflect(&self, i: usize) -> Self {
        let n = self.rank();
        assert!(i < n);
        let mut coords = self.coords.clone();
        if i == 0 {
            coords.swap(0, n - 1);
        } else {
            coords.swap(i - 1, i);
        }
        Weight::new(coords)
    }

    /// The level-zero action of `w`: translations act trivially, so only the
    /// finite part `u(i) = ((w(i) - 1) mod n) + 1` matters.
    pub fn act(&self, w: &AffinePerm) -> Self {
        assert_eq!(w.rank(), self.rank());
        let mut coords = vec![0; self.rank()];
        for (j, r) in w.finite_part().into_iter().enumerate() {
            coords[r - 1] = self.coords[j];
        }
        Weight::new(coords)
    }

    /// The degree-one polynomial `sum_i lambda_i y_i`.
    pub fn to_poly(&self) -> SPoly {
        let nvars = self.rank() - 1;
        let mut p = SPoly::zero(nvars);
        for (i, &c) in self.coords[..nvars].iter().enumerate() {
            if c != 0 {
                let mut exps = vec![0; nvars];
                exps[i] = 1;
                p.add_term(Monomial(exps), c);
            }
        }
        p
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.checked_add(*b).expect("weight coordinate overflow"))
                .collect(),
        )
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }
}

/// An exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse integer polynomial in `y_1, ..., y_{nvars}`. No zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, i64>,
}

/// One term of the JSON form of an [`SPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub exps: Vec<u32>,
}

impl SPoly {
    pub fn zero(nvars: usize) -> Self {
        SPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(vec![0; nvars]), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable `y_i`, `1 <= i <= nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i));
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        assert_eq!(m.0.len(), self.nvars, "monomial arity mismatch");
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o
                    .get()
                    .checked_add(c)
                    .expect("polynomial coefficient overflow");
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// The constant term: evaluation at zero.
    pub fn eval_zero(&self) -> i64 {
        self.terms
            .get(&Monomial(vec![0; self.nvars]))
            .copied()
            .unwrap_or(0)
    }

    /// The common degree of all terms, `None` for the zero polynomial or a
    /// non-homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: i64) -> SPoly {
        if c == 0 {
            return SPoly::zero(self.nvars);
        }
        SPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, &x)| {
                    (
                        m.clone(),
                        x.checked_mul(c).expect("polynomial coefficient overflow"),
                    )
                })
                .collect(),
        }
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, &c)| TermJson {
                coeff: c,
                exps: m.0.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[TermJson]) -> Option<Self> {
        let mut p = SPoly::zero(nvars);
        for t in terms {
            if t.exps.len() != nvars {
                return None;
            }
            p.add_term(Monomial(t.exps.clone()), t.coeff);
        }
        Some(p)
    }
}

impl Serialize for SPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl AddAssign<&SPoly> for SPoly {
    fn add_assign(&mut self, rhs: &SPoly) {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        for (m, &c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl Add for &SPoly {
    type Output = SPoly;
    fn add(self, rhs: &SPoly) -> SPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        self.scale(-1)
    }
}

impl Sub for &SPoly {
    type Output = SPoly;
    fn sub(self, rhs: &SPoly) -> SPoly {
        self + &(-rhs)
    }
}

impl Mul for &SPoly {
    type Output = SPoly;
    fn mul(self, rhs: &SPoly) -> SPoly {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let mut out = SPoly::zero(self.nvars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                out.add_term(
                    ma.mul(mb),
                    ca.checked_mul(cb).expect("polynomial coefficient overflow"),
                );
            }
        }
        out
    }
}

impl fmt::Display for SPoly {
    /// Leading (largest) term first, e.g. `y1^2 - 2*y1*y2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("y{}", i + 1)
                        } else {
                            format!("y{}^{}", i + 1, e)
                        }
                    })
                    .collect();
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
