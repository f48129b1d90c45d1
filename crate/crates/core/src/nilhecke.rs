//! The affine nilHecke ring with coefficients in `S`, written in the basis
//! `A_w` with scalars on the left.
//!
//! Right multiplication by a weight uses the commutation `A_i lambda =
//! (s_i lambda) A_i + <alpha_i^vee, lambda>` recursively along a reduced word.
//! The group element `s_i` is expanded as `1 - alpha_i A_i`, so every
//! intermediate value stays in the `A_w` basis with polynomial coefficients.
//!
//! Structure constants `p^w_{u1,u2}`, the coefficients of
//! `Delta(A_w) = sum p^w_{u1,u2} A_{u1} (x) A_{u2}`, are computed two ways:
//! by multiplying out `Delta(A_i) = A_i (x) 1 + s_i (x) A_i` letter by letter
//! ([`coproduct`]) and by the subset formula over positions of a reduced word,
//! which uses the other form `Delta(A_i) = 1 (x) A_i + A_i (x) s_i`
//! ([`struct_const`]).

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::affine_perm::AffinePerm;
use crate::error::{Error, Result};
use crate::nilcoxeter::NilCoxElem;
use crate::weights::{SPoly, TermJson, Weight};

/// A finite `S`-combination of basis elements `A_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct NilHeckeElem {
    n: usize,
    terms: BTreeMap<AffinePerm, SPoly>,
}

fn add_poly<K: Ord>(map: &mut BTreeMap<K, SPoly>, key: K, p: SPoly) {
    if p.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(p);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &p;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl NilHeckeElem {
    pub fn zero(n: usize) -> Self {
        NilHeckeElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: &AffinePerm) -> Self {
        Self::term(w, SPoly::one(w.rank() - 1))
    }

    /// `p * A_w`.
    pub fn term(w: &AffinePerm, p: SPoly) -> Self {
        let mut x = Self::zero(w.rank());
        x.add_term(w.clone(), p);
        x
    }

    pub fn from_nilcox(x: &NilCoxElem) -> Self {
        let mut out = Self::zero(x.rank());
        for (w, c) in x.terms() {
            out.add_term(w.clone(), SPoly::constant(x.rank() - 1, c));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn nvars(&self) -> usize {
        self.n - 1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffinePerm, &SPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: AffinePerm, p: SPoly) {
        assert_eq!(w.rank(), self.n, "rank mismatch");
        assert_eq!(p.nvars(), self.nvars(), "coefficient ring mismatch");
        add_poly(&mut self.terms, w, p);
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, p) in &other.terms {
            self.add_term(w.clone(), p.clone());
        }
    }

    pub fn coeff(&self, w: &AffinePerm) -> SPoly {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| SPoly::zero(self.nvars()))
    }

    /// Left multiplication by a scalar polynomial.
    pub fn scale(&self, p: &SPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (w, q) in &self.terms {
            out.add_term(w.clone(), p * q);
        }
        out
    }

    /// Right multiplication by `A_i`: `A_w` goes to `A_{w s_i}` when the
    /// length goes up and vanishes otherwise.
    pub fn rmul_a(&self, i: usize) -> Self {
        assert!(i < self.n);
        let mut out = Self::zero(self.n);
        for (w, p) in &self.terms {
            if !w.has_right_descent(i) {
                out.add_term(w.mul_generator(i), p.clone());
            }
        }
        out
    }

    /// Right multiplication by the degree-one scalar `lambda`.
    pub fn rmul_scalar(&self, lambda: &Weight) -> Self {
        assert_eq!(lambda.rank(), self.n);
        let mut out = Self::zero(self.n);
        for (w, p) in &self.terms {
            out.add_assign(&basis_times_weight(w, lambda).scale(p));
        }
        out
    }

    /// Right multiplication by the group element `s_i = 1 - alpha_i A_i`.
    pub fn rmul_s(&self, i: usize) -> Self {
        let alpha = Weight::simple_root(self.n, i);
        let mut out = self.clone();
        for (w, p) in self.rmul_scalar(&alpha).rmul_a(i).terms {
            out.add_term(w, -&p);
        }
        out
    }

    /// Applies the evaluation map at zero to every coefficient.
    pub fn eval_zero(&self) -> NilCoxElem {
        let mut out = NilCoxElem::zero(self.n);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.eval_zero());
        }
        out
    }
}

impl fmt::Display for NilHeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p})*A{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NilHeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `A_w lambda`, by recursion on the smallest right descent `w = w' s_i`:
/// `A_w lambda = (A_{w'} (s_i lambda)) A_i + <alpha_i^vee, lambda> A_{w'}`.
fn basis_times_weight(w: &AffinePerm, lambda: &Weight) -> NilHeckeElem {
    match w.right_descents().first() {
        None => NilHeckeElem::term(w, lambda.to_poly()),
        Some(&i) => {
            let shorter = w.mul_generator(i);
            let mut out = basis_times_weight(&shorter, &lambda.reflect(i)).rmul_a(i);
            let c = lambda.pair_simple(i);
            out.add_term(shorter, SPoly::constant(w.rank() - 1, c));
            out
        }
    }
}

/// An element of `A (x)_S A` in the basis `A_u (x) A_v`, scalars on the left.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElem {
    n: usize,
    terms: BTreeMap<(AffinePerm, AffinePerm), SPoly>,
}

/// Integer-valued tensor `sum c_{u,v} A_u (x) A_v` in `A_0 (x) A_0`.
pub type IntTensor = BTreeMap<(AffinePerm, AffinePerm), i64>;

impl TensorElem {
    pub fn zero(n: usize) -> Self {
        TensorElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `1 (x) 1`.
    pub fn one(n: usize) -> Self {
        let mut t = Self::zero(n);
        let id = AffinePerm::identity(n);
        t.add_term(id.clone(), id, SPoly::one(n - 1));
        t
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffinePerm, &AffinePerm, &SPoly)> {
        self.terms.iter().map(|((u, v), p)| (u, v, p))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: AffinePerm, v: AffinePerm, p: SPoly) {
        assert!(u.rank() == self.n && v.rank() == self.n, "rank mismatch");
        add_poly(&mut self.terms, (u, v), p);
    }

    pub fn coeff(&self, u: &AffinePerm, v: &AffinePerm) -> SPoly {
        self.terms
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or_else(|| SPoly::zero(self.n - 1))
    }

    /// Coefficients of `A_u (x) A_v` for fixed `u`, as an element `sum_v p A_v`.
    pub fn left_row(&self, u: &AffinePerm) -> NilHeckeElem {
        let mut out = NilHeckeElem::zero(self.n);
        for ((a, v), p) in &self.terms {
            if a == u {
                out.add_term(v.clone(), p.clone());
            }
        }
        out
    }

    pub fn eval_zero(&self) -> IntTensor {
        self.terms
            .iter()
            .map(|(k, p)| (k.clone(), p.eval_zero()))
            .filter(|(_, c)| *c != 0)
            .collect()
    }

    /// The flip `A_u (x) A_v -> A_v (x) A_u`.
    pub fn swapped(&self) -> Self {
        let mut out = Self::zero(self.n);
        for ((u, v), p) in &self.terms {
            out.add_term(v.clone(), u.clone(), p.clone());
        }
        out
    }

    pub fn to_json_terms(&self) -> Vec<TensorTermJson> {
        self.terms
            .iter()
            .map(|((u, v), p)| TensorTermJson {
                u: u.window().to_vec(),
                v: v.window().to_vec(),
                poly: p.to_json_terms(),
            })
            .collect()
    }

    pub fn from_json_terms(n: usize, terms: &[TensorTermJson]) -> Result<Self> {
        let mut t = Self::zero(n);
        for term in terms {
            let u = AffinePerm::from_window(term.u.clone())?;
            let v = AffinePerm::from_window(term.v.clone())?;
            if u.rank() != n || v.rank() != n {
                return Err(Error::RankMismatch(n, u.rank().max(v.rank())));
            }
            let p = SPoly::from_json_terms(n - 1, &term.poly)
                .ok_or_else(|| Error::Parse("polynomial exponent arity mismatch".into()))?;
            t.add_term(u, v, p);
        }
        Ok(t)
    }
}

/// One term of the JSON form of a [`TensorElem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub poly: Vec<TermJson>,
}

impl Serialize for TensorElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for ((u, v), p) in &self.terms {
            list.entry(&format_args!("({p}) A{u} (x) A{v}"));
        }
        list.finish()
    }
}

/// `Delta(A_w)` computed along the canonical reduced word of `w`.
pub fn coproduct(w: &AffinePerm) -> TensorElem {
    coproduct_from_word(w.rank(), &w.canonical_reduced_word()).expect("canonical word is valid")
}

/// `Delta(A_{i_1}) ... Delta(A_{i_l})` for the given word, multiplying on the
/// right by `Delta(A_i) = A_i (x) 1 + s_i (x) A_i` one letter at a time.
///
/// For a non-reduced word this is zero.
pub fn coproduct_from_word(n: usize, word: &[usize]) -> Result<TensorElem> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if let Some(&index) = word.iter().find(|&&i| i >= n) {
        return Err(Error::LetterOutOfRange { index, n });
    }
    let mut current = TensorElem::one(n);
    for &i in word {
        let mut next = TensorElem::zero(n);
        let mut times_s: HashMap<AffinePerm, NilHeckeElem> = HashMap::new();
        for ((u, v), p) in &current.terms {
            if !u.has_right_descent(i) {
                next.add_term(u.mul_generator(i), v.clone(), p.clone());
            }
            if !v.has_right_descent(i) {
                let vi = v.mul_generator(i);
                let us = times_s
                    .entry(u.clone())
                    .or_insert_with(|| NilHeckeElem::basis(u).rmul_s(i));
                for (x, q) in &us.terms {
                    next.add_term(x.clone(), vi.clone(), p * q);
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// Runs the subset formula over `word`. Selected positions contribute `A_i`
/// to the first factor and `s_i` to the second; the others contribute `A_i`
/// to the second factor only. Returns, for every reachable first factor
/// `u1`, the second factor `sum_{u2} p^w_{u1,u2} A_{u2}`.
///
/// With a `target`, only subsets spelling a reduced word of `target` are
/// explored: the selected prefix must stay a left factor of `target` in the
/// weak order, and enough positions must remain.
fn subset_expansion(
    n: usize,
    word: &[usize],
    target: Option<&AffinePerm>,
) -> BTreeMap<AffinePerm, NilHeckeElem> {
    struct Walk<'a> {
        word: &'a [usize],
        target: Option<(&'a AffinePerm, usize)>,
        out: BTreeMap<AffinePerm, NilHeckeElem>,
    }

    impl Walk<'_> {
        fn go(&mut self, pos: usize, first: AffinePerm, first_len: usize, second: NilHeckeElem) {
            if second.is_zero() {
                return;
            }
            if pos == self.word.len() {
                if self.target.is_none_or(|(t, _)| *t == first) {
                    match self.out.entry(first) {
                        Entry::Vacant(v) => {
                            v.insert(second);
                        }
                        Entry::Occupied(mut o) => o.get_mut().add_assign(&second),
                    }
                }
                return;
            }
            let i = self.word[pos];
            let remaining = self.word.len() - pos - 1;

            if !first.has_right_descent(i) {
                let extended = first.mul_generator(i);
                let admissible = match self.target {
                    None => true,
                    Some((t, t_len)) => {
                        first_len < t_len
                            && extended.inverse().compose(t).length() == t_len - first_len - 1
                    }
                };
                if admissible {
                    self.go(pos + 1, extended, first_len + 1, second.rmul_s(i));
                }
            }

            let skip_ok = match self.target {
                None => true,
                Some((_, t_len)) => remaining >= t_len - first_len,
            };
            if skip_ok {
                self.go(pos + 1, first, first_len, second.rmul_a(i));
            }
        }
    }

    let mut walk = Walk {
        word,
        target: target.map(|t| (t, t.length())),
        out: BTreeMap::new(),
    };
    if walk.target.is_none_or(|(_, t_len)| t_len <= word.len()) {
        let id = AffinePerm::identity(n);
        walk.go(0, id.clone(), 0, NilHeckeElem::basis(&id));
    }
    walk.out
}

/// `Delta(A_w)` assembled entirely from the subset formula.
pub fn coproduct_by_subsets(w: &AffinePerm) -> TensorElem {
    coproduct_by_subsets_from_word(w.rank(), &w.canonical_reduced_word())
        .expect("canonical word is valid")
}

pub fn coproduct_by_subsets_from_word(n: usize, word: &[usize]) -> Result<TensorElem> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    if let Some(&index) = word.iter().find(|&&i| i >= n) {
        return Err(Error::LetterOutOfRange { index, n });
    }
    let mut t = TensorElem::zero(n);
    for (u1, row) in subset_expansion(n, word, None) {
        for (u2, p) in row.terms {
            t.add_term(u1.clone(), u2, p);
        }
    }
    Ok(t)
}

/// `sum_{u2} p^w_{u1,u2} A_{u2}` by the subset formula.
pub fn struct_const_row(w: &AffinePerm, u1: &AffinePerm) -> Result<NilHeckeElem> {
    struct_const_row_from_word(w.rank(), &w.canonical_reduced_word(), u1)
}

pub fn struct_const_row_from_word(
    n: usize,
    word: &[usize],
    u1: &AffinePerm,
) -> Result<NilHeckeElem> {
    if u1.rank() != n {
        return Err(Error::RankMismatch(n, u1.rank()));
    }
    if let Some(&index) = word.iter().find(|&&i| i >= n) {
        return Err(Error::LetterOutOfRange { index, n });
    }
    Ok(subset_expansion(n, word, Some(u1))
        .remove(u1)
        .unwrap_or_else(|| NilHeckeElem::zero(n)))
}

/// The equivariant structure constant `p^w_{u1,u2}` by the subset formula.
pub fn struct_const(w: &AffinePerm, u1: &AffinePerm, u2: &AffinePerm) -> Result<SPoly> {
    if w.rank() != u2.rank() {
        return Err(Error::RankMismatch(w.rank(), u2.rank()));
    }
    Ok(struct_const_row(w, u1)?.coeff(u2))
}

/// Which algorithm to use for a structure constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Coefficient extraction from the full coproduct.
    Delta,
    /// The subset formula over positions of a reduced word.
    Subset,
}

pub fn struct_const_with(
    method: Method,
    w: &AffinePerm,
    u1: &AffinePerm,
    u2: &AffinePerm,
) -> Result<SPoly> {
    match method {
        Method::Subset => struct_const(w, u1, u2),
        Method::Delta => {
            if w.rank() != u1.rank() || w.rank() != u2.rank() {
                return Err(Error::RankMismatch(w.rank(), u1.rank().max(u2.rank())));
            }
            Ok(coproduct(w).coeff(u1, u2))
        }
    }
}

/// The cap operator `D_u(A_w) = sum_{l(v) = l(w) - l(u)} phi(p^w_{u,v}) A_v`,
/// extended linearly.
pub fn cap(u: &AffinePerm, x: &NilCoxElem) -> Result<NilCoxElem> {
    if u.rank() != x.rank() {
        return Err(Error::RankMismatch(u.rank(), x.rank()));
    }
    let lu = u.length();
    let mut out = NilCoxElem::zero(x.rank());
    for (w, c) in x.terms() {
        let lw = w.length();
        if lw < lu {
            continue;
        }
        for (v, p) in struct_const_row(w, u)?.terms() {
            if v.length() == lw - lu {
                out.add_term(v.clone(), c * p.eval_zero());
            }
        }
    }
    Ok(out)
}

/// The Pieri operator `D_i = D_{rho_i}`; `D_0` is the identity.
pub fn pieri_cap(i: i64, x: &NilCoxElem) -> Result<NilCoxElem> {
    if i == 0 {
        return Ok(x.clone());
    }
    cap(&AffinePerm::rho(x.rank(), i)?, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_perm::elements_up_to_length;

    fn word(n: usize, letters: &[usize]) -> AffinePerm {
        AffinePerm::from_word(n, letters).unwrap()
    }

    fn y1() -> SPoly {
        SPoly::var(1, 1)
    }

    fn c(v: i64) -> SPoly {
        SPoly::constant(1, v)
    }

    #[test]
    fn rmul_a_examples() {
        let id = AffinePerm::identity(2);
        let s0 = word(2, &[0]);
        assert_eq!(NilHeckeElem::basis(&id).rmul_a(0), NilHeckeElem::basis(&s0));
        assert!(NilHeckeElem::basis(&s0).rmul_a(0).is_zero());
        let x = NilHeckeElem::term(&word(2, &[1]), y1());
        assert_eq!(x.rmul_a(0), NilHeckeElem::term(&word(2, &[1, 0]), y1()));
    }

    #[test]
    fn rmul_scalar_examples() {
        let id = AffinePerm::identity(3);
        let l = Weight::new(vec![4, -1, 0]);
        assert_eq!(
            NilHeckeElem::basis(&id).rmul_scalar(&l),
            NilHeckeElem::term(&id, l.to_poly())
        );

        let s1 = word(2, &[1]);
        let a0 = Weight::simple_root(2, 0);
        let a1 = Weight::simple_root(2, 1);
        let mut expected = NilHeckeElem::term(&s1, a1.to_poly());
        expected.add_term(AffinePerm::identity(2), c(-2));
        assert_eq!(NilHeckeElem::basis(&s1).rmul_scalar(&a0), expected);

        for n in [2, 3, 4] {
            let s1 = word(n, &[1]);
            let a1 = Weight::simple_root(n, 1);
            let mut expected = NilHeckeElem::term(&s1, -&a1.to_poly());
            expected.add_term(AffinePerm::identity(n), SPoly::constant(n - 1, 2));
            assert_eq!(NilHeckeElem::basis(&s1).rmul_scalar(&a1), expected);
        }
    }

    #[test]
    fn rmul_s_examples() {
        let id = AffinePerm::identity(2);
        let s0 = word(2, &[0]);
        let s1 = word(2, &[1]);
        let mut expected = NilHeckeElem::basis(&id);
        expected.add_term(s0.clone(), y1().scale(2));
        assert_eq!(NilHeckeElem::basis(&id).rmul_s(0), expected);

        let a1 = Weight::simple_root(2, 1).to_poly();
        let mut expected = NilHeckeElem::basis(&s1);
        expected.add_term(word(2, &[1, 0]), -&a1);
        expected.add_term(s0, c(2));
        assert_eq!(NilHeckeElem::basis(&s1).rmul_s(0), expected);
    }

    #[test]
    fn s_is_an_involution() {
        for n in [2, 3] {
            for w in elements_up_to_length(n, 3) {
                for i in 0..n {
                    let x = NilHeckeElem::basis(&w);
                    assert_eq!(x.rmul_s(i).rmul_s(i), x, "{w} s_{i} s_{i}");
                }
            }
        }
    }

    #[test]
    fn rmul_scalar_is_left_linear() {
        let w = word(3, &[1, 0, 2]);
        let p = &SPoly::var(2, 1) + &SPoly::constant(2, 3);
        let l = Weight::new(vec![2, 5, 0]);
        let x = NilHeckeElem::term(&w, p.clone());
        assert_eq!(
            x.rmul_scalar(&l),
            NilHeckeElem::basis(&w).rmul_scalar(&l).scale(&p)
        );
    }

    #[test]
    fn coproduct_examples() {
        let id = AffinePerm::identity(2);
        assert_eq!(coproduct(&id), TensorElem::one(2));

        let s0 = word(2, &[0]);
        let mut expected = TensorElem::zero(2);
        expected.add_term(s0.clone(), id.clone(), c(1));
        expected.add_term(id.clone(), s0.clone(), c(1));
        expected.add_term(s0.clone(), s0.clone(), y1().scale(2));
        assert_eq!(coproduct(&s0), expected);

        let s1s0 = word(2, &[1, 0]);
        assert_eq!(coproduct(&s1s0).coeff(&s0, &s0), c(2));
    }

    #[test]
    fn struct_const_examples() {
        let s0 = word(2, &[0]);
        let s1 = word(2, &[1]);
        let s1s0 = word(2, &[1, 0]);
        let id = AffinePerm::identity(2);
        assert!(struct_const(&s0, &s1s0, &s0).unwrap().is_zero());
        assert_eq!(struct_const(&s1s0, &s0, &s0).unwrap(), c(2));
        assert_eq!(struct_const(&s1s0, &s1, &s0).unwrap(), c(1));
        assert_eq!(struct_const(&s1s0, &s1s0, &id).unwrap(), c(1));
        let a1 = Weight::simple_root(2, 1).to_poly();
        assert_eq!(struct_const(&s1s0, &s1s0, &s1s0).unwrap(), &a1 * &a1);
        assert_eq!((&a1 * &a1), (&y1() * &y1()).scale(4));
    }

    #[test]
    fn cap_examples() {
        let id = AffinePerm::identity(2);
        let s0 = word(2, &[0]);
        let s1 = word(2, &[1]);
        let s1s0 = word(2, &[1, 0]);
        let w = NilCoxElem::basis(&s1s0);
        assert_eq!(cap(&id, &w).unwrap(), w);
        assert_eq!(
            cap(&s0, &NilCoxElem::basis(&s0)).unwrap(),
            NilCoxElem::one(2)
        );
        assert_eq!(cap(&s1s0, &w).unwrap(), NilCoxElem::one(2));

        assert_eq!(
            pieri_cap(1, &NilCoxElem::basis(&s0)).unwrap(),
            NilCoxElem::one(2)
        );
        assert!(pieri_cap(1, &NilCoxElem::basis(&s1)).unwrap().is_zero());
        assert_eq!(pieri_cap(2, &w).unwrap(), NilCoxElem::one(2));
        let expected = &NilCoxElem::basis(&s0).scale(2) + &NilCoxElem::basis(&s1);
        assert_eq!(pieri_cap(1, &w).unwrap(), expected);
    }

    #[test]
    fn subset_and_delta_agree() {
        for (n, max_len) in [(2, 6), (3, 4)] {
            for w in elements_up_to_length(n, max_len) {
                let delta = coproduct(&w);
                assert_eq!(coproduct_by_subsets(&w), delta, "{w}");
                for (u1, _, _) in delta.terms() {
                    assert_eq!(struct_const_row(&w, u1).unwrap(), delta.left_row(u1));
                }
            }
        }
    }

    #[test]
    fn non_reduced_word_gives_zero() {
        assert!(coproduct_from_word(2, &[0, 0]).unwrap().is_empty());
        assert!(coproduct_by_subsets_from_word(3, &[1, 2, 1, 2])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn method_dispatch() {
        let w = word(3, &[2, 1, 0, 2]);
        for u1 in elements_up_to_length(3, 2) {
            for u2 in elements_up_to_length(3, 3) {
                assert_eq!(
                    struct_const_with(Method::Delta, &w, &u1, &u2).unwrap(),
                    struct_const_with(Method::Subset, &w, &u1, &u2).unwrap()
                );
            }
        }
    }

    #[test]
    fn tensor_json_round_trip() {
        let t = coproduct(&word(3, &[1, 0, 2]));
        let json = serde_json::to_string(&t).unwrap();
        let terms: Vec<TensorTermJson> = serde_json::from_str(&json).unwrap();
        assert_eq!(TensorElem::from_json_terms(3, &terms).unwrap(), t);
    }

    #[test]
    fn chevalley_formula() {
        for n in 2..=3 {
            let weights: Vec<Weight> = (1..=n)
                .map(|i| Weight::basis(n, i))
                .chain([Weight::new(vec![3, -1, 2][..n].to_vec())])
                .collect();
            for w in elements_up_to_length(n, 4) {
                for lambda in &weights {
                    let mut expected = NilHeckeElem::term(&w, lambda.act(&w).to_poly());
                    for (v, t) in w.lower_covers() {
                        expected.add_term(v, SPoly::constant(n - 1, lambda.pair_reflection(&t)));
                    }
                    assert_eq!(
                        NilHeckeElem::basis(&w).rmul_scalar(lambda),
                        expected,
                        "w={w} lambda={lambda:?}"
                    );
                }
            }
        }
    }
}
