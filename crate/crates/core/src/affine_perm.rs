//! The affine symmetric group of type `A_{n-1}`, realized as bijections
//! `w: Z -> Z` with `w(i + n) = w(i) + n` and `sum_{i=1..n} (w(i) - i) = 0`.
//!
//! Elements are stored in window notation `[w(1), ..., w(n)]`. Products use
//! the convention `(uv)(i) = u(v(i))`, so right multiplication by `s_i`
//! permutes window positions and left multiplication permutes values.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of the affine symmetric group `W_af`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    n: usize,
    window: Vec<i64>,
}

/// An affine transposition `t_{ab}` swapping `a + kn <-> b + kn` for all `k`.
///
/// Stored canonically with `1 <= a <= n` and `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reflection {
    n: usize,
    a: i64,
    b: i64,
}

fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

fn checked_add(x: i64, y: i64) -> i64 {
    x.checked_add(y)
        .expect("affine permutation window overflow")
}

fn checked_sub(x: i64, y: i64) -> i64 {
    x.checked_sub(y)
        .expect("affine permutation window overflow")
}

fn checked_mul(x: i64, y: i64) -> i64 {
    x.checked_mul(y)
        .expect("affine permutation window overflow")
}

impl Reflection {
    /// Builds the canonical representative of `t_{ab}`. The order of `a` and
    /// `b` does not matter.
    pub fn new(n: usize, a: i64, b: i64) -> Result<Self> {
        check_rank(n)?;
        let ni = n as i64;
        if (a - b).rem_euclid(ni) == 0 {
            return Err(Error::CongruentReflection { n, a, b });
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let shift = checked_mul((a - 1).div_euclid(ni), ni);
        Ok(Reflection {
            n,
            a: checked_sub(a, shift),
            b: checked_sub(b, shift),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn to_perm(&self) -> AffinePerm {
        AffinePerm::transposition(self.n, self.a, self.b).expect("canonical reflection is valid")
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{},{}]", self.a, self.b)
    }
}

impl AffinePerm {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        AffinePerm {
            n,
            window: (1..=n as i64).collect(),
        }
    }

    /// Validates a window: the entries must sum to `n(n+1)/2` and the residues
    /// mod `n` must be distinct.
    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        check_rank(n)?;
        let ni = n as i64;
        let shift: i64 = window
            .iter()
            .enumerate()
            .map(|(i, &x)| checked_sub(x, i as i64 + 1))
            .fold(0i64, checked_add);
        if shift != 0 {
            return Err(Error::InvalidWindow(format!(
                "{window:?}: sum of w(i) - i is {shift}, expected 0"
            )));
        }
        let mut seen = vec![false; n];
        for &x in &window {
            let r = x.rem_euclid(ni) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow(format!(
                    "{window:?}: residues mod {n} are not pairwise distinct"
                )));
            }
            seen[r] = true;
        }
        Ok(AffinePerm { n, window })
    }

    /// The simple generator `s_i`, `0 <= i < n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        check_rank(n)?;
        if i >= n {
            return Err(Error::LetterOutOfRange { index: i, n });
        }
        let mut w = Self::identity(n);
        w.mul_generator_in_place(i);
        Ok(w)
    }

    /// The product `s_{letters[0]} * ... * s_{letters[k-1]}`; the word need
    /// not be reduced.
    pub fn from_word(n: usize, letters: &[usize]) -> Result<Self> {
        check_rank(n)?;
        if let Some(&index) = letters.iter().find(|&&i| i >= n) {
            return Err(Error::LetterOutOfRange { index, n });
        }
        let mut w = Self::identity(n);
        for &i in letters {
            w.mul_generator_in_place(i);
        }
        Ok(w)
    }

    /// The transposition `t_{ab}`.
    pub fn transposition(n: usize, a: i64, b: i64) -> Result<Self> {
        check_rank(n)?;
        let ni = n as i64;
        if (a - b).rem_euclid(ni) == 0 {
            return Err(Error::CongruentReflection { n, a, b });
        }
        let (ra, rb) = (a.rem_euclid(ni), b.rem_euclid(ni));
        let d = checked_sub(b, a);
        let window = (1..=ni)
            .map(|i| {
                let r = i.rem_euclid(ni);
                if r == ra {
                    checked_add(i, d)
                } else if r == rb {
                    checked_sub(i, d)
                } else {
                    i
                }
            })
            .collect();
        let w = AffinePerm { n, window };
        debug_assert!(Self::from_window(w.window.clone()).is_ok());
        Ok(w)
    }

    /// The Pieri element `rho_i = s_{i-1} s_{i-2} ... s_1 s_0`, indices mod `n`.
    pub fn rho(n: usize, i: i64) -> Result<Self> {
        check_rank(n)?;
        if i < 1 {
            return Err(Error::InvalidPieriIndex(i));
        }
        let letters: Vec<usize> = (0..i).rev().map(|j| (j as usize) % n).collect();
        Self::from_word(n, &letters)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&x, i)| x == i)
    }

    /// Evaluates `w(x)` for an arbitrary integer `x`.
    pub fn apply(&self, x: i64) -> i64 {
        let ni = self.n as i64;
        let r = (x - 1).rem_euclid(ni) + 1;
        let q = (x - r) / ni;
        checked_add(self.window[(r - 1) as usize], checked_mul(q, ni))
    }

    fn check_same_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::RankMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    /// The product `uv` with `(uv)(i) = u(v(i))`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        Ok(self.compose(other))
    }

    pub(crate) fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        AffinePerm {
            n: self.n,
            window: other.window.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let ni = self.n as i64;
        let mut window = vec![0; self.n];
        for (pos, &x) in self.window.iter().enumerate() {
            let r = (x - 1).rem_euclid(ni) + 1;
            let q = (x - r) / ni;
            window[(r - 1) as usize] = checked_sub(pos as i64 + 1, checked_mul(q, ni));
        }
        AffinePerm { n: self.n, window }
    }

    /// Right multiplication by `s_i` in place.
    fn mul_generator_in_place(&mut self, i: usize) {
        let n = self.n;
        if i == 0 {
            let first = self.window[0];
            let last = self.window[n - 1];
            self.window[0] = checked_sub(last, n as i64);
            self.window[n - 1] = checked_add(first, n as i64);
        } else {
            self.window.swap(i - 1, i);
        }
    }

    /// `w * s_i`.
    pub fn mul_generator(&self, i: usize) -> Self {
        assert!(
            i < self.n,
            "generator index {i} out of range for rank {}",
            self.n
        );
        let mut w = self.clone();
        w.mul_generator_in_place(i);
        w
    }

    /// `s_i * w`.
    pub fn generator_mul(&self, i: usize) -> Self {
        assert!(
            i < self.n,
            "generator index {i} out of range for rank {}",
            self.n
        );
        let ni = self.n as i64;
        let lo = i as i64;
        let hi = (lo + 1) % ni;
        let window = self
            .window
            .iter()
            .map(|&x| {
                let r = x.rem_euclid(ni);
                if r == lo {
                    x + 1
                } else if r == hi {
                    x - 1
                } else {
                    x
                }
            })
            .collect();
        AffinePerm { n: self.n, window }
    }

    /// Right multiplication by a transposition.
    pub fn mul_reflection(&self, t: &Reflection) -> Self {
        assert_eq!(self.n, t.n);
        self.compose(&t.to_perm())
    }

    /// Coxeter length, `sum_{1<=i<j<=n} |floor((w(j) - w(i)) / n)|`.
    pub fn length(&self) -> usize {
        let ni = self.n as i64;
        let mut total: u64 = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let d = checked_sub(self.window[j], self.window[i]);
                total += d.div_euclid(ni).unsigned_abs();
            }
        }
        total as usize
    }

    /// Whether `l(w s_i) < l(w)`; equivalently `w(i) > w(i+1)` with
    /// `w(0) = w(n) - n`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.n;
        if i == 0 {
            self.window[n - 1] - n as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// A reduced word, found by repeatedly stripping the right descent of
    /// smallest index.
    pub fn canonical_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (0..self.n).find(|&i| w.has_right_descent(i)) {
            letters.push(i);
            w.mul_generator_in_place(i);
        }
        letters.reverse();
        letters
    }

    /// Every reduced word of `w`, sorted lexicographically.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        fn go(w: &AffinePerm, memo: &mut HashMap<AffinePerm, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
            if w.is_identity() {
                return vec![Vec::new()];
            }
            if let Some(words) = memo.get(w) {
                return words.clone();
            }
            let mut out = Vec::new();
            for i in w.right_descents() {
                for mut word in go(&w.mul_generator(i), memo) {
                    word.push(i);
                    out.push(word);
                }
            }
            out.sort();
            memo.insert(w.clone(), out.clone());
            out
        }
        go(self, &mut HashMap::new())
    }

    /// Bruhat order test. Walks the canonical reduced word of `w` from the
    /// right, keeping a letter for `u` exactly when it is a right descent of
    /// the remaining part of `u` (the greedy subword criterion).
    pub fn bruhat_leq(&self, w: &Self) -> Result<bool> {
        self.check_same_rank(w)?;
        let mut u = self.clone();
        let mut lu = u.length();
        for &i in w.canonical_reduced_word().iter().rev() {
            if lu == 0 {
                return Ok(true);
            }
            if u.has_right_descent(i) {
                u.mul_generator_in_place(i);
                lu -= 1;
            }
        }
        Ok(lu == 0)
    }

    /// All `(v, t)` with `v = w t` and `v` covered by `w` in Bruhat order.
    ///
    /// Candidate reflections are `t_{ab}` with `1 <= a <= n` and
    /// `a < b <= a + n(l(w) + 1)`.
    pub fn lower_covers(&self) -> Vec<(AffinePerm, Reflection)> {
        let len = self.length();
        if len == 0 {
            return Vec::new();
        }
        let ni = self.n as i64;
        let bound = checked_mul(ni, len as i64 + 1);
        let mut out = Vec::new();
        for a in 1..=ni {
            for b in a + 1..=a + bound {
                if (b - a) % ni == 0 || self.apply(a) < self.apply(b) {
                    continue;
                }
                let t = Reflection { n: self.n, a, b };
                let v = self.mul_reflection(&t);
                if v.length() + 1 == len {
                    out.push((v, t));
                }
            }
        }
        out.sort();
        out
    }

    /// `w = w0 * wfin` with `w0` 0-Grassmannian and `wfin` in the finite
    /// symmetric group generated by `s_1, ..., s_{n-1}`.
    pub fn grassmannian_decompose(&self) -> (AffinePerm, AffinePerm) {
        let mut w0 = self.clone();
        let mut stripped = Vec::new();
        while let Some(i) = (1..self.n).find(|&i| w0.has_right_descent(i)) {
            w0.mul_generator_in_place(i);
            stripped.push(i);
        }
        stripped.reverse();
        let wfin = Self::from_word(self.n, &stripped).expect("letters are in range");
        (w0, wfin)
    }

    /// Minimal length representative of its coset in `W_af / W`.
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// Whether `w` lies in the finite symmetric group `W`.
    pub fn is_finite(&self) -> bool {
        let ni = self.n as i64;
        self.window.iter().all(|&x| (1..=ni).contains(&x))
    }

    /// The residues `((w(i) - 1) mod n) + 1`, the finite part acting on `P`.
    pub fn finite_part(&self) -> Vec<usize> {
        let ni = self.n as i64;
        self.window
            .iter()
            .map(|&x| ((x - 1).rem_euclid(ni) + 1) as usize)
            .collect()
    }

    /// The Dynkin rotation `psi^k`, where `psi(s_i) = s_{i-1}`.
    pub fn psi(&self, k: i64) -> Self {
        AffinePerm {
            n: self.n,
            window: (1..=self.n as i64)
                .map(|j| checked_sub(self.apply(checked_add(j, k)), k))
                .collect(),
        }
    }

    /// The Dynkin reflection `omega`, where `omega(s_i) = s_{n-i}`.
    pub fn omega(&self) -> Self {
        AffinePerm {
            n: self.n,
            window: (1..=self.n as i64)
                .map(|j| checked_sub(1, self.apply(1 - j)))
                .collect(),
        }
    }

    /// Word notation, e.g. `s1 s0`; the identity prints as `id`.
    pub fn word_string(&self) -> String {
        let word = self.canonical_reduced_word();
        if word.is_empty() {
            "id".to_string()
        } else {
            word.iter()
                .map(|i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// Serializes as the window.
impl Serialize for AffinePerm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(serializer)
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All elements of length at most `max_len`, sorted by length then window.
pub fn elements_up_to_length(n: usize, max_len: usize) -> Vec<AffinePerm> {
    let mut levels: Vec<Vec<AffinePerm>> = vec![vec![AffinePerm::identity(n)]];
    for len in 0..max_len {
        let mut next = BTreeSet::new();
        for w in &levels[len] {
            for i in 0..n {
                if !w.has_right_descent(i) {
                    next.insert(w.mul_generator(i));
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels.into_iter().flatten().collect()
}

/// All elements of exactly length `len`, sorted by window.
pub fn elements_of_length(n: usize, len: usize) -> Vec<AffinePerm> {
    let mut out: Vec<_> = elements_up_to_length(n, len)
        .into_iter()
        .filter(|w| w.length() == len)
        .collect();
    out.sort();
    out
}
