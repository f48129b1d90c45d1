//! Symmetric functions in the monomial basis, truncated at a degree bound,
//! plus weak Schur functions and the identities tying them to strong Schur
//! functions and structure constants.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::affine_perm::{elements_of_length, AffinePerm};
use crate::error::{Error, Result};
use crate::nilcoxeter::{h_lambda, NilCoxElem};
use crate::nilhecke::struct_const_row;
use crate::strong::strong_schur;

/// An integer partition with positive, weakly decreasing parts.
///
/// Ordered by size, then reverse-lexicographically, so `(2)` sorts before
/// `(1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest_part(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// All distinct orderings of the parts, in lexicographic order.
    pub fn compositions(&self) -> Vec<Vec<usize>> {
        let mut current = self.0.clone();
        current.sort_unstable();
        let mut out = vec![current.clone()];
        while next_permutation(&mut current) {
            out.push(current.clone());
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rearranges `v` into the next lexicographic permutation; returns `false`
/// (leaving `v` sorted ascending) after the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        v.reverse();
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All partitions of `d` with parts at most `max_part`, in reverse
/// lexicographic order.
pub fn bounded_partitions(d: usize, max_part: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, max_part, &mut Vec::new(), &mut out);
    out
}

pub fn partitions(d: usize) -> Vec<Partition> {
    bounded_partitions(d, d)
}

/// A symmetric function `sum c_lambda m_lambda` known exactly through degree
/// `bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    bound: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SymFunc {
    pub fn zero(bound: usize) -> Self {
        SymFunc {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: usize) -> Self {
        Self::monomial(Partition::empty(), bound)
    }

    /// `m_lambda`, or zero if `|lambda|` exceeds the bound.
    pub fn monomial(lambda: Partition, bound: usize) -> Self {
        let mut f = Self::zero(bound);
        f.add_term(lambda, 1);
        f
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Adds `c m_lambda`; terms above the bound are discarded.
    pub fn add_term(&mut self, lambda: Partition, c: i64) {
        if c == 0 || lambda.size() > self.bound {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o
                    .get()
                    .checked_add(c)
                    .expect("symmetric function coefficient overflow");
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = SymFunc {
            bound: self.bound.min(other.bound),
            terms: BTreeMap::new(),
        };
        for (p, &c) in self.terms.iter().chain(&other.terms) {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.bound);
        for (p, &x) in &self.terms {
            out.add_term(
                p.clone(),
                x.checked_mul(c)
                    .expect("symmetric function coefficient overflow"),
            );
        }
        out
    }

    /// The product, truncated at the smaller of the two bounds.
    pub fn product(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut out = Self::zero(bound);
        for (lambda, &a) in &self.terms {
            for (mu, &b) in &other.terms {
                if lambda.size() + mu.size() > bound {
                    continue;
                }
                let ab = a
                    .checked_mul(b)
                    .expect("symmetric function coefficient overflow");
                for (nu, c) in monomial_product(lambda, mu) {
                    out.add_term(
                        nu,
                        c.checked_mul(ab)
                            .expect("symmetric function coefficient overflow"),
                    );
                }
            }
        }
        out
    }

    /// The degree-`d` component.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        SymFunc {
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, &c)| (p.clone(), c))
                .collect(),
        }
    }

    /// Re-labels the bound. Only meaningful when the function is known to be
    /// a polynomial of degree at most the old bound.
    pub fn with_bound(&self, bound: usize) -> Self {
        let mut out = Self::zero(bound);
        for (p, &c) in &self.terms {
            out.add_term(p.clone(), c);
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, &c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "m{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize)]
struct SymTermJson<'a> {
    partition: &'a [usize],
    coeff: i64,
}

#[derive(Serialize)]
struct SymFuncJson<'a> {
    degree: usize,
    terms: Vec<SymTermJson<'a>>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            degree: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(p, &coeff)| SymTermJson {
                    partition: p.parts(),
                    coeff,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

/// Expands `m_lambda m_mu = sum_nu c_nu m_nu`.
///
/// `c_nu` is the coefficient of `x^nu` in the product, i.e. the number of
/// pairs of rearrangements `(alpha, beta)` of `lambda` and `mu`, padded to
/// `l(lambda) + l(mu)` variables, with `alpha + beta = nu`. Each pair whose
/// sum is already weakly decreasing is counted once toward its partition.
pub fn monomial_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let len = lambda.len() + mu.len();
    let padded = |p: &Partition| {
        let mut v = p.parts().to_vec();
        v.resize(len, 0);
        Partition(v).compositions()
    };
    let (alphas, betas) = (padded(lambda), padded(mu));
    let mut out = BTreeMap::new();
    for alpha in &alphas {
        for beta in &betas {
            let sum: Vec<usize> = alpha.iter().zip(beta).map(|(a, b)| a + b).collect();
            if sum.windows(2).all(|p| p[0] >= p[1]) {
                *out.entry(Partition::new(sum)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// `h_r = sum_{|mu| = r} m_mu`.
pub fn complete_homogeneous(r: usize, bound: usize) -> SymFunc {
    let mut f = SymFunc::zero(bound);
    for mu in partitions(r) {
        f.add_term(mu, 1);
    }
    f
}

/// `h_lambda` in the monomial basis.
pub fn h_to_m(lambda: &Partition, bound: usize) -> SymFunc {
    lambda.parts().iter().fold(SymFunc::one(bound), |acc, &r| {
        acc.product(&complete_homogeneous(r, bound))
    })
}

/// `Weak_{w/u} = sum_lambda <h_lambda A_u, A_w> m_lambda` over `(n-1)`-bounded
/// partitions of size `l(w) - l(u)`.
pub fn weak_schur(w: &AffinePerm, u: &AffinePerm) -> Result<SymFunc> {
    let n = w.rank();
    if u.rank() != n {
        return Err(Error::RankMismatch(n, u.rank()));
    }
    let (lw, lu) = (w.length(), u.length());
    if lw < lu {
        return Ok(SymFunc::zero(0));
    }
    let d = lw - lu;
    let mut f = SymFunc::zero(d);
    let au = NilCoxElem::basis(u);
    for lambda in bounded_partitions(d, n - 1) {
        let c = h_lambda(n, lambda.parts())?.product(&au)?.coeff(w);
        f.add_term(lambda, c);
    }
    Ok(f)
}

/// Comparison of the two sides of the affine Cauchy identity in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyDegree {
    pub degree: usize,
    pub pass: bool,
    /// `(mu, nu, kernel side, strong/weak side)` for each differing coefficient
    /// of `m_mu(x) m_nu(y)`.
    pub mismatches: Vec<(Vec<usize>, Vec<usize>, i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    pub n: usize,
    pub degrees: Vec<CauchyDegree>,
}

impl CauchyReport {
    pub fn pass(&self) -> bool {
        self.degrees.iter().all(|d| d.pass)
    }
}

type BiMonomial = BTreeMap<(Partition, Partition), i64>;

fn add_bi(map: &mut BiMonomial, key: (Partition, Partition), c: i64) {
    if c != 0 {
        *map.entry(key).or_insert(0) += c;
    }
}

/// Checks `sum_{lambda_1 < n} h_lambda(x) m_lambda(y) =
/// sum_{w in W^0} Strong_w(x) Weak_w(y)` degree by degree through `d`.
pub fn cauchy_check(n: usize, d: usize) -> Result<CauchyReport> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let id = AffinePerm::identity(n);
    let mut degrees = Vec::new();
    for deg in 0..=d {
        let mut kernel = BiMonomial::new();
        for lambda in bounded_partitions(deg, n - 1) {
            for (mu, c) in h_to_m(&lambda, deg).terms() {
                add_bi(&mut kernel, (mu.clone(), lambda.clone()), c);
            }
        }
        let mut dual = BiMonomial::new();
        for w in elements_of_length(n, deg)
            .into_iter()
            .filter(AffinePerm::is_grassmannian)
        {
            let strong = strong_schur(&w, &id)?;
            let weak = weak_schur(&w, &id)?;
            for (mu, a) in strong.terms() {
                for (nu, b) in weak.terms() {
                    add_bi(&mut dual, (mu.clone(), nu.clone()), a * b);
                }
            }
        }
        kernel.retain(|_, c| *c != 0);
        dual.retain(|_, c| *c != 0);
        let mut keys: Vec<_> = kernel.keys().chain(dual.keys()).cloned().collect();
        keys.sort();
        keys.dedup();
        let mismatches: Vec<_> = keys
            .into_iter()
            .filter_map(|k| {
                let (a, b) = (
                    kernel.get(&k).copied().unwrap_or(0),
                    dual.get(&k).copied().unwrap_or(0),
                );
                (a != b).then(|| (k.0.parts().to_vec(), k.1.parts().to_vec(), a, b))
            })
            .collect();
        degrees.push(CauchyDegree {
            degree: deg,
            pass: mismatches.is_empty(),
            mismatches,
        });
    }
    Ok(CauchyReport { n, degrees })
}

/// `v -> phi(p^w_{u,v})` over 0-Grassmannian `v` of length `l(w) - l(u)`;
/// zero coefficients are omitted.
pub fn strong_expand(w: &AffinePerm, u: &AffinePerm) -> Result<BTreeMap<AffinePerm, i64>> {
    if w.rank() != u.rank() {
        return Err(Error::RankMismatch(w.rank(), u.rank()));
    }
    let (lw, lu) = (w.length(), u.length());
    if lw < lu {
        return Ok(BTreeMap::new());
    }
    Ok(struct_const_row(w, u)?
        .terms()
        .filter(|(v, _)| v.is_grassmannian() && v.length() == lw - lu)
        .map(|(v, p)| (v.clone(), p.eval_zero()))
        .filter(|(_, c)| *c != 0)
        .collect())
}

/// Both sides of `Strong_{w/u} = sum_v phi(p^w_{u,v}) Strong_v`.
#[derive(Clone, Debug)]
pub struct StrongExpansion {
    pub coefficients: BTreeMap<AffinePerm, i64>,
    pub skew: SymFunc,
    pub expanded: SymFunc,
}

impl StrongExpansion {
    pub fn holds(&self) -> bool {
        self.skew == self.expanded
    }
}

pub fn check_strong_expansion(w: &AffinePerm, u: &AffinePerm) -> Result<StrongExpansion> {
    let coefficients = strong_expand(w, u)?;
    let skew = strong_schur(w, u)?;
    let id = AffinePerm::identity(w.rank());
    let mut expanded = SymFunc::zero(skew.bound());
    for (v, &c) in &coefficients {
        expanded = expanded.add(&strong_schur(v, &id)?.with_bound(skew.bound()).scale(c));
    }
    Ok(StrongExpansion {
        coefficients,
        skew,
        expanded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec())
    }

    fn m(p: &[usize], bound: usize) -> SymFunc {
        SymFunc::monomial(part(p), bound)
    }

    /// Expands `m_lambda` as an explicit polynomial in `vars` variables.
    fn expand(lambda: &Partition, vars: usize) -> HashMap<Vec<usize>, i64> {
        let mut out = HashMap::new();
        if lambda.len() > vars {
            return out;
        }
        let mut padded = lambda.parts().to_vec();
        padded.resize(vars, 0);
        for exps in Partition(padded).compositions() {
            out.insert(exps, 1);
        }
        out
    }

    fn poly_mul(
        a: &HashMap<Vec<usize>, i64>,
        b: &HashMap<Vec<usize>, i64>,
    ) -> HashMap<Vec<usize>, i64> {
        let mut out = HashMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        out
    }

    /// Brute-force product: multiply explicit polynomials in enough variables
    /// and read off the coefficient of each sorted monomial.
    fn product_oracle(f: &SymFunc, g: &SymFunc) -> SymFunc {
        let bound = f.bound().min(g.bound());
        let vars = bound.max(1);
        let mut total: HashMap<Vec<usize>, i64> = HashMap::new();
        for (lambda, a) in f.terms() {
            for (mu, b) in g.terms() {
                for (e, c) in poly_mul(&expand(lambda, vars), &expand(mu, vars)) {
                    *total.entry(e).or_insert(0) += a * b * c;
                }
            }
        }
        let mut out = SymFunc::zero(bound);
        for (e, c) in total {
            if e.windows(2).all(|p| p[0] >= p[1]) {
                out.add_term(Partition::new(e), c);
            }
        }
        out
    }

    #[test]
    fn partition_order_and_enumeration() {
        let ps: Vec<Vec<usize>> = partitions(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            ps,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(bounded_partitions(4, 2).len(), 3);
        assert!(part(&[2]) < part(&[1, 1]));
        assert!(part(&[1, 1]) < part(&[3]));
        assert_eq!(bounded_partitions(0, 3), vec![Partition::empty()]);
        let counts: Vec<usize> = (0..8).map(|d| partitions(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn compositions_are_distinct_rearrangements() {
        assert_eq!(
            part(&[2, 1, 1]).compositions(),
            vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]
        );
        assert_eq!(Partition::empty().compositions(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn product_examples() {
        let expected = m(&[2], 4).add(&m(&[1, 1], 4).scale(2));
        assert_eq!(m(&[1], 4).product(&m(&[1], 4)), expected);
        let f = m(&[2, 1], 5).add(&m(&[3], 5).scale(-2));
        assert_eq!(f.product(&SymFunc::one(5)), f);
        let p = m(&[1], 4).product(&m(&[2], 4));
        assert_eq!(p.coeff(&part(&[2, 1])), 1);
        assert_eq!(p.coeff(&part(&[3])), 1);
        assert_eq!(p, m(&[3], 4).add(&m(&[2, 1], 4)));
    }

    #[test]
    fn product_truncates() {
        assert!(m(&[1], 1).product(&m(&[1], 1)).is_zero());
        assert_eq!(m(&[1], 3).product(&m(&[1], 2)).bound(), 2);
    }

    #[test]
    fn product_matches_brute_force() {
        let bound = 6;
        for d1 in 0..=3 {
            for d2 in 0..=3 {
                for lambda in partitions(d1) {
                    for mu in partitions(d2) {
                        let f = SymFunc::monomial(lambda.clone(), bound);
                        let g = SymFunc::monomial(mu.clone(), bound);
                        assert_eq!(f.product(&g), product_oracle(&f, &g), "{lambda} * {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn h_to_m_examples() {
        assert_eq!(h_to_m(&part(&[1]), 3), m(&[1], 3));
        assert_eq!(h_to_m(&part(&[2]), 3), m(&[2], 3).add(&m(&[1, 1], 3)));
        assert_eq!(
            h_to_m(&part(&[1, 1]), 3),
            m(&[2], 3).add(&m(&[1, 1], 3).scale(2))
        );
    }

    #[test]
    fn weak_schur_examples() {
        let id = AffinePerm::identity(2);
        let s1s0 = AffinePerm::from_word(2, &[1, 0]).unwrap();
        assert_eq!(weak_schur(&s1s0, &s1s0).unwrap(), SymFunc::one(0));
        assert_eq!(weak_schur(&s1s0, &id).unwrap(), m(&[1, 1], 2));
        for n in 2..5 {
            let s0 = AffinePerm::from_word(n, &[0]).unwrap();
            assert_eq!(
                weak_schur(&s0, &AffinePerm::identity(n)).unwrap(),
                m(&[1], 1)
            );
        }
    }

    #[test]
    fn weak_schur_of_pieri_elements() {
        for n in 2..5 {
            for i in 1..n {
                let rho = AffinePerm::rho(n, i as i64).unwrap();
                let id = AffinePerm::identity(n);
                let mut expected = SymFunc::zero(i);
                for lambda in bounded_partitions(i, n - 1) {
                    expected.add_term(lambda, 1);
                }
                assert_eq!(weak_schur(&rho, &id).unwrap(), expected, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn cauchy_examples() {
        assert!(cauchy_check(2, 0).unwrap().pass());
        let r = cauchy_check(2, 2).unwrap();
        assert!(r.pass(), "{r:?}");
        assert!(cauchy_check(3, 3).unwrap().pass());
    }

    #[test]
    fn strong_expand_examples() {
        let id = AffinePerm::identity(2);
        let s1s0 = AffinePerm::from_word(2, &[1, 0]).unwrap();
        let s0s1 = AffinePerm::from_word(2, &[0, 1]).unwrap();
        assert_eq!(
            strong_expand(&s1s0, &s1s0).unwrap(),
            BTreeMap::from([(id.clone(), 1)])
        );
        assert_eq!(
            strong_expand(&s1s0, &id).unwrap(),
            BTreeMap::from([(s1s0.clone(), 1)])
        );
        assert!(strong_expand(&s0s1, &id).unwrap().is_empty());
        for (w, u) in [(&s1s0, &id), (&s0s1, &id), (&s1s0, &s1s0)] {
            assert!(check_strong_expansion(w, u).unwrap().holds());
        }
    }

    #[test]
    fn json_form() {
        let f = m(&[2], 2).add(&m(&[1, 1], 2).scale(2));
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"degree":2,"terms":[{"partition":[2],"coeff":1},{"partition":[1,1],"coeff":2}]}"#
        );
    }
}
