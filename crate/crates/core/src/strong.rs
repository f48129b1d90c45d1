//! Marked strong covers, strong strips and tableaux, the strip Pieri
//! operators `D'_i`, strong Schur and k-Schur functions.

use std::collections::{BTreeMap, HashMap};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::affine_perm::AffinePerm;
use crate::error::{Error, Result};
use crate::nilcoxeter::NilCoxElem;
use crate::symfunc::{bounded_partitions, Partition, SymFunc};

/// A marked strong cover `inside ->^a outside`: `inside = outside * t_{ij}`
/// with `i <= l < j` for the level `l` it was generated at, and
/// `a = inside(j) = outside(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedCover {
    pub inside: AffinePerm,
    pub outside: AffinePerm,
    pub i: i64,
    pub j: i64,
    pub mark: i64,
}

impl Serialize for MarkedCover {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MarkedCover", 5)?;
        s.serialize_field("inside", &self.inside)?;
        s.serialize_field("outside", &self.outside)?;
        s.serialize_field("i", &self.i)?;
        s.serialize_field("j", &self.j)?;
        s.serialize_field("a", &self.mark)?;
        s.end()
    }
}

/// Marked lower covers of `u` with the usual condition `i <= 0 < j`.
pub fn marked_lower_covers(u: &AffinePerm) -> Vec<MarkedCover> {
    marked_lower_covers_at(u, 0)
}

/// Marked lower covers of `u` with `i <= l < j`, sorted by decreasing mark.
///
/// For a cover reflection `t_{ab}` (`1 <= a <= n`) the admissible shifts
/// `(i, j) = (a - kn, b - kn)` are `ceil((a - l)/n) <= k <= floor((b - l - 1)/n)`.
pub fn marked_lower_covers_at(u: &AffinePerm, l: i64) -> Vec<MarkedCover> {
    let ni = u.rank() as i64;
    let mut out = Vec::new();
    for (v, t) in u.lower_covers() {
        let (a, b) = (t.a(), t.b());
        let lo = -(l - a).div_euclid(ni);
        let hi = (b - l - 1).div_euclid(ni);
        for k in lo..=hi {
            let (i, j) = (a - k * ni, b - k * ni);
            out.push(MarkedCover {
                inside: u.clone(),
                outside: v.clone(),
                i,
                j,
                mark: u.apply(j),
            });
        }
    }
    out.sort_by(|x, y| {
        y.mark
            .cmp(&x.mark)
            .then_with(|| x.outside.cmp(&y.outside))
            .then_with(|| x.i.cmp(&y.i))
    });
    out
}

/// A chain of marked covers with strictly decreasing marks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongStrip {
    inside: AffinePerm,
    covers: Vec<MarkedCover>,
}

impl StrongStrip {
    pub fn empty(inside: &AffinePerm) -> Self {
        StrongStrip {
            inside: inside.clone(),
            covers: Vec::new(),
        }
    }

    pub fn inside(&self) -> &AffinePerm {
        &self.inside
    }

    pub fn outside(&self) -> &AffinePerm {
        self.covers.last().map_or(&self.inside, |c| &c.outside)
    }

    pub fn covers(&self) -> &[MarkedCover] {
        &self.covers
    }

    pub fn size(&self) -> usize {
        self.covers.len()
    }
}

#[derive(Serialize)]
struct StripCoverJson {
    i: i64,
    j: i64,
    a: i64,
}

impl Serialize for StrongStrip {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let covers: Vec<StripCoverJson> = self
            .covers
            .iter()
            .map(|c| StripCoverJson {
                i: c.i,
                j: c.j,
                a: c.mark,
            })
            .collect();
        let mut s = serializer.serialize_struct("StrongStrip", 3)?;
        s.serialize_field("inside", &self.inside)?;
        s.serialize_field("outside", self.outside())?;
        s.serialize_field("covers", &covers)?;
        s.end()
    }
}

/// All strong strips of size `m` with inside `w`.
pub fn strong_strips(w: &AffinePerm, m: usize) -> Vec<StrongStrip> {
    strong_strips_at(w, m, 0)
}

/// Strong strips built from covers marked at level `l`.
pub fn strong_strips_at(w: &AffinePerm, m: usize, l: i64) -> Vec<StrongStrip> {
    fn go(strip: &mut StrongStrip, m: usize, l: i64, out: &mut Vec<StrongStrip>) {
        if strip.size() == m {
            out.push(strip.clone());
            return;
        }
        let bound = strip.covers.last().map(|c| c.mark);
        let x = strip.outside().clone();
        if x.length() < m - strip.size() {
            return;
        }
        for c in marked_lower_covers_at(&x, l) {
            if bound.is_some_and(|b| c.mark >= b) {
                continue;
            }
            strip.covers.push(c);
            go(strip, m, l, out);
            strip.covers.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut StrongStrip::empty(w), m, l, &mut out);
    out
}

/// `D'_i(A_w) = sum over strips S of size i with inside w of A_{outside(S)}`.
pub fn pieri_prime(i: usize, x: &NilCoxElem) -> NilCoxElem {
    pieri_prime_at(i, x, 0)
}

/// The strip operator with markings at level `l`.
pub fn pieri_prime_at(i: usize, x: &NilCoxElem, l: i64) -> NilCoxElem {
    let mut out = NilCoxElem::zero(x.rank());
    for (w, c) in x.terms() {
        for strip in strong_strips_at(w, i, l) {
            out.add_term(strip.outside().clone(), c);
        }
    }
    out
}

/// The level-`l` strip operator obtained as `psi^{-l} D'_i psi^l`.
pub fn shifted_pieri_prime(i: usize, l: i64, x: &NilCoxElem) -> NilCoxElem {
    let shifted = x.map_basis(|w| w.psi(l));
    pieri_prime(i, &shifted).map_basis(|w| w.psi(-l))
}

/// `omega D'_i omega`: the strip sum over strips with inside `omega(w)`,
/// mapped back through `omega`.
pub fn dual_pieri_prime(i: usize, x: &NilCoxElem) -> NilCoxElem {
    pieri_prime(i, &x.map_basis(AffinePerm::omega)).map_basis(AffinePerm::omega)
}

/// A sequence of strips with matching endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongTableau {
    pub strips: Vec<StrongStrip>,
}

impl StrongTableau {
    pub fn weight(&self) -> Vec<usize> {
        self.strips.iter().map(StrongStrip::size).collect()
    }
}

/// All strong tableaux from `w` down to `u` with weight `alpha`.
pub fn strong_tableaux(w: &AffinePerm, u: &AffinePerm, alpha: &[usize]) -> Vec<StrongTableau> {
    fn go(
        x: &AffinePerm,
        u: &AffinePerm,
        alpha: &[usize],
        prefix: &mut Vec<StrongStrip>,
        out: &mut Vec<StrongTableau>,
    ) {
        let Some((&m, rest)) = alpha.split_first() else {
            if x == u {
                out.push(StrongTableau {
                    strips: prefix.clone(),
                });
            }
            return;
        };
        for s in strong_strips(x, m) {
            let next = s.outside().clone();
            prefix.push(s);
            go(&next, u, rest, prefix, out);
            prefix.pop();
        }
    }
    let alpha: Vec<usize> = alpha.iter().copied().filter(|&p| p > 0).collect();
    if alpha.iter().sum::<usize>() + u.length() != w.length() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(w, u, &alpha, &mut Vec::new(), &mut out);
    out
}

/// Memoized strip and tableau counting toward a fixed bottom element.
struct TableauCounter {
    bottom: AffinePerm,
    strips: HashMap<(AffinePerm, usize), BTreeMap<AffinePerm, u64>>,
    tableaux: HashMap<(AffinePerm, Vec<usize>), u64>,
}

impl TableauCounter {
    fn new(bottom: &AffinePerm) -> Self {
        TableauCounter {
            bottom: bottom.clone(),
            strips: HashMap::new(),
            tableaux: HashMap::new(),
        }
    }

    fn strip_targets(&mut self, x: &AffinePerm, m: usize) -> &BTreeMap<AffinePerm, u64> {
        self.strips.entry((x.clone(), m)).or_insert_with(|| {
            let mut targets = BTreeMap::new();
            for s in strong_strips(x, m) {
                *targets.entry(s.outside().clone()).or_insert(0) += 1;
            }
            targets
        })
    }

    fn count(&mut self, x: &AffinePerm, alpha: &[usize]) -> u64 {
        let Some((&m, rest)) = alpha.split_first() else {
            return u64::from(*x == self.bottom);
        };
        let key = (x.clone(), alpha.to_vec());
        if let Some(&c) = self.tableaux.get(&key) {
            return c;
        }
        let targets: Vec<(AffinePerm, u64)> = self
            .strip_targets(x, m)
            .iter()
            .map(|(y, &c)| (y.clone(), c))
            .collect();
        let mut total = 0u64;
        for (y, c) in targets {
            let sub = self.count(&y, rest);
            total = total
                .checked_add(c.checked_mul(sub).expect("tableau count overflow"))
                .expect("tableau count overflow");
        }
        self.tableaux.insert(key, total);
        total
    }
}

/// Number of strong tableaux from `w` to `u` of weight `alpha`. Zero parts
/// are ignored; the count is zero unless `sum(alpha) = l(w) - l(u)`.
pub fn strong_tableau_count(w: &AffinePerm, u: &AffinePerm, alpha: &[usize]) -> u64 {
    let alpha: Vec<usize> = alpha.iter().copied().filter(|&p| p > 0).collect();
    if alpha.iter().sum::<usize>() + u.length() != w.length() {
        return 0;
    }
    TableauCounter::new(u).count(w, &alpha)
}

/// `Strong_{w/u}` in the monomial basis, degree `l(w) - l(u)`.
///
/// Every rearrangement of each partition is counted and compared; a mismatch
/// is reported as [`Error::Asymmetric`].
pub fn strong_schur(w: &AffinePerm, u: &AffinePerm) -> Result<SymFunc> {
    if w.rank() != u.rank() {
        return Err(Error::RankMismatch(w.rank(), u.rank()));
    }
    let (lw, lu) = (w.length(), u.length());
    if lw < lu {
        return Ok(SymFunc::zero(0));
    }
    let d = lw - lu;
    let mut counter = TableauCounter::new(u);
    let mut f = SymFunc::zero(d);
    for lambda in bounded_partitions(d, d) {
        let mut first: Option<u64> = None;
        for alpha in lambda.compositions() {
            let c = counter.count(w, &alpha);
            match first {
                None => first = Some(c),
                Some(c0) if c0 != c => {
                    return Err(Error::Asymmetric(format!(
                        "{w}/{u}: weight {alpha:?} has {c} tableaux but {lambda} has {c0}"
                    )))
                }
                Some(_) => {}
            }
        }
        let c = first.unwrap_or(0);
        f.add_term(lambda, i64::try_from(c).expect("tableau count overflow"));
    }
    Ok(f)
}

fn check_bounded(n: usize, lambda: &Partition) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    match lambda.parts().iter().find(|&&p| p >= n) {
        Some(&part) => Err(Error::PartTooLarge { part, k: n - 1 }),
        None => Ok(()),
    }
}

/// The 0-Grassmannian element attached to an `(n-1)`-bounded partition.
///
/// Cells `(r, c)` are read from the last row up, right to left within a row;
/// cell `(r, c)` contributes the letter `s_{(c - r) mod n}`.
pub fn grassmannian_from_partition(n: usize, lambda: &Partition) -> Result<AffinePerm> {
    check_bounded(n, lambda)?;
    let ni = n as i64;
    let mut word = Vec::with_capacity(lambda.size());
    for (r, &len) in lambda.parts().iter().enumerate().rev() {
        for c in (0..len).rev() {
            word.push((c as i64 - r as i64).rem_euclid(ni) as usize);
        }
    }
    let w = AffinePerm::from_word(n, &word)?;
    debug_assert_eq!(w.length(), lambda.size());
    debug_assert!(w.is_grassmannian());
    Ok(w)
}

/// Inverse of [`grassmannian_from_partition`].
pub fn partition_from_grassmannian(w: &AffinePerm) -> Result<Partition> {
    if !w.is_grassmannian() {
        return Err(Error::NotGrassmannian(w.to_string()));
    }
    let n = w.rank();
    for lambda in bounded_partitions(w.length(), n - 1) {
        if grassmannian_from_partition(n, &lambda)? == *w {
            return Ok(lambda);
        }
    }
    unreachable!("every 0-Grassmannian element has a bounded partition")
}

/// The k-Schur function `s^{(n-1)}_lambda = Strong_{c^{-1}(lambda)}`.
pub fn kschur(n: usize, lambda: &Partition) -> Result<SymFunc> {
    let w = grassmannian_from_partition(n, lambda)?;
    strong_schur(&w, &AffinePerm::identity(n))
}
