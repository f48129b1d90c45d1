//! A memoizing store for coproducts `Delta(A_w)`, optionally persisted to a
//! directory as one JSON document per element.
//!
//! Disk entries are an optimization only: unreadable or mismatched files are
//! recomputed and replaced, and write failures are ignored.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::affine_perm::AffinePerm;
use crate::error::{Error, Result};
use crate::nilcoxeter::NilCoxElem;
use crate::nilhecke::{coproduct, TensorElem, TensorTermJson};
use crate::weights::SPoly;

/// Environment variable naming the on-disk cache directory.
pub const CACHE_ENV: &str = "AFFINE_NILHECKE_CACHE";

#[derive(Serialize, Deserialize)]
struct CacheDocument {
    n: usize,
    window: Vec<i64>,
    coproduct: Vec<TensorTermJson>,
}

/// `$AFFINE_NILHECKE_CACHE`, else `$XDG_CACHE_HOME/affine-nilhecke`, else
/// `$HOME/.cache/affine-nilhecke`.
pub fn default_cache_dir() -> Option<PathBuf> {
    let nonempty = |key: &str| {
        std::env::var_os(key)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    };
    nonempty(CACHE_ENV)
        .or_else(|| nonempty("XDG_CACHE_HOME").map(|p| p.join("affine-nilhecke")))
        .or_else(|| nonempty("HOME").map(|p| p.join(".cache").join("affine-nilhecke")))
}

#[derive(Default)]
pub struct CoproductCache {
    dir: Option<PathBuf>,
    memory: RwLock<HashMap<AffinePerm, Arc<TensorElem>>>,
}

impl CoproductCache {
    /// A cache held in memory only.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// A cache backed by `dir`, created on first write.
    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        CoproductCache {
            dir: Some(dir.into()),
            memory: RwLock::default(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(dir: &Path, w: &AffinePerm) -> PathBuf {
        let window: Vec<String> = w.window().iter().map(|x| x.to_string()).collect();
        dir.join(format!("n{}_{}.json", w.rank(), window.join("_")))
    }

    fn load(&self, w: &AffinePerm) -> Option<TensorElem> {
        let path = Self::path_for(self.dir.as_ref()?, w);
        let doc: CacheDocument = serde_json::from_slice(&fs::read(path).ok()?).ok()?;
        if doc.n != w.rank() || doc.window != w.window() {
            return None;
        }
        TensorElem::from_json_terms(doc.n, &doc.coproduct).ok()
    }

    fn store(&self, w: &AffinePerm, t: &TensorElem) -> std::io::Result<()> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        fs::create_dir_all(dir)?;
        let doc = CacheDocument {
            n: w.rank(),
            window: w.window().to_vec(),
            coproduct: t.to_json_terms(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        serde_json::to_writer(&mut tmp, &doc)?;
        tmp.flush()?;
        tmp.persist(Self::path_for(dir, w)).map_err(|e| e.error)?;
        Ok(())
    }

    /// `Delta(A_w)`, from memory, disk, or fresh computation.
    pub fn coproduct(&self, w: &AffinePerm) -> Arc<TensorElem> {
        if let Some(t) = self.memory.read().expect("cache lock poisoned").get(w) {
            return Arc::clone(t);
        }
        let t = match self.load(w) {
            Some(t) => t,
            None => {
                let t = coproduct(w);
                let _ = self.store(w, &t);
                t
            }
        };
        let t = Arc::new(t);
        self.memory
            .write()
            .expect("cache lock poisoned")
            .entry(w.clone())
            .or_insert(t)
            .clone()
    }

    /// `p^w_{u1,u2}` read off the cached coproduct.
    pub fn struct_const(&self, w: &AffinePerm, u1: &AffinePerm, u2: &AffinePerm) -> Result<SPoly> {
        for x in [u1, u2] {
            if x.rank() != w.rank() {
                return Err(Error::RankMismatch(w.rank(), x.rank()));
            }
        }
        Ok(self.coproduct(w).coeff(u1, u2))
    }

    /// The cap operator `D_u`, computed from cached coproducts.
    pub fn cap(&self, u: &AffinePerm, x: &NilCoxElem) -> Result<NilCoxElem> {
        if u.rank() != x.rank() {
            return Err(Error::RankMismatch(u.rank(), x.rank()));
        }
        let lu = u.length();
        let mut out = NilCoxElem::zero(x.rank());
        for (w, c) in x.terms() {
            let Some(target) = w.length().checked_sub(lu) else {
                continue;
            };
            for (a, v, p) in self.coproduct(w).terms() {
                if a == u && v.length() == target {
                    out.add_term(v.clone(), c * p.eval_zero());
                }
            }
        }
        Ok(out)
    }

    /// `D_i`, with `D_0` the identity.
    pub fn pieri_cap(&self, i: i64, x: &NilCoxElem) -> Result<NilCoxElem> {
        if i == 0 {
            return Ok(x.clone());
        }
        self.cap(&AffinePerm::rho(x.rank(), i)?, x)
    }
}
