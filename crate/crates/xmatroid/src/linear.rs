//! Generic row matroids realised by randomized rank over a prime field:
//! hyperconnectivity, symmetric completion, birigidity and the
//! d-dimensional rigidity matroid.
//!
//! Coordinates are drawn uniformly from the field by a seeded generator, so
//! matrices are reproducible byte-for-byte given (kind, parameters, seed,
//! prime). Rank queries run several independent trials with fresh
//! assignments; disagreement between trials is an error, never a vote.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::ElementSet;
use crate::error::{Error, Result};
use crate::graphs::HostGraph;
use crate::matroid::{Matroid, RankOracle};

/// Default field modulus: the Mersenne prime 2^61 - 1.
pub const DEFAULT_PRIME: u64 = (1u64 << 61) - 1;

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RowMatrixKind {
    /// rows `(.. p(v_j) .. -p(v_i) ..)` on E(K_n), d columns per vertex
    Hyperconnectivity { n: usize, d: usize },
    /// rows `(.. p(v_j) .. p(v_i) ..)` on E(K_n)
    SymmetricCompletion { n: usize, d: usize },
    /// rows `(.. q(w_j) .. p(u_i) ..)` on E(K_{m,n}); U blocks have width l,
    /// W blocks width k
    Birigidity { m: usize, n: usize, k: usize, l: usize },
    /// rows `(.. p(v_i)-p(v_j) .. p(v_j)-p(v_i) ..)` on E(K_n)
    Rigidity { n: usize, d: usize },
}

impl RowMatrixKind {
    pub fn host(&self) -> Result<HostGraph> {
        match *self {
            RowMatrixKind::Hyperconnectivity { n, .. }
            | RowMatrixKind::SymmetricCompletion { n, .. }
            | RowMatrixKind::Rigidity { n, .. } => HostGraph::complete(n),
            RowMatrixKind::Birigidity { m, n, .. } => HostGraph::complete_bipartite(m, n),
        }
    }

    pub fn columns(&self) -> usize {
        match *self {
            RowMatrixKind::Hyperconnectivity { n, d }
            | RowMatrixKind::SymmetricCompletion { n, d }
            | RowMatrixKind::Rigidity { n, d } => d * n,
            RowMatrixKind::Birigidity { m, n, k, l } => l * m + k * n,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            RowMatrixKind::Hyperconnectivity { n, d }
            | RowMatrixKind::SymmetricCompletion { n, d }
            | RowMatrixKind::Rigidity { n, d } => n >= 2 && d >= 1,
            RowMatrixKind::Birigidity { m, n, k, l } => m >= 1 && n >= 1 && k >= 1 && l >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParamRange(format!("bad matrix parameters {self:?}")))
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            RowMatrixKind::Hyperconnectivity { n, d } => format!("hyper:n={n},d={d}"),
            RowMatrixKind::SymmetricCompletion { n, d } => format!("symc:n={n},d={d}"),
            RowMatrixKind::Birigidity { m, n, k, l } => format!("biri:m={m},n={n},k={k},l={l}"),
            RowMatrixKind::Rigidity { n, d } => format!("rigid:n={n},d={d}"),
        }
    }
}

/// A structured-matrix specification plus the seeded generic assignment.
#[derive(Copy, Clone, Debug, Serialize, Deserialize)]
pub struct RowMatrixSpec {
    pub kind: RowMatrixKind,
    pub seed: u64,
    pub prime: u64,
}

impl RowMatrixSpec {
    pub fn new(kind: RowMatrixKind, seed: u64, prime: u64) -> Result<Self> {
        kind.validate()?;
        if prime < (1 << 31) {
            return Err(Error::ParamRange(format!(
                "field prime must be at least 2^31, got {prime}"
            )));
        }
        if !is_prime_u64(prime) {
            return Err(Error::ParamRange(format!("{prime} is not prime")));
        }
        Ok(RowMatrixSpec { kind, seed, prime })
    }

    pub fn with_default_field(kind: RowMatrixKind, seed: u64) -> Result<Self> {
        RowMatrixSpec::new(kind, seed, DEFAULT_PRIME)
    }

    /// Per-vertex coordinate vectors for one trial, in vertex order.
    fn assignment(&self, trial: u32) -> Assignment {
        let mut rng = ChaCha8Rng::seed_from_u64(mix(self.seed, trial as u64));
        let draw = |rng: &mut ChaCha8Rng| rng.gen_range(0..self.prime);
        match self.kind {
            RowMatrixKind::Hyperconnectivity { n, d }
            | RowMatrixKind::SymmetricCompletion { n, d }
            | RowMatrixKind::Rigidity { n, d } => {
                let p = (0..n)
                    .map(|_| (0..d).map(|_| draw(&mut rng)).collect())
                    .collect();
                Assignment { p, q: Vec::new() }
            }
            RowMatrixKind::Birigidity { m, n, k, l } => {
                let p = (0..m)
                    .map(|_| (0..k).map(|_| draw(&mut rng)).collect())
                    .collect();
                let q = (0..n)
                    .map(|_| (0..l).map(|_| draw(&mut rng)).collect())
                    .collect();
                Assignment { p, q }
            }
        }
    }

    /// The full matrix for one trial: one row per host edge, canonical edge
    /// order, exact layout and sign conventions.
    pub fn build_matrix(&self, trial: u32) -> Result<Vec<Vec<u64>>> {
        let host = self.kind.host()?;
        let a = self.assignment(trial);
        let cols = self.kind.columns();
        let p = self.prime;
        let mut rows = Vec::with_capacity(host.n_edges());
        for id in 0..host.n_edges() {
            rows.push(self.row(&host, &a, id, cols, p));
        }
        Ok(rows)
    }

    fn row(&self, host: &HostGraph, a: &Assignment, edge: usize, cols: usize, p: u64) -> Vec<u64> {
        let mut row = vec![0u64; cols];
        match self.kind {
            RowMatrixKind::Hyperconnectivity { d, .. } => {
                let (i, j) = host.edge(edge);
                for t in 0..d {
                    row[i * d + t] = a.p[j][t];
                    row[j * d + t] = neg(a.p[i][t], p);
                }
            }
            RowMatrixKind::SymmetricCompletion { d, .. } => {
                let (i, j) = host.edge(edge);
                for t in 0..d {
                    row[i * d + t] = a.p[j][t];
                    row[j * d + t] = a.p[i][t];
                }
            }
            RowMatrixKind::Rigidity { d, .. } => {
                let (i, j) = host.edge(edge);
                for t in 0..d {
                    row[i * d + t] = sub(a.p[i][t], a.p[j][t], p);
                    row[j * d + t] = sub(a.p[j][t], a.p[i][t], p);
                }
            }
            RowMatrixKind::Birigidity { m, k, l, .. } => {
                let (u, w) = host.edge(edge);
                let wj = w - m;
                for t in 0..l {
                    row[u * l + t] = a.q[wj][t];
                }
                for t in 0..k {
                    row[l * m + wj * k + t] = a.p[u][t];
                }
            }
        }
        row
    }

    /// Rank of the rows indexed by `f`, identical across `trials`
    /// independent assignments. Disagreement raises an error.
    pub fn generic_rank(&self, f: ElementSet, trials: u32) -> Result<usize> {
        if trials < 1 {
            return Err(Error::ParamRange("trials must be at least 1".into()));
        }
        let host = self.kind.host()?;
        let cols = self.kind.columns();
        let p = self.prime;
        let mut values = Vec::with_capacity(trials as usize);
        for t in 0..trials {
            let a = self.assignment(t);
            let rows: Vec<Vec<u64>> = f
                .iter()
                .map(|id| self.row(&host, &a, id, cols, p))
                .collect();
            values.push(gauss_rank(rows, p));
        }
        if values.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::TrialDisagreement { values });
        }
        Ok(values[0])
    }

    /// Minimal row dependence: rank |C|-1, and still |C|-1 after removing
    /// any single row.
    pub fn linear_circuit_check(&self, c: ElementSet, trials: u32) -> Result<bool> {
        if c.len() > 30 {
            return Err(Error::BudgetExceeded {
                op: "linearCircuitCheck",
                detail: "candidate circuit larger than 30 rows".into(),
            });
        }
        if c.is_empty() {
            return Ok(false);
        }
        if self.generic_rank(c, trials)? != c.len() - 1 {
            return Ok(false);
        }
        for e in c.iter() {
            if self.generic_rank(c.without(e), trials)? != c.len() - 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The row matroid as a rank oracle (with caching). Rank queries use
    /// `trials` assignments each; a disagreement aborts the process, which
    /// given the field size indicates a bug rather than bad luck.
    pub fn matroid(&self, trials: u32) -> Result<Matroid> {
        let host = self.kind.host()?;
        let oracle = GenericRowMatroid {
            spec: *self,
            trials,
            cache: Mutex::new(HashMap::new()),
        };
        Ok(Matroid::from_oracle(host.ground().clone(), Arc::new(oracle)))
    }
}

struct Assignment {
    p: Vec<Vec<u64>>,
    q: Vec<Vec<u64>>,
}

struct GenericRowMatroid {
    spec: RowMatrixSpec,
    trials: u32,
    cache: Mutex<HashMap<u64, usize>>,
}

impl RankOracle for GenericRowMatroid {
    fn rank(&self, set: ElementSet) -> usize {
        if let Some(&r) = self.cache.lock().unwrap().get(&set.0) {
            return r;
        }
        let r = self
            .spec
            .generic_rank(set, self.trials)
            .expect("generic rank trials agree");
        self.cache.lock().unwrap().insert(set.0, r);
        r
    }
}

fn mix(seed: u64, trial: u64) -> u64 {
    // splitmix64 step over (seed, trial)
    let mut z = seed ^ trial.wrapping_mul(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Row-reduction rank over GF(p).
pub fn gauss_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        let Some(sel) = (pivot_row..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, sel);
        let inv = inv_mod(rows[pivot_row][col], p);
        for c in col..ncols {
            rows[pivot_row][c] = mul(rows[pivot_row][c], inv, p);
        }
        for r in 0..nrows {
            if r != pivot_row && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in col..ncols {
                    let t = mul(factor, rows[pivot_row][c], p);
                    rows[r][c] = sub(rows[r][c], t, p);
                }
            }
        }
        pivot_row += 1;
        rank += 1;
    }
    rank
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
