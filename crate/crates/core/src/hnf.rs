//! Full-rank integer lattices `L` with `e·Z^k ⊆ L ⊆ Z^k`.
//!
//! A subgroup of `Z/d_1 ⊕ … ⊕ Z/d_k` is the image of exactly one lattice
//! between `diag(d)·Z^k` and `Z^k`. The row-style Hermite normal form of
//! that lattice (upper triangular, positive pivots, entries above each
//! pivot reduced into `[0, pivot)`) is unique and serves as the canonical
//! form of the subgroup.

/// Row-major `k × k` upper triangular basis in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Hnf {
    k: usize,
    rows: Vec<i64>,
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    // Returns (g, x, y) with g = x*a + y*b, g >= 0.
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

impl Hnf {
    pub(crate) fn diagonal(d: &[u64]) -> Self {
        let k = d.len();
        let mut rows = vec![0i64; k * k];
        for (i, &di) in d.iter().enumerate() {
            rows[i * k + i] = di as i64;
        }
        Hnf { k, rows }
    }

    pub(crate) fn scalar(k: usize, e: u64) -> Self {
        Self::diagonal(&vec![e; k])
    }

    pub(crate) fn dim(&self) -> usize {
        self.k
    }

    pub(crate) fn row(&self, i: usize) -> &[i64] {
        &self.rows[i * self.k..(i + 1) * self.k]
    }

    pub(crate) fn pivot(&self, i: usize) -> i64 {
        self.rows[i * self.k + i]
    }

    pub(crate) fn as_slice(&self) -> &[i64] {
        &self.rows
    }

    /// Reduce column `j > from` entries of `v` against the pivot rows.
    fn reduce_tail(&self, v: &mut [i128], from: usize) {
        for j in from..self.k {
            let p = self.pivot(j) as i128;
            let q = v[j].div_euclid(p);
            if q != 0 {
                for (l, x) in v.iter_mut().enumerate().skip(j) {
                    *x -= q * self.rows[j * self.k + l] as i128;
                }
            }
        }
    }

    /// Add a vector to the lattice.
    pub(crate) fn insert(&mut self, v: &[i64]) {
        let k = self.k;
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for i in 0..k {
            if v[i] == 0 {
                continue;
            }
            let h = self.pivot(i) as i128;
            let (g, x, y) = ext_gcd(h, v[i]);
            let (a, b) = (h / g, v[i] / g);
            let mut new_row = vec![0i128; k];
            for l in i..k {
                let hl = self.rows[i * k + l] as i128;
                new_row[l] = x * hl + y * v[l];
                v[l] = a * v[l] - b * hl;
            }
            debug_assert_eq!(v[i], 0);
            self.reduce_tail(&mut new_row, i + 1);
            for (dst, &x) in self.rows[i * k..(i + 1) * k]
                .iter_mut()
                .zip(&new_row)
                .skip(i)
            {
                *dst = i64::try_from(x).expect("lattice entry overflow");
            }
            self.reduce_tail(&mut v, i + 1);
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        let k = self.k;
        for i in 0..k {
            for j in i + 1..k {
                let p = self.pivot(j);
                let q = self.rows[i * k + j].div_euclid(p);
                if q != 0 {
                    for l in j..k {
                        self.rows[i * k + l] -= q * self.rows[j * k + l];
                    }
                }
            }
        }
    }

    pub(crate) fn contains(&self, v: &[i64]) -> bool {
        let k = self.k;
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for i in 0..k {
            let p = self.pivot(i) as i128;
            if v[i].rem_euclid(p) != 0 {
                return false;
            }
            let q = v[i] / p;
            if q != 0 {
                for (x, &h) in v.iter_mut().zip(&self.rows[i * k..(i + 1) * k]).skip(i) {
                    *x -= q * h as i128;
                }
            }
        }
        true
    }

    /// Index `[Z^k : L]`.
    pub(crate) fn index(&self) -> u64 {
        (0..self.k).map(|i| self.pivot(i) as u64).product()
    }

    pub(crate) fn sum(&self, other: &Hnf) -> Hnf {
        let mut out = self.clone();
        for i in 0..other.k {
            out.insert(other.row(i));
        }
        out
    }

    /// `e·L^*`, where `L ⊇ e·Z^k`. Involutive for a fixed `e`.
    pub(crate) fn dual(&self, e: u64) -> Hnf {
        let k = self.k;
        let e = e as i128;
        // X = e·H^{-1}, upper triangular; its columns span e·L^*.
        let mut x = vec![0i128; k * k];
        for j in 0..k {
            let pj = self.pivot(j) as i128;
            debug_assert_eq!(e % pj, 0);
            x[j * k + j] = e / pj;
            for i in (0..j).rev() {
                let s: i128 = (i + 1..=j)
                    .map(|l| self.rows[i * k + l] as i128 * x[l * k + j])
                    .sum();
                let pi = self.pivot(i) as i128;
                debug_assert_eq!(s % pi, 0);
                x[i * k + j] = -s / pi;
            }
        }
        let mut out = Hnf::scalar(k, e as u64);
        let mut col = vec![0i64; k];
        for j in 0..k {
            for i in 0..k {
                let v = x[i * k + j].rem_euclid(e);
                col[i] = v as i64;
            }
            out.insert(&col);
        }
        out
    }

    pub(crate) fn intersect(&self, other: &Hnf, e: u64) -> Hnf {
        self.dual(e).sum(&other.dual(e)).dual(e)
    }

    /// `{x ∈ Z^k : x·F ∈ target}` for a `k × k'` integer matrix `F`
    /// (row-major, `f.len() == k * k'`).
    ///
    /// `scale` must be a common multiple of the exponents of both sides so
    /// that the preimage contains `scale·Z^k` and `target ⊇ e'·Z^{k'}` with
    /// `e' | scale`.
    pub(crate) fn preimage(k: usize, f: &[i64], target: &Hnf, target_exp: u64, scale: u64) -> Hnf {
        let kt = target.k;
        debug_assert_eq!(f.len(), k * kt);
        debug_assert_eq!(scale % target_exp, 0);
        let lift = (scale / target_exp) as i128;
        let dual = target.dual(target_exp);
        let mut acc = Hnf::scalar(k, scale);
        let mut v = vec![0i64; k];
        for r in 0..kt {
            let y = dual.row(r);
            for (i, slot) in v.iter_mut().enumerate() {
                let s: i128 = (0..kt)
                    .map(|j| f[i * kt + j] as i128 * y[j] as i128)
                    .sum::<i128>()
                    * lift;
                *slot = s.rem_euclid(scale as i128) as i64;
            }
            acc.insert(&v);
        }
        acc.dual(scale)
    }

    /// Coefficients `C` with `C·H = diag(d)`; `H` must contain `diag(d)·Z^k`.
    pub(crate) fn relations(&self, d: &[u64]) -> Vec<i128> {
        let k = self.k;
        let mut c = vec![0i128; k * k];
        for i in 0..k {
            // Solve c·H = d_i e_i by forward substitution over columns.
            for j in 0..k {
                let target = if i == j { d[i] as i128 } else { 0 };
                let s: i128 = (0..j)
                    .map(|l| c[i * k + l] * self.rows[l * k + j] as i128)
                    .sum();
                let p = self.pivot(j) as i128;
                debug_assert_eq!((target - s) % p, 0);
                c[i * k + j] = (target - s) / p;
            }
        }
        c
    }
}

/// Smith normal form data for a square integer matrix `A`: column transform
/// `V` (and its inverse) with `U·A·V = diag(s)` for some unimodular `U`.
pub(crate) struct Smith {
    pub(crate) diag: Vec<i128>,
    pub(crate) v: Vec<i128>,
    pub(crate) v_inv: Vec<i128>,
}

pub(crate) fn smith(mut a: Vec<i128>, k: usize) -> Smith {
    let mut v = identity(k);
    let mut v_inv = identity(k);
    let at = |a: &Vec<i128>, i: usize, j: usize| a[i * k + j];

    let swap_cols =
        |a: &mut Vec<i128>, v: &mut Vec<i128>, v_inv: &mut Vec<i128>, c1: usize, c2: usize| {
            if c1 == c2 {
                return;
            }
            for r in 0..k {
                a.swap(r * k + c1, r * k + c2);
                v.swap(r * k + c1, r * k + c2);
                v_inv.swap(c1 * k + r, c2 * k + r);
            }
        };
    // col_j -= q * col_t
    let col_op = |a: &mut Vec<i128>,
                  v: &mut Vec<i128>,
                  v_inv: &mut Vec<i128>,
                  j: usize,
                  t: usize,
                  q: i128| {
        if q == 0 {
            return;
        }
        for r in 0..k {
            a[r * k + j] -= q * a[r * k + t];
            v[r * k + j] -= q * v[r * k + t];
            v_inv[t * k + r] += q * v_inv[j * k + r];
        }
    };

    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..k {
                    let x = at(&a, i, j);
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < at(&a, bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            for c in 0..k {
                a.swap(t * k + c, pi * k + c);
            }
            swap_cols(&mut a, &mut v, &mut v_inv, t, pj);
            let p = at(&a, t, t);
            for i in t + 1..k {
                let q = at(&a, i, t) / p;
                if q != 0 {
                    for c in 0..k {
                        a[i * k + c] -= q * a[t * k + c];
                    }
                }
            }
            for j in t + 1..k {
                let q = at(&a, t, j) / p;
                col_op(&mut a, &mut v, &mut v_inv, j, t, q);
            }
            let dirty =
                (t + 1..k).any(|i| at(&a, i, t) != 0) || (t + 1..k).any(|j| at(&a, t, j) != 0);
            if dirty {
                continue;
            }
            let bad = (t + 1..k).find(|&i| (t + 1..k).any(|j| at(&a, i, j) % p != 0));
            match bad {
                Some(i) => {
                    for c in 0..k {
                        a[t * k + c] += a[i * k + c];
                    }
                }
                None => break,
            }
        }
        if at(&a, t, t) < 0 {
            for r in 0..k {
                a[r * k + t] = -a[r * k + t];
                v[r * k + t] = -v[r * k + t];
                v_inv[t * k + r] = -v_inv[t * k + r];
            }
        }
    }
    Smith {
        diag: (0..k).map(|i| a[i * k + i]).collect(),
        v,
        v_inv,
    }
}

fn identity(k: usize) -> Vec<i128> {
    let mut m = vec![0i128; k * k];
    for i in 0..k {
        m[i * k + i] = 1;
    }
    m
}
