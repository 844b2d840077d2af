//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the SNF engine: determinants are Laplace expansions and finite
//! modules are enumerated element by element.

#![allow(dead_code)]

use std::collections::HashSet;

use homalg::exactlin::{Matrix, RingSpec};
use homalg::fpmod::{FpModule, ModuleHom};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn entries_i64(m: &Matrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.to_i64().expect("small entry")).collect())
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => m[0][0].clone(),
        n => {
            let mut total = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * laplace_det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `d_k` = gcd of all k x k minors, for k = 1.. while nonzero.
pub fn determinantal_divisors(a: &Matrix) -> Vec<BigInt> {
    let rows = a.to_rows();
    let mut out = Vec::new();
    for k in 1..=a.rows().min(a.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(a.rows(), k) {
            for cs in subsets(a.cols(), k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect()).collect();
                g = g.gcd(&laplace_det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(g);
    }
    out
}

/// Invariant factors over Z from determinantal divisors: `s_k = d_k / d_{k-1}`.
pub fn factors_by_minors(a: &Matrix) -> Vec<BigInt> {
    let d = determinantal_divisors(a);
    let mut prev = BigInt::from(1);
    d.iter()
        .map(|dk| {
            let s = dk / &prev;
            prev = dk.clone();
            s
        })
        .collect()
}

/// All vectors of `(Z/m)^n`.
pub fn vectors(m: i64, n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn apply_mod(a: &[Vec<i64>], x: &[i64], m: i64) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum::<i64>().rem_euclid(m))
        .collect()
}

/// Subgroup of `(Z/e)^n` generated by `gens`, by closure under addition.
pub fn span_mod(gens: &[Vec<i64>], e: i64, n: usize) -> HashSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([vec![0; n]]);
    let mut frontier = vec![vec![0; n]];
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(e)).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

pub fn columns(m: &Matrix) -> Vec<Vec<i64>> {
    let rows = entries_i64(m);
    (0..m.cols()).map(|j| rows.iter().map(|r| r[j]).collect()).collect()
}

/// A finite module as `(Z/e)^g` modulo the subgroup spanned by its relations,
/// with `e` annihilating the module.
pub struct Finite {
    pub e: i64,
    pub g: usize,
    pub relation_columns: Vec<Vec<i64>>,
    pub relations: HashSet<Vec<i64>>,
}

impl Finite {
    /// `None` for infinite modules over Z, and when `(Z/e)^g` has more than
    /// `LIMIT` vectors. Over Z the module is finite iff the maximal minors do
    /// not all vanish, and then their gcd is its order.
    pub fn of(m: &FpModule) -> Option<Finite> {
        const LIMIT: i64 = 50_000;
        let g = m.generators();
        let e = match m.ring().modulus() {
            Some(q) => q.to_i64()?,
            None if g == 0 => 1,
            None => {
                let d = determinantal_divisors(m.relations());
                if d.len() < g {
                    return None;
                }
                d[g - 1].abs().to_i64()?
            }
        };
        (0..g).try_fold(1i64, |acc, _| acc.checked_mul(e).filter(|v| *v <= LIMIT))?;
        let relation_columns: Vec<Vec<i64>> =
            columns(m.relations()).into_iter().map(|c| c.into_iter().map(|x| x.rem_euclid(e)).collect()).collect();
        let relations = span_mod(&relation_columns, e, g);
        Some(Finite { e, g, relation_columns, relations })
    }

    pub fn order(&self) -> usize {
        (self.e as usize).pow(self.g as u32) / self.relations.len()
    }

    pub fn is_zero(&self, v: &[i64]) -> bool {
        let r: Vec<i64> = v.iter().map(|x| x.rem_euclid(self.e)).collect();
        self.relations.contains(&r)
    }

    /// One representative per element.
    pub fn representatives(&self) -> Vec<Vec<i64>> {
        let mut covered: HashSet<Vec<i64>> = HashSet::new();
        let mut reps = Vec::new();
        for v in vectors(self.e, self.g) {
            if covered.contains(&v) {
                continue;
            }
            for s in &self.relations {
                covered.insert(v.iter().zip(s).map(|(a, b)| (a + b).rem_euclid(self.e)).collect());
            }
            reps.push(v);
        }
        reps
    }

    /// Number of elements killed by `k`.
    pub fn killed_by(&self, k: i64) -> usize {
        self.representatives().iter().filter(|v| self.is_zero(&v.iter().map(|x| x * k).collect::<Vec<_>>())).count()
    }
}

/// Exhaustive search for an isomorphism: every assignment of generator
/// images, kept if relations go to zero and no nonzero element does.
pub fn brute_isomorphic(a: &FpModule, b: &FpModule) -> bool {
    let (fa, fb) = (Finite::of(a).expect("finite"), Finite::of(b).expect("finite"));
    if fa.order() != fb.order() {
        return false;
    }
    let targets = fb.representatives();
    let sources: Vec<Vec<i64>> = fa.representatives().into_iter().filter(|v| !fa.is_zero(v)).collect();
    let image = |imgs: &[&Vec<i64>], coeffs: &[i64]| -> Vec<i64> {
        (0..fb.g).map(|r| imgs.iter().zip(coeffs).map(|(v, c)| v[r] * c).sum::<i64>().rem_euclid(fb.e)).collect()
    };
    let mut choice = vec![0usize; fa.g];
    loop {
        let imgs: Vec<&Vec<i64>> = choice.iter().map(|&i| &targets[i]).collect();
        let defined = fa.relation_columns.iter().all(|r| fb.is_zero(&image(&imgs, r)))
            && (a.ring().modulus().is_some() || (0..fa.g).all(|i| {
                let mut c = vec![0; fa.g];
                c[i] = fa.e;
                fb.is_zero(&image(&imgs, &c))
            }));
        if defined && sources.iter().all(|x| !fb.is_zero(&image(&imgs, x))) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == fa.g {
                return false;
            }
            choice[i] += 1;
            if choice[i] < targets.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

pub fn cyclic(ring: &RingSpec, d: i64) -> FpModule {
    FpModule::cyclic(ring, d)
}

pub fn zmod(m: i64) -> RingSpec {
    RingSpec::zmod(m).expect("modulus")
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `|ker h|` by enumerating the domain, when both ends are small and finite.
pub fn kernel_count(h: &ModuleHom) -> Option<usize> {
    let (fa, fb) = (Finite::of(h.domain())?, Finite::of(h.codomain())?);
    let a = entries_i64(h.map());
    Some(fa.representatives().iter().filter(|v| fb.is_zero(&apply_mod(&a, v, fb.e))).count())
}

/// Exactness of `X -f-> Y -g-> W` at `Y` by counting: the composite
/// vanishes and `|X| = |ker f| * |ker g|`.
pub fn exact_by_counting(f: &ModuleHom, g: &ModuleHom) -> Option<bool> {
    let x = Finite::of(f.domain())?.order();
    let composite = ModuleHom::new(f.domain().clone(), g.codomain().clone(), g.map() * f.map()).ok()?;
    Some(kernel_count(&composite)? == x && kernel_count(f)? * kernel_count(g)? == x)
}

/// Rank over `Z/p` by Gaussian elimination.
pub fn rank_mod(a: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        let row: Vec<i64> = m[rank].iter().map(|x| x * inv % p).collect();
        for (r, other) in m.iter_mut().enumerate() {
            if r != rank && other[c] != 0 {
                let k = other[c];
                for (o, v) in other.iter_mut().zip(&row) {
                    *o = (*o - k * v).rem_euclid(p);
                }
            }
        }
        m[rank] = row;
        rank += 1;
    }
    rank
}
