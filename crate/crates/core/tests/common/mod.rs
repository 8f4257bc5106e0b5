//! Straight-line reference evaluators. Every soft set is first expanded
//! into dense 0/1 indicator arrays over the union of all labels involved,
//! and each measure is then read off those arrays with plain loops.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use softset::{TypeOneSoftSet, TypeTwoSoftSet};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// One Type-1 set as rows over a shared parameter list.
struct Matrix {
    present: Vec<bool>,
    cells: Vec<Vec<u8>>,
}

fn t1_matrix(s: &TypeOneSoftSet, params: &[String]) -> Matrix {
    let n = s.universe().len();
    let mut present = vec![false; params.len()];
    let mut cells = vec![vec![0u8; n]; params.len()];
    for (i, p) in params.iter().enumerate() {
        if let Some(img) = s.image(p) {
            present[i] = true;
            for x in 0..n {
                if img.contains(x) {
                    cells[i][x] = 1;
                }
            }
        }
    }
    Matrix { present, cells }
}

fn t1_labels(sets: &[&TypeOneSoftSet]) -> Vec<String> {
    let mut all = BTreeSet::new();
    for s in sets {
        for p in s.params() {
            all.insert(p.to_string());
        }
    }
    all.into_iter().collect()
}

/// One Type-2 set as a primary × underlying × element tensor.
struct Tensor {
    n: usize,
    primary: Vec<bool>,
    pair: Vec<Vec<bool>>,
    cells: Vec<Vec<Vec<u8>>>,
}

fn t2_labels(sets: &[&TypeTwoSoftSet]) -> (Vec<String>, Vec<String>) {
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    for s in sets {
        for (p, inner) in s.inners() {
            a.insert(p.clone());
            for q in inner.params() {
                b.insert(q.to_string());
            }
        }
    }
    (a.into_iter().collect(), b.into_iter().collect())
}

fn t2_tensor(s: &TypeTwoSoftSet, primary: &[String], underlying: &[String]) -> Tensor {
    let n = s.universe().len();
    let mut t = Tensor {
        n,
        primary: vec![false; primary.len()],
        pair: vec![vec![false; underlying.len()]; primary.len()],
        cells: vec![vec![vec![0u8; n]; underlying.len()]; primary.len()],
    };
    for (i, a) in primary.iter().enumerate() {
        let Some(inner) = s.inner(a) else { continue };
        t.primary[i] = true;
        for (j, b) in underlying.iter().enumerate() {
            if let Some(img) = inner.image(b) {
                t.pair[i][j] = true;
                for x in 0..n {
                    if img.contains(x) {
                        t.cells[i][j][x] = 1;
                    }
                }
            }
        }
    }
    t
}

fn sym_diff(a: &[bool], b: &[bool]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

fn union_count(a: &[bool], b: &[bool]) -> usize {
    a.iter().zip(b).filter(|(x, y)| **x || **y).count()
}

fn row_diff(a: &[u8], b: &[u8]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (*x as i32 - *y as i32).unsigned_abs() as usize)
        .sum()
}

pub fn euclidean(f: &TypeOneSoftSet, g: &TypeOneSoftSet) -> f64 {
    let params = t1_labels(&[f, g]);
    let (a, b) = (t1_matrix(f, &params), t1_matrix(g, &params));
    let mut squares = 0usize;
    for i in 0..params.len() {
        if a.present[i] && b.present[i] {
            let d = row_diff(&a.cells[i], &b.cells[i]);
            squares += d * d;
        }
    }
    sym_diff(&a.present, &b.present) as f64 + (squares as f64).sqrt()
}

/// The normalized Euclidean distance as `(|A△B|² / |A∪B|, Σχ)`: the
/// result is the sum of the square roots of the two exact parts.
pub fn normalized_euclidean_parts(f: &TypeOneSoftSet, g: &TypeOneSoftSet) -> (BigRational, BigRational) {
    let params = t1_labels(&[f, g]);
    let (a, b) = (t1_matrix(f, &params), t1_matrix(g, &params));
    let sd = sym_diff(&a.present, &b.present);
    let un = union_count(&a.present, &b.present);
    let first = if un == 0 {
        BigRational::zero()
    } else {
        int(sd * sd) / int(un)
    };
    let mut chi = BigRational::zero();
    for i in 0..params.len() {
        if a.present[i] && b.present[i] {
            let d = row_diff(&a.cells[i], &b.cells[i]);
            let u = a.cells[i]
                .iter()
                .zip(&b.cells[i])
                .filter(|(x, y)| **x == 1 || **y == 1)
                .count();
            if u > 0 {
                chi += int(d * d) / int(u);
            }
        }
    }
    (first, chi)
}

pub fn normalized_euclidean(f: &TypeOneSoftSet, g: &TypeOneSoftSet) -> f64 {
    use num_traits::ToPrimitive;
    let (first, chi) = normalized_euclidean_parts(f, g);
    first.to_f64().unwrap().sqrt() + chi.to_f64().unwrap().sqrt()
}

/// Elements lying in at least one image.
fn cover(rows: &[&Vec<u8>], n: usize) -> Vec<bool> {
    (0..n).map(|x| rows.iter().any(|r| r[x] == 1)).collect()
}

fn t1_cover(m: &Matrix, n: usize) -> Vec<bool> {
    let rows: Vec<&Vec<u8>> = (0..m.present.len())
        .filter(|&i| m.present[i])
        .map(|i| &m.cells[i])
        .collect();
    cover(&rows, n)
}

pub fn dp(f: &TypeOneSoftSet, g: &TypeOneSoftSet) -> BigRational {
    let params = t1_labels(&[f, g]);
    let (a, b) = (t1_matrix(f, &params), t1_matrix(g, &params));
    let n = f.universe().len();
    int(sym_diff(&a.present, &b.present) + sym_diff(&t1_cover(&a, n), &t1_cover(&b, n)))
}

pub fn dm(f: &TypeOneSoftSet, g: &TypeOneSoftSet) -> BigRational {
    let params = t1_labels(&[f, g]);
    let (a, b) = (t1_matrix(f, &params), t1_matrix(g, &params));
    let mut total = sym_diff(&a.present, &b.present);
    for i in 0..params.len() {
        total += row_diff(&a.cells[i], &b.cells[i]);
    }
    int(total)
}

fn underlying_present(t: &Tensor) -> Vec<bool> {
    let m = t.pair.first().map_or(0, Vec::len);
    (0..m).map(|j| t.pair.iter().any(|row| row[j])).collect()
}

fn t2_cover(t: &Tensor) -> Vec<bool> {
    let mut rows = Vec::new();
    for i in 0..t.primary.len() {
        for j in 0..t.pair[i].len() {
            if t.pair[i][j] {
                rows.push(&t.cells[i][j]);
            }
        }
    }
    cover(&rows, t.n)
}

pub fn big_dp(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> BigRational {
    let (pa, pb) = t2_labels(&[f, g]);
    let (a, b) = (t2_tensor(f, &pa, &pb), t2_tensor(g, &pa, &pb));
    let total = sym_diff(&a.primary, &b.primary)
        + sym_diff(&underlying_present(&a), &underlying_present(&b))
        + sym_diff(&t2_cover(&a), &t2_cover(&b));
    int(total)
}

pub fn big_dm(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> BigRational {
    let (pa, pb) = t2_labels(&[f, g]);
    let (a, b) = (t2_tensor(f, &pa, &pb), t2_tensor(g, &pa, &pb));
    let mut total = sym_diff(&a.primary, &b.primary) + sym_diff(&underlying_present(&a), &underlying_present(&b));
    for i in 0..pa.len() {
        if !(a.primary[i] && b.primary[i]) {
            continue;
        }
        for j in 0..pb.len() {
            if a.pair[i][j] && b.pair[i][j] {
                total += row_diff(&a.cells[i][j], &b.cells[i][j]);
            }
        }
    }
    int(total)
}

fn normalizer(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> usize {
    let (pa, pb) = t2_labels(&[f, g]);
    let (a, b) = (t2_tensor(f, &pa, &pb), t2_tensor(g, &pa, &pb));
    a.n * union_count(&a.primary, &b.primary) * union_count(&underlying_present(&a), &underlying_present(&b))
}

pub fn norm_dp(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> BigRational {
    match normalizer(f, g) {
        0 => BigRational::zero(),
        d => big_dp(f, g) / int(d),
    }
}

pub fn norm_dm(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> BigRational {
    match normalizer(f, g) {
        0 => BigRational::zero(),
        d => big_dm(f, g) / int(d),
    }
}

pub fn entropy(f: &TypeTwoSoftSet) -> BigRational {
    let (pa, pb) = t2_labels(&[f]);
    let t = t2_tensor(f, &pa, &pb);
    let mut all_empty = true;
    let mut all_full = true;
    for i in 0..pa.len() {
        for j in 0..pb.len() {
            if t.pair[i][j] {
                let ones = t.cells[i][j].iter().filter(|c| **c == 1).count();
                all_empty &= ones == 0;
                all_full &= ones == t.n;
            }
        }
    }
    let mut total = 0usize;
    for x in 0..t.n {
        let star = (0..pa.len())
            .filter(|&i| (0..pb.len()).any(|j| t.cells[i][j][x] == 1))
            .count();
        let double = (0..pb.len())
            .filter(|&j| (0..pa.len()).any(|i| t.cells[i][j][x] == 1))
            .count();
        total += star + double;
    }
    if all_empty || all_full || total == 0 {
        return BigRational::one();
    }
    BigRational::one() - int(2 * t.n) / int(total)
}

fn jaccard(a: &[u8], b: &[u8]) -> BigRational {
    let inter = a.iter().zip(b).filter(|(x, y)| **x == 1 && **y == 1).count();
    let uni = a.iter().zip(b).filter(|(x, y)| **x == 1 || **y == 1).count();
    if uni == 0 {
        BigRational::one()
    } else {
        int(inter) / int(uni)
    }
}

/// `(primary label, score)` for every primary parameter of either set.
pub fn profile(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> Vec<(String, BigRational)> {
    let (pa, pb) = t2_labels(&[f, g]);
    let (a, b) = (t2_tensor(f, &pa, &pb), t2_tensor(g, &pa, &pb));
    let mut out = Vec::new();
    for i in 0..pa.len() {
        let score = if a.primary[i] && b.primary[i] {
            let union = union_count(&a.pair[i], &b.pair[i]);
            if union == 0 {
                BigRational::one()
            } else {
                let mut sum = BigRational::zero();
                for j in 0..pb.len() {
                    if a.pair[i][j] && b.pair[i][j] {
                        sum += jaccard(&a.cells[i][j], &b.cells[i][j]);
                    }
                }
                sum / int(union)
            }
        } else {
            BigRational::zero()
        };
        out.push((pa[i].clone(), score));
    }
    out
}

pub fn sm(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> BigRational {
    let p = profile(f, g);
    if p.is_empty() {
        return BigRational::one();
    }
    let len = p.len();
    p.into_iter().map(|(_, s)| s).sum::<BigRational>() / int(len)
}

pub fn sd(d: BigRational) -> BigRational {
    BigRational::one() / (BigRational::one() + d)
}

/// Union and restricted intersection, rebuilt from the tensors.
fn join_meet(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet, join: bool) -> TypeTwoSoftSet {
    let (pa, pb) = t2_labels(&[f, g]);
    let (a, b) = (t2_tensor(f, &pa, &pb), t2_tensor(g, &pa, &pb));
    let u = f.universe();
    let mut inner = Vec::new();
    for i in 0..pa.len() {
        let keep = if join {
            a.primary[i] || b.primary[i]
        } else {
            a.primary[i] && b.primary[i]
        };
        if !keep {
            continue;
        }
        let mut assignments: Vec<(String, Vec<String>)> = Vec::new();
        for j in 0..pb.len() {
            let (x, y) = (a.pair[i][j], b.pair[i][j]);
            let keep = if join { x || y } else { x && y };
            if !keep {
                continue;
            }
            let items = (0..a.n)
                .filter(|&e| {
                    let (p, q) = (a.cells[i][j][e] == 1, b.cells[i][j][e] == 1);
                    if join {
                        p || q
                    } else {
                        p && q
                    }
                })
                .map(|e| u.label(e).to_string())
                .collect();
            assignments.push((pb[j].clone(), items));
        }
        let set = TypeOneSoftSet::new(u, assignments).unwrap();
        inner.push((pa[i].clone(), set));
    }
    TypeTwoSoftSet::new(u, inner).unwrap()
}

pub fn se(f: &TypeTwoSoftSet, g: &TypeTwoSoftSet) -> BigRational {
    let d = entropy(&join_meet(f, g, true)) - entropy(&join_meet(f, g, false));
    BigRational::one() - d.abs()
}
