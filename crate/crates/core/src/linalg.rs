//! Exact dense linear algebra over rationals and integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rational], k: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * k).collect()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).1.len()
}

pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut acc = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        let pivot = a[c][c].clone();
        acc *= &pivot;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            let (top, bottom) = a.split_at_mut(i);
            for (x, p) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * p;
            }
        }
    }
    acc
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Coefficients expressing `v` in the (independent) row basis, if `v` lies in its span.
pub fn solve_in_basis(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    if k == 0 {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    // Augmented system: columns are basis vectors, right-hand side is v.
    let n = v.len();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(&rows);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|i| red[i][k].clone()).collect())
}

/// Basis of the integer kernel `{c in Z^cols : M c = 0}` of an integer matrix.
///
/// Column-reduces `M` by unimodular operations; the trailing columns of the
/// accumulated transform span the kernel over Z.
pub fn integer_kernel(m: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> =
        (0..cols).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    // u is stored row-major; column j of the transform is u[*][j].
    let mut t = 0;
    for i in 0..a.len() {
        if t == cols {
            break;
        }
        for j in t + 1..cols {
            if a[i][j].is_zero() {
                continue;
            }
            let x = a[i][t].clone();
            let y = a[i][j].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, r) = (eg.gcd, eg.x, eg.y);
            let (yg, xg) = (&y / &g, &x / &g);
            column_combine(&mut a, t, j, &s, &r, &yg, &xg);
            column_combine(&mut u, t, j, &s, &r, &yg, &xg);
        }
        if !a[i][t].is_zero() {
            t += 1;
        }
    }
    (t..cols).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect()
}

// (col_a, col_b) <- (s*col_a + r*col_b, -yg*col_a + xg*col_b)
fn column_combine(m: &mut [Vec<BigInt>], a: usize, b: usize, s: &BigInt, r: &BigInt, yg: &BigInt, xg: &BigInt) {
    for row in m.iter_mut() {
        let ca = row[a].clone();
        let cb = row[b].clone();
        row[a] = s * &ca + r * &cb;
        row[b] = xg * &cb - yg * &ca;
    }
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: &mut [BigInt]) -> BigInt {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    g.abs()
}
