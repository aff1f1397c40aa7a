//! Validation helpers for bounded intersections of real half-spaces
//! `Re⟨z, a⟩ < b` in ℂⁿ ≅ ℝ²ⁿ.

use alloc::vec::Vec;

use super::Face;
use crate::point::Point;

const EPS: f64 = 1e-10;

/// Solves the square system `rows · u = rhs` (row-major, `d ≤ 8`) by
/// Gaussian elimination with partial pivoting. Returns `None` if singular.
fn solve_square(rows: &[[f64; 8]], rhs: &[f64], d: usize) -> Option<[f64; 8]> {
    let mut m = [[0.0f64; 9]; 8];
    for i in 0..d {
        m[i][..d].copy_from_slice(&rows[i][..d]);
        m[i][8] = rhs[i];
    }
    for col in 0..d {
        let piv = (col..d).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[piv][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, piv);
        for r in 0..d {
            if r != col {
                let f = m[r][col] / m[col][col];
                if f != 0.0 {
                    for c in col..d {
                        m[r][c] -= f * m[col][c];
                    }
                    m[r][8] -= f * m[col][8];
                }
            }
        }
    }
    let mut out = [0.0; 8];
    for i in 0..d {
        out[i] = m[i][8] / m[i][i];
    }
    Some(out)
}

/// Rank of a `k × d` matrix.
fn rank(rows: &[[f64; 8]], d: usize) -> usize {
    let mut m: Vec<[f64; 8]> = rows.to_vec();
    let mut r = 0;
    for col in 0..d {
        let Some(piv) = (r..m.len()).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs())) else {
            break;
        };
        if m[piv][col].abs() < 1e-9 {
            continue;
        }
        m.swap(r, piv);
        for i in 0..m.len() {
            if i != r {
                let f = m[i][col] / m[r][col];
                for c in col..d {
                    m[i][c] -= f * m[r][c];
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Null vector of a `(d−1) × d` matrix of full rank.
fn null_vector(rows: &[[f64; 8]], d: usize) -> Option<[f64; 8]> {
    // Fix one free coordinate at a time and solve the square remainder.
    for free in 0..d {
        let mut sq = [[0.0f64; 8]; 8];
        let mut rhs = [0.0f64; 8];
        for (i, row) in rows.iter().enumerate() {
            let mut c = 0;
            for j in 0..d {
                if j != free {
                    sq[i][c] = row[j];
                    c += 1;
                }
            }
            rhs[i] = -row[free];
        }
        if let Some(sol) = solve_square(&sq[..d - 1], &rhs[..d - 1], d - 1) {
            let mut u = [0.0; 8];
            let mut c = 0;
            for j in 0..d {
                if j == free {
                    u[j] = 1.0;
                } else {
                    u[j] = sol[c];
                    c += 1;
                }
            }
            return Some(u);
        }
    }
    None
}

fn face_row(face: &Face, d: usize) -> [f64; 8] {
    let mut row = [0.0; 8];
    for (j, r) in row.iter_mut().enumerate().take(d) {
        *r = face.normal.real(j);
    }
    row
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return;
            }
        }
        if k == 0 {
            return;
        }
    }
}

/// True when the recession cone `{u : Re⟨u, aⱼ⟩ ≤ 0 ∀j}` is `{0}`.
pub(super) fn is_bounded(faces: &[Face], d: usize) -> bool {
    let rows: Vec<[f64; 8]> = faces.iter().map(|f| face_row(f, d)).collect();
    if rank(&rows, d) < d {
        return false;
    }
    let mut bounded = true;
    combinations(rows.len(), d - 1, |subset| {
        if !bounded {
            return;
        }
        let sub: Vec<[f64; 8]> = subset.iter().map(|&i| rows[i]).collect();
        if rank(&sub, d) < d - 1 {
            return;
        }
        if let Some(u) = null_vector(&sub, d) {
            for sign in [1.0, -1.0] {
                let ok = rows.iter().all(|r| {
                    let s: f64 = (0..d).map(|j| r[j] * u[j] * sign).sum();
                    s <= EPS
                });
                if ok {
                    bounded = false;
                }
            }
        }
    });
    bounded
}

/// All vertices of the polytope (intersections of `d` faces that satisfy
/// every constraint).
pub(super) fn vertices(faces: &[Face], d: usize) -> Vec<Point> {
    let rows: Vec<[f64; 8]> = faces.iter().map(|f| face_row(f, d)).collect();
    let mut out: Vec<Point> = Vec::new();
    combinations(rows.len(), d, |subset| {
        let sub: Vec<[f64; 8]> = subset.iter().map(|&i| rows[i]).collect();
        let rhs: Vec<f64> = subset.iter().map(|&i| faces[i].offset).collect();
        if let Some(u) = solve_square(&sub, &rhs, d) {
            let feasible = rows
                .iter()
                .zip(faces)
                .all(|(r, f)| (0..d).map(|j| r[j] * u[j]).sum::<f64>() <= f.offset + 1e-9);
            if feasible {
                if let Ok(p) = Point::from_reals(&u[..d]) {
                    if !out.iter().any(|q| q.dist(&p) < 1e-9) {
                        out.push(p);
                    }
                }
            }
        }
    });
    out
}

/// Chebyshev centre: maximises `r` subject to `Re⟨p, aⱼ⟩ + r ≤ bⱼ` by
/// enumerating basic solutions of the `(d+1)`-variable LP.
pub(super) fn chebyshev_center(faces: &[Face], d: usize) -> Option<(Point, f64)> {
    let rows: Vec<[f64; 8]> = faces
        .iter()
        .map(|f| {
            let mut r = [0.0; 8];
            r[..d].copy_from_slice(&face_row(f, d)[..d]);
            r[d] = 1.0;
            r
        })
        .collect();
    let mut best: Option<([f64; 8], f64)> = None;
    combinations(rows.len(), d + 1, |subset| {
        let sub: Vec<[f64; 8]> = subset.iter().map(|&i| rows[i]).collect();
        let rhs: Vec<f64> = subset.iter().map(|&i| faces[i].offset).collect();
        if let Some(u) = solve_square(&sub, &rhs, d + 1) {
            let r = u[d];
            let feasible = rows
                .iter()
                .zip(faces)
                .all(|(row, f)| (0..=d).map(|j| row[j] * u[j]).sum::<f64>() <= f.offset + 1e-9);
            if feasible && best.map_or(true, |b| r > b.1 + 1e-12) {
                best = Some((u, r));
            }
        }
    });
    let (u, r) = best?;
    Point::from_reals(&u[..d]).ok().map(|p| (p, r))
}
