//! Fixed-size 4x4 linear algebra used by the density-matrix layer.

use libm::sqrt;

pub(crate) type Mat4 = [[f64; 4]; 4];

pub(crate) const IDENTITY: Mat4 = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

pub(crate) fn frobenius_norm(a: &Mat4) -> f64 {
    let mut s = 0.0;
    for row in a {
        for &v in row {
            s += v * v;
        }
    }
    sqrt(s)
}

/// Eigenvalues (ascending) and matching orthonormal eigenvector columns of a
/// symmetric matrix, by cyclic Jacobi rotations.
pub(crate) fn sym_eigen(m: &Mat4) -> ([f64; 4], Mat4) {
    let mut a = *m;
    let mut v = IDENTITY;
    let scale = frobenius_norm(&a).max(f64::MIN_POSITIVE);
    for _ in 0..60 {
        let mut off = 0.0;
        for p in 0..4 {
            for q in (p + 1)..4 {
                off += a[p][q] * a[p][q];
            }
        }
        if sqrt(2.0 * off) <= 1e-15 * scale {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let mut vals = [a[0][0], a[1][1], a[2][2], a[3][3]];
    let mut order = [0usize, 1, 2, 3];
    order.sort_unstable_by(|&i, &j| vals[i].partial_cmp(&vals[j]).unwrap());
    vals = [vals[order[0]], vals[order[1]], vals[order[2]], vals[order[3]]];
    let mut vecs = [[0.0; 4]; 4];
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..4 {
            vecs[row][new_col] = v[row][old_col];
        }
    }
    (vals, vecs)
}

/// Eigenvalues of a symmetric matrix, ascending.
pub(crate) fn sym_eigenvalues(m: &Mat4) -> [f64; 4] {
    sym_eigen(m).0
}

fn rotate(a: &mut Mat4, v: &mut Mat4, p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    // tan of the rotation angle; the small root keeps the rotation stable.
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / sqrt(t * t + 1.0);
    let s = t * c;
    let tau = s / (1.0 + c);

    let app = a[p][p];
    let aqq = a[q][q];
    a[p][p] = app - t * apq;
    a[q][q] = aqq + t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;
    for r in 0..4 {
        if r != p && r != q {
            let arp = a[r][p];
            let arq = a[r][q];
            a[r][p] = arp - s * (arq + tau * arp);
            a[p][r] = a[r][p];
            a[r][q] = arq + s * (arp - tau * arq);
            a[q][r] = a[r][q];
        }
    }
    for r in 0..4 {
        let vrp = v[r][p];
        let vrq = v[r][q];
        v[r][p] = vrp - s * (vrq + tau * vrp);
        v[r][q] = vrq + s * (vrp - tau * vrq);
    }
}
