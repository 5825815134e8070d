//! Eigenvalues of the small real symmetric matrices that show up as reduced
//! density matrices: closed form for 2×2, cyclic Jacobi rotations otherwise.

#![allow(clippy::needless_range_loop)]

const OFF_DIAGONAL_THRESHOLD: f64 = 1e-13;
const MAX_SWEEPS: usize = 50;

pub fn symmetric_eigenvalues_2x2(a: [[f64; 2]; 2]) -> [f64; 2] {
    let mean = 0.5 * (a[0][0] + a[1][1]);
    let half_diff = 0.5 * (a[0][0] - a[1][1]);
    let radius = half_diff.hypot(a[0][1]);
    [mean + radius, mean - radius]
}

/// Returns the eigenvalues (unsorted) of a real symmetric `N×N` matrix.
pub fn jacobi_eigenvalues<const N: usize>(mut a: [[f64; N]; N]) -> [f64; N] {
    for _ in 0..MAX_SWEEPS {
        let off: f64 =
            (0..N).flat_map(|p| (p + 1..N).map(move |q| (p, q))).map(|(p, q)| a[p][q] * a[p][q]).sum::<f64>().sqrt();
        if off < OFF_DIAGONAL_THRESHOLD {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                if a[p][q].abs() < f64::MIN_POSITIVE {
                    continue;
                }
                // rotation angle that annihilates a[p][q]
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..N {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..N {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::array::from_fn(|i| a[i][i])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted<const N: usize>(mut v: [f64; N]) -> [f64; N] {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn two_by_two() {
        let ev = sorted(symmetric_eigenvalues_2x2([[0.5, 0.25], [0.25, 0.5]]));
        assert!((ev[0] - 0.25).abs() < 1e-15 && (ev[1] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn jacobi_matches_known_spectrum() {
        // Q diag(1,2,3,4) Q^T for a Householder Q built from u = (1,1,1,1)/2
        let d = [1.0, 2.0, 3.0, 4.0];
        let mut a = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let q = |r: usize, c: usize| if r == c { 0.5 } else { -0.5 };
                    a[i][j] += q(i, k) * d[k] * q(j, k);
                }
            }
        }
        let ev = sorted(jacobi_eigenvalues(a));
        for (got, want) in ev.iter().zip(d) {
            assert!((got - want).abs() < 1e-12, "{ev:?}");
        }
    }

    #[test]
    fn jacobi_on_diagonal_is_identity() {
        let ev = jacobi_eigenvalues([[0.3, 0.0], [0.0, 0.7]]);
        assert_eq!(ev, [0.3, 0.7]);
    }
}
