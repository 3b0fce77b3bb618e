//! Integer sublattices of Z^e presented by generator matrices.
//!
//! For a full-rank family of columns the gcd of all maximal minors equals the
//! product of the Smith invariant factors, i.e. the index of the generated
//! sublattice in Z^e. All lattices here contain n*Z^e, so membership and
//! minimal-multiple questions reduce to comparing two such gcds.

use num::Integer;

/// Determinant of a square i128 matrix by cofactor expansion (dimensions stay
/// tiny: e <= 4 in practice).
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut acc = 0i128;
            for (j, head) in m[0].iter().enumerate() {
                if *head == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc += sign * head * det(&minor);
            }
            acc
        }
    }
}

/// gcd of all e x e minors of the matrix (n*I_e | cols...), i.e. the index of
/// n*Z^e + sum(cols * Z) in Z^e.
pub fn lattice_index(n: i64, dim: usize, cols: &[Vec<i64>]) -> i128 {
    let e = dim;
    let mut matrix: Vec<Vec<i128>> = Vec::with_capacity(e + cols.len());
    for i in 0..e {
        let mut v = vec![0i128; e];
        v[i] = n as i128;
        matrix.push(v);
    }
    for c in cols {
        assert_eq!(c.len(), e);
        matrix.push(c.iter().map(|&x| x as i128).collect());
    }
    // matrix holds the columns as rows; minors are over row subsets
    let total = matrix.len();
    let mut subset: Vec<usize> = (0..e).collect();
    let mut acc: i128 = 0;
    loop {
        let square: Vec<Vec<i128>> = subset.iter().map(|&i| matrix[i].clone()).collect();
        acc = acc.gcd(&det(&square));
        // next e-combination of 0..total
        let mut i = e;
        loop {
            if i == 0 {
                return acc;
            }
            i -= 1;
            if subset[i] < total - (e - i) {
                subset[i] += 1;
                for j in i + 1..e {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Is v in n*Z^e + sum(prefix * Z)? Returns the membership flag together with
/// the minimal positive multiple of v that does land in the lattice.
pub fn membership(n: i64, dim: usize, prefix: &[Vec<i64>], v: &[i64]) -> (bool, i128) {
    let base = lattice_index(n, dim, prefix);
    let mut extended: Vec<Vec<i64>> = prefix.to_vec();
    extended.push(v.to_vec());
    let refined = lattice_index(n, dim, &extended);
    debug_assert!(refined != 0 && base % refined == 0);
    (base == refined, base / refined)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&[vec![3]]), 3);
        assert_eq!(det(&[vec![1, 2], vec![3, 4]]), -2);
        assert_eq!(det(&[vec![2, 0, 1], vec![0, 3, 0], vec![1, 0, 2]]), 9);
    }

    #[test]
    fn index_of_unrefined_lattice() {
        // n*Z^e alone has index n^e
        assert_eq!(lattice_index(4, 2, &[]), 16);
        assert_eq!(lattice_index(2, 3, &[]), 8);
    }

    #[test]
    fn index_drops_with_new_generators() {
        // 4Z^2 + (2,2)Z has index 8; adding (3,3) brings it to 4
        assert_eq!(lattice_index(4, 2, &[vec![2, 2]]), 8);
        assert_eq!(lattice_index(4, 2, &[vec![2, 2], vec![3, 3]]), 4);
    }

    #[test]
    fn membership_minimal_multiple() {
        // (1,0) is not in 2Z^2 + (1,1)Z but its double is
        let (member, mult) = membership(2, 2, &[vec![1, 1]], &[1, 0]);
        assert!(!member);
        assert_eq!(mult, 2);
        // (5,5) needs multiple 2 relative to 4Z^2 + (2,2)Z
        let (member, mult) = membership(4, 2, &[vec![2, 2]], &[5, 5]);
        assert!(!member);
        assert_eq!(mult, 2);
        // zero vector always belongs
        let (member, mult) = membership(4, 2, &[vec![2, 2]], &[0, 0]);
        assert!(member);
        assert_eq!(mult, 1);
    }

    #[test]
    fn membership_positive_case() {
        // (6,6) = (2,2) + (4,4) lies in 4Z^2 + (2,2)Z
        let (member, mult) = membership(4, 2, &[vec![2, 2]], &[6, 6]);
        assert!(member);
        assert_eq!(mult, 1);
    }
}
