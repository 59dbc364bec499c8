//! Cohomology oracles from small projective resolutions, built
//! independently of the bar-complex machinery.

#![allow(clippy::needless_range_loop)]

/// Rank of an integer matrix modulo a prime.
fn rank_mod(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let pow = |mut b: i64, mut e: i64| {
        let mut r = 1;
        b = b.rem_euclid(p);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, r);
        let inv = pow(m[rank][c], p - 2);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over Q of an integer matrix, by fraction-free elimination.
fn rank_q(mut m: Vec<Vec<i128>>) -> usize {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, r);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[rank][j] * b;
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn transpose<T: Copy>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|r| r[j]).collect())
        .collect()
}

/// `Ext^n_{F_p[Z/n]}(k, k)` for `n = 0..=max` from the periodic resolution
/// `... -> A -(g-1)-> A -(N)-> A -(g-1)-> A -> k`, with `N = 1 + g + ... + g^{n-1}`.
pub fn cyclic_oracle(order: usize, p: i64, max: usize) -> Vec<usize> {
    // elements of A as coefficient vectors over g^0..g^{order-1}
    let mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut out = vec![0; order];
        for i in 0..order {
            for j in 0..order {
                out[(i + j) % order] = (out[(i + j) % order] + a[i] * b[j]).rem_euclid(p);
            }
        }
        out
    };
    let basis = |i: usize| -> Vec<i64> { (0..order).map(|k| i64::from(k == i)).collect() };
    let mut g_minus_1 = basis(1 % order);
    g_minus_1[0] = (g_minus_1[0] - 1).rem_euclid(p);
    let norm: Vec<i64> = vec![1; order];
    // d_m : P_m -> P_{m-1} is right multiplication by x_m
    let x = |m: usize| if m % 2 == 1 { &g_minus_1 } else { &norm };
    // matrix of right multiplication, columns = images of basis vectors
    let right_mult = |x: &[i64]| -> Vec<Vec<i64>> {
        transpose(&(0..order).map(|j| mul(&basis(j), x)).collect::<Vec<_>>())
    };
    // exactness of the resolution in positive degrees
    for m in 1..=max {
        let dm = right_mult(x(m));
        let dm1 = right_mult(x(m + 1));
        assert_eq!(rank_mod(dm.clone(), p) + rank_mod(dm1, p), order);
    }
    // Hom_A(A, k): functionals with phi(g v) = phi(v)
    let left_g = transpose(
        &(0..order)
            .map(|j| mul(&basis(1 % order), &basis(j)))
            .collect::<Vec<_>>(),
    );
    let constraints: Vec<Vec<i64>> = (0..order)
        .map(|j| {
            (0..order)
                .map(|i| left_g[i][j] - i64::from(i == j))
                .collect()
        })
        .collect();
    let hom_dim = order - rank_mod(constraints, p);
    assert_eq!(hom_dim, 1);
    // the invariant functional is the augmentation; d*_m(phi) = phi o R_{x_m}
    let phi: Vec<i64> = vec![1; order];
    let dual_rank = |m: usize| -> usize {
        if m == 0 {
            return 0;
        }
        let r = right_mult(x(m));
        let psi: Vec<i64> = (0..order)
            .map(|j| (0..order).map(|i| phi[i] * r[i][j]).sum::<i64>())
            .collect();
        rank_mod(vec![psi], p)
    };
    (0..=max)
        .map(|m| hom_dim - dual_rank(m + 1) - dual_rank(m))
        .collect()
}

/// `H^n(H_4, k)` for `n = 0..=max`, as the `Z/2`-invariants of
/// `Ext_B(k, k)` with `B = k[x]/(x^2)`, from the resolution
/// `... -> B -x-> B -x-> B -> k` and the lift `s_n(b) = (-1)^n g b g^{-1}`
/// of the action of the grouplike `g` (which sends `x` to `-x`).
pub fn sweedler_oracle(max: usize) -> Vec<usize> {
    // B has basis (1, x); right multiplication by x: 1 -> x, x -> 0
    let rx = [[0i128, 0], [1, 0]];
    // Hom_B(B, k): phi(x v) = eps(x) phi(v) = 0, i.e. phi(x) = 0
    let hom_basis = [vec![1i128, 0]];
    let d_star = |_: usize| -> Vec<Vec<i128>> {
        hom_basis
            .iter()
            .map(|phi| {
                (0..2)
                    .map(|j| (0..2).map(|i| phi[i] * rx[i][j]).sum())
                    .collect()
            })
            .collect()
    };
    (0..=max)
        .map(|n| {
            let rank_out = rank_q(d_star(n + 1));
            let rank_in = if n == 0 { 0 } else { rank_q(d_star(n)) };
            assert_eq!((rank_out, rank_in), (0, 0));
            // action on Hom(P_n, k): phi -> phi o s_n; s_n = (-1)^n diag(1, -1)
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let s = [[sign, 0], [0, -sign]];
            let moved: Vec<Vec<i128>> = hom_basis
                .iter()
                .map(|phi| {
                    (0..2)
                        .map(|j| (0..2).map(|i| phi[i] * s[i][j]).sum())
                        .collect()
                })
                .collect();
            // invariants: kernel of (action - id) on the cohomology
            let diff: Vec<Vec<i128>> = moved
                .iter()
                .zip(&hom_basis)
                .map(|(m, b)| m.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect();
            hom_basis.len() - rank_q(diff)
        })
        .collect()
}
