//! Integer linear algebra on rank-2 lattices: Hermite reduction, left
//! kernels, lattice intersection.

use num_integer::Integer;

pub type Row = (i128, i128);

#[inline]
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Hermite form of the lattice spanned by `rows` (coordinates in the basis
/// {1, ω}). Returns `(a, b, c)` for basis rows `(a, 0)`, `(b, c)` with
/// `a, c > 0` and `0 ≤ b < a`, or `None` when the span has rank < 2.
pub fn hnf2(rows: &[Row]) -> Option<(i128, i128, i128)> {
    let mut xs: Vec<i128> = Vec::with_capacity(rows.len());
    let mut carrier: Option<Row> = None;
    for &(u, v) in rows {
        if v == 0 {
            xs.push(u);
            continue;
        }
        match carrier {
            None => carrier = Some((u, v)),
            Some((cu, cv)) => {
                let (g, p, q) = ext_gcd(cv, v);
                // residual row with zero ω-coordinate
                let resid = (cv / g)
                    .checked_mul(u)
                    .and_then(|l| (v / g).checked_mul(cu).and_then(|r| l.checked_sub(r)))
                    .expect("hnf2 overflow");
                xs.push(resid);
                carrier = Some((
                    p.checked_mul(cu)
                        .and_then(|l| q.checked_mul(u).and_then(|r| l.checked_add(r)))
                        .expect("hnf2 overflow"),
                    g,
                ));
            }
        }
    }
    let (mut b, mut c) = carrier?;
    if c < 0 {
        b = -b;
        c = -c;
    }
    let mut a: i128 = 0;
    for x in xs {
        a = a.gcd(&x);
    }
    if a == 0 {
        return None;
    }
    b = b.rem_euclid(a);
    Some((a, b, c))
}

/// Basis of the left kernel of the 4×2 integer matrix with the given rows:
/// all integer (α₁..α₄) with Σ αᵢ·rowᵢ = 0.
pub fn left_kernel4(rows: [Row; 4]) -> Vec<[i128; 4]> {
    let mut m: Vec<Row> = rows.to_vec();
    let mut u: Vec<[i128; 4]> = (0..4)
        .map(|i| {
            let mut r = [0i128; 4];
            r[i] = 1;
            r
        })
        .collect();

    let mut pivot_row = 0usize;
    for col in 0..2 {
        // clear the column below one gcd pivot
        let mut k = pivot_row;
        while k < 4 {
            let entry = if col == 0 { m[k].0 } else { m[k].1 };
            if entry != 0 {
                break;
            }
            k += 1;
        }
        if k == 4 {
            continue;
        }
        m.swap(pivot_row, k);
        u.swap(pivot_row, k);
        for i in pivot_row + 1..4 {
            loop {
                let (p, q) = (m[pivot_row], m[i]);
                let (pe, ie) = if col == 0 { (p.0, q.0) } else { (p.1, q.1) };
                if ie == 0 {
                    break;
                }
                if pe == 0 {
                    m.swap(pivot_row, i);
                    u.swap(pivot_row, i);
                    continue;
                }
                let f = ie.div_euclid(pe);
                m[i] = (q.0 - f * p.0, q.1 - f * p.1);
                for j in 0..4 {
                    u[i][j] -= f * u[pivot_row][j];
                }
                // after euclidean step, remainder strictly smaller; swap to continue
                let rem = if col == 0 { m[i].0 } else { m[i].1 };
                if rem != 0 {
                    m.swap(pivot_row, i);
                    u.swap(pivot_row, i);
                } else {
                    break;
                }
            }
        }
        pivot_row += 1;
    }

    (pivot_row..4).map(|i| u[i]).filter(|r| r.iter().any(|&x| x != 0)).collect()
}
