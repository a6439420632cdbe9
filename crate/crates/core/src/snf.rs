//! Smith normal form over the integers, used as an independent oracle for
//! orders of tensor products of finite abelian groups.

/// Diagonal of the Smith normal form of `mat` (row-major, any shape), each
/// entry non-negative and dividing the next nonzero one.
pub fn smith_diagonal(mat: &[Vec<i64>]) -> Vec<i64> {
    let rows = mat.len();
    let cols = mat.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<i64>> = mat.to_vec();
    let mut diag = Vec::new();
    let mut k = 0usize;
    while k < rows && k < cols {
        let Some((pi, pj)) = pivot(&a, k) else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            // Clear column k by row operations.
            let mut dirty = false;
            for i in k + 1..rows {
                if a[i][k] != 0 {
                    let q = a[i][k].div_euclid(a[k][k]);
                    for j in k..cols {
                        a[i][j] -= q * a[k][j];
                    }
                    if a[i][k] != 0 {
                        a.swap(k, i);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Clear row k by column operations.
            for j in k + 1..cols {
                if a[k][j] != 0 {
                    let q = a[k][j].div_euclid(a[k][k]);
                    for row in a.iter_mut() {
                        let v = row[k];
                        row[j] -= q * v;
                    }
                    if a[k][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(k, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        // Enforce divisibility of the remaining block by the pivot.
        let p = a[k][k].abs();
        let mut fixed = true;
        'outer: for i in k + 1..rows {
            for j in k + 1..cols {
                if a[i][j] % p != 0 {
                    for jj in k..cols {
                        let v = a[i][jj];
                        a[k][jj] += v;
                    }
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if !fixed {
            continue;
        }
        diag.push(p);
        k += 1;
    }
    while diag.len() < rows.min(cols) {
        diag.push(0);
    }
    diag
}

fn pivot(a: &[Vec<i64>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, i64)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, &v) in row.iter().enumerate().skip(k) {
            if v != 0 && best.map_or(true, |(_, _, b)| v.abs() < b) {
                best = Some((i, j, v.abs()));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Order of `A (x)_Z B` for finite abelian groups given by their invariant
/// lists (cyclic factor orders). Builds the relation matrix of the tensor
/// product on the `|a| * |b|` pair generators and reads the order off its
/// Smith normal form.
pub fn abelian_tensor_order(a_inv: &[usize], b_inv: &[usize]) -> usize {
    let ka = a_inv.len();
    let kb = b_inv.len();
    if ka == 0 || kb == 0 {
        return 1;
    }
    let cols = ka * kb;
    let mut mat: Vec<Vec<i64>> = Vec::with_capacity(2 * cols);
    for (i, &ai) in a_inv.iter().enumerate() {
        for j in 0..kb {
            let mut row = vec![0i64; cols];
            row[i * kb + j] = ai as i64;
            mat.push(row);
        }
    }
    for i in 0..ka {
        for (j, &bj) in b_inv.iter().enumerate() {
            let mut row = vec![0i64; cols];
            row[i * kb + j] = bj as i64;
            mat.push(row);
        }
    }
    let diag = smith_diagonal(&mat);
    let mut order: usize = 1;
    for &d in diag.iter().take(cols) {
        assert!(d != 0, "tensor of finite groups is finite");
        order *= d as usize;
    }
    order
}
