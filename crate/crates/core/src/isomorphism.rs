//! Backtracking isomorphism search for small multigraphs given as symmetric
//! integer adjacency matrices.

use crate::linalg::IntMatrix;

/// Every bijection `f` with `a[i][j] == b[f(i)][f(j)]` for all `i, j` and
/// `compatible(i, f(i))` for all `i`, in lexicographic order of `(f(0), f(1), …)`.
pub fn isomorphisms<F>(a: &IntMatrix, b: &IntMatrix, compatible: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let n = a.len();
    if b.len() != n {
        return Vec::new();
    }
    let degree = |m: &IntMatrix, v: usize| -> (i64, i64) { (m[v].iter().sum(), m[v][v]) };
    let mut out = Vec::new();
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(a, b, &compatible, &degree, &mut map, &mut used, &mut out);
    out
}

fn extend<F, D>(
    a: &IntMatrix,
    b: &IntMatrix,
    compatible: &F,
    degree: &D,
    map: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) where
    F: Fn(usize, usize) -> bool,
    D: Fn(&IntMatrix, usize) -> (i64, i64),
{
    let v = map.len();
    if v == a.len() {
        out.push(map.clone());
        return;
    }
    for w in 0..b.len() {
        if used[w] || !compatible(v, w) || degree(a, v) != degree(b, w) {
            continue;
        }
        if (0..v).any(|u| a[v][u] != b[w][map[u]]) {
            continue;
        }
        used[w] = true;
        map.push(w);
        extend(a, b, compatible, degree, map, used, out);
        map.pop();
        used[w] = false;
    }
}

pub fn are_isomorphic(a: &IntMatrix, b: &IntMatrix) -> bool {
    !isomorphisms(a, b, |_, _| true).is_empty()
}

/// Automorphism group of a multigraph as vertex permutations.
pub fn automorphisms(a: &IntMatrix) -> Vec<Vec<usize>> {
    isomorphisms(a, a, |_, _| true)
}

/// Adjacency with vertex `v` deleted.
pub fn remove_vertex(a: &IntMatrix, v: usize) -> IntMatrix {
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != v)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}
