//! Oracles shared by the integration and acceptance tests. They use only
//! plain loops over `bool`s, never the crate's own algebra.

#![allow(dead_code)]

use stabqram::f2::AffineMap;

/// Smallest number of colors that properly colors `edges`, by backtracking.
pub fn brute_force_chromatic_index(edges: &[(usize, usize)]) -> usize {
    fn extend(edges: &[(usize, usize)], colors: &mut Vec<usize>, c: usize) -> bool {
        let i = colors.len();
        if i == edges.len() {
            return true;
        }
        for color in 0..c {
            let clash = (0..i).any(|e| {
                colors[e] == color && (edges[e].0 == edges[i].0 || edges[e].1 == edges[i].1)
            });
            if !clash {
                colors.push(color);
                if extend(edges, colors, c) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (0..=edges.len())
        .find(|&c| extend(edges, &mut Vec::new(), c))
        .unwrap()
}

pub fn dense(spec: &AffineMap) -> (Vec<Vec<bool>>, Vec<bool>) {
    let a = (0..spec.output_len())
        .map(|j| {
            (0..spec.input_len())
                .map(|k| spec.matrix().get(j, k))
                .collect()
        })
        .collect();
    let b = (0..spec.output_len())
        .map(|j| spec.offset().get(j))
        .collect();
    (a, b)
}

/// `A x + b` on the input whose bit `k` is bit `k` of `x`.
pub fn naive_apply(a: &[Vec<bool>], b: &[bool], x: u64) -> Vec<bool> {
    a.iter()
        .zip(b)
        .map(|(row, &bj)| {
            row.iter()
                .enumerate()
                .fold(bj, |acc, (k, &on)| acc ^ (on && (x >> k) & 1 == 1))
        })
        .collect()
}

/// Largest row or column weight.
pub fn naive_max_degree(a: &[Vec<bool>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let row_max = a
        .iter()
        .map(|r| r.iter().filter(|&&v| v).count())
        .max()
        .unwrap_or(0);
    let col_max = (0..cols)
        .map(|k| a.iter().filter(|r| r[k]).count())
        .max()
        .unwrap_or(0);
    row_max.max(col_max)
}

/// Rank over F2 by elimination on `bool` rows.
pub fn naive_rank(a: &[Vec<bool>]) -> usize {
    let mut rows: Vec<Vec<bool>> = a.to_vec();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}
