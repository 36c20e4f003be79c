#![allow(dead_code)]

use num_integer::Integer;
use su2abelian::group::{parse_presentation, GroupPresentation};

pub const M016: &str = "<a,b | (a^3 b)^2 b^-3, (a^-1 b^3)^2 a^3>";
pub const M118: &str = "<a,b | (a^5 b)^2 b^-3, (a^-2 b^3)^2 a^5>";

/// `F(2, n) = ⟨x₀,…,x_{n−1} | xᵢ xᵢ₊₁ = xᵢ₊₂⟩`, indices mod n.
pub fn fibonacci(n: usize) -> GroupPresentation {
    let gens: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let rels: Vec<String> =
        (0..n).map(|i| format!("x{} x{} x{}^-1", i, (i + 1) % n, (i + 2) % n)).collect();
    parse_presentation(&format!("<{} | {}>", gens.join(","), rels.join(", "))).unwrap()
}

/// Coprime pairs `(α, β)` with `α` in the range and `0 < |β| ≤ beta_max`.
pub fn pairs(alphas: std::ops::RangeInclusive<i64>, beta_max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in alphas {
        for b in -beta_max..=beta_max {
            if b != 0 && a.gcd(&b) == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

/// All multisets of size `n` drawn from `items`, in lexicographic index order.
pub fn multisets<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[T], n: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            go(items, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, n, 0, &mut Vec::new(), &mut out);
    out
}

/// S²-base signatures with `n ∈ {3, 4}`, `2 ≤ αᵢ ≤ 5`, coprime `βᵢ ∈ [−3, 3]`.
pub fn s2_corpus() -> Vec<Vec<(i64, i64)>> {
    let p = pairs(2..=5, 3);
    let mut out = multisets(&p, 3);
    out.extend(multisets(&p, 4));
    out
}

/// All `[[a, b], [c, d]]` with entries in `[−r, r]` and determinant 1.
pub fn sl2_box(r: i64) -> Vec<[i64; 4]> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                if a == 0 {
                    if b * c == -1 {
                        out.extend((-r..=r).map(|d| [a, b, c, d]));
                    }
                } else if (1 + b * c) % a == 0 {
                    let d = (1 + b * c) / a;
                    if d.abs() <= r {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}
