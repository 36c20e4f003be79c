//! Finitely generated abelian groups via Smith normal form.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::group::GroupPresentation;

/// `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k` with `d₁ | d₂ | …` and every `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self { rank: 1, torsion: vec![] },
            1 => Self { rank: 0, torsion: vec![] },
            _ => Self { rank: 0, torsion: vec![n] },
        }
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group; `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion_order())
    }

    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    /// "Even or infinite": positive rank or even torsion order.
    pub fn even_or_infinite(&self) -> bool {
        self.rank > 0 || self.torsion_order().is_multiple_of(2)
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank + self.torsion.len() <= 1
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form (nonzero entries only, each dividing the next).
pub fn smith_diagonal(matrix: &[Vec<i64>]) -> Vec<u64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry in the remaining block becomes the pivot
            let Some((pi, pj)) = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
            else {
                return diag;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }

            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&m[i][t], &p);
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&m[t][j], &p);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = m[i][j];
                        m[t][j] += v;
                    }
                }
                None => {
                    diag.push(p.unsigned_abs() as u64);
                    break;
                }
            }
        }
    }
    diag
}

/// Cokernel of the integer matrix whose rows are relations among `cols` generators.
pub fn cokernel(matrix: &[Vec<i64>], cols: usize) -> AbelianGroup {
    let diag = smith_diagonal(matrix);
    AbelianGroup {
        rank: cols - diag.len(),
        torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    }
}

/// Abelianization of a finitely presented group.
pub fn abelianization(pres: &GroupPresentation) -> AbelianGroup {
    cokernel(&pres.exponent_matrix(), pres.rank())
}

/// Integer determinant by fraction-free elimination (Bareiss).
pub fn determinant(matrix: &[Vec<i64>]) -> i128 {
    let n = matrix.len();
    let mut m: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}
