//! Literal combinatorial enumerators: partitions, odd Durfee symbols and
//! k-marked odd Durfee symbols. These are the small-`n` oracles for the
//! generating-function tables.

use crate::error::{Error, Result};

/// Calls `visit` on every partition of `n` (parts in non-increasing order).
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut visit: F) {
    fn rec<F: FnMut(&[u32])>(rest: u32, max: u32, parts: &mut Vec<u32>, visit: &mut F) {
        if rest == 0 {
            visit(parts);
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            parts.push(p);
            rec(rest - p, p, parts, visit);
            parts.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut visit);
}

/// Dyson's rank: largest part minus number of parts (0 for the empty partition).
pub fn dyson_rank(parts: &[u32]) -> i64 {
    match parts.first() {
        Some(&l) => l as i64 - parts.len() as i64,
        None => 0,
    }
}

/// Every partition into odd parts `≤ max_part` of weight `≤ max_weight`,
/// parts non-increasing. The empty partition comes first.
pub fn odd_part_partitions(max_part: u32, max_weight: u32) -> Vec<Vec<u32>> {
    fn rec(max: u32, room: u32, parts: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(parts.clone());
        let mut p = if max % 2 == 1 {
            max
        } else {
            max.saturating_sub(1)
        };
        while p >= 1 {
            if p <= room {
                parts.push(p);
                rec(p, room - p, parts, out);
                parts.pop();
            }
            if p < 2 {
                break;
            }
            p -= 2;
        }
    }
    let mut out = Vec::new();
    rec(max_part, max_weight, &mut Vec::new(), &mut out);
    out
}

/// An odd Durfee symbol: two rows of odd parts bounded by `2D+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddDurfeeSymbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
    pub d: u32,
}

impl OddDurfeeSymbol {
    pub fn weight(&self) -> u64 {
        let d = self.d as u64;
        self.top
            .iter()
            .chain(&self.bottom)
            .map(|&p| p as u64)
            .sum::<u64>()
            + 2 * d * d
            + 2 * d
            + 1
    }

    pub fn odd_rank(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Checks the defining conditions (odd parts, bound, ordering).
    pub fn is_valid(&self) -> bool {
        let bound = 2 * self.d + 1;
        [&self.top, &self.bottom].iter().all(|row| {
            row.iter().all(|&p| p % 2 == 1 && p <= bound) && row.windows(2).all(|w| w[0] >= w[1])
        })
    }
}

fn core(d: u32) -> u32 {
    2 * d * d + 2 * d + 1
}

/// All odd Durfee symbols of `n`.
pub fn enumerate_odd_durfee(n: u32, cap: u32) -> Result<Vec<OddDurfeeSymbol>> {
    if n > cap {
        return Err(Error::CapExceeded {
            n: n as i64,
            cap: cap as i64,
        });
    }
    let mut out = Vec::new();
    let mut d = 0u32;
    while core(d) <= n {
        let rest = n - core(d);
        let rows = odd_part_partitions(2 * d + 1, rest);
        for top in &rows {
            let wt: u32 = top.iter().sum();
            for bottom in &rows {
                if wt + bottom.iter().sum::<u32>() == rest {
                    out.push(OddDurfeeSymbol {
                        top: top.clone(),
                        bottom: bottom.clone(),
                        d,
                    });
                }
            }
        }
        d += 1;
    }
    Ok(out)
}

/// A k-marked odd Durfee symbol. `alphas[i-1]` is `α^i` and `betas[i-1]` is
/// `β^i`, so the last entries are the outermost pair `(α^k, β^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedOddDurfeeSymbol {
    pub alphas: Vec<Vec<u32>>,
    pub betas: Vec<Vec<u32>>,
    pub d: u32,
}

impl MarkedOddDurfeeSymbol {
    pub fn k(&self) -> usize {
        self.alphas.len()
    }

    pub fn weight(&self) -> u64 {
        let parts: u64 = self
            .alphas
            .iter()
            .chain(&self.betas)
            .flatten()
            .map(|&p| p as u64)
            .sum();
        parts + core(self.d) as u64
    }
}

/// Walks every k-marked odd Durfee symbol of `n`.
///
/// Conventions for the chained conditions (the calibrated reading):
/// * `α^i` is nonempty for `i < k`;
/// * every part of `α^k` and `β^k` is at most `2D+1`;
/// * for `i < k`: `β^i_1 ≤ α^i_1 ≤ b(β^{i+1})`, where `b(β)` is the smallest
///   part of `β`, or — when `β` is empty — the bound its own parts would obey
///   (`2D+1` for the outermost pair, `α^{i+1}_1` otherwise);
/// * the top row is non-increasing across marks: every part of `α^{i+1}` is at
///   least `α^i_1`.
pub fn visit_k_marked<F: FnMut(&MarkedOddDurfeeSymbol)>(
    k: usize,
    n: u32,
    cap: u32,
    mut visit: F,
) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "k-marked symbols need k >= 1".into(),
        ));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            n: n as i64,
            cap: cap as i64,
        });
    }
    let mut d = 0u32;
    while core(d) <= n {
        let rest = n - core(d);
        let pool = odd_part_partitions(2 * d + 1, rest);
        let weights: Vec<u32> = pool.iter().map(|p| p.iter().sum()).collect();
        let mut sym = MarkedOddDurfeeSymbol {
            alphas: vec![Vec::new(); k],
            betas: vec![Vec::new(); k],
            d,
        };
        walk(k, k, rest, 2 * d + 1, &pool, &weights, &mut sym, &mut visit);
        d += 1;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn walk<F: FnMut(&MarkedOddDurfeeSymbol)>(
    i: usize,
    k: usize,
    room: u32,
    outer: u32,
    pool: &[Vec<u32>],
    weights: &[u32],
    sym: &mut MarkedOddDurfeeSymbol,
    visit: &mut F,
) {
    if i == 0 {
        if room == 0 {
            visit(sym);
        }
        return;
    }
    // Upper bound on α^i_1 and the bound on β^i's own parts.
    let (alpha_cap, alpha_floor_src) = if i == k {
        (outer, None)
    } else {
        let above_beta = &sym.betas[i];
        let above_alpha = &sym.alphas[i];
        let b = match above_beta.last() {
            Some(&s) => s,
            None if i + 1 == k => outer,
            None => above_alpha[0],
        };
        (b, above_alpha.last().copied())
    };
    for (ai, alpha) in pool.iter().enumerate() {
        let wa = weights[ai];
        if wa > room {
            continue;
        }
        if i < k && alpha.is_empty() {
            continue;
        }
        let a1 = alpha.first().copied().unwrap_or(0);
        if a1 > alpha_cap {
            continue;
        }
        if let Some(floor) = alpha_floor_src {
            // Top row non-increasing across marks.
            if a1 > floor {
                continue;
            }
        }
        let beta_cap = if i == k { outer } else { a1 };
        for (bi, beta) in pool.iter().enumerate() {
            let wb = weights[bi];
            if wa + wb > room {
                continue;
            }
            if beta.first().copied().unwrap_or(0) > beta_cap {
                continue;
            }
            sym.alphas[i - 1] = alpha.clone();
            sym.betas[i - 1] = beta.clone();
            walk(i - 1, k, room - wa - wb, outer, pool, weights, sym, visit);
        }
    }
    sym.alphas[i - 1].clear();
    sym.betas[i - 1].clear();
}

/// Collects every k-marked odd Durfee symbol of `n`.
pub fn enumerate_k_marked(k: usize, n: u32, cap: u32) -> Result<Vec<MarkedOddDurfeeSymbol>> {
    let mut out = Vec::new();
    visit_k_marked(k, n, cap, |s| out.push(s.clone()))?;
    Ok(out)
}

/// `D_k^0(n)`, the number of k-marked odd Durfee symbols of `n`.
pub fn d_k0(k: usize, n: u32, cap: u32) -> Result<u64> {
    let mut count = 0u64;
    visit_k_marked(k, n, cap, |_| count += 1)?;
    Ok(count)
}

/// Partitions of `n` in which every odd part is less than twice the smallest
/// part; another count of `p_ω(n)`.
pub fn count_small_odd_parts(n: u32) -> u64 {
    let mut count = 0;
    for_each_partition(n, |parts| {
        if let Some(&s) = parts.last() {
            if parts.iter().all(|&p| p % 2 == 0 || p < 2 * s) {
                count += 1;
            }
        }
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn partitions_of_four() {
        let mut all = Vec::new();
        for_each_partition(4, |p| all.push(p.to_vec()));
        assert_eq!(all.len(), 5);
        assert!(all.contains(&vec![4]));
        assert_eq!(dyson_rank(&[4]), 3);
    }

    #[test]
    fn small_odd_durfee_symbols() {
        let one = enumerate_odd_durfee(1, 40).unwrap();
        assert_eq!(
            one,
            vec![OddDurfeeSymbol {
                top: vec![],
                bottom: vec![],
                d: 0
            }]
        );
        let two = enumerate_odd_durfee(2, 40).unwrap();
        assert_eq!(two.len(), 2);
        let syms = enumerate_odd_durfee(25, 40).unwrap();
        let set: HashSet<_> = syms.iter().cloned().collect();
        assert_eq!(set.len(), syms.len());
        assert!(syms.iter().all(|s| s.is_valid() && s.weight() == 25));
        assert!(matches!(
            enumerate_odd_durfee(41, 40),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn small_odd_parts_count() {
        let got: Vec<u64> = (1..=11).map(count_small_odd_parts).collect();
        assert_eq!(got, vec![1, 2, 3, 4, 6, 8, 10, 14, 18, 22, 29]);
    }

    #[test]
    fn marked_counts_match_known_moments() {
        // η₂⁰ and η₄⁰ for n = 1..10, from the odd-rank distribution.
        let eta2 = [0, 1, 4, 10, 20, 36, 60, 95, 144, 211];
        let eta4 = [0, 0, 1, 6, 21, 56, 127, 258, 484, 854];
        for n in 1..=10u32 {
            assert_eq!(d_k0(2, n, 25).unwrap(), eta2[n as usize - 1], "D2({n})");
            assert_eq!(d_k0(3, n, 25).unwrap(), eta4[n as usize - 1], "D3({n})");
        }
        let syms = enumerate_k_marked(2, 12, 25).unwrap();
        let set: HashSet<_> = syms.iter().cloned().collect();
        assert_eq!(set.len(), syms.len());
        assert!(syms.iter().all(|s| s.weight() == 12 && s.k() == 2));
    }
}
