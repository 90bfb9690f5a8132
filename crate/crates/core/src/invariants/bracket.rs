//! Kauffman bracket by streaming state sum.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::InvariantError;
use crate::{Laurent, LinkDiagram};

pub const DEFAULT_LIMIT: usize = 24;
pub const LIMIT_ENV: &str = "EQSLICE_MAX_CROSSINGS";

/// Crossing limit for state sums, honoring the environment override.
pub fn crossing_limit() -> usize {
    std::env::var(LIMIT_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_LIMIT)
}

/// The loop value -A^2 - A^-2.
pub fn loop_value() -> Laurent {
    Laurent::from_terms([(2, -1), (-2, -1)])
}

struct UnionFind {
    parent: Vec<u16>,
}

impl UnionFind {
    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u16;
        }
    }

    fn find(&mut self, mut x: u16) -> u16 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    /// Returns true when two classes merged.
    fn union(&mut self, a: u16, b: u16) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

/// Bracket with `<O> = 1`, over all 2^n smoothings.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<Laurent, InvariantError> {
    kauffman_bracket_with_limit(d, crossing_limit())
}

pub fn kauffman_bracket_with_limit(d: &LinkDiagram, limit: usize) -> Result<Laurent, InvariantError> {
    let n = d.n_crossings();
    if n > limit {
        return Err(InvariantError::LimitExceeded { crossings: n, limit });
    }
    if n == 0 {
        return Ok(loop_value().pow(d.free_loops().saturating_sub(1) as u32));
    }
    let dense: BTreeMap<u32, u16> = d.edges().enumerate().map(|(i, e)| (e, i as u16)).collect();
    let xs: Vec<[u16; 4]> = d.crossings().iter().map(|x| x.map(|e| dense[&e])).collect();
    let m = dense.len();
    // counts[a][loops]: number of states with `a` A-smoothings and `loops` circles
    let width = m + 1;
    let total: u64 = 1 << n;
    let chunk = (total / 256).max(1);
    let tables: Vec<Vec<u64>> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|k| {
            let mut table = vec![0u64; (n + 1) * width];
            let mut uf = UnionFind { parent: vec![0; m] };
            let end = ((k + 1) * chunk).min(total);
            for state in k * chunk..end {
                uf.reset();
                let mut loops = m;
                for (j, &[a, b, c, e]) in xs.iter().enumerate() {
                    let pairs = if state >> j & 1 == 0 { [(a, b), (c, e)] } else { [(a, e), (b, c)] };
                    for (x, y) in pairs {
                        if uf.union(x, y) {
                            loops -= 1;
                        }
                    }
                }
                let a_count = n - state.count_ones() as usize;
                table[a_count * width + loops] += 1;
            }
            table
        })
        .collect();
    let mut counts = vec![0u64; (n + 1) * width];
    for t in tables {
        for (acc, v) in counts.iter_mut().zip(t) {
            *acc += v;
        }
    }
    let dv = loop_value();
    let mut powers = vec![Laurent::one()];
    for _ in 0..width + d.free_loops() {
        let next = powers.last().expect("nonempty") * &dv;
        powers.push(next);
    }
    let mut out = Laurent::zero();
    for a in 0..=n {
        for loops in 1..width {
            let c = counts[a * width + loops];
            if c == 0 {
                continue;
            }
            let exp = a as i32 - (n - a) as i32;
            let term = &Laurent::monomial(c as i64, exp) * &powers[loops + d.free_loops() - 1];
            out = &out + &term;
        }
    }
    Ok(out)
}

/// Jones polynomial as exponents of t^(1/2), via A = t^(-1/4).
pub fn jones(d: &LinkDiagram) -> Result<Laurent, InvariantError> {
    jones_with_limit(d, crossing_limit())
}

pub fn jones_with_limit(d: &LinkDiagram, limit: usize) -> Result<Laurent, InvariantError> {
    let br = kauffman_bracket_with_limit(d, limit)?;
    Ok(jones_from_bracket(&br, d.writhe()))
}

pub fn jones_from_bracket(bracket: &Laurent, writhe: i32) -> Laurent {
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    let normalized = &Laurent::monomial(sign, -3 * writhe) * bracket;
    normalized
        .divide_exponents(2)
        .expect("bracket exponents have the parity of the crossing count")
        .invert()
}
