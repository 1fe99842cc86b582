//! Ideals of `(N0, +, *)` are the submonoids generated by their generators, so
//! membership is numerical-semigroup membership.
//!
//! With `m` the least generator, the Apéry table `w[r]` holds the least
//! representable number congruent to `r` mod `m`; then `x` is representable iff
//! `x >= w[x mod m]`. Tables are built by the round-robin update, adding one
//! generator at a time. Very large moduli fall back to a memoised search.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

const APERY_LIMIT: u64 = 1 << 22;
const UNREACHABLE: u64 = u64::MAX;

#[derive(Debug, Clone)]
pub(crate) struct NumericalMonoid {
    /// Minimal generators, ascending.
    gens: Vec<BigUint>,
    table: Option<Vec<u64>>,
}

impl NumericalMonoid {
    pub fn new(generators: &[BigUint]) -> NumericalMonoid {
        let mut sorted: Vec<BigUint> = generators
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        sorted.sort();
        sorted.dedup();
        let Some(m) = sorted
            .first()
            .and_then(|m| m.to_u64())
            .filter(|m| *m <= APERY_LIMIT)
        else {
            return NumericalMonoid::by_search(sorted);
        };
        let mut table = vec![UNREACHABLE; m as usize];
        table[0] = 0;
        let mut gens = vec![sorted[0].clone()];
        for g in &sorted[1..] {
            let Some(g64) = g.to_u64() else {
                return NumericalMonoid::by_search(sorted);
            };
            let r = (g64 % m) as usize;
            if table[r] != UNREACHABLE && g64 >= table[r] {
                continue;
            }
            add_generator(&mut table, m, g64);
            gens.push(g.clone());
        }
        NumericalMonoid {
            gens,
            table: Some(table),
        }
    }

    fn by_search(sorted: Vec<BigUint>) -> NumericalMonoid {
        let mut gens: Vec<BigUint> = Vec::new();
        for g in sorted {
            if !represent(&gens, &g) {
                gens.push(g);
            }
        }
        NumericalMonoid { gens, table: None }
    }

    pub fn generators(&self) -> &[BigUint] {
        &self.gens
    }

    pub fn contains(&self, x: &BigUint) -> bool {
        if x.is_zero() {
            return true;
        }
        match &self.table {
            Some(table) => {
                let m = table.len() as u64;
                let r = (x % m).to_usize().expect("residue fits");
                table[r] != UNREACHABLE && *x >= BigUint::from(table[r])
            }
            None => represent(&self.gens, x),
        }
    }
}

/// Round-robin relaxation of the Apéry table by one new generator `g`.
fn add_generator(table: &mut [u64], m: u64, g: u64) {
    let step = (g % m) as usize;
    let m_us = m as usize;
    let cycles = m.gcd(&(g % m)).max(1) as usize;
    let cycle_len = m_us / cycles;
    for start in 0..cycles {
        // Begin the walk at the cycle's minimum so one lap settles every entry.
        let mut best = start;
        let mut r = start;
        for _ in 0..cycle_len {
            if table[r] < table[best] {
                best = r;
            }
            r = (r + step) % m_us;
        }
        if table[best] == UNREACHABLE {
            continue;
        }
        let mut r = best;
        for _ in 0..cycle_len {
            let next = (r + step) % m_us;
            let cand = table[r].saturating_add(g);
            if cand < table[next] {
                table[next] = cand;
            }
            r = next;
        }
    }
}

/// Whether `x` is a nonnegative combination of `gens`, by memoised search.
fn represent(gens: &[BigUint], x: &BigUint) -> bool {
    if x.is_zero() {
        return true;
    }
    let g = gens.iter().fold(BigUint::zero(), |acc, g| acc.gcd(g));
    if g.is_zero() || !(x % &g).is_zero() {
        return false;
    }
    let mut desc: Vec<BigUint> = gens.iter().map(|a| a / &g).collect();
    desc.sort_by(|a, b| b.cmp(a));
    let x = x / &g;
    let mut dead = HashSet::new();
    search(&desc, 0, &x, &mut dead)
}

fn search(gens: &[BigUint], i: usize, rem: &BigUint, dead: &mut HashSet<(usize, BigUint)>) -> bool {
    if rem.is_zero() {
        return true;
    }
    if i + 1 == gens.len() {
        return (rem % &gens[i]).is_zero();
    }
    if dead.contains(&(i, rem.clone())) {
        return false;
    }
    let mut r = rem.clone();
    loop {
        if search(gens, i + 1, &r, dead) {
            return true;
        }
        if r < gens[i] {
            break;
        }
        r -= &gens[i];
    }
    dead.insert((i, rem.clone()));
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(gens: &[u64], x: u64) -> bool {
        let mut reach = vec![false; x as usize + 1];
        reach[0] = true;
        for n in 1..=x as usize {
            reach[n] = gens
                .iter()
                .any(|&g| g > 0 && g as usize <= n && reach[n - g as usize]);
        }
        reach[x as usize]
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&g| BigUint::from(g)).collect()
    }

    #[test]
    fn two_three() {
        let m = NumericalMonoid::new(&big(&[2, 3]));
        assert!(!m.contains(&1u32.into()));
        assert!(m.contains(&5u32.into()));
        assert!(m.contains(&0u32.into()));
    }

    #[test]
    fn matches_brute_force() {
        for gens in [
            vec![6, 10, 15],
            vec![4, 6],
            vec![7, 11, 13, 20],
            vec![5],
            vec![9, 12, 21],
            vec![0, 3],
        ] {
            let m = NumericalMonoid::new(&big(&gens));
            let s = NumericalMonoid::by_search(big(&gens));
            for x in 0..200 {
                assert_eq!(m.contains(&x.into()), brute(&gens, x), "{gens:?} {x}");
                assert_eq!(s.contains(&x.into()), brute(&gens, x), "{gens:?} {x}");
            }
        }
    }

    #[test]
    fn minimal_generators() {
        let m = NumericalMonoid::new(&big(&[4, 12, 9, 6, 8]));
        assert_eq!(m.generators(), big(&[4, 6, 9]).as_slice());
        assert!(NumericalMonoid::new(&big(&[0])).generators().is_empty());
    }

    #[test]
    fn large_moduli_use_search() {
        let g = 1u64 << 23;
        let m = NumericalMonoid::new(&big(&[g, g + 1]));
        assert!(m.table.is_none());
        assert!(m.contains(&BigUint::from(3 * g + 2)));
        assert!(!m.contains(&BigUint::from(g + 2)));
    }
}
