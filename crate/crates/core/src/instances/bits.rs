//! Boolean-coefficient polynomials as exponent sets.

use std::collections::BTreeSet;

pub type BitPoly = BTreeSet<u32>;

pub fn add(a: &BitPoly, b: &BitPoly) -> BitPoly {
    a.union(b).copied().collect()
}

pub fn mul(a: &BitPoly, b: &BitPoly) -> BitPoly {
    let mut out = BitPoly::new();
    for x in a {
        for y in b {
            out.insert(x + y);
        }
    }
    out
}

pub fn shift(a: &BitPoly, by: u32) -> BitPoly {
    a.iter().map(|e| e + by).collect()
}

pub fn degree(a: &BitPoly) -> Option<u32> {
    a.iter().next_back().copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(e: &[u32]) -> BitPoly {
        e.iter().copied().collect()
    }

    #[test]
    fn not_cancellative() {
        // (1+X)(1+X^2) = (1+X)(1+X+X^2) = 1+X+X^2+X^3
        let a = p(&[0, 1]);
        assert_eq!(mul(&a, &p(&[0, 2])), mul(&a, &p(&[0, 1, 2])));
        assert_eq!(mul(&a, &p(&[0, 2])), p(&[0, 1, 2, 3]));
    }

    #[test]
    fn idempotent_addition() {
        assert_eq!(add(&p(&[1]), &p(&[1])), p(&[1]));
        assert_eq!(shift(&p(&[0, 2]), 3), p(&[3, 5]));
        assert_eq!(degree(&p(&[])), None);
    }
}
