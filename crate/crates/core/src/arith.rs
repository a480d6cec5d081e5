//! Small number-theoretic helpers behind the divisor sums and parity splits
//! of the counting formulas. Every argument here is a grid dimension, so
//! trial division is plenty.

use crate::error::{Error, Result};
use num_integer::Integer;

/// The positive divisors of `n`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: usize,
    divisors: Vec<usize>,
}

impl DivisorList {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.divisors
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.divisors.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }
}

impl<'a> IntoIterator for &'a DivisorList {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

pub fn divisors(n: usize) -> Result<DivisorList> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(DivisorList { n, divisors: small })
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut rest = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

/// Residues `x` mod `n` with `2x ≡ -1 - a (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipSolutions {
    n: usize,
    a: usize,
    solutions: Vec<usize>,
}

impl FlipSolutions {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> usize {
        self.a
    }

    /// Ascending.
    pub fn solutions(&self) -> &[usize] {
        &self.solutions
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Solves `x ≡ -1 - x - a (mod n)`.
///
/// Odd `n` has exactly one solution, `(n+1)/2 · (-1-a)`. Even `n` with odd
/// `a` has two, `(-1-a)/2` and `(n-1-a)/2`. Even `n` with even `a` has none.
pub fn flip_solutions(n: usize, a: usize) -> Result<FlipSolutions> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let a = a % n;
    // -1 - a as a residue
    let rhs = (2 * n - 1 - a) % n;
    let mut solutions = if n.is_odd() {
        vec![(rhs * n.div_ceil(2)) % n]
    } else if a.is_odd() {
        // rhs is even here
        vec![rhs / 2, (rhs + n) / 2 % n]
    } else {
        Vec::new()
    };
    solutions.sort_unstable();
    solutions.dedup();
    Ok(FlipSolutions { n, a, solutions })
}

/// Least `d ≥ 1` with `d·a ≡ 0 (mod n)`, i.e. the additive order of `a`.
pub fn minimal_order(a: usize, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(n / (a % n).gcd(&n))
}

pub fn lcm(a: usize, b: usize) -> usize {
    a.lcm(&b)
}
