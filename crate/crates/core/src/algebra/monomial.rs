use std::cmp::Ordering;
use std::fmt;

use super::Generator;

/// A canonical word in a free graded-commutative algebra: strictly increasing
/// generators with positive exponents, odd generators with exponent exactly 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Generator, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn gen(g: &Generator) -> Self {
        Monomial {
            factors: vec![(g.clone(), 1)],
        }
    }

    pub fn power(g: &Generator, e: u32) -> Option<Self> {
        match e {
            0 => Some(Monomial::one()),
            1 => Some(Monomial::gen(g)),
            _ if g.is_odd() => None,
            _ => Some(Monomial {
                factors: vec![(g.clone(), e)],
            }),
        }
    }

    /// Builds a monomial from an arbitrary ordered word, returning the Koszul
    /// sign of sorting it, or `None` if an odd generator repeats.
    pub fn from_word(word: &[(Generator, u32)]) -> Option<(i64, Monomial)> {
        let mut sign = 1i64;
        let mut acc = Monomial::one();
        for (g, e) in word {
            let m = Monomial::power(g, *e)?;
            let (s, prod) = acc.mul(&m)?;
            sign *= s;
            acc = prod;
        }
        Some((sign, acc))
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(g, e)| g.degree() as i64 * *e as i64)
            .sum()
    }

    pub fn is_odd(&self) -> bool {
        self.degree().rem_euclid(2) == 1
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g.name() == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn word_len(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Graded-commutative product. Returns the Koszul sign and the canonical
    /// product, or `None` when an odd generator would appear twice.
    pub fn mul(&self, other: &Monomial) -> Option<(i64, Monomial)> {
        if other.is_one() {
            return Some((1, self.clone()));
        }
        if self.is_one() {
            return Some((1, other.clone()));
        }
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        // odd generators of `self` not yet emitted; each odd factor of `other`
        // taken before them has to jump over all of them.
        let mut odd_left: i64 = self.factors.iter().filter(|(g, _)| g.is_odd()).count() as i64;
        let mut flips = 0i64;
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() || j < b.len() {
            let take = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match take {
                Ordering::Less => {
                    if a[i].0.is_odd() {
                        odd_left -= 1;
                    }
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    if b[j].0.is_odd() {
                        flips += odd_left;
                    }
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    if a[i].0.is_odd() {
                        return None;
                    }
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        let sign = if flips % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial { factors: out }))
    }

    /// Removes one copy of the factor at `idx`, returning the remaining
    /// prefix and suffix words (as monomials) and the removed generator.
    pub(crate) fn split_at_factor(&self, idx: usize) -> (Monomial, Generator, u32, Monomial) {
        let prefix = Monomial {
            factors: self.factors[..idx].to_vec(),
        };
        let suffix = Monomial {
            factors: self.factors[idx + 1..].to_vec(),
        };
        let (g, e) = self.factors[idx].clone();
        (prefix, g, e, suffix)
    }

    /// The part of the monomial made of generators satisfying `pred`, together
    /// with the complementary part and the sign of the reordering
    /// `self = sign * selected * rest`.
    pub fn partition(&self, pred: impl Fn(&Generator) -> bool) -> (i64, Monomial, Monomial) {
        let mut sel = Vec::new();
        let mut rest = Vec::new();
        // rest odd generators already passed by each selected odd one
        let mut odd_rest = 0i64;
        let mut flips = 0i64;
        for (g, e) in &self.factors {
            if pred(g) {
                if g.is_odd() {
                    flips += odd_rest;
                }
                sel.push((g.clone(), *e));
            } else {
                if g.is_odd() {
                    odd_rest += 1;
                }
                rest.push((g.clone(), *e));
            }
        }
        let sign = if flips % 2 == 0 { 1 } else { -1 };
        (sign, Monomial { factors: sel }, Monomial { factors: rest })
    }

    /// All ways to write `self = sign * left * right` with `left`, `right`
    /// canonical sub-monomials.
    pub fn splittings(&self) -> Vec<(i64, Monomial, Monomial)> {
        type Word = Vec<(Generator, u32)>;
        let mut acc: Vec<(Word, Word)> = vec![(Vec::new(), Vec::new())];
        for (g, e) in &self.factors {
            let mut next = Vec::with_capacity(acc.len() * (*e as usize + 1));
            for (l, r) in &acc {
                for k in 0..=*e {
                    let mut l2 = l.clone();
                    let mut r2 = r.clone();
                    if k > 0 {
                        l2.push((g.clone(), k));
                    }
                    if *e - k > 0 {
                        r2.push((g.clone(), *e - k));
                    }
                    next.push((l2, r2));
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|(l, r)| {
                let left = Monomial { factors: l };
                let right = Monomial { factors: r };
                let (s, _) = left.mul(&right).expect("sub-monomials of a monomial multiply");
                (s, left, right)
            })
            .collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(g, e)| {
                let n = if g.name().contains(' ') || g.name().contains('(') {
                    format!("[{}]", g.name())
                } else {
                    g.name().to_string()
                };
                if *e == 1 {
                    n
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
