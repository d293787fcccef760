//! Sparse multivariate polynomials over amplitude and form-variable symbols.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::fock::{BasisLabel, Sector, Spin};

/// Number of amplitude symbols: the basis of three fermions in three modes.
pub const AMPLITUDE_COUNT: u16 = 20;

/// Variable family of the trilinear form: `x` belongs to mode A, `y` to B,
/// `z` to C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarFamily {
    X,
    Y,
    Z,
}

impl VarFamily {
    pub const ALL: [VarFamily; 3] = [VarFamily::X, VarFamily::Y, VarFamily::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// Amplitude of the sector basis label at this position.
    Amplitude(u16),
    /// Form variable `w_s` carrying a copy tag; tag 0 is the unprimed set.
    Aux { family: VarFamily, spin: Spin, copy: u8 },
}

impl Symbol {
    pub fn id(self) -> u16 {
        match self {
            Symbol::Amplitude(i) => i,
            Symbol::Aux { family, spin, copy } => {
                AMPLITUDE_COUNT + ((u16::from(copy) * 3 + family.index() as u16) * 2 + u16::from(spin == Spin::Down))
            }
        }
    }

    pub fn from_id(id: u16) -> Symbol {
        if id < AMPLITUDE_COUNT {
            return Symbol::Amplitude(id);
        }
        let r = id - AMPLITUDE_COUNT;
        let spin = if r.is_multiple_of(2) { Spin::Up } else { Spin::Down };
        let family = VarFamily::ALL[usize::from((r / 2) % 3)];
        Symbol::Aux {
            family,
            spin,
            copy: (r / 6) as u8,
        }
    }

    pub fn aux(family: VarFamily, spin: Spin, copy: u8) -> Symbol {
        Symbol::Aux { family, spin, copy }
    }
}

/// Sorted `(symbol id, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(u16, u8)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(sym: Symbol) -> Self {
        Monomial(vec![(sym.id(), 1)])
    }

    pub fn factors(&self) -> impl Iterator<Item = (Symbol, u8)> + '_ {
        self.0.iter().map(|&(s, e)| (Symbol::from_id(s), e))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| u32::from(e)).sum()
    }

    /// Degree counted over amplitude symbols only.
    pub fn amplitude_degree(&self) -> u32 {
        self.0
            .iter()
            .filter(|&&(s, _)| s < AMPLITUDE_COUNT)
            .map(|&(_, e)| u32::from(e))
            .sum()
    }

    pub fn exponent(&self, sym: Symbol) -> u8 {
        let id = sym.id();
        self.0.binary_search_by_key(&id, |&(s, _)| s).map_or(0, |i| self.0[i].1)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `∂/∂sym`: the lowered monomial and the falling exponent, if present.
    fn derive(&self, id: u16) -> Option<(Monomial, u8)> {
        let i = self.0.binary_search_by_key(&id, |&(s, _)| s).ok()?;
        let e = self.0[i].1;
        let mut v = self.0.clone();
        if e == 1 {
            v.remove(i);
        } else {
            v[i].1 -= 1;
        }
        Some((Monomial(v), e))
    }

    fn relabel(&self, f: &impl Fn(u16) -> u16) -> Monomial {
        let mut acc = Monomial::one();
        for &(s, e) in &self.0 {
            acc = acc.mul(&Monomial(vec![(f(s), e)]));
        }
        acc
    }
}

/// Polynomial with complex coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, Complex64>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(sym: Symbol) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(sym), Complex64::new(1.0, 0.0));
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Complex64)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Complex64) {
        if c == Complex64::new(0.0, 0.0) {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == Complex64::new(0.0, 0.0) {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Complex64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// Total degrees of the stored monomials, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The common degree if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, &v)| (m.clone(), v * c)))
    }

    pub fn has_aux(&self) -> bool {
        self.terms
            .keys()
            .any(|m| m.0.iter().any(|&(s, _)| s >= AMPLITUDE_COUNT))
    }

    /// Constant term (coefficient of the empty monomial).
    pub fn constant_term(&self) -> Complex64 {
        self.terms
            .get(&Monomial::one())
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn derivative(&self, sym: Symbol) -> Self {
        let id = sym.id();
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            if let Some((lowered, e)) = m.derive(id) {
                out.add_term(lowered, c * f64::from(e));
            }
        }
        out
    }

    /// Renames symbols through `f`; terms that collide are merged.
    pub fn relabel(&self, f: impl Fn(Symbol) -> Symbol) -> Self {
        let g = |id: u16| f(Symbol::from_id(id)).id();
        Self::from_terms(self.terms.iter().map(|(m, &c)| (m.relabel(&g), c)))
    }

    /// Moves every form variable of copy `from` (optionally only one family)
    /// to copy `to`.
    pub fn recopy(&self, family: Option<VarFamily>, from: u8, to: u8) -> Self {
        self.relabel(|s| match s {
            Symbol::Aux { family: f, spin, copy } if copy == from && family.is_none_or(|w| w == f) => {
                Symbol::aux(f, spin, to)
            }
            other => other,
        })
    }

    /// `Ω_w = ∂²/∂w'↑∂w''↓ − ∂²/∂w''↑∂w'↓` with `'` = copy `first` and
    /// `''` = copy `second`.
    pub fn omega(&self, family: VarFamily, first: u8, second: u8) -> Self {
        let v = |spin, copy| Symbol::aux(family, spin, copy);
        let a = self.derivative(v(Spin::Down, second)).derivative(v(Spin::Up, first));
        let b = self.derivative(v(Spin::Down, first)).derivative(v(Spin::Up, second));
        a - b
    }

    /// Substitutes numeric amplitude values (indexed by symbol id). Form
    /// variables must be absent.
    pub fn evaluate_amplitudes(&self, amps: &[Complex64]) -> Option<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (m, &c) in &self.terms {
            let mut v = c;
            for &(s, e) in &m.0 {
                if s >= AMPLITUDE_COUNT {
                    return None;
                }
                v *= amps[usize::from(s)].powu(u32::from(e));
            }
            total += v;
        }
        Some(total)
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(mut self, rhs: SparsePolynomial) -> SparsePolynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: SparsePolynomial) -> SparsePolynomial {
        self + (-rhs)
    }
}

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Pretty-printer that spells amplitude symbols as `m[u0D]` against the
/// three-fermion sector.
pub struct Display<'a> {
    pub poly: &'a SparsePolynomial,
    pub sector: &'a Sector,
}

fn symbol_name(sector: &Sector, s: Symbol) -> String {
    match s {
        Symbol::Amplitude(i) => {
            let l: &BasisLabel = sector.label(usize::from(i));
            format!("m[{l}]")
        }
        Symbol::Aux { family, spin, copy } => {
            let s = if spin == Spin::Up { '↑' } else { '↓' };
            format!("{}{s}{}", family.letter(), "'".repeat(usize::from(copy)))
        }
    }
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.poly.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (s, e) in m.factors() {
                write!(f, "·{}", symbol_name(self.sector, s))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
