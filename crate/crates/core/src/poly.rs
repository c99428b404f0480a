//! Exact sparse integer polynomials in one to three variables, plus the basis
//! conversions used throughout the crate: gamma expansions, the bivariate
//! `(s+t)^k (st)^j (1+st)^m` basis, and the f-vector to h-vector conversion.
//!
//! Coefficients are [`BigInt`]; there is no floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sparse polynomial in `N` named variables with integer coefficients.
///
/// Monomials are keyed by exponent arrays; the `BTreeMap` order is the
/// lexicographic term order with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<const N: usize> {
    vars: [char; N],
    terms: BTreeMap<[u32; N], BigInt>,
}

pub type UniPoly = Poly<1>;
pub type BiPoly = Poly<2>;
pub type TriPoly = Poly<3>;

impl<const N: usize> Poly<N> {
    pub fn zero(vars: [char; N]) -> Self {
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: [char; N]) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: [char; N], c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, [0; N], c)
    }

    pub fn monomial(vars: [char; N], exps: [u32; N], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(exps, c.into());
        p
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: [char; N], i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(vars, e, 1)
    }

    pub fn from_terms(vars: [char; N], terms: impl IntoIterator<Item = ([u32; N], BigInt)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Sum of the monomials `x^e`, one per item; used for generating functions.
    pub fn from_exponents(vars: [char; N], exps: impl IntoIterator<Item = [u32; N]>) -> Self {
        let mut counts: BTreeMap<[u32; N], u64> = BTreeMap::new();
        for e in exps {
            *counts.entry(e).or_default() += 1;
        }
        Poly {
            vars,
            terms: counts.into_iter().map(|(e, c)| (e, BigInt::from(c))).collect(),
        }
    }

    pub fn vars(&self) -> [char; N] {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32; N]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: [u32; N], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn leading_term(&self) -> Option<([u32; N], &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.vars);
        }
        Poly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Divides every coefficient by `k`, or `None` if some coefficient is not
    /// a multiple of `k`.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*e, q);
        }
        Some(Poly { vars: self.vars, terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_monomial(&self, exps: [u32; N]) -> Self {
        Poly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    for i in 0..N {
                        f[i] += exps[i];
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Exchanges the roles of variables `i` and `j` (names stay in place).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        Poly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = *e;
                    f.swap(i, j);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Multivariate division with remainder in the lexicographic term order.
    ///
    /// Returns `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and no term of the remainder divisible by the divisor's leading term.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert_eq!(self.vars, divisor.vars, "variable mismatch");
        let (lead_e, lead_c) = divisor.leading_term().expect("division by the zero polynomial");
        let lead_c = lead_c.clone();
        let mut rest = self.clone();
        let mut quot = Self::zero(self.vars);
        let mut rem = Self::zero(self.vars);
        while let Some((e, c)) = rest.leading_term() {
            let c = c.clone();
            let divides = (0..N).all(|i| e[i] >= lead_e[i]) && (&c % &lead_c).is_zero();
            if divides {
                let mut m = [0; N];
                for i in 0..N {
                    m[i] = e[i] - lead_e[i];
                }
                let factor = &c / &lead_c;
                quot.add_term(m, factor.clone());
                rest -= &divisor.mul_monomial(m).scale(&factor);
            } else {
                rem.add_term(e, c.clone());
                rest.add_term(e, -c);
            }
        }
        (quot, rem)
    }

    /// Composes with univariate polynomials, one per variable.
    pub fn substitute(&self, assignment: &[UniPoly; N]) -> UniPoly {
        let var = assignment.first().map(|p| p.vars[0]).unwrap_or('t');
        let mut out = UniPoly::zero([var]);
        let mut powers: Vec<BTreeMap<u32, UniPoly>> = vec![BTreeMap::new(); N];
        for (e, c) in &self.terms {
            let mut term = UniPoly::constant([var], c.clone());
            for i in 0..N {
                let p = powers[i]
                    .entry(e[i])
                    .or_insert_with(|| assignment[i].pow(e[i]))
                    .clone();
                term = &term * &p;
            }
            out += &term;
        }
        out
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "variable mismatch: {:?} vs {:?}", self.vars, other.vars);
    }

    fn fmt_monomial(&self, e: &[u32; N]) -> String {
        let mut s = String::new();
        for i in 0..N {
            match e[i] {
                0 => {}
                1 => s.push(self.vars[i]),
                k => {
                    s.push(self.vars[i]);
                    s.push('^');
                    s.push_str(&k.to_string());
                }
            }
        }
        s
    }
}

impl UniPoly {
    pub fn from_coeffs(var: char, coeffs: &[i64]) -> Self {
        Self::from_terms([var], coeffs.iter().enumerate().map(|(k, &c)| ([k as u32], BigInt::from(c))))
    }

    pub fn from_big_coeffs(var: char, coeffs: &[BigInt]) -> Self {
        Self::from_terms([var], coeffs.iter().enumerate().map(|(k, c)| ([k as u32], c.clone())))
    }

    /// `x^k`.
    pub fn x_pow(var: char, k: u32) -> Self {
        Self::monomial([var], [k], 1)
    }

    /// `(1 + x)^e`.
    pub fn one_plus_x_pow(var: char, e: u32) -> Self {
        (Self::one([var]) + Self::x_pow(var, 1)).pow(e)
    }

    pub fn var_name(&self) -> char {
        self.vars[0]
    }

    pub fn degree(&self) -> Option<u32> {
        self.degree_in(0)
    }

    pub fn coeff_at(&self, k: u32) -> BigInt {
        self.coeff(&[k])
    }

    /// Dense coefficient vector `c_0..=c_deg` (empty for the zero polynomial).
    pub fn coeffs(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff_at(k)).collect(),
        }
    }

    /// Renames the variable.
    pub fn with_var(&self, var: char) -> Self {
        Poly { vars: [var], terms: self.terms.clone() }
    }

    /// Checks `x^d p(1/x) = p(x)`.
    pub fn is_symmetric(&self, d: u32) -> bool {
        match self.degree() {
            None => true,
            Some(deg) if deg > d => false,
            Some(_) => (0..=d).all(|k| self.coeff_at(k) == self.coeff_at(d - k)),
        }
    }
}

impl<const N: usize> fmt::Display for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&[u32; N], &BigInt)> = self.terms.iter().collect();
        if N > 1 {
            // graded, highest degree first
            ordered.sort_by(|a, b| {
                let da: u32 = a.0.iter().sum();
                let db: u32 = b.0.iter().sum();
                db.cmp(&da).then(b.0.cmp(a.0))
            });
        }
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let mono = self.fmt_monomial(e);
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.vars.iter().collect::<String>())
    }
}

impl<const N: usize> AddAssign<&Poly<N>> for Poly<N> {
    fn add_assign(&mut self, rhs: &Poly<N>) {
        self.check_vars(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<const N: usize> SubAssign<&Poly<N>> for Poly<N> {
    fn sub_assign(&mut self, rhs: &Poly<N>) {
        self.check_vars(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<const N: usize> Add<&Poly<N>> for &Poly<N> {
    type Output = Poly<N>;
    fn add(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const N: usize> Add for Poly<N> {
    type Output = Poly<N>;
    fn add(mut self, rhs: Poly<N>) -> Poly<N> {
        self += &rhs;
        self
    }
}

impl<const N: usize> Sub<&Poly<N>> for &Poly<N> {
    type Output = Poly<N>;
    fn sub(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<const N: usize> Sub for Poly<N> {
    type Output = Poly<N>;
    fn sub(mut self, rhs: Poly<N>) -> Poly<N> {
        self -= &rhs;
        self
    }
}

impl<const N: usize> Neg for Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        Poly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<const N: usize> Mul<&Poly<N>> for &Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: &Poly<N>) -> Poly<N> {
        self.check_vars(rhs);
        let mut out = Poly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..N {
                    e[i] += eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl<const N: usize> Mul for Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: Poly<N>) -> Poly<N> {
        &self * &rhs
    }
}

// ---------------------------------------------------------------------------
// JSON

pub(crate) mod int_json {
    use super::*;

    /// Integers that fit in `i64` are JSON numbers; larger ones are strings.
    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    pub(crate) enum Repr {
        Small(i64),
        Big(String),
    }

    pub(crate) fn to_repr(v: &BigInt) -> Repr {
        match v.to_i64() {
            Some(x) => Repr::Small(x),
            None => Repr::Big(v.to_string()),
        }
    }

    pub(crate) fn from_repr(r: Repr) -> std::result::Result<BigInt, String> {
        match r {
            Repr::Small(x) => Ok(BigInt::from(x)),
            Repr::Big(s) => s.parse().map_err(|e| format!("bad integer {s:?}: {e}")),
        }
    }

    pub(crate) fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        to_repr(v).serialize(s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        from_repr(Repr::deserialize(d)?).map_err(serde::de::Error::custom)
    }

    pub(crate) mod vec {
        use super::*;

        pub(crate) fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(to_repr))
        }

        pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?
                .into_iter()
                .map(|r| from_repr(r).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    #[serde(with = "int_json")]
    c: BigInt,
}

impl<const N: usize> Serialize for Poly<N> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            vars: self.vars.iter().map(|v| v.to_string()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { e: e.to_vec(), c: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, const N: usize> Deserialize<'de> for Poly<N> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        if raw.vars.len() != N {
            return Err(D::Error::custom(format!("expected {N} variables, got {}", raw.vars.len())));
        }
        let mut vars = ['?'; N];
        for (slot, name) in vars.iter_mut().zip(&raw.vars) {
            let mut chars = name.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => *slot = c,
                _ => return Err(D::Error::custom(format!("variable names are single characters, got {name:?}"))),
            }
        }
        let mut p = Poly::zero(vars);
        for t in raw.terms {
            let e: [u32; N] = t
                .e
                .try_into()
                .map_err(|_| D::Error::custom("exponent vector has the wrong length"))?;
            p.add_term(e, t.c);
        }
        Ok(p)
    }
}

// ---------------------------------------------------------------------------
// Basis conversions

/// Coefficients of a symmetric polynomial in the basis `t^i (1+t)^{d-2i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaExpansion {
    pub d: u32,
    #[serde(with = "int_json::vec")]
    pub gamma: Vec<BigInt>,
}

impl GammaExpansion {
    /// `Σ γ_i t^i (1+t)^{d-2i}`.
    pub fn reconstruct(&self, var: char) -> UniPoly {
        let mut out = UniPoly::zero([var]);
        for (i, g) in self.gamma.iter().enumerate() {
            let i = i as u32;
            let basis = &UniPoly::x_pow(var, i) * &UniPoly::one_plus_x_pow(var, self.d - 2 * i);
            out += &basis.scale(g);
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gamma.iter().all(|g| !g.is_negative())
    }

    /// Unit vector `e_k` of length `⌊d/2⌋ + 1`.
    pub fn unit(d: u32, k: usize) -> Self {
        let mut gamma = vec![BigInt::zero(); d as usize / 2 + 1];
        gamma[k] = BigInt::one();
        GammaExpansion { d, gamma }
    }
}

/// Peels `p = Σ γ_i t^i (1+t)^{d-2i}` from the low-degree end.
///
/// Coefficients may come out negative; callers that have a theorem for
/// nonnegativity assert it themselves.
pub fn gamma_expand(p: &UniPoly, d: u32) -> Result<GammaExpansion> {
    if !p.is_symmetric(d) {
        return Err(Error::NotSymmetric { d });
    }
    let var = p.var_name();
    let mut rest = p.clone();
    let mut gamma = Vec::with_capacity(d as usize / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest.coeff_at(i);
        if !g.is_zero() {
            let basis = &UniPoly::x_pow(var, i) * &UniPoly::one_plus_x_pow(var, d - 2 * i);
            rest -= &basis.scale(&g);
        }
        gamma.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::NonzeroRemainder(rest.to_string()));
    }
    Ok(GammaExpansion { d, gamma })
}

/// Coefficients `c(k, j)` of a bivariate polynomial in `(s, t)` in the basis
/// `(s+t)^k (st)^j (1+st)^{n-k-1-2j}`, `k + 2j <= n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GesselExpansion {
    pub n: u32,
    pub coeffs: BTreeMap<(u32, u32), BigInt>,
}

#[derive(Serialize)]
struct GesselTermJson {
    k: u32,
    j: u32,
    #[serde(with = "int_json")]
    c: BigInt,
}

impl Serialize for GesselExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            n: u32,
            coeffs: Vec<GesselTermJson>,
        }
        Out {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(k, j), c)| GesselTermJson { k, j, c: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl GesselExpansion {
    pub fn coeff(&self, k: u32, j: u32) -> BigInt {
        self.coeffs.get(&(k, j)).cloned().unwrap_or_default()
    }

    /// Index pairs with a negative coefficient.
    pub fn negative_entries(&self) -> Vec<(u32, u32)> {
        self.coeffs
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(kj, _)| *kj)
            .collect()
    }

    pub fn reconstruct(&self) -> BiPoly {
        let mut out = BiPoly::zero(['s', 't']);
        for (&(k, j), c) in &self.coeffs {
            out += &gessel_basis(self.n, k, j).scale(c);
        }
        out
    }
}

/// `(s+t)^k (st)^j (1+st)^{n-k-1-2j}`.
pub fn gessel_basis(n: u32, k: u32, j: u32) -> BiPoly {
    let vars = ['s', 't'];
    let s_plus_t = BiPoly::var(vars, 0) + BiPoly::var(vars, 1);
    let one_plus_st = BiPoly::one(vars) + BiPoly::monomial(vars, [1, 1], 1);
    let m = n - k - 1 - 2 * j;
    (&s_plus_t.pow(k) * &one_plus_st.pow(m)).mul_monomial([j, j])
}

/// Solves for the `(s+t)^k (st)^j (1+st)^{n-k-1-2j}` coefficients exactly.
pub fn gessel_expand(f: &BiPoly, n: u32) -> Result<GesselExpansion> {
    if n == 0 {
        return if f.is_zero() {
            Ok(GesselExpansion { n, coeffs: BTreeMap::new() })
        } else {
            Err(Error::NoExpansion)
        };
    }
    let unknowns: Vec<(u32, u32)> = (0..n)
        .flat_map(|k| (0..).take_while(move |j| k + 2 * j < n).map(move |j| (k, j)))
        .collect();
    let basis: Vec<BiPoly> = unknowns.iter().map(|&(k, j)| gessel_basis(n, k, j)).collect();

    let mut monomials: Vec<[u32; 2]> = f.terms().map(|(e, _)| *e).collect();
    for b in &basis {
        monomials.extend(b.terms().map(|(e, _)| *e));
    }
    monomials.sort_unstable();
    monomials.dedup();

    let cols = unknowns.len();
    let mut rows: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|e| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from(b.coeff(e))).collect();
            row.push(BigRational::from(f.coeff(e)));
            row
        })
        .collect();

    let pivots = gauss_jordan(&mut rows, cols);
    if rows.iter().skip(pivots.len()).any(|row| !row[cols].is_zero()) {
        return Err(Error::NoExpansion);
    }

    let mut solution = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        solution[c] = rows[r][cols].clone();
    }
    let mut coeffs = BTreeMap::new();
    for (&(k, j), x) in unknowns.iter().zip(&solution) {
        if !x.is_integer() {
            return Err(Error::NonIntegral(format!("c({k},{j}) = {x}")));
        }
        let x = x.to_integer();
        if !x.is_zero() {
            coeffs.insert((k, j), x);
        }
    }
    let expansion = GesselExpansion { n, coeffs };
    if &expansion.reconstruct() != f {
        return Err(Error::NoExpansion);
    }
    Ok(expansion)
}

/// Reduced row echelon form in place over the first `cols` columns.
/// Returns the pivot column of each leading row.
fn gauss_jordan(rows: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Solves `Σ h_i t^i (1+t)^{d-i} = Σ f_{i-1} t^i` for `h_0..=h_d`.
///
/// `f` holds `f_{-1}, f_0, ..., f_{d-1}`.
pub fn h_from_f(f: &[BigInt], d: u32) -> Result<Vec<BigInt>> {
    let d = d as usize;
    if f.len() != d + 1 {
        return Err(Error::InvalidArgument(format!("expected {} f-numbers, got {}", d + 1, f.len())));
    }
    if !f[0].is_one() {
        return Err(Error::InvalidArgument("f_{-1} must be 1".into()));
    }
    let mut h: Vec<BigInt> = Vec::with_capacity(d + 1);
    for m in 0..=d {
        let mut v = f[m].clone();
        for (i, hi) in h.iter().enumerate() {
            v -= hi * binomial((d - i) as u64, (m - i) as u64);
        }
        h.push(v);
    }
    Ok(h)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_integer(k: u32, var: char) -> UniPoly {
    UniPoly::from_terms([var], (0..k).map(|i| ([i], BigInt::one())))
}

/// `[n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: u32, var: char) -> UniPoly {
    (1..=n).fold(UniPoly::one([var]), |acc, k| &acc * &q_integer(k, var))
}
