//! Labeled posets, sign-gradedness, canonical labelings, and the action of
//! the hop involutions `ψ_x` on the Jordan-Hölder set `L(P,ω)`.

use std::collections::{BTreeMap, HashMap, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fs_action::{closure, hop, orbit_shape, Gap, HopDirection, OrbitReport};
use crate::limits;
use crate::poly::{gamma_expand, GammaExpansion, UniPoly};
use crate::word::{Boundary, LetterClass, Word};

const MAX_ELEMENTS: usize = 64;

/// A finite poset given by its Hasse diagram, with an injective labeling by
/// nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetFile", into = "PosetFile")]
pub struct LabeledPoset {
    names: Vec<String>,
    covers: Vec<(usize, usize)>,
    labels: Vec<i32>,
    ups: Vec<Vec<usize>>,
    downs: Vec<Vec<usize>>,
    /// bitmask of elements strictly below
    below: Vec<u64>,
    /// a linear extension, as element indices
    topo: Vec<usize>,
}

/// On-disk form: `{"elements":[..],"covers":[["a","c"],..],"labels":{"a":-2,..}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    pub labels: BTreeMap<String, i32>,
}

impl TryFrom<PosetFile> for LabeledPoset {
    type Error = Error;

    fn try_from(f: PosetFile) -> Result<Self> {
        LabeledPoset::new(f.elements, f.covers, &f.labels)
    }
}

impl From<LabeledPoset> for PosetFile {
    fn from(p: LabeledPoset) -> Self {
        PosetFile {
            covers: p.covers.iter().map(|&(x, y)| (p.names[x].clone(), p.names[y].clone())).collect(),
            labels: p.names.iter().cloned().zip(p.labels.iter().copied()).collect(),
            elements: p.names,
        }
    }
}

fn default_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

impl LabeledPoset {
    pub fn new(elements: Vec<String>, covers: Vec<(String, String)>, labels: &BTreeMap<String, i32>) -> Result<Self> {
        let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if index.len() != elements.len() {
            return Err(Error::InvalidPoset("repeated element name".into()));
        }
        let idx = |s: &str| index.get(s).copied().ok_or_else(|| Error::InvalidPoset(format!("unknown element `{s}`")));
        let covers = covers
            .iter()
            .map(|(x, y)| Ok((idx(x)?, idx(y)?)))
            .collect::<Result<Vec<_>>>()?;
        if let Some(extra) = labels.keys().find(|k| !index.contains_key(k.as_str())) {
            return Err(Error::InvalidPoset(format!("label for unknown element `{extra}`")));
        }
        let labels = elements
            .iter()
            .map(|e| labels.get(e).copied().ok_or_else(|| Error::InvalidPoset(format!("element `{e}` has no label"))))
            .collect::<Result<Vec<_>>>()?;
        Self::build(elements, covers, labels)
    }

    /// Elements are named `a`, `b`, ... in index order.
    pub fn from_indexed(labels: Vec<i32>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let names = (0..labels.len()).map(default_name).collect();
        Self::build(names, covers, labels)
    }

    fn build(names: Vec<String>, covers: Vec<(usize, usize)>, labels: Vec<i32>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidPoset("no elements".into()));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::InvalidPoset(format!("more than {MAX_ELEMENTS} elements")));
        }
        if labels.contains(&0) {
            return Err(Error::InvalidPoset("label 0 is reserved".into()));
        }
        if !labels.iter().all_unique() {
            return Err(Error::InvalidPoset("labels are not injective".into()));
        }
        let mut ups = vec![Vec::new(); n];
        let mut downs = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &(x, y) in &covers {
            if x >= n || y >= n || x == y {
                return Err(Error::InvalidPoset(format!("bad cover ({x}, {y})")));
            }
            if !seen.insert((x, y)) {
                return Err(Error::InvalidPoset(format!("repeated cover {} < {}", names[x], names[y])));
            }
            ups[x].push(y);
            downs[y].push(x);
        }
        // Kahn, smallest index first so the order is deterministic
        let mut indeg: Vec<usize> = downs.iter().map(Vec::len).collect();
        let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = ready.pop_first() {
            topo.push(x);
            for &y in &ups[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.insert(y);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::InvalidPoset("cover relation has a cycle".into()));
        }
        let mut below = vec![0u64; n];
        for &y in &topo {
            below[y] = downs[y].iter().fold(0, |acc, &x| acc | below[x] | (1 << x));
        }
        for &(x, y) in &covers {
            if downs[y].iter().any(|&z| z != x && below[z] & (1 << x) != 0) {
                return Err(Error::InvalidPoset(format!(
                    "{} < {} is implied by transitivity, not a cover",
                    names[x], names[y]
                )));
            }
        }
        Ok(LabeledPoset { names, covers, labels, ups, downs, below, topo })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("poset serializes")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_below(&self, x: usize, y: usize) -> bool {
        self.below[y] & (1 << x) != 0
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.ups[i].is_empty()).collect()
    }

    fn chain_to(&self, mut y: usize, via: &[Option<usize>]) -> Vec<String> {
        let mut chain = vec![self.names[y].clone()];
        while let Some(x) = via[y] {
            chain.push(self.names[x].clone());
            y = x;
        }
        chain.reverse();
        chain
    }

    /// Edge signs, the common chain sum `r`, and the rank function `ρ`.
    pub fn sign_grading(&self) -> Result<SignGrading> {
        let n = self.len();
        let eps = |x: usize, y: usize| if self.labels[x] < self.labels[y] { 1i64 } else { -1 };
        let mut rho: Vec<Option<i64>> = vec![None; n];
        let mut via: Vec<Option<usize>> = vec![None; n];
        for &y in &self.topo {
            if self.downs[y].is_empty() {
                rho[y] = Some(0);
                continue;
            }
            for &x in &self.downs[y] {
                let v = rho[x].expect("topological order") + eps(x, y);
                match rho[y] {
                    None => {
                        rho[y] = Some(v);
                        via[y] = Some(x);
                    }
                    Some(u) if u != v => {
                        let mut second = self.chain_to(x, &via);
                        second.push(self.names[y].clone());
                        return Err(Error::NotSignGraded {
                            first: self.chain_to(y, &via),
                            second,
                            reason: format!("sign sums {u} and {v} up to {}", self.names[y]),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        let rho: Vec<i64> = rho.into_iter().map(|v| v.expect("every element reached")).collect();
        let maxes = self.maximal_elements();
        let r = rho[maxes[0]];
        if let Some(&m) = maxes.iter().find(|&&m| rho[m] != r) {
            return Err(Error::NotSignGraded {
                first: self.chain_to(maxes[0], &via),
                second: self.chain_to(m, &via),
                reason: format!("maximal chains with sign sums {r} and {}", rho[m]),
            });
        }
        Ok(SignGrading {
            r,
            rho: self.names.iter().cloned().zip(rho.iter().copied()).collect(),
            epsilon: self
                .covers
                .iter()
                .map(|&(x, y)| (self.names[x].clone(), self.names[y].clone(), eps(x, y) as i8))
                .collect(),
            rho_by_index: rho,
        })
    }

    /// Sign-graded, `ρ` valued in `{0,1}`, negative labels on rank 0 and
    /// positive labels on rank 1.
    pub fn is_canonical(&self) -> bool {
        self.sign_grading().is_ok_and(|g| {
            g.rho_by_index.iter().zip(&self.labels).all(|(&r, &l)| match r {
                0 => l < 0,
                1 => l > 0,
                _ => false,
            })
        })
    }

    fn require_canonical(&self) -> Result<SignGrading> {
        if !self.is_canonical() {
            return Err(Error::NotCanonical);
        }
        self.sign_grading()
    }

    /// `L(P,ω)` in lexicographic order of label words.
    pub fn linear_extensions(&self) -> Result<Vec<Word>> {
        limits::check(self.len())?;
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.labels[i]);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        self.extend(0, &order, &mut cur, &mut out);
        Ok(out)
    }

    fn extend(&self, placed: u64, order: &[usize], cur: &mut Vec<i32>, out: &mut Vec<Word>) {
        if cur.len() == self.len() {
            out.push(Word::from_vec_unchecked(cur.clone()));
            return;
        }
        for &i in order {
            if placed & (1 << i) == 0 && self.below[i] & !placed == 0 {
                cur.push(self.labels[i]);
                self.extend(placed | (1 << i), order, cur, out);
                cur.pop();
            }
        }
    }

    pub fn is_linear_extension(&self, w: &Word) -> bool {
        if w.len() != self.len() {
            return false;
        }
        let pos: HashMap<i32, usize> = w.letters().iter().enumerate().map(|(i, &x)| (x, i)).collect();
        if self.labels.iter().any(|l| !pos.contains_key(l)) {
            return false;
        }
        self.covers
            .iter()
            .all(|&(x, y)| pos[&self.labels[x]] < pos[&self.labels[y]])
    }

    /// `ψ_x(π)`, classified with zero sentinels. Negative double descents hop
    /// right and negative double ascents hop left; positive letters hop the
    /// other way. Peaks and valleys stay put.
    pub fn psi_x(&self, pi: &Word, x: i32) -> Result<Word> {
        if !self.is_linear_extension(pi) {
            return Err(Error::NotALinearExtension(pi.to_string()));
        }
        self.psi_x_unchecked(pi, x)
    }

    fn psi_x_unchecked(&self, pi: &Word, x: i32) -> Result<Word> {
        let b = Boundary::Zero;
        let out = match (pi.class_of(x, b)?, x < 0) {
            (LetterClass::DoubleDescent, true) => hop(pi, x, HopDirection::Right, Gap::Rising, b)?,
            (LetterClass::DoubleAscent, true) => hop(pi, x, HopDirection::Left, Gap::Falling, b)?,
            (LetterClass::DoubleDescent, false) => hop(pi, x, HopDirection::Left, Gap::Rising, b)?,
            (LetterClass::DoubleAscent, false) => hop(pi, x, HopDirection::Right, Gap::Falling, b)?,
            _ => return Ok(pi.clone()),
        };
        if !self.is_linear_extension(&out) {
            return Err(Error::BrokenInvariant(format!("ψ_{x}({pi}) = {out} left L(P,ω)")));
        }
        Ok(out)
    }

    /// Orbit of `π` under the `ψ_x`, with the descent polynomial checked
    /// against `t^{des π̂} (1+t)^{p-r-1-2 des π̂}`.
    pub fn orbit(&self, pi: &Word) -> Result<OrbitReport> {
        let g = self.require_canonical()?;
        if !self.is_linear_extension(pi) {
            return Err(Error::NotALinearExtension(pi.to_string()));
        }
        let members = closure(pi, &self.labels, |u, x| self.psi_x_unchecked(u, x))?;
        let p = self.len() as i64;
        let d = p - g.r - 1;
        let no_dd = members.iter().filter(|m| m.double_descents(Boundary::Zero) == 0).count();
        if no_dd != 1 {
            return Err(Error::BrokenInvariant(format!("orbit of {pi} has {no_dd} members without double descents")));
        }
        let report = OrbitReport::build(members, Boundary::Zero, u32::try_from(d).ok())?;
        let k = report.rep.des() as i64;
        if d - 2 * k < 0 || report.descent_poly != orbit_shape(k as usize, d as usize) {
            return Err(Error::BrokenInvariant(format!(
                "orbit of {pi}: descent polynomial {} is not t^{k}(1+t)^{}",
                report.descent_poly,
                d - 2 * k
            )));
        }
        Ok(report)
    }

    /// Splits `L(P,ω)` into orbits.
    pub fn orbits(&self) -> Result<Vec<OrbitReport>> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut out = Vec::new();
        for pi in self.linear_extensions()? {
            if seen.contains(&pi) {
                continue;
            }
            let report = self.orbit(&pi)?;
            seen.extend(report.members.iter().cloned());
            out.push(report);
        }
        Ok(out)
    }

    /// Adjoins a greatest element with a label that keeps the labeling
    /// canonical: positive above a rank-0 poset, negative above a rank-1 one.
    pub fn adjoin_top(&self) -> Result<LabeledPoset> {
        let g = self.require_canonical()?;
        let label = match g.r {
            0 => self.labels.iter().copied().max().unwrap_or(0).max(0) + 1,
            1 => self.labels.iter().copied().min().unwrap_or(0).min(0) - 1,
            r => return Err(Error::RankOutOfRange(r)),
        };
        let mut name = "top".to_string();
        while self.names.contains(&name) {
            name.push('\'');
        }
        let top = self.len();
        let mut names = self.names.clone();
        names.push(name);
        let mut labels = self.labels.clone();
        labels.push(label);
        let mut covers = self.covers.clone();
        covers.extend(self.maximal_elements().into_iter().map(|m| (m, top)));
        let hat = Self::build(names, covers, labels)?;
        if !hat.is_canonical() {
            return Err(Error::CannotCanonicalize);
        }
        Ok(hat)
    }

    /// `W(P,ω;t)` and its coefficients `a_i` computed two ways.
    pub fn wp_polynomial(&self) -> Result<WpReport> {
        let g = self.require_canonical()?;
        let p = self.len();
        let r = g.r;
        if !(0..=1).contains(&r) {
            return Err(Error::RankOutOfRange(r));
        }
        let d = (p as i64 - r - 1) as u32;
        let ext = self.linear_extensions()?;
        let w = UniPoly::from_exponents(['t'], ext.iter().map(|e| [e.des() as u32]));
        let peak_poly = UniPoly::from_exponents(['t'], ext.iter().map(|e| [e.peak(Boundary::Zero) as u32]));
        let a_gamma = gamma_expand(&w, d)?;
        // r = 0: a_i = 2^{-p+1+2i} #{peak = i} on L(P)
        // r = 1: a_i = 2^{-p+2+2i} #{peak = i+1} on L(P̂)
        let shift = r as usize;
        let source = if r == 0 { ext } else { self.adjoin_top()?.linear_extensions()? };
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for e in &source {
            *counts.entry(e.peak(Boundary::Zero)).or_default() += 1;
        }
        let den = BigInt::from(1u8) << (p - 1 - shift);
        let mut a_peak = Vec::with_capacity(d as usize / 2 + 1);
        for i in 0..=d as usize / 2 {
            let num = BigInt::from(*counts.get(&(i + shift)).unwrap_or(&0)) << (2 * i);
            if !(&num % &den).is_zero() {
                return Err(Error::NonIntegral(format!("a_{i} = {num}/{den}")));
            }
            a_peak.push(num / &den);
        }
        let agree = a_peak == a_gamma.gamma && a_gamma.is_nonnegative();
        Ok(WpReport { p, r, d, w, peak_poly, a_gamma, a_peak, agree })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignGrading {
    pub r: i64,
    pub rho: BTreeMap<String, i64>,
    /// `(x, y, ε(x,y))` for each cover `x < y`
    pub epsilon: Vec<(String, String, i8)>,
    #[serde(skip)]
    rho_by_index: Vec<i64>,
}

impl SignGrading {
    pub fn rho_of(&self, i: usize) -> i64 {
        self.rho_by_index[i]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WpReport {
    pub p: usize,
    pub r: i64,
    pub d: u32,
    /// `Σ t^{des}` over `L(P,ω)`
    pub w: UniPoly,
    /// `Σ t^{peak}` over `L(P,ω)`, zero sentinels
    pub peak_poly: UniPoly,
    pub a_gamma: GammaExpansion,
    #[serde(with = "crate::poly::int_json::vec")]
    pub a_peak: Vec<BigInt>,
    pub agree: bool,
}

/// All canonically labeled posets with `1..=max_size` elements, one per
/// isomorphism class of labeled poset (labels normalized to `-k..-1` on
/// rank 0 and `1..m` on rank 1).
pub fn canonical_corpus(max_size: usize) -> Result<Vec<LabeledPoset>> {
    limits::check(max_size)?;
    let mut out = Vec::new();
    for n in 1..=max_size {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let mut keys: HashSet<(usize, Vec<(i32, i32)>)> = HashSet::new();
        let mut found: Vec<(usize, Vec<(i32, i32)>, LabeledPoset)> = Vec::new();
        for mask in 0u64..(1 << pairs.len()) {
            let rel = |i: usize, j: usize| {
                let k = pairs.iter().position(|&p| p == (i, j)).expect("i < j");
                mask & (1 << k) != 0
            };
            let transitive = (0..n).tuple_combinations().all(|(i, j, k)| !(rel(i, j) && rel(j, k)) || rel(i, k));
            if !transitive {
                continue;
            }
            let covers: Vec<(usize, usize)> = pairs
                .iter()
                .copied()
                .filter(|&(i, j)| rel(i, j) && !(i + 1..j).any(|k| rel(i, k) && rel(k, j)))
                .collect();
            // ranks alternate along covers and start at 0
            let mut rank: Vec<Option<u8>> = vec![None; n];
            let mut ok = true;
            for j in 0..n {
                let below: Vec<u8> = covers.iter().filter(|c| c.1 == j).map(|c| 1 - rank[c.0].expect("natural order")).collect();
                rank[j] = Some(below.first().copied().unwrap_or(0));
                ok &= below.iter().all_equal();
            }
            let rank: Vec<u8> = rank.into_iter().map(Option::unwrap).collect();
            let maxes: Vec<u8> = (0..n).filter(|&i| !covers.iter().any(|c| c.0 == i)).map(|i| rank[i]).collect();
            if !ok || !maxes.iter().all_equal() {
                continue;
            }
            let zeros: Vec<usize> = (0..n).filter(|&i| rank[i] == 0).collect();
            let ones: Vec<usize> = (0..n).filter(|&i| rank[i] == 1).collect();
            for neg in (1..=zeros.len() as i32).permutations(zeros.len()) {
                for pos in (1..=ones.len() as i32).permutations(ones.len()) {
                    let mut labels = vec![0i32; n];
                    zeros.iter().zip(&neg).for_each(|(&i, &l)| labels[i] = -l);
                    ones.iter().zip(&pos).for_each(|(&i, &l)| labels[i] = l);
                    let mut key: Vec<(i32, i32)> = covers.iter().map(|&(x, y)| (labels[x], labels[y])).collect();
                    key.sort_unstable();
                    if keys.insert((zeros.len(), key.clone())) {
                        let poset = LabeledPoset::from_indexed(labels, covers.clone())?;
                        found.push((zeros.len(), key, poset));
                    }
                }
            }
        }
        found.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out.extend(found.into_iter().map(|f| f.2));
    }
    Ok(out)
}

/// `a < c`, `b < c` labeled `-2, -1, 1`.
pub fn v_poset() -> LabeledPoset {
    LabeledPoset::from_indexed(vec![-2, -1, 1], vec![(0, 2), (1, 2)]).expect("valid fixture")
}

/// `x < y` labeled `-1, 1`.
pub fn two_chain() -> LabeledPoset {
    LabeledPoset::from_indexed(vec![-1, 1], vec![(0, 1)]).expect("valid fixture")
}

pub fn antichain(labels: Vec<i32>) -> Result<LabeledPoset> {
    LabeledPoset::from_indexed(labels, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::permutations;

    fn word(v: &[i32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sign_grading_examples() {
        let g = two_chain().sign_grading().unwrap();
        assert_eq!(g.r, 1);
        assert_eq!((g.rho_of(0), g.rho_of(1)), (0, 1));
        let g = v_poset().sign_grading().unwrap();
        assert_eq!(g.r, 1);
        assert_eq!((g.rho_of(0), g.rho_of(1), g.rho_of(2)), (0, 0, 1));
        let bad = LabeledPoset::from_indexed(vec![1, 3, 2], vec![(0, 2), (1, 2)]).unwrap();
        match bad.sign_grading() {
            Err(Error::NotSignGraded { first, second, .. }) => {
                assert_eq!(first, vec!["a", "c"]);
                assert_eq!(second, vec!["b", "c"]);
            }
            other => panic!("expected NotSignGraded, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_posets() {
        assert!(LabeledPoset::from_indexed(vec![1, 2, 3], vec![(0, 1), (1, 2), (0, 2)]).is_err());
        assert!(LabeledPoset::from_indexed(vec![1, 2], vec![(0, 1), (1, 0)]).is_err());
        assert!(LabeledPoset::from_indexed(vec![1, 1], vec![]).is_err());
        assert!(LabeledPoset::from_indexed(vec![0, 1], vec![]).is_err());
    }

    #[test]
    fn canonical_examples() {
        assert!(v_poset().is_canonical());
        assert!(antichain(vec![-3, -2, -1]).unwrap().is_canonical());
        assert!(!LabeledPoset::from_indexed(vec![1, 2], vec![(0, 1)]).unwrap().is_canonical());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"elements":["a","b","c"],"covers":[["a","c"],["b","c"]],"labels":{"a":-2,"b":-1,"c":1}}"#;
        let p = LabeledPoset::from_json(text).unwrap();
        assert_eq!(p, v_poset());
        assert_eq!(LabeledPoset::from_json(&p.to_json()).unwrap(), p);
        assert!(LabeledPoset::from_json(r#"{"elements":["a"],"covers":[],"labels":{}}"#).is_err());
    }

    #[test]
    fn linear_extension_examples() {
        assert_eq!(v_poset().linear_extensions().unwrap(), vec![word(&[-2, -1, 1]), word(&[-1, -2, 1])]);
        assert_eq!(antichain(vec![1, 2, 3]).unwrap().linear_extensions().unwrap().len(), 6);
        let chain = LabeledPoset::from_indexed(vec![-1, 2, -3], vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(chain.linear_extensions().unwrap(), vec![word(&[-1, 2, -3])]);
    }

    #[test]
    fn psi_examples() {
        let v = v_poset();
        let pi = word(&[-2, -1, 1]);
        assert_eq!(v.psi_x(&pi, -1).unwrap(), word(&[-1, -2, 1]));
        assert_eq!(v.psi_x(&pi, -2).unwrap(), pi);
        assert_eq!(v.psi_x(&pi, 1).unwrap(), pi);
        assert!(matches!(v.psi_x(&word(&[1, -2, -1]), 1), Err(Error::NotALinearExtension(_))));
    }

    #[test]
    fn orbit_examples() {
        let v = v_poset();
        let r = v.orbit(&word(&[-2, -1, 1])).unwrap();
        assert_eq!(r.members.len(), 2);
        assert_eq!(r.descent_poly, UniPoly::from_coeffs('t', &[1, 1]));
        let chain = LabeledPoset::from_indexed(vec![-1, 2, -3], vec![(0, 1), (1, 2)]).unwrap();
        let r = chain.orbit(&word(&[-1, 2, -3])).unwrap();
        assert_eq!(r.descent_poly, UniPoly::from_coeffs('t', &[0, 1]));
        let anti = antichain(vec![-3, -2, -1]).unwrap();
        for o in anti.orbits().unwrap() {
            let k = o.rep.peak(Boundary::Zero);
            assert_eq!(o.descent_poly, orbit_shape(k, 2));
        }
        let natural = LabeledPoset::from_indexed(vec![1, 2], vec![(0, 1)]).unwrap();
        assert_eq!(natural.orbit(&word(&[1, 2])).unwrap_err(), Error::NotCanonical);
    }

    #[test]
    fn wp_examples() {
        let r = v_poset().wp_polynomial().unwrap();
        assert_eq!((r.d, r.w.clone()), (1, UniPoly::from_coeffs('t', &[1, 1])));
        assert_eq!(r.a_peak, vec![BigInt::from(1)]);
        assert!(r.agree);
        let r = two_chain().wp_polynomial().unwrap();
        assert_eq!((r.d, r.w.clone()), (0, UniPoly::one(['t'])));
        assert!(r.agree);
        let r = antichain(vec![-3, -2, -1]).unwrap().wp_polynomial().unwrap();
        assert_eq!(r.w, UniPoly::from_coeffs('t', &[1, 4, 1]));
        assert_eq!(r.a_peak, vec![BigInt::from(1), BigInt::from(2)]);
        assert!(r.agree);
    }

    #[test]
    fn adjoin_top_examples() {
        let hat = antichain(vec![-2, -1]).unwrap().adjoin_top().unwrap();
        assert_eq!(hat.labels(), &[-2, -1, 1]);
        assert_eq!(hat.sign_grading().unwrap().r, 1);
        let hat = antichain(vec![-1]).unwrap().adjoin_top().unwrap();
        assert_eq!(hat.covers(), &[(0, 1)]);
        let hat = v_poset().adjoin_top().unwrap();
        assert!(hat.is_canonical());
        assert_eq!(hat.sign_grading().unwrap().r, 0);
    }

    #[test]
    fn antichain_is_eulerian() {
        for n in 1..=6 {
            let labels: Vec<i32> = (1..=n as i32).map(|x| -x).collect();
            let p = antichain(labels).unwrap();
            let ext = p.linear_extensions().unwrap();
            assert_eq!(ext.len(), permutations(n).count());
            let wp = p.wp_polynomial().unwrap();
            let eulerian = UniPoly::from_exponents(['t'], permutations(n).map(|q| [q.des() as u32]));
            assert_eq!(wp.w, eulerian);
            assert!(wp.agree);
        }
    }

    #[test]
    fn corpus_shape() {
        let c = canonical_corpus(3).unwrap();
        assert!(c.iter().all(LabeledPoset::is_canonical));
        // size 1: {-1}; size 2: antichain {-2,-1} and chain (-1 < 1)
        assert_eq!(c.iter().filter(|p| p.len() == 1).count(), 1);
        assert_eq!(c.iter().filter(|p| p.len() == 2).count(), 2);
    }
}
