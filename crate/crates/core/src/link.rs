//! Right-extended link patterns and the one-boundary Temperley–Lieb action.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{Ring, UPoly};
use crate::error::{Error, Result};
use crate::linalg::SparseMat;

const UNPAIRED: u8 = u8::MAX;

/// Noncrossing partial matching of sites `0..L`; unmatched sites connect to
/// an extra boundary point on the right and therefore never sit under an
/// arc.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinkPattern {
    partner: Box<[u8]>,
}

impl LinkPattern {
    /// The pattern with every site unpaired.
    pub fn empty(l: usize) -> Self {
        LinkPattern { partner: vec![UNPAIRED; l].into() }
    }

    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Partner of the 0-based site `k`.
    pub fn partner(&self, k: usize) -> Option<usize> {
        match self.partner[k] {
            UNPAIRED => None,
            p => Some(p as usize),
        }
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter_map(|k| self.partner(k).filter(|&p| p > k).map(|p| (k, p))).collect()
    }

    pub fn unpaired(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.partner(k).is_none()).collect()
    }

    /// Whether 1-based sites `i, i+1` form an arc.
    pub fn has_arc(&self, i: usize) -> bool {
        self.partner(i - 1) == Some(i)
    }

    pub fn encoding(&self) -> String {
        (0..self.len())
            .map(|k| match self.partner(k) {
                None => '.',
                Some(p) if p > k => '(',
                Some(_) => ')',
            })
            .collect()
    }

    fn key(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(|k| match self.partner(k) {
            None => 0,
            Some(p) if p > k => 1,
            Some(_) => 2,
        })
    }

    fn from_partner(partner: Vec<u8>) -> Self {
        LinkPattern { partner: partner.into() }
    }

    fn check(&self) -> bool {
        let n = self.len();
        let mut depth = 0usize;
        for k in 0..n {
            match self.partner(k) {
                None if depth > 0 => return false,
                None => {}
                Some(p) if p >= n || self.partner(p) != Some(k) || p == k => return false,
                Some(p) if p > k => depth += 1,
                Some(_) => depth -= 1,
            }
        }
        // noncrossing: arcs properly nested
        let mut stack = Vec::new();
        for k in 0..n {
            if let Some(p) = self.partner(k) {
                if p > k {
                    stack.push(k);
                } else if stack.pop() != Some(p) {
                    return false;
                }
            }
        }
        stack.is_empty()
    }

    /// Insert a new arc at 1-based sites `(i, i+1)`, shifting later sites.
    pub fn insert_arc(&self, i: usize) -> Result<Self> {
        let n = self.len();
        if i == 0 || i > n + 1 {
            return Err(Error::InvalidSite { site: i, size: n + 2 });
        }
        let at = i - 1;
        let shift = |p: usize| if p >= at { p + 2 } else { p };
        let mut partner = vec![UNPAIRED; n + 2];
        for k in 0..n {
            if let Some(p) = self.partner(k) {
                partner[shift(k)] = shift(p) as u8;
            }
        }
        partner[at] = (at + 1) as u8;
        partner[at + 1] = at as u8;
        let out = LinkPattern::from_partner(partner);
        if out.check() {
            Ok(out)
        } else {
            Err(Error::InvalidPattern(out.encoding()))
        }
    }

    /// Apply `e_i` (1-based). Returns the image and the number of closed
    /// bulk loops (0 or 1).
    pub fn apply_e(&self, i: usize) -> Result<(LinkPattern, u32)> {
        let n = self.len();
        if i == 0 || i >= n {
            return Err(Error::InvalidSite { site: i, size: n });
        }
        let (a, b) = (i - 1, i);
        let mut partner = self.partner.to_vec();
        match (self.partner(a), self.partner(b)) {
            (Some(p), _) if p == b => return Ok((self.clone(), 1)),
            (Some(j), Some(k)) => {
                partner[j] = k as u8;
                partner[k] = j as u8;
            }
            (Some(j), None) => partner[j] = UNPAIRED,
            (None, Some(k)) => partner[k] = UNPAIRED,
            (None, None) => {}
        }
        partner[a] = b as u8;
        partner[b] = a as u8;
        Ok((LinkPattern::from_partner(partner), 0))
    }

    /// Apply the boundary generator `f` acting on the last site.
    pub fn apply_f(&self) -> LinkPattern {
        let last = self.len() - 1;
        match self.partner(last) {
            None => self.clone(),
            Some(j) => {
                let mut partner = self.partner.to_vec();
                partner[j] = UNPAIRED;
                partner[last] = UNPAIRED;
                LinkPattern::from_partner(partner)
            }
        }
    }
}

impl Ord for LinkPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(other.key())
    }
}

impl PartialOrd for LinkPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for LinkPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPattern(s.to_string());
        let n = s.chars().count();
        if n == 0 || n >= UNPAIRED as usize {
            return Err(bad());
        }
        let mut partner = vec![UNPAIRED; n];
        let mut stack = Vec::new();
        for (k, ch) in s.chars().enumerate() {
            match ch {
                '.' if stack.is_empty() => {}
                '(' => stack.push(k),
                ')' => {
                    let j = stack.pop().ok_or_else(bad)?;
                    partner[j] = k as u8;
                    partner[k] = j as u8;
                }
                _ => return Err(bad()),
            }
        }
        if !stack.is_empty() {
            return Err(bad());
        }
        Ok(LinkPattern::from_partner(partner))
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

impl fmt::Debug for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.encoding())
    }
}

impl Serialize for LinkPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.encoding())
    }
}

impl<'de> Deserialize<'de> for LinkPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All link patterns of size `l` in canonical order (`'.' < '(' < ')'`).
pub fn enumerate_patterns(l: usize) -> Vec<LinkPattern> {
    fn rec(l: usize, buf: &mut String, depth: usize, out: &mut Vec<LinkPattern>) {
        let k = buf.len();
        if k == l {
            if depth == 0 {
                out.push(buf.parse().unwrap());
            }
            return;
        }
        let left = l - k;
        if depth == 0 {
            buf.push('.');
            rec(l, buf, 0, out);
            buf.pop();
        }
        if depth + 1 < left {
            buf.push('(');
            rec(l, buf, depth + 1, out);
            buf.pop();
        }
        if depth > 0 {
            buf.push(')');
            rec(l, buf, depth - 1, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    rec(l, &mut String::with_capacity(l), 0, &mut out);
    out
}

/// Generator of the one-boundary TL algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `e_i`, 1-based.
    E(usize),
    F,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "e{i}"),
            Generator::F => f.write_str("f"),
        }
    }
}

/// Canonical basis of size `l` with precomputed generator actions.
#[derive(Debug)]
pub struct Basis {
    l: usize,
    patterns: Vec<LinkPattern>,
    index: FxHashMap<LinkPattern, usize>,
    /// `e[i-1][src] = (dst, loops)`
    e: Vec<Vec<(usize, u32)>>,
    f: Vec<usize>,
}

impl Basis {
    pub fn new(l: usize) -> Arc<Basis> {
        assert!(l >= 1, "size must be positive");
        let patterns = enumerate_patterns(l);
        let index: FxHashMap<LinkPattern, usize> =
            patterns.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        let e = (1..l)
            .map(|i| {
                patterns
                    .iter()
                    .map(|p| {
                        let (t, w) = p.apply_e(i).unwrap();
                        (index[&t], w)
                    })
                    .collect()
            })
            .collect();
        let f = patterns.iter().map(|p| index[&p.apply_f()]).collect();
        Arc::new(Basis { l, patterns, index, e, f })
    }

    pub fn size(&self) -> usize {
        self.l
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[LinkPattern] {
        &self.patterns
    }

    pub fn pattern(&self, k: usize) -> &LinkPattern {
        &self.patterns[k]
    }

    pub fn index_of(&self, p: &LinkPattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the pattern with every site unpaired.
    pub fn empty_index(&self) -> usize {
        0
    }

    /// Image of basis vector `src` under `e_i`: `(dst, loops)`.
    pub fn e_action(&self, i: usize, src: usize) -> (usize, u32) {
        self.e[i - 1][src]
    }

    pub fn f_action(&self, src: usize) -> usize {
        self.f[src]
    }

    fn check_gen(&self, g: Generator) -> Result<()> {
        match g {
            Generator::E(i) if i == 0 || i >= self.l => Err(Error::InvalidSite { site: i, size: self.l }),
            _ => Ok(()),
        }
    }

    /// Indices `src ≠ dst` mapped onto `dst` by the generator.
    pub fn antecedent_indices(&self, g: Generator, dst: usize) -> Result<Vec<usize>> {
        self.check_gen(g)?;
        let p = &self.patterns[dst];
        let ok = match g {
            Generator::E(i) => p.has_arc(i),
            Generator::F => p.partner(self.l - 1).is_none(),
        };
        if !ok {
            return Err(Error::NotInImage);
        }
        Ok((0..self.dim())
            .filter(|&s| {
                s != dst
                    && match g {
                        Generator::E(i) => self.e[i - 1][s].0 == dst,
                        Generator::F => self.f[s] == dst,
                    }
            })
            .collect())
    }

    pub fn antecedents(&self, g: Generator, p: &LinkPattern) -> Result<Vec<LinkPattern>> {
        let dst = self.index_of(p).ok_or_else(|| Error::InvalidPattern(p.encoding()))?;
        Ok(self.antecedent_indices(g, dst)?.into_iter().map(|k| self.patterns[k].clone()).collect())
    }

    /// Matrix of a generator over `Q[τ]`, columns indexed by source pattern.
    pub fn operator_matrix(&self, g: Generator) -> Result<SparseMat<UPoly>> {
        self.check_gen(g)?;
        let n = self.dim();
        let tau = UPoly::x();
        let mut m = SparseMat::zero(n, n, UPoly::zero());
        for s in 0..n {
            match g {
                Generator::E(i) => {
                    let (t, w) = self.e[i - 1][s];
                    m.add_entry(t, s, if w == 1 { tau.clone() } else { UPoly::one() });
                }
                Generator::F => m.add_entry(self.f[s], s, UPoly::one()),
            }
        }
        Ok(m)
    }

    /// Apply `e_i` to a dense coefficient vector with loop weight `tau`.
    pub fn apply_e_vec<S: Ring>(&self, i: usize, v: &[S], tau: &S) -> Vec<S> {
        let zero = v[0].zero_like();
        let mut out = vec![zero; v.len()];
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (t, w) = self.e[i - 1][s];
            let c = if w == 1 { c.times(tau) } else { c.clone() };
            out[t] = out[t].plus(&c);
        }
        out
    }

    pub fn apply_f_vec<S: Ring>(&self, v: &[S]) -> Vec<S> {
        let zero = v[0].zero_like();
        let mut out = vec![zero; v.len()];
        for (s, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let t = self.f[s];
                out[t] = out[t].plus(c);
            }
        }
        out
    }
}

/// Sparse formal combination of link patterns.
#[derive(Clone, PartialEq)]
pub struct LoopVector<S> {
    entries: BTreeMap<LinkPattern, S>,
}

impl<S: Ring> LoopVector<S> {
    pub fn new() -> Self {
        LoopVector { entries: BTreeMap::new() }
    }

    pub fn from_dense(basis: &Basis, v: &[S]) -> Self {
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (basis.pattern(k).clone(), c.clone()))
            .collect();
        LoopVector { entries }
    }

    pub fn to_dense(&self, basis: &Basis, zero: &S) -> Result<Vec<S>> {
        let mut out = vec![zero.clone(); basis.dim()];
        for (p, c) in &self.entries {
            let k = basis.index_of(p).ok_or_else(|| Error::InvalidPattern(p.encoding()))?;
            out[k] = c.clone();
        }
        Ok(out)
    }

    pub fn insert(&mut self, p: LinkPattern, c: S) {
        if c.is_zero() {
            self.entries.remove(&p);
        } else {
            self.entries.insert(p, c);
        }
    }

    pub fn get(&self, p: &LinkPattern) -> Option<&S> {
        self.entries.get(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LinkPattern, &S)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<S: Ring> Default for LoopVector<S> {
    fn default() -> Self {
        LoopVector::new()
    }
}

impl<S: Ring + fmt::Display> LoopVector<S> {
    /// JSON map from encoding to the scalar's display string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.entries.iter().map(|(p, c)| (p.encoding(), serde_json::Value::String(c.to_string()))).collect(),
        )
    }
}

/// Outcome of checking one defining relation of the algebra.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

/// Check the defining relations as matrix identities over `Q[τ]`.
pub fn verify_tl_relations(l: usize) -> Vec<RelationCheck> {
    let b = Basis::new(l);
    let e: Vec<SparseMat<UPoly>> = (1..l).map(|i| b.operator_matrix(Generator::E(i)).unwrap()).collect();
    let f = b.operator_matrix(Generator::F).unwrap();
    let tau = UPoly::x();
    let mut out = Vec::new();
    let mut push = |relation: String, holds: bool| out.push(RelationCheck { relation, holds });
    for i in 1..l {
        let ei = &e[i - 1];
        push(format!("e{i}^2 = tau e{i}"), ei.mul(ei) == ei.scale(&tau));
        if i + 1 < l {
            let ej = &e[i];
            push(format!("e{i} e{} e{i} = e{i}", i + 1), ei.mul(ej).mul(ei) == *ei);
            push(format!("e{} e{i} e{} = e{}", i + 1, i + 1, i + 1), ej.mul(ei).mul(ej) == *ej);
        }
        for j in i + 2..l {
            let ej = &e[j - 1];
            push(format!("[e{i}, e{j}] = 0"), ei.mul(ej) == ej.mul(ei));
        }
        if i + 1 < l {
            push(format!("[e{i}, f] = 0"), ei.mul(&f) == f.mul(ei));
        }
    }
    push("f^2 = f".into(), f.mul(&f) == f);
    if l >= 2 {
        let el = &e[l - 2];
        push(format!("e{} f e{} = e{}", l - 1, l - 1, l - 1), el.mul(&f).mul(el) == *el);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(v: &[LinkPattern]) -> Vec<String> {
        v.iter().map(|p| p.encoding()).collect()
    }

    fn lp(s: &str) -> LinkPattern {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_order_small_sizes() {
        assert_eq!(enc(&enumerate_patterns(1)), ["."]);
        assert_eq!(enc(&enumerate_patterns(3)), ["...", ".()", "()."]);
        assert_eq!(enc(&enumerate_patterns(4)), ["....", "..()", ".().", "(())", "()..", "()()"]);
    }

    #[test]
    fn counts_are_central_binomials() {
        for l in 1..=12usize {
            let want = (0..l / 2).fold(1u64, |acc, k| acc * (l - k) as u64 / (k + 1) as u64);
            let pats = enumerate_patterns(l);
            assert_eq!(pats.len() as u64, want, "L={l}");
            assert!(pats.windows(2).all(|w| w[0] < w[1]));
            assert!(pats.iter().all(|p| p.check()));
        }
    }

    #[test]
    fn generator_examples() {
        assert_eq!(lp("()").apply_e(1).unwrap(), (lp("()"), 1));
        assert_eq!(lp("..").apply_e(1).unwrap(), (lp("()"), 0));
        assert_eq!(lp("()()").apply_e(2).unwrap(), (lp("(())"), 0));
        assert_eq!(lp("()").apply_f(), lp(".."));
        assert_eq!(lp("..").apply_f(), lp(".."));
        assert_eq!(lp("()()").apply_f(), lp("().."));
        assert!(lp("..").apply_e(2).is_err());
    }

    #[test]
    fn antecedent_examples() {
        let b = Basis::new(3);
        assert_eq!(enc(&b.antecedents(Generator::E(1), &lp("().")).unwrap()), ["...", ".()"]);
        assert_eq!(enc(&b.antecedents(Generator::F, &lp("...")).unwrap()), [".()"]);
        assert_eq!(b.antecedents(Generator::F, &lp(".()")), Err(Error::NotInImage));
        assert!(b.antecedents(Generator::F, &lp("().")).unwrap().is_empty());
    }

    #[test]
    fn all_images_valid_and_antecedents_consistent() {
        for l in 2..=7 {
            let b = Basis::new(l);
            for (k, p) in b.patterns().iter().enumerate() {
                for i in 1..l {
                    let (t, _) = p.apply_e(i).unwrap();
                    assert!(t.check());
                    assert_eq!(b.e_action(i, k).0, b.index_of(&t).unwrap());
                }
                assert!(p.apply_f().check());
            }
            for d in 0..b.dim() {
                for i in 1..l {
                    if let Ok(ante) = b.antecedent_indices(Generator::E(i), d) {
                        for s in 0..b.dim() {
                            let hit = s != d && b.e_action(i, s).0 == d;
                            assert_eq!(ante.contains(&s), hit);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn e1_matrix_size_two() {
        let b = Basis::new(2);
        let m = b.operator_matrix(Generator::E(1)).unwrap().to_dense();
        assert_eq!(m, vec![vec![UPoly::zero(), UPoly::zero()], vec![UPoly::one(), UPoly::x()]]);
    }

    #[test]
    fn relations_small() {
        for l in 1..=6 {
            for r in verify_tl_relations(l) {
                assert!(r.holds, "L={l}: {}", r.relation);
            }
        }
    }

    #[test]
    fn insert_arc_examples() {
        assert_eq!(lp(".").insert_arc(2).unwrap(), lp(".()"));
        assert_eq!(lp(".").insert_arc(1).unwrap(), lp("()."));
        assert_eq!(lp("()").insert_arc(2).unwrap(), lp("(())"));
        assert!(lp(".").insert_arc(4).is_err());
    }
}
