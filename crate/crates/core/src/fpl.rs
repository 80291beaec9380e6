//! Horizontally and vertically symmetric fully packed loops of odd size,
//! their alternating sign matrices and link-pattern connectivity.
//!
//! Vertices are `(i, j)` with `1 ≤ i, j ≤ n`. Horizontal edge `(i, j)` joins
//! `(i, j)` and `(i, j+1)` for `0 ≤ j ≤ n`; vertical edge `(i, j)` joins
//! `(i, j)` and `(i+1, j)` for `0 ≤ i ≤ n`. Edges with an endpoint outside
//! the grid are external.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{UPoly, Q};
use crate::error::{Error, Result};
use crate::link::{Basis, LinkPattern};

/// Boundary convention: the external edge above the central column is
/// occupied, so the central column is a straight vertical line and paths
/// can only cross the horizontal axis. Alternation fixes the rest.
pub fn parity_offset(n: usize) -> usize {
    let m = (n + 1) / 2;
    (m + 1) % 2
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FplConfig {
    n: usize,
    h: Vec<bool>,
    v: Vec<bool>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Edge {
    H(usize, usize),
    V(usize, usize),
}

impl FplConfig {
    fn blank(n: usize) -> Self {
        FplConfig { n, h: vec![false; n * (n + 1)], v: vec![false; (n + 1) * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn h(&self, i: usize, j: usize) -> bool {
        self.h[(i - 1) * (self.n + 1) + j]
    }

    pub fn v(&self, i: usize, j: usize) -> bool {
        self.v[i * self.n + j - 1]
    }

    fn set_h(&mut self, i: usize, j: usize, x: bool) {
        let n = self.n;
        self.h[(i - 1) * (n + 1) + j] = x;
    }

    fn set_v(&mut self, i: usize, j: usize, x: bool) {
        let n = self.n;
        self.v[i * n + j - 1] = x;
    }

    fn occupied(&self, e: Edge) -> bool {
        match e {
            Edge::H(i, j) => self.h(i, j),
            Edge::V(i, j) => self.v(i, j),
        }
    }

    fn degree(&self, i: usize, j: usize) -> usize {
        [self.h(i, j - 1), self.h(i, j), self.v(i - 1, j), self.v(i, j)].iter().filter(|&&x| x).count()
    }

    /// Degree two everywhere, the alternating boundary and both mirror
    /// symmetries.
    pub fn check(&self) -> Result<()> {
        let n = self.n;
        let s = parity_offset(n);
        let bad = |what: String| Err(Error::BijectionBroken(what));
        for i in 1..=n {
            for j in 1..=n {
                if self.degree(i, j) != 2 {
                    return bad(format!("degree at ({i},{j})"));
                }
            }
        }
        for k in 1..=n {
            let side = (k + s) % 2 == 0;
            if self.h(k, 0) != side || self.h(k, n) != side || self.v(0, k) == side || self.v(n, k) == side {
                return bad(format!("boundary at {k}"));
            }
        }
        for i in 1..=n {
            for j in 0..=n {
                if self.h(i, j) != self.h(i, n - j) || self.h(i, j) != self.h(n + 1 - i, j) {
                    return bad(format!("symmetry at horizontal edge ({i},{j})"));
                }
            }
        }
        for i in 0..=n {
            for j in 1..=n {
                if self.v(i, j) != self.v(n - i, j) || self.v(i, j) != self.v(i, n + 1 - j) {
                    return bad(format!("symmetry at vertical edge ({i},{j})"));
                }
            }
        }
        Ok(())
    }

    /// Follow the path entering through the external edge `start` until it
    /// leaves the grid again.
    fn trace(&self, start: Edge) -> Edge {
        let n = self.n;
        let inside = |i: usize, j: usize| (1..=n).contains(&i) && (1..=n).contains(&j);
        let ends = |e: Edge| match e {
            Edge::H(i, j) => [(i, j), (i, j + 1)],
            Edge::V(i, j) => [(i, j), (i + 1, j)],
        };
        let mut prev = start;
        let mut p = *ends(start).iter().find(|&&(i, j)| inside(i, j)).expect("external edge touches the grid");
        loop {
            let (i, j) = p;
            let next = [Edge::H(i, j - 1), Edge::H(i, j), Edge::V(i - 1, j), Edge::V(i, j)]
                .into_iter()
                .find(|&e| e != prev && self.occupied(e))
                .expect("degree two");
            let q = *ends(next).iter().find(|&&x| x != p).unwrap();
            if !inside(q.0, q.1) {
                return next;
            }
            prev = next;
            p = q;
        }
    }
}

impl fmt::Debug for FplConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FplConfig({})", serde_json::to_string(&FplJson::from(self)).unwrap())
    }
}

/// Rows of `0`/`1` occupations: `horizontal[i-1][j]` and `vertical[i][j-1]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FplJson {
    pub n: usize,
    pub horizontal: Vec<String>,
    pub vertical: Vec<String>,
}

impl From<&FplConfig> for FplJson {
    fn from(c: &FplConfig) -> Self {
        let bits = |xs: &[bool]| xs.iter().map(|&x| if x { '1' } else { '0' }).collect::<String>();
        FplJson {
            n: c.n,
            horizontal: c.h.chunks(c.n + 1).map(bits).collect(),
            vertical: c.v.chunks(c.n).map(bits).collect(),
        }
    }
}

impl TryFrom<&FplJson> for FplConfig {
    type Error = Error;

    fn try_from(j: &FplJson) -> Result<Self> {
        let n = j.n;
        let parse = |rows: &[String], r: usize, c: usize| -> Result<Vec<bool>> {
            if rows.len() != r || rows.iter().any(|s| s.len() != c) {
                return Err(Error::Parse(format!("expected {r} rows of {c} bits")));
            }
            rows.iter()
                .flat_map(|s| s.chars())
                .map(|ch| match ch {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Parse(format!("bad bit {ch:?}"))),
                })
                .collect()
        };
        let c = FplConfig { n, h: parse(&j.horizontal, n, n + 1)?, v: parse(&j.vertical, n + 1, n)? };
        c.check()?;
        Ok(c)
    }
}

/// All HV-symmetric FPLs of odd size `n`. Only the top-left quadrant
/// (central row and column included) is searched; mirror images fill the
/// rest.
pub fn enumerate_hvsfpl(n: usize) -> Vec<FplConfig> {
    assert!(n % 2 == 1 && n >= 3, "size must be odd");
    let m = (n + 1) / 2;
    let s = parity_offset(n);
    let mut q = FplConfig::blank(n);
    for k in 1..=m {
        q.set_h(k, 0, (k + s) % 2 == 0);
        q.set_v(0, k, (k + s) % 2 == 1);
    }
    let mut out = Vec::new();
    search(&mut q, m, 0, &mut out);
    out.sort();
    out
}

fn search(q: &mut FplConfig, m: usize, k: usize, out: &mut Vec<FplConfig>) {
    if k == m * m {
        out.push(unfold(q, m));
        return;
    }
    let (i, j) = (k / m + 1, k % m + 1);
    let left = q.h(i, j - 1) as usize;
    let up = q.v(i - 1, j) as usize;
    // on the axes the mirror edge equals the one already placed
    let rights = if j == m { left..=left } else { 0..=1 };
    for r in rights {
        let downs = if i == m { up..=up } else { 0..=1 };
        for d in downs {
            let total = left + up + r + d;
            if total != 2 {
                continue;
            }
            if j < m {
                q.set_h(i, j, r == 1);
            }
            if i < m {
                q.set_v(i, j, d == 1);
            }
            search(q, m, k + 1, out);
        }
    }
}

fn unfold(q: &FplConfig, m: usize) -> FplConfig {
    let n = q.n;
    let mut c = FplConfig::blank(n);
    for i in 1..=n {
        let ii = if i <= m { i } else { n + 1 - i };
        for j in 0..=n {
            let jj = if j < m { j } else { n - j };
            c.set_h(i, j, q.h(ii, jj));
        }
    }
    for i in 0..=n {
        let ii = if i < m { i } else { n - i };
        for j in 1..=n {
            let jj = if j <= m { j } else { n + 1 - j };
            c.set_v(i, j, q.v(ii, jj));
        }
    }
    c
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn from_rows(rows: &[Vec<i8>]) -> Self {
        let n = rows.len();
        Asm { n, entries: rows.iter().flatten().copied().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 1-based entry.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + j - 1]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Row and column sums 1 with alternating nonzero entries.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        let line_ok = |xs: Vec<i8>| {
            let nz: Vec<i8> = xs.into_iter().filter(|&x| x != 0).collect();
            nz.iter().map(|&x| x as i32).sum::<i32>() == 1
                && nz.first() == Some(&1)
                && nz.windows(2).all(|w| w[0] != w[1])
        };
        (1..=n).all(|i| line_ok((1..=n).map(|j| self.get(i, j)).collect()))
            && (1..=n).all(|j| line_ok((1..=n).map(|i| self.get(i, j)).collect()))
    }

    pub fn is_hv_symmetric(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| (1..=n).all(|j| self.get(i, j) == self.get(n + 1 - i, j) && self.get(i, j) == self.get(i, n + 1 - j)))
    }

    pub fn count_minus_ones(&self) -> usize {
        self.entries.iter().filter(|&&x| x == -1).count()
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows() {
            let line: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Straight vertices are the nonzero entries; the sign depends on the
/// direction and on the checkerboard parity.
pub fn fpl_to_asm(c: &FplConfig) -> Result<Asm> {
    let n = c.n;
    let s = parity_offset(n);
    let mut entries = vec![0i8; n * n];
    for i in 1..=n {
        for j in 1..=n {
            let odd = (i + j + s) % 2 == 1;
            let e = if c.h(i, j - 1) && c.h(i, j) {
                if odd { 1 } else { -1 }
            } else if c.v(i - 1, j) && c.v(i, j) {
                if odd { -1 } else { 1 }
            } else {
                0
            };
            entries[(i - 1) * n + j - 1] = e;
        }
    }
    let a = Asm { n, entries };
    if !a.is_valid() {
        return Err(Error::BijectionBroken(format!("not an ASM:\n{a:?}")));
    }
    Ok(a)
}

/// Partial row and column sums give the six-vertex arrows; occupation
/// follows from the arrow and the edge parity.
pub fn asm_to_fpl(a: &Asm) -> Result<FplConfig> {
    let n = a.n;
    let s = parity_offset(n);
    let mut c = FplConfig::blank(n);
    for i in 1..=n {
        let mut r = 0i32;
        for j in 0..=n {
            if j > 0 {
                r += a.get(i, j) as i32;
            }
            c.set_h(i, j, r == ((i + j + s) % 2) as i32);
        }
    }
    for j in 1..=n {
        let mut col = 0i32;
        for i in 0..=n {
            if i > 0 {
                col += a.get(i, j) as i32;
            }
            c.set_v(i, j, col != ((i + j + s) % 2) as i32);
        }
    }
    c.check()?;
    Ok(c)
}

/// Link pattern of size `(n−3)/2` read from the top-left quadrant.
///
/// The occupied external edges on the top side left of the centre (right to
/// left) and then on the left side above the centre (top to bottom) are the
/// terminals. Paired terminals give arcs; a path that leaves the quadrant
/// across the horizontal axis reaches its own mirror image and gives `'.'`.
/// The last terminal always crosses and is dropped.
pub fn connectivity(c: &FplConfig) -> Result<LinkPattern> {
    let n = c.n;
    let m = (n + 1) / 2;
    let mut terminals: Vec<Edge> = (1..m).rev().map(|j| Edge::V(0, j)).filter(|&e| c.occupied(e)).collect();
    terminals.extend((1..m).map(|i| Edge::H(i, 0)).filter(|&e| c.occupied(e)));
    let l = (n - 3) / 2;
    if terminals.len() != l + 1 {
        return Err(Error::ConventionMismatch(format!("{} terminals for size {l}", terminals.len())));
    }
    let mut out = vec!['.'; l + 1];
    for (k, &t) in terminals.iter().enumerate() {
        let end = c.trace(t);
        if let Some(k2) = terminals.iter().position(|&x| x == end) {
            out[k.min(k2)] = '(';
            out[k.max(k2)] = ')';
        }
    }
    if out[l] != '.' {
        return Err(Error::ConventionMismatch("last terminal does not cross the axis".into()));
    }
    let enc: String = out[..l].iter().collect();
    enc.parse().map_err(|_| Error::ConventionMismatch(format!("crossing pattern {enc}")))
}

/// Number of `−1` entries in the row just below the central row, strictly
/// left of the central column.
pub fn refined_weight(a: &Asm) -> usize {
    let m = (a.n + 1) / 2;
    (1..m).filter(|&j| a.get(m + 1, j) == -1).count()
}

/// `⌊k/2⌋` where `k` counts paths crossing the horizontal axis left of the
/// centre and going straight down two more steps.
pub fn path_weight(c: &FplConfig) -> usize {
    let m = (c.n + 1) / 2;
    let k = (1..m).filter(|&j| c.v(m - 1, j) && c.v(m, j) && c.v(m + 1, j)).count();
    k / 2
}

/// Per-class counts and `a`-polynomials in canonical pattern order.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub size: usize,
    pub patterns: Vec<LinkPattern>,
    pub counts: Vec<u64>,
    pub polys: Vec<UPoly>,
    /// Configurations where the path statistic differs from the `−1` count.
    pub statistic_disagreements: usize,
}

pub fn classify(configs: &[FplConfig]) -> Result<ClassTable> {
    let n = configs.first().map_or(5, |c| c.n);
    let l = (n - 3) / 2;
    let basis = Basis::new(l);
    let mut counts = vec![0u64; basis.dim()];
    let mut powers: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); basis.dim()];
    let mut disagree = 0;
    for c in configs {
        let p = connectivity(c)?;
        let k = basis.index_of(&p).ok_or_else(|| Error::ConventionMismatch(p.encoding()))?;
        let a = fpl_to_asm(c)?;
        let w = refined_weight(&a);
        if w != path_weight(c) {
            disagree += 1;
        }
        counts[k] += 1;
        *powers[k].entry(w).or_default() += 1;
    }
    let polys = powers
        .iter()
        .map(|m| {
            m.iter().fold(UPoly::zero(), |acc, (&k, &c)| acc.add(&UPoly::monomial(Q::from_int(c as i64), k)))
        })
        .collect();
    Ok(ClassTable { size: l, patterns: basis.patterns().to_vec(), counts, polys, statistic_disagreements: disagree })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "VERIFIED")]
    Verified,
    #[serde(rename = "REFUTED")]
    Refuted,
}

impl Verdict {
    pub fn of(ok: bool) -> Self {
        if ok {
            Verdict::Verified
        } else {
            Verdict::Refuted
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "VERIFIED",
            Verdict::Refuted => "REFUTED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassVerdict {
    pub pattern: LinkPattern,
    pub fpl_count: u64,
    pub ground_state_at_one: String,
    pub count: Verdict,
    pub fpl_poly: String,
    pub ground_state_poly: String,
    pub refined: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub size: usize,
    pub n: usize,
    pub total: u64,
    pub hvsasm: String,
    pub total_verdict: Verdict,
    pub classes: Vec<ClassVerdict>,
    pub statistic_disagreements: usize,
}

impl ConjectureReport {
    pub fn counts_verified(&self) -> bool {
        self.total_verdict == Verdict::Verified && self.classes.iter().all(|c| c.count == Verdict::Verified)
    }

    pub fn refined_verified(&self) -> bool {
        self.classes.iter().all(|c| c.refined == Verdict::Verified)
    }
}

/// Compare HVSFPL classes of size `2L+3` with the ground state of size `L`.
pub fn verify_conjectures(l: usize) -> Result<ConjectureReport> {
    let n = 2 * l + 3;
    let table = classify(&enumerate_hvsfpl(n))?;
    let gs = crate::groundstate::ground_state(l)?;
    let total: u64 = table.counts.iter().sum();
    let hv = crate::sumrule::hvsasm_count(l);
    let classes = table
        .patterns
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let g = &gs.components[k];
            let at_one = g.eval(&Q::one());
            ClassVerdict {
                pattern: p.clone(),
                fpl_count: table.counts[k],
                ground_state_at_one: at_one.to_string(),
                count: Verdict::of(at_one == Q::from_int(table.counts[k] as i64)),
                fpl_poly: table.polys[k].fmt_var("a"),
                ground_state_poly: g.fmt_var("a"),
                refined: Verdict::of(*g == table.polys[k]),
            }
        })
        .collect();
    Ok(ConjectureReport {
        size: l,
        n,
        total,
        hvsasm: hv.to_string(),
        total_verdict: Verdict::of(hv == total.into()),
        classes,
        statistic_disagreements: table.statistic_disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_sizes() {
        let c5 = enumerate_hvsfpl(5);
        assert_eq!(c5.len(), 1);
        let c7 = enumerate_hvsfpl(7);
        assert_eq!(c7.len(), 2);
        for c in &c7 {
            c.check().unwrap();
            let a = fpl_to_asm(c).unwrap();
            assert!(a.is_hv_symmetric());
            assert_eq!(&asm_to_fpl(&a).unwrap(), c);
        }
        let weights: Vec<usize> = c7.iter().map(|c| refined_weight(&fpl_to_asm(c).unwrap())).collect();
        let mut w = weights.clone();
        w.sort();
        assert_eq!(w, vec![0, 1]);
    }

    #[test]
    fn permutation_matrix_has_no_weight() {
        let rows: Vec<Vec<i8>> = (0..7).map(|i| (0..7).map(|j| i8::from(i == j)).collect()).collect();
        let a = Asm::from_rows(&rows);
        assert!(a.is_valid());
        assert!(!a.is_hv_symmetric());
        assert_eq!(refined_weight(&a), 0);
    }

    #[test]
    fn size_five_is_the_diamond() {
        let a = Asm::from_rows(&[
            vec![0, 0, 1, 0, 0],
            vec![0, 1, -1, 1, 0],
            vec![1, -1, 1, -1, 1],
            vec![0, 1, -1, 1, 0],
            vec![0, 0, 1, 0, 0],
        ]);
        assert!(a.is_valid() && a.is_hv_symmetric());
        assert_eq!(vec![asm_to_fpl(&a).unwrap()], enumerate_hvsfpl(5));
        assert_eq!(connectivity(&enumerate_hvsfpl(5)[0]).unwrap().encoding(), ".");
    }

    #[test]
    fn invalid_matrix_is_rejected() {
        let a = Asm::from_rows(&[vec![1, 0], vec![1, 0]]);
        assert!(!a.is_valid());
    }

    #[test]
    fn json_round_trip() {
        let c = &enumerate_hvsfpl(9)[3];
        let j = FplJson::from(c);
        let back = FplConfig::try_from(&j).unwrap();
        assert_eq!(&back, c);
        let mut broken = j.clone();
        let flip = if broken.horizontal[0].starts_with('1') { "0" } else { "1" };
        broken.horizontal[0].replace_range(0..1, flip);
        assert!(FplConfig::try_from(&broken).is_err());
    }
}
