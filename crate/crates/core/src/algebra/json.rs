//! JSON form of Laurent polynomials:
//! `{"vars": [...], "terms": [{"exp": [...], "coeff": {...}}]}`.
//!
//! Rational coefficients serialize as `{"num", "den"}` strings, cyclotomic
//! ones as `{"a0", "a1"}`. Coefficients that are Laurent polynomials in `u`
//! are flattened so that `u` becomes an ordinary exponent column.

use serde::{Deserialize, Serialize};

use super::{Cyc6, Field, Mono, MultiLaurent, RatFunc, Universe, Var, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonCoeff {
    Rational { num: String, den: String },
    Cyclotomic { a0: String, a1: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coeff: JsonCoeff,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

fn q_json(q: &Q) -> JsonCoeff {
    JsonCoeff::Rational { num: q.numer().to_string(), den: q.denom().to_string() }
}

fn parse_q(s: &str) -> Result<Q> {
    s.parse::<Q>().map_err(Error::Parse)
}

fn json_q(c: &JsonCoeff) -> Result<Q> {
    match c {
        JsonCoeff::Rational { num, den } => parse_q(&format!("{num}/{den}")),
        JsonCoeff::Cyclotomic { a0, a1 } => {
            let v = Cyc6::new(parse_q(a0)?, parse_q(a1)?);
            if v.is_rational() {
                Ok(v.a0)
            } else {
                Err(Error::Parse("irrational coefficient in a rational polynomial".into()))
            }
        }
    }
}

/// Coefficient fields with a JSON encoding.
pub trait JsonField: Field {
    /// Extra variable folded into the coefficient, if any.
    const INNER: Option<Var>;

    /// Expand into `(inner exponent, coefficient)` pairs.
    fn flatten(&self) -> Result<Vec<(i32, JsonCoeff)>>;

    fn gather(parts: &[(i32, JsonCoeff)]) -> Result<Self>;
}

impl JsonField for Q {
    const INNER: Option<Var> = None;

    fn flatten(&self) -> Result<Vec<(i32, JsonCoeff)>> {
        Ok(vec![(0, q_json(self))])
    }

    fn gather(parts: &[(i32, JsonCoeff)]) -> Result<Self> {
        parts.iter().try_fold(Q::zero(), |acc, (_, c)| Ok(&acc + &json_q(c)?))
    }
}

impl JsonField for Cyc6 {
    const INNER: Option<Var> = None;

    fn flatten(&self) -> Result<Vec<(i32, JsonCoeff)>> {
        Ok(vec![(0, JsonCoeff::Cyclotomic { a0: self.a0.to_string(), a1: self.a1.to_string() })])
    }

    fn gather(parts: &[(i32, JsonCoeff)]) -> Result<Self> {
        let mut acc = Cyc6::zero();
        for (_, c) in parts {
            let v = match c {
                JsonCoeff::Rational { .. } => Cyc6::rational(json_q(c)?),
                JsonCoeff::Cyclotomic { a0, a1 } => Cyc6::new(parse_q(a0)?, parse_q(a1)?),
            };
            acc = acc.plus(&v);
        }
        Ok(acc)
    }
}

impl JsonField for RatFunc {
    const INNER: Option<Var> = Some(Var::U);

    fn flatten(&self) -> Result<Vec<(i32, JsonCoeff)>> {
        let terms = self
            .laurent_terms()
            .ok_or_else(|| Error::Unsupported(format!("non-Laurent coefficient {self}")))?;
        Ok(terms.iter().map(|(k, c)| (*k, q_json(c))).collect())
    }

    fn gather(parts: &[(i32, JsonCoeff)]) -> Result<Self> {
        let terms = parts.iter().map(|(k, c)| Ok((*k, json_q(c)?))).collect::<Result<Vec<_>>>()?;
        Ok(RatFunc::laurent(&terms))
    }
}

use super::Ring;

impl<C: JsonField> MultiLaurent<C> {
    pub fn to_json(&self) -> Result<LaurentJson> {
        let mut vars: Vec<String> = self.universe().vars().iter().map(|v| v.name()).collect();
        if let Some(v) = C::INNER {
            vars.push(v.name());
        }
        let n = self.nvars();
        let mut terms = Vec::new();
        for (m, c) in self.terms().iter().rev() {
            for (k, jc) in c.flatten()? {
                let mut exp = m.exps(n);
                if C::INNER.is_some() {
                    exp.push(k);
                }
                terms.push(TermJson { exp, coeff: jc });
            }
        }
        Ok(LaurentJson { vars, terms })
    }

    pub fn from_json(j: &LaurentJson) -> Result<Self> {
        let mut vars = j
            .vars
            .iter()
            .map(|s| s.parse::<Var>().map_err(Error::Parse))
            .collect::<Result<Vec<Var>>>()?;
        let inner = match C::INNER {
            Some(v) => match vars.iter().position(|&w| w == v) {
                Some(p) => {
                    vars.remove(p);
                    Some(p)
                }
                None => None,
            },
            None => None,
        };
        let u = Universe::new(&vars);
        let mut grouped: std::collections::BTreeMap<Mono, Vec<(i32, JsonCoeff)>> = Default::default();
        for t in &j.terms {
            if t.exp.len() != j.vars.len() {
                return Err(Error::Parse("exponent length does not match vars".into()));
            }
            let mut exp = t.exp.clone();
            let k = inner.map(|p| exp.remove(p)).unwrap_or(0);
            grouped.entry(Mono::from_exps(&exp)).or_default().push((k, t.coeff.clone()));
        }
        let terms = grouped
            .into_iter()
            .map(|(m, parts)| Ok((m, C::gather(&parts)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiLaurent::from_terms(&u, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_ratfunc_coefficients() {
        let u = Universe::spectral(2, &[Var::Zeta]);
        let c = RatFunc::laurent(&[(-2, Q::from_int(-1)), (1, Q::new(3, 2))]);
        let p = MultiLaurent::term(&u, &[(Var::Z(1), 1), (Var::Zeta, -1)], c)
            .plus(&MultiLaurent::constant(&u, RatFunc::one()));
        let j = p.to_json().unwrap();
        assert_eq!(j.vars, vec!["z1", "z2", "zeta", "u"]);
        let text = serde_json::to_string(&j).unwrap();
        let back: LaurentJson = serde_json::from_str(&text).unwrap();
        assert_eq!(MultiLaurent::<RatFunc>::from_json(&back).unwrap(), p);
    }

    #[test]
    fn round_trip_cyclotomic() {
        let u = Universe::spectral(1, &[]);
        let p = MultiLaurent::term(&u, &[(Var::Z(1), -1)], Cyc6::epsilon());
        let j = p.to_json().unwrap();
        assert!(matches!(j.terms[0].coeff, JsonCoeff::Cyclotomic { .. }));
        assert_eq!(MultiLaurent::<Cyc6>::from_json(&j).unwrap(), p);
    }
}
