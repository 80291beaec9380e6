use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::MAX_VARS;

/// Symbolic variable names used throughout the crate.
///
/// `U` is `q^{1/2}`: every power of `q` is written as an even power of `u`
/// and the shift `s = q³` as `u⁶`. `S` is only used when the shift is kept
/// free.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Spectral parameter `z_i`, 1-based.
    Z(u8),
    U,
    Zeta,
    A,
    TauPrime,
    S,
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::Z(i) => format!("z{i}"),
            Var::U => "u".into(),
            Var::Zeta => "zeta".into(),
            Var::A => "a".into(),
            Var::TauPrime => "tp".into(),
            Var::S => "s".into(),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Var {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "u" => Ok(Var::U),
            "zeta" => Ok(Var::Zeta),
            "a" => Ok(Var::A),
            "tp" => Ok(Var::TauPrime),
            "s" => Ok(Var::S),
            _ => s
                .strip_prefix('z')
                .and_then(|i| i.parse::<u8>().ok())
                .filter(|&i| i >= 1)
                .map(Var::Z)
                .ok_or_else(|| format!("unknown variable {s:?}")),
        }
    }
}

/// Ordered list of variables a polynomial is expressed in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Universe(Arc<[Var]>);

impl Universe {
    pub fn new(vars: &[Var]) -> Self {
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables supported");
        for (i, v) in vars.iter().enumerate() {
            assert!(!vars[..i].contains(v), "duplicate variable {v}");
        }
        Universe(vars.into())
    }

    /// `z_1..z_n` followed by `extra`.
    pub fn spectral(n: usize, extra: &[Var]) -> Self {
        let mut vars: Vec<Var> = (1..=n as u8).map(Var::Z).collect();
        vars.extend_from_slice(extra);
        Universe::new(&vars)
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.0.iter().position(|&w| w == v)
    }

    pub fn idx(&self, v: Var) -> usize {
        self.index_of(v).unwrap_or_else(|| panic!("variable {v} not in universe {:?}", self.0))
    }

    pub fn same(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}
