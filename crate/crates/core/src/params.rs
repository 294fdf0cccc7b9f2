use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ambient space `F_{q^m}^n` with `n = ell * eta`, viewed as `ell` blocks
/// of `m x eta` matrices over `F_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct Params {
    q: u64,
    m: u32,
    eta: u32,
    ell: u32,
}

impl Params {
    pub fn new(q: u64, m: u32, eta: u32, ell: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::invalid(format!("q must be at least 2, got {q}")));
        }
        for (name, v) in [("m", m), ("eta", eta), ("ell", ell)] {
            if v == 0 {
                return Err(Error::invalid(format!("{name} must be positive")));
            }
        }
        if ell.checked_mul(eta).is_none() {
            return Err(Error::invalid("n = ell * eta overflows"));
        }
        Ok(Params { q, m, eta, ell })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Code length `ell * eta`.
    pub fn n(&self) -> u32 {
        self.ell * self.eta
    }

    /// Largest rank a single block can have, `min(m, eta)`.
    pub fn mu(&self) -> u32 {
        self.m.min(self.eta)
    }

    /// Largest sum-rank weight, `ell * mu`.
    pub fn max_weight(&self) -> u32 {
        self.ell * self.mu()
    }
}

/// Serialized form; carries the derived `n` and `mu` for readers.
#[derive(Serialize, Deserialize)]
struct RawParams {
    q: u64,
    m: u32,
    eta: u32,
    ell: u32,
    n: u32,
    mu: u32,
}

impl From<Params> for RawParams {
    fn from(p: Params) -> Self {
        RawParams { q: p.q, m: p.m, eta: p.eta, ell: p.ell, n: p.n(), mu: p.mu() }
    }
}

impl TryFrom<RawParams> for Params {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        let p = Params::new(raw.q, raw.m, raw.eta, raw.ell)?;
        if p.n() != raw.n || p.mu() != raw.mu {
            return Err(Error::invalid("derived n or mu does not match q, m, eta, ell"));
        }
        Ok(p)
    }
}
