//! Manifest schema: one identity instance per check.

use serde::{Deserialize, Serialize};

/// Whether both sides are compared in the bivariate ring or after an
/// x-specialization.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Bivariate,
    Specialized,
}

/// One catalog entry: an identity id, its parameters, the truncation order
/// (in q-units of the identity's own variable), the evaluation mode, and
/// the documented clearing factor both sides were multiplied by.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityInstance {
    pub id: String,
    pub order: i64,
    #[serde(default)]
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    /// i' of the partition generating function.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ip: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    /// Specialization point sign (+1 or -1).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<i8>,
    /// Specialization point exponent: x = sigma * q^j.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    /// Substitute q -> q^qsub before specializing (half/quarter lattice).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qsub: Option<i64>,
    /// Seed and count for randomized-argument checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<i64>,
    /// Harness self-test hook: adds q^e to the left side before comparing.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub debug_perturb: Option<i64>,
    /// What both sides were multiplied by, for the record.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clearing: Option<String>,
}

impl IdentityInstance {
    pub fn new(id: &str, order: i64) -> Self {
        IdentityInstance {
            id: id.to_string(),
            order,
            mode: Mode::Bivariate,
            t: None,
            m: None,
            p: None,
            l: None,
            k: None,
            i: None,
            ip: None,
            n: None,
            sigma: None,
            j: None,
            qsub: None,
            seed: None,
            count: None,
            debug_perturb: None,
            clearing: None,
        }
    }

    pub fn with_t(mut self, t: i64) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_l(mut self, l: i64) -> Self {
        self.l = Some(l);
        self
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_i(mut self, i: i64) -> Self {
        self.i = Some(i);
        self
    }

    pub fn with_point(mut self, qsub: i64, sigma: i8, j: i64) -> Self {
        self.mode = Mode::Specialized;
        self.qsub = Some(qsub);
        self.sigma = Some(sigma);
        self.j = Some(j);
        self
    }

    pub fn with_seed(mut self, seed: u64, count: i64) -> Self {
        self.seed = Some(seed);
        self.count = Some(count);
        self
    }

    pub fn with_clearing(mut self, c: &str) -> Self {
        self.clearing = Some(c.to_string());
        self
    }

    /// A human-readable one-line parameter summary.
    pub fn param_summary(&self) -> String {
        let mut parts = Vec::new();
        macro_rules! push {
            ($f:ident) => {
                if let Some(v) = self.$f {
                    parts.push(format!("{}={}", stringify!($f), v));
                }
            };
        }
        push!(t);
        push!(m);
        push!(p);
        push!(l);
        push!(k);
        push!(i);
        push!(ip);
        push!(n);
        push!(sigma);
        push!(j);
        push!(qsub);
        push!(count);
        parts.push(format!("order={}", self.order));
        parts.join(" ")
    }
}
