//! Plücker formulas for plane curves with nodes and cusps.
//!
//! Tacnodes enter as two nodes each; callers convert before calling.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PlueckerInvariants {
    pub d: i64,
    pub nu: i64,
    pub kappa: i64,
    /// Class: degree of the dual curve.
    pub m: i64,
    pub f: i64,
    pub b: i64,
    pub g: i64,
}

impl PlueckerInvariants {
    /// The same numbers read from the dual curve.
    pub fn dual(&self) -> PlueckerInvariants {
        PlueckerInvariants {
            d: self.m,
            nu: self.b,
            kappa: self.f,
            m: self.d,
            f: self.kappa,
            b: self.nu,
            g: self.g,
        }
    }

    /// Whether all four formulas hold.
    pub fn is_consistent(&self) -> bool {
        let PlueckerInvariants { d, nu, kappa, m, f, b, g } = *self;
        m == d * (d - 1) - 2 * nu - 3 * kappa
            && d == m * (m - 1) - 2 * b - 3 * f
            && f == 3 * d * (d - 2) - 6 * nu - 8 * kappa
            && g == arithmetic_genus(d) - nu - kappa
    }
}

/// `(d-1)(d-2)/2`.
pub fn arithmetic_genus(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

/// Class, flexes, bitangents and genus from degree, nodes and cusps.
pub fn dual_invariants(d: i64, nu: i64, kappa: i64) -> Result<PlueckerInvariants> {
    if d < 2 || nu < 0 || kappa < 0 {
        return Err(Error::InvalidArgument(format!("need d >= 2 and nu, kappa >= 0, got ({d}, {nu}, {kappa})")));
    }
    let m = d * (d - 1) - 2 * nu - 3 * kappa;
    let f = 3 * d * (d - 2) - 6 * nu - 8 * kappa;
    let twice_b = m * (m - 1) - d - 3 * f;
    let g = arithmetic_genus(d) - nu - kappa;
    let mut problems = Vec::new();
    for (name, v) in [("m", m), ("f", f), ("g", g)] {
        if v < 0 {
            problems.push(format!("{name} = {v} < 0"));
        }
    }
    if twice_b < 0 {
        problems.push(format!("2b = {twice_b} < 0"));
    } else if twice_b % 2 != 0 {
        problems.push(format!("b = {twice_b}/2 is not an integer"));
    }
    if !problems.is_empty() {
        return Err(Error::InfeasibleInvariants(problems.join("; ")));
    }
    Ok(PlueckerInvariants { d, nu, kappa, m, f, b: twice_b / 2, g })
}

/// Outcome of solving for nodes and cusps from degree, genus and class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NodeCuspSolution {
    Feasible {
        nu: i64,
        kappa: i64,
    },
    Infeasible {
        /// Unique solution of the linear system.
        nu: i64,
        kappa: i64,
        /// Two sides of the identity that fails, when one can be named.
        violated_identity: Option<(i64, i64)>,
        diagnostic: String,
    },
}

impl NodeCuspSolution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, NodeCuspSolution::Feasible { .. })
    }

    pub fn raw(&self) -> (i64, i64) {
        match *self {
            NodeCuspSolution::Feasible { nu, kappa } | NodeCuspSolution::Infeasible { nu, kappa, .. } => (nu, kappa),
        }
    }
}

/// Solves `nu + kappa = (d-1)(d-2)/2 - g` and `2 nu + 3 kappa = d(d-1) - m`.
pub fn solve_nodes_cusps(d: i64, g: i64, m: i64) -> Result<NodeCuspSolution> {
    if d < 2 || g < 0 || m < 2 {
        return Err(Error::InvalidArgument(format!("need d >= 2, g >= 0, m >= 2, got ({d}, {g}, {m})")));
    }
    let s = arithmetic_genus(d) - g;
    let t = d * (d - 1) - m;
    let kappa = t - 2 * s;
    let nu = 3 * s - t;
    if nu >= 0 && kappa >= 0 {
        return Ok(NodeCuspSolution::Feasible { nu, kappa });
    }
    let (violated_identity, diagnostic) = if s == 0 {
        (
            Some((m, d * (d - 1))),
            format!(
                "nu + kappa = 0 forces nu = kappa = 0, and then m = d(d-1) reads {m} = {}",
                d * (d - 1)
            ),
        )
    } else if s < 0 {
        (None, format!("nu + kappa = {s} is negative"))
    } else {
        (
            None,
            format!("nu + kappa = {s} and 2nu + 3kappa = {t} give (nu, kappa) = ({nu}, {kappa}), not both non-negative"),
        )
    };
    Ok(NodeCuspSolution::Infeasible { nu, kappa, violated_identity, diagnostic })
}
