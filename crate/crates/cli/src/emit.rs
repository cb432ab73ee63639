//! CSV and JSON renderings of the sweeps. Output is byte-deterministic.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use fermatlab_core::explorer::{Conjecture1Row, NearMissScan};
use fermatlab_core::geometry::{LatticeCount, SweepRow};
use serde::Serialize;

use crate::error::CliError;
use crate::format::{round_sig, sig};

pub const GEOMETRY_HEADER: &str = "a,b,n,c,theta_deg,shape,in_S";
pub const LATTICE_HEADER: &str = "a,n_min,count,bound,sqrt2_count";
pub const NEARMISS_HEADER: &str = "a,b,c,n,defect,over";

pub fn geometry_csv(rows: &[SweepRow]) -> String {
    let mut out = format!("{GEOMETRY_HEADER}\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            sig(r.a),
            sig(r.b),
            sig(r.n),
            sig(r.c),
            r.theta_deg.map(sig).unwrap_or_default(),
            r.shape.as_str(),
            r.in_s
        ));
    }
    out
}

pub fn lattice_csv(n_min: f64, rows: &[(u64, LatticeCount)]) -> String {
    let mut out = format!("{LATTICE_HEADER}\n");
    for (a, l) in rows {
        out.push_str(&format!(
            "{a},{},{},{},{}\n",
            sig(n_min),
            l.count,
            l.bound,
            l.sqrt2_count
        ));
    }
    out
}

/// Near misses first (by defect), then any exact solutions with defect 0.
pub fn nearmiss_csv(scan: &NearMissScan) -> String {
    let mut out = format!("{NEARMISS_HEADER}\n");
    for m in &scan.misses {
        let (a, b, c) = m.triple.as_tuple();
        out.push_str(&format!("{a},{b},{c},{},{},{}\n", m.n, m.defect, m.over));
    }
    for s in &scan.solutions {
        let (a, b, c) = s.triple.as_tuple();
        out.push_str(&format!("{a},{b},{c},{},0,false\n", s.n));
    }
    out
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Conjecture1Json {
    a_max: u64,
    n_max: u32,
    rows: Vec<Conjecture1Entry>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Conjecture1Entry {
    a: u64,
    b: u64,
    c: u64,
    n: f64,
    relative_residual: f64,
    nearest_integer: u64,
    distance_to_integer: f64,
    integer_exponent: Option<u32>,
    excluded: bool,
}

pub fn conjecture1_json(a_max: u64, n_max: u32, rows: &[Conjecture1Row]) -> String {
    let doc = Conjecture1Json {
        a_max,
        n_max,
        rows: rows
            .iter()
            .map(|r| {
                let (a, b, c) = r.triple.as_tuple();
                Conjecture1Entry {
                    a,
                    b,
                    c,
                    n: round_sig(r.solution.n),
                    relative_residual: round_sig(r.solution.relative_residual),
                    nearest_integer: r.nearest_integer,
                    distance_to_integer: round_sig(r.distance_to_integer),
                    integer_exponent: r.integer_exponent,
                    excluded: r.excluded,
                }
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("rows serialize");
    s.push('\n');
    s
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn write_output(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(contents.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(CliError::Stdout)
        }
    }
}
