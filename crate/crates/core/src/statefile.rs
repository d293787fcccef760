//! Plain-text state files: one `LABEL RE IM` triple per line, `#` comments.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{state_from_amplitudes, BasisLabel, Sector, StateVector};

/// Parses a state file. The sector comes from the labels, which must agree in
/// length and particle count. With `normalize` the state is scaled to unit
/// norm.
pub fn parse_state_file(text: &str, normalize: bool) -> Result<StateVector> {
    let mut entries: Vec<(BasisLabel, Complex64)> = Vec::new();
    let mut seen = HashSet::new();
    let mut shape: Option<(usize, usize, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [label, re, im] = fields[..] else {
            return Err(Error::parse(
                line_no,
                format!("expected `LABEL RE IM`, found {} fields", fields.len()),
            ));
        };
        let parsed = BasisLabel::parse(label)
            .map_err(|_| Error::parse(line_no, format!("label {label:?} must use only u, d, 0, D")))?;
        let number = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::parse(line_no, format!("{s:?} is not a finite number")))
        };
        let amp = Complex64::new(number(re)?, number(im)?);
        let this = (parsed.n_modes(), parsed.particle_count());
        match shape {
            None => shape = Some((this.0, this.1, line_no)),
            Some((n, _, first)) if n != this.0 => {
                return Err(Error::parse(
                    line_no,
                    format!("label {label} has {} modes, line {first} has {n}", this.0),
                ))
            }
            Some((_, m, first)) if m != this.1 => {
                return Err(Error::parse(
                    line_no,
                    format!("label {label} has {} particles, line {first} has {m}", this.1),
                ))
            }
            _ => {}
        }
        if !seen.insert(parsed.clone()) {
            return Err(Error::parse(line_no, format!("label {label} appears twice")));
        }
        entries.push((parsed, amp));
    }
    let (n, m, _) = shape.ok_or_else(|| Error::parse(0, "no amplitudes"))?;
    let sector = Sector::new(n, m).map_err(|e| Error::parse(0, e.to_string()))?;
    let state = state_from_amplitudes(&sector, entries, false)?;
    if normalize {
        state
            .normalized()
            .map_err(|_| Error::parse(0, "all amplitudes are zero"))
    } else {
        Ok(state)
    }
}

fn fmt_float(x: f64) -> String {
    // `{}` is the shortest representation that reads back exactly.
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x}")
    }
}

/// Writes the nonzero amplitudes in basis order. A zero state lists every
/// label so the sector survives the round trip.
pub fn write_state_file(state: &StateVector) -> String {
    let s = state.sector();
    let mut out = format!("# {} modes, {} particles\n", s.n_modes(), s.n_particles());
    // Exact zero tests: `norm_sqr` underflows for amplitudes below ~1e-154.
    let is_zero = |a: Complex64| a.re == 0.0 && a.im == 0.0;
    let all_zero = state.amplitudes().iter().all(|&a| is_zero(a));
    for (label, a) in state.iter() {
        if is_zero(a) && !all_zero {
            continue;
        }
        let _ = writeln!(out, "{label} {} {}", fmt_float(a.re), fmt_float(a.im));
    }
    out
}
