//! `bkw equimodular` and `bkw accumulate`.

use std::io;

use jones_one::bkw::{find_equimodular_near, jw_zero_accumulation, EigenFamily};
use num_complex::Complex64;

use crate::csv_out::{num, writer};
use crate::{positive, CliError};

fn failure(e: impl std::fmt::Display) -> CliError {
    CliError::Failure(e.to_string())
}

pub fn parse_n_list(raw: &str) -> Result<Vec<u32>, CliError> {
    let list: Vec<u32> = raw
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("bad n list '{raw}': {e}")))?;
    if list.is_empty() || list.contains(&0) {
        return Err(CliError::Usage(format!(
            "n list '{raw}' must hold positive integers"
        )));
    }
    Ok(list)
}

pub fn equimodular(t0: Complex64, eps: f64, s_max: u32) -> Result<(), CliError> {
    if !positive(eps) || s_max == 0 {
        return Err(CliError::Usage("eps and s-max must be positive".into()));
    }
    let p = find_equimodular_near(t0, eps, s_max).map_err(failure)?;
    let mut w = writer(io::stdout().lock());
    w.write_record(["re", "im", "s", "residual", "dominant"])?;
    w.write_record([
        num(p.t_star.re),
        num(p.t_star.im),
        p.s.to_string(),
        num(p.residual),
        p.dominant_scaled.to_string(),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn accumulate(preset: &str, tstar: Complex64, n_list: &[u32], box_radius: f64) -> Result<(), CliError> {
    if !positive(box_radius) {
        return Err(CliError::Usage("box must be positive".into()));
    }
    let fam = EigenFamily::from_preset_name(preset)
        .map_err(|e| CliError::Usage(format!("preset '{preset}': {e}")))?;
    let rows = jw_zero_accumulation(&fam, tstar, n_list, box_radius).map_err(failure)?;
    let mut w = writer(io::stdout().lock());
    w.write_record(["n", "zero_re", "zero_im", "distance"])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            num(r.nearest_zero.re),
            num(r.nearest_zero.im),
            num(r.distance),
        ])?;
    }
    w.flush()?;
    Ok(())
}
