//! `dtwist <n> <action>`.

use std::io::{self, Write};

use clap::ValueEnum;
use jones_one::dtwist::{det_at_minus_one, jones_closed, pn, DoubleTwistIndex};
use jones_one::laurent::cyclotomic;
use jones_one::roots::{classify, find_roots, ClassifyOptions};
use jones_one::TermOrder;
use num_bigint::BigInt;

use crate::csv_out::{root_record, writer, ROOT_HEADER};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Action {
    /// Closed-form Jones polynomial.
    Jones,
    /// `P_n = t^(3n+3)(1 + t)(J_n - 1)`.
    Pn,
    /// Roots of `P_n` as CSV.
    Roots,
    /// Exact checks of `J_n(1)`, `J_n(-1)` and cyclotomic divisibility.
    Verify,
}

pub fn run(n: u64, action: Action, opts: &ClassifyOptions) -> Result<(), CliError> {
    let idx = DoubleTwistIndex::new(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = io::stdout().lock();
    match action {
        Action::Jones => writeln!(out, "{}", jones_closed(idx).render(TermOrder::Descending))?,
        Action::Pn => writeln!(out, "{}", pn(idx).render(TermOrder::Descending))?,
        Action::Roots => roots(idx, opts, &mut out)?,
        Action::Verify => verify(idx, &mut out)?,
    }
    Ok(())
}

fn roots(idx: DoubleTwistIndex, opts: &ClassifyOptions, out: &mut impl Write) -> Result<(), CliError> {
    let p = pn(idx);
    let report = find_roots(&p).map_err(|e| CliError::Failure(format!("roots of P_{idx}: {e}")))?;
    let opts = ClassifyOptions {
        minus_one_spurious: true,
        ..*opts
    };
    let name = format!("P_{idx}");
    let mut w = writer(out);
    w.write_record(ROOT_HEADER)?;
    for root in &report.roots {
        w.write_record(root_record(&name, root, &classify(root.z, &p, &opts)))?;
    }
    w.flush()?;
    Ok(())
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

fn verify(idx: DoubleTwistIndex, out: &mut impl Write) -> Result<(), CliError> {
    let j = jones_closed(idx);
    let p = pn(idx);
    let mut failed = 0;
    let mut check = |out: &mut dyn Write, ok: bool, line: String| -> io::Result<()> {
        if !ok {
            failed += 1;
        }
        writeln!(out, "{} {line}", if ok { "ok  " } else { "FAIL" })
    };

    let at_one = j.eval_at_one();
    check(out, at_one == BigInt::from(1), format!("J_{idx}(1) = {at_one}"))?;
    let at_minus_one = j.eval_at_minus_one();
    let expected = det_at_minus_one(idx);
    check(
        out,
        at_minus_one == BigInt::from(expected),
        format!("J_{idx}(-1) = {at_minus_one} (expected {expected})"),
    )?;
    for d in divisors(idx.get()) {
        let divides = p.is_divisible_by(&cyclotomic(d)).unwrap_or(false);
        check(out, divides, format!("Phi_{d} divides P_{idx}"))?;
    }
    if failed > 0 {
        return Err(CliError::Failure(format!(
            "{failed} check(s) failed for n = {idx}"
        )));
    }
    Ok(())
}
