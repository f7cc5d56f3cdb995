use std::io::Write;
use std::path::Path;

use fh_diagram::diagram::{
    contains, invert, map_point, phi_minus, phi_plus, slice, X_FLAT_ISOSCELES, X_MAX,
};
use fh_diagram::inequalities::{empirical_sharp_constants, verify_batch};
use fh_diagram::sampling::{sample_grid, sample_random};
use fh_diagram::{DiagramPoint, Error, Execution, Triangle};

use crate::args::{
    BoundsArgs, Cli, Command, Format, InvertArgs, PlotArgs, SampleArgs, SliceArgs, VerifyArgs,
};
use crate::csvio::{self, report_fields, InputRow, REPORT_HEADER};
use crate::error::{CliError, CliResult};
use crate::numfmt::{sig, CSV_DIGITS, TEXT_DIGITS};
use crate::svg::{diagram_svg, slice_svg, Overlay};

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Sample(a) => cmd_sample(a),
        Command::Slice(a) => cmd_slice(a),
        Command::Invert(a) => cmd_invert(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Plot(a) => cmd_plot(a),
    }
}

/// Run `f` against the output file, or stdout when no path is given.
fn with_output<F>(path: Option<&Path>, f: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> CliResult<()>,
{
    match path {
        Some(p) => {
            let mut w = csvio::create(p)?;
            f(&mut w)?;
            w.flush().map_err(|source| CliError::Io {
                path: p.to_path_buf(),
                source,
            })
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock)?;
            lock.flush()?;
            Ok(())
        }
    }
}

fn pick_format(
    requested: Option<Format>,
    default: Format,
    allowed: &[Format],
    cmd: &str,
) -> CliResult<Format> {
    let f = requested.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(
            format!("{cmd} does not support --format {f:?}").to_lowercase(),
        ))
    }
}

fn check_tol(tol: f64) -> CliResult<()> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--tol must be a nonnegative number, got {tol}"
        )))
    }
}

fn to_usize(v: u64, name: &str) -> CliResult<usize> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("{name} is too large: {v}")))
}

pub fn cmd_sample(a: SampleArgs) -> CliResult<()> {
    let format = pick_format(a.format, Format::Csv, &[Format::Csv, Format::Svg], "sample")?;
    check_tol(a.tol)?;
    let samples = if a.grid {
        if a.nx < 2 || a.ny < 1 {
            return Err(CliError::Usage(format!(
                "--grid needs --nx >= 2 and --ny >= 1, got {} and {}",
                a.nx, a.ny
            )));
        }
        sample_grid(to_usize(a.nx, "--nx")?, to_usize(a.ny, "--ny")?)?
    } else {
        if a.n < 1 {
            return Err(CliError::Usage("-n must be at least 1".into()));
        }
        sample_random(to_usize(a.n, "-n")?, a.seed)?
    };
    with_output(a.output.as_deref(), |w| match format {
        Format::Svg => {
            let overlay = Overlay {
                points: samples.points().collect(),
                label: format!("{}, seed {}", samples.strategy.describe(), samples.seed),
                tol: a.tol,
            };
            w.write_all(diagram_svg(Some(&overlay))?.as_bytes())?;
            Ok(())
        }
        _ => csvio::write_samples(w, &samples),
    })?;
    eprintln!(
        "wrote {} samples: {}",
        samples.len(),
        samples.strategy.describe()
    );
    Ok(())
}

pub fn cmd_slice(a: SliceArgs) -> CliResult<()> {
    let format = pick_format(
        a.format,
        Format::Text,
        &[Format::Text, Format::Csv],
        "slice",
    )?;
    let s = slice(a.x)?;
    let f = |v: f64| sig(v, TEXT_DIGITS);
    let intervals = s
        .z_intervals
        .iter()
        .map(|&(lo, hi)| format!("[{}, {}]", f(lo), f(hi)))
        .collect::<Vec<_>>()
        .join(" U ");
    with_output(a.output.as_deref(), |w| {
        match format {
            Format::Csv => {
                writeln!(w, "X,y_min,y_max,z_lo,z_hi,z_crit_1,z_crit_2,z_intervals")?;
                let cells = [
                    s.x, s.y_min, s.y_max, s.z_lo, s.z_hi, s.z_crit_1, s.z_crit_2,
                ]
                .map(|v| sig(v, CSV_DIGITS));
                let iv = s
                    .z_intervals
                    .iter()
                    .map(|&(lo, hi)| format!("{}:{}", sig(lo, CSV_DIGITS), sig(hi, CSV_DIGITS)))
                    .collect::<Vec<_>>()
                    .join(";");
                writeln!(w, "{},{iv}", cells.join(","))?;
            }
            _ => {
                writeln!(w, "X = {}", f(s.x))?;
                writeln!(w, "y_min = {}", f(s.y_min))?;
                writeln!(w, "y_max = {}", f(s.y_max))?;
                writeln!(w, "z_intervals = {intervals}")?;
                writeln!(w, "z_lo = {}", f(s.z_lo))?;
                writeln!(w, "z_hi = {}", f(s.z_hi))?;
                writeln!(w, "z_crit_1 = {}", f(s.z_crit_1))?;
                writeln!(w, "z_crit_2 = {}", f(s.z_crit_2))?;
            }
        }
        Ok(())
    })
}

pub fn cmd_invert(a: InvertArgs) -> CliResult<()> {
    let format = pick_format(
        a.format,
        Format::Text,
        &[Format::Text, Format::Csv],
        "invert",
    )?;
    check_tol(a.tol)?;
    let p = DiagramPoint::new(a.x, a.y);
    if !contains(p, a.tol) {
        return Err(Error::NotInDiagram { x: a.x, y: a.y }.into());
    }
    // Snap into the closed diagram so tolerances looser than the library
    // default still invert.
    let x = a.x.clamp(0.0, X_MAX);
    let s = slice(x)?;
    let t = invert(DiagramPoint::new(x, a.y.clamp(s.y_min, s.y_max)))?;
    let q = map_point(&t);
    let [ta, tb, tc] = t.sides();
    with_output(a.output.as_deref(), |w| {
        match format {
            Format::Csv => {
                writeln!(w, "a,b,c,X,Y,residual_X,residual_Y")?;
                let cells =
                    [ta, tb, tc, q.x, q.y, q.x - a.x, q.y - a.y].map(|v| sig(v, CSV_DIGITS));
                writeln!(w, "{}", cells.join(","))?;
            }
            _ => {
                let f = |v: f64| sig(v, TEXT_DIGITS);
                writeln!(w, "sides = {} {} {}", f(ta), f(tb), f(tc))?;
                writeln!(w, "perimeter = {}", f(t.perimeter()))?;
                writeln!(w, "X = {}", f(q.x))?;
                writeln!(w, "Y = {}", f(q.y))?;
                writeln!(w, "residual_X = {:e}", q.x - a.x)?;
                writeln!(w, "residual_Y = {:e}", q.y - a.y)?;
            }
        }
        Ok(())
    })
}

pub fn cmd_verify(a: VerifyArgs) -> CliResult<()> {
    let format = pick_format(
        a.format,
        Format::Csv,
        &[Format::Csv, Format::Text],
        "verify",
    )?;
    let rows: Vec<InputRow> = match &a.input {
        Some(path) => csvio::read_triangles(csvio::open(path)?, path)?,
        None => {
            if a.n < 1 {
                return Err(CliError::Usage("-n must be at least 1".into()));
            }
            sample_random(to_usize(a.n, "-n")?, a.seed)?
                .entries
                .into_iter()
                .enumerate()
                .map(|(i, (triangle, _))| InputRow {
                    row: i + 1,
                    triangle,
                    expected: None,
                })
                .collect()
        }
    };
    let triangles: Vec<Triangle> = rows.iter().map(|r| r.triangle).collect();
    let reports = verify_batch(&triangles, Execution::default());

    let mut violations = 0;
    let mut near = 0;
    with_output(a.output.as_deref(), |w| {
        if format == Format::Csv {
            writeln!(w, "{}", REPORT_HEADER.join(","))?;
        }
        for (row, report) in rows.iter().zip(&reports) {
            violations += report.violations().count();
            near += report.near_equalities().count();
            let cells = report_fields(row.row, report, row.expected);
            match format {
                Format::Csv => writeln!(w, "{}", cells.join(","))?,
                _ => writeln!(
                    w,
                    "row {}: sides ({}, {}, {}) X={} Y={} violations=[{}] near_equality=[{}]{}",
                    cells[0],
                    cells[1],
                    cells[2],
                    cells[3],
                    cells[4],
                    cells[5],
                    cells[6].replace(';', ", "),
                    cells[7].replace(';', ", "),
                    if cells[8].is_empty() {
                        String::new()
                    } else {
                        format!(" xy_residual={}", cells[8])
                    }
                )?,
            }
        }
        Ok(())
    })?;
    eprintln!(
        "checked {} triangles: {violations} violations, {near} near-equality records",
        rows.len()
    );
    if violations > 0 {
        return Err(CliError::Violations(violations));
    }
    Ok(())
}

pub fn cmd_bounds(a: BoundsArgs) -> CliResult<()> {
    let format = pick_format(
        a.format,
        Format::Text,
        &[Format::Text, Format::Csv],
        "bounds",
    )?;
    let f = |v: f64| sig(v, TEXT_DIGITS);
    match a.x {
        Some(x) => {
            let upper = phi_plus(x)?;
            let lower = if x <= X_FLAT_ISOSCELES {
                phi_minus(x)?
            } else {
                0.0
            };
            let (fh_upper, fh_lower) = (1.0 - 2.0 * x, 1.0 - 8.0 * x);
            with_output(a.output.as_deref(), |w| {
                match format {
                    Format::Csv => {
                        writeln!(w, "X,y_lower,y_upper,fh_upper,fh_lower")?;
                        let cells =
                            [x, lower, upper, fh_upper, fh_lower].map(|v| sig(v, CSV_DIGITS));
                        writeln!(w, "{}", cells.join(","))?;
                    }
                    _ => {
                        writeln!(w, "X = {}", f(x))?;
                        writeln!(w, "y_lower = {}", f(lower))?;
                        writeln!(w, "y_upper = {}", f(upper))?;
                        writeln!(w, "fh_upper = {}  (Y <= 1 - 2X)", f(fh_upper))?;
                        writeln!(w, "fh_lower = {}  (Y >= 1 - 8X)", f(fh_lower))?;
                    }
                }
                Ok(())
            })
        }
        None => {
            let (c_min, c_max) = empirical_sharp_constants(to_usize(a.n, "-n")?)?;
            with_output(a.output.as_deref(), |w| {
                match format {
                    Format::Csv => {
                        writeln!(w, "n_boundary,c_min,c_max")?;
                        writeln!(
                            w,
                            "{},{},{}",
                            a.n,
                            sig(c_min, CSV_DIGITS),
                            sig(c_max, CSV_DIGITS)
                        )?;
                    }
                    _ => {
                        writeln!(w, "n_boundary = {}", a.n)?;
                        writeln!(w, "c_min = {}  (Y <= 1 - c_min X)", f(c_min))?;
                        writeln!(w, "c_max = {}  (Y >= 1 - c_max X)", f(c_max))?;
                    }
                }
                Ok(())
            })
        }
    }
}

pub fn cmd_plot(a: PlotArgs) -> CliResult<()> {
    pick_format(a.format, Format::Svg, &[Format::Svg], "plot")?;
    check_tol(a.tol)?;
    let svg = if let Some(x) = a.slice {
        slice_svg(x)?
    } else if let Some(path) = &a.samples {
        let rows = csvio::read_triangles(csvio::open(path)?, path)?;
        let overlay = Overlay {
            points: rows.iter().map(|r| map_point(&r.triangle)).collect(),
            label: path.display().to_string(),
            tol: a.tol,
        };
        let escapees = overlay
            .points
            .iter()
            .filter(|p| !contains(**p, a.tol))
            .count();
        eprintln!(
            "overlay: {} samples, {escapees} outside the diagram at tol {}",
            overlay.points.len(),
            a.tol
        );
        diagram_svg(Some(&overlay))?
    } else {
        diagram_svg(None)?
    };
    with_output(Some(&a.output), |w| {
        w.write_all(svg.as_bytes())?;
        Ok(())
    })
}
