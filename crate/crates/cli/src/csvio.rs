//! CSV input and output: `a,b,c,X,Y` sample files and `a,b,c` triangle lists.

use std::io::{Read, Write};
use std::path::Path;

use fh_diagram::diagram::map_point;
use fh_diagram::{DiagramPoint, InequalityReport, SampleSet, Triangle};

use crate::error::{CliError, CliResult};
use crate::numfmt::{sig, CSV_DIGITS};

pub const SAMPLE_HEADER: [&str; 5] = ["a", "b", "c", "X", "Y"];

pub fn write_samples<W: Write>(out: W, samples: &SampleSet) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SAMPLE_HEADER).map_err(csv_write)?;
    for (t, p) in &samples.entries {
        let [a, b, c] = t.sides();
        w.write_record([a, b, c, p.x, p.y].map(|v| sig(v, CSV_DIGITS)))
            .map_err(csv_write)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_write(e: csv::Error) -> CliError {
    CliError::Write {
        source: std::io::Error::other(e),
    }
}

/// One parsed input row. `expected` carries the `X, Y` columns when the
/// file has five columns.
#[derive(Debug, Clone, PartialEq)]
pub struct InputRow {
    pub row: usize,
    pub triangle: Triangle,
    pub expected: Option<DiagramPoint>,
}

/// Read `a,b,c` or `a,b,c,X,Y` rows. A first line whose leading field is
/// not a number is treated as a header. Rows are numbered from 1,
/// excluding the header.
pub fn read_triangles<R: Read>(input: R, path: &Path) -> CliResult<Vec<InputRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(input);
    let parse_err = |row: usize, msg: String| CliError::Parse {
        path: path.to_path_buf(),
        row,
        msg,
    };

    let mut rows = Vec::new();
    let mut row = 0;
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| parse_err(row + 1, e.to_string()))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        if i == 0 && record.get(0).is_some_and(|f| f.parse::<f64>().is_err()) {
            continue;
        }
        row += 1;
        if record.len() != 3 && record.len() != 5 {
            return Err(parse_err(
                row,
                format!("expected 3 or 5 columns, found {}", record.len()),
            ));
        }
        let values = record
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .map_err(|_| parse_err(row, format!("not a number: {f:?}")))
            })
            .collect::<CliResult<Vec<f64>>>()?;
        let triangle = Triangle::new(values[0], values[1], values[2])
            .map_err(|e| parse_err(row, e.to_string()))?;
        let expected = (values.len() == 5).then(|| DiagramPoint::new(values[3], values[4]));
        rows.push(InputRow {
            row,
            triangle,
            expected,
        });
    }
    Ok(rows)
}

pub const REPORT_HEADER: [&str; 9] = [
    "row",
    "a",
    "b",
    "c",
    "X",
    "Y",
    "violations",
    "near_equality",
    "xy_residual",
];

/// Per-triangle verification row matching [`REPORT_HEADER`]. Inequality
/// names inside a cell are separated by `;`.
pub fn report_fields(
    row: usize,
    report: &InequalityReport,
    expected: Option<DiagramPoint>,
) -> [String; 9] {
    let t = &report.triangle;
    let p = map_point(t);
    let join = |names: Vec<&str>| names.join(";");
    let residual = expected
        .map(|e| sig((e.x - p.x).abs().max((e.y - p.y).abs()), CSV_DIGITS))
        .unwrap_or_default();
    let [a, b, c] = t.sides();
    [
        row.to_string(),
        sig(a, CSV_DIGITS),
        sig(b, CSV_DIGITS),
        sig(c, CSV_DIGITS),
        sig(p.x, CSV_DIGITS),
        sig(p.y, CSV_DIGITS),
        join(report.violations().map(|r| r.kind.name()).collect()),
        join(report.near_equalities().map(|r| r.kind.name()).collect()),
        residual,
    ]
}

pub fn open(path: &Path) -> CliResult<std::fs::File> {
    std::fs::File::open(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn create(path: &Path) -> CliResult<std::io::BufWriter<std::fs::File>> {
    std::fs::File::create(path)
        .map(std::io::BufWriter::new)
        .map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
}
