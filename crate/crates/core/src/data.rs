//! Embedded reference datasets and CSV ingestion.

use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    pub name: String,
    pub values: Vec<f64>,
    pub source: String,
}

const FAILURE_TIMES: [f64; 24] = [
    14.712, 32.644, 61.979, 65.521, 105.50, 114.60, 120.40, 138.50, 8.610, 11.741, 54.535, 55.047,
    58.928, 63.391, 105.18, 113.02, 2.998, 5.016, 15.628, 23.040, 27.851, 37.843, 38.050, 48.226,
];

const VINYL_CHLORIDE: [f64; 34] = [
    5.1, 1.2, 1.3, 0.6, 0.5, 2.4, 0.5, 1.1, 8.0, 0.8, 0.4, 0.6, 0.9, 0.4, 2.0, 0.5, 5.3, 3.2, 2.7,
    2.9, 2.5, 2.3, 1.0, 0.2, 0.1, 0.1, 1.8, 0.9, 2.0, 4.0, 6.8, 1.2, 0.4, 0.2,
];

const KARACHI_PRECIPITATION: [f64; 59] = [
    117.6, 157.7, 148.6, 11.4, 5.6, 63.6, 62.4, 11.8, 6.5, 54.9, 39.9, 16.8, 30.2, 38.4, 76.9,
    73.4, 85.0, 256.3, 24.9, 148.6, 160.5, 131.3, 77.0, 155.2, 217.2, 105.5, 166.8, 157.9, 73.6,
    291.4, 210.3, 315.7, 107.7, 33.3, 302.6, 159.1, 78.7, 33.2, 52.2, 92.7, 150.4, 43.7, 68.3,
    20.8, 179.4, 245.7, 19.5, 30.0, 270.4, 160.0, 96.3, 185.7, 429.3, 184.9, 262.5, 80.6, 138.2,
    28.0, 39.3,
];

const ELECTRONIC_COMPONENTS: [f64; 15] = [
    1.4, 5.1, 6.3, 10.8, 12.1, 18.5, 19.7, 22.2, 23.0, 30.6, 37.3, 46.3, 53.9, 59.8, 66.2,
];

/// Names accepted by [`builtin_dataset`].
pub const BUILTIN_NAMES: [&str; 4] = [
    "failure_times",
    "vinyl_chloride",
    "karachi_precipitation",
    "electronic_components",
];

pub fn builtin_dataset(name: &str) -> Result<Dataset> {
    let (values, source): (&[f64], &str) = match name {
        "failure_times" => (
            &FAILURE_TIMES,
            "Failure times of eight components at temperatures 100, 120 and 140 (Murthy, Xie and Jiang)",
        ),
        "vinyl_chloride" => (
            &VINYL_CHLORIDE,
            "Vinyl chloride concentrations (mg/l) from clean up-gradient monitoring wells (Bhaumik, Kapur and Gibbons)",
        ),
        "karachi_precipitation" => (
            &KARACHI_PRECIPITATION,
            "Annual maximum precipitation in Karachi, Pakistan, 1950-2009",
        ),
        "electronic_components" => (
            &ELECTRONIC_COMPONENTS,
            "Failure times (minutes) of 15 electronic components in an accelerated life test (Lawless)",
        ),
        other => return Err(Error::UnknownDataset(other.to_string())),
    };
    Ok(Dataset {
        name: name.to_string(),
        values: values.to_vec(),
        source: source.to_string(),
    })
}

/// Reads one column of a comma-separated file.
///
/// A header row is assumed when the first cell of the first record does not
/// parse as a number. `column` selects by header name; without it the first
/// column is used. Rows in errors are 1-based file lines.
pub fn load_csv(path: impl AsRef<Path>, column: Option<&str>) -> Result<Dataset> {
    let path = path.as_ref();
    let io_err = |e: std::io::Error| Error::Io {
        path: path.to_path_buf(),
        source: e,
    };
    let text = std::fs::read_to_string(path).map_err(io_err)?;

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse {
            row: i + 1,
            message: e.to_string(),
        })?;
        let line = rec.position().map_or(i + 1, |p| p.line() as usize);
        records.push((line, rec));
    }
    let has_header = records
        .first()
        .and_then(|(_, r)| r.get(0))
        .is_some_and(|cell| cell.parse::<f64>().is_err());

    let index = match column {
        None => 0,
        Some(name) => {
            let header = records.first().filter(|_| has_header).ok_or_else(|| {
                Error::Data(format!(
                    "column `{name}` requested but the file has no header"
                ))
            })?;
            header
                .1
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| Error::Data(format!("no column named `{name}`")))?
        }
    };

    let mut values = Vec::new();
    for (line, rec) in records.iter().skip(usize::from(has_header)) {
        if rec.iter().all(str::is_empty) {
            continue;
        }
        let cell = rec.get(index).ok_or_else(|| Error::Parse {
            row: *line,
            message: format!("missing column {}", index + 1),
        })?;
        let v: f64 = cell.parse().map_err(|_| Error::Parse {
            row: *line,
            message: format!("`{cell}` is not a number"),
        })?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Parse {
                row: *line,
                message: format!("{v} is not a positive real"),
            });
        }
        values.push(v);
    }
    if values.is_empty() {
        return Err(Error::Data(format!(
            "{} contains no observations",
            path.display()
        )));
    }
    let name = path
        .file_stem()
        .map_or_else(|| "data".to_string(), |s| s.to_string_lossy().into_owned());
    Ok(Dataset {
        name,
        values,
        source: path.display().to_string(),
    })
}

/// A builtin name, or else a CSV path.
pub fn resolve(reference: &str, column: Option<&str>) -> Result<Dataset> {
    if BUILTIN_NAMES.contains(&reference) {
        builtin_dataset(reference)
    } else if Path::new(reference).exists() {
        load_csv(reference, column)
    } else {
        Err(Error::UnknownDataset(reference.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    #[test]
    fn builtin_shapes() {
        let d1 = builtin_dataset("failure_times").unwrap();
        assert_eq!(d1.values.len(), 24);
        assert_eq!(
            d1.values.iter().cloned().fold(f64::INFINITY, f64::min),
            2.998
        );
        assert_eq!(d1.values.iter().cloned().fold(0.0, f64::max), 138.5);
        let d2 = builtin_dataset("vinyl_chloride").unwrap();
        assert_eq!((d2.values.len(), d2.values[0]), (34, 5.1));
        assert_eq!(d2.values.iter().cloned().fold(f64::INFINITY, f64::min), 0.1);
        assert_eq!(
            builtin_dataset("karachi_precipitation")
                .unwrap()
                .values
                .len(),
            59
        );
        let d4 = builtin_dataset("electronic_components").unwrap();
        assert_eq!(d4.values.len(), 15);
        assert!((d4.values.iter().sum::<f64>() - 413.2).abs() < 1e-9);
        assert!(matches!(
            builtin_dataset("nope"),
            Err(Error::UnknownDataset(_))
        ));
    }

    #[test]
    fn csv_headerless() {
        let f = write("1.0\n2.0\n");
        let d = load_csv(f.path(), None).unwrap();
        assert_eq!(d.values, vec![1.0, 2.0]);
        assert_eq!(d.name, f.path().file_stem().unwrap().to_string_lossy());
    }

    #[test]
    fn csv_with_header_and_column() {
        let f = write("time\n3\n4.5\n6\n");
        assert_eq!(load_csv(f.path(), None).unwrap().values.len(), 3);
        let f = write("id,time\n1,3\n2,4.5\n");
        assert_eq!(
            load_csv(f.path(), Some("time")).unwrap().values,
            vec![3.0, 4.5]
        );
        assert!(load_csv(f.path(), Some("other")).is_err());
    }

    #[test]
    fn csv_errors_name_the_row() {
        let f = write("time\n1.0\n-1.0\n");
        match load_csv(f.path(), None) {
            Err(Error::Parse { row, .. }) => assert_eq!(row, 3),
            other => panic!("{other:?}"),
        }
        let f = write("1.0\nabc\n");
        assert!(matches!(
            load_csv(f.path(), None),
            Err(Error::Parse { row: 2, .. })
        ));
        assert!(matches!(
            load_csv("/no/such/file.csv", None),
            Err(Error::Io { .. })
        ));
    }
}
