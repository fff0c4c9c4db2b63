//! CSV interchange format for generated datasets.
//!
//! Header `ID,<theme1>,<theme2>,...`, one row per student numbered from 0,
//! values printed with a fixed number of decimal places. The same file feeds
//! the `check`, `report`, and `plot` commands, so writing is deterministic
//! and reading reports the exact line and column of any malformed field.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::simulate::SampleSet;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: line {line}, column {column} ({header}): {message}")]
    Field {
        path: String,
        line: u64,
        column: usize,
        header: String,
        message: String,
    },
    #[error("{path}: {message}")]
    Format { path: String, message: String },
}

impl DatasetError {
    fn io(path: &str, source: std::io::Error) -> Self {
        DatasetError::Io {
            path: path.to_string(),
            source,
        }
    }

    fn format(path: &str, message: impl Into<String>) -> Self {
        DatasetError::Format {
            path: path.to_string(),
            message: message.into(),
        }
    }
}

/// Write sample sets as one CSV table. All sets must have the same length.
pub fn write_dataset(path: &Path, sets: &[SampleSet], decimals: u32) -> Result<(), DatasetError> {
    let name = path.display().to_string();
    let file = File::create(path).map_err(|e| DatasetError::io(&name, e))?;
    write_dataset_to(file, sets, decimals, &name)
}

fn write_dataset_to<W: Write>(
    writer: W,
    sets: &[SampleSet],
    decimals: u32,
    name: &str,
) -> Result<(), DatasetError> {
    if sets.is_empty() {
        return Err(DatasetError::format(name, "no sample sets to write"));
    }
    let rows = sets[0].len();
    if let Some(bad) = sets.iter().find(|s| s.len() != rows) {
        return Err(DatasetError::format(
            name,
            format!(
                "sample sets have unequal lengths: {:?} has {}, expected {}",
                bad.theme,
                bad.len(),
                rows
            ),
        ));
    }

    let mut csv = csv::Writer::from_writer(writer);
    let mut header = vec!["ID".to_string()];
    header.extend(sets.iter().map(|s| s.theme.clone()));
    csv.write_record(&header)
        .map_err(|e| DatasetError::format(name, e.to_string()))?;
    let mut record = Vec::with_capacity(sets.len() + 1);
    for row in 0..rows {
        record.clear();
        record.push(row.to_string());
        for set in sets {
            record.push(format!("{:.*}", decimals as usize, set.values()[row]));
        }
        csv.write_record(&record)
            .map_err(|e| DatasetError::format(name, e.to_string()))?;
    }
    csv.flush().map_err(|e| DatasetError::io(name, e))?;
    Ok(())
}

/// Read a dataset back into one [`SampleSet`] per theme column.
pub fn read_dataset(path: &Path) -> Result<Vec<SampleSet>, DatasetError> {
    let name = path.display().to_string();
    let file = File::open(path).map_err(|e| DatasetError::io(&name, e))?;
    read_dataset_from(file, &name)
}

fn read_dataset_from<R: Read>(reader: R, name: &str) -> Result<Vec<SampleSet>, DatasetError> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);

    let headers = csv
        .headers()
        .map_err(|e| DatasetError::format(name, e.to_string()))?
        .clone();
    if headers.is_empty() || &headers[0] != "ID" {
        return Err(DatasetError::format(
            name,
            "expected header starting with an ID column",
        ));
    }
    let themes: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();
    if themes.is_empty() {
        return Err(DatasetError::format(name, "no theme columns in header"));
    }

    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); themes.len()];
    let mut record = csv::StringRecord::new();
    loop {
        match csv.read_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => {
                let line = e
                    .position()
                    .map(|p| p.line())
                    .unwrap_or_else(|| record.position().map(|p| p.line()).unwrap_or(0));
                return Err(DatasetError::Field {
                    path: name.to_string(),
                    line,
                    column: 0,
                    header: "record".into(),
                    message: e.to_string(),
                });
            }
        }
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != themes.len() + 1 {
            return Err(DatasetError::Field {
                path: name.to_string(),
                line,
                column: record.len(),
                header: "record".into(),
                message: format!(
                    "expected {} fields, found {}",
                    themes.len() + 1,
                    record.len()
                ),
            });
        }
        let field_err = |column: usize, header: &str, message: String| DatasetError::Field {
            path: name.to_string(),
            line,
            column: column + 1,
            header: header.to_string(),
            message,
        };
        record[0]
            .trim()
            .parse::<u64>()
            .map_err(|_| field_err(0, "ID", format!("invalid row id {:?}", &record[0])))?;
        for (i, theme) in themes.iter().enumerate() {
            let raw = record[i + 1].trim();
            let value: f64 = raw
                .parse()
                .map_err(|_| field_err(i + 1, theme, format!("invalid value {raw:?}")))?;
            if !value.is_finite() {
                return Err(field_err(i + 1, theme, format!("non-finite value {raw:?}")));
            }
            columns[i].push(value);
        }
    }

    themes
        .into_iter()
        .zip(columns)
        .map(|(theme, values)| {
            SampleSet::new(theme, values).map_err(|e| DatasetError::format(name, e.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::{run_simulation, SimulationConfig};

    fn small_sets() -> Vec<SampleSet> {
        vec![
            SampleSet::new("alpha", vec![4.2515, 4.0794, 1.0]).unwrap(),
            SampleSet::new("beta", vec![3.7852, 5.0, 4.5]).unwrap(),
        ]
    }

    #[test]
    fn writes_interchange_layout() {
        let mut buf = Vec::new();
        write_dataset_to(&mut buf, &small_sets(), 4, "mem").unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "ID,alpha,beta\n0,4.2515,3.7852\n1,4.0794,5.0000\n2,1.0000,4.5000\n"
        );
    }

    #[test]
    fn round_trips_bit_exactly() {
        let config = SimulationConfig {
            n: 64,
            ..SimulationConfig::default()
        };
        let sets = run_simulation(&config).unwrap();
        let mut buf = Vec::new();
        write_dataset_to(&mut buf, &sets, config.decimals, "mem").unwrap();
        let back = read_dataset_from(buf.as_slice(), "mem").unwrap();
        assert_eq!(sets, back);
    }

    #[test]
    fn read_reports_line_and_column() {
        let data = "ID,alpha,beta\n0,4.2515,3.7852\n1,4.0x94,5.0000\n";
        let err = read_dataset_from(data.as_bytes(), "mem").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3"), "{msg}");
        assert!(msg.contains("column 2"), "{msg}");
        assert!(msg.contains("alpha"), "{msg}");
    }

    #[test]
    fn read_rejects_bad_shapes() {
        assert!(read_dataset_from("".as_bytes(), "mem").is_err());
        assert!(read_dataset_from("alpha,beta\n1,2\n".as_bytes(), "mem").is_err());
        assert!(read_dataset_from("ID\n0\n".as_bytes(), "mem").is_err());
        let ragged = "ID,alpha,beta\n0,1.0\n";
        assert!(read_dataset_from(ragged.as_bytes(), "mem").is_err());
        let bad_id = "ID,alpha\nx,1.0\n";
        assert!(read_dataset_from(bad_id.as_bytes(), "mem").is_err());
        let inf = "ID,alpha\n0,inf\n";
        assert!(read_dataset_from(inf.as_bytes(), "mem").is_err());
    }

    #[test]
    fn header_only_gives_empty_sets() {
        let sets = read_dataset_from("ID,alpha\n".as_bytes(), "mem").unwrap();
        assert_eq!(sets.len(), 1);
        assert!(sets[0].is_empty());
    }

    #[test]
    fn write_rejects_ragged_sets() {
        let sets = vec![
            SampleSet::new("a", vec![1.0]).unwrap(),
            SampleSet::new("b", vec![1.0, 2.0]).unwrap(),
        ];
        let mut buf = Vec::new();
        assert!(write_dataset_to(&mut buf, &sets, 4, "mem").is_err());
    }

    #[test]
    fn quoted_theme_names_round_trip() {
        let sets = vec![SampleSet::new("weird, name", vec![1.5]).unwrap()];
        let mut buf = Vec::new();
        write_dataset_to(&mut buf, &sets, 4, "mem").unwrap();
        let back = read_dataset_from(buf.as_slice(), "mem").unwrap();
        assert_eq!(back[0].theme, "weird, name");
    }
}
