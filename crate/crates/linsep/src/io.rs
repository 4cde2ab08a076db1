//! Dataset and metadata file formats.
//!
//! * Dataset: CSV with a header row, `d` feature columns (`f0..f{d-1}`)
//!   followed by a `label` column holding `1` or `-1`. UTF-8, LF line
//!   endings. Floats are written in Rust's shortest round-trip decimal
//!   form, so a reloaded dataset is bit-identical to the one written.
//! * Generator reference: JSON with the hidden normal, shift vector,
//!   derived bias, seed, and generator name.
//! * Hyperplane: JSON with a normal and a bias. [`read_hyperplane_json`]
//!   also accepts a generator-reference file, treating its derived bias as
//!   the hyperplane bias.

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::datagen::GeneratorReference;
use crate::preprocess::{Hyperplane, Label, LabeledSample};
use crate::vector::DenseVector;

#[derive(Debug)]
pub enum IoError {
    Io(std::io::Error),
    /// Malformed content; `line` is 1-based, 0 for whole-file problems.
    Parse { line: usize, message: String },
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Io(e) => write!(f, "{e}"),
            IoError::Parse { line: 0, message } => write!(f, "{message}"),
            IoError::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for IoError {}

impl From<std::io::Error> for IoError {
    fn from(e: std::io::Error) -> Self {
        IoError::Io(e)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

/// Writes samples as CSV. All samples must share a dimension.
pub fn write_dataset_csv(path: &Path, samples: &[LabeledSample]) -> Result<(), IoError> {
    let d = samples.first().map_or(0, |s| s.features.dim());
    let mut out = BufWriter::new(fs::File::create(path)?);
    for i in 0..d {
        write!(out, "f{i},")?;
    }
    out.write_all(b"label\n")?;
    for s in samples {
        debug_assert_eq!(s.features.dim(), d);
        for value in s.features.values() {
            write!(out, "{value},")?;
        }
        writeln!(out, "{}", s.label)?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a dataset CSV written by [`write_dataset_csv`] (or any file with
/// the same layout).
pub fn read_dataset_csv(path: &Path) -> Result<Vec<LabeledSample>, IoError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_error(0, "empty dataset file"))?;
    let columns: Vec<&str> = header.split(',').collect();
    if columns.len() < 2 || columns[columns.len() - 1].trim() != "label" {
        return Err(parse_error(1, "header must list feature columns then 'label'"));
    }
    let d = columns.len() - 1;

    let mut samples = Vec::new();
    for (index, line) in lines {
        if line.is_empty() {
            continue;
        }
        let line_no = index + 1;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != d + 1 {
            return Err(parse_error(
                line_no,
                format!("expected {} fields, found {}", d + 1, fields.len()),
            ));
        }
        let mut features = Vec::with_capacity(d);
        for field in &fields[..d] {
            let value: f64 = field
                .trim()
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad float '{field}'")))?;
            if !value.is_finite() {
                return Err(parse_error(line_no, format!("non-finite feature '{field}'")));
            }
            features.push(value);
        }
        let label_field = fields[d].trim();
        let label_field = label_field.strip_prefix('+').unwrap_or(label_field);
        let label = label_field
            .parse::<i64>()
            .ok()
            .and_then(Label::from_int)
            .ok_or_else(|| parse_error(line_no, format!("bad label '{}'", fields[d])))?;
        samples.push(LabeledSample::new(
            DenseVector::new(features)
                .map_err(|e| parse_error(line_no, e.to_string()))?,
            label,
        ));
    }
    Ok(samples)
}

#[derive(Serialize, Deserialize)]
struct ReferenceFile {
    generator: String,
    seed: u64,
    normal: Vec<f64>,
    shift: Vec<f64>,
    derived_bias: f64,
}

/// Writes the generating hyperplane and the provenance needed to rebuild
/// the dataset (generator name and seed).
pub fn write_reference_json(
    path: &Path,
    reference: &GeneratorReference,
    seed: u64,
    generator: &str,
) -> Result<(), IoError> {
    let file = ReferenceFile {
        generator: generator.to_string(),
        seed,
        normal: reference.normal.values().to_vec(),
        shift: reference.shift.values().to_vec(),
        derived_bias: reference.derived_bias,
    };
    let json = serde_json::to_string_pretty(&file)
        .map_err(|e| parse_error(0, e.to_string()))?;
    fs::write(path, json + "\n")?;
    Ok(())
}

pub fn read_reference_json(path: &Path) -> Result<(GeneratorReference, u64, String), IoError> {
    let text = fs::read_to_string(path)?;
    let file: ReferenceFile =
        serde_json::from_str(&text).map_err(|e| parse_error(0, e.to_string()))?;
    let reference = GeneratorReference {
        normal: DenseVector::new(file.normal).map_err(|e| parse_error(0, e.to_string()))?,
        shift: DenseVector::new(file.shift).map_err(|e| parse_error(0, e.to_string()))?,
        derived_bias: file.derived_bias,
    };
    Ok((reference, file.seed, file.generator))
}

#[derive(Serialize, Deserialize)]
struct HyperplaneFile {
    normal: Vec<f64>,
    bias: f64,
}

/// Either a plain hyperplane file or a generator-reference file.
#[derive(Deserialize)]
#[serde(untagged)]
enum AnyPlaneFile {
    Plane(HyperplaneFile),
    Reference(ReferenceFile),
}

pub fn write_hyperplane_json(path: &Path, h: &Hyperplane) -> Result<(), IoError> {
    let file = HyperplaneFile { normal: h.normal.values().to_vec(), bias: h.bias };
    let json = serde_json::to_string_pretty(&file)
        .map_err(|e| parse_error(0, e.to_string()))?;
    fs::write(path, json + "\n")?;
    Ok(())
}

/// Reads a hyperplane from either JSON shape.
pub fn read_hyperplane_json(path: &Path) -> Result<Hyperplane, IoError> {
    let text = fs::read_to_string(path)?;
    let file: AnyPlaneFile =
        serde_json::from_str(&text).map_err(|e| parse_error(0, e.to_string()))?;
    let (normal, bias) = match file {
        AnyPlaneFile::Plane(p) => (p.normal, p.bias),
        AnyPlaneFile::Reference(r) => (r.normal, r.derived_bias),
    };
    Ok(Hyperplane::new(
        DenseVector::new(normal).map_err(|e| parse_error(0, e.to_string()))?,
        bias,
    ))
}
