//! Line-oriented `key = value` parameter files with unit suffixes.
//!
//! A value is a number optionally followed by a unit. Units are
//! case-sensitive and normalize to three base dimensions:
//!
//! * frequency → hertz: `Hz`, `kHz`, `MHz`, `GHz`
//! * data rate → bits per second: `b/s`, `kb/s`, `Mb/s`, `Gb/s` (decimal,
//!   bits), `B/s`, `KB/s`, `MB/s`, `GB/s` (decimal, bytes), `KiB/s`,
//!   `MiB/s`, `GiB/s` (binary, bytes)
//! * size → bits: `bit`/`bits`, `B`, `KB`, `MB`, `GB`, `KiB`, `MiB`, `GiB`
//!
//! A bare number is dimensionless and accepted wherever the consumer
//! expects it to already be in base units. `#` starts a comment.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    None,
    Frequency,
    DataRate,
    Size,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    /// Value in base units (Hz, bits/s, or bits).
    pub value: f64,
    pub dimension: Dimension,
}

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("line {line}: expected `key = value`, got `{text}`")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: bad number `{text}`")]
    BadNumber { line: usize, text: String },
    #[error("line {line}: unknown unit `{unit}`")]
    UnknownUnit { line: usize, unit: String },
    #[error("duplicate key `{key}` on line {line}")]
    DuplicateKey { key: String, line: usize },
    #[error("missing key `{key}`")]
    MissingKey { key: String },
    #[error("key `{key}` has dimension {got:?}, expected {want:?}")]
    WrongDimension { key: String, got: Dimension, want: Dimension },
    #[error("key `{key}` must be a nonnegative integer, got {value}")]
    NotACount { key: String, value: f64 },
}

const KIB: f64 = 1024.0;
const MIB: f64 = 1024.0 * 1024.0;
const GIB: f64 = 1024.0 * 1024.0 * 1024.0;

fn unit_table(unit: &str) -> Option<(f64, Dimension)> {
    use Dimension::*;
    Some(match unit {
        "Hz" => (1.0, Frequency),
        "kHz" => (1e3, Frequency),
        "MHz" => (1e6, Frequency),
        "GHz" => (1e9, Frequency),

        "bit/s" | "bits/s" | "b/s" => (1.0, DataRate),
        "kb/s" | "kbit/s" => (1e3, DataRate),
        "Mb/s" | "Mbit/s" => (1e6, DataRate),
        "Gb/s" | "Gbit/s" => (1e9, DataRate),
        "B/s" => (8.0, DataRate),
        "KB/s" | "kB/s" => (8e3, DataRate),
        "MB/s" => (8e6, DataRate),
        "GB/s" => (8e9, DataRate),
        "KiB/s" => (8.0 * KIB, DataRate),
        "MiB/s" => (8.0 * MIB, DataRate),
        "GiB/s" => (8.0 * GIB, DataRate),

        "bit" | "bits" => (1.0, Size),
        "B" => (8.0, Size),
        "KB" | "kB" => (8e3, Size),
        "MB" => (8e6, Size),
        "GB" => (8e9, Size),
        "KiB" => (8.0 * KIB, Size),
        "MiB" => (8.0 * MIB, Size),
        "GiB" => (8.0 * GIB, Size),
        _ => return Option::None,
    })
}

/// Parses one value, e.g. `11.7 GiB/s`, `187.5MHz`, `42`.
pub fn parse_quantity(text: &str) -> Result<Quantity, ParamError> {
    parse_quantity_at(text, 0)
}

fn parse_quantity_at(text: &str, line: usize) -> Result<Quantity, ParamError> {
    let text = text.trim();
    let split = text
        .char_indices()
        .find(|&(_, c)| !(c.is_ascii_digit() || matches!(c, '.' | '+' | '-' | 'e' | 'E') ))
        .map(|(i, _)| i)
        .unwrap_or(text.len());
    // A trailing exponent letter with no digits after it ("12e") parses as
    // part of the number and fails below, which is the error we want.
    let (num_s, unit_s) = text.split_at(split);
    let number: f64 = num_s
        .parse()
        .map_err(|_| ParamError::BadNumber { line, text: text.to_string() })?;
    let unit_s = unit_s.trim();
    if unit_s.is_empty() {
        return Ok(Quantity { value: number, dimension: Dimension::None });
    }
    let (scale, dimension) = unit_table(unit_s)
        .ok_or_else(|| ParamError::UnknownUnit { line, unit: unit_s.to_string() })?;
    Ok(Quantity { value: number * scale, dimension })
}

/// A parsed parameter file. Keys keep their first-seen order.
#[derive(Debug, Clone, Default)]
pub struct ParamFile {
    entries: Vec<(String, Quantity)>,
}

impl ParamFile {
    pub fn parse(text: &str) -> Result<ParamFile, ParamError> {
        let mut entries: Vec<(String, Quantity)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let body = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            if body.trim().is_empty() {
                continue;
            }
            let Some((key, value)) = body.split_once('=') else {
                return Err(ParamError::MalformedLine { line, text: raw.trim().to_string() });
            };
            let key = key.trim();
            if key.is_empty() || key.contains(char::is_whitespace) {
                return Err(ParamError::MalformedLine { line, text: raw.trim().to_string() });
            }
            if entries.iter().any(|(k, _)| k == key) {
                return Err(ParamError::DuplicateKey { key: key.to_string(), line });
            }
            entries.push((key.to_string(), parse_quantity_at(value, line)?));
        }
        Ok(ParamFile { entries })
    }

    pub fn get(&self, key: &str) -> Option<Quantity> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, q)| *q)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(k, _)| k.as_str())
    }

    fn dimensioned(&self, key: &str, want: Dimension) -> Result<f64, ParamError> {
        let q = self.get(key).ok_or_else(|| ParamError::MissingKey { key: key.to_string() })?;
        if q.dimension == want || q.dimension == Dimension::None {
            Ok(q.value)
        } else {
            Err(ParamError::WrongDimension { key: key.to_string(), got: q.dimension, want })
        }
    }

    /// Frequency in Hz; bare numbers are taken as Hz.
    pub fn frequency(&self, key: &str) -> Result<f64, ParamError> {
        self.dimensioned(key, Dimension::Frequency)
    }

    /// Data rate in bits/s; bare numbers are taken as bits/s.
    pub fn data_rate(&self, key: &str) -> Result<f64, ParamError> {
        self.dimensioned(key, Dimension::DataRate)
    }

    /// Size in bits; bare numbers are taken as bits.
    pub fn size_bits(&self, key: &str) -> Result<f64, ParamError> {
        self.dimensioned(key, Dimension::Size)
    }

    /// Dimensionless value.
    pub fn number(&self, key: &str) -> Result<f64, ParamError> {
        self.dimensioned(key, Dimension::None)
    }

    /// Dimensionless nonnegative integer.
    pub fn count(&self, key: &str) -> Result<u64, ParamError> {
        let v = self.number(key)?;
        if v < 0.0 || v.fract() != 0.0 || v > u64::MAX as f64 {
            return Err(ParamError::NotACount { key: key.to_string(), value: v });
        }
        Ok(v as u64)
    }

    pub fn count_or(&self, key: &str, default: u64) -> Result<u64, ParamError> {
        match self.get(key) {
            Some(_) => self.count(key),
            None => Ok(default),
        }
    }

    pub fn number_or(&self, key: &str, default: f64) -> Result<f64, ParamError> {
        match self.get(key) {
            Some(_) => self.number(key),
            None => Ok(default),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_units() {
        assert_eq!(
            parse_quantity("187.5 MHz").unwrap(),
            Quantity { value: 187.5e6, dimension: Dimension::Frequency }
        );
        assert_eq!(
            parse_quantity("11.7GiB/s").unwrap().value,
            11.7 * 8.0 * 1024.0 * 1024.0 * 1024.0
        );
        assert_eq!(parse_quantity("19.2 GB/s").unwrap().value, 19.2 * 8e9);
        assert_eq!(
            parse_quantity("4 GiB").unwrap(),
            Quantity { value: 4.0 * 8.0 * GIB, dimension: Dimension::Size }
        );
        assert_eq!(parse_quantity("42").unwrap().dimension, Dimension::None);
        assert_eq!(parse_quantity("1e9").unwrap().value, 1e9);
        assert!(parse_quantity("12 parsecs").is_err());
        assert!(parse_quantity("fast").is_err());
        assert!(parse_quantity("").is_err());
    }

    #[test]
    fn parses_file() {
        let text = "# platform\nf_clk = 187.5 MHz\nbw_if = 11.7 GiB/s\nn_pe_max = 9\n";
        let p = ParamFile::parse(text).unwrap();
        assert_eq!(p.frequency("f_clk").unwrap(), 187.5e6);
        assert_eq!(p.count("n_pe_max").unwrap(), 9);
        assert!(p.frequency("missing").is_err());
    }

    #[test]
    fn rejects_duplicates_and_dimension_mismatch() {
        assert_eq!(
            ParamFile::parse("a = 1\na = 2\n").unwrap_err(),
            ParamError::DuplicateKey { key: "a".into(), line: 2 }
        );
        let p = ParamFile::parse("f = 4 GiB\n").unwrap();
        assert!(matches!(p.frequency("f"), Err(ParamError::WrongDimension { .. })));
    }

    #[test]
    fn bare_numbers_satisfy_any_dimension() {
        let p = ParamFile::parse("bw = 1e9\n").unwrap();
        assert_eq!(p.data_rate("bw").unwrap(), 1e9);
    }
}
