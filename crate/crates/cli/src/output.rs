//! Row formatting. The CSV schema is fixed:
//! `dim,mu,xi,method,f,pressure_si,err,terms,ms` with reals printed to
//! 17 significant digits and an empty field where no SI pressure applies.
//! JSON output is one object per line with identical keys.

use crate::Format;

pub const CSV_HEADER: &str = "dim,mu,xi,method,f,pressure_si,err,terms,ms";

#[derive(Debug, Clone)]
pub struct OutputRow {
    pub dim: u32,
    pub mu: f64,
    pub xi: f64,
    pub method: &'static str,
    pub f: f64,
    pub pressure_si: Option<f64>,
    pub err: f64,
    pub terms: usize,
    pub ms: u128,
}

fn real(x: f64) -> String {
    format!("{x:.16e}")
}

impl OutputRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.dim,
            real(self.mu),
            real(self.xi),
            self.method,
            real(self.f),
            self.pressure_si.map(real).unwrap_or_default(),
            real(self.err),
            self.terms,
            self.ms
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "dim": self.dim,
            "mu": self.mu,
            "xi": self.xi,
            "method": self.method,
            "f": self.f,
            "pressure_si": self.pressure_si,
            "err": self.err,
            "terms": self.terms,
            "ms": self.ms,
        })
        .to_string()
    }
}

/// Print a complete row set in the requested format.
pub fn emit(rows: &[OutputRow], format: Format) {
    match format {
        Format::Csv => {
            println!("{CSV_HEADER}");
            for r in rows {
                println!("{}", r.to_csv());
            }
        }
        Format::Json => {
            for r in rows {
                println!("{}", r.to_json());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_row_shape() {
        let row = OutputRow {
            dim: 3,
            mu: 1.0,
            xi: 2.0,
            method: "series",
            f: -0.25,
            pressure_si: None,
            err: 1e-13,
            terms: 17,
            ms: 4,
        };
        let line = row.to_csv();
        assert_eq!(line.split(',').count(), CSV_HEADER.split(',').count());
        assert!(line.contains(",series,"));
        assert!(
            line.contains(",,"),
            "missing pressure must be an empty field"
        );
    }

    #[test]
    fn json_keys_match_csv_columns() {
        let row = OutputRow {
            dim: 1,
            mu: 0.5,
            xi: 1.0,
            method: "green",
            f: -0.1,
            pressure_si: Some(-2.0e-4),
            err: 1e-7,
            terms: 9,
            ms: 12,
        };
        let v: serde_json::Value = serde_json::from_str(&row.to_json()).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        let cols: Vec<&str> = CSV_HEADER.split(',').collect();
        for c in &cols {
            assert!(keys.contains(c), "missing key {c}");
        }
        assert_eq!(keys.len(), cols.len());
    }
}
