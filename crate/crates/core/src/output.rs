//! Records printed by the command line, their JSON form and sweep CSV tables.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_domain, BohrError, Result};
use crate::params::BohrParams;
use crate::radius::{radius_scalar, Argmin, RadiusResult, RadiusValue};

/// Header of the sweep CSV, one row per `(p, q)`.
pub const SWEEP_HEADER: [&str; 8] = ["p", "q", "kind", "value", "lo", "hi", "case", "argmin_a"];

/// Maximum number of grid points accepted by [`sweep_grid`].
pub const MAX_SWEEP_POINTS: usize = 1_000_000;

/// Exact value or certified enclosure, tagged by `kind` in JSON.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RecordValue {
    Exact { value: f64 },
    Interval { lo: f64, hi: f64 },
}

impl From<RadiusValue> for RecordValue {
    fn from(v: RadiusValue) -> Self {
        match v {
            RadiusValue::Exact(value) => RecordValue::Exact { value },
            RadiusValue::Interval { lo, hi } => RecordValue::Interval { lo, hi },
        }
    }
}

/// Location of an infimum: a number, or the string `"boundary"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgminField(pub Argmin);

impl Serialize for ArgminField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Argmin::At(a) => s.serialize_f64(a),
            Argmin::Boundary => s.serialize_str("boundary"),
        }
    }
}

impl<'de> Deserialize<'de> for ArgminField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            At(f64),
            Tag(String),
        }
        match Raw::deserialize(d)? {
            Raw::At(a) => Ok(ArgminField(Argmin::At(a))),
            Raw::Tag(t) if t == "boundary" => Ok(ArgminField(Argmin::Boundary)),
            Raw::Tag(t) => Err(serde::de::Error::custom(format!(
                "argmin_a must be a number or \"boundary\", got \"{t}\""
            ))),
        }
    }
}

impl fmt::Display for ArgminField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Argmin::At(a) => write!(f, "{}", sig12(a)),
            Argmin::Boundary => f.write_str("boundary"),
        }
    }
}

/// One computed quantity together with its request parameters and provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub p: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(flatten)]
    pub value: RecordValue,
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub argmin_a: Option<ArgminField>,
}

impl OutputRecord {
    pub fn from_radius(r: &RadiusResult) -> Self {
        Self {
            p: r.params.p(),
            q: Some(r.params.q()),
            n: None,
            value: r.value.into(),
            case: r.case.as_str().to_string(),
            argmin_a: r.argmin.map(ArgminField),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| BohrError::Precondition(format!("bad record: {e}")))
    }

    /// Human-readable line with 12 significant digits.
    pub fn render(&self, label: &str) -> String {
        let mut out = match self.value {
            RecordValue::Exact { value } => format!("{label} = {}", sig12(value)),
            RecordValue::Interval { lo, hi } => {
                format!("{label} in [{}, {}]", sig12(lo), sig12(hi))
            }
        };
        out.push_str(&format!("  case {}", self.case));
        if let Some(a) = self.argmin_a {
            out.push_str(&format!("  argmin a = {a}"));
        }
        out
    }

    fn csv_row(&self) -> [String; 8] {
        let (kind, value, lo, hi) = match self.value {
            RecordValue::Exact { value } => {
                ("exact", value.to_string(), String::new(), String::new())
            }
            RecordValue::Interval { lo, hi } => {
                ("interval", String::new(), lo.to_string(), hi.to_string())
            }
        };
        [
            self.p.to_string(),
            self.q.map(|q| q.to_string()).unwrap_or_default(),
            kind.to_string(),
            value,
            lo,
            hi,
            self.case.clone(),
            match self.argmin_a {
                Some(ArgminField(Argmin::At(a))) => a.to_string(),
                Some(ArgminField(Argmin::Boundary)) => "boundary".to_string(),
                None => String::new(),
            },
        ]
    }
}

/// `x` rounded to 12 significant digits, in shortest round-trip notation.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    rounded.to_string()
}

/// Inclusive range `lo, lo + step, ...` up to `hi` (with a small slack).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub lo: f64,
    pub hi: f64,
}

impl std::str::FromStr for SweepRange {
    type Err = BohrError;

    /// Parses `a:b`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || BohrError::Precondition(format!("range '{s}' must look like a:b"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let lo: f64 = a.trim().parse().map_err(|_| bad())?;
        let hi: f64 = b.trim().parse().map_err(|_| bad())?;
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(bad());
        }
        Ok(Self { lo, hi })
    }
}

impl SweepRange {
    pub fn points(&self, step: f64) -> Result<Vec<f64>> {
        check_domain("step", step, step > 0.0, "step > 0")?;
        let count = ((self.hi - self.lo) / step + 1e-9).floor() + 1.0;
        if count > MAX_SWEEP_POINTS as f64 {
            return Err(BohrError::Precondition(format!(
                "range {}:{} with step {step} has too many points",
                self.lo, self.hi
            )));
        }
        Ok((0..count as usize)
            .map(|i| self.lo + i as f64 * step)
            .collect())
    }
}

/// Radius records over a `(p, q)` grid in row-major order (p outer).
pub fn sweep_grid(p: SweepRange, q: SweepRange, step: f64) -> Result<Vec<OutputRecord>> {
    let ps = p.points(step)?;
    let qs = q.points(step)?;
    if ps.len().saturating_mul(qs.len()) > MAX_SWEEP_POINTS {
        return Err(BohrError::Precondition("sweep grid is too large".into()));
    }
    let params: Vec<BohrParams> = ps
        .iter()
        .flat_map(|&p| qs.iter().map(move |&q| BohrParams::new(p, q)))
        .collect::<Result<_>>()?;
    Ok(params
        .par_iter()
        .map(|&bp| OutputRecord::from_radius(&radius_scalar(bp)))
        .collect())
}

pub fn write_sweep_csv<W: Write>(records: &[OutputRecord], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in records {
        w.write_record(r.csv_row())?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_rounds() {
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(std::f64::consts::FRAC_1_SQRT_2), "0.707106781187");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1234.5), "1234.5");
    }

    #[test]
    fn json_schema() {
        let r = OutputRecord::from_radius(&radius_scalar(BohrParams::new(1.0, 1.0).unwrap()));
        let json = r.to_json();
        assert!(json.contains("\"kind\":\"exact\""));
        assert!(json.contains("\"case\":\"PQ_le2\""));
        assert!(!json.contains("\"lo\""));
        assert_eq!(OutputRecord::from_json(&json).unwrap(), r);

        let r = OutputRecord::from_radius(&radius_scalar(BohrParams::new(1.0, 3.0).unwrap()));
        let json = r.to_json();
        assert!(json.contains("\"kind\":\"interval\""));
        assert!(!json.contains("\"value\""));
        assert_eq!(OutputRecord::from_json(&json).unwrap(), r);

        let boundary = OutputRecord {
            argmin_a: Some(ArgminField(Argmin::Boundary)),
            ..r
        };
        let json = boundary.to_json();
        assert!(json.contains("\"argmin_a\":\"boundary\""));
        assert_eq!(OutputRecord::from_json(&json).unwrap(), boundary);
        assert!(OutputRecord::from_json(&json.replace("boundary", "edge")).is_err());
    }

    #[test]
    fn sweep_is_row_major() {
        let recs = sweep_grid("1:2".parse().unwrap(), "1:1.5".parse().unwrap(), 0.5).unwrap();
        let pq: Vec<_> = recs.iter().map(|r| (r.p, r.q.unwrap())).collect();
        assert_eq!(
            pq,
            vec![
                (1.0, 1.0),
                (1.0, 1.5),
                (1.5, 1.0),
                (1.5, 1.5),
                (2.0, 1.0),
                (2.0, 1.5)
            ]
        );

        let mut buf = Vec::new();
        write_sweep_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "p,q,kind,value,lo,hi,case,argmin_a"
        );
        assert_eq!(text.lines().count(), 7);
    }

    #[test]
    fn bad_ranges() {
        assert!("2:1".parse::<SweepRange>().is_err());
        assert!("1-2".parse::<SweepRange>().is_err());
        assert!(SweepRange { lo: 1.0, hi: 2.0 }.points(0.0).is_err());
        assert!(sweep_grid("0.5:1".parse().unwrap(), "1:1".parse().unwrap(), 0.5).is_err());
    }
}
