//! Human relatedness judgments read from three-column TSV files.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairJudgment {
    pub label_a: String,
    pub label_b: String,
    /// Normalized to [0, 1].
    pub human_score: f64,
}

/// Scale of the raw scores in a pairs file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Scores already in [0, 1].
    Unit,
    /// 1..=5 ratings, mapped linearly so 1 -> 0.0 and 5 -> 1.0.
    FivePoint,
}

impl Scale {
    pub fn name(self) -> &'static str {
        match self {
            Scale::Unit => "unit",
            Scale::FivePoint => "five-point",
        }
    }

    pub fn normalize(self, raw: f64) -> Option<f64> {
        match self {
            Scale::Unit if (0.0..=1.0).contains(&raw) => Some(raw),
            Scale::FivePoint if (1.0..=5.0).contains(&raw) => Some((raw - 1.0) / 4.0),
            _ => None,
        }
    }
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unit" => Ok(Scale::Unit),
            "five-point" => Ok(Scale::FivePoint),
            other => Err(Error::param("scale", format!("unknown scale {other:?}"))),
        }
    }
}

pub fn load_pairs(path: impl AsRef<Path>, scale: Scale) -> Result<Vec<PairJudgment>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_pairs(&text, scale)
}

/// Parses TSV rows `label_a<TAB>label_b<TAB>score`. Blank lines are skipped;
/// a first row whose score column is not numeric is taken as a header.
pub fn parse_pairs(text: &str, scale: Scale) -> Result<Vec<PairJudgment>> {
    let mut pairs = Vec::new();
    let mut first_row = true;
    for (i, raw_line) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw_line.trim_end_matches('\r');
        if row.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = row.split('\t').collect();
        if cols.len() != 3 {
            return Err(Error::MalformedRow {
                line,
                message: format!("expected 3 tab-separated columns, found {}", cols.len()),
            });
        }
        let is_header = std::mem::replace(&mut first_row, false);
        let raw: f64 = match cols[2].trim().parse() {
            Ok(v) => v,
            Err(_) if is_header => continue,
            Err(_) => {
                return Err(Error::MalformedRow {
                    line,
                    message: format!("score {:?} is not a number", cols[2]),
                })
            }
        };
        let (a, b) = (cols[0].trim(), cols[1].trim());
        if a.is_empty() || b.is_empty() {
            return Err(Error::MalformedRow {
                line,
                message: "empty label".into(),
            });
        }
        let human_score = scale.normalize(raw).ok_or(Error::ScoreOutOfScale {
            line,
            score: raw,
            scale: scale.name(),
        })?;
        pairs.push(PairJudgment {
            label_a: a.to_string(),
            label_b: b.to_string(),
            human_score,
        });
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_point_maps_linearly() {
        let pairs = parse_pairs("cat\tdog\t4\n", Scale::FivePoint).unwrap();
        assert_eq!(
            pairs,
            vec![PairJudgment {
                label_a: "cat".into(),
                label_b: "dog".into(),
                human_score: 0.75,
            }]
        );
        assert_eq!(Scale::FivePoint.normalize(1.0), Some(0.0));
        assert_eq!(Scale::FivePoint.normalize(5.0), Some(1.0));
    }

    #[test]
    fn unit_scale_is_identity() {
        let pairs = parse_pairs("a\tb\t0.6", Scale::Unit).unwrap();
        assert_eq!(pairs[0].human_score, 0.6);
    }

    #[test]
    fn out_of_scale_score_rejected() {
        let err = parse_pairs("a\tb\t3\nc\td\t6\n", Scale::FivePoint).unwrap_err();
        assert!(matches!(err, Error::ScoreOutOfScale { line: 2, score, .. } if score == 6.0));
        assert!(parse_pairs("a\tb\t1.2", Scale::Unit).is_err());
    }

    #[test]
    fn header_and_blank_lines() {
        let text = "word1\tword2\tscore\n\na\tb\t0.1\nc\td\t0.9\n";
        let pairs = parse_pairs(text, Scale::Unit).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[1].label_a, "c");
    }

    #[test]
    fn malformed_rows_rejected() {
        assert!(matches!(
            parse_pairs("a\tb\n", Scale::Unit),
            Err(Error::MalformedRow { line: 1, .. })
        ));
        assert!(matches!(
            parse_pairs("a\tb\t0.5\nc\td\tnope\n", Scale::Unit),
            Err(Error::MalformedRow { line: 2, .. })
        ));
    }

    #[test]
    fn scale_parses_from_flag() {
        assert_eq!("unit".parse::<Scale>().unwrap(), Scale::Unit);
        assert_eq!("five-point".parse::<Scale>().unwrap(), Scale::FivePoint);
        assert!("ten".parse::<Scale>().is_err());
    }
}
