//! Thin OEIS search client. Strictly advisory: results name candidate
//! matches for a sequence, nothing downstream depends on them.

use std::fmt;
use std::time::Duration;

use num_bigint::BigInt;
use serde_json::Value;

/// One candidate entry returned by a search.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OeisMatch {
    /// Canonical id, e.g. "A000108".
    pub sequence_id: String,
    pub name: String,
    /// Length of the longest run of query terms that appears consecutively
    /// in the entry's listed terms.
    pub matched_terms: u64,
}

#[derive(Debug)]
pub enum OeisError {
    /// The query never produced a response (DNS, timeout, HTTP failure).
    /// Distinct from a well-formed response with zero matches.
    Network(String),
    Malformed(String),
}

impl fmt::Display for OeisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OeisError::Network(msg) => write!(f, "OEIS unreachable: {msg}"),
            OeisError::Malformed(msg) => write!(f, "unexpected OEIS response: {msg}"),
        }
    }
}

impl std::error::Error for OeisError {}

/// Query oeis.org for the given terms. One request, 10 s timeout, no
/// retries; the caller decides what an error means for its exit code.
pub fn search(terms: &[BigInt], limit: usize) -> Result<Vec<OeisMatch>, OeisError> {
    let joined = terms
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let url = format!("https://oeis.org/search?q={joined}&fmt=json");
    let agent = ureq::AgentBuilder::new()
        .timeout(Duration::from_secs(10))
        .build();
    let body = agent
        .get(&url)
        .call()
        .map_err(|e| OeisError::Network(e.to_string()))?
        .into_string()
        .map_err(|e| OeisError::Network(e.to_string()))?;
    parse_search_body(&body, terms, limit)
}

/// Both response shapes the endpoint has used are accepted: an object with
/// a "results" array (null when nothing matched) and a bare array.
pub fn parse_search_body(
    body: &str,
    terms: &[BigInt],
    limit: usize,
) -> Result<Vec<OeisMatch>, OeisError> {
    let root: Value =
        serde_json::from_str(body).map_err(|e| OeisError::Malformed(e.to_string()))?;
    let entries = match &root {
        Value::Array(entries) => entries.as_slice(),
        Value::Object(map) => match map.get("results") {
            Some(Value::Array(entries)) => entries.as_slice(),
            Some(Value::Null) | None => &[],
            Some(other) => {
                return Err(OeisError::Malformed(format!(
                    "\"results\" is neither an array nor null: {other}"
                )))
            }
        },
        other => {
            return Err(OeisError::Malformed(format!(
                "top level is neither an object nor an array: {other}"
            )))
        }
    };
    let query: Vec<String> = terms.iter().map(ToString::to_string).collect();
    entries
        .iter()
        .take(limit)
        .map(|entry| {
            let number = entry
                .get("number")
                .and_then(Value::as_u64)
                .ok_or_else(|| OeisError::Malformed("entry without a number".into()))?;
            let name = entry
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| OeisError::Malformed("entry without a name".into()))?;
            let data = entry.get("data").and_then(Value::as_str).unwrap_or("");
            Ok(OeisMatch {
                sequence_id: format!("A{number:06}"),
                name: name.to_string(),
                matched_terms: contiguous_overlap(&query, data),
            })
        })
        .collect()
}

fn contiguous_overlap(query: &[String], data: &str) -> u64 {
    let listed: Vec<&str> = data.split(',').map(str::trim).collect();
    let mut best = 0;
    for qs in 0..query.len() {
        for ds in 0..listed.len() {
            let mut run = 0;
            while qs + run < query.len()
                && ds + run < listed.len()
                && query[qs + run] == listed[ds + run]
            {
                run += 1;
            }
            best = best.max(run);
        }
    }
    best as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn terms(csv: &str) -> Vec<BigInt> {
        csv.split(',')
            .map(|t| BigInt::from_str(t).unwrap())
            .collect()
    }

    const WRAPPED: &str = r#"{
        "greeting": "Greetings from The On-Line Encyclopedia of Integer Sequences!",
        "query": "1,2,5,14,42",
        "count": 2,
        "start": 0,
        "results": [
            {
                "number": 108,
                "data": "1,1,2,5,14,42,132,429,1430,4862,16796",
                "name": "Catalan numbers: C(n) = binomial(2n,n)/(n+1).",
                "keyword": "core,nonn,easy"
            },
            {
                "number": 957,
                "data": "0,1,1,1,2,5,14,42,132,429",
                "name": "Fine's sequence (or Fine numbers): number of relations of valence > 0 on an n-set.",
                "keyword": "nonn"
            }
        ]
    }"#;

    #[test]
    fn parses_wrapped_results() {
        let found = parse_search_body(WRAPPED, &terms("1,2,5,14,42"), 10).unwrap();
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].sequence_id, "A000108");
        assert!(found[0].name.starts_with("Catalan numbers"));
        assert_eq!(found[0].matched_terms, 5);
        assert_eq!(found[1].sequence_id, "A000957");
        assert_eq!(found[1].matched_terms, 5);
    }

    #[test]
    fn limit_truncates() {
        let found = parse_search_body(WRAPPED, &terms("1,2,5,14,42"), 1).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].sequence_id, "A000108");
    }

    #[test]
    fn null_results_mean_no_matches() {
        let body = r#"{"greeting": "x", "count": 0, "results": null}"#;
        assert_eq!(parse_search_body(body, &terms("9,9,9,9"), 10).unwrap(), []);
    }

    #[test]
    fn bare_array_is_accepted() {
        let body = r#"[{"number": 45, "data": "0,1,1,2,3,5,8", "name": "Fibonacci numbers."}]"#;
        let found = parse_search_body(body, &terms("1,2,3,5"), 10).unwrap();
        assert_eq!(found[0].sequence_id, "A000045");
        assert_eq!(found[0].matched_terms, 4);
    }

    #[test]
    fn overlap_is_contiguous_not_scattered() {
        // 3 then 99 then 8: the run 3,5,8 is broken, so only "3" and "5,8"
        // remain and the best contiguous run has length 2.
        let body = r#"[{"number": 1, "data": "3,99,5,8", "name": "x."}]"#;
        let found = parse_search_body(body, &terms("3,5,8,4"), 10).unwrap();
        assert_eq!(found[0].matched_terms, 2);
    }

    #[test]
    fn malformed_body_is_an_error() {
        assert!(matches!(
            parse_search_body("not json", &terms("1,2,3,4"), 10),
            Err(OeisError::Malformed(_))
        ));
        assert!(matches!(
            parse_search_body(r#"{"results": 7}"#, &terms("1,2,3,4"), 10),
            Err(OeisError::Malformed(_))
        ));
    }

    /// Live network round trip; run with --ignored when outbound HTTP works.
    #[test]
    #[ignore]
    fn live_search_finds_catalan() {
        let found = search(&terms("1,1,2,5,14,42,132,429"), 10).unwrap();
        assert!(found.iter().any(|m| m.sequence_id == "A000108"));
    }
}
