//! The mapping from built-in families to OEIS entries.
//!
//! Every prefix in `data/oeis.json` was produced by this crate and checked
//! against the oracle where enumeration is feasible. An `oeis` id is only
//! filled in where the prefix agrees with the published sequence; `null`
//! means no match has been confirmed.

use crate::sequence::SequenceRequest;
use crate::{CliError, CliResult};
use serde_json::Value;

pub const MAPPING: &str = include_str!("../data/oeis.json");

#[derive(Debug, Clone)]
pub struct Entry {
    pub oeis: Option<String>,
    pub request: SequenceRequest,
    pub prefix: Vec<String>,
    pub note: String,
}

fn field<'a>(v: &'a Value, key: &str) -> CliResult<&'a Value> {
    v.get(key)
        .ok_or_else(|| CliError::Config(format!("oeis mapping entry lacks `{key}`")))
}

fn text(v: &Value, key: &str) -> CliResult<String> {
    field(v, key)?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| CliError::Config(format!("oeis mapping `{key}` is not a string")))
}

fn entry(v: &Value) -> CliResult<Entry> {
    let n_min = field(v, "n_min")?.as_u64().unwrap_or(0) as usize;
    let prefix: Vec<String> = field(v, "prefix")?
        .as_array()
        .map(|a| {
            a.iter()
                .filter_map(|x| x.as_str().map(str::to_string))
                .collect()
        })
        .unwrap_or_default();
    let request = SequenceRequest {
        surface: text(v, "surface")?.parse()?,
        square: true,
        group: text(v, "group")?.parse()?,
        tiles: text(v, "tiles")?,
        n_min,
        n_max: n_min + prefix.len().saturating_sub(1),
        m: None,
        m_range: None,
        offset: None,
        transpose: false,
    };
    Ok(Entry {
        oeis: field(v, "oeis")?.as_str().map(str::to_string),
        request,
        prefix,
        note: text(v, "note")?,
    })
}

pub fn entries() -> CliResult<Vec<Entry>> {
    let root: Value = serde_json::from_str(MAPPING).map_err(|e| CliError::Config(e.to_string()))?;
    root.as_array()
        .ok_or_else(|| CliError::Config("oeis mapping is not a list".into()))?
        .iter()
        .map(entry)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::cmd_sequence;
    use crate::Problem;
    use tilecount_core::group::group_elements;
    use tilecount_core::oracle::{count_orbits_direct, state_count, OracleBudget};
    use tilecount_core::GridShape;

    #[test]
    fn prefixes_match_closed_forms() {
        let all = entries().unwrap();
        assert!(!all.is_empty());
        for e in &all {
            let out = cmd_sequence(&e.request).unwrap();
            let values: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
            assert_eq!(values, e.prefix, "{:?}", e.oeis);
        }
    }

    #[test]
    fn small_terms_match_oracle() {
        for e in entries().unwrap() {
            let r = &e.request;
            for (i, n) in (r.n_min..=r.n_max).enumerate() {
                let shape = GridShape::new(n, n, r.surface).unwrap();
                let ts = crate::resolve_tiles(&r.tiles, r.group)
                    .unwrap()
                    .to_design_set()
                    .restrict(r.group)
                    .unwrap();
                if state_count(&shape, ts.len()) > 1_000_000 {
                    continue;
                }
                let elems = group_elements(&shape, r.group).unwrap();
                let oracle =
                    count_orbits_direct(&elems, &shape, &ts, &OracleBudget::default()).unwrap();
                assert_eq!(oracle.to_string(), e.prefix[i]);
                let p = Problem {
                    surface: r.surface,
                    n,
                    m: n,
                    group: r.group,
                    tiles: r.tiles.clone(),
                    transpose: false,
                };
                assert_eq!(p.count().unwrap(), oracle);
            }
        }
    }
}
