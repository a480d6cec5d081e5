//! Resolving a `--tiles` argument.
//!
//! Accepted forms: a built-in name, `orbit:<S>` for a single orbit with
//! stabilizer `S` under the requested group, or a path to a JSON config.

use crate::{CliError, CliResult};
use tilecount_core::tileset::{builtin, parse_config};
use tilecount_core::{OrbitSpec, SymmetryGroup, TileSource};

pub fn resolve_tiles(spec: &str, group: SymmetryGroup) -> CliResult<TileSource> {
    if let Some(ts) = builtin::load(spec) {
        return Ok(TileSource::Explicit(ts));
    }
    if let Some(stab) = spec.strip_prefix("orbit:") {
        let stab: SymmetryGroup = stab.parse()?;
        return Ok(TileSource::Spec(OrbitSpec::single_orbit(group, stab)?));
    }
    let text = std::fs::read_to_string(spec).map_err(|e| {
        CliError::Config(format!(
            "`{spec}` is not a built-in tile set ({}) and cannot be read: {e}",
            builtin::NAMES.join(", ")
        ))
    })?;
    Ok(parse_config(&text)?)
}
