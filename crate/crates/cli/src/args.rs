// Copyright 2026 The pswap Authors
// SPDX-License-Identifier: Apache-2.0

//! Value parsers for angles and builtin circuit names.

use std::f64::consts::PI;

use anyhow::{anyhow, bail, Context, Result};
use pswap_core::pswap::{build_iswap_reference, build_pswap, build_swap_standard};
use pswap_core::{Circuit, PhaseConfig};

/// Parses `1.5`, `pi`, `-pi/2`, `3pi/4`, `3*pi/4` or `0.25pi`.
pub fn parse_angle(text: &str) -> Result<f64> {
    let t = text.trim().to_ascii_lowercase().replace(' ', "");
    if let Ok(x) = t.parse::<f64>() {
        if !x.is_finite() {
            bail!("angle `{text}` is not finite");
        }
        return Ok(x);
    }
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, t.strip_prefix('+').unwrap_or(&t)),
    };
    let (head, divisor) = match body.split_once('/') {
        Some((h, d)) => {
            let d: f64 = d
                .parse()
                .map_err(|_| anyhow!("bad divisor in angle `{text}`"))?;
            if d == 0.0 {
                bail!("division by zero in angle `{text}`");
            }
            (h, d)
        }
        None => (body, 1.0),
    };
    let coeff = match head.strip_suffix("pi") {
        Some("") => 1.0,
        Some(c) => c
            .trim_end_matches('*')
            .parse::<f64>()
            .map_err(|_| anyhow!("cannot parse angle `{text}`"))?,
        None => bail!("cannot parse angle `{text}`"),
    };
    Ok(sign * coeff * PI / divisor)
}

/// Like [`parse_angle`] but `none` means "gate absent".
pub fn parse_optional_angle(text: &str) -> Result<Option<f64>> {
    if text.trim().eq_ignore_ascii_case("none") {
        Ok(None)
    } else {
        parse_angle(text).map(Some)
    }
}

pub fn clap_optional_angle(text: &str) -> std::result::Result<Option<f64>, String> {
    parse_optional_angle(text).map_err(|e| e.to_string())
}

pub fn clap_angle(text: &str) -> std::result::Result<f64, String> {
    parse_angle(text).map_err(|e| e.to_string())
}

/// Resolves `swap`, `iswap`, `pswap` or `pswap:<v>,<w>`.
pub fn builtin(name: &str) -> Result<Circuit> {
    match name {
        "swap" => return Ok(build_swap_standard()),
        "iswap" => return Ok(build_iswap_reference()),
        "pswap" => return Ok(build_pswap(PhaseConfig::BOOLEAN)?),
        _ => {}
    }
    let spec = name.strip_prefix("pswap:").ok_or_else(|| {
        anyhow!("unknown builtin `{name}` (expected swap, iswap, pswap or pswap:v,w)")
    })?;
    let (v, w) = spec
        .split_once(',')
        .ok_or_else(|| anyhow!("builtin `{name}` needs two angles, e.g. pswap:pi/2,-pi/2"))?;
    let cfg = PhaseConfig::new(parse_optional_angle(v)?, parse_optional_angle(w)?)
        .with_context(|| format!("builtin `{name}`"))?;
    Ok(build_pswap(cfg)?)
}
