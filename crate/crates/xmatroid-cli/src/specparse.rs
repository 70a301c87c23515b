//! Parsing of the CLI-facing spec strings for hosts, pattern families,
//! matroids and linear row matrices.

use xmatroid::counts::{induced_matroid, CountFunction};
use xmatroid::graphs::{
    build_uniform_matroid, enumerate_copies, rooted_copies, CopyFamily, HostGraph, PatternSpec,
};
use xmatroid::json::MatroidJson;
use xmatroid::linear::{RowMatrixKind, RowMatrixSpec};
use xmatroid::matroid::Matroid;
use xmatroid::valseq::build_val_matroid;
use xmatroid::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// `complete:5 | bipartite:3,4 | file:graph.json`
pub fn parse_host(s: &str) -> Result<HostGraph> {
    if let Some(rest) = s.strip_prefix("complete:") {
        let n: usize = rest.parse().map_err(|_| bad(format!("bad host {s}")))?;
        return HostGraph::complete(n);
    }
    if let Some(rest) = s.strip_prefix("bipartite:") {
        let (m, n) = rest
            .split_once(',')
            .ok_or_else(|| bad(format!("bad host {s}")))?;
        return HostGraph::complete_bipartite(
            m.parse().map_err(|_| bad("bad host side"))?,
            n.parse().map_err(|_| bad("bad host side"))?,
        );
    }
    if let Some(path) = s.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| bad(format!("cannot read host file {path}: {e}")))?;
        let kind: xmatroid::graphs::HostKind =
            serde_json::from_str(&text).map_err(|e| bad(format!("bad host JSON: {e}")))?;
        return xmatroid::json::host_from_json(&kind);
    }
    Err(bad(format!(
        "host must be complete:N, bipartite:M,N or file:PATH (got {s})"
    )))
}

/// One pattern token: `K4 | K5- | K2,3 | rooted-K3,2 | C5 | P3 | 2K2 | K1,3`
fn parse_pattern(tok: &str) -> Result<(PatternSpec, bool)> {
    let (tok, rooted) = match tok.strip_prefix("rooted-") {
        Some(rest) => (rest, true),
        None => (tok, false),
    };
    if let Some(rest) = tok.strip_prefix('K') {
        if let Some((s, t)) = rest.split_once(',') {
            let s: usize = s.parse().map_err(|_| bad(format!("bad pattern {tok}")))?;
            let t: usize = t.parse().map_err(|_| bad(format!("bad pattern {tok}")))?;
            if s == 1 && !rooted {
                return Ok((PatternSpec::Star(t), false));
            }
            return Ok((PatternSpec::Biclique(s, t), rooted));
        }
        if let Some(t) = rest.strip_suffix('-') {
            let t: usize = t.parse().map_err(|_| bad(format!("bad pattern {tok}")))?;
            return Ok((PatternSpec::CliqueMinus(t), false));
        }
        let t: usize = rest.parse().map_err(|_| bad(format!("bad pattern {tok}")))?;
        return Ok((PatternSpec::Clique(t), false));
    }
    if let Some(rest) = tok.strip_prefix('C') {
        let k: usize = rest.parse().map_err(|_| bad(format!("bad pattern {tok}")))?;
        return Ok((PatternSpec::Cycle(k), false));
    }
    if let Some(rest) = tok.strip_prefix('P') {
        let k: usize = rest.parse().map_err(|_| bad(format!("bad pattern {tok}")))?;
        return Ok((PatternSpec::Path(k), false));
    }
    if let Some(k) = tok.strip_suffix("K2") {
        let k: usize = k.parse().map_err(|_| bad(format!("bad pattern {tok}")))?;
        return Ok((PatternSpec::Matching(k), false));
    }
    Err(bad(format!("unrecognised pattern {tok}")))
}

/// `K4`, `C5`, `K4+K2,3` (concatenated families), `rooted-K3,2`
pub fn parse_family(s: &str, host: &HostGraph) -> Result<CopyFamily> {
    let mut acc: Option<CopyFamily> = None;
    for tok in s.split('+') {
        let (pattern, rooted) = parse_pattern(tok)?;
        let fam = if rooted {
            match pattern {
                PatternSpec::Biclique(a, b) => rooted_copies(a, b, host)?,
                _ => return Err(bad("rooted applies to bicliques only")),
            }
        } else {
            enumerate_copies(&pattern, host)?
        };
        acc = Some(match acc {
            None => fam,
            Some(prev) => prev.merged_with(&fam)?,
        });
    }
    acc.ok_or_else(|| bad("empty family spec"))
}

/// `hyper:n=6,d=2 | symc:n=6,d=2 | biri:m=3,n=3,k=2,l=2 | rigid:n=5,d=2`
pub fn parse_linear(s: &str) -> Result<RowMatrixKind> {
    let (name, args) = s.split_once(':').ok_or_else(|| bad(format!("bad matrix spec {s}")))?;
    let mut fields = std::collections::HashMap::new();
    for pair in args.split(',') {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| bad(format!("bad matrix parameter {pair}")))?;
        let v: usize = v.parse().map_err(|_| bad(format!("bad value in {pair}")))?;
        fields.insert(k.to_string(), v);
    }
    let get = |k: &str| -> Result<usize> {
        fields
            .get(k)
            .copied()
            .ok_or_else(|| bad(format!("missing {k} in {s}")))
    };
    match name {
        "hyper" => Ok(RowMatrixKind::Hyperconnectivity { n: get("n")?, d: get("d")? }),
        "symc" => Ok(RowMatrixKind::SymmetricCompletion { n: get("n")?, d: get("d")? }),
        "biri" => Ok(RowMatrixKind::Birigidity {
            m: get("m")?,
            n: get("n")?,
            k: get("k")?,
            l: get("l")?,
        }),
        "rigid" => Ok(RowMatrixKind::Rigidity { n: get("n")?, d: get("d")? }),
        _ => Err(bad(format!("unknown matrix kind {name}"))),
    }
}

pub fn is_linear_spec(s: &str) -> bool {
    ["hyper:", "symc:", "biri:", "rigid:"]
        .iter()
        .any(|p| s.starts_with(p))
}

/// Matroid spec strings:
///   `graphic@HOST`            cycle matroid
///   `count:f,2,3@HOST`        induced count matroid
///   `count:g,1,1,-1@HOST`
///   `count:h,2@HOST`
///   `uniform:FAMILY@HOST`     uniform matroid of a union-stable family
///   `valmatroid:FAMILY@HOST`  matroid with the val rank function
///   `u:K,N`                   uniform matroid of rank K on N elements
///   `hyper:... symc:... biri:... rigid:...`  generic row matroids
///   `file:PATH`               explicit matroid JSON
pub fn parse_matroid(s: &str, seed: u64, prime: u64, trials: u32, budget: u64) -> Result<Matroid> {
    if is_linear_spec(s) {
        let kind = parse_linear(s)?;
        return RowMatrixSpec::new(kind, seed, prime)?.matroid(trials);
    }
    if let Some(path) = s.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| bad(format!("cannot read matroid file {path}: {e}")))?;
        let j: MatroidJson =
            serde_json::from_str(&text).map_err(|e| bad(format!("bad matroid JSON: {e}")))?;
        return j.to_matroid();
    }
    if let Some(args) = s.strip_prefix("u:") {
        let (k, n) = args.split_once(',').ok_or_else(|| bad("u:K,N"))?;
        return Matroid::uniform(
            n.parse().map_err(|_| bad("bad N"))?,
            k.parse().map_err(|_| bad("bad K"))?,
        );
    }
    let (kind, host_str) = s
        .split_once('@')
        .ok_or_else(|| bad(format!("matroid spec needs @HOST (got {s})")))?;
    let host = parse_host(host_str)?;
    if kind == "graphic" {
        return Ok(induced_matroid(&CountFunction::vertex_count(1, 1, host)?));
    }
    if let Some(args) = kind.strip_prefix("count:") {
        let parts: Vec<&str> = args.split(',').collect();
        let f = match parts.as_slice() {
            ["f", a, b] => CountFunction::vertex_count(
                a.parse().map_err(|_| bad("bad a"))?,
                b.parse().map_err(|_| bad("bad b"))?,
                host,
            )?,
            ["g", a, b, c] => CountFunction::bipartite_count(
                a.parse().map_err(|_| bad("bad a"))?,
                b.parse().map_err(|_| bad("bad b"))?,
                c.parse().map_err(|_| bad("bad c"))?,
                host,
            )?,
            ["h", k] => CountFunction::picture_lifting(k.parse().map_err(|_| bad("bad k"))?, host)?,
            _ => return Err(bad(format!("bad count spec {args}"))),
        };
        return Ok(induced_matroid(&f));
    }
    if let Some(famspec) = kind.strip_prefix("uniform:") {
        let fam = parse_family(famspec, &host)?;
        return build_uniform_matroid(&fam);
    }
    if let Some(famspec) = kind.strip_prefix("valmatroid:") {
        let fam = parse_family(famspec, &host)?;
        return build_val_matroid(&fam, budget);
    }
    Err(bad(format!("unrecognised matroid spec {s}")))
}

/// `all | 0,3,7 | file:target.json` (JSON: sorted id array)
pub fn parse_target(s: &str, host_size: usize) -> Result<xmatroid::ElementSet> {
    if s == "all" {
        return Ok(xmatroid::ElementSet::full(host_size));
    }
    if let Some(path) = s.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| bad(format!("cannot read target file {path}: {e}")))?;
        let ids: Vec<usize> =
            serde_json::from_str(&text).map_err(|e| bad(format!("bad target JSON: {e}")))?;
        return xmatroid::json::element_set_from_json(&ids);
    }
    let ids: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| bad(format!("bad id {t}"))))
        .collect::<Result<_>>()?;
    if ids.iter().any(|&e| e >= host_size) {
        return Err(bad("target id out of range"));
    }
    Ok(xmatroid::ElementSet::from_ids(ids))
}
