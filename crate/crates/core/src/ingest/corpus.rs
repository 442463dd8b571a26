//! The bundled corpus: group files plus a manifest of expected invariants.
//!
//! Setting `SOLVTRIP_CORPUS` to a directory holding `manifest.toml` and its
//! group files replaces the bundled copy.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::parse::{parse_group_file, Expected, GroupSpec};
use crate::error::{Error, Result};
use crate::lifting::{extraspecial_by_quaternion, extraspecial_group, value_formula_group, ExtraspecialVariant};
use crate::permcore::{Caps, Group};

pub const CORPUS_ENV: &str = "SOLVTRIP_CORPUS";

const BUNDLED_MANIFEST: &str = include_str!("../../corpus/manifest.toml");

const BUNDLED_FILES: &[(&str, &str)] = &[
    ("3a6.grp", include_str!("../../corpus/3a6.grp")),
    ("3a7.grp", include_str!("../../corpus/3a7.grp")),
    ("a4.grp", include_str!("../../corpus/a4.grp")),
    ("a4xc5.grp", include_str!("../../corpus/a4xc5.grp")),
    ("a5.grp", include_str!("../../corpus/a5.grp")),
    ("a6.grp", include_str!("../../corpus/a6.grp")),
    ("a7.grp", include_str!("../../corpus/a7.grp")),
    ("c30.grp", include_str!("../../corpus/c30.grp")),
    ("c3xs3.grp", include_str!("../../corpus/c3xs3.grp")),
    ("c4.grp", include_str!("../../corpus/c4.grp")),
    ("c6.grp", include_str!("../../corpus/c6.grp")),
    ("c7c6.grp", include_str!("../../corpus/c7c6.grp")),
    ("c9.grp", include_str!("../../corpus/c9.grp")),
    ("l2_7.grp", include_str!("../../corpus/l2_7.grp")),
    ("q8.grp", include_str!("../../corpus/q8.grp")),
    ("s3xc5.grp", include_str!("../../corpus/s3xc5.grp")),
    ("s4.grp", include_str!("../../corpus/s4.grp")),
    ("s5.grp", include_str!("../../corpus/s5.grp")),
    ("sl2_5.grp", include_str!("../../corpus/sl2_5.grp")),
    ("sl2_7.grp", include_str!("../../corpus/sl2_7.grp")),
    ("sl2_8.grp", include_str!("../../corpus/sl2_8.grp")),
    ("sl2_9.grp", include_str!("../../corpus/sl2_9.grp")),
    ("sl2_z25.grp", include_str!("../../corpus/sl2_z25.grp")),
    ("sl3_3.grp", include_str!("../../corpus/sl3_3.grp")),
    ("su3_3.grp", include_str!("../../corpus/su3_3.grp")),
    ("sz8.grp", include_str!("../../corpus/sz8.grp")),
];

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Multiplier {
    pub order: u64,
    pub source: String,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub file: Option<String>,
    pub construct: Option<String>,
    pub order: u64,
    pub center: Option<u64>,
    pub classes: Option<usize>,
    pub source: String,
    pub multiplier: Option<Multiplier>,
    pub provenance: String,
    /// Entries that may fail validation without failing the corpus.
    #[serde(default)]
    pub optional: bool,
}

#[derive(Debug, Deserialize)]
struct Manifest {
    group: Vec<ManifestEntry>,
}

pub struct CorpusEntry {
    pub name: String,
    pub group: Group,
    pub meta: ManifestEntry,
}

impl ManifestEntry {
    pub fn matches(&self, name: &str) -> bool {
        self.name.eq_ignore_ascii_case(name) || self.aliases.iter().any(|a| a.eq_ignore_ascii_case(name))
    }

    fn expected(&self) -> Expected {
        Expected { order: Some(self.order), center_order: self.center, class_count: self.classes }
    }
}

fn override_dir() -> Option<PathBuf> {
    std::env::var_os(CORPUS_ENV).filter(|s| !s.is_empty()).map(PathBuf::from)
}

fn read_manifest() -> Result<Vec<ManifestEntry>> {
    let text = match override_dir() {
        Some(dir) => std::fs::read_to_string(dir.join("manifest.toml")).map_err(|e| Error::Io(e.to_string()))?,
        None => BUNDLED_MANIFEST.to_string(),
    };
    let m: Manifest =
        toml::from_str(&text).map_err(|e| Error::Validation { entry: "manifest".into(), message: e.to_string() })?;
    for e in &m.group {
        if e.file.is_some() == e.construct.is_some() {
            return Err(Error::Validation { entry: e.name.clone(), message: "needs exactly one of file, construct".into() });
        }
    }
    Ok(m.group)
}

fn read_file(name: &str) -> Result<String> {
    match override_dir() {
        Some(dir) => std::fs::read_to_string(dir.join(name)).map_err(|e| Error::Io(format!("{name}: {e}"))),
        None => BUNDLED_FILES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, t)| t.to_string())
            .ok_or_else(|| Error::Io(format!("{name} is not bundled"))),
    }
}

/// Builds a group from a construction line such as `extraspecial 3 1 plus`.
pub fn construct(line: &str) -> Result<Group> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Precondition(format!("unknown construction '{line}'"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match words.as_slice() {
        ["extraspecial", p, n, kind] => {
            let variant = match *kind {
                "plus" if *p != "2" => ExtraspecialVariant::PlusExponentP,
                "plus" => ExtraspecialVariant::Plus2,
                "minus" => ExtraspecialVariant::Minus2,
                _ => return Err(bad()),
            };
            extraspecial_group(num(p)? as u32, num(n)?, variant)
        }
        ["extraspecial-q8", p] => Ok(extraspecial_by_quaternion(num(p)? as u32)?.0),
        ["value-formula", n, m] => Ok(value_formula_group(num(n)?, num(m)?)?.0),
        _ => Err(bad()),
    }
}

/// The spec for a file entry, with the manifest's invariants merged in.
pub fn entry_spec(meta: &ManifestEntry) -> Result<Option<GroupSpec>> {
    let Some(file) = &meta.file else { return Ok(None) };
    let mut spec = parse_group_file(&read_file(file)?).map_err(|e| Error::Validation { entry: meta.name.clone(), message: e.to_string() })?;
    let (from_file, from_manifest) = (&spec.expected, meta.expected());
    for (a, b, what) in [
        (from_file.order, from_manifest.order, "order"),
        (from_file.center_order, from_manifest.center_order, "center order"),
        (from_file.class_count.map(|c| c as u64), from_manifest.class_count.map(|c| c as u64), "class count"),
    ] {
        if let (Some(a), Some(b)) = (a, b) {
            if a != b {
                return Err(Error::Validation { entry: meta.name.clone(), message: format!("file and manifest disagree on {what}") });
            }
        }
    }
    spec.expected = Expected {
        order: from_manifest.order.or(spec.expected.order),
        center_order: from_manifest.center_order.or(spec.expected.center_order),
        class_count: from_manifest.class_count.or(spec.expected.class_count),
    };
    Ok(Some(spec))
}

fn load(meta: ManifestEntry, caps: &Caps) -> Result<CorpusEntry> {
    let group = match entry_spec(&meta)? {
        Some(spec) => {
            let g = spec.build(caps)?;
            spec.validate(&g, &meta.name)?;
            g
        }
        None => {
            let g = construct(meta.construct.as_deref().expect("checked with the manifest"))?.with_caps(*caps);
            meta.expected().check(&g, &meta.name)?;
            g
        }
    };
    Ok(CorpusEntry { name: meta.name.clone(), group, meta })
}

pub fn corpus_manifest() -> Result<Vec<ManifestEntry>> {
    read_manifest()
}

/// Every entry, validated, in manifest order. Optional entries that fail to
/// validate are dropped; any other failure is an error.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    corpus_with(&Caps::default())
}

pub fn corpus_with(caps: &Caps) -> Result<Vec<CorpusEntry>> {
    let metas = read_manifest()?;
    let loaded: Vec<(bool, Result<CorpusEntry>)> = metas.into_par_iter().map(|m| (m.optional, load(m, caps))).collect();
    let mut out = Vec::with_capacity(loaded.len());
    for (optional, r) in loaded {
        match r {
            Ok(e) => out.push(e),
            Err(_) if optional => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// One entry by name or alias, case-insensitively.
pub fn corpus_entry(name: &str) -> Result<CorpusEntry> {
    corpus_entry_with(name, &Caps::default())
}

pub fn corpus_entry_with(name: &str, caps: &Caps) -> Result<CorpusEntry> {
    let meta = read_manifest()?.into_iter().find(|m| m.matches(name)).ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
    load(meta, caps)
}
