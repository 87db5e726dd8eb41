//! Named links. Diagrams are slice words checked in under `catalog/`, each
//! with a drawing in its comment header.

use crate::diagram::{LinkDiagram, SliceWord};
use crate::error::{Error, Result};

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Follows from the diagram by inspection.
    Trivial,
    /// Textbook value for the named link.
    Standard,
    /// Published value for this specific link.
    Published,
    /// Computed by this crate and frozen.
    Computed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Linking(Vec<Vec<i64>>),
    /// Index digits and the value of mu; the class must have indeterminacy 0.
    Mu(&'static str, i64),
    /// `(twice_exponent, coefficient)` pairs in `q`.
    Jones(Vec<(i64, i64)>),
    /// `(twice_exponent, coefficient)` pairs in `z`.
    Conway(Vec<(i64, i64)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub check: Check,
    pub source: Source,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub text: &'static str,
    /// Names of isotopic catalog diagrams with matching component order.
    pub alternates: &'static [&'static str],
    pub expected: Vec<Fact>,
}

impl CatalogEntry {
    /// First comment line of the file.
    pub fn description(&self) -> &'static str {
        self.text
            .lines()
            .next()
            .and_then(|l| l.strip_prefix("# "))
            .unwrap_or(self.name)
    }

    pub fn diagram(&self) -> Result<LinkDiagram> {
        Ok(LinkDiagram::parse(self.text)?.with_provenance(format!("catalog {}", self.name)))
    }
}

fn fact(check: Check, source: Source) -> Fact {
    Fact { check, source }
}

const NAMED: &[&str] = &[
    "unknot",
    "unknot-alt",
    "hopf",
    "hopf-alt",
    "trefoil",
    "trefoil-alt",
    "whitehead",
    "whitehead-alt",
    "borromean",
    "borromean-alt",
    "wh-double-borromean",
    "wh-double-borromean-alt",
    "wh-wh-hopf",
    "wh-wh-hopf-alt",
];

/// Every fixed name plus `unlink-2` and `unlink-3` as representatives of
/// `unlink-<n>`.
pub fn names() -> Vec<String> {
    let mut v: Vec<String> = NAMED.iter().map(|s| s.to_string()).collect();
    v.insert(2, "unlink-2".into());
    v.insert(3, "unlink-3".into());
    v
}

fn text_of(name: &str) -> Option<&'static str> {
    Some(match name {
        "unknot" => include_str!("../catalog/unknot.slice"),
        "unknot-alt" => include_str!("../catalog/unknot-alt.slice"),
        "hopf" => include_str!("../catalog/hopf.slice"),
        "hopf-alt" => include_str!("../catalog/hopf-alt.slice"),
        "trefoil" => include_str!("../catalog/trefoil.slice"),
        "trefoil-alt" => include_str!("../catalog/trefoil-alt.slice"),
        "whitehead" => include_str!("../catalog/whitehead.slice"),
        "whitehead-alt" => include_str!("../catalog/whitehead-alt.slice"),
        "borromean" => include_str!("../catalog/borromean.slice"),
        "borromean-alt" => include_str!("../catalog/borromean-alt.slice"),
        "wh-double-borromean" => include_str!("../catalog/wh-double-borromean.slice"),
        "wh-double-borromean-alt" => include_str!("../catalog/wh-double-borromean-alt.slice"),
        "wh-wh-hopf" => include_str!("../catalog/wh-wh-hopf.slice"),
        "wh-wh-hopf-alt" => include_str!("../catalog/wh-wh-hopf-alt.slice"),
        _ => return None,
    })
}

fn unlink_size(name: &str) -> Option<usize> {
    name.strip_prefix("unlink-")?.parse().ok().filter(|&n| n >= 1)
}

fn base_name(name: &str) -> &str {
    name.strip_suffix("-alt").unwrap_or(name)
}

fn expected(name: &str) -> Vec<Fact> {
    use Check::*;
    use Source::*;
    let zero = |n: usize| vec![vec![0i64; n]; n];
    match base_name(name) {
        "unknot" => vec![
            fact(Linking(zero(1)), Trivial),
            fact(Jones(vec![(0, 1)]), Standard),
            fact(Conway(vec![(0, 1)]), Standard),
        ],
        "hopf" => vec![
            fact(Linking(vec![vec![0, 1], vec![1, 0]]), Standard),
            fact(Mu("12", 1), Standard),
            fact(Jones(vec![(1, -1), (5, -1)]), Standard),
            fact(Conway(vec![(2, 1)]), Standard),
        ],
        "trefoil" => vec![
            fact(Linking(zero(1)), Trivial),
            fact(Jones(vec![(2, 1), (6, 1), (8, -1)]), Standard),
            fact(Conway(vec![(0, 1), (4, 1)]), Standard),
        ],
        "whitehead" => vec![
            fact(Linking(zero(2)), Standard),
            fact(Mu("1122", -1), Computed),
            fact(Mu("1212", 2), Computed),
            fact(Conway(vec![(6, 1)]), Standard),
        ],
        "borromean" => vec![
            fact(Linking(zero(3)), Standard),
            fact(Mu("123", -1), Computed),
            fact(Mu("132", 1), Computed),
            fact(Conway(vec![(8, 1)]), Standard),
        ],
        "wh-double-borromean" => vec![
            fact(Linking(zero(3)), Published),
            fact(Mu("123", 0), Computed),
            fact(Mu("112323", -1), Computed),
            fact(Mu("123123", 2), Computed),
            fact(Conway(vec![]), Published),
        ],
        "wh-wh-hopf" => vec![
            fact(Linking(zero(2)), Published),
            fact(
                Jones(vec![
                    (-9, 1),
                    (-7, -2),
                    (-5, 1),
                    (-3, -1),
                    (3, -1),
                    (5, 1),
                    (7, -2),
                    (9, 1),
                ]),
                Published,
            ),
        ],
        _ => Vec::new(),
    }
}

/// Looks up a named link: a fixed catalog name or `unlink-<n>`.
pub fn entry(name: &str) -> Result<CatalogEntry> {
    if let Some(n) = unlink_size(name) {
        return Ok(CatalogEntry {
            name: if n == 1 { "unlink-1" } else { "unlink-n" },
            text: "",
            alternates: &[],
            expected: vec![fact(Check::Linking(vec![vec![0; n]; n]), Source::Trivial)],
        });
    }
    let pos = NAMED
        .iter()
        .position(|&s| s == name)
        .ok_or_else(|| Error::UnknownLink(name.to_string()))?;
    let name = NAMED[pos];
    let alternates: &'static [&'static str] = match name {
        "unknot" => &["unknot-alt"],
        "hopf" => &["hopf-alt"],
        "trefoil" => &["trefoil-alt"],
        "whitehead" => &["whitehead-alt"],
        "borromean" => &["borromean-alt"],
        "wh-double-borromean" => &["wh-double-borromean-alt"],
        "wh-wh-hopf" => &["wh-wh-hopf-alt"],
        _ => &[],
    };
    Ok(CatalogEntry {
        name,
        text: text_of(name).expect("every catalog name has a file"),
        alternates,
        expected: expected(name),
    })
}

/// The diagram for a catalog name.
pub fn catalog(name: &str) -> Result<LinkDiagram> {
    if let Some(n) = unlink_size(name) {
        return Ok(LinkDiagram::from_slice(SliceWord::unlink(n))?.with_provenance(format!("catalog {name}")));
    }
    entry(name)?.diagram()
}

/// Every catalog link with a checked-in file, paired with its name.
pub fn all() -> Result<Vec<(&'static str, LinkDiagram)>> {
    NAMED.iter().map(|&n| Ok((n, catalog(n)?))).collect()
}

/// Resolves `--link`: a catalog name, or else a path to a slice-word or PD
/// JSON file.
pub fn load(source: &str) -> Result<LinkDiagram> {
    match catalog(source) {
        Err(Error::UnknownLink(_)) => {}
        other => return other,
    }
    let path = std::path::Path::new(source);
    if !path.exists() {
        return Err(Error::UnknownLink(source.to_string()));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{source}: {e}")))?;
    Ok(LinkDiagram::parse(&text)?.with_provenance(format!("file {source}")))
}
