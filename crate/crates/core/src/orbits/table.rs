use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::SimpleType;

const SHIPPED: &str = include_str!("../../data/exceptional_orbits.toml");

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct TablePolarization {
    pub marked: Vec<usize>,
    pub degree: Option<u32>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct TableEntry {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub key: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub dimension: u32,
    pub is_richardson: Option<bool>,
    pub admits_symplectic_resolution: Option<bool>,
    #[serde(default)]
    pub polarizations: Vec<TablePolarization>,
    pub provenance: String,
}

impl TableEntry {
    fn matches(&self, key: &str) -> bool {
        self.key == key || self.aliases.iter().any(|a| a == key)
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct ExceptionalTable {
    pub version: String,
    #[serde(rename = "orbit")]
    entries: Vec<TableEntry>,
}

impl ExceptionalTable {
    pub fn parse(text: &str) -> Result<Self> {
        let table: ExceptionalTable = toml::from_str(text).map_err(|e| Error::Table(e.to_string()))?;
        let mut seen = HashSet::new();
        for e in &table.entries {
            let t: SimpleType = e
                .simple_type
                .parse()
                .map_err(|_| Error::Table(format!("bad type {:?}", e.simple_type)))?;
            if t.family().is_classical() {
                return Err(Error::Table(format!("{t} is classical; use partitions")));
            }
            if e.dimension % 2 == 1 {
                return Err(Error::Table(format!("{t}:{} has odd dimension", e.key)));
            }
            for label in std::iter::once(&e.key).chain(&e.aliases) {
                if !seen.insert((t, label.clone())) {
                    return Err(Error::Table(format!("duplicate label {t}:{label}")));
                }
            }
            for p in &e.polarizations {
                if p.marked.is_empty() || p.marked.iter().any(|&m| m == 0 || m > t.rank()) {
                    return Err(Error::Table(format!("{t}:{} has a bad marking", e.key)));
                }
            }
        }
        Ok(table)
    }

    /// The table compiled into the crate, parsed once.
    pub fn shipped() -> &'static ExceptionalTable {
        static TABLE: OnceLock<ExceptionalTable> = OnceLock::new();
        TABLE.get_or_init(|| Self::parse(SHIPPED).expect("shipped exceptional table is valid"))
    }

    pub fn lookup(&self, t: SimpleType, key: &str) -> Option<&TableEntry> {
        let name = t.to_string();
        self.entries
            .iter()
            .find(|e| e.simple_type == name && e.matches(key))
    }

    pub fn entries_for(&self, t: SimpleType) -> impl Iterator<Item = &TableEntry> {
        let name = t.to_string();
        self.entries.iter().filter(move |e| e.simple_type == name)
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table_parses() {
        let t = ExceptionalTable::shipped();
        let g2: SimpleType = "G2".parse().unwrap();
        assert_eq!(t.lookup(g2, "dim8").unwrap().dimension, 8);
        assert_eq!(t.lookup(g2, "A1~").unwrap().key, "dim8");
        assert!(t.lookup(g2, "dim9").is_none());
        assert_eq!(t.entries_for(g2).count(), 5);
    }

    #[test]
    fn rejects_duplicates_and_classical() {
        let dup = r#"
            version = "x"
            [[orbit]]
            type = "G2"
            key = "a"
            dimension = 6
            provenance = "p"
            [[orbit]]
            type = "G2"
            key = "a"
            dimension = 8
            provenance = "p"
        "#;
        assert!(ExceptionalTable::parse(dup).is_err());
        let classical = r#"
            version = "x"
            [[orbit]]
            type = "A3"
            key = "a"
            dimension = 6
            provenance = "p"
        "#;
        assert!(ExceptionalTable::parse(classical).is_err());
    }
}
