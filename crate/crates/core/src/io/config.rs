//! Configuration file: prefixes, identifier bases, default framework and
//! extra schema or profile documents.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::io::interchange::InterchangeDocument;
use crate::schema::SchemaTemplate;
use crate::store::{LayeredStore, StandardProfile, StoreConfig};
use crate::term::Iri;

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "SEMUNIT_CONFIG";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AppConfig {
    #[serde(flatten)]
    pub store: StoreConfig,
    pub prefixes: BTreeMap<String, String>,
    /// JSON files holding an array of schema templates.
    pub schema_paths: Vec<PathBuf>,
    /// JSON files holding an array of standard profiles.
    pub profile_paths: Vec<PathBuf>,
}

impl AppConfig {
    /// Reads a config file; relative template paths resolve against its
    /// directory.
    pub fn load(path: &Path) -> Result<Self> {
        let mut cfg: AppConfig = serde_json::from_str(&fs::read_to_string(path)?)?;
        let dir = path.parent().unwrap_or(Path::new("."));
        for p in cfg
            .schema_paths
            .iter_mut()
            .chain(cfg.profile_paths.iter_mut())
        {
            if p.is_relative() {
                *p = dir.join(&*p);
            }
        }
        Ok(cfg)
    }

    /// The config named by `explicit`, else by the environment, else the
    /// defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self> {
        match explicit {
            Some(p) => Self::load(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) => Self::load(Path::new(&p)),
                None => Ok(AppConfig::default()),
            },
        }
    }

    /// Schema and profile templates from the listed files.
    pub fn templates(&self) -> Result<(Vec<SchemaTemplate>, Vec<StandardProfile>)> {
        let mut schemas = Vec::new();
        for path in &self.schema_paths {
            let batch: Vec<SchemaTemplate> = serde_json::from_str(&fs::read_to_string(path)?)?;
            schemas.extend(batch);
        }
        let mut profiles = Vec::new();
        for path in &self.profile_paths {
            let batch: Vec<StandardProfile> = serde_json::from_str(&fs::read_to_string(path)?)?;
            profiles.extend(batch);
        }
        Ok((schemas, profiles))
    }

    /// Applies prefixes and loads the listed schema and profile files.
    pub fn apply(&self, store: &mut LayeredStore) -> Result<()> {
        for (p, b) in &self.prefixes {
            store.add_prefix(p, &Iri::new(b.clone())?);
        }
        let (schemas, profiles) = self.templates()?;
        for s in schemas {
            store.register_schema(s)?;
        }
        for p in profiles {
            store.register_profile(p);
        }
        Ok(())
    }

    /// Builds a store from an interchange document. Config prefixes and
    /// templates come first so the document can use and override them.
    pub fn build(&self, mut doc: InterchangeDocument) -> Result<LayeredStore> {
        for (p, b) in &self.prefixes {
            doc.prefixes.entry(p.clone()).or_insert_with(|| b.clone());
        }
        let (schemas, profiles) = self.templates()?;
        doc.schemas.splice(0..0, schemas);
        doc.profiles.splice(0..0, profiles);
        doc.into_store(self.store.clone())
    }

    /// An empty store set up from this config.
    pub fn new_store(&self) -> Result<LayeredStore> {
        let mut store = LayeredStore::new(self.store.clone());
        self.apply(&mut store)?;
        Ok(store)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unit::LogicFramework;

    #[test]
    fn config_fields_parse() {
        let cfg: AppConfig = serde_json::from_str(
            r#"{"gupri_base": "https://other.example/u/", "default_framework": "LogicProgram",
                "prefixes": {"ex": "https://e.x/"}}"#,
        )
        .unwrap();
        assert_eq!(cfg.store.gupri_base.as_str(), "https://other.example/u/");
        assert_eq!(cfg.store.default_framework, LogicFramework::LogicProgram);
        let mut store = cfg.new_store().unwrap();
        assert_eq!(store.prefixes()["ex"], "https://e.x/");
        assert!(store
            .mint_gupri("x")
            .as_str()
            .starts_with("https://other.example/u/x-"));
    }
}
