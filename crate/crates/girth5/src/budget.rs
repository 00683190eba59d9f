//! Suite budgets: defaults from `budgets.toml`, optionally replaced by a
//! user config file, then overridden key by key.

use serde::{Deserialize, Serialize};

const DEFAULTS: &str = include_str!("../budgets.toml");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budget {
    pub s_lmax: u64,
    pub surf_gmax: u64,
    pub surf_tmax: u64,
    pub cyl_xmax: u64,
    pub chain_kmax: u64,
    pub broken_kmax: u64,
    pub exceptional_lmax: u64,
    pub disk_lmax: u64,
    pub disk_internal: u64,
    pub critshort_internal: u64,
    pub aksen_vertices: u64,
    pub grotzsch_n: u64,
    pub grotzsch_trials: u64,
    pub seed: u64,
    pub max_states: u64,
    /// Appends one failing case to every report (exercises the exit path).
    #[serde(default)]
    pub inject_failure: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum BudgetError {
    #[error("unknown budget key `{0}`")]
    UnknownKey(String),
    #[error("budget override `{0}` is not key=value with an integer value")]
    Malformed(String),
    #[error("budget {key} = {value} is out of range {lo}..={hi}")]
    OutOfRange { key: &'static str, value: u64, lo: u64, hi: u64 },
    #[error("budget file: {0}")]
    File(#[from] toml::de::Error),
}

impl Default for Budget {
    fn default() -> Self {
        toml::from_str(DEFAULTS).expect("bundled budgets parse")
    }
}

impl Budget {
    /// Budgets from a config file's text; missing keys keep their defaults.
    pub fn from_toml(text: &str) -> Result<Budget, BudgetError> {
        let mut table = toml::Table::try_from(Budget::default()).expect("budget serializes");
        let user: toml::Table = toml::from_str(text)?;
        for (k, v) in user {
            if !table.contains_key(&k) {
                return Err(BudgetError::UnknownKey(k));
            }
            table.insert(k, v);
        }
        let b: Budget = table.try_into()?;
        b.validate()?;
        Ok(b)
    }

    /// Applies one `key=value` override.
    pub fn set(&mut self, kv: &str) -> Result<(), BudgetError> {
        let (k, v) = kv.split_once('=').ok_or_else(|| BudgetError::Malformed(kv.into()))?;
        let v: i64 = v.trim().parse().map_err(|_| BudgetError::Malformed(kv.into()))?;
        let mut table = toml::Table::try_from(&*self).expect("budget serializes");
        let k = k.trim();
        if !table.contains_key(k) {
            return Err(BudgetError::UnknownKey(k.into()));
        }
        if v < 0 {
            return Err(BudgetError::Malformed(kv.into()));
        }
        table.insert(k.into(), toml::Value::Integer(v));
        let b: Budget = table.try_into()?;
        b.validate()?;
        *self = b;
        Ok(())
    }

    pub fn validate(&self) -> Result<(), BudgetError> {
        let ranges: [(&'static str, u64, u64, u64); 16] = [
            ("s_lmax", self.s_lmax, 9, 10_000),
            ("surf_gmax", self.surf_gmax, 0, 40),
            ("surf_tmax", self.surf_tmax, 0, 40),
            ("cyl_xmax", self.cyl_xmax, 8, 40),
            ("chain_kmax", self.chain_kmax, 0, 6),
            ("broken_kmax", self.broken_kmax, 2, 5),
            ("exceptional_lmax", self.exceptional_lmax, 11, 40),
            // ring lengths 11 and 12 are the explicit-override range
            ("disk_lmax", self.disk_lmax, 5, 12),
            ("disk_internal", self.disk_internal, 0, 8),
            ("critshort_internal", self.critshort_internal, 0, 8),
            ("aksen_vertices", self.aksen_vertices, 3, 14),
            ("grotzsch_n", self.grotzsch_n, 5, 60),
            ("grotzsch_trials", self.grotzsch_trials, 1, 100_000),
            ("seed", self.seed, 0, i64::MAX as u64),
            ("max_states", self.max_states, 1, 1_000_000_000),
            ("inject_failure", self.inject_failure, 0, 1),
        ];
        for (key, value, lo, hi) in ranges {
            if value < lo || value > hi {
                return Err(BudgetError::OutOfRange { key, value, lo, hi });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let b = Budget::default();
        b.validate().unwrap();
        assert_eq!((b.disk_lmax, b.disk_internal, b.aksen_vertices), (10, 6, 12));
    }

    #[test]
    fn overrides() {
        let mut b = Budget::default();
        b.set("grotzsch_n=30").unwrap();
        assert_eq!(b.grotzsch_n, 30);
        assert!(matches!(b.set("disk_lmax=13"), Err(BudgetError::OutOfRange { key: "disk_lmax", .. })));
        assert!(matches!(b.set("nope=1"), Err(BudgetError::UnknownKey(_))));
        assert!(matches!(b.set("seed"), Err(BudgetError::Malformed(_))));
        assert_eq!(b.grotzsch_n, 30);
    }

    #[test]
    fn config_file_keeps_missing_defaults() {
        let b = Budget::from_toml("cyl_xmax = 10\n").unwrap();
        assert_eq!(b.cyl_xmax, 10);
        assert_eq!(b.s_lmax, 200);
        assert!(Budget::from_toml("bogus = 1\n").is_err());
    }
}
