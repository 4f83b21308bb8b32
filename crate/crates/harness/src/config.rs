//! `key = value` configuration.

use serde::Deserialize;
use stdbasis::trunc::StabilizationPolicy;
use stdbasis::PrimeField;

use crate::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub p: u32,
    pub trunc_initial_offset: u32,
    pub trunc_window: u32,
    pub trunc_max_offset: u32,
    pub retry_budget: u32,
    pub workers: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            p: stdbasis::field::DEFAULT_PRIME,
            trunc_initial_offset: 2,
            trunc_window: 2,
            trunc_max_offset: 8,
            retry_budget: 32,
            workers: 1,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let cfg: Config = toml::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        PrimeField::new(self.p).map_err(|e| HarnessError::Config(e.to_string()))?;
        if self.trunc_initial_offset < 2 {
            return Err(HarnessError::Config("trunc_initial_offset must be at least 2".into()));
        }
        if self.trunc_window < 2 {
            return Err(HarnessError::Config("trunc_window must be at least 2".into()));
        }
        if self.trunc_max_offset < self.trunc_initial_offset {
            return Err(HarnessError::Config("trunc_max_offset below trunc_initial_offset".into()));
        }
        if self.workers == 0 {
            return Err(HarnessError::Config("workers must be positive".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated prime")
    }

    pub fn policy(&self) -> StabilizationPolicy {
        StabilizationPolicy {
            initial_offset: self.trunc_initial_offset,
            window: self.trunc_window,
            max_offset: self.trunc_max_offset,
        }
    }
}
