use crate::error::{Error, Result};

/// Resource guards for the exponential constructions and the enumerations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_small_k: u32,
    pub max_classic_k: u32,
    /// Largest point set accepted by the hole search.
    pub max_hole_points: usize,
    /// Largest point set accepted by the empty-triangle table, which takes
    /// cubic memory.
    pub max_triangle_points: usize,
    pub max_search_points: usize,
    pub max_search_radius: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_small_k: 16,
            max_classic_k: 8,
            max_hole_points: 128,
            max_triangle_points: 1024,
            max_search_points: 5,
            max_search_radius: 3,
        }
    }
}

fn guard(what: &'static str, got: u64, max: u64) -> Result<()> {
    if got > max {
        Err(Error::LimitExceeded { what, got, max })
    } else {
        Ok(())
    }
}

impl Limits {
    pub fn check_small_k(&self, k: u32) -> Result<()> {
        guard("k", k.into(), self.max_small_k.into())
    }

    pub fn check_classic_k(&self, k: u32) -> Result<()> {
        guard("k", k.into(), self.max_classic_k.into())
    }

    pub fn check_hole_points(&self, n: usize) -> Result<()> {
        guard("n", n as u64, self.max_hole_points as u64)
    }

    pub fn check_triangle_points(&self, n: usize) -> Result<()> {
        guard("n", n as u64, self.max_triangle_points as u64)
    }

    pub fn check_search(&self, n: usize, radius: u32) -> Result<()> {
        guard("n", n as u64, self.max_search_points as u64)?;
        guard("radius", radius.into(), self.max_search_radius.into())
    }
}
