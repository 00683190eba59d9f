//! A rayon-backed batch mapper for the enumerator.

use girth5_core::enumerate::{BatchMap, Expanded};
use girth5_core::plane::PlaneMap;
use rayon::prelude::*;

pub struct Parallel {
    pool: rayon::ThreadPool,
}

impl Parallel {
    pub fn new(threads: usize) -> Parallel {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
        Parallel { pool }
    }

    /// Thread count from `GIRTH5_THREADS`, else rayon's default.
    pub fn from_env() -> Parallel {
        Parallel::new(threads_from_env())
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

/// `GIRTH5_THREADS` if it is a positive integer, else 0 (rayon picks).
pub fn threads_from_env() -> usize {
    std::env::var("GIRTH5_THREADS").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(0)
}

impl BatchMap for Parallel {
    fn map(&self, items: &[PlaneMap], f: &(dyn Fn(&PlaneMap) -> Expanded + Sync)) -> Vec<Expanded> {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use girth5_core::enumerate::{Search, SearchSpec, Sequential};

    #[test]
    fn same_output_as_sequential() {
        let s = Search::new(SearchSpec::disk(9, 3)).unwrap();
        let a = s.run(&Sequential).unwrap();
        let b = s.run(&Parallel::new(3)).unwrap();
        assert_eq!(a.states, b.states);
        let keys = |o: &girth5_core::enumerate::SearchOutcome| o.found.iter().map(|f| f.key.clone()).collect::<Vec<_>>();
        assert_eq!(keys(&a), keys(&b));
    }
}
