//! Redex selection strategies, selectable by name.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::system::Redex;

pub trait Strategy {
    fn name(&self) -> &'static str;
    /// Index into `redexes`, which is never empty and sorted by (position, rule).
    fn pick(&mut self, redexes: &[Redex]) -> usize;
}

pub struct Leftmost;

impl Strategy for Leftmost {
    fn name(&self) -> &'static str {
        "leftmost"
    }
    fn pick(&mut self, _: &[Redex]) -> usize {
        0
    }
}

pub struct Rightmost;

impl Strategy for Rightmost {
    fn name(&self) -> &'static str {
        "rightmost"
    }
    fn pick(&mut self, redexes: &[Redex]) -> usize {
        let last = redexes.last().expect("non-empty").position;
        redexes.iter().position(|r| r.position == last).unwrap()
    }
}

pub struct Random {
    rng: ChaCha8Rng,
}

impl Random {
    pub fn new(seed: u64) -> Self {
        Random { rng: ChaCha8Rng::seed_from_u64(seed) }
    }
}

impl Strategy for Random {
    fn name(&self) -> &'static str {
        "random"
    }
    fn pick(&mut self, redexes: &[Redex]) -> usize {
        self.rng.gen_range(0..redexes.len())
    }
}

type Builder = fn(u64) -> Box<dyn Strategy>;

const REGISTRY: &[(&str, Builder)] = &[
    ("leftmost", |_| Box::new(Leftmost)),
    ("rightmost", |_| Box::new(Rightmost)),
    ("random", |seed| Box::new(Random::new(seed))),
];

pub fn strategy_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|(n, _)| *n)
}

pub fn strategy_by_name(name: &str, seed: u64) -> Option<Box<dyn Strategy>> {
    REGISTRY.iter().find(|(n, _)| *n == name).map(|(_, b)| b(seed))
}
