//! Random geometric (unit-disk) topologies on a square area.
//!
//! Points are drawn i.i.d. uniform over `[0, area_side)²` from a ChaCha8
//! stream. The generator is seeded with `seed_from_u64(seed)` and the
//! ChaCha stream number selects the retry, so retry `k` of a given seed is
//! always the same point set regardless of platform.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CdsError, Result};
use crate::graph::Graph;

/// Name of the point generator, recorded in experiment metadata.
pub const PRNG_NAME: &str = "ChaCha8Rng(rand_chacha 0.3; seed_from_u64(seed); stream=retry)";

pub const DEFAULT_AREA_SIDE: f64 = 100.0;
pub const DEFAULT_RADIUS: f64 = 25.0;
pub const DEFAULT_MAX_RETRIES: u32 = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    fn squared_distance(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// Parameters for [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub area_side: f64,
    pub radius: f64,
    pub seed: u64,
    pub require_connected: bool,
    pub max_retries: u32,
}

impl GenSpec {
    /// Spec with the default area, radius and retry budget, requiring connectivity.
    pub fn new(n: usize, seed: u64) -> Self {
        GenSpec {
            n,
            area_side: DEFAULT_AREA_SIDE,
            radius: DEFAULT_RADIUS,
            seed,
            require_connected: true,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(CdsError::InvalidSpec("n must be at least 1"));
        }
        if !(self.area_side.is_finite() && self.area_side > 0.0) {
            return Err(CdsError::InvalidSpec("area side must be positive"));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(CdsError::InvalidSpec("radius must be positive"));
        }
        if self.max_retries == 0 {
            return Err(CdsError::InvalidSpec("max_retries must be at least 1"));
        }
        Ok(())
    }
}

/// Node placement plus the wireless range that turns it into a unit-disk graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricTopology {
    pub points: Vec<Point>,
    pub area_side: f64,
    pub radius: f64,
    pub seed: u64,
}

impl GeometricTopology {
    pub fn node_count(&self) -> usize {
        self.points.len()
    }

    /// Unit-disk graph: `u`-`v` is an edge iff `|p_u - p_v|² <= radius²` (closed disk).
    pub fn to_graph(&self) -> Graph {
        let r2 = self.radius * self.radius;
        Graph::from_pair_predicate(self.points.len(), |u, v| {
            self.points[u].squared_distance(&self.points[v]) <= r2
        })
    }
}

fn unit_interval(rng: &mut ChaCha8Rng) -> f64 {
    // 53 random mantissa bits -> [0, 1).
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn draw_points(spec: &GenSpec, retry: u32) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(u64::from(retry));
    (0..spec.n)
        .map(|_| {
            let x = unit_interval(&mut rng) * spec.area_side;
            let y = unit_interval(&mut rng) * spec.area_side;
            Point::new(x, y)
        })
        .collect()
}

/// Draws a topology for `spec`. With `require_connected`, retries `0..max_retries`
/// are tried in order and the first connected one is returned.
pub fn generate(spec: &GenSpec) -> Result<GeometricTopology> {
    spec.validate()?;
    let attempts = if spec.require_connected {
        spec.max_retries
    } else {
        1
    };
    for retry in 0..attempts {
        let topo = GeometricTopology {
            points: draw_points(spec, retry),
            area_side: spec.area_side,
            radius: spec.radius,
            seed: spec.seed,
        };
        if !spec.require_connected || topo.to_graph().is_connected() {
            return Ok(topo);
        }
    }
    Err(CdsError::GenerationFailed {
        retries: spec.max_retries,
    })
}
