//! Benchmark inputs shared by the criterion suites.

use cobkit_core::gen::{GenParams, Generator, Square1, Square2};
use cobkit_core::{Cobordism1, Cobordism2};

/// Composable 2-cobordism pairs with up to `circles` circles per boundary.
pub fn pairs2(circles: usize, count: usize) -> Vec<(Cobordism2, Cobordism2)> {
    let mut g = Generator::new(GenParams {
        max_circles: circles,
        max_components: circles,
        max_genus: 3,
        ..GenParams::default()
    });
    (0..count)
        .map(|_| {
            let (a, b, c) = (g.size(), g.size(), g.size());
            (g.cobordism2(a, b), g.cobordism2(b, c))
        })
        .collect()
}

/// Composable oriented pairs with up to `points` points per boundary.
pub fn pairs1(points: usize, count: usize) -> Vec<(Cobordism1, Cobordism1)> {
    let mut g = Generator::new(GenParams { max_circles: points, max_components: points, ..GenParams::default() });
    (0..count)
        .map(|_| {
            let (m, k) = g.signed_pair();
            let n = g.signed_target_for(&k);
            (g.cobordism1(&m, &k).unwrap(), g.cobordism1(&k, &n).unwrap())
        })
        .collect()
}

pub fn squares(circles: usize, count: usize) -> (Vec<Square2>, Vec<Square1>) {
    let mut g = Generator::new(GenParams { max_circles: circles, max_components: circles, ..GenParams::default() });
    let two = (0..count).map(|_| g.square2()).collect();
    let one = (0..count).map(|_| g.square1()).collect();
    (two, one)
}
