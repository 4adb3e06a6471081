//! The difference set of the Keller graph and the class-1 coloring built
//! from it.

use super::{add, check_dim, digit, sub, vertex_count, MAX_BUILD_DIM};
use crate::error::Result;
use crate::graph::{Color, EdgeColoring, Vertex};

/// `S`: tuples with at least one 2, minus the `d` tuples with a single 2 and
/// zeros elsewhere. `S_0` holds the members with only even digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorKernel {
    pub d: usize,
    /// Sorted; color `c` of [`class1_coloring`] is `s[c - 1]`.
    pub s: Vec<Vertex>,
    pub s0: Vec<Vertex>,
    pub s1: Vec<Vertex>,
}

impl ColorKernel {
    pub fn new(d: usize) -> Result<Self> {
        check_dim(d, 12)?;
        let digits = |v: Vertex| (0..d).map(move |i| digit(d, v, i));
        let s: Vec<Vertex> = (0..vertex_count(d))
            .filter(|&v| {
                let twos = digits(v).filter(|&x| x == 2).count();
                let nonzero = digits(v).filter(|&x| x != 0).count();
                twos >= 1 && nonzero >= 2
            })
            .collect();
        let (s0, s1) = s.iter().partition(|&&v| digits(v).all(|x| x % 2 == 0));
        Ok(ColorKernel { d, s, s0, s1 })
    }

    pub fn color_of(&self, s: Vertex) -> Option<Color> {
        self.s.binary_search(&s).ok().map(|i| i as Color + 1)
    }

    pub fn neg(&self, s: Vertex) -> Vertex {
        sub(self.d, 0, s)
    }

    /// Smallest member of each class `{v, v+s, v+2s, v+3s}`.
    pub fn representatives(&self, s: Vertex) -> Vec<Vertex> {
        let d = self.d;
        (0..vertex_count(d))
            .filter(|&v| {
                let v1 = add(d, v, s);
                let v2 = add(d, v1, s);
                let v3 = add(d, v2, s);
                v < v1 && v < v2 && v < v3
            })
            .collect()
    }
}

/// Class-1 coloring of `G_d` with `|S| = Δ` colors.
///
/// An even `s` colors every edge `v - v+s`; an odd `s` colors `v - v+s` and
/// `v+2s - v+3s` for each class representative `v`.
pub fn class1_coloring(d: usize) -> Result<(EdgeColoring, ColorKernel)> {
    check_dim(d, MAX_BUILD_DIM)?;
    let k = ColorKernel::new(d)?;
    let mut c = EdgeColoring::new(k.s.len() as Color);
    for (idx, &s) in k.s.iter().enumerate() {
        let color = idx as Color + 1;
        if k.s0.binary_search(&s).is_ok() {
            for v in 0..vertex_count(d) {
                c.set(v, add(d, v, s), color);
            }
        } else {
            for v in k.representatives(s) {
                let v1 = add(d, v, s);
                let v2 = add(d, v1, s);
                let v3 = add(d, v2, s);
                c.set(v, v1, color);
                c.set(v2, v3, color);
            }
        }
    }
    Ok((c, k))
}
