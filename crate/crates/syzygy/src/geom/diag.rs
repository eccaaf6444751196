//! Two-diagonals of an even polygon and their directed crossing form.
//!
//! The polygon has `2n` vertices labelled 1 to `2n` clockwise. A
//! two-diagonal joins an odd vertex to an even one and is not a polygon
//! side; it is oriented from its odd foot to its even foot. `crossing`
//! counts directed crossings: `e(g, d) = 1` exactly when `g` starts on
//! the left of `d` and ends on the right, where the left side of `d` is
//! the open clockwise arc from its tail to its head.

use std::fmt;

/// Position of `v` on the open clockwise arc from `a` to `b` on a cycle
/// of size `m` with labels 1 to `m`.
pub fn in_cw_arc(m: u32, a: u32, b: u32, v: u32) -> bool {
    let dist = |x: u32, y: u32| (y + m - x) % m;
    let end = dist(a, b);
    let pos = dist(a, v);
    0 < pos && pos < end
}

#[derive(Debug, thiserror::Error)]
pub enum DiagError {
    #[error("vertex {0} is out of range for a polygon with {1} vertices")]
    VertexOutOfRange(u32, u32),
    #[error("feet {0} and {1} have the same parity")]
    SameParity(u32, u32),
    #[error("feet {0} and {1} are adjacent polygon vertices")]
    Side(u32, u32),
    #[error("cannot parse `{0}` as a diagonal")]
    Parse(String),
}

/// A two-diagonal of the polygon with `2n` vertices, oriented odd to even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diag {
    n: u32,
    /// The odd foot.
    tail: u32,
    /// The even foot.
    head: u32,
}

impl Diag {
    /// Builds the diagonal with feet `a` and `b`, orienting it odd to even.
    pub fn new(n: u32, a: u32, b: u32) -> Result<Self, DiagError> {
        let m = 2 * n;
        for v in [a, b] {
            if v < 1 || v > m {
                return Err(DiagError::VertexOutOfRange(v, m));
            }
        }
        if a % 2 == b % 2 {
            return Err(DiagError::SameParity(a, b));
        }
        let (tail, head) = if a % 2 == 1 { (a, b) } else { (b, a) };
        let span = (head + m - tail) % m;
        if span == 1 || span == m - 1 {
            return Err(DiagError::Side(a, b));
        }
        Ok(Diag { n, tail, head })
    }

    pub fn polygon_half(&self) -> u32 {
        self.n
    }

    pub fn tail(&self) -> u32 {
        self.tail
    }

    pub fn head(&self) -> u32 {
        self.head
    }

    /// Clockwise distance from tail to head; always odd, between 3 and
    /// `2n - 3`.
    pub fn span(&self) -> u32 {
        let m = 2 * self.n;
        (self.head + m - self.tail) % m
    }

    pub fn is_diameter(&self) -> bool {
        self.span() == self.n
    }

    /// Rotates both feet clockwise by `k` steps (negative turns allowed).
    pub fn rotate(&self, k: i64) -> Diag {
        let m = 2 * self.n as i64;
        let shift = |v: u32| -> u32 { ((v as i64 - 1 + k).rem_euclid(m) + 1) as u32 };
        Diag::new(self.n, shift(self.tail), shift(self.head))
            .expect("rotation preserves diagonal validity")
    }

    /// The syzygy rotation: one step clockwise.
    pub fn syzygy(&self) -> Diag {
        self.rotate(1)
    }

    /// The translation `tau`: two steps counterclockwise.
    pub fn tau(&self) -> Diag {
        self.rotate(-2)
    }

    /// The half-turn of the polygon.
    pub fn half_turn(&self) -> Diag {
        self.rotate(self.n as i64)
    }

    /// Directed crossing number, 0 or 1: whether `self` goes from the
    /// left side of `other` to its right side.
    pub fn crossing(&self, other: &Diag) -> u8 {
        debug_assert_eq!(self.n, other.n);
        let m = 2 * self.n;
        let start_left = in_cw_arc(m, other.tail, other.head, self.tail);
        let end_right = in_cw_arc(m, other.head, other.tail, self.head);
        u8::from(start_left && end_right)
    }

    /// Every two-diagonal of the `2n`-gon, in sorted order.
    pub fn all(n: u32) -> Vec<Diag> {
        let m = 2 * n;
        let mut out = Vec::new();
        for tail in (1..=m).step_by(2) {
            for span in (3..=m - 3).step_by(2) {
                let head = (tail + span - 1) % m + 1;
                out.push(Diag::new(n, tail, head).expect("valid by construction"));
            }
        }
        out.sort();
        out
    }

    /// Parses `(a,b)` with feet in either order.
    pub fn parse(n: u32, s: &str) -> Result<Self, DiagError> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| DiagError::Parse(s.to_string()))?;
        let mut feet = inner.split(',').map(|t| t.trim().parse::<u32>());
        match (feet.next(), feet.next(), feet.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Diag::new(n, a, b),
            _ => Err(DiagError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Diag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_thirty_five_for_seven() {
        assert_eq!(Diag::all(7).len(), 35);
        assert_eq!(Diag::all(3).len(), 3);
    }

    #[test]
    fn diameters_are_fixed_by_half_turn() {
        for d in Diag::all(7) {
            assert_eq!(d.is_diameter(), d.half_turn() == d);
        }
    }

    #[test]
    fn crossing_is_rotation_invariant() {
        let all = Diag::all(7);
        for g in &all {
            for d in &all {
                let e = g.crossing(d);
                for k in [1, 2, 5, 7, 13] {
                    assert_eq!(g.rotate(k).crossing(&d.rotate(k)), e);
                }
            }
        }
    }

    #[test]
    fn distinct_diagonals_cross_at_most_once_each_way() {
        let all = Diag::all(7);
        for g in &all {
            assert_eq!(g.crossing(g), 0);
            for d in &all {
                if g != d {
                    assert!(g.crossing(d) + d.crossing(g) <= 2);
                }
            }
        }
    }

    #[test]
    fn crossing_example_values() {
        let g = Diag::new(7, 3, 10).unwrap();
        let d = Diag::new(7, 7, 2).unwrap();
        assert_eq!(d.crossing(&g), 1);
        assert_eq!(g.crossing(&d), 0);
    }

    #[test]
    fn tau_is_inverse_square_of_syzygy() {
        for d in Diag::all(7) {
            assert_eq!(d.syzygy().syzygy().tau(), d);
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        for d in Diag::all(7) {
            let back = Diag::parse(7, &d.to_string()).unwrap();
            assert_eq!(back, d);
        }
        let flipped = Diag::parse(7, "(10,3)").unwrap();
        assert_eq!(flipped, Diag::new(7, 3, 10).unwrap());
    }
}
