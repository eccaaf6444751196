//! Two-arcs of a punctured polygon with an odd number of marked points,
//! their lifts to two-diagonals of the doubled polygon, and the directed
//! crossing form computed through the double cover.
//!
//! Plain arcs `(i,j)` run clockwise across an odd span between 3 and
//! `n-2`; each marked point also carries two signed loops `(i,i)+` and
//! `(i,i)-` around the puncture.

use std::fmt;

use super::diag::Diag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ArcError {
    #[error("marked point {0} is out of range for {1} marked points")]
    VertexOutOfRange(u32, u32),
    #[error("span {0} is not an odd value between 3 and {1}")]
    BadSpan(u32, u32),
    #[error("cannot parse `{0}` as an arc")]
    Parse(String),
}

/// A two-arc of the punctured polygon with `n` marked points (`n` odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arc {
    Plain { n: u32, tail: u32, head: u32 },
    Loop { n: u32, foot: u32, sign: Sign },
}

/// Result of projecting a two-diagonal into the punctured polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projected {
    Plain(Arc),
    LoopPair(Arc, Arc),
}

fn norm(n: u32, v: i64) -> u32 {
    ((v - 1).rem_euclid(n as i64) + 1) as u32
}

impl Arc {
    pub fn plain(n: u32, tail: u32, head: u32) -> Result<Arc, ArcError> {
        for v in [tail, head] {
            if v < 1 || v > n {
                return Err(ArcError::VertexOutOfRange(v, n));
            }
        }
        let span = (head + n - tail) % n;
        if span.is_multiple_of(2) || span < 3 || span > n - 2 {
            return Err(ArcError::BadSpan(span, n - 2));
        }
        Ok(Arc::Plain { n, tail, head })
    }

    pub fn signed_loop(n: u32, foot: u32, sign: Sign) -> Result<Arc, ArcError> {
        if foot < 1 || foot > n {
            return Err(ArcError::VertexOutOfRange(foot, n));
        }
        Ok(Arc::Loop { n, foot, sign })
    }

    pub fn marked_points(&self) -> u32 {
        match *self {
            Arc::Plain { n, .. } | Arc::Loop { n, .. } => n,
        }
    }

    pub fn is_loop(&self) -> bool {
        matches!(self, Arc::Loop { .. })
    }

    /// Clockwise rotation by `k` marked points. On loops the sign flips
    /// once per step exactly when `(n + 1) / 2` is odd.
    pub fn rotate(&self, k: i64) -> Arc {
        match *self {
            Arc::Plain { n, tail, head } => Arc::Plain {
                n,
                tail: norm(n, tail as i64 + k),
                head: norm(n, head as i64 + k),
            },
            Arc::Loop { n, foot, sign } => {
                let flips = if n.div_ceil(2) % 2 == 1 {
                    k.rem_euclid(2)
                } else {
                    0
                };
                Arc::Loop {
                    n,
                    foot: norm(n, foot as i64 + k),
                    sign: if flips == 1 { sign.flip() } else { sign },
                }
            }
        }
    }

    /// The syzygy rotation: one step clockwise.
    pub fn syzygy(&self) -> Arc {
        self.rotate(1)
    }

    /// The translation `tau`: two steps counterclockwise, sign preserved.
    pub fn tau(&self) -> Arc {
        self.rotate(-2)
    }

    /// A lift to the polygon with `2n` vertices. Loops lift to the
    /// diameter at their foot; the other lift of any arc is the half turn
    /// of this one.
    pub fn lift(&self) -> Diag {
        match *self {
            Arc::Plain { n, tail, head } => {
                let span = (head + n - tail) % n;
                let h = (tail + span - 1) % (2 * n) + 1;
                Diag::new(n, tail, h).expect("plain arcs lift to diagonals")
            }
            Arc::Loop { n, foot, .. } => {
                Diag::new(n, foot, foot + n).expect("loops lift to diameters")
            }
        }
    }

    /// Directed crossing number in the punctured polygon, between 0 and 2.
    ///
    /// Crossings of plain arcs are counted through the double cover; a
    /// pair involving a loop crosses at most once, and two loops cross
    /// according to the foot distance and sign alternation.
    pub fn crossing(&self, other: &Arc) -> u8 {
        match (*self, *other) {
            (Arc::Plain { .. }, Arc::Plain { .. }) => {
                let g = self.lift();
                let d = other.lift();
                g.crossing(&d) + g.crossing(&d.half_turn())
            }
            (
                Arc::Loop {
                    n,
                    foot: x,
                    sign: e,
                },
                Arc::Loop {
                    foot: y, sign: d, ..
                },
            ) => {
                let k = (x + n - y) % n * n.div_ceil(2) % n;
                if k == 0 || k > (n - 1) / 2 {
                    return 0;
                }
                let expected = if k % 2 == 1 { e } else { e.flip() };
                u8::from(d == expected)
            }
            _ => self.lift().crossing(&other.lift()),
        }
    }

    /// Every two-arc of the punctured polygon, in sorted order.
    pub fn all(n: u32) -> Vec<Arc> {
        let mut out = Vec::new();
        for tail in 1..=n {
            for span in (3..=n.saturating_sub(2)).step_by(2) {
                let head = (tail + span - 1) % n + 1;
                out.push(Arc::plain(n, tail, head).expect("valid by construction"));
            }
            for sign in [Sign::Plus, Sign::Minus] {
                out.push(Arc::signed_loop(n, tail, sign).expect("valid by construction"));
            }
        }
        out.sort();
        out
    }

    /// Parses `(i,j)`, `(i,i)+`, or `(i,i)-`.
    pub fn parse(n: u32, s: &str) -> Result<Arc, ArcError> {
        let s = s.trim();
        let (body, sign) = match s.strip_suffix('+') {
            Some(b) => (b.trim(), Some(Sign::Plus)),
            None => match s.strip_suffix('-') {
                Some(b) => (b.trim(), Some(Sign::Minus)),
                None => (s, None),
            },
        };
        let inner = body
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| ArcError::Parse(s.to_string()))?;
        let mut feet = inner.split(',').map(|t| t.trim().parse::<u32>());
        let (a, b) = match (feet.next(), feet.next(), feet.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => (a, b),
            _ => return Err(ArcError::Parse(s.to_string())),
        };
        match sign {
            Some(sig) if a == b => Arc::signed_loop(n, a, sig),
            None if a != b => Arc::plain(n, a, b),
            _ => Err(ArcError::Parse(s.to_string())),
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arc::Plain { tail, head, .. } => write!(f, "({tail},{head})"),
            Arc::Loop { foot, sign, .. } => write!(f, "({foot},{foot}){sign}"),
        }
    }
}

/// Projects a two-diagonal of the `2n`-gon down to the punctured polygon.
/// Diameters project onto the pair of signed loops at their foot.
pub fn project(d: &Diag) -> Projected {
    let n = d.polygon_half();
    let bar = |v: u32| (v - 1) % n + 1;
    let span = d.span();
    if span == n {
        let foot = bar(d.tail());
        return Projected::LoopPair(
            Arc::signed_loop(n, foot, Sign::Plus).expect("foot in range"),
            Arc::signed_loop(n, foot, Sign::Minus).expect("foot in range"),
        );
    }
    let (a, b) = if span < n {
        (d.tail(), d.head())
    } else {
        (d.head(), d.tail())
    };
    Projected::Plain(Arc::plain(n, bar(a), bar(b)).expect("short spans project to arcs"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_triangular_numbers() {
        assert_eq!(Arc::all(7).len(), 28);
        assert_eq!(Arc::all(9).len(), 45);
    }

    #[test]
    fn lift_then_project_recovers_arc() {
        for arc in Arc::all(7).into_iter().chain(Arc::all(9)) {
            match (project(&arc.lift()), arc) {
                (Projected::Plain(back), Arc::Plain { .. }) => assert_eq!(back, arc),
                (Projected::LoopPair(p, m), Arc::Loop { .. }) => {
                    assert!(arc == p || arc == m)
                }
                (got, _) => panic!("projection mismatch for {arc}: {got:?}"),
            }
        }
    }

    #[test]
    fn rotation_periods() {
        for arc in Arc::all(7) {
            let mut cur = arc;
            for _ in 0..7 {
                cur = cur.syzygy();
            }
            assert_eq!(cur, arc, "period of {arc} exceeds 7");
        }
        for arc in Arc::all(9) {
            let mut cur = arc;
            for _ in 0..9 {
                cur = cur.syzygy();
            }
            if arc.is_loop() {
                assert_ne!(cur, arc);
                for _ in 0..9 {
                    cur = cur.syzygy();
                }
            }
            assert_eq!(cur, arc);
        }
    }

    #[test]
    fn tau_preserves_loop_signs() {
        for n in [7, 9] {
            for arc in Arc::all(n) {
                assert_eq!(arc.syzygy().syzygy().tau(), arc);
                if let Arc::Loop { sign, .. } = arc {
                    if let Arc::Loop { sign: s2, .. } = arc.tau() {
                        assert_eq!(sign, s2);
                    } else {
                        panic!("tau must preserve loops");
                    }
                }
            }
        }
    }

    #[test]
    fn loop_loop_crossings_match_worked_example() {
        let n = 7;
        let lp = |x: u32, s: Sign| Arc::signed_loop(n, x, s).unwrap();
        let three = lp(3, Sign::Plus);
        let hits: Vec<Arc> = Arc::all(n)
            .into_iter()
            .filter(|a| a.is_loop() && three.crossing(a) == 1)
            .collect();
        assert_eq!(
            hits,
            vec![lp(1, Sign::Plus), lp(4, Sign::Plus), lp(6, Sign::Minus)]
        );
        let hit_by: Vec<Arc> = Arc::all(n)
            .into_iter()
            .filter(|a| a.is_loop() && a.crossing(&three) == 1)
            .collect();
        assert_eq!(
            hit_by,
            vec![lp(2, Sign::Plus), lp(5, Sign::Plus), lp(7, Sign::Minus)]
        );
    }

    #[test]
    fn loop_pairs_cross_at_most_once_in_total() {
        for n in [7, 9] {
            for g in Arc::all(n) {
                for d in Arc::all(n) {
                    if g.is_loop() || d.is_loop() {
                        assert!(g.crossing(&d) <= 1);
                        if g.is_loop() && d.is_loop() {
                            assert!(g.crossing(&d) + d.crossing(&g) <= 1 || g == d);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        for arc in Arc::all(9) {
            assert_eq!(Arc::parse(9, &arc.to_string()).unwrap(), arc);
        }
    }
}
