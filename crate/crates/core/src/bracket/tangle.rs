//! Building planar diagrams from 2-tangles.
//!
//! A crossing node has four ports numbered counterclockwise from its
//! south-west corner: `0 = SW`, `1 = SE`, `2 = NE`, `3 = NW`. Ports `0, 2`
//! and `1, 3` are joined by straight strands. A [`Twist::Positive`] crossing
//! has the `NW–SE` strand on top; its A-smoothing joins `SW–SE` and
//! `NW–NE`, so in bracket terms it is `A·[0] + A^-1·[∞]`.
//!
//! Pass-through nodes use ports `0` and `2` only and let trivial tangles
//! carry arcs without crossings.

use crate::bracket::pd::PDCode;
use crate::error::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Positive,
    Negative,
}

impl Twist {
    fn from_sign(s: i64) -> Twist {
        if s > 0 {
            Twist::Positive
        } else {
            Twist::Negative
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Crossing(Twist),
    Pass,
}

type Port = usize;

fn node_of(p: Port) -> usize {
    p / 4
}

fn pos_of(p: Port) -> usize {
    p % 4
}

/// A 2-tangle under construction with open ends at its four corners.
#[derive(Clone, Debug)]
pub struct TangleDiagram {
    nodes: Vec<Node>,
    mate: Vec<Option<Port>>,
    nw: Port,
    ne: Port,
    sw: Port,
    se: Port,
}

impl TangleDiagram {
    fn empty() -> Self {
        TangleDiagram {
            nodes: Vec::new(),
            mate: Vec::new(),
            nw: 0,
            ne: 0,
            sw: 0,
            se: 0,
        }
    }

    fn push(&mut self, node: Node) -> usize {
        self.nodes.push(node);
        self.mate.extend([None; 4]);
        self.nodes.len() - 1
    }

    fn join(&mut self, a: Port, b: Port) {
        debug_assert!(self.mate[a].is_none() && self.mate[b].is_none());
        self.mate[a] = Some(b);
        self.mate[b] = Some(a);
    }

    /// Two horizontal arcs: `NW–NE` and `SW–SE`.
    pub fn zero() -> Self {
        let mut t = Self::empty();
        let top = t.push(Node::Pass);
        let bottom = t.push(Node::Pass);
        t.nw = 4 * top;
        t.ne = 4 * top + 2;
        t.sw = 4 * bottom;
        t.se = 4 * bottom + 2;
        t
    }

    /// Two vertical arcs: `NW–SW` and `NE–SE`.
    pub fn infinity() -> Self {
        let mut t = Self::empty();
        let left = t.push(Node::Pass);
        let right = t.push(Node::Pass);
        t.nw = 4 * left;
        t.sw = 4 * left + 2;
        t.ne = 4 * right;
        t.se = 4 * right + 2;
        t
    }

    pub fn num_crossings(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, Node::Crossing(_)))
            .count()
    }

    /// Adds a crossing on the right, twisting the `NE` and `SE` ends.
    pub fn twist_right(&mut self, twist: Twist) {
        let x = self.push(Node::Crossing(twist));
        self.join(4 * x + 3, self.ne);
        self.join(4 * x, self.se);
        self.ne = 4 * x + 2;
        self.se = 4 * x + 1;
    }

    /// Adds a crossing below, twisting the `SW` and `SE` ends.
    pub fn twist_bottom(&mut self, twist: Twist) {
        let x = self.push(Node::Crossing(twist));
        self.join(4 * x + 3, self.sw);
        self.join(4 * x + 2, self.se);
        self.sw = 4 * x;
        self.se = 4 * x + 1;
    }

    /// Tangle sum: `other` is placed to the right of `self`.
    pub fn plus(mut self, other: &TangleDiagram) -> TangleDiagram {
        let offset = 4 * self.nodes.len();
        self.nodes.extend_from_slice(&other.nodes);
        self.mate.extend(other.mate.iter().map(|m| m.map(|p| p + offset)));
        self.join(self.ne, other.nw + offset);
        self.join(self.se, other.sw + offset);
        self.ne = other.ne + offset;
        self.se = other.se + offset;
        self
    }

    /// Horizontal integer tangle `[s]`: `|s|` crossings added on the right of `[0]`.
    pub fn horizontal(s: i64) -> Self {
        let mut t = Self::zero();
        for _ in 0..s.unsigned_abs() {
            t.twist_right(Twist::from_sign(s));
        }
        t
    }

    /// Vertical tangle `1/[s]`: `|s|` crossings added below `[∞]`.
    pub fn vertical(s: i64) -> Self {
        let mut t = Self::infinity();
        for _ in 0..s.unsigned_abs() {
            t.twist_bottom(Twist::from_sign(s));
        }
        t
    }

    /// Joins `NW–NE` and `SW–SE`.
    pub fn numerator(mut self) -> Result<PDCode, DiagramError> {
        self.join(self.nw, self.ne);
        self.join(self.sw, self.se);
        self.into_pd()
    }

    /// Joins `NW–SW` and `NE–SE`.
    pub fn denominator(mut self) -> Result<PDCode, DiagramError> {
        self.join(self.nw, self.sw);
        self.join(self.ne, self.se);
        self.into_pd()
    }

    /// Follows the closed diagram component by component and emits a PD
    /// code with consecutive labels along the traversal direction.
    fn into_pd(self) -> Result<PDCode, DiagramError> {
        let n = self.nodes.len();
        // label and flow at every crossing port
        let mut label: Vec<Option<(u32, bool)>> = vec![None; 4 * n];
        let mut next_label = 1u32;
        let crossing_ports = (0..n)
            .filter(|&i| matches!(self.nodes[i], Node::Crossing(_)))
            .flat_map(|i| (0..4).map(move |p| 4 * i + p));
        for start in crossing_ports {
            if label[start].is_some() {
                continue;
            }
            // leave through `start`
            let mut out_port = start;
            loop {
                let l = next_label;
                next_label += 1;
                label[out_port] = Some((l, false));
                let mut p = self.mate[out_port].expect("closed diagram");
                while self.nodes[node_of(p)] == Node::Pass {
                    let other = 4 * node_of(p) + (pos_of(p) + 2) % 4;
                    p = self.mate[other].expect("closed diagram");
                }
                label[p] = Some((l, true));
                out_port = 4 * node_of(p) + (pos_of(p) + 2) % 4;
                if out_port == start {
                    break;
                }
            }
        }
        // crossingless components leave pass-through ports unvisited
        let mut visited_pass = vec![false; n];
        for (i, l) in label.iter().enumerate() {
            if l.is_some() {
                let mut p = self.mate[i].expect("closed diagram");
                while self.nodes[node_of(p)] == Node::Pass && !visited_pass[node_of(p)] {
                    visited_pass[node_of(p)] = true;
                    p = self.mate[4 * node_of(p) + (pos_of(p) + 2) % 4].expect("closed diagram");
                }
            }
        }
        if (0..n).any(|i| self.nodes[i] == Node::Pass && !visited_pass[i]) {
            return Err(DiagramError::FreeLoop);
        }

        let mut crossings = Vec::new();
        for i in 0..n {
            let twist = match self.nodes[i] {
                Node::Crossing(t) => t,
                Node::Pass => continue,
            };
            let under = match twist {
                Twist::Positive => [0, 2],
                Twist::Negative => [1, 3],
            };
            let incoming = under
                .into_iter()
                .find(|&p| label[4 * i + p].is_some_and(|(_, inc)| inc))
                .expect("under-strand has an incoming end");
            let tuple = [0, 1, 2, 3].map(|k| label[4 * i + (incoming + k) % 4].expect("labelled").0);
            crossings.push(tuple);
        }
        PDCode::new(crossings)
    }
}

/// Conway notation `C(a_1, ..., a_k)` of a rational link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConwayCode {
    entries: Vec<i64>,
}

impl ConwayCode {
    pub fn new(entries: Vec<i64>) -> Result<Self, DiagramError> {
        if entries.is_empty() {
            return Err(DiagramError::InvalidCode("empty code".into()));
        }
        if entries.contains(&0) {
            return Err(DiagramError::InvalidCode(format!("zero entry in {entries:?}")));
        }
        Ok(ConwayCode { entries })
    }

    /// `C(2n, 3)`.
    pub fn double_twist(n: u64) -> Self {
        ConwayCode {
            entries: vec![2 * n as i64, 3],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `a_1 + 1/(a_2 + 1/(... + 1/a_k))` as `(p, q)` with `q > 0`.
    pub fn fraction(&self) -> (i64, i64) {
        let mut p = *self.entries.last().expect("nonempty");
        let mut q = 1i64;
        for &a in self.entries.iter().rev().skip(1) {
            (p, q) = (a * p + q, p);
        }
        if q < 0 {
            (-p, -q)
        } else {
            (p, q)
        }
    }

    /// The rational tangle: twists alternate between the right (odd
    /// positions, counted from `a_1`) and the bottom, innermost `a_k` first.
    pub fn tangle(&self) -> TangleDiagram {
        let k = self.entries.len();
        let mut t = if k % 2 == 1 {
            TangleDiagram::zero()
        } else {
            TangleDiagram::infinity()
        };
        for (i, &a) in self.entries.iter().enumerate().rev() {
            let twist = Twist::from_sign(a);
            for _ in 0..a.unsigned_abs() {
                if i % 2 == 0 {
                    t.twist_right(twist);
                } else {
                    t.twist_bottom(twist);
                }
            }
        }
        t
    }
}

/// Numerator closure of the rational tangle of `code`.
pub fn pd_from_conway(code: &ConwayCode) -> Result<PDCode, DiagramError> {
    code.tangle().numerator()
}

/// Pretzel link `P(s, ..., s)` with `n` columns: the numerator closure of
/// `1/[s] + ... + 1/[s]`.
pub fn pretzel_ring(s: i64, n: usize) -> Result<PDCode, DiagramError> {
    if s == 0 || n == 0 {
        return Err(DiagramError::InvalidCode(format!(
            "pretzel ring needs s != 0, n >= 1 (got s = {s}, n = {n})"
        )));
    }
    let column = TangleDiagram::vertical(s);
    let mut ring = column.clone();
    for _ in 1..n {
        ring = ring.plus(&column);
    }
    ring.numerator()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Along each component the crossings must alternate over/under.
    fn is_alternating(pd: &PDCode) -> bool {
        let o = pd.orientation().unwrap();
        for comp in &o.components {
            // for each edge find whether it ends (head) at an under or over slot
            let mut seq = Vec::new();
            for &e in comp {
                for x in pd.crossings() {
                    if x[0] == e {
                        seq.push(false);
                    }
                    let b_in = x[1] == e && (x[3] == e + 1 || x[3] == comp[0] && e == *comp.last().unwrap());
                    let d_in = x[3] == e && (x[1] == e + 1 || x[1] == comp[0] && e == *comp.last().unwrap());
                    if b_in || d_in {
                        seq.push(true);
                    }
                }
            }
            if seq.len() != comp.len() {
                return false;
            }
            for i in 0..seq.len() {
                if seq[i] == seq[(i + 1) % seq.len()] {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn conway_validation_and_fraction() {
        assert!(ConwayCode::new(vec![]).is_err());
        assert!(ConwayCode::new(vec![2, 0]).is_err());
        assert_eq!(ConwayCode::new(vec![2, 3]).unwrap().fraction(), (7, 3));
        assert_eq!(ConwayCode::double_twist(3).fraction(), (19, 3));
        assert_eq!(ConwayCode::new(vec![3]).unwrap().fraction(), (3, 1));
        assert_eq!(ConwayCode::new(vec![2, 1, 1]).unwrap().fraction(), (5, 2));
    }

    #[test]
    fn crossing_counts_and_components() {
        for code in [
            vec![1],
            vec![3],
            vec![2, 3],
            vec![4, 3],
            vec![2, 1, 1],
            vec![2, 2],
        ] {
            let c = ConwayCode::new(code.clone()).unwrap();
            let pd = pd_from_conway(&c).unwrap();
            let total: i64 = code.iter().map(|a| a.abs()).sum();
            assert_eq!(pd.num_crossings() as i64, total, "{code:?}");
            // a 2-bridge link is a knot iff its numerator p is odd
            let (p, _) = c.fraction();
            assert_eq!(pd.is_knot(), p % 2 != 0, "{code:?}");
            assert!(pd.orientation().is_ok());
        }
    }

    #[test]
    fn positive_codes_give_alternating_diagrams() {
        for n in 1..=4 {
            let pd = pd_from_conway(&ConwayCode::double_twist(n)).unwrap();
            assert!(is_alternating(&pd), "C({}, 3)", 2 * n);
        }
        assert!(is_alternating(
            &pd_from_conway(&ConwayCode::new(vec![3, 1, 2]).unwrap()).unwrap()
        ));
    }

    #[test]
    fn pretzel_shapes() {
        let pd = pretzel_ring(1, 3).unwrap();
        assert_eq!(pd.num_crossings(), 3);
        assert!(pd.is_knot());
        assert_eq!(pretzel_ring(2, 2).unwrap().num_components(), 2);
        assert_eq!(pretzel_ring(3, 3).unwrap().num_components(), 1);
        assert_eq!(pretzel_ring(2, 3).unwrap().num_components(), 3);
        assert!(pretzel_ring(0, 3).is_err());
    }

    #[test]
    fn free_loops_are_rejected() {
        // numerator closure of [0] is a crossingless two-component unlink
        assert_eq!(TangleDiagram::zero().numerator(), Err(DiagramError::FreeLoop));
    }
}
