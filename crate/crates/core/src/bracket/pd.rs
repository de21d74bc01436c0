//! Planar diagram codes.
//!
//! A crossing `[a, b, c, d]` lists edge labels counterclockwise starting at
//! the incoming under-strand `a`, so the under-strand runs `a -> c` and the
//! over-strand joins `b` and `d`. Edges are labelled consecutively along each
//! oriented component; that labelling is what fixes the over-strand
//! direction and hence the crossing sign.

use std::collections::{BTreeMap, HashMap};
use std::io::BufRead;

use serde::Deserialize;

use crate::error::DiagramError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PDCode {
    crossings: Vec<[u32; 4]>,
}

/// Role of an edge end at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flow {
    In,
    Out,
}

impl Flow {
    fn flip(self) -> Flow {
        match self {
            Flow::In => Flow::Out,
            Flow::Out => Flow::In,
        }
    }
}

/// Orientation data derived from the labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    /// `+1` or `-1` per crossing.
    pub signs: Vec<i8>,
    /// Edge labels of each component in traversal order.
    pub components: Vec<Vec<u32>>,
}

impl PDCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &crossings {
            for &l in x {
                if l == 0 {
                    return Err(DiagramError::NonPositiveLabel);
                }
                *counts.entry(l).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(DiagramError::LabelMultiplicity { label, count });
        }
        Ok(PDCode { crossings })
    }

    /// The 0-crossing unknot diagram.
    pub fn unknot() -> Self {
        PDCode {
            crossings: Vec::new(),
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    /// Distinct edge labels in ascending order.
    pub fn labels(&self) -> Vec<u32> {
        let mut l: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        l.sort_unstable();
        l.dedup();
        l
    }

    /// Edge labels of each component, found by following strands straight
    /// through crossings.
    pub fn components(&self) -> Vec<Vec<u32>> {
        if self.crossings.is_empty() {
            return vec![Vec::new()];
        }
        let slots = self.slots();
        let mut seen: HashMap<u32, bool> = HashMap::new();
        let mut comps = Vec::new();
        for label in self.labels() {
            if seen.contains_key(&label) {
                continue;
            }
            let mut comp = Vec::new();
            let mut edge = label;
            let mut slot = slots[&label][0];
            loop {
                seen.insert(edge, true);
                comp.push(edge);
                let (ci, pos) = slot;
                let next = self.crossings[ci][(pos + 2) % 4];
                let next_slots = &slots[&next];
                // leave through the far end of the next edge
                let entry = (ci, (pos + 2) % 4);
                slot = if next_slots[0] == entry {
                    next_slots[1]
                } else {
                    next_slots[0]
                };
                edge = next;
                if edge == label {
                    break;
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn num_components(&self) -> usize {
        self.components().len()
    }

    pub fn is_knot(&self) -> bool {
        self.num_components() == 1
    }

    /// Map from label to its two `(crossing, position)` slots.
    fn slots(&self) -> HashMap<u32, Vec<(usize, usize)>> {
        let mut slots: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            for (pos, &l) in x.iter().enumerate() {
                slots.entry(l).or_default().push((ci, pos));
            }
        }
        slots
    }

    /// Derives the direction of every strand from the consecutive labelling
    /// and returns crossing signs.
    ///
    /// Within a component with labels `lo..=hi` the successor of `e` is
    /// `e + 1`, wrapping `hi -> lo`. The under-strand is always directed
    /// `a -> c`; the over-strand direction is whichever of `b -> d`,
    /// `d -> b` follows the successor rule. Two-edge components make both
    /// candidates valid, so these are resolved by propagating
    /// head/tail constraints from determined ends.
    pub fn orientation(&self) -> Result<Orientation, DiagramError> {
        let underivable = |msg: String| DiagramError::OrientationUnderivable(msg);
        if self.crossings.is_empty() {
            return Ok(Orientation {
                signs: Vec::new(),
                components: self.components(),
            });
        }
        let components = self.components();
        let mut range: HashMap<u32, (u32, u32)> = HashMap::new();
        for comp in &components {
            let (lo, hi) = (comp[0], comp[comp.len() - 1]);
            if (hi - lo) as usize + 1 != comp.len() {
                return Err(underivable(format!(
                    "component labels {comp:?} are not consecutive"
                )));
            }
            for &e in comp {
                range.insert(e, (lo, hi));
            }
        }
        let next = |e: u32| -> u32 {
            let (lo, hi) = range[&e];
            if e == hi {
                lo
            } else {
                e + 1
            }
        };

        let n = self.crossings.len();
        let mut flow: Vec<[Option<Flow>; 4]> = vec![[None; 4]; n];
        for (ci, &[a, b, c, d]) in self.crossings.iter().enumerate() {
            if next(a) != c {
                return Err(underivable(format!(
                    "under-strand {a} -> {c} at crossing {ci} is not consecutive"
                )));
            }
            flow[ci][0] = Some(Flow::In);
            flow[ci][2] = Some(Flow::Out);
            match (next(b) == d, next(d) == b) {
                (true, false) => {
                    flow[ci][1] = Some(Flow::In);
                    flow[ci][3] = Some(Flow::Out);
                }
                (false, true) => {
                    flow[ci][1] = Some(Flow::Out);
                    flow[ci][3] = Some(Flow::In);
                }
                (false, false) => {
                    return Err(underivable(format!(
                        "over-strand {b}/{d} at crossing {ci} is not consecutive"
                    )));
                }
                (true, true) => {}
            }
        }

        let slots = self.slots();
        let mut labels = self.labels();
        labels.sort_unstable();
        loop {
            let mut changed = false;
            // each edge has one head and one tail
            for l in &labels {
                let s = &slots[l];
                let (s0, s1) = (s[0], s[1]);
                match (flow[s0.0][s0.1], flow[s1.0][s1.1]) {
                    (Some(f), None) => {
                        flow[s1.0][s1.1] = Some(f.flip());
                        changed = true;
                    }
                    (None, Some(f)) => {
                        flow[s0.0][s0.1] = Some(f.flip());
                        changed = true;
                    }
                    _ => {}
                }
            }
            // each over-strand has one incoming and one outgoing end
            for f in flow.iter_mut() {
                match (f[1], f[3]) {
                    (Some(x), None) => {
                        f[3] = Some(x.flip());
                        changed = true;
                    }
                    (None, Some(x)) => {
                        f[1] = Some(x.flip());
                        changed = true;
                    }
                    _ => {}
                }
            }
            if changed {
                continue;
            }
            // a component that only passes over has no preferred direction;
            // orient it so the first unresolved over-strand runs b -> d
            match flow.iter_mut().find(|f| f[1].is_none()) {
                Some(f) => {
                    f[1] = Some(Flow::In);
                    f[3] = Some(Flow::Out);
                }
                None => break,
            }
        }

        for l in &labels {
            let s = &slots[l];
            let f0 = flow[s[0].0][s[0].1];
            let f1 = flow[s[1].0][s[1].1];
            if f0 == f1 {
                return Err(underivable(format!("edge {l} has inconsistent direction")));
            }
        }
        let signs = flow
            .iter()
            .map(|f| if f[3] == Some(Flow::In) { 1 } else { -1 })
            .collect();
        Ok(Orientation { signs, components })
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> Result<i64, DiagramError> {
        Ok(self.orientation()?.signs.iter().map(|&s| s as i64).sum())
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> PDCode {
        // rotating the tuple by one makes the old over-strand the under-strand;
        // pick the rotation whose first entry is the incoming end
        let orient = self.orientation().ok();
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(ci, &[a, b, c, d])| {
                let b_in = orient.as_ref().map(|o| o.signs[ci] < 0).unwrap_or(true);
                if b_in {
                    [b, c, d, a]
                } else {
                    [d, a, b, c]
                }
            })
            .collect();
        PDCode { crossings }
    }
}

#[derive(Debug, Deserialize)]
struct TableLine {
    name: String,
    #[serde(default)]
    alternating: Option<bool>,
    pd: Vec<[u32; 4]>,
}

/// One entry of a knot table.
#[derive(Clone, Debug, PartialEq)]
pub struct KnotEntry {
    pub name: String,
    pub alternating: Option<bool>,
    pub pd: PDCode,
}

/// Parses a JSON-Lines knot table. Blank lines are skipped; each entry is
/// parsed independently so one bad line does not hide the rest.
pub fn parse_knot_table<R: BufRead>(reader: R) -> Vec<Result<KnotEntry, DiagramError>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                out.push(Err(DiagramError::Table {
                    line: line_no,
                    message: e.to_string(),
                }));
                continue;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        let entry = serde_json::from_str::<TableLine>(&line)
            .map_err(|e| DiagramError::Table {
                line: line_no,
                message: e.to_string(),
            })
            .and_then(|t| {
                Ok(KnotEntry {
                    name: t.name,
                    alternating: t.alternating,
                    pd: PDCode::new(t.pd).map_err(|e| DiagramError::Table {
                        line: line_no,
                        message: e.to_string(),
                    })?,
                })
            });
        out.push(entry);
    }
    out
}

/// The bundled table of prime knots through ten crossings (plus the unknot),
/// PD codes from KnotInfo.
pub const BUNDLED_TABLE: &str = include_str!("../../data/knots_upto_10.jsonl");

pub fn bundled_table() -> Vec<KnotEntry> {
    parse_knot_table(BUNDLED_TABLE.as_bytes())
        .into_iter()
        .map(|e| e.expect("bundled table is well formed"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> PDCode {
        PDCode::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap()
    }

    #[test]
    fn label_validation() {
        assert!(matches!(
            PDCode::new(vec![[1, 2, 3, 4]]),
            Err(DiagramError::LabelMultiplicity { .. })
        ));
        assert_eq!(
            PDCode::new(vec![[0, 1, 1, 0]]),
            Err(DiagramError::NonPositiveLabel)
        );
        assert!(PDCode::new(vec![]).unwrap().crossings().is_empty());
    }

    #[test]
    fn writhe_of_standard_diagrams() {
        assert_eq!(PDCode::unknot().writhe().unwrap(), 0);
        assert_eq!(trefoil().writhe().unwrap(), 3);
        assert_eq!(trefoil().mirror().writhe().unwrap(), -3);
        // figure eight is amphichiral with writhe 0 in its minimal diagram
        let fig8 = PDCode::new(vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap();
        assert_eq!(fig8.writhe().unwrap(), 0);
    }

    #[test]
    fn kinks_have_opposite_signs() {
        let pos = PDCode::new(vec![[1, 1, 2, 2]]).unwrap();
        let neg = PDCode::new(vec![[1, 2, 2, 1]]).unwrap();
        assert_eq!(pos.writhe().unwrap(), 1);
        assert_eq!(neg.writhe().unwrap(), -1);
        assert!(pos.is_knot());
    }

    #[test]
    fn hopf_link_components_and_signs() {
        // positive Hopf link
        let hopf = PDCode::new(vec![[1, 3, 2, 4], [3, 1, 4, 2]]).unwrap();
        assert_eq!(hopf.num_components(), 2);
        let w = hopf.writhe().unwrap();
        assert_eq!(w.abs(), 2);
    }

    #[test]
    fn inconsistent_labelling_is_rejected() {
        let bad = PDCode::new(vec![[1, 5, 3, 4], [2, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        assert!(matches!(
            bad.orientation(),
            Err(DiagramError::OrientationUnderivable(_))
        ));
    }

    #[test]
    fn writhe_is_invariant_under_reversal() {
        // relabel e -> 2c + 1 - e reverses orientation; tuples must restart at
        // the new incoming under-strand
        for entry in bundled_table().into_iter().take(40) {
            let pd = entry.pd;
            if pd.num_crossings() == 0 {
                continue;
            }
            let m = 2 * pd.num_crossings() as u32 + 1;
            let rev: Vec<[u32; 4]> = pd
                .crossings()
                .iter()
                .map(|&[a, b, c, d]| [m - c, m - d, m - a, m - b])
                .collect();
            let rev = PDCode::new(rev).unwrap();
            assert_eq!(rev.writhe().unwrap(), pd.writhe().unwrap(), "{}", entry.name);
        }
    }

    #[test]
    fn table_parsing() {
        let text = "{\"name\":\"3_1\",\"alternating\":true,\"pd\":[[1,5,2,4],[3,1,4,6],[5,3,6,2]]}\n\n\
                    {\"name\":\"bad\",\"pd\":[[1,2,3,4]]}\n\
                    not json\n\
                    {\"name\":\"0_1\",\"pd\":[]}\n";
        let entries = parse_knot_table(text.as_bytes());
        assert_eq!(entries.len(), 4);
        assert_eq!(entries[0].as_ref().unwrap().pd, trefoil());
        assert!(matches!(entries[1], Err(DiagramError::Table { line: 3, .. })));
        assert!(entries[2].is_err());
        assert_eq!(entries[3].as_ref().unwrap().alternating, None);
    }

    #[test]
    fn bundled_table_is_complete() {
        let table = bundled_table();
        assert_eq!(table.len(), 250);
        assert!(table.iter().all(|e| e.pd.num_crossings() <= 10));
        assert!(table.iter().all(|e| e.pd.is_knot()));
        assert_eq!(table.iter().filter(|e| e.pd.num_crossings() == 10).count(), 165);
    }
}
