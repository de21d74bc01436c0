//! Kauffman bracket state sums and the Jones polynomial of planar diagrams.
//!
//! At a crossing `[a, b, c, d]` the A-smoothing joins `a` with `b` and `c`
//! with `d`; the B-smoothing joins `a` with `d` and `b` with `c`.

pub mod pd;
pub mod tangle;

use num_bigint::BigInt;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::DiagramError;
use crate::laurent::{LaurentPoly, Var};

pub use pd::{bundled_table, parse_knot_table, KnotEntry, Orientation, PDCode, BUNDLED_TABLE};
pub use tangle::{pd_from_conway, pretzel_ring, ConwayCode, TangleDiagram, Twist};

/// Largest crossing number accepted by [`bracket`].
pub const CROSSING_CAP: usize = 24;

/// Whether `jones_from_pd(pd_from_conway(C(2n, 3)), _)` needs the mirror
/// map to agree with [`crate::dtwist::jones_closed`]. Calibrated at `n = 1`
/// by the `double_twist_mirror_calibration` test.
pub const DOUBLE_TWIST_MIRROR: bool = true;

/// Crossings split off into independent parallel jobs.
const PARALLEL_PREFIX_BITS: usize = 6;

/// One smoothing per crossing: bit `i` set means crossing `i` is B-smoothed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketState {
    pub smoothings: u32,
    pub loops: usize,
}

impl BracketState {
    /// Counts the loops of the state `smoothings` by union-find over labels.
    pub fn evaluate(pd: &PDCode, smoothings: u32) -> BracketState {
        let index = LabelIndex::new(pd);
        let mut dsu = Dsu::new(index.len());
        for (i, x) in pd.crossings().iter().enumerate() {
            let [a, b, c, d] = x.map(|l| index.get(l));
            if smoothings >> i & 1 == 0 {
                dsu.union(a, b);
                dsu.union(c, d);
            } else {
                dsu.union(a, d);
                dsu.union(b, c);
            }
        }
        BracketState {
            smoothings,
            loops: dsu.sets,
        }
    }

    pub fn num_b(&self) -> u32 {
        self.smoothings.count_ones()
    }
}

/// Dense renumbering of edge labels.
struct LabelIndex {
    map: Vec<usize>,
    len: usize,
}

impl LabelIndex {
    fn new(pd: &PDCode) -> Self {
        let labels = pd.labels();
        let max = labels.iter().copied().max().unwrap_or(0) as usize;
        let mut map = vec![usize::MAX; max + 1];
        for (i, &l) in labels.iter().enumerate() {
            map[l as usize] = i;
        }
        LabelIndex {
            map,
            len: labels.len(),
        }
    }

    fn get(&self, label: u32) -> usize {
        self.map[label as usize]
    }

    fn len(&self) -> usize {
        self.len
    }
}

/// Union-find with union by size and rollback (no path compression).
#[derive(Clone)]
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
    history: Vec<Option<usize>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        self.history.push(Some(rb));
    }

    fn undo(&mut self) {
        if let Some(rb) = self.history.pop().expect("nothing to undo") {
            let ra = self.parent[rb];
            self.size[ra] -= self.size[rb];
            self.parent[rb] = rb;
            self.sets += 1;
        }
    }
}

/// `hist[b][loops]` counts states with `b` B-smoothings and `loops` loops.
type Histogram = Vec<Vec<u64>>;

fn merge(mut x: Histogram, y: Histogram) -> Histogram {
    for (rx, ry) in x.iter_mut().zip(y) {
        for (a, b) in rx.iter_mut().zip(ry) {
            *a += b;
        }
    }
    x
}

struct Enumerator {
    pairs: Vec<[usize; 4]>,
}

impl Enumerator {
    fn smooth(&self, dsu: &mut Dsu, i: usize, b_smoothing: bool) {
        let [a, b, c, d] = self.pairs[i];
        if b_smoothing {
            dsu.union(a, d);
            dsu.union(b, c);
        } else {
            dsu.union(a, b);
            dsu.union(c, d);
        }
    }

    fn descend(&self, dsu: &mut Dsu, i: usize, num_b: usize, hist: &mut Histogram) {
        if i == self.pairs.len() {
            hist[num_b][dsu.sets] += 1;
            return;
        }
        for b in [false, true] {
            self.smooth(dsu, i, b);
            self.descend(dsu, i + 1, num_b + b as usize, hist);
            dsu.undo();
            dsu.undo();
        }
    }
}

fn histogram(pd: &PDCode) -> Histogram {
    let index = LabelIndex::new(pd);
    let c = pd.num_crossings();
    let pairs: Vec<[usize; 4]> = pd.crossings().iter().map(|x| x.map(|l| index.get(l))).collect();
    let en = Enumerator { pairs };
    let empty = || vec![vec![0u64; index.len() + 1]; c + 1];
    let prefix = if c >= 2 * PARALLEL_PREFIX_BITS {
        PARALLEL_PREFIX_BITS
    } else {
        0
    };
    (0u32..1 << prefix)
        .into_par_iter()
        .map(|bits| {
            let mut dsu = Dsu::new(index.len());
            for i in 0..prefix {
                en.smooth(&mut dsu, i, bits >> i & 1 == 1);
            }
            let mut hist = empty();
            en.descend(&mut dsu, prefix, bits.count_ones() as usize, &mut hist);
            hist
        })
        .reduce(empty, merge)
}

/// `δ = -A^2 - A^-2`.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, [(-2, -1), (2, -1)])
}

fn assemble(c: usize, hist: &Histogram) -> LaurentPoly {
    let max_loops = hist
        .iter()
        .flat_map(|r| r.iter().rposition(|&n| n > 0))
        .max()
        .unwrap_or(1);
    let d = delta();
    let mut powers = vec![LaurentPoly::one(Var::A)];
    for k in 1..max_loops {
        let next = &powers[k - 1] * &d;
        powers.push(next);
    }
    let mut total = LaurentPoly::zero(Var::A);
    for (num_b, row) in hist.iter().enumerate() {
        let a_exp = c as i64 - 2 * num_b as i64;
        for (loops, &count) in row.iter().enumerate() {
            if count > 0 {
                total = &total + &powers[loops - 1].shift(a_exp).scale(&BigInt::from(count));
            }
        }
    }
    total
}

/// The Kauffman bracket `<D>` in the variable `A`, normalised so the
/// crossingless unknot is `1`.
pub fn bracket(pd: &PDCode) -> Result<LaurentPoly, DiagramError> {
    let c = pd.num_crossings();
    if c > CROSSING_CAP {
        return Err(DiagramError::TooManyCrossings {
            crossings: c,
            cap: CROSSING_CAP,
        });
    }
    if c == 0 {
        return Ok(LaurentPoly::one(Var::A));
    }
    Ok(assemble(c, &histogram(pd)))
}

/// Straight enumeration of all `2^c` states, one union-find run each.
pub fn bracket_naive(pd: &PDCode) -> Result<LaurentPoly, DiagramError> {
    let c = pd.num_crossings();
    if c > CROSSING_CAP {
        return Err(DiagramError::TooManyCrossings {
            crossings: c,
            cap: CROSSING_CAP,
        });
    }
    if c == 0 {
        return Ok(LaurentPoly::one(Var::A));
    }
    let mut hist = vec![vec![0u64; 2 * c + 1]; c + 1];
    for bits in 0..1u32 << c {
        let s = BracketState::evaluate(pd, bits);
        hist[s.num_b() as usize][s.loops] += 1;
    }
    Ok(assemble(c, &hist))
}

/// `(-A^3)^-w <D>` written in `t = A^-4`, or in `q = A^-2` when some
/// exponent is not a multiple of four (links with an even number of
/// components). `mirror` applies `t -> 1/t`.
pub fn jones_from_pd(pd: &PDCode, mirror: bool) -> Result<LaurentPoly, DiagramError> {
    let w = pd.writhe()?;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let f = bracket(pd)?.shift(-3 * w).scale(&BigInt::from(sign));
    let j = match f.change_variable(Var::T) {
        Ok(j) => j,
        Err(_) => f.change_variable(Var::Q)?,
    };
    Ok(if mirror { j.mirror() } else { j })
}

/// `J(1)`, `J'(1)` and `J(e^{2πi/3})` of a knot diagram.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpecialValues {
    pub v1: Complex64,
    pub dv1: Complex64,
    pub v_omega: Complex64,
}

pub fn special_values(pd: &PDCode) -> Result<SpecialValues, DiagramError> {
    if !pd.is_knot() {
        return Err(DiagramError::NotAKnot(pd.num_components()));
    }
    let j = jones_from_pd(pd, false)?;
    let one = Complex64::new(1.0, 0.0);
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    Ok(SpecialValues {
        v1: j.eval_complex(one)?,
        dv1: j.derivative().eval_complex(one)?,
        v_omega: j.eval_complex(omega)?,
    })
}
