use std::collections::BTreeMap;
use std::fmt;

use perm_core::{all_permutations, KSubset, Permutation};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arcs::{alignment_assignment, crossings, Alignment, Arc, CrossedAlignment, Tacking};
use crate::{Error, Result};

/// Orientation of a fixed-point loop in the chord diagram.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LoopOrientation {
    Cw,
    Ccw,
}

impl LoopOrientation {
    pub fn flipped(self) -> Self {
        match self {
            LoopOrientation::Cw => LoopOrientation::Ccw,
            LoopOrientation::Ccw => LoopOrientation::Cw,
        }
    }
}

/// A rigid transformation of the chord diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transform {
    /// Reverse every arc: `w ↦ w⁻¹`, loop orientations flipped.
    ReverseArcs,
    /// Reflect the diagram: `w ↦ w₀ w w₀`, orientations flipped and relabeled.
    Reflect,
    /// Rotate labels by `s`: `w ↦ χˢ w χ⁻ˢ`, orientations relabeled.
    Rotate(i64),
}

/// A permutation of `[n]` together with a cw/ccw orientation on each fixed
/// point; the central indexing object for positroids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    perm: Permutation,
    orientation: BTreeMap<usize, LoopOrientation>,
}

impl DecoratedPermutation {
    /// Builds a decorated permutation; `cw` and `ccw` must together list each
    /// fixed point of `perm` exactly once.
    pub fn new(perm: Permutation, cw: &[usize], ccw: &[usize]) -> Result<Self> {
        let mut orientation = BTreeMap::new();
        for (points, o) in [(cw, LoopOrientation::Cw), (ccw, LoopOrientation::Ccw)] {
            for &p in points {
                if p < 1 || p > perm.n() || perm.apply(p) != p || orientation.insert(p, o).is_some()
                {
                    return Err(Error::BadOrientation(p));
                }
            }
        }
        if orientation.len() != perm.fixed_points().len() {
            let missing = perm.fixed_points().into_iter().find(|p| !orientation.contains_key(p));
            return Err(Error::BadOrientation(missing.unwrap()));
        }
        Ok(Self { perm, orientation })
    }

    /// Builds from a permutation with no fixed points.
    pub fn from_derangement(perm: Permutation) -> Result<Self> {
        Self::new(perm, &[], &[])
    }

    /// The spirograph permutation `π_{n,m}`: `w(i) = i + m (mod n)`.
    ///
    /// For `n = 1` the shift must be 0 or 1, giving the ccw and cw loop
    /// respectively; otherwise `1 ≤ m ≤ n−1`.
    pub fn spirograph(n: usize, m: usize) -> Result<Self> {
        if n == 1 {
            let o = match m {
                0 => LoopOrientation::Ccw,
                1 => LoopOrientation::Cw,
                _ => return Err(Error::BadSpirographShift(m, n)),
            };
            let mut orientation = BTreeMap::new();
            orientation.insert(1, o);
            return Ok(Self { perm: Permutation::identity(1), orientation });
        }
        if m == 0 || m >= n {
            return Err(Error::BadSpirographShift(m, n));
        }
        let vals = (1..=n).map(|i| (i - 1 + m) % n + 1).collect();
        Ok(Self { perm: Permutation::from_one_line(vals)?, orientation: BTreeMap::new() })
    }

    /// The identity with every fixed point given the same orientation.
    pub fn oriented_identity(n: usize, o: LoopOrientation) -> Self {
        Self {
            perm: Permutation::identity(n),
            orientation: (1..=n).map(|i| (i, o)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Orientation of `i`, present iff `i` is a fixed point.
    pub fn orientation(&self, i: usize) -> Option<LoopOrientation> {
        self.orientation.get(&i).copied()
    }

    pub fn cw_points(&self) -> Vec<usize> {
        self.points_with(LoopOrientation::Cw)
    }

    pub fn ccw_points(&self) -> Vec<usize> {
        self.points_with(LoopOrientation::Ccw)
    }

    fn points_with(&self, o: LoopOrientation) -> Vec<usize> {
        self.orientation.iter().filter(|&(_, &v)| v == o).map(|(&p, _)| p).collect()
    }

    /// The arcs `(i ↦ w(i))` of the chord diagram, in tail order.
    pub fn arcs(&self) -> Vec<Arc> {
        (1..=self.n())
            .map(|i| Arc::new(i, self.perm.apply(i), self.orientation(i)))
            .collect()
    }

    /// The shifted anti-exceedance set
    /// `I_r = {i : i <_r w⁻¹(i), or w(i) = i oriented cw}`,
    /// where `<_r` is the linear order `r <_r r+1 <_r ⋯ <_r r−1`.
    pub fn anti_exceedance_set(&self, r: usize) -> Result<KSubset> {
        let n = self.n();
        if r < 1 || r > n {
            return Err(Error::ShiftOutOfRange(r, n));
        }
        let inv = self.perm.inverse();
        let key = |x: usize| (x + n - r) % n;
        let elems = (1..=n)
            .filter(|&i| match self.orientation(i) {
                Some(o) => o == LoopOrientation::Cw,
                None => key(i) < key(inv.apply(i)),
            })
            .collect();
        Ok(KSubset::new(n, elems)?)
    }

    /// The number of anti-exceedances `k(w°) = |I₁|`, the rank of the
    /// associated positroid.
    pub fn k(&self) -> usize {
        self.anti_exceedance_set(1).unwrap().k()
    }

    /// All alignments of the chord diagram, each with its canonical
    /// (port, starboard) assignment.
    pub fn alignments(&self) -> Vec<Alignment> {
        let arcs = self.arcs();
        let n = self.n();
        let mut result = Vec::new();
        for i in 0..arcs.len() {
            for j in i + 1..arcs.len() {
                match (
                    alignment_assignment(&arcs[i], &arcs[j], n),
                    alignment_assignment(&arcs[j], &arcs[i], n),
                ) {
                    (true, false) => result.push(Alignment {
                        port: arcs[i].clone(),
                        starboard: arcs[j].clone(),
                    }),
                    (false, true) => result.push(Alignment {
                        port: arcs[j].clone(),
                        starboard: arcs[i].clone(),
                    }),
                    (false, false) => {}
                    (true, true) => {
                        unreachable!("pair satisfies the alignment conditions both ways")
                    }
                }
            }
        }
        result
    }

    /// All crossed alignments: an alignment plus a third arc crossing both of
    /// its arcs, labeled port or starboard tacking.
    pub fn crossed_alignments(&self) -> Vec<CrossedAlignment> {
        let n = self.n();
        let arcs = self.arcs();
        let mut result = Vec::new();
        for al in self.alignments() {
            for x in &arcs {
                if x.is_loop() || x.tail == al.port.tail || x.tail == al.starboard.tail {
                    continue;
                }
                if !crossings(x, &al.port, n) || !crossings(x, &al.starboard, n) {
                    continue;
                }
                let starboard_tack = cyc_contains(al.starboard.head, al.starboard.tail, x.tail, n)
                    && cyc_contains(al.port.tail, al.port.head, x.head, n);
                let port_tack = cyc_contains(al.port.tail, al.port.head, x.tail, n)
                    && cyc_contains(al.starboard.head, al.starboard.tail, x.head, n);
                let tacking = match (starboard_tack, port_tack) {
                    (true, false) => Tacking::Starboard,
                    (false, true) => Tacking::Port,
                    _ => unreachable!("crosser of an alignment has exactly one tacking"),
                };
                result.push(CrossedAlignment {
                    alignment: al.clone(),
                    crosser: x.clone(),
                    tacking,
                });
            }
        }
        result
    }

    /// If `w(i) = i + m (mod n)` with at most one fixed point, the shift `m`.
    pub fn is_spirograph(&self) -> Option<usize> {
        let n = self.n();
        if n == 1 {
            return Some(0);
        }
        let m = (self.perm.apply(1) + n - 1) % n;
        if m == 0 {
            return None; // the identity has n > 1 fixed points
        }
        (1..=n)
            .all(|i| self.perm.apply(i) == (i - 1 + m) % n + 1)
            .then_some(m)
    }

    /// Applies a rigid transformation of the chord diagram.
    pub fn transform(&self, t: Transform) -> Self {
        let n = self.n();
        match t {
            Transform::ReverseArcs => {
                let orientation =
                    self.orientation.iter().map(|(&p, o)| (p, o.flipped())).collect();
                Self { perm: self.perm.inverse(), orientation }
            }
            Transform::Reflect => {
                // w ↦ w₀ w w₀ with orientation j ↦ flip(co(w₀(j))).
                let w0 = |i: usize| n + 1 - i;
                let vals = (1..=n).map(|i| w0(self.perm.apply(w0(i)))).collect::<Vec<_>>();
                let orientation = self
                    .orientation
                    .iter()
                    .map(|(&p, o)| (w0(p), o.flipped()))
                    .collect();
                Self { perm: Permutation::from_one_line(vals).unwrap(), orientation }
            }
            Transform::Rotate(s) => {
                // w ↦ χˢ w χ⁻ˢ with orientation j ↦ co(χ⁻ˢ(j)).
                let s = s.rem_euclid(n as i64) as usize;
                let chi = |i: usize, t: usize| (i - 1 + t) % n + 1;
                let vals = (1..=n)
                    .map(|i| chi(self.perm.apply(chi(i, n - s)), s))
                    .collect::<Vec<_>>();
                let orientation =
                    self.orientation.iter().map(|(&p, o)| (chi(p, s), *o)).collect();
                Self { perm: Permutation::from_one_line(vals).unwrap(), orientation }
            }
        }
    }

    /// The concatenation `w⁽¹⁾ ⊕ w⁽²⁾` on `[n₁ + n₂]`, with the second
    /// diagram's labels shifted up by `n₁`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n1 = self.n();
        let mut vals: Vec<usize> = self.perm.values().to_vec();
        vals.extend(other.perm.values().iter().map(|&v| v + n1));
        let mut orientation = self.orientation.clone();
        for (&p, &o) in &other.orientation {
            orientation.insert(p + n1, o);
        }
        Self { perm: Permutation::from_one_line(vals).unwrap(), orientation }
    }
}

/// True iff `x` lies in the cyclic interval `[a, b]` of `[n]`.
pub(crate) fn cyc_contains(a: usize, b: usize, x: usize, n: usize) -> bool {
    debug_assert!((1..=n).contains(&x));
    if a <= b {
        a <= x && x <= b
    } else {
        x >= a || x <= b
    }
}

impl fmt::Debug for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DecoratedPermutation({self})")
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n() {
            match self.orientation(i) {
                Some(LoopOrientation::Cw) => write!(f, "↻")?,
                Some(LoopOrientation::Ccw) => write!(f, "↺")?,
                None => {}
            }
            if self.n() <= 9 {
                write!(f, "{}", self.perm.apply(i))?;
            } else {
                write!(f, "{},", self.perm.apply(i))?;
            }
        }
        Ok(())
    }
}

impl Serialize for DecoratedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DecoratedPermutation", 4)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("w", self.perm.values())?;
        s.serialize_field("cw", &self.cw_points())?;
        s.serialize_field("ccw", &self.ccw_points())?;
        s.end()
    }
}

#[derive(Deserialize)]
struct DecoratedJson {
    n: usize,
    w: Vec<usize>,
    #[serde(default)]
    cw: Vec<usize>,
    #[serde(default)]
    ccw: Vec<usize>,
}

impl<'de> Deserialize<'de> for DecoratedPermutation {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = DecoratedJson::deserialize(deserializer)?;
        if raw.w.len() != raw.n {
            return Err(D::Error::custom(format!(
                "field n = {} does not match length {} of w",
                raw.n,
                raw.w.len()
            )));
        }
        let perm = Permutation::from_one_line(raw.w).map_err(D::Error::custom)?;
        DecoratedPermutation::new(perm, &raw.cw, &raw.ccw).map_err(D::Error::custom)
    }
}

/// All decorated permutations of `[n]`, ordered lexicographically by one-line
/// notation and then by orientation bitmask (bit `i` set = the `i`-th smallest
/// fixed point is cw).
pub fn all_decorated(n: usize) -> impl Iterator<Item = DecoratedPermutation> {
    all_permutations(n).flat_map(|perm| {
        let fixed = perm.fixed_points();
        (0u64..(1u64 << fixed.len())).map(move |mask| {
            let orientation = fixed
                .iter()
                .enumerate()
                .map(|(idx, &p)| {
                    let o = if mask & (1 << idx) != 0 {
                        LoopOrientation::Cw
                    } else {
                        LoopOrientation::Ccw
                    };
                    (p, o)
                })
                .collect();
            DecoratedPermutation { perm: perm.clone(), orientation }
        })
    })
}
