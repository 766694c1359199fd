use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::decorated::cyc_contains;
use crate::LoopOrientation;

/// A directed arc `tail ↦ head` of a chord diagram; loops carry their
/// orientation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub loop_orientation: Option<LoopOrientation>,
}

impl Arc {
    pub fn new(tail: usize, head: usize, loop_orientation: Option<LoopOrientation>) -> Self {
        debug_assert_eq!(tail == head, loop_orientation.is_some());
        Self { tail, head, loop_orientation }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

impl fmt::Debug for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.loop_orientation {
            Some(LoopOrientation::Cw) => write!(f, "({}↦{} cw)", self.tail, self.head),
            Some(LoopOrientation::Ccw) => write!(f, "({}↦{} ccw)", self.tail, self.head),
            None => write!(f, "({}↦{})", self.tail, self.head),
        }
    }
}

/// A pair of noncrossing arcs pointing the same way around the circle; the
/// port arc passes on the left of the starboard arc's course.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Alignment {
    pub port: Arc,
    pub starboard: Arc,
}

/// Which side a crossing arc tacks across an alignment.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Tacking {
    Port,
    Starboard,
}

/// An alignment together with a third arc crossing both of its arcs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CrossedAlignment {
    pub alignment: Alignment,
    pub crosser: Arc,
    pub tacking: Tacking,
}

/// True iff the two arcs must cross when drawn inside the circle of `[n]`.
///
/// Arcs with shared endpoints are resolved by perturbation: with
/// `d(x) = (x − i) mod n` measured from one arc's tail `i`, and the wrapped
/// value `D(w(j)) = n` when the other head returns to `i`, the pair crosses
/// iff `0 < d(j) ≤ d(w(i)) < D(w(j))` under one of the two role assignments.
/// In particular head-to-tail pairs such as `(5↦7, 7↦1)` cross, 2-cycles
/// cross, and loops never cross anything.
pub fn crossings(a1: &Arc, a2: &Arc, n: usize) -> bool {
    if a1.is_loop() || a2.is_loop() {
        return false;
    }
    crosses_directed(a1, a2, n) || crosses_directed(a2, a1, n)
}

fn crosses_directed(a: &Arc, b: &Arc, n: usize) -> bool {
    let d = |x: usize| (x + n - a.tail) % n;
    let dj = d(b.tail);
    let dwi = d(a.head);
    let dwj = if b.head == a.tail { n } else { d(b.head) };
    0 < dj && dj <= dwi && dwi < dwj
}

/// Tests the alignment conditions for the ordered assignment
/// (port = `p`, starboard = `s`):
/// the pair must not cross, non-loop arcs must be vertex-disjoint,
/// `w(p) ∈ [p, w(s)−1]` and `w(s) ∈ [w(p)+1, s]` cyclically, a starboard
/// loop must be cw, and a port loop must be ccw.
pub(crate) fn alignment_assignment(p: &Arc, s: &Arc, n: usize) -> bool {
    if crossings(p, s, n) {
        return false;
    }
    if !p.is_loop() && !s.is_loop() {
        let shared = [p.tail, p.head].iter().any(|&x| x == s.tail || x == s.head);
        if shared {
            return false;
        }
    }
    if s.is_loop() && s.loop_orientation != Some(LoopOrientation::Cw) {
        return false;
    }
    if p.is_loop() && p.loop_orientation != Some(LoopOrientation::Ccw) {
        return false;
    }
    let dec = |x: usize| (x + n - 2) % n + 1;
    let inc = |x: usize| x % n + 1;
    cyc_contains(p.tail, dec(s.head), p.head, n) && cyc_contains(inc(p.head), s.tail, s.head, n)
}

impl Serialize for Alignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Alignment", 2)?;
        st.serialize_field("port", &[self.port.tail, self.port.head])?;
        st.serialize_field("starboard", &[self.starboard.tail, self.starboard.head])?;
        st.end()
    }
}

impl Serialize for CrossedAlignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CrossedAlignment", 4)?;
        st.serialize_field("port", &[self.alignment.port.tail, self.alignment.port.head])?;
        st.serialize_field(
            "starboard",
            &[self.alignment.starboard.tail, self.alignment.starboard.head],
        )?;
        st.serialize_field("crosser", &[self.crosser.tail, self.crosser.head])?;
        st.serialize_field(
            "tacking",
            match self.tacking {
                Tacking::Port => "port",
                Tacking::Starboard => "starboard",
            },
        )?;
        st.end()
    }
}
