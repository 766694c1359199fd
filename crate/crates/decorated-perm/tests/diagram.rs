//! Chord-diagram classification: crossings, alignments, crossed alignments.

use std::collections::BTreeSet;

use decorated_perm::{
    all_decorated, crossings, Arc, DecoratedPermutation, LoopOrientation, Tacking,
};
use perm_core::Permutation;

/// The running 9-element example `895↺47↻6132`.
fn running_example() -> DecoratedPermutation {
    serde_json::from_str(r#"{"n":9,"w":[8,9,5,4,7,6,1,3,2],"cw":[6],"ccw":[4]}"#).unwrap()
}

fn arc(t: usize, h: usize) -> Arc {
    Arc::new(t, h, None)
}

#[test]
fn crossing_examples() {
    assert!(crossings(&arc(7, 1), &arc(5, 7), 9));
    assert!(crossings(&arc(7, 1), &arc(8, 3), 9));
    assert!(!crossings(&arc(2, 9), &arc(8, 3), 9));
    assert!(!crossings(&arc(7, 1), &Arc::new(4, 4, Some(LoopOrientation::Ccw)), 9));
    // 2-cycles self-cross; loops never cross.
    assert!(crossings(&arc(1, 3), &arc(3, 1), 4));
    assert!(!crossings(
        &Arc::new(2, 2, Some(LoopOrientation::Cw)),
        &Arc::new(5, 5, Some(LoopOrientation::Ccw)),
        6
    ));
}

#[test]
fn alignment_list_of_running_example() {
    let got: BTreeSet<(usize, usize)> = running_example()
        .alignments()
        .into_iter()
        .map(|a| (a.port.tail, a.starboard.tail))
        .collect();
    let want: BTreeSet<(usize, usize)> = [
        (3, 1),
        (3, 2),
        (3, 6),
        (4, 1),
        (4, 2),
        (4, 3),
        (4, 6),
        (5, 1),
        (5, 2),
        (7, 6),
        (8, 6),
        (9, 6),
        (9, 8),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
}

#[test]
fn crossed_alignment_examples() {
    let cas = running_example().crossed_alignments();
    let find = |p: usize, s: usize, x: usize| {
        cas.iter().find(|c| {
            c.alignment.port.tail == p && c.alignment.starboard.tail == s && c.crosser.tail == x
        })
    };
    assert_eq!(find(9, 8, 7).unwrap().tacking, Tacking::Starboard);
    assert_eq!(find(9, 8, 1).unwrap().tacking, Tacking::Port);
}

#[test]
fn spirographs_have_no_alignments() {
    for n in 1..=8 {
        for m in if n == 1 { 0..=1 } else { 1..=n - 1 } {
            let s = DecoratedPermutation::spirograph(n, m).unwrap();
            assert!(s.alignments().is_empty(), "π_{{{n},{m}}}");
            assert!(s.crossed_alignments().is_empty());
        }
    }
}

#[test]
fn every_arc_pair_classified_exactly_once() {
    // Exhaustive n ≤ 6: each unordered pair of distinct arcs is exactly one of
    // crossing / alignment / misalignment, and no pair admits both
    // port-starboard assignments (alignments() would panic if one did).
    for n in 1..=6 {
        for w in all_decorated(n) {
            let arcs = w.arcs();
            let aligned: BTreeSet<(usize, usize)> = w
                .alignments()
                .into_iter()
                .map(|a| {
                    let (p, s) = (a.port.tail, a.starboard.tail);
                    (p.min(s), p.max(s))
                })
                .collect();
            for i in 0..arcs.len() {
                for j in i + 1..arcs.len() {
                    let cross = crossings(&arcs[i], &arcs[j], n);
                    let align = aligned.contains(&(arcs[i].tail.min(arcs[j].tail), arcs[i].tail.max(arcs[j].tail)));
                    assert!(!(cross && align), "{w}: pair both crossing and alignment");
                }
            }
        }
    }
}

#[test]
fn loop_pair_orientations() {
    // A ccw loop (port) with a cw loop (starboard) aligns; same-orientation
    // pairs do not.
    let mixed = DecoratedPermutation::new(Permutation::identity(2), &[2], &[1]).unwrap();
    assert_eq!(mixed.alignments().len(), 1);
    let a = &mixed.alignments()[0];
    assert_eq!((a.port.tail, a.starboard.tail), (1, 2));
    for o in [LoopOrientation::Cw, LoopOrientation::Ccw] {
        let same = DecoratedPermutation::oriented_identity(2, o);
        assert!(same.alignments().is_empty());
    }
}

#[test]
fn alignment_json_shape() {
    let w = running_example();
    let a = w
        .alignments()
        .into_iter()
        .find(|a| a.port.tail == 9 && a.starboard.tail == 8)
        .unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        r#"{"port":[9,2],"starboard":[8,3]}"#
    );
}

#[test]
fn svg_export_is_well_formed() {
    let svg = decorated_perm::chord_diagram_svg(&running_example());
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("marker-end"));
    assert_eq!(svg.matches("<text").count(), 9);
    // Two loops: one cw, one ccw.
    assert_eq!(svg.matches("<path d=\"M ").count(), 2);
}
