//! Enumeration formulas, census tables, and growth ratios.

use num_bigint::BigInt;
use num_traits::Zero;

use enumeration::{
    bell_b, brute_force_census, census, growth_ratio, smooth_count_bell, smooth_count_coeff,
    spirograph_count, IntPolynomial,
};

/// The refined table of smooth positroid varieties in Gr(k, n) by k,
/// rows n = 1..10, columns k = 0..n.
const S1_TABLE: [&[u64]; 10] = [
    &[1, 1],
    &[1, 3, 1],
    &[1, 7, 7, 1],
    &[1, 15, 29, 15, 1],
    &[1, 31, 96, 96, 31, 1],
    &[1, 63, 282, 440, 282, 63, 1],
    &[1, 127, 771, 1688, 1688, 771, 127, 1],
    &[1, 255, 2011, 5803, 8089, 5803, 2011, 255, 1],
    &[1, 511, 5074, 18520, 33721, 33721, 18520, 5074, 511, 1],
    &[1, 1023, 12488, 55998, 127698, 166325, 127698, 55998, 12488, 1023, 1],
];

/// Smooth decorated permutations by number of components of the stabilized
/// interval-free decomposition, rows n = 1..10, columns k = 1..n.
const S2_TABLE: [&[u64]; 10] = [
    &[2],
    &[1, 4],
    &[2, 6, 8],
    &[3, 18, 24, 16],
    &[4, 40, 100, 80, 32],
    &[5, 78, 305, 440, 240, 64],
    &[6, 140, 798, 1750, 1680, 672, 128],
    &[7, 236, 1876, 5838, 8400, 5824, 1792, 256],
    &[8, 378, 4056, 17136, 34524, 35616, 18816, 4608, 512],
    &[9, 580, 8190, 45480, 122682, 175896, 137760, 57600, 11520, 1024],
];

const S_VALUES: [u64; 9] = [2, 5, 16, 61, 256, 1132, 5174, 24229, 115654];

#[test]
fn spirograph_counts() {
    assert_eq!(spirograph_count(1).unwrap(), 2);
    assert_eq!(spirograph_count(2).unwrap(), 1);
    assert_eq!(spirograph_count(5).unwrap(), 4);
    assert!(spirograph_count(0).is_err());
}

#[test]
fn smooth_counts_match_both_formulas() {
    for (i, &s) in S_VALUES.iter().enumerate() {
        let n = i + 1;
        assert_eq!(smooth_count_coeff(n).unwrap(), BigInt::from(s), "coeff at {n}");
        assert_eq!(smooth_count_bell(n).unwrap(), BigInt::from(s), "bell at {n}");
    }
    for n in 1..=60 {
        assert_eq!(smooth_count_coeff(n).unwrap(), smooth_count_bell(n).unwrap(), "at {n}");
    }
}

#[test]
fn bell_values() {
    assert_eq!(bell_b(0, 0).unwrap(), BigInt::from(1));
    assert_eq!(bell_b(1, 1).unwrap(), BigInt::from(2));
    for n in 1..=6 {
        assert_eq!(bell_b(n, 0).unwrap(), BigInt::zero());
    }
    assert!(bell_b(2, 3).is_err());
}

/// Generates all set partitions of [n] as lists of blocks.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![vec![]];
    for x in 1..=n {
        let mut next = Vec::new();
        for p in out {
            for i in 0..=p.len() {
                let mut q = p.clone();
                if i == p.len() {
                    q.push(vec![x]);
                } else {
                    q[i].push(x);
                }
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[test]
fn bell_matches_set_partition_oracle() {
    // b_{n,k} = Σ over partitions of [n] into k blocks of Π s_c(|B|)·|B|!.
    let fact = |m: usize| (1..=m as u64).product::<u64>();
    for n in 1..=8 {
        let mut sums = vec![BigInt::zero(); n + 1];
        for p in set_partitions(n) {
            let prod: u64 = p
                .iter()
                .map(|b| spirograph_count(b.len()).unwrap() * fact(b.len()))
                .product();
            sums[p.len()] += prod;
        }
        for k in 1..=n {
            assert_eq!(bell_b(n, k).unwrap(), sums[k], "b_{{{n},{k}}}");
        }
    }
}

#[test]
fn integrality() {
    // b_{n,k} is divisible by (n−k+1)! throughout; smooth_count_bell
    // asserts this internally summand by summand.
    for n in (1..=100).step_by(9) {
        smooth_count_bell(n).unwrap();
    }
    smooth_count_bell(100).unwrap();
}

#[test]
fn census_tables_verbatim() {
    for n in 1..=10 {
        let c = census(n).unwrap();
        let s1: Vec<String> = S1_TABLE[n - 1].iter().map(|x| x.to_string()).collect();
        let s2: Vec<String> = S2_TABLE[n - 1].iter().map(|x| x.to_string()).collect();
        assert_eq!(c.s1.csv(), s1.join(","), "s1 row {n}");
        assert_eq!(c.s2.csv(), s2.join(","), "s2 row {n}");
        assert_eq!(c.s3, c.s2, "s3 row {n}");
    }
}

#[test]
fn census_boundaries_and_q() {
    let c = census(4).unwrap();
    assert_eq!(c.s1.count(2), BigInt::from(29));
    assert_eq!(c.s1.count(0), BigInt::from(1));
    assert_eq!(c.s1.count(4), BigInt::from(1));
    assert_eq!(census(5).unwrap().s2.count(3), BigInt::from(100));

    for n in 1..=20 {
        let c = census(n).unwrap();
        let s = smooth_count_bell(n).unwrap();
        for row in [&c.s1, &c.s2, &c.s3] {
            // q-specialization at q = 1 recovers s(n).
            assert_eq!(row.q_polynomial().coeffs().iter().sum::<BigInt>(), s, "at {n}");
        }
        assert_eq!(c.s2.q_polynomial(), c.s3.q_polynomial(), "at {n}");
    }
}

/// All noncrossing partitions of [n], via the first-block gap recursion on
/// a sorted slice of labels.
fn noncrossing_partitions(labels: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if labels.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    // Choose the block of the smallest label as a sublist of labels
    // starting with labels[0]; the gaps between consecutive chosen labels
    // must be partitioned within themselves for noncrossingness.
    let m = labels.len();
    for mask in 0..1u32 << (m - 1) {
        let mut block = vec![labels[0]];
        let mut gaps: Vec<&[usize]> = Vec::new();
        let mut start = 1;
        for (i, &l) in labels.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                block.push(l);
                gaps.push(&labels[start..i]);
                start = i + 1;
            }
        }
        gaps.push(&labels[start..]);
        let mut partials = vec![vec![block]];
        for gap in gaps {
            let mut next = Vec::new();
            for sub in noncrossing_partitions(gap) {
                for p in &partials {
                    let mut q = p.clone();
                    q.extend(sub.iter().cloned());
                    next.push(q);
                }
            }
            partials = next;
        }
        out.extend(partials);
    }
    out
}

#[test]
fn composition_identity() {
    // s(n) = Σ over noncrossing partitions of [n] of Π s_c(|B|).
    for n in 1..=9 {
        let labels: Vec<usize> = (1..=n).collect();
        let total: u64 = noncrossing_partitions(&labels)
            .iter()
            .map(|p| p.iter().map(|b| spirograph_count(b.len()).unwrap()).product::<u64>())
            .sum();
        assert_eq!(BigInt::from(total), smooth_count_bell(n).unwrap(), "at {n}");
    }
}

#[test]
fn brute_force_matches_census() {
    for n in 1..=7 {
        let (s1, s2) = brute_force_census(n).unwrap();
        let c = census(n).unwrap();
        assert_eq!(s1, c.s1, "s1 at {n}");
        assert_eq!(s2, c.s2, "s2 at {n}");
    }
    assert!(brute_force_census(10).is_err());
}

#[test]
fn growth_ratios() {
    assert_eq!(growth_ratio(100, 7).unwrap(), "5.528236");
    assert_eq!(growth_ratio(150, 7).unwrap(), "5.555362");
    assert_eq!(growth_ratio(50, 8).unwrap(), "5.4489777");
    assert_eq!(growth_ratio(50, 4).unwrap(), "5.449");
    assert_eq!(growth_ratio(1, 3).unwrap(), "2.50");
}

#[test]
fn polynomial_basics() {
    let p = IntPolynomial::new(vec![BigInt::from(1), BigInt::from(2)]);
    let q = p.mul(&p);
    assert_eq!(q.coeffs(), &[BigInt::from(1), BigInt::from(4), BigInt::from(4)]);
    assert_eq!(p.pow_trunc(3, 1).coeffs(), &[BigInt::from(1), BigInt::from(6)]);
    assert_eq!(IntPolynomial::monomial(BigInt::from(5), 2).coeff(2), BigInt::from(5));
    assert!(IntPolynomial::zero().mul(&p).is_zero());
}
