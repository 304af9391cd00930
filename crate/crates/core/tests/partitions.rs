use innerform::partitions::{concat_transpose, dominance_leq, Partition};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..7, 0..7).prop_map(Partition::new)
}

// Young grid as a set of cells (row, col).
fn cells(l: &Partition) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for (i, &p) in l.parts().iter().enumerate() {
        for j in 0..p {
            out.push((i as u32, j));
        }
    }
    out
}

fn from_cells(mut c: Vec<(u32, u32)>) -> Partition {
    c.sort();
    let rows = c.iter().map(|&(i, _)| i + 1).max().unwrap_or(0);
    Partition::new((0..rows).map(|i| c.iter().filter(|&&(r, _)| r == i).count() as u32).collect())
}

// Partitions of n with parts at most k.
fn count(n: u32, k: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=k.min(n)).map(|p| count(n - p, p)).sum()
}

#[test]
fn enumeration_matches_partition_numbers() {
    let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (n, &p) in known.iter().enumerate() {
        let all = Partition::all(n as u32);
        assert_eq!(all.len(), p);
        assert_eq!(all.len() as u64, count(n as u32, n as u32));
        assert!(all.iter().all(|l| l.size() == n as u32));
        let mut sorted = all.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}

#[test]
fn dominance_is_a_partial_order_on_small_sizes() {
    for n in 0..=7 {
        let all = Partition::all(n);
        for a in &all {
            assert!(dominance_leq(a, a));
            for b in &all {
                if dominance_leq(a, b) && dominance_leq(b, a) {
                    assert_eq!(a, b);
                }
                // transpose reverses dominance
                assert_eq!(dominance_leq(a, b), dominance_leq(&b.transpose(), &a.transpose()));
                for c in &all {
                    if dominance_leq(a, b) && dominance_leq(b, c) {
                        assert!(dominance_leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn dominance_extremes() {
    for n in 1..=8 {
        for l in Partition::all(n) {
            assert!(dominance_leq(&Partition::ones(n), &l));
            assert!(dominance_leq(&l, &Partition::row(n)));
        }
    }
}

proptest! {
    #[test]
    fn transpose_matches_grid_reflection(l in partition()) {
        let reflected = from_cells(cells(&l).into_iter().map(|(i, j)| (j, i)).collect());
        prop_assert_eq!(l.transpose(), reflected);
        prop_assert_eq!(l.transpose().transpose(), l.clone());
        prop_assert_eq!(l.transpose().size(), l.size());
    }

    #[test]
    fn scalings_are_exchanged_by_transpose(l in partition(), e in 1u32..5) {
        prop_assert_eq!(l.dot(e).transpose(), l.transpose().times(e));
        prop_assert_eq!(l.times(e).transpose(), l.transpose().dot(e));
        prop_assert_eq!(l.dot(e).size(), e * l.size());
        prop_assert_eq!(l.times(e).size(), e * l.size());
    }

    #[test]
    fn divisibility_predicates(l in partition(), e in 1u32..5) {
        prop_assert_eq!(l.divides_times(e), l.transpose().divides_dot(e));
        prop_assert!(l.times(e).divides_times(e));
        prop_assert!(l.dot(e).divides_dot(e));
        prop_assert_eq!(l.times(e).quotient_times(e), Some(l.clone()));
        if let Some(q) = l.quotient_times(e) {
            prop_assert_eq!(q.times(e), l.clone());
        }
    }

    #[test]
    fn concat_transpose_adds_diagrams_columnwise(a in partition(), b in partition()) {
        // row i of the result is a_i + b_i
        let len = a.len().max(b.len());
        let rows: Vec<u32> = (0..len)
            .map(|i| a.parts().get(i).copied().unwrap_or(0) + b.parts().get(i).copied().unwrap_or(0))
            .collect();
        prop_assert_eq!(concat_transpose([&a, &b]), Partition::new(rows));
        prop_assert_eq!(concat_transpose([&a]), a.clone());
    }

    #[test]
    fn serde_round_trip(l in partition()) {
        let s = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), l);
    }
}
