//! Partitions of d into at most n parts, listed in the fixed total order
//! used by every heredity chain: dominance, refined to a total order by
//! lexicographic comparison, with the most dominant partition first.

/// A partition stored as its weakly decreasing positive parts.
pub type Partition = Vec<usize>;

/// Label a partition by concatenating its parts, e.g. [2, 1, 1] -> "211".
/// Unambiguous for the supported sizes (parts are single digits).
pub fn partition_label(p: &Partition) -> String {
    assert!(p.iter().all(|&x| x < 10));
    p.iter().map(|x| x.to_string()).collect()
}

/// True when `a` dominates `b`: every prefix sum of `a` is at least the
/// corresponding prefix sum of `b`.
fn dominates(a: &Partition, b: &Partition) -> bool {
    let mut sa = 0;
    let mut sb = 0;
    for k in 0..a.len().max(b.len()) {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

/// All partitions of `d` into at most `n` parts, most dominant first.
/// Incomparable pairs are ordered lexicographically, which places the
/// lexicographically larger partition earlier; comparable pairs always
/// respect dominance because dominance implies lexicographic order.
pub fn partitions_in_order(n: usize, d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    generate(d, d, n, &mut current, &mut out);
    // Descending lexicographic order refines reverse dominance.
    out.sort_by(|a, b| b.cmp(a));
    for pair in out.windows(2) {
        assert!(!dominates(&pair[1], &pair[0]), "order violates dominance");
    }
    out
}

fn generate(
    remaining: usize,
    max_part: usize,
    slots: usize,
    current: &mut Partition,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        generate(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_sets_match_hand_counts() {
        assert_eq!(partitions_in_order(2, 2), vec![vec![2], vec![1, 1]]);
        assert_eq!(
            partitions_in_order(3, 3),
            vec![vec![3], vec![2, 1], vec![1, 1, 1]]
        );
        assert_eq!(
            partitions_in_order(4, 4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn part_count_is_bounded() {
        // At most two parts: (1,1,1) is excluded.
        assert_eq!(partitions_in_order(2, 3), vec![vec![3], vec![2, 1]]);
    }

    #[test]
    fn labels_concatenate_parts() {
        assert_eq!(partition_label(&vec![2, 1, 1]), "211");
        assert_eq!(partition_label(&vec![4]), "4");
    }

    #[test]
    fn dominance_is_respected_even_for_longer_lists() {
        // Partitions of 6: (3,3) and (4,1,1) are incomparable; both must
        // still come after (4,2) and before (2,2,2).
        let ps = partitions_in_order(6, 6);
        let pos = |p: &[usize]| ps.iter().position(|q| q == p).unwrap();
        assert!(pos(&[4, 2]) < pos(&[4, 1, 1]));
        assert!(pos(&[4, 2]) < pos(&[3, 3]));
        assert!(pos(&[4, 1, 1]) < pos(&[2, 2, 2]));
        assert!(pos(&[3, 3]) < pos(&[2, 2, 2]));
    }
}
