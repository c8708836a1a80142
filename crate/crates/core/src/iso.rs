//! Order-isomorphism search by backtracking with invariant pruning.

use crate::poset::Poset;

/// Per-element invariants preserved by any order isomorphism.
fn signature(p: &Poset) -> Vec<(usize, usize, usize)> {
    let h = p.heights();
    (0..p.size())
        .map(|x| (h[x], p.down_set(x).len(), p.up_set(x).len()))
        .collect()
}

/// An order isomorphism `p -> q` as an index map, if one exists.
///
/// Candidates are tried in order of (height, down-set size, index), so the
/// witness returned is deterministic. The witness is verified before it is
/// returned.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.size() != q.size() {
        return None;
    }
    let sp = signature(p);
    let sq = signature(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }

    let order = p.linear_extension();
    let mut candidates: Vec<usize> = (0..q.size()).collect();
    candidates.sort_by_key(|&y| (sq[y].0, sq[y].1, y));

    let mut map = vec![usize::MAX; p.size()];
    let mut used = vec![false; q.size()];
    if extend(p, q, &sp, &sq, &order, &candidates, 0, &mut map, &mut used) {
        assert!(verify(p, q, &map), "backtracking produced an invalid witness");
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    p: &Poset,
    q: &Poset,
    sp: &[(usize, usize, usize)],
    sq: &[(usize, usize, usize)],
    order: &[usize],
    candidates: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else { return true };
    for &y in candidates {
        if used[y] || sp[x] != sq[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let v = map[u];
            p.leq(u, x) == q.leq(v, y) && p.leq(x, u) == q.leq(y, v)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(p, q, sp, sq, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// Whether `map` is a bijection `p -> q` preserving and reflecting order.
pub fn verify(p: &Poset, q: &Poset, map: &[usize]) -> bool {
    if p.size() != q.size() || map.len() != p.size() {
        return false;
    }
    let mut seen = vec![false; q.size()];
    for &m in map {
        if m >= q.size() || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..p.size()).all(|u| (0..p.size()).all(|v| p.leq(u, v) == q.leq(map[u], map[v])))
}

/// Inverse of a bijection given as an index map.
pub fn invert(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (i, &m) in map.iter().enumerate() {
        inv[m] = i;
    }
    inv
}
