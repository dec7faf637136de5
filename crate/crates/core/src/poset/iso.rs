//! Small-instance poset isomorphism by backtracking.

use super::Poset;

/// Finds an order isomorphism `p → q`, returned as the image of each element of `p`.
pub fn find_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.cover_pairs().len() != q.cover_pairs().len() {
        return None;
    }
    let signature = |s: &Poset, x: usize| {
        (
            s.rank(x),
            s.upper_covers(x).len(),
            s.lower_covers(x).len(),
            s.up_set(x).count(),
            s.down_set(x).count(),
        )
    };
    let mut psig: Vec<_> = (0..p.len()).map(|x| signature(p, x)).collect();
    let mut qsig: Vec<_> = (0..q.len()).map(|x| signature(q, x)).collect();
    let (a, b) = (psig.clone(), qsig.clone());
    psig.sort_unstable();
    qsig.sort_unstable();
    if psig != qsig {
        return None;
    }
    let order: Vec<usize> = p.linear_extension().to_vec();
    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    if extend(p, q, &order, 0, &a, &b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend<S: PartialEq>(
    p: &Poset,
    q: &Poset,
    order: &[usize],
    pos: usize,
    psig: &[S],
    qsig: &[S],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(pos) else {
        return true;
    };
    for y in 0..q.len() {
        if used[y] || psig[x] != qsig[y] {
            continue;
        }
        let consistent = order[..pos].iter().all(|&a| {
            let fa = map[a];
            p.leq(a, x) == q.leq(fa, y) && p.leq(x, a) == q.leq(y, fa)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(p, q, order, pos + 1, psig, qsig, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    find_isomorphism(p, q).is_some()
}
