//! Permutations of the non-trivial elements and lexicographic minimality.

/// All permutations of `0..n` that fix `0` and `n − 1`, identity first.
pub fn middle_permutations(n: usize) -> Vec<Vec<usize>> {
    let mid: Vec<usize> = (1..n.saturating_sub(1)).collect();
    let mut out = Vec::new();
    permute(&mut mid.clone(), 0, &mut |p| {
        let mut full = Vec::with_capacity(n);
        full.push(0);
        full.extend_from_slice(p);
        if n > 1 {
            full.push(n - 1);
        }
        out.push(full);
    });
    out.sort();
    out
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// Compares a partially filled table against its image under `perm`, along
/// `cells` (in order). Cell values are `None` while unassigned; assigned
/// values are encoded so that their natural order is the search order, and
/// `relabel` maps an encoded value through the permutation.
///
/// Returns `true` if the image is already strictly smaller on a fully
/// determined prefix, i.e. the table cannot be the minimal representative
/// of its orbit whatever the remaining cells become.
pub fn image_is_smaller(
    cells: &[(usize, usize)],
    value: impl Fn(usize, usize) -> Option<usize>,
    perm: &[usize],
    inv: &[usize],
    relabel: impl Fn(usize, &[usize]) -> usize,
) -> bool {
    for &(i, j) in cells {
        let Some(current) = value(i, j) else {
            return false;
        };
        let Some(pre) = value(inv[i], inv[j]) else {
            return false;
        };
        let image = relabel(pre, perm);
        if image != current {
            return image < current;
        }
    }
    false
}
