//! Slow, unpruned enumerators used as oracles for the search module.
//!
//! Tables are plain `Vec<i8>` with `-1` for undefined. Nothing is shared with
//! the library besides the final comparison.

#![allow(dead_code)]

pub const UNDEF: i8 = -1;

pub fn ea_ok(n: usize, t: &[i8]) -> bool {
    let one = (n - 1) as i8;
    let at = |x: i8, y: i8| t[x as usize * n + y as usize];
    for a in 0..n as i8 {
        for b in 0..n as i8 {
            if at(a, b) != at(b, a) {
                return false;
            }
            // EA2
            for c in 0..n as i8 {
                let bc = at(b, c);
                if bc == UNDEF {
                    continue;
                }
                let l = at(a, bc);
                if l == UNDEF {
                    continue;
                }
                let ab = at(a, b);
                if ab == UNDEF || at(ab, c) != l {
                    return false;
                }
            }
        }
        // EA3
        if (0..n as i8).filter(|&b| at(a, b) == one).count() != 1 {
            return false;
        }
        // EA4
        if a != 0 && at(a, one) != UNDEF {
            return false;
        }
    }
    true
}

/// All effect algebras of order `n` with `0` as the identity; every other
/// symmetric cell ranges freely over "undefined" and all elements.
pub fn effect_algebras(n: usize) -> Vec<Vec<i8>> {
    let mut cells = Vec::new();
    for x in 1..n {
        for y in x..n {
            cells.push((x, y));
        }
    }
    let mut t = vec![UNDEF; n * n];
    for x in 0..n {
        t[x] = x as i8;
        t[x * n] = x as i8;
    }
    let mut out = Vec::new();
    let total = (n + 1).pow(cells.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &(x, y) in &cells {
            let v = (c % (n + 1)) as i8 - 1;
            c /= n + 1;
            t[x * n + y] = v;
            t[y * n + x] = v;
        }
        if ea_ok(n, &t) {
            out.push(t.clone());
        }
    }
    out
}

pub fn sea_ok(n: usize, ea: &[i8], s: &[i8]) -> bool {
    let one = n - 1;
    let add = |x: i8, y: i8| ea[x as usize * n + y as usize];
    let mul = |x: i8, y: i8| s[x as usize * n + y as usize];
    let comp: Vec<i8> = (0..n)
        .map(|a| (0..n).find(|&b| ea[a * n + b] == one as i8).unwrap() as i8)
        .collect();
    let n8 = n as i8;
    for a in 0..n8 {
        // SEA2
        if mul(one as i8, a) != a {
            return false;
        }
        for b in 0..n8 {
            let ab = mul(a, b);
            // SEA3
            if ab == 0 && mul(b, a) != 0 {
                return false;
            }
            for c in 0..n8 {
                // SEA1
                let bc = add(b, c);
                if bc != UNDEF {
                    let sum = add(ab, mul(a, c));
                    if sum == UNDEF || mul(a, bc) != sum {
                        return false;
                    }
                }
            }
            // SEA4
            if ab == mul(b, a) {
                let bp = comp[b as usize];
                if mul(a, bp) != mul(bp, a) {
                    return false;
                }
                for c in 0..n8 {
                    if mul(a, mul(b, c)) != mul(ab, c) {
                        return false;
                    }
                }
            }
            // SEA5
            for c in 0..n8 {
                if mul(c, a) == mul(a, c) && mul(c, b) == mul(b, c) {
                    if mul(c, ab) != mul(ab, c) {
                        return false;
                    }
                    let s = add(a, b);
                    if s != UNDEF && mul(c, s) != mul(s, c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All sequential products on `ea`; only the `1` row is fixed (it is an
/// axiom), every other cell ranges over all elements.
pub fn sequential_products(n: usize, ea: &[i8]) -> Vec<Vec<i8>> {
    let one = n - 1;
    let cells: Vec<usize> = (0..n * n).filter(|&i| i / n != one).collect();
    let mut s = vec![0i8; n * n];
    for x in 0..n {
        s[one * n + x] = x as i8;
    }
    let mut out = Vec::new();
    let total = n.pow(cells.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &i in &cells {
            s[i] = (c % n) as i8;
            c /= n;
        }
        if sea_ok(n, ea, &s) {
            out.push(s.clone());
        }
    }
    out
}

fn perms_fixing_ends(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0]];
    for _ in 1..n - 1 {
        let mut next = Vec::new();
        for p in &out {
            for v in 1..n - 1 {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    for p in &mut out {
        p.push(n - 1);
    }
    out
}

fn relabel(n: usize, t: &[i8], p: &[usize]) -> Vec<i8> {
    let mut r = vec![UNDEF; n * n];
    for x in 0..n {
        for y in 0..n {
            let v = t[x * n + y];
            r[p[x] * n + p[y]] = if v == UNDEF {
                UNDEF
            } else {
                p[v as usize] as i8
            };
        }
    }
    r
}

/// Smallest relabelling of the concatenated tables over permutations fixing
/// `0` and `1`.
pub fn canonical(n: usize, tables: &[&[i8]]) -> Vec<i8> {
    perms_fixing_ends(n)
        .iter()
        .map(|p| {
            tables
                .iter()
                .flat_map(|t| relabel(n, t, p))
                .collect::<Vec<i8>>()
        })
        .min()
        .unwrap()
}

pub fn count_classes(n: usize, models: &[Vec<Vec<i8>>]) -> usize {
    let mut seen = std::collections::BTreeSet::new();
    for m in models {
        let refs: Vec<&[i8]> = m.iter().map(|t| t.as_slice()).collect();
        seen.insert(canonical(n, &refs));
    }
    seen.len()
}

/// Naive census at order `n`: (labelled EAs, EA classes, labelled SEAs, SEA classes).
pub fn census(n: usize) -> (usize, usize, usize, usize) {
    let eas = effect_algebras(n);
    let mut seas = Vec::new();
    for ea in &eas {
        for s in sequential_products(n, ea) {
            seas.push(vec![ea.clone(), s]);
        }
    }
    let ea_models: Vec<Vec<Vec<i8>>> = eas.iter().map(|t| vec![t.clone()]).collect();
    (
        eas.len(),
        count_classes(n, &ea_models),
        seas.len(),
        count_classes(n, &seas),
    )
}
