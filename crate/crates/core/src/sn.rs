//! Small helpers for permutations of `{0..n-1}` stored as image vectors.

/// `(p ∘ q)(x) = p(q(x))`.
pub fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn inverse(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (x, &px) in p.iter().enumerate() {
        inv[px as usize] = x as u8;
    }
    inv
}

pub fn identity(n: usize) -> Vec<u8> {
    (0..n as u8).collect()
}

/// Cycles of a permutation, each starting at its smallest element, sorted
/// by that element.
pub fn cycles(p: &[u8]) -> Vec<Vec<u8>> {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut cyc = vec![s as u8];
        seen[s] = true;
        let mut x = p[s] as usize;
        while x != s {
            cyc.push(x as u8);
            seen[x] = true;
            x = p[x] as usize;
        }
        out.push(cyc);
    }
    out
}

/// Lengths of nontrivial cycles minus one, descending: the ramification
/// profile of the permutation.
pub fn profile(p: &[u8]) -> Vec<u32> {
    let mut parts: Vec<u32> = cycles(p)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| (c.len() - 1) as u32)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Visit every permutation of `{0..n-1}` once (Heap's algorithm).
pub fn for_each_perm(n: usize, mut visit: impl FnMut(&[u8])) {
    let mut a = identity(n);
    visit(&a);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// All single cycles of the given length on `{0..n-1}` (other points fixed).
pub fn single_cycles(n: usize, length: usize) -> Vec<Vec<u8>> {
    assert!(length >= 2 && length <= n);
    let mut out = Vec::new();
    let mut support = Vec::with_capacity(length);
    fn choose(start: usize, n: usize, need: usize, support: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if need == 0 {
            // arrange: fix the smallest element first, permute the rest
            let mut rest: Vec<u8> = support[1..].to_vec();
            permute_into(support[0], &mut rest, 0, n, out);
            return;
        }
        for x in start..=(n - need) {
            support.push(x as u8);
            choose(x + 1, n, need - 1, support, out);
            support.pop();
        }
    }
    fn permute_into(first: u8, rest: &mut [u8], k: usize, n: usize, out: &mut Vec<Vec<u8>>) {
        if k == rest.len() {
            let mut perm: Vec<u8> = (0..n as u8).collect();
            let mut prev = first;
            for &x in rest.iter() {
                perm[prev as usize] = x;
                prev = x;
            }
            perm[prev as usize] = first;
            out.push(perm);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            permute_into(first, rest, k + 1, n, out);
            rest.swap(k, i);
        }
    }
    choose(0, n, length, &mut support, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_cycles() {
        let p = vec![1u8, 0, 2]; // (01)
        let q = vec![0u8, 2, 1]; // (12)
        let pq = compose(&p, &q); // apply q then p: 0->0->1, 1->2->2, 2->1->0
        assert_eq!(pq, vec![1, 2, 0]);
        assert_eq!(profile(&pq), vec![2]);
        assert_eq!(compose(&pq, &inverse(&pq)), identity(3));
        assert_eq!(cycles(&identity(3)).len(), 3);
    }

    #[test]
    fn perm_enumeration_counts() {
        let mut count = 0usize;
        for_each_perm(5, |_| count += 1);
        assert_eq!(count, 120);
    }

    #[test]
    fn single_cycle_counts() {
        // n! / (length * (n-length)!) cycles of each length
        assert_eq!(single_cycles(4, 2).len(), 6);
        assert_eq!(single_cycles(4, 3).len(), 8);
        assert_eq!(single_cycles(4, 4).len(), 6);
        for c in single_cycles(5, 3) {
            assert_eq!(profile(&c), vec![2]);
        }
    }
}
