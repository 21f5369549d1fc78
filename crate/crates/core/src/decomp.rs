//! Decomposition lists: the combinatorics of writing a permutation as a
//! product of two long cycles.
//!
//! A list `(a_1, ..., a_k; i, j)` records that two cycles of lengths `i+1`
//! and `j+1`, sharing `k` elements of a ground set they jointly cover, can
//! multiply to a permutation with cycle lengths `a_1+1, ..., a_k+1`. The
//! derived counts `q`, `p`, `m` measure how many ways that can happen; `m`
//! supplies the coefficients of the recurrence for simple coverings.

use num::{One, Zero};

use crate::rational::{factorial, Int};
use crate::sn;
use crate::Error;

/// Maximal ground set size `k + Σ a_r` accepted by [`DecompList::brute_force_p`].
pub const MAX_GROUND_SET: usize = 10;

/// A validated decomposition list `(a_1, ..., a_k; i, j)`.
///
/// The last entry `a_k` is distinguished: it divides `p` to give `m`, and
/// in the recurrence it indexes the lone separately-differentiated factor.
/// Lists differing only in the position of the distinguished entry are
/// therefore distinct.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DecompList {
    a: Vec<u32>,
    i: u32,
    j: u32,
}

/// The two defining conditions: `2 <= k <= min(i+1, j+1)` and
/// `Σ a_r = i + j - 2k + 2`.
pub fn is_valid(a: &[u32], i: u32, j: u32) -> bool {
    let k = a.len() as u32;
    if k < 2 || k > (i + 1).min(j + 1) {
        return false;
    }
    let sum: u32 = a.iter().sum();
    i + j + 2 == sum + 2 * k
}

impl DecompList {
    pub fn new(a: impl Into<Vec<u32>>, i: u32, j: u32) -> Result<Self, Error> {
        let a = a.into();
        if !is_valid(&a, i, j) {
            return Err(Error::BadDecompList(format!("({a:?}; {i}, {j})")));
        }
        Ok(Self { a, i, j })
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    /// Number of integer tuples `(b_1, ..., b_k)` with `0 <= b_r <= a_r`
    /// and `Σ b_r = i - k + 1`.
    pub fn q(&self) -> Int {
        bounded_compositions(&self.a, self.i as i64 - self.a.len() as i64 + 1)
    }

    /// `(a_1+1) ... (a_k+1) · q`.
    pub fn p(&self) -> Int {
        let mut out = self.q();
        for &ar in &self.a {
            out *= Int::from(ar + 1);
        }
        out
    }

    /// `p / (a_k + 1)`, always an exact integer division.
    pub fn m(&self) -> Int {
        let p = self.p();
        let d = Int::from(self.a[self.a.len() - 1] + 1);
        debug_assert!((&p % &d).is_zero());
        p / d
    }

    /// Independent count of the decompositions the list describes.
    ///
    /// Fixes a permutation `σ` with cycle lengths `a_r + 1` on a ground set
    /// of `k + Σ a_r` elements and counts ordered pairs of cyclic
    /// permutations `(ρ1, ρ2)` of lengths `i+1` and `j+1` with `ρ1∘ρ2 = σ`
    /// that jointly cover the ground set. Each such pair meets every cycle
    /// of `σ` in exactly one shared element, so walking `ρ1` induces a
    /// cyclic arrangement of the k cycles; the pairs split evenly over the
    /// `(k-1)!` arrangements, and only those realizing the reference
    /// arrangement (cycles in list order) are counted. That normalized
    /// count is what `p` measures.
    pub fn brute_force_p(&self) -> Result<Int, Error> {
        let k = self.a.len();
        let total: u32 = self.a.iter().sum();
        let g = k + total as usize;
        if g > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                size: g,
                max: MAX_GROUND_SET,
            });
        }

        // σ with cycle r on the consecutive block of a_r + 1 elements
        let mut sigma: Vec<u8> = (0..g as u8).collect();
        let mut block_of = vec![0usize; g];
        let mut pos = 0usize;
        for (r, &ar) in self.a.iter().enumerate() {
            let len = ar as usize + 1;
            for off in 0..len {
                sigma[pos + off] = (pos + (off + 1) % len) as u8;
                block_of[pos + off] = r;
            }
            pos += len;
        }

        let mut count = Int::zero();
        for rho1 in sn::single_cycles(g, self.i as usize + 1) {
            let rho2 = sn::compose(&sn::inverse(&rho1), &sigma);
            // ρ2 must be a single cycle of length j + 1
            let nontrivial: Vec<Vec<u8>> = sn::cycles(&rho2)
                .into_iter()
                .filter(|c| c.len() > 1)
                .collect();
            if nontrivial.len() != 1 || nontrivial[0].len() != self.j as usize + 1 {
                continue;
            }
            let in_rho1: Vec<bool> = (0..g).map(|x| rho1[x] != x as u8).collect();
            let in_rho2: Vec<bool> = (0..g).map(|x| rho2[x] != x as u8).collect();
            if (0..g).any(|x| !in_rho1[x] && !in_rho2[x]) {
                continue;
            }
            // shared elements, one per cycle of σ
            let mut rep = vec![usize::MAX; k];
            for x in 0..g {
                if in_rho1[x] && in_rho2[x] {
                    let r = block_of[x];
                    debug_assert_eq!(rep[r], usize::MAX, "one shared element per cycle");
                    rep[r] = x;
                }
            }
            debug_assert!(rep.iter().all(|&x| x != usize::MAX));
            // cyclic arrangement of σ's cycles met while walking ρ1
            let start = rep[0] as u8;
            let mut arrangement = Vec::with_capacity(k);
            let mut x = start;
            loop {
                if in_rho2[x as usize] {
                    arrangement.push(block_of[x as usize]);
                }
                x = rho1[x as usize];
                if x == start {
                    break;
                }
            }
            if arrangement.iter().copied().eq(0..k) {
                count += Int::one();
            }
        }
        Ok(count)
    }
}

impl std::fmt::Display for DecompList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "((")?;
        for (idx, ar) in self.a.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{ar}")?;
        }
        write!(f, "); {}, {})", self.i, self.j)
    }
}

/// Number of tuples `0 <= b_r <= a_r` with `Σ b_r = target`.
fn bounded_compositions(bounds: &[u32], target: i64) -> Int {
    if target < 0 {
        return Int::zero();
    }
    let target = target as usize;
    let mut ways = vec![Int::zero(); target + 1];
    ways[0] = Int::one();
    for &ar in bounds {
        let mut next = vec![Int::zero(); target + 1];
        for (s, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for b in 0..=(ar as usize).min(target - s) {
                next[s + b] += w;
            }
        }
        ways = next;
    }
    ways[target].clone()
}

/// All decomposition lists for the ordered pair `(i, j)`, in canonical
/// order: `k` ascending, then the tuples `a` in descending lexicographic
/// order.
pub fn enumerate(i: u32, j: u32) -> Vec<DecompList> {
    assert!(i >= 1 && j >= 1);
    let mut out = Vec::new();
    for k in 2..=(i + 1).min(j + 1) {
        let sum = i + j + 2 - 2 * k; // i + j - 2k + 2 >= 0 since k <= min+1
        let mut prefix = Vec::with_capacity(k as usize);
        descend(sum, k as usize, &mut prefix, &mut |a: &[u32]| {
            out.push(DecompList {
                a: a.to_vec(),
                i,
                j,
            });
        });
    }
    out
}

fn descend(rem: u32, slots: usize, prefix: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if slots == 1 {
        prefix.push(rem);
        emit(prefix);
        prefix.pop();
        return;
    }
    for v in (0..=rem).rev() {
        prefix.push(v);
        descend(rem - v, slots - 1, prefix, emit);
        prefix.pop();
    }
}

/// `(k-1)! / Π mult!`: ordered arrangements of the non-distinguished
/// entries of a list with the given value multiset.
pub fn arrangements(values: &[u32]) -> Int {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = factorial(values.len() as u32);
    let mut run = 0u32;
    let mut prev = None;
    for &v in &sorted {
        if Some(v) == prev {
            run += 1;
        } else {
            out /= factorial(run);
            run = 1;
            prev = Some(v);
        }
    }
    out / factorial(run)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn bi(v: i64) -> Int {
        int(v)
    }

    #[test]
    fn validity_conditions() {
        assert!(is_valid(&[0, 0], 1, 1));
        assert!(is_valid(&[1, 1], 2, 2));
        assert!(!is_valid(&[1], 1, 1)); // k = 1 < 2
        assert!(!is_valid(&[1, 0], 1, 1)); // wrong sum
        assert!(!is_valid(&[0, 0, 0], 1, 1)); // k > min(i+1, j+1)
        assert!(DecompList::new(vec![1], 1, 1).is_err());
    }

    #[test]
    fn q_p_m_values() {
        let l = DecompList::new(vec![1, 1], 2, 2).unwrap();
        assert_eq!(l.q(), bi(2));
        assert_eq!(l.p(), bi(8));
        assert_eq!(l.m(), bi(4));

        let l = DecompList::new(vec![0, 0], 1, 1).unwrap();
        assert_eq!(l.q(), bi(1));
        assert_eq!(l.p(), bi(1));

        // the two orientations feeding the displayed coefficient
        // 10 y2 y3 (G_0)_0 (G_3)_0
        let l = DecompList::new(vec![3, 0], 2, 3).unwrap();
        assert_eq!(l.q(), bi(1));
        assert_eq!(l.p(), bi(4));
        assert_eq!(l.m(), bi(4));
        let l = DecompList::new(vec![0, 3], 2, 3).unwrap();
        assert_eq!(l.p(), bi(4));
        assert_eq!(l.m(), bi(1));

        let l = DecompList::new(vec![0, 0, 0], 2, 2).unwrap();
        assert_eq!(l.p(), bi(1));
        assert_eq!(l.m(), bi(1));
    }

    #[test]
    fn enumerate_canonical_order() {
        let lists: Vec<_> = enumerate(1, 1).iter().map(|l| l.a().to_vec()).collect();
        assert_eq!(lists, vec![vec![0, 0]]);

        let lists: Vec<_> = enumerate(2, 2).iter().map(|l| l.a().to_vec()).collect();
        assert_eq!(
            lists,
            vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![0, 0, 0]]
        );

        let lists: Vec<_> = enumerate(1, 3).iter().map(|l| l.a().to_vec()).collect();
        assert_eq!(lists, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn brute_force_anchor_values() {
        let l = DecompList::new(vec![0, 0], 1, 1).unwrap();
        assert_eq!(l.brute_force_p().unwrap(), bi(1));
        let l = DecompList::new(vec![1, 1], 2, 2).unwrap();
        assert_eq!(l.brute_force_p().unwrap(), bi(8));
        let l = DecompList::new(vec![0, 0, 0], 2, 2).unwrap();
        assert_eq!(l.brute_force_p().unwrap(), bi(1));
    }

    #[test]
    fn brute_force_validates_p_through_seven() {
        for i in 1..=6u32 {
            for j in 1..=(7 - i) {
                for l in enumerate(i, j) {
                    assert_eq!(l.p(), l.brute_force_p().unwrap(), "p mismatch for {l}");
                }
            }
        }
    }

    #[test]
    fn ground_set_bound_enforced() {
        // (8,0; 8,2): ground set 2 + 8 = 10 is allowed, 11 is not
        let l = DecompList::new(vec![9, 0], 9, 2).unwrap();
        assert!(matches!(
            l.brute_force_p(),
            Err(Error::GroundSetTooLarge { size: 11, .. })
        ));
    }

    #[test]
    fn q_symmetries_and_min_formula() {
        for i in 1..=6u32 {
            for j in 1..=(7 - i) {
                for l in enumerate(i, j) {
                    // invariance under permuting a
                    let mut rev = l.a().to_vec();
                    rev.reverse();
                    let lr = DecompList::new(rev, i, j).unwrap();
                    assert_eq!(l.q(), lr.q());
                    // invariance under swapping i and j
                    let ls = DecompList::new(l.a().to_vec(), j, i).unwrap();
                    assert_eq!(l.q(), ls.q());
                    // m is a positive integer
                    assert!(l.m() > bi(0));
                    // k = 2 closed form
                    if l.k() == 2 {
                        let expect = i.min(j).min(l.a()[0] + 1).min(l.a()[1] + 1);
                        assert_eq!(l.q(), bi(i64::from(expect)));
                    }
                }
                assert_eq!(enumerate(i, j).len(), enumerate(j, i).len());
            }
        }
    }

    /// The normalization behind `brute_force_p`: ordered cycle pairs with
    /// product σ split evenly over the `(k-1)!` cyclic arrangements of
    /// σ's cycles, so the raw pair count is `(k-1)! · p(L)`.
    #[test]
    fn pair_count_is_uniform_over_arrangements() {
        for (a, i, j) in [
            (vec![0u32, 0, 0], 2u32, 2u32),
            (vec![1, 0, 0], 2, 3),
            (vec![2, 1, 0], 3, 4),
            (vec![1, 1, 1], 3, 4),
            (vec![0, 0, 0, 1], 3, 4),
        ] {
            let l = DecompList::new(a, i, j).unwrap();
            let k = l.k() as u32;
            let raw = raw_pair_count(&l);
            assert_eq!(
                raw,
                l.p() * crate::rational::factorial(k - 1),
                "raw pair count for {l}"
            );
        }
    }

    /// Ordered pairs with product σ, no arrangement restriction.
    fn raw_pair_count(l: &DecompList) -> Int {
        let g = l.k() + l.a().iter().sum::<u32>() as usize;
        let mut sigma: Vec<u8> = (0..g as u8).collect();
        let mut pos = 0usize;
        for &ar in l.a() {
            let len = ar as usize + 1;
            for off in 0..len {
                sigma[pos + off] = (pos + (off + 1) % len) as u8;
            }
            pos += len;
        }
        let mut count = Int::from(0);
        for rho1 in crate::sn::single_cycles(g, l.i() as usize + 1) {
            let rho2 = crate::sn::compose(&crate::sn::inverse(&rho1), &sigma);
            let nontrivial: Vec<_> = crate::sn::cycles(&rho2)
                .into_iter()
                .filter(|c| c.len() > 1)
                .collect();
            if nontrivial.len() != 1 || nontrivial[0].len() != l.j() as usize + 1 {
                continue;
            }
            let covered = (0..g).all(|x| rho1[x] != x as u8 || rho2[x] != x as u8);
            if covered {
                count += Int::from(1);
            }
        }
        count
    }

    #[test]
    fn arrangement_counts() {
        assert_eq!(arrangements(&[]), bi(1));
        assert_eq!(arrangements(&[0, 0]), bi(1));
        assert_eq!(arrangements(&[0, 1]), bi(2));
        assert_eq!(arrangements(&[0, 1, 1]), bi(3));
    }
}
