//! Ground truth by brute force: counting factorizations of the identity in
//! the symmetric group.
//!
//! A covering with prescribed ramification corresponds to a tuple of
//! permutations with prescribed cycle types whose product is the identity
//! and whose generated group is transitive; the Hurwitz number is the tuple
//! count divided by `n!`. Unrestricted counts come from convolving
//! conjugacy-class sums; class sums are central, so the convolution runs in
//! class coordinates (one entry per cycle type instead of one per group
//! element). Transitivity is then enforced by inclusion–exclusion over the
//! orbit of a distinguished point.

use std::collections::HashMap;

use num::{One, Zero};

use crate::partition::Partition;
use crate::rational::{binomial, factorial, Int, Rational};
use crate::sn;
use crate::Error;

/// Largest supported sheet count. Class tables for `S_n` hold all `n!`
/// permutations grouped by cycle type, which stays comfortable through 9.
pub const MAX_SHEETS: usize = 9;

/// A ramification query: `n` sheets and a list of prescribed profiles, all
/// remaining branch points being simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzQuery {
    n: usize,
    kappas: Vec<Partition>,
}

impl HurwitzQuery {
    pub fn new(n: usize, kappas: Vec<Partition>) -> Result<Self, Error> {
        if !(1..=MAX_SHEETS).contains(&n) {
            return Err(Error::SheetsOutOfRange { n, max: MAX_SHEETS });
        }
        for kappa in &kappas {
            if kappa.sum() as usize + kappa.len() > n {
                return Err(Error::QueryDoesNotFit(format!(
                    "profile {kappa} does not fit in {n} sheets"
                )));
            }
        }
        let total: u32 = kappas.iter().map(Partition::sum).sum();
        if total > 2 * n as u32 - 2 {
            return Err(Error::QueryDoesNotFit(format!(
                "profiles use degree {total} but only {} is available",
                2 * n - 2
            )));
        }
        Ok(Self { n, kappas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappas(&self) -> &[Partition] {
        &self.kappas
    }

    /// Number of additional simple branch points, `2n - 2 - Σ d(κ_i)`.
    pub fn extra_transpositions(&self) -> u32 {
        2 * self.n as u32 - 2 - self.kappas.iter().map(Partition::sum).sum::<u32>()
    }
}

/// Conjugacy classes of `S_n`, keyed by ramification profile (nontrivial
/// cycle lengths minus one, descending).
struct ClassTable {
    n: usize,
    profiles: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    /// Flat member storage per class, in chunks of `n`.
    members: Vec<Vec<u8>>,
    id_class: usize,
}

impl ClassTable {
    fn build(n: usize) -> Self {
        let mut profiles: Vec<Vec<u32>> = Vec::new();
        let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut members: Vec<Vec<u8>> = Vec::new();
        sn::for_each_perm(n, |p| {
            let prof = sn::profile(p);
            let idx = *index.entry(prof.clone()).or_insert_with(|| {
                profiles.push(prof);
                members.push(Vec::new());
                profiles.len() - 1
            });
            members[idx].extend_from_slice(p);
        });
        let id_class = index[&Vec::new()];
        Self {
            n,
            profiles,
            index,
            members,
            id_class,
        }
    }

    fn class_count(&self) -> usize {
        self.profiles.len()
    }

    fn members_of(&self, class: usize) -> impl Iterator<Item = &[u8]> {
        self.members[class].chunks(self.n.max(1))
    }

    /// One representative per class.
    fn representative(&self, class: usize) -> &[u8] {
        self.members_of(class).next().expect("class is nonempty")
    }

    /// Transfer matrix for convolution by the sum of `class`:
    /// `entry[k'][k]` counts `τ` in the class with `π ∘ τ^{-1}` of class `k`
    /// for a fixed `π` of class `k'`.
    fn transfer(&self, class: usize) -> Vec<Vec<Int>> {
        let m = self.class_count();
        let mut matrix = vec![vec![Int::zero(); m]; m];
        for (target, row) in matrix.iter_mut().enumerate() {
            let rep = self.representative(target).to_vec();
            for tau in self.members_of(class) {
                let sigma = sn::compose(&rep, &sn::inverse(tau));
                let k = self.index[&sn::profile(&sigma)];
                row[k] += Int::one();
            }
        }
        matrix
    }
}

type QueryKey = (usize, Vec<Vec<u32>>, u32);

/// Memoizing factorization counter.
pub struct Oracle {
    tables: HashMap<usize, ClassTable>,
    transfers: HashMap<(usize, Vec<u32>), Vec<Vec<Int>>>,
    all_memo: HashMap<QueryKey, Int>,
    transitive_memo: HashMap<QueryKey, Int>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self {
            tables: HashMap::new(),
            transfers: HashMap::new(),
            all_memo: HashMap::new(),
            transitive_memo: HashMap::new(),
        }
    }

    /// Ordered tuples `(σ_1, ..., σ_c, τ_1, ..., τ_d)` with `σ_i` of profile
    /// `κ_i`, each `τ` a transposition, and product the identity.
    pub fn count_all_factorizations(&mut self, query: &HurwitzQuery) -> Int {
        let kappas = canonical(query.kappas());
        self.count_all(query.n(), &kappas, query.extra_transpositions())
    }

    /// Same count restricted to tuples whose generated group is transitive.
    pub fn count_transitive_factorizations(&mut self, query: &HurwitzQuery) -> Int {
        let kappas = canonical(query.kappas());
        self.count_transitive(query.n(), &kappas, query.extra_transpositions())
    }

    /// The Hurwitz number: transitive count over `n!`.
    pub fn hurwitz_number(&mut self, query: &HurwitzQuery) -> Rational {
        let count = self.count_transitive_factorizations(query);
        Rational::new(count, factorial(query.n() as u32))
    }

    fn table(&mut self, n: usize) -> &ClassTable {
        self.tables.entry(n).or_insert_with(|| ClassTable::build(n))
    }

    fn transfer_for(&mut self, n: usize, profile: &[u32]) -> Option<&Vec<Vec<Int>>> {
        let key = (n, profile.to_vec());
        if !self.transfers.contains_key(&key) {
            let table = self.table(n);
            let class = *table.index.get(profile)?;
            let matrix = table.transfer(class);
            self.transfers.insert(key.clone(), matrix);
        }
        self.transfers.get(&key)
    }

    /// Unrestricted count for possibly-degenerate subqueries (any `d`, any
    /// profile list); zero when a profile does not fit.
    fn count_all(&mut self, n: usize, kappas: &[Vec<u32>], d: u32) -> Int {
        if n == 0 {
            return if kappas.is_empty() && d == 0 {
                Int::one()
            } else {
                Int::zero()
            };
        }
        for kappa in kappas {
            let need: u32 = kappa.iter().sum::<u32>() + kappa.len() as u32;
            if need as usize > n {
                return Int::zero();
            }
        }
        if d > 0 && n < 2 {
            return Int::zero();
        }
        let key = (n, kappas.to_vec(), d);
        if let Some(v) = self.all_memo.get(&key) {
            return v.clone();
        }

        let class_count = self.table(n).class_count();
        let id_class = self.table(n).id_class;
        let mut u = vec![Int::zero(); class_count];
        u[id_class] = Int::one();
        let transposition = vec![1u32];
        let mut steps: Vec<&[u32]> = kappas.iter().map(Vec::as_slice).collect();
        for _ in 0..d {
            steps.push(&transposition);
        }
        for profile in steps {
            let matrix = match self.transfer_for(n, profile) {
                Some(m) => m,
                None => {
                    self.all_memo.insert(key, Int::zero());
                    return Int::zero();
                }
            };
            let mut w = vec![Int::zero(); class_count];
            for (target, row) in matrix.iter().enumerate() {
                let mut acc = Int::zero();
                for (k, count) in row.iter().enumerate() {
                    if !count.is_zero() && !u[k].is_zero() {
                        acc += count * &u[k];
                    }
                }
                w[target] = acc;
            }
            u = w;
        }
        let result = u[id_class].clone();
        self.all_memo.insert(key, result.clone());
        result
    }

    /// Transitive count by inclusion–exclusion over the orbit containing
    /// point 1: every tuple restricts to a transitive tuple on that orbit
    /// and an arbitrary tuple on the complement, with the profiles and the
    /// `d` transpositions split between the two sides.
    fn count_transitive(&mut self, n: usize, kappas: &[Vec<u32>], d: u32) -> Int {
        if n == 0 {
            return Int::zero();
        }
        let key = (n, kappas.to_vec(), d);
        if let Some(v) = self.transitive_memo.get(&key) {
            return v.clone();
        }

        let mut total = self.count_all(n, kappas, d);
        // every split term is a nonnegative count, so a zero total forces
        // them all to zero
        if !total.is_zero() {
            let split_choices: Vec<Vec<(Vec<u32>, Vec<u32>)>> =
                kappas.iter().map(|k| submultisets(k)).collect();
            for orbit in 1..n {
                let mut assignment = vec![0usize; split_choices.len()];
                loop {
                    let mut subs: Vec<Vec<u32>> = Vec::new();
                    let mut comps: Vec<Vec<u32>> = Vec::new();
                    for (i, &a) in assignment.iter().enumerate() {
                        let (sub, comp) = &split_choices[i][a];
                        if !sub.is_empty() {
                            subs.push(sub.clone());
                        }
                        if !comp.is_empty() {
                            comps.push(comp.clone());
                        }
                    }
                    let subs = canonical_vecs(subs);
                    let comps = canonical_vecs(comps);
                    for ds in 0..=d {
                        let transitive_part = self.count_transitive(orbit, &subs, ds);
                        if transitive_part.is_zero() {
                            continue;
                        }
                        let rest = self.count_all(n - orbit, &comps, d - ds);
                        if rest.is_zero() {
                            continue;
                        }
                        total -= binomial(n as u32 - 1, orbit as u32 - 1)
                            * binomial(d, ds)
                            * transitive_part
                            * rest;
                    }
                    // advance the mixed-radix assignment
                    let mut pos = 0;
                    loop {
                        if pos == assignment.len() {
                            break;
                        }
                        assignment[pos] += 1;
                        if assignment[pos] < split_choices[pos].len() {
                            break;
                        }
                        assignment[pos] = 0;
                        pos += 1;
                    }
                    if pos == assignment.len() {
                        break;
                    }
                }
            }
        }
        self.transitive_memo.insert(key, total.clone());
        total
    }
}

/// Canonical form of a profile list: empties dropped, list sorted.
fn canonical(kappas: &[Partition]) -> Vec<Vec<u32>> {
    canonical_vecs(
        kappas
            .iter()
            .filter(|k| !k.is_empty())
            .map(|k| k.parts().to_vec())
            .collect(),
    )
}

fn canonical_vecs(mut kappas: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    kappas.sort();
    kappas
}

/// Distinct submultisets of a descending multiset, paired with their
/// complements.
fn submultisets(parts: &[u32]) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &p in parts {
        match groups.last_mut() {
            Some((v, c)) if *v == p => *c += 1,
            _ => groups.push((p, 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new())];
    for &(value, count) in &groups {
        let mut next = Vec::with_capacity(out.len() * (count as usize + 1));
        for (sub, comp) in &out {
            for take in 0..=count {
                let mut s = sub.clone();
                let mut c = comp.clone();
                s.extend(std::iter::repeat_n(value, take as usize));
                c.extend(std::iter::repeat_n(value, (count - take) as usize));
                next.push((s, c));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat, ratio};

    fn query(n: usize, kappas: &[&[u32]]) -> HurwitzQuery {
        HurwitzQuery::new(
            n,
            kappas
                .iter()
                .map(|k| Partition::new(k.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    /// Tuple enumeration over explicit class members, for small cases only.
    fn enumerate_counts(n: usize, kappas: &[&[u32]], d: u32) -> (Int, Int) {
        let mut classes: HashMap<Vec<u32>, Vec<Vec<u8>>> = HashMap::new();
        sn::for_each_perm(n, |p| {
            classes.entry(sn::profile(p)).or_default().push(p.to_vec());
        });
        let mut steps: Vec<&Vec<Vec<u8>>> = Vec::new();
        let empty = Vec::new();
        for k in kappas {
            steps.push(classes.get(*k).unwrap_or(&empty));
        }
        let transpositions = classes.get(&vec![1u32]).unwrap_or(&empty);
        for _ in 0..d {
            steps.push(transpositions);
        }
        let mut all = Int::zero();
        let mut transitive = Int::zero();
        fn orbits_of(generators: &[&Vec<u8>], n: usize) -> usize {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                if parent[x] != x {
                    let root = find(parent, parent[x]);
                    parent[x] = root;
                }
                parent[x]
            }
            for g in generators {
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g[x] as usize));
                    parent[a] = b;
                }
            }
            (0..n)
                .map(|x| find(&mut parent, x))
                .collect::<std::collections::HashSet<_>>()
                .len()
        }
        fn rec(
            steps: &[&Vec<Vec<u8>>],
            depth: usize,
            product: Vec<u8>,
            chosen: &mut Vec<*const Vec<u8>>,
            n: usize,
            all: &mut Int,
            transitive: &mut Int,
        ) {
            if depth == steps.len() {
                if product == sn::identity(n) {
                    *all += Int::one();
                    let gens: Vec<&Vec<u8>> = chosen.iter().map(|&p| unsafe { &*p }).collect();
                    if orbits_of(&gens, n) == 1 {
                        *transitive += Int::one();
                    }
                }
                return;
            }
            for perm in steps[depth] {
                chosen.push(perm as *const Vec<u8>);
                rec(
                    steps,
                    depth + 1,
                    sn::compose(&product, perm),
                    chosen,
                    n,
                    all,
                    transitive,
                );
                chosen.pop();
            }
        }
        rec(
            &steps,
            0,
            sn::identity(n),
            &mut Vec::new(),
            n,
            &mut all,
            &mut transitive,
        );
        (all, transitive)
    }

    #[test]
    fn four_transpositions_on_three_sheets() {
        let mut oracle = Oracle::new();
        let q = query(3, &[]);
        assert_eq!(q.extra_transpositions(), 4);
        assert_eq!(oracle.count_all_factorizations(&q), int(27));
        assert_eq!(oracle.count_transitive_factorizations(&q), int(24));
        assert_eq!(oracle.hurwitz_number(&q), rat(4));
    }

    #[test]
    fn anchor_counts() {
        let mut oracle = Oracle::new();
        let q = query(2, &[&[1]]);
        assert_eq!(q.extra_transpositions(), 1);
        assert_eq!(oracle.count_transitive_factorizations(&q), int(1));
        assert_eq!(oracle.hurwitz_number(&q), ratio(1, 2));

        let q = query(3, &[&[2], &[2]]);
        assert_eq!(q.extra_transpositions(), 0);
        assert_eq!(oracle.count_all_factorizations(&q), int(2));
        assert_eq!(oracle.count_transitive_factorizations(&q), int(2));
        assert_eq!(oracle.hurwitz_number(&q), ratio(1, 3));

        let q = query(4, &[&[2], &[3]]);
        assert_eq!(q.extra_transpositions(), 1);
        assert_eq!(oracle.count_transitive_factorizations(&q), int(24));
        assert_eq!(oracle.hurwitz_number(&q), rat(1));
    }

    #[test]
    fn matches_direct_enumeration() {
        let mut oracle = Oracle::new();
        let cases: &[(usize, &[&[u32]])] = &[
            (3, &[]),
            (2, &[&[1]]),
            (3, &[&[2], &[2]]),
            (3, &[&[1], &[1]]),
            (4, &[&[2], &[3]]),
            (4, &[&[3], &[3]]),
            (4, &[&[2], &[2], &[2]]),
            (4, &[&[1, 1], &[2]]),
        ];
        for &(n, kappas) in cases {
            let q = query(n, kappas);
            let d = q.extra_transpositions();
            let (all, transitive) = enumerate_counts(n, kappas, d);
            assert_eq!(
                oracle.count_all_factorizations(&q),
                all,
                "all count for n={n} {kappas:?}"
            );
            assert_eq!(
                oracle.count_transitive_factorizations(&q),
                transitive,
                "transitive count for n={n} {kappas:?}"
            );
        }
    }

    #[test]
    fn kappa_order_is_irrelevant() {
        let mut oracle = Oracle::new();
        let a = query(5, &[&[2], &[1, 1], &[1]]);
        let b = query(5, &[&[1], &[2], &[1, 1]]);
        assert_eq!(oracle.hurwitz_number(&a), oracle.hurwitz_number(&b));
    }

    #[test]
    fn all_simple_profile_closed_form() {
        // n^{n-3} (2n-2)! / n! for the profile with no special points
        let mut oracle = Oracle::new();
        for n in 1..=6usize {
            let q = query(n, &[]);
            let expected = Rational::new(
                crate::rational::pow_int(n as u64, n as u32) * factorial(2 * n as u32 - 2),
                crate::rational::pow_int(n as u64, 3) * factorial(n as u32),
            );
            assert_eq!(oracle.hurwitz_number(&q), expected, "n = {n}");
        }
    }

    #[test]
    fn transitive_at_most_all_and_round_trip() {
        let mut oracle = Oracle::new();
        let cases: &[(usize, &[&[u32]])] = &[(4, &[]), (5, &[&[2], &[2]]), (5, &[&[4]])];
        for &(n, kappas) in cases {
            let q = query(n, kappas);
            let d = q.extra_transpositions();
            let all = oracle.count_all_factorizations(&q);
            let transitive = oracle.count_transitive_factorizations(&q);
            assert!(transitive <= all);
            assert!(transitive >= Int::zero());

            // reconstruct the unrestricted count from transitive pieces
            let kappa_vecs = canonical(q.kappas());
            let splits: Vec<Vec<(Vec<u32>, Vec<u32>)>> =
                kappa_vecs.iter().map(|k| submultisets(k)).collect();
            let mut reconstructed = Int::zero();
            let mut assignment = vec![0usize; splits.len()];
            loop {
                let mut subs = Vec::new();
                let mut comps = Vec::new();
                for (i, &a) in assignment.iter().enumerate() {
                    let (s, c) = &splits[i][a];
                    if !s.is_empty() {
                        subs.push(s.clone());
                    }
                    if !c.is_empty() {
                        comps.push(c.clone());
                    }
                }
                let subs = canonical_vecs(subs);
                let comps = canonical_vecs(comps);
                for orbit in 1..=n {
                    for ds in 0..=d {
                        if orbit == n && !(comps.is_empty() && ds == d) {
                            continue;
                        }
                        let t = oracle.count_transitive(orbit, &subs, ds);
                        if t.is_zero() {
                            continue;
                        }
                        let u = oracle.count_all(n - orbit, &comps, d - ds);
                        if u.is_zero() {
                            continue;
                        }
                        reconstructed +=
                            binomial(n as u32 - 1, orbit as u32 - 1) * binomial(d, ds) * t * u;
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == assignment.len() {
                        break;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < splits[pos].len() {
                        break;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                }
                if pos == assignment.len() {
                    break;
                }
            }
            assert_eq!(reconstructed, all, "round trip for n={n} {kappas:?}");
        }
    }

    #[test]
    fn query_validation() {
        assert!(matches!(
            HurwitzQuery::new(10, vec![]),
            Err(Error::SheetsOutOfRange { .. })
        ));
        // profile (3) needs 4 points
        assert!(HurwitzQuery::new(3, vec![Partition::new(vec![3]).unwrap()]).is_err());
        // degree budget 2n-2 exceeded
        assert!(HurwitzQuery::new(
            3,
            vec![
                Partition::new(vec![2]).unwrap(),
                Partition::new(vec![2]).unwrap(),
                Partition::new(vec![1]).unwrap()
            ]
        )
        .is_err());
    }

    #[test]
    fn submultiset_enumeration() {
        let subs = submultisets(&[2, 2, 1]);
        assert_eq!(subs.len(), 6); // (0..2 copies of 2) x (0..1 copies of 1)
        assert!(subs.contains(&(vec![2, 1], vec![2])));
        assert!(subs.contains(&(vec![], vec![2, 2, 1])));
        assert!(subs.contains(&(vec![2, 2, 1], vec![])));
    }
}
