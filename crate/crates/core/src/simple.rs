//! Coverings whose branch points each hold a single critical point
//! ("simple" strata): the generating function `G`, its recurrence, and the
//! closed formulas it reproduces.
//!
//! `G(t, y_1, y_2, ...) = Σ_n Σ_Y h(Y)/|Aut Y| · Y t^n` sums over monomials
//! of weight `2n - 2` (a factor `y_i` marks a critical point of
//! multiplicity `i` at its own branch point). The recurrence reads
//!
//! ```text
//! 2 t^2 d^2G/dt^2 = Σ_L m(L) y_i y_j (G_{a_1} ... G_{a_{k-1}})_0 (G_{a_k})_0
//! ```
//!
//! summed over all ordered decomposition lists `L = (a_1, ..., a_k; i, j)`,
//! where `G_a` is `dG/dy_a` for `a >= 1`, `G_0 = t dG/dt`, and a subscript
//! `0` outside parentheses applies `t d/dt` to the whole product.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::decomp::{arrangements, DecompList};
use crate::oracle::HurwitzQuery;
use crate::partition::{partitions_at_most_parts, Partition};
use crate::rational::{factorial, pow_signed, rat, ratio, Int, Rational};
use crate::series::{GradingRule, Monomial, Series, VarFamily};
use crate::Error;

type Terms = BTreeMap<Monomial, Rational>;

fn add_into(acc: &mut Terms, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Per-`t`-degree components of a series, `comp[m]` holding the degree-`m`
/// terms.
fn components(series: &Series, max_deg: u32) -> Vec<Terms> {
    let mut out = vec![Terms::new(); max_deg as usize + 1];
    for (m, c) in series.terms() {
        if m.t_deg() <= max_deg {
            add_into(&mut out[m.t_deg() as usize], m.clone(), c.clone());
        }
    }
    out
}

fn mul_components(a: &[Terms], b: &[Terms], max_deg: u32) -> Vec<Terms> {
    let mut out = vec![Terms::new(); max_deg as usize + 1];
    for (da, part_a) in a.iter().enumerate() {
        if part_a.is_empty() || da > max_deg as usize {
            continue;
        }
        for (db, part_b) in b.iter().enumerate() {
            let d = da + db;
            if d > max_deg as usize || part_b.is_empty() {
                continue;
            }
            for (ma, ca) in part_a {
                for (mb, cb) in part_b {
                    add_into(&mut out[d], ma.mul(mb), ca * cb);
                }
            }
        }
    }
    out
}

/// Solve the recurrence for `G` through `t^order`, starting from the
/// convention seed `t`. The degree-`n` component is the degree-`n` part of
/// the right side divided by `2n(n-1)`; every product on the right mixes
/// at least two factors of positive `t`-degree, so only lower orders enter.
///
/// The grading (weight `2n - 2` at degree `n`) is asserted after every
/// order.
pub fn solve_g_pde(order: u32) -> Series {
    let mut g =
        Series::monomial(VarFamily::Y, order, Monomial::t_power(1), rat(1)).expect("t <= order");
    for n in 2..=order {
        let degree_n = rhs_degree_component(&g, n);
        let divisor = rat(2 * i64::from(n) * (i64::from(n) - 1));
        for (m, c) in degree_n {
            g.add_term(m, c / &divisor).expect("degree n <= order");
        }
        assert!(
            g.grading_check(GradingRule::Simple),
            "grading violated at order {n}"
        );
    }
    g
}

/// Degree-`n` component of the recurrence right side, assembled from the
/// truncation of `g` through degree `n - 1`.
///
/// Lists are enumerated by the multiset of entries: an entry `a >= 1`
/// forces its factor to start at `t^{a+1}` and every factor has degree at
/// least one, so `k + Σ a_r <= n`; the ordered lists sharing a multiset and
/// distinguished entry contribute identical products and are counted by
/// the arrangement factor.
fn rhs_degree_component(g: &Series, n: u32) -> Terms {
    let max_entry = n.saturating_sub(2);
    let derivative_components: Vec<Vec<Terms>> = (0..=max_entry)
        .map(|a| {
            let series = if a == 0 {
                g.d0()
            } else {
                g.dvar(a).expect("y family")
            };
            components(&series, n - 1)
        })
        .collect();

    let unit: Vec<Terms> = {
        let mut u = vec![Terms::new(); n as usize];
        u[0].insert(Monomial::t_power(0), rat(1));
        u
    };
    let mut product_memo: HashMap<Vec<u32>, Vec<Terms>> = HashMap::new();

    fn product_of(
        rest: &[u32],
        memo: &mut HashMap<Vec<u32>, Vec<Terms>>,
        derivatives: &[Vec<Terms>],
        unit: &[Terms],
        max_deg: u32,
    ) -> Vec<Terms> {
        if rest.is_empty() {
            return unit.to_vec();
        }
        if let Some(hit) = memo.get(rest) {
            return hit.clone();
        }
        let tail = product_of(&rest[1..], memo, derivatives, unit, max_deg);
        let result = mul_components(&tail, &derivatives[rest[0] as usize], max_deg);
        memo.insert(rest.to_vec(), result.clone());
        result
    }

    let mut rhs = Terms::new();
    for k in 2..=n {
        for s in 0..=(n - k) {
            for partition in partitions_at_most_parts(s, k as usize) {
                let mut entries = partition.clone();
                entries.resize(k as usize, 0);
                let mut seen = Vec::new();
                for idx in 0..entries.len() {
                    let distinguished = entries[idx];
                    if seen.contains(&distinguished) {
                        continue;
                    }
                    seen.push(distinguished);
                    let mut rest = entries.clone();
                    rest.remove(idx);
                    let arr = arrangements(&rest);

                    let prod = product_of(
                        &rest,
                        &mut product_memo,
                        &derivative_components,
                        &unit,
                        n - 1,
                    );
                    let last = &derivative_components[distinguished as usize];
                    // (product)_0 (last)_0 at joint degree n
                    let mut w = Terms::new();
                    for m in 1..n {
                        let (pa, pb) = (&prod[m as usize], &last[(n - m) as usize]);
                        if pa.is_empty() || pb.is_empty() {
                            continue;
                        }
                        let factor = rat(i64::from(m) * i64::from(n - m));
                        for (ma, ca) in pa {
                            for (mb, cb) in pb {
                                add_into(&mut w, ma.mul(mb), ca * cb * &factor);
                            }
                        }
                    }
                    if w.is_empty() {
                        continue;
                    }
                    let rest_product: Int = rest.iter().map(|&a| Int::from(a + 1)).product();

                    for i in (k - 1)..=(s + k - 1) {
                        let j = s + 2 * k - 2 - i;
                        let mut full = rest.clone();
                        full.push(distinguished);
                        let list = DecompList::new(full, i, j).expect("constructed valid");
                        let q = list.q();
                        if q.is_zero() {
                            continue;
                        }
                        let scale = Rational::from_integer(&arr * &q * &rest_product);
                        let marker = Monomial::new(0, [(i, 1), (j, 1)]).expect("i, j >= 1");
                        for (m, c) in &w {
                            add_into(&mut rhs, m.mul(&marker), c * &scale);
                        }
                    }
                }
            }
        }
    }
    rhs
}

/// A monomial of `G`: `t`-degree `n`, variable weight `2n - 2`, indices at
/// most `n - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleMonomial {
    mono: Monomial,
}

impl SimpleMonomial {
    pub fn new(mono: Monomial) -> Result<Self, Error> {
        let n = mono.t_deg();
        if n == 0 || mono.weight() + 2 != 2 * n {
            return Err(Error::BadMonomial(format!(
                "weight {} does not match 2·{} - 2",
                mono.weight(),
                n
            )));
        }
        if let Some(&(i, _)) = mono.exps().last() {
            if i > n - 1 {
                return Err(Error::BadMonomial(format!(
                    "index {i} exceeds the multiplicity bound {}",
                    n - 1
                )));
            }
        }
        Ok(Self { mono })
    }

    /// Build from the variable exponents; the `t`-degree is `weight/2 + 1`.
    pub fn from_exps(exps: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, Error> {
        let probe = Monomial::new(0, exps)?;
        let weight = probe.weight();
        if weight % 2 != 0 {
            return Err(Error::BadMonomial(format!(
                "odd weight {weight} cannot equal 2n - 2"
            )));
        }
        let n = weight / 2 + 1;
        Self::new(Monomial::new(n, probe.exps().iter().copied())?)
    }

    /// Parse e.g. `y2^2*y1^4`; the `t`-degree is implied by the weight.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let (family, pairs) = Monomial::parse_vars(s)?;
        if family == Some(VarFamily::X) {
            return Err(Error::BadMonomial("expected y-family variables".into()));
        }
        Self::from_exps(pairs)
    }

    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }

    pub fn sheets(&self) -> u32 {
        self.mono.t_deg()
    }

    /// `Π m_i!` over the variable exponents.
    pub fn aut(&self) -> Int {
        self.mono
            .exps()
            .iter()
            .map(|&(_, e)| factorial(e))
            .product()
    }

    /// The factorization query this monomial describes: one single-part
    /// profile per `y_i` factor with `i >= 2`; the `y_1` factors are the
    /// extra simple branch points.
    pub fn query(&self) -> Result<HurwitzQuery, Error> {
        let kappas: Vec<Partition> = self
            .mono
            .exps()
            .iter()
            .filter(|&&(i, _)| i >= 2)
            .flat_map(|&(i, e)| std::iter::repeat_n(i, e as usize))
            .map(|i| Partition::new(vec![i]).expect("positive part"))
            .collect();
        HurwitzQuery::new(self.sheets() as usize, kappas)
    }
}

impl std::fmt::Display for SimpleMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "t^{}*{}", self.mono.t_deg(), self.mono.vars_string('y'))
    }
}

/// Recover the Hurwitz number from a coefficient of `G`:
/// `h(Y) = coefficient · |Aut Y|`.
pub fn extract_h(g: &Series, y: &SimpleMonomial) -> Result<Rational, Error> {
    let coeff = g.coefficient(y.monomial())?;
    Ok(coeff * Rational::from_integer(y.aut()))
}

/// All monomials of `G` at `t`-degree `n`: partitions of `2n - 2` with
/// parts at most `n - 1`.
pub fn monomials_at(n: u32) -> Vec<SimpleMonomial> {
    if n == 0 {
        return Vec::new();
    }
    crate::partition::partitions_bounded(2 * n - 2, n.saturating_sub(1).max(1))
        .into_iter()
        .map(|parts| {
            let mut exps: BTreeMap<u32, u32> = BTreeMap::new();
            for p in parts {
                *exps.entry(p).or_insert(0) += 1;
            }
            SimpleMonomial::new(Monomial::new(n, exps).expect("positive indices"))
                .expect("weight matches by construction")
        })
        .collect()
}

/// The four closed formulas for coverings with two or three non-simple
/// branch points, each holding a lone double or triple critical point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmallProfile {
    /// Two double points: profile {(2), (2)}.
    TwoDouble,
    /// A double and a triple point: {(2), (3)}.
    DoubleTriple,
    /// Two triple points: {(3), (3)}.
    TwoTriple,
    /// Three double points: {(2), (2), (2)}.
    ThreeDouble,
}

impl SmallProfile {
    pub const ALL: [SmallProfile; 4] = [
        SmallProfile::TwoDouble,
        SmallProfile::DoubleTriple,
        SmallProfile::TwoTriple,
        SmallProfile::ThreeDouble,
    ];

    pub fn parts(self) -> &'static [u32] {
        match self {
            SmallProfile::TwoDouble => &[2, 2],
            SmallProfile::DoubleTriple => &[2, 3],
            SmallProfile::TwoTriple => &[3, 3],
            SmallProfile::ThreeDouble => &[2, 2, 2],
        }
    }

    pub fn from_parts(parts: &[u32]) -> Option<Self> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        Self::ALL
            .into_iter()
            .find(|p| p.parts() == sorted.as_slice())
    }

    /// Smallest sheet count in the formula's domain.
    pub fn min_sheets(self) -> u32 {
        match self {
            SmallProfile::TwoDouble => 3,
            _ => 4,
        }
    }

    /// The corresponding `G`-monomial at `n` sheets: the profile factors
    /// padded with `y_1` to weight `2n - 2`.
    pub fn monomial(self, n: u32) -> Result<SimpleMonomial, Error> {
        let special: u32 = self.parts().iter().sum();
        let budget = 2 * n - 2;
        if budget < special {
            return Err(Error::OutsideDomain(format!(
                "profile weight {special} exceeds budget {budget}"
            )));
        }
        let mut exps: Vec<(u32, u32)> = Vec::new();
        if budget > special {
            exps.push((1, budget - special));
        }
        for &p in self.parts() {
            exps.push((p, 1));
        }
        SimpleMonomial::from_exps(exps)
    }
}

/// Exact evaluation of the closed formula for a [`SmallProfile`].
pub fn small_profile_value(profile: SmallProfile, n: u32) -> Result<Rational, Error> {
    if n < profile.min_sheets() {
        return Err(Error::OutsideDomain(format!(
            "formula for {profile:?} needs n >= {}",
            profile.min_sheets()
        )));
    }
    let n_i = i64::from(n);
    let poly = |coeffs: &[i64]| -> Rational {
        let mut acc = rat(0);
        for &c in coeffs {
            acc = acc * rat(n_i) + rat(c);
        }
        acc
    };
    let value = match profile {
        SmallProfile::TwoDouble => {
            ratio(3, 4)
                * poly(&[27, -137, 180])
                * pow_signed(u64::from(n), n_i - 6)
                * Rational::new(factorial(2 * n - 6), factorial(n - 3))
        }
        SmallProfile::DoubleTriple => {
            rat(8)
                * poly(&[6, -37, 60])
                * pow_signed(u64::from(n), n_i - 7)
                * Rational::new(factorial(2 * n - 7), factorial(n - 4))
        }
        SmallProfile::TwoTriple => {
            ratio(4, 9)
                * poly(&[256, -2787, 10448, -13440])
                * pow_signed(u64::from(n), n_i - 8)
                * Rational::new(factorial(2 * n - 8), factorial(n - 4))
        }
        SmallProfile::ThreeDouble => {
            ratio(1, 8)
                * poly(&[729, -6723, 21026, -22680])
                * pow_signed(u64::from(n), n_i - 7)
                * Rational::new(factorial(2 * n - 8), factorial(n - 4))
        }
    };
    Ok(value)
}

/// Closed formulas for coverings with at most one distinguished critical
/// point, read off the shape of the `G`-monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnePointFormula {
    /// A critical point of the largest possible multiplicity `n - 1`, in a
    /// monomial of `k` factors: `h = n^{k-3}`.
    MaxCycle { k: u32 },
    /// A critical point of multiplicity `n - 2`, `k` factors:
    /// `h = (k-2)(n-1)^{k-3}`.
    NextMaxCycle { k: u32 },
    /// One point of multiplicity `i != 1` and simple points otherwise:
    /// `h = n^{n-i-3} (i+1)^{i+1} (2n-2-i)! / ((n-i-1)! (i+1)!)`.
    SingleCycle { i: u32 },
    /// All critical points simple: `h = n^{n-3} (2n-2)!/n!`.
    AllSimple,
}

/// Exact evaluation of a [`OnePointFormula`] at `n` sheets.
pub fn one_point_value(formula: OnePointFormula, n: u32) -> Result<Rational, Error> {
    match formula {
        OnePointFormula::MaxCycle { k } => {
            if n < 2 || k < 1 {
                return Err(Error::OutsideDomain("need n >= 2, k >= 1".into()));
            }
            Ok(pow_signed(u64::from(n), i64::from(k) - 3))
        }
        OnePointFormula::NextMaxCycle { k } => {
            if n < 3 || k < 2 {
                return Err(Error::OutsideDomain("need n >= 3, k >= 2".into()));
            }
            Ok(rat(i64::from(k) - 2) * pow_signed(u64::from(n) - 1, i64::from(k) - 3))
        }
        OnePointFormula::SingleCycle { i } => {
            if i == 1 || i == 0 || i > n - 1 {
                return Err(Error::OutsideDomain(format!(
                    "need 2 <= i <= n - 1, got i = {i}, n = {n}"
                )));
            }
            Ok(pow_signed(u64::from(n), i64::from(n) - i64::from(i) - 3)
                * Rational::new(
                    crate::rational::pow_int(u64::from(i) + 1, i + 1) * factorial(2 * n - 2 - i),
                    factorial(n - i - 1) * factorial(i + 1),
                ))
        }
        OnePointFormula::AllSimple => {
            if n < 1 {
                return Err(Error::OutsideDomain("need n >= 1".into()));
            }
            Ok(pow_signed(u64::from(n), i64::from(n) - 3)
                * Rational::new(factorial(2 * n - 2), factorial(n)))
        }
    }
}

/// One entry of the coefficient-polynomial table: for a monomial `M` in
/// `y_2, y_3, ...` with index sum `k` and `r` factors, the coefficient of
/// `t^n y_1^{2n-2-k} M` in `G` is `n^{n-3-k+r}/n! · P(n)` with
/// `P(n) = scale · (n-1)...(n-roots) · tail(n)`.
#[derive(Debug, Clone)]
pub struct PmEntry {
    pub label: &'static str,
    pub exps: &'static [(u32, u32)],
    scale: (i64, i64),
    roots: u32,
    tail: &'static [i64],
}

impl PmEntry {
    pub fn index_sum(&self) -> u32 {
        self.exps.iter().map(|&(i, e)| i * e).sum()
    }

    pub fn factor_count(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    /// `P(n)`, exactly.
    pub fn poly(&self, n: u32) -> Rational {
        let mut value = ratio(self.scale.0, self.scale.1);
        for r in 1..=self.roots {
            value *= rat(i64::from(n) - i64::from(r));
        }
        let mut tail = rat(0);
        for &c in self.tail {
            tail = tail * rat(i64::from(n)) + rat(c);
        }
        value * tail
    }

    /// The predicted coefficient of `t^n y_1^{2n-2-k} M` in `G`.
    pub fn predicted_coefficient(&self, n: u32) -> Rational {
        let k = i64::from(self.index_sum());
        let r = i64::from(self.factor_count());
        pow_signed(u64::from(n), i64::from(n) - 3 - k + r) * self.poly(n)
            / Rational::from_integer(factorial(n))
    }

    /// Smallest `n` at which the monomial `y_1^{2n-2-k} M` exists.
    pub fn min_sheets(&self) -> u32 {
        let k = self.index_sum();
        let max_index = self.exps.iter().map(|&(i, _)| i).max().unwrap_or(1);
        let mut n = 2u32.max(max_index + 1);
        while 2 * n < k + 2 {
            n += 1;
        }
        n
    }

    /// The monomial at `n` sheets.
    pub fn monomial(&self, n: u32) -> Result<SimpleMonomial, Error> {
        let k = self.index_sum();
        if 2 * n < k + 2 {
            return Err(Error::OutsideDomain(format!(
                "index sum {k} exceeds weight budget {}",
                2 * n - 2
            )));
        }
        let mut exps: Vec<(u32, u32)> = self.exps.to_vec();
        if 2 * n - 2 - k > 0 {
            exps.push((1, 2 * n - 2 - k));
        }
        SimpleMonomial::from_exps(exps)
    }
}

/// The eight tabulated coefficient polynomials.
///
/// The single-variable entries follow the one-point closed formula: for
/// `M = y_i` the scale is `(i+1)^{i+1}/(i+1)!`, giving `9/2`, `32/3`,
/// `625/24` for `i = 2, 3, 4`.
pub fn pm_table() -> Vec<PmEntry> {
    vec![
        PmEntry {
            label: "1",
            exps: &[],
            scale: (1, 1),
            roots: 0,
            tail: &[1],
        },
        PmEntry {
            label: "y2",
            exps: &[(2, 1)],
            scale: (9, 2),
            roots: 2,
            tail: &[1],
        },
        PmEntry {
            label: "y3",
            exps: &[(3, 1)],
            scale: (32, 3),
            roots: 3,
            tail: &[1],
        },
        PmEntry {
            label: "y4",
            exps: &[(4, 1)],
            scale: (625, 24),
            roots: 4,
            tail: &[1],
        },
        PmEntry {
            label: "y2^2",
            exps: &[(2, 2)],
            scale: (3, 8),
            roots: 2,
            tail: &[27, -137, 180],
        },
        PmEntry {
            label: "y2*y3",
            exps: &[(2, 1), (3, 1)],
            scale: (8, 1),
            roots: 3,
            tail: &[6, -37, 60],
        },
        PmEntry {
            label: "y3^2",
            exps: &[(3, 2)],
            scale: (2, 9),
            roots: 3,
            tail: &[256, -2787, 10448, -13440],
        },
        PmEntry {
            label: "y2^3",
            exps: &[(2, 3)],
            scale: (1, 48),
            roots: 3,
            tail: &[729, -6723, 21026, -22680],
        },
    ]
}

/// Look up a table entry by its monomial exponents.
pub fn pm_entry(exps: &[(u32, u32)]) -> Result<PmEntry, Error> {
    let canonical = Monomial::new(0, exps.iter().copied())?;
    pm_table()
        .into_iter()
        .find(|e| {
            Monomial::new(0, e.exps.iter().copied()).expect("table entries are valid") == canonical
        })
        .ok_or_else(|| Error::UnknownLabel(canonical.vars_string('y')))
}

/// Check the tabulated polynomial against `G` for every `n` in the range
/// where the monomial exists (bounded by the order of `g`).
pub fn pm_check(g: &Series, entry: &PmEntry, max_n: u32) -> Result<bool, Error> {
    let hi = max_n.min(g.order());
    for n in entry.min_sheets()..=hi {
        let monomial = entry.monomial(n)?;
        let actual = g.coefficient(monomial.monomial())?;
        if actual != entry.predicted_coefficient(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A symbolic term of the recurrence right side after grouping: terms
/// sharing the branch-point pair `{i, j}` and the same operator shape are
/// merged. For `k = 2` both factors are singly differentiated, so the two
/// entries are interchangeable and stored together in `wrapped`; for
/// `k >= 3` the jointly-differentiated product is `wrapped` and the lone
/// factor is `last`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupedTerm {
    pub pair: (u32, u32),
    pub wrapped: Vec<u32>,
    pub last: Option<u32>,
    pub coefficient: Int,
}

/// Group the recurrence terms for the given unordered variable pairs,
/// summing `m(L)` over all ordered lists that print the same way.
pub fn grouped_terms(pairs: &[(u32, u32)]) -> Vec<GroupedTerm> {
    type GroupKey = ((u32, u32), Vec<u32>, Option<u32>);
    let mut acc: BTreeMap<GroupKey, Int> = BTreeMap::new();
    for &(i, j) in pairs {
        let (lo, hi) = (i.min(j), i.max(j));
        let mut ordered = vec![(lo, hi)];
        if lo != hi {
            ordered.push((hi, lo));
        }
        for (oi, oj) in ordered {
            for list in crate::decomp::enumerate(oi, oj) {
                let k = list.k();
                let a = list.a();
                let key = if k == 2 {
                    let mut both = a.to_vec();
                    both.sort_unstable();
                    ((lo, hi), both, None)
                } else {
                    let mut wrapped = a[..k - 1].to_vec();
                    wrapped.sort_unstable();
                    ((lo, hi), wrapped, Some(a[k - 1]))
                };
                *acc.entry(key).or_insert_with(Int::zero) += list.m();
            }
        }
    }
    acc.into_iter()
        .map(|((pair, wrapped, last), coefficient)| GroupedTerm {
            pair,
            wrapped,
            last,
            coefficient,
        })
        .collect()
}

/// The displayed low-order terms of `G`: orders 1 through 4.
pub fn displayed_g_terms() -> Series {
    type Row = (u32, &'static [(u32, u32)], i64, i64);
    let entries: &[Row] = &[
        (1, &[], 1, 1),
        (2, &[(1, 2)], 1, 4),
        (3, &[(1, 4)], 1, 6),
        (3, &[(1, 2), (2, 1)], 1, 2),
        (3, &[(2, 2)], 1, 6),
        (4, &[(1, 6)], 1, 6),
        (4, &[(1, 4), (2, 1)], 9, 8),
        (4, &[(1, 3), (3, 1)], 2, 3),
        (4, &[(1, 2), (2, 2)], 3, 2),
        (4, &[(1, 1), (2, 1), (3, 1)], 1, 1),
        (4, &[(2, 3)], 1, 6),
        (4, &[(3, 2)], 1, 8),
    ];
    let mut s = Series::zero(VarFamily::Y, 4);
    for &(t, exps, num, den) in entries {
        s.add_term(
            Monomial::new(t, exps.iter().copied()).unwrap(),
            ratio(num, den),
        )
        .unwrap();
    }
    s
}
