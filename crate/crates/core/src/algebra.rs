//! The Laurent algebra generated by the rooted-tree series.
//!
//! With `Y = Σ n^{n-1}/n! t^n` (rooted labeled trees) and
//! `Z = Σ n^n/n! t^n`, the series `X = 1 - Y` is invertible with
//! `X^{-1} = 1 + Z`, and the algebra they generate is the Laurent
//! polynomial ring in `X`. Covering generating series
//! `f_κ(t) = Σ h_κ(n)/d(n)! t^n` all live there; this module builds the
//! worked examples, fits arbitrary `t`-series into the algebra by exact
//! linear solves, and verifies the identities the construction rests on.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linsolve::{solve, Solution};
use crate::rational::{
    binomial, factorial, format_rational, parse_rational, pow_int, pow_signed, rat, ratio, Int,
    Rational,
};
use crate::series::{Monomial, Series, VarFamily};
use crate::Error;

/// A Laurent polynomial in the invertible series `X`, with exact rational
/// coefficients keyed by (possibly negative) exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<i64, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_coeff(0, c);
        out
    }

    /// The monomial `X^e`.
    pub fn x_power(e: i64) -> Self {
        let mut out = Self::zero();
        out.add_coeff(e, rat(1));
        out
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_coeff(e, c);
        }
        out
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_coeff(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(e) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_coeff(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * factor)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                out.add_coeff(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::constant(rat(1));
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Substitute `X = 1 - Y`, `X^{-1} = 1 + Z` and expand through
    /// `t^order`.
    pub fn eval(&self, order: u32) -> Series {
        let x = x_series(order);
        let x_inv = x_inverse_series(order);
        let mut powers: BTreeMap<i64, Series> = BTreeMap::new();
        powers.insert(0, Series::one(VarFamily::T, order));
        let mut out = Series::zero(VarFamily::T, order);
        for (&e, c) in &self.coeffs {
            let power = powers.entry(e).or_insert_with(|| {
                let base = if e > 0 { &x } else { &x_inv };
                let mut acc = Series::one(VarFamily::T, order);
                for _ in 0..e.unsigned_abs() {
                    acc = acc.mul(base).expect("same family");
                }
                acc
            });
            out = out.add(&power.scale(c)).expect("same family");
        }
        out
    }

    /// Serialize as `{"coeffs": {"e": "p/q", ...}}` with exponents in
    /// ascending order.
    pub fn to_json(&self) -> String {
        let doc = ElementDoc {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, format_rational(c)))
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("element serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: ElementDoc = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("bad element JSON: {e}")))?;
        let mut out = Self::zero();
        for (e, c) in doc.coeffs {
            out.add_coeff(e, parse_rational(&c)?);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    coeffs: BTreeMap<i64, String>,
}

impl std::fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&e, c)) in self.coeffs.iter().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = magnitude.is_one();
            if e == 0 {
                write!(f, "{}", format_rational(&magnitude))?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", format_rational(&magnitude))?;
                }
                if e == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// `Y = Σ_{n>=1} n^{n-1}/n! t^n`.
pub fn series_y(order: u32) -> Series {
    series_from_formula(order, |n| {
        pow_signed(u64::from(n), i64::from(n) - 1) / Rational::from_integer(factorial(n))
    })
}

/// `Z = Σ_{n>=1} n^n/n! t^n`.
pub fn series_z(order: u32) -> Series {
    series_from_formula(order, |n| {
        Rational::new(pow_int(u64::from(n), n), factorial(n))
    })
}

/// `X = 1 - Y`.
pub fn x_series(order: u32) -> Series {
    Series::one(VarFamily::T, order)
        .sub(&series_y(order))
        .expect("same family")
}

/// `X^{-1} = 1 + Z`.
pub fn x_inverse_series(order: u32) -> Series {
    Series::one(VarFamily::T, order)
        .add(&series_z(order))
        .expect("same family")
}

/// Build a `t`-series from an exact coefficient formula on `n >= 1`.
pub fn series_from_formula(order: u32, coeff: impl Fn(u32) -> Rational) -> Series {
    let mut s = Series::zero(VarFamily::T, order);
    for n in 1..=order {
        s.add_term(Monomial::t_power(n), coeff(n))
            .expect("n <= order");
    }
    s
}

/// The integer `A_n = Σ_{p+q=n, p,q>=1} n!/(p! q!) p^p q^q`, also equal to
/// `n! Σ_{k<=n-2} n^k/k!`. Both expressions are evaluated and compared.
pub fn a_value(n: u32) -> Result<Int, Error> {
    if n < 2 {
        return Err(Error::OutsideDomain("A_n needs n >= 2".into()));
    }
    let first = a_convolution(n);
    let mut second = Rational::zero();
    for k in 0..=(n - 2) {
        second += Rational::new(pow_int(u64::from(n), k), factorial(k));
    }
    second *= Rational::from_integer(factorial(n));
    assert!(second.is_integer(), "A_n second form must be integral");
    let second = second.to_integer();
    if first != second {
        return Err(Error::Parse(format!(
            "the two expressions for A_{n} disagree: {first} vs {second}"
        )));
    }
    Ok(first)
}

fn a_convolution(n: u32) -> Int {
    let mut acc = Int::zero();
    for p in 1..n {
        let q = n - p;
        acc += binomial(n, p) * pow_int(u64::from(p), p) * pow_int(u64::from(q), q);
    }
    acc
}

/// `A_n` extended by `A_1 = 0` (both defining sums are empty there), as
/// used in coefficient fits.
fn a_extended(n: u32) -> Int {
    if n < 2 {
        Int::zero()
    } else {
        a_convolution(n)
    }
}

/// The identity `Σ_{p+q=n, p,q>=1} n!/(p! q!) p^p q^{q-1} = (n-1) n^{n-1}`,
/// the specialization of Abel's binomial identity behind `(1-Y)(1+Z) = 1`.
pub fn verify_abel(n: u32) -> bool {
    assert!(n >= 2, "identity starts at n = 2");
    let mut lhs = Int::zero();
    for p in 1..n {
        let q = n - p;
        lhs += binomial(n, p) * pow_int(u64::from(p), p) * pow_int(u64::from(q), q - 1);
    }
    lhs == Int::from(n - 1) * pow_int(u64::from(n), n - 1)
}

/// `(1 - Y)(1 + Z) = 1` through `t^order`.
pub fn tree_inverse_identity(order: u32) -> bool {
    let product = x_series(order)
        .mul(&x_inverse_series(order))
        .expect("same family");
    product == Series::one(VarFamily::T, order)
}

/// `t dZ/dt = Z (1 + Z)^2` through `t^order`.
pub fn euler_z_identity(order: u32) -> bool {
    let z = series_z(order);
    let shifted = x_inverse_series(order);
    let rhs = z
        .mul(&shifted)
        .and_then(|s| s.mul(&shifted))
        .expect("same family");
    z.d0() == rhs
}

/// `t dY/dt = Z` through `t^order`.
pub fn euler_y_identity(order: u32) -> bool {
    series_y(order).d0() == series_z(order)
}

/// `Y^k = k Σ (n-k+1)...(n-1) n^{n-k}/n! t^n` through `t^order`.
pub fn y_power_formula(k: u32, order: u32) -> bool {
    assert!(k >= 1);
    let mut power = Series::one(VarFamily::T, order);
    let y = series_y(order);
    for _ in 0..k {
        power = power.mul(&y).expect("same family");
    }
    let formula = series_from_formula(order, |n| {
        if n < k {
            return Rational::zero();
        }
        let mut c = rat(i64::from(k));
        for v in (n - k + 1)..n {
            c *= rat(i64::from(v));
        }
        c * pow_signed(u64::from(n), i64::from(n) - i64::from(k))
            / Rational::from_integer(factorial(n))
    });
    power == formula
}

/// `Σ A_n/n! t^n = Z^2` through `t^order`.
pub fn z_squared_identity(order: u32) -> bool {
    let z = series_z(order);
    let z2 = z.mul(&z).expect("same family");
    let formula = series_from_formula(order, |n| Rational::new(a_extended(n), factorial(n)));
    z2 == formula
}

/// Express a `t`-series as a Laurent polynomial in `X` with support in
/// `[-max_deg, max_deg]`, by exact linear solve over all available
/// coefficients. Returns `None` when the overdetermined system is
/// inconsistent (the series is not in the algebra at this degree).
///
/// Requires at least five more coefficient constraints than unknowns.
pub fn express_in_x(f: &Series, max_deg: u32) -> Result<Option<AlgebraElement>, Error> {
    if f.family() != VarFamily::T {
        return Err(Error::FamilyMismatch(f.family(), VarFamily::T));
    }
    let unknowns = 2 * max_deg + 1;
    let need = 2 * max_deg + 5;
    if f.order() < need {
        return Err(Error::InsufficientOrder {
            need,
            have: f.order(),
        });
    }
    let order = f.order();
    let exponents: Vec<i64> = (-i64::from(max_deg)..=i64::from(max_deg)).collect();
    let columns: Vec<Series> = exponents
        .iter()
        .map(|&e| AlgebraElement::x_power(e).eval(order))
        .collect();
    let mut rows = Vec::with_capacity(order as usize + 1);
    let mut rhs = Vec::with_capacity(order as usize + 1);
    for n in 0..=order {
        let m = Monomial::t_power(n);
        rows.push(
            columns
                .iter()
                .map(|c| c.coefficient(&m).expect("within order"))
                .collect::<Vec<_>>(),
        );
        rhs.push(f.coefficient(&m).expect("within order"));
    }
    debug_assert_eq!(rows[0].len() as u32, unknowns);
    match solve(rows, rhs) {
        Solution::Inconsistent => Ok(None),
        Solution::Unique(x) => Ok(Some(AlgebraElement::from_coeffs(
            exponents.into_iter().zip(x),
        ))),
        Solution::Underdetermined(_) => {
            unreachable!("truncated powers of X are linearly independent at this margin")
        }
    }
}

/// Search degrees `0, 1, 2, ...` until [`express_in_x`] succeeds or the
/// truncation budget runs out.
pub fn express_in_x_auto(f: &Series) -> Result<Option<(AlgebraElement, u32)>, Error> {
    let mut max_deg = 0;
    while 2 * max_deg + 5 <= f.order() {
        if let Some(element) = express_in_x(f, max_deg)? {
            return Ok(Some((element, max_deg)));
        }
        max_deg += 1;
    }
    Ok(None)
}

/// A series written over the tree basis: constant `a` plus coefficients
/// `(L(n) n^n + P(n) A_n) / n!`, `L` a Laurent polynomial and `P` a
/// polynomial in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeForm {
    pub constant: Rational,
    /// Laurent coefficients of `L`, keyed by exponent.
    pub laurent: BTreeMap<i64, Rational>,
    /// Coefficients of `P`, keyed by degree.
    pub poly: BTreeMap<u32, Rational>,
    /// True when the fit had free parameters (the returned representative
    /// sets them to zero).
    pub underdetermined: bool,
}

impl TreeForm {
    pub fn poly_is_zero(&self) -> bool {
        self.poly.is_empty()
    }
}

/// Fit `f` into the tree-basis shape with `L` supported on
/// `[-laurent_neg, laurent_pos]` and `deg P <= poly_deg`. Returns `None`
/// when no exact fit exists. Requires five more coefficients than
/// unknowns.
pub fn fit_tree_form(
    f: &Series,
    laurent_neg: u32,
    laurent_pos: u32,
    poly_deg: u32,
) -> Result<Option<TreeForm>, Error> {
    if f.family() != VarFamily::T {
        return Err(Error::FamilyMismatch(f.family(), VarFamily::T));
    }
    let unknowns = laurent_neg + laurent_pos + 1 + poly_deg + 1;
    let need = unknowns + 5;
    if f.order() < need {
        return Err(Error::InsufficientOrder {
            need,
            have: f.order(),
        });
    }
    let exponents: Vec<i64> = (-i64::from(laurent_neg)..=i64::from(laurent_pos)).collect();
    let degrees: Vec<u32> = (0..=poly_deg).collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for n in 1..=f.order() {
        let mut row = Vec::with_capacity(exponents.len() + degrees.len());
        for &e in &exponents {
            row.push(pow_signed(u64::from(n), i64::from(n) + e));
        }
        let a_n = Rational::from_integer(a_extended(n));
        for &d in &degrees {
            row.push(pow_signed(u64::from(n), i64::from(d)) * &a_n);
        }
        rows.push(row);
        rhs.push(
            f.coefficient(&Monomial::t_power(n)).expect("within order")
                * Rational::from_integer(factorial(n)),
        );
    }
    let (solution, underdetermined) = match solve(rows, rhs) {
        Solution::Inconsistent => return Ok(None),
        Solution::Unique(x) => (x, false),
        Solution::Underdetermined(x) => (x, true),
    };
    let mut laurent = BTreeMap::new();
    for (idx, &e) in exponents.iter().enumerate() {
        if !solution[idx].is_zero() {
            laurent.insert(e, solution[idx].clone());
        }
    }
    let mut poly = BTreeMap::new();
    for (idx, &d) in degrees.iter().enumerate() {
        let v = &solution[exponents.len() + idx];
        if !v.is_zero() {
            poly.insert(d, v.clone());
        }
    }
    Ok(Some(TreeForm {
        constant: f.coefficient(&Monomial::t_power(0)).expect("constant term"),
        laurent,
        poly,
        underdetermined,
    }))
}

/// The five worked covering series: explicit coefficient formula on one
/// side, factored Laurent expression in `X` on the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WorkedSeries {
    /// No special point: `Σ n^{n-3}/n! t^n`.
    FEmpty,
    /// Its Euler derivative: `Σ n^{n-2}/n! t^n`.
    DfEmpty,
    /// One branch point with two simple critical points:
    /// `2 Σ (n-3)(n-2)(n-1) n^{n-4}/n! t^n`.
    F1Sq,
    /// One double critical point: `9/2 Σ (n-2)(n-1) n^{n-4}/n! t^n`.
    F2,
    /// Two marked simple branch points: `Σ (2n-2)(2n-3) n^{n-3}/n! t^n`.
    F11,
}

impl WorkedSeries {
    pub const ALL: [WorkedSeries; 5] = [
        WorkedSeries::FEmpty,
        WorkedSeries::DfEmpty,
        WorkedSeries::F1Sq,
        WorkedSeries::F2,
        WorkedSeries::F11,
    ];

    pub fn label(self) -> &'static str {
        match self {
            WorkedSeries::FEmpty => "fempty",
            WorkedSeries::DfEmpty => "dfempty",
            WorkedSeries::F1Sq => "f1sq",
            WorkedSeries::F2 => "f2",
            WorkedSeries::F11 => "f11",
        }
    }

    pub fn from_label(label: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|w| w.label() == label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// The series from its explicit coefficient formula.
    pub fn coefficient_series(self, order: u32) -> Series {
        let coeff = move |n: u32| -> Rational {
            let n_i = i64::from(n);
            let fact = Rational::from_integer(factorial(n));
            match self {
                WorkedSeries::FEmpty => pow_signed(u64::from(n), n_i - 3) / fact,
                WorkedSeries::DfEmpty => pow_signed(u64::from(n), n_i - 2) / fact,
                WorkedSeries::F1Sq => {
                    rat(2 * (n_i - 3) * (n_i - 2) * (n_i - 1)) * pow_signed(u64::from(n), n_i - 4)
                        / fact
                }
                WorkedSeries::F2 => {
                    ratio(9, 2) * rat((n_i - 2) * (n_i - 1)) * pow_signed(u64::from(n), n_i - 4)
                        / fact
                }
                WorkedSeries::F11 => {
                    rat((2 * n_i - 2) * (2 * n_i - 3)) * pow_signed(u64::from(n), n_i - 3) / fact
                }
            }
        };
        series_from_formula(order, coeff)
    }

    /// The factored Laurent expression in `X`.
    pub fn factored(self) -> AlgebraElement {
        let x = AlgebraElement::x_power(1);
        let x_minus_1 = x.sub(&AlgebraElement::constant(rat(1)));
        match self {
            WorkedSeries::FEmpty => {
                // -(1/12) (X-1)(2X^2 + 5X + 5)
                let quad = AlgebraElement::from_coeffs([(2, rat(2)), (1, rat(5)), (0, rat(5))]);
                x_minus_1.mul(&quad).scale(&ratio(-1, 12))
            }
            WorkedSeries::DfEmpty => {
                // -(1/2) (X-1)(X+1)
                let x_plus_1 = x.add(&AlgebraElement::constant(rat(1)));
                x_minus_1.mul(&x_plus_1).scale(&ratio(-1, 2))
            }
            WorkedSeries::F1Sq => x_minus_1.pow(4).scale(&ratio(1, 2)),
            WorkedSeries::F2 => {
                // -(1/8) (X-1)^3 (3X+1)
                let lin = AlgebraElement::from_coeffs([(1, rat(3)), (0, rat(1))]);
                x_minus_1.pow(3).mul(&lin).scale(&ratio(-1, 8))
            }
            WorkedSeries::F11 => {
                // -(1/2) (X-1)^2 (2X-3)
                let lin = AlgebraElement::from_coeffs([(1, rat(2)), (0, rat(-3))]);
                x_minus_1.pow(2).mul(&lin).scale(&ratio(-1, 2))
            }
        }
    }
}

/// The splitting identity `f_11 = 3 f_2 + 2 f_1sq + 1/2 (Df_empty)^2`
/// with adjustable coefficients, checked through `t^order`.
pub fn f11_relation_with(
    order: u32,
    c_f2: &Rational,
    c_f1sq: &Rational,
    c_square: &Rational,
) -> bool {
    let f11 = WorkedSeries::F11.coefficient_series(order);
    let f2 = WorkedSeries::F2.coefficient_series(order);
    let f1sq = WorkedSeries::F1Sq.coefficient_series(order);
    let df = WorkedSeries::DfEmpty.coefficient_series(order);
    let rhs = f2
        .scale(c_f2)
        .add(&f1sq.scale(c_f1sq))
        .and_then(|s| s.add(&df.mul(&df).expect("same family").scale(c_square)))
        .expect("same family");
    f11 == rhs
}

/// The splitting identity with its true coefficients `3, 2, 1/2`.
pub fn f11_relation(order: u32) -> bool {
    f11_relation_with(order, &rat(3), &rat(2), &ratio(1, 2))
}
