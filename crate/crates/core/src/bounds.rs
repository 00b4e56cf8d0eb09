//! Closed-form constants, exponents and validity conditions.
//!
//! Every exponent is computed twice where inputs are integral: as an `f64`
//! from the float formula and as an exact [`Rational`]. Tightness and
//! equality decisions use the rational.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::Rational;

/// Text of the edge-count hypothesis of the general lower bound.
pub const COND_EDGE_COUNT: &str = "e > (r−1)/2·v + C(r,2) − (r−1)";
/// Text of the maximum-average-degree hypothesis of the general lower bound.
pub const COND_MADC: &str = "madc < (2e−r(r−1))/(v−2)";

/// Largest `r` accepted by the clique-ratio constant routines.
pub const LEMMA_MAX_R: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    Lemma21Constant,
    Cor12,
    Thm13F,
    Cor14Kst,
    Thm15General,
    Thm41KstLower,
    Thm43Multipartite,
    Remark42OnePart,
    Cor44TripartiteLower,
    Thm46JoinCycle,
    Cor17Classifier,
}

impl FormulaId {
    pub const ALL: [FormulaId; 11] = [
        FormulaId::Lemma21Constant,
        FormulaId::Cor12,
        FormulaId::Thm13F,
        FormulaId::Cor14Kst,
        FormulaId::Thm15General,
        FormulaId::Thm41KstLower,
        FormulaId::Thm43Multipartite,
        FormulaId::Remark42OnePart,
        FormulaId::Cor44TripartiteLower,
        FormulaId::Thm46JoinCycle,
        FormulaId::Cor17Classifier,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Lemma21Constant => "lemma21_constant",
            FormulaId::Cor12 => "cor12",
            FormulaId::Thm13F => "thm13_f",
            FormulaId::Cor14Kst => "cor14_kst",
            FormulaId::Thm15General => "thm15_general",
            FormulaId::Thm41KstLower => "thm41_kst_lower",
            FormulaId::Thm43Multipartite => "thm43_multipartite",
            FormulaId::Remark42OnePart => "remark42_one_part",
            FormulaId::Cor44TripartiteLower => "cor44_tripartite_lower",
            FormulaId::Thm46JoinCycle => "thm46_join_cycle",
            FormulaId::Cor17Classifier => "cor17_classifier",
        }
    }

    pub fn parse(s: &str) -> Option<FormulaId> {
        FormulaId::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Ratio(Rational),
    List(Vec<i64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondStatus {
    Pass,
    Fail,
    /// Depends on a parameter the caller did not supply; recorded as a requirement.
    Assumed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub text: String,
    pub status: CondStatus,
}

impl Condition {
    fn check(text: impl Into<String>, holds: bool) -> Self {
        Condition {
            text: text.into(),
            status: if holds { CondStatus::Pass } else { CondStatus::Fail },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Real(f64),
    Bool(bool),
}

/// A secondary quantity reported next to the main value.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
    pub rational: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExponentReport {
    pub formula: FormulaId,
    pub params: Vec<(String, ParamValue)>,
    pub value: Option<Value>,
    pub value_rational: Option<Rational>,
    pub conditions: Vec<Condition>,
    pub tight: bool,
    pub extra: Vec<NamedValue>,
}

impl ExponentReport {
    fn new(formula: FormulaId) -> Self {
        ExponentReport {
            formula,
            params: Vec::new(),
            value: None,
            value_rational: None,
            conditions: Vec::new(),
            tight: false,
            extra: Vec::new(),
        }
    }

    fn param(mut self, name: &str, v: ParamValue) -> Self {
        self.params.push((name.to_string(), v));
        self
    }

    fn exact(mut self, value: f64, rational: Option<Rational>) -> Self {
        self.value = Some(Value::Real(value));
        self.value_rational = rational;
        self
    }

    fn push_extra(&mut self, name: &str, value: f64, rational: Option<Rational>) {
        self.extra.push(NamedValue {
            name: name.to_string(),
            value,
            rational,
        });
    }

    /// The real-valued result, if any.
    pub fn real(&self) -> Option<f64> {
        match self.value {
            Some(Value::Real(x)) => Some(x),
            _ => None,
        }
    }

    pub fn extra(&self, name: &str) -> Option<&NamedValue> {
        self.extra.iter().find(|e| e.name == name)
    }

    pub fn conditions_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.status != CondStatus::Fail)
    }

    pub fn failed_conditions(&self) -> impl Iterator<Item = &str> {
        self.conditions
            .iter()
            .filter(|c| c.status == CondStatus::Fail)
            .map(|c| c.text.as_str())
    }
}

fn ratio(num: i64, den: i64) -> Option<Rational> {
    (den != 0).then(|| Rational::new(num, den))
}

fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

fn check_lemma_range(u: usize, r: usize) -> Result<()> {
    if u < 1 || r <= u || r > LEMMA_MAX_R {
        return Err(Error::invalid(format!(
            "lemma constant needs 1 <= u < r <= {LEMMA_MAX_R}, got u={u}, r={r}"
        )));
    }
    Ok(())
}

/// `C(u, r) = (u!)^{r/u} / r!`, the constant in `k_r < C(u,r) k_u^{r/u}`.
pub fn lemma_constant(u: usize, r: usize) -> Result<f64> {
    check_lemma_range(u, r)?;
    Ok(libm::pow(factorial(u), r as f64 / u as f64) / factorial(r))
}

/// `C(u, r)` from the three recursions `C(1,2) = 1/2`,
/// `C(u,u+1) = u/(u+1) · C(u−1,u)^{(u−1)/u}` and
/// `C(u,r+1) = C(r,r+1) · C(u,r)^{(r+1)/r}`.
pub fn lemma_constant_recursive(u: usize, r: usize) -> Result<f64> {
    check_lemma_range(u, r)?;
    Ok(recursive(u, r))
}

fn recursive(u: usize, r: usize) -> f64 {
    if r == u + 1 {
        if u == 1 {
            0.5
        } else {
            let uf = u as f64;
            uf / (uf + 1.0) * libm::pow(recursive(u - 1, u), (uf - 1.0) / uf)
        }
    } else {
        let prev = r - 1;
        recursive(prev, r) * libm::pow(recursive(u, prev), r as f64 / prev as f64)
    }
}

pub fn lemma21_report(u: usize, r: usize) -> Result<ExponentReport> {
    let closed = lemma_constant(u, r)?;
    let mut rep = ExponentReport::new(FormulaId::Lemma21Constant)
        .param("u", ParamValue::Int(u as i64))
        .param("r", ParamValue::Int(r as i64))
        .exact(closed, None);
    rep.push_extra("recursive", lemma_constant_recursive(u, r)?, None);
    rep.push_extra("clique_exponent", r as f64 / u as f64, ratio(r as i64, u as i64));
    // Complete graphs attain the constant in the limit.
    rep.tight = true;
    Ok(rep)
}

/// `(r−1)s / (r+s−2)` for `r >= 3`, `1 < s <= r`.
pub fn cor12_exponent(r: usize, s: f64) -> Result<f64> {
    let rf = r as f64;
    if r < 3 || !(s > 1.0 && s <= rf) {
        return Err(Error::invalid(format!("need r >= 3 and 1 < s <= r, got r={r}, s={s}")));
    }
    Ok((rf - 1.0) * s / (rf + s - 2.0))
}

pub fn cor12_exponent_exact(r: usize, s: Rational) -> Result<Rational> {
    let rr = Rational::from_integer(r as i64);
    if r < 3 || s <= Rational::from_integer(1) || s > rr {
        return Err(Error::invalid(format!("need r >= 3 and 1 < s <= r, got r={r}, s={s}")));
    }
    Ok((rr - 1) * s / (rr + s - 2))
}

pub fn cor12_report(r: usize, s: Rational) -> Result<ExponentReport> {
    let exact = cor12_exponent_exact(r, s)?;
    let value = cor12_exponent(r, to_f64(s))?;
    let mut rep = ExponentReport::new(FormulaId::Cor12)
        .param("r", ParamValue::Int(r as i64))
        .param("s", ParamValue::Ratio(s))
        .exact(value, Some(exact));
    rep.conditions.push(Condition::check("1 < s ≤ r", true));
    Ok(rep)
}

/// `f(α, β) = 1 + (β−1)(1 − 1/α)`. `β = 1` is accepted as the limiting case.
pub fn thm13_f(alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > 1.0) || !(beta >= 1.0) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::invalid(format!("need α > 1 and β >= 1, got α={alpha}, β={beta}")));
    }
    Ok(1.0 + (beta - 1.0) * (1.0 - 1.0 / alpha))
}

pub fn thm13_report(alpha: f64, beta: f64) -> Result<ExponentReport> {
    let v = thm13_f(alpha, beta)?;
    let mut rep = ExponentReport::new(FormulaId::Thm13F)
        .param("alpha", ParamValue::Real(alpha))
        .param("beta", ParamValue::Real(beta))
        .exact(v, None);
    rep.conditions.push(Condition::check("α > 1", true));
    rep.conditions.push(Condition::check("β > 1", beta > 1.0));
    Ok(rep)
}

/// Exponent `(rs − C(r,2)) / (2s−1)` for `K_r` counts in `K_{s,t}`-free graphs.
///
/// `t` is optional; without it the conditions on `t` are recorded as assumed.
pub fn cor14_kst(r: usize, s: usize, t: Option<usize>) -> Result<ExponentReport> {
    if r < 3 || s < 2 {
        return Err(Error::invalid(format!("need r >= 3 and s >= 2, got r={r}, s={s}")));
    }
    let (ri, si) = (r as i64, s as i64);
    let exact = Rational::new(ri * si - binom2(ri), 2 * si - 1);
    let value = (r as f64 * s as f64 - (r * (r - 1)) as f64 / 2.0) / (2.0 * s as f64 - 1.0);
    let mut rep = ExponentReport::new(FormulaId::Cor14Kst)
        .param("r", ParamValue::Int(ri))
        .param("s", ParamValue::Int(si));
    if let Some(t) = t {
        rep = rep.param("t", ParamValue::Int(t as i64));
    }
    rep = rep.exact(value, Some(exact));

    let t_min = factorial_u64(s - 1).map(|f| f.saturating_add(1));
    rep.conditions
        .push(Condition::check("s ≥ r (r = 3: s ≥ 2)", s >= r || r == 3));
    let t_status = |holds: bool| if holds { CondStatus::Pass } else { CondStatus::Fail };
    rep.conditions.push(Condition {
        text: "t ≥ s".into(),
        status: t.map_or(CondStatus::Assumed, |t| t_status(t >= s)),
    });
    rep.conditions.push(Condition {
        text: "t ≥ (s−1)!+1".into(),
        status: match (t, t_min) {
            (None, _) => CondStatus::Assumed,
            (Some(t), Some(min)) => t_status(t as u64 >= min),
            (Some(_), None) => CondStatus::Fail,
        },
    });
    let tight_range = (r >= 4 && s >= 2 * r - 2) || (r == 3 && s >= 2);
    rep.tight = tight_range && rep.conditions_pass();
    if let Some(min) = t_min {
        rep.push_extra("t_min", min as f64, Some(Rational::from_integer(min as i64)));
    }
    Ok(rep)
}

fn factorial_u64(k: usize) -> Option<u64> {
    (1..=k as u64).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

/// General random-construction exponent for `F`, with both hypotheses checked.
///
/// Failed hypotheses are reported, not raised; the value is still computed
/// whenever its denominator is non-zero.
pub fn thm15_general(u: usize, r: usize, f: &Pattern) -> Result<ExponentReport> {
    thm15_from_invariants(u, r, f.order(), f.size(), f.max_avg_degree())
}

/// [`thm15_general`] from `v(F)`, `e(F)` and the maximum average degree
/// (`None` when `F` has no edges), for patterns above the pattern-order cap.
pub fn thm15_from_invariants(
    u: usize,
    r: usize,
    v: usize,
    e: usize,
    madc: Option<Rational>,
) -> Result<ExponentReport> {
    if u < 2 || r <= u {
        return Err(Error::invalid(format!("need r > u >= 2, got u={u}, r={r}")));
    }
    if v <= 2 {
        return Err(Error::invalid("pattern needs more than 2 vertices"));
    }
    let (ui, ri) = (u as i64, r as i64);
    let (v, e) = (v as i64, e as i64);
    let cr = binom2(ri);
    let cu = binom2(ui);
    let num = ri * e - cr * v - ri * cr + 2 * cr;
    let den = ui * e - cu * v - ui * cr + 2 * cu;
    let exact = ratio(num, den);

    let mut rep = ExponentReport::new(FormulaId::Thm15General)
        .param("u", ParamValue::Int(ui))
        .param("r", ParamValue::Int(ri))
        .param("v", ParamValue::Int(v))
        .param("e", ParamValue::Int(e));
    if let Some(x) = exact {
        rep = rep.exact(to_f64(x), Some(x));
    }
    // c1 doubled to stay integral: 2e > (r−1)v + 2C(r,2) − 2(r−1)
    let c1 = 2 * e > (ri - 1) * v + 2 * cr - 2 * (ri - 1);
    let bound = Rational::new(2 * e - ri * (ri - 1), v - 2);
    let c2 = madc.is_some_and(|madc| madc < bound);
    rep.conditions.push(Condition::check(COND_EDGE_COUNT, c1));
    rep.conditions.push(Condition::check(COND_MADC, c2));
    if let Some(madc) = madc {
        rep.push_extra("madc", to_f64(madc), Some(madc));
    }
    rep.push_extra("madc_bound", to_f64(bound), Some(bound));
    if e > cr {
        let rho = Rational::new(v - 2, e - cr);
        rep.push_extra("p_exponent", -to_f64(rho), Some(-rho));
    }
    Ok(rep)
}

/// Lower-bound exponent for `K_r` versus `K_u` counts in `K_{s,t}`-free graphs.
pub fn thm41_kst_lower(u: usize, r: usize, s: usize, t: usize) -> Result<ExponentReport> {
    if u < 2 || r <= u || s < 1 || t < 1 {
        return Err(Error::invalid(format!(
            "need r > u >= 2 and s, t >= 1, got u={u}, r={r}, s={s}, t={t}"
        )));
    }
    let (ui, ri, si, ti) = (u as i64, r as i64, s as i64, t as i64);
    let num = 2 * ri * si * ti - ri * (ri - 1) * (si + ti) - ri * (ri - 1) * (ri - 2);
    let den = 2 * ui * si * ti - ui * (ui - 1) * (si + ti) - ui * ri * (ri - 1) + 2 * ui * (ui - 1);
    let mut rep = ExponentReport::new(FormulaId::Thm41KstLower)
        .param("u", ParamValue::Int(ui))
        .param("r", ParamValue::Int(ri))
        .param("s", ParamValue::Int(si))
        .param("t", ParamValue::Int(ti));
    if let Some(x) = ratio(num, den) {
        rep = rep.exact(to_f64(x), Some(x));
    }
    let s_min = binom2(ri).max(2 * ri - 2);
    rep.conditions.push(Condition::check("t ≥ s", t >= s));
    rep.conditions
        .push(Condition::check("s ≥ max(C(r,2), 2r−2)", si >= s_min));
    Ok(rep)
}

fn check_parts(r: usize, parts: &[usize]) -> Result<()> {
    if r < 3 || parts.len() != r {
        return Err(Error::invalid(format!(
            "need r >= 3 part sizes, got r={r} with {} parts",
            parts.len()
        )));
    }
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::invalid("part sizes must be positive and non-decreasing"));
    }
    Ok(())
}

fn product(xs: &[usize]) -> Result<i64> {
    xs.iter()
        .try_fold(1i64, |acc, &x| acc.checked_mul(x as i64))
        .ok_or_else(|| Error::invalid("part-size product overflows"))
}

fn parts_param(parts: &[usize]) -> ParamValue {
    ParamValue::List(parts.iter().map(|&x| x as i64).collect())
}

/// `o(·)` exponent for `K_{s_1..s_r}`-free graphs via `s' = r − 1/∏_{i<r} s_i`.
/// When `s_1 = 1` the improved exponent is attached as extra `improved`.
pub fn thm43_multipartite(r: usize, parts: &[usize]) -> Result<ExponentReport> {
    check_parts(r, parts)?;
    let prod = product(&parts[..r - 1])?;
    let rr = Rational::from_integer(r as i64);
    let s_prime = rr - Rational::new(1, prod);
    let exact = cor12_exponent_exact(r, s_prime)?;
    let sp = r as f64 - 1.0 / prod as f64;
    let value = cor12_exponent(r, sp)?;
    let mut rep = ExponentReport::new(FormulaId::Thm43Multipartite)
        .param("r", ParamValue::Int(r as i64))
        .param("s", parts_param(parts))
        .exact(value, Some(exact));
    rep.conditions
        .push(Condition::check("1 ≤ s_1 ≤ … ≤ s_r", true));
    rep.push_extra("s_prime", sp, Some(s_prime));
    if parts[0] == 1 {
        let improved = remark42_one_part(r, parts)?;
        rep.push_extra("improved", improved.real().unwrap_or(f64::NAN), improved.value_rational);
    }
    Ok(rep)
}

/// `(r − 1/∏_{i=2}^{r−1} s_i) / 2`, valid when `s_1 = 1`.
pub fn remark42_one_part(r: usize, parts: &[usize]) -> Result<ExponentReport> {
    check_parts(r, parts)?;
    let prod = product(&parts[1..r - 1])?;
    let exact = (Rational::from_integer(r as i64) - Rational::new(1, prod)) / 2;
    let value = (r as f64 - 1.0 / prod as f64) / 2.0;
    let mut rep = ExponentReport::new(FormulaId::Remark42OnePart)
        .param("r", ParamValue::Int(r as i64))
        .param("s", parts_param(parts))
        .exact(value, Some(exact));
    rep.conditions.push(Condition::check("s_1 = 1", parts[0] == 1));
    Ok(rep)
}

/// Tripartite bounds: value is the upper exponent `3/2 − 1/(8 s_1 s_2 − 2)`;
/// extra `lower` is `3/2 − (3Σ−6)/(4P−2Σ−8)` when `P/Σ > 3/2`.
pub fn cor44_tripartite_lower(s1: usize, s2: usize, s3: usize) -> Result<ExponentReport> {
    let parts = [s1, s2, s3];
    check_parts(3, &parts)?;
    let (a, b, c) = (s1 as i64, s2 as i64, s3 as i64);
    let half3 = Rational::new(3, 2);
    let upper = half3 - Rational::new(1, 8 * a * b - 2);
    let mut rep = ExponentReport::new(FormulaId::Cor44TripartiteLower)
        .param("s", parts_param(&parts))
        .exact(1.5 - 1.0 / (8.0 * (a * b) as f64 - 2.0), Some(upper));
    let sum = a + b + c;
    let pairs = a * b + b * c + c * a;
    let lower_ok = 2 * pairs > 3 * sum;
    rep.conditions.push(Condition::check("P/Σ > 3/2", lower_ok));
    rep.push_extra("upper", to_f64(upper), Some(upper));
    if lower_ok {
        let lower = half3 - Rational::new(3 * sum - 6, 4 * pairs - 2 * sum - 8);
        let lower_f = 1.5 - (3.0 * sum as f64 - 6.0) / (4.0 * pairs as f64 - 2.0 * sum as f64 - 8.0);
        rep.push_extra("lower", lower_f, Some(lower));
    }
    Ok(rep)
}

/// Bounds for `K_s ∨ C_l`-free graphs.
pub fn thm46_join_cycle(r: usize, s: usize, l: usize) -> Result<ExponentReport> {
    if r < 3 || s < 1 || l < 4 {
        return Err(Error::invalid(format!(
            "need r >= 3, s >= 1, l >= 4, got r={r}, s={s}, l={l}"
        )));
    }
    let t = l / 2;
    let even = l % 2 == 0;
    let case_i = (even && r >= s + 2) || (!even && r >= s + 3);
    let mut rep = ExponentReport::new(FormulaId::Thm46JoinCycle)
        .param("r", ParamValue::Int(r as i64))
        .param("s", ParamValue::Int(s as i64))
        .param("l", ParamValue::Int(l as i64));
    let (value, exact) = if case_i {
        let x = Rational::new(s as i64 + 1, 2) + Rational::new(1, 2 * t as i64);
        ((s as f64 + 1.0) / 2.0 + 1.0 / (2.0 * t as f64), x)
    } else {
        (r as f64 / 2.0, Rational::new(r as i64, 2))
    };
    rep = rep.exact(value, Some(exact));
    rep.conditions.push(Condition::check(
        "case (i): l even and r ≥ s+2, or l odd and r ≥ s+3",
        case_i,
    ));
    rep.tight = !case_i;
    rep.push_extra("t", t as f64, Some(Rational::from_integer(t as i64)));
    Ok(rep)
}

/// True iff `mex(m, K_t, F) = Ω(m^{t/2})`, i.e. `χ(F) > t`.
pub fn cor17_classifier(f: &Pattern, t: usize) -> Result<bool> {
    if t < 2 {
        return Err(Error::invalid("classifier needs t >= 2"));
    }
    Ok(f.chromatic_number() > t)
}

pub fn cor17_report(f: &Pattern, t: usize) -> Result<ExponentReport> {
    let verdict = cor17_classifier(f, t)?;
    let mut rep = ExponentReport::new(FormulaId::Cor17Classifier)
        .param("t", ParamValue::Int(t as i64))
        .param("chi", ParamValue::Int(f.chromatic_number() as i64));
    rep.value = Some(Value::Bool(verdict));
    rep.tight = verdict;
    rep.push_extra("clique_exponent", t as f64 / 2.0, Some(Rational::new(t as i64, 2)));
    Ok(rep)
}

/// `min over F0 ⊆ F with e(F0) > 0 of v(F0) − ρ·e(F0)`.
///
/// `Φ_F` is bounded below by a constant iff the result is non-negative when
/// `p = n^{−ρ}`. Induced subgraphs suffice since `ρ >= 0`.
pub fn phi_exponent(f: &Pattern, rho: Rational) -> Result<Rational> {
    if f.size() == 0 {
        return Err(Error::NoEdges);
    }
    if rho < Rational::from_integer(0) {
        return Err(Error::invalid("ρ must be non-negative"));
    }
    let g = f.graph();
    let n = g.n();
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut best: Option<Rational> = None;
    for mask in 1u64..(1 << n) {
        let twice_e: u32 = crate::bitset::ones(&[mask]).map(|v| (rows[v] & mask).count_ones()).sum();
        if twice_e == 0 {
            continue;
        }
        let x = Rational::from_integer(mask.count_ones() as i64) - rho * (twice_e as i64 / 2);
        if best.is_none_or(|b| x < b) {
            best = Some(x);
        }
    }
    Ok(best.expect("pattern has an edge"))
}

/// Shorthand used by tests and reports: the list of all condition texts.
pub fn condition_texts(rep: &ExponentReport) -> Vec<&str> {
    rep.conditions.iter().map(|c| c.text.as_str()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::*;
    use alloc::vec;

    fn pat(g: crate::Graph) -> Pattern {
        Pattern::new(g).unwrap()
    }

    fn kst(s: usize, t: usize) -> Pattern {
        pat(complete_multipartite(&[s, t]).unwrap())
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn lemma_constant_examples() {
        assert_eq!(lemma_constant(1, 2).unwrap(), 0.5);
        assert!((lemma_constant(2, 3).unwrap() - libm::sqrt(2.0) / 3.0).abs() < 1e-15);
        assert!((lemma_constant(3, 6).unwrap() - 0.05).abs() < 1e-15);
        assert_eq!(lemma_constant_recursive(1, 2).unwrap(), 0.5);
        assert!((lemma_constant_recursive(2, 3).unwrap() - libm::sqrt(2.0) / 3.0).abs() < 1e-15);
        assert!(lemma_constant(0, 2).is_err());
        assert!(lemma_constant(3, 3).is_err());
        assert!(lemma_constant(2, 21).is_err());
        assert!(lemma_constant_recursive(5, 4).is_err());
    }

    #[test]
    fn lemma_constant_routes_agree() {
        for r in 2..=10 {
            for u in 1..r {
                let a = lemma_constant(u, r).unwrap();
                let b = lemma_constant_recursive(u, r).unwrap();
                assert!((a - b).abs() <= 1e-12 * a.max(1e-300) && (a - b).abs() <= 1e-12, "u={u} r={r}");
            }
        }
    }

    #[test]
    fn cor12_examples() {
        assert_eq!(cor12_exponent_exact(3, q(2, 1)).unwrap(), q(4, 3));
        for r in 3..8 {
            assert_eq!(cor12_exponent_exact(r, q(r as i64, 1)).unwrap(), q(r as i64, 2));
        }
        let via_multi = thm43_multipartite(3, &[2, 2, 2]).unwrap().value_rational.unwrap();
        assert_eq!(cor12_exponent_exact(3, q(3, 1) - q(1, 4)).unwrap(), via_multi);
        assert!(cor12_exponent(3, 1.0).is_err());
        assert!(cor12_exponent(3, 3.5).is_err());
        assert!(cor12_exponent(2, 1.5).is_err());
    }

    #[test]
    fn thm13_examples() {
        assert_eq!(thm13_f(2.0, 2.0).unwrap(), 1.5);
        assert_eq!(thm13_f(7.0, 1.0).unwrap(), 1.0);
        let (r, s) = (4.0f64, 6.0f64);
        let f = thm13_f(2.0 - 1.0 / s, (r - 1.0) - (r - 1.0) * (r - 2.0) / (2.0 * (s - 1.0))).unwrap();
        assert!((f - cor14_kst(4, 6, None).unwrap().real().unwrap()).abs() < 1e-12);
        assert!(thm13_f(1.0, 2.0).is_err());
        assert!(thm13_f(2.0, 0.5).is_err());
    }

    #[test]
    fn cor14_examples() {
        let a = cor14_kst(3, 2, None).unwrap();
        assert_eq!(a.value_rational, Some(q(1, 1)));
        assert!(a.tight);
        assert_eq!(a.extra("t_min").unwrap().value, 2.0);
        let b = cor14_kst(3, 3, Some(3)).unwrap();
        assert_eq!(b.value_rational, Some(q(6, 5)));
        assert!(b.tight);
        let c = cor14_kst(4, 6, Some(121)).unwrap();
        assert_eq!(c.value_rational, Some(q(18, 11)));
        assert!(c.tight);
        assert!(!cor14_kst(4, 6, Some(120)).unwrap().tight);
        assert!(!cor14_kst(4, 5, None).unwrap().tight);
        assert!(!cor14_kst(4, 3, None).unwrap().conditions_pass());
    }

    #[test]
    fn thm15_examples() {
        let rep = thm15_general(2, 3, &kst(3, 4)).unwrap();
        assert_eq!(rep.value_rational, Some(q(12, 13)));
        assert!(rep.conditions_pass());
        assert_eq!(rep.extra("madc").unwrap().rational, Some(q(24, 7)));
        assert_eq!(rep.extra("madc_bound").unwrap().rational, Some(q(18, 5)));

        let rep = thm15_general(2, 3, &kst(3, 3)).unwrap();
        assert_eq!(rep.failed_conditions().collect::<Vec<_>>(), vec![COND_MADC]);

        let rep = thm15_general(2, 3, &kst(2, 2)).unwrap();
        assert!(rep.failed_conditions().any(|c| c == COND_EDGE_COUNT));

        assert!(thm15_general(2, 3, &pat(complete(2))).is_err());
        assert!(thm15_general(3, 3, &kst(3, 4)).is_err());
    }

    #[test]
    fn thm41_examples() {
        // (96 − 48 − 6) / (64 − 16 − 12 + 4)
        let rep = thm41_kst_lower(2, 3, 4, 4).unwrap();
        assert_eq!(rep.value_rational, Some(q(42, 40)));
        assert!(rep.conditions_pass());
        let rep = thm41_kst_lower(2, 3, 2, 2).unwrap();
        assert_eq!(rep.failed_conditions().collect::<Vec<_>>(), vec!["s ≥ max(C(r,2), 2r−2)"]);
        assert!(!thm41_kst_lower(2, 3, 5, 4).unwrap().conditions_pass());
    }

    #[test]
    fn thm43_examples() {
        let rep = thm43_multipartite(3, &[1, 1, 1]).unwrap();
        assert_eq!(rep.value_rational, Some(q(4, 3)));
        assert_eq!(rep.extra("s_prime").unwrap().rational, Some(q(2, 1)));
        assert_eq!(rep.extra("improved").unwrap().rational, Some(q(1, 1)));
        let rep = thm43_multipartite(3, &[2, 2, 2]).unwrap();
        assert_eq!(rep.value_rational, Some(q(22, 15)));
        assert!(rep.extra("improved").is_none());
        let rep = thm43_multipartite(3, &[1, 2, 2]).unwrap();
        assert_eq!(rep.extra("improved").unwrap().value, 1.25);
        assert!(thm43_multipartite(3, &[2, 1, 2]).is_err());
        assert!(thm43_multipartite(3, &[2, 2]).is_err());
        assert!(!remark42_one_part(3, &[2, 2, 2]).unwrap().conditions_pass());
    }

    #[test]
    fn cor44_examples() {
        let rep = cor44_tripartite_lower(2, 2, 2).unwrap();
        assert_eq!(rep.value_rational, Some(q(22, 15)));
        assert_eq!(rep.extra("lower").unwrap().rational, Some(q(15, 14)));
        let rep = cor44_tripartite_lower(1, 1, 1).unwrap();
        assert!(rep.extra("lower").is_none());
        assert!(!rep.conditions_pass());
        let rep = cor44_tripartite_lower(2, 3, 3).unwrap();
        assert_eq!(rep.extra("lower").unwrap().rational, Some(q(6, 5)));
        assert!(cor44_tripartite_lower(3, 2, 2).is_err());
    }

    #[test]
    fn thm46_examples() {
        let rep = thm46_join_cycle(3, 1, 4).unwrap();
        assert_eq!(rep.value_rational, Some(q(5, 4)));
        assert!(!rep.tight);
        let rep = thm46_join_cycle(3, 2, 5).unwrap();
        assert_eq!(rep.value_rational, Some(q(3, 2)));
        assert!(rep.tight);
        let rep = thm46_join_cycle(4, 1, 5).unwrap();
        assert_eq!(rep.value_rational, Some(q(5, 4)));
        assert!(thm46_join_cycle(3, 1, 3).is_err());
    }

    #[test]
    fn cor17_examples() {
        assert!(cor17_classifier(&pat(complete(4)), 3).unwrap());
        assert!(!cor17_classifier(&pat(cycle(5).unwrap()), 3).unwrap());
        assert!(cor17_classifier(&pat(complete_multipartite(&[2, 2, 2]).unwrap()), 2).unwrap());
        assert!(cor17_classifier(&pat(complete(4)), 1).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_exponent(&pat(complete(3)), q(1, 1)).unwrap(), q(0, 1));
        assert_eq!(phi_exponent(&kst(2, 2), q(1, 2)).unwrap(), q(3, 2));
        for g in [complete(4), cycle(5).unwrap(), petersen(), star(3)] {
            assert_eq!(phi_exponent(&pat(g), q(0, 1)).unwrap(), q(2, 1));
        }
        assert!(phi_exponent(&pat(crate::Graph::empty(3)), q(1, 1)).is_err());
        assert!(phi_exponent(&pat(complete(3)), q(-1, 1)).is_err());
    }

    #[test]
    fn formula_ids_round_trip() {
        for f in FormulaId::ALL {
            assert_eq!(FormulaId::parse(f.as_str()), Some(f));
        }
        assert_eq!(FormulaId::parse("nope"), None);
    }

    #[test]
    fn lemma_report_carries_both_routes() {
        let rep = lemma21_report(2, 4).unwrap();
        let a = rep.real().unwrap();
        let b = rep.extra("recursive").unwrap().value;
        assert!((a - b).abs() < 1e-12);
        assert_eq!(vec!["u", "r"], rep.params.iter().map(|p| p.0.as_str()).collect::<Vec<_>>());
    }
}
