//! Named checks of the coefficient comparisons in the extremal argument, each
//! producing a JSON-ready report `{claim, p, params, pass, witness}`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::asymptotics::{
    compare_families, expand_ep, f_value, family_of, omega_coefficient, rational, verify_f_positive, Family,
};
use crate::constructions::{build, degree_profile, ep_turan2_closed_form, ConstructionSpec, DegreeProfile};
use crate::error::{Error, Result};
use crate::graph::{contains_cycle, degree_power_sum};
use crate::scalar::pow;
use crate::Rational;

/// Identifiers accepted by [`verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    LeadingCoeff,
    NpCoeff,
    FPositivity,
    DegreeLists,
    Case4,
    Case31,
    Subcase32,
    Subcase33,
    TuranIdentity,
    All,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::LeadingCoeff,
        Claim::NpCoeff,
        Claim::FPositivity,
        Claim::DegreeLists,
        Claim::Case4,
        Claim::Case31,
        Claim::Subcase32,
        Claim::Subcase33,
        Claim::TuranIdentity,
        Claim::All,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::LeadingCoeff => "leading-coeff",
            Claim::NpCoeff => "np-coeff",
            Claim::FPositivity => "f-positivity",
            Claim::DegreeLists => "degree-lists",
            Claim::Case4 => "case4",
            Claim::Case31 => "case3-1",
            Claim::Subcase32 => "subcase32",
            Claim::Subcase33 => "subcase33",
            Claim::TuranIdentity => "turan-identity",
            Claim::All => "all",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Claim::ALL.iter().map(|c| c.id()).collect();
            Error::validation(format!("unknown claim '{s}'; expected one of {}", ids.join(", ")))
        })
    }
}

/// Optional parameters; each claim documents its defaults.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ClaimParams {
    pub a: Option<Rational>,
    pub step: Option<Rational>,
    pub x: Option<Rational>,
    pub y: Option<Rational>,
}

/// Result of one claim check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub p: u32,
    pub params: Map<String, Value>,
    pub pass: bool,
    pub witness: Value,
}

impl ClaimReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("claim report serializes")
    }
}

fn s(r: &Rational) -> Value {
    Value::String(r.to_string())
}

struct Builder {
    claim: Claim,
    p: u32,
    params: Map<String, Value>,
}

impl Builder {
    fn new(claim: Claim, p: u32) -> Self {
        Builder {
            claim,
            p,
            params: Map::new(),
        }
    }

    fn param(&mut self, key: &str, v: &Rational) {
        self.params.insert(key.into(), s(v));
    }

    fn finish(self, pass: bool, witness: Value) -> ClaimReport {
        ClaimReport {
            claim: self.claim.id().into(),
            p: self.p,
            params: self.params,
            pass,
            witness,
        }
    }
}

fn half() -> Rational {
    rational(1, 2)
}

/// Runs `claim` at power `p`.
pub fn verify(claim: Claim, p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    if p == 0 {
        return Err(Error::validation("power p must be at least 1"));
    }
    match claim {
        Claim::LeadingCoeff => leading_coeff(p, params),
        Claim::NpCoeff => np_coeff(p, params),
        Claim::FPositivity => f_positivity(p, params),
        Claim::DegreeLists => degree_lists(p, params),
        Claim::Case4 => case4(p, params),
        Claim::Case31 => case31(p, params),
        Claim::Subcase32 => subcase32(p, params),
        Claim::Subcase33 => subcase33(p, params),
        Claim::TuranIdentity => turan_identity(p),
        Claim::All => {
            let mut b = Builder::new(Claim::All, p);
            let mut reports = Vec::new();
            for c in Claim::ALL.into_iter().filter(|&c| c != Claim::All) {
                reports.push(verify(c, p, params)?);
            }
            let pass = reports.iter().all(|r| r.pass);
            let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.claim.as_str()).collect();
            b.params.insert("claims".into(), json!(reports.len()));
            Ok(b.finish(pass, json!({ "failed": failed, "reports": reports })))
        }
    }
}

/// `a(1−a)^p + a^p(1−a)`.
fn lead_formula(a: &Rational, p: u32) -> Rational {
    let b = Rational::one() - a;
    a * pow(&b, p) + pow(a, p) * b
}

// n^(p+1) coefficients of both hub families equal the biclique leading term.
// Default a = 1/2.
fn leading_coeff(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let a = params.a.clone().unwrap_or_else(half);
    let mut b = Builder::new(Claim::LeadingCoeff, p);
    b.param("a", &a);
    let top = p as usize + 1;
    let gp = expand_ep(&family_of(&Family::GPrime { a: a.clone() })?, p).coefficient(top);
    let gs = expand_ep(&family_of(&Family::GStar { a: a.clone() })?, p).coefficient(top);
    let want = lead_formula(&a, p);
    let pass = gp == want && gs == want;
    Ok(b.finish(pass, json!({ "expected": s(&want), "gprime": s(&gp), "gstar": s(&gs) })))
}

// n^p coefficients match their closed forms and are negative, so both hub
// families fall below the biclique with class ratio a. Default a = 1/2.
fn np_coeff(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let a = params.a.clone().unwrap_or_else(half);
    let mut bld = Builder::new(Claim::NpCoeff, p);
    bld.param("a", &a);
    let one = Rational::one();
    let b = &one - &a;
    let two = rational(2, 1);
    let pp = Rational::from_integer(p.into());
    let gp_fam = family_of(&Family::GPrime { a: a.clone() })?;
    let gs_fam = family_of(&Family::GStar { a: a.clone() })?;
    let bic = family_of(&Family::Biclique { c: a.clone() })?;
    let k = p as usize;
    let gp = expand_ep(&gp_fam, p).coefficient(k);
    let gs = expand_ep(&gs_fam, p).coefficient(k);
    let gp_want = -(&two * &pp * &b * pow(&a, p - 1)) - &two * pow(&b, p);
    let gs_want = -(&two * pow(&a, p)) - &two * &pp * &a * pow(&b, p - 1);
    let vs_gp = compare_families(&gp_fam, &bic, p);
    let vs_gs = compare_families(&gs_fam, &bic, p);
    let below = |c: &crate::asymptotics::FamilyComparison| {
        c.ordering == std::cmp::Ordering::Less && c.deciding_power == Some(k)
    };
    let pass = gp == gp_want && gs == gs_want && gp.is_negative() && gs.is_negative() && below(&vs_gp) && below(&vs_gs);
    Ok(bld.finish(
        pass,
        json!({
            "gprime": s(&gp), "gprime_expected": s(&gp_want),
            "gstar": s(&gs), "gstar_expected": s(&gs_want),
            "gprime_vs_biclique": vs_gp, "gstar_vs_biclique": vs_gs,
        }),
    ))
}

// Grid sweep of f; default step 1/512.
fn f_positivity(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let step = params.step.clone().unwrap_or_else(|| rational(1, 512));
    let mut b = Builder::new(Claim::FPositivity, p);
    b.param("step", &step);
    let rep = verify_f_positive(p, &step)?;
    let pass = rep.pass;
    Ok(b.finish(pass, serde_json::to_value(&rep).expect("report serializes")))
}

// Smallest order >= 20 where a·n is an integer and both hub families exist.
fn instance_order(a: &Rational) -> Result<(u64, u64)> {
    let den: u64 = a
        .denom()
        .try_into()
        .map_err(|_| Error::validation(format!("denominator of a={a} too large")))?;
    let mut n = 20u64.div_ceil(den) * den;
    while n <= crate::graph::MAX_ORDER as u64 {
        let d: u64 = (a * Rational::from_integer(n.into())).to_integer().try_into().unwrap_or(0);
        if (ConstructionSpec::GStar { n, hub_degree: d }).validate().is_ok() {
            return Ok((n, d));
        }
        n += den;
    }
    Err(Error::validation(format!("no buildable order <= 64 with integer hub degree for a={a}")))
}

// Explicit graphs vs declared profiles vs symbolic families at one order.
// Default a = 1/2, giving n = 20.
fn degree_lists(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let a = params.a.clone().unwrap_or_else(half);
    let mut bld = Builder::new(Claim::DegreeLists, p);
    bld.param("a", &a);
    let (n, d) = instance_order(&a)?;
    bld.params.insert("n".into(), json!(n));
    let nn = Rational::from_integer(n.into());
    let mut pass = true;
    let mut witness = Map::new();
    for (name, spec, fam) in [
        ("gprime", ConstructionSpec::GPrime { n, hub_degree: d }, Family::GPrime { a: a.clone() }),
        ("gstar", ConstructionSpec::GStar { n, hub_degree: d }, Family::GStar { a: a.clone() }),
    ] {
        let g = build(&spec)?;
        let declared = degree_profile(&spec)?.normalized();
        let family = family_of(&fam)?;
        let built = degree_power_sum(&g.degree_sequence(), p)?;
        let symbolic = family.eval_ep(&nn, p);
        let ok = !contains_cycle(&g, 5)
            && DegreeProfile::from_sequence(&g.degree_sequence()) == declared
            && family.profile_at(n)?.normalized() == declared
            && Rational::from_integer(built.0.clone().into()) == symbolic;
        pass &= ok;
        witness.insert(
            name.into(),
            json!({ "spec": spec.to_string(), "profile": declared.profile, "e_p": built, "pass": ok }),
        );
    }
    Ok(bld.finish(pass, Value::Object(witness)))
}

// Both Case 4 families share the hub families' leading term and lose to GStar
// at n^p. Defaults a = 1/2, x = y = 1.
fn case4(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let a = params.a.clone().unwrap_or_else(half);
    let x = params.x.clone().unwrap_or_else(Rational::one);
    let y = params.y.clone().unwrap_or_else(Rational::one);
    let mut bld = Builder::new(Claim::Case4, p);
    bld.param("a", &a);
    bld.param("x", &x);
    bld.param("y", &y);
    let k = p as usize;
    let b = Rational::one() - &a;
    let gs = expand_ep(&family_of(&Family::GStar { a: a.clone() })?, p);
    let both = expand_ep(&family_of(&Family::Case4Both { a: a.clone(), x: x.clone(), y: y.clone() })?, p);
    let single = expand_ep(&family_of(&Family::Case4Single { a: a.clone(), x: x.clone() })?, p);
    let pp = Rational::from_integer(p.into());
    let s2 = rational(2, 1) + &x + &y;
    let both_want = -(&pp * &a * &s2 * pow(&b, p - 1)) - &s2 * pow(&a, p);
    let lead = lead_formula(&a, p);
    let both_gap = both.coefficient(k) - gs.coefficient(k);
    let single_gap = single.coefficient(k) - gs.coefficient(k);
    let pass = both.coefficient(k + 1) == lead
        && single.coefficient(k + 1) == lead
        && both.coefficient(k) == both_want
        && both_gap.is_negative()
        && single_gap.is_negative();
    Ok(bld.finish(
        pass,
        json!({
            "both_np": s(&both.coefficient(k)), "both_np_expected": s(&both_want),
            "single_np": s(&single.coefficient(k)), "gstar_np": s(&gs.coefficient(k)),
            "both_minus_gstar": s(&both_gap), "single_minus_gstar": s(&single_gap),
        }),
    ))
}

fn case31_point(a: &Rational, y: &Rational, p: u32) -> Result<(bool, Rational, Rational)> {
    let bound = expand_ep(&family_of(&Family::Case31Bound { a: a.clone(), y: y.clone() })?, p);
    let top = bound.coefficient(p as usize + 1);
    let rest = Rational::one() - a - y;
    let want = (y + a) * pow(&rest, p) + &rest * pow(a, p);
    let gap = lead_formula(a, p) - &top;
    let f = f_value(a, y, p)?;
    Ok((top == want && gap == f && f.is_positive(), top, f))
}

// With a and y given, checks that point; otherwise sweeps the grid with
// default step 1/32. The bound's leading term must match its closed form and
// trail the hub leading term by exactly f(a, y) > 0.
fn case31(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let mut bld = Builder::new(Claim::Case31, p);
    if let (Some(a), Some(y)) = (&params.a, &params.y) {
        bld.param("a", a);
        bld.param("y", y);
        let (pass, top, f) = case31_point(a, y, p)?;
        return Ok(bld.finish(pass, json!({ "bound_leading": s(&top), "f": s(&f) })));
    }
    let step = params.step.clone().unwrap_or_else(|| rational(1, 32));
    if !step.is_positive() || step > half() {
        return Err(Error::validation(format!("step must lie in (0, 1/2], got {step}")));
    }
    bld.param("step", &step);
    let one = Rational::one();
    let mut points = 0u64;
    let mut worst: Option<(Rational, Rational, Rational)> = None;
    let mut failure = None;
    let mut a = half();
    while a < one {
        let mut y = step.clone();
        while y <= &one - &a {
            let (ok, _, f) = case31_point(&a, &y, p)?;
            points += 1;
            if !ok && failure.is_none() {
                failure = Some(json!([s(&a), s(&y)]));
            }
            if worst.as_ref().is_none_or(|w| f < w.2) {
                worst = Some((a.clone(), y.clone(), f));
            }
            y += &step;
        }
        a += &step;
    }
    let (wa, wy, wf) = worst.expect("grid is nonempty");
    Ok(bld.finish(
        failure.is_none(),
        json!({ "points": points, "min_f": s(&wf), "argmin": [s(&wa), s(&wy)], "first_failure": failure }),
    ))
}

// Sign of (1−a)^p − a^p on a ∈ [1/2, 1), default step 1/64, or at a alone.
fn subcase32(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let mut bld = Builder::new(Claim::Subcase32, p);
    let points: Vec<Rational> = match &params.a {
        Some(a) => {
            bld.param("a", a);
            if *a < half() {
                return Err(Error::validation(format!("a must be at least 1/2, got {a}")));
            }
            vec![a.clone()]
        }
        None => {
            let step = params.step.clone().unwrap_or_else(|| rational(1, 64));
            if !step.is_positive() || step > half() {
                return Err(Error::validation(format!("step must lie in (0, 1/2], got {step}")));
            }
            bld.param("step", &step);
            let mut out = Vec::new();
            let mut a = half();
            while a < Rational::one() {
                out.push(a.clone());
                a += &step;
            }
            out
        }
    };
    let mut max = None::<(Rational, Rational)>;
    for a in &points {
        let w = omega_coefficient(a, p)?;
        if max.as_ref().is_none_or(|m| w > m.1) {
            max = Some((a.clone(), w));
        }
    }
    let (at, m) = max.expect("at least one point");
    Ok(bld.finish(!m.is_positive(), json!({ "points": points.len(), "max_coefficient": s(&m), "at": s(&at) })))
}

// Leading term of the single-hub-neighbour bound against the balanced biclique.
// Default a = 1/2, where it equals (1/2)^(p+1).
fn subcase33(p: u32, params: &ClaimParams) -> Result<ClaimReport> {
    let a = params.a.clone().unwrap_or_else(half);
    let mut bld = Builder::new(Claim::Subcase33, p);
    bld.param("a", &a);
    let top = p as usize + 1;
    let bound = expand_ep(&family_of(&Family::Case33Bound { a: a.clone() })?, p).coefficient(top);
    let turan = expand_ep(&family_of::<Rational>(&Family::Turan2 { odd: false })?, p).coefficient(top);
    let want = pow(&(Rational::one() - &a), p + 1);
    let pass = bound == want && bound < turan;
    Ok(bld.finish(pass, json!({ "bound_leading": s(&bound), "expected": s(&want), "turan_leading": s(&turan) })))
}

// Closed form for e_p of the balanced biclique against its degree profile,
// 3 <= n <= 500.
fn turan_identity(p: u32) -> Result<ClaimReport> {
    let mut bld = Builder::new(Claim::TuranIdentity, p);
    bld.params.insert("n_range".into(), json!([3, 500]));
    let mut first_failure = None;
    for n in 3..=500u64 {
        let profile = degree_profile(&ConstructionSpec::Turan { n, r: 2 })?;
        if profile.power_sum(p)? != ep_turan2_closed_form(n, p) {
            first_failure = Some(n);
            break;
        }
    }
    let witness = json!({ "checked": 498, "first_failure": first_failure, "e_p_at_500": ep_turan2_closed_form(500, p) });
    Ok(bld.finish(first_failure.is_none(), witness))
}
