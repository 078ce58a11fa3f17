//! Verification suites. Each suite recomputes identities along independent
//! paths and records every disagreement as a [`CaseFailure`].

use std::collections::HashSet;
use std::fmt::Display;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::analysis::{
    gamma_extract, is_symmetric, shape_report, sturm_real_rooted, toeplitz_minor_check, unimodal_peaks,
};
use crate::bijections::{last_cycle_element_positive, phi, phi_inverse, statistic_ledger};
use crate::error::Result;
use crate::exactpoly::{series_div_one_minus_x_pow, EgfSeries, IntPoly};
use crate::families::{egf, enumerate, formulas, Family, FamilyEngine, Method};
use crate::signedperm::{enumerate_bn, Half, SignedPermutation};
use crate::simplicial::{
    chain_gaps, decomposition_formula_sides, edgewise_h, k_n, sd_relative_local_h_formula, signed_subset_poset, Face,
    KComplex, Subdivision, KN_GUARD,
};

/// Largest `n` for which `K_n` is built unless `--allow-large`.
pub const KN_DEFAULT_CAP: usize = 5;
/// Largest `n` for the per-face relative local h scans.
pub const RELATIVE_CAP: usize = 4;
/// Largest `n` for which the EGF suite enumerates `B_n`.
pub const EGF_ENUM_CAP: usize = 7;
/// Truncation order for the `(2i+1)^n - (2i)^n` series.
pub const SERIES_ORDER: usize = 10;
/// Toeplitz minor order used as an independent refutation probe.
pub const TOEPLITZ_ORDER: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    MainFormula,
    Decomposition,
    #[value(name = "localint")]
    LocalInt,
    RelativeLocalH,
    HFormula,
    Egf,
    Recurrences,
    Bijection,
    Gamma,
    #[value(name = "realroots")]
    RealRoots,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::MainFormula,
        Suite::Decomposition,
        Suite::LocalInt,
        Suite::RelativeLocalH,
        Suite::HFormula,
        Suite::Egf,
        Suite::Recurrences,
        Suite::Bijection,
        Suite::Gamma,
        Suite::RealRoots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainFormula => "main-formula",
            Suite::Decomposition => "decomposition",
            Suite::LocalInt => "localint",
            Suite::RelativeLocalH => "relative-local-h",
            Suite::HFormula => "h-formula",
            Suite::Egf => "egf",
            Suite::Recurrences => "recurrences",
            Suite::Bijection => "bijection",
            Suite::Gamma => "gamma",
            Suite::RealRoots => "realroots",
            Suite::All => "all",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::MainFormula | Suite::Bijection => 6,
            Suite::Decomposition | Suite::Gamma => 7,
            Suite::LocalInt | Suite::Egf | Suite::Recurrences => 8,
            Suite::RelativeLocalH | Suite::HFormula => 4,
            Suite::RealRoots => 10,
            Suite::All => 0,
        }
    }

    /// The suites `self` expands to.
    pub fn expand(self) -> Vec<Suite> {
        if self == Suite::All {
            Suite::EACH.to_vec()
        } else {
            vec![self]
        }
    }
}

impl Serialize for Suite {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One failed case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseFailure {
    pub case: String,
    pub expected: String,
    pub got: String,
    pub methods: Vec<String>,
}

/// Outcome of one suite; it passes iff `failures` is empty.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub max_n: usize,
    pub cases_run: usize,
    pub failures: Vec<CaseFailure>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// What the suites run against.
pub struct SuiteContext {
    pub engine: FamilyEngine,
    pub allow_large: bool,
}

impl SuiteContext {
    fn kn_cap(&self) -> usize {
        if self.allow_large {
            KN_GUARD
        } else {
            KN_DEFAULT_CAP
        }
    }

    fn enum_b(&self, n: usize) -> bool {
        n <= self.engine.config().enum_limit_b
    }
}

struct Checker {
    cases: usize,
    failures: Vec<CaseFailure>,
    notes: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, case: impl Into<String>, methods: &[&str], expected: impl Display, got: impl Display) {
        self.failures.push(CaseFailure {
            case: case.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            methods: methods.iter().map(|m| m.to_string()).collect(),
        });
    }

    fn poly(&mut self, case: impl Into<String>, methods: &[&str], expected: &IntPoly, got: &IntPoly) {
        self.cases += 1;
        if expected != got {
            self.fail(case, methods, expected, got);
        }
    }

    fn holds(
        &mut self,
        case: impl Into<String>,
        methods: &[&str],
        ok: bool,
        expected: impl Display,
        got: impl Display,
    ) {
        self.cases += 1;
        if !ok {
            self.fail(case, methods, expected, got);
        }
    }

    /// Unwraps `r`, recording an error as a failed case.
    fn value<T>(&mut self, case: impl Into<String>, methods: &[&str], r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(case, methods, "a value", format!("error: {e}"));
                None
            }
        }
    }

    fn nonnegative(&mut self, case: impl Into<String>, methods: &[&str], p: &IntPoly) {
        self.holds(case, methods, p.is_nonnegative(), "nonnegative coefficients", p);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// Runs one suite (not [`Suite::All`]) up to `max_n`.
pub fn run_suite(suite: Suite, max_n: usize, ctx: &SuiteContext) -> SuiteResult {
    let start = Instant::now();
    let mut c = Checker::new();
    match suite {
        Suite::MainFormula => main_formula(&mut c, max_n, ctx),
        Suite::Decomposition => decomposition(&mut c, max_n, ctx),
        Suite::LocalInt => local_int(&mut c, max_n, ctx),
        Suite::RelativeLocalH => relative_local_h(&mut c, max_n, ctx),
        Suite::HFormula => h_formula(&mut c, max_n, ctx),
        Suite::Egf => egf_suite(&mut c, max_n, ctx),
        Suite::Recurrences => recurrences(&mut c, max_n, ctx),
        Suite::Bijection => bijection(&mut c, max_n, ctx),
        Suite::Gamma => gamma(&mut c, max_n, ctx),
        Suite::RealRoots => real_roots(&mut c, max_n, ctx),
        Suite::All => c.note("the all suite expands to the individual suites"),
    }
    SuiteResult {
        suite,
        max_n,
        cases_run: c.cases,
        failures: c.failures,
        notes: c.notes,
        wall_time: start.elapsed(),
    }
}

fn main_formula(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    for n in 0..=max_n {
        let case = format!("d^B n={n}");
        let got = formulas::main_formula(n);
        if ctx.enum_b(n) {
            let Some(e) = c.value(
                &case,
                &["enum-exc"],
                enumerate::derangement_b_by_exc(n, ctx.allow_large),
            ) else {
                continue;
            };
            c.poly(&case, &["main-formula", "enum-exc"], &e, &got);
            if let Some(i) = c.value(
                &case,
                &["enum-iexc"],
                enumerate::derangement_b_by_iexc(n, ctx.allow_large),
            ) {
                c.poly(&case, &["main-formula", "enum-iexc"], &i, &got);
            }
        } else {
            let Some(alt) = c.value(
                &case,
                &["alternating-sum"],
                ctx.engine.method_value(Family::DB, n, Method::AlternatingSum),
            ) else {
                continue;
            };
            c.poly(&case, &["main-formula", "alternating-sum"], &alt, &got);
        }
        c.value(&case, &["all"], ctx.engine.compute(Family::DB, n));
    }
    let cap = ctx.engine.config().enum_limit_b;
    if max_n > cap {
        c.note(format!(
            "enumeration runs for n <= {cap}; larger n compare against the alternating sum"
        ));
    }
}

fn decomposition(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    for n in 0..=max_n {
        let Some(db) = c.value(format!("d^B n={n}"), &["all"], ctx.engine.value(Family::DB, n)) else {
            continue;
        };
        let Some((fp, fm)) = c.value(
            format!("decompose n={n}"),
            &["symmetric-decomposition"],
            formulas::symmetric_decompose(&db, n),
        ) else {
            continue;
        };
        c.poly(
            format!("f+ n={n}"),
            &["symmetric-decomposition", "multinomial-sum"],
            &formulas::f_plus_multinomial(n),
            &fp,
        );
        c.poly(
            format!("f- n={n}"),
            &["symmetric-decomposition", "multinomial-sum"],
            &formulas::f_minus_multinomial(n),
            &fm,
        );
        c.holds(
            format!("f+ symmetric n={n}"),
            &[],
            is_symmetric(&fp, n),
            format!("symmetric about {n}/2"),
            &fp,
        );
        c.holds(
            format!("f- symmetric n={n}"),
            &[],
            is_symmetric(&fm, n + 1),
            format!("symmetric about {}/2", n + 1),
            &fm,
        );
        for fam in [Family::XiPlus, Family::XiMinus] {
            if let Some(xi) = c.value(
                format!("{fam} n={n}"),
                &["gamma-extraction", "multinomial-sum"],
                ctx.engine.value(fam, n),
            ) {
                c.nonnegative(format!("{fam} n={n}"), &[], &xi);
            }
        }
        let (unimodal, peaks) = unimodal_peaks(&db);
        let want = n.div_ceil(2);
        c.holds(
            format!("d^B peak n={n}"),
            &[],
            unimodal && peaks.contains(&want),
            format!("unimodal with a peak at {want}"),
            format!("unimodal={unimodal} peaks={peaks:?}"),
        );
        if let Some(d) = c.value(format!("d n={n}"), &["all"], ctx.engine.value(Family::DA, n)) {
            c.nonnegative(format!("f+ - d n={n}"), &[], &(&fp - &d));
        }
    }
}

fn local_int(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    let cap = max_n.min(ctx.kn_cap());
    for n in 1..=cap {
        let Some(k) = c.value(format!("K_{n}"), &["build"], k_n(n, ctx.allow_large)) else {
            continue;
        };
        if let (Some(l), Some(f)) = (
            c.value(format!("local h K_{n}"), &["local-h"], k.over_simplex.local_h()),
            c.value(format!("f+ n={n}"), &["all"], ctx.engine.value(Family::FPlus, n)),
        ) {
            c.poly(format!("local h K_{n}"), &["local-h", "f+"], &f, &l);
        }
        if let (Some(l), Some(d)) = (
            c.value(format!("local h sd n={n}"), &["local-h"], k.sd.local_h()),
            c.value(format!("d n={n}"), &["all"], ctx.engine.value(Family::DA, n)),
        ) {
            c.poly(format!("local h sd n={n}"), &["local-h", "d"], &d, &l);
        }
    }
    if max_n > cap {
        c.note(format!("K_n built for n <= {cap}; alternating sums run to {max_n}"));
    }
    for n in 0..=max_n {
        for (fam, direct) in [
            (Family::FPlus, formulas::f_plus_multinomial(n)),
            (Family::FMinus, formulas::f_minus_multinomial(n)),
        ] {
            let case = format!("{fam} alternating sum n={n}");
            if let Some(v) = c.value(
                &case,
                &["alternating-sum"],
                ctx.engine.method_value(fam, n, Method::AlternatingSum),
            ) {
                c.poly(&case, &["alternating-sum", "multinomial-sum"], &direct, &v);
            }
        }
    }
}

fn chain_masks(k: &KComplex, e: &Face) -> Vec<u32> {
    e.vertices()
        .iter()
        .map(|&v| k.sd.complex().label(v).iter().fold(0u32, |m, &x| m | 1 << (x - 1)))
        .collect()
}

fn symmetric_nonnegative<L: Clone, M: Clone>(c: &mut Checker, case: &str, s: &Subdivision<L, M>, e: &Face, d: usize) {
    let Some(l) = c.value(case, &["relative-local-h"], s.relative_local_h(e)) else {
        return;
    };
    let deg = d - e.len();
    c.holds(
        format!("{case} symmetry"),
        &[],
        is_symmetric(&l, deg),
        format!("symmetric about {deg}/2"),
        &l,
    );
    c.nonnegative(format!("{case} nonnegative"), &[], &l);
}

fn relative_local_h(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    let cap = max_n.min(RELATIVE_CAP.max(if ctx.allow_large { ctx.kn_cap() } else { 0 }));
    for n in 1..=cap {
        let Some(k) = c.value(format!("K_{n}"), &["build"], k_n(n, ctx.allow_large)) else {
            continue;
        };
        let mut sd_faces = vec![Face::empty()];
        sd_faces.extend(k.sd.complex().faces().iter().cloned());
        for e in &sd_faces {
            let chain = chain_masks(&k, e);
            let case = format!("sd n={n} E={}", fmt_chain(&chain));
            let (Some(direct), Some(formula)) = (
                c.value(&case, &["relative-local-h"], k.sd.relative_local_h(e)),
                c.value(&case, &["chain-formula"], sd_relative_local_h_formula(n, &chain)),
            ) else {
                continue;
            };
            let gaps = chain_gaps(n, &chain).map(|g| format!("{g:?}")).unwrap_or_default();
            c.poly(
                format!("{case} gaps={gaps}"),
                &["relative-local-h", "chain-formula"],
                &formula,
                &direct,
            );
            symmetric_nonnegative(c, &case, &k.sd, e, n);
        }
        let mut kn_faces = vec![Face::empty()];
        kn_faces.extend(k.complex().faces().iter().cloned());
        for e in &kn_faces {
            let case = format!("K_{n} E={:?}", k.complex().face_labels(e));
            symmetric_nonnegative(c, &case, &k.over_simplex, e, n);
        }
        if let Some((l, r)) = c.value(
            format!("decomposition (sd, K_{n})"),
            &["compose"],
            decomposition_formula_sides(&k.sd, &k.over_sd),
        ) {
            c.poly(
                format!("decomposition (sd, K_{n})"),
                &["local-h", "relative-sum"],
                &r,
                &l,
            );
        }
        for f in k.sd.complex().faces() {
            let d = f.len();
            let case = format!("K_{n} over sd face {}", fmt_chain(&chain_masks(&k, f)));
            let Some(r) = c.value(&case, &["restrict"], k.over_sd.restrict(f)) else {
                continue;
            };
            let facets = r.complex().facets().len();
            let want = 1usize << (d - 1);
            c.holds(format!("{case} facets"), &[], facets == want, want, facets);
            if let Some(l) = c.value(&case, &["local-h"], r.local_h()) {
                let expect = if d % 2 == 0 {
                    IntPoly::monomial(1, d / 2)
                } else {
                    IntPoly::zero()
                };
                c.poly(format!("{case} local h"), &["local-h", "parity-monomial"], &expect, &l);
            }
        }
        if let (Some(kl), Some(sl)) = (
            c.value(format!("local h K_{n}"), &["local-h"], k.over_simplex.local_h()),
            c.value(format!("local h sd n={n}"), &["local-h"], k.sd.local_h()),
        ) {
            c.nonnegative(format!("monotonicity n={n}"), &["local-h"], &(&kl - &sl));
        }
    }
    if max_n > cap {
        c.note(format!("face scans run for n <= {cap}"));
    }
}

fn fmt_chain(chain: &[u32]) -> String {
    let sets: Vec<String> = chain
        .iter()
        .map(|&m| {
            let els: Vec<String> = (0..32)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", els.join(","))
        })
        .collect();
    format!("[{}]", sets.join(" < "))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn h_formula(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    let cap = max_n.min(ctx.kn_cap());
    for n in 1..=cap {
        let Some(k) = c.value(format!("K_{n}"), &["build"], k_n(n, ctx.allow_large)) else {
            continue;
        };
        let h = k.complex().h_polynomial();
        let (bp, method) = if ctx.enum_b(n) {
            (
                enumerate::half_eulerian_by_des(n, Half::Plus, ctx.allow_large),
                "enum-des",
            )
        } else {
            (ctx.engine.value(Family::BPlus, n), "all")
        };
        if let Some(bp) = c.value(format!("B+ n={n}"), &[method], bp) {
            c.poly(format!("h(K_{n})"), &["h", method], &bp, &h);
            if let Some(eh) = c.value(
                format!("edgewise n={n}"),
                &["edgewise"],
                edgewise_h(&formulas::eulerian_triangle(n)[n], n, 2),
            ) {
                c.poly(format!("edgewise h n={n}"), &["edgewise", method], &bp, &eh);
            }
        }
        let facets = BigInt::from(k.complex().facets().len());
        let want = (BigInt::one() << (n - 1)) * factorial(n);
        c.holds(format!("facets K_{n}"), &[], facets == want, &want, &facets);
        c.poly(
            format!("h(sd) n={n}"),
            &["h", "eulerian"],
            &formulas::eulerian_triangle(n)[n],
            &k.sd.complex().h_polynomial(),
        );
        if n <= RELATIVE_CAP {
            for (name, r) in [
                ("K_n over simplex", k.over_simplex.h_formula_sides()),
                ("sd over simplex", k.sd.h_formula_sides()),
                ("K_n over sd", k.over_sd.h_formula_sides()),
            ] {
                let case = format!("{name} n={n}");
                if let Some((l, r)) = c.value(&case, &["h-formula"], r) {
                    c.poly(&case, &["h", "local-sum"], &r, &l);
                }
            }
            let shifted =
                k.sd.complex()
                    .relabel(|l| l.iter().map(|x| x + 100).collect::<Vec<u32>>());
            if let Some(ok) = c.value(format!("join n={n}"), &["join"], k.sd.complex().join_h_check(&shifted)) {
                c.holds(format!("join h n={n}"), &["join"], ok, "h(sd * sd) = h(sd)^2", ok);
            }
            flag_case(c, n, &h);
        }
    }
    if max_n > cap {
        c.note(format!("K_n built for n <= {cap}"));
    }
}

fn flag_case(c: &mut Checker, n: usize, h: &IntPoly) {
    let Some(p) = c.value(format!("P_{n}"), &["build"], signed_subset_poset(n)) else {
        return;
    };
    let Some(fv) = c.value(
        format!("flag vectors P_{n}"),
        &["flag"],
        p.flag_vectors(n, |s| n + 1 - s.len()),
    ) else {
        return;
    };
    let mut sums = vec![0i64; n + 1];
    for (&s, &b) in &fv.beta {
        sums[s.count_ones() as usize] += b;
        c.holds(format!("beta P_{n} S={s:#b}"), &["flag"], b >= 0, "nonnegative", b);
    }
    c.poly(format!("flag h P_{n}"), &["flag", "h"], h, &sums.into_iter().collect());
}

fn egf_suite(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    let order = max_n;
    let series: Vec<(Family, &str, Result<EgfSeries>)> = vec![
        (Family::A, "egf", egf::eulerian_a(order)),
        (Family::DA, "egf", egf::derangement_a(order)),
        (Family::DB, "egf", egf::derangement_b(order)),
        (Family::DB, "egf-composite", egf::derangement_b_composite(order)),
        (Family::FPlus, "egf", egf::f_plus(order)),
        (Family::FMinus, "egf", egf::f_minus(order)),
        (Family::BPlus, "egf", egf::b_plus(order)),
        (Family::BMinus, "egf", egf::b_minus(order)),
    ];
    let enum_cap = if ctx.allow_large { max_n } else { EGF_ENUM_CAP };
    for (fam, method, s) in series {
        let Some(s) = c.value(format!("{fam} {method}"), &[method], s) else {
            continue;
        };
        let first = usize::from(fam == Family::A);
        for n in first..=max_n {
            let case = format!("{fam} {method} n={n}");
            let Some(got) = c.value(&case, &[method], egf::coefficient(&s, n)) else {
                continue;
            };
            let (expected, other) = if n <= enum_cap {
                (enumerated(fam, n, ctx.allow_large), "enumeration")
            } else {
                (ctx.engine.value(fam, n), "all")
            };
            if let Some(e) = c.value(&case, &[other], expected) {
                c.poly(&case, &[method, other], &e, &got);
            }
        }
    }
    if max_n > enum_cap {
        c.note(format!(
            "enumeration runs for n <= {enum_cap}; larger n compare against formula paths"
        ));
    }
    for n in 1..=max_n {
        let case = format!("B+ series n={n}");
        let Some(bp) = c.value(
            &case,
            &["e2-formula"],
            ctx.engine.method_value(Family::BPlus, n, Method::E2Formula),
        ) else {
            continue;
        };
        let s = series_div_one_minus_x_pow(&bp, n, SERIES_ORDER);
        let closed: IntPoly = (0..=SERIES_ORDER as u32)
            .map(|i| BigInt::from(2 * i + 1).pow(n as u32) - BigInt::from(2 * i).pow(n as u32))
            .collect();
        c.holds(&case, &["series", "closed-form"], s == closed.to_rat(), &closed, &s);
    }
}

fn enumerated(fam: Family, n: usize, allow_large: bool) -> Result<IntPoly> {
    match fam {
        Family::A => enumerate::eulerian_a_by_des(n),
        Family::DA => enumerate::derangement_a_by_exc(n),
        Family::DB => enumerate::derangement_b_by_exc(n, allow_large),
        Family::FPlus if n == 0 => Ok(IntPoly::one()),
        Family::FMinus if n == 0 => Ok(IntPoly::zero()),
        Family::FPlus => enumerate::derangement_b_restricted(n, true, allow_large),
        Family::FMinus => enumerate::derangement_b_restricted(n, false, allow_large),
        Family::BPlus => enumerate::half_eulerian_by_des(n, Half::Plus, allow_large),
        Family::BMinus => enumerate::half_eulerian_by_des(n, Half::Minus, allow_large),
        _ => enumerate::eulerian_b_by_des(n, allow_large),
    }
}

fn recurrences(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    if let Some(rec) = c.value(
        "B+ recurrence",
        &["recurrence"],
        formulas::b_plus_recurrence_table(max_n),
    ) {
        for (n, r) in rec.iter().enumerate() {
            let case = format!("B+ recurrence n={n}");
            if let Some(e2) = c.value(
                &case,
                &["e2-formula"],
                formulas::b_plus_e2(n, &formulas::eulerian_triangle(n)[n]),
            ) {
                c.poly(&case, &["recurrence", "e2-formula"], &e2, r);
                if let Some(bm) = c.value(&case, &["reversal"], formulas::b_minus_reversal(n, &e2)) {
                    if let Some(egf_bm) =
                        c.value(&case, &["egf"], ctx.engine.method_value(Family::BMinus, n, Method::Egf))
                    {
                        c.poly(format!("B- reversal n={n}"), &["reversal", "egf"], &egf_bm, &bm);
                    }
                }
                if ctx.enum_b(n) {
                    if let Some(en) = c.value(
                        &case,
                        &["enum-des"],
                        enumerate::half_eulerian_by_des(n, Half::Plus, ctx.allow_large),
                    ) {
                        c.poly(format!("B+ e2 n={n}"), &["e2-formula", "enum-des"], &en, &e2);
                    }
                }
            }
        }
    }
    let db: Option<Vec<IntPoly>> = c.value(
        "d^B table",
        &["all"],
        (0..=max_n).map(|n| ctx.engine.value(Family::DB, n)).collect(),
    );
    if let Some(db) = db {
        for (n, r) in formulas::f_plus_recurrence_table(max_n, &db).iter().enumerate() {
            c.poly(
                format!("f+ recurrence n={n}"),
                &["recurrence", "multinomial-sum"],
                &formulas::f_plus_multinomial(n),
                r,
            );
        }
    }
    for n in 2..=max_n {
        for k in 1..=n + 1 {
            let case = format!("coefficient recurrence n={n} k={k}");
            if let Some(ok) = c.value(&case, &["coefficients"], ctx.engine.coeff_recurrence_check(n, k)) {
                c.holds(&case, &["coefficients"], ok, true, ok);
            }
        }
    }
}

fn bijection(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    for n in 0..=max_n {
        let Some(iter) = c.value(format!("B_{n}"), &["enumerate"], guarded_bn(n, ctx.allow_large)) else {
            continue;
        };
        let mut images = HashSet::new();
        let mut count = 0u64;
        let mut failed = 0usize;
        for w in iter.filter(SignedPermutation::is_derangement) {
            count += 1;
            let before = c.failures.len();
            check_one(c, &w);
            if let Ok(img) = phi(&w) {
                images.insert(serde_json::to_string(&img).expect("serialisable"));
            }
            failed += usize::from(c.failures.len() > before);
        }
        let expected: BigInt = formulas::main_formula(n).eval(&BigInt::one());
        c.holds(
            format!("|D^B_{n}|"),
            &["enumerate", "main-formula"],
            BigInt::from(count) == expected,
            &expected,
            count,
        );
        c.holds(
            format!("phi injective n={n}"),
            &["phi"],
            images.len() as u64 == count,
            count,
            images.len(),
        );
        if failed > 0 {
            c.note(format!("n={n}: {failed} derangements failed"));
        }
    }
}

fn guarded_bn(n: usize, allow_large: bool) -> Result<Box<dyn Iterator<Item = SignedPermutation>>> {
    if allow_large {
        Ok(Box::new(crate::signedperm::BnIter::unguarded(n)))
    } else {
        Ok(Box::new(enumerate_bn(n)?))
    }
}

fn check_one(c: &mut Checker, w: &SignedPermutation) {
    let case = format!("w={w}");
    let Some(img) = c.value(&case, &["phi"], phi(w)) else {
        return;
    };
    if let Some(back) = c.value(&case, &["phi-inverse"], phi_inverse(&img)) {
        c.holds(
            format!("{case} round trip"),
            &["phi", "phi-inverse"],
            &back == w,
            w,
            &back,
        );
    }
    if let Some(l) = c.value(&case, &["ledger"], statistic_ledger(w)) {
        c.holds(
            format!("{case} iexc identity"),
            &["iexc", "ledger"],
            l.holds(),
            l.iexc_b,
            l.rhs,
        );
    }
    if w.n() > 0 {
        let even = img.k() % 2 == 0;
        let last = last_cycle_element_positive(w);
        let inv = w.invert().in_bstar().unwrap_or(false);
        c.holds(
            format!("{case} parity"),
            &["phi", "cycle-form", "inverse"],
            even == last && last == inv,
            format!("k even = {even}"),
            format!("last cycle element positive = {last}, w^-1(m) > 0 = {inv}"),
        );
    }
}

fn gamma(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    for n in 0..=max_n {
        let mut cases: Vec<(String, Family, usize)> = vec![
            (format!("d n={n}"), Family::DA, n),
            (format!("f+ n={n}"), Family::FPlus, n),
            (format!("f- n={n}"), Family::FMinus, n + 1),
            (format!("B n={n}"), Family::B, n),
        ];
        if n >= 1 {
            cases.push((format!("A n={n}"), Family::A, n - 1));
        }
        for (case, fam, deg) in cases {
            let Some(p) = c.value(&case, &["all"], ctx.engine.value(fam, n)) else {
                continue;
            };
            let Some(g) = c.value(&case, &["gamma-extraction"], gamma_extract(&p, deg)) else {
                continue;
            };
            c.poly(
                format!("{case} reconstruct"),
                &["gamma-extraction"],
                &p,
                &g.reconstruct(),
            );
            c.holds(
                format!("{case} gamma nonnegative"),
                &["gamma-extraction"],
                g.is_nonnegative(),
                "nonnegative",
                g.to_poly(),
            );
            let xi = match fam {
                Family::FPlus => Some(Family::XiPlus),
                Family::FMinus => Some(Family::XiMinus),
                _ => None,
            };
            if let Some(xf) = xi {
                if let Some(v) = c.value(
                    &case,
                    &["multinomial-sum"],
                    ctx.engine.method_value(xf, n, Method::MultinomialSum),
                ) {
                    c.poly(
                        format!("{xf} n={n}"),
                        &["gamma-extraction", "multinomial-sum"],
                        &v,
                        &g.to_poly(),
                    );
                }
            }
        }
    }
}

fn real_roots(c: &mut Checker, max_n: usize, ctx: &SuiteContext) {
    for fam in [
        Family::A,
        Family::DA,
        Family::B,
        Family::DB,
        Family::BPlus,
        Family::BMinus,
        Family::FPlus,
        Family::FMinus,
    ] {
        let first = match fam {
            Family::A => 1,
            Family::FPlus | Family::FMinus => 2,
            _ => 0,
        };
        for n in first..=max_n {
            let case = format!("{fam} n={n}");
            let Some(p) = c.value(&case, &["all"], ctx.engine.value(fam, n)) else {
                continue;
            };
            if p.is_zero() {
                c.note(format!("{case}: zero polynomial skipped"));
                continue;
            }
            let Some(rr) = c.value(&case, &["sturm"], sturm_real_rooted(&p)) else {
                continue;
            };
            let report = shape_report(&p, fam.symmetry_degree(n));
            c.holds(
                format!("{case} shape consistency"),
                &["shape"],
                report.is_consistent(),
                "consistent",
                format!("{report:?}"),
            );
            if fam.proven_real_rooted() {
                c.holds(&case, &["sturm"], rr, "real-rooted", "not real-rooted");
            } else {
                c.note(format!(
                    "{case}: {}",
                    if rr { "real-rooted" } else { "not real-rooted" }
                ));
            }
            if rr {
                if let Some(ok) = c.value(&case, &["toeplitz"], toeplitz_minor_check(&p, TOEPLITZ_ORDER)) {
                    c.holds(
                        format!("{case} toeplitz"),
                        &["sturm", "toeplitz"],
                        ok,
                        "no negative minor",
                        "negative minor",
                    );
                }
            }
        }
    }
}
