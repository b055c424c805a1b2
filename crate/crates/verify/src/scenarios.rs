//! The scenario catalog. Each scenario turns one structural statement into
//! report rows.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use queerhom::assoc::{an_vanishing_check, Builtin, SuperAlgebra};
use queerhom::homology::{
    check_h_relations, hc1, kahler_hc1_oracle, phi_psi, verify_main_theorem, verify_psq_formula, verify_slnn_identity,
    Presentation, TheoremReport,
};
use queerhom::lie::{
    build_q, build_sq_by_characterization, derived_subalgebra, induced_subalgebra, is_perfect, iso_q_to_gl,
    iso_qq1_to_glnn, loop_iso, sq_image_is_sl, VerifiedHomomorphism,
};
use queerhom::{FieldSpec, GradedDim, GradedSpace, SparseVec};
use thiserror::Error;

use crate::description::{load_algebra, LoadError};
use crate::report::{InputSummary, Report, Row, Status};

/// Prime used for the fast pre-check ahead of a ℚ run.
pub const PRECHECK_PRIME: u64 = 10007;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown scenario `{0}`; available: {list}", list = Scenario::ALL.map(|s| s.name()).join(", "))]
    UnknownScenario(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Core(#[from] queerhom::Error),
}

impl VerifyError {
    /// 1 for computational faults, 2 for usage and input problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            VerifyError::Core(queerhom::Error::Internal(_) | queerhom::Error::NotWellDefined(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scenario {
    IsoQueerGl,
    Perfectness,
    Sq1Abelian,
    LoopIso,
    QtoglSqrt1,
    PairRelations,
    Hc1Shift,
    KahlerOracle,
    H2Main,
    PsqCentral,
    SlnnIdentity,
    AnVanishing,
}

impl Scenario {
    pub const ALL: [Scenario; 12] = [
        Scenario::IsoQueerGl,
        Scenario::Perfectness,
        Scenario::Sq1Abelian,
        Scenario::LoopIso,
        Scenario::QtoglSqrt1,
        Scenario::PairRelations,
        Scenario::Hc1Shift,
        Scenario::KahlerOracle,
        Scenario::H2Main,
        Scenario::PsqCentral,
        Scenario::SlnnIdentity,
        Scenario::AnVanishing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::IsoQueerGl => "iso-queer-gl",
            Scenario::Perfectness => "perfectness",
            Scenario::Sq1Abelian => "sq1-abelian",
            Scenario::LoopIso => "loop-iso",
            Scenario::QtoglSqrt1 => "qtogl-sqrt-1",
            Scenario::PairRelations => "pair-relations",
            Scenario::Hc1Shift => "hc1-shift",
            Scenario::KahlerOracle => "kahler-oracle",
            Scenario::H2Main => "h2-main",
            Scenario::PsqCentral => "psq-central",
            Scenario::SlnnIdentity => "slnn-identity",
            Scenario::AnVanishing => "an-vanishing",
        }
    }

    /// The `n` values run when none is given.
    fn default_ns(self) -> &'static [usize] {
        match self {
            Scenario::IsoQueerGl => &[1, 2, 3],
            Scenario::Perfectness | Scenario::AnVanishing => &[2, 3],
            Scenario::Sq1Abelian => &[1],
            Scenario::LoopIso => &[2],
            Scenario::QtoglSqrt1 => &[1, 2],
            Scenario::PairRelations | Scenario::Hc1Shift | Scenario::KahlerOracle => &[],
            Scenario::H2Main | Scenario::PsqCentral | Scenario::SlnnIdentity => &[3],
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Scenario::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownScenario(s.to_string()))
    }
}

/// `builtin:NAME` or a path to a JSON description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    Builtin(Builtin),
    File(PathBuf),
}

impl FromStr for AlgebraSource {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        match s.strip_prefix("builtin:") {
            Some(name) => Ok(AlgebraSource::Builtin(
                name.parse()
                    .map_err(|e: queerhom::Error| VerifyError::Usage(format!("unknown builtin `{name}`: {e}")))?,
            )),
            None => Ok(AlgebraSource::File(PathBuf::from(s))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub algebra: AlgebraSource,
    pub n: Option<usize>,
    /// ℚ for builtins when absent; a file's own field otherwise.
    pub field: Option<FieldSpec>,
    /// Cap on the dimension of `Λ³g`.
    pub budget: Option<usize>,
}

impl Options {
    pub fn builtin(b: Builtin) -> Self {
        Options { algebra: AlgebraSource::Builtin(b), n: None, field: None, budget: None }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = Some(field);
        self
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    fn load(&self) -> Result<SuperAlgebra, VerifyError> {
        match &self.algebra {
            AlgebraSource::Builtin(b) => Ok(b.build(self.field.unwrap_or(FieldSpec::Rationals))?),
            AlgebraSource::File(path) => {
                let a = load_algebra(path)?;
                match self.field {
                    Some(f) if f != a.field() => {
                        Err(VerifyError::Usage(format!("{} is described over {}, not {f}", path.display(), a.field())))
                    }
                    _ => Ok(a),
                }
            }
        }
    }
}

struct Ctx<'a> {
    opts: &'a Options,
    r: SuperAlgebra,
    report: Report,
}

impl Ctx<'_> {
    fn field(&self) -> FieldSpec {
        self.r.field()
    }

    fn push(&mut self, row: Row) {
        self.report.rows.push(row);
    }

    /// Runs `f` on the coordinate algebra and records its wall time.
    fn timed<T>(&mut self, phase: impl Into<String>, f: impl FnOnce(&SuperAlgebra) -> T) -> T {
        let start = Instant::now();
        let out = f(&self.r);
        self.report.time(phase, start.elapsed().as_secs_f64());
        out
    }

    fn ns(&self, scenario: Scenario) -> Vec<usize> {
        self.opts.n.map_or_else(|| scenario.default_ns().to_vec(), |n| vec![n])
    }

    /// Skips the whole scenario with a single row.
    fn skip_all(&mut self, scenario: Scenario, note: impl Into<String>) {
        self.push(Row::skip(scenario.name(), note));
    }

    fn builtin(&self) -> Option<&Builtin> {
        match &self.opts.algebra {
            AlgebraSource::Builtin(b) => Some(b),
            AlgebraSource::File(_) => None,
        }
    }
}

pub fn run_scenario(scenario: Scenario, opts: &Options) -> Result<Report, VerifyError> {
    if opts.n == Some(0) {
        return Err(VerifyError::Usage("n must be positive".into()));
    }
    let r = opts.load()?;
    let input =
        InputSummary { algebra: r.name().to_string(), field: r.field().to_string(), n: opts.n, budget: opts.budget };
    let mut cx = Ctx { opts, r, report: Report::new(scenario.name(), input) };
    match scenario {
        Scenario::IsoQueerGl => iso_queer_gl(&mut cx)?,
        Scenario::Perfectness => perfectness(&mut cx)?,
        Scenario::Sq1Abelian => sq1_abelian(&mut cx)?,
        Scenario::LoopIso => loop_algebra(&mut cx)?,
        Scenario::QtoglSqrt1 => qtogl(&mut cx)?,
        Scenario::PairRelations => pair_relations(&mut cx)?,
        Scenario::Hc1Shift => hc1_shift(&mut cx)?,
        Scenario::KahlerOracle => kahler(&mut cx)?,
        Scenario::H2Main => theorem(&mut cx, Scenario::H2Main)?,
        Scenario::PsqCentral => theorem(&mut cx, Scenario::PsqCentral)?,
        Scenario::SlnnIdentity => theorem(&mut cx, Scenario::SlnnIdentity)?,
        Scenario::AnVanishing => an_vanishing(&mut cx)?,
    }
    Ok(cx.report)
}

fn hom_row(check: String, hom: &VerifiedHomomorphism) -> Row {
    let computed = if hom.is_isomorphism() {
        "isomorphism".to_string()
    } else {
        hom.failure.clone().unwrap_or_else(|| format!("injective={} surjective={}", hom.injective, hom.surjective))
    };
    Row::new(check, Status::of(hom.is_isomorphism()), "isomorphism", computed)
        .with_note(format!("{} bracket pairs checked", hom.pairs_checked))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn iso_queer_gl(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    for n in cx.ns(Scenario::IsoQueerGl) {
        let (hom, _, _) = cx.timed(format!("q_{n} → gl_{n}(R⊗Q1)"), |r| iso_q_to_gl(n, r))?;
        cx.push(hom_row(format!("q_{n}(R) ≅ gl_{n}(R⊗Q1)"), &hom));
        let image = cx.timed(format!("image of sq_{n}"), |r| sq_image_is_sl(n, r))?;
        cx.push(Row::compare(format!("image of sq_{n}(R) = sl_{n}(R⊗Q1)"), "yes", yes_no(image)));
    }
    Ok(())
}

fn perfectness(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    for n in cx.ns(Scenario::Perfectness) {
        let (derived, by_trace, perfect) = cx.timed(format!("n = {n}"), |r| -> Result<_, VerifyError> {
            let q = build_q(n, r)?;
            let derived = derived_subalgebra(&q);
            let sq = induced_subalgebra(&q, &derived)?;
            Ok((derived, build_sq_by_characterization(n, r)?, is_perfect(&sq)))
        })?;
        let dims = derived.graded_dim()?;
        cx.push(
            Row::compare(format!("[q_{n}, q_{n}] = {{Tr B ∈ [R,R]}}"), "yes", yes_no(derived == by_trace))
                .with_note(format!("graded dim {dims}")),
        );
        let mut row = Row::compare(format!("sq_{n}(R) perfect"), "yes", yes_no(perfect));
        if n == 2 {
            row =
                row.with_note("n = 2 is below the range n ≥ 3 sometimes quoted for perfectness; reported as computed");
        }
        cx.push(row);
    }
    Ok(())
}

fn sq1_abelian(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    if !cx.r.is_super_commutative() {
        cx.skip_all(Scenario::Sq1Abelian, "needs super-commutative coordinates");
        return Ok(());
    }
    let sq1 = cx.timed("sq_1", |r| -> Result<_, VerifyError> {
        let q = build_q(1, r)?;
        Ok(induced_subalgebra(&q, &derived_subalgebra(&q))?)
    })?;
    let derived = derived_subalgebra(&sq1).graded_dim()?;
    cx.push(
        Row::compare("[sq_1, sq_1] = 0", GradedDim::ZERO, derived)
            .with_note(format!("sq_1 has graded dim {}", sq1.graded_dim())),
    );
    Ok(())
}

fn loop_algebra(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    if !cx.r.is_super_commutative() {
        cx.skip_all(Scenario::LoopIso, "needs super-commutative coordinates");
        return Ok(());
    }
    for n in cx.ns(Scenario::LoopIso) {
        let (hom, src, dst) = cx.timed(format!("q_{n}(k)⊗R → q_{n}(R)"), |r| loop_iso(n, r))?;
        cx.push(hom_row(format!("q_{n}(k)⊗R ≅ q_{n}(R), w⊗a ↦ (−1)^|a| w(a)"), &hom));
        let unit = (0..src.dim()).map(|s| SparseVec::unit(s, cx.field().one())).collect();
        let plain = VerifiedHomomorphism::verify(&src, &dst, unit);
        let expect = cx.r.graded_dim().odd == 0;
        cx.push(
            Row::compare(
                format!("unsigned relabeling preserves brackets (n = {n})"),
                yes_no(expect),
                yes_no(plain.bracket_preserving),
            )
            .with_note("expected only when R has no odd part"),
        );
    }
    Ok(())
}

fn qtogl(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    if cx.field().sqrt_minus_one().is_none() {
        cx.skip_all(Scenario::QtoglSqrt1, format!("{} has no square root of −1; use --field Qi", cx.field()));
        return Ok(());
    }
    for n in cx.ns(Scenario::QtoglSqrt1) {
        let (hom, q, gl) = cx.timed(format!("q_{n}(R⊗Q1) → gl_{n}|{n}(R)"), |r| iso_qq1_to_glnn(n, r))?;
        cx.push(hom_row(format!("q_{n}(R⊗Q1) ≅ gl_{{{n}|{n}}}(R)"), &hom));
        let same = cx.timed(format!("image of sq_{n}"), |_| -> Result<_, VerifyError> {
            Ok(hom.image(&derived_subalgebra(&q), &gl)? == derived_subalgebra(&gl))
        })?;
        cx.push(Row::compare(format!("image of sq_{n}(R⊗Q1) = sl_{{{n}|{n}}}(R)"), "yes", yes_no(same)));
    }
    Ok(())
}

/// `c₁·label₁ + c₂·label₂ + …`, or `0`.
fn show(v: &SparseVec, space: &GradedSpace) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = v
        .iter()
        .map(|(i, x)| if x.is_one() { space.label(i).to_string() } else { format!("({x})·{}", space.label(i)) })
        .collect();
    terms.join(" + ")
}

/// Failing instances listed per relation in a row note.
const SHOWN_FAILURES: usize = 4;

fn pair_relations(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    let report = cx.timed("relations", check_h_relations)?;
    let s = cx.r.tensor(&Builtin::Q1.build(cx.field())?)?;
    let quotient = queerhom::homology::PairSpace::new(&s)?;
    let space = quotient.quotient().space().clone();
    let mut ids: Vec<&str> = Vec::new();
    for row in &report.rows {
        if !ids.contains(&row.relation) {
            ids.push(row.relation);
        }
    }
    for id in ids {
        let rows: Vec<_> = report.rows.iter().filter(|r| r.relation == id).collect();
        let failing: Vec<_> = rows.iter().filter(|r| !r.residue.is_zero()).collect();
        let mut row = Row::new(
            id,
            Status::of(failing.is_empty()),
            format!("0 nonzero residues of {}", rows.len()),
            format!("{} nonzero residues of {}", failing.len(), rows.len()),
        );
        if !failing.is_empty() {
            let shown: Vec<String> = failing
                .iter()
                .take(SHOWN_FAILURES)
                .map(|f| format!("({}, {}): {} ≠ {}", f.a, f.b, show(&f.lhs, &space), show(&f.rhs, &space)))
                .collect();
            row = row.with_note(shown.join("; "));
        }
        cx.push(row);
    }
    Ok(())
}

fn hc1_shift(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    let rep = cx.timed("φ/ψ", phi_psi)?;
    let s = cx.r.tensor(&Builtin::Q1.build(cx.field())?)?;
    let brute = cx.timed("brute force HC1(R⊗Q1)", |_| hc1(&s))?;
    let shifted = rep.hc1_r.graded_dim.swap();
    cx.push(Row::compare("HC1(R⊗Q1) via φ/ψ = HC1(R)⊗k^(0|1)", shifted, rep.hc1_s.graded_dim));
    cx.push(
        Row::compare("HC1(R⊗Q1) by elimination = HC1(R)⊗k^(0|1)", shifted, brute.graded_dim)
            .with_note(format!("HC1(R) = {}", rep.hc1_r.graded_dim)),
    );
    cx.push(Row::compare(
        "φ, ψ well defined",
        "yes",
        yes_no(rep.psi_well_defined && rep.phi_well_defined && rep.hc1_in_normal_form),
    ));
    cx.push(Row::compare(
        "φ∘ψ = id and ψ∘φ = id",
        "yes",
        yes_no(rep.phi_after_psi_is_identity && rep.psi_after_phi_is_identity),
    ));
    cx.push(Row::compare("φ and ψ are odd", "yes", yes_no(rep.both_flip_parity)));
    cx.push(Row::compare("ψ(HC1(R)) = HC1(R⊗Q1)", "yes", yes_no(rep.psi_maps_hc1_onto_hc1)));
    Ok(())
}

fn kahler(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    let presentation = match cx.builtin().map(Presentation::from_builtin) {
        Some(Ok(p)) => p,
        Some(Err(e)) => {
            cx.skip_all(Scenario::KahlerOracle, e.to_string());
            return Ok(());
        }
        None => {
            cx.skip_all(Scenario::KahlerOracle, "needs a builtin commutative algebra with a known presentation");
            return Ok(());
        }
    };
    let oracle = cx.timed("Ω¹/dR", |r| kahler_hc1_oracle(&presentation, r.field()))?;
    let brute = cx.timed("HC1", hc1)?;
    cx.push(
        Row::compare("HC1(R) = Ω¹(R)/dR", oracle.hc1, brute.graded_dim)
            .with_note(format!("dim Ω¹ = {}, dim dR = {}", oracle.omega1_dim, oracle.exact_dim)),
    );
    Ok(())
}

fn theorem(cx: &mut Ctx<'_>, scenario: Scenario) -> Result<(), VerifyError> {
    let needs_sqrt = scenario == Scenario::SlnnIdentity;
    if needs_sqrt && cx.field().sqrt_minus_one().is_none() {
        cx.skip_all(scenario, format!("{} has no square root of −1; use --field Qi", cx.field()));
        return Ok(());
    }
    if scenario == Scenario::PsqCentral && !cx.r.is_super_commutative() {
        cx.skip_all(scenario, "needs super-commutative coordinates");
        return Ok(());
    }
    let budget = cx.opts.budget;
    let run = |r: &SuperAlgebra, n: usize| match scenario {
        Scenario::H2Main => verify_main_theorem(r, n, budget),
        Scenario::PsqCentral => verify_psq_formula(r, n, budget),
        _ => verify_slnn_identity(r, n, budget),
    };
    for n in cx.ns(scenario) {
        // a cheap F_p run first when the ℚ run is for a builtin
        let precheck = match (scenario, cx.builtin(), cx.field()) {
            (Scenario::H2Main, Some(b), FieldSpec::Rationals) => Some(b.build(FieldSpec::PrimeField(PRECHECK_PRIME))?),
            _ => None,
        };
        let tagged = precheck.is_some();
        if let Some(rp) = precheck {
            let outcome = run(&rp, n);
            let row = theorem_row(cx, outcome, n, rp.field())?;
            let note = match row.status {
                Status::Skip => row.note.clone(),
                _ => format!("pre-check, rank over F_p never exceeds the rank over ℚ; {}", row.note),
            };
            cx.push(row.with_field(rp.field()).with_note(note));
        }
        let outcome = run(&cx.r.clone(), n);
        let row = theorem_row(cx, outcome, n, cx.field())?;
        cx.push(if tagged { row.with_field(cx.field()) } else { row });
    }
    Ok(())
}

fn theorem_row(
    cx: &mut Ctx<'_>,
    outcome: queerhom::Result<TheoremReport>,
    n: usize,
    field: FieldSpec,
) -> Result<Row, VerifyError> {
    let rep = match outcome {
        Ok(rep) => rep,
        Err(queerhom::Error::BudgetExceeded { dim, budget }) => {
            return Ok(Row::skip(format!("H2 (n = {n})"), format!("Λ³ dimension {dim} exceeds budget {budget}")));
        }
        Err(e) => return Err(e.into()),
    };
    for (phase, secs) in &rep.phases {
        cx.report.time(format!("{phase} (n = {n}, {field})"), *secs);
    }
    let mut notes = vec![format!(
        "algebra {}, dim Λ² = {}, dim Λ³ = {}, rank d2 = {}, rank d3 = {}",
        rep.algebra_dim, rep.h2.lambda2_dim, rep.h2.lambda3_dim, rep.h2.rank_d2, rep.h2.rank_d3
    )];
    notes.extend(rep.notes.iter().cloned());
    Ok(Row::compare(format!("{} = {}", rep.lhs_label, rep.rhs_label), rep.rhs, rep.lhs).with_note(notes.join("; ")))
}

fn an_vanishing(cx: &mut Ctx<'_>) -> Result<(), VerifyError> {
    for n in cx.ns(Scenario::AnVanishing) {
        let check = format!("𝒜_{n}(R⊗Q1) = 0");
        match cx.timed(format!("n = {n}"), |r| an_vanishing_check(r, n)) {
            Ok(dims) => cx.push(Row::compare(check, GradedDim::ZERO, dims)),
            Err(queerhom::Error::InvalidParams(msg)) => cx.push(Row::skip(check, msg)),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}
