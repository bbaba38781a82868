//! End-to-end verification for one diagram type: builds the group, its character
//! table, both correspondences and the Fourier comparison, and collects one
//! check per verified property.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::characters::{
    character_table, CharacterTable, CONSTRUCTION_TOL, INTEGRALITY_TOL, PHASE_TOL,
};
use crate::dual::{
    canonical_ordering, dual_labeling, find_mumford_representatives, find_special_triple,
    verify_dual_statements, DualLabeling, SpecialTriple,
};
use crate::dynkin::{
    cartan, inverse_bound_check, neumann_series_check, Diagram, DiagramType, Family,
};
use crate::error::Error;
use crate::fourier::{
    abelianization_check, central_transform_order_probe, cyclic_fourier, det_formula_check,
    ProbeOutcome,
};
use crate::linalg::rat_to_f64;
use crate::mckay::{match_affine, mckay_graph, verify_mckay, VertexIrrepBijection};
use crate::oracle::compare_with_oracle;
use crate::su2group::FiniteSubgroup;

pub const NEUMANN_TERMS: usize = 400;
pub const DEFAULT_MAX_PROBE_POWER: u64 = 10_000;
pub const PROBE_TOL: f64 = 1e-6;

/// Check names in report order.
pub const CHECK_NAMES: [&str; 11] = [
    "group_order",
    "character_orthogonality",
    "mckay_affine_isomorphism",
    "dual_statements",
    "mumford_representatives",
    "det_formula",
    "abelianization_exponent",
    "cartan_inverse_bound",
    "neumann_series",
    "cyclic_fourier",
    "oracle_equivalence",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Groups,
    Characters,
    McKay,
    Dual,
    Fourier,
}

impl Section {
    pub const ALL: [Section; 5] = [
        Section::Groups,
        Section::Characters,
        Section::McKay,
        Section::Dual,
        Section::Fourier,
    ];

    fn of_check(name: &str) -> Section {
        match name {
            "group_order" | "oracle_equivalence" => Section::Groups,
            "character_orthogonality" => Section::Characters,
            "mckay_affine_isomorphism" => Section::McKay,
            "dual_statements" | "mumford_representatives" => Section::Dual,
            _ => Section::Fourier,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerances {
    pub construction: f64,
    pub integrality: f64,
    pub phase: f64,
    pub probe: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            construction: CONSTRUCTION_TOL,
            integrality: INTEGRALITY_TOL,
            phase: PHASE_TOL,
            probe: PROBE_TOL,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub sections: BTreeSet<Section>,
    pub tolerances: Tolerances,
    pub max_probe_power: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            sections: Section::ALL.into_iter().collect(),
            tolerances: Tolerances::default(),
            max_probe_power: DEFAULT_MAX_PROBE_POWER,
        }
    }
}

impl Settings {
    /// Replaces the tolerances used for verdicts on floating-point deviations
    /// (orthogonality, determinant and series checks). Rounding to integers keeps
    /// its own tolerance.
    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerances.construction = tol;
        self.tolerances.phase = tol;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub deviation: Option<f64>,
    pub witness: Option<String>,
}

impl Check {
    fn exact(name: &'static str, pass: bool, witness: Option<String>) -> Self {
        Check {
            name,
            pass,
            deviation: None,
            witness,
        }
    }

    fn measured(name: &'static str, deviation: f64, tol: f64, witness: Option<String>) -> Self {
        Check {
            name,
            pass: deviation <= tol,
            deviation: Some(deviation),
            witness,
        }
    }

    fn error(name: &'static str, err: &Error) -> Self {
        Check::exact(name, false, Some(err.to_string()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StageTiming {
    pub stage: &'static str,
    pub ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub size: usize,
    pub element_order: u64,
    pub trace: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupDetails {
    pub classes: Vec<ClassSummary>,
    pub center_order: usize,
    pub abelianization_order: usize,
    pub abelianization_exponent: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterDetails {
    pub dims: Vec<u64>,
    /// Rows by irrep, columns by class, rounded for display.
    pub table: Vec<Vec<[f64; 2]>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct McKayDetails {
    /// Dimension of the irrep attached to `v_0, v_1, …`.
    pub dims_by_vertex: Vec<u64>,
    pub marks: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StatementDetail {
    pub statement: u8,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualDetails {
    pub triple_orders: String,
    /// Order of the elements in the class attached to each vertex.
    pub vertex_element_orders: Vec<u64>,
    pub statements: Vec<StatementDetail>,
    pub mumford_ordering: Vec<usize>,
    pub mumford_order_independent: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FourierDetails {
    pub connection_index: u64,
    pub alignment_automorphism: Option<Vec<usize>>,
    pub identity_alignment_deviation: Option<f64>,
    /// Least `p` with `T^p` scalar, or `null` when the bound is exceeded.
    pub probe_order: Option<u64>,
    pub probe_bound: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Details {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups: Option<GroupDetails>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characters: Option<CharacterDetails>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mckay: Option<McKayDetails>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualDetails>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fourier: Option<FourierDetails>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub group: &'static str,
    pub group_order: usize,
    pub class_count: usize,
    pub status: &'static str,
    pub tolerances: Tolerances,
    pub checks: Vec<Check>,
    pub details: Details,
    pub stages: Vec<StageTiming>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Timer {
    stages: Vec<StageTiming>,
    last: Instant,
}

impl Timer {
    fn new() -> Self {
        Timer {
            stages: Vec::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        self.stages.push(StageTiming {
            stage,
            ms: (now - self.last).as_secs_f64() * 1e3,
        });
        self.last = now;
    }
}

fn summarize(mut failures: Vec<String>) -> Option<String> {
    match failures.len() {
        0 => None,
        1 => failures.pop(),
        n => Some(format!("{} (and {} more)", failures[0], n - 1)),
    }
}

fn first_items(witness: &str, keep: usize) -> String {
    let parts: Vec<&str> = witness.split("; ").collect();
    if parts.len() <= keep {
        witness.to_string()
    } else {
        format!(
            "{} (and {} more)",
            parts[..keep].join("; "),
            parts.len() - keep
        )
    }
}

fn round(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Runs every stage needed by the selected sections. Construction failures are
/// reported as failed checks rather than propagated, so a report is always
/// produced.
pub fn run(ty: DiagramType, settings: &Settings) -> VerificationReport {
    let start = Instant::now();
    let tol = settings.tolerances;
    let want = |s: Section| settings.sections.contains(&s);
    let needs_table = want(Section::Characters) || want(Section::McKay) || want(Section::Fourier);
    let needs_bijection = want(Section::McKay) || want(Section::Fourier);
    let needs_labeling = want(Section::Dual) || want(Section::Fourier);

    let mut checks: Vec<Check> = Vec::new();
    let mut details = Details::default();
    let mut timer = Timer::new();

    let group = match FiniteSubgroup::generate(ty) {
        Ok(g) => g,
        Err(e) => {
            timer.lap("group");
            let checks = CHECK_NAMES
                .iter()
                .filter(|n| want(Section::of_check(n)))
                .map(|n| Check::error(n, &e))
                .collect();
            return finish(ty, 0, 0, tol, checks, details, timer, start);
        }
    };
    timer.lap("group");
    let diagram = Diagram::new(ty);

    if want(Section::Groups) {
        let expected = ty.group_order();
        checks.push(Check::exact(
            "group_order",
            group.len() == expected,
            Some(format!("|G| = {}, expected {expected}", group.len())),
        ));
        let ab = group.abelianization();
        details.groups = Some(GroupDetails {
            classes: group
                .classes()
                .iter()
                .map(|c| ClassSummary {
                    size: c.size(),
                    element_order: c.element_order,
                    trace: round(c.trace.embed().re),
                })
                .collect(),
            center_order: group.center().len(),
            abelianization_order: ab.order,
            abelianization_exponent: ab.exponent,
        });
    }

    let table: Option<Result<CharacterTable, Error>> = needs_table.then(|| character_table(&group));
    if needs_table {
        timer.lap("characters");
    }
    if want(Section::Characters) {
        checks.push(match table.as_ref().unwrap() {
            Ok(t) => {
                let dev = t
                    .row_orthogonality_deviation()
                    .max(t.column_orthogonality_deviation());
                let squares = t.sum_of_squared_dims();
                let mut c = Check::measured(
                    "character_orthogonality",
                    dev,
                    tol.construction,
                    Some(format!("sum of squared dimensions {squares}")),
                );
                c.pass &= squares == group.len() as u64;
                details.characters = Some(CharacterDetails {
                    dims: t.dims.clone(),
                    table: t
                        .values
                        .iter()
                        .map(|row| row.iter().map(|z| [round(z.re), round(z.im)]).collect())
                        .collect(),
                });
                c
            }
            Err(e) => Check::error("character_orthogonality", e),
        });
    }

    let bijection: Option<Result<VertexIrrepBijection, Error>> = needs_bijection.then(|| {
        let t = table.as_ref().unwrap().as_ref().map_err(Clone::clone)?;
        let graph = mckay_graph(&group, t)?;
        let b = match_affine(&group, t, &graph)?;
        if want(Section::McKay) {
            let report = verify_mckay(ty, &graph, &b);
            let mut failures = Vec::new();
            let flags = [
                (report.symmetric, "multiplicities not symmetric"),
                (report.loop_free, "loops present"),
                (report.dimension_rule, "dimension rule violated"),
                (report.isomorphic, "bijection does not carry edges"),
                (report.trivial_at_v0, "v0 not sent to the trivial irrep"),
                (report.dims_equal_marks, "dimensions differ from marks"),
                (report.finite_part_isomorphic, "finite part not isomorphic"),
            ];
            for (ok, msg) in flags {
                if !ok {
                    failures.push(msg.to_string());
                }
            }
            checks.push(Check::exact(
                "mckay_affine_isomorphism",
                report.passes(),
                summarize(failures),
            ));
            details.mckay = Some(McKayDetails {
                dims_by_vertex: b.map.iter().map(|&a| t.dims[a]).collect(),
                marks: cartan(ty).marks,
            });
        }
        Ok(b)
    });
    if needs_bijection {
        timer.lap("mckay");
    }
    if want(Section::McKay) {
        if let Some(Err(e)) = &bijection {
            checks.push(Check::error("mckay_affine_isomorphism", e));
        }
    }

    let labeling: Option<Result<(SpecialTriple, DualLabeling), Error>> =
        needs_labeling.then(|| {
            let triple = find_special_triple(&group, &diagram)?;
            let labeling = dual_labeling(&group, &diagram, &triple)?;
            Ok((triple, labeling))
        });
    if want(Section::Dual) {
        match labeling.as_ref().unwrap() {
            Ok((triple, labeling)) => {
                let report = verify_dual_statements(&group, &diagram, labeling, triple);
                let failures: Vec<String> = report
                    .statements
                    .iter()
                    .filter(|s| !s.holds)
                    .map(|s| {
                        format!(
                            "({}) {}",
                            s.statement,
                            first_items(s.witness.as_deref().unwrap_or(""), 1)
                        )
                    })
                    .collect();
                let witness = (!failures.is_empty()).then(|| failures.join(" | "));
                checks.push(Check::exact("dual_statements", report.passes(), witness));
                let ordering = canonical_ordering(&diagram);
                let mumford = find_mumford_representatives(&group, &diagram, labeling, &ordering);
                let order_independent = mumford.as_ref().ok().map(|m| m.order_independent);
                checks.push(match &mumford {
                    Ok(m) => {
                        let mut failures = Vec::new();
                        if !m.relations_hold {
                            failures.push("square relations fail".to_string());
                        }
                        if !m.adjacent_commute {
                            failures.push("adjacent representatives do not commute".to_string());
                        }
                        if !m.generates {
                            failures.push("representatives do not generate".to_string());
                        }
                        Check::exact("mumford_representatives", m.passes(), summarize(failures))
                    }
                    Err(e) => Check::error("mumford_representatives", e),
                });
                details.dual = Some(DualDetails {
                    triple_orders: triple.pattern(),
                    vertex_element_orders: labeling
                        .map
                        .iter()
                        .map(|&c| group.classes()[c].element_order)
                        .collect(),
                    statements: report
                        .statements
                        .iter()
                        .map(|s| StatementDetail {
                            statement: s.statement,
                            holds: s.holds,
                            witness: s.witness.as_deref().map(|w| first_items(w, 3)),
                        })
                        .collect(),
                    mumford_ordering: ordering,
                    mumford_order_independent: order_independent,
                });
            }
            Err(e) => {
                checks.push(Check::error("dual_statements", e));
                checks.push(Check::error("mumford_representatives", e));
            }
        }
    }
    if needs_labeling {
        timer.lap("dual");
    }

    if want(Section::Fourier) {
        let data = cartan(ty);
        let mut fourier = FourierDetails {
            connection_index: data.connection_index,
            alignment_automorphism: None,
            identity_alignment_deviation: None,
            probe_order: None,
            probe_bound: settings.max_probe_power,
        };
        let inputs = match (
            table.as_ref().unwrap(),
            bijection.as_ref().unwrap(),
            labeling.as_ref().unwrap(),
        ) {
            (Ok(t), Ok(b), Ok((_, l))) => Ok((t, b, l)),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => Err(e.clone()),
        };
        match &inputs {
            Ok((t, b, l)) => {
                checks.push(match det_formula_check(&group, t, l, b, tol.phase) {
                    Ok(rep) => {
                        fourier.identity_alignment_deviation = Some(rep.identity_deviation);
                        let witness = (!rep.used_identity()).then(|| {
                            format!("aligned by diagram automorphism {:?}", rep.automorphism)
                        });
                        fourier.alignment_automorphism = Some(rep.automorphism.clone());
                        Check::measured("det_formula", rep.max_deviation, tol.phase, witness)
                    }
                    Err(e @ Error::DeterminantMismatch { deviation, .. }) => {
                        let mut c = Check::error("det_formula", &e);
                        c.deviation = Some(deviation);
                        c
                    }
                    Err(e) => Check::error("det_formula", &e),
                });
            }
            Err(e) => checks.push(Check::error("det_formula", e)),
        }

        checks.push(match abelianization_check(&group) {
            Ok(r) => Check::exact(
                "abelianization_exponent",
                true,
                Some(format!("exponent {} = det C", r.exponent)),
            ),
            Err(Error::AbelianizationMismatch {
                exponent, index, ..
            }) => Check::exact(
                "abelianization_exponent",
                false,
                Some(format!(
                    "exponent {exponent} differs from det C = {index} (|G^ab| = {})",
                    group.abelianization().order
                )),
            ),
            Err(e) => Check::error("abelianization_exponent", &e),
        });

        let bound = inverse_bound_check(ty);
        let witness = match (&bound.min_offdiagonal_slack, bound.offdiagonal_witness) {
            (Some(s), Some((i, j))) => Some(format!(
                "minimum slack {} at ({i}, {j})",
                round(rat_to_f64(s))
            )),
            _ => (!bound.all_positive).then(|| "non-positive entry".to_string()),
        };
        checks.push(Check::exact(
            "cartan_inverse_bound",
            bound.passes(),
            witness,
        ));

        let dev = neumann_series_check(ty, NEUMANN_TERMS);
        checks.push(Check::measured(
            "neumann_series",
            dev,
            tol.phase,
            Some(format!("{NEUMANN_TERMS} terms")),
        ));

        checks.push(if ty.family() == Family::A {
            match &inputs {
                Ok((t, b, l)) => {
                    let (_, dev) = cyclic_fourier(&group, t, l, b).expect("cyclic type");
                    Check::measured("cyclic_fourier", dev, tol.phase, None)
                }
                Err(e) => Check::error("cyclic_fourier", e),
            }
        } else {
            Check::exact("cyclic_fourier", true, Some("not applicable".into()))
        });

        if let Ok((t, b, l)) = &inputs {
            fourier.probe_order = match central_transform_order_probe(
                &group,
                t,
                l,
                b,
                settings.max_probe_power,
                tol.probe,
            ) {
                ProbeOutcome::FiniteOrder(p) => Some(p),
                ProbeOutcome::ExceedsBound(_) => None,
            };
        }
        details.fourier = Some(fourier);
        timer.lap("fourier");
    }

    if want(Section::Groups) {
        let cmp = compare_with_oracle(&group);
        checks.push(Check::exact(
            "oracle_equivalence",
            cmp.passes(),
            summarize(cmp.mismatches),
        ));
        timer.lap("oracle");
    }

    checks.sort_by_key(|c| CHECK_NAMES.iter().position(|n| *n == c.name));
    let order = group.len();
    let classes = group.class_count();
    finish(ty, order, classes, tol, checks, details, timer, start)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    ty: DiagramType,
    group_order: usize,
    class_count: usize,
    tolerances: Tolerances,
    checks: Vec<Check>,
    details: Details,
    timer: Timer,
    start: Instant,
) -> VerificationReport {
    let pass = checks.iter().all(|c| c.pass);
    VerificationReport {
        ty: ty.to_string(),
        group: ty.group_name(),
        group_order,
        class_count,
        status: if pass { "pass" } else { "fail" },
        tolerances,
        checks,
        details,
        stages: timer.stages,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}
