//! Named verification suites: every identity checked over all admissible
//! parameters up to a rank bound.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use cominuscule::cominuscule::{build_context, cominuscule_pairs, CominusculeContext};
use cominuscule::conormal::{
    admissible_gammas, closure_is_schubert, is_smooth, nilpotent_set_check, shift_check, v_of,
};
use cominuscule::detvar::{check_relations, fibre_rank_in, n_bar, perm_to_element, w_r};
use cominuscule::weyl::AffineWeylElement;
use cominuscule::{Error, Result, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Wsontheta,
    FormInv,
    IotaConj,
    ResultQ,
    VInWSd,
    SbEquiv,
    InvolutionBij,
    MainResult,
    Nilp,
    DetvarRelations,
    Intersectw,
    FibreDet,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 13] = [
        "wsontheta",
        "form-inv",
        "iota-conj",
        "result-q",
        "vinwsd",
        "sb-equiv",
        "involution-bij",
        "main-result",
        "nilp",
        "detvar-relations",
        "intersectw",
        "fibre-det",
        "all",
    ];

    const ORDER: [Suite; 12] = [
        Suite::Wsontheta,
        Suite::FormInv,
        Suite::IotaConj,
        Suite::ResultQ,
        Suite::VInWSd,
        Suite::SbEquiv,
        Suite::InvolutionBij,
        Suite::MainResult,
        Suite::Nilp,
        Suite::DetvarRelations,
        Suite::Intersectw,
        Suite::FibreDet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            s => Self::NAMES[Self::ORDER.iter().position(|&x| x == s).expect("listed")],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "all" {
            return Ok(Suite::All);
        }
        Suite::ORDER
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub params: String,
    pub pass: bool,
    pub detail: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub max_rank: usize,
    pub include_e7: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        !self.checks.is_empty() && self.failed() == 0
    }
}

/// One unit of work: a check id and its parameters.
#[derive(Debug, Clone)]
enum Task {
    Pair(Suite, Series, usize, usize),
    TypeD(Suite, usize),
}

fn pair_params(s: Series, n: usize, d: usize) -> String {
    format!("type={s} rank={n} d={d}")
}

fn tasks_for(suite: Suite, max_rank: usize, include_e7: bool) -> Vec<Task> {
    match suite {
        Suite::All => Suite::ORDER
            .iter()
            .flat_map(|&s| tasks_for(s, max_rank, include_e7))
            .collect(),
        Suite::DetvarRelations | Suite::Intersectw | Suite::FibreDet => {
            (4..=max_rank).map(|n| Task::TypeD(suite, n)).collect()
        }
        _ => cominuscule_pairs(max_rank, include_e7)
            .into_iter()
            .map(|(s, n, d)| Task::Pair(suite, s, n, d))
            .collect(),
    }
}

pub fn verify_suite(suite: Suite, max_rank: usize, include_e7: bool) -> VerificationReport {
    let tasks = tasks_for(suite, max_rank, include_e7);
    let mut checks: Vec<Check> = tasks.par_iter().flat_map_iter(run_task).collect();
    checks.sort_by(|a, b| (&a.id, &a.params).cmp(&(&b.id, &b.params)));
    VerificationReport {
        suite: suite.name().to_string(),
        max_rank,
        include_e7,
        checks,
    }
}

fn timed(id: &str, params: String, f: impl FnOnce() -> Result<Option<String>>) -> Check {
    let start = Instant::now();
    let outcome = f();
    let elapsed_ms = start.elapsed().as_millis();
    let (pass, detail) = match outcome {
        Ok(None) => (true, None),
        Ok(Some(why)) => (false, Some(why)),
        Err(e) => (false, Some(e.to_string())),
    };
    Check {
        id: id.to_string(),
        params,
        pass,
        detail,
        elapsed_ms,
    }
}

fn require(ok: bool, why: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(why)
}

fn run_task(task: &Task) -> Vec<Check> {
    match *task {
        Task::Pair(suite, s, n, d) => {
            let params = pair_params(s, n, d);
            vec![timed(suite.name(), params, || {
                let ctx = build_context(s, n, d)?;
                pair_check(suite, &ctx)
            })]
        }
        Task::TypeD(suite, n) => type_d_checks(suite, n),
    }
}

fn finite_min_reps(ctx: &CominusculeContext) -> Result<Vec<AffineWeylElement>> {
    ctx.group()
        .enumerate_min_reps(ctx.d0_nodes(), ctx.j_nodes(), None)
}

fn pair_check(suite: Suite, ctx: &CominusculeContext) -> Result<Option<String>> {
    let g = ctx.group();
    let d = ctx.d();
    let n = ctx.rank();
    match suite {
        Suite::Wsontheta => {
            let first = g.act(ctx.wj(), &g.simple_root(d)) == *ctx.theta0();
            let second = g.act(ctx.wj(), &g.simple_root(0)) == g.delta().sub(&g.simple_root(d));
            Ok(require(first && second, || {
                format!("w_J(alpha_d) = theta_0: {first}; w_J(alpha_0) = theta_d: {second}")
            }))
        }
        Suite::FormInv => {
            let c = &g.affine_diagram().cartan;
            let iota = ctx.iota();
            let cartan = (0..=n).all(|i| (0..=n).all(|j| c[iota[i]][iota[j]] == c[i][j]));
            let form = (0..=n).all(|i| {
                (0..=n).all(|j| ctx.form_is_invariant(&g.simple_root(i), &g.simple_root(j)))
            });
            let delta = ctx.iota_root(&g.delta()) == g.delta();
            Ok(require(cartan && form && delta, || {
                format!("cartan {cartan}, form {form}, delta {delta}")
            }))
        }
        Suite::IotaConj => {
            for a in 0..=n {
                let s = g.generator(a)?;
                let conj = ctx.iota_elem(s);
                if conj != *g.generator(ctx.iota()[a])? {
                    return Ok(Some(format!("^iota s_{a} is not s_iota({a})")));
                }
                for b in 0..=n {
                    let r = g.simple_root(b);
                    if g.act(&conj, &r) != ctx.iota_root(&g.act(s, &ctx.iota_root(&r))) {
                        return Ok(Some(format!("conjugation fails for s_{a} on alpha_{b}")));
                    }
                }
            }
            Ok(None)
        }
        Suite::ResultQ => {
            let tau = ctx.tau_q();
            let by_reps = ctx.tau_q_from_words();
            let by_product = ctx.w0().mul(ctx.wj()).mul(ctx.wd()).mul(ctx.wj());
            let integral = ctx.q().is_integral();
            let length = g.length(tau) == 2 * ctx.dim_grassmannian();
            Ok(require(
                *tau == by_reps && *tau == by_product && integral && length,
                || "tau_q differs from w0^J w_d^J".to_string(),
            ))
        }
        Suite::VInWSd => {
            let set = |l: &_, j: &_| -> Result<BTreeSet<AffineWeylElement>> {
                Ok(g.enumerate_min_reps(l, j, None)?.into_iter().collect())
            };
            let first = set(ctx.d0_nodes(), ctx.j_nodes())? == set(ctx.d0_nodes(), ctx.dd_nodes())?;
            let second =
                set(ctx.dd_nodes(), ctx.j_nodes())? == set(ctx.dd_nodes(), ctx.d0_nodes())?;
            if !(first && second) {
                return Ok(Some(format!("set equalities: {first}, {second}")));
            }
            let wd0 = set(ctx.dd_nodes(), ctx.d0_nodes())?;
            let dim = ctx.dim_grassmannian();
            for w in finite_min_reps(ctx)? {
                let v = v_of(ctx, &w);
                if !wd0.contains(&v) {
                    return Ok(Some(format!(
                        "v not in W_d^0 for w = [{}]",
                        g.reduced_word(&w)
                    )));
                }
                let (lw, lv, lwv) = (g.length(&w), g.length(&v), g.length(&w.mul(&v)));
                if lwv != lw + lv || lwv != dim {
                    return Ok(Some(format!(
                        "lengths {lw} + {lv} vs {lwv} vs {dim} for w = [{}]",
                        g.reduced_word(&w)
                    )));
                }
            }
            Ok(None)
        }
        Suite::SbEquiv => {
            for u in g.enumerate_min_reps(ctx.dd_nodes(), ctx.d0_nodes(), None)? {
                let rep = is_smooth(ctx, &u)?;
                if !rep.criteria_agree() {
                    return Ok(Some(format!(
                        "criteria ({}, {}, {}, {}) for u = [{}]",
                        rep.c3,
                        rep.c4,
                        rep.c5,
                        rep.c6,
                        g.reduced_word(&u)
                    )));
                }
            }
            Ok(None)
        }
        Suite::InvolutionBij => {
            for w in finite_min_reps(ctx)? {
                if !shift_check(ctx, &w)? {
                    return Ok(Some(format!(
                        "shift bijection fails for w = [{}]",
                        g.reduced_word(&w)
                    )));
                }
            }
            Ok(None)
        }
        Suite::MainResult => {
            for w in finite_min_reps(ctx)? {
                let rep = closure_is_schubert(ctx, &w, false, false)?;
                let equal = rep.compactification_length == ctx.dim_flag();
                if rep.closure_is_schubert != rep.smooth.c6 || equal != rep.closure_is_schubert {
                    return Ok(Some(format!(
                        "predicate mismatch for w = [{}]",
                        g.reduced_word(&w)
                    )));
                }
            }
            Ok(None)
        }
        Suite::Nilp => {
            for gamma in admissible_gammas(ctx) {
                if !nilpotent_set_check(ctx, &gamma)?.holds() {
                    return Ok(Some(format!("Psi with gamma = {gamma} fails")));
                }
            }
            Ok(None)
        }
        _ => Err(Error::Internal(format!(
            "{} is not a per-pair suite",
            suite.name()
        ))),
    }
}

fn type_d_checks(suite: Suite, n: usize) -> Vec<Check> {
    let ctx = match build_context(Series::D, n, n) {
        Ok(ctx) => ctx,
        Err(e) => {
            return vec![timed(suite.name(), format!("n={n}"), || Err(e))];
        }
    };
    match suite {
        Suite::DetvarRelations => vec![timed(suite.name(), format!("n={n}"), || {
            let report = check_relations(n)?;
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.holds)
                .map(|c| format!("{} {:?}", c.name, c.params))
                .collect();
            Ok(require(failed.is_empty(), || failed.join("; ")))
        })],
        Suite::Intersectw => (0..=n_bar(n))
            .step_by(2)
            .map(|r| {
                timed(suite.name(), format!("n={n} r={r}"), || {
                    let g = ctx.group();
                    let nb = n_bar(n);
                    let wr = perm_to_element(&ctx, &w_r(n, r)?)?;
                    let dual = perm_to_element(&ctx, &w_r(n, nb - r)?)?;
                    let v = v_of(&ctx, &wr);
                    let target = ctx.iota_elem(&dual);
                    let rep = g.min_rep(&wr.mul(&v), ctx.d0_nodes())?;
                    let product = wr.mul(&v).mul(&ctx.iota_elem(&v_of(&ctx, &dual)).inverse());
                    Ok(require(rep == target && product == target, || {
                        format!("(w_r v_r)^D0 = [{}]", g.reduced_word(&rep))
                    }))
                })
            })
            .collect(),
        Suite::FibreDet => (0..=n_bar(n))
            .step_by(2)
            .map(|r| {
                timed(suite.name(), format!("n={n} r={r}"), || {
                    let fr = fibre_rank_in(&ctx, r)?;
                    Ok(require(
                        fr.rank == n_bar(n) - r && fr.fibre_max == [fr.witness_element.clone()],
                        || format!("rank {} for r = {r}", fr.rank),
                    ))
                })
            })
            .collect(),
        _ => vec![timed(suite.name(), format!("n={n}"), || {
            Err(Error::Internal(format!(
                "{} is not a type-D suite",
                suite.name()
            )))
        })],
    }
}
