//! Conormal varieties of Schubert varieties in a cominuscule Grassmannian,
//! at the level of Weyl group combinatorics.
//!
//! For `w` in `W_0^J` the element `v = ^iota(w0 w w_J)` lies in `W_d^0`, and the
//! closure of the image of the conormal variety is a Schubert variety exactly
//! when `v^{-1} ⋆ v w_J = v w_J`.

use std::collections::BTreeSet;

use crate::cominuscule::CominusculeContext;
use crate::error::{Error, Result};
use crate::rootsys::{NodeSet, RootVector};
use crate::weyl::AffineWeylElement;

/// The four combinatorial smoothness criteria for `X_J(u)`, `u` in `W_d^0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    /// `l(u^{-1} ⋆ u w_J) = l(u w_J)`.
    pub c3: bool,
    /// `(u w_J)^{-1}(alpha) < 0` for every simple `alpha` in `Supp(u)`.
    pub c4: bool,
    /// The inversion set of `u` is `Phi^+_L \ Phi^+_J` for `L = Supp(u)`.
    pub c5: bool,
    /// `u = w_L w_{L ∩ J}`.
    pub c6: bool,
    pub support_l: NodeSet,
    /// `(w_L, w_{L ∩ J})`.
    pub witness: (AffineWeylElement, AffineWeylElement),
}

impl SmoothnessReport {
    pub fn is_smooth(&self) -> bool {
        self.c6
    }

    pub fn criteria_agree(&self) -> bool {
        self.c3 == self.c6 && self.c4 == self.c6 && self.c5 == self.c6
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConormalReport {
    pub w: AffineWeylElement,
    pub v: AffineWeylElement,
    pub wv: AffineWeylElement,
    pub r: Vec<RootVector>,
    pub smooth: SmoothnessReport,
    pub closure_is_schubert: bool,
    /// `l(w ⋆ v^{-1} ⋆ v ⋆ w_J)`.
    pub compactification_length: usize,
    pub fibre_max: Option<Vec<AffineWeylElement>>,
    pub fibre_all: Option<Vec<AffineWeylElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreReport {
    pub maximal: Vec<AffineWeylElement>,
    pub all: Vec<AffineWeylElement>,
}

/// Outcome of the nilpotency check for `Psi ∪ {gamma}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyReport {
    pub closed: bool,
    pub u_plus: AffineWeylElement,
    pub u_minus: AffineWeylElement,
    /// `u_+` maps the set into positive roots.
    pub plus_ok: bool,
    /// `u_-` maps the set into negative roots.
    pub minus_ok: bool,
}

impl NilpotencyReport {
    pub fn holds(&self) -> bool {
        self.closed && self.plus_ok && self.minus_ok
    }
}

fn require_w0_j(ctx: &CominusculeContext, w: &AffineWeylElement) -> Result<()> {
    let g = ctx.group();
    if !w.is_finite() {
        return Err(Error::Precondition(format!(
            "w = [{}] is not in the finite Weyl group",
            g.reduced_word(w)
        )));
    }
    if let Some(&j) = ctx.j_nodes().iter().find(|&&j| g.is_right_descent(w, j)) {
        return Err(Error::Precondition(format!(
            "w = [{}] is not a minimal representative: w(alpha_{j}) < 0",
            g.reduced_word(w)
        )));
    }
    Ok(())
}

fn require_wd_0(ctx: &CominusculeContext, u: &AffineWeylElement) -> Result<()> {
    let g = ctx.group();
    if g.support(u).contains(&ctx.d()) {
        return Err(Error::Precondition(format!(
            "u = [{}] is not in W_d: its support contains node {}",
            g.reduced_word(u),
            ctx.d()
        )));
    }
    if let Some(&j) = ctx.d0_nodes().iter().find(|&&j| g.is_right_descent(u, j)) {
        return Err(Error::Precondition(format!(
            "u = [{}] is not a minimal representative for D0: u(alpha_{j}) < 0",
            g.reduced_word(u)
        )));
    }
    Ok(())
}

/// `v = ^iota(w0 w w_J)`.
pub fn v_of(ctx: &CominusculeContext, w: &AffineWeylElement) -> AffineWeylElement {
    ctx.iota_elem(&ctx.w0().mul(w).mul(ctx.wj()))
}

/// `R = {alpha in Phi_0^+ | alpha >= alpha_d, w(alpha) > 0}`, sorted.
pub fn conormal_roots(ctx: &CominusculeContext, w: &AffineWeylElement) -> Result<Vec<RootVector>> {
    require_w0_j(ctx, w)?;
    let g = ctx.group();
    Ok(ctx
        .roots_above_d()
        .into_iter()
        .filter(|a| g.is_positive_root(&g.act(w, a)))
        .collect())
}

/// `{alpha - delta | alpha in R}` equals `{beta in Phi_d^- | v(beta) > 0}`, and
/// `v(alpha - delta) = -iota w0 w(alpha)` for every `alpha` in `Phi_0^+ \ Phi_J`.
pub fn shift_check(ctx: &CominusculeContext, w: &AffineWeylElement) -> Result<bool> {
    let g = ctx.group();
    let r = conormal_roots(ctx, w)?;
    let v = v_of(ctx, w);
    let left: BTreeSet<RootVector> = ctx.shift_by_delta(&r).into_iter().collect();
    let right: BTreeSet<RootVector> = ctx
        .negative_roots_d()
        .into_iter()
        .filter(|b| g.is_positive_root(&g.act(&v, b)))
        .collect();
    let delta = g.delta();
    let w0w = ctx.w0().mul(w);
    let pointwise = ctx
        .roots_above_d()
        .iter()
        .all(|a| g.act(&v, &a.sub(&delta)) == ctx.iota_root(&g.act(&w0w, a)).neg());
    Ok(left == right && pointwise && left.len() == g.length(&v))
}

/// Evaluates criteria (3)–(6) for `u` in `W_d^0`.
pub fn is_smooth(ctx: &CominusculeContext, u: &AffineWeylElement) -> Result<SmoothnessReport> {
    require_wd_0(ctx, u)?;
    let g = ctx.group();
    let l_set = g.support(u);
    let l_cap_j: NodeSet = l_set.intersection(ctx.j_nodes()).copied().collect();
    let uwj = u.mul(ctx.wj());

    let c3 = g.length(&g.demazure(&u.inverse(), &uwj)) == g.length(&uwj);

    let uwj_inv = uwj.inverse();
    let c4 = l_set
        .iter()
        .all(|&a| !g.is_positive_root(&g.act(&uwj_inv, &g.simple_root(a))));

    let inversions: BTreeSet<RootVector> = g.inversion_set(u).into_iter().collect();
    let expected: BTreeSet<RootVector> = g
        .positive_roots_of(&l_set)?
        .into_iter()
        .filter(|r| {
            r.support_positions()
                .iter()
                .any(|p| !ctx.j_nodes().contains(p))
        })
        .collect();
    let c5 = inversions == expected;

    let w_l = g.longest_element(&l_set)?;
    let w_lj = g.longest_element(&l_cap_j)?;
    let c6 = *u == w_l.mul(&w_lj);

    Ok(SmoothnessReport {
        c3,
        c4,
        c5,
        c6,
        support_l: l_set,
        witness: (w_l, w_lj),
    })
}

/// Computes `v`, `wv`, `R`, the smoothness of `v` and the Schubert predicate;
/// with `fibre` set and the predicate true, also the fibre index set.
pub fn closure_is_schubert(
    ctx: &CominusculeContext,
    w: &AffineWeylElement,
    fibre: bool,
    fibre_all: bool,
) -> Result<ConormalReport> {
    let g = ctx.group();
    let r = conormal_roots(ctx, w)?;
    let v = v_of(ctx, w);
    let wv = w.mul(&v);
    let smooth = is_smooth(ctx, &v)?;
    let vwj = v.mul(ctx.wj());
    let predicate = g.demazure(&v.inverse(), &vwj) == vwj;
    if predicate != smooth.c6 {
        return Err(Error::Internal(format!(
            "Schubert predicate {predicate} disagrees with criterion (6) {} for w = [{}]",
            smooth.c6,
            g.reduced_word(w)
        )));
    }
    let total = g.demazure(w, &g.demazure(&v.inverse(), &g.demazure(&v, ctx.wj())));
    let compactification_length = g.length(&total);
    let dim_flag = ctx.dim_flag();
    if compactification_length < dim_flag || (compactification_length == dim_flag) != predicate {
        return Err(Error::Internal(format!(
            "length bookkeeping fails for w = [{}]: {compactification_length} vs {dim_flag}",
            g.reduced_word(w)
        )));
    }
    let (fibre_max, fibre_set) = if fibre && predicate {
        let rep = fibre_maximal(ctx, w)?;
        (Some(rep.maximal), fibre_all.then_some(rep.all))
    } else {
        (None, None)
    };
    Ok(ConormalReport {
        w: w.clone(),
        v,
        wv,
        r,
        smooth,
        closure_is_schubert: predicate,
        compactification_length,
        fibre_max,
        fibre_all: fibre_set,
    })
}

/// `S = {u in W_d^0 | u <= (wv)^{D0}}` and its Bruhat-maximal elements.
pub fn fibre_maximal(ctx: &CominusculeContext, w: &AffineWeylElement) -> Result<FibreReport> {
    let g = ctx.group();
    require_w0_j(ctx, w)?;
    let v = v_of(ctx, w);
    let smooth = is_smooth(ctx, &v)?;
    if !smooth.c6 {
        return Err(Error::Precondition(format!(
            "X_J(w0 w w_J) is not smooth for w = [{}]; the fibre decomposition needs smoothness",
            g.reduced_word(w)
        )));
    }
    let bound = g.min_rep(&w.mul(&v), ctx.d0_nodes())?;
    let all = g.enumerate_min_reps(ctx.dd_nodes(), ctx.d0_nodes(), Some(&bound))?;
    let maximal = g.bruhat_maximal(&all);
    Ok(FibreReport { maximal, all })
}

/// Closure of `Psi ∪ {gamma}` under root addition and the sign conditions
/// for the elements `u_+` and `u_-`, for `gamma` a simple root of `D0` or the
/// negative of a simple root of `J`.
pub fn nilpotent_set_check(
    ctx: &CominusculeContext,
    gamma: &RootVector,
) -> Result<NilpotencyReport> {
    let g = ctx.group();
    let size = g.rank() + 1;
    let simple = |l: usize| RootVector::unit(size, l);
    let (u_plus, u_minus) = if *gamma == simple(ctx.d()) {
        (ctx.wd().clone(), g.generator(ctx.d())?.clone())
    } else if let Some(&l) = ctx.j_nodes().iter().find(|&&l| *gamma == simple(l)) {
        let s = g.generator(l)?.clone();
        (ctx.wd().mul(&s), s)
    } else if ctx.j_nodes().iter().any(|&l| *gamma == simple(l).neg()) {
        (ctx.wd().clone(), g.identity())
    } else {
        return Err(Error::Precondition(format!(
            "gamma = {gamma} is neither a simple root of D0 nor the negative of one in J"
        )));
    };
    let mut set = ctx.psi();
    set.push(gamma.clone());
    let members: BTreeSet<&RootVector> = set.iter().collect();
    let closed = set.iter().enumerate().all(|(i, a)| {
        set[i..].iter().all(|b| {
            let sum = a.add(b);
            !g.is_root(&sum) || members.contains(&sum)
        })
    });
    let plus_ok = set.iter().all(|a| g.is_positive_root(&g.act(&u_plus, a)));
    let minus_ok = set.iter().all(|a| !g.is_positive_root(&g.act(&u_minus, a)));
    Ok(NilpotencyReport {
        closed,
        u_plus,
        u_minus,
        plus_ok,
        minus_ok,
    })
}

/// The admissible `gamma`: simple roots of `D0` and negatives of simple roots of `J`.
pub fn admissible_gammas(ctx: &CominusculeContext) -> Vec<RootVector> {
    let size = ctx.rank() + 1;
    let mut out: Vec<RootVector> = ctx
        .d0_nodes()
        .iter()
        .map(|&l| RootVector::unit(size, l))
        .collect();
    out.extend(
        ctx.j_nodes()
            .iter()
            .map(|&l| RootVector::unit(size, l).neg()),
    );
    out
}
