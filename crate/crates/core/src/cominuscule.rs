//! The cominuscule context: a finite diagram `D0` with a cominuscule node `d`,
//! its affine extension `D`, the diagram involution `iota` and the translation
//! `tau_q` for `q = w0(varpi_d^vee) - varpi_d^vee`.

use crate::error::{Error, Result};
use crate::rootsys::{
    coweight_from_pairings, fundamental_coweight, inner_form, CoweightVector, NodeSet, RootVector,
    Series,
};
use crate::weyl::{AffineWeylElement, WeylGroup, WeylWord};

/// A validated cominuscule pair together with the data derived from it.
#[derive(Debug, Clone)]
pub struct CominusculeContext {
    group: WeylGroup,
    d: usize,
    d0: NodeSet,
    j: NodeSet,
    dd: NodeSet,
    iota: Vec<usize>,
    w0: AffineWeylElement,
    wj: AffineWeylElement,
    wd: AffineWeylElement,
    theta0: RootVector,
    thetad: RootVector,
    q: CoweightVector,
    tauq: AffineWeylElement,
}

/// Builds the context for `(series, rank)` and node `d`, checking every
/// structural identity the later modules rely on.
pub fn build_context(series: Series, rank: usize, d: usize) -> Result<CominusculeContext> {
    let group = WeylGroup::new(series, rank)?;
    if !(1..=rank).contains(&d) {
        return Err(Error::InvalidNode {
            node: d,
            valid: (1..=rank).collect(),
        });
    }
    let mark = group.affine_diagram().marks.as_ref().expect("affine marks")[d];
    if mark != 1 {
        return Err(Error::NotCominuscule {
            node: d,
            coefficient: mark,
        });
    }
    let d0 = group.finite_nodes();
    let mut j = d0.clone();
    j.remove(&d);
    let mut dd = group.nodes();
    dd.remove(&d);

    let w0 = group.longest_element(&d0)?;
    let wj = group.longest_element(&j)?;
    let wd = group.longest_element(&dd)?;
    let theta0 = group.theta();
    let thetad = group.delta().sub(&group.simple_root(d));

    let iota = involution(&group, d, &j, &wj)?;
    let q = translation_coweight(&group, d, &w0)?;
    let tauq = AffineWeylElement::translation(q_pairings(&group, &q)?);

    let ctx = CominusculeContext {
        group,
        d,
        d0,
        j,
        dd,
        iota,
        w0,
        wj,
        wd,
        theta0,
        thetad,
        q,
        tauq,
    };
    ctx.validate()?;
    Ok(ctx)
}

/// `iota(alpha_0) = alpha_d`, `iota(alpha_d) = alpha_0`, `iota = -w_J` on `J`.
fn involution(
    group: &WeylGroup,
    d: usize,
    j: &NodeSet,
    wj: &AffineWeylElement,
) -> Result<Vec<usize>> {
    let size = group.rank() + 1;
    let mut iota = vec![usize::MAX; size];
    iota[0] = d;
    iota[d] = 0;
    for &a in j {
        let image = group.act(wj, &group.simple_root(a)).neg();
        let target = j
            .iter()
            .copied()
            .find(|&b| image == RootVector::unit(size, b))
            .ok_or_else(|| {
                Error::Internal(format!(
                    "-w_J(alpha_{a}) = {image} is not a simple root of J"
                ))
            })?;
        iota[a] = target;
    }
    Ok(iota)
}

/// `q = w0(varpi_d^vee) - varpi_d^vee`, using `<alpha_j, w0 x> = <w0 alpha_j, x>`.
fn translation_coweight(
    group: &WeylGroup,
    d: usize,
    w0: &AffineWeylElement,
) -> Result<CoweightVector> {
    let finite = group.finite_diagram();
    let varpi = fundamental_coweight(finite, d)?;
    let pairings: Vec<i64> = (1..=group.rank())
        .map(|a| group.act(w0, &group.simple_root(a)).0[d])
        .collect();
    let w0_varpi = coweight_from_pairings(finite, &pairings)?;
    let q = w0_varpi.sub(&varpi);
    if !q.is_integral() {
        return Err(Error::Internal(format!(
            "q = {:?} is not in the coroot lattice",
            q.coords
        )));
    }
    Ok(q)
}

fn q_pairings(group: &WeylGroup, q: &CoweightVector) -> Result<Vec<i64>> {
    q.pairing_vector(group.finite_diagram())
        .into_iter()
        .map(|p| {
            p.is_integer()
                .then(|| p.to_integer())
                .ok_or_else(|| Error::Internal("non-integral pairing with q".into()))
        })
        .collect()
}

impl CominusculeContext {
    fn validate(&self) -> Result<()> {
        let g = &self.group;
        let size = g.rank() + 1;
        let fail = |what: String| Err(Error::Internal(what));
        for i in 0..size {
            if self.iota[self.iota[i]] != i {
                return fail(format!("iota is not an involution at node {i}"));
            }
            for j in 0..size {
                let c = &g.affine_diagram().cartan;
                if c[self.iota[i]][self.iota[j]] != c[i][j] {
                    return fail(format!("iota does not preserve C[{i}][{j}]"));
                }
            }
        }
        if self.iota_root(&g.delta()) != g.delta() {
            return fail("iota does not fix delta".into());
        }
        if g.act(&self.wj, &g.simple_root(self.d)) != self.theta0 {
            return fail("w_J(alpha_d) differs from theta_0".into());
        }
        if g.act(&self.wj, &g.simple_root(0)) != self.thetad {
            return fail("w_J(alpha_0) differs from theta_d".into());
        }
        let (by_word, by_product) = self.tau_q_by_words()?;
        if by_word != self.tauq || by_product != self.tauq {
            return fail(format!(
                "translation by q differs from w0^J w_d^J for {}{} node {}",
                g.series(),
                g.rank(),
                self.d
            ));
        }
        Ok(())
    }

    /// `w0^J w_d^J` and `w0 w_J w_d w_J`.
    fn tau_q_by_words(&self) -> Result<(AffineWeylElement, AffineWeylElement)> {
        let g = &self.group;
        let by_reps = g
            .min_rep(&self.w0, &self.j)?
            .mul(&g.min_rep(&self.wd, &self.j)?);
        let by_product = self.w0.mul(&self.wj).mul(&self.wd).mul(&self.wj);
        Ok((by_reps, by_product))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn series(&self) -> Series {
        self.group.series()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// The cominuscule node.
    pub fn d(&self) -> usize {
        self.d
    }

    /// `D0 = {1..n}`.
    pub fn d0_nodes(&self) -> &NodeSet {
        &self.d0
    }

    /// `J = D0 \ {d}`.
    pub fn j_nodes(&self) -> &NodeSet {
        &self.j
    }

    /// `D_d = D \ {d}`.
    pub fn dd_nodes(&self) -> &NodeSet {
        &self.dd
    }

    /// The node permutation: `iota()[i]` is the label of `iota(alpha_i)`.
    pub fn iota(&self) -> &[usize] {
        &self.iota
    }

    pub fn w0(&self) -> &AffineWeylElement {
        &self.w0
    }

    pub fn wj(&self) -> &AffineWeylElement {
        &self.wj
    }

    pub fn wd(&self) -> &AffineWeylElement {
        &self.wd
    }

    pub fn theta0(&self) -> &RootVector {
        &self.theta0
    }

    pub fn thetad(&self) -> &RootVector {
        &self.thetad
    }

    pub fn q(&self) -> &CoweightVector {
        &self.q
    }

    /// `dim G/P = |Phi_0^+ \ Phi_J|`.
    pub fn dim_grassmannian(&self) -> usize {
        self.group.length(&self.w0) - self.group.length(&self.wj)
    }

    /// `dim G/B = |Phi_0^+|`.
    pub fn dim_flag(&self) -> usize {
        self.group.length(&self.w0)
    }

    /// `iota` as a linear map of the affine root lattice.
    pub fn iota_root(&self, r: &RootVector) -> RootVector {
        let mut out = vec![0; r.len()];
        for (i, &c) in r.0.iter().enumerate() {
            out[self.iota[i]] = c;
        }
        RootVector(out)
    }

    pub fn iota_word(&self, w: &WeylWord) -> WeylWord {
        WeylWord(w.0.iter().map(|&l| self.iota[l]).collect())
    }

    /// `^iota w`, obtained by relabelling a reduced word of `w` through `iota`.
    pub fn iota_elem(&self, w: &AffineWeylElement) -> AffineWeylElement {
        let word = self.iota_word(&self.group.reduced_word(w));
        self.group
            .evaluate(&word)
            .expect("iota maps nodes to nodes")
    }

    /// `(iota(a) | iota(b))` and `(a | b)` agree on the given pair.
    pub fn form_is_invariant(&self, a: &RootVector, b: &RootVector) -> bool {
        let diagram = self.group.affine_diagram();
        inner_form(diagram, &self.iota_root(a), &self.iota_root(b)) == inner_form(diagram, a, b)
    }

    /// Translation by `q`.
    pub fn tau_q(&self) -> &AffineWeylElement {
        &self.tauq
    }

    /// `w0^J w_d^J`, computed from longest elements and minimal representatives.
    pub fn tau_q_from_words(&self) -> AffineWeylElement {
        self.tau_q_by_words()
            .expect("J is a proper finite-type subset")
            .0
    }

    /// Finite positive roots `alpha >= alpha_d`, i.e. `Phi_0^+ \ Phi_J`, in affine coordinates.
    pub fn roots_above_d(&self) -> Vec<RootVector> {
        self.group
            .positive_roots_of(&self.d0)
            .expect("D0 is of finite type")
            .into_iter()
            .filter(|r| r.0[self.d] >= 1)
            .collect()
    }

    /// `Phi_d^-`: negative roots of the finite root system on `D_d`.
    pub fn negative_roots_d(&self) -> Vec<RootVector> {
        self.group
            .positive_roots_of(&self.dd)
            .expect("D_d is of finite type")
            .into_iter()
            .map(|r| r.neg())
            .collect()
    }

    /// `Psi = Phi_d^- \ Phi_J`: the negative roots of `D_d` involving `alpha_0`.
    pub fn psi(&self) -> Vec<RootVector> {
        self.negative_roots_d()
            .into_iter()
            .filter(|r| r.0[0] != 0)
            .collect()
    }

    /// `alpha -> alpha - delta` applied to `Phi_0^+ \ Phi_J`.
    pub fn shift_by_delta(&self, roots: &[RootVector]) -> Vec<RootVector> {
        let delta = self.group.delta();
        roots.iter().map(|r| r.sub(&delta)).collect()
    }
}

/// Every `(series, rank, node)` with a cominuscule node and `rank <= max_rank`.
/// `E7` is listed only when `include_e7` is set.
pub fn cominuscule_pairs(max_rank: usize, include_e7: bool) -> Vec<(Series, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for d in 1..=n {
            out.push((Series::A, n, d));
        }
    }
    for n in 2..=max_rank {
        out.push((Series::B, n, 1));
    }
    for n in 2..=max_rank {
        out.push((Series::C, n, n));
    }
    for n in 4..=max_rank {
        out.extend([(Series::D, n, 1), (Series::D, n, n - 1), (Series::D, n, n)]);
    }
    if max_rank >= 6 {
        out.extend([(Series::E, 6, 1), (Series::E, 6, 6)]);
    }
    if max_rank >= 7 && include_e7 {
        out.push((Series::E, 7, 7));
    }
    out
}
