//! Exact arithmetic in finite and affine Weyl groups.
//!
//! An element of the affine Weyl group is stored as a pair `(u, q)` standing
//! for `u ∘ tau_q`, where `u` is a finite Weyl element (an integer matrix on the
//! simple roots of the finite diagram) and `tau_q` is translation by a coroot
//! `q`. The translation is kept as its pairing vector `(<alpha_j, q>)_j`, which
//! determines `q` because the Cartan matrix is invertible and keeps the group
//! law in integers:
//!
//! ```text
//! (u, q) (u', q') = (u u', u'^{-1}(q) + q')
//! (u, q) (alpha + n delta) = u(alpha) + (n - <alpha, q>) delta
//! ```
//!
//! The affine generator is `s_0 = (s_theta, -theta^vee)`; [`WeylGroup::new`]
//! checks that this reproduces the reflection in `alpha_0` on every simple root.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{
    build_diagram, coweight_from_pairings, highest_root, positive_roots, CoweightVector,
    DynkinDiagram, NodeSet, RootVector, Series,
};

/// A word in the simple reflections, by node label.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {t:?} in word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeylWord)
    }
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Element of the finite Weyl group: column `j` of `mat` is the image of `alpha_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWeylElement {
    n: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl FiniteWeylElement {
    pub fn identity(n: usize) -> Self {
        FiniteWeylElement {
            n,
            mat: identity_matrix(n),
            inv: identity_matrix(n),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.mat.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.mat == identity_matrix(self.n)
    }

    /// Image of a vector given in finite simple-root coordinates.
    pub fn apply(&self, a: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.mat[i * n + j] * a[j]).sum())
            .collect()
    }

    pub fn compose(&self, other: &FiniteWeylElement) -> FiniteWeylElement {
        FiniteWeylElement {
            n: self.n,
            mat: mat_mul(&self.mat, &other.mat, self.n),
            inv: mat_mul(&other.inv, &self.inv, self.n),
        }
    }

    pub fn inverse(&self) -> FiniteWeylElement {
        FiniteWeylElement {
            n: self.n,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
        }
    }

    /// `u^{-1}` acting on a coweight given by its pairing vector: `p -> M^T p`.
    fn pull_back_pairings(&self, p: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|k| self.mat[k * n + j] * p[k]).sum())
            .collect()
    }
}

/// The affine Weyl element `u ∘ tau_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    u: FiniteWeylElement,
    /// `<alpha_j, q>` for each finite simple root.
    q: Vec<i64>,
}

impl AffineWeylElement {
    pub fn identity(n: usize) -> Self {
        AffineWeylElement {
            u: FiniteWeylElement::identity(n),
            q: vec![0; n],
        }
    }

    pub fn from_parts(u: FiniteWeylElement, q_pairings: Vec<i64>) -> Self {
        assert_eq!(u.n, q_pairings.len());
        AffineWeylElement { u, q: q_pairings }
    }

    /// Pure translation by the coweight with the given pairing vector.
    pub fn translation(q_pairings: Vec<i64>) -> Self {
        let n = q_pairings.len();
        AffineWeylElement {
            u: FiniteWeylElement::identity(n),
            q: q_pairings,
        }
    }

    pub fn finite_part(&self) -> &FiniteWeylElement {
        &self.u
    }

    pub fn translation_pairings(&self) -> &[i64] {
        &self.q
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_identity() && self.q.iter().all(|&x| x == 0)
    }

    /// Lies in the finite Weyl group `W_0` (trivial translation part).
    pub fn is_finite(&self) -> bool {
        self.q.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let mut q = other.u.pull_back_pairings(&self.q);
        q.iter_mut().zip(&other.q).for_each(|(a, b)| *a += b);
        AffineWeylElement {
            u: self.u.compose(&other.u),
            q,
        }
    }

    pub fn inverse(&self) -> AffineWeylElement {
        let inv = self.u.inverse();
        let q = inv
            .pull_back_pairings(&self.q)
            .into_iter()
            .map(|x| -x)
            .collect();
        AffineWeylElement { u: inv, q }
    }
}

impl std::ops::Mul for &AffineWeylElement {
    type Output = AffineWeylElement;

    fn mul(self, rhs: &AffineWeylElement) -> AffineWeylElement {
        AffineWeylElement::mul(self, rhs)
    }
}

/// The affine Weyl group of an untwisted affine diagram, with its finite
/// Weyl group embedded as the elements with trivial translation part.
///
/// Roots handed to the group are in affine coordinates (`0..=n`).
#[derive(Debug, Clone)]
pub struct WeylGroup {
    finite: DynkinDiagram,
    affine: DynkinDiagram,
    n: usize,
    theta: Vec<i64>,
    finite_roots: HashSet<Vec<i64>>,
    gens: Vec<AffineWeylElement>,
}

impl WeylGroup {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let finite = build_diagram(series, rank, false)?;
        let affine = build_diagram(series, rank, true)?;
        let n = rank;
        let theta = highest_root(&finite, &finite.all_nodes())?.0;
        let mut finite_roots = HashSet::new();
        for r in positive_roots(&finite)? {
            finite_roots.insert(r.neg().0);
            finite_roots.insert(r.0);
        }
        let mut gens = Vec::with_capacity(n + 1);
        // s_0 = (s_theta, -theta^vee); <alpha_j, theta^vee> = -C_aff[0][j]
        let theta_coroot: Vec<i64> = (0..n).map(|j| -affine.cartan[0][j + 1]).collect();
        let mut s_theta = identity_matrix(n);
        for k in 0..n {
            for j in 0..n {
                s_theta[k * n + j] -= theta[k] * theta_coroot[j];
            }
        }
        gens.push(AffineWeylElement {
            u: FiniteWeylElement {
                n,
                mat: s_theta.clone(),
                inv: s_theta,
            },
            q: theta_coroot.iter().map(|x| -x).collect(),
        });
        for i in 0..n {
            let mut m = identity_matrix(n);
            for j in 0..n {
                m[i * n + j] -= finite.cartan[i][j];
            }
            gens.push(AffineWeylElement {
                u: FiniteWeylElement {
                    n,
                    mat: m.clone(),
                    inv: m,
                },
                q: vec![0; n],
            });
        }
        let group = WeylGroup {
            finite,
            affine,
            n,
            theta,
            finite_roots,
            gens,
        };
        group.check_generators()?;
        Ok(group)
    }

    /// Every generator must act on simple roots as the reflection given by
    /// the affine Cartan matrix, and fix delta.
    fn check_generators(&self) -> Result<()> {
        let delta = self.delta();
        for i in 0..=self.n {
            for j in 0..=self.n {
                let a = RootVector::unit(self.n + 1, j);
                let got = self.act(&self.gens[i], &a);
                let want = self.affine.reflect(i, &a);
                if got != want {
                    return Err(Error::Internal(format!(
                        "s_{i}(alpha_{j}) = {got} but the affine reflection gives {want}"
                    )));
                }
            }
            if self.act(&self.gens[i], &delta) != delta {
                return Err(Error::Internal(format!("s_{i} does not fix delta")));
            }
            if !self.gens[i].mul(&self.gens[i]).is_identity() {
                return Err(Error::Internal(format!("s_{i} is not an involution")));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn series(&self) -> Series {
        self.finite.series
    }

    pub fn finite_diagram(&self) -> &DynkinDiagram {
        &self.finite
    }

    pub fn affine_diagram(&self) -> &DynkinDiagram {
        &self.affine
    }

    /// Highest root of the finite root system, in affine coordinates.
    pub fn theta(&self) -> RootVector {
        self.embed(&RootVector(self.theta.clone()))
    }

    pub fn delta(&self) -> RootVector {
        self.affine.delta().expect("affine diagram carries marks")
    }

    /// All node labels `0..=n`.
    pub fn nodes(&self) -> NodeSet {
        (0..=self.n).collect()
    }

    /// Finite node labels `1..=n`.
    pub fn finite_nodes(&self) -> NodeSet {
        (1..=self.n).collect()
    }

    /// Finite-coordinate root to affine coordinates.
    pub fn embed(&self, r: &RootVector) -> RootVector {
        let mut v = Vec::with_capacity(self.n + 1);
        v.push(0);
        v.extend_from_slice(&r.0);
        RootVector(v)
    }

    pub fn simple_root(&self, label: usize) -> RootVector {
        RootVector::unit(self.n + 1, label)
    }

    pub fn identity(&self) -> AffineWeylElement {
        AffineWeylElement::identity(self.n)
    }

    pub fn generator(&self, label: usize) -> Result<&AffineWeylElement> {
        self.gens.get(label).ok_or_else(|| Error::InvalidNode {
            node: label,
            valid: (0..=self.n).collect(),
        })
    }

    pub fn evaluate(&self, word: &WeylWord) -> Result<AffineWeylElement> {
        let mut w = self.identity();
        for &l in word.letters() {
            w = w.mul(self.generator(l)?);
        }
        Ok(w)
    }

    pub fn parse_element(&self, text: &str) -> Result<AffineWeylElement> {
        self.evaluate(&text.parse()?)
    }

    /// Splits an affine-coordinate vector as `(finite part, delta coefficient)`.
    fn decompose(&self, r: &RootVector) -> (Vec<i64>, i64) {
        let k = r.0[0];
        let fin = (0..self.n)
            .map(|j| r.0[j + 1] - k * self.theta[j])
            .collect();
        (fin, k)
    }

    fn compose_root(&self, fin: &[i64], k: i64) -> RootVector {
        let mut v = Vec::with_capacity(self.n + 1);
        v.push(k);
        v.extend((0..self.n).map(|j| fin[j] + k * self.theta[j]));
        RootVector(v)
    }

    /// `w(r)` for any vector `r` of the affine root lattice.
    pub fn act(&self, w: &AffineWeylElement, r: &RootVector) -> RootVector {
        let (fin, k) = self.decompose(r);
        let shift: i64 = fin.iter().zip(&w.q).map(|(a, p)| a * p).sum();
        let image = w.u.apply(&fin);
        self.compose_root(&image, k - shift)
    }

    /// `alpha + n delta` is a real root when `alpha` is a finite root.
    pub fn is_real_root(&self, r: &RootVector) -> bool {
        let (fin, _) = self.decompose(r);
        self.finite_roots.contains(&fin)
    }

    /// Real roots and nonzero multiples of delta.
    pub fn is_root(&self, r: &RootVector) -> bool {
        let (fin, k) = self.decompose(r);
        if fin.iter().all(|&x| x == 0) {
            k != 0
        } else {
            self.finite_roots.contains(&fin)
        }
    }

    /// Positivity of a real root `alpha + n delta`: `n > 0`, or `n = 0` and `alpha > 0`.
    pub fn is_positive_root(&self, r: &RootVector) -> bool {
        let (fin, k) = self.decompose(r);
        k > 0 || (k == 0 && fin.iter().all(|&x| x >= 0) && fin.iter().any(|&x| x > 0))
    }

    fn image_of_simple_is_negative(&self, w: &AffineWeylElement, label: usize) -> bool {
        !self.is_positive_root(&self.act(w, &self.simple_root(label)))
    }

    /// `w s_i < w`.
    pub fn is_right_descent(&self, w: &AffineWeylElement, label: usize) -> bool {
        self.image_of_simple_is_negative(w, label)
    }

    /// `s_i w < w`.
    pub fn is_left_descent(&self, w: &AffineWeylElement, label: usize) -> bool {
        self.image_of_simple_is_negative(&w.inverse(), label)
    }

    /// Reduced word by right descent-stripping, smallest label first.
    pub fn reduced_word(&self, w: &AffineWeylElement) -> WeylWord {
        let mut cur = w.clone();
        let mut stripped = Vec::new();
        while let Some(i) = (0..=self.n).find(|&i| self.is_right_descent(&cur, i)) {
            cur = cur.mul(&self.gens[i]);
            stripped.push(i);
        }
        stripped.reverse();
        WeylWord(stripped)
    }

    pub fn length(&self, w: &AffineWeylElement) -> usize {
        let mut cur = w.clone();
        let mut steps = 0;
        while let Some(i) = (0..=self.n).find(|&i| self.is_right_descent(&cur, i)) {
            cur = cur.mul(&self.gens[i]);
            steps += 1;
        }
        steps
    }

    /// Node labels occurring in a reduced word.
    pub fn support(&self, w: &AffineWeylElement) -> NodeSet {
        self.reduced_word(w).0.into_iter().collect()
    }

    /// Bruhat order via the lifting property: with `s` a left descent of `w`,
    /// `u <= w` iff `min(u, s u) <= s w`.
    pub fn bruhat_leq(&self, u: &AffineWeylElement, w: &AffineWeylElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            let w_inv = w.inverse();
            let Some(s) = (0..=self.n).find(|&i| self.image_of_simple_is_negative(&w_inv, i))
            else {
                return u.is_identity();
            };
            if self.is_left_descent(&u, s) {
                u = self.gens[s].mul(&u);
            }
            w = self.gens[s].mul(&w);
        }
    }

    /// `s ⋆ w`: `w` if `s w < w`, else `s w`.
    pub fn demazure_simple(&self, label: usize, w: &AffineWeylElement) -> AffineWeylElement {
        if self.is_left_descent(w, label) {
            w.clone()
        } else {
            self.gens[label].mul(w)
        }
    }

    /// `u ⋆ w`, folding a reduced word of `u` into `w` from the right.
    pub fn demazure(&self, u: &AffineWeylElement, w: &AffineWeylElement) -> AffineWeylElement {
        self.reduced_word(u)
            .0
            .iter()
            .rev()
            .fold(w.clone(), |acc, &s| self.demazure_simple(s, &acc))
    }

    fn check_nodes(&self, nodes: &NodeSet) -> Result<()> {
        match nodes.iter().find(|&&l| l > self.n) {
            Some(&bad) => Err(Error::InvalidNode {
                node: bad,
                valid: (0..=self.n).collect(),
            }),
            None => Ok(()),
        }
    }

    fn require_finite_type(&self, nodes: &NodeSet) -> Result<()> {
        self.check_nodes(nodes)?;
        if self.affine.is_finite_type(nodes)? {
            Ok(())
        } else {
            Err(Error::NotFiniteType(format!(
                "node set {:?} of the affine diagram {}{}",
                nodes, self.finite.series, self.n
            )))
        }
    }

    /// Whether `w(alpha_j) > 0` for every `j` in `set`.
    pub fn is_min_rep(&self, w: &AffineWeylElement, set: &NodeSet) -> bool {
        set.iter().all(|&j| !self.is_right_descent(w, j))
    }

    /// The minimal-length element of the coset `w W_J`.
    pub fn min_rep(&self, w: &AffineWeylElement, set: &NodeSet) -> Result<AffineWeylElement> {
        self.require_finite_type(set)?;
        if set.len() == self.n + 1 {
            return Err(Error::NotFiniteType("J must be a proper subset".into()));
        }
        let mut cur = w.clone();
        while let Some(&j) = set.iter().find(|&&j| self.is_right_descent(&cur, j)) {
            cur = cur.mul(&self.gens[j]);
        }
        Ok(cur)
    }

    /// Longest element of the parabolic subgroup `W_J`.
    pub fn longest_element(&self, set: &NodeSet) -> Result<AffineWeylElement> {
        self.require_finite_type(set)?;
        let mut cur = self.identity();
        while let Some(&j) = set.iter().find(|&&j| !self.is_right_descent(&cur, j)) {
            cur = cur.mul(&self.gens[j]);
        }
        Ok(cur)
    }

    /// `W_L ∩ W^J`, optionally restricted to elements Bruhat-below `bound`,
    /// sorted by length and then reduced word.
    pub fn enumerate_min_reps(
        &self,
        l_set: &NodeSet,
        j_set: &NodeSet,
        bound: Option<&AffineWeylElement>,
    ) -> Result<Vec<AffineWeylElement>> {
        self.require_finite_type(l_set)?;
        self.check_nodes(j_set)?;
        let start = self.identity();
        let mut seen: HashSet<AffineWeylElement> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &s in l_set {
                if self.is_left_descent(&u, s) {
                    continue;
                }
                let next = self.gens[s].mul(&u);
                if seen.contains(&next) || !self.is_min_rep(&next, j_set) {
                    continue;
                }
                // upward-closed complement: anything above a non-member stays out
                if let Some(b) = bound {
                    if !self.bruhat_leq(&next, b) {
                        continue;
                    }
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        let mut out: Vec<(usize, WeylWord, AffineWeylElement)> = seen
            .into_iter()
            .map(|e| (self.length(&e), self.reduced_word(&e), e))
            .collect();
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        Ok(out.into_iter().map(|t| t.2).collect())
    }

    /// All of `W_L` for a finite-type `L`.
    pub fn enumerate_parabolic(&self, l_set: &NodeSet) -> Result<Vec<AffineWeylElement>> {
        self.enumerate_min_reps(l_set, &NodeSet::new(), None)
    }

    /// `{alpha > 0 | w(alpha) < 0}` read off a reduced word `s_1 ... s_l`:
    /// the roots `s_l ... s_{k+1}(alpha_{i_k})`.
    pub fn inversion_set(&self, w: &AffineWeylElement) -> Vec<RootVector> {
        let word = self.reduced_word(w).0;
        let mut out = Vec::with_capacity(word.len());
        let mut suffix = self.identity();
        for &i in word.iter().rev() {
            out.push(self.act(&suffix, &self.simple_root(i)));
            suffix = suffix.mul(&self.gens[i]);
        }
        out.sort();
        out
    }

    /// The translation part as a coweight in the coroot basis.
    pub fn translation_coweight(&self, w: &AffineWeylElement) -> Result<CoweightVector> {
        coweight_from_pairings(&self.finite, &w.q)
    }

    /// Maximal elements of a finite set under the Bruhat order.
    pub fn bruhat_maximal(&self, elems: &[AffineWeylElement]) -> Vec<AffineWeylElement> {
        elems
            .iter()
            .filter(|x| !elems.iter().any(|y| y != *x && self.bruhat_leq(x, y)))
            .cloned()
            .collect()
    }

    /// Positive roots of the finite-type node set `L` in affine coordinates.
    pub fn positive_roots_of(&self, set: &NodeSet) -> Result<Vec<RootVector>> {
        self.require_finite_type(set)?;
        crate::rootsys::positive_roots_of(&self.affine, set)
    }
}
