//! Type `D_n` in its signed-permutation model and the skew-symmetric
//! determinantal varieties.
//!
//! `W(D_n)` sits in `S_{2n}` as the even permutations commuting with
//! `mu(i) = 2n + 1 - i`, through
//!
//! ```text
//! s_i -> r_i r_{2n-i}            (i < n)
//! s_n -> r_n r_{n-1} r_{n+1} r_n
//! ```
//!
//! with `r_i = (i i+1)`. Products compose as maps, `(xy)(k) = x(y(k))`, and an
//! element is written by its first `n` values. Unrolling `x_i = s_{i+1} s_i x_{i+1}`
//! gives the closed form
//!
//! ```text
//! x_i = [1, ..., i-1, i+2, ..., n, 2n-i, 2n-i+1]
//! ```

use std::fmt;
use std::str::FromStr;

use crate::cominuscule::{build_context, CominusculeContext};
use crate::conormal::{fibre_maximal, is_smooth, v_of};
use crate::error::{Error, Result};
use crate::rootsys::{NodeSet, Series};
use crate::weyl::{AffineWeylElement, WeylWord};

/// An element of `W(D_n)` as `[w(1), ..., w(n)]` with values in `1..=2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    n: usize,
    values: Vec<usize>,
}

impl SignedPermutation {
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != n {
            return Err(Error::InvalidSignedPermutation(format!(
                "expected {n} values, got {}",
                values.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &v in &values {
            if v == 0 || v > 2 * n {
                return Err(Error::InvalidSignedPermutation(format!(
                    "value {v} outside 1..={}",
                    2 * n
                )));
            }
            let mirror = 2 * n + 1 - v;
            if seen[v] || seen[mirror] {
                return Err(Error::InvalidSignedPermutation(format!(
                    "value {v} or its mirror {mirror} occurs twice"
                )));
            }
            seen[v] = true;
        }
        let negatives = values.iter().filter(|&&v| v > n).count();
        if negatives % 2 != 0 {
            return Err(Error::InvalidSignedPermutation(format!(
                "{negatives} values exceed {n}; type D needs an even number"
            )));
        }
        Ok(SignedPermutation { n, values })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            n,
            values: (1..=n).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The full permutation of `1..=2n`, index `k - 1` holding `w(k)`.
    pub fn full(&self) -> Vec<usize> {
        let m = 2 * self.n + 1;
        let mut out = self.values.clone();
        out.extend(self.values.iter().rev().map(|&v| m - v));
        out
    }

    fn from_full(n: usize, full: &[usize]) -> Self {
        SignedPermutation {
            n,
            values: full[..n].to_vec(),
        }
    }

    /// `(self other)(k) = self(other(k))`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let a = self.full();
        let b = other.full();
        let c: Vec<usize> = b.iter().map(|&k| a[k - 1]).collect();
        SignedPermutation::from_full(self.n, &c)
    }

    pub fn inverse(&self) -> SignedPermutation {
        let a = self.full();
        let mut inv = vec![0; a.len()];
        for (i, &v) in a.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        SignedPermutation::from_full(self.n, &inv)
    }

    /// `w(k)` as a signed index: `+k` for `k <= n`, `-(2n + 1 - k)` otherwise.
    fn signed(&self, k: usize) -> i64 {
        let v = self.full()[k - 1];
        if v <= self.n {
            v as i64
        } else {
            -((2 * self.n + 1 - v) as i64)
        }
    }

    /// `w(alpha_i)` is negative, with `alpha_i = e_i - e_{i+1}` and `alpha_n = e_{n-1} + e_n`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let (a, b) = if i < self.n {
            (self.signed(i), -self.signed(i + 1))
        } else {
            (self.signed(self.n - 1), self.signed(self.n))
        };
        !signed_pair_is_positive(a, b)
    }

    /// Number of positive roots `e_a ± e_b` (`a < b`) sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.n;
        let mut count = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                let (x, y) = (self.signed(a), self.signed(b));
                if !signed_pair_is_positive(x, -y) {
                    count += 1;
                }
                if !signed_pair_is_positive(x, y) {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Whether `sgn(a) e_|a| + sgn(b) e_|b|` (with `|a| != |b|`) is a positive root:
/// the coefficient on the smaller index must be `+1`.
fn signed_pair_is_positive(a: i64, b: i64) -> bool {
    if a.abs() < b.abs() {
        a > 0
    } else {
        b > 0
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"[3,4,7,8]"`; the rank is the number of entries.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got {s:?}")))?;
        let values = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(values.len(), values)
    }
}

fn transposition(full: &mut [usize], i: usize) {
    // r_i applied after: (r_i w)(k) = r_i(w(k)), i.e. swap the values i and i+1
    for v in full.iter_mut() {
        if *v == i {
            *v = i + 1;
        } else if *v == i + 1 {
            *v = i;
        }
    }
}

fn check_rank(n: usize) -> Result<()> {
    Series::D.validate_rank(n)
}

/// The image of a word over `D_n` in the signed-permutation model.
pub fn word_to_perm(n: usize, word: &WeylWord) -> Result<SignedPermutation> {
    check_rank(n)?;
    let mut full: Vec<usize> = (1..=2 * n).collect();
    // w = s_{a_1} ... s_{a_k}: apply the transpositions of s_{a_k} first
    for &letter in word.letters().iter().rev() {
        if letter == 0 || letter > n {
            return Err(Error::InvalidNode {
                node: letter,
                valid: (1..=n).collect(),
            });
        }
        let ts: Vec<usize> = if letter < n {
            vec![letter, 2 * n - letter]
        } else {
            vec![n, n - 1, n + 1, n]
        };
        for &t in ts.iter().rev() {
            transposition(&mut full, t);
        }
    }
    Ok(SignedPermutation::from_full(n, &full))
}

/// A reduced word by right descent-stripping, smallest index first.
pub fn perm_to_word(p: &SignedPermutation) -> Result<WeylWord> {
    let n = p.rank();
    check_rank(n)?;
    let mut cur = SignedPermutation::new(n, p.values().to_vec())?;
    let gens: Vec<SignedPermutation> = (1..=n)
        .map(|i| word_to_perm(n, &WeylWord(vec![i])))
        .collect::<Result<_>>()?;
    let mut stripped = Vec::new();
    while let Some(i) = (1..=n).find(|&i| cur.has_right_descent(i)) {
        cur = cur.compose(&gens[i - 1]);
        stripped.push(i);
    }
    stripped.reverse();
    Ok(WeylWord(stripped))
}

/// `n` for even `n`, `n - 1` for odd `n`.
pub fn n_bar(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n
    } else {
        n - 1
    }
}

fn check_r(n: usize, r: usize) -> Result<()> {
    check_rank(n)?;
    if !r.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "r = {r} is odd; skew-symmetric matrices have even rank"
        )));
    }
    if r > n_bar(n) {
        return Err(Error::Precondition(format!(
            "r = {r} exceeds the maximal rank {} of a skew-symmetric {n}x{n} matrix",
            n_bar(n)
        )));
    }
    Ok(())
}

/// The word of `x_i`: `x_{n-1} = s_n` and `x_i = s_{i+1} s_i x_{i+1}`.
pub fn x_word(n: usize, i: usize) -> Result<WeylWord> {
    check_rank(n)?;
    if i == 0 || i >= n {
        return Err(Error::Precondition(format!(
            "x_i needs 1 <= i <= {}, got i = {i}",
            n - 1
        )));
    }
    let mut letters = vec![n];
    for k in (i..n - 1).rev() {
        let mut next = vec![k + 1, k];
        next.extend(letters);
        letters = next;
    }
    Ok(WeylWord(letters))
}

pub fn x_chain(n: usize, i: usize) -> Result<SignedPermutation> {
    word_to_perm(n, &x_word(n, i)?)
}

/// The closed form of `x_i`.
pub fn x_closed_form(n: usize, i: usize) -> Result<SignedPermutation> {
    let mut values: Vec<usize> = (1..i).collect();
    values.extend(i + 2..=n);
    values.extend([2 * n - i, 2 * n - i + 1]);
    SignedPermutation::new(n, values)
}

/// Concatenated word of `x_a x_{a-2} ... x_b` (empty when `a < b`).
fn x_product_word(n: usize, a: usize, b: usize) -> Result<WeylWord> {
    let mut letters = Vec::new();
    let mut k = a;
    while k >= b && k >= 1 {
        letters.extend(x_word(n, k)?.0);
        if k < 2 {
            break;
        }
        k -= 2;
    }
    Ok(WeylWord(letters))
}

/// `w_r = [r+1, ..., n, 2n-r+1, ..., 2n]`, the element whose opposite cell
/// is the rank-`r` locus of skew-symmetric `n x n` matrices.
pub fn w_r(n: usize, r: usize) -> Result<SignedPermutation> {
    check_r(n, r)?;
    let mut values: Vec<usize> = (r + 1..=n).collect();
    values.extend(2 * n - r + 1..=2 * n);
    let p = SignedPermutation::new(n, values)?;
    // w_r is a minimal representative for J = {1..n-1}
    if let Some(i) = (1..n).find(|&i| p.has_right_descent(i)) {
        return Err(Error::Internal(format!("w_{r} has a descent at {i} in J")));
    }
    if r > 0 && word_to_perm(n, &x_product_word(n, r - 1, 1)?)? != p {
        return Err(Error::Internal(format!(
            "w_{r} differs from x_{} ... x_1",
            r - 1
        )));
    }
    Ok(p)
}

/// `w0 = [2n, ..., n+2, nbar+1]`.
pub fn w0_perm(n: usize) -> Result<SignedPermutation> {
    check_rank(n)?;
    let mut values: Vec<usize> = (n + 2..=2 * n).rev().collect();
    values.push(n_bar(n) + 1);
    SignedPermutation::new(n, values)
}

/// `w_J = [n, ..., 1]`.
pub fn wj_perm(n: usize) -> Result<SignedPermutation> {
    check_rank(n)?;
    SignedPermutation::new(n, (1..=n).rev().collect())
}

/// `[1, ..., r, nbar+1, n+2, ..., 2n-r]`.
pub fn wlj_perm(n: usize, r: usize) -> Result<SignedPermutation> {
    check_r(n, r)?;
    let mut values: Vec<usize> = (1..=r).collect();
    values.push(n_bar(n) + 1);
    values.extend(n + 2..=2 * n - r);
    // for even n and r = n the list has n + 1 entries; L is empty and the element is e
    values.truncate(n);
    SignedPermutation::new(n, values)
}

/// One named identity with its parameters and outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub params: Vec<(&'static str, usize)>,
    pub holds: bool,
}

/// Results of [`check_relations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationsReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Translates a signed permutation into the root-matrix model.
pub fn perm_to_element(
    ctx: &CominusculeContext,
    p: &SignedPermutation,
) -> Result<AffineWeylElement> {
    ctx.group().evaluate(&perm_to_word(p)?)
}

fn type_d_context(n: usize) -> Result<CominusculeContext> {
    build_context(Series::D, n, n)
}

/// Checks, for `D_n`: the braid relations in `S_{2n}`, the closed form of
/// `x_i`, both exchange relations for the `x_i` (the second in its single and
/// chained forms), the factorizations of `w_r` and `w0 w_r w_J`, and the
/// one-line form of `w0 w_r w_J`.
pub fn check_relations(n: usize) -> Result<RelationsReport> {
    check_rank(n)?;
    let ctx = type_d_context(n)?;
    let g = ctx.group();
    let mut checks = Vec::new();
    let perm = |letters: &[usize]| word_to_perm(n, &WeylWord(letters.to_vec()));
    let cartan = &g.finite_diagram().cartan;

    for i in 1..=n {
        for j in i..=n {
            let m = if i == j {
                1
            } else {
                match cartan[i - 1][j - 1] {
                    0 => 2,
                    _ => 3,
                }
            };
            let mut alternating = Vec::new();
            for k in 0..2 * m {
                alternating.push(if k % 2 == 0 { i } else { j });
            }
            checks.push(RelationCheck {
                name: "braid",
                params: vec![("i", i), ("j", j)],
                holds: perm(&alternating)?.values == SignedPermutation::identity(n).values,
            });
        }
    }

    for i in 1..n {
        checks.push(RelationCheck {
            name: "x-closed-form",
            params: vec![("i", i)],
            holds: x_chain(n, i)? == x_closed_form(n, i)?
                && x_word(n, i)?.len() == 2 * (n - 1 - i) + 1,
        });
    }

    let x_elem = |i: usize| -> Result<AffineWeylElement> { g.evaluate(&x_word(n, i)?) };
    for i in 1..=n.saturating_sub(4) {
        let lhs = perm(&[i + 2, i + 3])?.compose(&x_chain(n, i)?);
        let rhs = x_chain(n, i)?.compose(&perm(&[i, i + 1])?);
        let lhs_m = g.evaluate(&WeylWord(vec![i + 2, i + 3]))?.mul(&x_elem(i)?);
        let rhs_m = x_elem(i)?.mul(&g.evaluate(&WeylWord(vec![i, i + 1]))?);
        checks.push(RelationCheck {
            name: "rel1",
            params: vec![("i", i)],
            holds: lhs == rhs && lhs_m == rhs_m,
        });
    }

    let nb = n_bar(n);
    let ix = |i: usize| -> Result<AffineWeylElement> { Ok(ctx.iota_elem(&x_elem(i)?)) };
    for k in 3..nb {
        let lhs = ix(nb - k)?.mul(&x_elem(k)?);
        let rhs = x_elem(k - 2)?.mul(&ix(nb - k + 2)?);
        checks.push(RelationCheck {
            name: "rel2",
            params: vec![("k", k)],
            holds: lhs == rhs,
        });
        for j in (3..=k).filter(|j| (k - j) % 2 == 0) {
            let lhs = ix(nb - k)?.mul(&g.evaluate(&x_product_word(n, k, j)?)?);
            let rhs = g
                .evaluate(&x_product_word(n, k - 2, j - 2)?)?
                .mul(&ix(nb - j + 2)?);
            checks.push(RelationCheck {
                name: "rel2-chained",
                params: vec![("k", k), ("j", j)],
                holds: lhs == rhs,
            });
        }
    }

    let w0 = w0_perm(n)?;
    let wj = wj_perm(n)?;
    for r in (0..=nb).step_by(2) {
        let wr = w_r(n, r)?;
        let wr_factored = if r == 0 {
            SignedPermutation::identity(n)
        } else {
            word_to_perm(n, &x_product_word(n, r - 1, 1)?)?
        };
        checks.push(RelationCheck {
            name: "w_r-factorization",
            params: vec![("r", r)],
            holds: wr == wr_factored,
        });
        let dual = w0.compose(&wr).compose(&wj);
        let dual_factored = if r == nb {
            SignedPermutation::identity(n)
        } else {
            word_to_perm(n, &x_product_word(n, nb - 1, r + 1)?)?
        };
        checks.push(RelationCheck {
            name: "w0w_rw_J-factorization",
            params: vec![("r", r)],
            holds: dual == dual_factored,
        });
        // at r = nbar the element is e, the minimal representative for L = {}
        let l_set = if r == nb {
            NodeSet::new()
        } else {
            (r + 1..=n).collect()
        };
        let w_l = g.longest_element(&l_set)?;
        let w_lj = g.min_rep(&w_l, ctx.j_nodes())?;
        checks.push(RelationCheck {
            name: "wlj",
            params: vec![("r", r)],
            holds: dual == wlj_perm(n, r)? && perm_to_element(&ctx, &dual)? == w_lj,
        });
    }
    Ok(RelationsReport { n, checks })
}

/// The conormal fibre at zero of the rank-`r` skew-symmetric determinantal variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreRank {
    pub n: usize,
    pub r: usize,
    /// `nbar - r`.
    pub rank: usize,
    /// `w_{nbar - r}`, whose opposite cell is the fibre up to `iota`.
    pub witness: SignedPermutation,
    /// `^iota w_{nbar - r}`, the unique maximal element of the fibre index set.
    pub witness_element: AffineWeylElement,
    pub w_r: SignedPermutation,
    pub v_r: AffineWeylElement,
    pub fibre_max: Vec<AffineWeylElement>,
}

/// Computes the conormal fibre of the rank-`r` locus through the general
/// machinery and checks it against `^iota w_{nbar - r}`.
pub fn fibre_rank(n: usize, r: usize) -> Result<FibreRank> {
    check_r(n, r)?;
    let ctx = type_d_context(n)?;
    fibre_rank_in(&ctx, r)
}

/// [`fibre_rank`] with a prebuilt `(D, n, n)` context.
pub fn fibre_rank_in(ctx: &CominusculeContext, r: usize) -> Result<FibreRank> {
    let n = ctx.rank();
    if ctx.series() != Series::D || ctx.d() != n {
        return Err(Error::Precondition(format!(
            "expected the context (D, {n}, {n}), got ({}, {n}, {})",
            ctx.series(),
            ctx.d()
        )));
    }
    check_r(n, r)?;
    let g = ctx.group();
    let wr = w_r(n, r)?;
    let wr_elem = perm_to_element(ctx, &wr)?;
    let dual = ctx.w0().mul(&wr_elem).mul(ctx.wj());
    let wlj = perm_to_element(ctx, &wlj_perm(n, r)?)?;
    if dual != wlj {
        return Err(Error::Internal(format!("w0 w_{r} w_J differs from w_L^J")));
    }
    let v = v_of(ctx, &wr_elem);
    if !is_smooth(ctx, &v)?.c6 {
        return Err(Error::Internal(format!(
            "v_{r} fails the smoothness criterion"
        )));
    }
    let rank = n_bar(n) - r;
    let witness = w_r(n, rank)?;
    let witness_element = ctx.iota_elem(&perm_to_element(ctx, &witness)?);
    let bound = g.min_rep(&wr_elem.mul(&v), ctx.d0_nodes())?;
    if bound != witness_element {
        return Err(Error::Internal(format!(
            "(w_{r} v_{r})^D0 = [{}] differs from ^iota w_{rank} = [{}]",
            g.reduced_word(&bound),
            g.reduced_word(&witness_element)
        )));
    }
    let fibre = fibre_maximal(ctx, &wr_elem)?;
    if fibre.maximal != [witness_element.clone()] {
        return Err(Error::Internal(format!(
            "fibre maxima for r = {r} are not the singleton ^iota w_{rank}"
        )));
    }
    Ok(FibreRank {
        n,
        r,
        rank,
        witness,
        witness_element,
        w_r: wr,
        v_r: v,
        fibre_max: fibre.maximal,
    })
}
