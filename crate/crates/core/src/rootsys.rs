//! Dynkin diagrams, root enumeration and the invariant bilinear form.
//!
//! Nodes are labelled as in Bourbaki: `1..=n` for the finite diagram, with
//! the extra affine node `0`. For `D_n` the fork is at `n-2` with tips `n-1`
//! and `n`; for `E_n` node `2` hangs off node `4`.
//!
//! A [`RootVector`] stores one coefficient per node *position*. For affine
//! diagrams position and label agree (`0..=n`); for finite diagrams position
//! `i` holds the coefficient of label `i + 1`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type NodeSet = BTreeSet<usize>;
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
        }
    }

    /// Checks the rank constraint for the series.
    pub fn validate_rank(self, rank: usize) -> Result<()> {
        let constraint = match self {
            Series::A if rank >= 1 => return Ok(()),
            Series::A => "A_n requires n >= 1",
            Series::B if rank >= 2 => return Ok(()),
            Series::B => "B_n requires n >= 2",
            Series::C if rank >= 2 => return Ok(()),
            Series::C => "C_n requires n >= 2",
            Series::D if rank >= 4 => return Ok(()),
            Series::D => "D_n requires n >= 4",
            Series::E if (6..=8).contains(&rank) => return Ok(()),
            Series::E => "E_n requires n in {6, 7, 8}",
        };
        Err(Error::InvalidType {
            series: self.letter(),
            rank,
            constraint: constraint.to_string(),
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            other => Err(Error::Parse(format!(
                "unknown series {other:?}; expected one of A, B, C, D, E"
            ))),
        }
    }
}

/// Integer coefficient vector over the simple roots of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(len: usize) -> Self {
        RootVector(vec![0; len])
    }

    pub fn unit(len: usize, pos: usize) -> Self {
        let mut v = vec![0; len];
        v[pos] = 1;
        RootVector(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients non-negative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// Nonzero with all coefficients non-positive.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> RootVector {
        RootVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> RootVector {
        self.scale(-1)
    }

    /// Positions with nonzero coefficient.
    pub fn support_positions(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Rational vector in the coroot basis `{alpha_i^vee}` of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoweightVector {
    pub coords: Vec<Rational>,
}

impl CoweightVector {
    /// `<alpha, sum c_i alpha_i^vee> = sum_i c_i C[i][j] a_j`.
    pub fn pairing(&self, diagram: &DynkinDiagram, root: &RootVector) -> Rational {
        let mut total = Rational::zero();
        for (i, c) in self.coords.iter().enumerate() {
            let mut p = 0i64;
            for (j, a) in root.0.iter().enumerate() {
                p += diagram.cartan[i][j] * a;
            }
            total += *c * Rational::from_integer(p);
        }
        total
    }

    /// The vector of pairings with each simple root.
    pub fn pairing_vector(&self, diagram: &DynkinDiagram) -> Vec<Rational> {
        (0..diagram.size())
            .map(|j| self.pairing(diagram, &RootVector::unit(diagram.size(), j)))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &CoweightVector) -> CoweightVector {
        CoweightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CoweightVector) -> CoweightVector {
        CoweightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// A validated finite or affine (untwisted) Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    pub series: Series,
    pub rank: usize,
    pub affine: bool,
    /// Node labels in position order.
    pub labels: Vec<usize>,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`, indexed by position.
    pub cartan: Vec<Vec<i64>>,
    /// Minimal positive integer symmetrizer: `(alpha_i|alpha_j) = d_i C[i][j]`.
    pub symmetrizer: Vec<i64>,
    /// Coefficients of delta (affine only).
    pub marks: Option<Vec<i64>>,
}

impl DynkinDiagram {
    /// Number of nodes.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn position(&self, label: usize) -> Result<usize> {
        let pos = if self.affine {
            Some(label)
        } else {
            label.checked_sub(1)
        };
        match pos {
            Some(p) if p < self.size() => Ok(p),
            _ => Err(Error::InvalidNode {
                node: label,
                valid: self.labels.clone(),
            }),
        }
    }

    pub fn label(&self, pos: usize) -> usize {
        self.labels[pos]
    }

    pub fn all_nodes(&self) -> NodeSet {
        self.labels.iter().copied().collect()
    }

    /// Cartan entry by label.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Result<i64> {
        Ok(self.cartan[self.position(i)?][self.position(j)?])
    }

    pub fn simple_root(&self, label: usize) -> Result<RootVector> {
        Ok(RootVector::unit(self.size(), self.position(label)?))
    }

    /// Delta in the simple-root basis (affine only).
    pub fn delta(&self) -> Option<RootVector> {
        self.marks.as_ref().map(|m| RootVector(m.clone()))
    }

    /// `s_i(a) = a - <a, alpha_i^vee> alpha_i`, with `i` a position.
    pub fn reflect(&self, pos: usize, a: &RootVector) -> RootVector {
        let pairing: i64 = (0..self.size()).map(|j| self.cartan[pos][j] * a.0[j]).sum();
        let mut out = a.clone();
        out.0[pos] -= pairing;
        out
    }

    pub fn are_adjacent(&self, p: usize, q: usize) -> bool {
        p != q && self.cartan[p][q] != 0
    }

    fn positions_of(&self, nodes: &NodeSet) -> Result<Vec<usize>> {
        nodes.iter().map(|&l| self.position(l)).collect()
    }

    /// Whether the induced sub-diagram on `nodes` is connected (empty counts as not).
    pub fn is_connected(&self, nodes: &NodeSet) -> Result<bool> {
        let pos = self.positions_of(nodes)?;
        let Some(&start) = pos.first() else {
            return Ok(false);
        };
        let mut seen = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for &q in &pos {
                if !seen.contains(&q) && self.are_adjacent(p, q) {
                    seen.push(q);
                    queue.push_back(q);
                }
            }
        }
        Ok(seen.len() == pos.len())
    }

    /// Connected components of the induced sub-diagram, as label sets.
    pub fn components(&self, nodes: &NodeSet) -> Result<Vec<NodeSet>> {
        let pos = self.positions_of(nodes)?;
        let mut remaining: Vec<usize> = pos;
        let mut out = Vec::new();
        while let Some(start) = remaining.pop() {
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let p = comp[i];
                let (adj, rest): (Vec<usize>, Vec<usize>) =
                    remaining.iter().partition(|&&q| self.are_adjacent(p, q));
                remaining = rest;
                comp.extend(adj);
                i += 1;
            }
            out.push(comp.into_iter().map(|p| self.label(p)).collect());
        }
        out.sort();
        Ok(out)
    }

    /// Sylvester's criterion on the symmetrized Cartan matrix restricted to `nodes`.
    pub fn is_finite_type(&self, nodes: &NodeSet) -> Result<bool> {
        let pos = self.positions_of(nodes)?;
        for k in 1..=pos.len() {
            let m: Vec<Vec<Rational>> = pos[..k]
                .iter()
                .map(|&i| {
                    pos[..k]
                        .iter()
                        .map(|&j| Rational::from_integer(self.symmetrizer[i] * self.cartan[i][j]))
                        .collect()
                })
                .collect();
            if determinant(m) <= Rational::zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn require_finite_type(&self, nodes: &NodeSet) -> Result<()> {
        if self.is_finite_type(nodes)? {
            Ok(())
        } else {
            Err(Error::NotFiniteType(format!(
                "nodes {:?} of {}{}{}",
                nodes,
                if self.affine { "affine " } else { "" },
                self.series,
                self.rank
            )))
        }
    }
}

/// Builds the finite diagram of `series` and `rank`, or its untwisted affine
/// extension. The affine node is attached through the highest root `theta`:
/// `C[0][j] = -<alpha_j, theta^vee>` and `C[i][0] = -<theta, alpha_i^vee>`.
pub fn build_diagram(series: Series, rank: usize, affine: bool) -> Result<DynkinDiagram> {
    series.validate_rank(rank)?;
    let finite = finite_diagram(series, rank);
    if !affine {
        return Ok(finite);
    }
    let theta = highest_root(&finite, &finite.all_nodes())?;
    let n = rank;
    let theta_sq = inner_form(&finite, &theta, &theta);
    let mut cartan = vec![vec![0i64; n + 1]; n + 1];
    for i in 0..n {
        for j in 0..n {
            cartan[i + 1][j + 1] = finite.cartan[i][j];
        }
    }
    cartan[0][0] = 2;
    for j in 0..n {
        let aj = RootVector::unit(n, j);
        // <alpha_j, theta^vee> = 2 (alpha_j|theta) / (theta|theta)
        let num = 2 * inner_form(&finite, &aj, &theta);
        debug_assert_eq!(num % theta_sq, 0);
        cartan[0][j + 1] = -(num / theta_sq);
        let theta_pair: i64 = (0..n).map(|k| finite.cartan[j][k] * theta.0[k]).sum();
        cartan[j + 1][0] = -theta_pair;
    }
    let mut diagram = DynkinDiagram {
        series,
        rank,
        affine: true,
        labels: (0..=n).collect(),
        symmetrizer: symmetrizer(&cartan),
        cartan,
        marks: None,
    };
    let marks = affine_marks(&diagram.cartan)?;
    if marks[0] != 1 {
        return Err(Error::Internal(format!("mark of alpha_0 is {}", marks[0])));
    }
    let mut expected = vec![1];
    expected.extend(theta.0.iter().copied());
    if marks != expected {
        return Err(Error::Internal(format!(
            "kernel of the affine Cartan matrix {marks:?} differs from alpha_0 + theta {expected:?}"
        )));
    }
    diagram.marks = Some(marks);
    validate(&diagram)?;
    Ok(diagram)
}

fn finite_diagram(series: Series, n: usize) -> DynkinDiagram {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // labels are 1-based below; (i, j, C[i][j], C[j][i])
    let mut bonds: Vec<(usize, usize, i64, i64)> = Vec::new();
    match series {
        Series::A => (1..n).for_each(|i| bonds.push((i, i + 1, -1, -1))),
        Series::B => {
            (1..n - 1).for_each(|i| bonds.push((i, i + 1, -1, -1)));
            bonds.push((n - 1, n, -1, -2));
        }
        Series::C => {
            (1..n - 1).for_each(|i| bonds.push((i, i + 1, -1, -1)));
            bonds.push((n - 1, n, -2, -1));
        }
        Series::D => {
            (1..n - 1).for_each(|i| bonds.push((i, i + 1, -1, -1)));
            bonds.push((n - 2, n, -1, -1));
        }
        Series::E => {
            bonds.push((1, 3, -1, -1));
            (3..n).for_each(|i| bonds.push((i, i + 1, -1, -1)));
            bonds.push((2, 4, -1, -1));
        }
    }
    for (i, j, cij, cji) in bonds {
        c[i - 1][j - 1] = cij;
        c[j - 1][i - 1] = cji;
    }
    let d = DynkinDiagram {
        series,
        rank: n,
        affine: false,
        labels: (1..=n).collect(),
        symmetrizer: symmetrizer(&c),
        cartan: c,
        marks: None,
    };
    debug_assert!(validate(&d).is_ok());
    d
}

fn validate(d: &DynkinDiagram) -> Result<()> {
    let n = d.size();
    for i in 0..n {
        if d.cartan[i][i] != 2 {
            return Err(Error::Internal(format!("C[{i}][{i}] != 2")));
        }
        for j in 0..n {
            if i != j && (d.cartan[i][j] > 0 || (d.cartan[i][j] == 0) != (d.cartan[j][i] == 0)) {
                return Err(Error::Internal(format!(
                    "bad off-diagonal entry C[{i}][{j}]"
                )));
            }
            if d.symmetrizer[i] * d.cartan[i][j] != d.symmetrizer[j] * d.cartan[j][i] {
                return Err(Error::Internal("symmetrizer does not symmetrize".into()));
            }
        }
    }
    if let Some(marks) = &d.marks {
        for row in &d.cartan {
            let s: i64 = row.iter().zip(marks).map(|(c, m)| c * m).sum();
            if s != 0 {
                return Err(Error::Internal("C * marks != 0".into()));
            }
        }
    } else if !d.is_finite_type(&d.all_nodes())? {
        return Err(Error::Internal(
            "finite Cartan matrix is not positive definite".into(),
        ));
    }
    Ok(())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Minimal positive integer `d` with `d_i C[i][j] = d_j C[j][i]` (connected diagrams).
fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && c[i][j] != 0 && d[j].is_none() {
                    d[j] = Some(d[i].unwrap() * Rational::new(c[i][j], c[j][i]));
                    queue.push_back(j);
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    let den = d.iter().fold(1, |acc, x| lcm(acc, *x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0, |acc, &x| gcd(acc, x));
    ints.into_iter().map(|x| x / g).collect()
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for r in col + 1..n {
            let f = m[r][col] / p;
            if f.is_zero() {
                continue;
            }
            for k in col..n {
                let v = m[col][k];
                m[r][k] -= f * v;
            }
        }
    }
    det
}

/// Solves `A x = b` exactly; `A` must be invertible.
pub(crate) fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let p = m[col][col];
        for k in col..=n {
            m[col][k] /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in col..=n {
                    let v = m[col][k];
                    m[r][k] -= f * v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

/// Positive primitive generator of the one-dimensional kernel of `c`.
fn affine_marks(c: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = c.len();
    let mut m: Vec<Vec<Rational>> = c
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, row);
        let pv = m[row][col];
        for k in 0..n {
            m[row][k] /= pv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in 0..n {
                    let v = m[row][k];
                    m[r][k] -= f * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(Error::Internal(format!(
            "affine Cartan matrix has nullity {}",
            free.len()
        )));
    }
    let f = free[0];
    let mut v = vec![Rational::zero(); n];
    v[f] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[r][f];
    }
    let den = v.iter().fold(1, |acc, x| lcm(acc, *x.denom()));
    let mut ints: Vec<i64> = v.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0, |acc, &x| gcd(acc, x));
    ints.iter_mut().for_each(|x| *x /= g);
    if ints.iter().all(|&x| x <= 0) {
        ints.iter_mut().for_each(|x| *x = -*x);
    }
    if ints.iter().any(|&x| x <= 0) {
        return Err(Error::Internal(format!(
            "kernel vector {ints:?} is not positive"
        )));
    }
    Ok(ints)
}

/// Positive roots of a finite diagram.
pub fn positive_roots(diagram: &DynkinDiagram) -> Result<Vec<RootVector>> {
    if diagram.affine {
        return Err(Error::NotFiniteType(
            "affine root systems are infinite; decompose real roots as alpha + n delta".into(),
        ));
    }
    positive_roots_of(diagram, &diagram.all_nodes())
}

/// Positive roots of the finite-type sub-diagram on `nodes`, in the ambient
/// coordinates of `diagram`, sorted.
pub fn positive_roots_of(diagram: &DynkinDiagram, nodes: &NodeSet) -> Result<Vec<RootVector>> {
    diagram.require_finite_type(nodes)?;
    let pos = diagram.positions_of(nodes)?;
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut queue: VecDeque<RootVector> = VecDeque::new();
    for &p in &pos {
        let r = RootVector::unit(diagram.size(), p);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(r) = queue.pop_front() {
        for &p in &pos {
            let image = diagram.reflect(p, &r);
            if image.is_positive() && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<RootVector> = seen.into_iter().collect();
    roots.sort();
    Ok(roots)
}

/// The unique componentwise-maximal positive root of a connected finite-type node set.
pub fn highest_root(diagram: &DynkinDiagram, nodes: &NodeSet) -> Result<RootVector> {
    if !diagram.is_connected(nodes)? {
        return Err(Error::Disconnected(nodes.iter().copied().collect()));
    }
    let roots = positive_roots_of(diagram, nodes)?;
    let maximal: Vec<&RootVector> = roots
        .iter()
        .filter(|r| !roots.iter().any(|s| s != *r && r.leq(s)))
        .collect();
    match maximal.as_slice() {
        [top] if roots.iter().all(|r| r.leq(top)) => Ok((*top).clone()),
        _ => Err(Error::Internal(format!(
            "no unique highest root on {nodes:?}"
        ))),
    }
}

/// `(a|b) = sum_ij a_i b_j d_i C[i][j]`.
pub fn inner_form(diagram: &DynkinDiagram, a: &RootVector, b: &RootVector) -> i64 {
    let n = diagram.size();
    let mut total = 0;
    for i in 0..n {
        if a.0[i] == 0 {
            continue;
        }
        for j in 0..n {
            total += a.0[i] * b.0[j] * diagram.symmetrizer[i] * diagram.cartan[i][j];
        }
    }
    total
}

/// `varpi_d^vee` in the coroot basis of a finite diagram, via the inverse Cartan matrix.
pub fn fundamental_coweight(diagram: &DynkinDiagram, node: usize) -> Result<CoweightVector> {
    if diagram.affine {
        return Err(Error::NotFiniteType(
            "fundamental coweights of an affine diagram".into(),
        ));
    }
    let d = diagram.position(node)?;
    let n = diagram.size();
    // sum_i c_i C[i][j] = [j == d]  <=>  C^T c = e_d
    let ct: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Rational::from_integer(diagram.cartan[i][j]))
                .collect()
        })
        .collect();
    let e: Vec<Rational> = (0..n)
        .map(|j| {
            if j == d {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    let coords = solve(&ct, &e).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
    Ok(CoweightVector { coords })
}

/// Converts a pairing vector `(<alpha_j, q>)_j` back to coroot coordinates.
pub fn coweight_from_pairings(diagram: &DynkinDiagram, pairings: &[i64]) -> Result<CoweightVector> {
    let n = diagram.size();
    let ct: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Rational::from_integer(diagram.cartan[i][j]))
                .collect()
        })
        .collect();
    let b: Vec<Rational> = pairings
        .iter()
        .map(|&p| Rational::from_integer(p))
        .collect();
    let coords = solve(&ct, &b).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
    Ok(CoweightVector { coords })
}

/// Labels of the cominuscule simple roots of a finite diagram: coefficient 1 in `theta`.
pub fn cominuscule_nodes(diagram: &DynkinDiagram) -> Result<Vec<usize>> {
    let theta = highest_root(diagram, &diagram.all_nodes())?;
    Ok((0..diagram.size())
        .filter(|&p| theta.0[p] == 1)
        .map(|p| diagram.label(p))
        .collect())
}
