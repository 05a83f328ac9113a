//! Reference implementations used by the acceptance tests. Elements are
//! represented by the images of the simple affine roots under the reflection
//! action, so nothing here goes through the library's matrix model.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use cominuscule::weyl::{AffineWeylElement, WeylGroup};
use cominuscule::Series;

pub type Root = Vec<i64>;
pub type Map = Vec<Root>;

/// Finite Cartan matrix in Bourbaki labelling, `c[i][j] = <alpha_j, alpha_i^vee>`,
/// indices `0..n` standing for nodes `1..=n`.
pub fn finite_cartan(series: Series, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize| {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    match series {
        Series::A | Series::B | Series::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Series::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Series::E => {
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for i in 4..n {
                link(i, i + 1);
            }
        }
    }
    match series {
        // alpha_n short
        Series::B => c[n - 1][n - 2] = -2,
        // alpha_n long
        Series::C => c[n - 2][n - 1] = -2,
        _ => {}
    }
    c
}

/// The affine root system built from scratch.
pub struct Oracle {
    pub n: usize,
    /// Affine Cartan matrix, node 0 first.
    pub cartan: Vec<Vec<i64>>,
    /// `d_i` with `d_i c[i][j]` symmetric.
    pub sym: Vec<i64>,
    pub delta: Root,
    pub theta: Root,
    /// All finite roots in affine coordinates.
    pub finite_roots: BTreeSet<Root>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Symmetrizer of a connected Cartan matrix by propagation along edges.
fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let m = c.len();
    // numerator / denominator pairs
    let mut val: Vec<Option<(i64, i64)>> = vec![None; m];
    val[0] = Some((1, 1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (p, q) = val[i].unwrap();
        for j in 0..m {
            if j != i && c[i][j] != 0 && val[j].is_none() {
                // d_i c_ij = d_j c_ji
                let (np, nq) = (p * c[i][j], q * c[j][i]);
                let g = gcd(np, nq);
                val[j] = Some((np / g, nq / g));
                queue.push_back(j);
            }
        }
    }
    let lcm = val.iter().fold(1i64, |acc, v| {
        let q = v.unwrap().1.abs();
        acc / gcd(acc, q) * q
    });
    let ints: Vec<i64> = val
        .iter()
        .map(|v| {
            let (p, q) = v.unwrap();
            p * lcm / q
        })
        .collect();
    let g = ints.iter().fold(0, |acc, &x| gcd(acc, x));
    ints.iter().map(|x| (x / g).abs()).collect()
}

pub fn is_positive(r: &[i64]) -> bool {
    r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0)
}

pub fn is_negative(r: &[i64]) -> bool {
    r.iter().all(|&x| x <= 0) && r.iter().any(|&x| x < 0)
}

pub fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[i64]) -> Root {
    a.iter().map(|x| -x).collect()
}

impl Oracle {
    pub fn new(series: Series, n: usize) -> Self {
        let fin = finite_cartan(series, n);
        let fin_sym = symmetrizer(&fin);
        // finite roots by reflection closure in finite coordinates
        let reflect_fin = |i: usize, r: &Root| -> Root {
            let pairing: i64 = (0..n).map(|j| r[j] * fin[i][j]).sum();
            let mut out = r.clone();
            out[i] -= pairing;
            out
        };
        let mut roots: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        while let Some(r) = queue.pop_front() {
            if roots.insert(r.clone()) {
                for i in 0..n {
                    queue.push_back(reflect_fin(i, &r));
                }
            }
        }
        let theta_fin = roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .unwrap()
            .clone();
        // (theta|theta) and <alpha_j, theta^vee> = 2 (theta|alpha_j) / (theta|theta)
        let form = |a: &Root, b: &Root| -> i64 {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| a[i] * fin_sym[i] * fin[i][j] * b[j])
                        .sum::<i64>()
                })
                .sum()
        };
        let tt = form(&theta_fin, &theta_fin);
        let unit = |j: usize| -> Root { (0..n).map(|k| i64::from(k == j)).collect() };
        let mut cartan = vec![vec![0i64; n + 1]; n + 1];
        cartan[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                cartan[i + 1][j + 1] = fin[i][j];
            }
            // <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
            cartan[0][i + 1] = -2 * form(&theta_fin, &unit(i)) / tt;
            // <alpha_0, alpha_i^vee> = -<theta, alpha_i^vee>
            cartan[i + 1][0] = -(0..n).map(|k| theta_fin[k] * fin[i][k]).sum::<i64>();
        }
        let sym = symmetrizer(&cartan);
        let embed = |r: &Root| -> Root {
            let mut out = vec![0];
            out.extend(r.iter().copied());
            out
        };
        let theta = embed(&theta_fin);
        let mut delta = theta.clone();
        delta[0] = 1;
        Oracle {
            n,
            cartan,
            sym,
            delta,
            theta,
            finite_roots: roots.iter().map(embed).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn simple(&self, i: usize) -> Root {
        (0..=self.n).map(|k| i64::from(k == i)).collect()
    }

    pub fn reflect(&self, i: usize, r: &[i64]) -> Root {
        let pairing: i64 = (0..=self.n).map(|j| r[j] * self.cartan[i][j]).sum();
        let mut out = r.to_vec();
        out[i] -= pairing;
        out
    }

    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let m = self.size();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| a[i] * self.sym[i] * self.cartan[i][j] * b[j])
                    .sum::<i64>()
            })
            .sum()
    }

    /// Real roots and nonzero multiples of delta.
    pub fn is_root(&self, r: &[i64]) -> bool {
        let k = r[0];
        let fin: Root = r.iter().zip(&self.delta).map(|(x, d)| x - k * d).collect();
        if fin.iter().all(|&x| x == 0) {
            return k != 0;
        }
        self.finite_roots.contains(&fin)
    }

    /// Roots of the finite-type subsystem on `nodes`.
    pub fn roots_of(&self, nodes: &BTreeSet<usize>) -> BTreeSet<Root> {
        let mut out = BTreeSet::new();
        let mut queue: VecDeque<Root> = nodes.iter().map(|&i| self.simple(i)).collect();
        while let Some(r) = queue.pop_front() {
            if out.insert(r.clone()) {
                for &i in nodes {
                    queue.push_back(self.reflect(i, &r));
                }
            }
        }
        out
    }

    pub fn positive_roots_of(&self, nodes: &BTreeSet<usize>) -> BTreeSet<Root> {
        self.roots_of(nodes)
            .into_iter()
            .filter(|r| is_positive(r))
            .collect()
    }

    /// Highest root of a connected finite-type subsystem.
    pub fn highest_root(&self, nodes: &BTreeSet<usize>) -> Root {
        self.roots_of(nodes)
            .into_iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .unwrap()
    }

    pub fn identity(&self) -> Map {
        (0..=self.n).map(|i| self.simple(i)).collect()
    }

    pub fn apply(&self, w: &Map, r: &[i64]) -> Root {
        let mut out = vec![0i64; self.size()];
        for (k, &c) in r.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(&w[k]) {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn compose(&self, x: &Map, y: &Map) -> Map {
        y.iter().map(|r| self.apply(x, r)).collect()
    }

    /// `w s_i`.
    pub fn right_mul(&self, w: &Map, i: usize) -> Map {
        (0..=self.n)
            .map(|j| {
                sub(
                    &w[j],
                    &w[i].iter().map(|x| x * self.cartan[i][j]).collect::<Root>(),
                )
            })
            .collect()
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize, w: &Map) -> Map {
        w.iter().map(|r| self.reflect(i, r)).collect()
    }

    pub fn word_map(&self, word: &[usize]) -> Map {
        word.iter()
            .fold(self.identity(), |w, &i| self.right_mul(&w, i))
    }

    pub fn inverse(&self, w: &Map) -> Map {
        let mut word = self.word(w);
        word.reverse();
        self.word_map(&word)
    }

    /// Reduced word by right descent-stripping.
    pub fn word(&self, w: &Map) -> Vec<usize> {
        let mut cur = w.clone();
        let mut stripped = Vec::new();
        while let Some(i) = (0..=self.n).find(|&i| is_negative(&cur[i])) {
            cur = self.right_mul(&cur, i);
            stripped.push(i);
        }
        stripped.reverse();
        stripped
    }

    pub fn length(&self, w: &Map) -> usize {
        self.word(w).len()
    }

    pub fn support(&self, w: &Map) -> BTreeSet<usize> {
        self.word(w).into_iter().collect()
    }

    /// `s_i ⋆ w`.
    pub fn demazure_simple(&self, i: usize, w: &Map) -> Map {
        if is_positive(&self.inverse(w)[i]) {
            self.left_mul(i, w)
        } else {
            w.clone()
        }
    }

    pub fn demazure(&self, x: &Map, y: &Map) -> Map {
        self.word(x)
            .iter()
            .rev()
            .fold(y.clone(), |acc, &i| self.demazure_simple(i, &acc))
    }

    /// Longest element of a finite-type parabolic, by right multiplication
    /// while some simple root stays positive.
    pub fn longest(&self, nodes: &BTreeSet<usize>) -> Map {
        let mut w = self.identity();
        while let Some(&i) = nodes.iter().find(|&&i| is_positive(&w[i])) {
            w = self.right_mul(&w, i);
        }
        w
    }

    /// Minimal representative of `w W_set`.
    pub fn min_rep(&self, w: &Map, set: &BTreeSet<usize>) -> Map {
        let mut cur = w.clone();
        while let Some(&i) = set.iter().find(|&&i| is_negative(&cur[i])) {
            cur = self.right_mul(&cur, i);
        }
        cur
    }

    /// All of the finite parabolic subgroup on `nodes`.
    pub fn parabolic(&self, nodes: &BTreeSet<usize>) -> Vec<Map> {
        let mut seen: HashSet<Map> = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(w) = queue.pop_front() {
            for &i in nodes {
                let next = self.right_mul(&w, i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Maps library elements through their reduced words, checking that the
    /// library action agrees on every simple root.
    pub fn of(&self, g: &WeylGroup, e: &AffineWeylElement) -> Map {
        let m = self.word_map(&g.reduced_word(e).0);
        for i in 0..=self.n {
            assert_eq!(
                g.act(e, &g.simple_root(i)).0,
                m[i],
                "library action differs on alpha_{i}"
            );
        }
        m
    }
}

pub fn nodes(xs: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    xs.into_iter().collect()
}

/// `W(D_n)` inside `S_{2n}`, as full one-line permutations of `1..=2n`.
pub struct TypeD {
    pub n: usize,
}

impl TypeD {
    pub fn identity(&self) -> Vec<usize> {
        (1..=2 * self.n).collect()
    }

    /// `(x y)(k) = x(y(k))`.
    pub fn compose(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        y.iter().map(|&k| x[k - 1]).collect()
    }

    fn transposition(&self, i: usize) -> Vec<usize> {
        let mut p = self.identity();
        p.swap(i - 1, i);
        p
    }

    pub fn generator(&self, i: usize) -> Vec<usize> {
        let n = self.n;
        let ts: Vec<usize> = if i < n {
            vec![i, 2 * n - i]
        } else {
            vec![n, n - 1, n + 1, n]
        };
        ts.iter().fold(self.identity(), |acc, &t| {
            self.compose(&acc, &self.transposition(t))
        })
    }

    pub fn word(&self, letters: &[usize]) -> Vec<usize> {
        letters.iter().fold(self.identity(), |acc, &i| {
            self.compose(&acc, &self.generator(i))
        })
    }

    /// Extends the first `n` values by `w(2n + 1 - k) = 2n + 1 - w(k)`.
    pub fn full(&self, first: &[usize]) -> Vec<usize> {
        let m = 2 * self.n + 1;
        let mut out = first.to_vec();
        out.extend(first.iter().rev().map(|&v| m - v));
        out
    }

    pub fn signed(&self, v: usize) -> i64 {
        if v <= self.n {
            v as i64
        } else {
            -((2 * self.n + 1 - v) as i64)
        }
    }

    /// `inv(w') + #{i < j : w'(i) + w'(j) < 0}` for `w' = rho w rho`,
    /// `rho(i) = n + 1 - i`, which moves the branch node to the front.
    pub fn inversions(&self, first: &[usize]) -> usize {
        let n = self.n as i64;
        let s: Vec<i64> = first
            .iter()
            .rev()
            .map(|&v| {
                let x = self.signed(v);
                x.signum() * (n + 1 - x.abs())
            })
            .collect();
        let mut count = 0;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                count += usize::from(s[i] > s[j]) + usize::from(s[i] + s[j] < 0);
            }
        }
        count
    }
}
