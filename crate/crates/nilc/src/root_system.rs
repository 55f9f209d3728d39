//! Finite irreducible root systems of types A-G with exact integer arithmetic.
//!
//! Roots live as integer coordinate vectors over the simple roots. Pairings
//! `<beta, alpha^vee>` are computed from the Cartan matrix together with a
//! diagonal symmetrizer, so no floating point appears anywhere. The full root
//! table is generated by closing the simple roots under simple reflections.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(TypeLetter::A),
            "B" | "b" => Ok(TypeLetter::B),
            "C" | "c" => Ok(TypeLetter::C),
            "D" | "d" => Ok(TypeLetter::D),
            "E" | "e" => Ok(TypeLetter::E),
            "F" | "f" => Ok(TypeLetter::F),
            "G" | "g" => Ok(TypeLetter::G),
            other => Err(Error::Parse(format!("unknown type letter '{other}'"))),
        }
    }
}

/// A Cartan type `X_n`, validated against the rank constraints of the letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl CartanType {
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        let ok = match letter {
            TypeLetter::A => rank >= 1,
            TypeLetter::B | TypeLetter::C => rank >= 2,
            TypeLetter::D => rank >= 3,
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        };
        if ok {
            Ok(CartanType { letter, rank })
        } else {
            Err(Error::InvalidRank(format!(
                "rank {rank} is not admissible for type {letter}"
            )))
        }
    }

    /// Cartan matrix in Bourbaki numbering, entry `[i][j] = <alpha_i, alpha_j^vee>`.
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.letter {
            TypeLetter::A => {
                for i in 0..n - 1 {
                    edge(&mut a, i, i + 1);
                }
            }
            TypeLetter::B => {
                for i in 0..n - 1 {
                    edge(&mut a, i, i + 1);
                }
                // alpha_n is short
                a[n - 2][n - 1] = -2;
            }
            TypeLetter::C => {
                for i in 0..n - 1 {
                    edge(&mut a, i, i + 1);
                }
                // alpha_n is long
                a[n - 1][n - 2] = -2;
            }
            TypeLetter::D => {
                for i in 0..n - 2 {
                    edge(&mut a, i, i + 1);
                }
                edge(&mut a, n - 3, n - 1);
            }
            TypeLetter::E => {
                edge(&mut a, 0, 2);
                edge(&mut a, 1, 3);
                for i in 2..n - 1 {
                    edge(&mut a, i, i + 1);
                }
            }
            TypeLetter::F => {
                edge(&mut a, 0, 1);
                edge(&mut a, 1, 2);
                edge(&mut a, 2, 3);
                // alpha_3, alpha_4 are short
                a[1][2] = -2;
            }
            TypeLetter::G => {
                // alpha_1 is short
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// A root as an integer coordinate vector over the simple roots.
///
/// The derived total order used for canonical sorting is (coordinate sum,
/// lexicographic coordinates); it is unrelated to the dominance order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    /// Sum of coordinates (the usual height of a root over Delta).
    pub fn coord_sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0) && self.coords.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.coord_sum(), &self.coords).cmp(&(other.coord_sum(), &other.coords))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad root coordinate '{p}' in '{s}'")))
            })
            .collect::<Result<Vec<i64>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(format!("empty root '{s}'")));
        }
        Ok(Root::new(coords))
    }
}

type MatKey = (Vec<i64>, Vec<i64>);

/// Immutable table of a finite irreducible root system.
///
/// Safe for unrestricted concurrent reads; the Bruhat memo tables are
/// internally synchronized.
#[derive(Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    simple_roots: Vec<Root>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    highest_root: Root,
    long_flags: Vec<bool>,
    /// Per root r: the vector `[<alpha_k, r^vee>]_k`.
    coroot_rows: Vec<Vec<i64>>,
    /// Per root r: coordinates of `r^vee` over the simple coroots.
    coroot_coords: Vec<Vec<i64>>,
    pub(crate) bruhat_cache: Mutex<HashMap<MatKey, bool>>,
    pub(crate) affine_bruhat_cache: Mutex<HashMap<(MatKey, MatKey), bool>>,
}

impl RootSystem {
    /// Builds the full root table of the given type; roots are generated by
    /// closing the simple roots under simple reflections.
    pub fn build(cartan_type: CartanType) -> Result<RootSystem> {
        let n = cartan_type.rank;
        let cartan = cartan_type.cartan_matrix();
        let symmetrizer = symmetrizer(&cartan)?;

        let simple_roots: Vec<Root> = (0..n)
            .map(|i| {
                let mut c = vec![0i64; n];
                c[i] = 1;
                Root::new(c)
            })
            .collect();

        // <beta, alpha_j^vee> straight from the Cartan matrix.
        let pair_simple = |beta: &Root, j: usize| -> i64 {
            beta.coords
                .iter()
                .enumerate()
                .map(|(i, &b)| b * cartan[i][j])
                .sum()
        };

        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: Vec<Root> = Vec::new();
        for r in &simple_roots {
            seen.insert(r.coords.clone());
            queue.push(r.clone());
            seen.insert(r.neg().coords.clone());
            queue.push(r.neg());
        }
        let mut head = 0;
        while head < queue.len() {
            let beta = queue[head].clone();
            head += 1;
            for j in 0..n {
                let p = pair_simple(&beta, j);
                let mut img = beta.coords.clone();
                img[j] -= p;
                if seen.insert(img.clone()) {
                    queue.push(Root::new(img));
                }
            }
        }
        let mut roots = queue;
        roots.sort();

        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coords.clone(), i))
            .collect();

        let sym = |beta: &Root, gamma: &Root| -> i64 {
            let mut acc = 0;
            for (i, &b) in beta.coords.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                for (j, &g) in gamma.coords.iter().enumerate() {
                    acc += b * g * cartan[i][j] * symmetrizer[j];
                }
            }
            acc
        };

        let norms: Vec<i64> = roots.iter().map(|r| sym(r, r)).collect();
        let max_norm = *norms.iter().max().expect("nonempty root system");
        let long_flags: Vec<bool> = norms.iter().map(|&q| q == max_norm).collect();

        let mut coroot_rows = Vec::with_capacity(roots.len());
        let mut coroot_coords = Vec::with_capacity(roots.len());
        for (r, &norm) in roots.iter().zip(&norms) {
            let mut row = Vec::with_capacity(n);
            for alpha in &simple_roots {
                let num = 2 * sym(alpha, r);
                debug_assert_eq!(num % norm, 0);
                row.push(num / norm);
            }
            coroot_rows.push(row);
            let half = norm / 2;
            let cc: Vec<i64> = r
                .coords
                .iter()
                .enumerate()
                .map(|(i, &b)| {
                    let num = b * symmetrizer[i];
                    debug_assert_eq!(num % half, 0);
                    num / half
                })
                .collect();
            coroot_coords.push(cc);
        }

        // The canonical sort puts the highest root last among positive roots.
        let highest_root = roots.last().expect("nonempty").clone();
        debug_assert!(roots
            .iter()
            .all(|r| highest_root.sub(r).coords.iter().all(|&c| c >= 0)));

        Ok(RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            simple_roots,
            roots,
            index,
            highest_root,
            long_flags,
            coroot_rows,
            coroot_coords,
            bruhat_cache: Mutex::new(HashMap::new()),
            affine_bruhat_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.simple_roots[i]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(&r.coords)
    }

    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coords).copied()
    }

    pub fn check_root(&self, r: &Root) -> Result<usize> {
        self.root_index(r)
            .ok_or_else(|| Error::NotARoot(format!("{r} is not a root of {}", self.cartan_type)))
    }

    pub fn is_long(&self, r: &Root) -> Result<bool> {
        Ok(self.long_flags[self.check_root(r)?])
    }

    /// Symmetrized invariant pairing `(beta, gamma)`, normalized so that short
    /// roots have squared length 2.
    pub fn sym_pairing(&self, beta: &Root, gamma: &Root) -> i64 {
        let mut acc = 0;
        for (i, &b) in beta.coords.iter().enumerate() {
            if b == 0 {
                continue;
            }
            for (j, &g) in gamma.coords.iter().enumerate() {
                acc += b * g * self.cartan[i][j] * self.symmetrizer[j];
            }
        }
        acc
    }

    /// `<beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha)`; bilinear in `beta`.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> Result<i64> {
        self.check_root(beta)?;
        let ai = self.check_root(alpha)?;
        Ok(self.pairing_by_index(beta, ai))
    }

    pub(crate) fn pairing_by_index(&self, beta: &Root, alpha_index: usize) -> i64 {
        let row = &self.coroot_rows[alpha_index];
        beta.coords
            .iter()
            .zip(row)
            .map(|(&b, &p)| b * p)
            .sum()
    }

    /// Coordinates of `alpha^vee` over the simple coroots.
    pub fn coroot(&self, alpha: &Root) -> Result<Vec<i64>> {
        let i = self.check_root(alpha)?;
        Ok(self.coroot_coords[i].clone())
    }

    /// Evaluates a coweight (coordinates over simple coroots) on a root.
    pub fn eval_coweight(&self, beta: &Root, coweight: &[i64]) -> i64 {
        let mut acc = 0;
        for (j, &c) in coweight.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, &b) in beta.coords.iter().enumerate() {
                acc += c * b * self.cartan[i][j];
            }
        }
        acc
    }

    /// True iff `alpha != +-beta` and neither sum nor difference is a root.
    pub fn strongly_orthogonal(&self, alpha: &Root, beta: &Root) -> Result<bool> {
        self.check_root(alpha)?;
        self.check_root(beta)?;
        Ok(self.strongly_orthogonal_unchecked(alpha, beta))
    }

    pub(crate) fn strongly_orthogonal_unchecked(&self, alpha: &Root, beta: &Root) -> bool {
        if alpha == beta || *alpha == beta.neg() {
            return false;
        }
        !self.index.contains_key(&alpha.add(beta).coords)
            && !self.index.contains_key(&alpha.sub(beta).coords)
    }

    /// Dominance order: `alpha <= beta` iff `beta - alpha` has all
    /// coordinates >= 0.
    pub fn dominance_leq(&self, alpha: &Root, beta: &Root) -> Result<bool> {
        self.check_root(alpha)?;
        self.check_root(beta)?;
        Ok(beta.sub(alpha).coords.iter().all(|&c| c >= 0))
    }

    /// Parses a root from its text form and checks membership.
    pub fn parse_root(&self, s: &str) -> Result<Root> {
        let r: Root = s.parse()?;
        if r.coords.len() != self.rank() {
            return Err(Error::Parse(format!(
                "root '{s}' has {} coordinates, expected {}",
                r.coords.len(),
                self.rank()
            )));
        }
        self.check_root(&r)?;
        Ok(r)
    }
}

/// Minimal positive integer diagonal making `D * A` symmetric.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    // Propagate ratios d_j / d_i = a[j][i] / a[i][j] along diagram edges.
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    num[0] = 1;
    den[0] = 1;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && num[j] == 0 {
                num[j] = num[i] * cartan[j][i];
                den[j] = den[i] * cartan[i][j];
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                stack.push(j);
            }
        }
    }
    if num.iter().any(|&x| x == 0) {
        return Err(Error::InvalidRank(
            "Cartan matrix is not connected".to_string(),
        ));
    }
    let lcm_den = den.iter().fold(1i64, |a, &b| lcm(a, b));
    let mut d: Vec<i64> = num
        .iter()
        .zip(&den)
        .map(|(&nu, &de)| nu * (lcm_den / de))
        .collect();
    let g = d.iter().fold(0i64, |a, &b| gcd(a, b));
    for x in &mut d {
        *x /= g;
    }
    for i in 0..n {
        for j in 0..n {
            if d[j] * cartan[i][j] != d[i] * cartan[j][i] {
                return Err(Error::InvalidRank(
                    "Cartan matrix is not symmetrizable".to_string(),
                ));
            }
        }
    }
    Ok(d)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
