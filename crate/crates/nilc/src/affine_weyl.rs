//! The affine Weyl group and its involution calculus.
//!
//! Real affine roots are pairs `beta + n*delta` with `beta` a finite root.
//! Group elements are stored as `w * t_lambda` with `w` in the finite Weyl
//! group and `lambda` in the coroot lattice, acting by
//!
//! ```text
//! (w t_lambda)(beta + m delta) = w(beta) + (m - <beta, lambda>) delta
//! ```
//!
//! so the reflection in `beta + n delta` is `s_beta * t_{n beta^vee}`. The
//! simple affine roots are `Delta` together with `delta - theta`; lengths are
//! computed by descent peeling and cross-checked against an inversion count.

use std::fmt;

use crate::error::{Error, Result};
use crate::orthogonal::OrthSet;
use crate::root_system::{Root, RootSystem};
use crate::weyl::{self, WeylElement};

/// A real affine root `finite + n*delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub finite: Root,
    pub n: i64,
}

impl AffineRoot {
    pub fn new(finite: Root, n: i64) -> Self {
        AffineRoot { finite, n }
    }

    pub fn finite(finite: Root) -> Self {
        AffineRoot { finite, n: 0 }
    }

    pub fn is_positive(&self) -> bool {
        self.n > 0 || (self.n == 0 && self.finite.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        !self.is_positive()
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot {
            finite: self.finite.neg(),
            n: -self.n,
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ {}", self.finite, self.n)
    }
}

pub fn parse_affine_root(s: &str) -> Result<AffineRoot> {
    let mut parts = s.splitn(2, '@');
    let fin = parts
        .next()
        .ok_or_else(|| Error::Parse(format!("bad affine root '{s}'")))?;
    let n = parts
        .next()
        .ok_or_else(|| Error::Parse(format!("affine root '{s}' is missing '@ n'")))?;
    Ok(AffineRoot {
        finite: fin.trim().parse()?,
        n: n.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad delta coefficient in '{s}'")))?,
    })
}

/// An element `w * t_lambda` of the affine Weyl group; `lambda` is a coweight
/// vector over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElement {
    pub w: WeylElement,
    pub lambda: Vec<i64>,
}

impl AffineWeylElement {
    pub fn identity(n: usize) -> Self {
        AffineWeylElement {
            w: WeylElement::identity(n),
            lambda: vec![0; n],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.iter().all(|&c| c == 0) && self.w.is_identity()
    }

    pub fn key(&self) -> (Vec<i64>, Vec<i64>) {
        (self.w.mat_key(), self.lambda.clone())
    }
}

/// Coweight pairing `<beta, lambda>`.
fn pair_coweight(sys: &RootSystem, beta: &Root, lambda: &[i64]) -> i64 {
    sys.eval_coweight(beta, lambda)
}

/// Action of the finite Weyl group on coweights, `<beta, w(lambda)> = <w^-1(beta), lambda>`.
fn apply_w_coweight(sys: &RootSystem, w: &WeylElement, lambda: &[i64]) -> Vec<i64> {
    let n = sys.rank();
    let mut out = vec![0i64; n];
    for (j, &c) in lambda.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let img = w.act(sys.simple_root(j));
        let cc = sys.coroot(&img).expect("w permutes roots");
        for i in 0..n {
            out[i] += c * cc[i];
        }
    }
    out
}

/// Coweight reflection `s_beta(lambda) = lambda - <beta,lambda> beta^vee`.
fn reflect_coweight(sys: &RootSystem, beta: &Root, lambda: &[i64]) -> Vec<i64> {
    let p = pair_coweight(sys, beta, lambda);
    let bv = sys.coroot(beta).expect("beta is a root");
    lambda
        .iter()
        .zip(&bv)
        .map(|(&l, &b)| l - p * b)
        .collect()
}

/// The reflection `s_{beta + n delta} = s_beta * t_{n beta^vee}`.
pub fn affine_reflect(sys: &RootSystem, a: &AffineRoot) -> Result<AffineWeylElement> {
    sys.check_root(&a.finite)?;
    let bv = sys.coroot(&a.finite)?;
    Ok(AffineWeylElement {
        w: weyl::reflect(sys, &a.finite)?,
        lambda: bv.iter().map(|&c| c * a.n).collect(),
    })
}

pub fn act(sys: &RootSystem, x: &AffineWeylElement, a: &AffineRoot) -> AffineRoot {
    AffineRoot {
        finite: x.w.act(&a.finite),
        n: a.n - pair_coweight(sys, &a.finite, &x.lambda),
    }
}

/// `(w1 t_l1)(w2 t_l2) = w1 w2 t_{w2^-1(l1) + l2}`.
pub fn compose(sys: &RootSystem, x: &AffineWeylElement, y: &AffineWeylElement) -> AffineWeylElement {
    let w2_inv = weyl::inverse(sys, &y.w);
    let moved = apply_w_coweight(sys, &w2_inv, &x.lambda);
    AffineWeylElement {
        w: x.w.compose(&y.w),
        lambda: moved
            .iter()
            .zip(&y.lambda)
            .map(|(&a, &b)| a + b)
            .collect(),
    }
}

/// `x * s_a` without inverting any matrix (reflections are involutions).
pub fn compose_reflection(sys: &RootSystem, x: &AffineWeylElement, a: &AffineRoot) -> AffineWeylElement {
    let s = weyl::reflect(sys, &a.finite).expect("a.finite is a root");
    let bv = sys.coroot(&a.finite).expect("a.finite is a root");
    let refl_lambda = reflect_coweight(sys, &a.finite, &x.lambda);
    AffineWeylElement {
        w: x.w.compose(&s),
        lambda: refl_lambda
            .iter()
            .zip(&bv)
            .map(|(&l, &b)| l + a.n * b)
            .collect(),
    }
}

/// Inverse of `w t_lambda`, namely `w^-1 t_{-w(lambda)}`.
pub fn inverse(sys: &RootSystem, x: &AffineWeylElement) -> AffineWeylElement {
    let wi = weyl::inverse(sys, &x.w);
    let wl = apply_w_coweight(sys, &x.w, &x.lambda);
    AffineWeylElement {
        w: wi,
        lambda: wl.iter().map(|&c| -c).collect(),
    }
}

/// The simple affine roots, indexed so that index 0 is `delta - theta` and
/// index i >= 1 is `alpha_i`.
pub fn simple_affine_roots(sys: &RootSystem) -> Vec<AffineRoot> {
    let mut v = Vec::with_capacity(sys.rank() + 1);
    v.push(AffineRoot::new(sys.highest_root().neg(), 1));
    for i in 0..sys.rank() {
        v.push(AffineRoot::finite(sys.simple_root(i).clone()));
    }
    v
}

/// Length by descent peeling over the simple affine roots.
pub fn length(sys: &RootSystem, x: &AffineWeylElement) -> usize {
    let simples = simple_affine_roots(sys);
    let mut x = x.clone();
    let mut len = 0usize;
    while !x.is_identity() {
        let a = simples
            .iter()
            .find(|a| act(sys, &x, a).is_negative())
            .expect("non-identity element has a descent");
        x = compose_reflection(sys, &x, a);
        len += 1;
    }
    len
}

/// Reduced word over `s0..sN` (index 0 is `s_{delta-theta}`), by peeling.
pub fn word(sys: &RootSystem, x: &AffineWeylElement) -> Vec<usize> {
    let simples = simple_affine_roots(sys);
    let mut x = x.clone();
    let mut rev = Vec::new();
    while !x.is_identity() {
        let (i, a) = simples
            .iter()
            .enumerate()
            .find(|(_, a)| act(sys, &x, a).is_negative())
            .expect("non-identity element has a descent");
        x = compose_reflection(sys, &x, a);
        rev.push(i);
    }
    rev.reverse();
    rev
}

pub fn from_word(sys: &RootSystem, word: &[usize]) -> AffineWeylElement {
    let simples = simple_affine_roots(sys);
    word.iter().fold(
        AffineWeylElement::identity(sys.rank()),
        |acc, &i| compose_reflection(sys, &acc, &simples[i]),
    )
}

pub fn word_string(sys: &RootSystem, x: &AffineWeylElement) -> String {
    if x.is_identity() {
        return "e".to_string();
    }
    word(sys, x)
        .iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_word(sys: &RootSystem, s: &str) -> Result<AffineWeylElement> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(AffineWeylElement::identity(sys.rank()));
    }
    let simples = simple_affine_roots(sys);
    let mut x = AffineWeylElement::identity(sys.rank());
    for tok in s.split_whitespace() {
        let idx: usize = tok
            .strip_prefix('s')
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad generator '{tok}'")))?;
        if idx > sys.rank() {
            return Err(Error::Parse(format!("generator index out of range '{tok}'")));
        }
        x = compose_reflection(sys, &x, &simples[idx]);
    }
    Ok(x)
}

/// Independent length computation: counts positive real roots sent to
/// negative ones, scanning for each finite root the delta-window
/// `|<beta, lambda>| + 1`, which provably contains all inversions.
pub fn length_by_inversions(sys: &RootSystem, x: &AffineWeylElement) -> usize {
    let mut count = 0usize;
    for beta in sys.roots() {
        let bound = pair_coweight(sys, beta, &x.lambda).abs() + 1;
        let lo = if beta.is_positive() { 0 } else { 1 };
        for n in lo..=bound {
            let a = AffineRoot::new(beta.clone(), n);
            if act(sys, x, &a).is_negative() {
                count += 1;
            }
        }
    }
    count
}

/// Affine Bruhat order via the lifting recursion over `Delta ∪ {delta-theta}`,
/// memoized per root system.
pub fn bruhat_leq(sys: &RootSystem, x: &AffineWeylElement, y: &AffineWeylElement) -> bool {
    if x == y {
        return true;
    }
    let lx = length(sys, x);
    let ly = length(sys, y);
    if lx >= ly {
        return false;
    }
    let simples = simple_affine_roots(sys);
    bruhat_rec(sys, &simples, x.clone(), lx, y.clone(), ly)
}

fn bruhat_rec(
    sys: &RootSystem,
    simples: &[AffineRoot],
    x: AffineWeylElement,
    lx: usize,
    y: AffineWeylElement,
    ly: usize,
) -> bool {
    // invariant: x != y, lx < ly
    if lx == 0 {
        return true;
    }
    let key = (x.key(), y.key());
    if let Some(&r) = sys.affine_bruhat_cache.lock().unwrap().get(&key) {
        return r;
    }
    let a = simples
        .iter()
        .find(|a| act(sys, &y, a).is_negative())
        .expect("ly > 0");
    let y2 = compose_reflection(sys, &y, a);
    let r = if act(sys, &x, a).is_negative() {
        let x2 = compose_reflection(sys, &x, a);
        x2 == y2 || (lx - 1 < ly - 1 && bruhat_rec(sys, simples, x2, lx - 1, y2, ly - 1))
    } else {
        x == y2 || (lx < ly - 1 && bruhat_rec(sys, simples, x, lx, y2, ly - 1))
    };
    sys.affine_bruhat_cache.lock().unwrap().insert(key, r);
    r
}

/// An involution of the affine Weyl group together with `rk(id - sigma)`,
/// carried as the cardinality of the orthogonal set it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineInvolution {
    pub element: AffineWeylElement,
    pub moved_rank: usize,
    pub len: usize,
}

impl AffineInvolution {
    pub fn identity(n: usize) -> Self {
        AffineInvolution {
            element: AffineWeylElement::identity(n),
            moved_rank: 0,
            len: 0,
        }
    }

    /// The involution length `L(sigma) = (l(sigma) + rk(id - sigma)) / 2`.
    pub fn inv_length(&self) -> usize {
        debug_assert_eq!((self.len + self.moved_rank) % 2, 0);
        (self.len + self.moved_rank) / 2
    }
}

/// `sigma_{S^} = prod_{alpha in S} s_{alpha - delta}` for a strongly
/// orthogonal set `S` of finite roots; the factors commute.
pub fn sigma_of_set(sys: &RootSystem, set: &OrthSet) -> AffineInvolution {
    sigma_of_roots(sys, set.roots()).expect("OrthSet is strongly orthogonal")
}

pub fn sigma_of_roots(sys: &RootSystem, roots: &[Root]) -> Result<AffineInvolution> {
    for (i, a) in roots.iter().enumerate() {
        for b in roots.iter().skip(i + 1) {
            if !sys.strongly_orthogonal(a, b)? {
                return Err(Error::NotStronglyOrthogonal(format!(
                    "{a} and {b} are not strongly orthogonal"
                )));
            }
        }
    }
    let mut x = AffineWeylElement::identity(sys.rank());
    for alpha in roots {
        x = compose_reflection(sys, &x, &AffineRoot::new(alpha.clone(), -1));
    }
    let len = length(sys, &x);
    let inv = AffineInvolution {
        element: x,
        moved_rank: roots.len(),
        len,
    };
    debug_assert!(compose(sys, &inv.element, &inv.element).is_identity());
    debug_assert_eq!(moved_rank_by_matrix(sys, &inv.element), inv.moved_rank);
    Ok(inv)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentType {
    None,
    Real,
    Complex,
}

/// Classifies a simple affine root against an involution: no descent if
/// `sigma(a) > 0`, real if `sigma(a) = -a`, complex otherwise.
pub fn descent_type(sys: &RootSystem, a: &AffineRoot, sigma: &AffineInvolution) -> DescentType {
    let img = act(sys, &sigma.element, a);
    if img.is_positive() {
        DescentType::None
    } else if img == a.neg() {
        DescentType::Real
    } else {
        DescentType::Complex
    }
}

/// The Richardson-Springer move `s_a ∘ sigma`: `s_a sigma` when the two
/// commute, `s_a sigma s_a` otherwise. `moved_rank` changes by one exactly
/// in the commuting cases.
pub fn circ(sys: &RootSystem, a: &AffineRoot, sigma: &AffineInvolution) -> AffineInvolution {
    let img = act(sys, &sigma.element, a);
    let s_a = affine_reflect(sys, a).expect("a is a real root");
    let (element, moved_rank, len) = if img == *a {
        // commuting ascent: the reflection joins the involution
        (
            compose(sys, &s_a, &sigma.element),
            sigma.moved_rank + 1,
            sigma.len + 1,
        )
    } else if img == a.neg() {
        // commuting descent
        (
            compose(sys, &s_a, &sigma.element),
            sigma.moved_rank - 1,
            sigma.len - 1,
        )
    } else {
        let conj = compose(sys, &compose(sys, &s_a, &sigma.element), &s_a);
        let len = if img.is_negative() {
            sigma.len - 2
        } else {
            sigma.len + 2
        };
        (conj, sigma.moved_rank, len)
    };
    let out = AffineInvolution {
        element,
        moved_rank,
        len,
    };
    debug_assert_eq!(length(sys, &out.element), out.len);
    debug_assert!(compose(sys, &out.element, &out.element).is_identity());
    debug_assert_eq!(moved_rank_by_matrix(sys, &out.element), out.moved_rank);
    out
}

/// Height read off the involution: the largest delta-coefficient of
/// `sigma(alpha)` over the finite roots `alpha`.
pub fn involution_height(sys: &RootSystem, sigma: &AffineInvolution) -> i64 {
    sys.roots()
        .iter()
        .map(|r| act(sys, &sigma.element, &AffineRoot::finite(r.clone())).n)
        .max()
        .unwrap_or(0)
        .max(0)
}

/// `rk(id - x)` on the (rank+1)-dimensional lattice spanned by the simple
/// roots and delta. Used as a debug cross-check of the carried rank.
pub fn moved_rank_by_matrix(sys: &RootSystem, x: &AffineWeylElement) -> usize {
    let n = sys.rank();
    let mut m = vec![vec![0i128; n + 1]; n + 1];
    for j in 0..n {
        let img = act(sys, x, &AffineRoot::finite(sys.simple_root(j).clone()));
        for i in 0..n {
            let v = if i == j { 1 } else { 0 };
            m[i][j] = (v - img.finite.coords[i]) as i128;
        }
        m[n][j] = -(img.n as i128);
    }
    // delta is fixed: last column of id - x is zero
    integer_rank(m)
}

fn integer_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        for r in 0..rows {
            if r != row && m[r][col] != 0 {
                let (a, b) = (m[row][col], m[r][col]);
                for c in 0..cols {
                    m[r][c] = m[r][c] * a - m[row][c] * b;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}
