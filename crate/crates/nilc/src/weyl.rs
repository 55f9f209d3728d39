//! The finite Weyl group: elements stored by their integer action matrix on
//! simple-root coordinates, with length, Bruhat order, and parabolic
//! quotients. Words are recovered on demand by descent peeling.

use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

/// A Weyl group element as the matrix sending simple-root coordinate vectors
/// to coordinate vectors (column `j` is the image of `alpha_j`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    mat: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElement { n, mat }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.n)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub(crate) fn mat_key(&self) -> Vec<i64> {
        self.mat.clone()
    }

    pub fn act(&self, r: &Root) -> Root {
        let n = self.n;
        let mut out = vec![0i64; n];
        for (j, &c) in r.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..n {
                out[i] += self.mat[i * n + j] * c;
            }
        }
        Root::new(out)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc += self.mat[i * n + k] * other.mat[k * n + j];
                }
                mat[i * n + j] = acc;
            }
        }
        WeylElement { n, mat }
    }

    /// Image of `alpha_j` as a coordinate slice (matrix column).
    fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.mat[i * self.n + j]).collect()
    }

    /// First simple index `i` with `w(alpha_i)` negative, if any.
    pub fn right_descent(&self) -> Option<usize> {
        (0..self.n).find(|&j| (0..self.n).any(|i| self.mat[i * self.n + j] < 0))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({}x{})", self.n, self.n)
    }
}

/// The reflection `s_alpha`, acting by `s_alpha(beta) = beta - <beta,alpha^vee> alpha`.
pub fn reflect(sys: &RootSystem, alpha: &Root) -> Result<WeylElement> {
    let ai = sys.check_root(alpha)?;
    let n = sys.rank();
    let mut mat = vec![0i64; n * n];
    for j in 0..n {
        let p = sys.pairing_by_index(sys.simple_root(j), ai);
        for i in 0..n {
            let mut v = if i == j { 1 } else { 0 };
            v -= p * alpha.coords[i];
            mat[i * n + j] = v;
        }
    }
    Ok(WeylElement { n, mat })
}

pub fn simple_reflection(sys: &RootSystem, i: usize) -> WeylElement {
    reflect(sys, sys.simple_root(i)).expect("simple root is a root")
}

/// Number of positive roots sent to negative roots.
pub fn length(sys: &RootSystem, w: &WeylElement) -> usize {
    sys.positive_roots()
        .filter(|b| w.act(b).is_negative())
        .count()
}

/// Inverse, computed from the permutation `w` induces on the root table.
pub fn inverse(sys: &RootSystem, w: &WeylElement) -> WeylElement {
    let n = sys.rank();
    let mut cols: Vec<Option<Vec<i64>>> = vec![None; n];
    let mut found = 0;
    for gamma in sys.roots() {
        let img = w.act(gamma);
        if img.coord_sum() == 1 && img.is_positive() {
            if let Some(j) = img.coords.iter().position(|&c| c == 1) {
                if img.coords.iter().filter(|&&c| c != 0).count() == 1 && cols[j].is_none() {
                    cols[j] = Some(gamma.coords.clone());
                    found += 1;
                    if found == n {
                        break;
                    }
                }
            }
        }
    }
    let mut mat = vec![0i64; n * n];
    for (j, col) in cols.into_iter().enumerate() {
        let col = col.expect("w permutes the roots");
        for i in 0..n {
            mat[i * n + j] = col[i];
        }
    }
    WeylElement { n, mat }
}

/// A reduced word for `w` (Bourbaki indices, 0-based), by right-descent peeling.
pub fn word(sys: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let mut x = w.clone();
    let mut rev = Vec::new();
    while let Some(i) = x.right_descent() {
        x = x.compose(&simple_reflection(sys, i));
        rev.push(i);
    }
    debug_assert!(x.is_identity());
    rev.reverse();
    rev
}

pub fn from_word(sys: &RootSystem, word: &[usize]) -> WeylElement {
    word.iter().fold(WeylElement::identity(sys.rank()), |acc, &i| {
        acc.compose(&simple_reflection(sys, i))
    })
}

/// Reduced word in text form, e.g. "s1 s3 s2" (1-based indices).
pub fn word_string(sys: &RootSystem, w: &WeylElement) -> String {
    if w.is_identity() {
        return "e".to_string();
    }
    word(sys, w)
        .iter()
        .map(|i| format!("s{}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_word(sys: &RootSystem, s: &str) -> Result<WeylElement> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(WeylElement::identity(sys.rank()));
    }
    let mut w = WeylElement::identity(sys.rank());
    for tok in s.split_whitespace() {
        let idx: usize = tok
            .strip_prefix('s')
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad generator '{tok}'")))?;
        if idx == 0 || idx > sys.rank() {
            return Err(Error::Parse(format!("generator index out of range '{tok}'")));
        }
        w = w.compose(&simple_reflection(sys, idx - 1));
    }
    Ok(w)
}

/// Longest element of the parabolic subgroup generated by `delta_l`.
pub fn longest_element(sys: &RootSystem, delta_l: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(sys.rank());
    loop {
        let asc = delta_l
            .iter()
            .copied()
            .find(|&i| w.act(sys.simple_root(i)).is_positive());
        match asc {
            Some(i) => w = w.compose(&simple_reflection(sys, i)),
            None => return w,
        }
    }
}

/// Bruhat order by the lifting recursion, memoized per root system.
pub fn bruhat_leq(sys: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    if u == w {
        return true;
    }
    let lu = length(sys, u);
    let lw = length(sys, w);
    if lu >= lw {
        return false;
    }
    bruhat_rec(sys, u.clone(), lu, w.clone(), lw)
}

fn bruhat_rec(sys: &RootSystem, u: WeylElement, lu: usize, w: WeylElement, lw: usize) -> bool {
    // invariant: u != w, lu < lw
    if lu == 0 {
        return true;
    }
    let key = (u.mat_key(), w.mat_key());
    if let Some(&r) = sys.bruhat_cache.lock().unwrap().get(&key) {
        return r;
    }
    let i = w.right_descent().expect("lw > 0");
    let s = simple_reflection(sys, i);
    let w2 = w.compose(&s);
    let r = if u.act(sys.simple_root(i)).is_negative() {
        let u2 = u.compose(&s);
        u2 == w2 || (lu - 1 < lw - 1 && bruhat_rec(sys, u2, lu - 1, w2, lw - 1))
    } else {
        u == w2 || (lu < lw - 1 && bruhat_rec(sys, u, lu, w2, lw - 1))
    };
    sys.bruhat_cache.lock().unwrap().insert(key, r);
    r
}

/// Parabolic data for a subset of the simple roots: the subgroup `W_L`, its
/// longest element, and the minimal coset representatives `W^P`.
#[derive(Debug, Clone)]
pub struct ParabolicData {
    pub delta_l: Vec<usize>,
    pub elements: Vec<WeylElement>,
    pub longest: WeylElement,
    pub wp_reps: Vec<WeylElement>,
}

/// True iff `w(alpha_i) > 0` for all `i` in `delta_l`, i.e. `w` is the
/// minimal representative of its coset `w W_L`.
pub fn is_minimal_rep(w: &WeylElement, delta_l: &[usize]) -> bool {
    delta_l.iter().all(|&j| {
        let col = w.column(j);
        col.iter().all(|&c| c >= 0)
    })
}

pub fn parabolic(sys: &RootSystem, delta_l: &[usize]) -> ParabolicData {
    let mut delta_l: Vec<usize> = delta_l.to_vec();
    delta_l.sort_unstable();
    delta_l.dedup();

    // W_L by closure under its own generators.
    let gens: Vec<WeylElement> = delta_l.iter().map(|&i| simple_reflection(sys, i)).collect();
    let mut elements = vec![WeylElement::identity(sys.rank())];
    let mut seen: std::collections::HashSet<WeylElement> = elements.iter().cloned().collect();
    let mut head = 0;
    while head < elements.len() {
        let w = elements[head].clone();
        head += 1;
        for g in &gens {
            let v = w.compose(g);
            if seen.insert(v.clone()) {
                elements.push(v);
            }
        }
    }
    elements.sort_by_key(|w| (length(sys, w), w.mat_key()));

    let longest = longest_element(sys, &delta_l);

    // Minimal coset representatives, level by level from the identity.
    let mut wp_reps = vec![WeylElement::identity(sys.rank())];
    let mut seen: std::collections::HashSet<WeylElement> = wp_reps.iter().cloned().collect();
    let mut frontier = wp_reps.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for i in 0..sys.rank() {
                let v = simple_reflection(sys, i).compose(u);
                if !seen.contains(&v) && is_minimal_rep(&v, &delta_l) {
                    seen.insert(v.clone());
                    next.push(v);
                }
            }
        }
        next.sort_by_key(|w| w.mat_key());
        next.dedup();
        wp_reps.extend(next.iter().cloned());
        frontier = next;
    }
    wp_reps.sort_by_key(|w| (length(sys, w), w.mat_key()));

    ParabolicData {
        delta_l,
        elements,
        longest,
        wp_reps,
    }
}

/// Unique factorization `w = (w)^P (w)_P` with `(w)^P` minimal in `w W_L`.
pub fn coset_decompose(
    sys: &RootSystem,
    delta_l: &[usize],
    w: &WeylElement,
) -> (WeylElement, WeylElement) {
    let mut x = w.clone();
    let mut v = WeylElement::identity(sys.rank());
    loop {
        let desc = delta_l
            .iter()
            .copied()
            .find(|&i| x.act(sys.simple_root(i)).is_negative());
        match desc {
            Some(i) => {
                let s = simple_reflection(sys, i);
                x = x.compose(&s);
                v = s.compose(&v);
            }
            None => break,
        }
    }
    debug_assert!(is_minimal_rep(&x, delta_l));
    (x, v)
}
