//! Strongly orthogonal subsets of a root system: characteristics, heights,
//! weighted Dynkin diagrams, the cascade construction, and enumerations.

use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

/// A strongly orthogonal subset of the roots, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrthSet {
    roots: Vec<Root>,
}

impl OrthSet {
    pub fn new(sys: &RootSystem, mut roots: Vec<Root>) -> Result<Self> {
        for r in &roots {
            sys.check_root(r)?;
        }
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if !sys.strongly_orthogonal_unchecked(&roots[i], &roots[j]) {
                    return Err(Error::NotStronglyOrthogonal(format!(
                        "{} and {} are not strongly orthogonal",
                        roots[i], roots[j]
                    )));
                }
            }
        }
        roots.sort();
        Ok(OrthSet { roots })
    }

    pub fn empty() -> Self {
        OrthSet { roots: Vec::new() }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    /// Image under a map of roots, revalidated.
    pub fn map(&self, sys: &RootSystem, f: impl Fn(&Root) -> Root) -> Result<OrthSet> {
        OrthSet::new(sys, self.roots.iter().map(f).collect())
    }
}

impl fmt::Display for OrthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.roots.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Parses the textual form "c,c,..;c,c,.."; the empty string (or "{}")
/// denotes the empty set.
pub fn parse_orth_set(sys: &RootSystem, s: &str) -> Result<OrthSet> {
    let s = s.trim();
    if s.is_empty() || s == "{}" {
        return Ok(OrthSet::empty());
    }
    let roots = s
        .split(';')
        .map(|p| sys.parse_root(p))
        .collect::<Result<Vec<Root>>>()?;
    OrthSet::new(sys, roots)
}

/// A coweight as an integer vector over the simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight {
    pub coords: Vec<i64>,
}

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight {
            coords: vec![0; n],
        }
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// The characteristic `h_S = sum of alpha^vee over alpha in S`.
pub fn characteristic(sys: &RootSystem, s: &OrthSet) -> Coweight {
    let mut h = vec![0i64; sys.rank()];
    for alpha in s.roots() {
        let cv = sys.coroot(alpha).expect("member of an OrthSet");
        for (i, c) in cv.iter().enumerate() {
            h[i] += c;
        }
    }
    Coweight { coords: h }
}

/// `max over gamma in Phi of <gamma, h_S>`; this equals the height of `e_S`
/// and is 0 exactly when `S` is empty.
pub fn height(sys: &RootSystem, s: &OrthSet) -> i64 {
    if s.is_empty() {
        return 0;
    }
    let h = characteristic(sys, s);
    sys.roots()
        .iter()
        .map(|g| sys.eval_coweight(g, &h.coords))
        .max()
        .expect("nonempty root system")
}

/// The labels `<alpha_i, h>` of a coweight on the simple roots.
pub fn labels(sys: &RootSystem, h: &Coweight) -> Vec<i64> {
    (0..sys.rank())
        .map(|i| sys.eval_coweight(sys.simple_root(i), &h.coords))
        .collect()
}

/// The unique dominant Weyl conjugate of a coweight, by greedy simple
/// reflections (lowest index first).
pub fn dominant_representative(sys: &RootSystem, h: &Coweight) -> Coweight {
    let mut h = h.clone();
    loop {
        let neg = (0..sys.rank())
            .find(|&i| sys.eval_coweight(sys.simple_root(i), &h.coords) < 0);
        match neg {
            None => return h,
            Some(i) => {
                let p = sys.eval_coweight(sys.simple_root(i), &h.coords);
                let cv = sys.coroot(sys.simple_root(i)).expect("simple root");
                for (k, c) in cv.iter().enumerate() {
                    h.coords[k] -= p * c;
                }
            }
        }
    }
}

/// Weighted Dynkin diagram of `e_S`: the labels of the dominant conjugate
/// of `h_S`.
pub fn weighted_dynkin(sys: &RootSystem, s: &OrthSet) -> Vec<i64> {
    let h = dominant_representative(sys, &characteristic(sys, s));
    labels(sys, &h)
}

/// The recursive cascade inside `psi`: greedily picks the unique maximal
/// root orthogonal to everything chosen so far. The dual minimal-first
/// construction is run as well and must produce the same set.
pub fn cascade(sys: &RootSystem, psi: &[Root]) -> Result<Vec<Root>> {
    let descending = cascade_directed(sys, psi, true)?;
    let ascending = cascade_directed(sys, psi, false)?;
    let mut d_sorted = descending.clone();
    d_sorted.sort();
    let mut a_sorted = ascending;
    a_sorted.sort();
    if d_sorted != a_sorted {
        return Err(Error::CascadeMismatch(format!(
            "maximal-first and minimal-first cascades differ on {{{}}}",
            psi.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(";")
        )));
    }
    Ok(descending)
}

fn cascade_directed(sys: &RootSystem, psi: &[Root], from_top: bool) -> Result<Vec<Root>> {
    let mut chosen: Vec<Root> = Vec::new();
    loop {
        let candidates: Vec<&Root> = psi
            .iter()
            .filter(|g| {
                chosen
                    .iter()
                    .all(|c| sys.pairing(g, c).expect("members of Phi") == 0)
            })
            .collect();
        if candidates.is_empty() {
            return Ok(chosen);
        }
        // extremal elements of the dominance order among the candidates
        let extremal: Vec<&Root> = candidates
            .iter()
            .filter(|g| {
                !candidates.iter().any(|o| {
                    *o != **g
                        && if from_top {
                            sys.dominance_leq(g, o).expect("roots")
                        } else {
                            sys.dominance_leq(o, g).expect("roots")
                        }
                })
            })
            .copied()
            .collect();
        if extremal.len() != 1 {
            return Err(Error::NonUniqueMaximum(format!(
                "{} extremal candidates at cascade step {}",
                extremal.len(),
                chosen.len() + 1
            )));
        }
        chosen.push(extremal[0].clone());
    }
}

/// `rk_G(S) = 2 * (number of short roots) + (number of long roots)`.
pub fn rank_g(sys: &RootSystem, s: &OrthSet) -> usize {
    s.roots()
        .iter()
        .map(|r| {
            if sys.is_long(r).expect("member of an OrthSet") {
                1
            } else {
                2
            }
        })
        .sum()
}

/// All orthogonal subsets of `psi`, including the empty one, canonically
/// sorted. For the root set of an abelian ideal, orthogonal subsets are
/// automatically strongly orthogonal.
pub fn enumerate_ort(sys: &RootSystem, psi: &[Root]) -> Vec<OrthSet> {
    let mut psi: Vec<Root> = psi.to_vec();
    psi.sort();
    let mut out = Vec::new();
    let mut current: Vec<Root> = Vec::new();
    backtrack_ort(sys, &psi, 0, &mut current, &mut out);
    out.sort();
    out
}

fn backtrack_ort(
    sys: &RootSystem,
    psi: &[Root],
    from: usize,
    current: &mut Vec<Root>,
    out: &mut Vec<OrthSet>,
) {
    out.push(OrthSet::new(sys, current.clone()).expect("orthogonal subset of an abelian ideal"));
    for k in from..psi.len() {
        let cand = &psi[k];
        if current
            .iter()
            .all(|c| sys.pairing(cand, c).expect("roots") == 0)
        {
            current.push(cand.clone());
            backtrack_ort(sys, psi, k + 1, current, out);
            current.pop();
        }
    }
}

/// All strongly orthogonal subsets `S` of `Phi` (positive and negative roots
/// allowed) with `height(S) <= 2`; these are in bijection with the B-orbits
/// of the height-2 nilpotent locus. Heights are filtered at the leaves, the
/// search tree prunes only on strong orthogonality.
pub fn enumerate_height2_sets(sys: &RootSystem) -> Vec<OrthSet> {
    let roots = sys.roots();
    let mut out = Vec::new();
    let mut current: Vec<Root> = Vec::new();
    backtrack_h2(sys, roots, 0, &mut current, &mut out);
    out.sort();
    out
}

fn backtrack_h2(
    sys: &RootSystem,
    roots: &[Root],
    from: usize,
    current: &mut Vec<Root>,
    out: &mut Vec<OrthSet>,
) {
    let set = OrthSet::new(sys, current.clone()).expect("built pairwise strongly orthogonal");
    if height(sys, &set) <= 2 {
        out.push(set);
    }
    for k in from..roots.len() {
        let cand = &roots[k];
        if current
            .iter()
            .all(|c| sys.strongly_orthogonal_unchecked(cand, c))
        {
            current.push(cand.clone());
            backtrack_h2(sys, roots, k + 1, current, out);
            current.pop();
        }
    }
}

/// All strongly orthogonal subsets of `Phi` regardless of height. Used by
/// the verification suites.
pub fn enumerate_strongly_orthogonal_sets(sys: &RootSystem) -> Vec<OrthSet> {
    let roots = sys.roots();
    let mut out = Vec::new();
    let mut current: Vec<Root> = Vec::new();
    backtrack_all(sys, roots, 0, &mut current, &mut out);
    out.sort();
    out
}

fn backtrack_all(
    sys: &RootSystem,
    roots: &[Root],
    from: usize,
    current: &mut Vec<Root>,
    out: &mut Vec<OrthSet>,
) {
    out.push(OrthSet::new(sys, current.clone()).expect("built pairwise strongly orthogonal"));
    for k in from..roots.len() {
        let cand = &roots[k];
        if current
            .iter()
            .all(|c| sys.strongly_orthogonal_unchecked(cand, c))
        {
            current.push(cand.clone());
            backtrack_all(sys, roots, k + 1, current, out);
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, TypeLetter};

    fn sys(letter: TypeLetter, rank: usize) -> RootSystem {
        RootSystem::build(CartanType::new(letter, rank).unwrap()).unwrap()
    }

    fn orth(sys: &RootSystem, roots: Vec<Vec<i64>>) -> OrthSet {
        OrthSet::new(sys, roots.into_iter().map(Root::new).collect()).unwrap()
    }

    #[test]
    fn characteristic_examples() {
        let a2 = sys(TypeLetter::A, 2);
        assert_eq!(
            characteristic(&a2, &OrthSet::empty()).coords,
            vec![0, 0]
        );
        let theta = orth(&a2, vec![vec![1, 1]]);
        assert_eq!(characteristic(&a2, &theta).coords, vec![1, 1]);

        // C2, S = {2e1, 2e2}: <e1-e2, h> = 0 and <2e2, h> = 2
        let c2 = sys(TypeLetter::C, 2);
        let s = orth(&c2, vec![vec![2, 1], vec![0, 1]]);
        let h = characteristic(&c2, &s);
        assert_eq!(c2.eval_coweight(&Root::new(vec![1, 0]), &h.coords), 0);
        assert_eq!(c2.eval_coweight(&Root::new(vec![0, 1]), &h.coords), 2);
        // <alpha, h_S> = 2 for alpha in S
        for alpha in s.roots() {
            assert_eq!(c2.eval_coweight(alpha, &h.coords), 2);
        }
    }

    #[test]
    fn height_examples() {
        let a2 = sys(TypeLetter::A, 2);
        let theta = orth(&a2, vec![vec![1, 1]]);
        assert_eq!(height(&a2, &theta), 2);

        let b3 = sys(TypeLetter::B, 3);
        // {e1, e2-e3} has height 3 (gamma = e1+e2 gives 2+1)
        let s = orth(&b3, vec![vec![1, 1, 1], vec![0, 1, 0]]);
        assert_eq!(height(&b3, &s), 3);
        // {e1-e2, e1+e2, e3} has height 4 (gamma = e1+e3 gives 4)
        let s = orth(&b3, vec![vec![1, 0, 0], vec![1, 2, 2], vec![0, 0, 1]]);
        assert_eq!(height(&b3, &s), 4);
        // nonempty sets have height >= 2 and <= 4
        for set in enumerate_strongly_orthogonal_sets(&b3) {
            if !set.is_empty() {
                let h = height(&b3, &set);
                assert!((2..=4).contains(&h), "{set}: height {h}");
            }
        }
    }

    #[test]
    fn weighted_dynkin_examples() {
        let a2 = sys(TypeLetter::A, 2);
        assert_eq!(
            weighted_dynkin(&a2, &orth(&a2, vec![vec![1, 1]])),
            vec![1, 1]
        );
        let g2 = sys(TypeLetter::G, 2);
        assert_eq!(
            weighted_dynkin(&g2, &orth(&g2, vec![vec![3, 2]])),
            vec![0, 1]
        );
        let c3 = sys(TypeLetter::C, 3);
        // {2e1, 2e2, 2e3}
        let s = orth(&c3, vec![vec![2, 2, 1], vec![0, 2, 1], vec![0, 0, 1]]);
        assert_eq!(weighted_dynkin(&c3, &s), vec![0, 0, 2]);
    }

    #[test]
    fn cascade_examples() {
        let a2 = sys(TypeLetter::A, 2);
        let theta = a2.highest_root().clone();
        assert_eq!(cascade(&a2, &[theta.clone()]).unwrap(), vec![theta]);

        // C3: Psi = {e_i + e_j, i <= j} cascades to [2e1, 2e2, 2e3]
        let c3 = sys(TypeLetter::C, 3);
        let psi: Vec<Root> = vec![
            vec![2, 2, 1],
            vec![1, 2, 1],
            vec![1, 1, 1],
            vec![0, 2, 1],
            vec![0, 1, 1],
            vec![0, 0, 1],
        ]
        .into_iter()
        .map(Root::new)
        .collect();
        let casc = cascade(&c3, &psi).unwrap();
        assert_eq!(
            casc,
            vec![
                Root::new(vec![2, 2, 1]),
                Root::new(vec![0, 2, 1]),
                Root::new(vec![0, 0, 1])
            ]
        );

        // B3: Psi = {e1, e1 +- e2, e1 +- e3} cascades to [e1+e2, e1-e2]
        let b3 = sys(TypeLetter::B, 3);
        let psi: Vec<Root> = vec![
            vec![1, 1, 1],
            vec![1, 0, 0],
            vec![1, 2, 2],
            vec![1, 1, 0],
            vec![1, 1, 2],
        ]
        .into_iter()
        .map(Root::new)
        .collect();
        let casc = cascade(&b3, &psi).unwrap();
        assert_eq!(
            casc,
            vec![Root::new(vec![1, 2, 2]), Root::new(vec![1, 0, 0])]
        );
        // cascade roots are long
        for g in &casc {
            assert!(b3.is_long(g).unwrap());
        }
    }

    #[test]
    fn rank_g_examples() {
        let c2 = sys(TypeLetter::C, 2);
        assert_eq!(rank_g(&c2, &OrthSet::empty()), 0);
        assert_eq!(rank_g(&c2, &orth(&c2, vec![vec![1, 1]])), 2);
        assert_eq!(rank_g(&c2, &orth(&c2, vec![vec![2, 1], vec![0, 1]])), 2);
    }

    #[test]
    fn enumerate_ort_examples() {
        let a2 = sys(TypeLetter::A, 2);
        let theta = a2.highest_root().clone();
        assert_eq!(enumerate_ort(&a2, &[theta]).len(), 2);

        let c2 = sys(TypeLetter::C, 2);
        let psi: Vec<Root> = vec![vec![2, 1], vec![1, 1], vec![0, 1]]
            .into_iter()
            .map(Root::new)
            .collect();
        assert_eq!(enumerate_ort(&c2, &psi).len(), 5);

        // A3, diagram (0,2,0): Psi = {a2, a1+a2, a2+a3, theta} has 7 subsets
        let a3 = sys(TypeLetter::A, 3);
        let psi: Vec<Root> = vec![
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ]
        .into_iter()
        .map(Root::new)
        .collect();
        assert_eq!(enumerate_ort(&a3, &psi).len(), 7);
    }

    #[test]
    fn enumerate_height2_examples() {
        let a1 = sys(TypeLetter::A, 1);
        assert_eq!(enumerate_height2_sets(&a1).len(), 3);

        let a2 = sys(TypeLetter::A, 2);
        let sets = enumerate_height2_sets(&a2);
        assert_eq!(sets.len(), 7);
        assert!(sets.iter().filter(|s| s.is_empty()).count() == 1);
        assert!(sets.iter().all(|s| s.len() <= 1));
    }

    #[test]
    fn types_a_c_every_strongly_orthogonal_set_has_height_at_most_2() {
        for (l, n) in [
            (TypeLetter::A, 3),
            (TypeLetter::A, 4),
            (TypeLetter::C, 3),
            (TypeLetter::C, 4),
        ] {
            let s = sys(l, n);
            let all = enumerate_strongly_orthogonal_sets(&s);
            let h2 = enumerate_height2_sets(&s);
            assert_eq!(all.len(), h2.len(), "{l}{n}");
            for set in all {
                assert!(height(&s, &set) <= 2);
            }
        }
    }

    #[test]
    fn orth_set_rejects_bad_input() {
        let a2 = sys(TypeLetter::A, 2);
        let a = a2.simple_root(0).clone();
        let b = a2.simple_root(1).clone();
        assert!(OrthSet::new(&a2, vec![a.clone(), b]).is_err());
        assert!(OrthSet::new(&a2, vec![a.clone(), a.neg()]).is_err());
        assert!(OrthSet::new(&a2, vec![a.clone(), a.clone()]).is_err());
    }

    #[test]
    fn set_text_roundtrip() {
        let b3 = sys(TypeLetter::B, 3);
        let s = parse_orth_set(&b3, "1,0,0;1,2,2").unwrap();
        assert_eq!(s.to_string(), "1,0,0;1,2,2");
        assert_eq!(parse_orth_set(&b3, "").unwrap(), OrthSet::empty());
    }
}
