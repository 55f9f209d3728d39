//! B-orbit posets: the height-2 nilpotent locus, the resolutions
//! `G x_P a` of the catalogued orbit closures, closure order, dimensions,
//! admissible pairs, fibers, descents, and the F_alpha moves.

use std::collections::HashMap;

use crate::affine_weyl::{self, AffineInvolution, AffineRoot, DescentType};
use crate::catalogue::{self, Height2Orbit};
use crate::error::{Error, Result};
use crate::orthogonal::{self, OrthSet};
use crate::root_system::{Root, RootSystem};
use crate::weyl::{self, WeylElement};

/// A B-orbit of the height-2 nilpotent locus, keyed by its strongly
/// orthogonal set; `dim = L(sigma) = (l(sigma) + |S|)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BOrbit {
    pub set: OrthSet,
    pub sigma: AffineInvolution,
    pub dim: usize,
    pub g_orbit: String,
}

/// A B-orbit of the resolution, as a pair `(w, S)` in `W^P x Ort(Psi)`;
/// `sigma` is the involution of the translated set `w(S)` and
/// `dim = l(w) + L(sigma_S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildePair {
    pub w: WeylElement,
    pub set: OrthSet,
    pub sigma: AffineInvolution,
    pub dim: usize,
    pub admissible: bool,
}

/// A finite poset of orbit nodes with its full order relation, Hasse cover
/// edges, and per-node tags naming the irreducible components (the
/// closure-maximal G-orbits) the node lies in.
#[derive(Debug, Clone)]
pub struct OrbitPoset<N> {
    pub nodes: Vec<N>,
    pub leq: Vec<Vec<bool>>,
    pub covers: Vec<(usize, usize)>,
    pub component_tags: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentClass {
    External,
    InternalReal,
    InternalComplex,
}

/// Minimal transitive edge set generating the strict order.
pub fn hasse(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let strict = |i: usize, j: usize| i != j && leq[i][j];
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if strict(i, j) && !(0..n).any(|k| strict(i, k) && strict(k, j)) {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    covers
}

/// The B-orbit poset of the height-2 nilpotent locus. The zero orbit
/// (`S` empty, sigma the identity) is included as the global minimum.
pub fn enumerate_n2(sys: &RootSystem, cat: &[Height2Orbit]) -> OrbitPoset<BOrbit> {
    let sets = orthogonal::enumerate_height2_sets(sys);
    let mut nodes: Vec<BOrbit> = sets
        .into_iter()
        .map(|set| {
            let sigma = affine_weyl::sigma_of_set(sys, &set);
            let dim = sigma.inv_length();
            let g_orbit = if set.is_empty() {
                "zero".to_string()
            } else {
                catalogue::g_orbit_of_set(sys, cat, &set)
                    .expect("height-2 set")
                    .id
                    .clone()
            };
            BOrbit {
                set,
                sigma,
                dim,
                g_orbit,
            }
        })
        .collect();
    nodes.sort_by_key(|a| (a.dim, a.set.clone()));
    let leq: Vec<Vec<bool>> = nodes
        .iter()
        .map(|a| {
            nodes
                .iter()
                .map(|b| affine_weyl::bruhat_leq(sys, &a.sigma.element, &b.sigma.element))
                .collect()
        })
        .collect();
    let covers = hasse(&leq);
    let maximal: Vec<&Height2Orbit> = cat
        .iter()
        .filter(|o| {
            !cat.iter()
                .any(|p| p.id != o.id && catalogue::g_closure_leq(o, p))
        })
        .collect();
    let component_tags = nodes
        .iter()
        .map(|n| {
            maximal
                .iter()
                .filter(|m| {
                    n.g_orbit == "zero"
                        || cat
                            .iter()
                            .find(|o| o.id == n.g_orbit)
                            .map(|o| catalogue::g_closure_leq(o, m))
                            .unwrap_or(false)
                })
                .map(|m| m.id.clone())
                .collect()
        })
        .collect();
    OrbitPoset {
        nodes,
        leq,
        covers,
        component_tags,
    }
}

/// Closure order on the B-orbits of the height-2 locus: Bruhat comparison of
/// the attached affine involutions. Refuses sets of height 3 or 4, where
/// only one implication is known.
pub fn closure_leq_n2(sys: &RootSystem, r: &OrthSet, s: &OrthSet) -> Result<bool> {
    for set in [r, s] {
        let h = orthogonal::height(sys, set);
        if h > 2 {
            return Err(Error::HeightOutOfRange(format!(
                "closure order is only decidable at height <= 2, got height {h} for {set}"
            )));
        }
    }
    let sr = affine_weyl::sigma_of_set(sys, r);
    let ss = affine_weyl::sigma_of_set(sys, s);
    Ok(affine_weyl::bruhat_leq(sys, &sr.element, &ss.element))
}

/// Minimal coset representatives of `W / W_L`, level by level.
fn minimal_coset_reps(sys: &RootSystem, delta_l: &[usize]) -> Vec<WeylElement> {
    let mut reps = vec![WeylElement::identity(sys.rank())];
    let mut seen: std::collections::HashSet<WeylElement> = reps.iter().cloned().collect();
    let mut frontier = reps.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            for i in 0..sys.rank() {
                let v = weyl::simple_reflection(sys, i).compose(u);
                if !seen.contains(&v) && weyl::is_minimal_rep(&v, delta_l) {
                    seen.insert(v.clone());
                    next.push(v);
                }
            }
        }
        next.sort_by_key(|w| w.mat_key());
        next.dedup();
        reps.extend(next.iter().cloned());
        frontier = next;
    }
    reps.sort_by_key(|w| (weyl::length(sys, w), w.mat_key()));
    reps
}

/// The resolution `G x_P a` of one catalogued orbit closure, with its
/// parabolic data precomputed.
pub struct Resolution<'a> {
    pub sys: &'a RootSystem,
    pub orbit: &'a Height2Orbit,
    wp_reps: Vec<WeylElement>,
    wp_inverses: Vec<WeylElement>,
    wp_lengths: Vec<usize>,
}

impl<'a> Resolution<'a> {
    pub fn new(sys: &'a RootSystem, orbit: &'a Height2Orbit) -> Self {
        let wp_reps = minimal_coset_reps(sys, &orbit.delta_l);
        let wp_inverses = wp_reps.iter().map(|w| weyl::inverse(sys, w)).collect();
        let wp_lengths = wp_reps.iter().map(|w| weyl::length(sys, w)).collect();
        Resolution {
            sys,
            orbit,
            wp_reps,
            wp_inverses,
            wp_lengths,
        }
    }

    pub fn wp_reps(&self) -> &[WeylElement] {
        &self.wp_reps
    }

    fn in_psi(&self, r: &Root) -> bool {
        self.orbit.psi.contains(r)
    }

    /// Builds the node `(w, S)` with its involution, dimension, and
    /// admissibility flag.
    pub fn make_pair(&self, w: &WeylElement, set: &OrthSet) -> TildePair {
        let sys = self.sys;
        let moved: Vec<Root> = set.roots().iter().map(|r| w.act(r)).collect();
        let sigma = affine_weyl::sigma_of_roots(sys, &moved)
            .expect("w(S) is strongly orthogonal");
        let sigma_s = affine_weyl::sigma_of_set(sys, set);
        let dim = weyl::length(sys, w) + sigma_s.inv_length();
        let admissible = match self.minimal_rep_for_roots(&moved) {
            Some((idx, _)) => self.wp_reps[idx] == *w,
            None => false,
        };
        TildePair {
            w: w.clone(),
            set: set.clone(),
            sigma,
            dim,
            admissible,
        }
    }

    /// Index of the minimal-length `w` in `W^P` with `w^{-1}(R) ⊆ Psi`,
    /// together with the moved set.
    fn minimal_rep_for_roots(&self, r: &[Root]) -> Option<(usize, Vec<Root>)> {
        for (idx, winv) in self.wp_inverses.iter().enumerate() {
            let back: Vec<Root> = r.iter().map(|x| winv.act(x)).collect();
            if back.iter().all(|x| self.in_psi(x)) {
                debug_assert!(
                    {
                        let len = self.wp_lengths[idx];
                        !self
                            .wp_inverses
                            .iter()
                            .enumerate()
                            .any(|(j, wj)| {
                                j != idx
                                    && self.wp_lengths[j] == len
                                    && r.iter().all(|x| self.in_psi(&wj.act(x)))
                            })
                    },
                    "minimal representative is not unique"
                );
                return Some((idx, back));
            }
        }
        None
    }

    /// The admissible pair of `R in Ort(X)`: the unique minimal-length
    /// `w in W^P` with `w^{-1}(R) ⊆ Psi`, paired with `S = w^{-1}(R)`.
    pub fn admissible_pair(&self, r: &OrthSet) -> Result<TildePair> {
        let (idx, back) = self.minimal_rep_for_roots(r.roots()).ok_or_else(|| {
            Error::NotInOrtX(format!(
                "{r} is not W^P-conjugate into the abelian ideal of {}",
                self.orbit.id
            ))
        })?;
        let set = OrthSet::new(self.sys, back)?;
        Ok(self.make_pair(&self.wp_reps[idx], &set))
    }

    /// All pairs `(w, w^{-1}(R))` over `w in W^P` with `w^{-1}(R) ⊆ Psi`.
    pub fn fiber(&self, r: &OrthSet) -> Result<Vec<TildePair>> {
        let mut out = Vec::new();
        for (idx, winv) in self.wp_inverses.iter().enumerate() {
            let back: Vec<Root> = r.roots().iter().map(|x| winv.act(x)).collect();
            if back.iter().all(|x| self.in_psi(x)) {
                let set = OrthSet::new(self.sys, back)?;
                out.push(self.make_pair(&self.wp_reps[idx], &set));
            }
        }
        if out.is_empty() {
            return Err(Error::NotInOrtX(format!(
                "{r} is not W^P-conjugate into the abelian ideal of {}",
                self.orbit.id
            )));
        }
        debug_assert_eq!(out.iter().filter(|p| p.admissible).count(), 1);
        Ok(out)
    }

    /// Closure order on the resolution: `(v,R) <= (w,S)` iff `v <= w` and
    /// `sigma_{v(R^)} <= sigma_{w(S^)}`.
    pub fn pair_leq(&self, p: &TildePair, q: &TildePair) -> bool {
        weyl::bruhat_leq(self.sys, &p.w, &q.w)
            && affine_weyl::bruhat_leq(self.sys, &p.sigma.element, &q.sigma.element)
    }

    /// The full B-orbit poset of the resolution, nodes `W^P x Ort(Psi)`.
    pub fn enumerate(&self) -> OrbitPoset<TildePair> {
        let orts = orthogonal::enumerate_ort(self.sys, &self.orbit.psi);
        let mut nodes = Vec::with_capacity(self.wp_reps.len() * orts.len());
        for w in &self.wp_reps {
            for set in &orts {
                nodes.push(self.make_pair(w, set));
            }
        }
        nodes.sort_by(|a, b| {
            (a.dim, a.w.mat_key(), a.set.clone()).cmp(&(b.dim, b.w.mat_key(), b.set.clone()))
        });
        let leq: Vec<Vec<bool>> = nodes
            .iter()
            .map(|a| nodes.iter().map(|b| self.pair_leq(a, b)).collect())
            .collect();
        let covers = hasse(&leq);
        let component_tags = nodes.iter().map(|_| vec![self.orbit.id.clone()]).collect();
        OrbitPoset {
            nodes,
            leq,
            covers,
            component_tags,
        }
    }

    /// Descents of a node: external when `s_alpha w < w`, internal when
    /// `alpha` is a descent of `sigma_{w(S^)}` (then `w^{-1}(alpha)` lies in
    /// `Delta_L`).
    pub fn descents(&self, p: &TildePair) -> Vec<(usize, DescentClass)> {
        let sys = self.sys;
        let winv = weyl::inverse(sys, &p.w);
        let mut out = Vec::new();
        for i in 0..sys.rank() {
            let beta = winv.act(sys.simple_root(i));
            if beta.is_negative() {
                out.push((i, DescentClass::External));
                continue;
            }
            let a = AffineRoot::finite(sys.simple_root(i).clone());
            match affine_weyl::descent_type(sys, &a, &p.sigma) {
                DescentType::None => {}
                DescentType::Real => {
                    debug_assert!(self.is_delta_l_simple(&beta));
                    out.push((i, DescentClass::InternalReal));
                }
                DescentType::Complex => {
                    debug_assert!(self.is_delta_l_simple(&beta));
                    out.push((i, DescentClass::InternalComplex));
                }
            }
        }
        out
    }

    fn is_delta_l_simple(&self, beta: &Root) -> bool {
        self.orbit
            .delta_l
            .iter()
            .any(|&k| self.sys.simple_root(k) == beta)
    }

    /// The degeneration move `F_alpha`: `(s_alpha w, S)` on an external
    /// descent, `(w, s_beta(S))` on an internal complex descent, and the
    /// root-exchange set on an internal real descent.
    pub fn f_alpha(&self, p: &TildePair, i: usize) -> Result<TildePair> {
        let sys = self.sys;
        let alpha = sys.simple_root(i).clone();
        let winv = weyl::inverse(sys, &p.w);
        let beta = winv.act(&alpha);
        if beta.is_negative() {
            let w2 = weyl::simple_reflection(sys, i).compose(&p.w);
            return Ok(self.make_pair(&w2, &p.set));
        }
        let a = AffineRoot::finite(alpha);
        match affine_weyl::descent_type(sys, &a, &p.sigma) {
            DescentType::None => Err(Error::NotADescent(format!(
                "alpha_{} is not a descent of this pair",
                i + 1
            ))),
            DescentType::Complex => {
                let s_beta = weyl::reflect(sys, &beta)?;
                let moved = p.set.map(sys, |r| s_beta.act(r))?;
                debug_assert!(moved.roots().iter().all(|r| self.in_psi(r)));
                Ok(self.make_pair(&p.w, &moved))
            }
            DescentType::Real => {
                let set = real_exchange(sys, &p.set, &beta)?;
                debug_assert!(set.roots().iter().all(|r| self.in_psi(r)));
                Ok(self.make_pair(&p.w, &set))
            }
        }
    }
}

/// For a real descent `beta` of `sigma_{S^}` there are unique
/// `gamma_1, gamma_2 in S` with `beta = (gamma_1 - gamma_2)/2`; the move
/// replaces them by `beta + gamma_2`.
fn real_exchange(sys: &RootSystem, set: &OrthSet, beta: &Root) -> Result<OrthSet> {
    let two_beta: Vec<i64> = beta.coords.iter().map(|c| 2 * c).collect();
    let mut found = None;
    for g1 in set.roots() {
        for g2 in set.roots() {
            if g1 != g2 && g1.sub(g2).coords == two_beta {
                debug_assert!(found.is_none(), "real-descent pair is not unique");
                found = Some((g1.clone(), g2.clone()));
            }
        }
    }
    let (g1, g2) = found.ok_or_else(|| {
        Error::NotADescent(format!(
            "no pair in {set} realizes the real descent {beta}"
        ))
    })?;
    let mut roots: Vec<Root> = set
        .roots()
        .iter()
        .filter(|r| **r != g1 && **r != g2)
        .cloned()
        .collect();
    roots.push(beta.add(&g2));
    OrthSet::new(sys, roots)
}

/// The N2-level move `F_alpha(S)` along a descent `alpha` of `sigma_{S^}`:
/// `s_alpha(S)` when complex, the root exchange when real.
pub fn f_alpha_set(sys: &RootSystem, set: &OrthSet, i: usize) -> Result<OrthSet> {
    let alpha = sys.simple_root(i).clone();
    let sigma = affine_weyl::sigma_of_set(sys, set);
    let a = AffineRoot::finite(alpha.clone());
    match affine_weyl::descent_type(sys, &a, &sigma) {
        DescentType::None => Err(Error::NotADescent(format!(
            "alpha_{} is not a descent of sigma for {set}",
            i + 1
        ))),
        DescentType::Complex => {
            let s = weyl::reflect(sys, &alpha)?;
            set.map(sys, |r| s.act(r))
        }
        DescentType::Real => real_exchange(sys, set, &alpha),
    }
}

/// The classes `Ort(X) = {w(S) | w in W, S in Ort(Psi)}` of an orbit
/// closure, deduplicated and canonically sorted.
pub fn ort_x(sys: &RootSystem, orbit: &Height2Orbit) -> Vec<OrthSet> {
    let all: Vec<usize> = (0..sys.rank()).collect();
    let w_elements = weyl::parabolic(sys, &all).elements;
    let orts = orthogonal::enumerate_ort(sys, &orbit.psi);
    let mut seen: std::collections::HashSet<OrthSet> = std::collections::HashSet::new();
    let mut out = Vec::new();
    for w in &w_elements {
        for s in &orts {
            let moved = s
                .map(sys, |r| w.act(r))
                .expect("Weyl image of a strongly orthogonal set");
            if seen.insert(moved.clone()) {
                out.push(moved);
            }
        }
    }
    out.sort();
    out
}

/// Order isomorphism check of the fiber over `R` against the Schubert poset
/// `W_{L_i^*}^{L_i^* ∩ P}` of the centralizer Levi, where `i = rk_G(R)`.
pub fn fiber_iso_check(
    sys: &RootSystem,
    cat: &[Height2Orbit],
    res: &Resolution<'_>,
    r: &OrthSet,
) -> Result<bool> {
    let members = res.fiber(r)?;
    let i = orthogonal::rank_g(sys, r);
    if i >= res.orbit.delta_star.len() {
        return Ok(false);
    }
    let delta_star = &res.orbit.delta_star[i];

    // Admissible pair of R with respect to the i-th orbit in the chain.
    let (v, s_i) = if i == 0 {
        (WeylElement::identity(sys.rank()), OrthSet::empty())
    } else {
        let mut h_i = vec![0i64; sys.rank()];
        for gamma in &res.orbit.cascade[..i] {
            let cv = sys.coroot(gamma)?;
            for (k, c) in cv.iter().enumerate() {
                h_i[k] += c;
            }
        }
        let labels: Vec<i64> = (0..sys.rank())
            .map(|k| sys.eval_coweight(sys.simple_root(k), &h_i))
            .collect();
        let o_i = cat
            .iter()
            .find(|o| o.diagram == labels)
            .ok_or_else(|| Error::NotInCatalogue(format!("no entry with diagram {labels:?}")))?;
        let res_i = Resolution::new(sys, o_i);
        let pair = res_i.admissible_pair(r)?;
        (pair.w, pair.set)
    };

    // Minimal representatives of W_{Delta*} modulo W_{Delta* ∩ Delta_L}.
    let sub = weyl::parabolic(sys, delta_star);
    let inter: Vec<usize> = delta_star
        .iter()
        .copied()
        .filter(|k| res.orbit.delta_l.contains(k))
        .collect();
    let reps: Vec<WeylElement> = sub
        .elements
        .iter()
        .filter(|u| weyl::is_minimal_rep(u, &inter))
        .cloned()
        .collect();

    if reps.len() != members.len() {
        return Ok(false);
    }

    // u -> ((v u)^P, (v u)_P (S_i)), which must be a bijection onto the fiber.
    let mut images: Vec<usize> = Vec::with_capacity(reps.len());
    for u in &reps {
        let x = v.compose(u);
        let (xp, xl) = weyl::coset_decompose(sys, &res.orbit.delta_l, &x);
        let moved = s_i.map(sys, |root| xl.act(root))?;
        let Some(idx) = members
            .iter()
            .position(|m| m.w == xp && m.set == moved)
        else {
            return Ok(false);
        };
        if images.contains(&idx) {
            return Ok(false);
        }
        images.push(idx);
    }

    // Order isomorphism: Bruhat order on the representatives against the
    // induced order on the fiber.
    for (a, ua) in reps.iter().enumerate() {
        for (b, ub) in reps.iter().enumerate() {
            let left = weyl::bruhat_leq(sys, ua, ub);
            let right = res.pair_leq(&members[images[a]], &members[images[b]]);
            if left != right {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Convenience: the catalogue id of the G-orbit through `e_S`, or "zero".
pub fn g_orbit_id(sys: &RootSystem, cat: &[Height2Orbit], set: &OrthSet) -> String {
    if set.is_empty() {
        "zero".to_string()
    } else {
        catalogue::g_orbit_of_set(sys, cat, set)
            .map(|o| o.id.clone())
            .unwrap_or_else(|_| "?".to_string())
    }
}

/// Per-node sigma cache used by bulk verification runs.
pub fn sigma_map<'s>(
    sys: &RootSystem,
    sets: impl IntoIterator<Item = &'s OrthSet>,
) -> HashMap<OrthSet, AffineInvolution> {
    sets.into_iter()
        .map(|s| (s.clone(), affine_weyl::sigma_of_set(sys, s)))
        .collect()
}
