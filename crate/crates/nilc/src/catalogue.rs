//! The catalogue of height-2 nilpotent G-orbits of a root system, recomputed
//! from scratch: weighted Dynkin diagrams, abelian ideals, cascades,
//! sub-ideal chains, and the Levi data controlling resolution fibers.

use crate::error::{Error, Result};
use crate::orthogonal::{self, Coweight, OrthSet};
use crate::root_system::{Root, RootSystem};

/// A height-2 nilpotent G-orbit descriptor.
#[derive(Debug, Clone)]
pub struct Height2Orbit {
    pub id: String,
    /// Weighted Dynkin diagram labels, all in {0,1,2}.
    pub diagram: Vec<i64>,
    /// The dominant characteristic as a coweight.
    pub h: Coweight,
    /// Roots of the abelian ideal, `Psi = Phi(2,h)`.
    pub psi: Vec<Root>,
    /// `Phi(1,h)`.
    pub phi1: Vec<Root>,
    /// Simple roots with label 0 (the Levi `L` of the parabolic `P`).
    pub delta_l: Vec<usize>,
    /// The cascade `gamma_1 > ... > gamma_r` inside `Psi`.
    pub cascade: Vec<Root>,
    /// `r = rk(a)`, the length of the cascade.
    pub rank_r: usize,
    /// The unique minimal root of `Psi`, equal to `w_L(theta)`.
    pub min_psi_root: Root,
    /// Sub-ideal chain `Psi_1 subset ... subset Psi_r`.
    pub sub_psi: Vec<Vec<Root>>,
    /// `Delta_{L_i}^*` for i = 0..=r (index 0 is the full simple set).
    pub delta_star: Vec<Vec<usize>>,
}

impl Height2Orbit {
    /// `dim Ge = |Phi(1,h)| + 2 |Phi(2,h)|`.
    pub fn dim_g_orbit(&self) -> usize {
        self.phi1.len() + 2 * self.psi.len()
    }

    /// Simple roots of the symmetric subgroup `G_0`: `Delta_L` together with
    /// the minimal root of `Psi`.
    pub fn delta_g0(&self, sys: &RootSystem) -> Vec<Root> {
        let mut v: Vec<Root> = self
            .delta_l
            .iter()
            .map(|&i| sys.simple_root(i).clone())
            .collect();
        v.push(self.min_psi_root.clone());
        v
    }
}

fn diagram_id(diagram: &[i64]) -> String {
    let digits: String = diagram.iter().map(|d| d.to_string()).collect();
    format!("h2-{digits}")
}

/// Enumerates the height-2 orbits: dominant label vectors in `{0,1,2}^rank`
/// with `<theta, h> = 2`, validated by the cascade round-trip
/// `h = characteristic(cascade(Phi(2,h)))`.
pub fn catalogue(sys: &RootSystem) -> Vec<Height2Orbit> {
    let n = sys.rank();
    let theta = sys.highest_root();
    let mut out = Vec::new();

    let mut labels = vec![0i64; n];
    loop {
        let theta_pairing: i64 = theta
            .coords
            .iter()
            .zip(&labels)
            .map(|(&c, &l)| c * l)
            .sum();
        if theta_pairing == 2 {
            if let Some(o) = try_orbit(sys, &labels) {
                out.push(o);
            }
        }
        // next vector in {0,1,2}^n
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| a.diagram.cmp(&b.diagram));
                return out;
            }
            labels[i] += 1;
            if labels[i] <= 2 {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

/// `<gamma, h>` for a candidate given by its simple labels: the pairing is
/// linear in the coordinates of `gamma`.
fn eval_labels(gamma: &Root, labels: &[i64]) -> i64 {
    gamma
        .coords
        .iter()
        .zip(labels)
        .map(|(&c, &l)| c * l)
        .sum()
}

fn try_orbit(sys: &RootSystem, labels: &[i64]) -> Option<Height2Orbit> {
    let psi: Vec<Root> = sys
        .roots()
        .iter()
        .filter(|g| eval_labels(g, labels) == 2)
        .cloned()
        .collect();
    debug_assert!(psi.iter().all(|g| g.is_positive()));

    let casc = orthogonal::cascade(sys, &psi).ok()?;
    let set = OrthSet::new(sys, casc.clone()).ok()?;
    let h = orthogonal::characteristic(sys, &set);
    if orthogonal::labels(sys, &h) != labels {
        return None;
    }

    let phi1: Vec<Root> = sys
        .roots()
        .iter()
        .filter(|g| eval_labels(g, labels) == 1)
        .cloned()
        .collect();
    let delta_l: Vec<usize> = (0..sys.rank()).filter(|&i| labels[i] == 0).collect();

    let min_psi_root = unique_minimum(sys, &psi)?;
    let rank_r = casc.len();
    let sub_psi = build_sub_psi(sys, &psi, &casc)?;
    let delta_star = build_delta_star(sys, &casc, labels);

    Some(Height2Orbit {
        id: diagram_id(labels),
        diagram: labels.to_vec(),
        h,
        psi,
        phi1,
        delta_l,
        cascade: casc,
        rank_r,
        min_psi_root,
        sub_psi,
        delta_star,
    })
}

fn unique_minimum(sys: &RootSystem, psi: &[Root]) -> Option<Root> {
    let minimal: Vec<&Root> = psi
        .iter()
        .filter(|g| {
            !psi.iter()
                .any(|o| *o != **g && sys.dominance_leq(o, g).expect("roots"))
        })
        .collect();
    if minimal.len() == 1 {
        Some(minimal[0].clone())
    } else {
        None
    }
}

/// `Psi_i = {a in Psi | <a, gamma_j^vee> = 0 for j > i} = {a in Psi | a >= gamma_i}`;
/// both characterizations are computed and must agree.
fn build_sub_psi(sys: &RootSystem, psi: &[Root], casc: &[Root]) -> Option<Vec<Vec<Root>>> {
    let r = casc.len();
    let mut chain = Vec::with_capacity(r);
    for i in 1..=r {
        let by_pairing: Vec<Root> = psi
            .iter()
            .filter(|a| {
                casc[i..]
                    .iter()
                    .all(|g| sys.pairing(a, g).expect("roots") == 0)
            })
            .cloned()
            .collect();
        let by_dominance: Vec<Root> = psi
            .iter()
            .filter(|a| sys.dominance_leq(&casc[i - 1], a).expect("roots"))
            .cloned()
            .collect();
        if by_pairing != by_dominance {
            return None;
        }
        chain.push(by_pairing);
    }
    Some(chain)
}

/// Recomputes the sub-ideal chain of an orbit, with the two characterizations
/// asserted equal.
pub fn sub_ideal_chain(sys: &RootSystem, o: &Height2Orbit) -> Result<Vec<Vec<Root>>> {
    build_sub_psi(sys, &o.psi, &o.cascade).ok_or_else(|| {
        Error::ChainMismatch(format!(
            "the two characterizations of the sub-ideal chain disagree for {}",
            o.id
        ))
    })
}

/// `Delta_{L_i}^* = Delta_{L_i} minus the connected component of gamma_i`
/// in the Dynkin graph on `Delta_{L_i} ∪ {gamma_i}`; index 0 holds the full
/// simple set (zero cascade prefix).
fn build_delta_star(sys: &RootSystem, casc: &[Root], _labels: &[i64]) -> Vec<Vec<usize>> {
    let n = sys.rank();
    let mut out = Vec::with_capacity(casc.len() + 1);
    out.push((0..n).collect());
    let mut h_i = vec![0i64; n];
    for gamma in casc {
        let cv = sys.coroot(gamma).expect("cascade root");
        for (k, c) in cv.iter().enumerate() {
            h_i[k] += c;
        }
        let delta_li: Vec<usize> = (0..n)
            .filter(|&k| sys.eval_coweight(sys.simple_root(k), &h_i) == 0)
            .collect();
        // nodes: delta_li plus gamma_i; edges: nonzero symmetric pairing
        let mut comp: Vec<bool> = vec![false; delta_li.len()];
        let mut frontier: Vec<Root> = vec![gamma.clone()];
        while let Some(x) = frontier.pop() {
            for (pos, &k) in delta_li.iter().enumerate() {
                if !comp[pos] && sys.sym_pairing(sys.simple_root(k), &x) != 0 {
                    comp[pos] = true;
                    frontier.push(sys.simple_root(k).clone());
                }
            }
        }
        let star: Vec<usize> = delta_li
            .iter()
            .enumerate()
            .filter(|(pos, _)| !comp[*pos])
            .map(|(_, &k)| k)
            .collect();
        out.push(star);
    }
    out
}

/// Closure order of G-orbits: inclusion of the abelian ideals.
pub fn g_closure_leq(o1: &Height2Orbit, o2: &Height2Orbit) -> bool {
    o1.psi.iter().all(|a| o2.psi.contains(a))
}

/// The catalogue entry of the G-orbit through `e_S` for a nonempty `S` of
/// height at most 2, found by its weighted Dynkin diagram.
pub fn g_orbit_of_set<'a>(
    sys: &RootSystem,
    cat: &'a [Height2Orbit],
    s: &OrthSet,
) -> Result<&'a Height2Orbit> {
    if s.is_empty() {
        return Err(Error::EmptySet(
            "the zero orbit has no catalogue entry".to_string(),
        ));
    }
    let h = orthogonal::height(sys, s);
    if h > 2 {
        return Err(Error::HeightOutOfRange(format!(
            "height {h} set has no height-2 catalogue entry"
        )));
    }
    let diagram = orthogonal::weighted_dynkin(sys, s);
    cat.iter()
        .find(|o| o.diagram == diagram)
        .ok_or_else(|| {
            Error::NotInCatalogue(format!(
                "no catalogue entry with diagram {diagram:?} (internal inconsistency)"
            ))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, TypeLetter};
    use crate::weyl;

    fn sys(letter: TypeLetter, rank: usize) -> RootSystem {
        RootSystem::build(CartanType::new(letter, rank).unwrap()).unwrap()
    }

    fn orth(sys: &RootSystem, roots: Vec<Vec<i64>>) -> OrthSet {
        OrthSet::new(sys, roots.into_iter().map(Root::new).collect()).unwrap()
    }

    #[test]
    fn catalogue_a2() {
        let a2 = sys(TypeLetter::A, 2);
        let cat = catalogue(&a2);
        assert_eq!(cat.len(), 1);
        assert_eq!(cat[0].diagram, vec![1, 1]);
        assert_eq!(cat[0].rank_r, 1);
        assert_eq!(cat[0].id, "h2-11");
    }

    #[test]
    fn catalogue_b3() {
        let b3 = sys(TypeLetter::B, 3);
        let cat = catalogue(&b3);
        let rows: Vec<(Vec<i64>, usize)> =
            cat.iter().map(|o| (o.diagram.clone(), o.rank_r)).collect();
        assert_eq!(
            rows,
            vec![(vec![0, 1, 0], 1), (vec![2, 0, 0], 2)]
        );
    }

    #[test]
    fn catalogue_e8() {
        let e8 = sys(TypeLetter::E, 8);
        let cat = catalogue(&e8);
        let rows: Vec<(Vec<i64>, usize)> =
            cat.iter().map(|o| (o.diagram.clone(), o.rank_r)).collect();
        assert_eq!(
            rows,
            vec![
                (vec![0, 0, 0, 0, 0, 0, 0, 1], 1),
                (vec![1, 0, 0, 0, 0, 0, 0, 0], 2)
            ]
        );
    }

    #[test]
    fn sub_ideal_chains() {
        // r = 1 orbit: chain is [Psi]
        let a2 = sys(TypeLetter::A, 2);
        let o = &catalogue(&a2)[0];
        assert_eq!(sub_ideal_chain(&a2, o).unwrap(), vec![o.psi.clone()]);

        // C3, diagram (0,0,2): Psi_1 = {2e1}, Psi_2 = {2e1, e1+e2, 2e2}
        let c3 = sys(TypeLetter::C, 3);
        let cat = catalogue(&c3);
        let o = cat.iter().find(|o| o.diagram == vec![0, 0, 2]).unwrap();
        assert_eq!(o.rank_r, 3);
        let chain = sub_ideal_chain(&c3, o).unwrap();
        assert_eq!(chain[0], vec![Root::new(vec![2, 2, 1])]);
        let mut psi2 = chain[1].clone();
        psi2.sort();
        assert_eq!(
            psi2,
            vec![
                Root::new(vec![0, 2, 1]),
                Root::new(vec![1, 2, 1]),
                Root::new(vec![2, 2, 1]),
            ]
        );
        assert_eq!(chain[2], o.psi);

        // B3, diagram (2,0,0): Psi_1 = {e1+e2}
        let b3 = sys(TypeLetter::B, 3);
        let cat = catalogue(&b3);
        let o = cat.iter().find(|o| o.diagram == vec![2, 0, 0]).unwrap();
        let chain = sub_ideal_chain(&b3, o).unwrap();
        assert_eq!(chain[0], vec![Root::new(vec![1, 2, 2])]);
    }

    #[test]
    fn g_closure_within_chain() {
        let b3 = sys(TypeLetter::B, 3);
        let cat = catalogue(&b3);
        let lo = cat.iter().find(|o| o.diagram == vec![0, 1, 0]).unwrap();
        let hi = cat.iter().find(|o| o.diagram == vec![2, 0, 0]).unwrap();
        assert!(g_closure_leq(lo, lo));
        // Psi of (0,1,0) is {theta}, contained in Psi of (2,0,0)
        assert!(g_closure_leq(lo, hi));
        assert!(!g_closure_leq(hi, lo));
    }

    #[test]
    fn g_orbit_of_set_examples() {
        let a2 = sys(TypeLetter::A, 2);
        let cat = catalogue(&a2);
        let s = orth(&a2, vec![vec![1, 0]]);
        assert_eq!(g_orbit_of_set(&a2, &cat, &s).unwrap().diagram, vec![1, 1]);
        assert!(matches!(
            g_orbit_of_set(&a2, &cat, &OrthSet::empty()),
            Err(Error::EmptySet(_))
        ));

        // C2: {e1+e2} and {2e1, 2e2} give the same orbit
        let c2 = sys(TypeLetter::C, 2);
        let cat = catalogue(&c2);
        let short = orth(&c2, vec![vec![1, 1]]);
        let long = orth(&c2, vec![vec![2, 1], vec![0, 1]]);
        assert_eq!(
            g_orbit_of_set(&c2, &cat, &short).unwrap().id,
            g_orbit_of_set(&c2, &cat, &long).unwrap().id
        );

        // {theta} is the r = 1 entry of its chain in any type
        let b3 = sys(TypeLetter::B, 3);
        let cat = catalogue(&b3);
        let theta = orth(&b3, vec![b3.highest_root().coords.clone()]);
        let o = g_orbit_of_set(&b3, &cat, &theta).unwrap();
        assert_eq!(o.psi, vec![b3.highest_root().clone()]);
    }

    #[test]
    fn min_psi_root_is_w_l_of_theta() {
        for (l, n) in [
            (TypeLetter::A, 3),
            (TypeLetter::B, 3),
            (TypeLetter::C, 3),
            (TypeLetter::D, 4),
            (TypeLetter::G, 2),
            (TypeLetter::F, 4),
        ] {
            let s = sys(l, n);
            for o in catalogue(&s) {
                let w_l = weyl::longest_element(&s, &o.delta_l);
                assert_eq!(w_l.act(s.highest_root()), o.min_psi_root, "{l}{n} {}", o.id);
            }
        }
    }

    #[test]
    fn tube_type_identity() {
        // w_{G_0}(w_L(theta)) = -w_L(theta), where w_{G_0} is the longest
        // element of the subgroup generated by reflections in
        // Delta_{G_0} = Delta_L ∪ {w_L(theta)}. Since Delta_{G_0} lies in
        // Phi+, the G_0-positive roots are exactly the G_0-roots in Phi+,
        // so the longest element is reached by a plain ascent climb.
        for (l, n) in [
            (TypeLetter::A, 3),
            (TypeLetter::B, 3),
            (TypeLetter::C, 3),
            (TypeLetter::D, 4),
            (TypeLetter::F, 4),
            (TypeLetter::G, 2),
        ] {
            let s = sys(l, n);
            for o in catalogue(&s) {
                let base = o.delta_g0(&s);
                let mut w = weyl::WeylElement::identity(s.rank());
                loop {
                    let asc = base.iter().find(|b| w.act(b).is_positive());
                    match asc {
                        Some(b) => w = w.compose(&weyl::reflect(&s, b).unwrap()),
                        None => break,
                    }
                }
                assert_eq!(w.act(&o.min_psi_root), o.min_psi_root.neg(), "{l}{n} {}", o.id);
            }
        }
    }

    #[test]
    fn diagram_labels_bounded() {
        for (l, n) in [(TypeLetter::B, 4), (TypeLetter::D, 4), (TypeLetter::E, 6)] {
            let s = sys(l, n);
            for o in catalogue(&s) {
                assert!(o.diagram.iter().all(|&d| (0..=2).contains(&d)));
                for g in s.positive_roots() {
                    assert!(s.eval_coweight(g, &o.h.coords) <= 2);
                }
                // Psi is closed under dominance-raising at level 2
                for a in &o.psi {
                    for b in s.positive_roots() {
                        if s.dominance_leq(a, b).unwrap()
                            && s.eval_coweight(b, &o.h.coords) == 2
                        {
                            assert!(o.psi.contains(b));
                        }
                    }
                }
            }
        }
    }
}
