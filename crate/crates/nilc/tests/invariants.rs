//! Structural invariants beyond the per-module unit tests: the lifting lemma
//! for involutions, the descent characterizations, injectivity on signed
//! subsets, characteristics of maximal orthogonal sets, and the fiber order
//! isomorphisms.

use nilc::affine_weyl::{self, AffineRoot, DescentType};
use nilc::catalogue;
use nilc::orthogonal::{self, OrthSet};
use nilc::poset::{self, Resolution};
use nilc::root_system::{CartanType, RootSystem, TypeLetter};
use nilc::verify;
use nilc::weyl;

fn sys(letter: TypeLetter, rank: usize) -> RootSystem {
    RootSystem::build(CartanType::new(letter, rank).unwrap()).unwrap()
}

fn small_types() -> Vec<(TypeLetter, usize)> {
    vec![
        (TypeLetter::A, 1),
        (TypeLetter::A, 2),
        (TypeLetter::A, 3),
        (TypeLetter::B, 2),
        (TypeLetter::B, 3),
        (TypeLetter::C, 2),
        (TypeLetter::C, 3),
        (TypeLetter::D, 3),
        (TypeLetter::D, 4),
        (TypeLetter::G, 2),
    ]
}

#[test]
fn involution_lifting_lemma() {
    for (l, n) in small_types() {
        let s = sys(l, n);
        let sigmas = verify::all_sigmas_of_height2_sets(&s);
        assert!(verify::involution_lifting_holds(&s, &sigmas), "{l}{n}");
    }
}

#[test]
fn descent_characterizations() {
    for (l, n) in small_types() {
        let s = sys(l, n);
        let sigmas = verify::all_sigmas_of_height2_sets(&s);
        assert!(verify::descent_cr_holds(&s, &sigmas), "{l}{n}");
    }
}

#[test]
fn sigma_squares_to_identity_and_rank_is_cardinality() {
    for (l, n) in [
        (TypeLetter::B, 4),
        (TypeLetter::F, 4),
        (TypeLetter::D, 4),
        (TypeLetter::C, 4),
        (TypeLetter::A, 4),
    ] {
        let s = sys(l, n);
        for set in orthogonal::enumerate_strongly_orthogonal_sets(&s) {
            let sigma = affine_weyl::sigma_of_set(&s, &set);
            let sq = affine_weyl::compose(&s, &sigma.element, &sigma.element);
            assert!(sq.is_identity());
            assert_eq!(sigma.moved_rank, set.len());
            assert_eq!(
                affine_weyl::moved_rank_by_matrix(&s, &sigma.element),
                set.len()
            );
            // L(sigma) is a nonnegative integer
            assert_eq!((sigma.len + sigma.moved_rank) % 2, 0);
        }
    }
}

#[test]
fn sigma_injective_on_signed_subsets_of_a_fixed_set() {
    for (l, n) in small_types() {
        let s = sys(l, n);
        for set in orthogonal::enumerate_strongly_orthogonal_sets(&s) {
            if set.is_empty() {
                continue;
            }
            // signed variants S_0 ⊆ S ∪ (-S) picking one sign per root
            let k = set.len();
            let mut seen = std::collections::HashMap::new();
            for mask in 0..(1u32 << k) {
                let roots: Vec<_> = set
                    .roots()
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        if mask & (1 << i) != 0 {
                            r.neg()
                        } else {
                            r.clone()
                        }
                    })
                    .collect();
                let signed = OrthSet::new(&s, roots).unwrap();
                let sigma = affine_weyl::sigma_of_set(&s, &signed);
                if let Some(prev) = seen.insert(sigma.element.key(), signed.clone()) {
                    panic!("{l}{n}: sigma collision between {prev} and {signed}");
                }
            }
        }
    }
}

#[test]
fn maximal_orthogonal_subsets_give_the_dominant_characteristic() {
    for (l, n) in small_types() {
        let s = sys(l, n);
        for o in catalogue::catalogue(&s) {
            let orts = orthogonal::enumerate_ort(&s, &o.psi);
            for set in &orts {
                let maximal = !orts.iter().any(|t| {
                    t.len() > set.len() && set.roots().iter().all(|r| t.contains(r))
                });
                if !maximal {
                    continue;
                }
                assert_eq!(
                    orthogonal::weighted_dynkin(&s, set),
                    o.diagram,
                    "{l}{n} {} set {set}",
                    o.id
                );
                // also maximal orthogonal inside Phi+ \ Phi_L
                for beta in s.positive_roots() {
                    let in_phi_l = s.eval_coweight(beta, &o.h.coords) == 0;
                    if in_phi_l {
                        continue;
                    }
                    let orth_to_all = set
                        .roots()
                        .iter()
                        .all(|r| s.strongly_orthogonal(beta, r).unwrap());
                    assert!(
                        !orth_to_all,
                        "{l}{n} {}: {beta} extends maximal {set}",
                        o.id
                    );
                }
            }
        }
    }
}

#[test]
fn cascade_is_maximal_and_long() {
    for (l, n) in small_types() {
        let s = sys(l, n);
        for o in catalogue::catalogue(&s) {
            for g in &o.cascade {
                assert!(s.is_long(g).unwrap());
            }
            let casc_set = OrthSet::new(&s, o.cascade.clone()).unwrap();
            for beta in &o.psi {
                if casc_set.contains(beta) {
                    continue;
                }
                let orth = o
                    .cascade
                    .iter()
                    .all(|g| s.pairing(beta, g).unwrap() == 0);
                assert!(!orth, "{l}{n} {}: cascade not maximal", o.id);
            }
            assert_eq!(o.cascade.first(), Some(s.highest_root()).as_deref());
        }
    }
}

#[test]
fn tilde_projections_are_monotone() {
    for (l, n) in [(TypeLetter::A, 2), (TypeLetter::C, 2), (TypeLetter::B, 2)] {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            let res = Resolution::new(&s, o);
            let p = res.enumerate();
            for (i, a) in p.nodes.iter().enumerate() {
                for (j, b) in p.nodes.iter().enumerate() {
                    if !p.leq[i][j] {
                        continue;
                    }
                    assert!(weyl::bruhat_leq(&s, &a.w, &b.w));
                    assert!(affine_weyl::bruhat_leq(
                        &s,
                        &a.sigma.element,
                        &b.sigma.element
                    ));
                    // projection to the closure order downstairs
                    let ra = a.set.map(&s, |r| a.w.act(r)).unwrap();
                    let rb = b.set.map(&s, |r| b.w.act(r)).unwrap();
                    assert!(poset::closure_leq_n2(&s, &ra, &rb).unwrap());
                }
            }
        }
    }
}

#[test]
fn poset_is_a_partial_order() {
    for (l, n) in [
        (TypeLetter::A, 1),
        (TypeLetter::A, 2),
        (TypeLetter::A, 3),
        (TypeLetter::B, 2),
        (TypeLetter::B, 3),
        (TypeLetter::C, 3),
        (TypeLetter::D, 3),
        (TypeLetter::G, 2),
    ] {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        let p = poset::enumerate_n2(&s, &cat);
        let m = p.nodes.len();
        for i in 0..m {
            assert!(p.leq[i][i]);
            for j in 0..m {
                if i != j && p.leq[i][j] {
                    assert!(!p.leq[j][i], "antisymmetry");
                    assert!(p.nodes[i].dim < p.nodes[j].dim, "strict order grows dim");
                }
                for k in 0..m {
                    if p.leq[i][j] && p.leq[j][k] {
                        assert!(p.leq[i][k], "transitivity");
                    }
                }
            }
        }
    }
}

#[test]
fn fiber_order_isomorphisms_small_rank() {
    for (l, n) in [
        (TypeLetter::A, 2),
        (TypeLetter::B, 2),
        (TypeLetter::C, 2),
        (TypeLetter::A, 3),
        (TypeLetter::B, 3),
    ] {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            let res = Resolution::new(&s, o);
            for r in poset::ort_x(&s, o) {
                assert!(
                    poset::fiber_iso_check(&s, &cat, &res, &r).unwrap(),
                    "{l}{n} {}: fiber over {r}",
                    o.id
                );
                // the admissible pair is the fiber minimum, exactly one
                // member is admissible, and all members carry the same
                // involution sigma_{R^}
                let fiber = res.fiber(&r).unwrap();
                let adm = res.admissible_pair(&r).unwrap();
                assert_eq!(fiber.iter().filter(|p| p.admissible).count(), 1);
                for p in &fiber {
                    assert!(res.pair_leq(&adm, p));
                    assert_eq!(p.sigma.element, adm.sigma.element);
                }
            }
        }
    }
}

#[test]
fn maximal_poset_nodes_match_component_structure() {
    // one dense B-orbit per irreducible component of the locus, whose
    // dimension is the dimension of that component
    for (l, n) in [
        (TypeLetter::A, 3),
        (TypeLetter::B, 3),
        (TypeLetter::C, 3),
        (TypeLetter::B, 4),
        (TypeLetter::D, 4),
        (TypeLetter::G, 2),
    ] {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        let p = poset::enumerate_n2(&s, &cat);
        let m = p.nodes.len();
        let maximal_nodes: Vec<usize> = (0..m)
            .filter(|&i| !(0..m).any(|j| j != i && p.leq[i][j]))
            .collect();
        let maximal_orbits: Vec<_> = cat
            .iter()
            .filter(|o| {
                !cat.iter()
                    .any(|q| q.id != o.id && catalogue::g_closure_leq(o, q))
            })
            .collect();
        assert_eq!(maximal_nodes.len(), maximal_orbits.len(), "{l}{n}");
        for i in maximal_nodes {
            let node = &p.nodes[i];
            let o = maximal_orbits
                .iter()
                .find(|o| o.id == node.g_orbit)
                .expect("dense orbit lies in a maximal component");
            assert_eq!(node.dim, o.dim_g_orbit(), "{l}{n} {}", o.id);
        }
    }
}

#[test]
fn admissible_pairs_enumerate_the_orbit_classes() {
    for (l, n) in [
        (TypeLetter::A, 2),
        (TypeLetter::A, 3),
        (TypeLetter::B, 2),
        (TypeLetter::B, 3),
        (TypeLetter::C, 3),
        (TypeLetter::G, 2),
    ] {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            let res = Resolution::new(&s, o);
            let classes = poset::ort_x(&s, o);
            let mut admissible = 0usize;
            for w in res.wp_reps() {
                for set in orthogonal::enumerate_ort(&s, &o.psi) {
                    if res.make_pair(w, &set).admissible {
                        admissible += 1;
                    }
                }
            }
            assert_eq!(admissible, classes.len(), "{l}{n} {}", o.id);
        }
    }
}

#[test]
fn fiber_members_dominate_the_downstairs_dimension() {
    // dim(Bw e~_S) >= dim(Be_R) over the fiber of R, with equality exactly
    // at the admissible pair
    for (l, n) in [(TypeLetter::A, 2), (TypeLetter::B, 3), (TypeLetter::C, 3)] {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            let res = Resolution::new(&s, o);
            for r in poset::ort_x(&s, o) {
                let base = affine_weyl::sigma_of_set(&s, &r).inv_length();
                for p in res.fiber(&r).unwrap() {
                    if p.admissible {
                        assert_eq!(p.dim, base);
                    } else {
                        assert!(p.dim > base, "{l}{n} {}: fiber member not above", o.id);
                    }
                }
            }
        }
    }
}

#[test]
fn sub_orbit_chain_entries_have_prefix_cascades() {
    for (l, n) in small_types() {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            for (i, psi_i) in o.sub_psi.iter().enumerate() {
                let casc = orthogonal::cascade(&s, psi_i).unwrap();
                assert_eq!(casc, o.cascade[..=i].to_vec(), "{l}{n} {}", o.id);
            }
        }
    }
}

#[test]
fn descent_types_match_commutation() {
    // real iff s_a sigma = sigma s_a and sigma(a) < 0
    for (l, n) in [(TypeLetter::C, 2), (TypeLetter::B, 3)] {
        let s = sys(l, n);
        let simples = affine_weyl::simple_affine_roots(&s);
        for set in orthogonal::enumerate_height2_sets(&s) {
            let sigma = affine_weyl::sigma_of_set(&s, &set);
            for a in &simples {
                let img = affine_weyl::act(&s, &sigma.element, a);
                let s_a = affine_weyl::affine_reflect(&s, a).unwrap();
                let commute = affine_weyl::compose(&s, &s_a, &sigma.element)
                    == affine_weyl::compose(&s, &sigma.element, &s_a);
                match affine_weyl::descent_type(&s, a, &sigma) {
                    DescentType::Real => {
                        assert!(commute && img.is_negative());
                        assert_eq!(img, AffineRoot::neg(a));
                    }
                    DescentType::Complex => assert!(img.is_negative() && !commute),
                    DescentType::None => assert!(img.is_positive()),
                }
            }
        }
    }
}
