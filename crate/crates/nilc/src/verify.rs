//! Verification suites: each acceptance criterion is recomputed from scratch
//! and reported as a single pass/fail check. The CLI `verify` subcommand and
//! the acceptance test target both run these.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::affine_weyl::{self, AffineInvolution, AffineRoot, AffineWeylElement, DescentType};
use crate::catalogue;
use crate::oracle;
use crate::orthogonal::{self, OrthSet};
use crate::poset::{self, DescentClass, Resolution};
use crate::root_system::{CartanType, Root, RootSystem, TypeLetter};
use crate::table1;
use crate::weyl;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Bruhat,
    Poset,
    Catalogue,
    Lemmas,
}

impl std::str::FromStr for Suite {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "bruhat" => Ok(Suite::Bruhat),
            "poset" => Ok(Suite::Poset),
            "catalogue" => Ok(Suite::Catalogue),
            "lemmas" => Ok(Suite::Lemmas),
            other => Err(crate::error::Error::Parse(format!(
                "unknown suite '{other}' (expected all|bruhat|poset|catalogue|lemmas)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: std::time::Duration,
}

fn sys(letter: TypeLetter, rank: usize) -> RootSystem {
    RootSystem::build(CartanType::new(letter, rank).unwrap()).unwrap()
}

fn rank_le_types(max: usize) -> Vec<(TypeLetter, usize)> {
    let mut v = Vec::new();
    for n in 1..=max {
        v.push((TypeLetter::A, n));
    }
    for n in 2..=max {
        v.push((TypeLetter::B, n));
        v.push((TypeLetter::C, n));
    }
    for n in 3..=max {
        v.push((TypeLetter::D, n));
    }
    if max >= 2 {
        v.push((TypeLetter::G, 2));
    }
    if max >= 4 {
        v.push((TypeLetter::F, 4));
    }
    v
}

fn catalogue_types() -> Vec<(TypeLetter, usize)> {
    let mut v = Vec::new();
    for n in 1..=8 {
        v.push((TypeLetter::A, n));
    }
    for n in 2..=8 {
        v.push((TypeLetter::B, n));
        v.push((TypeLetter::C, n));
    }
    for n in 3..=8 {
        v.push((TypeLetter::D, n));
    }
    for n in 6..=8 {
        v.push((TypeLetter::E, n));
    }
    v.push((TypeLetter::F, 4));
    v.push((TypeLetter::G, 2));
    v
}

/// C1: the catalogue reproduces the classification table (diagram multiset
/// and rank column) across all listed types.
pub fn check_table1() -> Check {
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for (l, n) in catalogue_types() {
        let s = sys(l, n);
        let got: Vec<(Vec<i64>, usize)> = catalogue::catalogue(&s)
            .iter()
            .map(|o| (o.diagram.clone(), o.rank_r))
            .collect();
        let want: Vec<(Vec<i64>, usize)> = table1::rows(l, n)
            .iter()
            .map(|r| (r.diagram.clone(), r.rank))
            .collect();
        cases += want.len();
        if got != want {
            failures.push(format!("{l}{n}: computed {got:?}, table {want:?}"));
        }
    }
    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C1 catalogue reproduces the classification table (A1-A8, B2-B8, C2-C8, D3-D8, E6-E8, F4, G2)".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} orbit rows matched")
        } else {
            failures.join("; ")
        },
    }
}

/// C2: the maximal B-orbit dimension in each orbit closure equals
/// `|Phi(1)| + 2|Phi(2)|`, and admissible pairs have `dim = L(sigma_{w(S^)})`.
pub fn check_dimensions() -> Check {
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for (l, n) in rank_le_types(4) {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            let classes = poset::ort_x(&s, o);
            let max_dim = classes
                .iter()
                .map(|r| affine_weyl::sigma_of_set(&s, r).inv_length())
                .max()
                .unwrap_or(0);
            cases += classes.len();
            if max_dim != o.dim_g_orbit() {
                failures.push(format!(
                    "{l}{n} {}: max B-orbit dim {max_dim} != dim Ge {}",
                    o.id,
                    o.dim_g_orbit()
                ));
            }
            let res = Resolution::new(&s, o);
            let orts = orthogonal::enumerate_ort(&s, &o.psi);
            for w in res.wp_reps() {
                for set in &orts {
                    let p = res.make_pair(w, set);
                    cases += 1;
                    if p.admissible && p.dim != p.sigma.inv_length() {
                        failures.push(format!(
                            "{l}{n} {}: admissible pair dim {} != L(sigma) {}",
                            o.id,
                            p.dim,
                            p.sigma.inv_length()
                        ));
                    }
                }
            }
        }
    }
    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C2 dimension formulas on resolutions and orbit closures (rank <= 4)".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} cases")
        } else {
            failures.join("; ")
        },
    }
}

fn affine_ball(s: &RootSystem, max_len: usize) -> Vec<AffineWeylElement> {
    let simples = affine_weyl::simple_affine_roots(s);
    let mut seen: std::collections::HashSet<AffineWeylElement> = Default::default();
    let mut ball = vec![AffineWeylElement::identity(s.rank())];
    seen.insert(ball[0].clone());
    let mut frontier = ball.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &frontier {
            for a in &simples {
                if affine_weyl::act(s, x, a).is_positive() {
                    let y = affine_weyl::compose_reflection(s, x, a);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
        }
        ball.extend(next.iter().cloned());
        frontier = next;
    }
    ball
}

/// C3: the lifting-recursion Bruhat order agrees with the subword oracle on
/// affine balls of length 8 and on the full finite groups of rank <= 3.
pub fn check_bruhat_oracle() -> Check {
    let mut cases = 0usize;
    let mut failures = Vec::new();

    for (l, n) in [(TypeLetter::A, 1), (TypeLetter::A, 2), (TypeLetter::C, 2)] {
        let s = sys(l, n);
        let ball = affine_ball(&s, 8);
        for y in &ball {
            let reach = oracle::affine_subword_reachable(&s, y).unwrap();
            for x in &ball {
                cases += 1;
                let fast = affine_weyl::bruhat_leq(&s, x, y);
                let slow = reach.contains(x);
                if fast != slow {
                    failures.push(format!(
                        "affine {l}{n}: {} vs {} disagree",
                        affine_weyl::word_string(&s, x),
                        affine_weyl::word_string(&s, y)
                    ));
                }
            }
        }
    }

    for (l, n) in rank_le_types(3) {
        let s = sys(l, n);
        let all: Vec<usize> = (0..n).collect();
        let elements = weyl::parabolic(&s, &all).elements;
        for w in &elements {
            let reach = oracle::subword_reachable(&s, w).unwrap();
            for u in &elements {
                cases += 1;
                let fast = weyl::bruhat_leq(&s, u, w);
                let slow = reach.contains(u);
                if fast != slow {
                    failures.push(format!(
                        "finite {l}{n}: {} vs {} disagree",
                        weyl::word_string(&s, u),
                        weyl::word_string(&s, w)
                    ));
                }
            }
        }
    }

    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C3 Bruhat lifting recursion vs subword oracle (affine A1/A2/C2 length <= 8; finite rank <= 3)".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} ordered pairs")
        } else {
            failures.join("; ")
        },
    }
}

/// C4: descent-peel length equals the inversion-count length, exhaustively
/// to length 10 in affine rank 2 and on 1000 random elements per type of
/// rank <= 4.
pub fn check_lengths() -> Check {
    let mut cases = 0usize;
    let mut failures = Vec::new();

    for (l, n) in [
        (TypeLetter::A, 1),
        (TypeLetter::A, 2),
        (TypeLetter::B, 2),
        (TypeLetter::C, 2),
        (TypeLetter::G, 2),
    ] {
        let s = sys(l, n);
        for (i, x) in affine_ball(&s, 10).iter().enumerate() {
            cases += 1;
            let peel = affine_weyl::length(&s, x);
            let inv = affine_weyl::length_by_inversions(&s, x);
            if peel != inv {
                failures.push(format!("affine {l}{n} element #{i}: peel {peel} != inv {inv}"));
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(0x6e696c63);
    for (l, n) in rank_le_types(4) {
        let s = sys(l, n);
        for _ in 0..1000 {
            let wlen = rng.gen_range(0..=10);
            let word: Vec<usize> = (0..wlen).map(|_| rng.gen_range(0..n)).collect();
            let w = weyl::from_word(&s, &word);
            let lambda: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let x = AffineWeylElement { w, lambda };
            cases += 1;
            let peel = affine_weyl::length(&s, &x);
            let inv = affine_weyl::length_by_inversions(&s, &x);
            if peel != inv {
                failures.push(format!("{l}{n} random element: peel {peel} != inv {inv}"));
            }
        }
    }

    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C4 length by descent peeling vs inversion count (exhaustive affine rank 2, random rank <= 4)".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} elements")
        } else {
            failures.join("; ")
        },
    }
}

/// C5: the involution closure order on the height-2 locus agrees with the
/// order recomputed through the resolution fibers, for every catalogued
/// orbit of rank <= 3 and every pair of Ort(X) classes.
pub fn check_closure_cross_validation() -> Check {
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for (l, n) in rank_le_types(3) {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            let res = Resolution::new(&s, o);
            let classes = poset::ort_x(&s, o);
            let fibers: Vec<_> = classes.iter().map(|r| res.fiber(r).unwrap()).collect();
            let adms: Vec<_> = classes
                .iter()
                .map(|r| res.admissible_pair(r).unwrap())
                .collect();
            for (ri, r) in classes.iter().enumerate() {
                for (si, sset) in classes.iter().enumerate() {
                    cases += 1;
                    let direct = poset::closure_leq_n2(&s, r, sset).unwrap();
                    let via = fibers[ri].iter().any(|p| res.pair_leq(p, &adms[si]));
                    if direct != via {
                        failures.push(format!(
                            "{l}{n} {}: R={r} S={sset}: direct {direct} vs resolution {via}",
                            o.id
                        ));
                    }
                }
            }
        }
    }
    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C5 closure order vs resolution oracle on every Ort(X) pair (rank <= 3)".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} ordered pairs")
        } else {
            failures.join("; ")
        },
    }
}

/// C6: injectivity and height suites, the lattice lemma, the real-active-root
/// window, and the lambda_h criterion.
pub fn check_injectivity_and_heights() -> Check {
    let mut cases = 0usize;
    let mut failures = Vec::new();

    for (l, n) in rank_le_types(4) {
        let s = sys(l, n);
        let sets = orthogonal::enumerate_strongly_orthogonal_sets(&s);
        let mut by_sigma: HashMap<(Vec<i64>, Vec<i64>), Vec<usize>> = HashMap::new();
        for (idx, set) in sets.iter().enumerate() {
            let sigma = affine_weyl::sigma_of_set(&s, set);
            let h = orthogonal::height(&s, set);

            cases += 1;
            if h != affine_weyl::involution_height(&s, &sigma) {
                failures.push(format!("{l}{n}: height mismatch for {set}"));
            }

            // Z S ∩ Phi = S ∪ (-S), via exact orthogonal projection.
            for gamma in s.roots() {
                cases += 1;
                if in_integer_span(&s, set, gamma)
                    && !set.contains(gamma)
                    && !set.contains(&gamma.neg())
                {
                    failures.push(format!("{l}{n}: {gamma} in ZS∩Phi but not ±{set}"));
                }
            }

            // real active roots: sigma(a) = -a forces a = (±b ± b')/2, b,b' in S^
            if h <= 3 {
                for beta in s.roots() {
                    for m in -4i64..=4 {
                        let a = AffineRoot::new(beta.clone(), m);
                        if affine_weyl::act(&s, &sigma.element, &a) == a.neg() {
                            cases += 1;
                            if !is_half_sum_of_hat(set, &a) {
                                failures.push(format!(
                                    "{l}{n}: active root {a} of {set} is not (±b±b')/2"
                                ));
                            }
                        }
                    }
                }
            }

            by_sigma.entry(sigma.element.key()).or_default().push(idx);
        }
        // injectivity on sets of height <= 3
        for group in by_sigma.values() {
            cases += 1;
            let has_low = group
                .iter()
                .any(|&i| orthogonal::height(&s, &sets[i]) <= 3);
            if has_low && group.len() > 1 {
                let names: Vec<String> =
                    group.iter().map(|&i| sets[i].to_string()).collect();
                failures.push(format!(
                    "{l}{n}: sigma collision among {}",
                    names.join(" / ")
                ));
            }
        }
    }

    // lambda_h criterion, rank <= 3: s_{delta-beta} <= sigma_{S^} forces beta in Psi
    for (l, n) in rank_le_types(3) {
        let s = sys(l, n);
        for o in catalogue::catalogue(&s) {
            for set in orthogonal::enumerate_ort(&s, &o.psi) {
                let sigma = affine_weyl::sigma_of_set(&s, &set);
                for beta in s.roots() {
                    let refl = affine_weyl::affine_reflect(
                        &s,
                        &AffineRoot::new(beta.neg(), 1),
                    )
                    .unwrap();
                    cases += 1;
                    if affine_weyl::bruhat_leq(&s, &refl, &sigma.element)
                        && !o.psi.contains(beta)
                    {
                        failures.push(format!(
                            "{l}{n} {}: s_(delta-{beta}) <= sigma_{set} but {beta} not in Psi",
                            o.id
                        ));
                    }
                }
            }
        }
    }

    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C6 injectivity, heights, root-lattice lemma, active-root window, lambda_h criterion".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} cases")
        } else {
            failures.join("; ")
        },
    }
}

fn in_integer_span(s: &RootSystem, set: &OrthSet, gamma: &Root) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut recon = vec![0i64; s.rank()];
    for beta in set.roots() {
        let num = s.sym_pairing(gamma, beta);
        let den = s.sym_pairing(beta, beta);
        if num % den != 0 {
            return false;
        }
        let c = num / den;
        for (k, b) in beta.coords.iter().enumerate() {
            recon[k] += c * b;
        }
    }
    recon == gamma.coords
}

fn is_half_sum_of_hat(set: &OrthSet, a: &AffineRoot) -> bool {
    // hat roots are (beta, -1); test 2a = ±b ± b' allowing b = b'
    let hats: Vec<(Vec<i64>, i64)> = set
        .roots()
        .iter()
        .map(|r| (r.coords.clone(), -1i64))
        .collect();
    let two_fin: Vec<i64> = a.finite.coords.iter().map(|c| 2 * c).collect();
    let two_n = 2 * a.n;
    for (bc, bn) in &hats {
        for (cc, cn) in &hats {
            for (sb, sc) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                let fin: Vec<i64> = bc
                    .iter()
                    .zip(cc)
                    .map(|(x, y)| sb * x + sc * y)
                    .collect();
                let nn = sb * bn + sc * cn;
                if fin == two_fin && nn == two_n {
                    return true;
                }
            }
        }
    }
    false
}

/// C7: the F_alpha move calculus on every node of every resolution poset of
/// rank <= 3.
pub fn check_moves() -> Check {
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for (l, n) in rank_le_types(3) {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        for o in &cat {
            let res = Resolution::new(&s, o);
            let p = res.enumerate();
            for node in &p.nodes {
                let ds = res.descents(node);
                for (i, class) in ds {
                    cases += 1;
                    let moved = match res.f_alpha(node, i) {
                        Ok(m) => m,
                        Err(e) => {
                            failures.push(format!("{l}{n} {}: F move failed: {e}", o.id));
                            continue;
                        }
                    };
                    if moved.dim + 1 != node.dim {
                        failures.push(format!(
                            "{l}{n} {}: F_alpha drops L by {} (expected 1)",
                            o.id,
                            node.dim as i64 - moved.dim as i64
                        ));
                    }
                    if node.admissible && !moved.admissible {
                        failures.push(format!(
                            "{l}{n} {}: admissibility lost along F_alpha",
                            o.id
                        ));
                    }
                    if !res.pair_leq(&moved, node) {
                        failures.push(format!(
                            "{l}{n} {}: F_alpha image is not below the node",
                            o.id
                        ));
                    }
                    // when alpha is a descent of the involution, sigma moves by circ
                    let a = AffineRoot::finite(s.simple_root(i).clone());
                    let dt = affine_weyl::descent_type(&s, &a, &node.sigma);
                    let class_expects_circ = matches!(
                        class,
                        DescentClass::InternalReal | DescentClass::InternalComplex
                    ) || dt != DescentType::None;
                    if class_expects_circ {
                        let circd = affine_weyl::circ(&s, &a, &node.sigma);
                        if moved.sigma != circd {
                            failures.push(format!(
                                "{l}{n} {}: sigma(F_alpha(p)) != s_alpha ∘ sigma(p)",
                                o.id
                            ));
                        }
                    }
                }
            }
        }
    }
    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C7 F_alpha move calculus on all resolution posets (rank <= 3)".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} moves")
        } else {
            failures.join("; ")
        },
    }
}

fn expected_components(letter: TypeLetter, rank: usize) -> usize {
    match letter {
        TypeLetter::B if rank >= 4 => 2,
        TypeLetter::D if rank >= 4 && rank % 2 == 0 => 3,
        TypeLetter::D if rank >= 4 => 2,
        _ => 1,
    }
}

/// C8: desk-scale regression counts, recomputed from scratch.
pub fn check_desk_counts() -> Check {
    let mut failures = Vec::new();
    let mut cases = 0usize;

    let a1 = sys(TypeLetter::A, 1);
    let cat1 = catalogue::catalogue(&a1);
    let p1 = poset::enumerate_n2(&a1, &cat1);
    cases += 1;
    let dims: Vec<usize> = p1.nodes.iter().map(|n| n.dim).collect();
    if p1.nodes.len() != 3 || dims != vec![0, 1, 2] || p1.covers != vec![(0, 1), (1, 2)] {
        failures.push(format!(
            "A1: expected 3-node chain with dims 0,1,2, got {} nodes {:?}",
            p1.nodes.len(),
            dims
        ));
    }

    let a2 = sys(TypeLetter::A, 2);
    let cat2 = catalogue::catalogue(&a2);
    let p2 = poset::enumerate_n2(&a2, &cat2);
    cases += 1;
    let top = p2.nodes.iter().map(|n| n.dim).max().unwrap_or(0);
    if p2.nodes.len() != 7 || top != 4 {
        failures.push(format!(
            "A2: expected 7 B-orbits with top dim 4, got {} with top {top}",
            p2.nodes.len()
        ));
    }

    // irreducible-component counts across the catalogue range
    for (l, n) in catalogue_types() {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        let maximal = cat
            .iter()
            .filter(|o| {
                !cat.iter()
                    .any(|p| p.id != o.id && catalogue::g_closure_leq(o, p))
            })
            .count();
        cases += 1;
        let want = expected_components(l, n);
        if maximal != want {
            failures.push(format!(
                "{l}{n}: {maximal} closure-maximal entries, expected {want}"
            ));
        }
    }

    // B-orbit count equals the admissible pairs of maximal rank, summed
    // over the catalogue, plus the zero orbit (rank <= 3)
    for (l, n) in rank_le_types(3) {
        let s = sys(l, n);
        let cat = catalogue::catalogue(&s);
        let n2_count = orthogonal::enumerate_height2_sets(&s).len();
        let mut admissible_open = 1usize; // the zero orbit
        for o in &cat {
            let res = Resolution::new(&s, o);
            let orts = orthogonal::enumerate_ort(&s, &o.psi);
            for w in res.wp_reps() {
                for set in &orts {
                    if orthogonal::rank_g(&s, set) == o.rank_r {
                        let p = res.make_pair(w, set);
                        if p.admissible {
                            admissible_open += 1;
                        }
                    }
                }
            }
        }
        cases += 1;
        if n2_count != admissible_open {
            failures.push(format!(
                "{l}{n}: {n2_count} height<=2 sets vs {admissible_open} open admissible pairs"
            ));
        }
    }

    Check {
        elapsed: std::time::Duration::ZERO,
        name: "C8 desk-scale counts: A1 chain, A2 locus, component counts, admissible-pair totals".into(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{cases} counts")
        } else {
            failures.join("; ")
        },
    }
}

type CheckFn = fn() -> Check;

pub fn suite_checks(suite: Suite) -> Vec<CheckFn> {
    let mut v: Vec<(Suite, CheckFn)> = vec![
        (Suite::Catalogue, check_table1),
        (Suite::Poset, check_dimensions),
        (Suite::Bruhat, check_bruhat_oracle),
        (Suite::Bruhat, check_lengths),
        (Suite::Poset, check_closure_cross_validation),
        (Suite::Lemmas, check_injectivity_and_heights),
        (Suite::Lemmas, check_moves),
        (Suite::Poset, check_desk_counts),
    ];
    if suite != Suite::All {
        v.retain(|(s, _)| *s == suite);
    }
    v.into_iter().map(|(_, f)| f).collect()
}

/// Runs the checks of a suite, optionally across worker threads; results
/// come back in declaration order either way.
fn timed(f: CheckFn) -> Check {
    let start = std::time::Instant::now();
    let mut c = f();
    c.elapsed = start.elapsed();
    c
}

pub fn run_suite(suite: Suite, jobs: usize) -> Vec<Check> {
    let checks = suite_checks(suite);
    if jobs <= 1 || checks.len() <= 1 {
        return checks.into_iter().map(timed).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<std::sync::Mutex<Option<Check>>> =
        checks.iter().map(|_| std::sync::Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(checks.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= checks.len() {
                    break;
                }
                let result = timed(checks[i]);
                *slots[i].lock().unwrap() = Some(result);
            });
        }
    });
    slots
        .into_iter()
        .map(|c| c.into_inner().unwrap().expect("check ran"))
        .collect()
}

/// Extra structural cross-checks used by the invariants test target.
pub fn involution_lifting_holds(s: &RootSystem, sigmas: &[AffineInvolution]) -> bool {
    let simples = affine_weyl::simple_affine_roots(s);
    for sig in sigmas {
        for tau in sigmas {
            if sig == tau
                || !affine_weyl::bruhat_leq(s, &sig.element, &tau.element)
            {
                continue;
            }
            for a in &simples {
                let cs = affine_weyl::circ(s, a, sig);
                let ct = affine_weyl::circ(s, a, tau);
                let sig_up = cs.len > sig.len;
                let tau_down = ct.len < tau.len;
                if sig_up
                    && tau_down
                    && (!affine_weyl::bruhat_leq(s, &cs.element, &tau.element)
                        || !affine_weyl::bruhat_leq(s, &sig.element, &ct.element))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The descent characterizations of the involution calculus, checked on a
/// family of involutions.
pub fn descent_cr_holds(s: &RootSystem, sigmas: &[AffineInvolution]) -> bool {
    let simples = affine_weyl::simple_affine_roots(s);
    for sig in sigmas {
        for a in &simples {
            let dt = affine_weyl::descent_type(s, a, sig);
            let moved = affine_weyl::circ(s, a, sig);
            let s_a = affine_weyl::affine_reflect(s, a).unwrap();
            let left = affine_weyl::compose(s, &s_a, &sig.element);
            let right = affine_weyl::compose(s, &sig.element, &s_a);
            let commute = left == right;
            let is_descent = dt != DescentType::None;
            let drops = moved.inv_length() + 1 == sig.inv_length();
            if is_descent != drops {
                return false;
            }
            if is_descent
                && (affine_weyl::length(s, &left) >= sig.len
                    || affine_weyl::length(s, &right) >= sig.len)
            {
                return false;
            }
            match dt {
                DescentType::Real => {
                    if !commute || moved.len + 1 != sig.len {
                        return false;
                    }
                }
                DescentType::Complex => {
                    if moved.len + 2 != sig.len {
                        return false;
                    }
                }
                DescentType::None => {}
            }
        }
    }
    true
}

pub fn all_sigmas_of_height2_sets(s: &RootSystem) -> Vec<AffineInvolution> {
    orthogonal::enumerate_height2_sets(s)
        .iter()
        .map(|set| affine_weyl::sigma_of_set(s, set))
        .collect()
}
