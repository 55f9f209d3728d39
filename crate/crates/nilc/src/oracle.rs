//! Independent brute-force cross-validators: the subword characterization of
//! the Bruhat order, and the closure order recomputed through the resolution
//! fibers. These stay independent of the lifting recursion they check.

use std::collections::HashSet;

use crate::affine_weyl::{self, AffineWeylElement};
use crate::error::{Error, Result};
use crate::orthogonal::OrthSet;
use crate::poset::Resolution;
use crate::root_system::RootSystem;
use crate::weyl::{self, WeylElement};

const MAX_ORACLE_LENGTH: usize = 12;

/// All products of subwords of one reduced word of `w`; by the subword
/// property this is exactly the lower Bruhat interval of `w`.
pub fn subword_reachable(sys: &RootSystem, w: &WeylElement) -> Result<HashSet<WeylElement>> {
    let lw = weyl::length(sys, w);
    if lw > MAX_ORACLE_LENGTH {
        return Err(Error::TooLong(format!(
            "l(w) = {lw} exceeds the subword-oracle guard {MAX_ORACLE_LENGTH}"
        )));
    }
    let word = weyl::word(sys, w);
    let mut reachable: HashSet<WeylElement> = HashSet::new();
    reachable.insert(WeylElement::identity(sys.rank()));
    for &i in &word {
        let s = weyl::simple_reflection(sys, i);
        let step: Vec<WeylElement> = reachable.iter().map(|x| x.compose(&s)).collect();
        reachable.extend(step);
    }
    Ok(reachable)
}

/// Subword test in the finite Weyl group: `u <= w` iff some subword of a
/// reduced word of `w` multiplies to `u`.
pub fn bruhat_leq_subword(sys: &RootSystem, u: &WeylElement, w: &WeylElement) -> Result<bool> {
    Ok(subword_reachable(sys, w)?.contains(u))
}

/// Affine analogue of [`subword_reachable`], over `Delta ∪ {delta - theta}`.
pub fn affine_subword_reachable(
    sys: &RootSystem,
    y: &AffineWeylElement,
) -> Result<HashSet<AffineWeylElement>> {
    let ly = affine_weyl::length(sys, y);
    if ly > MAX_ORACLE_LENGTH {
        return Err(Error::TooLong(format!(
            "l(y) = {ly} exceeds the subword-oracle guard {MAX_ORACLE_LENGTH}"
        )));
    }
    let word = affine_weyl::word(sys, y);
    let simples = affine_weyl::simple_affine_roots(sys);
    let mut reachable: HashSet<AffineWeylElement> = HashSet::new();
    reachable.insert(AffineWeylElement::identity(sys.rank()));
    for &i in &word {
        let step: Vec<AffineWeylElement> = reachable
            .iter()
            .map(|z| affine_weyl::compose_reflection(sys, z, &simples[i]))
            .collect();
        reachable.extend(step);
    }
    Ok(reachable)
}

/// Subword test in the affine Weyl group over `Delta ∪ {delta - theta}`.
pub fn affine_bruhat_leq_subword(
    sys: &RootSystem,
    x: &AffineWeylElement,
    y: &AffineWeylElement,
) -> Result<bool> {
    Ok(affine_subword_reachable(sys, y)?.contains(x))
}

/// Closure order recomputed through the resolution: `Be_R` lies in the
/// closure of `Be_S` iff some fiber member of `R` sits below the admissible
/// pair of `S` in the order of the resolution poset.
pub fn closure_leq_via_resolution(
    res: &Resolution<'_>,
    r: &OrthSet,
    s: &OrthSet,
) -> Result<bool> {
    let fiber = res.fiber(r)?;
    let adm = res.admissible_pair(s)?;
    Ok(fiber.iter().any(|p| res.pair_leq(p, &adm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_weyl::{affine_reflect, AffineRoot};
    use crate::catalogue::catalogue;
    use crate::poset;
    use crate::root_system::{CartanType, TypeLetter};

    fn sys(letter: TypeLetter, rank: usize) -> RootSystem {
        RootSystem::build(CartanType::new(letter, rank).unwrap()).unwrap()
    }

    #[test]
    fn subword_basics() {
        let a2 = sys(TypeLetter::A, 2);
        let e = WeylElement::identity(2);
        let w = weyl::from_word(&a2, &[0, 1, 0]);
        assert!(bruhat_leq_subword(&a2, &e, &w).unwrap());
        assert!(bruhat_leq_subword(&a2, &w, &w).unwrap());
        let s2 = weyl::simple_reflection(&a2, 1);
        assert!(bruhat_leq_subword(&a2, &s2, &w).unwrap());
    }

    #[test]
    fn affine_subword_example() {
        // affine A1: s0 <= s1 s0 s1
        let a1 = sys(TypeLetter::A, 1);
        let alpha = a1.simple_root(0).clone();
        let s0 = affine_reflect(&a1, &AffineRoot::new(alpha.clone(), -1)).unwrap();
        let long = affine_reflect(&a1, &AffineRoot::new(alpha, 1)).unwrap();
        assert!(affine_bruhat_leq_subword(&a1, &s0, &long).unwrap());
        assert!(!affine_bruhat_leq_subword(&a1, &long, &s0).is_err());
    }

    #[test]
    fn guard_applies() {
        let b4 = sys(TypeLetter::B, 4);
        let w0 = weyl::longest_element(&b4, &[0, 1, 2, 3]);
        // l(w0) = 16 > 12
        assert!(matches!(
            bruhat_leq_subword(&b4, &WeylElement::identity(4), &w0),
            Err(Error::TooLong(_))
        ));
    }

    #[test]
    fn resolution_oracle_agrees_on_a2() {
        let a2 = sys(TypeLetter::A, 2);
        let cat = catalogue(&a2);
        let res = Resolution::new(&a2, &cat[0]);
        let classes = poset::ort_x(&a2, &cat[0]);
        assert_eq!(classes.len(), 7);
        for r in &classes {
            for s in &classes {
                let direct = poset::closure_leq_n2(&a2, r, s).unwrap();
                let via = closure_leq_via_resolution(&res, r, s).unwrap();
                assert_eq!(direct, via, "R={r} S={s}");
            }
        }
    }
}
