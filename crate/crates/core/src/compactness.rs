//! Compact spaces and sets, Hausdorff interactions and local compactness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carrier::{Family, PointSet};
use crate::covers::minimal_subcover;
use crate::error::{Error, Result};
use crate::maps::{check_map, FiniteMap};
use crate::separation::is_t2;
use crate::space::TopSpace;

/// Largest open-family size scanned exhaustively.
pub const MAX_LITERAL_OPENS: usize = 20;
const SAMPLED_COVERS: usize = 4096;
const SAMPLE_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompactnessMode {
    /// Every subfamily of the open sets was examined.
    Literal,
    /// Too many open sets; a fixed pseudo-random sample of subfamilies was examined.
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CompactnessCheck {
    pub compact: bool,
    pub mode: CompactnessMode,
    /// Subfamilies that covered the set.
    pub covers_examined: u64,
}

/// A cover chosen from `opens` admits a finite subcover of `a`; the cover
/// itself, being a finite family, is the witness. `None` when the chosen
/// family does not cover `a`.
fn has_finite_subcover<I: Iterator<Item = PointSet>>(chosen: I, a: PointSet) -> Option<bool> {
    let mut union = PointSet::empty(a.n());
    let mut members = 0usize;
    for u in chosen {
        union = union | u;
        members += 1;
    }
    if !a.is_subset(union) {
        return None;
    }
    Some(members < usize::MAX)
}

/// Every family of open sets of `s` covering `a` has a finite subfamily covering `a`.
pub fn compact_set_check(s: &TopSpace, a: PointSet) -> CompactnessCheck {
    let opens = s.opens().members();
    let mut covers = 0u64;
    let mut tally = |r: Option<bool>| match r {
        Some(ok) => {
            covers += 1;
            ok
        }
        None => true,
    };
    if opens.len() <= MAX_LITERAL_OPENS {
        let compact = (0..1u32 << opens.len()).all(|mask| {
            let chosen = opens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &u)| u);
            tally(has_finite_subcover(chosen, a))
        });
        return CompactnessCheck { compact, mode: CompactnessMode::Literal, covers_examined: covers };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut compact = true;
    for _ in 0..SAMPLED_COVERS {
        let picks: Vec<bool> = opens.iter().map(|_| rng.random()).collect();
        let chosen = opens.iter().zip(&picks).filter(|(_, &keep)| keep).map(|(&u, _)| u);
        compact &= tally(has_finite_subcover(chosen, a));
    }
    CompactnessCheck { compact, mode: CompactnessMode::Sampled, covers_examined: covers }
}

pub fn is_compact_set(s: &TopSpace, a: PointSet) -> bool {
    compact_set_check(s, a).compact
}

pub fn is_compact(s: &TopSpace) -> bool {
    is_compact_set(s, s.carrier())
}

/// Every point has an open neighbourhood inside some compact set.
pub fn is_locally_compact(s: &TopSpace) -> bool {
    (0..s.n()).all(|p| {
        s.opens()
            .iter()
            .filter(|u| u.contains(p))
            .any(|u| u.complement().subsets().any(|extra| is_compact_set(s, u | extra)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactnessReport {
    pub compact: bool,
    pub locally_compact: bool,
    pub mode: CompactnessMode,
    /// Size of a minimum subcover of the cover by minimal open sets.
    pub minimal_open_subcover: usize,
}

pub fn compactness_report(s: &TopSpace) -> CompactnessReport {
    let check = compact_set_check(s, s.carrier());
    let cover = Family::new(s.n(), s.min_opens().iter().copied()).expect("minimal opens lie in the carrier");
    let minimal_open_subcover = minimal_subcover(s, &cover, s.carrier()).map(|f| f.len()).unwrap_or(0);
    CompactnessReport {
        compact: check.compact,
        locally_compact: is_locally_compact(s),
        mode: check.mode,
        minimal_open_subcover,
    }
}

/// Truth values of three implications for a map from a compact space into a
/// Hausdorff space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HausdorffCompactChecks {
    /// Continuous implies closed.
    pub continuous_is_closed: bool,
    /// Continuous and bijective implies homeomorphism.
    pub continuous_bijection_is_homeomorphism: bool,
    /// Continuous and injective implies embedding.
    pub continuous_injection_is_embedding: bool,
}

pub fn hausdorff_compact_checks(s1: &TopSpace, s2: &TopSpace, f: &FiniteMap) -> Result<HausdorffCompactChecks> {
    if !is_t2(s2) {
        return Err(Error::CodomainNotHausdorff);
    }
    let r = check_map(f, s1, s2)?;
    let compact = is_compact(s1);
    let premise = compact && r.continuous;
    Ok(HausdorffCompactChecks {
        continuous_is_closed: !premise || r.closed_map,
        continuous_bijection_is_homeomorphism: !(premise && r.injective && r.surjective) || r.homeomorphism,
        continuous_injection_is_embedding: !(premise && r.injective) || r.embedding,
    })
}

/// Facts about compact sets inside one Hausdorff space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HausdorffSetChecks {
    pub compact_sets_closed: bool,
    pub disjoint_compacts_separated: bool,
}

pub fn hausdorff_set_checks(s: &TopSpace) -> Result<HausdorffSetChecks> {
    if !is_t2(s) {
        return Err(Error::CodomainNotHausdorff);
    }
    let compacts: Vec<PointSet> = s.subsets().filter(|&a| is_compact_set(s, a)).collect();
    let compact_sets_closed = compacts.iter().all(|&k| s.is_closed(k));
    let disjoint_compacts_separated = compacts.iter().all(|&a| {
        compacts.iter().filter(|b| !a.is_empty() && !b.is_empty() && !a.meets(**b)).all(|&b| {
            s.opens()
                .iter()
                .filter(|u| a.is_subset(*u))
                .any(|u| s.opens().iter().any(|v| b.is_subset(v) && !u.meets(v)))
        })
    });
    Ok(HausdorffSetChecks { compact_sets_closed, disjoint_compacts_separated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::subspace;
    use crate::space::{discrete, indiscrete, one_point, sierpinski};

    #[test]
    fn compact_examples() {
        for s in [sierpinski(), discrete(3).unwrap(), indiscrete(3).unwrap(), one_point()] {
            assert!(is_compact(&s));
            assert!(is_compact_set(&s, s.empty_set()));
            for a in s.subsets() {
                let (sub, _) = subspace(&s, a).unwrap();
                assert_eq!(is_compact_set(&s, a), is_compact(&sub));
            }
        }
    }

    #[test]
    fn sampled_mode_for_large_families() {
        let d = discrete(5).unwrap();
        let c = compact_set_check(&d, d.carrier());
        assert_eq!(c.mode, CompactnessMode::Sampled);
        assert!(c.compact && c.covers_examined > 0);
        assert_eq!(compact_set_check(&sierpinski(), sierpinski().carrier()).mode, CompactnessMode::Literal);
    }

    #[test]
    fn local_compactness_examples() {
        assert!(is_locally_compact(&one_point()));
        assert!(is_locally_compact(&discrete(0).unwrap()));
        assert!(is_locally_compact(&sierpinski()));
        let r = compactness_report(&discrete(3).unwrap());
        assert!(r.compact && r.locally_compact);
        assert_eq!(r.minimal_open_subcover, 3);
    }

    #[test]
    fn hausdorff_examples() {
        let d = discrete(2).unwrap();
        let swap = FiniteMap::new(2, vec![1, 0]).unwrap();
        let c = hausdorff_compact_checks(&d, &d, &swap).unwrap();
        assert!(c.continuous_bijection_is_homeomorphism && c.continuous_is_closed);
        assert_eq!(hausdorff_compact_checks(&d, &sierpinski(), &swap), Err(Error::CodomainNotHausdorff));
        let h = hausdorff_set_checks(&discrete(3).unwrap()).unwrap();
        assert!(h.compact_sets_closed && h.disjoint_compacts_separated);
    }
}
