mod common;

use std::collections::BTreeSet;

use comajor::chord::find_crossing;
use comajor::legality::StripSystem;
use comajor::{build_prelamination, is_legal_pair, Angle, Chord, LengthClass};
use num_traits::Signed;
use proptest::prelude::*;

use common::{cross, len, ratio};

fn angle(max_den: i64) -> impl Strategy<Value = Angle> {
    (1..=max_den).prop_flat_map(|q| (0..q, Just(q))).prop_map(|(p, q)| Angle::new(p, q).unwrap())
}

fn chord(max_den: i64) -> impl Strategy<Value = Chord> {
    (angle(max_den), angle(max_den)).prop_map(|(x, y)| Chord::new(x, y))
}

/// Preperiod and period read off the reduced denominator `3^k m`.
fn factor_oracle(q: u64) -> (usize, usize) {
    let mut m = q;
    let mut k = 0;
    while m.is_multiple_of(3) {
        m /= 3;
        k += 1;
    }
    if m == 1 {
        return (k, 1);
    }
    let mut order = 1;
    let mut pow = 3 % m;
    while pow != 1 {
        pow = pow * 3 % m;
        order += 1;
    }
    (k, order)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tripling_commutes_with_antipode(x in angle(10_000)) {
        prop_assert_eq!(x.antipode().triple(), x.triple().antipode());
    }

    #[test]
    fn preimages_map_back(x in angle(5_000)) {
        for y in x.preimages() {
            prop_assert_eq!(y.triple(), x.clone());
        }
    }

    #[test]
    fn orbit_info_matches_factorisation(x in angle(20_000)) {
        let info = x.orbit_info();
        let (pre, per) = factor_oracle(x.denom_u64().unwrap());
        // x = 0 is the fixed point with denominator 1
        prop_assert_eq!((info.preperiod, info.period), (pre, per));
    }

    #[test]
    fn arcs_split_the_circle(a in angle(60), b in angle(60), x in angle(60)) {
        prop_assume!(a != b && x != a && x != b);
        prop_assert!(x.in_open_arc(&a, &b) ^ x.in_open_arc(&b, &a));
    }

    #[test]
    fn crossing_is_symmetric_and_matches_oracle(p in chord(48), q in chord(48)) {
        prop_assert_eq!(p.crosses(&q), q.crosses(&p));
        prop_assert_eq!(p.crosses(&q), cross(&p, &q));
    }

    #[test]
    fn siblings_share_the_image(c in chord(72)) {
        prop_assume!(!c.is_degenerate());
        let (t1, t2) = c.translate_siblings().unwrap();
        prop_assert_eq!(t1.image(), c.image());
        prop_assert_eq!(t2.image(), c.image());
        if !matches!(c.classify(), LengthClass::Critical | LengthClass::Diameter) {
            let (s1, s2) = c.sml_siblings().unwrap();
            prop_assert_eq!(s1.image(), c.image());
            prop_assert_eq!(s2.image(), c.image());
        }
    }

    #[test]
    fn short_chords_have_sml_pattern(c in chord(96)) {
        prop_assume!(c.classify() == LengthClass::Short);
        let (s1, s2) = c.sml_siblings().unwrap();
        let l = len(&c);
        let got: BTreeSet<_> = [len(&s1), len(&s2)].into_iter().collect();
        let want: BTreeSet<_> = [ratio(1, 3) - &l, ratio(1, 3) + &l].into_iter().collect();
        prop_assert_eq!(got, want);
        let trio = [&c, &s1, &s2];
        for i in 0..3 {
            for j in i + 1..3 {
                prop_assert!(!trio[i].crosses(trio[j]));
                prop_assert!(!trio[i].shares_endpoint(trio[j]));
            }
        }
    }

    #[test]
    fn majors_lengths(c in chord(96)) {
        prop_assume!(!c.is_degenerate() && c.is_comajor_length());
        let (m, mp) = c.majors().unwrap();
        let l = len(&c);
        prop_assert_eq!(len(&m), ratio(1, 3) + &l);
        prop_assert_eq!(len(&mp), ratio(1, 3) - &l);
        let strips = comajor::legality::strips_of(&c).unwrap();
        prop_assert_eq!(strips.width, l);
    }

    #[test]
    fn find_crossing_agrees_with_pairwise_scan(family in prop::collection::vec(chord(24), 0..14)) {
        let any = family.iter().enumerate().any(|(i, p)| family[i + 1..].iter().any(|q| cross(p, q)));
        let found = find_crossing(&family);
        prop_assert_eq!(found.is_some(), any);
        if let Some((p, q)) = found {
            prop_assert!(cross(&p, &q));
        }
    }

    #[test]
    fn legality_is_antipode_symmetric(c in chord(60)) {
        prop_assume!(c.is_comajor_length());
        let v = is_legal_pair(&c).unwrap();
        let w = is_legal_pair(&c.antipode()).unwrap();
        prop_assert_eq!(v.is_legal(), w.is_legal());
    }

    #[test]
    fn under_is_antisymmetric(p in chord(48), q in chord(48)) {
        prop_assume!(p.shorter_arc().is_some() && q.shorter_arc().is_some());
        prop_assume!(!p.is_degenerate() && !q.is_degenerate());
        prop_assert!(!(p.under(&q).unwrap() && q.under(&p).unwrap()));
    }
}

/// The other medium/long member of the sibling collection of `l`.
fn strip_partner(l: &Chord) -> Chord {
    let (s1, s2) = l.sml_siblings().unwrap();
    if len(&s1) > ratio(1, 6) {
        s1
    } else {
        s2
    }
}

#[test]
fn closest_to_criticality_law() {
    let mut checked = 0;
    for seed in comajor::build(3, false).unwrap().chords() {
        let lam = build_prelamination(&seed, 4).unwrap();
        for l in lam.chords() {
            if len(l) <= ratio(1, 6) || len(l) == ratio(1, 3) || len(l) == ratio(1, 2) {
                continue;
            }
            let strips = StripSystem::between(l, &strip_partner(l));
            let images = common::forward_images(l);
            let dist = |c: &Chord| (len(c) - ratio(1, 3)).abs();
            if let Some(first) = images.iter().find(|f| strips.contact(f).is_some()) {
                assert!(len(first) > ratio(1, 6), "{first} entering SH({l}) is short");
                assert!(dist(first) < dist(l), "{first} entering SH({l}) is not closer to criticality");
            }
            if images.iter().all(|f| dist(f) >= dist(l)) {
                assert!(images.iter().all(|f| strips.contact(f).is_none()));
            }
            checked += 1;
        }
    }
    println!("{checked} medium/long chords checked");
    assert!(checked > 500);
}
