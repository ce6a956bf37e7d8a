//! Property tests over random concave, convex and unstructured ideals.

use fibercone::parse::{parse_ideal, to_pair_form};
use fibercone::powers::{concave_power_gens, convex_power_gens, pure_power_reduction};
use fibercone::presentation::{fit_numerator, hilbert_data, series_from_numerator};
use fibercone::semigroup::{apery_set, gcd_all, ns_contains, NumericalSemigroup};
use fibercone::shape::{check_equidistance, classify_shape};
use fibercone::MonomialIdeal;
use proptest::prelude::*;

fn from_steps(mut p: Vec<u64>, mut q: Vec<u64>, concave: bool) -> MonomialIdeal {
    p.sort_unstable();
    q.sort_unstable();
    if concave {
        q.reverse();
    } else {
        p.reverse();
    }
    let mut a: u64 = p.iter().sum();
    let mut b = 0;
    let mut pairs = vec![(a, b)];
    for (dp, dq) in p.iter().zip(&q) {
        a -= dp;
        b += dq;
        pairs.push((a, b));
    }
    MonomialIdeal::from_pairs(&pairs).unwrap()
}

/// `(ideal, is_concave)` with `2 <= m <= 7` and steps at most 8.
fn shaped() -> impl Strategy<Value = (MonomialIdeal, bool)> {
    (1usize..=6, any::<bool>()).prop_flat_map(|(n, concave)| {
        (
            prop::collection::vec(1u64..=8, n),
            prop::collection::vec(1u64..=8, n),
        )
            .prop_map(move |(p, q)| (from_steps(p, q, concave), concave))
    })
}

fn any_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec((0u64..12, 0u64..12), 1..6)
        .prop_map(|v| MonomialIdeal::from_pairs(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mu_grows_linearly_and_matches_closed_form((i, concave) in shaped()) {
        let m = i.mu();
        for k in 1..=4u32 {
            let brute = i.power(k).unwrap();
            prop_assert_eq!(brute.mu(), (m - 1) * k as usize + 1);
            let closed = if concave { concave_power_gens(&i, k) } else { convex_power_gens(&i, k) }.unwrap();
            prop_assert_eq!(closed.as_slice(), brute.gens());
        }
    }

    #[test]
    fn segments_are_equidistant((i, _) in shaped()) {
        let r = classify_shape(&i).unwrap();
        prop_assert!(check_equidistance(&i, &r).unwrap());
    }

    #[test]
    fn transpose_keeps_the_shape((i, _) in shaped()) {
        let r = classify_shape(&i).unwrap();
        let t = classify_shape(&i.transpose()).unwrap();
        prop_assert_eq!((r.is_concave, r.is_convex), (t.is_concave, t.is_convex));
        prop_assert_eq!(r.corner_indices.len(), t.corner_indices.len());
    }

    #[test]
    fn concave_sums_dominate_spread_sums((i, concave) in shaped()) {
        let c = i.gens();
        let m = c.len();
        for lo in 0..m {
            for hi in lo..m {
                for k in 1..=lo.min(m - 1 - hi) {
                    let inner = (c[lo].a + c[hi].a, c[lo].b + c[hi].b);
                    let outer = (c[lo - k].a + c[hi + k].a, c[lo - k].b + c[hi + k].b);
                    if concave {
                        prop_assert!(inner.0 >= outer.0 && inner.1 >= outer.1);
                    } else {
                        prop_assert!(inner.0 <= outer.0 && inner.1 <= outer.1);
                    }
                }
            }
        }
    }

    #[test]
    fn convex_neighbours_divide((i, concave) in shaped()) {
        prop_assume!(!concave);
        let u = i.gens();
        for lo in 0..u.len() {
            for hi in lo + 2..u.len() {
                prop_assert!(u[lo + 1].mul(u[hi - 1]).unwrap().divides(u[lo].mul(u[hi]).unwrap()));
            }
        }
    }

    #[test]
    fn concave_powers_come_from_the_pure_powers((i, concave) in shaped()) {
        prop_assume!(concave);
        let j = pure_power_reduction(&i).unwrap();
        for k in 1..=3u32 {
            prop_assert_eq!(j.multiply(&i.power(k).unwrap()).unwrap(), i.power(k + 1).unwrap());
        }
    }

    #[test]
    fn hilbert_numerator_is_one_plus_m_minus_two((i, _) in shaped()) {
        let h = hilbert_data(&i, 5).unwrap();
        let m = i.mu() as i64;
        let expected = if m == 2 { vec![1] } else { vec![1, m - 2] };
        prop_assert_eq!(h.numerator.clone(), Some(expected));
        let n = h.numerator.unwrap();
        let series: Vec<u64> = series_from_numerator(&n, 6).into_iter().map(|x| x as u64).collect();
        prop_assert_eq!(&series, &h.mu_sequence);
        prop_assert_eq!(fit_numerator(&h.mu_sequence), Some(n));
    }

    #[test]
    fn products_of_generators_generate_the_product(i in any_ideal(), j in any_ideal()) {
        let ij = i.multiply(&j).unwrap();
        for &w in ij.gens() {
            let found = i.gens().iter().any(|&u| j.gens().iter().any(|&v| u.mul(v).unwrap() == w));
            prop_assert!(found);
        }
        for &u in i.gens() {
            for &v in j.gens() {
                prop_assert!(ij.contains(u.mul(v).unwrap()));
            }
        }
    }

    #[test]
    fn pair_form_round_trips(i in any_ideal()) {
        prop_assert_eq!(parse_ideal(&to_pair_form(&i)).unwrap(), i);
    }

    #[test]
    fn apery_set_has_one_element_per_residue(
        gens in prop::collection::vec(2u64..20, 2..5),
        pick in 0usize..4,
    ) {
        prop_assume!(gcd_all(&gens) == 1);
        let s = NumericalSemigroup::new(gens.clone()).unwrap();
        let a = gens[pick % gens.len()];
        let ap = apery_set(&s, a).unwrap();
        prop_assert_eq!(ap.elements.len() as u64, a);
        let mut residues: Vec<u64> = ap.elements.iter().map(|w| w % a).collect();
        residues.sort_unstable();
        prop_assert_eq!(residues, (0..a).collect::<Vec<_>>());
        for &w in &ap.elements {
            prop_assert!(ns_contains(&s, w));
            prop_assert!(w < a || !ns_contains(&s, w - a));
        }
    }
}
