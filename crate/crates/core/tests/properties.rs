use std::cmp::Ordering;

use num_traits::Zero;
use proptest::prelude::*;

use rook_harmonics::cache::{serialize_table, CharacterTableCache};
use rook_harmonics::characters::{centralizer_size, check_equivariant_log_concavity, kronecker, CharacterTable};
use rook_harmonics::combinatorics::{lis, partitions_of, rsk_insert, rsk_viennot, shadow_set, syt_count, Partition, Permutation};
use rook_harmonics::ideal::{evaluate, shadow_monomial, vanishing_witnesses, GradedQuotientModel};
use rook_harmonics::linalg::Rational;
use rook_harmonics::poly::{compare, Monomial, MonomialOrderSpec, Polynomial};
use rook_harmonics::rook::{act, extend_to_permutation, extended_shadow_set, is_extended_shadow_set, LocusParams, RookPlacement};
use rook_harmonics::symfunc::{grfrob_main, pieri_h, SchurVector, TruncationPredicate};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
}

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_size, 0..=max_size)
        .prop_map(move |mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let mut total = 0;
            parts.retain(|&p| {
                total += p;
                total <= max_size
            });
            Partition::from_unsorted(parts)
        })
}

/// A placement with its parameters, `r` at most the number of rooks.
fn located_placement(max: usize) -> impl Strategy<Value = (RookPlacement, LocusParams)> {
    (1..=max, 1..=max)
        .prop_flat_map(|(n, m)| {
            let rows = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
            let cols = Just((1..=m).collect::<Vec<_>>()).prop_shuffle();
            (Just((n, m)), rows, cols, 0..=n.min(m))
        })
        .prop_flat_map(|((n, m), rows, cols, d)| {
            let cells: Vec<(usize, usize)> = rows.into_iter().zip(cols).take(d).collect();
            (Just(RookPlacement::new(n, m, cells).unwrap()), 0..=d)
        })
        .prop_map(|(p, r)| {
            let params = LocusParams::new(p.n(), p.m(), r).unwrap();
            (p, params)
        })
}

fn monomial(n: usize, m: usize, max_degree: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1..=n, 1..=m, 1..=max_degree), 0..=3).prop_map(move |xs| {
        let mut out = Monomial::one();
        for (i, j, e) in xs {
            for _ in 0..e {
                out = &out * &Monomial::var(i, j);
            }
        }
        out
    })
}

fn schur_vector(size: usize) -> impl Strategy<Value = SchurVector> {
    prop::collection::vec((prop::sample::select(partitions_of(size)), -3i64..=3), 0..5).prop_map(|terms| {
        let mut v = SchurVector::zero();
        for (lambda, c) in terms {
            v.add_term(lambda, Rational::from_integer(c.into()));
        }
        v
    })
}

fn spec() -> impl Strategy<Value = MonomialOrderSpec> {
    prop::sample::select(MonomialOrderSpec::all_diagonal().to_vec())
}

proptest! {
    #[test]
    fn rsk_routes_agree(w in permutation(9)) {
        let pair = rsk_viennot(&w);
        prop_assert_eq!(&pair, &rsk_insert(&w));
        prop_assert_eq!(pair.shape().first(), lis(&w));
        prop_assert_eq!(shadow_set(&w.diagram()).len(), w.len() - lis(&w));
        let inverse = rsk_insert(&w.inverse());
        prop_assert_eq!((inverse.p, inverse.q), (pair.q, pair.p));
    }

    #[test]
    fn shadow_corners_reuse_input_coordinates(w in permutation(9)) {
        let diagram = w.diagram();
        for (x, y) in shadow_set(&diagram).points().iter().copied() {
            prop_assert!(diagram.points().iter().any(|p| p.0 == x));
            prop_assert!(diagram.points().iter().any(|p| p.1 == y));
        }
    }

    #[test]
    fn conjugation_preserves_tableau_count(lambda in partition(9)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(syt_count(&lambda), syt_count(&lambda.conjugate()));
    }

    #[test]
    fn extended_shadow_sets((r, params) in located_placement(5)) {
        let es = extended_shadow_set(&r, params).unwrap();
        prop_assert!(es.cells().iter().all(|&(i, j)| (1..=params.n).contains(&i) && (1..=params.m).contains(&j)));
        prop_assert!(is_extended_shadow_set(&es, params).unwrap());
        let w = extend_to_permutation(&r, params).unwrap();
        prop_assert_eq!(es.size(), params.extended_len() - lis(&w));
        prop_assert_eq!(shadow_monomial(&r, params).unwrap().degree() as usize, es.size());
    }

    #[test]
    fn action_is_a_left_action(
        (r, _) in located_placement(5),
        seeds in (0u64..1000, 0u64..1000, 0u64..1000, 0u64..1000),
    ) {
        let pick = |len: usize, seed: u64| {
            let mut all: Vec<Permutation> = Permutation::all(len).collect();
            all.swap_remove(seed as usize % all.len())
        };
        let (s1, s2) = (pick(r.n(), seeds.0), pick(r.n(), seeds.1));
        let (t1, t2) = (pick(r.m(), seeds.2), pick(r.m(), seeds.3));
        let once = act(&s1.compose(&s2).unwrap(), &t1.compose(&t2).unwrap(), &r).unwrap();
        let twice = act(&s1, &t1, &act(&s2, &t2, &r).unwrap()).unwrap();
        prop_assert_eq!(once.size(), r.size());
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn monomial_orders_are_multiplicative(
        spec in spec(),
        a in monomial(3, 3, 2),
        b in monomial(3, 3, 2),
        c in monomial(3, 3, 2),
    ) {
        prop_assert_ne!(compare(&Monomial::one(), &c, &spec), Ordering::Greater);
        let ab = compare(&a, &b, &spec);
        prop_assert_eq!(ab, compare(&b, &a, &spec).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(compare(&(&a * &c), &(&b * &c), &spec), ab);
    }

    #[test]
    fn top_components_multiply(
        f in prop::collection::vec((monomial(2, 3, 2), -2i64..=2), 0..4),
        g in prop::collection::vec((monomial(2, 3, 2), -2i64..=2), 0..4),
    ) {
        let build = |terms: &[(Monomial, i64)]| {
            let mut p = Polynomial::zero();
            for (x, c) in terms {
                p.add_term(x.clone(), Rational::from_integer((*c).into()));
            }
            p
        };
        let (f, g) = (build(&f), build(&g));
        let product = &f * &g;
        prop_assert_eq!(product.top_component(), &f.top_component() * &g.top_component());
    }

    #[test]
    fn truncation_is_linear_and_idempotent(u in schur_vector(5), v in schur_vector(5), k in 0i64..=5) {
        let t = TruncationPredicate::FirstPartAtMost(k);
        prop_assert_eq!(u.truncate(t).truncate(t), u.truncate(t));
        prop_assert_eq!(u.add(&v).truncate(t), u.truncate(t).add(&v.truncate(t)));
    }

    #[test]
    fn pieri_adds_horizontal_strips(lambda in partition(6), k in 0i64..=4) {
        let out = pieri_h(&lambda, k);
        let mut count = 0;
        for (mu, c) in out.terms() {
            prop_assert_eq!(c, &Rational::from_integer(1.into()));
            prop_assert_eq!(mu.size(), lambda.size() + k as usize);
            prop_assert!(mu.contains(&lambda));
            prop_assert!((0..mu.len()).all(|i| mu.part(i + 1) <= lambda.part(i)));
            count += 1;
        }
        // brute force: every partition of the right size that is a horizontal strip over λ
        let brute = partitions_of(lambda.size() + k as usize)
            .into_iter()
            .filter(|mu| mu.contains(&lambda) && (0..mu.len()).all(|i| mu.part(i + 1) <= lambda.part(i)))
            .count();
        prop_assert_eq!(count, brute);
    }

    #[test]
    fn column_orthogonality(rho in partition(10).prop_filter("nonempty", |p| !p.is_empty())) {
        let table = CharacterTable::compute(rho.size());
        let sum: i128 = table.partitions().iter().map(|l| {
            let v = table.value(l, &rho) as i128;
            v * v
        }).sum();
        prop_assert_eq!(sum, centralizer_size(&rho) as i128);
    }

    #[test]
    fn kronecker_is_symmetric(n in 1usize..=6, seeds in (0usize..100, 0usize..100, 0usize..100)) {
        let ps = partitions_of(n);
        let (a, b, c) = (&ps[seeds.0 % ps.len()], &ps[seeds.1 % ps.len()], &ps[seeds.2 % ps.len()]);
        let k = kronecker(a, b, c).unwrap();
        prop_assert_eq!(k, kronecker(b, a, c).unwrap());
        prop_assert_eq!(k, kronecker(c, b, a).unwrap());
    }

    #[test]
    fn main_series_is_log_concave(n in 1usize..=6, m in 1usize..=7, r_seed in 0usize..8) {
        let params = LocusParams::new(n, m, r_seed % (n.min(m) + 1)).unwrap();
        let series = grfrob_main(params);
        prop_assert!(series.layers().iter().all(|l| l.is_genuine()));
        prop_assert!(check_equivariant_log_concavity(&series, n, m).unwrap().passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witnesses_vanish_on_the_locus((r, params) in located_placement(4)) {
        for w in vanishing_witnesses(params) {
            prop_assert!(evaluate(&w, &r).unwrap().is_zero(), "{} at {}", w, r);
        }
    }

    #[test]
    fn normal_forms_preserve_degree((r, _) in located_placement(3), spec in spec(), r_seed in 0usize..4) {
        let params = LocusParams::new(r.n(), r.m(), r_seed % (r.n().min(r.m()) + 1)).unwrap();
        let model = GradedQuotientModel::for_params(params, &spec).unwrap();
        let mono = Monomial::from_cells(r.cells());
        let nf = model.normal_form(&mono);
        for b in nf.keys() {
            prop_assert_eq!(b.degree(), mono.degree());
            prop_assert!(model.basis().contains(b));
            let again = model.normal_form(b);
            prop_assert_eq!(again.len(), 1);
        }
    }

    #[test]
    fn cache_round_trip(n in 0usize..=9) {
        let dir = tempfile::tempdir().unwrap();
        let cache = CharacterTableCache::new(dir.path()).unwrap();
        let first = cache.get(n).unwrap();
        let second = CharacterTableCache::new(dir.path()).unwrap().get(n).unwrap();
        prop_assert_eq!(&first, &second);
        let bytes = std::fs::read_to_string(cache.path_for(n)).unwrap();
        prop_assert_eq!(bytes, serialize_table(&CharacterTable::compute(n)));
    }
}
