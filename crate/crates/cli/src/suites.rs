//! Verification suites run by `rookharm verify`.

use std::collections::BTreeSet;

use clap::ValueEnum;
use rook_harmonics::cache::{CacheOutcome, CharacterTableCache};
use rook_harmonics::characters::{
    check_log_concavity_with, frobenius_from_fixed_points_with, graded_frobenius_of_model,
    symmetrizer_annihilates, trivial_restriction_multiplicity, CharacterTable,
};
use rook_harmonics::combinatorics::{lis, partitions_of, rsk_insert, rsk_viennot, shadow_set, Permutation};
use rook_harmonics::ideal::{
    hilbert_series_oracle, hilbert_series_via_lis, ideal_degree_dimension, ideal_generators, shadow_monomial,
    standard_monomials, subsets, symmetrized_monomial, symmetrizer_sizes, total_monomials, GradedMembershipOracle,
    GradedQuotientModel, Side,
};
use rook_harmonics::poly::{Monomial, MonomialOrderSpec};
use rook_harmonics::rook::{enumerate_rook_placements, enumerate_upper_locus, extended_shadow_set, LocusParams, RookPlacement};
use rook_harmonics::symfunc::{check_interchange, check_sum_identity, frob_layer, grfrob_main, lemma_coef, lemma_sum, DoublySchurVector};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    /// Reduced bounds that finish in seconds.
    Quick,
    /// The full acceptance ranges.
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum SuiteName {
    WorkedExample,
    Rsk,
    Extension,
    Basis,
    Hilbert,
    Identities,
    Module,
    Logconcave,
    Restriction,
    Annihilation,
    Cache,
}

impl SuiteName {
    pub fn label(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_owned()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: Vec<String>,
}

pub struct SuiteContext<'a> {
    pub scale: Scale,
    pub spec: MonomialOrderSpec,
    pub cache: &'a CharacterTableCache,
    pub progress: &'a dyn Fn(&str),
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn error(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }
}

fn params(n: usize, m: usize, r: usize) -> LocusParams {
    LocusParams::new(n, m, r).expect("suite parameters are valid")
}

fn triples(n_max: usize, m_max: usize) -> impl Iterator<Item = LocusParams> {
    (1..=n_max).flat_map(move |n| (1..=m_max).flat_map(move |m| (0..=n.min(m)).map(move |r| params(n, m, r))))
}

pub fn run_suite(name: SuiteName, ctx: &SuiteContext) -> SuiteResult {
    (ctx.progress)(&format!("suite {}", name.label()));
    let mut t = Tally::default();
    let full = ctx.scale == Scale::Full;
    match name {
        SuiteName::WorkedExample => worked_example(&mut t),
        SuiteName::Rsk => rsk(&mut t, if full { 7 } else { 6 }),
        SuiteName::Extension => extension(&mut t),
        SuiteName::Basis => basis(&mut t, if full { 4 } else { 3 }, &ctx.spec),
        SuiteName::Hilbert => hilbert(&mut t, if full { (4, 5) } else { (3, 4) }, &ctx.spec),
        SuiteName::Identities => identities(&mut t, if full { (4, 6) } else { (3, 4) }),
        SuiteName::Module => module(&mut t, full, ctx),
        SuiteName::Logconcave => logconcave(&mut t, if full { (8, 10) } else { (5, 6) }, ctx),
        SuiteName::Restriction => restriction(&mut t, if full { 7 } else { 5 }, ctx),
        SuiteName::Annihilation => annihilation(&mut t, if full { 4 } else { 3 }),
        SuiteName::Cache => cache(&mut t, if full { 10 } else { 7 }, ctx),
    }
    SuiteResult { suite: name.label(), passed: t.failures.is_empty(), checks: t.checks, failures: t.failures }
}

fn worked_example(t: &mut Tally) {
    let w = Permutation::new(vec![6, 3, 5, 7, 1, 2, 8, 4]).expect("permutation");
    let s = shadow_set(&w.diagram());
    t.check(s.points() == [(2, 6), (5, 3), (6, 5), (8, 7)], || format!("shadow set {:?}", s.points()));
    let s2 = shadow_set(&s);
    t.check(s2.points() == [(5, 6)], || format!("iterated shadow set {:?}", s2.points()));
    let pair = rsk_viennot(&w);
    let p: &[Vec<usize>] = &[vec![1, 2, 4, 8], vec![3, 5, 7], vec![6]];
    let q: &[Vec<usize>] = &[vec![1, 3, 4, 7], vec![2, 6, 8], vec![5]];
    t.check(pair.p.rows() == p, || format!("P = {:?}", pair.p.rows()));
    t.check(pair.q.rows() == q, || format!("Q = {:?}", pair.q.rows()));
}

fn rsk(t: &mut Tally, n_max: usize) {
    for n in 1..=n_max {
        for w in Permutation::all(n) {
            t.check(rsk_viennot(&w) == rsk_insert(&w), || format!("rsk mismatch at {w}"));
            t.check(shadow_set(&w.diagram()).len() == n - lis(&w), || format!("|S(w)| != n - lis at {w}"));
        }
    }
}

fn extension(t: &mut Tally) {
    let p = params(8, 6, 2);
    let r = RookPlacement::new(8, 6, vec![(2, 3), (3, 4), (5, 2), (8, 5)]).expect("placement");
    match extended_shadow_set(&r, p) {
        Ok(es) => t.check(es.cells() == [(1, 1), (2, 6), (4, 3), (5, 4), (6, 2)], || format!("ES = {es}")),
        Err(e) => t.error(e.to_string()),
    }
}

fn basis(t: &mut Tally, bound: usize, spec: &MonomialOrderSpec) {
    for p in triples(bound, bound) {
        let locus = enumerate_upper_locus(p);
        let std = match standard_monomials(&locus, spec) {
            Ok(s) => s,
            Err(e) => return t.error(format!("{p}: {e}")),
        };
        let es: BTreeSet<Monomial> = locus.iter().map(|r| shadow_monomial(r, p).expect("in locus")).collect();
        let got: BTreeSet<Monomial> = std.iter().cloned().collect();
        t.check(got == es && std.len() == locus.len(), || format!("{p}: standard monomials differ from es-monomials"));
        let gens = ideal_generators(p);
        let top = std.iter().map(|b| b.degree() as usize).max().unwrap_or(0);
        for d in 0..=top + 1 {
            let std_d = std.iter().filter(|b| b.degree() as usize == d).count();
            match ideal_degree_dimension(&gens, d, p.n, p.m) {
                Ok(dim) => t.check((dim + std_d) as u128 == total_monomials(p.n, p.m, d), || {
                    format!("{p}: degree {d} audit {dim} + {std_d} != {}", total_monomials(p.n, p.m, d))
                }),
                Err(e) => t.error(format!("{p}: {e}")),
            }
        }
    }
}

fn hilbert(t: &mut Tally, (oracle_bound, formula_bound): (usize, usize), spec: &MonomialOrderSpec) {
    t.check(hilbert_series_via_lis(params(2, 2, 1)) == [1, 4, 1], || "(2,2,1) is not [1, 4, 1]".into());
    for p in triples(formula_bound, formula_bound) {
        let via_lis: Vec<i128> = hilbert_series_via_lis(p).into_iter().map(i128::from).collect();
        match grfrob_main(p).dimensions() {
            Ok(dims) => t.check(dims == via_lis, || format!("{p}: lis {via_lis:?} vs frobenius {dims:?}")),
            Err(e) => t.error(format!("{p}: {e}")),
        }
        if p.n <= oracle_bound && p.m <= oracle_bound {
            match hilbert_series_oracle(&enumerate_upper_locus(p), spec) {
                Ok(o) => t.check(o.iter().map(|&x| x as i128).eq(via_lis.iter().copied()), || {
                    format!("{p}: lis {via_lis:?} vs oracle {o:?}")
                }),
                Err(e) => t.error(format!("{p}: {e}")),
            }
        }
    }
}

fn identities(t: &mut Tally, (grid, sum_bound): (usize, usize)) {
    for d in 0..=grid {
        for a in 0..=grid {
            for b in 0..=grid {
                for p in 0..=grid {
                    for q in 0..=grid {
                        let sum = lemma_sum(d as i64, a as i64, b as i64, p as i64, q as i64);
                        for l1 in partitions_of(a + d) {
                            for l2 in partitions_of(b + d) {
                                let closed = lemma_coef(d, a, b, p, q, &l1, &l2).expect("sizes match");
                                t.check(closed == sum.coefficient(&l1, &l2), || {
                                    format!("coefficient ({d},{a},{b},{p},{q}) at ({l1}, {l2})")
                                });
                            }
                        }
                        t.check(check_interchange(d, a, b, p, q), || format!("interchange ({d},{a},{b},{p},{q})"));
                    }
                }
            }
        }
    }
    for p in triples(sum_bound, sum_bound) {
        t.check(check_sum_identity(p), || format!("sum identity {p}"));
    }
}

fn tables(ctx: &SuiteContext, t: &mut Tally, n: usize) -> Option<CharacterTable> {
    match ctx.cache.get(n) {
        Ok(table) => Some(table),
        Err(e) => {
            t.error(format!("character table {n}: {e}"));
            None
        }
    }
}

fn module(t: &mut Tally, full: bool, ctx: &SuiteContext) {
    let pairs: &[(usize, usize)] = if full { &[(2, 2), (2, 3), (3, 3), (3, 4)] } else { &[(2, 2), (2, 3)] };
    for &(n, m) in pairs {
        for r in 0..=n.min(m) {
            let p = params(n, m, r);
            (ctx.progress)(&format!("  graded oracle {p}"));
            let got = GradedQuotientModel::for_params(p, &ctx.spec).and_then(|model| graded_frobenius_of_model(&model));
            match got {
                Ok(series) => t.check(series == grfrob_main(p), || format!("{p}: graded oracle differs")),
                Err(e) => t.error(format!("{p}: {e}")),
            }
        }
    }
    let bound = if full { 4 } else { 3 };
    for n in 1..=bound {
        let Some(left) = tables(ctx, t, n) else { return };
        for m in 1..=bound {
            let Some(right) = tables(ctx, t, m) else { return };
            let layers: Vec<DoublySchurVector> =
                (0..=n.min(m)).map(|d| frob_layer(n, m, d).expect("layer")).collect();
            for r in 0..=n.min(m) {
                let p = params(n, m, r);
                let expected = layers[r..].iter().fold(DoublySchurVector::zero(), |acc, l| acc.add(l));
                match frobenius_from_fixed_points_with(&enumerate_upper_locus(p), &left, &right) {
                    Ok(f) => t.check(f == expected, || format!("{p}: fixed-point Frobenius differs")),
                    Err(e) => t.error(format!("{p}: {e}")),
                }
                if r == 0 {
                    for d in 0..=n.min(m) {
                        let z = enumerate_rook_placements(n, m, d).expect("valid size");
                        match frobenius_from_fixed_points_with(&z, &left, &right) {
                            Ok(f) => t.check(f == layers[d], || format!("Z({n},{m},{d}) differs from its layer")),
                            Err(e) => t.error(e.to_string()),
                        }
                    }
                }
            }
        }
    }
}

fn logconcave(t: &mut Tally, (n_max, m_max): (usize, usize), ctx: &SuiteContext) {
    for n in 1..=n_max {
        let Some(left) = tables(ctx, t, n) else { return };
        (ctx.progress)(&format!("  log-concavity n = {n}"));
        for m in 1..=m_max {
            let Some(right) = tables(ctx, t, m) else { return };
            for r in 0..=n.min(m) {
                let p = params(n, m, r);
                match check_log_concavity_with(&grfrob_main(p), &left, &right, 0) {
                    Ok(rep) => t.check(rep.passed(), || format!("{p}: {} violations", rep.violations.len())),
                    Err(e) => t.error(format!("{p}: {e}")),
                }
            }
        }
    }
}

fn restriction(t: &mut Tally, n_max: usize, ctx: &SuiteContext) {
    for n in 0..=n_max {
        let Some(table) = tables(ctx, t, n) else { return };
        for lambda in partitions_of(n) {
            for j in 0..=n {
                match trivial_restriction_multiplicity(&lambda, j, &table) {
                    Ok(mult) => t.check(symmetrizer_annihilates(&lambda, j) == (mult == 0), || {
                        format!("{lambda}, j = {j}: multiplicity {mult}")
                    }),
                    Err(e) => t.error(e.to_string()),
                }
            }
        }
    }
}

fn annihilation(t: &mut Tally, bound: usize) {
    for p in triples(bound, bound) {
        let oracle = match GradedMembershipOracle::new(&enumerate_upper_locus(p)) {
            Ok(o) => o,
            Err(e) => return t.error(format!("{p}: {e}")),
        };
        for d in 0..=p.n.min(p.m) {
            for r in enumerate_rook_placements(p.n, p.m, d).expect("valid size") {
                for (side, len) in [(Side::Rows, p.n), (Side::Columns, p.m)] {
                    for size in symmetrizer_sizes(p, d, len) {
                        for subset in subsets(len, size) {
                            let f = symmetrized_monomial(&r, &subset, side);
                            match oracle.contains(&f) {
                                Ok(inside) => t.check(inside, || format!("{p}: {side:?} {subset:?} on {r}")),
                                Err(e) => t.error(e.to_string()),
                            }
                        }
                    }
                }
            }
        }
    }
}

fn cache(t: &mut Tally, n_max: usize, ctx: &SuiteContext) {
    for n in 0..=n_max {
        match ctx.cache.get_with_outcome(n) {
            Ok((table, outcome)) => {
                if outcome == CacheOutcome::Rebuilt {
                    (ctx.progress)(&format!("  rebuilt character table cache for n = {n}"));
                }
                t.check(table == CharacterTable::compute(n), || format!("cached table {n} differs"));
                let on_disk = std::fs::read_to_string(ctx.cache.path_for(n)).unwrap_or_default();
                t.check(on_disk == rook_harmonics::cache::serialize_table(&table), || {
                    format!("cache file for {n} is not canonical")
                });
            }
            Err(e) => t.error(e.to_string()),
        }
    }
}
