use std::hint::black_box;

use acdlab_core::audit::{audit_group, GroupAnalysis, Theorem};
use acdlab_core::chartab::{class_coefficients, verify_orthogonality};
use acdlab_core::constructions::{build, parse_group_spec};
use acdlab_core::cyclotomic::CyclotomicBasis;
use acdlab_core::group::DEFAULT_ORDER_CAP;
use acdlab_core::modular::Fq;
use acdlab_core::stats::{acd, AcdQuery};
use acdlab_core::{character_table, FieldSpec, FiniteGroup, GroupSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const SPECS: [&str; 5] = ["S(4)", "A(5)", "SD(2,4,15)", "F(113,112)", "SD(5,3,124)"];

fn group(spec: &str) -> FiniteGroup {
    build(&parse_group_spec(spec).unwrap()).unwrap()
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for spec in SPECS {
        let parsed: GroupSpec = spec.parse().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(spec), &parsed, |b, s| {
            b.iter(|| build(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("character_table");
    g.sample_size(10);
    for spec in SPECS {
        let grp = group(spec);
        g.bench_with_input(BenchmarkId::from_parameter(spec), &grp, |b, grp| {
            b.iter(|| character_table(black_box(grp)).unwrap())
        });
    }
    g.finish();

    let mut g = c.benchmark_group("class_coefficients");
    g.sample_size(10);
    for spec in SPECS {
        let grp = group(spec);
        let classes = grp.conjugacy_classes();
        g.bench_with_input(BenchmarkId::from_parameter(spec), &grp, |b, grp| {
            b.iter(|| class_coefficients(black_box(grp), &classes))
        });
    }
    g.finish();
}

fn checks(c: &mut Criterion) {
    let grp = group("F(113,112)");
    let t = character_table(&grp).unwrap();
    c.bench_function("verify_orthogonality/F(113,112)", |b| b.iter(|| verify_orthogonality(black_box(&t))));
    let q = AcdQuery::new(FieldSpec::Cyclotomic(113)).p_prime(113);
    c.bench_function("acd/F(113,112)", |b| b.iter(|| acd(&grp, black_box(&t), &q).unwrap()));

    let analysis = GroupAnalysis::new(&"SD(2,4,15)".parse().unwrap(), DEFAULT_ORDER_CAP).unwrap();
    c.bench_function("audit_all_theorems/SD(2,4,15)", |b| {
        b.iter(|| {
            for &th in Theorem::ALL.iter() {
                black_box(audit_group(th, &analysis).unwrap());
            }
        })
    });
}

fn arithmetic(c: &mut Criterion) {
    let basis = CyclotomicBasis::new(120);
    let terms: Vec<(u64, i64)> = (0..120).map(|j| (j, (j as i64 % 7) - 3)).collect();
    c.bench_function("cyclotomic/reduce_120", |b| {
        b.iter(|| basis.from_integer_terms(black_box(terms.iter().copied())))
    });
    let x = basis.from_integer_terms(terms.iter().copied());
    c.bench_function("cyclotomic/mul_120", |b| b.iter(|| &x * black_box(&x)));

    let f = Fq::new(1_000_003);
    let n = 24;
    let m: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| ((i * 31 + j * 17 + i * j) % 1_000_003) as u64).collect())
        .collect();
    c.bench_function("modular/charpoly_24", |b| b.iter(|| f.charpoly(black_box(&m))));
    let poly = f.charpoly(&m);
    c.bench_function("modular/distinct_roots_24", |b| b.iter(|| f.distinct_roots(black_box(&poly))));
}

criterion_group!(benches, construction, tables, checks, arithmetic);
criterion_main!(benches);
