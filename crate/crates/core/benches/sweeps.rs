use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use metahecke::forms::generators::{gen_f, theta};
use metahecke::metaplectic::ktypes::{finite_quotient_ktypes, FiniteQuotient};
use metahecke::metaplectic::sweep::cocycle_sweep;
use metahecke::metaplectic::GammaChar;
use metahecke::par::Exec;

const POLICIES: [Exec; 2] = [Exec::Seq, Exec::Par];

fn cocycle(c: &mut Criterion) {
    let mut g = c.benchmark_group("cocycle_sweep");
    for exec in POLICIES {
        g.bench_with_input(BenchmarkId::new(format!("{exec:?}"), 1000), &exec, |b, &e| {
            b.iter(|| black_box(cocycle_sweep(1000, 1, e)))
        });
    }
    g.finish();
}

fn series_product(c: &mut Criterion) {
    let mut g = c.benchmark_group("qexp_mul");
    for n in [200, 800] {
        let (a, f) = (theta(n).pow(7), gen_f(n));
        for exec in POLICIES {
            g.bench_with_input(BenchmarkId::new(format!("{exec:?}"), n), &exec, |b, &e| {
                b.iter(|| black_box(a.mul_with(&f, e)))
            });
        }
    }
    g.finish();
}

fn finite_quotient(c: &mut Criterion) {
    let mut g = c.benchmark_group("finite_quotient");
    g.sample_size(10);
    for exec in POLICIES {
        g.bench_with_input(BenchmarkId::new("build", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| black_box(FiniteQuotient::build(e).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("ktypes", format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| black_box(finite_quotient_ktypes(GammaChar::PlusI, e).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, cocycle, series_product, finite_quotient);
criterion_main!(benches);
