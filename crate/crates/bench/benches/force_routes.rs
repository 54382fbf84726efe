use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for &mu in &[0.01, 0.5, 2.0] {
        g.bench_function(format!("d3_mu={mu}"), |b| {
            b.iter(|| {
                casimir_core::force_series_3d(black_box(mu), 1e-12)
                    .unwrap()
                    .f
            })
        });
    }
    g.bench_function("general_d5_mu=1", |b| {
        b.iter(|| {
            casimir_core::force_series_general(5, black_box(1.0), 1e-12)
                .unwrap()
                .f
        })
    });
    g.finish();
}

fn bench_cross_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("cross_routes");
    g.sample_size(10);
    g.bench_function("quadrature_d3_mu=1", |b| {
        b.iter(|| {
            casimir_core::force_quadrature_general(3, black_box(1.0), 1e-8)
                .unwrap()
                .value
        })
    });
    g.bench_function("quadrature_1d_mu=1", |b| {
        b.iter(|| {
            casimir_core::force_quadrature_1d(black_box(1.0), 1e-8)
                .unwrap()
                .value
        })
    });
    g.bench_function("fdt_1d_mu=1", |b| {
        b.iter(|| {
            casimir_core::force_fdt_1d(black_box(1.0), 1e-6)
                .unwrap()
                .value
        })
    });
    g.bench_function("mode_sum_mu=1", |b| {
        b.iter(|| casimir_core::force_mode_sum(black_box(1.0)).unwrap().value)
    });
    g.finish();
}

criterion_group!(benches, bench_series, bench_cross_routes);
criterion_main!(benches);
