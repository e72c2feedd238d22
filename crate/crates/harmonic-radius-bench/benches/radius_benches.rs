//! Benchmarks for the hot paths: expression evaluation, Jacobian grids,
//! root solving, sharpness search, collision scanning, boundary
//! simplicity, and SVG emission.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use harmonic_radius::{
    boundary_simple, certify_sense_preserving, emit_svg, injective_pairwise, mapping_f1,
    mapping_f2, radius_n1, radius_n2, sample_image, sharpness_witness, AnalyticPartClass, Cplx,
    GridSpec,
};
use harmonic_radius_bench::{cubic_fold, deep_expression};

fn bench_expression(c: &mut Criterion) {
    let e = deep_expression();
    let de = e.derivative();
    let z = Cplx::new(0.31, -0.42);
    c.bench_function("expr_eval_deep", |b| b.iter(|| e.eval(black_box(z)).unwrap()));
    c.bench_function("expr_eval_derivative_deep", |b| {
        b.iter(|| de.eval(black_box(z)).unwrap())
    });

    let f2 = mapping_f2();
    c.bench_function("mapping_eval_f2", |b| b.iter(|| f2.eval_f(black_box(z)).unwrap()));
    c.bench_function("jacobian_f2", |b| b.iter(|| f2.jacobian(black_box(z)).unwrap()));
}

fn bench_radius_solvers(c: &mut Criterion) {
    c.bench_function("radius_n1_degree_8", |b| b.iter(|| radius_n1(black_box(8)).unwrap()));
    c.bench_function("radius_n2_degree_8", |b| b.iter(|| radius_n2(black_box(8)).unwrap()));
    c.bench_function("sharpness_search_convex", |b| {
        b.iter(|| sharpness_witness(AnalyticPartClass::Convex, black_box(0.5)))
    });
}

fn bench_certification(c: &mut Criterion) {
    let f1 = mapping_f1();
    let grid = GridSpec::default();
    c.bench_function("certify_sense_default_grid", |b| {
        b.iter(|| certify_sense_preserving(&f1, black_box(0.3), grid).unwrap())
    });

    let small = GridSpec { n_radii: 16, n_angles: 64, refine_depth: 0 };
    c.bench_function("pairwise_small_grid", |b| {
        b.iter(|| injective_pairwise(&f1, black_box(0.3), small, 1e-9).unwrap())
    });

    let fold = cubic_fold();
    c.bench_function("boundary_simple_512", |b| {
        b.iter(|| boundary_simple(&fold, black_box(0.5), 512).unwrap())
    });
}

fn bench_render(c: &mut Criterion) {
    let f1 = mapping_f1();
    c.bench_function("render_svg_8x16x256", |b| {
        b.iter(|| {
            let img = sample_image(&f1, black_box(0.9), 8, 16, 256).unwrap();
            emit_svg(&img, 800).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_expression,
    bench_radius_solvers,
    bench_certification,
    bench_render
);
criterion_main!(benches);
