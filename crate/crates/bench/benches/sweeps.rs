use criterion::{black_box, criterion_group, criterion_main, Criterion};

use percode_bench::{length_8_partition, perfect};
use percode_core::codes::{covering_radius, extended_hamming};
use percode_core::coloring::check_coloring;
use percode_core::components::{
    census_with, i_even_split, verify_two_maximal_components, Adjacency,
};
use percode_core::make_field;
use percode_core::product::{product_code, Perm};

fn kernel(c: &mut Criterion) {
    for m in [3, 4] {
        let f = make_field(m).unwrap();
        let a = f.alpha_pow(1);
        c.bench_function(&format!("extended_hamming m={m}"), |b| {
            b.iter(|| extended_hamming(&f, black_box(a), 1).unwrap())
        });
    }
}

fn census(c: &mut Criterion) {
    let p = length_8_partition();
    let pc = product_code(&p, Perm::reversal(8)).unwrap();
    c.bench_function("census homogeneous pair", |b| {
        b.iter(|| census_with(pc.code(), Adjacency::Pair(black_box(1), 6)).unwrap())
    });
    c.bench_function("census mixed pair", |b| {
        b.iter(|| census_with(pc.code(), Adjacency::Pair(black_box(1), 9)).unwrap())
    });
}

fn radius(c: &mut Criterion) {
    let (even, _) = i_even_split(&perfect(4), 0).unwrap();
    c.bench_function("covering radius n=15", |b| {
        b.iter(|| covering_radius(black_box(even.words()), 15).unwrap())
    });
}

fn coloring(c: &mut Criterion) {
    let h = perfect(4);
    c.bench_function("six-coloring n=15", |b| {
        b.iter(|| check_coloring(&h, black_box(2), 6).unwrap())
    });
}

fn two_halves(c: &mut Criterion) {
    let p = length_8_partition();
    let perms = [Perm::identity(8)];
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("two halves, one permutation", |b| {
        b.iter(|| verify_two_maximal_components(&p, black_box(&perms)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, kernel, census, radius, coloring, two_halves);
criterion_main!(benches);
