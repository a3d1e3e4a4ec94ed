//! Benchmarks for the hot kernels: coset enumeration on construction
//! presentations, Smith normal form, free reduction, and candidate
//! enumeration.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use fourfold_core::{
    build_presentation, enumerate_candidates, smith_normal_form, todd_coxeter, z_model, Alphabet,
    IntegerMatrix, Word,
};
use num_bigint::BigInt;

fn bench_coset_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("todd_coxeter");
    group.sample_size(10);
    for (n, p) in [(1u64, 1u64), (3, 2)] {
        let presentation = build_presentation(n, p).unwrap();
        group.bench_function(format!("n{n}_p{p}"), |b| {
            b.iter(|| {
                let r = todd_coxeter(black_box(&presentation), 2_000_000);
                assert_eq!(r.order(), Some(p));
            })
        });
    }
    group.finish();
}

fn bench_smith_normal_form(c: &mut Criterion) {
    // fixed pseudorandom 10x10 matrix
    let mut state = 0x5eed_cafe_u64;
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) as i64 % 101) - 50
    };
    let rows: Vec<Vec<i64>> = (0..10).map(|_| (0..10).map(|_| next()).collect()).collect();
    let m = IntegerMatrix::from_rows(&rows);
    c.bench_function("smith_normal_form_10x10", |b| {
        b.iter(|| smith_normal_form(black_box(&m)))
    });
}

fn bench_word_reduction(c: &mut Criterion) {
    let alphabet = Alphabet::new(&["a", "b", "c"]).unwrap();
    let gens: Vec<_> = alphabet.generators().collect();
    let mut state = 1u64;
    let raw: Vec<(fourfold_core::Generator, BigInt)> = (0..10_000)
        .map(|_| {
            state = state
                .wrapping_mul(2862933555777941757)
                .wrapping_add(3037000493);
            let g = gens[(state >> 32) as usize % 3].clone();
            let e = BigInt::from(((state >> 16) as i64 % 7) - 3);
            (g, e)
        })
        .collect();
    c.bench_function("reduce_10k_syllables", |b| {
        b.iter_batched(
            || raw.clone(),
            |raw| Word::reduce(black_box(&alphabet), &raw),
            BatchSize::SmallInput,
        )
    });
}

fn bench_candidate_enumeration(c: &mut Criterion) {
    let z = z_model();
    c.bench_function("enumerate_candidates_z", |b| {
        b.iter(|| enumerate_candidates(black_box(&z), &z.surfaces).unwrap())
    });
}

criterion_group!(
    benches,
    bench_coset_enumeration,
    bench_smith_normal_form,
    bench_word_reduction,
    bench_candidate_enumeration
);
criterion_main!(benches);
