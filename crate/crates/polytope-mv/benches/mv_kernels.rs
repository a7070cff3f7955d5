//! Sequential vs data-parallel timings for the two enumeration hot spots:
//! the Ryser permanent and the finite-difference volume oracle.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;
use polytope_mv::{mixed_volume_oracle_seq, permanent_seq, MixedVolumeQuery, Polytope};
use std::hint::black_box;

fn dense_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from((3 * i + 7 * j) % 11 + 1))
                .collect()
        })
        .collect()
}

fn box_query(m: usize) -> MixedVolumeQuery {
    let bodies = (0..m)
        .map(|i| {
            let sides: Vec<u64> = (0..m).map(|j| ((i + 2 * j) % 5 + 1) as u64).collect();
            Polytope::axis_box_u64(&sides)
        })
        .collect();
    MixedVolumeQuery::of_bodies(bodies).expect("square box query")
}

fn bench_permanent(c: &mut Criterion) {
    let mut group = c.benchmark_group("permanent");
    for n in [12usize, 16] {
        let m = dense_matrix(n);
        group.bench_with_input(BenchmarkId::new("seq", n), &m, |b, m| {
            b.iter(|| permanent_seq(black_box(m)).unwrap());
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", n), &m, |b, m| {
            b.iter(|| polytope_mv::permanent_par(black_box(m)).unwrap());
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("mv_oracle");
    for m in [10usize, 12] {
        let q = box_query(m);
        group.bench_with_input(BenchmarkId::new("seq", m), &q, |b, q| {
            b.iter(|| mixed_volume_oracle_seq(black_box(q)).unwrap());
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", m), &q, |b, q| {
            b.iter(|| polytope_mv::mixed_volume_oracle_par(black_box(q)).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_permanent, bench_oracle);
criterion_main!(benches);
