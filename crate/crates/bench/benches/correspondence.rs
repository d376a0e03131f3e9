use criterion::{black_box, criterion_group, criterion_main, Criterion};
use springer_core::springer::correspondence_table;
use springer_core::{CharParity, Family, GroupDescriptor};

fn tables(c: &mut Criterion) {
    for (family, ch) in [
        (Family::Sp, CharParity::Odd),
        (Family::SoEven, CharParity::Odd),
        (Family::Sp, CharParity::Two),
        (Family::SoEven, CharParity::Two),
    ] {
        let g = GroupDescriptor::split(family, 6, ch);
        c.bench_function(&format!("table {g}"), |b| b.iter(|| correspondence_table(black_box(&g)).unwrap()));
    }
}

criterion_group!(benches, tables);
criterion_main!(benches);
