use cosetal::corpus::{enumerate_all_data, standard_corpus};
use cosetal::*;
use std::time::Instant;

fn main() {
    let corpus = standard_corpus();
    let t = Instant::now();
    let mut n_data = 0usize;
    let mut n_fs = 0usize;
    let mut n_classes = 0usize;
    for n in &corpus.kernels {
        for h in &corpus.quotients {
            for data in enumerate_all_data(n, h) {
                n_data += 1;
                let coh = cohomology_group(&data, 1 << 20).unwrap();
                n_fs += coh.factor_sets().len();
                n_classes += coh.order();
            }
        }
    }
    println!("data enumeration + cohomology: {:?}", t.elapsed());
    println!("data: {}, factor sets total: {}, classes total: {}", n_data, n_fs, n_classes);

    // zeta-rho round trip cost estimate
    let t = Instant::now();
    let mut built = 0usize;
    for n in &corpus.kernels {
        for h in &corpus.quotients {
            for data in enumerate_all_data(n, h) {
                let coh = cohomology_group(&data, 1 << 20).unwrap();
                for g in coh.factor_sets().elements() {
                    let ext = build_extension(&data, g).unwrap();
                    let cx = CosetalExtension::new(ext).unwrap();
                    let s = canonical_section(&cx);
                    let rdata = cx.extract_data(&s);
                    assert!(rdata.equivalent(&data));
                    let rg = cx.extract_factor_set(&s);
                    assert_eq!(coh.class_of(&rg), coh.class_of(g));
                    built += 1;
                }
            }
        }
    }
    println!("zeta-rho over all data/factor sets: {:?} ({} builds)", t.elapsed(), built);

    // pairwise iso: structured vs estimate
    let t = Instant::now();
    let mut checked = 0usize;
    for (i, a) in corpus.extensions.iter().enumerate() {
        for b in corpus.extensions.iter().skip(i) {
            if a.kernel() != b.kernel() || a.quotient() != b.quotient() {
                continue;
            }
            let _ = extensions_isomorphic(a, b);
            checked += 1;
        }
    }
    println!("structured iso over {} pairs: {:?}", checked, t.elapsed());
}
