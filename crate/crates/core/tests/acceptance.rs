//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use subtorus::chart::{closed_form_smooth, stratum_oracle, verify_singular_stratum};
use subtorus::classify::{cone_pointed, edge_images, in_convex_hull, linear_identity_residual};
use subtorus::lattice::{gram_identity_check, orthogonal_primitive};
use subtorus::sweep::sweep;
use subtorus::{
    builtin, equivalence_verdict, is_smooth, AffineSubspace, ChartBinomial, EquivalenceReport, IntMat, IntVec,
    RatVec,
};

use common::*;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

struct Evaluated {
    pair: Pair,
    report: EquivalenceReport,
}

fn evaluate(pairs: Vec<Pair>) -> Result<Vec<Evaluated>, String> {
    pairs
        .into_par_iter()
        .map(|pair| {
            equivalence_verdict(&pair.poly, &pair.sub, false)
                .map(|report| Evaluated { pair, report })
                .map_err(|e| e.to_string())
        })
        .collect()
}

fn c1_equivalence(corpus: &[Evaluated], secs: f64) -> Outcome {
    let bad: Vec<String> = corpus
        .iter()
        .filter(|e| !e.report.holds)
        .map(|e| format!("{} q={}", e.pair.name, e.report.q))
        .collect();
    let singular = corpus.iter().filter(|e| !e.report.smooth).count();
    outcome(
        bad.is_empty() && secs < 30.0,
        format!(
            "{} pairs ({} singular), {} exceptions {:?}, {:.2}s",
            corpus.len(),
            singular,
            bad.len(),
            bad.iter().take(5).collect::<Vec<_>>(),
            secs
        ),
    )
}

fn c2_singular_witness() -> Outcome {
    let cp2 = builtin("simplex:2:1").unwrap();
    let rows = match sweep(&cp2, 3, true) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let any_singular = rows.iter().any(|r| !r.smooth);
    let sub = |p: &[i64]| AffineSubspace::linear(vec![IntVec::from_i64(p)]).unwrap();
    let r32 = equivalence_verdict(&cp2, &sub(&[3, 2]), true).unwrap();
    let origin = cp2.vertex_index(&RatVec::from_i64(&[0, 0])).unwrap();
    let rank0 = r32.vertices.iter().any(|v| {
        v.classification.vertex == origin
            && v.chart.singular_stratum.as_deref().is_some_and(|s| verify_singular_stratum(&v.binomial, s))
    });
    let others_smooth = r32.vertices.iter().all(|v| v.classification.vertex == origin || v.chart.smooth);
    let s11 = equivalence_verdict(&cp2, &sub(&[1, 1]), true).unwrap().smooth;
    let s12 = equivalence_verdict(&cp2, &sub(&[1, 2]), true).unwrap().smooth;
    outcome(
        any_singular && !r32.smooth && rank0 && others_smooth && s11 && s12,
        format!(
            "{} rows, singular rows present: {any_singular}; p=(3,2) rank-0 at (0,0): {rank0}; p=(1,1) smooth: {s11}; p=(1,2) smooth: {s12}",
            rows.len()
        ),
    )
}

fn c3_duality() -> Outcome {
    let mut checked = 0;
    for name in CORPUS {
        let p = builtin(name).unwrap();
        for f in p.frames() {
            checked += 1;
            if f.normals().transpose().mul(f.edges()) != IntMat::identity(p.dim()) {
                return outcome(false, format!("{name} at {}", f.vertex()));
            }
        }
    }
    outcome(true, format!("{checked} vertex frames"))
}

fn c4_linear_identity(corpus: &[Evaluated]) -> Outcome {
    let mut checked = 0;
    for e in corpus {
        for f in e.pair.poly.frames() {
            checked += 1;
            if !linear_identity_residual(f, &e.pair.sub).unwrap().is_zero() {
                return outcome(false, format!("{} q={} at {}", e.pair.name, e.report.q, f.vertex()));
            }
        }
    }
    outcome(true, format!("{checked} (vertex, subspace) pairs"))
}

fn c5_gram() -> Outcome {
    let mut r = rng(5);
    let mut checked = 0;
    for n in 2..=5 {
        for _ in 0..60 {
            let basis = random_saturated_basis(&mut r, n, 4);
            let q = orthogonal_primitive(&basis).unwrap();
            let g = gram_identity_check(&basis, &q).unwrap();
            let mut cols: Vec<Vec<i64>> = basis.iter().map(to_i64).collect();
            cols.push(to_i64(&q));
            let independent = leibniz_det(&cols).abs();
            let qq: i128 = to_i64(&q).iter().map(|&x| (x as i128) * (x as i128)).sum();
            if !g.ok || independent != qq {
                return outcome(false, format!("basis {basis:?}: lhs {} rhs {} gram {}", g.lhs, g.rhs, g.gram_det));
            }
            checked += 1;
        }
    }
    outcome(true, format!("{checked} random saturated bases in dims 2-5"))
}

fn c6_sectional(corpus: &[Evaluated]) -> Outcome {
    let (mut jchecks, mut nvchecks) = (0, 0);
    for e in corpus {
        for v in &e.report.vertices {
            let c = &v.classification;
            if !c.jset.is_empty() {
                jchecks += 1;
                if !v.chart.smooth {
                    return outcome(false, format!("{} q={} at {}: J nonempty but singular", e.pair.name, e.report.q, c.point));
                }
            }
            if !c.image_is_vertex {
                nvchecks += 1;
                if !v.chart.smooth {
                    return outcome(false, format!("{} q={} at {}: image not a vertex but singular", e.pair.name, e.report.q, c.point));
                }
            }
        }
    }
    outcome(true, format!("{jchecks} vertical-edge charts, {nvchecks} non-vertex charts, all smooth"))
}

fn random_binomial(r: &mut impl Rng, n: usize) -> ChartBinomial {
    loop {
        let mut a = vec![0i64; n];
        let mut b = vec![0i64; n];
        for i in 0..n {
            let e = r.gen_range(0..=3);
            if r.gen_bool(0.5) {
                a[i] = e;
            } else {
                b[i] = e;
            }
        }
        if let Ok(bin) = ChartBinomial::from_i64(&a, &b) {
            return bin;
        }
    }
}

fn c7_oracles(corpus: &[Evaluated]) -> Outcome {
    let mut charts = 0;
    for e in corpus {
        for v in &e.report.vertices {
            charts += 1;
            if closed_form_smooth(&v.binomial) != stratum_oracle(&v.binomial).is_none() {
                return outcome(false, format!("chart {:?}", v.binomial));
            }
        }
    }
    let mut r = rng(7);
    let mut random = 0;
    for n in 2..=5 {
        for _ in 0..125 {
            let bin = random_binomial(&mut r, n);
            if closed_form_smooth(&bin) != stratum_oracle(&bin).is_none() || is_smooth(&bin).is_err() {
                return outcome(false, format!("random binomial {bin:?}"));
            }
            random += 1;
        }
    }
    let mut vertices = 0;
    for e in corpus {
        let images: Vec<RatVec> = e.pair.poly.vertices().map(|x| e.pair.sub.pullback(x).unwrap()).collect();
        for (k, f) in e.pair.poly.frames().iter().enumerate() {
            vertices += 1;
            let gens: Vec<RatVec> = edge_images(f, &e.pair.sub)
                .unwrap()
                .into_iter()
                .filter(|g| !g.is_zero())
                .map(|g| g.to_rat())
                .collect();
            let pointed = cone_pointed(&gens).pointed;
            let mut others: Vec<RatVec> = images.iter().filter(|x| **x != images[k]).cloned().collect();
            others.sort();
            others.dedup();
            let hull_vertex = !in_convex_hull(&images[k], &others);
            if pointed != hull_vertex || pointed != e.report.vertices[k].classification.image_is_vertex {
                return outcome(false, format!("{} q={} at {}", e.pair.name, e.report.q, f.vertex()));
            }
        }
    }
    outcome(true, format!("{charts} corpus charts, {random} random binomials, {vertices} vertex pointedness/hull pairs"))
}

fn c8_image_delzant(corpus: &[Evaluated]) -> Outcome {
    let smooth: Vec<&Evaluated> = corpus.iter().filter(|e| e.report.smooth).collect();
    for e in &smooth {
        if e.report.image_is_delzant != Some(true) {
            return outcome(false, format!("{} q={}: image not Delzant", e.pair.name, e.report.q));
        }
    }
    outcome(true, format!("{} smooth pairs, all images Delzant", smooth.len()))
}

fn signature(r: &EquivalenceReport) -> (bool, bool, bool, Vec<bool>, Vec<bool>) {
    (
        r.good,
        r.smooth,
        r.holds,
        r.vertices.iter().map(|v| v.chart.smooth).collect(),
        r.vertices.iter().map(|v| v.classification.is_good).collect(),
    )
}

fn c9_offsets(corpus: &[Evaluated]) -> Outcome {
    let mut r = rng(9);
    let step = (corpus.len() / 20).max(1);
    let picks: Vec<&Evaluated> = corpus.iter().step_by(step).take(20).collect();
    let mut runs = 0;
    for e in &picks {
        let base = signature(&e.report);
        for _ in 0..20 {
            let a = random_offset(&mut r, e.pair.sub.dim());
            let shifted = e.pair.sub.with_offset(a).unwrap();
            let rep = equivalence_verdict(&e.pair.poly, &shifted, false).unwrap();
            runs += 1;
            if signature(&rep) != base {
                return outcome(false, format!("{} q={} offset {}", e.pair.name, e.report.q, shifted.offset()));
            }
        }
    }
    outcome(picks.len() == 20, format!("{} pairs x 20 offsets = {runs} runs", picks.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = match evaluate(corpus_pairs(100)) {
        Ok(c) => c,
        Err(e) => {
            println!("acceptance: corpus evaluation failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let secs = start.elapsed().as_secs_f64();

    let results = [
        ("1 main equivalence", c1_equivalence(&corpus, secs)),
        ("2 singular witness", c2_singular_witness()),
        ("3 duality identity", c3_duality()),
        ("4 linear identity", c4_linear_identity(&corpus)),
        ("5 gram identities", c5_gram()),
        ("6 sectional lemmas", c6_sectional(&corpus)),
        ("7 oracle agreement", c7_oracles(&corpus)),
        ("8 image delzant", c8_image_delzant(&corpus)),
        ("9 offset independence", c9_offsets(&corpus)),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
