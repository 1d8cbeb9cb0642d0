//! Exit criteria, one line per criterion. Every check is exact.

use std::time::{Duration, Instant};

use hookpair::bijections::{check_theorem, Theorem};
use hookpair::diagram::{arm_prefix, build_region, reflect_vertical, rotate180, CellSet, Partition, RegionKind};
use hookpair::dyck::{build_dyck, build_sigma, label_cells, pair_updown, LabelKind, Sigma};
use hookpair::enumerate::{class_b, partitions};
use hookpair::projective::{
    alpha_from_strict, check_projective, check_techprop, m_decomposition, shift_row, split_region,
    StrictPartition,
};
use hookpair::sweep::{run_sweep, SweepConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all_small_partitions(max: usize) -> impl Iterator<Item = Partition> {
    (1..=max).flat_map(move |k| (1..=max).flat_map(move |n| partitions(k, n)))
}

fn criterion_1() -> Outcome {
    let p = Partition::new(vec![11, 11, 9, 8, 8, 6, 3, 1, 0], 9, 11).map_err(|e| e.to_string())?;
    let sigma = build_sigma(&p, 3).map_err(|e| e.to_string())?;
    let word = sigma.to_string().replace(' ', "");
    let expected = "x1x2x3z9z8x4x5z7x6z6z5z4x7x8z3x9z2z1";
    if word != expected {
        return Err(format!("sigma_3 = {word}"));
    }
    let path = build_dyck(&sigma).map_err(|e| e.to_string())?;
    let pairing = pair_updown(&path).map_err(|e| e.to_string())?;
    if pairing.as_slice() != [4, 8, 9, 5, 7, 6, 1, 3, 2] {
        return Err(format!("P_3 = {:?}", pairing.as_slice()));
    }
    Ok(format!("sigma_3 = {word}, P_3 = {:?}", pairing.as_slice()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut cases = 0usize;
    for p in all_small_partitions(5) {
        cases += 1;
        for t in [Theorem::Hooks, Theorem::ArmLegs, Theorem::Symmetric] {
            let report = check_theorem(&p, t);
            if !report.sides.equal() {
                return Err(format!("theorem {t} oracle fails at {p}"));
            }
            if !report.certificate.passed() {
                return Err(format!(
                    "theorem {t} certificate fails at {p}: {}",
                    report.certificate.failures[0]
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let expected: usize = (1..=5)
        .flat_map(|k| (1..=5).map(move |n| binomial(n + k, k)))
        .sum();
    if cases != expected {
        return Err(format!("enumerated {cases} partitions, expected {expected}"));
    }
    if elapsed > Duration::from_secs(10) {
        return Err(format!("took {elapsed:.2?}, limit 10s"));
    }
    Ok(format!("{cases} partitions x 3 identities, 0 counterexamples, {elapsed:.2?}"))
}

fn binomial(n: usize, k: usize) -> usize {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn criterion_3() -> Outcome {
    let mut paths = 0usize;
    for p in all_small_partitions(5) {
        let t = build_region(&p, RegionKind::T);
        for i in 1..=p.n() {
            let labels = label_cells(&p, i).map_err(|e| e.to_string())?;
            let path = build_dyck(&Sigma::from_labeling(&labels))
                .map_err(|e| format!("{p} i={i}: {e}"))?;
            let prefix = arm_prefix(&t, i).map_err(|e| e.to_string())?;
            for x in &labels.x {
                let h = path.label_height(LabelKind::X, x.index).ok_or("missing x step")?;
                if h != t.leg(x.cell).map_err(|e| e.to_string())? {
                    return Err(format!("{p} i={i}: up step x{} at height {h}", x.index));
                }
            }
            for z in &labels.z {
                let h = path.label_height(LabelKind::Z, z.index).ok_or("missing z step")?;
                if h != prefix.coleg(z.cell).map_err(|e| e.to_string())? + 1 {
                    return Err(format!("{p} i={i}: down step z{} at height {h}", z.index));
                }
            }
            paths += 1;
        }
    }
    Ok(format!("{paths} paths valid, all step heights match legs/colegs"))
}

fn same(a: Result<CellSet, hookpair::DiagramError>, b: &CellSet) -> bool {
    match a {
        Ok(g) => g == b.normalize(),
        Err(_) => b.is_empty(),
    }
}

fn criterion_4() -> Outcome {
    let mut checked = 0usize;
    for p in all_small_partitions(5) {
        let r = |kind| build_region(&p, kind);
        let d = r(RegionKind::D);
        let ok = same(rotate180(&r(RegionKind::T)), &r(RegionKind::TStar))
            && same(reflect_vertical(&r(RegionKind::R1)), &d)
            && same(reflect_vertical(&r(RegionKind::R2)), &r(RegionKind::T1Star))
            && same(rotate180(&r(RegionKind::V)), &d)
            && (d.is_empty()
                || r(RegionKind::T2Star)
                    == d.translate(0, (p.n() - p.part(p.k())) as isize));
        if !ok {
            return Err(format!("shape identity fails at {p}"));
        }
        checked += 1;
    }
    Ok(format!("5 identities on {checked} partitions"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let (mut cases, mut indices) = (0usize, 0usize);
    for k in 1..=7 {
        for b in class_b(k) {
            cases += 1;
            let report = check_projective(&b);
            if !report.theorem {
                return Err(format!("identity fails at {b}"));
            }
            let (p_sq, _) = split_region(&b, RegionKind::SQ).map_err(|e| e.to_string())?;
            let (p_t, _) = split_region(&b, RegionKind::T).map_err(|e| e.to_string())?;
            if p_sq != p_t {
                return Err(format!("p(SQ) != p(T) at {b}"));
            }
            for i in 1..=k + 1 {
                if shift_row(&b, i).is_none() {
                    continue;
                }
                indices += 1;
                let tp = check_techprop(&b, i).map_err(|e| e.to_string())?;
                if tp != [true; 4] {
                    return Err(format!("{b} i={i}: shift-row inequalities {tp:?}"));
                }
                let md = m_decomposition(&b, i).map_err(|e| e.to_string())?;
                if let Some((name, _)) = md.checks().into_iter().find(|(_, ok)| !ok) {
                    return Err(format!("{b} i={i}: {name}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if cases != (1..=7).map(|k| 1usize << k).sum::<usize>() {
        return Err(format!("enumerated {cases} class-B partitions"));
    }
    if elapsed > Duration::from_secs(30) {
        return Err(format!("took {elapsed:.2?}, limit 30s"));
    }
    Ok(format!("{cases} class-B partitions, {indices} shifted indices, {elapsed:.2?}"))
}

fn criterion_6() -> Outcome {
    let l = StrictPartition::new(vec![11, 9, 8, 5, 3, 2], 12).map_err(|e| e.to_string())?;
    let b = alpha_from_strict(&l);
    let md = m_decomposition(&b, 5).map_err(|e| e.to_string())?;
    let tp = check_techprop(&b, 5).map_err(|e| e.to_string())?;
    if (md.u, md.s) != (9, 8) {
        return Err(format!("u = {}, s = {}", md.u, md.s));
    }
    if tp != [true; 4] || !md.passed() {
        return Err(format!("techprop {tp:?}, checks {:?}", md.checks()));
    }
    Ok("u = 9, s = 8, all inequalities and M-set identities hold".into())
}

fn criterion_7() -> Outcome {
    let dir = std::env::temp_dir().join(format!("hookpair-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut bytes = Vec::new();
    for (run, jobs) in [(1, 1), (2, 3)] {
        let mut cfg = SweepConfig::new(
            4,
            4,
            [Theorem::Hooks, Theorem::ArmLegs, Theorem::Symmetric, Theorem::Projective],
        );
        cfg.jobs = jobs;
        let path = dir.join(format!("run{run}.json"));
        cfg.output = Some(path.clone());
        run_sweep(&cfg).map_err(|e| e.to_string())?;
        bytes.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    if bytes[0] != bytes[1] {
        return Err("reports differ".into());
    }
    Ok(format!("two runs, {} identical bytes", bytes[0].len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 golden sigma_3 / P_3", criterion_1),
        ("2 exhaustive identities 1-3, n,k <= 5", criterion_2),
        ("3 Dyck path properties", criterion_3),
        ("4 shape identities", criterion_4),
        ("5 projective identity, k <= 7", criterion_5),
        ("6 worked projective instance", criterion_6),
        ("7 deterministic sweep reports", criterion_7),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(msg) => println!("PASS  criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
