//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//! Runs without the libtest harness so the lines print in order.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cosys::catalog;
use cosys::cosystole::{self, CosystoleError, WeightVector};
use cosys::graphs::{census_msr_cographic, generate_cubic_connected, Graph};
use cosys::lp;
use cosys::par::{self, ExecMode};
use cosys::{BinaryMatroid, ElementSet, Gf2Matrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn entry(name: &str) -> BinaryMatroid {
    catalog::get(name).unwrap().matroid
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

/// `sys3*`, or `None` when the invariant is undefined.
fn sys3_or_none(m: &BinaryMatroid) -> Result<Option<Rational>, String> {
    match cosystole::sys3_star(m) {
        Ok(r) => Ok(Some(r.value)),
        Err(CosystoleError::NoAdmissibleTriple | CosystoleError::NoCocircuits) => Ok(None),
        Err(e) => Err(format!("{:?}: {e}", m.name())),
    }
}

fn exact_values() -> Outcome {
    let table = [
        ("M_K4", q(3, 2)),
        ("M_K5", q(6, 5)),
        ("M_K6", q(1, 1)),
        ("M_K7", q(6, 7)),
        ("Mstar_K33", q(4, 3)),
        ("Mstar_G53", q(12, 11)),
        ("Mstar_G54", q(9, 8)),
        ("R10", q(6, 5)),
        ("P_K3_R10", q(12, 13)),
        ("R16", q(12, 13)),
    ];
    let start = Instant::now();
    let mut slowest = Duration::ZERO;
    for (name, want) in &table {
        let t = Instant::now();
        let r = cosystole::sys3_star(&entry(name)).map_err(|e| format!("{name}: {e}"))?;
        slowest = slowest.max(t.elapsed());
        within(t.elapsed(), Duration::from_secs(60), name)?;
        ensure(&r.value == want, || format!("{name}: got {}, want {want}", r.value))?;
    }
    within(start.elapsed(), Duration::from_secs(600), "table")?;
    Ok(format!("{} values exact, slowest {slowest:?}", table.len()))
}

fn rank6_cographic_bound() -> Outcome {
    let mut values = Vec::new();
    for i in 1..=9 {
        let name = format!("Mstar_G{i}");
        let v = cosystole::sys3_star(&entry(&name)).map_err(|e| format!("{name}: {e}"))?.value;
        ensure(v <= Rational::one(), || format!("{name}: {v} > 1"))?;
        if i == 1 {
            ensure(v == Rational::one(), || format!("Mstar_G1: {v} != 1"))?;
        }
        values.push(format!("G{i}={v}"));
    }
    Ok(values.join(" "))
}

fn cosystole_values() -> Outcome {
    let g1 = cosystole::sys_star(&entry("Mstar_G1")).map_err(|e| e.to_string())?.value;
    ensure(g1 == q(1, 3), || format!("sys*(Mstar_G1) = {g1}"))?;
    for name in rank6_entries() {
        let v = cosystole::sys_star(&entry(&name)).map_err(|e| e.to_string())?.value;
        ensure(v <= q(1, 3), || format!("sys*({name}) = {v} > 1/3"))?;
    }
    let g53 = cosystole::sys_star(&entry("Mstar_G53")).map_err(|e| e.to_string())?.value;
    ensure(g53 > q(1, 4), || format!("sys*(Mstar_G53) = {g53} not > 1/4"))?;
    Ok(format!("sys*(Mstar_G1) = 1/3, sys*(Mstar_G53) = {g53}"))
}

/// Labelled count against the class list: `sum n!/|Aut|` must match.
fn mass_formula_holds(n: usize, classes: &[Graph]) -> bool {
    let mut labelled = 0u64;
    common::labelled_cubic(n, &mut |adj| labelled += common::connected(adj) as u64);
    let fact: u64 = (1..=n as u64).product();
    classes.iter().map(|g| fact / g.automorphism_count()).sum::<u64>() == labelled
}

fn census() -> Outcome {
    let start = Instant::now();
    let c8 = generate_cubic_connected(8).map_err(|e| e.to_string())?;
    let c10 = generate_cubic_connected(10).map_err(|e| e.to_string())?;
    ensure((c8.len(), c10.len()) == (5, 19), || format!("cubic classes {} and {}", c8.len(), c10.len()))?;
    // second method: every labelled cubic graph on 8 vertices, deduplicated
    let mut forms = BTreeSet::new();
    common::labelled_cubic(8, &mut |adj| {
        if common::connected(adj) {
            forms.insert(common::graph_from_adj(adj).canonical_form());
        }
    });
    let ours: BTreeSet<_> = c8.iter().map(Graph::canonical_form).collect();
    ensure(forms == ours, || "n = 8 classes differ from labelled enumeration".into())?;
    ensure(mass_formula_holds(8, &c8) && mass_formula_holds(10, &c10), || "mass formula mismatch".into())?;
    let m8 = census_msr_cographic(8).map_err(|e| e.to_string())?;
    let m10 = census_msr_cographic(10).map_err(|e| e.to_string())?;
    let girths: BTreeSet<usize> = m8.iter().filter_map(|g| g.girth().ok()).collect();
    ensure(m8.len() == 2 && girths == BTreeSet::from([3, 4]), || format!("n = 8 census {} girths {girths:?}", m8.len()))?;
    ensure(m10.len() == 9, || format!("n = 10 census {}", m10.len()))?;
    within(start.elapsed(), Duration::from_secs(120), "census")?;
    Ok(format!("(5, 19) classes, (2, 9) census graphs in {:?}", start.elapsed()))
}

fn lemma_g7() -> Outcome {
    let start = Instant::now();
    let r16 = entry("R16");
    for f in 1..=12 {
        let d = r16.delete_label(&f.to_string()).map_err(|e| e.to_string())?;
        let spec = catalog::cocircuit_spectrum(&d);
        let small: usize = spec.range(..=4).map(|(_, c)| c).sum();
        ensure(spec.contains_key(&3) && small >= 5, || format!("R16\\{f}: spectrum {spec:?}"))?;
    }
    let with_property = census_msr_cographic(10)
        .map_err(|e| e.to_string())?
        .iter()
        .filter(|g| {
            let s = g.cycle_spectrum();
            s.get(&3).is_some_and(|&c| c >= 1) && s.range(..=4).map(|(_, c)| c).sum::<usize>() >= 5
        })
        .count();
    ensure(with_property == 1, || format!("{with_property} census graphs have the property"))?;
    let d = r16.delete_label("7").map_err(|e| e.to_string())?;
    ensure(d.is_isomorphic(&entry("Mstar_G7")), || "R16\\7 not isomorphic to Mstar_G7".into())?;
    within(start.elapsed(), Duration::from_secs(60), "lemma G7")?;
    Ok(format!("12 deletions, 1 census graph, isomorphism found in {:?}", start.elapsed()))
}

fn construction_coherence() -> Outcome {
    let k3 = Graph::complete(3).graphic_matroid().unwrap();
    let r10 = entry("R10");
    let p = catalog::parallel_connection(&k3, &r10, &k3.labels()[0], "f2").map_err(|e| e.to_string())?;
    ensure(p.is_isomorphic(&entry("P_K3_R10")), || "P(M(K3), R10) not isomorphic to P_K3_R10".into())?;
    let k5 = Graph::complete(5).graphic_matroid().unwrap();
    let k33 = entry("Mstar_K33");
    let t5 = k5.circuits().into_iter().find(|c| c.len() == 3);
    let t33 = k33.circuits().into_iter().find(|c| c.len() == 3);
    let (Some(t5), Some(t33)) = (t5, t33) else {
        return Err("missing triangle".into());
    };
    let labels = |m: &BinaryMatroid, t: ElementSet| -> [String; 3] {
        let v: Vec<String> = m.set_labels(t).into_iter().map(String::from).collect();
        [v[0].clone(), v[1].clone(), v[2].clone()]
    };
    let g = catalog::generalized_parallel_connection_triangle(&k5, &k33, &labels(&k5, t5), &labels(&k33, t33))
        .map_err(|e| e.to_string())?;
    ensure(g.is_isomorphic(&entry("R16")), || "P_T(M(K5), M*(K33)) not isomorphic to R16".into())?;
    Ok("P(M(K3), R10) = P_K3_R10 and P_T(M(K5), M*(K33)) = R16".into())
}

fn catalog_by_rank(ranks: std::ops::RangeInclusive<usize>) -> Vec<(String, BinaryMatroid)> {
    catalog::all()
        .into_iter()
        .filter(|e| ranks.contains(&e.matroid.rank()))
        .map(|e| (e.name.to_string(), e.matroid))
        .collect()
}

fn rank6_entries() -> Vec<String> {
    catalog_by_rank(6..=6).into_iter().map(|(n, _)| n).collect()
}

/// Checks `sys3*(M\e) <= sys3*(M) <= sys3*(M/e)` for every applicable `e`;
/// returns the number of elements checked.
fn monotone_sweep(entries: &[(String, BinaryMatroid)]) -> Result<usize, String> {
    let mut checked = 0;
    for (name, m) in entries {
        let Some(v) = sys3_or_none(m)? else { continue };
        let rows = par::map(m.len(), ExecMode::default(), |e| -> Result<Option<(Rational, Rational)>, String> {
            if m.is_coloop(e).unwrap() {
                return Ok(None);
            }
            let con = m.contract(e).unwrap();
            if con.rank() < 3 {
                return Ok(None);
            }
            let del = sys3_or_none(&m.delete(e).unwrap())?;
            let con = sys3_or_none(&con)?;
            Ok(del.zip(con))
        });
        for (e, row) in rows.into_iter().enumerate() {
            if let Some((d, c)) = row? {
                checked += 1;
                ensure(d <= v && v <= c, || format!("{name} at {}: {d} <= {v} <= {c} fails", m.labels()[e]))?;
            }
        }
    }
    Ok(checked)
}

/// Adds `parallels` copies of random columns and `loops` zero columns at
/// random positions.
fn inject(m: &BinaryMatroid, parallels: usize, loops: usize, rng: &mut ChaCha8Rng) -> BinaryMatroid {
    let rep = m.representation();
    let mut cols: Vec<(u64, String)> = (0..m.len()).map(|c| (rep.column(c), m.labels()[c].clone())).collect();
    for i in 0..parallels + loops {
        let col = if i < parallels { cols[rng.random_range(0..m.len())].0 } else { 0 };
        let at = rng.random_range(0..=cols.len());
        cols.insert(at, (col, format!("x{i}")));
    }
    let mut rows = vec![0u64; rep.nrows()];
    for (j, (col, _)) in cols.iter().enumerate() {
        for (r, row) in rows.iter_mut().enumerate() {
            *row |= (col >> r & 1) << j;
        }
    }
    let rep = Gf2Matrix::from_rows(rows, cols.len()).unwrap();
    BinaryMatroid::new(rep, cols.into_iter().map(|(_, l)| l).collect()).unwrap()
}

fn monotonicity() -> Outcome {
    let start = Instant::now();
    let reduced = catalog_by_rank(4..=5);
    let n45 = monotone_sweep(&reduced)?;
    let t45 = start.elapsed();
    within(t45, Duration::from_secs(180), "rank 4-5 sweep")?;
    let n6 = monotone_sweep(&catalog_by_rank(6..=6))?;
    within(start.elapsed(), Duration::from_secs(1200), "full sweep")?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["M_K5", "Mstar_K33", "R10", "Mstar_G53", "R12"] {
        let m = entry(name);
        let noisy = inject(&m, 3, 2, &mut rng);
        let (si, _) = noisy.simplify();
        ensure(si.len() == m.len() && si.is_isomorphic(&m), || format!("{name}: simplification lost structure"))?;
        let (a, b, c) = (sys3_or_none(&m)?, sys3_or_none(&noisy)?, sys3_or_none(&si)?);
        ensure(a == b && b == c, || format!("{name}: {a:?} {b:?} {c:?}"))?;
    }
    Ok(format!(
        "{n45} rank 4-5 elements in {t45:?}, {n6} rank 6 elements, total {:?}; 5 simplifications",
        start.elapsed()
    ))
}

fn random_probability(n: usize, rng: &mut ChaCha8Rng) -> WeightVector {
    loop {
        let raw: Vec<i64> = (0..n).map(|_| rng.random_range(0..=1000)).collect();
        let total: i64 = raw.iter().sum();
        if total > 0 {
            return WeightVector::new(raw.into_iter().map(|x| q(x, total)).collect()).unwrap();
        }
    }
}

fn theorem1_spot_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let names = rank6_entries();
    let mut worst = Rational::zero();
    for name in &names {
        let m = entry(name);
        for _ in 0..100 {
            let mu = random_probability(m.len(), &mut rng);
            ensure(mu.total() == Rational::one(), || "weights not normalized".into())?;
            let v = cosystole::sys3_weighted(&m, &mu).map_err(|e| e.to_string())?;
            ensure(v <= Rational::one(), || format!("{name}: sys3 = {v} > 1"))?;
            worst = worst.max(v);
        }
    }
    Ok(format!("{} rank-6 entries x 100 weights, largest value {worst}", names.len()))
}

fn inequalities() -> Outcome {
    let mut n = 0;
    for e in catalog::all() {
        let m = &e.matroid;
        let sys = cosystole::sys_star(m).map_err(|err| format!("{}: {err}", e.name))?.value;
        let cogirth = m.cogirth().map_err(|err| err.to_string())?;
        let floor = q(cogirth as i64, m.len() as i64);
        ensure(sys >= floor, || format!("{}: sys* = {sys} < {floor}", e.name))?;
        if let Some(s3) = sys3_or_none(m)? {
            ensure(s3 >= &sys * &Rational::from(3i64), || format!("{}: {s3} < 3 * {sys}", e.name))?;
        }
        n += 1;
    }
    Ok(format!("{n} entries"))
}

fn lp_integrity() -> Outcome {
    let mut whole = 0;
    for e in catalog::all() {
        let m = &e.matroid;
        let sys = cosystole::sys_star(m).map_err(|err| err.to_string())?;
        let (p, out) = cosystole::sys_full_program(m, &sys);
        ensure(lp::verify_certificates(&p, &out), || format!("{}: sys* certificate", e.name))?;
        let triples = cosystole::admissible_triples(m);
        if triples.is_empty() {
            continue;
        }
        let r = cosystole::sys3_star(m).map_err(|err| err.to_string())?;
        let (p, out) = cosystole::sys3_full_program(m, &triples, &r);
        ensure(lp::verify_certificates(&p, &out), || format!("{}: sys3* certificate", e.name))?;
        let again = cosystole::sys3_star(m).map_err(|err| err.to_string())?;
        ensure(again == r, || format!("{}: second run differs", e.name))?;
        let seq = cosystole::sys3_star_with(m, ExecMode::Sequential).map_err(|err| err.to_string())?;
        ensure(seq == r, || format!("{}: sequential run differs", e.name))?;
        if m.cocircuits().len() <= 31 {
            let w = cosystole::sys3_star_whole_lp(m).map_err(|err| err.to_string())?;
            ensure(w.value == r.value, || format!("{}: whole LP {} vs {}", e.name, w.value, r.value))?;
            whole += 1;
        }
    }
    Ok(format!("all certificates verify, deterministic, {whole} whole-LP cross-checks"))
}

fn rank4_census() -> Outcome {
    let start = Instant::now();
    let classes = catalog::rank4_simple_classes();
    within(start.elapsed(), Duration::from_secs(300), "rank-4 census")?;
    ensure(classes.len() == 17, || format!("{} classes", classes.len()))?;
    ensure(classes.iter().all(|m| m.rank() == 4 && m.is_simple()), || "non-simple class".into())?;
    Ok(format!("17 classes in {:?}", start.elapsed()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 exact sys3* values", exact_values),
        ("2 rank-6 cographic bound", rank6_cographic_bound),
        ("3 cosystole values", cosystole_values),
        ("4 cubic census", census),
        ("5 G7 lemma", lemma_g7),
        ("6 construction coherence", construction_coherence),
        ("7 monotonicity", monotonicity),
        ("8 weighted spot check", theorem1_spot_check),
        ("9 inequalities", inequalities),
        ("10 LP integrity", lp_integrity),
        ("11 rank-4 census", rank4_census),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let t = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({:?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({:?})", t.elapsed());
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
