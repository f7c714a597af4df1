use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cosys::catalog::{self, RANK6_MAXIMAL};
use cosys::cosystole::{self, CosystoleError, WeightVector};
use cosys::graphs::{census_msr_cographic, generate_cubic_connected, Graph};
use cosys::{lp, BinaryMatroid, Gf2Matrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Runs `f` and records whether its result equals `expected`.
    fn check(&mut self, name: impl Into<String>, expected: impl fmt::Display, f: impl FnOnce() -> String) {
        let start = Instant::now();
        let expected = expected.to_string();
        let actual = f();
        let status = if actual == expected { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, expected, actual, elapsed_ms: start.elapsed().as_millis() });
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {} expected={} actual={} ({} ms)", c.name, c.expected, c.actual, c.elapsed_ms)?;
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        writeln!(f, "overall: {} ({passed}/{} checks)", if self.overall() { "pass" } else { "fail" }, self.checks.len())
    }
}

pub const SUITES: [&str; 9] = ["values", "monotonicity", "census", "lemmaG7", "constructions", "inequalities", "lp", "weights", "rank4"];

pub fn run(suite: &str, report: &mut VerificationReport) {
    match suite {
        "values" => values(report),
        "monotonicity" => monotonicity(report),
        "census" => census(report),
        "lemmaG7" => lemma_g7(report),
        "constructions" => constructions(report),
        "inequalities" => inequalities(report),
        "lp" => lp_integrity(report),
        "weights" => weights(report),
        "rank4" => rank4(report),
        "all" => SUITES.iter().for_each(|s| run(s, report)),
        _ => unreachable!("suite names are validated by the argument parser"),
    }
}

fn entry(name: &str) -> BinaryMatroid {
    catalog::get(name).expect("catalog name").matroid
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

fn show<T: fmt::Display, E: fmt::Display>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn sys3(m: &BinaryMatroid) -> Result<Rational, CosystoleError> {
    cosystole::sys3_star(m).map(|r| r.value)
}

fn sys(m: &BinaryMatroid) -> Result<Rational, CosystoleError> {
    cosystole::sys_star(m).map(|r| r.value)
}

fn holds(ok: bool) -> String {
    if ok { "true" } else { "false" }.to_string()
}

fn rank6() -> Vec<(String, BinaryMatroid)> {
    catalog::all()
        .into_iter()
        .filter(|e| e.matroid.rank() == 6)
        .map(|e| (e.name.to_string(), e.matroid))
        .collect()
}

fn values(r: &mut VerificationReport) {
    for e in catalog::all() {
        if let Some(want) = &e.expected_sys3 {
            r.check(format!("sys3_star({})", e.name), want, || show(sys3(&e.matroid)));
        }
    }
    for i in 1..=9 {
        let name = format!("Mstar_G{i}");
        r.check(format!("sys3_star({name}) <= 1"), "true", || holds(sys3(&entry(&name)).is_ok_and(|v| v <= Rational::one())));
    }
    r.check("sys_star(Mstar_G1)", "1/3", || show(sys(&entry("Mstar_G1"))));
    for (name, m) in rank6() {
        r.check(format!("sys_star({name}) <= 1/3"), "true", || holds(sys(&m).is_ok_and(|v| v <= q(1, 3))));
    }
    r.check("sys_star(Mstar_G53) > 1/4", "true", || holds(sys(&entry("Mstar_G53")).is_ok_and(|v| v > q(1, 4))));
}

fn defined(m: &BinaryMatroid) -> Option<Rational> {
    sys3(m).ok()
}

/// Elements violating `sys3*(M\e) <= sys3*(M) <= sys3*(M/e)`, as labels.
fn monotone_violations(m: &BinaryMatroid) -> Vec<String> {
    let Some(v) = defined(m) else { return Vec::new() };
    let mut bad = Vec::new();
    for e in 0..m.len() {
        if m.is_coloop(e).unwrap_or(true) {
            continue;
        }
        let con = m.contract(e).expect("index in range");
        if con.rank() < 3 {
            continue;
        }
        let del = m.delete(e).expect("index in range");
        if let (Some(d), Some(c)) = (defined(&del), defined(&con)) {
            if !(d <= v && v <= c) {
                bad.push(m.labels()[e].clone());
            }
        }
    }
    bad
}

/// `m` with `parallels` copies of random columns and `loops` zero columns
/// inserted at random positions.
pub fn inject(m: &BinaryMatroid, parallels: usize, loops: usize, rng: &mut ChaCha8Rng) -> BinaryMatroid {
    let rep = m.representation();
    let mut cols: Vec<(u64, String)> = (0..m.len()).map(|c| (rep.column(c), m.labels()[c].clone())).collect();
    for i in 0..parallels + loops {
        let col = if i < parallels { cols[rng.random_range(0..m.len())].0 } else { 0 };
        let at = rng.random_range(0..=cols.len());
        cols.insert(at, (col, format!("x{i}")));
    }
    let mut rows = vec![0u64; rep.nrows()];
    for (j, (col, _)) in cols.iter().enumerate() {
        for (i, row) in rows.iter_mut().enumerate() {
            *row |= (col >> i & 1) << j;
        }
    }
    let rep = Gf2Matrix::from_rows(rows, cols.len()).expect("same shape");
    BinaryMatroid::new(rep, cols.into_iter().map(|(_, l)| l).collect()).expect("fresh labels")
}

fn monotonicity(r: &mut VerificationReport) {
    for e in catalog::all().into_iter().filter(|e| (4..=6).contains(&e.matroid.rank())) {
        r.check(format!("monotone minors of {}", e.name), "[]", || format!("{:?}", monotone_violations(&e.matroid)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in ["M_K5", "Mstar_K33", "R10", "Mstar_G53", "R12"] {
        let m = entry(name);
        let noisy = inject(&m, 3, 2, &mut rng);
        let want = show(sys3(&m));
        r.check(format!("sys3_star(si({name} + 3 parallel + 2 loops))"), &want, || show(sys3(&noisy.simplify().0)));
        r.check(format!("sys3_star({name} + 3 parallel + 2 loops)"), &want, || show(sys3(&noisy)));
    }
}

fn count<T, E: fmt::Display>(r: Result<Vec<T>, E>) -> String {
    show(r.map(|v| v.len()))
}

fn census(r: &mut VerificationReport) {
    r.check("cubic connected classes n=8", 5, || count(generate_cubic_connected(8)));
    r.check("cubic connected classes n=10", 19, || count(generate_cubic_connected(10)));
    r.check("census n=8", 2, || count(census_msr_cographic(8)));
    r.check("census n=8 girths", "{3, 4}", || {
        let g: BTreeSet<usize> = census_msr_cographic(8).unwrap_or_default().iter().filter_map(|g| g.girth().ok()).collect();
        format!("{g:?}")
    });
    r.check("census n=10", 9, || count(census_msr_cographic(10)));
}

fn lemma_g7(r: &mut VerificationReport) {
    let r16 = entry("R16");
    for f in 1..=12 {
        r.check(format!("R16\\{f} has a 3-cocircuit and >= 5 of size <= 4"), "true", || {
            let d = r16.delete_label(&f.to_string()).expect("label of R16");
            let s = catalog::cocircuit_spectrum(&d);
            holds(s.contains_key(&3) && s.range(..=4).map(|(_, c)| c).sum::<usize>() >= 5)
        });
    }
    r.check("census graphs with a triangle and >= 5 cycles of size <= 4", 1, || {
        let graphs = census_msr_cographic(10).unwrap_or_default();
        let n = graphs
            .iter()
            .filter(|g| {
                let s = g.cycle_spectrum();
                s.contains_key(&3) && s.range(..=4).map(|(_, c)| c).sum::<usize>() >= 5
            })
            .count();
        n.to_string()
    });
    r.check("R16\\7 isomorphic to Mstar_G7", "true", || {
        holds(r16.delete_label("7").expect("label 7").is_isomorphic(&entry("Mstar_G7")))
    });
}

fn constructions(r: &mut VerificationReport) {
    let k3 = Graph::complete(3).graphic_matroid().expect("small graph");
    let r10 = entry("R10");
    for p in ["f2", "f7"] {
        r.check(format!("P(M(K3), R10) at {p} isomorphic to P_K3_R10"), "true", || {
            let m = catalog::parallel_connection(&k3, &r10, &k3.labels()[0], p);
            holds(m.is_ok_and(|m| m.is_isomorphic(&entry("P_K3_R10"))))
        });
    }
    let k5 = Graph::complete(5).graphic_matroid().expect("small graph");
    let k33 = entry("Mstar_K33");
    let triangles = |m: &BinaryMatroid| -> Vec<[String; 3]> {
        m.circuits()
            .into_iter()
            .filter(|c| c.len() == 3)
            .map(|c| {
                let l = m.set_labels(c);
                [l[0].to_string(), l[1].to_string(), l[2].to_string()]
            })
            .collect()
    };
    let (t5, t33) = (triangles(&k5), triangles(&k33));
    for (a, b) in [(0, 0), (t5.len() - 1, t33.len() - 1)] {
        r.check(format!("P_T(M(K5), M*(K33)) across {:?} isomorphic to R16", t5[a]), "true", || {
            let m = catalog::generalized_parallel_connection_triangle(&k5, &k33, &t5[a], &t33[b]);
            holds(m.is_ok_and(|m| m.is_isomorphic(&entry("R16"))))
        });
    }
    r.check("rank-6 maxima pairwise non-isomorphic", "true", || {
        let ms: Vec<BinaryMatroid> = RANK6_MAXIMAL.iter().map(|n| entry(n)).collect();
        holds((0..ms.len()).all(|i| (i + 1..ms.len()).all(|j| !ms[i].is_isomorphic(&ms[j]))))
    });
}

fn inequalities(r: &mut VerificationReport) {
    for e in catalog::all() {
        let m = &e.matroid;
        r.check(format!("sys_star({}) >= cogirth/|E|", e.name), "true", || {
            let floor = m.cogirth().map(|g| q(g as i64, m.len() as i64));
            holds(matches!((sys(m), floor), (Ok(s), Ok(f)) if s >= f))
        });
        if let Ok(s3) = sys3(m) {
            r.check(format!("sys3_star({}) >= 3 sys_star", e.name), "true", || {
                holds(sys(m).is_ok_and(|s| s3 >= &s * &Rational::from(3i64)))
            });
        }
    }
}

fn lp_integrity(r: &mut VerificationReport) {
    for e in catalog::all() {
        let m = &e.matroid;
        r.check(format!("sys_star({}) certificates", e.name), "true", || {
            holds(cosystole::sys_star(m).is_ok_and(|s| {
                let (p, out) = cosystole::sys_full_program(m, &s);
                lp::verify_certificates(&p, &out)
            }))
        });
        let triples = cosystole::admissible_triples(m);
        if triples.is_empty() {
            continue;
        }
        r.check(format!("sys3_star({}) certificates and determinism", e.name), "true", || {
            let (Ok(a), Ok(b)) = (cosystole::sys3_star(m), cosystole::sys3_star(m)) else {
                return holds(false);
            };
            let (p, out) = cosystole::sys3_full_program(m, &triples, &a);
            holds(a == b && lp::verify_certificates(&p, &out))
        });
        if m.cocircuits().len() <= 31 {
            r.check(format!("sys3_star({}) whole LP", e.name), show(sys3(m)), || {
                show(cosystole::sys3_star_whole_lp(m).map(|w| w.value))
            });
        }
    }
}

fn random_probability(n: usize, rng: &mut ChaCha8Rng) -> WeightVector {
    loop {
        let raw: Vec<i64> = (0..n).map(|_| rng.random_range(0..=1000)).collect();
        let total: i64 = raw.iter().sum();
        if total > 0 {
            return WeightVector::new(raw.into_iter().map(|x| q(x, total)).collect()).expect("non-negative");
        }
    }
}

fn weights(r: &mut VerificationReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (name, m) in rank6() {
        let samples: Vec<WeightVector> = (0..100).map(|_| random_probability(m.len(), &mut rng)).collect();
        r.check(format!("sys3({name}, mu) <= 1 for 100 random mu"), "true", || {
            holds(samples.iter().all(|mu| cosystole::sys3_weighted(&m, mu).is_ok_and(|v| v <= Rational::one())))
        });
    }
    for e in catalog::all() {
        let Ok(star) = sys3(&e.matroid) else { continue };
        for (wname, mu) in &e.named_weights {
            r.check(format!("sys3({}, {wname}) <= sys3_star", e.name), "true", || {
                holds(cosystole::sys3_weighted(&e.matroid, mu).is_ok_and(|v| v <= star))
            });
        }
    }
}

fn rank4(r: &mut VerificationReport) {
    r.check("simple rank-4 classes: restrictions of M(K5) plus Mstar_K33", 17, || {
        catalog::rank4_simple_classes().len().to_string()
    });
}
