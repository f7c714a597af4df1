//! Property tests: rational arithmetic against `BigRational`, random LPs
//! against vertex enumeration, and invariances of the weighted values.

use cosys::catalog;
use cosys::cosystole::{self, WeightVector};
use cosys::lp::{self, LinearProgram, LpOutcome, Relation, VarKind};
use cosys::Rational;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn big(r: &Rational) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

fn rat() -> impl Strategy<Value = Rational> {
    (any::<i64>(), any::<i64>().prop_filter("nonzero", |d| *d != 0)).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

proptest! {
    #[test]
    fn arithmetic_matches_bigrational(a in rat(), b in rat()) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        if !b.is_zero() {
            prop_assert_eq!(big(&(&a / &b)), big(&a) / big(&b));
        }
        prop_assert_eq!(a.cmp(&b), big(&a).cmp(&big(&b)));
        prop_assert_eq!(big(&-&a), -big(&a));
    }

    #[test]
    fn text_round_trip(a in rat()) {
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), a.to_string());
    }

    #[test]
    fn always_reduced(n in any::<i64>(), d in any::<i64>().prop_filter("nonzero", |d| *d != 0), k in 1i64..1000) {
        let a = Rational::new(n, d).unwrap();
        prop_assert!(a.denom() > BigInt::from(0));
        prop_assert_eq!(num_integer::Integer::gcd(&a.numer(), &a.denom()), if a.is_zero() { a.denom() } else { BigInt::from(1) });
        let scaled = Rational::from_big(a.numer() * k, a.denom() * k).unwrap();
        prop_assert_eq!(&scaled, &a);
        let reparsed = Rational::from_big(a.numer(), a.denom()).unwrap();
        prop_assert_eq!(reparsed, a);
    }

    #[test]
    fn promotion_and_demotion(a in rat(), b in rat()) {
        // products of i64 fractions overflow into the big representation and
        // must come back inline once they fit again
        let p = &(&a * &b) * &(&a * &b);
        if !a.is_zero() && !b.is_zero() {
            let q = &p / &(&(&a * &b) * &b);
            prop_assert_eq!(q, a.clone());
        }
        prop_assert_eq!(&(&p - &p), &Rational::zero());
    }

    #[test]
    fn random_two_variable_lps(
        c in (small_rat(), small_rat()),
        rows in prop::collection::vec((small_rat(), small_rat(), 0i64..30), 1..6),
    ) {
        // max c.x, x >= 0, a.x <= b with b >= 0, inside the box x <= 10
        let mut p = LinearProgram::new(vec![c.0.clone(), c.1.clone()], vec![VarKind::NonNegative; 2]);
        let mut cons: Vec<([Rational; 2], Rational)> = rows.iter().map(|(a, b, r)| ([a.clone(), b.clone()], Rational::from(*r))).collect();
        cons.push(([Rational::one(), Rational::zero()], Rational::from(10i64)));
        cons.push(([Rational::zero(), Rational::one()], Rational::from(10i64)));
        for (a, b) in &cons {
            p.add_constraint(a.to_vec(), Relation::Le, b.clone());
        }
        let outcome = lp::solve(&p);
        prop_assert!(lp::verify_certificates(&p, &outcome));
        let LpOutcome::Optimal { value, primal, .. } = outcome else {
            return Err(TestCaseError::fail("origin is feasible and the box is bounded"));
        };
        prop_assert!(p.is_feasible(&primal));
        // every vertex is the intersection of two tight lines among the
        // constraints and the axes
        let mut lines = cons.clone();
        lines.push(([Rational::one(), Rational::zero()], Rational::zero()));
        lines.push(([Rational::zero(), Rational::one()], Rational::zero()));
        let mut best: Option<Rational> = None;
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let ([a1, b1], r1) = &lines[i];
                let ([a2, b2], r2) = &lines[j];
                let det = &(a1 * b2) - &(a2 * b1);
                if det.is_zero() {
                    continue;
                }
                let x = &(&(r1 * b2) - &(r2 * b1)) / &det;
                let y = &(&(a1 * r2) - &(a2 * r1)) / &det;
                let pt = [x, y];
                if p.is_feasible(&pt) {
                    let v = p.objective_value(&pt);
                    if best.as_ref().is_none_or(|b| &v > b) {
                        best = Some(v);
                    }
                }
            }
        }
        prop_assert_eq!(Some(value), best);
    }
}

fn weights_for(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((0i64..12, 1i64..5), n)
        .prop_filter("nonzero", |v| v.iter().any(|(a, _)| *a > 0))
        .prop_map(|v| v.into_iter().map(|(a, b)| Rational::new(a, b).unwrap()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weighted_values_are_scale_invariant(w in weights_for(16), k in 1i64..50) {
        let m = catalog::get("R16").unwrap().matroid;
        let mu = WeightVector::new(w).unwrap();
        let kmu = mu.scaled(&Rational::from(k)).unwrap();
        let s3 = cosystole::sys3_weighted(&m, &mu).unwrap();
        prop_assert_eq!(&s3, &cosystole::sys3_weighted(&m, &kmu).unwrap());
        prop_assert_eq!(&s3, &cosystole::sys3_weighted(&m, &mu.normalized()).unwrap());
        let s = cosystole::sys_weighted(&m, &mu).unwrap();
        prop_assert_eq!(&s, &cosystole::sys_weighted(&m, &kmu).unwrap());
        prop_assert!(s3 >= &s * &Rational::from(3i64));
        prop_assert!(s3 <= Rational::new(12, 13).unwrap());
    }

    #[test]
    fn lower_certificates_hold_exactly_at_the_value(w in weights_for(10)) {
        let m = catalog::get("R10").unwrap().matroid;
        let mu = WeightVector::new(w).unwrap();
        let v = cosystole::sys3_weighted(&m, &mu).unwrap();
        prop_assert!(cosystole::check_lower_certificate(&m, &mu, &v).unwrap());
        let above = &v + &Rational::new(1, 1_000_000).unwrap();
        prop_assert!(!cosystole::check_lower_certificate(&m, &mu, &above).unwrap());
    }
}
