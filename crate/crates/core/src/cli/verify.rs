use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_guard, Guard, Limits, Result};
use crate::hilbert::{self, HVector};
use crate::jetcomplex::{
    corner_sets, corner_table_from, corners_bruteforce, corners_fast, shelling_order, shelling_order_with, JetShape,
    TieBreak,
};
use crate::latticepath::{count_nonintersecting, count_nonintersecting_with_turns, count_paths, GridPoint};
use crate::oracle;

use super::report::{Check, JetReport, Methods};

/// Largest facet count for which the fast level still runs the shelling
/// route; above it that route is reported as skipped.
pub const FAST_SHELLING_FACETS: u64 = 100_000;

/// Configurations sampled for the Gessel–Viennot check at the deep level,
/// and the cap on their brute-force tuple counts.
pub const GV_SAMPLES: usize = 40;
pub const GV_MAX_PRODUCT: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Fast,
    Deep,
}

pub fn report(shape: &JetShape) -> Result<JetReport> {
    let h = hilbert::h_closed(shape);
    Ok(JetReport {
        m: shape.m(),
        n: shape.n(),
        dimension: shape.dimension(),
        h_vector: Some(h.to_strings()),
        multiplicity: Some(hilbert::jet_multiplicity(shape).to_string()),
        a_invariant: Some(hilbert::a_invariant(shape)?),
        gorenstein: Some(hilbert::is_gorenstein(shape)?),
        canonical_numerator: Some(hilbert::canonical_module_series(shape).numerator().to_strings()),
        ..Default::default()
    })
}

/// The four routes side by side. `shelling` is `None` when it was not run.
pub struct Routes {
    pub closed: HVector,
    pub shelling: Option<HVector>,
    pub paths: HVector,
    pub lemmas: HVector,
}

impl Routes {
    pub fn methods(&self) -> Methods {
        Methods {
            closed: Some(self.closed.to_strings()),
            shelling: self.shelling.as_ref().map(HVector::to_strings),
            paths: Some(self.paths.to_strings()),
            lemmas: Some(self.lemmas.to_strings()),
        }
    }

    pub fn agreement(&self) -> Check {
        let others = [
            ("shelling", self.shelling.as_ref()),
            ("paths", Some(&self.paths)),
            ("lemmas", Some(&self.lemmas)),
        ];
        for (name, h) in others {
            if let Some(h) = h {
                if *h != self.closed {
                    return Check::new(
                        "h_vector_agreement",
                        false,
                        format!("closed {} vs {name} {h}", self.closed),
                    );
                }
            }
        }
        let used: Vec<&str> = std::iter::once("closed")
            .chain(others.iter().filter(|(_, h)| h.is_some()).map(|(n, _)| *n))
            .collect();
        let mut detail = format!("{} = {}", used.join(" = "), self.closed);
        if self.shelling.is_none() {
            detail += "; shelling skipped";
        }
        Check::new("h_vector_agreement", true, detail)
    }
}

pub fn routes(shape: &JetShape, limits: &Limits, with_shelling: bool) -> Result<Routes> {
    Ok(Routes {
        closed: hilbert::h_closed(shape),
        shelling: if with_shelling {
            Some(hilbert::h_shelling(shape, limits)?)
        } else {
            None
        },
        paths: hilbert::h_paths(shape)?,
        lemmas: hilbert::h_lemma_sums(shape)?,
    })
}

pub fn verify(shape: &JetShape, level: Level, limits: &Limits, seed: u64) -> Result<JetReport> {
    let facets = shape.facet_count();
    if level == Level::Deep {
        check_guard(Guard::Facets, &facets, limits.max_facets)?;
        let faces = &facets << shape.dimension();
        check_guard(Guard::Faces, &faces, limits.max_faces)?;
    }
    let with_shelling = level == Level::Deep || facets <= BigInt::from(FAST_SHELLING_FACETS.min(limits.max_facets));
    let routes = routes(shape, limits, with_shelling)?;
    let mut out = report(shape)?;
    out.methods = Some(routes.methods());
    let mut checks = vec![routes.agreement()];
    checks.extend(fast_checks(shape, &routes.closed)?);
    if level == Level::Deep {
        checks.extend(deep_checks(shape, &routes.closed, limits, seed)?);
    }
    out.checks = checks;
    Ok(out)
}

fn fast_checks(shape: &JetShape, h: &HVector) -> Result<Vec<Check>> {
    let (m, n) = (shape.m(), shape.n());
    let mut checks = Vec::new();

    let sum = hilbert::jet_multiplicity_sum(shape)?;
    let closed = hilbert::jet_multiplicity(shape);
    let at_one = h.sum();
    checks.push(Check::new(
        "multiplicity",
        sum == closed && closed == at_one,
        format!("double sum {sum}, binomial square {closed}, h(1) {at_one}"),
    ));

    let series = hilbert::jet_hilbert_series(shape);
    let a = series.a_invariant().unwrap_or(i64::MIN);
    checks.push(Check::new(
        "a_invariant",
        a == -2 * n,
        format!("deg h - dim = {a}, -2n = {}", -2 * n),
    ));

    let palindromic = h.is_palindromic();
    checks.push(Check::new(
        "gorenstein",
        palindromic == (m == n),
        format!("palindromic h: {palindromic}, m = n: {}", m == n),
    ));

    let w = hilbert::canonical_module_series(shape);
    let reversed = series.numerator().reverse(shape.dimension() as usize)?;
    let lowest = w.numerator().lowest_degree();
    checks.push(Check::new(
        "canonical_reversal",
        *w.numerator() == reversed && lowest == Some(2 * n as usize),
        format!(
            "reversal holds: {}, lowest degree {}, 2n = {}",
            *w.numerator() == reversed,
            lowest.map_or("none".to_string(), |d| d.to_string()),
            2 * n
        ),
    ));

    let classical = hilbert::classical_series(2, m, n)?;
    let squared = classical.square();
    let ok = *series.numerator() == *squared.numerator() && series.pole_order() == squared.pole_order();
    checks.push(Check::new(
        "squared_series",
        ok,
        format!("pole orders {} and 2 x {}", series.pole_order(), classical.pole_order()),
    ));
    Ok(checks)
}

fn deep_checks(shape: &JetShape, h: &HVector, limits: &Limits, seed: u64) -> Result<Vec<Check>> {
    let (m, n) = (shape.m(), shape.n());
    let mut checks = Vec::new();
    let order = shelling_order(shape, limits.max_facets)?;
    let alternate = shelling_order_with(shape, TieBreak::Reversed, limits.max_facets)?;

    let f = oracle::f_vector(&order, limits.max_faces)?;
    let from_f = oracle::h_from_f(&f, shape.dimension() as usize)?;
    checks.push(Check::new(
        "f_vector_oracle",
        from_f == *h,
        format!("h from f-vector {from_f}"),
    ));

    checks.push(Check::new(
        "shelling_valid_canonical",
        oracle::verify_shelling(&order),
        format!("{} facets", order.len()),
    ));
    checks.push(Check::new(
        "shelling_valid_alternate",
        oracle::verify_shelling(&alternate),
        format!("{} facets", alternate.len()),
    ));

    let corners = corner_sets(&order);
    let mismatch = (0..order.len()).find(|&t| corners_fast(&order[t]) != corners_bruteforce(t, &order));
    checks.push(match mismatch {
        None => Check::new("corners_fast_vs_bruteforce", true, format!("{} facets", order.len())),
        Some(t) => Check::new(
            "corners_fast_vs_bruteforce",
            false,
            format!("facet {} at position {t}", order[t]),
        ),
    });

    let by_facet: HashMap<_, _> = order.iter().zip(&corners).collect();
    let differ = alternate
        .iter()
        .zip(corner_sets(&alternate))
        .find(|(f, c)| by_facet[f] != c);
    checks.push(match differ {
        None => Check::new("corner_intrinsic", true, "same corners under both extensions"),
        Some((f, _)) => Check::new("corner_intrinsic", false, format!("facet {f}")),
    });

    let table = corner_table_from(shape, &order, &corners);
    let top = shape.dimension() as i64;
    let mut bad = None;
    'scan: for i in 1..=m {
        for j in 1..=n {
            if (i, j) == (m, n) {
                continue;
            }
            for k in 0..=top {
                let closed = hilbert::corner_count_closed(shape, i, j, k)?;
                if closed != table.get(i, j, k) {
                    bad = Some(format!(
                        "C_{{{i},{j}}}^{k}: table {} vs closed {closed}",
                        table.get(i, j, k)
                    ));
                    break 'scan;
                }
            }
        }
    }
    checks.push(match bad {
        None => Check::new("corner_table_vs_lemmas", true, "every C_{i,j}^k matches"),
        Some(d) => Check::new("corner_table_vs_lemmas", false, d),
    });

    let mut bad = None;
    for k in 1..=top {
        let l47 = table.get(m, n - 1, k);
        let l48: BigInt = (1..m)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| table.get(i, j, k - 1))
            .sum();
        let l49: BigInt = (1..n - 1).map(|j| table.get(m, j, k - 1)).sum();
        let got = [
            hilbert::lemma47_value(shape, k),
            hilbert::lemma48_value(shape, k),
            hilbert::lemma49_value(shape, k),
            hilbert::cor410_value(shape, k),
        ];
        let want = [l47.clone(), l48, l49.clone(), l47 + l49];
        if got != want {
            bad = Some(format!("k = {k}: formulas {got:?} vs table {want:?}"));
            break;
        }
    }
    checks.push(match bad {
        None => Check::new("lemma_values", true, format!("k = 1..{top}")),
        Some(d) => Check::new("lemma_values", false, d),
    });

    checks.push(gessel_viennot_sample(seed, GV_SAMPLES, limits)?);
    Ok(checks)
}

/// Random `d`-tuples of start and end points in a `6 × 6` grid, ordered so
/// that both determinant formulas apply: start rows nondecreasing, end rows
/// increasing, start columns decreasing, end columns nonincreasing. Draws
/// whose product of single-path counts exceeds `max_product` are redrawn.
pub fn sample_configurations(seed: u64, count: usize, max_product: u64) -> Vec<(Vec<GridPoint>, Vec<GridPoint>)> {
    const GRID: i64 = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let distinct = |rng: &mut ChaCha8Rng, d: usize| {
        let mut v: Vec<i64> = rand::seq::index::sample(rng, GRID as usize, d)
            .into_iter()
            .map(|x| x as i64 + 1)
            .collect();
        v.sort_unstable();
        v
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (starts, ends) = {
            let d = rng.gen_range(1..=3usize);
            let mut start_rows: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=GRID)).collect();
            start_rows.sort_unstable();
            let mut start_cols = distinct(&mut rng, d);
            start_cols.reverse();
            let end_rows = distinct(&mut rng, d);
            let mut end_cols: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=GRID)).collect();
            end_cols.sort_unstable_by(|a, b| b.cmp(a));
            let starts: Vec<GridPoint> = start_rows
                .into_iter()
                .zip(start_cols)
                .map(|(r, c)| GridPoint::new(r, c))
                .collect();
            let ends: Vec<GridPoint> = end_rows
                .into_iter()
                .zip(end_cols)
                .map(|(r, c)| GridPoint::new(r, c))
                .collect();
            (starts, ends)
        };
        let product: BigInt = starts.iter().zip(&ends).map(|(&a, &e)| count_paths(a, e)).product();
        if product <= BigInt::from(max_product) {
            out.push((starts, ends));
        }
    }
    out
}

fn gessel_viennot_sample(seed: u64, count: usize, limits: &Limits) -> Result<Check> {
    for (starts, ends) in sample_configurations(seed, count, GV_MAX_PRODUCT.min(limits.max_paths)) {
        let total = count_nonintersecting(&starts, &ends)?;
        let brute = oracle::brute_nonintersecting(&starts, &ends, None, limits.max_paths)?;
        if total != brute {
            return Ok(Check::new(
                "gessel_viennot_sample",
                false,
                format!("{starts:?} -> {ends:?}: {total} vs {brute}"),
            ));
        }
        // A path in a 6 x 6 grid has at most 5 turns.
        let max_turns = 5 * starts.len() as i64;
        for k in 0..=max_turns {
            let det = count_nonintersecting_with_turns(&starts, &ends, k)?;
            let brute = oracle::brute_nonintersecting(&starts, &ends, Some(k as usize), limits.max_paths)?;
            if det != brute {
                return Ok(Check::new(
                    "gessel_viennot_sample",
                    false,
                    format!("{starts:?} -> {ends:?}, k = {k}: {det} vs {brute}"),
                ));
            }
        }
    }
    Ok(Check::new(
        "gessel_viennot_sample",
        true,
        format!("{count} configurations, seed {seed}"),
    ))
}
