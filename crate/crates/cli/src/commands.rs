use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use multideg::hilbert::{
    coarsened_multiplicity, graded_piece_dim, hilbert_polynomial, k_polynomial_with,
    mixed_mult_series,
};
use multideg::mgops::{irrelevant_saturation, multidegree, slice_degree, supp_dimension};
use multideg::ratmap::{
    check_g_condition, degrees_from_rees, formula_gorenstein_ht3, formula_perfect_ht2, height,
    projective_degrees_by_slicing, rees_ideal, satfiber_d0_check, satfiber_dims, DegreeData,
    GConditionReport,
};
use multideg::{
    Ideal, MatrixKind, MixedMultTable, Multidegree, PivotRule, Polynomial, PresentationMatrix,
    ProjectiveDegreeVector, RationalMapSpec, RingSpec, SliceReport,
};

use crate::args::{FormulaArgs, Method, Pivot};
use crate::report::{self, int, small, uint, Check};
use crate::Failure;

pub type Outcome = Result<(Value, Vec<Check>), Failure>;

fn ring_json(ideal: &Ideal) -> Value {
    let ring = ideal.ring();
    json!({
        "characteristic": ring.characteristic(),
        "blocks": ring.blocks().iter().map(|b| json!({"name": b.name, "vars": b.vars})).collect::<Vec<_>>(),
    })
}

pub fn hilbert(ideal: &Ideal, pivot: Pivot) -> Outcome {
    let rule = match pivot {
        Pivot::MostFrequent => PivotRule::MostFrequent,
        Pivot::FirstVariable => PivotRule::FirstVariable,
    };
    let rep = k_polynomial_with(ideal, rule)?;
    let series = rep.mixed_mult_table()?;
    let hp = rep.hilbert_polynomial();
    let coarse = coarsened_multiplicity(ideal)?;

    let numerator_terms: Vec<Value> = rep
        .numerator
        .terms()
        .map(|(e, c)| json!([c.to_string(), e]))
        .collect();
    let hp_terms: Vec<Value> = hp
        .coefficients()
        .iter()
        .map(|(e, c)| json!({"exponents": e, "coefficient": c.to_string()}))
        .collect();
    let threshold = hp.validity_threshold().as_slice().to_vec();

    let mut mismatches = Vec::new();
    let r = ideal.ring().r();
    for corner in 0..1u32 << r {
        let nu: Vec<i64> = (0..r)
            .map(|i| threshold[i].max(0) + i64::from((corner >> i) & 1))
            .collect();
        let dim = graded_piece_dim(ideal, &Multidegree(nu.clone()))?;
        let value = hp.evaluate(&nu);
        if !value.is_integer() || value.to_integer() != BigInt::from(dim) {
            mismatches.push(json!({"degree": nu, "polynomial": value.to_string(), "length": dim}));
        }
    }

    let result = json!({
        "ring": ring_json(ideal),
        "ideal": ideal.render(),
        "shift": ideal.shift_or_zero().as_slice(),
        "numerator": rep.numerator.to_string(),
        "numerator_terms": numerator_terms,
        "denominator_exponents": rep.denominator_exponents,
        "dimension": rep.dimension,
        "series_table": report::table(&series),
        "hilbert_polynomial": {
            "rendered": hp.render(),
            "coefficients": hp_terms,
            "validity_threshold": threshold,
        },
        "coarsened_multiplicity": uint(&coarse),
    });
    let checks = vec![
        Check::new(
            "coarsened_multiplicity_equals_series_sum",
            coarse == series.sum(),
            json!({"coarsened": uint(&coarse), "series_sum": uint(&series.sum())}),
        ),
        Check::new(
            "hilbert_polynomial_computes_lengths",
            mismatches.is_empty(),
            json!({"points": 1u32 << r, "mismatches": mismatches}),
        ),
    ];
    Ok((result, checks))
}

/// Series table, polynomial table and the check that they agree after
/// saturating by the irrelevant ideal.
fn both_routes(ideal: &Ideal) -> Result<(MixedMultTable, MixedMultTable, Vec<Check>), Failure> {
    let series = mixed_mult_series(ideal)?;
    let sat_series = mixed_mult_series(&irrelevant_saturation(ideal)?)?;
    let poly = hilbert_polynomial(ideal)?.leading_table()?;
    let negative: Vec<&Vec<i64>> = sat_series
        .entries()
        .keys()
        .filter(|k| k.iter().any(|&x| x < 0))
        .collect();
    let checks = vec![
        Check::new(
            "saturation_has_no_negative_types",
            negative.is_empty(),
            json!({"negative_types": negative}),
        ),
        Check::new(
            "saturated_series_equals_polynomial_table",
            sat_series.nonnegative_part() == *poly.entries(),
            json!({"saturated_series": report::table(&sat_series)}),
        ),
    ];
    Ok((series, poly, checks))
}

pub fn mixed_mult(ideal: &Ideal) -> Outcome {
    let (series, poly, checks) = both_routes(ideal)?;
    let coarse = coarsened_multiplicity(ideal)?;
    let result = json!({
        "ring": ring_json(ideal),
        "ideal": ideal.render(),
        "series_table": report::table(&series),
        "polynomial_table": report::table(&poly),
        "coarsened_multiplicity": uint(&coarse),
    });
    Ok((result, checks))
}

pub fn multidegree_cmd(ideal: &Ideal, type_vector: Option<&[i64]>) -> Outcome {
    let (_, poly, checks) = both_routes(ideal)?;
    let supp = supp_dimension(ideal)?;
    let result = match type_vector {
        Some(n) => {
            let deg = multidegree(ideal, n)?;
            json!({"ideal": ideal.render(), "supp_dimension": supp, "type": n, "degree": uint(&deg)})
        }
        None => {
            json!({"ideal": ideal.render(), "supp_dimension": supp, "degrees": report::table(&poly)})
        }
    };
    Ok((result, checks))
}

fn slice_json(r: &SliceReport) -> Value {
    let trials: Vec<Value> = r
        .trials
        .iter()
        .map(|t| {
            json!({
                "seed": small(t.seed),
                "resamples": t.resamples,
                "hyperplanes": t.hyperplanes,
                "count": t.count,
                "failed_block": t.failed_block,
            })
        })
        .collect();
    json!({
        "type": r.type_vector,
        "seed": small(r.seed),
        "point_count": r.point_count,
        "verified": r.verified(),
        "trials": trials,
    })
}

/// At least 90% of the trials must agree.
fn required_agreement(trials: usize) -> usize {
    (9 * trials).div_ceil(10)
}

fn delta_powers_check(map: &RationalMapSpec, v: &ProjectiveDegreeVector) -> Result<Check, Failure> {
    let base =
        Ideal::new(map.source(), map.generators().to_vec()).with_pair_budget(map.pair_budget());
    let d = map.d();
    let c = height(&base)?.unwrap_or(d + 1);
    let delta = BigUint::from(map.delta());
    let from = (d + 1).saturating_sub(c);
    let mismatched: Vec<usize> = (from..=d)
        .filter(|&i| v.degrees[i] != delta.pow((d - i) as u32))
        .collect();
    Ok(Check::new(
        "trailing_degrees_are_delta_powers",
        mismatched.is_empty(),
        json!({"height": c, "indices": (from..=d).collect::<Vec<_>>(), "mismatched": mismatched}),
    ))
}

fn g_json(rep: &GConditionReport) -> Value {
    let fitting: Vec<Value> = rep
        .fitting
        .iter()
        .map(|f| {
            json!({"i": f.i, "minor_size": f.minor_size, "height": f.height, "passed": f.passed})
        })
        .collect();
    json!({"s": rep.s, "holds": rep.holds, "fitting": fitting})
}

fn formula_for(
    map: &RationalMapSpec,
    m: &PresentationMatrix,
) -> Result<ProjectiveDegreeVector, Failure> {
    match (m.kind(), m.degree_data()) {
        (MatrixKind::HilbertBurch, DegreeData::ColumnDegrees(mu)) => {
            Ok(formula_perfect_ht2(map.d(), mu))
        }
        (MatrixKind::Alternating, DegreeData::EntryDegree(e)) => {
            Ok(formula_gorenstein_ht3(map.d(), map.n(), *e, map.delta())?)
        }
        _ => unreachable!("degree data always matches the matrix kind"),
    }
}

pub fn projdeg(
    map: &RationalMapSpec,
    matrix: Option<&PresentationMatrix>,
    method: Method,
    seed: u64,
    trials: usize,
) -> Outcome {
    let want_elim = matches!(method, Method::Elimination | Method::Both);
    let want_slice = matches!(method, Method::Slicing | Method::Both);
    let want_formula = method == Method::Formula || (method == Method::Both && matrix.is_some());
    if method == Method::Formula && matrix.is_none() {
        return Err(Failure::Usage(
            "--method formula needs a \"matrix\" in the input".into(),
        ));
    }

    let mut result = serde_json::Map::new();
    result.insert("d".into(), json!(map.d()));
    result.insert("n".into(), json!(map.n()));
    result.insert("delta".into(), small(map.delta()));
    let mut checks = Vec::new();

    let elimination = if want_elim {
        let rees = rees_ideal(map)?;
        let v = degrees_from_rees(&rees, map.d())?;
        result.insert("rees_ideal".into(), json!(rees.render()));
        result.insert("elimination".into(), report::degrees(&v));
        Some(v)
    } else {
        None
    };

    let slicing = if want_slice {
        let (v, reports) = projective_degrees_by_slicing(map, seed, trials)?;
        result.insert("slicing".into(), report::degrees(&v));
        result.insert(
            "slicing_reports".into(),
            reports.iter().map(slice_json).collect(),
        );
        if let Some(e) = &elimination {
            let need = required_agreement(trials);
            let per_type: Vec<Value> = reports
                .iter()
                .zip(&e.degrees)
                .map(|(r, want)| {
                    let want = u64::try_from(want).unwrap_or(u64::MAX);
                    json!({"type": r.type_vector, "expected": want, "agreeing": r.agreeing(want)})
                })
                .collect();
            let passed = reports
                .iter()
                .zip(&e.degrees)
                .all(|(r, want)| u64::try_from(want).is_ok_and(|w| r.passes(w, need)));
            checks.push(Check::new(
                "slicing_agrees_with_elimination",
                passed,
                json!({"required": need, "trials": trials, "per_type": per_type}),
            ));
        }
        Some(v)
    } else {
        None
    };

    let mut formula = None;
    if want_formula {
        let m = matrix.expect("formula requested with a matrix");
        let g = check_g_condition(map.source(), map.generators(), m, map.d() + 1)?;
        if g.holds {
            let v = formula_for(map, m)?;
            result.insert("formula".into(), report::degrees(&v));
            if let Some(e) = &elimination {
                checks.push(Check::new(
                    "formula_agrees_with_elimination",
                    v.same_degrees(e),
                    json!({"formula": report::degrees(&v), "elimination": report::degrees(e)}),
                ));
            }
            formula = Some(v);
        } else {
            result.insert("formula".into(), Value::Null);
        }
        if method == Method::Formula {
            checks.push(Check::new("g_condition", g.holds, g_json(&g)));
        }
        result.insert("g_condition".into(), g_json(&g));
    }

    let primary = elimination
        .as_ref()
        .or(slicing.as_ref())
        .or(formula.as_ref());
    if let Some(v) = primary {
        result.insert("degrees".into(), report::degrees(v));
        checks.push(delta_powers_check(map, v)?);
    } else {
        result.insert("degrees".into(), Value::Null);
    }
    Ok((Value::Object(result), checks))
}

pub fn formula(args: &FormulaArgs) -> Outcome {
    if args.ht2 {
        let mu = args.mu.as_deref().unwrap_or_default();
        if mu.contains(&0) {
            return Err(Failure::Usage("column degrees must be positive".into()));
        }
        let v = formula_perfect_ht2(args.d, mu);
        return Ok((
            json!({"kind": "perfect-height-2", "d": args.d, "mu": mu, "degrees": report::degrees(&v)}),
            Vec::new(),
        ));
    }
    let n = args.n.expect("clap requires --n with --ht3");
    let delta = match args.delta {
        Some(x) => x,
        None if n.is_multiple_of(2) => args.entry_degree * n as u64 / 2,
        None => {
            return Err(Failure::Usage(
                "--n must be even for a Gorenstein height-3 ideal".into(),
            ))
        }
    };
    let v = formula_gorenstein_ht3(args.d, n, args.entry_degree, delta)?;
    Ok((
        json!({
            "kind": "gorenstein-height-3",
            "d": args.d,
            "n": n,
            "entry_degree": args.entry_degree,
            "delta": delta,
            "degrees": report::degrees(&v),
        }),
        Vec::new(),
    ))
}

pub fn satfiber(map: &RationalMapSpec, q_max: usize) -> Outcome {
    let d = map.d();
    if q_max < d + 2 {
        let t = satfiber_dims(map, q_max)?;
        let result = json!({
            "d": d,
            "q_max": q_max,
            "dims": t.dims,
            "difference_profile": t.difference_profile,
            "d0_check": Value::Null,
        });
        return Ok((result, Vec::new()));
    }
    let c = satfiber_d0_check(map, q_max)?;
    let result = json!({
        "d": d,
        "q_max": q_max,
        "dims": c.table.dims,
        "difference_profile": c.table.difference_profile,
        "d0_check": {
            "stabilized": c.stabilized,
            "window": c.window,
            "inferred_e": c.inferred_e.as_ref().map(int),
            "d0_elimination": uint(&c.d0_elimination),
            "agree": c.agree,
        },
    });
    let checks = vec![Check::new(
        "fiber_multiplicity_equals_d0_when_stable",
        !c.stabilized || c.agree,
        json!({"stabilized": c.stabilized, "agree": c.agree}),
    )];
    Ok((result, checks))
}

/// `s` defaults to `d + 1` for forms on `P^d`.
pub fn check_g(
    ring: &RingSpec,
    forms: &[Polynomial],
    matrix: Option<&PresentationMatrix>,
    s: Option<usize>,
    assert: bool,
) -> Outcome {
    let Some(m) = matrix else {
        return Err(Failure::Usage(
            "check-g needs a \"matrix\" in the input".into(),
        ));
    };
    let s = s.unwrap_or(ring.nvars());
    let g = check_g_condition(ring, forms, m, s)?;
    let mut checks = Vec::new();
    if assert {
        checks.push(Check::new("g_condition", g.holds, g_json(&g)));
    }
    Ok((g_json(&g), checks))
}

pub fn slice(ideal: &Ideal, n: &[i64], seed: u64, trials: usize) -> Outcome {
    let report = slice_degree(ideal, n, seed, trials)?;
    let expected = multidegree(ideal, n)?;
    let need = required_agreement(trials);
    let agreeing = u64::try_from(&expected).map_or(0, |w| report.agreeing(w));
    let result = json!({
        "ideal": ideal.render(),
        "multidegree": uint(&expected),
        "slicing": slice_json(&report),
    });
    let checks = vec![Check::new(
        "slicing_agrees_with_multidegree",
        agreeing >= need,
        json!({"required": need, "agreeing": agreeing, "trials": trials}),
    )];
    Ok((result, checks))
}
