//! Text and JSON rendering of symmetric functions and e-expansions.
//!
//! JSON schema (stable):
//! `{"basis": "e", "terms": [{"index": [4,2], "coeff": [[c, dq, dt], ...]}]}`
//! with coefficient triples `(integer, q-degree, t-degree)` sorted by
//! descending degrees and terms sorted by index. Laurent coefficients
//! (denominator a pure q/t monomial) use negative degrees.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

use lltlab_core::epositivity::EExpansion;
use lltlab_core::ring::{BivarPoly, BivarRat};
use lltlab_core::symfunc::{Basis, Partition, SymF};

/// Coefficient triples of a rational function whose denominator is a pure
/// monomial; fails otherwise.
fn coeff_triples(c: &BivarRat) -> Result<Vec<Value>> {
    let den = c.den();
    if den.num_terms() != 1 {
        bail!("coefficient {c} is not a (Laurent) polynomial");
    }
    let ((den_q, den_t), den_c) = den.leading().expect("nonzero denominator");
    if den_c != &BigInt::from(1) {
        bail!("coefficient {c} has a non-monic monomial denominator");
    }
    let mut triples: Vec<(i64, i64, BigInt)> = c
        .num()
        .terms()
        .map(|(&(dq, dt), v)| {
            (
                dq as i64 - den_q as i64,
                dt as i64 - den_t as i64,
                v.clone(),
            )
        })
        .collect();
    triples.sort_by_key(|t| (std::cmp::Reverse(t.0), std::cmp::Reverse(t.1)));
    triples
        .into_iter()
        .map(|(dq, dt, v)| {
            let c = i64::try_from(&v)
                .map(Value::from)
                .unwrap_or_else(|_| Value::from(v.to_string()));
            Ok(json!([c, dq, dt]))
        })
        .collect()
}

pub fn symf_to_json(f: &SymF) -> Result<Value> {
    let mut terms = Vec::new();
    for (lam, c) in f.terms() {
        terms.push(json!({
            "index": lam.parts(),
            "coeff": coeff_triples(c)?,
        }));
    }
    Ok(json!({ "basis": f.basis().letter().to_string(), "terms": terms }))
}

pub fn eexpansion_to_json(e: &EExpansion) -> Result<Value> {
    symf_to_json(&e.to_symf())
}

fn parse_coeff(v: &Value) -> Result<BivarRat> {
    let arr = v.as_array().context("coeff entry must be an array")?;
    let mut num = BivarPoly::zero();
    let mut min_q = 0i64;
    let mut min_t = 0i64;
    let triples: Vec<(BigInt, i64, i64)> = arr
        .iter()
        .map(|t| {
            let t = t.as_array().context("coefficient triple")?;
            if t.len() != 3 {
                bail!("coefficient triple must have three entries");
            }
            let c = match &t[0] {
                Value::Number(n) => BigInt::from(
                    n.as_i64().context("integer coefficient")?,
                ),
                Value::String(s) => s.parse::<BigInt>().context("bigint coefficient")?,
                _ => bail!("coefficient must be integer or string"),
            };
            let dq = t[1].as_i64().context("q-degree")?;
            let dt = t[2].as_i64().context("t-degree")?;
            Ok((c, dq, dt))
        })
        .collect::<Result<_>>()?;
    for &(_, dq, dt) in &triples {
        min_q = min_q.min(dq);
        min_t = min_t.min(dt);
    }
    for (c, dq, dt) in triples {
        num += &BivarPoly::monomial(c, (dq - min_q) as u32, (dt - min_t) as u32);
    }
    let den = BivarPoly::monomial(1, (-min_q) as u32, (-min_t) as u32);
    Ok(BivarRat::new(num, den).expect("monomial denominator"))
}

pub fn symf_from_json(v: &Value) -> Result<SymF> {
    let basis = v
        .get("basis")
        .and_then(Value::as_str)
        .context("missing basis")?;
    let basis = Basis::parse(basis).map_err(|e| anyhow!("{e}"))?;
    let mut f = SymF::zero(basis);
    for term in v
        .get("terms")
        .and_then(Value::as_array)
        .context("missing terms")?
    {
        let idx: Vec<u32> = term
            .get("index")
            .and_then(Value::as_array)
            .context("missing index")?
            .iter()
            .map(|x| x.as_u64().context("index entry").map(|v| v as u32))
            .collect::<Result<_>>()?;
        let lam = Partition::new(idx).map_err(|e| anyhow!("{e}"))?;
        let coeff = parse_coeff(term.get("coeff").context("missing coeff")?)?;
        f.add_term(lam, coeff);
    }
    Ok(f)
}
