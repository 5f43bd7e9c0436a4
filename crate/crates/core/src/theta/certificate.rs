use std::cmp::Ordering;

use serde_json::{json, Map, Value};

use super::{sign_of, CayleyGraphSpec, ThetaCertificate};
use crate::characters::{is_positive_type_class, CharacterTable};
use crate::scalar::Scalar;

/// Tolerance per unit of group order for float certificates.
pub const CERTIFICATE_TOL: f64 = 1e-8;

/// Rechecks a certificate straight from the character table: `a >= 0`, the
/// normalization, the vanishing of `sum d a chi` on every class of `X`, and
/// the properties of `f` (value 1 at the identity, zero on `X`, total equal
/// to the objective, positive type, `f(g^{-1}) = conj f(g)`).
pub fn validate_certificate(
    spec: &CayleyGraphSpec,
    table: &CharacterTable,
    cert: &ThetaCertificate,
) -> Result<(), String> {
    let group = spec.group();
    let k = table.irrep_count();
    if cert.a.len() != k || cert.f.values().len() != group.class_count() {
        return Err("certificate has the wrong shape".into());
    }
    if !cert.f.group().same_as(group) {
        return Err("certificate belongs to a different group".into());
    }
    let tol = if cert.exact {
        0.0
    } else {
        CERTIFICATE_TOL * group.order() as f64
    };
    let close = |a: &Scalar, b: &Scalar| {
        if tol == 0.0 {
            a == b
        } else {
            a.approx_eq(b, tol)
        }
    };
    let degree = |i: usize| Scalar::int(table.degree(i) as i64);

    for (i, a) in cert.a.iter().enumerate() {
        if !a.is_real_tol(tol) || sign_of(&a.real_part(), tol) == Ordering::Less {
            return Err(format!("a[{}] = {} is negative", table.irrep_label(i), a.to_text()));
        }
    }
    let norm = (0..k).fold(Scalar::zero(), |acc, i| acc + degree(i) * degree(i) * cert.a[i].clone());
    if !close(&norm, &Scalar::int(group.order() as i64)) {
        return Err(format!("normalization gives {}", norm.to_text()));
    }
    if !close(&cert.objective, &cert.a[table.trivial_index()]) {
        return Err("objective differs from the trivial coefficient".into());
    }
    let classes = spec.connection().classes().unwrap_or(&[]);
    for &c in classes {
        let s = (0..k).fold(Scalar::zero(), |acc, i| acc + degree(i) * cert.a[i].clone() * table.entry(i, c));
        if !close(&s, &Scalar::zero()) {
            return Err(format!("constraint for class {} is {}", group.classes()[c].label, s.to_text()));
        }
    }

    let f = &cert.f;
    let identity = group.class_of(group.identity());
    if !close(f.value(identity), &Scalar::one()) {
        return Err(format!("f(e) = {}", f.value(identity).to_text()));
    }
    for &c in classes {
        if !close(f.value(c), &Scalar::zero()) {
            return Err(format!("f does not vanish on class {}", group.classes()[c].label));
        }
    }
    for (c, class) in group.classes().iter().enumerate() {
        if !close(f.value(class.inverse_class), &f.value(c).conj()) {
            return Err(format!("f is not Hermitian at class {}", class.label));
        }
    }
    if !close(&f.total(), &cert.objective) {
        return Err(format!("f sums to {}, objective is {}", f.total().to_text(), cert.objective.to_text()));
    }
    let verdict = is_positive_type_class(f, table).map_err(|e| e.to_string())?;
    if let Some((_, label, value)) = verdict.witness {
        return Err(format!("f is not of positive type at {label}: {}", value.to_text()));
    }
    Ok(())
}

fn scalar_json(value: &Scalar) -> Value {
    match value {
        Scalar::Exact(r) => Value::String(r.to_string()),
        Scalar::Approx(z) if z.im == 0.0 => json!(z.re),
        Scalar::Approx(z) => json!([z.re, z.im]),
    }
}

/// Theta, `a` keyed by irrep label, and `f` keyed by class label.
pub fn certificate_json(cert: &ThetaCertificate) -> Value {
    let a: Map<String, Value> = cert
        .irrep_labels
        .iter()
        .zip(&cert.a)
        .map(|(l, v)| (l.clone(), scalar_json(v)))
        .collect();
    let f: Map<String, Value> = cert
        .group()
        .classes()
        .iter()
        .zip(cert.f.values())
        .map(|(c, v)| (c.label.clone(), scalar_json(v)))
        .collect();
    json!({
        "theta": scalar_json(&cert.objective),
        "exact": cert.exact,
        "a": a,
        "f": f,
        "dual": cert.dual.iter().map(scalar_json).collect::<Vec<_>>(),
        "lp_rows": cert.lp_rows,
        "lp_cols": cert.lp_cols,
    })
}
