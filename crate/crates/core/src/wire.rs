//! JSON forms shared by the library and the command line.
//!
//! A field element is written as its `h` coefficients, constant term first.
//! On input a bare integer is also accepted and read as an element of the
//! prime subfield. Points may be given unnormalized; they are normalized on
//! load.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::curvefinder::{max_arc_on_curve, Bounds, CurveCertificate};
use crate::gf::{Fe, Field, FieldError};
use crate::plane::{validate_arc, Arc, ArcViolation, PlaneError, ProjPoint};
use crate::poly::{BiForm, Exp, HomPoly, TTForm};
use crate::search::ClassificationResult;

#[derive(Debug, Error)]
pub enum WireError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error("not an arc: {0}")]
    NotAnArc(ArcViolation),
    #[error("{0}")]
    Shape(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FeIn {
    Int(i64),
    Coeffs(Vec<i64>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArcDoc {
    pub p: u32,
    #[serde(default = "one")]
    pub h: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub points: Vec<[FeIn; 3]>,
}

fn one() -> u32 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub e: Exp,
    pub c: FeIn,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyDoc {
    pub degree: u32,
    pub terms: Vec<TermDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BiTermDoc {
    pub ex: Exp,
    pub ey: Exp,
    pub c: FeIn,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TTFormDoc {
    pub t: u32,
    pub terms: Vec<BiTermDoc>,
}

pub fn fe_to_wire(field: &Field, a: Fe) -> FeIn {
    FeIn::Coeffs(field.coeffs(a).into_iter().map(i64::from).collect())
}

pub fn fe_from_wire(field: &Field, a: &FeIn) -> Result<Fe, WireError> {
    Ok(match a {
        FeIn::Int(n) => field.from_int(*n),
        FeIn::Coeffs(c) => field.from_coeffs(c)?,
    })
}

pub fn point_to_wire(field: &Field, x: &ProjPoint) -> [FeIn; 3] {
    x.coords().map(|c| fe_to_wire(field, c))
}

pub fn point_from_wire(field: &Field, raw: &[FeIn; 3]) -> Result<ProjPoint, WireError> {
    let c = [
        fe_from_wire(field, &raw[0])?,
        fe_from_wire(field, &raw[1])?,
        fe_from_wire(field, &raw[2])?,
    ];
    Ok(ProjPoint::new(field, c)?)
}

pub fn field_of(doc: &ArcDoc) -> Result<Field, WireError> {
    Ok(Field::new(doc.p, doc.h, doc.modulus.as_deref())?)
}

pub fn points_doc(field: &Field, pts: &[ProjPoint]) -> ArcDoc {
    ArcDoc {
        p: field.p(),
        h: field.h(),
        modulus: Some(field.modulus().to_vec()),
        points: pts.iter().map(|x| point_to_wire(field, x)).collect(),
    }
}

pub fn arc_to_doc(arc: &Arc) -> ArcDoc {
    points_doc(arc.field(), arc.points())
}

/// Field and normalized points, without checking the arc property.
pub fn point_set_from_doc(doc: &ArcDoc) -> Result<(Field, Vec<ProjPoint>), WireError> {
    let field = field_of(doc)?;
    let pts = doc
        .points
        .iter()
        .map(|raw| point_from_wire(&field, raw))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((field, pts))
}

pub fn arc_from_doc(doc: &ArcDoc) -> Result<Arc, WireError> {
    let (field, pts) = point_set_from_doc(doc)?;
    validate_arc(&field, &pts).map_err(WireError::NotAnArc)
}

/// The arc document inside `v`: either `v` itself or its `"arc"` member.
pub fn arc_doc_in(v: &Value) -> Result<ArcDoc, WireError> {
    let inner = match v.get("arc") {
        Some(a) => a,
        None => v,
    };
    if inner.get("points").is_none() {
        return Err(WireError::Shape("expected an arc object with a \"points\" member".into()));
    }
    Ok(ArcDoc::deserialize(inner)?)
}

pub fn parse_arc(text: &str) -> Result<Arc, WireError> {
    let v: Value = serde_json::from_str(text)?;
    arc_from_doc(&arc_doc_in(&v)?)
}

pub fn poly_to_doc(f: &HomPoly) -> PolyDoc {
    let field = f.field();
    PolyDoc {
        degree: f.degree(),
        terms: f
            .terms()
            .into_iter()
            .map(|(e, c)| TermDoc {
                e,
                c: fe_to_wire(field, c),
            })
            .collect(),
        variables: None,
    }
}

/// φ in dual coordinates.
pub fn dual_poly_to_doc(f: &HomPoly) -> PolyDoc {
    PolyDoc {
        variables: Some("dual".into()),
        ..poly_to_doc(f)
    }
}

pub fn poly_from_doc(field: &Field, doc: &PolyDoc) -> Result<HomPoly, WireError> {
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        if t.e.iter().sum::<u32>() != doc.degree {
            return Err(WireError::Shape(format!("exponent {:?} does not have degree {}", t.e, doc.degree)));
        }
        terms.push((t.e, fe_from_wire(field, &t.c)?));
    }
    Ok(HomPoly::from_terms(field, doc.degree, &terms))
}

pub fn ttform_to_doc(f: &TTForm) -> TTFormDoc {
    let field = f.field();
    TTFormDoc {
        t: f.dx(),
        terms: f
            .terms()
            .into_iter()
            .map(|(ex, ey, c)| BiTermDoc {
                ex,
                ey,
                c: fe_to_wire(field, c),
            })
            .collect(),
    }
}

pub fn ttform_from_doc(field: &Field, doc: &TTFormDoc) -> Result<TTForm, WireError> {
    let mut terms = Vec::with_capacity(doc.terms.len());
    for b in &doc.terms {
        if b.ex.iter().sum::<u32>() != doc.t || b.ey.iter().sum::<u32>() != doc.t {
            return Err(WireError::Shape(format!("term {:?} {:?} is not of bidegree ({t}, {t})", b.ex, b.ey, t = doc.t)));
        }
        terms.push((b.ex, b.ey, fe_from_wire(field, &b.c)?));
    }
    Ok(BiForm::from_terms(field, doc.t, doc.t, &terms))
}

pub fn bounds_to_json(b: &Bounds) -> Value {
    let mut v = json!({
        "q": b.q,
        "p": b.p,
        "t": b.t,
        "eps": b.eps,
        "pe": b.pe,
        "d": b.d,
        "cond_ok": b.cond_ok,
    });
    if let Some((dp, val)) = b.bounded_deg {
        v["bounded_deg"] = json!({
            "d_prime": dp,
            "value": format!("{}/{}", val.numer(), val.denom()),
            "max_arc_size": max_arc_on_curve(b.q, b.p, dp),
        });
    }
    v
}

pub fn certificate_to_json(cert: &CurveCertificate) -> Value {
    json!({
        "arc": arc_to_doc(&cert.arc),
        "curves": [poly_to_doc(&cert.curves[0]), poly_to_doc(&cert.curves[1])],
        "d": cert.d(),
        "gcd_degree": 0,
        "checked": true,
    })
}

/// Summary line followed by one arc document per representative.
pub fn classification_lines(res: &ClassificationResult) -> Vec<Value> {
    let mut out = vec![json!({
        "q": res.q,
        "size": res.size,
        "complete_only": res.complete_only,
        "count": res.count(),
    })];
    out.extend(
        res.representatives
            .iter()
            .map(|a| serde_json::to_value(arc_to_doc(a)).expect("arc documents serialize")),
    );
    out
}
