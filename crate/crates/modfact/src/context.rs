//! Ring descriptors and dispatch over the four concrete ring kinds.

use modfact_core::rings::{FpPoly, Gf, GroupRingZCn, Integers, PolyFp, SkewGf};
use modfact_core::{FactorRing, RingKind};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::format::ElementFormat;

/// The `ring` object of every document. `kind` is one of `integers`,
/// `poly_over_prime_field`, `skew_poly_over_gf`, `group_ring_zcn`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

/// Everything the CLI and the suites need from a ring.
pub trait Ring: FactorRing<El: Send + Sync> + ElementFormat + Send + Sync {}

impl<R: FactorRing<El: Send + Sync> + ElementFormat + Send + Sync> Ring for R {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRing {
    Integers(Integers),
    Poly(PolyFp),
    Skew(SkewGf),
    Group(GroupRingZCn),
}

/// Runs `$body` with `$r` bound to the concrete ring inside `$any`.
#[macro_export]
macro_rules! with_ring {
    ($any:expr, $r:ident => $body:expr) => {
        match $any {
            $crate::context::AnyRing::Integers($r) => $body,
            $crate::context::AnyRing::Poly($r) => $body,
            $crate::context::AnyRing::Skew($r) => $body,
            $crate::context::AnyRing::Group($r) => $body,
        }
    };
}

fn need<T: Copy>(v: Option<T>, kind: &str, name: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("ring kind {kind} requires parameter {name}"))
}

fn forbid<T>(v: &Option<T>, kind: &str, name: &str) -> Result<(), String> {
    match v {
        Some(_) => Err(format!("ring kind {kind} takes no parameter {name}")),
        None => Ok(()),
    }
}

impl AnyRing {
    /// Builds the ring from its descriptor and the `omega` element string.
    pub fn from_doc(doc: &RingDoc, omega: &str) -> Result<AnyRing, String> {
        let k = doc.kind.as_str();
        let err = |e: modfact_core::Error| e.to_string();
        match k {
            "integers" => {
                forbid(&doc.p, k, "p")?;
                forbid(&doc.e, k, "e")?;
                forbid(&doc.n, k, "n")?;
                forbid(&doc.modulus, k, "modulus")?;
                let probe = Integers::new(BigInt::from(1)).map_err(err)?;
                let w = probe.parse_el(omega).map_err(|e| format!("omega: {e}"))?;
                Ok(AnyRing::Integers(Integers::new(w).map_err(err)?))
            }
            "poly_over_prime_field" => {
                forbid(&doc.e, k, "e")?;
                forbid(&doc.n, k, "n")?;
                forbid(&doc.modulus, k, "modulus")?;
                let p = need(doc.p, k, "p")?;
                let probe = PolyFp::new(p, FpPoly(vec![1])).map_err(err)?;
                let w = probe.parse_el(omega).map_err(|e| format!("omega: {e}"))?;
                Ok(AnyRing::Poly(PolyFp::new(p, w).map_err(err)?))
            }
            "skew_poly_over_gf" => {
                forbid(&doc.n, k, "n")?;
                let p = need(doc.p, k, "p")?;
                let e = need(doc.e, k, "e")?;
                let field = match &doc.modulus {
                    Some(m) => Gf::with_modulus(p, m.clone()).map_err(err)?,
                    None => Gf::new(p, e).map_err(err)?,
                };
                if field.degree() != e {
                    return Err(format!("modulus has degree {}, expected e = {e}", field.degree()));
                }
                let ring = SkewGf::new(field).map_err(err)?;
                let w = ring.parse_el(omega).map_err(|e| format!("omega: {e}"))?;
                if w != ring.omega() {
                    return Err("omega must be x for skew polynomial rings".into());
                }
                Ok(AnyRing::Skew(ring))
            }
            "group_ring_zcn" => {
                forbid(&doc.e, k, "e")?;
                forbid(&doc.modulus, k, "modulus")?;
                let n = need(doc.n, k, "n")?;
                let p = need(doc.p, k, "p")?;
                let ring = GroupRingZCn::new(n, p).map_err(err)?;
                let w = ring.parse_el(omega).map_err(|e| format!("omega: {e}"))?;
                if w != ring.omega() {
                    return Err(format!("omega must be the integer p = {p}, written as a length-{n} list"));
                }
                Ok(AnyRing::Group(ring))
            }
            other => Err(format!("unknown ring kind {other:?}")),
        }
    }

    /// Canonical descriptor and `omega` string.
    pub fn to_doc(&self) -> (RingDoc, String) {
        let blank = |kind: &str| RingDoc { kind: kind.into(), p: None, e: None, n: None, modulus: None };
        match self {
            AnyRing::Integers(r) => (blank("integers"), r.format_el(&r.omega())),
            AnyRing::Poly(r) => (RingDoc { p: Some(r.p()), ..blank("poly_over_prime_field") }, r.format_el(&r.omega())),
            AnyRing::Skew(r) => {
                let f = r.field();
                let doc = RingDoc {
                    p: Some(f.p()),
                    e: Some(f.degree()),
                    modulus: Some(f.modulus().to_vec()),
                    ..blank("skew_poly_over_gf")
                };
                (doc, r.format_el(&r.omega()))
            }
            AnyRing::Group(r) => {
                (RingDoc { p: Some(r.prime()), n: Some(r.order()), ..blank("group_ring_zcn") }, r.format_el(&r.omega()))
            }
        }
    }

    pub fn kind(&self) -> RingKind {
        with_ring!(self, r => r.kind())
    }

    /// Short human-readable name, e.g. `Z, omega = 6`.
    pub fn describe(&self) -> String {
        let (_, w) = self.to_doc();
        match self {
            AnyRing::Integers(_) => format!("Z, omega = {w}"),
            AnyRing::Poly(r) => format!("F_{}[x], omega = {w}", r.p()),
            AnyRing::Skew(r) => format!("F_{}^{}[x; Frob], omega = {w}", r.field().p(), r.field().degree()),
            AnyRing::Group(r) => format!("Z C_{}, omega = {}", r.order(), r.prime()),
        }
    }

    /// Compact command-line form: `integers:6`, `poly:2:x^3`, `skew:2:2`, `group:3:2` (n, p).
    pub fn parse_spec(spec: &str) -> Result<AnyRing, String> {
        let parts: Vec<&str> = spec.splitn(3, ':').collect();
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| format!("bad number {s:?} in ring spec {spec:?}"));
        let blank = |kind: &str| RingDoc { kind: kind.into(), p: None, e: None, n: None, modulus: None };
        match parts.as_slice() {
            ["integers", w] => AnyRing::from_doc(&blank("integers"), w),
            ["poly", p, w] => AnyRing::from_doc(&RingDoc { p: Some(num(p)?), ..blank("poly_over_prime_field") }, w),
            ["skew", p, e] => AnyRing::from_doc(
                &RingDoc { p: Some(num(p)?), e: Some(num(e)? as usize), ..blank("skew_poly_over_gf") },
                "x",
            ),
            ["group", n, p] => {
                let (n, p) = (num(n)? as usize, num(p)?);
                let mut w = vec!["0".to_string(); n.max(1)];
                w[0] = p.to_string();
                let omega = format!("[{}]", w.join(", "));
                AnyRing::from_doc(&RingDoc { p: Some(p), n: Some(n), ..blank("group_ring_zcn") }, &omega)
            }
            _ => Err(format!("unrecognised ring spec {spec:?}; expected integers:W, poly:P:W, skew:P:E or group:N:P")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_round_trip() {
        for spec in ["integers:6", "poly:2:x^3", "skew:2:2", "group:3:2"] {
            let r = AnyRing::parse_spec(spec).unwrap();
            let (doc, w) = r.to_doc();
            assert_eq!(AnyRing::from_doc(&doc, &w).unwrap(), r);
        }
        assert!(AnyRing::parse_spec("group:3:4").is_err());
        assert!(AnyRing::parse_spec("integers:0").is_err());
        let skew = AnyRing::parse_spec("skew:2:2").unwrap();
        let (doc, _) = skew.to_doc();
        assert!(AnyRing::from_doc(&doc, "x^2").is_err());
    }
}
