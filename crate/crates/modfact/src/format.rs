//! Element strings.
//!
//! * integers: optional sign, decimal digits;
//! * `F_p[x]`: `"c0 + c1*x + c2*x^2"`, ascending, zero terms dropped, unit
//!   coefficients omitted on non-constant terms, `"0"` for zero;
//! * `F_q[x; Frob]`: the same with parenthesised field coefficients
//!   `"(a0+a1*g)"` in the fixed generator `g`, e.g. `"(1) + (g)*x + x^2"`;
//! * `Z C_n`: `"[a0, a1, ..., a(n-1)]"`, coefficient of `x^i` at index `i`.
//!
//! Parsing accepts arbitrary whitespace, `-` between terms, repeated degrees
//! and coefficients outside `0..p`; formatting always emits the canonical form.

use std::str::FromStr;

use modfact_core::rings::{FpPoly, Gf, GfEl, GroupEl, GroupRingZCn, Integers, PolyFp, SkewGf, SkewPoly};
use modfact_core::{FactorRing, Matrix};
use num_bigint::BigInt;

pub trait ElementFormat: FactorRing {
    fn format_el(&self, a: &Self::El) -> String;
    fn parse_el(&self, s: &str) -> Result<Self::El, String>;
}

/// Splits at top-level `+`/`-`, returning `(negated, term)` pairs.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty element".into());
    }
    let mut out = Vec::new();
    let (mut depth, mut neg, mut cur) = (0i32, false, String::new());
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(format!("unbalanced parenthesis in {s:?}"));
        }
        if depth == 0 && (ch == '+' || ch == '-') && !cur.ends_with('^') {
            if cur.is_empty() {
                if i != 0 {
                    return Err(format!("empty term in {s:?}"));
                }
            } else {
                out.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
            continue;
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(format!("unbalanced parenthesis in {s:?}"));
    }
    if cur.is_empty() {
        return Err(format!("trailing operator in {s:?}"));
    }
    out.push((neg, cur));
    Ok(out)
}

/// `coef`, `coef*v`, `coef*v^k`, `v`, `v^k` with `v` outside parentheses.
fn split_monomial(t: &str, var: char) -> Result<(Option<&str>, usize), String> {
    let mut depth = 0i32;
    let mut pos = None;
    for (i, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == var && depth == 0 => {
                if pos.is_some() {
                    return Err(format!("repeated variable in term {t:?}"));
                }
                pos = Some(i);
            }
            _ => {}
        }
    }
    let Some(i) = pos else { return Ok((Some(t), 0)) };
    let (pre, post) = (&t[..i], &t[i + var.len_utf8()..]);
    let coef = if pre.is_empty() {
        None
    } else {
        Some(pre.strip_suffix('*').ok_or_else(|| format!("expected '*' before {var} in {t:?}"))?)
    };
    if coef == Some("") {
        return Err(format!("empty coefficient in {t:?}"));
    }
    let exp = if post.is_empty() {
        1
    } else {
        let k = post.strip_prefix('^').ok_or_else(|| format!("unexpected {post:?} after {var}"))?;
        k.parse::<usize>().map_err(|_| format!("bad exponent {k:?}"))?
    };
    Ok((coef, exp))
}

/// Coefficient list of a polynomial with residues mod `p` as coefficients.
fn parse_fp_poly(s: &str, var: char, p: u32) -> Result<Vec<i64>, String> {
    let mut coeffs: Vec<i64> = Vec::new();
    for (neg, t) in split_terms(s)? {
        let (c, k) = split_monomial(&t, var)?;
        let c = match c {
            None => 1,
            Some(c) => {
                let v = BigInt::from_str(c).map_err(|_| format!("bad coefficient {c:?}"))?;
                let r = v % BigInt::from(p);
                i64::try_from(r).expect("residue fits")
            }
        };
        if coeffs.len() <= k {
            coeffs.resize(k + 1, 0);
        }
        coeffs[k] = (coeffs[k] + if neg { -c } else { c }).rem_euclid(p as i64);
    }
    Ok(coeffs)
}

fn monomial(coef: Option<String>, var: char, k: usize) -> String {
    let v = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    match (coef, k) {
        (Some(c), 0) => c,
        (None, 0) => "1".into(),
        (Some(c), _) => format!("{c}*{v}"),
        (None, _) => v,
    }
}

fn format_fp_coeffs(cs: &[u32], var: char, sep: &str) -> String {
    let terms: Vec<String> = cs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| monomial(if c == 1 { None } else { Some(c.to_string()) }, var, k))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(sep)
    }
}

fn parse_integer(s: &str) -> Result<BigInt, String> {
    let t = s.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad integer {s:?}"));
    }
    BigInt::from_str(t).map_err(|_| format!("bad integer {s:?}"))
}

impl ElementFormat for Integers {
    fn format_el(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_el(&self, s: &str) -> Result<BigInt, String> {
        parse_integer(s)
    }
}

impl ElementFormat for PolyFp {
    fn format_el(&self, a: &FpPoly) -> String {
        format_fp_coeffs(a.coeffs(), 'x', " + ")
    }
    fn parse_el(&self, s: &str) -> Result<FpPoly, String> {
        Ok(self.field().from_coeffs(&parse_fp_poly(s, 'x', self.p())?))
    }
}

fn format_gf(a: &GfEl) -> String {
    format!("({})", format_fp_coeffs(&a.0, 'g', "+"))
}

fn parse_gf(f: &Gf, s: &str) -> Result<GfEl, String> {
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    Ok(f.from_coeffs(&parse_fp_poly(inner, 'g', f.p())?))
}

impl ElementFormat for SkewGf {
    fn format_el(&self, a: &SkewPoly) -> String {
        let f = self.field();
        let terms: Vec<String> = a
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(k, c)| {
                let coef = if k > 0 && *c == f.one() { None } else { Some(format_gf(c)) };
                monomial(coef, 'x', k)
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
    fn parse_el(&self, s: &str) -> Result<SkewPoly, String> {
        let f = self.field();
        let mut coeffs: Vec<GfEl> = Vec::new();
        for (neg, t) in split_terms(s)? {
            let (c, k) = split_monomial(&t, 'x')?;
            let mut c = match c {
                None => f.one(),
                Some(c) => parse_gf(f, c)?,
            };
            if neg {
                c = f.neg(&c);
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, f.zero());
            }
            coeffs[k] = f.add(&coeffs[k], &c);
        }
        Ok(self.from_coeffs(coeffs))
    }
}

impl ElementFormat for GroupRingZCn {
    fn format_el(&self, a: &GroupEl) -> String {
        let parts: Vec<String> = a.0.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
    fn parse_el(&self, s: &str) -> Result<GroupEl, String> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| format!("group-ring element {s:?} must be a bracketed list"))?;
        let parts: Vec<&str> = if inner.trim().is_empty() { Vec::new() } else { inner.split(',').collect() };
        if parts.len() != self.order() {
            return Err(format!("group-ring element {s:?} has {} coefficients, expected {}", parts.len(), self.order()));
        }
        let cs = parts.iter().map(|p| parse_integer(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(GroupEl(cs))
    }
}

/// `[a, b; c, d]`; `[]` for an empty matrix.
pub fn format_matrix<R: ElementFormat>(ring: &R, m: &Matrix<R::El>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|a| ring.format_el(a)).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[{}]", rows.join("; "))
}

pub fn format_entries<R: ElementFormat>(ring: &R, m: &Matrix<R::El>) -> Vec<String> {
    m.data().iter().map(|a| ring.format_el(a)).collect()
}

/// A `rows x cols` matrix from a row-major list; errors name the field and index.
pub fn parse_entries<R: ElementFormat>(
    ring: &R,
    field: &str,
    rows: usize,
    cols: usize,
    entries: &[String],
) -> Result<Matrix<R::El>, String> {
    if entries.len() != rows * cols {
        return Err(format!("{field}: {} entries for a {rows}x{cols} matrix", entries.len()));
    }
    let data = entries
        .iter()
        .enumerate()
        .map(|(k, s)| ring.parse_el(s).map_err(|e| format!("{field}[{}][{}]: {e}", k / cols.max(1), k % cols.max(1))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_vec(rows, cols, data).expect("length checked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use modfact_core::RingOps;

    #[test]
    fn polynomials() {
        let r = PolyFp::new(3, FpPoly(vec![0, 0, 1])).unwrap();
        let a = r.parse_el(" 2 +x^2 - 1 + 4*x ").unwrap();
        assert_eq!(a, FpPoly(vec![1, 1, 1]));
        assert_eq!(r.format_el(&a), "1 + x + x^2");
        assert_eq!(r.format_el(&r.parse_el("2*x^3").unwrap()), "2*x^3");
        assert_eq!(r.format_el(&r.zero()), "0");
        assert!(r.parse_el("x^").is_err());
        assert!(r.parse_el("2x").is_err());
        assert!(r.parse_el("1 +").is_err());
    }

    #[test]
    fn skew_coefficients() {
        let r = SkewGf::new(Gf::new(2, 2).unwrap()).unwrap();
        let a = r.parse_el("(1+g) + (g)*x + x^2").unwrap();
        assert_eq!(r.format_el(&a), "(1+g) + (g)*x + x^2");
        assert_eq!(r.format_el(&r.parse_el("1").unwrap()), "(1)");
        assert_eq!(r.format_el(&r.parse_el("(g^2)").unwrap()), "(1+g)");
        assert_eq!(r.format_el(&r.parse_el("(g)*x + (g)*x").unwrap()), "0");
    }

    #[test]
    fn integers_and_group_ring() {
        let z = Integers::new(BigInt::from(6)).unwrap();
        assert_eq!(z.parse_el("-12").unwrap(), BigInt::from(-12));
        assert_eq!(z.format_el(&z.parse_el("+7").unwrap()), "7");
        assert!(z.parse_el("1.5").is_err());
        let g = GroupRingZCn::new(3, 2).unwrap();
        let a = g.parse_el("[1,0, -1]").unwrap();
        assert_eq!(g.format_el(&a), "[1, 0, -1]");
        assert!(g.parse_el("[1, 2]").is_err());
    }
}
