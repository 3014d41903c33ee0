//! `albert gamma=(1,1,-1) kind=octonion l=(…) x1=(…) x2=(…) x3=(…)`
//!
//! Tuple entries are separated by `", "`; scalars use their own text form.

use std::str::FromStr;

use crate::compalg::{Elem, Family};
use crate::scalars::Field;

use super::{AlbertElement, AlbertError, GammaTriple};

fn tuple<S: Field>(v: &[S]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn format_element<S: Field>(family: Family, gamma: GammaTriple, x: &AlbertElement<S>) -> String {
    format!(
        "albert gamma={} kind={} l={} x1={} x2={} x3={}",
        gamma,
        family.name(),
        tuple(&x.l),
        tuple(&x.x[0]),
        tuple(&x.x[1]),
        tuple(&x.x[2])
    )
}

fn field<'a>(s: &'a str, key: &str) -> Result<&'a str, AlbertError> {
    let pat = format!(" {key}=");
    let start = s.find(&pat).ok_or_else(|| AlbertError::Parse(format!("missing {key}")))? + pat.len();
    let rest = &s[start..];
    if rest.starts_with('(') {
        let end = rest.find(')').ok_or_else(|| AlbertError::Parse(format!("unclosed {key}")))?;
        Ok(&rest[1..end])
    } else {
        Ok(rest.split_whitespace().next().unwrap_or(""))
    }
}

fn parse_list<S: Field + FromStr>(s: &str, n: usize, key: &str) -> Result<Vec<S>, AlbertError> {
    let v: Vec<S> = s
        .split(", ")
        .map(|t| t.trim().parse::<S>().map_err(|_| AlbertError::Parse(format!("bad scalar {t:?} in {key}"))))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(AlbertError::Parse(format!("{key} needs {n} entries, got {}", v.len())));
    }
    Ok(v)
}

pub fn parse_element<S: Field + FromStr>(s: &str) -> Result<(Family, GammaTriple, AlbertElement<S>), AlbertError> {
    let s = s.trim();
    if !s.starts_with("albert ") {
        return Err(AlbertError::Parse("expected leading `albert`".into()));
    }
    let gamma: GammaTriple = format!("({})", field(s, "gamma")?).parse().map_err(AlbertError::Parse)?;
    let family: Family = field(s, "kind")?.parse().map_err(AlbertError::Parse)?;
    let l = parse_list::<S>(field(s, "l")?, 3, "l")?;
    let mut xs: Vec<Elem<S>> = Vec::new();
    for key in ["x1", "x2", "x3"] {
        let v = parse_list::<S>(field(s, key)?, 8, key)?;
        xs.push(std::array::from_fn(|k| v[k].clone()));
    }
    let el = AlbertElement {
        l: std::array::from_fn(|i| l[i].clone()),
        x: [xs[0].clone(), xs[1].clone(), xs[2].clone()],
    };
    Ok((family, gamma, el))
}
