//! Named posets: `chain:N`, `boolean:K`, `divisors:N`, `bruhat:N`,
//! `involutions:N` and `product:(A,B,…)`.

use std::sync::Arc;

use crate::coxeter::{bruhat_poset, involution_poset};
use crate::error::{Error, Result};
use crate::poset::{boolean_lattice, chain, divisor_poset, product, Poset};

/// Builds the poset named by `spec`.
pub fn resolve(spec: &str) -> Result<Arc<Poset>> {
    let spec = spec.trim();
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("builtin spec {spec:?} lacks ':'")))?;
    let num = || -> Result<u64> {
        arg.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad parameter in {spec:?}")))
    };
    match name.trim() {
        "chain" => chain(num()? as usize).map(Arc::new),
        "boolean" => boolean_lattice(num()? as usize).map(Arc::new),
        "divisors" => divisor_poset(num()?).map(Arc::new),
        "bruhat" => bruhat_poset(num()? as usize),
        "involutions" => Ok(involution_poset(num()? as usize)?.poset().clone()),
        "product" => {
            let inner = arg
                .trim()
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("product needs parentheses: {spec:?}")))?;
            let factors = split_top_level(inner)?
                .into_iter()
                .map(resolve)
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&Poset> = factors.iter().map(|p| p.as_ref()).collect();
            product(&refs).map(Arc::new)
        }
        other => Err(Error::Parse(format!("unknown builtin {other:?}"))),
    }
}

fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    parts.push(&s[start..]);
    if parts.iter().any(|p| p.trim().is_empty()) {
        return Err(Error::Parse(format!("empty factor in {s:?}")));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_families() {
        assert_eq!(resolve("chain:4").unwrap().len(), 4);
        assert_eq!(resolve("boolean:3").unwrap().len(), 8);
        assert_eq!(resolve("divisors:12").unwrap().len(), 6);
        assert_eq!(resolve("bruhat:3").unwrap().len(), 6);
        assert_eq!(resolve("involutions:4").unwrap().len(), 10);
    }

    #[test]
    fn nested_products() {
        let p = resolve("product:(chain:2,product:(chain:3,chain:2))").unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.rank(p.top()), 4);
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "chain",
            "chain:x",
            "torus:3",
            "product:(chain:2",
            "product:(chain:2,)",
        ] {
            assert!(matches!(resolve(s), Err(Error::Parse(_))), "{s}");
        }
    }
}
