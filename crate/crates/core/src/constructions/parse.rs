//! `kind:key=value,key=value` spec strings, e.g. `gprime:n=20,d=10`.

use std::str::FromStr;

use super::ConstructionSpec;
use crate::error::{Error, Result};

struct Fields<'a> {
    kind: &'a str,
    // (key, value, byte offset of the key)
    pairs: Vec<(&'a str, u64, usize)>,
}

fn split(s: &str) -> Result<Fields<'_>> {
    let colon = s
        .find(':')
        .ok_or_else(|| Error::parse(s.len(), "expected `kind:key=value,...`"))?;
    let kind = &s[..colon];
    let mut pairs = Vec::new();
    let mut pos = colon + 1;
    for item in s[colon + 1..].split(',') {
        let eq = item
            .find('=')
            .ok_or_else(|| Error::parse(pos, format!("expected key=value, found `{item}`")))?;
        let (key, raw) = (&item[..eq], &item[eq + 1..]);
        if key.is_empty() {
            return Err(Error::parse(pos, "empty key"));
        }
        let value = raw
            .parse::<u64>()
            .map_err(|_| Error::parse(pos + eq + 1, format!("`{raw}` is not a non-negative integer")))?;
        if pairs.iter().any(|(k, _, _)| *k == key) {
            return Err(Error::parse(pos, format!("duplicate key `{key}`")));
        }
        pairs.push((key, value, pos));
        pos += item.len() + 1;
    }
    Ok(Fields { kind, pairs })
}

impl Fields<'_> {
    fn take(&self, keys: &[&str]) -> Result<Vec<u64>> {
        if let Some((k, _, at)) = self.pairs.iter().find(|(k, _, _)| !keys.contains(k)) {
            return Err(Error::parse(
                *at,
                format!("unknown key `{k}` for `{}` (expected {})", self.kind, keys.join(", ")),
            ));
        }
        keys.iter()
            .map(|key| {
                self.pairs
                    .iter()
                    .find(|(k, _, _)| k == key)
                    .map(|p| p.1)
                    .ok_or_else(|| Error::parse(self.kind.len(), format!("missing key `{key}` for `{}`", self.kind)))
            })
            .collect()
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f = split(s.trim())?;
        let spec = match f.kind {
            "turan" => {
                let v = f.take(&["n", "r"])?;
                ConstructionSpec::Turan { n: v[0], r: v[1] }
            }
            "kbip" => {
                let v = f.take(&["a", "b"])?;
                ConstructionSpec::CompleteBipartite { a: v[0], b: v[1] }
            }
            "joinke" => {
                let v = f.take(&["k", "m"])?;
                ConstructionSpec::JoinCliqueEmpty { k: v[0], m: v[1] }
            }
            "hub" => {
                let v = f.take(&["p", "t"])?;
                ConstructionSpec::HubAttachment {
                    pendants: v[0],
                    triangles: v[1],
                }
            }
            "gprime" => {
                let v = f.take(&["n", "d"])?;
                ConstructionSpec::GPrime { n: v[0], hub_degree: v[1] }
            }
            "gstar" => {
                let v = f.take(&["n", "d"])?;
                ConstructionSpec::GStar { n: v[0], hub_degree: v[1] }
            }
            other => {
                return Err(Error::parse(
                    0,
                    format!("unknown construction `{other}` (expected turan, kbip, joinke, hub, gprime, gstar)"),
                ))
            }
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let cases = [
            ("turan:n=20,r=2", ConstructionSpec::Turan { n: 20, r: 2 }),
            ("gprime:n=20,d=10", ConstructionSpec::GPrime { n: 20, hub_degree: 10 }),
            ("gstar:d=10,n=20", ConstructionSpec::GStar { n: 20, hub_degree: 10 }),
            ("kbip:a=3,b=5", ConstructionSpec::CompleteBipartite { a: 3, b: 5 }),
            ("joinke:k=2,m=3", ConstructionSpec::JoinCliqueEmpty { k: 2, m: 3 }),
            ("hub:p=5,t=1", ConstructionSpec::HubAttachment { pendants: 5, triangles: 1 }),
        ];
        for (s, want) in cases {
            let got: ConstructionSpec = s.parse().unwrap();
            assert_eq!(got, want);
            assert_eq!(got.to_string().parse::<ConstructionSpec>().unwrap(), want);
        }
    }

    #[test]
    fn reports_positions() {
        assert!(matches!("turan".parse::<ConstructionSpec>(), Err(Error::Parse { position: 5, .. })));
        assert!(matches!("turan:n=x,r=2".parse::<ConstructionSpec>(), Err(Error::Parse { position: 8, .. })));
        assert!(matches!("turan:n=5,q=2".parse::<ConstructionSpec>(), Err(Error::Parse { position: 10, .. })));
        assert!(matches!("turan:n=5,n=2".parse::<ConstructionSpec>(), Err(Error::Parse { position: 10, .. })));
        assert!(matches!("turan:n=5".parse::<ConstructionSpec>(), Err(Error::Parse { .. })));
        assert!(matches!("cube:n=3".parse::<ConstructionSpec>(), Err(Error::Parse { position: 0, .. })));
        assert!(matches!("kbip:a=3;b=5".parse::<ConstructionSpec>(), Err(Error::Parse { .. })));
    }
}
