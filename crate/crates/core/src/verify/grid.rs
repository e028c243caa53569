use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Overrides parsed from `"m<=A,n<=B,entry<=C"`. A key may also be pinned
/// with `=`; `samples=N` draws `N` cases from the enumeration with the seed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridSpec {
    pub m: Option<Range>,
    pub n: Option<Range>,
    pub entry: Option<i64>,
    pub samples: Option<usize>,
}

/// An inclusive range of ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl Range {
    pub fn new(lo: usize, hi: usize) -> Self {
        Range { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

/// The resolved grid a suite runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub m: Range,
    pub n: Range,
    pub entry: i64,
    pub samples: Option<usize>,
}

impl GridSpec {
    pub fn resolve(&self, defaults: Grid) -> Grid {
        let clamp = |spec: Option<Range>, d: Range| match spec {
            // an upper bound alone keeps the suite's lower bound
            Some(r) if r.lo == usize::MAX => Range::new(d.lo.min(r.hi), r.hi),
            Some(r) => r,
            None => d,
        };
        Grid {
            m: clamp(self.m, defaults.m),
            n: clamp(self.n, defaults.n),
            entry: self.entry.unwrap_or(defaults.entry),
            samples: self.samples.or(defaults.samples),
        }
    }
}

fn parse_number<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Parse(format!("grid value `{v}` for `{key}`")))
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut spec = GridSpec::default();
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        for item in cleaned.split(',').filter(|t| !t.is_empty()) {
            let (key, exact, value) = if let Some((k, v)) = item.split_once("<=") {
                (k, false, v)
            } else if let Some((k, v)) = item.split_once('=') {
                (k, true, v)
            } else {
                return Err(Error::Parse(format!("grid item `{item}` needs `<=` or `=`")));
            };
            match key {
                "m" | "n" => {
                    let v: usize = parse_number(key, value)?;
                    let r = if exact { Range::new(v, v) } else { Range::new(usize::MAX, v) };
                    if key == "m" {
                        spec.m = Some(r);
                    } else {
                        spec.n = Some(r);
                    }
                }
                "entry" => spec.entry = Some(parse_number(key, value)?),
                "samples" => spec.samples = Some(parse_number(key, value)?),
                _ => return Err(Error::Parse(format!("unknown grid key `{key}`"))),
            }
        }
        Ok(spec)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<=m<={},{}<=n<={},entry<={}", self.m.lo, self.m.hi, self.n.lo, self.n.hi, self.entry)?;
        if let Some(s) = self.samples {
            write!(f, ",samples={s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Grid {
        Grid { m: Range::new(1, 3), n: Range::new(1, 2), entry: 3, samples: None }
    }

    #[test]
    fn parses_bounds() {
        let g: GridSpec = "m<=4, n<=3 ,entry<=2".parse().unwrap();
        let r = g.resolve(d());
        assert_eq!(r.m, Range::new(1, 4));
        assert_eq!(r.n, Range::new(1, 3));
        assert_eq!(r.entry, 2);
        let g: GridSpec = "m=4,n=3,samples=200".parse().unwrap();
        let r = g.resolve(d());
        assert_eq!((r.m, r.n, r.entry, r.samples), (Range::new(4, 4), Range::new(3, 3), 3, Some(200)));
        assert_eq!("".parse::<GridSpec>().unwrap().resolve(d()), d());
    }

    #[test]
    fn upper_bound_below_default_floor() {
        let g: GridSpec = "n<=0".parse().unwrap();
        assert_eq!(g.resolve(d()).n, Range::new(0, 0));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["m<4", "k<=2", "m<=x", "entry<=", "m<=-1"] {
            assert!(s.parse::<GridSpec>().is_err(), "{s}");
        }
    }
}
