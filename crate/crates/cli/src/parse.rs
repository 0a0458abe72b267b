//! Value parsers for ranges, lists and angles given on the command line.

use std::f64::consts::PI;
use std::str::FromStr;

/// `lo:hi:n`, `n >= 2` evenly spaced points including both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Range {
    pub fn points(&self) -> Vec<f64> {
        let step = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n)
            .map(|i| {
                if i + 1 == self.n {
                    self.hi
                } else {
                    self.lo + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(format!("expected lo:hi:n, got {s:?}"));
        };
        let lo = parse_real(lo)?;
        let hi = parse_real(hi)?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| format!("point count {n:?} is not a nonnegative integer"))?;
        if n < 2 {
            return Err(format!("a swept axis needs at least 2 points, got {n}"));
        }
        if !(lo < hi) {
            return Err(format!("range must satisfy lo < hi, got {lo}:{hi}"));
        }
        Ok(Range { lo, hi, n })
    }
}

pub fn parse_range(s: &str) -> Result<Range, String> {
    s.parse()
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s:?} is not finite"))
    }
}

/// A real number or a multiple of pi: `0.3`, `pi`, `-pi/2`, `3pi/4`, `2*pi/3`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    let Some(at) = t.find("pi") else {
        return parse_real(&t);
    };
    let coef = t[..at].trim().trim_end_matches('*').trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => parse_real(c).map_err(|_| format!("bad angle {s:?}"))?,
    };
    let rest = t[at + 2..].trim();
    let den = if rest.is_empty() {
        1.0
    } else if let Some(d) = rest.strip_prefix('/') {
        parse_real(d).map_err(|_| format!("bad angle {s:?}"))?
    } else {
        return Err(format!("bad angle {s:?}"));
    };
    if den == 0.0 {
        return Err(format!("bad angle {s:?}"));
    }
    Ok(coef * PI / den)
}

fn parse_list_with(s: &str, item: fn(&str) -> Result<f64, String>) -> Result<Vec<f64>, String> {
    let v = s.split(',').map(item).collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Err("empty list".into());
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealList(pub Vec<f64>);

pub fn parse_real_list(s: &str) -> Result<RealList, String> {
    parse_list_with(s, parse_real).map(RealList)
}

pub fn parse_angle_list(s: &str) -> Result<RealList, String> {
    parse_list_with(s, parse_angle).map(RealList)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn ranges() {
        let r: Range = "-3:3:31".parse().unwrap();
        let p = r.points();
        assert_eq!(p.len(), 31);
        assert_eq!(p[0], -3.0);
        assert_eq!(p[15], 0.0);
        assert_eq!(p[30], 3.0);
        assert!("0:1:1".parse::<Range>().is_err());
        assert!("1:0:5".parse::<Range>().is_err());
        assert!("0:1".parse::<Range>().is_err());
        assert!("0:nan:3".parse::<Range>().is_err());
    }

    #[test]
    fn angles() {
        assert_eq!(parse_angle("pi/4").unwrap(), FRAC_PI_4);
        assert_eq!(parse_angle("PI/2").unwrap(), FRAC_PI_2);
        assert_eq!(parse_angle("-pi/2").unwrap(), -FRAC_PI_2);
        assert_eq!(parse_angle("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_angle("2*pi/3").unwrap(), 2.0 * PI / 3.0);
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("0.5").unwrap(), 0.5);
        assert!(parse_angle("pi/0").is_err());
        assert!(parse_angle("pix").is_err());
        assert_eq!(
            parse_angle_list("0,pi/4,pi/2").unwrap().0,
            vec![0.0, FRAC_PI_4, FRAC_PI_2]
        );
        assert!(parse_real_list("1,,2").is_err());
    }
}
