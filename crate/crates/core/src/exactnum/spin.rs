use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An SU(2) irrep label `j`, stored as the integer `2j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub const ZERO: Spin = Spin { twice: 0 };

    pub const fn new(twice: u32) -> Self {
        Spin { twice }
    }

    pub fn from_twice(t: i64) -> Result<Self> {
        if t < 0 {
            return Err(Error::InvalidSpin(t));
        }
        u32::try_from(t)
            .map(Spin::new)
            .map_err(|_| Error::Parse { what: "spin", input: t.to_string() })
    }

    /// Integer spin `j`.
    pub const fn integer(j: u32) -> Self {
        Spin { twice: 2 * j }
    }

    pub const fn twice(self) -> u32 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    /// `2j + 1`.
    pub fn dimension(self) -> u64 {
        u64::from(self.twice) + 1
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// Parses `"3/2"`, `"2"`, or with `twice_mode` a bare twice-value such as `"3"`.
    pub fn parse_with_mode(s: &str, twice_mode: bool) -> Result<Self> {
        let err = || Error::Parse { what: "spin", input: s.to_owned() };
        let s = s.trim();
        if twice_mode {
            let t: i64 = s.parse().map_err(|_| err())?;
            return Spin::from_twice(t);
        }
        match s.split_once('/') {
            Some((num, "2")) => {
                let t: i64 = num.trim().parse().map_err(|_| err())?;
                Spin::from_twice(t)
            }
            Some(_) => Err(err()),
            None => {
                let j: i64 = s.parse().map_err(|_| err())?;
                Spin::from_twice(j.checked_mul(2).ok_or_else(err)?)
            }
        }
    }
}

pub fn spin_from_twice(t: i64) -> Result<Spin> {
    Spin::from_twice(t)
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for Spin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Spin::parse_with_mode(s, false)
    }
}

impl Serialize for Spin {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Spin {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_twice() {
        assert_eq!(spin_from_twice(0).unwrap().to_string(), "0");
        assert_eq!(spin_from_twice(1).unwrap().to_string(), "1/2");
        assert_eq!(spin_from_twice(4).unwrap(), Spin::integer(2));
        assert_eq!(spin_from_twice(-1), Err(Error::InvalidSpin(-1)));
    }

    #[test]
    fn dimension() {
        assert_eq!(Spin::ZERO.dimension(), 1);
        assert_eq!(Spin::new(1).dimension(), 2);
        assert_eq!(Spin::integer(3).dimension(), 7);
    }

    #[test]
    fn parsing() {
        assert_eq!("3/2".parse::<Spin>().unwrap(), Spin::new(3));
        assert_eq!("2".parse::<Spin>().unwrap(), Spin::new(4));
        assert_eq!(Spin::parse_with_mode("3", true).unwrap(), Spin::new(3));
        assert!("3/4".parse::<Spin>().is_err());
        assert!("-1".parse::<Spin>().is_err());
        assert!("x".parse::<Spin>().is_err());
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&Spin::new(3)).unwrap();
        assert_eq!(json, "\"3/2\"");
        let back: Spin = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Spin::new(3));
    }
}
