//! JSON encoding for big integers: a number when it fits in `i64`, a decimal string otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(x: &BigInt) -> Self {
        match x.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(x.to_string()),
        }
    }
}

impl JsonInt {
    pub fn to_bigint(&self) -> Result<BigInt> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s
                .parse()
                .map_err(|_| Error::Domain(format!("invalid integer literal {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let small = BigInt::from(-42);
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        for x in [small, big] {
            let j = JsonInt::from(&x);
            let s = serde_json::to_string(&j).unwrap();
            let back: JsonInt = serde_json::from_str(&s).unwrap();
            assert_eq!(back.to_bigint().unwrap(), x);
        }
        assert_eq!(serde_json::to_string(&JsonInt::from(&BigInt::from(7))).unwrap(), "7");
        assert!(JsonInt::Big("x1".into()).to_bigint().is_err());
    }
}
