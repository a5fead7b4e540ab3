use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::SCHEMA;

/// Zero-sized marker that serialises as the crate's schema string and
/// rejects any other value on input.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SchemaTag;

impl Serialize for SchemaTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(SCHEMA)
    }
}

impl<'de> Deserialize<'de> for SchemaTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == SCHEMA {
            Ok(SchemaTag)
        } else {
            Err(serde::de::Error::custom(format!("unsupported schema `{s}`, expected `{SCHEMA}`")))
        }
    }
}
