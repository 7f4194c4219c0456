//! JSON interchange: `{"name": string?, "size": N, "pairs": [[i, j], ...]}`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::FinStruct;

#[derive(Serialize, Deserialize)]
struct StructFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    size: usize,
    pairs: Vec<(usize, usize)>,
}

impl Serialize for FinStruct {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        StructFile {
            name: self.name().map(str::to_owned),
            size: self.size(),
            pairs: self.pairs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinStruct {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let file = StructFile::deserialize(d)?;
        let mut s =
            FinStruct::from_pairs(file.size, &file.pairs).map_err(serde::de::Error::custom)?;
        s.set_name(file.name);
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::generators::chain;

    #[test]
    fn pairs_are_written_in_order() {
        let json = serde_json::to_string(&chain(2)).unwrap();
        assert_eq!(
            json,
            r#"{"name":"C2","size":2,"pairs":[[0,0],[0,1],[1,1]]}"#
        );
    }

    #[test]
    fn reading_sorts_and_dedups() {
        let s: FinStruct =
            serde_json::from_str(r#"{"size":2,"pairs":[[1,1],[0,1],[0,0],[0,1]]}"#).unwrap();
        assert_eq!(s, chain(2));
        assert_eq!(s.name(), None);
    }

    #[test]
    fn out_of_range_is_rejected() {
        let r: Result<FinStruct, _> = serde_json::from_str(r#"{"size":2,"pairs":[[0,2]]}"#);
        assert!(r.is_err());
    }
}
