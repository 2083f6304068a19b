//! JSON descriptions of groups and homomorphisms, and the bundled corpus.
//!
//! A group file is either a Cayley table
//! `{"name": "s3", "cayley": [[..]], "labels": [..]}` or a permutation group
//! `{"name": "v4", "degree": 4, "generators": ["(1 2)(3 4)", ..]}`. A
//! homomorphism file names or inlines its groups:
//! `{"name": "q8_to_c2", "src": "q8", "dst": "c2", "images": [..]}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupkit::{Group, Hom};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDef {
    Cayley {
        cayley: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Permutations {
        degree: usize,
        generators: Vec<String>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub def: GroupDef,
}

impl GroupFile {
    pub fn build(&self) -> Result<Group> {
        match &self.def {
            GroupDef::Cayley { cayley, labels } => Group::from_cayley_labeled(cayley, labels.clone()),
            GroupDef::Permutations { degree, generators } => {
                let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
                Group::from_permutations(*degree, &gens)
            }
        }
    }

    /// The Cayley-table form of a group.
    pub fn from_group(name: Option<String>, g: &Group) -> GroupFile {
        GroupFile {
            name,
            def: GroupDef::Cayley { cayley: g.table_rows(), labels: g.labels().map(<[String]>::to_vec) },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Named(String),
    Inline(GroupFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub src: GroupRef,
    pub dst: GroupRef,
    pub images: Vec<usize>,
}

const BUILTIN: &[(&str, &str)] = &[
    ("c2", include_str!("../../../corpus/c2.json")),
    ("c3", include_str!("../../../corpus/c3.json")),
    ("c4", include_str!("../../../corpus/c4.json")),
    ("c5", include_str!("../../../corpus/c5.json")),
    ("c6", include_str!("../../../corpus/c6.json")),
    ("c7", include_str!("../../../corpus/c7.json")),
    ("c8", include_str!("../../../corpus/c8.json")),
    ("v4", include_str!("../../../corpus/v4.json")),
    ("s3", include_str!("../../../corpus/s3.json")),
    ("d8", include_str!("../../../corpus/d8.json")),
    ("q8", include_str!("../../../corpus/q8.json")),
    ("d10", include_str!("../../../corpus/d10.json")),
    ("a4", include_str!("../../../corpus/a4.json")),
    ("q8_to_c2", include_str!("../../../corpus/q8_to_c2.json")),
    ("a4_to_c3", include_str!("../../../corpus/a4_to_c3.json")),
    ("s3_to_c2", include_str!("../../../corpus/s3_to_c2.json")),
];

/// Names of the bundled groups, smallest first.
pub const GROUP_NAMES: &[&str] = &["c2", "c3", "c4", "c5", "c6", "c7", "c8", "v4", "s3", "d8", "q8", "d10", "a4"];

pub fn builtin_source(name: &str) -> Option<&'static str> {
    BUILTIN.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn parse_group(text: &str) -> Result<Group> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidGroup(format!("unreadable group description: {e}")))?;
    file.build()
}

/// A bundled group by name.
pub fn group(name: &str) -> Result<Arc<Group>> {
    let src = builtin_source(name).ok_or_else(|| Error::InvalidGroup(format!("unknown corpus group {name:?}")))?;
    Ok(Arc::new(parse_group(src)?))
}

/// Parses a homomorphism, resolving group names through `resolve`.
pub fn parse_hom(text: &str, resolve: &dyn Fn(&str) -> Result<Arc<Group>>) -> Result<Hom> {
    let file: HomFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidGroup(format!("unreadable homomorphism description: {e}")))?;
    let get = |r: &GroupRef| -> Result<Arc<Group>> {
        match r {
            GroupRef::Named(n) => resolve(n),
            GroupRef::Inline(f) => Ok(Arc::new(f.build()?)),
        }
    };
    Hom::new(get(&file.src)?, get(&file.dst)?, file.images)
}

/// A bundled homomorphism by name.
pub fn hom(name: &str) -> Result<Hom> {
    let src = builtin_source(name).ok_or_else(|| Error::InvalidGroup(format!("unknown corpus map {name:?}")))?;
    parse_hom(src, &group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_orders() {
        let orders: Vec<usize> = GROUP_NAMES.iter().map(|n| group(n).unwrap().order()).collect();
        assert_eq!(orders, vec![2, 3, 4, 5, 6, 7, 8, 4, 6, 8, 8, 10, 12]);
        for h in ["q8_to_c2", "a4_to_c3", "s3_to_c2"] {
            let f = hom(h).unwrap();
            assert!(f.is_surjective());
        }
        assert_eq!(hom("q8_to_c2").unwrap().kernel(), vec![0, 1, 2, 3]);
        assert_eq!(hom("a4_to_c3").unwrap().kernel().len(), 4);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_group("{\"cayley\": [[0, 1], [1, 1]]}"), Err(Error::InvalidGroup(_))));
        assert!(matches!(parse_group("not json"), Err(Error::InvalidGroup(_))));
        assert!(matches!(
            parse_group("{\"degree\": 3, \"generators\": [\"(1 5)\"]}"),
            Err(Error::MalformedPermutation(_))
        ));
    }
}
