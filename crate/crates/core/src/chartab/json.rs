//! Versioned, byte-stable JSON form of a character table.

use serde::Serialize;

use crate::group::FiniteGroup;

use super::CharacterTable;

pub const TABLE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ClassJson {
    pub size: usize,
    pub order: u64,
    /// Representative as a word in the generators (0-based indices).
    pub rep_word: Vec<usize>,
}

/// Serializable table. Each value is a list of `[exponent, "n/d"]` pairs
/// giving its canonical coefficients on powers of `ζ_e`.
#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub version: u32,
    pub spec: String,
    pub order: usize,
    pub exponent: u64,
    pub generators: Vec<String>,
    pub classes: Vec<ClassJson>,
    pub degrees: Vec<u64>,
    pub characters: Vec<Vec<Vec<(u32, String)>>>,
}

impl TableJson {
    pub fn new(spec: &str, g: &FiniteGroup, t: &CharacterTable) -> Self {
        let cd = t.classes();
        TableJson {
            version: TABLE_FORMAT_VERSION,
            spec: spec.to_string(),
            order: t.group_order(),
            exponent: t.exponent(),
            generators: g.generator_perms().iter().map(|p| p.to_string()).collect(),
            classes: (0..cd.num_classes())
                .map(|c| ClassJson {
                    size: cd.sizes()[c],
                    order: cd.rep_order(c),
                    rep_word: g.word(cd.reps()[c]),
                })
                .collect(),
            degrees: t.degrees().to_vec(),
            characters: t
                .rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.terms().iter().map(|(j, c)| (*j, c.to_string())).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_pretty_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::constructions::build;

    #[test]
    fn s3_json_is_stable() {
        let spec = "S(3)";
        let render = || {
            let g = build(&spec.parse().unwrap()).unwrap();
            let t = character_table(&g).unwrap();
            TableJson::new(spec, &g, &t).to_pretty_string()
        };
        let a = render();
        assert_eq!(a, render());
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["degrees"], serde_json::json!([1, 1, 2]));
        assert_eq!(v["characters"][0][0], serde_json::json!([[0, "1/1"]]));
    }
}
