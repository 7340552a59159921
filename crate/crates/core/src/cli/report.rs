use serde::{Deserialize, Serialize};

/// Report for `hvector`, `report` and `verify`. Absent fields are omitted.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct JetReport {
    pub m: i64,
    pub n: i64,
    pub dimension: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_invariant: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_numerator: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub methods: Option<Methods>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Methods {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shelling: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<Vec<String>>,
}

impl Methods {
    pub fn entries(&self) -> impl Iterator<Item = (&'static str, &Vec<String>)> {
        [
            ("closed", &self.closed),
            ("shelling", &self.shelling),
            ("paths", &self.paths),
            ("lemmas", &self.lemmas),
        ]
        .into_iter()
        .filter_map(|(name, v)| Some((name, v.as_ref()?)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        let status = if pass { Status::Pass } else { Status::Fail };
        Check {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }

    pub fn skipped(name: &str, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Skipped,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassicalReport {
    pub r: i64,
    pub m: i64,
    pub n: i64,
    pub dimension: u64,
    pub h_vector: Vec<String>,
    pub multiplicity: String,
    #[serde(default)]
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_m: i64,
    pub max_n: i64,
    pub level: String,
    pub cells: Vec<SweepCell>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
    pub m: i64,
    pub n: i64,
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentsReport {
    pub r: i64,
    pub k: i64,
    pub components: i64,
}

/// Left-aligned columns separated by two spaces, header first.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(","))
}

fn checks_table(checks: &[Check]) -> String {
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| vec![c.name.clone(), c.status.as_str().to_string(), c.detail.clone()])
        .collect();
    table(&["check", "status", "detail"], &rows)
}

impl JetReport {
    pub fn to_text(&self) -> String {
        let mut rows = vec![
            vec!["m".to_string(), self.m.to_string()],
            vec!["n".to_string(), self.n.to_string()],
            vec!["dimension".to_string(), self.dimension.to_string()],
        ];
        if let Some(h) = &self.h_vector {
            rows.push(vec!["h_vector".into(), tuple(h)]);
        }
        if let Some(e) = &self.multiplicity {
            rows.push(vec!["multiplicity".into(), e.clone()]);
        }
        if let Some(a) = self.a_invariant {
            rows.push(vec!["a_invariant".into(), a.to_string()]);
        }
        if let Some(g) = self.gorenstein {
            rows.push(vec!["gorenstein".into(), g.to_string()]);
        }
        if let Some(w) = &self.canonical_numerator {
            rows.push(vec!["canonical_numerator".into(), tuple(w)]);
        }
        let mut out = table(&["field", "value"], &rows);
        if let Some(methods) = &self.methods {
            let rows: Vec<Vec<String>> = methods
                .entries()
                .map(|(name, h)| vec![name.to_string(), tuple(h)])
                .collect();
            out += "\n";
            out += &table(&["method", "h_vector"], &rows);
        }
        if !self.checks.is_empty() {
            out += "\n";
            out += &checks_table(&self.checks);
        }
        out
    }
}

impl ClassicalReport {
    pub fn to_text(&self) -> String {
        let rows = vec![
            vec!["r".to_string(), self.r.to_string()],
            vec!["m".to_string(), self.m.to_string()],
            vec!["n".to_string(), self.n.to_string()],
            vec!["dimension".to_string(), self.dimension.to_string()],
            vec!["h_vector".to_string(), tuple(&self.h_vector)],
            vec!["multiplicity".to_string(), self.multiplicity.clone()],
        ];
        let mut out = table(&["field", "value"], &rows);
        if !self.checks.is_empty() {
            out += "\n";
            out += &checks_table(&self.checks);
        }
        out
    }
}

impl SweepReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|c| vec![c.m.to_string(), c.n.to_string(), c.status.clone(), c.detail.clone()])
            .collect();
        table(&["m", "n", "status", "detail"], &rows)
    }
}

impl ComponentsReport {
    pub fn to_text(&self) -> String {
        let rows = vec![
            vec!["r".to_string(), self.r.to_string()],
            vec!["k".to_string(), self.k.to_string()],
            vec!["components".to_string(), self.components.to_string()],
        ];
        table(&["field", "value"], &rows)
    }
}
