//! Row-shaped reports and their text, JSON and CSV renderings.

use serde::Serialize;
use serde_json::Value;

pub const CSV_HEADER: &str = "family,k,sigma,n,chi,r,r_bar,r_c,sre,ratio_num,ratio_den,pass";

/// One checked instance. Unmeasured columns stay empty in CSV and `null` in
/// JSON.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub family: String,
    pub k: Option<u64>,
    pub sigma: Option<u64>,
    pub n: Option<u64>,
    pub chi: Option<u64>,
    pub r: Option<u64>,
    pub r_bar: Option<u64>,
    pub r_c: Option<u64>,
    pub sre: Option<u64>,
    pub ratio_num: Option<u64>,
    pub ratio_den: Option<u64>,
    pub pass: bool,
}

impl Row {
    pub fn new(family: &str) -> Self {
        Self {
            family: family.to_string(),
            k: None,
            sigma: None,
            n: None,
            chi: None,
            r: None,
            r_bar: None,
            r_c: None,
            sre: None,
            ratio_num: None,
            ratio_den: None,
            pass: true,
        }
    }

    pub fn ratio(mut self, ratio: chiruns::Ratio) -> Self {
        self.ratio_num = Some(*ratio.numer());
        self.ratio_den = Some(*ratio.denom());
        self
    }

    fn csv_line(&self) -> String {
        let cell = |v: &Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.family,
            cell(&self.k),
            cell(&self.sigma),
            cell(&self.n),
            cell(&self.chi),
            cell(&self.r),
            cell(&self.r_bar),
            cell(&self.r_c),
            cell(&self.sre),
            cell(&self.ratio_num),
            cell(&self.ratio_den),
            self.pass
        )
    }

    fn text_line(&self) -> String {
        let mut parts = vec![self.family.clone()];
        let mut push = |name: &str, v: &Option<u64>| {
            if let Some(x) = v {
                parts.push(format!("{name}={x}"));
            }
        };
        push("k", &self.k);
        push("sigma", &self.sigma);
        push("n", &self.n);
        push("chi", &self.chi);
        push("r", &self.r);
        push("r_bar", &self.r_bar);
        push("r_c", &self.r_c);
        push("sre", &self.sre);
        if let (Some(num), Some(den)) = (self.ratio_num, self.ratio_den) {
            parts.push(format!("ratio={num}/{den}"));
        }
        parts.push(if self.pass { "pass".into() } else { "FAIL".into() });
        parts.join("  ")
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub rows: Vec<Row>,
    pub pass: bool,
    /// Command-specific detail (conjecture scans, oracle notes); absent for
    /// plain row reports.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

impl Report {
    pub fn new(command: &str, params: Value, rows: Vec<Row>) -> Self {
        let pass = rows.iter().all(|r| r.pass);
        Self { command: command.to_string(), params, rows, pass, detail: None }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut out = String::from(CSV_HEADER);
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.csv_line());
                    out.push('\n');
                }
                out
            }
            Format::Text => {
                let mut out = String::new();
                for row in &self.rows {
                    out.push_str(&row.text_line());
                    out.push('\n');
                }
                if let Some(detail) = &self.detail {
                    out.push_str(&render_detail_text(detail));
                }
                out.push_str(&format!(
                    "{}: {}\n",
                    self.command,
                    if self.pass { "all checks passed" } else { "FAILURES present" }
                ));
                out
            }
        }
    }
}

fn render_detail_text(detail: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = detail {
        for (key, value) in map {
            out.push_str(&format!("{key}: {value}\n"));
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}
