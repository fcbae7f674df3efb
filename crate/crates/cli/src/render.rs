use hecke_core::invariants::{HalfLaurent, HomflyPoly, KhovanovTable};
use hecke_core::{BigRational, BraidWord, MultiLaurent, Var, WeavingSpec};
use serde_json::{json, Value};

use crate::args::Format;
use crate::error::{CliError, CliResult};

/// What a job was run on.
#[derive(Clone, Debug)]
pub enum Target {
    Weaving(WeavingSpec),
    Braid(BraidWord),
}

impl Target {
    pub fn label(&self) -> String {
        match self {
            Target::Weaving(s) => format!("W({},{})", s.big_n, s.m),
            Target::Braid(w) => format!("braid {w} on {} strands", w.strands()),
        }
    }

    fn json(&self) -> Value {
        match self {
            Target::Weaving(s) => json!({ "N": s.big_n, "m": s.m }),
            Target::Braid(w) => json!({ "braid": w.to_string(), "strands": w.strands() }),
        }
    }

    fn csv_header(&self) -> &'static str {
        match self {
            Target::Weaving(_) => "N,m",
            Target::Braid(_) => "braid,strands",
        }
    }

    fn csv_prefix(&self) -> String {
        match self {
            Target::Weaving(s) => format!("{},{}", s.big_n, s.m),
            Target::Braid(w) => format!("\"{w}\",{}", w.strands()),
        }
    }
}

/// One job's result in every output shape.
pub struct Item {
    pub result: Value,
    pub csv_header: String,
    pub csv_rows: Vec<String>,
    pub plain: String,
    pub latex: Option<String>,
}

pub fn render(invariant: &str, format: Format, items: &[(Target, Item)]) -> CliResult<String> {
    let single = items.len() == 1;
    let mut out = String::new();
    match format {
        Format::Json => {
            let docs: Vec<Value> = items
                .iter()
                .map(|(t, it)| json!({ "knot": t.json(), "invariant": invariant, "result": it.result }))
                .collect();
            let v = if single {
                docs.into_iter().next().unwrap()
            } else {
                Value::Array(docs)
            };
            out =
                serde_json::to_string_pretty(&v).map_err(|e| CliError::internal(e.to_string()))?;
            out.push('\n');
        }
        Format::Csv => {
            if let Some((t, it)) = items.first() {
                out += &format!("{},{}\n", t.csv_header(), it.csv_header);
            }
            for (t, it) in items {
                for row in &it.csv_rows {
                    out += &format!("{},{row}\n", t.csv_prefix());
                }
            }
        }
        Format::Plain | Format::Latex => {
            for (t, it) in items {
                let body = if format == Format::Plain {
                    it.plain.clone()
                } else {
                    it.latex.clone().ok_or_else(|| {
                        CliError::input(format!("no LaTeX output for {invariant}"))
                    })?
                };
                if single {
                    out += &body;
                } else if body.contains('\n') {
                    out += &format!("{}:\n{body}", t.label());
                } else {
                    out += &format!("{}: {body}", t.label());
                }
                if !out.ends_with('\n') {
                    out.push('\n');
                }
            }
        }
    }
    Ok(out)
}

pub fn trace_item(p: &MultiLaurent) -> Item {
    Item {
        result: serde_json::to_value(hecke_core::PolyJson::from_laurent(
            p,
            Some(&[Var::Q, Var::Z]),
        ))
        .unwrap(),
        csv_header: "q,z,coefficient".into(),
        csv_rows: p
            .terms()
            .map(|(m, c)| format!("{},{},{c}", m.exp(Var::Q), m.exp(Var::Z)))
            .collect(),
        plain: p.to_string(),
        latex: None,
    }
}

fn half_exponent(x: i32) -> String {
    if x % 2 == 0 {
        (x / 2).to_string()
    } else {
        format!("{x}/2")
    }
}

pub fn half_laurent_item(v: &HalfLaurent) -> Item {
    Item {
        result: serde_json::to_value(v.to_json()).unwrap(),
        csv_header: "t_exponent,coefficient".into(),
        csv_rows: v
            .coeffs()
            .iter()
            .map(|(x, c)| format!("{},{c}", half_exponent(*x)))
            .collect(),
        plain: v.to_plain(),
        latex: Some(v.to_latex()),
    }
}

pub fn homfly_item(h: &HomflyPoly) -> Item {
    Item {
        result: serde_json::to_value(h.to_json()).unwrap(),
        csv_header: "a,z,coefficient".into(),
        csv_rows: h
            .poly()
            .terms()
            .map(|(m, c)| format!("{},{},{c}", m.exp(Var::A), m.exp(Var::HomZ)))
            .collect(),
        plain: h.to_plain(),
        latex: Some(h.to_latex()),
    }
}

/// Rank grid with `j` descending down the rows and `i` ascending across.
fn grid(kh: &KhovanovTable, latex: bool) -> String {
    let is: Vec<i64> = {
        let lo = kh.entries.keys().map(|k| k.0).min().unwrap_or(0);
        let hi = kh.entries.keys().map(|k| k.0).max().unwrap_or(0);
        (lo..=hi).collect()
    };
    let mut js: Vec<i64> = kh.entries.keys().map(|k| k.1).collect();
    js.sort_unstable_by(|a, b| b.cmp(a));
    js.dedup();
    let cell = |i: i64, j: i64| {
        kh.entries
            .get(&(i, j))
            .map(|r| r.to_string())
            .unwrap_or_default()
    };
    if latex {
        let mut s = format!("\\begin{{array}}{{r|{}}}\n", "c".repeat(is.len()));
        s += &format!(
            "j \\backslash i & {} \\\\ \\hline\n",
            is.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" & ")
        );
        for &j in &js {
            let row: Vec<String> = is.iter().map(|&i| cell(i, j)).collect();
            s += &format!("{j} & {} \\\\\n", row.join(" & "));
        }
        s + "\\end{array}"
    } else {
        let width = kh
            .entries
            .values()
            .map(|r| r.to_string().len())
            .chain(is.iter().map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let jw = js
            .iter()
            .map(|j| j.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let mut s = format!("{:>jw$} |", "j\\i");
        for i in &is {
            s += &format!(" {i:>width$}");
        }
        s.push('\n');
        for &j in &js {
            s += &format!("{j:>jw$} |");
            for &i in &is {
                s += &format!(" {:>width$}", cell(i, j));
            }
            s.push('\n');
        }
        s
    }
}

pub fn khovanov_item(kh: &KhovanovTable) -> Item {
    let rows = kh.rows();
    Item {
        result: json!({ "signature": kh.sigma, "ranks": kh.to_json() }),
        csv_header: "i,j,rank".into(),
        csv_rows: rows
            .iter()
            .map(|(i, j, r)| format!("{i},{j},{r}"))
            .collect(),
        plain: grid(kh, false),
        latex: Some(grid(kh, true)),
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_exponents() {
        assert_eq!(half_exponent(-13), "-13/2");
        assert_eq!(half_exponent(4), "2");
        assert_eq!(half_exponent(0), "0");
    }
}
