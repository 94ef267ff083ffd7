//! Output documents: ordered fields rendered as text or JSON, field for field.

use serde_json::{Map, Value as Json};

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Text(String),
    List(Vec<String>),
    Section(Doc),
    Items(Vec<Doc>),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Doc {
    fields: Vec<(String, Value)>,
}

impl Doc {
    pub fn new() -> Doc {
        Doc::default()
    }

    pub fn text(&mut self, key: &str, v: impl ToString) -> &mut Self {
        self.fields.push((key.into(), Value::Text(v.to_string())));
        self
    }

    pub fn list<T: ToString>(&mut self, key: &str, items: impl IntoIterator<Item = T>) -> &mut Self {
        let v = items.into_iter().map(|x| x.to_string()).collect();
        self.fields.push((key.into(), Value::List(v)));
        self
    }

    pub fn section(&mut self, key: &str, d: Doc) -> &mut Self {
        self.fields.push((key.into(), Value::Section(d)));
        self
    }

    pub fn items(&mut self, key: &str, ds: Vec<Doc>) -> &mut Self {
        self.fields.push((key.into(), Value::Items(ds)));
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, indent: usize) {
        let pad = " ".repeat(indent);
        for (k, v) in &self.fields {
            match v {
                Value::Text(s) if s.contains('\n') => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    for line in s.lines() {
                        out.push_str(&format!("{pad}  {line}\n"));
                    }
                }
                Value::Text(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                Value::List(xs) => out.push_str(&format!("{pad}{k}: {}\n", xs.join(","))),
                Value::Section(d) => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    d.write_text(out, indent + 2);
                }
                Value::Items(ds) => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    for d in ds {
                        let mut inner = String::new();
                        d.write_text(&mut inner, indent + 4);
                        // First line of each item carries the bullet.
                        let mut lines = inner.lines();
                        if let Some(first) = lines.next() {
                            out.push_str(&format!("{pad}  - {}\n", &first[indent + 4..]));
                        }
                        for line in lines {
                            out.push_str(line);
                            out.push('\n');
                        }
                    }
                }
            }
        }
    }

    pub fn to_json(&self) -> Json {
        let mut m = Map::new();
        for (k, v) in &self.fields {
            let j = match v {
                Value::Text(s) => Json::String(s.clone()),
                Value::List(xs) => Json::Array(xs.iter().cloned().map(Json::String).collect()),
                Value::Section(d) => d.to_json(),
                Value::Items(ds) => Json::Array(ds.iter().map(Doc::to_json).collect()),
            };
            m.insert(k.clone(), j);
        }
        Json::Object(m)
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("documents serialize");
        s.push('\n');
        s
    }
}
