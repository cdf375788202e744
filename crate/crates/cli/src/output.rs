//! Ordered key/value blocks rendered as aligned text or `key=value` lines.

use crate::Format;

#[derive(Default)]
pub struct Block {
    entries: Vec<(String, String)>,
}

impl Block {
    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        match format {
            Format::Text => {
                let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.entries {
                    s.push_str(&format!("{k:<width$}  {v}\n"));
                }
            }
            Format::Kv => {
                for (k, v) in &self.entries {
                    s.push_str(&format!("{k}={v}\n"));
                }
            }
        }
        s.push('\n');
        s
    }
}
