// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

//! Deterministic CSV rendering: UTF-8, `#`-prefixed header comments carrying
//! the artifact version and the full effective configuration, one header row
//! of column names, then comma-separated rows in shortest round-trip decimal
//! form. Identical inputs produce byte-identical output.

use crate::pipeline::Table;

/// Render a table to CSV text.
pub fn render(table: &Table, effective_config: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# bellwave {} — {}\n",
        env!("CARGO_PKG_VERSION"),
        table.pipeline
    ));
    out.push_str("# effective configuration:\n");
    for line in effective_config.lines() {
        out.push_str("#   ");
        out.push_str(line);
        out.push('\n');
    }
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let mut first = true;
        for v in row {
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str(&format_value(*v));
        }
        out.push('\n');
    }
    for (key, value) in &table.footer {
        out.push_str(&format!("# {key} = {value}\n"));
    }
    out
}

/// Shortest decimal that round-trips to the same f64 (Rust's `Display`).
fn format_value(v: f64) -> String {
    format!("{v}")
}
