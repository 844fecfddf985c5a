//! Reading graph files, with `-` meaning standard input.

use std::io::Read;

use equisplit_core::{parse_graph, Graph};

pub fn read_text(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("<stdin>: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

pub fn parse(path: &str, text: &str) -> Result<Graph, String> {
    parse_graph(text).map_err(|e| format!("{}: {e}", display_name(path)))
}

pub fn display_name(path: &str) -> &str {
    if path == "-" {
        "<stdin>"
    } else {
        path
    }
}
