//! Conversion of JSON and XML documents to their element skeleton tree.
//! Labels, attributes and text content are discarded; only the nesting
//! structure survives.

use crate::error::{Error, Result};
use crate::tree::OrderedTree;

/// JSON skeleton: arrays and objects become internal nodes (one child per
/// element, in document order), scalars become leaves.
pub fn json_skeleton(text: &str) -> Result<OrderedTree> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::Format(format!("json: {e}")))?;
    let mut degrees = Vec::new();
    fn walk(v: &serde_json::Value, out: &mut Vec<u32>) {
        match v {
            serde_json::Value::Array(items) => {
                out.push(items.len() as u32);
                for item in items {
                    walk(item, out);
                }
            }
            serde_json::Value::Object(map) => {
                out.push(map.len() as u32);
                for (_, item) in map {
                    walk(item, out);
                }
            }
            _ => out.push(0),
        }
    }
    walk(&value, &mut degrees);
    OrderedTree::from_preorder_degrees(&degrees)
}

/// Minimal XML element scanner: tracks start/end/empty element tags, skips
/// comments, processing instructions, doctype and CDATA. Returns the element
/// nesting tree; a document with multiple top-level elements is rejected.
pub fn xml_skeleton(text: &str) -> Result<OrderedTree> {
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let mut parent_stack: Vec<usize> = Vec::new();
    let mut degrees: Vec<u32> = Vec::new();
    let mut roots = 0usize;
    while i < bytes.len() {
        if bytes[i] != b'<' {
            i += 1;
            continue;
        }
        if text[i..].starts_with("<!--") {
            i = text[i..].find("-->").map(|p| i + p + 3).ok_or(Error::Format("unterminated comment".into()))?;
        } else if text[i..].starts_with("<![CDATA[") {
            i = text[i..].find("]]>").map(|p| i + p + 3).ok_or(Error::Format("unterminated CDATA".into()))?;
        } else if text[i..].starts_with("<?") || text[i..].starts_with("<!") {
            i = text[i..].find('>').map(|p| i + p + 1).ok_or(Error::Format("unterminated declaration".into()))?;
        } else if text[i..].starts_with("</") {
            let end = text[i..].find('>').map(|p| i + p + 1).ok_or(Error::Format("unterminated end tag".into()))?;
            parent_stack.pop().ok_or(Error::Format("unmatched end tag".into()))?;
            i = end;
        } else {
            let end = text[i..].find('>').map(|p| i + p).ok_or(Error::Format("unterminated tag".into()))?;
            let self_closing = bytes[end - 1] == b'/';
            let id = degrees.len();
            degrees.push(0);
            match parent_stack.last() {
                Some(&p) => degrees[p] += 1,
                None => {
                    roots += 1;
                    if roots > 1 {
                        return Err(Error::MultipleRoots);
                    }
                }
            }
            if !self_closing {
                parent_stack.push(id);
            }
            i = end + 1;
        }
    }
    if !parent_stack.is_empty() {
        return Err(Error::Format("unclosed element".into()));
    }
    if degrees.is_empty() {
        return Err(Error::Format("no elements found".into()));
    }
    // degrees were filled per-node in document order, which is preorder
    OrderedTree::from_preorder_degrees(&degrees)
}
