//! Round-trip a labeled construction through the t4g text format and
//! its JSON mirror.
//!
//! ```sh
//! cargo run --release --example file_formats
//! ```

use turan4::constructions::rainbow_build;
use turan4::hypergraph::{parse_json, parse_t4g, to_json, to_t4g};

fn main() {
    let b = rainbow_build(1).expect("depth in range");
    let g = b.four_graph();
    let labels = b.graph.labels();

    let text = to_t4g(g, Some(labels));
    println!("{text}");
    let (parsed, parsed_labels) = parse_t4g(&text).expect("own output parses");
    assert_eq!(&parsed, g);
    assert_eq!(parsed_labels.as_deref(), Some(labels));
    assert_eq!(to_t4g(&parsed, parsed_labels.as_deref()), text);

    let json = to_json(g, Some(labels));
    let (from_json, json_labels) = parse_json(&json).expect("own output parses");
    assert_eq!(&from_json, g);
    assert_eq!(to_json(&from_json, json_labels.as_deref()), json);
    println!("json round-trip ok ({} bytes)", json.len());
}
