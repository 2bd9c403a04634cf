//! Load states from JSON and evaluate every measure.

use rank2_triangle::cli::evaluate_state;
use rank2_triangle::statefile::{ensemble_to_json, parse_state};
use rank2_triangle::states::catalog;

fn main() {
    let bell = r#"{"shape": [2, 2], "amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]}"#;
    let example = ensemble_to_json(&catalog::example_ensemble(0.3).unwrap()).to_string();
    for text in [bell, example.as_str()] {
        let state = parse_state(text, "inline").unwrap();
        let report = evaluate_state(&state, None, 500, 1).unwrap();
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    }
    match parse_state(r#"{"shape": [2, 2], "amplitudes": [[1, 0]]}"#, "broken.json") {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }
}
