//! JSON and CSV emission with fixed float formatting.

use std::io::Write;

use serde_json::{Number, Value};

/// Rounds to 6 significant digits. Non-finite values are left alone.
pub fn sig6(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.5e}").parse().expect("formatted float parses")
}

/// Applies [`sig6`] to every non-integer number in `v`.
pub fn round_floats(v: &mut Value) {
    match v {
        Value::Number(num) => {
            let text = num.to_string();
            if text.contains(['.', 'e', 'E']) {
                if let Some(x) = num.as_f64() {
                    *v = Number::from_f64(sig6(x)).map_or(Value::Null, Value::Number);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

/// Non-finite floats become null, as JSON has no spelling for them.
pub fn float(x: f64) -> Value {
    Number::from_f64(sig6(x)).map_or(Value::Null, Value::Number)
}

pub fn print_json(mut v: Value) -> std::io::Result<()> {
    round_floats(&mut v);
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "{}",
        serde_json::to_string(&v).expect("values serialize")
    )?;
    out.flush()
}

/// CSV cell for a float: 6 significant digits in shortest form.
pub fn csv_float(x: f64) -> String {
    if x.is_finite() {
        format!("{}", sig6(x))
    } else {
        String::new()
    }
}
