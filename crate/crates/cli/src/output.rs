use rug::{Complex, Float};
use serde_json::{json, Value};
use wzb_core::mpnum::format_float;
use wzb_core::paperlib::{Report, Status};

fn float_json(x: &Float, digits: u32) -> Value {
    if x.is_nan() {
        Value::Null
    } else if x.is_infinite() {
        Value::String(if x.is_sign_positive() { "inf" } else { "-inf" }.into())
    } else {
        Value::String(format_float(x, digits))
    }
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "id": r.id,
        "status": r.status.to_string(),
        "computed": {
            "re": float_json(r.computed.real(), r.digits),
            "im": float_json(r.computed.imag(), r.digits),
            "digits": r.digits,
        },
        "expected": r.expected,
        "abs_diff": float_json(&r.abs_diff, 6),
        "runtime_ms": r.runtime_ms,
    })
}

pub fn complex_text(z: &Complex, digits: u32) -> String {
    let re = format_float(z.real(), digits);
    if z.imag().is_zero() {
        return re;
    }
    let im = format_float(&Float::with_val(z.prec().1, z.imag().abs_ref()), digits);
    let sign = if z.imag().is_sign_negative() { '-' } else { '+' };
    format!("{re} {sign} {im}i")
}

pub fn report_text(r: &Report) -> String {
    let mut s = format!("{}: {}\n", r.id, r.status);
    if r.status != Status::Error {
        s += &format!("  computed  {}\n", complex_text(&r.computed, r.digits));
    }
    s += &format!("  expected  {}\n", r.expected);
    if !r.abs_diff.is_nan() && r.status != Status::Error {
        s += &format!("  |diff|    {}\n", format_float(&r.abs_diff, 3));
    }
    if !r.detail.is_empty() {
        s += &format!("  {}\n", r.detail);
    }
    s += &format!("  {} digits, {} ms\n", r.digits, r.runtime_ms);
    s
}
