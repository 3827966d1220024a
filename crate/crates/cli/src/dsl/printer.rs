use std::fmt::Write;

use super::ast::{Expr, TermFile};

/// Canonical source text; parsing it gives back the same structure.
pub fn print_file(file: &TermFile) -> String {
    let mut out = String::new();
    for (i, d) in file.definitions.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "{} \"{}\" {{", d.kind.keyword(), d.name);
        for b in &d.bindings {
            let _ = writeln!(out, "  {} = {};", b.name, print_expr(&b.value));
        }
        out.push_str("}\n");
    }
    out
}

pub fn print_expr(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e, 0);
    s
}

// binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(_) | Expr::Name(_) | Expr::Call(..) => 5,
    }
}

fn write_expr(out: &mut String, e: &Expr, min: u8) {
    let paren = level(e) < min;
    if paren {
        out.push('(');
    }
    match e {
        Expr::Int(n) => {
            let _ = write!(out, "{n}");
        }
        Expr::Name(s) => out.push_str(s),
        Expr::Call(f, args) => {
            out.push_str(f.name());
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(out, a, 0);
            }
            out.push(')');
        }
        Expr::Neg(a) => {
            out.push('-');
            write_expr(out, a, 3);
        }
        // left-associative: the right operand needs one level more
        Expr::Add(a, b) => binary(out, a, " + ", b, 1),
        Expr::Sub(a, b) => binary(out, a, " - ", b, 1),
        Expr::Mul(a, b) => binary(out, a, "*", b, 2),
        Expr::Div(a, b) => binary(out, a, "/", b, 2),
        Expr::Pow(a, k) => {
            write_expr(out, a, 5);
            let _ = write!(out, "^{k}");
        }
    }
    if paren {
        out.push(')');
    }
}

fn binary(out: &mut String, a: &Expr, op: &str, b: &Expr, lvl: u8) {
    write_expr(out, a, lvl);
    out.push_str(op);
    write_expr(out, b, lvl + 1);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn reprint(src: &str) -> String {
        let f = parse(&format!("term \"a\" {{ T = {src}; }}")).unwrap();
        print_expr(&f.definitions[0].bindings[0].value)
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(reprint("(n + 1)*k"), "(n + 1)*k");
        assert_eq!(reprint("n - (k - 1)"), "n - (k - 1)");
        assert_eq!(reprint("(n - k) - 1"), "n - k - 1");
        assert_eq!(reprint("n/(k*2)"), "n/(k*2)");
        assert_eq!(reprint("(-n)^2"), "(-n)^2");
        assert_eq!(reprint("-n^2"), "-n^2");
        assert_eq!(reprint("poch(1/2, n)^-1"), "poch(1/2, n)^-1");
    }
}
