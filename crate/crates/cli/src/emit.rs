//! Text renderers for decompositions.

use std::fmt::Write;

use waring_core::exactnum::BigRational;
use waring_core::waring::json::DecompositionJson;
use waring_core::{Decomposition, Monomial};

/// How a root of unity `ζ_N^e` collapses for display.
enum Root {
    One,
    MinusOne,
    Zeta(u64),
}

fn classify(order: u64, e: u64) -> Root {
    let e = e % order;
    if e == 0 {
        Root::One
    } else if 2 * e == order {
        Root::MinusOne
    } else {
        Root::Zeta(e)
    }
}

fn user_var(dec: &Decomposition, k: usize) -> usize {
    dec.raw_variable_map()[k] + 1
}

/// `(sign is negative, magnitude, leftover root)` for `r ζ^e`.
fn split_gamma(r: &BigRational, order: u64, e: u64) -> (bool, BigRational, Option<u64>) {
    let neg = r < &BigRational::from_integer(0.into());
    let mag = if neg { -r.clone() } else { r.clone() };
    match classify(order, e) {
        Root::One => (neg, mag, None),
        Root::MinusOne => (!neg, mag, None),
        Root::Zeta(e) => (neg, mag, Some(e)),
    }
}

fn plain_form(dec: &Decomposition, exps: &[u64]) -> String {
    let n = dec.cyclotomic_order;
    let mut s = String::new();
    for (k, &e) in exps.iter().enumerate() {
        let var = format!("x{}", user_var(dec, k));
        let (neg, body) = match classify(n, e) {
            Root::One => (false, var),
            Root::MinusOne => (true, var),
            Root::Zeta(e) => (false, format!("zeta_{n}^{e}*{var}")),
        };
        match (k, neg) {
            (0, false) => s.push_str(&body),
            (0, true) => write!(s, "-{body}").unwrap(),
            (_, false) => write!(s, " + {body}").unwrap(),
            (_, true) => write!(s, " - {body}").unwrap(),
        }
    }
    s
}

/// Line-oriented rendering: header, then one `±γ * (form)^d` per line.
pub fn plain(dec: &Decomposition) -> String {
    let n = dec.cyclotomic_order;
    let mut out = String::new();
    writeln!(
        out,
        "{} = sum of {} powers over Q(zeta_{n})",
        dec.monomial.to_raw(),
        dec.rank()
    )
    .unwrap();
    for t in &dec.terms {
        let (neg, mag, root) = split_gamma(&t.gamma_rational, n, t.gamma_zeta_exp);
        let sign = if neg { '-' } else { '+' };
        let root = root.map(|e| format!("*zeta_{n}^{e}")).unwrap_or_default();
        writeln!(
            out,
            "{sign}{}/{}{root} * ({})^{}",
            mag.numer(),
            mag.denom(),
            plain_form(dec, &t.form_exponents),
            dec.degree()
        )
        .unwrap();
    }
    out
}

fn latex_monomial(m: &Monomial) -> String {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| match e {
            1 => format!("x_{{{}}}", i + 1),
            _ => format!("x_{{{}}}^{{{e}}}", i + 1),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_rational(r: &BigRational) -> String {
    if r.denom() == &1.into() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_form(dec: &Decomposition, exps: &[u64]) -> String {
    let n = dec.cyclotomic_order;
    let mut s = String::new();
    for (k, &e) in exps.iter().enumerate() {
        let var = format!("x_{{{}}}", user_var(dec, k));
        let (neg, body) = match classify(n, e) {
            Root::One => (false, var),
            Root::MinusOne => (true, var),
            Root::Zeta(e) => (false, format!("\\zeta_{{{n}}}^{{{e}}} {var}")),
        };
        match (k, neg) {
            (0, false) => s.push_str(&body),
            (0, true) => write!(s, "-{body}").unwrap(),
            (_, false) => write!(s, " + {body}").unwrap(),
            (_, true) => write!(s, " - {body}").unwrap(),
        }
    }
    s
}

/// Math-mode body `M = γ_1 (L_1)^d ± ...`.
pub fn latex(dec: &Decomposition) -> String {
    let n = dec.cyclotomic_order;
    let d = dec.degree();
    let mut out = format!("{} =", latex_monomial(&dec.monomial.to_raw()));
    for (j, t) in dec.terms.iter().enumerate() {
        let (neg, mag, root) = split_gamma(&t.gamma_rational, n, t.gamma_zeta_exp);
        let sign = match (j, neg) {
            (0, false) => " ",
            (0, true) => " -",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let mut coeff = String::new();
        if mag != BigRational::from_integer(1.into()) || root.is_some() {
            coeff.push_str(&latex_rational(&mag));
        }
        if let Some(e) = root {
            write!(coeff, "\\zeta_{{{n}}}^{{{e}}}").unwrap();
        }
        write!(
            out,
            "{sign}{coeff}\\left({}\\right)^{{{d}}}",
            latex_form(dec, &t.form_exponents)
        )
        .unwrap();
    }
    out.push('\n');
    out
}

pub fn json(dec: &Decomposition, input: &str) -> String {
    let doc = DecompositionJson::from_decomposition(dec, input);
    let mut s = serde_json::to_string_pretty(&doc).expect("decomposition serializes");
    s.push('\n');
    s
}
