//! Matrix dumps for the `rep` subcommand.

use std::fmt::Write as _;

use num_complex::Complex64;
use num_traits::Zero;
use qhdeform::{
    build_deformed, build_uq_rep, ExactQh, FracHPoly, Matrix, Numeric, NumericContext, QFraction, RepSpec,
    SymbolicQ,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// One matrix entry: exact text, or a complex number.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Exact(String),
    Numeric([f64; 2]),
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedMatrix {
    pub name: &'static str,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepDump {
    pub two_j: u32,
    pub basis: &'static str,
    pub domain: String,
    pub kronecker_order: &'static str,
    pub matrices: Vec<NamedMatrix>,
}

fn cells<T>(m: &Matrix<T>, f: impl Fn(&T) -> Cell) -> Vec<Vec<Cell>>
where
    T: qhdeform::Ring,
{
    (0..m.dim()).map(|r| (0..m.dim()).map(|c| f(m.get(r, c))).collect()).collect()
}

/// `c_0 + c_1 h + ...`, each coefficient in parentheses unless it is a single term.
fn hpoly_text(p: &FracHPoly) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let text = c.to_string();
        match k {
            0 => out.push_str(&text),
            _ => {
                let _ = write!(out, "({text})*h");
                if k > 1 {
                    let _ = write!(out, "^{k}");
                }
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn fraction_cell(x: &QFraction) -> Cell {
    Cell::Exact(x.to_string())
}

fn complex_cell(z: &Complex64) -> Cell {
    // Adding 0.0 turns -0.0 into 0.0.
    Cell::Numeric([z.re + 0.0, z.im + 0.0])
}

/// Exact polynomial-basis generators and their images under the map.
pub fn exact_dump(two_j: u32) -> anyhow::Result<RepDump> {
    let g = build_uq_rep(&SymbolicQ, RepSpec::polynomial(two_j))?;
    let d = build_deformed(&ExactQh, &build_uq_rep(&ExactQh, RepSpec::polynomial(two_j))?)?;
    let hp = |m: &Matrix<FracHPoly>| cells(m, |p| Cell::Exact(hpoly_text(p)));
    Ok(RepDump {
        two_j,
        basis: "polynomial",
        domain: "exact: s = q^(1/2), {k} = (s^k - s^-k)/(s - s^-1)".into(),
        kronecker_order: "left-slow",
        matrices: vec![
            NamedMatrix { name: "J+", rows: cells(&g.jp, fraction_cell) },
            NamedMatrix { name: "J-", rows: cells(&g.jm, fraction_cell) },
            NamedMatrix { name: "K", rows: cells(&g.k_pos, fraction_cell) },
            NamedMatrix { name: "K^-1", rows: cells(&g.k_neg, fraction_cell) },
            NamedMatrix { name: "J0", rows: cells(&g.j0, fraction_cell) },
            NamedMatrix { name: "X", rows: hp(&d.xhat) },
            NamedMatrix { name: "Y", rows: hp(&d.yhat) },
            NamedMatrix { name: "H", rows: hp(&d.hhat) },
        ],
    })
}

/// Generators and their images at one numeric `(q, h)`.
pub fn numeric_dump(spec: RepSpec, ctx: &NumericContext) -> anyhow::Result<RepDump> {
    let dom = Numeric::<f64>::new(ctx);
    let g = build_uq_rep(&dom, spec)?;
    let d = build_deformed(&dom, &g)?;
    let c = |m: &Matrix<Complex64>| cells(m, complex_cell);
    Ok(RepDump {
        two_j: spec.two_j,
        basis: spec.basis.as_str(),
        domain: format!("numeric: q = {}, h = {}", ctx.q, ctx.h),
        kronecker_order: "left-slow",
        matrices: vec![
            NamedMatrix { name: "J+", rows: c(&g.jp) },
            NamedMatrix { name: "J-", rows: c(&g.jm) },
            NamedMatrix { name: "K", rows: c(&g.k_pos) },
            NamedMatrix { name: "K^-1", rows: c(&g.k_neg) },
            NamedMatrix { name: "J0", rows: c(&g.j0) },
            NamedMatrix { name: "X", rows: c(&d.xhat) },
            NamedMatrix { name: "Y", rows: c(&d.yhat) },
            NamedMatrix { name: "H", rows: c(&d.hhat) },
        ],
    })
}

/// Long format: one row per nonzero entry.
pub fn to_csv(dump: &RepDump) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["matrix", "row", "col", "value", "re", "im"])?;
    for m in &dump.matrices {
        for (r, row) in m.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let (value, re, im) = match cell {
                    Cell::Exact(s) if s == "0" => continue,
                    Cell::Exact(s) => (s.clone(), String::new(), String::new()),
                    Cell::Numeric([re, im]) if *re == 0.0 && *im == 0.0 => continue,
                    Cell::Numeric([re, im]) => (String::new(), re.to_string(), im.to_string()),
                };
                w.write_record([m.name, &r.to_string(), &c.to_string(), &value, &re, &im])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
