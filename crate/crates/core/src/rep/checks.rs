//! Checks of the `U_q(sl(2))` relations on generator matrices.

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{check, check_all, VerificationReport};
use crate::scalar::{Numeric, QDomain};

use super::generators::{build_uq_rep, Basis, GeneratorSet, RepSpec};

/// `[J_0, J_±] = ±J_±`, `[J_+, J_-] = [2J_0]`, `q^{J_0} q^{-J_0} = 1`.
pub fn verify_uq_relations<D: QDomain>(dom: &D, g: &GeneratorSet<D::Elem>) -> VerificationReport {
    let id = Matrix::identity(g.dim());
    check_all(
        dom,
        "U_q defining relations",
        "Eq7",
        &g.label,
        &[
            (g.j0.commutator(&g.jp), g.jp.clone()),
            (g.j0.commutator(&g.jm), -g.jm.clone()),
            (g.jp.commutator(&g.jm), g.q_two_j0(dom)),
            (&g.k_pos * &g.k_neg, id),
        ],
    )
}

/// `q^{±J_0} J_+ q^{∓J_0} = q^{±1} J_+` and `q^{J_0} J_- q^{-J_0} = q^{-1} J_-`.
pub fn verify_eq25_conjugation<D: QDomain>(dom: &D, g: &GeneratorSet<D::Elem>) -> VerificationReport {
    let q = dom.q();
    let qi = dom.q_inv();
    check_all(
        dom,
        "q^{J0} conjugation of ladder operators",
        "Eq25",
        &g.label,
        &[
            (&(&g.k_pos * &g.jp) * &g.k_neg, g.jp.scale(&q)),
            (&(&g.k_neg * &g.jp) * &g.k_pos, g.jp.scale(&qi)),
            (&(&g.k_pos * &g.jm) * &g.k_neg, g.jm.scale(&qi)),
        ],
    )
}

/// `(q - q⁻¹)[J_+^p, J_-] = [p](q^{J_0} J_+^{p-1} q^{J_0} - q^{-J_0} J_+^{p-1} q^{-J_0})`
/// for every `p = 1..=dim`.
pub fn verify_power_identity<D: QDomain>(dom: &D, g: &GeneratorSet<D::Elem>) -> VerificationReport {
    let powers = g.jp.powers(g.dim() + 1);
    let c = dom.q_minus_qinv();
    let pairs: Vec<_> = (1..=g.dim())
        .map(|p| {
            let lhs = powers[p].commutator(&g.jm).scale(&c);
            let prev = &powers[p - 1];
            let rhs = (&(&g.k_pos * prev) * &g.k_pos)
                .sub_m(&(&(&g.k_neg * prev) * &g.k_neg))
                .scale(&dom.q_integer(p as i64));
            (lhs, rhs)
        })
        .collect();
    check_all(dom, "commutator of J_+^p with J_-", "Eq9", &g.label, &pairs)
}

fn q_factorial_num<F: Float + std::fmt::Debug + Send + Sync>(
    dom: &Numeric<F>,
    n: i64,
) -> Complex<F> {
    (1..=n).fold(Complex::new(F::one(), F::zero()), |acc, k| acc * dom.q_integer(k))
}

/// The closed form of `J_+^p` in the symmetric basis:
/// `J_+^p e_m = ([j-m]! [j+m+p]! / ([j+m]! [j-m-p]!))^{1/2} e_{m+p}`.
pub fn power_action_matrix<F: Float + std::fmt::Debug + Send + Sync>(
    dom: &Numeric<F>,
    two_j: u32,
    p: usize,
) -> Result<Matrix<Complex<F>>> {
    let spec = RepSpec::symmetric(two_j);
    let dim = spec.dim();
    let tj = two_j as i64;
    let mut out = Matrix::zeros(dim);
    for (i, tm) in spec.weights().into_iter().enumerate() {
        let (jpm, jmm) = ((tj + tm) / 2, (tj - tm) / 2);
        let p = p as i64;
        if jmm - p < 0 {
            continue;
        }
        let num = q_factorial_num(dom, jmm) * q_factorial_num(dom, jpm + p);
        let den = q_factorial_num(dom, jpm) * q_factorial_num(dom, jmm - p);
        let v = dom.sqrt(&(num / den)).ok_or(Error::SymmetricBasisRequiresNumeric)?;
        out.set(i - p as usize, i, v);
    }
    Ok(out)
}

/// Compares the matrix power `J_+^p` with its closed form.
pub fn power_action_check<F: Float + std::fmt::Debug + Send + Sync>(
    dom: &Numeric<F>,
    two_j: u32,
    p: usize,
) -> Result<VerificationReport> {
    let g = build_uq_rep(dom, RepSpec::symmetric(two_j))?;
    let rhs = power_action_matrix(dom, two_j, p)?;
    Ok(check(dom, &format!("J_+^{p} basis action"), "Eq41", &g.label, &g.jp.pow(p as u32), &rhs))
}

/// All words of length `1..=max_len` in the given letters, as index lists.
fn words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..letters).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Shows the polynomial and symmetric bases are equivalent: an explicit
/// diagonal similarity maps one generator set onto the other, and traces of
/// all words of length `<= 4` in `J_±, q^{±J_0}` agree.
pub fn basis_equivalence_check<F: Float + std::fmt::Debug + Send + Sync>(
    dom: &Numeric<F>,
    two_j: u32,
) -> Result<VerificationReport> {
    let poly = build_uq_rep(dom, RepSpec::polynomial(two_j))?;
    let sym = build_uq_rep(dom, RepSpec::symmetric(two_j))?;
    debug_assert_eq!(sym.label, poly.label);
    // S = D P D⁻¹ with D = diag(d_i): S_{i-1,i} = d_{i-1} / d_i.
    let dim = poly.dim();
    let mut d = vec![Complex::new(F::one(), F::zero()); dim];
    for i in 1..dim {
        let s = *sym.jp.get(i - 1, i);
        if s.norm() == F::zero() {
            return Err(Error::NonGenericQ { index: i as i64 });
        }
        d[i] = d[i - 1] / s;
    }
    let dm = Matrix::diag(d.clone());
    let dinv = Matrix::diag(d.iter().map(|x| x.inv()).collect());
    let conj = |m: &Matrix<Complex<F>>| &(&dm * m) * &dinv;
    let mut pairs = vec![
        (conj(&poly.jp), sym.jp.clone()),
        (conj(&poly.jm), sym.jm.clone()),
        (conj(&poly.k_pos), sym.k_pos.clone()),
    ];
    let gens_p = [&poly.jp, &poly.jm, &poly.k_pos, &poly.k_neg];
    let gens_s = [&sym.jp, &sym.jm, &sym.k_pos, &sym.k_neg];
    let product = |gens: &[&Matrix<Complex<F>>; 4], w: &[usize]| {
        w.iter().fold(Matrix::identity(dim), |acc, &l| &acc * gens[l])
    };
    let (tp, ts): (Vec<_>, Vec<_>) = words(4, 4)
        .iter()
        .map(|w| (product(&gens_p, w).trace(), product(&gens_s, w).trace()))
        .unzip();
    pairs.push((Matrix::diag(tp), Matrix::diag(ts)));
    Ok(check_all(dom, "polynomial/symmetric basis equivalence", "Eq39", &poly.label, &pairs))
}

/// Runs the relation checks of a single representation.
pub fn rep_suite<D: QDomain>(dom: &D, g: &GeneratorSet<D::Elem>) -> Vec<VerificationReport> {
    vec![verify_uq_relations(dom, g), verify_eq25_conjugation(dom, g), verify_power_identity(dom, g)]
}

impl Basis {
    pub fn as_str(&self) -> &'static str {
        match self {
            Basis::Polynomial => "polynomial",
            Basis::Symmetric => "symmetric",
        }
    }
}
