//! Tensor-product representations and the three coproducts: the `U_q`
//! coproduct, the coproduct it induces on `(X̂, Ŷ, Ĥ)`, and the Jordanian one.
//!
//! Kronecker products order the basis with the left factor varying slowest.

use crate::deform::identities::deformed_suite;
use crate::deform::jordanian::{exp_hx, require_classical, uh_relations, JordanianSet};
use crate::deform::{build_deformed, DeformedSet};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::report::{check, report_or_error, VerificationReport};
use crate::rep::checks::rep_suite;
use crate::rep::{build_uq_rep, GeneratorSet, RepSpec};
use crate::ring::Ring;
use crate::scalar::{QDomain, QhDomain};

/// A pair of irreps `V_L ⊗ V_R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorRep {
    pub left: RepSpec,
    pub right: RepSpec,
}

impl TensorRep {
    pub fn new(two_j_left: u32, two_j_right: u32) -> Self {
        TensorRep { left: RepSpec::polynomial(two_j_left), right: RepSpec::polynomial(two_j_right) }
    }

    pub fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    pub fn label(&self) -> String {
        format!("twoJ={} (x) twoJ={}", self.left.two_j, self.right.two_j)
    }

    /// The permutation of basis indices exchanging the two factors.
    pub fn swap_permutation(&self) -> Vec<usize> {
        let (a, b) = (self.left.dim(), self.right.dim());
        (0..a * b).map(|i| (i % b) * a + i / b).collect()
    }
}

/// `ΔJ_± = J_± ⊗ q^{J_0} + q^{-J_0} ⊗ J_±`, `Δq^{±J_0} = q^{±J_0} ⊗ q^{±J_0}`,
/// `ΔJ_0 = J_0 ⊗ 1 + 1 ⊗ J_0`.
pub fn coproduct_uq<E: Ring>(l: &GeneratorSet<E>, r: &GeneratorSet<E>) -> GeneratorSet<E> {
    let (il, ir) = (Matrix::identity(l.dim()), Matrix::identity(r.dim()));
    let weights = l.weights.iter().flat_map(|a| r.weights.iter().map(move |b| a + b)).collect();
    GeneratorSet {
        label: format!("{} (x) {}", l.label, r.label),
        weights,
        jp: l.jp.kron(&r.k_pos) + l.k_neg.kron(&r.jp),
        jm: l.jm.kron(&r.k_pos) + l.k_neg.kron(&r.jm),
        k_pos: l.k_pos.kron(&r.k_pos),
        k_neg: l.k_neg.kron(&r.k_neg),
        j0: l.j0.kron(&ir) + il.kron(&r.j0),
    }
}

/// The opposite coproduct `τ∘Δ(J_+) = q^{J_0} ⊗ J_+ + J_+ ⊗ q^{-J_0}` on `V_L ⊗ V_R`,
/// obtained by conjugating `Δ(J_+)` on `V_R ⊗ V_L` with the swap.
pub fn flipped_jp<E: Ring>(t: TensorRep, l: &GeneratorSet<E>, r: &GeneratorSet<E>) -> Matrix<E> {
    let reversed = coproduct_uq(r, l);
    let swapped = TensorRep { left: t.right, right: t.left };
    reversed.jp.permuted(&swapped.swap_permutation())
}

/// The deformed generators of a tensor product: the map applied to `ΔJ_±`.
pub fn induced_coproduct_qh<D: QhDomain>(dom: &D, tensor: &GeneratorSet<D::Elem>) -> Result<DeformedSet<D::Elem>> {
    build_deformed(dom, tensor)
}

fn retag(mut r: VerificationReport, equation: &str) -> VerificationReport {
    r.equation = equation.to_string();
    r
}

fn is_classical<D: QDomain>(dom: &D) -> bool {
    dom.compare(&Matrix::scalar(1, dom.q()), &Matrix::identity(1)).pass
}

/// The `U_q` coproduct is an algebra map (the tensor generators satisfy the
/// defining relations), keeps `ΔJ_+` nilpotent of index `dim_L + dim_R - 1`,
/// and is non-cocommutative exactly when `q != 1`.
pub fn uq_coproduct_suite<D: QDomain>(dom: &D, t: TensorRep) -> Vec<VerificationReport> {
    let label = t.label();
    let built = build_uq_rep(dom, t.left).and_then(|l| Ok((build_uq_rep(dom, t.right)?, l)));
    let (r, l) = match built {
        Ok(x) => x,
        Err(e) => return vec![VerificationReport::errored(dom, "U_q coproduct", "Eq8", &label, &e)],
    };
    let g = coproduct_uq(&l, &r);
    let mut out: Vec<VerificationReport> = rep_suite(dom, &g)
        .into_iter()
        .map(|rep| {
            let eq = format!("Eq8/{}", rep.equation);
            retag(rep, &eq)
        })
        .collect();

    let index = (l.dim() + r.dim() - 1) as u32;
    let zero = Matrix::zeros(g.dim());
    let mut nil = check(dom, "nilpotency of coproduct J_+", "Eq8", &label, &g.jp.pow(index), &zero);
    if dom.compare(&g.jp.pow(index - 1), &zero).pass {
        nil.pass = false;
        nil.note = Some("nilpotency index smaller than dim_L + dim_R - 1".into());
    }
    out.push(nil);

    // ΔJ_+ - τ∘ΔJ_+ = J_+ ⊗ (K - K⁻¹) - (K - K⁻¹) ⊗ J_+, which vanishes only at q = 1.
    let flipped = flipped_jp(t, &l, &r);
    let dl = &l.k_pos - &l.k_neg;
    let dr = &r.k_pos - &r.k_neg;
    let expected = l.jp.kron(&dr) - dl.kron(&r.jp);
    let mut flip = check(dom, "coproduct J_+ minus its flip", "Eq8", &label, &(&g.jp - &flipped), &expected);
    let cocommutative = dom.compare(&expected, &Matrix::zeros(g.dim())).pass;
    // A trivial factor makes every coproduct cocommutative.
    let trivial = t.left.two_j == 0 || t.right.two_j == 0;
    if cocommutative != (is_classical(dom) || trivial) {
        flip.pass = false;
    }
    flip.note = Some(if cocommutative { "cocommutative".into() } else { "non-cocommutative".into() });
    out.push(flip);
    out
}

/// The induced coproduct of `U_{q,h}`: all deformed relations hold on the
/// tensor product, and `ΔĤ = ΔJ_0`.
pub fn qh_coproduct_suite<D: QhDomain>(dom: &D, t: TensorRep) -> Vec<VerificationReport> {
    let label = t.label();
    let run = || -> Result<(GeneratorSet<D::Elem>, GeneratorSet<D::Elem>, DeformedSet<D::Elem>)> {
        let l = build_uq_rep(dom, t.left)?;
        let r = build_uq_rep(dom, t.right)?;
        let d = induced_coproduct_qh(dom, &coproduct_uq(&l, &r))?;
        Ok((l, r, d))
    };
    let (l, r, d) = match run() {
        Ok(x) => x,
        Err(e) => return vec![VerificationReport::errored(dom, "induced coproduct", "Eq52-54", &label, &e)],
    };
    let mut out: Vec<VerificationReport> = deformed_suite(dom, &d)
        .into_iter()
        .map(|rep| {
            let eq = format!("Eq52-54/{}", rep.equation);
            retag(rep, &eq)
        })
        .collect();
    let dj0 = l.j0.kron(&Matrix::identity(r.dim())) + Matrix::identity(l.dim()).kron(&r.j0);
    out.push(check(dom, "coproduct of H equals coproduct of J_0", "Eq54", &label, &d.hhat, &dj0));
    out
}

/// `ΔX = X ⊗ 1 + 1 ⊗ X`, `ΔY = Y ⊗ e^{hX} + e^{-hX} ⊗ Y`, `ΔH = H ⊗ e^{hX} + e^{-hX} ⊗ H`.
pub fn jordanian_coproduct<D: QhDomain>(
    dom: &D,
    l: &JordanianSet<D::Elem>,
    r: &JordanianSet<D::Elem>,
) -> Result<(Matrix<D::Elem>, Matrix<D::Elem>, Matrix<D::Elem>)> {
    let (il, ir) = (Matrix::identity(l.x.dim()), Matrix::identity(r.x.dim()));
    let ep = exp_hx(dom, &r.x, 1)?;
    let em = exp_hx(dom, &l.x, -1)?;
    let dx = l.x.kron(&ir) + il.kron(&r.x);
    let dy = l.y.kron(&ep) + em.kron(&r.y);
    let dh = l.h.kron(&ep) + em.kron(&r.h);
    Ok((dx, dy, dh))
}

/// The Jordanian coproduct respects the `U_h` relations on the tensor product.
/// `dom` must be at `q = 1`.
pub fn jordanian_coproduct_check<D: QhDomain>(dom: &D, t: TensorRep) -> Vec<VerificationReport> {
    let label = t.label();
    let run = || -> Result<_> {
        require_classical(dom)?;
        let l = JordanianSet::build(dom, t.left.two_j)?;
        let r = JordanianSet::build(dom, t.right.two_j)?;
        jordanian_coproduct(dom, &l, &r)
    };
    match run() {
        Ok((dx, dy, dh)) => uh_relations(dom, &dx, &dy, &dh, &label)
            .into_iter()
            .map(|rep| {
                let eq = format!("Eq55-57/{}", rep.equation);
                retag(rep, &eq)
            })
            .collect(),
        Err(e) => vec![report_or_error(dom, "Jordanian coproduct", "Eq55-57", &label, Err(e))],
    }
}
