use crate::error::Result;
use crate::matrix::Matrix;
use crate::report::{check_all, report_or_error, VerificationReport};
use crate::rep::GeneratorSet;
use crate::scalar::QDomain;

/// `[j][j+1]` for `j = two_j / 2`.
pub fn casimir_eigenvalue<D: QDomain>(dom: &D, two_j: i64) -> Result<D::Elem> {
    Ok(dom.q_number_half(two_j)? * dom.q_number_half(two_j + 2)?)
}

/// Both forms `J_+J_- + [J_0][J_0-1]` and `J_-J_+ + [J_0][J_0+1]` of the
/// Casimir agree and equal `[j][j+1]` times the identity.
///
/// `[J_0]` is a half-integer q-number on even-dimensional representations.
pub fn casimir_check<D: QDomain>(dom: &D, g: &GeneratorSet<D::Elem>) -> VerificationReport {
    let run = || -> Result<VerificationReport> {
        let shifted = |shift: i64| {
            g.try_weight_diag(|w| Ok(dom.q_number_half(w)? * dom.q_number_half(w + shift)?))
        };
        let c1 = &(&g.jp * &g.jm) + &shifted(-2)?;
        let c2 = &(&g.jm * &g.jp) + &shifted(2)?;
        let two_j = g.weights.iter().copied().max().unwrap_or(0);
        let eig = Matrix::scalar(g.dim(), casimir_eigenvalue(dom, two_j)?);
        Ok(check_all(dom, "Casimir forms and eigenvalue", "Eq48-50", &g.label, &[(c1.clone(), c2), (c1, eig)]))
    };
    report_or_error(dom, "Casimir forms and eigenvalue", "Eq48-50", &g.label, run())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{build_uq_rep, RepSpec};
    use crate::scalar::{ClassicalQ, SymbolicQ};
    use crate::Rational;

    #[test]
    fn eigenvalues() {
        // [1/2][3/2] -> 3/4 classically.
        assert_eq!(casimir_eigenvalue(&ClassicalQ, 1).unwrap(), Rational::new(3.into(), 4.into()));
        // [1][2] = s² + s⁻².
        let e = casimir_eigenvalue(&SymbolicQ, 2).unwrap();
        assert_eq!(e, SymbolicQ.s_pow(2) + SymbolicQ.s_pow(-2));
    }

    #[test]
    fn casimir_exact() {
        for tj in 0..=6 {
            let g = build_uq_rep(&SymbolicQ, RepSpec::polynomial(tj)).unwrap();
            let r = casimir_check(&SymbolicQ, &g);
            assert!(r.pass, "{r:?}");
        }
    }
}
