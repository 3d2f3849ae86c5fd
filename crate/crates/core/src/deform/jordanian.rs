//! The `q = 1` (Jordanian) limit: `U_h(sl(2))` from `sl(2)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{nilpotent_series_eval, Matrix};
use crate::report::{check, check_all, report_or_error, VerificationReport};
use crate::rep::{build_uq_rep, GeneratorSet, RepSpec};
use crate::ring::Ring;
use crate::scalar::QhDomain;
use crate::Rational;

use super::build::{build_deformed_with_alphas, half_h_jp, odd_terms};

/// `X = (2/h) artanh(hJ_+/2)`, `Y = (1 - (hJ_+/2)²)^{1/2} J_- (1 - (hJ_+/2)²)^{1/2}`, `H = J_0`.
#[derive(Clone, Debug)]
pub struct JordanianSet<E> {
    pub x: Matrix<E>,
    pub y: Matrix<E>,
    pub h: Matrix<E>,
    pub source: GeneratorSet<E>,
}

/// Fails unless `dom` sits at `q = 1`.
pub(crate) fn require_classical<D: QhDomain>(dom: &D) -> Result<()> {
    if dom.compare(&Matrix::scalar(1, dom.q()), &Matrix::identity(1)).pass {
        Ok(())
    } else {
        Err(Error::Invalid("the Jordanian limit needs q = 1".into()))
    }
}

impl<E: Ring> JordanianSet<E> {
    pub fn build<D: QhDomain<Elem = E>>(dom: &D, two_j: u32) -> Result<Self> {
        require_classical(dom)?;
        let source = build_uq_rep(dom, RepSpec::polynomial(two_j))?;
        // artanh(t) = Σ t^{2n+1}/(2n+1)
        let artanh: Vec<E> = (0..=odd_terms(source.dim()))
            .map(|n| dom.rational(&Rational::new(1.into(), (2 * n as i64 + 1).into())))
            .collect();
        let d = build_deformed_with_alphas(dom, &source, &artanh)?;
        Ok(JordanianSet { x: d.xhat, y: d.yhat, h: d.hhat, source })
    }

    pub fn label(&self) -> &str {
        &self.source.label
    }
}

fn factorial(k: usize) -> Rational {
    (1..=k).fold(Rational::from_int(1), |acc, i| acc * Rational::from_int(i as i64))
}

/// `Σ_{k in parity} (c h)^k A^k / k!` for nilpotent `A`; `parity = None` keeps every term.
pub(crate) fn exp_like<D: QhDomain>(
    dom: &D,
    a: &Matrix<D::Elem>,
    c: &D::Elem,
    parity: Option<usize>,
) -> Result<Matrix<D::Elem>> {
    let ch = dom.h().mul_ref(c);
    let mut power = D::Elem::one();
    let coeffs: Vec<D::Elem> = (0..=a.dim())
        .map(|k| {
            let keep = parity.is_none_or(|p| k % 2 == p);
            let t = if keep { power.mul_ref(&dom.rational(&(Rational::from_int(1) / factorial(k)))) } else { D::Elem::zero() };
            power = power.mul_ref(&ch);
            t
        })
        .collect();
    nilpotent_series_eval(&coeffs, a)
}

/// `e^{±hX}` as a terminating series.
pub fn exp_hx<D: QhDomain>(dom: &D, x: &Matrix<D::Elem>, sign: i64) -> Result<Matrix<D::Elem>> {
    exp_like(dom, x, &dom.int(sign), None)
}

/// `(1/h) sinh(hX) = Σ h^{2k} X^{2k+1}/(2k+1)!`, formed without dividing by `h`.
pub fn sinh_hx_over_h<D: QhDomain>(dom: &D, x: &Matrix<D::Elem>) -> Result<Matrix<D::Elem>> {
    let mut power = D::Elem::one();
    let h2 = dom.h().mul_ref(&dom.h());
    let coeffs: Vec<D::Elem> = (0..=x.dim())
        .map(|k| {
            let t = power.mul_ref(&dom.rational(&(Rational::from_int(1) / factorial(2 * k + 1))));
            power = power.mul_ref(&h2);
            t
        })
        .collect();
    Ok(x * &nilpotent_series_eval(&coeffs, &(x * x))?)
}

pub fn cosh_hx<D: QhDomain>(dom: &D, x: &Matrix<D::Elem>) -> Result<Matrix<D::Elem>> {
    exp_like(dom, x, &D::Elem::one(), Some(0))
}

/// `[H,X] = sinh(hX)/h`, `[H,Y] = -½(Y cosh hX + cosh hX Y)`, `[X,Y] = 2H`.
pub fn uh_relations<D: QhDomain>(
    dom: &D,
    x: &Matrix<D::Elem>,
    y: &Matrix<D::Elem>,
    h: &Matrix<D::Elem>,
    label: &str,
) -> Vec<VerificationReport> {
    let half = dom.rational(&Rational::new(1.into(), 2.into()));
    let eq3 = sinh_hx_over_h(dom, x).map(|s| check(dom, "[H,X] = sinh(hX)/h", "Eq3", label, &h.commutator(x), &s));
    let eq4 = cosh_hx(dom, x).map(|c| {
        let rhs = y.anticommutator(&c).scale(&(-half));
        check(dom, "[H,Y] = -(Y cosh hX + cosh hX Y)/2", "Eq4", label, &h.commutator(y), &rhs)
    });
    let eq5 = check(dom, "[X,Y] = 2H", "Eq5", label, &x.commutator(y), &h.scale(&dom.int(2)));
    vec![
        report_or_error(dom, "[H,X] = sinh(hX)/h", "Eq3", label, eq3),
        report_or_error(dom, "[H,Y] = -(Y cosh hX + cosh hX Y)/2", "Eq4", label, eq4),
        eq5,
    ]
}

/// The relations of `U_h(sl(2))`, its Casimir, and `u = ½ sinh(hX)`, on the
/// `(two_j + 1)`-dimensional representation. `dom` must be at `q = 1`.
pub fn jordanian_limit_suite<D: QhDomain>(dom: &D, two_j: u32) -> Vec<VerificationReport> {
    let label = format!("twoJ={two_j}");
    let js = match JordanianSet::build(dom, two_j) {
        Ok(js) => js,
        Err(e) => return vec![VerificationReport::errored(dom, "Jordanian construction", "Eq2", &label, &e)],
    };
    let half = dom.rational(&Rational::new(1.into(), 2.into()));
    let quarter = dom.rational(&Rational::new(1.into(), 4.into()));
    let (x, y, h) = (&js.x, &js.y, &js.h);

    let eq6 = sinh_hx_over_h(dom, x).map(|s| {
        let hs = s.scale(&dom.h());
        let c = y.anticommutator(&s).scale(&half) + (&hs * &hs).scale(&quarter) + h * h;
        let g = &js.source;
        let classical = g.jp.anticommutator(&g.jm).scale(&half) + &g.j0 * &g.j0;
        let j = Rational::new((two_j as i64).into(), 2.into());
        let eig = Matrix::scalar(g.dim(), dom.rational(&(&j * (&j + Rational::from_int(1)))));
        check_all(dom, "Jordanian Casimir", "Eq6", &label, &[(c.clone(), classical), (c, eig)])
    });
    let eq32 = sinh_hx_over_h(dom, x).and_then(|s| {
        // u = Σ v^{2n+1} at q = 1 (all P_n(1) = 1).
        let v = half_h_jp(dom, &js.source.jp);
        let ones = vec![D::Elem::one(); odd_terms(v.dim()) + 1];
        let u = &v * &nilpotent_series_eval(&ones, &(&v * &v))?;
        Ok(check(dom, "u = sinh(hX)/2", "Eq32", &label, &u, &s.scale(&dom.half_h())))
    });
    let mut out = uh_relations(dom, x, y, h, &label);
    out.push(report_or_error(dom, "Jordanian Casimir", "Eq6", &label, eq6));
    out.push(report_or_error(dom, "u = sinh(hX)/2", "Eq32", &label, eq32));
    out
}
