//! Cauchy-Kovalevskaya extension and the tower basis of Dunkl monogenics.

use super::label::{BasisLabel, MultiIndex};
use crate::algebra::rational::{factorial, pochhammer};
use crate::algebra::{Blade, Monomial, ParameterSet, Rational, SpinorPolynomial, Subset};
use crate::error::{Error, Result};
use crate::operators::clifford::{dirac_d, position_x};
use crate::operators::Evaluator;

fn check_index(params: &ParameterSet, j: usize) -> Result<()> {
    if j < 2 || j > params.n() {
        return Err(Error::IndexOutOfRange { index: j, n: params.n() });
    }
    Ok(())
}

fn half_shift(params: &ParameterSet, j: usize) -> Result<Rational> {
    let a = params.mu_i(j) + &Rational::new(1, 2);
    if !a.is_positive() {
        return Err(Error::VanishingDenominator(format!("(mu_{j} + 1/2)_l with mu_{j} = {}", params.mu_i(j))));
    }
    Ok(a)
}

/// Lifts a homogeneous `p` in `x_1, ..., x_{j-1}` that is monogenic for
/// `D_{[j-1]}` to a null solution of `D_{[j]}`:
///
/// `CK(p) = sum_l x_j^{2l} D^{2l} p / (2^{2l} l! (mu_j+1/2)_l)
///        + e_j x_j sum_l x_j^{2l} D^{2l+1} p / (2^{2l+1} l! (mu_j+1/2)_{l+1})`
///
/// with `D = D_{[j-1]}`.
pub fn ck_extend(params: &ParameterSet, p: &SpinorPolynomial, j: usize) -> Result<SpinorPolynomial> {
    check_index(params, j)?;
    if p.dim() != params.n() {
        return Err(Error::DimensionMismatch { expected: params.n(), found: p.dim() });
    }
    if let Some(i) = (j..=params.n()).find(|&i| p.depends_on(i)) {
        return Err(Error::ForbiddenVariable(i));
    }
    let k = match p.homogeneous_degree() {
        Some(k) => k,
        None if p.is_zero() => return Ok(p.clone()),
        None => return Err(Error::NotHomogeneous),
    };
    let a = half_shift(params, j)?;
    let d = dirac_d(params, Subset::prefix(j - 1));
    let mut ev = Evaluator::new();
    let mut powers = vec![p.clone()];
    for _ in 0..k {
        let next = ev.apply(&d, powers.last().unwrap())?;
        if next.is_zero() {
            break;
        }
        powers.push(next);
    }
    let ej = Blade::generator(j);
    let mut out = SpinorPolynomial::zero(p.dim());
    for (m, dp) in powers.iter().enumerate() {
        let l = (m / 2) as u32;
        let (den, lifted) = if m % 2 == 0 {
            (
                Rational::from(1i64 << (2 * l)) * factorial(l) * pochhammer(&a, l),
                x_power(dp, j, 2 * l)?,
            )
        } else {
            (
                Rational::from(1i64 << (2 * l + 1)) * factorial(l) * pochhammer(&a, l + 1),
                x_power(dp, j, 2 * l + 1)?.clifford_left(ej)?,
            )
        };
        out.add_scaled(&den.recip()?, &lifted);
    }
    Ok(out)
}

fn x_power(p: &SpinorPolynomial, j: usize, e: u32) -> Result<SpinorPolynomial> {
    let mut out = p.clone();
    for _ in 0..e {
        out = out.mul_coordinate(j)?;
    }
    Ok(out)
}

fn check_label(params: &ParameterSet, label: &BasisLabel) -> Result<()> {
    if label.index.n() != params.n() {
        return Err(Error::DimensionMismatch { expected: params.n(), found: label.index.n() });
    }
    if !label.s.fits(params.n()) {
        return Err(Error::IndexOutOfRange { index: label.s.max_index(), n: params.n() });
    }
    Ok(())
}

/// `Psi_j v_s = CK_n x_{[n-1]}^{j_{n-1}} CK_{n-1} ... CK_2 x_1^{j_1} v_s`.
pub fn basis_psi(params: &ParameterSet, label: &BasisLabel) -> Result<SpinorPolynomial> {
    check_label(params, label)?;
    tower(params, &label.index, Rational::ONE, label.s)
}

/// `Psi_j e_1^{j_1} v_s`, i.e. the tower started from `x_{[1]}^{j_1} v_s`.
///
/// For fixed `s` these span a subspace preserved by every `Gamma_A`; the
/// span of the `Psi_j v_s` alone is not (`Gamma_{13}` sends `Psi_j v_s`
/// into `Psi_{j'} e_1 v_s` when `j_1` changes parity).
pub fn sector_psi(params: &ParameterSet, label: &BasisLabel) -> Result<SpinorPolynomial> {
    check_label(params, label)?;
    let word: Vec<usize> = std::iter::repeat(1)
        .take(label.index.get(1) as usize)
        .chain(label.s.indices())
        .collect();
    let (sign, blade) = crate::algebra::blade::clifford_product_of(&word);
    tower(params, &label.index, Rational::from(sign), blade)
}

fn tower(params: &ParameterSet, j: &MultiIndex, c: Rational, start_blade: Blade) -> Result<SpinorPolynomial> {
    let n = params.n();
    let start = Monomial::one(n).with_exponent(1, j.get(1))?;
    let mut p = SpinorPolynomial::term(n, start, start_blade, c);
    p = ck_extend(params, &p, 2)?;
    let mut ev = Evaluator::new();
    for l in 3..=n {
        let x = position_x(Subset::prefix(l - 1));
        for _ in 0..j.get(l - 1) {
            p = ev.apply(&x, &p)?;
        }
        p = ck_extend(params, &p, l)?;
    }
    Ok(p)
}

/// The basis of `M_k(R^n) v_s` in label order.
pub fn basis(params: &ParameterSet, k: u32, s: Blade) -> Result<Vec<(MultiIndex, SpinorPolynomial)>> {
    labelled(params, k, s, basis_psi)
}

/// The invariant sector basis `Psi_j e_1^{j_1} v_s` in label order.
pub fn sector_basis(params: &ParameterSet, k: u32, s: Blade) -> Result<Vec<(MultiIndex, SpinorPolynomial)>> {
    labelled(params, k, s, sector_psi)
}

fn labelled(
    params: &ParameterSet,
    k: u32,
    s: Blade,
    build: fn(&ParameterSet, &BasisLabel) -> Result<SpinorPolynomial>,
) -> Result<Vec<(MultiIndex, SpinorPolynomial)>> {
    MultiIndex::all(params.n(), k)
        .into_iter()
        .map(|j| {
            let p = build(params, &BasisLabel::new(j.clone(), s))?;
            Ok((j, p))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn params() -> ParameterSet {
        ParameterSet::new(vec![q(1, 2), q(1, 3), q(1, 4)]).unwrap()
    }

    #[test]
    fn first_extension_example() {
        let p = params();
        let x1 = SpinorPolynomial::from_parts(&[1, 0, 0], Blade::UNIT, Rational::ONE).unwrap();
        let got = ck_extend(&p, &x1, 2).unwrap();
        // x1 + (1 + 2 mu1)/(1 + 2 mu2) x2 e2e1, and e2e1 = -e1e2
        let e12 = Blade::from_indices(&[1, 2]).unwrap();
        let mut want = x1.clone();
        want.add_scaled(&q(-6, 5), &SpinorPolynomial::from_parts(&[0, 1, 0], e12, Rational::ONE).unwrap());
        assert_eq!(got, want);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = params();
        let x2 = SpinorPolynomial::from_parts(&[0, 1, 0], Blade::UNIT, Rational::ONE).unwrap();
        assert_eq!(ck_extend(&p, &x2, 2), Err(Error::ForbiddenVariable(2)));
        let mixed = &SpinorPolynomial::from_parts(&[1, 0, 0], Blade::UNIT, Rational::ONE).unwrap()
            + &SpinorPolynomial::one(3);
        assert_eq!(ck_extend(&p, &mixed, 2), Err(Error::NotHomogeneous));
        assert!(ck_extend(&p, &SpinorPolynomial::one(3), 4).is_err());
    }

    #[test]
    fn basis_is_monogenic() {
        let p = params();
        let d = dirac_d(&p, Subset::prefix(3));
        for k in 0..=3 {
            for s in [Blade::UNIT, Blade::from_indices(&[2, 3]).unwrap()] {
                for (j, psi) in basis(&p, k, s).unwrap() {
                    assert_eq!(psi.homogeneous_degree(), if psi.is_zero() { None } else { Some(k) });
                    assert!(!psi.is_zero(), "{j}");
                    assert!(d.apply(&psi).unwrap().is_zero(), "{j} {s}");
                }
            }
        }
    }

    #[test]
    fn right_blade_factor() {
        let p = params();
        let e2 = Blade::generator(2);
        let e1 = Blade::generator(1);
        for (j, psi) in sector_basis(&p, 3, e2).unwrap() {
            let mut want = basis_psi(&p, &BasisLabel::new(j.clone(), Blade::UNIT)).unwrap();
            for _ in 0..j.get(1) {
                want = want.clifford_right(e1).unwrap();
            }
            assert_eq!(psi, want.clifford_right(e2).unwrap(), "{j}");
        }
        for (j, psi) in basis(&p, 2, Blade::UNIT).unwrap() {
            let with = basis_psi(&p, &BasisLabel::new(j, e2)).unwrap();
            assert_eq!(with, psi.clifford_right(e2).unwrap());
        }
    }
}
