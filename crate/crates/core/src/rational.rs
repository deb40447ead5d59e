//! Elements of `F(z)` and `F(z)(s)` as quotients of polynomials.
//!
//! Normalization: the denominator is primitive with integer coefficients
//! and a positive leading coefficient; any rational factor lives in the
//! numerator. Common monomial factors and exact quotients are always
//! cancelled. A full gcd cancellation runs only once the combined term count
//! exceeds the space's gcd threshold, or on demand via [`RationalFunction::reduced`].
//! Equality is decided by cross-multiplication and does not depend on how far
//! a value has been reduced.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gcd::gcd;
use crate::poly::{Coeff, Monomial, Polynomial};
use crate::space::ParamSpace;

#[derive(Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        num.space().check(den.space())?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            let one = Polynomial::one(num.space());
            return RationalFunction { num, den: one };
        }
        let (dc, den) = den.normalize_unit();
        let mut num = num.scale(&dc.recip());
        let mut den = den;
        if den.as_constant().is_none() {
            if let Some(m) = common_monomial(&num, &den) {
                num = num.div_exact(&m).expect("monomial divides every term");
                den = den.div_exact(&m).expect("monomial divides every term");
            }
        }
        if den.as_constant().is_none() {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = Polynomial::one(num.space());
            } else if num.num_terms() + den.num_terms() > num.space().gcd_threshold() {
                let g = gcd(&num, &den);
                if !g.is_one() {
                    num = num.div_exact(&g).expect("gcd divides numerator");
                    den = den.div_exact(&g).expect("gcd divides denominator");
                    let (dc, d) = den.normalize_unit();
                    num = num.scale(&dc.recip());
                    den = d;
                }
            }
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let one = Polynomial::one(p.space());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(space: &ParamSpace) -> Self {
        Self::from_poly(Polynomial::zero(space))
    }

    pub fn one(space: &ParamSpace) -> Self {
        Self::from_poly(Polynomial::one(space))
    }

    pub fn from_int(space: &ParamSpace, k: i64) -> Self {
        Self::from_poly(Polynomial::from_int(space, k))
    }

    pub fn constant(space: &ParamSpace, c: Coeff) -> Self {
        Self::from_poly(Polynomial::constant(space, c))
    }

    pub fn space(&self) -> &ParamSpace {
        self.num.space()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// Exact zero test: the numerator's canonical form is empty.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        !self.is_zero() && self.num == self.den
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// True when the value does not depend on `s` (d/ds vanishes).
    pub fn is_s_free(&self) -> bool {
        if self.num.is_s_free() && self.den.is_s_free() {
            return true;
        }
        let s = self.space().s_index();
        let lhs = &self.num.derivative(s) * &self.den;
        let rhs = &self.num * &self.den.derivative(s);
        lhs == rhs
    }

    /// A unit of `F(z)[s]`: nonzero and free of `s`.
    pub fn is_unit_in_s(&self) -> bool {
        !self.is_zero() && self.is_s_free()
    }

    /// Fully cancels the common factor of numerator and denominator.
    pub fn reduced(&self) -> Self {
        if self.is_zero() || self.den.as_constant().is_some() {
            return self.clone();
        }
        let g = gcd(&self.num, &self.den);
        if g.is_one() {
            return self.clone();
        }
        let num = self.num.div_exact(&g).expect("gcd divides numerator");
        let den = self.den.div_exact(&g).expect("gcd divides denominator");
        let (dc, den) = den.normalize_unit();
        RationalFunction {
            num: num.scale(&dc.recip()),
            den,
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.space().check(rhs.space())?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.space().check(rhs.space())?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.space().check(rhs.space())?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.space().check(rhs.space())?;
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalFunction {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Exact value at a full assignment of the space's variables (`s` last).
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.evaluate(point)? / d)
    }

    /// Evaluates with variables looked up by name.
    pub fn evaluate_named(&self, values: &[(&str, Coeff)]) -> Result<Coeff> {
        let sp = self.space();
        let mut point: Vec<Option<Coeff>> = vec![None; sp.nvars()];
        for (name, val) in values {
            let i = sp
                .index_of(name)
                .ok_or_else(|| Error::InvalidSpace(format!("unknown variable `{name}`")))?;
            point[i] = Some(val.clone());
        }
        let got = point.iter().filter(|p| p.is_some()).count();
        let point: Option<Vec<Coeff>> = point.into_iter().collect();
        match point {
            Some(p) => self.evaluate(&p),
            None => Err(Error::PointArity {
                expected: sp.nvars(),
                got,
            }),
        }
    }

    /// Partial substitution of variables (by index).
    pub fn substitute(&self, values: &[(usize, Coeff)]) -> Result<Self> {
        let den = self.den.substitute(values);
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(Self::normalize(self.num.substitute(values), den))
    }
}

/// Largest monomial dividing every term of both arguments, if nontrivial.
fn common_monomial(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let nvars = a.space().nvars();
    let mut min = vec![u32::MAX; nvars];
    for (m, _) in a.terms().chain(b.terms()) {
        for (lo, &e) in min.iter_mut().zip(m.exponents()) {
            *lo = (*lo).min(e);
        }
    }
    if min.iter().all(|&e| e == 0 || e == u32::MAX) {
        return None;
    }
    let exps = min.into_iter().map(|e| if e == u32::MAX { 0 } else { e }).collect();
    Some(Polynomial::monomial(a.space(), Monomial::from_exponents(exps), Coeff::one()))
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.space() != other.space() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        (&self.num * &other.den) == (&other.num * &self.den)
    }
}

impl Eq for RationalFunction {}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.as_constant().is_some() || rhs.den.as_constant().is_some() {
            return RationalFunction::normalize(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        // a/b + c/d = (a·(d/g) + c·(b/g)) / (b·(d/g)) with g = gcd(b, d)
        let g = gcd(&self.den, &rhs.den);
        let bg = self.den.div_exact(&g).expect("gcd divides");
        let dg = rhs.den.div_exact(&g).expect("gcd divides");
        RationalFunction::normalize(
            &(&self.num * &dg) + &(&rhs.num * &bg),
            &self.den * &dg,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.space());
        }
        RationalFunction::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics when dividing by zero; use [`RationalFunction::checked_div`] for a
/// fallible version.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &'a RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $f(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

/// Renders in the expression grammar: `num`, or `(num)/(den)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.fmt_with_parens();
        let den = self.den.to_string();
        let den = if den.contains(['*', '/', ' ']) {
            format!("({den})")
        } else {
            den
        };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
