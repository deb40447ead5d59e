//! Polynomial gcds over `Q[z1..zq, s]`.
//!
//! The multivariate gcd is computed recursively: pick a main variable,
//! split off contents (gcds of coefficients, one variable fewer), then run a
//! subresultant pseudo-remainder sequence on the primitive parts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{Coeff, Polynomial};

/// Specialization points tried per variable by [`degree_free_in`].
const SPECIALIZATION_ATTEMPTS: usize = 2;
const SPECIALIZATION_BOUND: i64 = 1 << 10;

/// Pseudo-remainder of `a` by `b` in the variable `var`:
/// `lc(b)^(deg a − deg b + 1) · a mod b`.
pub fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = b.degree_in(var).expect("pseudo-division by zero");
    let da = match a.degree_in(var) {
        Some(d) if d >= db => d,
        _ => return a.clone(),
    };
    let space = a.space();
    let lb = b.leading_coefficient_in(var);
    let mut r = a.clone();
    let mut steps = da - db + 1;
    while let Some(dr) = r.degree_in(var) {
        if r.is_zero() || dr < db {
            break;
        }
        let lr = r.leading_coefficient_in(var);
        let shift = crate::poly::Monomial::var(space.nvars(), var, dr - db);
        let t = (&lr * b).mul_monomial(&shift, &Coeff::one());
        r = &(&lb * &r) - &t;
        steps -= 1;
    }
    if steps > 0 {
        r = &lb.pow(steps) * &r;
    }
    r
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut g = Polynomial::zero(p.space());
    for c in p.coefficients_in(var).iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.as_constant().is_some() {
            break;
        }
    }
    g
}

/// `p / content_in(p, var)`, normalized.
pub fn primitive_part_in(p: &Polynomial, var: usize) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides").normalized()
}

/// Subresultant PRS on two polynomials that are primitive in `var` and both
/// have positive degree in it. Returns the primitive gcd.
fn subresultant_gcd(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let space = a.space();
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut g = Polynomial::one(space);
    let mut h = Polynomial::one(space);
    loop {
        let delta = a.degree_in(var).unwrap() - b.degree_in(var).unwrap();
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == Some(0) {
            return Polynomial::one(space);
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r.div_exact(&divisor).expect("subresultant division is exact");
        g = a.leading_coefficient_in(var);
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta);
            let den = h.pow(delta - 1);
            num.div_exact(&den).expect("subresultant h update is exact")
        };
    }
    primitive_part_in(&b, var)
}

/// Greatest common divisor in `Q[z, s]`, normalized to coprime integer
/// coefficients with a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    debug_assert!(p.space() == q.space());
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.as_constant().is_some() || q.as_constant().is_some() {
        return Polynomial::one(p.space());
    }
    if p == q {
        return p.normalized();
    }
    let nvars = p.space().nvars();
    let shared: Vec<usize> = (0..nvars).filter(|&v| p.uses_var(v) && q.uses_var(v)).collect();
    if shared.iter().all(|&v| degree_free_in(p, q, v)) {
        return Polynomial::one(p.space());
    }
    let var = match (0..nvars).find(|&v| p.uses_var(v) || q.uses_var(v)) {
        Some(v) => v,
        None => return Polynomial::one(p.space()),
    };
    match (p.uses_var(var), q.uses_var(var)) {
        (true, false) => gcd(&content_in(p, var), q),
        (false, true) => gcd(p, &content_in(q, var)),
        _ => {
            let cp = content_in(p, var);
            let cq = content_in(q, var);
            let pp = p.div_exact(&cp).expect("content divides");
            let qq = q.div_exact(&cq).expect("content divides");
            let c = gcd(&cp, &cq);
            (&c * &subresultant_gcd(&pp, &qq, var)).normalized()
        }
    }
}

pub fn lcm(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() || q.is_zero() {
        return Polynomial::zero(p.space());
    }
    let g = gcd(p, q);
    (&p.div_exact(&g).expect("gcd divides") * q).normalized()
}

/// Gcd in `F(z)[s]`: both arguments are read as univariate polynomials in
/// `s` over the field of rational functions in the parameters.
///
/// The result is the associate that is primitive over `Q[z]` and whose
/// top `s`-coefficient has a positive leading coefficient; it is `1` whenever the gcd has no `s`-dependence and
/// `0` only when both inputs are zero. `gcd_in_s(0, q)` is `q` normalized.
pub fn gcd_in_s(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let s = p.space().s_index();
    let space = p.space();
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Polynomial::zero(space),
        (true, false) => return s_normalized(q),
        (false, true) => return s_normalized(p),
        _ => {}
    }
    if !p.uses_var(s) || !q.uses_var(s) {
        return Polynomial::one(space);
    }
    if degree_free_in(p, q, s) {
        return Polynomial::one(space);
    }
    let pp = primitive_part_in(p, s);
    let qq = primitive_part_in(q, s);
    positive_in_s(subresultant_gcd(&pp, &qq, s))
}

/// Proves that `gcd(p, q)` has degree 0 in `var`.
///
/// All other variables are fixed at a point where the leading coefficient
/// of `p` in `var` does not vanish. The gcd's image then keeps its degree in
/// `var` and divides both images, so a constant univariate gcd of the images
/// settles the claim. `false` means "not proven", not "shares a factor".
fn degree_free_in(p: &Polynomial, q: &Polynomial, var: usize) -> bool {
    let nvars = p.space().nvars();
    let lc = p.leading_coefficient_in(var);
    let mut rng = ChaCha8Rng::seed_from_u64(var as u64);
    for _ in 0..SPECIALIZATION_ATTEMPTS {
        let point: Vec<Coeff> = (0..nvars)
            .map(|_| Coeff::from_integer(BigInt::from(rng.gen_range(-SPECIALIZATION_BOUND..=SPECIALIZATION_BOUND))))
            .collect();
        if lc.eval_unchecked(&point).is_zero() {
            continue;
        }
        let up = univariate_image(p, var, &point);
        let uq = univariate_image(q, var, &point);
        return univariate_gcd_degree(up, uq) == 0;
    }
    false
}

/// Coefficients (lowest degree first) of `p` in `var` after fixing every
/// other variable at `point`.
fn univariate_image(p: &Polynomial, var: usize, point: &[Coeff]) -> Vec<Coeff> {
    let mut out: Vec<Coeff> = Vec::new();
    for (m, c) in p.terms() {
        let e = m.exponents();
        let mut t = c.clone();
        for (v, (&k, x)) in e.iter().zip(point).enumerate() {
            if v != var && k > 0 {
                t *= num_traits::pow(x.clone(), k as usize);
            }
        }
        let d = e[var] as usize;
        if out.len() <= d {
            out.resize(d + 1, Coeff::zero());
        }
        out[d] += t;
    }
    trim(&mut out);
    out
}

fn trim(p: &mut Vec<Coeff>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree of the gcd of two univariate polynomials over Q; `usize::MAX` when
/// both are zero.
fn univariate_gcd_degree(mut a: Vec<Coeff>, mut b: Vec<Coeff>) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return 0;
        }
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = a.last().unwrap() / &lb;
            for (i, c) in b.iter().enumerate() {
                let d = &f * c;
                a[i + shift] -= d;
            }
            trim(&mut a);
        }
        // Keep coefficients small: make the remainder monic.
        if let Some(l) = a.last().cloned() {
            for c in a.iter_mut() {
                *c /= &l;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().checked_sub(1).unwrap_or(usize::MAX)
}

fn s_normalized(p: &Polynomial) -> Polynomial {
    if p.is_s_free() {
        Polynomial::one(p.space())
    } else {
        positive_in_s(primitive_part_in(p, p.space().s_index()))
    }
}

/// Sign so that the coefficient of the highest power of `s` has a positive
/// leading coefficient (the closest a polynomial gets to monic in `s`).
fn positive_in_s(p: Polynomial) -> Polynomial {
    let lc = p.leading_coefficient_in(p.space().s_index());
    match lc.leading_coefficient() {
        Some(c) if c.is_negative() => -p,
        _ => p,
    }
}
