//! Greatest common divisors and resultants.

use num_traits::{One, Zero};

use super::mpoly::{Degree, Monomial, MPoly};
use super::rational::Rational;
use super::univariate::UPoly;
use crate::error::{Error, Result};

/// Writes a 2-variable polynomial as a polynomial in `z` whose coefficients
/// lie in `Q[y]`; entry `k` multiplies `z^k`.
fn to_dense_z(p: &MPoly) -> Vec<UPoly> {
    let n = match p.degree_in(1) {
        Degree::MinusInfinity => return Vec::new(),
        Degree::Finite(d) => d as usize + 1,
    };
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); n];
    for (m, c) in p.terms() {
        let (a, b) = (m.0[0] as usize, m.0[1] as usize);
        if rows[b].len() <= a {
            rows[b].resize(a + 1, Rational::zero());
        }
        rows[b][a] = c.clone();
    }
    rows.into_iter().map(UPoly::new).collect()
}

fn from_dense_z(rows: &[UPoly]) -> MPoly {
    let mut terms = Vec::new();
    for (b, row) in rows.iter().enumerate() {
        for (a, c) in row.coeffs().iter().enumerate() {
            terms.push(([a as u32, b as u32, 0], c.clone()));
        }
    }
    MPoly::from_terms(2, terms)
}

fn trim(mut rows: Vec<UPoly>) -> Vec<UPoly> {
    while rows.last().is_some_and(UPoly::is_zero) {
        rows.pop();
    }
    rows
}

fn content(rows: &[UPoly]) -> UPoly {
    rows.iter().fold(UPoly::zero(), |acc, r| acc.gcd(r))
}

fn primitive_part(rows: &[UPoly]) -> Vec<UPoly> {
    let c = content(rows);
    if c.is_zero() {
        return Vec::new();
    }
    rows.iter()
        .map(|r| r.div_exact(&c).expect("content divides every coefficient"))
        .collect()
}

/// Pseudo-remainder of `a` by `b` in `Q[y][z]`; `b` must be nonzero.
fn pseudo_remainder(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<UPoly> = r.iter().map(|c| c * lb).collect();
        for (i, c) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(c * &lr);
        }
        r = trim(next);
    }
    r
}

/// Greatest common divisor in `Q[y, z]`, scaled so that its graded-lex leading
/// coefficient is 1. Uses a primitive remainder sequence in `z` over `Q[y]`.
pub fn gcd_bivariate(a: &MPoly, b: &MPoly) -> Result<MPoly> {
    if a.nvars() != 2 || b.nvars() != 2 {
        return Err(Error::Usage("gcd_bivariate needs 2-variable polynomials".into()));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::Usage("gcd of two zero polynomials".into()));
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let (da, db) = (to_dense_z(a), to_dense_z(b));
    let c = content(&da).gcd(&content(&db));
    let mut p = primitive_part(&da);
    let mut q = primitive_part(&db);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_empty() {
        let r = pseudo_remainder(&p, &q);
        p = q;
        q = primitive_part(&r);
    }
    let mut g = primitive_part(&p);
    g = g.iter().map(|row| row * &c).collect();
    Ok(from_dense_z(&g).monic())
}

/// Determinant by fraction-free elimination; entries must admit exact division.
fn bareiss(mut m: Vec<Vec<MPoly>>, nvars: usize) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one(nvars);
    }
    let mut negate = false;
    let mut prev = MPoly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return MPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.try_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Rational::zero();
        };
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        let p = m[k][k].clone();
        det *= &p;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &p;
            for j in k..n {
                let delta = &factor * &m[k][j];
                m[i][j] -= delta;
            }
        }
    }
    det
}

fn sylvester<T: Clone>(f_desc: &[T], g_desc: &[T], zero: T) -> Vec<Vec<T>> {
    let m = f_desc.len() - 1;
    let n = g_desc.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![zero.clone(); size];
        row[shift..shift + m + 1].clone_from_slice(f_desc);
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); size];
        row[shift..shift + n + 1].clone_from_slice(g_desc);
        rows.push(row);
    }
    rows
}

/// Determinant of the Sylvester matrix of `f` and `g` with respect to `var`:
/// `deg g` rows of `f` coefficients first, each row in descending powers.
/// The result is a polynomial in the remaining variables (with `var` absent).
pub fn resultant_in_variable(f: &MPoly, g: &MPoly, var: usize) -> Result<MPoly> {
    f.checked_add(g)?;
    if var >= f.nvars() {
        return Err(Error::Usage(format!("variable index {var} out of range")));
    }
    let (Degree::Finite(m), Degree::Finite(n)) = (f.degree_in(var), g.degree_in(var)) else {
        return Err(Error::DegenerateResultant("zero polynomial".into()));
    };
    if m == 0 || n == 0 {
        return Err(Error::DegenerateResultant(
            "an input is constant in the elimination variable".into(),
        ));
    }
    let mut fc = f.coefficients_in(var);
    let mut gc = g.coefficients_in(var);
    fc.reverse();
    gc.reverse();
    let matrix = sylvester(&fc, &gc, MPoly::zero(f.nvars()));
    Ok(bareiss(matrix, f.nvars()))
}

/// Descending coefficients of a binary form of degree `m` after setting `z = 1`:
/// entry `k` multiplies `y^(m-k) z^k`.
fn binary_form_coeffs(form: &MPoly, m: u32) -> Vec<Rational> {
    (0..=m).map(|k| form.coeff([m - k, k, 0])).collect()
}

fn check_binary_form(form: &MPoly) -> Result<u32> {
    if form.nvars() != 2 {
        return Err(Error::Usage("binary forms live in (y, z)".into()));
    }
    if !form.is_homogeneous() {
        return Err(Error::Usage(format!("`{form}` is not homogeneous")));
    }
    form.total_degree()
        .finite()
        .ok_or_else(|| Error::Usage("zero binary form".into()))
}

/// Resultant of two binary forms in `(y, z)` with their formal degrees. It is
/// zero exactly when the forms share a projective root.
pub fn resultant_binary_forms(f: &MPoly, g: &MPoly) -> Result<Rational> {
    let m = check_binary_form(f)?;
    let n = check_binary_form(g)?;
    let matrix = sylvester(
        &binary_form_coeffs(f, m),
        &binary_form_coeffs(g, n),
        Rational::zero(),
    );
    Ok(det_rational(matrix))
}

/// Distinct rational linear factors `(a, b)` of a binary form, each meaning
/// `a*y + b*z`, normalized with first nonzero entry 1. Root candidates are
/// limited as in [`UPoly::rational_roots`].
pub fn binary_linear_factors(form: &MPoly) -> Result<Vec<(Rational, Rational)>> {
    let m = check_binary_form(form)?;
    let mut out = Vec::new();
    if form.coeff([m, 0, 0]).is_zero() {
        out.push((Rational::zero(), Rational::one()));
    }
    let univariate = UPoly::new((0..=m).map(|k| form.coeff([k, m - k, 0])).collect());
    for t in univariate.rational_roots() {
        // F(t, 1) = 0 means y - t z divides F.
        out.push((Rational::one(), -t));
    }
    Ok(out)
}

/// Multiplies a 2-variable polynomial by a monomial `y^a z^b`.
pub fn shift_yz(p: &MPoly, a: u32, b: u32) -> MPoly {
    p.mul_monomial(&Monomial([a, b, 0]), &Rational::one())
}
