//! Idempotent decompositions over prime fields: the center, one central
//! primitive idempotent per block, one primitive idempotent per isomorphism
//! class of projective indecomposable, and the simple modules. The block
//! splitting walks minimal polynomials of central elements, which must
//! split into linear factors — true for every algebra handled here, and
//! checked at runtime.

use qhc_linalg::{solve_field, Domain, Matrix, RowEchelon, Scalar};

use crate::module::{
    image_columns, kernel_columns, restricted_representation, submodule_closure, Representation,
};
use crate::presentation::hom_between;
use crate::radical::{algebra_quotient_by_ideal, radical_basis};
use crate::{Algebra, AlgebraError};

/// Columns spanning the center.
pub fn center_basis(algebra: &Algebra) -> Result<Matrix, AlgebraError> {
    let n = algebra.dim();
    let mut stacked: Option<Matrix> = None;
    for i in 0..n {
        let b = algebra.basis_vector(i);
        let diff = algebra.left_mult_matrix(&b).sub(&algebra.right_mult_matrix(&b));
        if diff.is_zero() {
            continue;
        }
        stacked = Some(match stacked {
            None => diff,
            Some(s) => s.vstack(&diff),
        });
    }
    match stacked {
        None => Ok(Matrix::identity(algebra.domain(), n)), // commutative
        Some(s) => kernel_columns(&s),
    }
}

fn require_prime_field(algebra: &Algebra) -> Result<u64, AlgebraError> {
    match algebra.domain() {
        Domain::PrimeField(p) => Ok(p),
        d => Err(AlgebraError::FieldOnly(format!(
            "idempotent splitting works over prime fields, got {d}"
        ))),
    }
}

// --- dense polynomials over F_p, lowest degree first ---

fn poly_trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quo = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = rem[da] * lead_inv % p;
        quo[da - db] = c;
        for i in 0..=db {
            let sub = c * b[i] % p;
            rem[da - db + i] = (rem[da - db + i] + p - sub) % p;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    poly_trim(&mut quo);
    (quo, rem)
}

/// Extended Euclid: returns (g, s, t) with s a + t b = g, g monic.
fn poly_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let new_s = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        let new_t = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, new_s);
        t0 = std::mem::replace(&mut t1, new_t);
    }
    // Normalize to a monic gcd.
    if let Some(&lead) = r0.last() {
        let inv = inv_mod(lead, p);
        for c in r0.iter_mut().chain(s0.iter_mut()).chain(t0.iter_mut()) {
            *c = *c * inv % p;
        }
    }
    (r0, s0, t0)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y % p) % p;
    }
    poly_trim(&mut out);
    out
}

fn poly_eval_scalar(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = (acc * x + c) % p;
    }
    acc
}

fn scalar_to_u64(s: &Scalar) -> u64 {
    match s {
        Scalar::Fp(v) => *v,
        _ => unreachable!("prime-field scalar expected"),
    }
}

/// Evaluate a polynomial at an algebra element, using `unit` (an idempotent)
/// as the constant term's multiplier.
fn poly_eval_element(
    algebra: &Algebra,
    f: &[u64],
    x: &[Scalar],
    unit: &[Scalar],
) -> Vec<Scalar> {
    let d = algebra.domain();
    let mut acc = vec![d.zero(); algebra.dim()];
    for &c in f.iter().rev() {
        acc = algebra.multiply(&acc, x);
        if c != 0 {
            let cs = d.from_integer(c as i64);
            for (a, u) in acc.iter_mut().zip(unit) {
                *a = d.add(a, &d.mul(&cs, u));
            }
        }
    }
    acc
}

/// Minimal polynomial of `x` inside the corner with the given idempotent as
/// its unit, via the Krylov sequence unit, x, x^2, ...
fn minimal_polynomial(
    algebra: &Algebra,
    unit: &[Scalar],
    x: &[Scalar],
) -> Result<Vec<u64>, AlgebraError> {
    let d = algebra.domain();
    let n = algebra.dim();
    let mut powers: Vec<Vec<Scalar>> = vec![unit.to_vec()];
    let mut ech = RowEchelon::new(d, n);
    ech.insert(unit);
    loop {
        let next = algebra.multiply(powers.last().unwrap(), x);
        if ech.contains(&next) {
            let k = powers.len();
            let krylov = Matrix::from_fn(d, n, k, |r, c| powers[c][r].clone());
            let target = Matrix::from_fn(d, n, 1, |r, _| next[r].clone());
            let combo = solve_field(&krylov, &target)?
                .expect("contained vector must be expressible");
            // minpoly = t^k - sum c_i t^i
            let p = require_prime_field(algebra)?;
            let mut f = vec![0u64; k + 1];
            for i in 0..k {
                let c = scalar_to_u64(&combo.get(i, 0));
                f[i] = (p - c % p) % p;
            }
            f[k] = 1;
            return Ok(f);
        }
        ech.insert(&next);
        powers.push(next);
    }
}

/// One central idempotent per block: split the unit by the minimal
/// polynomials of central elements until no central element separates any
/// piece further.
pub fn central_primitive_idempotents(
    algebra: &Algebra,
) -> Result<Vec<Vec<Scalar>>, AlgebraError> {
    let p = require_prime_field(algebra)?;
    let d = algebra.domain();
    let center = center_basis(algebra)?;
    let mut idems: Vec<Vec<Scalar>> = vec![algebra.unit().to_vec()];
    loop {
        let mut changed = false;
        for zc in 0..center.cols() {
            let z: Vec<Scalar> = (0..center.rows()).map(|r| center.get(r, zc)).collect();
            let mut next: Vec<Vec<Scalar>> = Vec::new();
            for e in &idems {
                // x = z e lives in the corner with unit e.
                let x = algebra.multiply(&z, e);
                let f = minimal_polynomial(algebra, e, &x)?;
                let factors = split_into_linear_factors(&f, p).ok_or_else(|| {
                    AlgebraError::NotSplit(
                        "a central minimal polynomial has an irreducible factor of degree > 1"
                            .into(),
                    )
                })?;
                if factors.len() <= 1 {
                    next.push(e.clone());
                    continue;
                }
                changed = true;
                for (lambda, mult) in &factors {
                    // f = (t - lambda)^mult * g with g(lambda) != 0;
                    // the piece is (v g)(x) where u (t-lambda)^mult + v g = 1.
                    let mut pw = vec![1u64];
                    let lin = vec![(p - lambda % p) % p, 1];
                    for _ in 0..*mult {
                        pw = poly_mul(&pw, &lin, p);
                    }
                    let (g, _rem) = poly_divrem(&f, &pw, p);
                    debug_assert!(_rem.is_empty());
                    let (gcd, _u, v) = poly_ext_gcd(&pw, &g, p);
                    assert_eq!(gcd, vec![1u64], "factors must be coprime");
                    let eps = poly_eval_element(algebra, &poly_mul(&v, &g, p), &x, e);
                    debug_assert!(algebra.is_idempotent(&eps));
                    debug_assert!(!eps.iter().all(|s| d.is_zero(s)));
                    next.push(eps);
                }
            }
            idems = next;
        }
        if !changed {
            return Ok(idems);
        }
    }
}

/// All roots with multiplicity; `None` if a nonlinear factor remains.
fn split_into_linear_factors(f: &[u64], p: u64) -> Option<Vec<(u64, usize)>> {
    let mut rest = f.to_vec();
    poly_trim(&mut rest);
    let mut out = Vec::new();
    for lambda in 0..p {
        let mut mult = 0usize;
        let lin = vec![(p - lambda) % p, 1];
        while rest.len() > 1 && poly_eval_scalar(&rest, lambda, p) == 0 {
            let (q, r) = poly_divrem(&rest, &lin, p);
            debug_assert!(r.is_empty());
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((lambda, mult));
        }
    }
    if rest.len() > 1 {
        return None;
    }
    Some(out)
}

/// One primitive idempotent per block of the algebra, i.e. one per
/// isomorphism class of simple module. The idempotents are found in the
/// semisimple quotient and lifted through the radical.
pub fn primitive_idempotents_by_block(
    algebra: &Algebra,
) -> Result<Vec<Vec<Scalar>>, AlgebraError> {
    require_prime_field(algebra)?;
    let rad = radical_basis(algebra)?;
    if rad.cols() == 0 {
        return semisimple_block_primitives(algebra);
    }
    let (quot, _proj, section) = algebra_quotient_by_ideal(algebra, &rad)?;
    let down = semisimple_block_primitives(&quot)?;
    down.into_iter()
        .map(|e| lift_idempotent(algebra, &section.apply(&e)))
        .collect()
}

/// One primitive idempotent per block of a semisimple algebra.
fn semisimple_block_primitives(algebra: &Algebra) -> Result<Vec<Vec<Scalar>>, AlgebraError> {
    let mut out = Vec::new();
    for c in central_primitive_idempotents(algebra)? {
        let ideal = minimal_left_ideal(algebra, &c)?;
        out.push(idempotent_generator(algebra, &ideal)?);
    }
    Ok(out)
}

/// A minimal left ideal inside the block cut out by the central idempotent
/// `c` of a semisimple algebra, as columns.
///
/// Shrinking step: for a non-scalar module endomorphism `phi` with minimal
/// polynomial `f` and any proper divisor `g` of `f`, the kernel of `g(phi)`
/// is a proper nonzero submodule (it contains the nonzero image of
/// `(f/g)(phi)` and excludes part of the module since `g(phi) != 0`).
fn minimal_left_ideal(algebra: &Algebra, c: &[Scalar]) -> Result<Matrix, AlgebraError> {
    let p = require_prime_field(algebra)?;
    let d = algebra.domain();
    let reg = Representation::regular(algebra);
    let mut basis = submodule_closure(algebra, &reg, &[c.to_vec()]);
    'outer: loop {
        let sub = restricted_representation(algebra, &reg, &basis)?;
        let endos = hom_between(algebra, &sub, &sub)?;
        if endos.len() <= 1 {
            return Ok(basis);
        }
        // Candidate endomorphisms: the basis first, then reproducible
        // pseudo-random combinations (a fixed basis can consist entirely of
        // elements whose minimal polynomials do not factor, but a positive
        // fraction of the endomorphism ring always splits).
        let mut state = 0xa076_1d64_78bd_642fu64 ^ (basis.cols() as u64);
        let mut random = |endos: &[Matrix]| -> Matrix {
            let mut acc = Matrix::zero(d, endos[0].rows(), endos[0].cols());
            for e in endos {
                let c = d.from_integer((crate::algebra::xorshift(&mut state) % p) as i64);
                acc = acc.add(&e.scale(&c));
            }
            acc
        };
        for attempt in 0..(endos.len() + 512) {
            let phi = if attempt < endos.len() { endos[attempt].clone() } else { random(&endos) };
            if is_scalar_matrix(&phi) {
                continue;
            }
            let f = matrix_minimal_polynomial(d, p, &phi)?;
            let Some(g) = proper_monic_divisor(&f, p) else { continue };
            let ker = kernel_columns(&eval_poly_matrix(d, &g, &phi))?;
            assert!(ker.cols() > 0 && ker.cols() < basis.cols());
            basis = basis.mul(&ker);
            continue 'outer;
        }
        return Err(AlgebraError::NotSplit(
            "no endomorphism splits the left ideal; the block is not split".into(),
        ));
    }
}

fn is_scalar_matrix(m: &Matrix) -> bool {
    let d = m.domain();
    let scaled = Matrix::identity(d, m.rows()).scale(&m.get(0, 0));
    m.sub(&scaled).is_zero()
}

/// Minimal polynomial of a square matrix via its Krylov sequence.
fn matrix_minimal_polynomial(
    d: Domain,
    p: u64,
    m: &Matrix,
) -> Result<Vec<u64>, AlgebraError> {
    let n = m.rows();
    let flat = |mat: &Matrix| -> Vec<Scalar> {
        (0..n).flat_map(|r| (0..n).map(move |c| mat.get(r, c))).collect()
    };
    let mut powers = vec![Matrix::identity(d, n)];
    let mut ech = RowEchelon::new(d, n * n);
    ech.insert(&flat(&powers[0]));
    loop {
        let next = powers.last().unwrap().mul(m);
        let v = flat(&next);
        if ech.contains(&v) {
            let k = powers.len();
            let krylov = Matrix::from_fn(d, n * n, k, |r, c| flat(&powers[c])[r].clone());
            let target = Matrix::from_fn(d, n * n, 1, |r, _| v[r].clone());
            let combo = solve_field(&krylov, &target)?
                .expect("contained vector must be expressible");
            let mut f = vec![0u64; k + 1];
            for i in 0..k {
                let c = scalar_to_u64(&combo.get(i, 0));
                f[i] = (p - c % p) % p;
            }
            f[k] = 1;
            return Ok(f);
        }
        ech.insert(&v);
        powers.push(next);
    }
}

fn eval_poly_matrix(d: Domain, f: &[u64], m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut acc = Matrix::zero(d, n, n);
    for &c in f.iter().rev() {
        acc = acc.mul(m);
        if c != 0 {
            acc = acc.add(&Matrix::identity(d, n).scale(&d.from_integer(c as i64)));
        }
    }
    acc
}

/// A monic divisor of `f` with `1 <= deg < deg f`, or `None` if `f` is
/// irreducible (or has degree < 2). Searches by degree, so small factors
/// are found first.
fn proper_monic_divisor(f: &[u64], p: u64) -> Option<Vec<u64>> {
    let deg = f.len().checked_sub(1)?;
    if deg < 2 {
        return None;
    }
    for dg in 1..=deg / 2 {
        // All monic polynomials of degree dg, low coefficients counting up.
        let total = p.pow(dg as u32);
        for idx in 0..total {
            let mut g = Vec::with_capacity(dg + 1);
            let mut rest = idx;
            for _ in 0..dg {
                g.push(rest % p);
                rest /= p;
            }
            g.push(1);
            let (_, rem) = poly_divrem(f, &g, p);
            if rem.is_empty() {
                return Some(g);
            }
        }
    }
    None
}

/// The idempotent `e` with `L = (algebra) e` for a minimal left ideal `L` of
/// a semisimple algebra: solve `e u = u` for a suitable `u` in `L`.
fn idempotent_generator(algebra: &Algebra, ideal: &Matrix) -> Result<Vec<Scalar>, AlgebraError> {
    let d = algebra.domain();
    let n = algebra.dim();
    let cols: Vec<Vec<Scalar>> =
        (0..ideal.cols()).map(|j| (0..n).map(|r| ideal.get(r, j)).collect()).collect();
    for u in &cols {
        // Products l_i u as columns; skip u if L u = 0.
        let prod = Matrix::from_fn(d, n, cols.len(), |r, j| algebra.multiply(&cols[j], u)[r].clone());
        if prod.is_zero() {
            continue;
        }
        let target = Matrix::from_fn(d, n, 1, |r, _| u[r].clone());
        if let Some(sol) = solve_field(&prod, &target)? {
            let mut e = vec![d.zero(); n];
            for (j, col) in cols.iter().enumerate() {
                let cj = sol.get(j, 0);
                if d.is_zero(&cj) {
                    continue;
                }
                for (ei, li) in e.iter_mut().zip(col) {
                    *ei = d.add(ei, &d.mul(&cj, li));
                }
            }
            if algebra.is_idempotent(&e) && !e.iter().all(|s| d.is_zero(s)) {
                return Ok(e);
            }
        }
    }
    Err(AlgebraError::NotSplit(
        "no idempotent generator found in a minimal left ideal".into(),
    ))
}

/// Lift an element that is idempotent modulo a nil ideal to an honest
/// idempotent by iterating x -> 3x^2 - 2x^3; the defect squares each round.
pub fn lift_idempotent(algebra: &Algebra, x0: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
    let d = algebra.domain();
    let mut x = x0.to_vec();
    for _ in 0..64 {
        if algebra.is_idempotent(&x) {
            return Ok(x);
        }
        let x2 = algebra.multiply(&x, &x);
        let x3 = algebra.multiply(&x2, &x);
        let three = d.from_integer(3);
        let minus_two = d.from_integer(-2);
        x = x2
            .iter()
            .zip(&x3)
            .map(|(a, b)| d.add(&d.mul(&three, a), &d.mul(&minus_two, b)))
            .collect();
    }
    Err(AlgebraError::NotIdempotent)
}

/// One simple module per block, as representations of the algebra acting
/// through its semisimple quotient.
pub fn simple_modules(algebra: &Algebra) -> Result<Vec<Representation>, AlgebraError> {
    require_prime_field(algebra)?;
    let rad = radical_basis(algebra)?;
    let (quot, proj) = if rad.cols() == 0 {
        (algebra.clone(), Matrix::identity(algebra.domain(), algebra.dim()))
    } else {
        let (q, pr, _s) = algebra_quotient_by_ideal(algebra, &rad)?;
        (q, pr)
    };
    // The algebra acts on the quotient through the projection.
    let qreg = Representation::regular(&quot);
    let through: Vec<Matrix> = (0..algebra.dim())
        .map(|i| qreg.element_action(&proj.apply(&algebra.basis_vector(i))))
        .collect();
    let ambient = Representation::new(algebra, quot.dim(), through)?;
    let mut out = Vec::new();
    for c in central_primitive_idempotents(&quot)? {
        let ideal = minimal_left_ideal(&quot, &c)?;
        out.push(restricted_representation(algebra, &ambient, &ideal)?);
    }
    Ok(out)
}

/// The corner algebra `e A e` for an idempotent `e`, together with the
/// embedding of its basis into the ambient coordinates. Works over fields
/// and Z_(p) (the corner is a direct summand, so the image lattice is
/// exact).
pub fn corner_algebra(
    algebra: &Algebra,
    e: &[Scalar],
) -> Result<(Algebra, Matrix), AlgebraError> {
    if !algebra.is_idempotent(e) {
        return Err(AlgebraError::NotIdempotent);
    }
    let d = algebra.domain();
    let n = algebra.dim();
    // x -> e x e
    let pinch = algebra.left_mult_matrix(e).mul(&algebra.right_mult_matrix(e));
    let basis = image_columns(&pinch);
    let m = basis.cols();
    let cols: Vec<Vec<Scalar>> =
        (0..m).map(|j| (0..n).map(|r| basis.get(r, j)).collect()).collect();
    // Express corner products and the corner unit in the corner basis.
    let express = |v: &[Scalar]| -> Result<Vec<Scalar>, AlgebraError> {
        let target = Matrix::from_fn(d, n, 1, |r, _| v[r].clone());
        let sol = if d.is_field() {
            solve_field(&basis, &target)?
        } else {
            qhc_linalg::smith_normal_form(&basis).solve(&target)
        }
        .ok_or_else(|| {
            AlgebraError::NotInvariant("corner product escapes the corner lattice".into())
        })?;
        Ok((0..m).map(|r| sol.get(r, 0)).collect())
    };
    let unit = express(e)?;
    let mut products = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let prod = express(&algebra.multiply(&cols[i], &cols[j]))?;
            for (k, cf) in prod.iter().enumerate() {
                if !d.is_zero(cf) {
                    products.push((i, j, k, cf.clone()));
                }
            }
        }
    }
    let labels = (0..m).map(|i| format!("c{i}")).collect();
    let corner = Algebra::new(d, labels, unit, products)?;
    corner.verify()?;
    Ok((corner, basis))
}
