//! Modular rational-root extraction for univariate integer polynomials.
//!
//! Degree-10 eliminants routinely carry 20+ digit coefficients whose
//! divisor grids are far too large to enumerate, so large inputs take this
//! route instead: roots modulo a word-size prime via `gcd(p, u^q - u)`,
//! Cantor-Zassenhaus splitting into linear factors, Hensel lifting past the
//! numerator/denominator bounds, rational reconstruction, and a final exact
//! verification of every candidate.

use num::bigint::{BigInt, BigUint};
use num::traits::{One, Signed, Zero};

/// All rational roots of the primitive squarefree integer polynomial with
/// the given coefficients (lowest first, leading nonzero, degree >= 1).
/// Returned as (numerator, denominator) pairs in lowest terms, denominator
/// positive. Every root is verified by the caller's exact evaluation; this
/// routine is complete by construction.
pub(crate) fn rational_roots_modular(coeffs: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let degree = coeffs.len() - 1;
    debug_assert!(degree >= 1);
    let lc = coeffs[degree].clone();
    let a0 = coeffs[0].clone();
    debug_assert!(!a0.is_zero(), "strip zero roots first");

    // prime not dividing lc, with the reduction squarefree (simple roots
    // lift uniquely)
    let mut prime = 0x7FFF_FFFF_u64; // 2^31 - 1, then odd descent
    let (q, roots_mod_q) = loop {
        prime = prev_suitable_prime(prime);
        if let Some(res) = roots_modulo(coeffs, prime) {
            break (prime, res);
        }
    };

    if roots_mod_q.is_empty() {
        return Vec::new();
    }

    // lift each simple root until q^k exceeds twice the bound product
    let bound_num = a0.magnitude().clone();
    let bound_den = lc.magnitude().clone();
    let target = BigUint::from(2u32) * &bound_num * &bound_den + BigUint::one();
    let mut modulus = BigUint::from(q);
    let mut lifted: Vec<BigUint> = roots_mod_q.iter().map(|&r| BigUint::from(r)).collect();
    while modulus < target {
        let next_modulus = &modulus * &modulus;
        for r in lifted.iter_mut() {
            *r = hensel_step(coeffs, r, &next_modulus);
        }
        modulus = next_modulus;
    }

    let mut out = Vec::new();
    for r in lifted {
        if let Some((num, den)) = rational_reconstruct(&r, &modulus, &bound_num, &bound_den) {
            out.push((num, den));
        }
    }
    out
}

fn prev_suitable_prime(below: u64) -> u64 {
    let mut n = below - 1;
    if n % 2 == 0 {
        n -= 1;
    }
    while !is_prime_u64(n) {
        n -= 2;
    }
    n
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inv_mod_u64(a: u64, m: u64) -> u64 {
    pow_mod_u64(a, m - 2, m)
}

// dense poly mod q, lowest first, leading nonzero
type ModPoly = Vec<u64>;

fn trim(p: &mut ModPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn rem_mod(mut a: ModPoly, b: &ModPoly, q: u64) -> ModPoly {
    let db = b.len() - 1;
    let inv_lead = inv_mod_u64(b[db], q);
    while a.len() > db {
        let k = a.len() - 1;
        let factor = mul_mod_u64(a[k], inv_lead, q);
        if factor != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let idx = k - db + j;
                let sub = mul_mod_u64(factor, bc, q);
                a[idx] = (a[idx] + q - sub) % q;
            }
        }
        a.pop();
        trim(&mut a);
        if a.len() <= db {
            break;
        }
    }
    a
}

fn gcd_mod(mut a: ModPoly, mut b: ModPoly, q: u64) -> ModPoly {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem_mod(a, &b, q);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod_u64(lead, q);
        for c in a.iter_mut() {
            *c = mul_mod_u64(*c, inv, q);
        }
    }
    a
}

fn mulrem_mod(a: &ModPoly, b: &ModPoly, modp: &ModPoly, q: u64) -> ModPoly {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        for (j, &bc) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod_u64(ac, bc, q)) % q;
        }
    }
    trim(&mut prod);
    if prod.len() >= modp.len() {
        prod = rem_mod(prod, modp, q);
    }
    prod
}

/// (u + shift)^exp mod (modp, q)
fn pow_linear_mod(shift: u64, exp: u64, modp: &ModPoly, q: u64) -> ModPoly {
    let mut acc: ModPoly = vec![1];
    let mut base: ModPoly = vec![shift % q, 1];
    if base.len() >= modp.len() {
        base = rem_mod(base, modp, q);
    }
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulrem_mod(&acc, &base, modp, q);
        }
        base = mulrem_mod(&base, &base, modp, q);
        e >>= 1;
    }
    acc
}

/// Roots of the polynomial modulo `q`, or `None` when `q` is unsuitable
/// (divides the leading coefficient, or the reduction is not squarefree).
fn roots_modulo(coeffs: &[BigInt], q: u64) -> Option<Vec<u64>> {
    let qq = BigInt::from(q);
    let p: ModPoly = coeffs
        .iter()
        .map(|c| {
            let r = ((c % &qq) + &qq) % &qq;
            r.to_u64_digits().1.first().copied().unwrap_or(0)
        })
        .collect();
    if p.last() == Some(&0) {
        return None;
    }
    // squarefree reduction: gcd(p, p') must be constant
    let dp: ModPoly = {
        let mut d: ModPoly = p
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod_u64(c, (i as u64) % q, q))
            .collect();
        trim(&mut d);
        d
    };
    if dp.is_empty() {
        return None;
    }
    let g = gcd_mod(p.clone(), dp, q);
    if g.len() > 1 {
        return None;
    }
    // product of (u - r) over roots in F_q: gcd(p, u^q - u)
    let uq = pow_linear_mod(0, q, &p, q);
    // uq - u
    let mut shifted = uq;
    if shifted.len() < 2 {
        shifted.resize(2, 0);
    }
    shifted[1] = (shifted[1] + q - 1) % q;
    trim(&mut shifted);
    let linear_part = gcd_mod(p.clone(), shifted, q);
    let mut roots = Vec::new();
    split_linear(&linear_part, q, &mut roots, 1);
    roots.sort_unstable();
    roots.dedup();
    Some(roots)
}

/// Cantor-Zassenhaus splitting of a product of distinct linear factors.
fn split_linear(f: &ModPoly, q: u64, out: &mut Vec<u64>, salt: u64) {
    match f.len() {
        0 | 1 => {}
        2 => {
            // u + c = 0 -> root q - c (f is monic)
            out.push((q - f[0] % q) % q);
        }
        _ => {
            // gcd with (u + a)^((q-1)/2) - 1 splits by quadratic character
            let mut a = salt;
            loop {
                let mut w = pow_linear_mod(a, (q - 1) / 2, f, q);
                if w.is_empty() {
                    w = vec![q - 1];
                } else {
                    w[0] = (w[0] + q - 1) % q;
                }
                trim(&mut w);
                if !w.is_empty() {
                    let g = gcd_mod(f.clone(), w, q);
                    if g.len() > 1 && g.len() < f.len() {
                        let (quo, rem) = divide_mod(f, &g, q);
                        debug_assert!(rem.is_empty());
                        split_linear(&g, q, out, a + 1);
                        split_linear(&quo, q, out, a + 1);
                        return;
                    }
                }
                a += 1;
            }
        }
    }
}

fn divide_mod(a: &ModPoly, b: &ModPoly, q: u64) -> (ModPoly, ModPoly) {
    let db = b.len() - 1;
    let inv_lead = inv_mod_u64(b[db], q);
    let mut rem = a.clone();
    let mut quo = vec![0u64; a.len().saturating_sub(db)];
    while rem.len() > db {
        let k = rem.len() - 1;
        let factor = mul_mod_u64(rem[k], inv_lead, q);
        if factor != 0 {
            quo[k - db] = factor;
            for (j, &bc) in b.iter().enumerate() {
                let idx = k - db + j;
                let sub = mul_mod_u64(factor, bc, q);
                rem[idx] = (rem[idx] + q - sub) % q;
            }
        }
        rem.pop();
        trim(&mut rem);
        if rem.len() <= db {
            break;
        }
    }
    trim(&mut quo);
    (quo, rem)
}

/// One Newton step lifting a simple root to the doubled modulus.
fn hensel_step(coeffs: &[BigInt], root: &BigUint, next_modulus: &BigUint) -> BigUint {
    let m = BigInt::from(next_modulus.clone());
    let r = BigInt::from(root.clone());
    let mut value = BigInt::zero();
    let mut deriv = BigInt::zero();
    for c in coeffs.iter().rev() {
        deriv = (deriv * &r + &value) % &m;
        value = (value * &r + c) % &m;
    }
    let deriv_u = ((deriv % &m) + &m) % &m;
    let inv = modinv_big(&deriv_u.to_biguint().expect("reduced"), next_modulus)
        .expect("derivative invertible at a simple root");
    let correction = (value * BigInt::from(inv)) % &m;
    let lifted = ((r - correction) % &m + &m) % &m;
    lifted.to_biguint().expect("reduced")
}

fn modinv_big(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let (mut old_r, mut r) = (BigInt::from(a.clone()), BigInt::from(m.clone()));
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let quo = &old_r / &r;
        let tmp_r = &old_r - &quo * &r;
        old_r = std::mem::replace(&mut r, tmp_r);
        let tmp_s = &old_s - &quo * &s;
        old_s = std::mem::replace(&mut s, tmp_s);
    }
    if !old_r.is_one() {
        return None;
    }
    let m_int = BigInt::from(m.clone());
    let inv = ((old_s % &m_int) + &m_int) % &m_int;
    inv.to_biguint()
}

/// Half-extended Euclid: finds num/den with |num| <= bound_num,
/// 0 < den <= bound_den, num = den * value mod modulus.
fn rational_reconstruct(
    value: &BigUint,
    modulus: &BigUint,
    bound_num: &BigUint,
    bound_den: &BigUint,
) -> Option<(BigInt, BigInt)> {
    let mut r0 = BigInt::from(modulus.clone());
    let mut r1 = BigInt::from(value.clone());
    let mut s0 = BigInt::zero();
    let mut s1 = BigInt::one();
    let nb = BigInt::from(bound_num.clone());
    let db = BigInt::from(bound_den.clone());
    while r1.magnitude() > bound_num {
        let quo = &r0 / &r1;
        let tmp_r = &r0 - &quo * &r1;
        r0 = std::mem::replace(&mut r1, tmp_r);
        let tmp_s = &s0 - &quo * &s1;
        s0 = std::mem::replace(&mut s1, tmp_s);
    }
    let (num, den) = if s1.is_negative() {
        (-r1, -s1)
    } else {
        (r1, s1)
    };
    if den.is_zero() || den > db || num.magnitude() > nb.magnitude() {
        return None;
    }
    Some((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_roots() {
        // (u - 3)(2u + 1) = 2u^2 - 5u - 3
        let roots = rational_roots_modular(&[big(-3), big(-5), big(2)]);
        let mut shown: Vec<(i64, i64)> = roots
            .iter()
            .map(|(n, d)| {
                (
                    n.to_string().parse().unwrap(),
                    d.to_string().parse().unwrap(),
                )
            })
            .collect();
        shown.sort();
        assert_eq!(shown, vec![(-1, 2), (3, 1)]);
    }

    #[test]
    fn no_rational_roots() {
        let roots = rational_roots_modular(&[big(-2), big(0), big(1)]);
        assert!(roots.is_empty());
    }

    #[test]
    fn large_coefficient_roots() {
        // (u - 1000003/999983) * (u + 123456789) scaled to integers
        let a = (big(-1000003), big(999983));
        let prod0 = &a.0 * big(123456789);
        let prod1 = &a.0 + &a.1 * big(123456789);
        let coeffs = vec![prod0, prod1, a.1.clone()];
        let roots = rational_roots_modular(&coeffs);
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&(big(1000003), big(999983))));
        assert!(roots.contains(&(big(-123456789), big(1))));
    }
}
