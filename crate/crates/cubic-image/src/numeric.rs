//! Small integer utilities: trial-division factoring, modular inverses,
//! and a generic cube root in a cyclic group of known order.

/// Distinct prime factors of `x`, ascending.
pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= x {
        if x % p == 0 {
            factors.push(p);
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        factors.push(x);
    }
    factors
}

/// Inverse of `a` modulo `m` (gcd(a, m) must be 1). Returns 0 for m = 1.
pub(crate) fn inv_mod(a: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = ((a % m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inv_mod of non-unit");
    old_s.rem_euclid(m as i128) as u128
}

fn pow3(e: u32) -> u128 {
    3u128.pow(e)
}

/// Cube root in a cyclic group of order `order`, written multiplicatively.
///
/// When 3 does not divide the order, cubing is a bijection and the result is
/// a plain exponentiation. Otherwise this is the Tonelli-Shanks style digit
/// peeling in the 3-Sylow subgroup; `non_cube` is consulted only on that
/// path and must produce an element whose order is divisible by the full
/// power of 3 in `order` (any non-cube works).
///
/// Returns None when `a` is not a cube.
pub(crate) fn cyclic_cube_root<T, M, G>(a: &T, order: u128, one: T, mul: M, mut non_cube: G) -> Option<T>
where
    T: Clone + PartialEq,
    M: Fn(&T, &T) -> T,
    G: FnMut() -> T,
{
    let pow = |base: &T, mut e: u128| -> T {
        let mut acc = one.clone();
        let mut b = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(&acc, &b);
            }
            b = mul(&b, &b);
            e >>= 1;
        }
        acc
    };

    if *a == one {
        return Some(one);
    }
    if order % 3 != 0 {
        return Some(pow(a, inv_mod(3, order)));
    }

    // order = 3^s * t with 3 not dividing t
    let mut s = 0u32;
    let mut t = order;
    while t % 3 == 0 {
        s += 1;
        t /= 3;
    }
    if pow(a, order / 3) != one {
        return None;
    }

    // Correct up to a factor in the 3-Sylow subgroup: x^3 = a * (a^t)^k.
    let mut x = pow(a, inv_mod(3, t));
    let cube = mul(&mul(&x, &x), &x);
    let err = mul(&cube, &pow(a, order - 1));
    if err == one {
        return Some(x);
    }

    // Peel the discrete log of err base b = g^t (order 3^s) in base-3
    // digits; a passes the cube test, so the log is divisible by 3.
    let g = non_cube();
    let b = pow(&g, t);
    let b_inv = pow(&b, pow3(s) - 1);
    let zeta = pow(&b, pow3(s - 1));
    let zeta2 = mul(&zeta, &zeta);
    let mut log = 0u128;
    let mut residual = err;
    for i in 0..s {
        let probe = pow(&residual, pow3(s - 1 - i));
        let digit = if probe == one {
            0u128
        } else if probe == zeta {
            1
        } else if probe == zeta2 {
            2
        } else {
            return None;
        };
        if digit != 0 {
            let step = digit * pow3(i);
            log += step;
            residual = mul(&residual, &pow(&b_inv, step));
        }
    }
    if residual != one || log % 3 != 0 {
        return None;
    }
    x = mul(&x, &pow(&b_inv, log / 3));
    Some(x)
}
