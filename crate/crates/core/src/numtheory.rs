//! Integer number theory: primality, factoring, modular arithmetic.

use alloc::vec::Vec;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    // Brent's cycle variant; n must be odd composite.
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |out: &mut Vec<(u64, u32)>, p: u64| {
        if let Some(e) = out.iter_mut().find(|e| e.0 == p) {
            e.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    for p in [2u64, 3, 5] {
        while n % p == 0 {
            push(&mut out, p);
            n /= p;
        }
    }
    let mut d = 7u64;
    while d * d <= n && d < 100_000 {
        while n % d == 0 {
            push(&mut out, d);
            n /= d;
        }
        d += 2;
    }
    // Recurse on the remaining cofactor with Pollard rho.
    let mut stack: Vec<u64> = Vec::new();
    if n > 1 {
        stack.push(n);
    }
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            push(&mut out, m);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

/// Multiplicative inverse of a modulo n, if gcd(a, n) = 1.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
pub fn mult_order(a: u64, n: u64) -> u64 {
    debug_assert_eq!(gcd(a % n, n), 1);
    let mut x = a % n;
    let mut ord = 1u64;
    while x != 1 {
        x = mulmod(x, a, n);
        ord += 1;
    }
    ord
}

/// Integer square root by Newton iteration.
pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = 1u64 << ((64 - n.leading_zeros()).div_ceil(2));
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}
