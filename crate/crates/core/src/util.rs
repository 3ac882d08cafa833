//! Small integer helpers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n as u128).len() == 1 && factorize(n as u128)[0].1 == 1
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let p = p as u128;
    let mut out = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// If `n` is a prime power `q^k` with `k >= 1`, returns `q`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n as u128).as_slice() {
        [(q, _)] => Some(*q),
        _ => None,
    }
}
