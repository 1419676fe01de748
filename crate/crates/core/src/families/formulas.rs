//! Closed-form eccentric connectivity values, evaluated in exact integer
//! arithmetic with floors and ceilings as written. Callers validate domains.

fn to_u64(x: i128) -> u64 {
    u64::try_from(x).expect("closed form is non-negative and fits in u64")
}

pub fn complete(n: u64) -> u64 {
    n * n.saturating_sub(1)
}

/// Valid for `a, b >= 2`.
pub fn complete_bipartite(a: u64, b: u64) -> u64 {
    4 * a * b
}

pub fn path(n: u64) -> u64 {
    (3 * (n - 1) * (n - 1)).div_ceil(2)
}

/// Valid for `n >= 3`.
pub fn star(n: u64) -> u64 {
    3 * (n - 1)
}

pub fn cycle(n: u64) -> u64 {
    2 * n * (n / 2)
}

pub fn hypercube(dim: u64) -> u64 {
    (dim * dim) << dim
}

/// The printed piecewise lollipop expression (even / odd `d`).
pub fn lollipop(n: u64, d: u64) -> u64 {
    let (n, d) = (n as i128, d as i128);
    let c = if d % 2 == 0 { 2 } else { 3 };
    let twice = c - 2 * d + d * d + 2 * d * d * d - 2 * n + 2 * d * n - 4 * d * d * n + 2 * d * n * n;
    to_u64(twice.div_euclid(2))
}

pub fn broom(n: u64, delta: u64) -> u64 {
    let (n, k) = (n as i128, delta as i128);
    to_u64((3 * n * n - 2 * k * n - 2 * n - k * k + 4 * k).div_euclid(2))
}

pub fn spur(n: u64, m: u64) -> u64 {
    if m == n - 1 {
        3 * n - 3
    } else if m == n - 2 {
        5 * n - 6
    } else {
        7 * n - 2 * m - 7
    }
}

pub fn double_star(n: u64) -> u64 {
    5 * n - 6
}

/// `C_{n,d,⌊d/2⌋}`.
pub fn caterpillar_central(n: u64, d: u64) -> u64 {
    (3 * d * d).div_ceil(2) + (n - d - 1) * (1 + 2 * d.div_ceil(2))
}

/// Maximum over trees with `p` pendent vertices.
pub fn pendent_max(n: u64, p: u64) -> u64 {
    let s = n - p + 1;
    (3 * s * s).div_ceil(2) + (p - 2) * (2 * n - 2 * p + 1)
}

/// `H_{n,k}`; the cycle value when `k = n`.
pub fn unicyclic_hnk(n: u64, k: u64) -> u64 {
    if k == n {
        cycle(n)
    } else if k.is_multiple_of(2) {
        n * k + n - k + 2
    } else {
        n * k - k + 4
    }
}

/// `2nm - M₁` for `K_n - ke`.
pub fn complete_minus_matching(n: u64, k: u64) -> u64 {
    let m = n * (n - 1) / 2 - k;
    let m1 = 2 * k * n.saturating_sub(2).pow(2) + (n - 2 * k) * (n - 1) * (n - 1);
    2 * n * m - m1
}

/// Grid `P_a □ P_b`, four parity cases.
pub fn grid(a: u64, b: u64) -> u64 {
    let (a, b) = (a as i128, b as i128);
    // twice the common part: 2(3a²b + 3ab² - 8ab) - 3a² - 3b²
    let base = 6 * a * a * b + 6 * a * b * b - 16 * a * b - 3 * a * a - 3 * b * b;
    let tail = match (a % 2 == 0, b % 2 == 0) {
        (true, true) => 2 * (3 * a + 3 * b),
        (false, true) => 2 * (3 * a + 2 * b) + 1,
        (true, false) => 2 * (2 * a + 3 * b) + 1,
        (false, false) => 2 * (2 * a + 2 * b) + 2,
    };
    to_u64((base + tail) / 2)
}

/// Nanotorus `C_a □ C_b`.
pub fn nanotorus(a: u64, b: u64) -> u64 {
    4 * a * b * (a / 2 + b / 2)
}

/// Nanotube `P_a □ C_b`, four parity cases.
pub fn nanotube(a: u64, b: u64) -> u64 {
    let (a, b) = (a as i128, b as i128);
    let common = 3 * a * a * b + 2 * a * b * b - b * b;
    let rest = match (a % 2 == 0, b % 2 == 0) {
        (true, true) => -4 * a * b + 2 * b,
        (true, false) => -6 * a * b + 3 * b,
        (false, true) => -4 * a * b + b,
        (false, false) => -6 * a * b + 2 * b,
    };
    to_u64(common + rest)
}
