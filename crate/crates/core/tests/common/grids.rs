//! The elementary inequalities behind the bounds, checked in exact integer
//! arithmetic after clearing denominators.
//!
//! With `D_l = (6N-1)(6N-3)...(6N-2l+1)` we have `p_{l,N} = 1 / D_l`, and
//! `a_{k,N}` is an integer, so every check is a comparison of integers.

use num_bigint::BigUint;
use num_traits::{One, Pow};

#[derive(Clone, Debug, Default)]
pub struct GridOutcome {
    pub checked: u64,
    pub violations: u64,
    pub first_violation: Option<Vec<u64>>,
}

impl GridOutcome {
    fn record(&mut self, ok: bool, point: &[u64]) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            self.first_violation.get_or_insert_with(|| point.to_vec());
        }
    }

    pub fn describe(&self) -> String {
        match &self.first_violation {
            None => format!("{} points, 0 violations", self.checked),
            Some(p) => format!("{} points, {} violations, first at {:?}", self.checked, self.violations, p),
        }
    }
}

/// `D_0..=D_max` for one `N`.
pub fn denominators(n: u64, max: u64) -> Vec<BigUint> {
    let mut d = vec![BigUint::one()];
    for i in 1..=max {
        let next = &d[i as usize - 1] * (6 * n - 2 * i + 1);
        d.push(next);
    }
    d
}

/// `a_{0..=max, N}`.
pub fn a_values(n: u64, max: u64) -> Vec<BigUint> {
    let mut a = vec![BigUint::one()];
    for i in 0..max {
        let next = &a[i as usize] * 3u32 * (2 * n - i);
        a.push(next);
    }
    a
}

fn pow(n: u64, e: u64) -> BigUint {
    BigUint::from(n).pow(e as u32)
}

/// `a_k p_l <= 6N/(6N-1) N^(k-l)` and `<= 6/5 N^(k-l)` for `1 <= k <= l <= N`.
pub fn bd1(max_n: u64) -> (GridOutcome, GridOutcome) {
    let (mut sharp, mut loose) = (GridOutcome::default(), GridOutcome::default());
    for n in 1..=max_n {
        let d = denominators(n, n);
        let a = a_values(n, n);
        let powers: Vec<BigUint> = (0..=n).map(|e| pow(n, e)).collect();
        for l in 1..=n {
            for k in 1..=l {
                // a_k / D_l <= c N^k / N^l  <=>  a_k N^l (den c) <= (num c) N^k D_l
                let lhs = &a[k as usize] * &powers[l as usize];
                let rhs = &powers[k as usize] * &d[l as usize];
                sharp.record(&lhs * (6 * n - 1) <= &rhs * (6 * n), &[n, k, l]);
                loose.record(&lhs * 5u32 <= &rhs * 6u32, &[n, k, l]);
            }
        }
    }
    (sharp, loose)
}

/// `a_k p_l p_m <= 6/5 N^(k-l-m)` for `1 <= k, l, m <= N`; the second
/// outcome restricts to `k <= l + m`.
pub fn bd2(max_n: u64) -> (GridOutcome, GridOutcome) {
    let (mut full, mut restricted) = (GridOutcome::default(), GridOutcome::default());
    for n in 1..=max_n {
        let d = denominators(n, n);
        let a = a_values(n, n);
        let powers: Vec<BigUint> = (0..=3 * n).map(|e| pow(n, e)).collect();
        for k in 1..=n {
            let rhs_k = &powers[k as usize] * 6u32;
            for l in 1..=n {
                let lhs_kl = &a[k as usize] * 5u32;
                let rhs_kl = &rhs_k * &d[l as usize];
                for m in 1..=n {
                    let ok = &lhs_kl * &powers[(l + m) as usize] <= &rhs_kl * &d[m as usize];
                    full.record(ok, &[n, k, l, m]);
                    if k <= l + m {
                        restricted.record(ok, &[n, k, l, m]);
                    }
                }
            }
        }
    }
    (full, restricted)
}

/// Both lines of the bound on `p_{k+l} - p_k p_l` for `k + l <= N`, `k, l >= 1`:
/// the power form `p_k p_l (((6N-1)/(6N-2(k+l)-1))^(k+l) - 1)` and the
/// linearized form `2(k+l)^2 / (6N-2(k+l)+1) p_k p_l`.
pub fn sigma4_ingredient(max_n: u64) -> (GridOutcome, GridOutcome) {
    let (mut power, mut linear) = (GridOutcome::default(), GridOutcome::default());
    for n in 2..=max_n {
        let d = denominators(n, n);
        for k in 1..n {
            for l in 1..=n - k {
                let s = k + l;
                let (dk, dl, ds) = (&d[k as usize], &d[l as usize], &d[s as usize]);
                let prod = dk * dl;
                // p_s - p_k p_l = (D_k D_l - D_s) / (D_k D_l D_s); D_k D_l >= D_s
                let gap = &prod - ds;
                // power form: gap <= D_s ((6N-1)^s - (6N-2s-1)^s) / (6N-2s-1)^s
                let hi = pow(6 * n - 1, s);
                let lo = pow(6 * n - 2 * s - 1, s);
                power.record(&gap * &lo <= ds * (&hi - &lo), &[n, k, l]);
                // linear form: gap (6N-2s+1) <= 2 s^2 D_s
                linear.record(&gap * (6 * n - 2 * s + 1) <= ds * (2 * s * s), &[n, k, l]);
            }
        }
    }
    (power, linear)
}
