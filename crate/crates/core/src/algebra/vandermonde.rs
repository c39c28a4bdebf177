//! Exact Vandermonde solvers built on Lagrange basis polynomials.
//!
//! For distinct integer parameters t_0..t_{n-1} the primal system has rows
//! (1, t_r, t_r^2, ..., t_r^{n-1}); solving it is polynomial interpolation.
//! The dual (transposed) system, whose row m reads sum_k t_k^m x_k = b_m,
//! is solved with the same Lagrange coefficients. Both run in O(n^2) exact
//! rational arithmetic, which keeps the intermediate fractions small
//! compared to generic elimination.

use num_traits::Zero;

use crate::error::{Error, Result};

use super::rat::{rat_int, Rat};

/// Coefficient vectors of the Lagrange cardinal polynomials l_r(t),
/// each of degree n-1, ascending powers.
fn lagrange_basis(params: &[i64]) -> Result<Vec<Vec<Rat>>> {
    let n = params.len();
    for (i, a) in params.iter().enumerate() {
        for b in &params[i + 1..] {
            if a == b {
                return Err(Error::SingularVandermonde(*a));
            }
        }
    }

    // master polynomial M(t) = prod (t - t_r)
    let mut master = vec![Rat::zero(); n + 1];
    master[0] = rat_int(1);
    for (deg, &t) in params.iter().enumerate() {
        let tr = rat_int(t);
        // multiply by (t - tr): new[i+1] += old[i], new[i] = -tr * old[i]
        for i in (0..=deg).rev() {
            let c = master[i].clone();
            master[i + 1] += &c;
            master[i] = -(&c * &tr);
        }
    }

    let mut basis = Vec::with_capacity(n);
    for &t in params {
        let tr = rat_int(t);
        // synthetic division of M by (t - tr): quotient q of degree n-1
        let mut q = vec![Rat::zero(); n];
        let mut carry = master[n].clone();
        for i in (0..n).rev() {
            q[i] = carry.clone();
            carry = &master[i] + &(&carry * &tr);
        }
        debug_assert!(
            carry.is_zero(),
            "t_r must be a root of the master polynomial"
        );
        // denominator q(t_r) = prod_{s != r} (t_r - t_s)
        let mut denom = Rat::zero();
        let mut pw = rat_int(1);
        for c in &q {
            denom += c * &pw;
            pw *= &tr;
        }
        for c in &mut q {
            *c = &*c / &denom;
        }
        basis.push(q);
    }
    Ok(basis)
}

/// Solves sum_c params[r]^c x_c = rhs[r] for all rows r, exactly.
pub fn solve_vandermonde(params: &[i64], rhs: &[Rat]) -> Result<Vec<Rat>> {
    assert_eq!(params.len(), rhs.len(), "parameter and rhs lengths differ");
    let basis = lagrange_basis(params)?;
    let n = params.len();
    let mut x = vec![Rat::zero(); n];
    for (lr, y) in basis.iter().zip(rhs) {
        if y.is_zero() {
            continue;
        }
        for (c, xc) in lr.iter().zip(x.iter_mut()) {
            *xc += c * y;
        }
    }
    Ok(x)
}

/// Solves the transposed system sum_k params[k]^m x_k = rhs[m] for all m.
pub fn solve_vandermonde_dual(params: &[i64], rhs: &[Rat]) -> Result<Vec<Rat>> {
    assert_eq!(params.len(), rhs.len(), "parameter and rhs lengths differ");
    let basis = lagrange_basis(params)?;
    Ok(basis
        .iter()
        .map(|lk| {
            let mut acc = Rat::zero();
            for (c, b) in lk.iter().zip(rhs) {
                if !b.is_zero() {
                    acc += c * b;
                }
            }
            acc
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    fn eval_rows(params: &[i64], x: &[Rat]) -> Vec<Rat> {
        params
            .iter()
            .map(|&t| {
                let mut acc = Rat::zero();
                let mut pw = rat_int(1);
                for c in x {
                    acc += c * &pw;
                    pw *= rat_int(t);
                }
                acc
            })
            .collect()
    }

    #[test]
    fn two_by_two_inverse() {
        // params [1,2]: x = [2 b0 - b1, b1 - b0]
        let b0 = rat(3, 2);
        let b1 = rat(-5, 7);
        let x = solve_vandermonde(&[1, 2], &[b0.clone(), b1.clone()]).unwrap();
        assert_eq!(x[0], rat_int(2) * &b0 - &b1);
        assert_eq!(x[1], &b1 - &b0);
    }

    #[test]
    fn constant_rhs_gives_constant_solution() {
        let one = rat_int(1);
        let x = solve_vandermonde(&[1, 2, 3], &[one.clone(), one.clone(), one]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(0), rat_int(0)]);
    }

    #[test]
    fn round_trip_on_symmetric_params() {
        let params = [-1, 0, 1];
        let x = vec![rat(2, 3), rat_int(-4), rat(7, 5)];
        let rhs = eval_rows(&params, &x);
        assert_eq!(solve_vandermonde(&params, &rhs).unwrap(), x);
    }

    #[test]
    fn duplicate_parameters_are_singular() {
        let e = solve_vandermonde(&[1, 3, 1], &[rat_int(0), rat_int(0), rat_int(0)]);
        assert!(matches!(e, Err(Error::SingularVandermonde(1))));
    }

    #[test]
    fn dual_solve_matches_moments() {
        // moments sum_k t_k^m x_k
        let params = [-2, -1, 0, 1, 2];
        let x = vec![rat(1, 2), rat_int(3), rat_int(-1), rat(5, 3), rat_int(2)];
        let rhs: Vec<Rat> = (0..params.len() as u32)
            .map(|m| {
                let mut acc = Rat::zero();
                for (&t, xc) in params.iter().zip(&x) {
                    acc += xc * crate::algebra::rat::int_pow(t, m);
                }
                acc
            })
            .collect();
        assert_eq!(solve_vandermonde_dual(&params, &rhs).unwrap(), x);
    }
}
