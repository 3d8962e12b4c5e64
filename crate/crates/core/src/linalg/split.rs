use super::echelon::RowReducer;
use super::factor::factor_poly;
use super::matrix::{kernel, solve, Matrix};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Minimal polynomial (monic) of a square matrix, from the first linear
/// dependency among `I, M, M^2, ..`.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert_eq!(m.rows(), m.cols(), "square matrix expected");
    let field = m.field();
    let n = m.rows();
    let flatten = |a: &Matrix| -> Vec<_> { (0..n).flat_map(|r| a.row(r).to_vec()).collect() };
    let mut powers = vec![flatten(&Matrix::identity(field, n))];
    let mut reducer = RowReducer::new(field, n * n);
    reducer.insert(powers[0].clone());
    let mut cur = Matrix::identity(field, n);
    loop {
        cur = cur.mul(m);
        let v = flatten(&cur);
        if !reducer.insert(v.clone()) {
            let basis = Matrix::from_columns(field, n * n, &powers);
            let c = solve(&basis, &v).expect("dependent power lies in the span");
            let mut coeffs: Vec<_> = c.into_iter().map(|x| -x).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        powers.push(v);
    }
}

/// Restriction of `a` to the invariant subspace spanned by the columns of `basis`.
fn restrict(a: &Matrix, basis: &Matrix) -> Result<Matrix> {
    let image = a.mul(basis);
    let r = basis.cols();
    let mut out = Matrix::zeros(a.field(), r, r);
    for j in 0..r {
        let col = solve(basis, &image.column(j))
            .map_err(|_| Error::Inconsistent("subspace is not invariant: operators do not commute".into()))?;
        for (i, x) in col.into_iter().enumerate() {
            out[(i, j)] = x;
        }
    }
    Ok(out)
}

/// Splits the space acted on by pairwise commuting diagonalizable operators
/// into common eigenspaces and returns the projector onto each (along the
/// sum of the others).
///
/// The order is deterministic: operators are processed in the given order and
/// eigenvalues within a subspace in increasing order.
pub fn split_commutative_algebra(ops: &[Matrix]) -> Result<Vec<Matrix>> {
    let Some(first) = ops.first() else {
        return Err(Error::DimensionMismatch("no operators to split".into()));
    };
    let field = first.field();
    let n = first.rows();
    for op in ops {
        if op.rows() != n || op.cols() != n {
            return Err(Error::DimensionMismatch("operators of different sizes".into()));
        }
    }
    let mut spaces = vec![Matrix::identity(field, n)];
    for op in ops {
        let mut next = Vec::new();
        for basis in spaces {
            let local = restrict(op, &basis)?;
            let fac = factor_poly(&minimal_polynomial(&local));
            if let Some((p, _)) = fac.factors.iter().find(|(p, _)| p.degree() != Some(1)) {
                return Err(Error::SplittingFieldTooSmall { degree: p.degree().unwrap_or(0) });
            }
            if fac.factors.iter().any(|(_, m)| *m > 1) {
                return Err(Error::NotDiagonalizable);
            }
            if fac.factors.len() == 1 {
                next.push(basis);
                continue;
            }
            let mut roots: Vec<_> = fac.factors.iter().map(|(p, _)| -p.coeffs()[0]).collect();
            roots.sort();
            for lambda in roots {
                let shifted = local.sub(&Matrix::identity(field, local.rows()).scale(lambda));
                let eig = kernel(&shifted);
                let eig = Matrix::from_columns(field, local.rows(), &eig);
                next.push(basis.mul(&eig));
            }
        }
        spaces = next;
    }
    let mut full = spaces[0].clone();
    for s in &spaces[1..] {
        full = full.hcat(s);
    }
    let inv = full.inverse().ok_or_else(|| Error::Inconsistent("eigenspaces do not span".into()))?;
    let mut start = 0;
    let mut projectors = Vec::with_capacity(spaces.len());
    for s in &spaces {
        let rows: Vec<usize> = (start..start + s.cols()).collect();
        projectors.push(s.mul(&inv.select_rows(&rows)));
        start += s.cols();
    }
    Ok(projectors)
}
