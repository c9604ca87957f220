use std::collections::BTreeMap;

use super::{involution_conjugate, Block, ConstructError, ProjectiveCurveMap, C_VARS};
use crate::exactalg::{ExactMatrix, Rational, SparseMultiPoly};

/// Symmetric array of forms indexed by unordered pairs of target labels.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricFamily {
    labels: Vec<String>,
    coefficients: BTreeMap<(usize, usize), SparseMultiPoly<Rational>>,
}

impl QuadricFamily {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coefficient of `X_a X_b`; absent pairs are zero.
    pub fn coefficient(&self, a: usize, b: usize) -> Option<&SparseMultiPoly<Rational>> {
        self.coefficients.get(&(a.min(b), a.max(b)))
    }

    /// `(a, b, coefficient)` with `a <= b`, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &SparseMultiPoly<Rational>)> {
        self.coefficients.iter().map(|(&(a, b), p)| (a, b, p))
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

fn descend(
    p: &SparseMultiPoly<Rational>,
    what: impl FnOnce() -> String,
) -> Result<SparseMultiPoly<Rational>, ConstructError> {
    p.deflate(2, &C_VARS).ok_or_else(|| ConstructError::NotDescendable {
        what: what(),
        poly: p.to_string(),
    })
}

/// Expands `L_s(X) L_{ι s}(X)` with `L_s(X) = sum_e j_e(S) X_e`, checks that
/// the cross-block coefficients vanish and writes the within-block
/// coefficients in `T_i = S_i^2`.
pub fn paired_quadric_descend(j: &ProjectiveCurveMap) -> Result<QuadricFamily, ConstructError> {
    j.degree()?;
    let blocks = j
        .target_labels()
        .iter()
        .map(|l| Block::of_label(l))
        .collect::<Result<Vec<_>, _>>()?;
    let conj = involution_conjugate(j);
    let (e, c) = (j.entries(), conj.entries());
    let mut coefficients = BTreeMap::new();
    for a in 0..e.len() {
        for b in a..e.len() {
            let coef = if a == b {
                &e[a] * &c[a]
            } else {
                &(&e[a] * &c[b]) + &(&e[b] * &c[a])
            };
            let (la, lb) = (&j.target_labels()[a], &j.target_labels()[b]);
            if blocks[a] != blocks[b] {
                if !coef.is_zero() {
                    return Err(ConstructError::MixedTermNonzero {
                        left: la.clone(),
                        right: lb.clone(),
                        coefficient: coef.to_string(),
                    });
                }
                continue;
            }
            coefficients.insert((a, b), descend(&coef, || format!("coefficient of {la}*{lb}"))?);
        }
    }
    Ok(QuadricFamily {
        labels: j.target_labels().to_vec(),
        coefficients,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PullbackRow {
    pub left: String,
    pub right: String,
    pub image: SparseMultiPoly<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PullbackTable {
    pub rows: Vec<PullbackRow>,
    /// Coordinates of each row in the basis `T0^n, T0^(n-1) T1, ..., T1^n`.
    pub matrix: ExactMatrix<Rational>,
    pub rank: usize,
}

impl PullbackTable {
    pub fn basis_degree(&self) -> usize {
        self.matrix.cols() - 1
    }

    pub fn is_surjective(&self) -> bool {
        self.rank == self.matrix.cols()
    }

    /// Rows as `("Xa*Xb", "image")` strings.
    pub fn rendered(&self) -> Vec<(String, String)> {
        self.rows
            .iter()
            .map(|r| (format!("{}*{}", r.left, r.right), r.image.to_string()))
            .collect()
    }
}

/// Within-block index pairs `a <= b`: first `V+`, then `V-`.
fn within_block_pairs(blocks: &[Block]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for block in [Block::Plus, Block::Minus] {
        let idx: Vec<usize> = (0..blocks.len()).filter(|&i| blocks[i] == block).collect();
        for (p, &a) in idx.iter().enumerate() {
            for &b in &idx[p..] {
                out.push((a, b));
            }
        }
    }
    out
}

/// Pulls back each within-block quadric monomial `X_a X_b` along `jprime`,
/// writes it in `T_i = S_i^2` and records the rank of the coefficient matrix.
pub fn quadratic_pullback_table(jprime: &ProjectiveCurveMap) -> Result<PullbackTable, ConstructError> {
    let n = jprime.degree()? as usize;
    let blocks = jprime
        .target_labels()
        .iter()
        .map(|l| Block::of_label(l))
        .collect::<Result<Vec<_>, _>>()?;
    let e = jprime.entries();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (a, b) in within_block_pairs(&blocks) {
        let (la, lb) = (&jprime.target_labels()[a], &jprime.target_labels()[b]);
        let image = descend(&(&e[a] * &e[b]), || format!("pullback of {la}*{lb}"))?;
        entries.extend((0..=n).map(|k| image.coeff(&[(n - k) as u32, k as u32])));
        rows.push(PullbackRow {
            left: la.clone(),
            right: lb.clone(),
            image,
        });
    }
    let matrix = ExactMatrix::new(rows.len(), n + 1, entries)?;
    let rank = matrix.rank();
    Ok(PullbackTable { rows, matrix, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn corrected_j_descends() {
        let q = paired_quadric_descend(&fixtures::j_corrected()).unwrap();
        assert_eq!(q.len(), 12);
        for (_, _, p) in q.entries() {
            assert_eq!(p.homogeneous_degree().unwrap(), Some(5));
            assert_eq!(p.vars(), C_VARS);
        }
        assert_eq!(q.coefficient(0, 0).unwrap().to_string(), "T0^5");
        assert_eq!(q.coefficient(5, 5).unwrap().to_string(), "-T1^5");
        assert_eq!(q.coefficient(1, 0).unwrap().to_string(), "2*T0^4*T1");
        assert!(q.coefficient(0, 3).is_none());
    }

    #[test]
    fn perturbation_breaks_descent() {
        let j = fixtures::j_corrected();
        let bump = SparseMultiPoly::parse("S0^5", &super::super::D_VARS).unwrap();
        let mut entries = j.entries().to_vec();
        entries[5] = &entries[5] + &bump;
        let p = ProjectiveCurveMap::new(super::super::D_VARS, entries, j.target_labels().to_vec()).unwrap();
        match paired_quadric_descend(&p).unwrap_err() {
            ConstructError::MixedTermNonzero {
                left,
                right,
                coefficient,
            } => {
                assert_eq!((left.as_str(), right.as_str()), ("Xp0", "Xm2"));
                assert_eq!(coefficient, "2*S0^10");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn table_matches_reference() {
        let table = quadratic_pullback_table(&fixtures::jprime_corrected()).unwrap();
        let reference = fixtures::pullback_table_rows();
        assert_eq!(table.rows.len(), reference.len());
        for (row, (l, r, img)) in table.rows.iter().zip(&reference) {
            assert_eq!((&row.left, &row.right, row.image.to_string()), (l, r, img.clone()));
        }
        assert_eq!(table.rank, 6);
        assert!(table.is_surjective());
    }

    #[test]
    fn printed_jprime_gives_same_table() {
        let a = quadratic_pullback_table(&fixtures::jprime_corrected()).unwrap();
        let b = quadratic_pullback_table(&fixtures::jprime_printed_dedup()).unwrap();
        assert_eq!(a.rendered(), b.rendered());
    }

    #[test]
    fn odd_products_are_rejected() {
        let m = ProjectiveCurveMap::from_strs(&["S0^5", "S0^4*S1", "S0^5", "S0^5", "S0^5", "S0^5"]).unwrap();
        assert!(matches!(
            quadratic_pullback_table(&m),
            Err(ConstructError::NotDescendable { .. })
        ));
    }
}
