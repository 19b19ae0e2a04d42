//! Linear disjointness over Q: exact null-space computation on the product
//! family of two bases inside an ambient number field.

use crate::linalg::nullspace_rat;
use crate::rat::Rat;

use super::numberfield::El;
use super::poly::Coef;
use super::GaloisError;

/// Result of the disjointness probe: the products `a_i b_j` are enumerated
/// row-major; each relation is a nontrivial rational dependence among them.
#[derive(Clone, Debug)]
pub struct DisjointnessReport {
    pub independent: bool,
    pub relations: Vec<Vec<Rat>>,
}

impl DisjointnessReport {
    /// Does the given coefficient vector (over the products, row-major)
    /// annihilate the family?
    pub fn relation_holds(products: &[El], coeffs: &[Rat]) -> bool {
        if products.is_empty() || products.len() != coeffs.len() {
            return false;
        }
        let mut acc = products[0].zero_like();
        for (p, c) in products.iter().zip(coeffs) {
            let term = p.mul(&p.one_like().field().from_rat(c.clone()));
            acc = acc.add(&term);
        }
        Coef::is_zero(&acc)
    }
}

/// All products of the two bases, row-major (`a_0 b_0, a_0 b_1, ...`).
pub fn product_family(basis_a: &[El], basis_b: &[El]) -> Vec<El> {
    let mut out = Vec::with_capacity(basis_a.len() * basis_b.len());
    for a in basis_a {
        for b in basis_b {
            out.push(a.mul(b));
        }
    }
    out
}

/// The `rs` products of the two families must stay independent over Q for
/// linear disjointness; a nontrivial relation is returned otherwise.
pub fn linear_disjointness_probe(
    basis_a: &[El],
    basis_b: &[El],
) -> Result<DisjointnessReport, GaloisError> {
    if basis_a.is_empty() || basis_b.is_empty() {
        return Err(GaloisError::BadInput("empty basis".into()));
    }
    let products = product_family(basis_a, basis_b);
    let dim = products[0].q_coordinates().len();
    let coords: Vec<Vec<Rat>> = products.iter().map(|p| p.q_coordinates()).collect();
    for c in &coords {
        if c.len() != dim {
            return Err(GaloisError::BadInput(
                "elements live in different fields".into(),
            ));
        }
    }
    // matrix with one column per product
    let matrix: Vec<Vec<Rat>> = (0..dim)
        .map(|row| coords.iter().map(|c| c[row].clone()).collect())
        .collect();
    let relations = nullspace_rat(&matrix);
    Ok(DisjointnessReport {
        independent: relations.is_empty(),
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::factor::{extend_field, qpoly};
    use crate::galois::numberfield::FieldH;
    use crate::rat::rint;

    #[test]
    fn conjugate_cubic_bases_are_dependent() {
        // in Q(eta)(j) with eta^3 = 2, j^2 + j + 1 = 0:
        // (1, eta, eta^2) and (1, j eta, (j eta)^2) satisfy
        // (j eta)^2 + (j eta) eta + eta^2 = 0
        let l = extend_field(&FieldH::Q, &qpoly(&[-2, 0, 0, 1]), "eta").unwrap();
        let minpoly_j = crate::galois::poly::Poly::new(vec![l.one(), l.one(), l.one()]);
        let top = extend_field(&l, &minpoly_j, "j").unwrap();
        let eta = top.embed(&l.generator().unwrap()).unwrap();
        let j = top.generator().unwrap();
        let je = j.mul(&eta);
        let basis_a = vec![top.one(), eta.clone(), eta.mul(&eta)];
        let basis_b = vec![top.one(), je.clone(), je.mul(&je)];
        let report = linear_disjointness_probe(&basis_a, &basis_b).unwrap();
        assert!(!report.independent);
        // the specific relation: 1*(je)^2 + eta*(je) + eta^2*1 = 0
        // products row-major: index (i, j) = 3*i + j
        let mut coeffs = vec![rint(0); 9];
        coeffs[2] = rint(1); // 1 * (je)^2
        coeffs[4] = rint(1); // eta * je
        coeffs[6] = rint(1); // eta^2 * 1
        let products = product_family(&basis_a, &basis_b);
        assert!(DisjointnessReport::relation_holds(&products, &coeffs));
    }

    #[test]
    fn generator_and_cyclotomic_are_disjoint() {
        // (1, eta) and (1, j) are independent in Q(eta)(j)
        let l = extend_field(&FieldH::Q, &qpoly(&[-2, 0, 0, 1]), "eta").unwrap();
        let minpoly_j = crate::galois::poly::Poly::new(vec![l.one(), l.one(), l.one()]);
        let top = extend_field(&l, &minpoly_j, "j").unwrap();
        let eta = top.embed(&l.generator().unwrap()).unwrap();
        let j = top.generator().unwrap();
        let report =
            linear_disjointness_probe(&[top.one(), eta], &[top.one(), j]).unwrap();
        assert!(report.independent);
    }
}
