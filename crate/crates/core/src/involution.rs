//! Involutions of a root datum and the derived combinatorics: validation,
//! theta-orders, invariant roots, eigenlattices, w_theta, theta-star, and
//! the type 1 / type 2 split of non-invariant roots.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::errors::{Error, Result};
use crate::lattice::{kernel_basis, vec_add, vec_dot, vec_neg, vec_zero, IntegerMatrix, Lattice};
use crate::root_datum::{
    indecomposable_positives, longest_element, longest_element_over_simples, product_datum,
    BasedRootDatum, RootDatum,
};

/// Order-2 lattice automorphism of the character lattice that permutes the
/// roots. The cocharacter action is always the transpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatumInvolution {
    action: IntegerMatrix,
}

impl DatumInvolution {
    pub fn matrix(&self) -> &IntegerMatrix {
        &self.action
    }

    pub fn cochar_matrix(&self) -> IntegerMatrix {
        self.action.transpose()
    }

    pub fn apply_char(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.action.mul_vec(x)
    }

    pub fn apply_cochar(&self, y: &[BigInt]) -> Vec<BigInt> {
        // transpose action without materializing the transpose
        (0..self.action.cols())
            .map(|j| vec_dot(&self.action.column(j), y))
            .collect()
    }
}

/// Checks every involution invariant and wraps the matrix.
pub fn validate_involution(datum: &RootDatum, theta: IntegerMatrix) -> Result<DatumInvolution> {
    let n = datum.char_rank();
    if theta.rows() != n || theta.cols() != n {
        return Err(Error::WrongShape {
            expected: format!("{n}x{n} matrix"),
            got: format!("{}x{}", theta.rows(), theta.cols()),
        });
    }
    if !theta.mul(&theta).is_identity() {
        return Err(Error::NotInvolution);
    }
    let inv = DatumInvolution { action: theta };
    for i in 0..datum.num_roots() {
        let img = inv.apply_char(datum.root(i));
        let Some(j) = datum.root_index(&img) else {
            return Err(Error::RootNotPreserved {
                root: datum.root(i).to_vec(),
            });
        };
        if inv.apply_cochar(datum.coroot(i)) != datum.coroot(j) {
            return Err(Error::CorootIncompatible {
                root: datum.root(i).to_vec(),
            });
        }
    }
    // pairing preservation is automatic from the transpose; asserted anyway
    for i in 0..datum.num_roots() {
        for j in 0..datum.num_roots() {
            let lhs = vec_dot(
                &inv.apply_char(datum.root(i)),
                &inv.apply_cochar(datum.coroot(j)),
            );
            if lhs != vec_dot(datum.root(i), datum.coroot(j)) {
                return Err(Error::Internal(
                    "involution fails to preserve the canonical pairing".into(),
                ));
            }
        }
    }
    Ok(inv)
}

/// +1 and -1 eigenlattices of the transpose action on cocharacters:
/// the cocharacter lattices of the invariant and split subtori.
pub fn eigenlattices(theta: &DatumInvolution, rank: usize) -> (Lattice, Lattice) {
    let t = theta.cochar_matrix();
    let mut plus = t.clone();
    let mut minus = t;
    for i in 0..rank {
        let v = plus.get(i, i) - BigInt::one();
        plus.set(i, i, v);
        let v = minus.get(i, i) + BigInt::one();
        minus.set(i, i, v);
    }
    (kernel_basis(&plus), kernel_basis(&minus))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootKind {
    Invariant,
    Type1,
    Type2,
}

/// Everything analyze() derives from one involution: a theta-order, the
/// invariant roots and simples, the eigenlattices, w_theta, theta-star and
/// the per-root type tags.
#[derive(Debug, Clone)]
pub struct ThetaAnalysis {
    based: BasedRootDatum,
    theta: DatumInvolution,
    invariant_roots: Vec<usize>,
    invariant_simples: Vec<usize>,
    plus_lattice: Lattice,
    minus_lattice: Lattice,
    w_theta: IntegerMatrix,
    theta_star: Vec<usize>,
    root_types: Vec<RootKind>,
}

impl ThetaAnalysis {
    pub fn based(&self) -> &BasedRootDatum {
        &self.based
    }

    pub fn datum(&self) -> &RootDatum {
        self.based.datum()
    }

    pub fn theta(&self) -> &DatumInvolution {
        &self.theta
    }

    pub fn invariant_roots(&self) -> &[usize] {
        &self.invariant_roots
    }

    /// Indices (into the root list) of the theta-invariant simple roots.
    pub fn invariant_simples(&self) -> &[usize] {
        &self.invariant_simples
    }

    pub fn plus_lattice(&self) -> &Lattice {
        &self.plus_lattice
    }

    pub fn minus_lattice(&self) -> &Lattice {
        &self.minus_lattice
    }

    pub fn w_theta(&self) -> &IntegerMatrix {
        &self.w_theta
    }

    /// Permutation of simple-root positions induced by (-theta) ∘ w_theta.
    pub fn theta_star(&self) -> &[usize] {
        &self.theta_star
    }

    pub fn root_types(&self) -> &[RootKind] {
        &self.root_types
    }

    pub fn root_type(&self, idx: usize) -> RootKind {
        self.root_types[idx]
    }

    pub fn is_invariant(&self, idx: usize) -> bool {
        self.root_types[idx] == RootKind::Invariant
    }
}

/// theta-order variants: the default deterministic search plus an
/// alternative chamber, used to test order-independence downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderVariant {
    Standard,
    OppositeMinus,
}

/// Positive system in which every positive non-invariant root is sent
/// negative by theta. Ordering is lexicographic on the pair of pairings
/// against a generic minus-lattice vector and a generic plus-lattice
/// vector, so the minus pairing dominates whenever it is nonzero.
pub fn theta_order(datum: &RootDatum, theta: &DatumInvolution) -> Result<BasedRootDatum> {
    theta_order_variant(datum, theta, OrderVariant::Standard)
}

pub fn theta_order_variant(
    datum: &RootDatum,
    theta: &DatumInvolution,
    variant: OrderVariant,
) -> Result<BasedRootDatum> {
    let (plus, minus) = eigenlattices(theta, datum.char_rank());
    let invariant: Vec<bool> = (0..datum.num_roots())
        .map(|i| theta.apply_char(datum.root(i)) == datum.root(i))
        .collect();

    let non_invariant_roots: Vec<&[BigInt]> = (0..datum.num_roots())
        .filter(|&i| !invariant[i])
        .map(|i| datum.root(i))
        .collect();
    let invariant_roots: Vec<&[BigInt]> = (0..datum.num_roots())
        .filter(|&i| invariant[i])
        .map(|i| datum.root(i))
        .collect();

    let mut v_minus = generic_in_lattice(&minus, &non_invariant_roots, datum)?;
    let v_plus = generic_in_lattice(&plus, &invariant_roots, datum)?;
    if variant == OrderVariant::OppositeMinus {
        v_minus = vec_neg(&v_minus);
    }

    let mut positives = Vec::new();
    for i in 0..datum.num_roots() {
        let s_minus = vec_dot(datum.root(i), &v_minus);
        let s_plus = vec_dot(datum.root(i), &v_plus);
        let positive = if !s_minus.is_zero() {
            s_minus.is_positive()
        } else if !s_plus.is_zero() {
            s_plus.is_positive()
        } else {
            return Err(Error::Internal(format!(
                "root {:?} pairs to zero with both generic vectors",
                datum.root(i)
            )));
        };
        if positive {
            positives.push(i);
        }
    }
    let simples = indecomposable_positives(datum, &positives);
    let based = BasedRootDatum::new(datum.clone(), simples, positives)?;

    // the defining property of a theta-order
    for &i in based.positive_roots() {
        if !invariant[i] {
            let img = theta.apply_char(datum.root(i));
            let j = datum.root_index(&img).expect("validated involution");
            if based.is_positive(j) {
                return Err(Error::Internal(format!(
                    "theta-order property failed at root {:?}",
                    datum.root(i)
                )));
            }
        }
    }
    Ok(based)
}

/// Deterministic vector in the rational span of `lattice` pairing nonzero
/// with every listed root: weights 1, B, B^2, ... over the basis rows,
/// permuted through basis orders and rescaled until generic.
fn generic_in_lattice(
    lattice: &Lattice,
    must_not_kill: &[&[BigInt]],
    datum: &RootDatum,
) -> Result<Vec<BigInt>> {
    let rank = lattice.rank();
    let basis = lattice.basis_rows();
    if rank == 0 {
        if must_not_kill.is_empty() {
            return Ok(vec_zero(lattice.ambient_rank()));
        }
        return Err(Error::Internal(
            "no room for a generic vector in a rank-0 lattice".into(),
        ));
    }
    let mut coord_sum_max = BigInt::one();
    for r in datum.roots() {
        let s: BigInt = r.iter().map(|x| x.abs()).sum();
        if s > coord_sum_max {
            coord_sum_max = s;
        }
    }
    let base0 = BigInt::from(2) * coord_sum_max + BigInt::one();
    let mut base = base0.clone();
    for _ in 0..64 {
        let mut perm: Vec<usize> = (0..rank).collect();
        let mut tries = 0;
        loop {
            let mut weights = Vec::with_capacity(rank);
            let mut w = BigInt::one();
            for _ in 0..rank {
                weights.push(w.clone());
                w *= &base;
            }
            let mut v = vec_zero(lattice.ambient_rank());
            for (slot, &row) in perm.iter().enumerate() {
                let scaled: Vec<BigInt> =
                    basis[row].iter().map(|x| x * &weights[slot]).collect();
                v = vec_add(&v, &scaled);
            }
            if must_not_kill.iter().all(|r| !vec_dot(r, &v).is_zero()) {
                return Ok(v);
            }
            tries += 1;
            if tries >= 5040 || !next_permutation(&mut perm) {
                break;
            }
        }
        base *= &base0;
    }
    Err(Error::Internal(
        "deterministic genericity search exhausted its retries".into(),
    ))
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Full theta-analysis: theta-order, invariant data, eigenlattices,
/// w_theta as the longest element over the invariant simples, theta-star,
/// and per-root type tags.
pub fn analyze(datum: &RootDatum, theta: &DatumInvolution) -> Result<ThetaAnalysis> {
    analyze_variant(datum, theta, OrderVariant::Standard)
}

pub fn analyze_variant(
    datum: &RootDatum,
    theta: &DatumInvolution,
    variant: OrderVariant,
) -> Result<ThetaAnalysis> {
    let based = theta_order_variant(datum, theta, variant)?;
    let (plus_lattice, minus_lattice) = eigenlattices(theta, datum.char_rank());
    if plus_lattice.rank() + minus_lattice.rank() != datum.char_rank() {
        return Err(Error::Internal(
            "eigenlattices do not span: the sum of ranks misses the ambient rank".into(),
        ));
    }

    let mut root_types = Vec::with_capacity(datum.num_roots());
    let mut invariant_roots = Vec::new();
    for i in 0..datum.num_roots() {
        let img = theta.apply_char(datum.root(i));
        if img == datum.root(i) {
            root_types.push(RootKind::Invariant);
            invariant_roots.push(i);
        } else if vec_neg(&img) == datum.root(i) {
            root_types.push(RootKind::Type1);
        } else {
            root_types.push(RootKind::Type2);
        }
    }
    let invariant_simples: Vec<usize> = based
        .simple_roots()
        .iter()
        .copied()
        .filter(|&i| root_types[i] == RootKind::Invariant)
        .collect();

    // w_theta: longest element over the invariant simples, driven by the
    // sum of the invariant positive roots
    let w_theta = if invariant_simples.is_empty() {
        IntegerMatrix::identity(datum.char_rank())
    } else {
        let mut seed = vec_zero(datum.char_rank());
        for &i in based.positive_roots() {
            if root_types[i] == RootKind::Invariant {
                seed = vec_add(&seed, datum.root(i));
            }
        }
        longest_element_over_simples(datum, &invariant_simples, &seed)
    };
    if !w_theta.mul(&w_theta).is_identity() {
        return Err(Error::Internal("w_theta is not an involution".into()));
    }

    // theta-star = (-theta) ∘ w_theta must permute the simple roots
    let star_matrix = theta.matrix().neg().mul(&w_theta);
    let mut theta_star = Vec::with_capacity(based.simple_roots().len());
    for &s in based.simple_roots() {
        let img = star_matrix.mul_vec(datum.root(s));
        let j = datum.root_index(&img).ok_or_else(|| {
            Error::Internal(format!(
                "-theta ∘ w_theta sends simple root {:?} outside the root set",
                datum.root(s)
            ))
        })?;
        let pos = based
            .simple_roots()
            .iter()
            .position(|&t| t == j)
            .ok_or_else(|| {
                Error::Internal(format!(
                    "-theta ∘ w_theta sends simple root {:?} to a non-simple root",
                    datum.root(s)
                ))
            })?;
        theta_star.push(pos);
    }
    let mut seen = vec![false; theta_star.len()];
    for &p in &theta_star {
        if seen[p] {
            return Err(Error::Internal("theta-star is not a permutation".into()));
        }
        seen[p] = true;
    }
    // theta-star preserves the invariant and non-invariant simples setwise
    for (pos, &s) in based.simple_roots().iter().enumerate() {
        let t = based.simple_roots()[theta_star[pos]];
        if (root_types[s] == RootKind::Invariant) != (root_types[t] == RootKind::Invariant) {
            return Err(Error::Internal(
                "theta-star mixes invariant and non-invariant simples".into(),
            ));
        }
    }

    Ok(ThetaAnalysis {
        based,
        theta: theta.clone(),
        invariant_roots,
        invariant_simples,
        plus_lattice,
        minus_lattice,
        w_theta,
        theta_star,
        root_types,
    })
}

/// The lattice map -w0: acts on a maximal torus as s -> w0(s^-1).
pub fn chevalley_involution(based: &BasedRootDatum) -> Result<DatumInvolution> {
    let w0 = longest_element(based);
    let c = w0.neg();
    let inv = validate_involution(based.datum(), c)?;
    // -w0 permutes the simple system (the duality diagram automorphism)
    for &s in based.simple_roots() {
        let img = inv.apply_char(based.datum().root(s));
        let j = based
            .datum()
            .root_index(&img)
            .expect("validated involution");
        if !based.simple_roots().contains(&j) {
            return Err(Error::Internal(
                "Chevalley involution does not preserve the simple system".into(),
            ));
        }
    }
    Ok(inv)
}

/// The datum of G x G with the coordinate swap involution.
pub fn swap_involution(datum: &RootDatum) -> Result<(RootDatum, DatumInvolution)> {
    let product = product_datum(datum, datum)?;
    let r = datum.char_rank();
    let mut swap = IntegerMatrix::zero(2 * r, 2 * r);
    for i in 0..r {
        swap.set(i, r + i, BigInt::one());
        swap.set(r + i, i, BigInt::one());
    }
    let theta = validate_involution(&product, swap)?;
    Ok((product, theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{gl, neg_id, reversal, sl, swap_first_last, symplectic_pairs};
    use crate::lattice::vec_from_i64;

    #[test]
    fn neg_id_is_valid_on_gl() {
        for n in 2..=4 {
            let based = gl(n).unwrap();
            let theta = validate_involution(based.datum(), neg_id(n)).unwrap();
            for i in 0..based.datum().num_roots() {
                assert_eq!(
                    theta.apply_char(based.datum().root(i)),
                    vec_neg(based.datum().root(i))
                );
            }
        }
    }

    #[test]
    fn reversal_is_valid_on_gl4() {
        let based = gl(4).unwrap();
        validate_involution(based.datum(), reversal(4)).unwrap();
    }

    #[test]
    fn shear_is_not_an_involution() {
        let based = gl(2).unwrap();
        let shear = IntegerMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        match validate_involution(based.datum(), shear) {
            Err(Error::NotInvolution) => {}
            other => panic!("expected NotInvolution, got {other:?}"),
        }
    }

    #[test]
    fn rotation_does_not_preserve_roots() {
        // order-2 signed permutation that is involutive but moves roots
        // outside the root set of sp4
        let based = crate::catalog::sp(4).unwrap();
        let m = IntegerMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        // e1 <-> e2 preserves sp4 roots, so take something that fails:
        assert!(validate_involution(based.datum(), m).is_ok());
        let bad = IntegerMatrix::from_i64_rows(&[&[1, 0], &[1, -1]]);
        match validate_involution(based.datum(), bad) {
            Err(Error::RootNotPreserved { .. }) | Err(Error::NotInvolution) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn theta_order_for_gl3_swap() {
        let based = gl(3).unwrap();
        let theta = validate_involution(based.datum(), swap_first_last(3)).unwrap();
        let ordered = theta_order(based.datum(), &theta).unwrap();
        for &i in ordered.positive_roots() {
            let img = theta.apply_char(ordered.datum().root(i));
            if img != ordered.datum().root(i) {
                let j = ordered.datum().root_index(&img).unwrap();
                assert!(!ordered.is_positive(j));
            }
        }
    }

    #[test]
    fn theta_order_neg_id_everything_works() {
        let based = gl(3).unwrap();
        let theta = validate_involution(based.datum(), neg_id(3)).unwrap();
        let ordered = theta_order(based.datum(), &theta).unwrap();
        assert_eq!(ordered.positive_roots().len(), 3);
    }

    #[test]
    fn analyze_gl4_symplectic() {
        let based = gl(4).unwrap();
        let theta = validate_involution(based.datum(), symplectic_pairs(4)).unwrap();
        let analysis = analyze(based.datum(), &theta).unwrap();
        // invariant simples are a1 = e1-e2 and a3 = e3-e4 up to sign
        let inv: Vec<Vec<BigInt>> = analysis
            .invariant_simples()
            .iter()
            .map(|&i| analysis.datum().root(i).to_vec())
            .collect();
        assert_eq!(inv.len(), 2);
        for v in &inv {
            let neg = vec_neg(v);
            assert!(
                *v == vec_from_i64(&[1, -1, 0, 0])
                    || neg == vec_from_i64(&[1, -1, 0, 0])
                    || *v == vec_from_i64(&[0, 0, 1, -1])
                    || neg == vec_from_i64(&[0, 0, 1, -1])
            );
        }
        assert_eq!(
            analysis.minus_lattice(),
            &Lattice::from_generators(
                4,
                vec![vec_from_i64(&[1, 1, 0, 0]), vec_from_i64(&[0, 0, 1, 1])]
            )
        );
        // w_theta is the product of the two commuting reflections
        let s1 = analysis
            .datum()
            .reflection_matrix(analysis.invariant_simples()[0]);
        let s3 = analysis
            .datum()
            .reflection_matrix(analysis.invariant_simples()[1]);
        assert_eq!(*analysis.w_theta(), s1.mul(&s3));
    }

    #[test]
    fn analyze_gl4_reversal_has_no_invariants() {
        let based = gl(4).unwrap();
        let theta = validate_involution(based.datum(), reversal(4)).unwrap();
        let analysis = analyze(based.datum(), &theta).unwrap();
        assert!(analysis.invariant_roots().is_empty());
        assert!(analysis.w_theta().is_identity());
        // exactly one simple is type 1 (the middle one), the others pair up
        let type1 = analysis
            .based()
            .simple_roots()
            .iter()
            .filter(|&&i| analysis.root_type(i) == RootKind::Type1)
            .count();
        assert_eq!(type1, 1);
    }

    #[test]
    fn analyze_gln_neg_id_all_type1() {
        let based = gl(3).unwrap();
        let theta = validate_involution(based.datum(), neg_id(3)).unwrap();
        let analysis = analyze(based.datum(), &theta).unwrap();
        assert!(analysis.invariant_roots().is_empty());
        assert!(analysis
            .root_types()
            .iter()
            .all(|&t| t == RootKind::Type1));
        assert!(analysis.w_theta().is_identity());
        // theta-star is the identity permutation here
        assert!(analysis.theta_star().iter().enumerate().all(|(i, &p)| i == p));
    }

    #[test]
    fn root_type_examples() {
        let based = gl(3).unwrap();
        let theta = validate_involution(based.datum(), swap_first_last(3)).unwrap();
        let analysis = analyze(based.datum(), &theta).unwrap();
        let e1_e3 = analysis
            .datum()
            .root_index(&vec_from_i64(&[1, 0, -1]))
            .unwrap();
        assert_eq!(analysis.root_type(e1_e3), RootKind::Type1);

        let based = gl(4).unwrap();
        let theta = validate_involution(based.datum(), reversal(4)).unwrap();
        let analysis = analyze(based.datum(), &theta).unwrap();
        let a1 = analysis
            .datum()
            .root_index(&vec_from_i64(&[1, -1, 0, 0]))
            .unwrap();
        assert_eq!(analysis.root_type(a1), RootKind::Type2);

        let theta = validate_involution(based.datum(), symplectic_pairs(4)).unwrap();
        let analysis = analyze(based.datum(), &theta).unwrap();
        assert_eq!(analysis.root_type(a1), RootKind::Invariant);
    }

    #[test]
    fn chevalley_examples() {
        // SL2 weight lattice: c = +1
        let based = sl(2).unwrap();
        let c = chevalley_involution(&based).unwrap();
        assert!(c.matrix().is_identity());

        // GL3: c sends e_i to -e_{4-i}
        let based = gl(3).unwrap();
        let c = chevalley_involution(&based).unwrap();
        let expected = IntegerMatrix::from_i64_rows(&[&[0, 0, -1], &[0, -1, 0], &[-1, 0, 0]]);
        assert_eq!(*c.matrix(), expected);

        // Sp4: w0 = -1 so c = identity
        let based = crate::catalog::sp(4).unwrap();
        let c = chevalley_involution(&based).unwrap();
        assert!(c.matrix().is_identity());
    }

    #[test]
    fn swap_involution_examples() {
        let based = crate::catalog::pgl(2).unwrap();
        let (product, theta) = swap_involution(based.datum()).unwrap();
        assert_eq!(product.char_rank(), 2);
        assert_eq!(product.num_roots(), 4);
        let analysis = analyze(&product, &theta).unwrap();
        assert!(analysis.invariant_roots().is_empty());

        let t = crate::catalog::torus(1).unwrap();
        let (product, _) = swap_involution(t.datum()).unwrap();
        assert_eq!(product.char_rank(), 2);
        assert_eq!(product.num_roots(), 0);

        let based = gl(2).unwrap();
        let (product, theta) = swap_involution(based.datum()).unwrap();
        assert_eq!(product.char_rank(), 4);
        let analysis = analyze(&product, &theta).unwrap();
        assert!(analysis.invariant_roots().is_empty());
    }

    #[test]
    fn invariant_chars_pair_zero_with_minus_lattice() {
        let based = gl(4).unwrap();
        for theta_m in [symplectic_pairs(4), reversal(4), neg_id(4)] {
            let theta = validate_involution(based.datum(), theta_m).unwrap();
            let analysis = analyze(based.datum(), &theta).unwrap();
            // +1 eigenlattice of theta on characters
            let mut shifted = theta.matrix().clone();
            for i in 0..4 {
                let v = shifted.get(i, i) - BigInt::one();
                shifted.set(i, i, v);
            }
            let plus_chars = kernel_basis(&shifted);
            for x in plus_chars.basis_rows() {
                for v in analysis.minus_lattice().basis_rows() {
                    assert!(vec_dot(&x, &v).is_zero());
                }
            }
        }
    }

    #[test]
    fn theta_preserves_root_lengths() {
        let based = gl(4).unwrap();
        let form = crate::root_datum::weyl_invariant_inner_product(based.datum());
        for theta_m in [symplectic_pairs(4), reversal(4), neg_id(4)] {
            let theta = validate_involution(based.datum(), theta_m).unwrap();
            for r in based.datum().roots() {
                let img = theta.apply_char(r);
                assert_eq!(form.pair(&img, &img), form.pair(r, r));
            }
        }
    }
}
