//! Dynkin classification: component letters from the Cartan matrix,
//! non-reduced BC detection, and lattice-position invariants that
//! distinguish isogenous groups (SL2 vs PGL2, Sp vs SO).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::errors::{Error, Result};
use crate::lattice::{
    kernel_basis, nontrivial_divisors, rational_solve_columns, smith_normal_form, solve_in_span,
    vec_dot, IntegerMatrix,
};
use crate::root_datum::{
    deterministic_generic_vector, express_over_independent, positive_system, RootDatum,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinType::A => "A",
            DynkinType::B => "B",
            DynkinType::C => "C",
            DynkinType::D => "D",
            DynkinType::E => "E",
            DynkinType::F => "F",
            DynkinType::G => "G",
            DynkinType::BC => "BC",
        };
        write!(f, "{s}")
    }
}

/// Dynkin components plus the lattice position of the character lattice
/// between the root lattice and the weight lattice of the derived part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub dynkin_components: Vec<(DynkinType, usize)>,
    pub radical_rank: usize,
    /// Elementary divisors > 1 of (weight lattice of the derived part) /
    /// (image of the character lattice).
    pub weight_over_char: Vec<u64>,
    /// Elementary divisors > 1 of (image of the character lattice) /
    /// (root lattice).
    pub char_over_root: Vec<u64>,
}

impl ClassificationReport {
    pub fn describe(&self) -> String {
        let comps = if self.dynkin_components.is_empty() {
            "no roots".to_string()
        } else {
            self.dynkin_components
                .iter()
                .map(|(t, r)| format!("{t}{r}"))
                .collect::<Vec<_>>()
                .join(" x ")
        };
        let mut s = comps;
        if self.radical_rank > 0 {
            s.push_str(&format!(", radical rank {}", self.radical_rank));
        }
        s.push_str(&format!(
            ", weight/char {:?}, char/root {:?}",
            self.weight_over_char, self.char_over_root
        ));
        if let Some(name) = self.known_name() {
            s.push_str(&format!(" = {name}"));
        }
        s
    }

    /// Well-known group matching this classification, for the families the
    /// catalog produces.
    pub fn known_name(&self) -> Option<String> {
        let inv = (&self.weight_over_char[..], &self.char_over_root[..]);
        match (&self.dynkin_components[..], self.radical_rank) {
            ([], 0) => Some("1".to_string()),
            ([], r) => Some(format!("GL_1(C)^{r}")),
            ([(DynkinType::A, n)], 0) => {
                let n = n + 1;
                match inv {
                    ([], [m]) if *m as usize == n => Some(format!("SL_{n}(C)")),
                    ([m], []) if *m as usize == n => Some(format!("PGL_{n}(C)")),
                    _ => None,
                }
            }
            ([(DynkinType::A, n)], 1) => {
                let n = n + 1;
                match inv {
                    ([], [m]) if *m as usize == n => Some(format!("GL_{n}(C)")),
                    _ => None,
                }
            }
            ([(DynkinType::C, n)], 0) => match inv {
                ([], [2]) => Some(format!("Sp_{}(C)", 2 * n)),
                ([2], []) => Some(format!("SO_{}(C)", 2 * n + 1)),
                _ => None,
            },
            ([(DynkinType::B, n)], 0) => match inv {
                ([2], []) => Some(format!("SO_{}(C)", 2 * n + 1)),
                ([], [2]) => Some(format!("Spin_{}(C)", 2 * n + 1)),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

// ---------------------------------------------------------------------------
// Cartan matrix analysis

fn cartan_entry(c: &IntegerMatrix, i: usize, j: usize) -> Result<i64> {
    let v = c.get(i, j);
    let small: i64 = v.try_into().map_err(|_| Error::NotFiniteType)?;
    Ok(small)
}

/// Validates the generalized Cartan matrix axioms and finite type of every
/// component.
pub fn check_finite_type(cartan: &IntegerMatrix) -> Result<()> {
    let k = cartan.rows();
    for i in 0..k {
        if *cartan.get(i, i) != BigInt::from(2) {
            return Err(Error::NotCartan {
                reason: format!("diagonal entry {i} is {}", cartan.get(i, i)),
            });
        }
        for j in 0..k {
            if i != j {
                if cartan.get(i, j).is_positive() {
                    return Err(Error::NotCartan {
                        reason: format!("positive off-diagonal entry at ({i},{j})"),
                    });
                }
                if cartan.get(i, j).is_zero() != cartan.get(j, i).is_zero() {
                    return Err(Error::NotCartan {
                        reason: format!("zero pattern asymmetric at ({i},{j})"),
                    });
                }
            }
        }
    }
    for comp in cartan_components(cartan) {
        identify_component(cartan, &comp)?;
    }
    Ok(())
}

/// Connected components of the Cartan matrix's underlying graph.
pub fn cartan_components(cartan: &IntegerMatrix) -> Vec<Vec<usize>> {
    let k = cartan.rows();
    let mut comp = vec![usize::MAX; k];
    let mut count = 0;
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if comp[j] == usize::MAX && i != j && !cartan.get(i, j).is_zero() {
                    comp[j] = count;
                    stack.push(j);
                }
            }
        }
        count += 1;
    }
    let mut out = vec![Vec::new(); count];
    for (i, &c) in comp.iter().enumerate() {
        out[c].push(i);
    }
    out
}

/// Identifies one connected component of a Cartan matrix, or rejects it as
/// not of finite type. Rank-2 double bonds are reported canonically as C2.
pub fn identify_component(cartan: &IntegerMatrix, nodes: &[usize]) -> Result<(DynkinType, usize)> {
    let k = nodes.len();
    if k == 1 {
        return Ok((DynkinType::A, 1));
    }
    // local adjacency with bond multiplicities
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut degree = vec![0usize; k];
    for a in 0..k {
        for b in a + 1..k {
            let ab = cartan_entry(cartan, nodes[a], nodes[b])?;
            let ba = cartan_entry(cartan, nodes[b], nodes[a])?;
            if !(-3..=0).contains(&ab) || !(-3..=0).contains(&ba) {
                return Err(Error::NotFiniteType);
            }
            let m = ab * ba;
            if m > 3 {
                return Err(Error::NotFiniteType);
            }
            if m > 0 {
                edges.push((a, b, m));
                degree[a] += 1;
                degree[b] += 1;
            }
        }
    }
    if edges.len() != k - 1 {
        // a connected graph on k nodes with != k-1 edges has a cycle
        return Err(Error::NotFiniteType);
    }
    if degree.iter().any(|&d| d >= 4) {
        return Err(Error::NotFiniteType);
    }
    let branch_nodes: Vec<usize> = (0..k).filter(|&i| degree[i] == 3).collect();
    let multi_edges: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();

    let neighbors = |i: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b, _)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };

    match branch_nodes.len() {
        0 => {
            // a path; walk it from one endpoint
            let start = (0..k).find(|&i| degree[i] == 1).expect("path endpoint");
            let mut order = vec![start];
            let mut prev = usize::MAX;
            while order.len() < k {
                let cur = *order.last().unwrap();
                let next = neighbors(cur)
                    .into_iter()
                    .find(|&n| n != prev)
                    .expect("path continues");
                prev = cur;
                order.push(next);
            }
            match multi_edges.len() {
                0 => Ok((DynkinType::A, k)),
                1 => {
                    let &&(u, v, m) = multi_edges.first().unwrap();
                    if m == 3 {
                        return if k == 2 {
                            Ok((DynkinType::G, 2))
                        } else {
                            Err(Error::NotFiniteType)
                        };
                    }
                    if k == 2 {
                        return Ok((DynkinType::C, 2));
                    }
                    let interior = degree[u] == 2 && degree[v] == 2;
                    if interior {
                        // the double bond must be the middle edge of a
                        // 4-node path
                        let pu = order.iter().position(|&x| x == u).unwrap();
                        let pv = order.iter().position(|&x| x == v).unwrap();
                        if k == 4 && pu.min(pv) == 1 && pu.max(pv) == 2 {
                            return Ok((DynkinType::F, 4));
                        }
                        return Err(Error::NotFiniteType);
                    }
                    let (terminal, other) = if degree[u] == 1 { (u, v) } else { (v, u) };
                    if cartan_entry(cartan, nodes[other], nodes[terminal])? == -2 {
                        Ok((DynkinType::B, k))
                    } else if cartan_entry(cartan, nodes[terminal], nodes[other])? == -2 {
                        Ok((DynkinType::C, k))
                    } else {
                        Err(Error::NotFiniteType)
                    }
                }
                _ => Err(Error::NotFiniteType),
            }
        }
        1 => {
            if !multi_edges.is_empty() {
                return Err(Error::NotFiniteType);
            }
            let center = branch_nodes[0];
            let mut arms: Vec<usize> = Vec::new();
            for first in neighbors(center) {
                let mut len = 1;
                let mut prev = center;
                let mut cur = first;
                loop {
                    let next: Vec<usize> =
                        neighbors(cur).into_iter().filter(|&n| n != prev).collect();
                    match next.len() {
                        0 => break,
                        1 => {
                            prev = cur;
                            cur = next[0];
                            len += 1;
                        }
                        _ => return Err(Error::NotFiniteType),
                    }
                }
                arms.push(len);
            }
            arms.sort_unstable();
            match arms[..] {
                [1, 1, _] => Ok((DynkinType::D, k)),
                [1, 2, 2] => Ok((DynkinType::E, 6)),
                [1, 2, 3] => Ok((DynkinType::E, 7)),
                [1, 2, 4] => Ok((DynkinType::E, 8)),
                _ => Err(Error::NotFiniteType),
            }
        }
        _ => Err(Error::NotFiniteType),
    }
}

// ---------------------------------------------------------------------------
// classification of a root datum

/// Full classification: Dynkin components from a simple system (non-reduced
/// components reported as BC), radical rank, and elementary divisors of the
/// weight : character : root lattice inclusions on the semisimple part.
pub fn classify(datum: &RootDatum) -> Result<ClassificationReport> {
    let radical_rank = datum.char_rank() - datum.root_span_rank();
    if datum.num_roots() == 0 {
        return Ok(ClassificationReport {
            dynkin_components: Vec::new(),
            radical_rank,
            weight_over_char: Vec::new(),
            char_over_root: Vec::new(),
        });
    }
    let based = positive_system(datum, &deterministic_generic_vector(datum))?;
    let cartan = based.cartan_matrix();
    let comps = cartan_components(&cartan);
    let simple_vecs = based.simple_root_vecs();

    // map each simple index to its component
    let mut comp_of_simple = vec![0usize; simple_vecs.len()];
    for (ci, comp) in comps.iter().enumerate() {
        for &s in comp {
            comp_of_simple[s] = ci;
        }
    }
    // components containing a root whose double is also a root
    let mut non_reduced = vec![false; comps.len()];
    for i in 0..datum.num_roots() {
        let doubled: Vec<BigInt> = datum.root(i).iter().map(|x| x * BigInt::from(2)).collect();
        if datum.is_root(&doubled) {
            let coeffs = express_over_independent(&simple_vecs, datum.root(i))
                .ok_or_else(|| Error::Internal("root outside simple span".into()))?;
            let support = coeffs
                .iter()
                .position(|c| !c.is_zero())
                .ok_or_else(|| Error::Internal("zero root in doubling scan".into()))?;
            non_reduced[comp_of_simple[support]] = true;
        }
    }

    let mut components = Vec::new();
    for (ci, comp) in comps.iter().enumerate() {
        let (letter, rank) = identify_component(&cartan, comp)?;
        let final_letter = if non_reduced[ci] {
            match (letter, rank) {
                (DynkinType::A, 1) | (DynkinType::B, _) | (DynkinType::C, 2) => DynkinType::BC,
                _ => {
                    return Err(Error::Internal(format!(
                        "non-reduced component classified as {letter}{rank}"
                    )))
                }
            }
        } else {
            letter
        };
        components.push((final_letter, rank));
    }
    components.sort();

    let (weight_over_char, char_over_root) = lattice_invariants(datum)?;
    Ok(ClassificationReport {
        dynkin_components: components,
        radical_rank,
        weight_over_char,
        char_over_root,
    })
}

/// Elementary divisors of P/Xbar and Xbar/Q where Q is the root lattice,
/// P the weight lattice of the derived part, and Xbar the projection of
/// the character lattice onto the root span along the coroot annihilator.
fn lattice_invariants(datum: &RootDatum) -> Result<(Vec<u64>, Vec<u64>)> {
    let r = datum.char_rank();
    let root_matrix = IntegerMatrix::from_rows(datum.roots().to_vec());
    let rv = crate::lattice::hermite_normal_form(&root_matrix);
    let d = rv.rows();
    if d == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let coroot_matrix = IntegerMatrix::from_rows(datum.coroots().to_vec());
    let ann = kernel_basis(&coroot_matrix); // {x : <x, coroots> = 0}

    // combined rational basis of ambient space: root-lattice basis + annihilator
    let mut columns: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..d {
        columns.push(
            rv.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        );
    }
    for row in ann.basis_rows() {
        columns.push(row.iter().map(|x| BigRational::from_integer(x.clone())).collect());
    }

    // Xbar: projections of the standard basis, in root-basis coordinates
    let mut xbar_gens: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..r {
        let mut target = vec![BigRational::zero(); r];
        target[i] = BigRational::one();
        let coeffs = rational_solve_columns(&columns, &target)
            .ok_or_else(|| Error::Internal("standard basis outside root+annihilator span".into()))?;
        xbar_gens.push(coeffs[..d].to_vec());
    }

    // P: {a : N a integral}, N the pairing of the root basis with coroots
    let m = datum.num_roots();
    let mut n_mat = IntegerMatrix::zero(m, d);
    for j in 0..m {
        for i in 0..d {
            n_mat.set(j, i, vec_dot(rv.row(i), datum.coroot(j)));
        }
    }
    let (_, diag, w) = smith_normal_form(&n_mat);
    let mut p_basis: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..d {
        let di = diag.get(i, i);
        if di.is_zero() {
            return Err(Error::Internal(
                "degenerate pairing between root span and coroots".into(),
            ));
        }
        p_basis.push(
            w.column(i)
                .iter()
                .map(|x| BigRational::new(x.clone(), di.clone()))
                .collect(),
        );
    }

    // scale all three lattices in Q^d to a common integer grid
    let mut scale = BigInt::one();
    for v in xbar_gens.iter().chain(&p_basis) {
        for x in v {
            scale = num_integer::Integer::lcm(&scale, x.denom());
        }
    }
    let scale_rat = BigRational::from_integer(scale.clone());
    let to_int = |v: &Vec<BigRational>| -> Vec<BigInt> {
        v.iter()
            .map(|x| {
                let s = x * &scale_rat;
                debug_assert!(s.is_integer());
                s.to_integer()
            })
            .collect()
    };
    let xbar_rows: Vec<Vec<BigInt>> = xbar_gens.iter().map(to_int).collect();
    let p_rows: Vec<Vec<BigInt>> = p_basis.iter().map(to_int).collect();
    let xbar = crate::lattice::hermite_normal_form(&IntegerMatrix::from_rows(xbar_rows));
    let p = crate::lattice::hermite_normal_form(&IntegerMatrix::from_rows(p_rows));
    // Q scaled: scale * identity
    let q_rows: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            let mut v = vec![BigInt::zero(); d];
            v[i] = scale.clone();
            v
        })
        .collect();

    let express = |sub_rows: Vec<Vec<BigInt>>, sup: &IntegerMatrix| -> Result<IntegerMatrix> {
        let sup_rows = sup.row_vecs();
        let mut rows = Vec::new();
        for v in sub_rows {
            let c = solve_in_span(&sup_rows, &v)?.ok_or_else(|| {
                Error::Internal("expected lattice inclusion fails integrally".into())
            })?;
            rows.push(c);
        }
        Ok(IntegerMatrix::from_rows(rows))
    };

    let weight_over_char = nontrivial_divisors(&express(xbar.row_vecs(), &p)?);
    let char_over_root = nontrivial_divisors(&express(q_rows, &xbar)?);
    let small = |v: Vec<BigInt>| -> Result<Vec<u64>> {
        let mut out: Vec<u64> = Vec::new();
        for x in v {
            out.push(u64::try_from(&x).map_err(|_| Error::ReportRange)?);
        }
        out.sort_unstable();
        Ok(out)
    };
    Ok((small(weight_over_char)?, small(char_over_root)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{gl, pgl, sl, so, sp, torus};
    use crate::lattice::vec_from_i64;
    use crate::root_datum::RootDatum;

    fn report(c: &[(DynkinType, usize)], rad: usize, wc: &[u64], cr: &[u64]) -> ClassificationReport {
        ClassificationReport {
            dynkin_components: c.to_vec(),
            radical_rank: rad,
            weight_over_char: wc.to_vec(),
            char_over_root: cr.to_vec(),
        }
    }

    #[test]
    fn classify_standard_groups() {
        assert_eq!(
            classify(sp(4).unwrap().datum()).unwrap(),
            report(&[(DynkinType::C, 2)], 0, &[], &[2])
        );
        assert_eq!(
            classify(sp(6).unwrap().datum()).unwrap(),
            report(&[(DynkinType::C, 3)], 0, &[], &[2])
        );
        assert_eq!(
            classify(gl(3).unwrap().datum()).unwrap(),
            report(&[(DynkinType::A, 2)], 1, &[], &[3])
        );
        assert_eq!(
            classify(sl(2).unwrap().datum()).unwrap(),
            report(&[(DynkinType::A, 1)], 0, &[], &[2])
        );
        assert_eq!(
            classify(pgl(2).unwrap().datum()).unwrap(),
            report(&[(DynkinType::A, 1)], 0, &[2], &[])
        );
        assert_eq!(
            classify(pgl(3).unwrap().datum()).unwrap(),
            report(&[(DynkinType::A, 2)], 0, &[3], &[])
        );
        assert_eq!(
            classify(so(5).unwrap().datum()).unwrap(),
            report(&[(DynkinType::C, 2)], 0, &[2], &[])
        );
        assert_eq!(
            classify(torus(3).unwrap().datum()).unwrap(),
            report(&[], 3, &[], &[])
        );
    }

    #[test]
    fn classify_bc1_datum() {
        // roots {±f, ±2f} on X = Zf with aligned coroots {±2f^, ±f^}
        let datum = RootDatum::new(
            1,
            vec![
                (vec_from_i64(&[1]), vec_from_i64(&[2])),
                (vec_from_i64(&[-1]), vec_from_i64(&[-2])),
                (vec_from_i64(&[2]), vec_from_i64(&[1])),
                (vec_from_i64(&[-2]), vec_from_i64(&[-1])),
            ],
        )
        .unwrap();
        assert_eq!(
            classify(&datum).unwrap(),
            report(&[(DynkinType::BC, 1)], 0, &[], &[])
        );
    }

    #[test]
    fn dual_classification_swaps_invariants() {
        let sp4 = sp(4).unwrap();
        let dual = sp4.datum().dual().unwrap();
        let c = classify(&dual).unwrap();
        assert_eq!(c, report(&[(DynkinType::C, 2)], 0, &[2], &[]));
        assert_eq!(c.known_name().unwrap(), "SO_5(C)");

        let pgl2 = pgl(2).unwrap();
        let dual = pgl2.datum().dual().unwrap();
        assert_eq!(
            classify(&dual).unwrap(),
            report(&[(DynkinType::A, 1)], 0, &[], &[2])
        );
    }

    #[test]
    fn fundamental_group_orders_multiply() {
        for (based, order) in [
            (sl(4).unwrap(), 4u64),
            (pgl(4).unwrap(), 4),
            (sp(6).unwrap(), 2),
            (so(5).unwrap(), 2),
        ] {
            let c = classify(based.datum()).unwrap();
            let product: u64 = c
                .weight_over_char
                .iter()
                .chain(&c.char_over_root)
                .product();
            assert_eq!(product, order);
        }
    }

    #[test]
    fn known_names() {
        assert_eq!(
            classify(sp(4).unwrap().datum()).unwrap().known_name().unwrap(),
            "Sp_4(C)"
        );
        assert_eq!(
            classify(gl(4).unwrap().datum()).unwrap().known_name().unwrap(),
            "GL_4(C)"
        );
        assert_eq!(
            classify(pgl(2).unwrap().datum()).unwrap().known_name().unwrap(),
            "PGL_2(C)"
        );
    }
}
