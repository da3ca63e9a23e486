//! Root data as first-class values: reflection closure, positive systems,
//! additive closure, duality, longest elements and the Weyl-invariant form.
//!
//! Roots and coroots are explicit coordinate vectors in Z^char_rank; the
//! pairing is the standard dot product of coordinates. Root data may be
//! non-reduced (a root and its double can both occur), which the restricted
//! data of symmetric spaces require.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::errors::{Error, Result};
use crate::lattice::{
    rational_solve_columns, solve_in_span, vec_add, vec_dot, vec_is_zero, vec_neg, vec_scale,
    vec_sub, vec_zero, IntegerMatrix, RationalVec,
};

/// Paired root/coroot lists over a character lattice Z^char_rank, with the
/// dot-product pairing. Roots are kept sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    char_rank: usize,
    roots: Vec<Vec<BigInt>>,
    coroots: Vec<Vec<BigInt>>,
}

impl RootDatum {
    /// Validates every datum invariant: pairing 2 on aligned pairs,
    /// ± symmetry, reflection stability of roots and coroots, and the
    /// compatibility s_{a^}(b^) = (s_a b)^.
    pub fn new(char_rank: usize, pairs: Vec<(Vec<BigInt>, Vec<BigInt>)>) -> Result<Self> {
        let mut pairs = pairs;
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        let roots: Vec<Vec<BigInt>> = pairs.iter().map(|p| p.0.clone()).collect();
        let coroots: Vec<Vec<BigInt>> = pairs.iter().map(|p| p.1.clone()).collect();

        for (i, (r, c)) in roots.iter().zip(&coroots).enumerate() {
            if r.len() != char_rank || c.len() != char_rank {
                return Err(Error::WrongShape {
                    expected: format!("vectors of length {char_rank}"),
                    got: format!("root {:?} / coroot {:?}", r, c),
                });
            }
            if vec_is_zero(r) {
                return Err(Error::ZeroRoot);
            }
            let p = vec_dot(r, c);
            if p != BigInt::from(2) {
                return Err(Error::PairingNotTwo { index: i, found: p });
            }
        }
        for w in roots.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateRoot);
            }
        }
        let datum = RootDatum {
            char_rank,
            roots,
            coroots,
        };
        datum.check_symmetry_and_reflections()?;
        Ok(datum)
    }

    fn check_symmetry_and_reflections(&self) -> Result<()> {
        for i in 0..self.roots.len() {
            let neg = vec_neg(&self.roots[i]);
            let j = self
                .root_index(&neg)
                .ok_or(Error::NotSymmetric)?;
            if self.coroots[j] != vec_neg(&self.coroots[i]) {
                return Err(Error::Misaligned {
                    detail: format!("coroot of -{:?} is not the negated coroot", self.roots[i]),
                });
            }
        }
        for i in 0..self.roots.len() {
            for j in 0..self.roots.len() {
                let reflected = self.reflect_char(i, &self.roots[j]);
                let Some(k) = self.root_index(&reflected) else {
                    return Err(Error::NotReflectionStable {
                        detail: format!(
                            "s_{:?} sends {:?} outside the root set",
                            self.roots[i], self.roots[j]
                        ),
                    });
                };
                // s_{a^}(b^) must be the coroot aligned with s_a(b)
                let reflected_co = self.reflect_cochar(i, &self.coroots[j]);
                if reflected_co != self.coroots[k] {
                    return Err(Error::Misaligned {
                        detail: format!(
                            "dual reflection of {:?} disagrees with the coroot of s({:?})",
                            self.roots[j], self.roots[j]
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn char_rank(&self) -> usize {
        self.char_rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<BigInt>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<BigInt>] {
        &self.coroots
    }

    pub fn root(&self, i: usize) -> &[BigInt] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[BigInt] {
        &self.coroots[i]
    }

    pub fn root_index(&self, v: &[BigInt]) -> Option<usize> {
        self.roots.binary_search_by(|r| r.as_slice().cmp(v)).ok()
    }

    pub fn is_root(&self, v: &[BigInt]) -> bool {
        self.root_index(v).is_some()
    }

    /// s_i(x) = x - <x, a_i^> a_i on the character lattice.
    pub fn reflect_char(&self, i: usize, x: &[BigInt]) -> Vec<BigInt> {
        let c = vec_dot(x, &self.coroots[i]);
        vec_sub(x, &vec_scale(&c, &self.roots[i]))
    }

    /// s_i(y) = y - <a_i, y> a_i^ on the cocharacter lattice.
    pub fn reflect_cochar(&self, i: usize, y: &[BigInt]) -> Vec<BigInt> {
        let c = vec_dot(&self.roots[i], y);
        vec_sub(y, &vec_scale(&c, &self.coroots[i]))
    }

    /// Reflection in root i as a matrix acting on characters.
    pub fn reflection_matrix(&self, i: usize) -> IntegerMatrix {
        let n = self.char_rank;
        let mut m = IntegerMatrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                let v = m.get(r, c) - &self.roots[i][r] * &self.coroots[i][c];
                m.set(r, c, v);
            }
        }
        m
    }

    /// Swaps the lattices and the root/coroot roles.
    pub fn dual(&self) -> Result<RootDatum> {
        RootDatum::new(
            self.char_rank,
            self.coroots
                .iter()
                .cloned()
                .zip(self.roots.iter().cloned())
                .collect(),
        )
    }

    /// Index set of the additive closure of the given subset:
    /// every root lying in the integer span of the subset.
    pub fn additive_closure(&self, subset: &[usize]) -> Vec<usize> {
        let span: Vec<Vec<BigInt>> = subset.iter().map(|&i| self.roots[i].clone()).collect();
        (0..self.roots.len())
            .filter(|&i| {
                solve_in_span(&span, &self.roots[i])
                    .expect("roots share the ambient rank")
                    .is_some()
            })
            .collect()
    }

    /// Rank of the rational span of the roots.
    pub fn root_span_rank(&self) -> usize {
        if self.roots.is_empty() {
            0
        } else {
            IntegerMatrix::from_rows(self.roots.clone()).rank()
        }
    }
}

/// A root datum with a chosen simple system and positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedRootDatum {
    datum: RootDatum,
    simple_roots: Vec<usize>,
    positive_roots: Vec<usize>,
}

impl BasedRootDatum {
    pub fn new(datum: RootDatum, simple_roots: Vec<usize>, positive_roots: Vec<usize>) -> Result<Self> {
        let based = BasedRootDatum {
            datum,
            simple_roots,
            positive_roots,
        };
        based.validate()?;
        Ok(based)
    }

    fn validate(&self) -> Result<()> {
        let n = self.datum.num_roots();
        if self.positive_roots.len() * 2 != n {
            return Err(Error::Internal(
                "positive roots are not half of the root set".into(),
            ));
        }
        for &p in &self.positive_roots {
            let neg = vec_neg(self.datum.root(p));
            let j = self.datum.root_index(&neg).ok_or(Error::NotSymmetric)?;
            if self.positive_roots.binary_search(&j).is_ok() {
                return Err(Error::Internal(
                    "a root and its negative are both positive".into(),
                ));
            }
        }
        // every positive root is a nonnegative integer combination of simples
        let simple_vecs = self.simple_root_vecs();
        for &p in &self.positive_roots {
            let coeffs = express_over_independent(&simple_vecs, self.datum.root(p))
                .ok_or_else(|| Error::Internal("positive root outside simple span".into()))?;
            if !coeffs
                .iter()
                .all(|c| c.is_integer() && !c.numer().is_negative())
            {
                return Err(Error::Internal(format!(
                    "positive root {:?} is not a nonnegative integer combination of the simples",
                    self.datum.root(p)
                )));
            }
        }
        // simples pairwise non-subtractable
        for (a, &i) in self.simple_roots.iter().enumerate() {
            for &j in self.simple_roots.iter().skip(a + 1) {
                let diff = vec_sub(self.datum.root(i), self.datum.root(j));
                if self.datum.is_root(&diff) {
                    return Err(Error::Internal(format!(
                        "simple roots {:?} and {:?} are subtractable",
                        self.datum.root(i),
                        self.datum.root(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[usize] {
        &self.positive_roots
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        self.positive_roots.binary_search(&idx).is_ok()
    }

    pub fn simple_root_vecs(&self) -> Vec<Vec<BigInt>> {
        self.simple_roots
            .iter()
            .map(|&i| self.datum.root(i).to_vec())
            .collect()
    }

    pub fn simple_coroot_vecs(&self) -> Vec<Vec<BigInt>> {
        self.simple_roots
            .iter()
            .map(|&i| self.datum.coroot(i).to_vec())
            .collect()
    }

    pub fn positive_root_vecs(&self) -> Vec<Vec<BigInt>> {
        self.positive_roots
            .iter()
            .map(|&i| self.datum.root(i).to_vec())
            .collect()
    }

    /// Sum of the positive roots.
    pub fn two_rho(&self) -> Vec<BigInt> {
        let mut acc = vec_zero(self.datum.char_rank());
        for &i in &self.positive_roots {
            acc = vec_add(&acc, self.datum.root(i));
        }
        acc
    }

    /// Sum of the positive coroots.
    pub fn two_rho_covec(&self) -> Vec<BigInt> {
        let mut acc = vec_zero(self.datum.char_rank());
        for &i in &self.positive_roots {
            acc = vec_add(&acc, self.datum.coroot(i));
        }
        acc
    }

    /// Cartan matrix <a_i, a_j^> over the simple system.
    pub fn cartan_matrix(&self) -> IntegerMatrix {
        let k = self.simple_roots.len();
        let mut m = IntegerMatrix::zero(k, k);
        for (i, &ri) in self.simple_roots.iter().enumerate() {
            for (j, &rj) in self.simple_roots.iter().enumerate() {
                m.set(i, j, vec_dot(self.datum.root(ri), self.datum.coroot(rj)));
            }
        }
        m
    }
}

/// Unique rational coefficients of `target` over independent `basis`
/// vectors, if target lies in their span.
pub(crate) fn express_over_independent(
    basis: &[Vec<BigInt>],
    target: &[BigInt],
) -> Option<Vec<BigRational>> {
    let columns: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|v| v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let t: Vec<BigRational> = target
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    rational_solve_columns(&columns, &t)
}

// ---------------------------------------------------------------------------
// generation from a base

/// Closes a simple system under reflections and returns the based datum.
///
/// Rejects inputs whose pairing matrix is not a finite-type generalized
/// Cartan matrix, and inputs whose root/coroot pairs are misaligned.
pub fn generate_datum(
    char_rank: usize,
    simple_roots: Vec<Vec<BigInt>>,
    simple_coroots: Vec<Vec<BigInt>>,
) -> Result<BasedRootDatum> {
    if simple_roots.len() != simple_coroots.len() {
        return Err(Error::WrongShape {
            expected: format!("{} coroots", simple_roots.len()),
            got: format!("{}", simple_coroots.len()),
        });
    }
    for v in simple_roots.iter().chain(&simple_coroots) {
        if v.len() != char_rank {
            return Err(Error::WrongShape {
                expected: format!("vectors of length {char_rank}"),
                got: format!("{:?}", v),
            });
        }
    }
    let k = simple_roots.len();
    if k == 0 {
        let datum = RootDatum::new(char_rank, Vec::new())?;
        return BasedRootDatum::new(datum, Vec::new(), Vec::new());
    }
    if IntegerMatrix::from_rows(simple_roots.clone()).rank() != k {
        return Err(Error::DependentSimples);
    }

    // pairing matrix must be a finite-type generalized Cartan matrix
    let mut cartan = IntegerMatrix::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            cartan.set(i, j, vec_dot(&simple_roots[i], &simple_coroots[j]));
        }
    }
    crate::dynkin::check_finite_type(&cartan)?;

    // reflection closure, carrying the aligned coroot of every root
    let mut known: Vec<(Vec<BigInt>, Vec<BigInt>)> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    let mut insert = |known: &mut Vec<(Vec<BigInt>, Vec<BigInt>)>,
                      queue: &mut Vec<usize>,
                      root: Vec<BigInt>,
                      coroot: Vec<BigInt>|
     -> Result<()> {
        if let Some(existing) = known.iter().find(|(r, _)| *r == root) {
            if existing.1 != coroot {
                return Err(Error::Misaligned {
                    detail: format!("root {:?} arises with two distinct coroots", root),
                });
            }
            return Ok(());
        }
        known.push((root, coroot));
        queue.push(known.len() - 1);
        Ok(())
    };
    for (r, c) in simple_roots.iter().zip(&simple_coroots) {
        insert(&mut known, &mut queue, r.clone(), c.clone())?;
    }
    const CLOSURE_CAP: usize = 600;
    while let Some(idx) = queue.pop() {
        let (root, coroot) = known[idx].clone();
        for i in 0..k {
            let cr = vec_dot(&root, &simple_coroots[i]);
            let new_root = vec_sub(&root, &vec_scale(&cr, &simple_roots[i]));
            let cc = vec_dot(&simple_roots[i], &coroot);
            let new_coroot = vec_sub(&coroot, &vec_scale(&cc, &simple_coroots[i]));
            insert(&mut known, &mut queue, new_root, new_coroot)?;
        }
        if known.len() > CLOSURE_CAP {
            return Err(Error::NotFiniteType);
        }
    }

    let datum = RootDatum::new(char_rank, known)?;
    // positives: nonnegative coordinates over the simple basis
    let mut positives = Vec::new();
    for i in 0..datum.num_roots() {
        let coeffs = express_over_independent(&simple_roots, datum.root(i))
            .ok_or_else(|| Error::Internal("generated root outside simple span".into()))?;
        let nonneg = coeffs.iter().all(|c| !c.numer().is_negative());
        let nonpos = coeffs.iter().all(|c| !c.numer().is_positive());
        if nonneg == nonpos {
            return Err(Error::Internal(format!(
                "generated root {:?} has mixed signs over the base",
                datum.root(i)
            )));
        }
        if nonneg {
            positives.push(i);
        }
    }
    let simple_idx: Vec<usize> = simple_roots
        .iter()
        .map(|r| datum.root_index(r).expect("simple root survives closure"))
        .collect();
    BasedRootDatum::new(datum, simple_idx, positives)
}

/// Block sum of two root data: lattices concatenate, root sets take the
/// disjoint union with zero padding on the other factor.
pub fn product_datum(a: &RootDatum, b: &RootDatum) -> Result<RootDatum> {
    let (ra, rb) = (a.char_rank(), b.char_rank());
    let mut pairs = Vec::with_capacity(a.num_roots() + b.num_roots());
    for i in 0..a.num_roots() {
        let mut root = a.root(i).to_vec();
        root.extend(vec_zero(rb));
        let mut coroot = a.coroot(i).to_vec();
        coroot.extend(vec_zero(rb));
        pairs.push((root, coroot));
    }
    for i in 0..b.num_roots() {
        let mut root = vec_zero(ra);
        root.extend(b.root(i).to_vec());
        let mut coroot = vec_zero(ra);
        coroot.extend(b.coroot(i).to_vec());
        pairs.push((root, coroot));
    }
    RootDatum::new(ra + rb, pairs)
}

// ---------------------------------------------------------------------------
// positive systems from order vectors

/// Positive system {a : <a, v> > 0} for a generic rational cocharacter v,
/// with simples extracted as the indecomposable positives.
pub fn positive_system(datum: &RootDatum, order_vector: &RationalVec) -> Result<BasedRootDatum> {
    assert_eq!(order_vector.len(), datum.char_rank());
    let mut positives = Vec::new();
    for i in 0..datum.num_roots() {
        let s = vec_dot(datum.root(i), order_vector.num());
        if s.is_zero() {
            return Err(Error::NonGenericVector {
                root: datum.root(i).to_vec(),
            });
        }
        if s.is_positive() {
            positives.push(i);
        }
    }
    let simples = indecomposable_positives(datum, &positives);
    BasedRootDatum::new(datum.clone(), simples, positives)
}

/// Indices of positives not expressible as a sum of two positives.
/// Index order is lexicographic on coordinates since roots are sorted.
pub(crate) fn indecomposable_positives(datum: &RootDatum, positives: &[usize]) -> Vec<usize> {
    positives
        .iter()
        .copied()
        .filter(|&i| {
            !positives.iter().any(|&j| {
                if i == j {
                    return false;
                }
                let diff = vec_sub(datum.root(i), datum.root(j));
                datum
                    .root_index(&diff)
                    .map(|d| positives.binary_search(&d).is_ok())
                    .unwrap_or(false)
            })
        })
        .collect()
}

/// Deterministic generic order vector: weights 1, B, B^2, ... over the
/// standard basis with B large enough that no root can pair to zero.
pub fn deterministic_generic_vector(datum: &RootDatum) -> RationalVec {
    let mut max_coord = BigInt::one();
    for r in datum.roots() {
        for x in r {
            if x.abs() > max_coord {
                max_coord = x.abs();
            }
        }
    }
    let base = BigInt::from(2) * max_coord + BigInt::one();
    let mut v = Vec::with_capacity(datum.char_rank());
    let mut w = BigInt::one();
    for _ in 0..datum.char_rank() {
        v.push(w.clone());
        w *= &base;
    }
    RationalVec::from_int(v)
}

// ---------------------------------------------------------------------------
// longest elements

/// Action of the longest Weyl element on the character lattice: pushes a
/// strictly dominant vector to the antidominant chamber by simple
/// reflections and composes them.
pub fn longest_element(based: &BasedRootDatum) -> IntegerMatrix {
    let seed = based.two_rho();
    longest_element_over_simples(based.datum(), based.simple_roots(), &seed)
}

/// Longest element of the reflection subgroup generated by the given simple
/// roots. `seed` must pair strictly positively with each of their coroots.
pub(crate) fn longest_element_over_simples(
    datum: &RootDatum,
    simples: &[usize],
    seed: &[BigInt],
) -> IntegerMatrix {
    let n = datum.char_rank();
    let mut w = IntegerMatrix::identity(n);
    if simples.is_empty() {
        return w;
    }
    for &i in simples {
        debug_assert!(vec_dot(seed, datum.coroot(i)).is_positive());
    }
    let mut v = seed.to_vec();
    let cap = datum.num_roots() + 8;
    for _ in 0..cap {
        let Some(&i) = simples
            .iter()
            .find(|&&i| vec_dot(&v, datum.coroot(i)).is_positive())
        else {
            return w;
        };
        v = datum.reflect_char(i, &v);
        w = datum.reflection_matrix(i).mul(&w);
    }
    unreachable!("longest element did not terminate within the length bound");
}

/// Every element of the Weyl group as a matrix on characters, by closure
/// over products with the simple reflections. Intended for small ranks
/// where it serves as an enumeration oracle.
pub fn enumerate_weyl_group(based: &BasedRootDatum) -> Vec<IntegerMatrix> {
    let gens: Vec<IntegerMatrix> = based
        .simple_roots()
        .iter()
        .map(|&i| based.datum().reflection_matrix(i))
        .collect();
    let mut seen = vec![IntegerMatrix::identity(based.datum().char_rank())];
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let m = g.mul(w);
                if !seen.contains(&m) {
                    seen.push(m.clone());
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    seen
}

// ---------------------------------------------------------------------------
// Weyl-invariant inner product

/// Symmetric bilinear form on the character lattice: Weyl invariant,
/// positive definite on the root span, zero on radical directions, and
/// normalized so short roots of each component have squared length 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylForm {
    num: IntegerMatrix,
    den: BigInt,
}

impl WeylForm {
    pub fn num(&self) -> &IntegerMatrix {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        BigRational::new(vec_dot(&self.num.mul_vec(y), x), self.den.clone())
    }

    pub fn pair_rational(&self, x: &RationalVec, y: &RationalVec) -> BigRational {
        self.pair(x.num(), y.num()) / BigRational::from_integer(x.den() * y.den())
    }
}

/// Components of the root set under the "non-orthogonal" relation.
fn root_components(datum: &RootDatum) -> Vec<Vec<usize>> {
    let n = datum.num_roots();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = count;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX && !vec_dot(datum.root(i), datum.coroot(j)).is_zero() {
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

pub fn weyl_invariant_inner_product(datum: &RootDatum) -> WeylForm {
    let n = datum.char_rank();
    let comps = root_components(datum);
    // per component: sum of coroot outer products, rescaled so the shortest
    // root has squared length 2
    let mut terms: Vec<(IntegerMatrix, BigInt)> = Vec::new();
    for comp in &comps {
        let mut b = IntegerMatrix::zero(n, n);
        for &i in comp {
            let c = datum.coroot(i);
            for r in 0..n {
                for s in 0..n {
                    let v = b.get(r, s) + &c[r] * &c[s];
                    b.set(r, s, v);
                }
            }
        }
        let min_len = comp
            .iter()
            .map(|&i| vec_dot(&b.mul_vec(datum.root(i)), datum.root(i)))
            .min()
            .expect("nonempty component");
        terms.push((b, min_len));
    }
    if terms.is_empty() {
        return WeylForm {
            num: IntegerMatrix::zero(n, n),
            den: BigInt::one(),
        };
    }
    let lcm = terms
        .iter()
        .fold(BigInt::one(), |acc, (_, l)| acc.lcm(l));
    let mut num = IntegerMatrix::zero(n, n);
    for (b, l) in &terms {
        let factor = BigInt::from(2) * &lcm / l;
        for r in 0..n {
            for s in 0..n {
                let v = num.get(r, s) + &factor * b.get(r, s);
                num.set(r, s, v);
            }
        }
    }
    // normalize the common gcd of the form
    let mut g = lcm.clone();
    for r in 0..n {
        for s in 0..n {
            g = g.gcd(num.get(r, s));
        }
    }
    if !g.is_one() && !g.is_zero() {
        for r in 0..n {
            for s in 0..n {
                let v = num.get(r, s) / &g;
                num.set(r, s, v);
            }
        }
        return WeylForm { num, den: lcm / g };
    }
    WeylForm { num, den: lcm }
}
