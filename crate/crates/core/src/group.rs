use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on element enumeration.
pub const DEFAULT_ENUM_CAP: usize = 20_000;

/// Default cap on brute-force isomorphism testing.
pub const DEFAULT_ISO_CAP: usize = 512;

/// A finite permutation group with its full element set enumerated
/// breadth-first from the identity, generators taken in input order.
/// `elements[0]` is always the identity and the ordering is reproducible.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    /// `provenance[k] = Some((j, i))` means `elements[k] = elements[j] * generators[i]`.
    provenance: Vec<Option<(u32, usize)>>,
    inverse: Vec<u32>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Arc<PermGroup>> {
        Self::from_generators_capped(degree, generators, DEFAULT_ENUM_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        generators: Vec<Perm>,
        cap: usize,
    ) -> Result<Arc<PermGroup>> {
        assert!(degree >= 1, "degree must be positive");
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0u32);
        let mut provenance: Vec<Option<(u32, usize)>> = vec![None];
        let mut head = 0usize;
        while head < elements.len() {
            for (i, g) in generators.iter().enumerate() {
                let cand = elements[head].compose(g);
                if !index.contains_key(&cand) {
                    if elements.len() >= cap {
                        return Err(Error::EnumerationCapExceeded { cap });
                    }
                    index.insert(cand.clone(), elements.len() as u32);
                    elements.push(cand);
                    provenance.push(Some((head as u32, i)));
                }
            }
            head += 1;
        }
        let inverse = elements
            .iter()
            .map(|e| index[&e.inverse()])
            .collect();
        Ok(Arc::new(PermGroup {
            degree,
            generators,
            elements,
            index,
            provenance,
            inverse,
        }))
    }

    pub fn trivial(degree: usize) -> Arc<PermGroup> {
        PermGroup::from_generators(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, idx: u32) -> &Perm {
        &self.elements[idx as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn generator_index(&self, i: usize) -> u32 {
        self.index[&self.generators[i]]
    }

    /// Index of the product `elements[a] * elements[b]` (right factor first).
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.index[&self.elements[a as usize].compose(&self.elements[b as usize])]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn conj(&self, x: u32, h: u32) -> u32 {
        self.mul(self.mul(x, h), self.inv(x))
    }

    pub fn commutator_of(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub(crate) fn provenance(&self, k: u32) -> Option<(u32, usize)> {
        self.provenance[k as usize]
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// Structural equality: same degree and same generator list. Two handles
    /// built from the same data enumerate identically.
    pub fn same_group(a: &Arc<PermGroup>, b: &Arc<PermGroup>) -> bool {
        Arc::ptr_eq(a, b) || (a.degree == b.degree && a.generators == b.generators)
    }

    /// Multiset of element orders, as (order, count) pairs sorted by order.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut map: std::collections::BTreeMap<usize, usize> = Default::default();
        for e in &self.elements {
            *map.entry(e.order()).or_insert(0) += 1;
        }
        map.into_iter().collect()
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens {:?})",
            self.degree, self.elements.len(), self.generators
        )
    }
}

/// A subgroup of an enumerated ambient group, held as a sorted set of element
/// indices. Equality of subgroups is equality of those index sets.
#[derive(Clone)]
pub struct Subgroup {
    ambient: Arc<PermGroup>,
    gens: Vec<u32>,
    elements: Vec<u32>,
}

impl Subgroup {
    /// Smallest subgroup of `ambient` containing `seed`.
    pub fn generated(ambient: &Arc<PermGroup>, seed: &[Perm]) -> Result<Subgroup> {
        let mut gens = Vec::new();
        for p in seed {
            match ambient.index_of(p) {
                Some(i) => gens.push(i),
                None => {
                    return Err(Error::ElementNotInAmbient {
                        element: p.to_string(),
                    })
                }
            }
        }
        Ok(Self::generated_by_indices(ambient, &gens))
    }

    pub fn generated_by_indices(ambient: &Arc<PermGroup>, gens: &[u32]) -> Subgroup {
        let mut in_set = vec![false; ambient.order()];
        in_set[0] = true;
        let mut list = vec![0u32];
        let mut head = 0usize;
        while head < list.len() {
            let a = list[head];
            for &g in gens {
                let c = ambient.mul(a, g);
                if !in_set[c as usize] {
                    in_set[c as usize] = true;
                    list.push(c);
                }
            }
            head += 1;
        }
        list.sort_unstable();
        Subgroup {
            ambient: Arc::clone(ambient),
            gens: gens.to_vec(),
            elements: list,
        }
    }

    pub fn trivial(ambient: &Arc<PermGroup>) -> Subgroup {
        Subgroup::generated_by_indices(ambient, &[])
    }

    /// The ambient group as a subgroup of itself.
    pub fn full(ambient: &Arc<PermGroup>) -> Subgroup {
        let gens: Vec<u32> = (0..ambient.generators().len())
            .map(|i| ambient.generator_index(i))
            .collect();
        Subgroup::generated_by_indices(ambient, &gens)
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.elements.binary_search(&idx).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        PermGroup::same_group(&self.ambient, &other.ambient)
            && self.elements.iter().all(|&e| other.contains(e))
    }

    /// Greedy minimal generating sequence, scanning elements in index order.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut current = Subgroup::generated_by_indices(&self.ambient, &gens);
        for &e in &self.elements {
            if !current.contains(e) {
                gens.push(e);
                current = Subgroup::generated_by_indices(&self.ambient, &gens);
                if current.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Materializes the subgroup as a standalone group on the same points,
    /// generated by its minimal generating sequence.
    pub fn to_group(&self) -> Arc<PermGroup> {
        let gens: Vec<Perm> = self
            .minimal_generators()
            .iter()
            .map(|&i| self.ambient.element(i).clone())
            .collect();
        let g = PermGroup::from_generators_capped(
            self.ambient.degree(),
            gens,
            self.order() + 1,
        )
        .expect("subgroup closure is already enumerated");
        debug_assert_eq!(g.order(), self.order());
        g
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        PermGroup::same_group(&self.ambient, &other.ambient) && self.elements == other.elements
    }
}
impl Eq for Subgroup {}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {} of order {})", self.order(), self.ambient.order())
    }
}

fn check_same_ambient(a: &Subgroup, b: &Subgroup) -> Result<()> {
    if PermGroup::same_group(&a.ambient, &b.ambient) {
        Ok(())
    } else {
        Err(Error::AmbientMismatch)
    }
}

/// True iff conjugation by every ambient generator maps `h` into itself.
/// Checking generators on both sides suffices for finite groups.
pub fn is_normal(h: &Subgroup) -> bool {
    let g = &h.ambient;
    (0..g.generators().len()).all(|i| {
        let x = g.generator_index(i);
        h.gens_closed_under_conj(x)
    })
}

impl Subgroup {
    fn gens_closed_under_conj(&self, x: u32) -> bool {
        let min = self.minimal_generators();
        min.iter().all(|&h| self.contains(self.ambient.conj(x, h)))
    }
}

/// Smallest normal subgroup of the ambient group containing `k`, computed by
/// conjugate-closure saturation.
pub fn normal_closure(k: &Subgroup) -> Subgroup {
    let g = &k.ambient;
    let mut gens: Vec<u32> = k.gens.to_vec();
    let mut current = Subgroup::generated_by_indices(g, &gens);
    loop {
        let mut grew = false;
        'scan: for &w in current.elements() {
            for i in 0..g.generators().len() {
                let x = g.generator_index(i);
                let c = g.conj(x, w);
                if !current.contains(c) {
                    gens.push(c);
                    current = Subgroup::generated_by_indices(g, &gens);
                    grew = true;
                    break 'scan;
                }
            }
        }
        if !grew {
            return current;
        }
    }
}

/// Join of subgroups: the subgroup generated by their union.
pub fn join(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    check_same_ambient(a, b)?;
    let mut gens = a.gens.to_vec();
    gens.extend_from_slice(&b.gens);
    Ok(Subgroup::generated_by_indices(&a.ambient, &gens))
}

pub fn join3(a: &Subgroup, b: &Subgroup, c: &Subgroup) -> Result<Subgroup> {
    join(&join(a, b)?, c)
}

/// Intersection of subgroups of a common ambient group.
pub fn intersection(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    check_same_ambient(a, b)?;
    let elems: Vec<u32> = a
        .elements
        .iter()
        .copied()
        .filter(|&e| b.contains(e))
        .collect();
    // The intersection is closed, so closing its full element list is exact.
    Ok(Subgroup::generated_by_indices(&a.ambient, &elems))
}

/// The subgroup generated by all commutators `[k, m] = k m k^-1 m^-1` with
/// `k` in `k_sub` and `m` in `m_sub`.
pub fn commutator(k_sub: &Subgroup, m_sub: &Subgroup) -> Result<Subgroup> {
    check_same_ambient(k_sub, m_sub)?;
    let g = &k_sub.ambient;
    let mut gens: BTreeSet<u32> = BTreeSet::new();
    for &k in k_sub.elements() {
        for &m in m_sub.elements() {
            let c = g.commutator_of(k, m);
            if c != 0 {
                gens.insert(c);
            }
        }
    }
    let gens: Vec<u32> = gens.into_iter().collect();
    Ok(Subgroup::generated_by_indices(g, &gens))
}

/// Ternary commutator realized as the join of the three iterated commutators
/// `[[K,M],N]`, `[[M,N],K]` and `[[N,K],M]`.
pub fn ternary_commutator(k: &Subgroup, m: &Subgroup, n: &Subgroup) -> Result<Subgroup> {
    check_same_ambient(k, m)?;
    check_same_ambient(m, n)?;
    let a = commutator(&commutator(k, m)?, n)?;
    let b = commutator(&commutator(m, n)?, k)?;
    let c = commutator(&commutator(n, k)?, m)?;
    join3(&a, &b, &c)
}

/// Quotient of `x` by a normal subgroup: the permutation action on the coset
/// space together with the projection. Cosets are numbered by their minimal
/// representative in the global element order.
pub fn quotient(x: &Arc<PermGroup>, n: &Subgroup) -> Result<(Arc<PermGroup>, crate::hom::GroupHom)> {
    if !PermGroup::same_group(x, &n.ambient) {
        return Err(Error::AmbientMismatch);
    }
    if !is_normal(n) {
        return Err(Error::NotNormal);
    }
    let order = x.order();
    let mut coset_of = vec![u32::MAX; order];
    let mut reps: Vec<u32> = Vec::new();
    for e in 0..order as u32 {
        if coset_of[e as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(e);
        for &h in n.elements() {
            coset_of[x.mul(e, h) as usize] = c;
        }
    }
    let n_cosets = reps.len();
    let gen_perms: Vec<Perm> = (0..x.generators().len())
        .map(|i| {
            let g = x.generator_index(i);
            let images: Vec<u32> = reps
                .iter()
                .map(|&r| coset_of[x.mul(g, r) as usize])
                .collect();
            Perm::from_images(images).expect("coset action is a permutation")
        })
        .collect();
    let q = PermGroup::from_generators_capped(n_cosets.max(1), gen_perms.clone(), n_cosets + 1)?;
    debug_assert_eq!(q.order(), n_cosets);
    let proj = crate::hom::GroupHom::new(x, &q, gen_perms)?;
    Ok((q, proj))
}

/// Direct product `G x H` on the disjoint union of their points, with the
/// canonical injections and projections.
pub struct DirectProduct {
    pub group: Arc<PermGroup>,
    pub inj1: crate::hom::GroupHom,
    pub inj2: crate::hom::GroupHom,
    pub proj1: crate::hom::GroupHom,
    pub proj2: crate::hom::GroupHom,
}

pub fn direct_product(g: &Arc<PermGroup>, h: &Arc<PermGroup>) -> Result<DirectProduct> {
    let idg = Perm::identity(g.degree());
    let idh = Perm::identity(h.degree());
    let mut gens: Vec<Perm> = Vec::new();
    for a in g.generators() {
        gens.push(a.direct_sum(&idh));
    }
    for b in h.generators() {
        gens.push(idg.direct_sum(b));
    }
    let cap = g.order() * h.order() + 1;
    let p = PermGroup::from_generators_capped(g.degree() + h.degree(), gens, cap)?;
    debug_assert_eq!(p.order(), g.order() * h.order());
    let inj1 = crate::hom::GroupHom::new(
        g,
        &p,
        g.generators().iter().map(|a| a.direct_sum(&idh)).collect(),
    )?;
    let inj2 = crate::hom::GroupHom::new(
        h,
        &p,
        h.generators().iter().map(|b| idg.direct_sum(b)).collect(),
    )?;
    let mut p1_images: Vec<Perm> = g.generators().to_vec();
    p1_images.extend(std::iter::repeat(idg.clone()).take(h.generators().len()));
    let proj1 = crate::hom::GroupHom::new(&p, g, p1_images)?;
    let mut p2_images: Vec<Perm> =
        std::iter::repeat(idh.clone()).take(g.generators().len()).collect();
    p2_images.extend_from_slice(h.generators());
    let proj2 = crate::hom::GroupHom::new(&p, h, p2_images)?;
    Ok(DirectProduct {
        group: p,
        inj1,
        inj2,
        proj1,
        proj2,
    })
}

/// Brute-force isomorphism test with invariant pruning: order, abelianness,
/// element-order histogram and derived-subgroup order, then a backtracking
/// search over generator images validated by the graph-subgroup test.
pub fn are_isomorphic(g: &Arc<PermGroup>, h: &Arc<PermGroup>) -> Result<bool> {
    are_isomorphic_capped(g, h, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_capped(g: &Arc<PermGroup>, h: &Arc<PermGroup>, cap: usize) -> Result<bool> {
    if g.order() > cap || h.order() > cap {
        return Err(Error::CapExceeded {
            cap,
            left: g.order(),
            right: h.order(),
        });
    }
    if g.order() != h.order()
        || g.is_abelian() != h.is_abelian()
        || g.order_histogram() != h.order_histogram()
    {
        return Ok(false);
    }
    let derived = |x: &Arc<PermGroup>| -> usize {
        let full = Subgroup::full(x);
        commutator(&full, &full).expect("same ambient").order()
    };
    if derived(g) != derived(h) {
        return Ok(false);
    }
    // Generating sequence for G, then backtracking over order-matched images.
    let g_full = Subgroup::full(g);
    let g_gens = g_full.minimal_generators();
    let mut partial_orders: Vec<usize> = Vec::new();
    for i in 0..g_gens.len() {
        partial_orders.push(Subgroup::generated_by_indices(g, &g_gens[..=i]).order());
    }
    let mut images: Vec<u32> = Vec::new();
    Ok(search_iso(g, h, &g_gens, &partial_orders, &mut images))
}

fn search_iso(
    g: &Arc<PermGroup>,
    h: &Arc<PermGroup>,
    g_gens: &[u32],
    partial_orders: &[usize],
    images: &mut Vec<u32>,
) -> bool {
    let depth = images.len();
    if depth == g_gens.len() {
        return true;
    }
    let want_order = g.element(g_gens[depth]).order();
    for cand in 0..h.order() as u32 {
        if h.element(cand).order() != want_order {
            continue;
        }
        images.push(cand);
        if graph_is_function(g, h, &g_gens[..=depth], images, partial_orders[depth])
            && (depth + 1 < g_gens.len()
                || image_is_all(h, images))
            && search_iso(g, h, g_gens, partial_orders, images)
        {
            return true;
        }
        images.pop();
    }
    false
}

/// Checks that the subgroup of `G x H` generated by the paired generators has
/// exactly `expect` elements, i.e. that the pairs are the graph of a function.
fn graph_is_function(
    g: &Arc<PermGroup>,
    h: &Arc<PermGroup>,
    g_gens: &[u32],
    h_images: &[u32],
    expect: usize,
) -> bool {
    let pairs: Vec<Perm> = g_gens
        .iter()
        .zip(h_images)
        .map(|(&a, &b)| g.element(a).direct_sum(h.element(b)))
        .collect();
    let graph = match PermGroup::from_generators_capped(g.degree() + h.degree(), pairs, expect + 1)
    {
        Ok(gr) => gr,
        Err(_) => return false,
    };
    graph.order() == expect
}

fn image_is_all(h: &Arc<PermGroup>, images: &[u32]) -> bool {
    Subgroup::generated_by_indices(h, images).order() == h.order()
}

/// Primary decomposition of a finite abelian group: the sorted multiset of
/// prime-power orders of its cyclic factors, read off from the element-order
/// counts `|{x : x^(p^j) = 1}|`.
pub fn abelian_invariants(g: &Arc<PermGroup>) -> Result<Vec<usize>> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let orders: Vec<usize> = g.elements().iter().map(|e| e.order()).collect();
    let n = g.order();
    let mut primes: Vec<usize> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    let mut invariants: Vec<usize> = Vec::new();
    for &p in &primes {
        // f(j) = p-adic valuation of #{x : ord(x) divides p^j}; the number of
        // cyclic p-factors of exponent >= j is then f(j) - f(j-1).
        let p_component_size = orders.iter().filter(|&&o| is_p_power(o, p)).count();
        let mut f = vec![0u32];
        let mut j = 1u32;
        loop {
            let pj = p.pow(j);
            let cnt = orders.iter().filter(|&&o| pj % o == 0).count();
            let mut v = 0u32;
            let mut c = cnt;
            while c % p == 0 {
                c /= p;
                v += 1;
            }
            debug_assert_eq!(c, 1, "order-dividing count must be a p-power");
            f.push(v);
            if cnt == p_component_size {
                break;
            }
            j += 1;
        }
        for j in 1..f.len() {
            let at_least_j = f[j] - f[j - 1];
            let at_least_next = if j + 1 < f.len() { f[j + 1] - f[j] } else { 0 };
            for _ in 0..(at_least_j - at_least_next) {
                invariants.push(p.pow(j as u32));
            }
        }
    }
    invariants.sort_unstable();
    Ok(invariants)
}

fn is_p_power(mut o: usize, p: usize) -> bool {
    while o % p == 0 {
        o /= p;
    }
    o == 1
}

/// All subgroups of a small group, found by saturating single-element
/// extensions starting from the trivial subgroup. Deterministic order: sorted
/// by (order, element list).
pub fn all_subgroups(g: &Arc<PermGroup>) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let trivial = Subgroup::trivial(g);
    seen.insert(trivial.elements().to_vec());
    let mut queue: Vec<Subgroup> = vec![trivial];
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        for e in 1..g.order() as u32 {
            if current.contains(e) {
                continue;
            }
            let mut gens = current.minimal_generators();
            gens.push(e);
            let bigger = Subgroup::generated_by_indices(g, &gens);
            if seen.insert(bigger.elements().to_vec()) {
                queue.push(bigger);
            }
        }
    }
    let mut keys: Vec<Vec<u32>> = seen.into_iter().collect();
    keys.sort_by_key(|k| (k.len(), k.clone()));
    keys.into_iter()
        .map(|k| Subgroup::generated_by_indices(g, &k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn s3() -> Arc<PermGroup> {
        PermGroup::from_generators(
            3,
            vec![
                Perm::from_cycles(3, "(1 2)").unwrap(),
                Perm::from_cycles(3, "(1 2 3)").unwrap(),
            ],
        )
        .unwrap()
    }

    fn s4() -> Arc<PermGroup> {
        PermGroup::from_generators(
            4,
            vec![
                Perm::from_cycles(4, "(1 2)").unwrap(),
                Perm::from_cycles(4, "(1 2 3 4)").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn s3_enumerates_to_order_6() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn trivial_group_has_order_1() {
        let g = PermGroup::trivial(1);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn s5_closure_reaches_120() {
        let g = PermGroup::from_generators(
            5,
            vec![
                Perm::from_cycles(5, "(1 2 3 4 5)").unwrap(),
                Perm::from_cycles(5, "(1 2)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(g.order(), 120);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let err = PermGroup::from_generators_capped(
            5,
            vec![
                Perm::from_cycles(5, "(1 2 3 4 5)").unwrap(),
                Perm::from_cycles(5, "(1 2)").unwrap(),
            ],
            100,
        )
        .unwrap_err();
        assert_eq!(err, Error::EnumerationCapExceeded { cap: 100 });
    }

    #[test]
    fn subgroup_generated_and_membership() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.contains(0));
        let t = Subgroup::generated(&g, &[]).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn seed_outside_ambient_rejected() {
        let g = s3();
        // (1 3) is in S3; use a group without it: A3.
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()])
            .unwrap()
            .to_group();
        let err = Subgroup::generated(&a3, &[Perm::from_cycles(3, "(1 2)").unwrap()]).unwrap_err();
        assert!(matches!(err, Error::ElementNotInAmbient { .. }));
    }

    #[test]
    fn kleinian_subgroup_of_s4() {
        let g = s4();
        let v4 = Subgroup::generated(
            &g,
            &[
                Perm::from_cycles(4, "(1 2)(3 4)").unwrap(),
                Perm::from_cycles(4, "(1 3)(2 4)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(v4.order(), 4);
        assert!(is_normal(&v4));
    }

    #[test]
    fn normality_examples() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        let t2 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2)").unwrap()]).unwrap();
        assert!(is_normal(&a3));
        assert!(!is_normal(&t2));
        assert!(is_normal(&Subgroup::trivial(&g)));
    }

    #[test]
    fn normal_closure_examples() {
        let g = s3();
        let t2 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2)").unwrap()]).unwrap();
        assert_eq!(normal_closure(&t2).order(), 6);
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        assert_eq!(normal_closure(&a3), a3);
        let t = Subgroup::trivial(&g);
        assert_eq!(normal_closure(&t), t);
    }

    #[test]
    fn commutator_examples() {
        let g = s3();
        let full = Subgroup::full(&g);
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        assert_eq!(commutator(&a3, &full).unwrap(), a3);
        assert!(commutator(&full, &Subgroup::trivial(&g)).unwrap().is_trivial());
        assert_eq!(commutator(&full, &full).unwrap(), a3);
    }

    #[test]
    fn ternary_commutator_examples() {
        let g = s3();
        let full = Subgroup::full(&g);
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        let t = Subgroup::trivial(&g);
        assert!(ternary_commutator(&t, &full, &full).unwrap().is_trivial());
        let kkm = ternary_commutator(&a3, &a3, &full).unwrap();
        assert!(kkm.is_subgroup_of(&commutator(&a3, &full).unwrap()));
        assert_eq!(ternary_commutator(&full, &full, &full).unwrap(), a3);
    }

    #[test]
    fn quotient_examples() {
        let g = s3();
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        let (q, proj) = quotient(&g, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(crate::hom::image(&proj).order(), 2);

        let (qt, _) = quotient(&g, &Subgroup::trivial(&g)).unwrap();
        assert!(are_isomorphic(&qt, &g).unwrap());

        let s4 = s4();
        let v4 = Subgroup::generated(
            &s4,
            &[
                Perm::from_cycles(4, "(1 2)(3 4)").unwrap(),
                Perm::from_cycles(4, "(1 3)(2 4)").unwrap(),
            ],
        )
        .unwrap();
        let (q2, _) = quotient(&s4, &v4).unwrap();
        assert_eq!(q2.order(), 6);
        assert!(are_isomorphic(&q2, &s3()).unwrap());

        let t2 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2)").unwrap()]).unwrap();
        assert_eq!(quotient(&g, &t2).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn direct_product_examples() {
        let z2 = PermGroup::from_generators(2, vec![Perm::from_cycles(2, "(1 2)").unwrap()])
            .unwrap();
        let z3 = PermGroup::from_generators(3, vec![Perm::from_cycles(3, "(1 2 3)").unwrap()])
            .unwrap();
        let p = direct_product(&z2, &z3).unwrap();
        assert_eq!(p.group.order(), 6);
        assert!(p.group.is_abelian());
        let z6 = PermGroup::from_generators(
            6,
            vec![Perm::from_cycles(6, "(1 2 3 4 5 6)").unwrap()],
        )
        .unwrap();
        assert!(are_isomorphic(&p.group, &z6).unwrap());

        let triv = PermGroup::trivial(1);
        let q = direct_product(&s3(), &triv).unwrap();
        assert!(are_isomorphic(&q.group, &s3()).unwrap());

        let r = direct_product(&s3(), &z2).unwrap();
        assert_eq!(r.group.order(), 12);
    }

    #[test]
    fn iso_distinguishes_z4_and_v4() {
        let z4 = PermGroup::from_generators(4, vec![Perm::from_cycles(4, "(1 2 3 4)").unwrap()])
            .unwrap();
        let v4 = PermGroup::from_generators(
            4,
            vec![
                Perm::from_cycles(4, "(1 2)(3 4)").unwrap(),
                Perm::from_cycles(4, "(1 3)(2 4)").unwrap(),
            ],
        )
        .unwrap();
        assert!(!are_isomorphic(&z4, &v4).unwrap());
    }

    #[test]
    fn iso_distinguishes_d4_and_q8() {
        let d4 = PermGroup::from_generators(
            4,
            vec![
                Perm::from_cycles(4, "(1 2 3 4)").unwrap(),
                Perm::from_cycles(4, "(1 3)").unwrap(),
            ],
        )
        .unwrap();
        let q8 = PermGroup::from_generators(
            8,
            vec![
                Perm::from_cycles(8, "(1 2 3 4)(5 6 7 8)").unwrap(),
                Perm::from_cycles(8, "(1 5 3 7)(2 8 4 6)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(q8.order(), 8);
        assert!(!are_isomorphic(&d4, &q8).unwrap());
    }

    #[test]
    fn iso_cap_is_reported() {
        let g = s4();
        let err = are_isomorphic_capped(&g, &g, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn abelian_invariants_examples() {
        let z6 = PermGroup::from_generators(
            6,
            vec![Perm::from_cycles(6, "(1 2 3 4 5 6)").unwrap()],
        )
        .unwrap();
        assert_eq!(abelian_invariants(&z6).unwrap(), vec![2, 3]);
        let v4 = PermGroup::from_generators(
            4,
            vec![
                Perm::from_cycles(4, "(1 2)(3 4)").unwrap(),
                Perm::from_cycles(4, "(1 3)(2 4)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(abelian_invariants(&v4).unwrap(), vec![2, 2]);
        assert_eq!(abelian_invariants(&PermGroup::trivial(1)).unwrap(), Vec::<usize>::new());
        assert_eq!(abelian_invariants(&s3()).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn subgroup_enumeration_counts() {
        assert_eq!(all_subgroups(&s3()).len(), 6);
        assert_eq!(all_subgroups(&s4()).len(), 30);
    }

    #[test]
    fn normality_commutator_criterion() {
        // K normal in X iff [K, X] <= K, over all subgroups of S4.
        let g = s4();
        let full = Subgroup::full(&g);
        for k in all_subgroups(&g) {
            let c = commutator(&k, &full).unwrap();
            assert_eq!(is_normal(&k), c.is_subgroup_of(&k));
        }
    }

    #[test]
    fn normal_closure_is_join_with_commutator() {
        let g = s4();
        let full = Subgroup::full(&g);
        for k in all_subgroups(&g) {
            let lhs = normal_closure(&k);
            let rhs = join(&k, &commutator(&k, &full).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
