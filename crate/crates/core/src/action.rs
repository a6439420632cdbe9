//! Internal actions of a group `L` on a group `M`, represented by one
//! automorphism of `M` per generator of `L` plus a full evaluation table,
//! together with the induced split extension `M >-> M x| L ->> L`, the
//! displacement subgroup `[L,M]` and the coinvariants quotient `M/[L,M]`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{self, PermGroup, Subgroup};
use crate::hom::{self, GroupHom};
use crate::perm::Perm;

/// An action of `L` on `M`. The defining data is one automorphism of `M` per
/// `L`-generator; construction extends it to a full `|L| x |M|` table and
/// verifies the homomorphism property `act(a * g) = act(a) . act(g)` on every
/// element/generator pair, which pins the whole table down.
#[derive(Clone)]
pub struct Action {
    l: Arc<PermGroup>,
    m: Arc<PermGroup>,
    gen_autos: Vec<GroupHom>,
    table: Vec<Vec<u32>>,
}

impl Action {
    pub fn new(l: &Arc<PermGroup>, m: &Arc<PermGroup>, gen_autos: Vec<GroupHom>) -> Result<Action> {
        if gen_autos.len() != l.generators().len() {
            return Err(Error::NotAHomomorphism);
        }
        for auto in &gen_autos {
            if !PermGroup::same_group(auto.domain(), m) || !PermGroup::same_group(auto.codomain(), m)
            {
                return Err(Error::AmbientMismatch);
            }
            if !auto.is_bijective() {
                return Err(Error::NotAHomomorphism);
            }
        }
        // Rows indexed by L-elements, built along the BFS provenance.
        let mut table: Vec<Vec<u32>> = Vec::with_capacity(l.order());
        table.push((0..m.order() as u32).collect());
        for k in 1..l.order() as u32 {
            let (j, i) = l.provenance(k).expect("non-identity has provenance");
            let prev = &table[j as usize];
            let auto = &gen_autos[i];
            let row: Vec<u32> = (0..m.order() as u32)
                .map(|x| prev[auto.apply_idx(x) as usize])
                .collect();
            table.push(row);
        }
        // act(a * g) must equal act(a) . act(g) for every element a and
        // generator g; with the rows built from one decomposition, this check
        // makes the extension well-defined.
        for a in 0..l.order() as u32 {
            for (i, auto) in gen_autos.iter().enumerate() {
                let ag = l.mul(a, l.generator_index(i));
                let row_ag = &table[ag as usize];
                let row_a = &table[a as usize];
                for x in 0..m.order() as u32 {
                    if row_ag[x as usize] != row_a[auto.apply_idx(x) as usize] {
                        return Err(Error::NotAHomomorphism);
                    }
                }
            }
        }
        Ok(Action {
            l: Arc::clone(l),
            m: Arc::clone(m),
            gen_autos,
            table,
        })
    }

    /// Every element of `L` acts as the identity.
    pub fn trivial(l: &Arc<PermGroup>, m: &Arc<PermGroup>) -> Action {
        let autos = vec![GroupHom::identity(m); l.generators().len()];
        Action::new(l, m, autos).expect("trivial action is valid")
    }

    pub fn l(&self) -> &Arc<PermGroup> {
        &self.l
    }

    pub fn m(&self) -> &Arc<PermGroup> {
        &self.m
    }

    pub fn gen_autos(&self) -> &[GroupHom] {
        &self.gen_autos
    }

    /// Index of `l . m` given element indices.
    #[inline]
    pub fn act(&self, l_idx: u32, m_idx: u32) -> u32 {
        self.table[l_idx as usize][m_idx as usize]
    }

    pub fn is_trivial_action(&self) -> bool {
        self.table
            .iter()
            .all(|row| row.iter().enumerate().all(|(i, &v)| i as u32 == v))
    }

    /// Restriction to an invariant subgroup of `M`, revalidated from scratch.
    pub fn restrict_to(&self, sub: &Subgroup) -> Result<Action> {
        if !PermGroup::same_group(sub.ambient(), &self.m) {
            return Err(Error::AmbientMismatch);
        }
        let k = sub.to_group();
        let mut gen_autos = Vec::with_capacity(self.l.generators().len());
        for gi in 0..self.l.generators().len() {
            let l_idx = self.l.generator_index(gi);
            let mut images = Vec::with_capacity(k.generators().len());
            for gen in k.generators() {
                let m_idx = self.m.index_of(gen).expect("subgroup generator lies in M");
                let img_idx = self.act(l_idx, m_idx);
                if !sub.contains(img_idx) {
                    return Err(Error::NotNormalized {
                        l: self.l.generators()[gi].to_string(),
                        m: gen.to_string(),
                    });
                }
                images.push(self.m.element(img_idx).clone());
            }
            gen_autos.push(GroupHom::new(&k, &k, images)?);
        }
        Action::new(&self.l, &k, gen_autos)
    }
}

impl std::fmt::Debug for Action {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Action(|L| = {}, |M| = {}, trivial = {})",
            self.l.order(),
            self.m.order(),
            self.is_trivial_action()
        )
    }
}

/// Conjugation action of a subgroup `L` of `x` on a subgroup `M` of `x`,
/// defined when every `l m l^-1` stays in `M`.
pub fn conjugation_action(
    x: &Arc<PermGroup>,
    l_sub: &Subgroup,
    m_sub: &Subgroup,
) -> Result<Action> {
    if !PermGroup::same_group(l_sub.ambient(), x) || !PermGroup::same_group(m_sub.ambient(), x) {
        return Err(Error::AmbientMismatch);
    }
    for &l in l_sub.elements() {
        for &m in m_sub.elements() {
            if !m_sub.contains(x.conj(l, m)) {
                return Err(Error::NotNormalized {
                    l: x.element(l).to_string(),
                    m: x.element(m).to_string(),
                });
            }
        }
    }
    let l_group = l_sub.to_group();
    let m_group = m_sub.to_group();
    let mut gen_autos = Vec::with_capacity(l_group.generators().len());
    for lg in l_group.generators() {
        let l_idx = x.index_of(lg).expect("generator lies in x");
        let images: Vec<Perm> = m_group
            .generators()
            .iter()
            .map(|mg| {
                let m_idx = x.index_of(mg).expect("generator lies in x");
                x.element(x.conj(l_idx, m_idx)).clone()
            })
            .collect();
        gen_autos.push(GroupHom::new(&m_group, &m_group, images)?);
    }
    Action::new(&l_group, &m_group, gen_autos)
}

/// The split extension `M >-k-> X <-s- L` with `p . s = 1`, realized on
/// `|M| + deg L` points: the carrier permutes the element set of `M`
/// (by `x -> m . (l . x)`) and the points of `L` (through `p`). This is a
/// faithful copy of the semidirect product of order `|M| * |L|`.
pub struct SplitExtension {
    pub carrier: Arc<PermGroup>,
    pub k: GroupHom,
    pub p: GroupHom,
    pub s: GroupHom,
}

pub fn semidirect(a: &Action) -> Result<SplitExtension> {
    let m = a.m();
    let l = a.l();
    let degree = m.order() + l.degree();
    let id_l_part = Perm::identity(l.degree());
    let mut gens: Vec<Perm> = Vec::new();
    // k-images of M-generators: left multiplication on M's element set.
    for gi in 0..m.generators().len() {
        let g = m.generator_index(gi);
        let block: Vec<u32> = (0..m.order() as u32).map(|x| m.mul(g, x)).collect();
        gens.push(Perm::from_images(block)?.direct_sum(&id_l_part));
    }
    // s-images of L-generators: the action on M's elements, plus L's own points.
    for gi in 0..l.generators().len() {
        let lg = l.generator_index(gi);
        let block: Vec<u32> = (0..m.order() as u32).map(|x| a.act(lg, x)).collect();
        gens.push(Perm::from_images(block)?.direct_sum(&l.generators()[gi]));
    }
    let carrier = PermGroup::from_generators_capped(degree, gens.clone(), m.order() * l.order() + 1)?;
    if carrier.order() != m.order() * l.order() {
        return Err(Error::NotAHomomorphism);
    }
    let k = GroupHom::new(m, &carrier, gens[..m.generators().len()].to_vec())?;
    let s = GroupHom::new(l, &carrier, gens[m.generators().len()..].to_vec())?;
    let mut p_images: Vec<Perm> = vec![Perm::identity(l.degree()); m.generators().len()];
    p_images.extend_from_slice(l.generators());
    let p = GroupHom::new(&carrier, l, p_images)?;
    debug_assert!(p.compose_with(&s)?.same_map(&GroupHom::identity(l)));
    debug_assert_eq!(hom::kernel(&p), hom::image(&k));
    Ok(SplitExtension { carrier, k, p, s })
}

/// The displacement subgroup of `M`: generated by all `m^-1 (l . m)`. Inside
/// the semidirect product it is the Higgins commutator `[L, M]`.
pub fn displacement(a: &Action) -> Subgroup {
    let m = a.m();
    let mut gens: std::collections::BTreeSet<u32> = Default::default();
    for l_idx in 0..a.l().order() as u32 {
        for m_idx in 0..m.order() as u32 {
            let d = m.mul(m.inv(m_idx), a.act(l_idx, m_idx));
            if d != 0 {
                gens.insert(d);
            }
        }
    }
    let gens: Vec<u32> = gens.into_iter().collect();
    Subgroup::generated_by_indices(m, &gens)
}

/// The coinvariants of an action: the quotient of `M` by the displacement
/// subgroup, with the projection and the induced (trivial) action.
pub struct Coinvariants {
    pub group: Arc<PermGroup>,
    pub projection: GroupHom,
    pub action: Action,
}

pub fn coinvariants(a: &Action) -> Result<Coinvariants> {
    let disp = displacement(a);
    let (c, projection) = group::quotient(a.m(), &disp)?;
    let action = Action::trivial(a.l(), &c);
    Ok(Coinvariants {
        group: c,
        projection,
        action,
    })
}

/// True iff the displacement subgroup is all of `M`; cross-checked against
/// the normal closure of `s(L)` being the whole semidirect carrier.
pub fn is_perfect_action(a: &Action) -> Result<bool> {
    let by_displacement = displacement(a).order() == a.m().order();
    let ext = semidirect(a)?;
    let s_image = hom::image(&ext.s);
    let closure = group::normal_closure(&s_image);
    let by_closure = closure.order() == ext.carrier.order();
    debug_assert_eq!(by_displacement, by_closure);
    Ok(by_displacement && by_closure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{are_isomorphic, commutator, direct_product};

    fn s3() -> Arc<PermGroup> {
        PermGroup::from_generators(
            3,
            vec![
                Perm::from_cycles(3, "(1 2)").unwrap(),
                Perm::from_cycles(3, "(1 2 3)").unwrap(),
            ],
        )
        .unwrap()
    }

    fn z2() -> Arc<PermGroup> {
        PermGroup::from_generators(2, vec![Perm::from_cycles(2, "(1 2)").unwrap()]).unwrap()
    }

    fn z3() -> Arc<PermGroup> {
        PermGroup::from_generators(3, vec![Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap()
    }

    fn z4() -> Arc<PermGroup> {
        PermGroup::from_generators(4, vec![Perm::from_cycles(4, "(1 2 3 4)").unwrap()]).unwrap()
    }

    /// Z2 acting on a cyclic group by inversion.
    fn inversion(m: &Arc<PermGroup>) -> Action {
        let inv = GroupHom::new(m, m, vec![m.generators()[0].inverse()]).unwrap();
        Action::new(&z2(), m, vec![inv]).unwrap()
    }

    #[test]
    fn trivial_action_has_trivial_displacement() {
        let a = Action::trivial(&z2(), &s3());
        assert!(a.is_trivial_action());
        assert!(displacement(&a).is_trivial());
    }

    #[test]
    fn semidirect_of_trivial_action_is_direct_product() {
        let a = Action::trivial(&z2(), &s3());
        let ext = semidirect(&a).unwrap();
        assert_eq!(ext.carrier.order(), 12);
        let dp = direct_product(&s3(), &z2()).unwrap();
        assert!(are_isomorphic(&ext.carrier, &dp.group).unwrap());
    }

    #[test]
    fn inversion_semidirect_is_s3() {
        let a = inversion(&z3());
        let ext = semidirect(&a).unwrap();
        assert_eq!(ext.carrier.order(), 6);
        assert!(!ext.carrier.is_abelian());
        assert!(are_isomorphic(&ext.carrier, &s3()).unwrap());
    }

    #[test]
    fn semidirect_with_trivial_m_is_l() {
        let a = Action::trivial(&s3(), &PermGroup::trivial(1));
        let ext = semidirect(&a).unwrap();
        assert!(are_isomorphic(&ext.carrier, &s3()).unwrap());
    }

    #[test]
    fn conjugation_action_examples() {
        let g = s3();
        let full = Subgroup::full(&g);
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        let act = conjugation_action(&g, &full, &a3).unwrap();
        assert_eq!(displacement(&act).order(), 3);

        let t2 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2)").unwrap()]).unwrap();
        let err = conjugation_action(&g, &a3, &t2).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));

        let triv = Subgroup::trivial(&g);
        let act2 = conjugation_action(&g, &triv, &full).unwrap();
        assert!(act2.is_trivial_action());
    }

    #[test]
    fn displacement_examples() {
        let a = inversion(&z3());
        assert_eq!(displacement(&a).order(), 3);
        let a4 = inversion(&z4());
        assert_eq!(displacement(&a4).order(), 2);
    }

    #[test]
    fn displacement_is_normal_in_carrier() {
        let a = inversion(&z4());
        let ext = semidirect(&a).unwrap();
        let disp = displacement(&a);
        let in_carrier: Vec<Perm> = disp
            .elements()
            .iter()
            .map(|&i| {
                ext.carrier
                    .element(ext.k.apply_idx(i))
                    .clone()
            })
            .collect();
        let sub = Subgroup::generated(&ext.carrier, &in_carrier).unwrap();
        assert!(group::is_normal(&sub));
    }

    #[test]
    fn coinvariants_examples() {
        let triv = Action::trivial(&z2(), &s3());
        assert_eq!(coinvariants(&triv).unwrap().group.order(), 6);

        let g = s3();
        let full = Subgroup::full(&g);
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        let conj = conjugation_action(&g, &full, &a3).unwrap();
        assert_eq!(coinvariants(&conj).unwrap().group.order(), 1);

        let c = coinvariants(&inversion(&z4())).unwrap();
        assert_eq!(c.group.order(), 2);
        assert!(c.action.is_trivial_action());
        assert!(c.projection.is_surjective());
    }

    #[test]
    fn perfect_action_examples() {
        let triv = Action::trivial(&z2(), &s3());
        assert!(!is_perfect_action(&triv).unwrap());

        let g = s3();
        let full = Subgroup::full(&g);
        let a3 = Subgroup::generated(&g, &[Perm::from_cycles(3, "(1 2 3)").unwrap()]).unwrap();
        let conj = conjugation_action(&g, &full, &a3).unwrap();
        assert!(is_perfect_action(&conj).unwrap());

        let on_trivial = Action::trivial(&s3(), &PermGroup::trivial(1));
        assert!(is_perfect_action(&on_trivial).unwrap());
    }

    #[test]
    fn displacement_equals_commutator_in_carrier() {
        for a in [
            inversion(&z3()),
            inversion(&z4()),
            Action::trivial(&z2(), &s3()),
        ] {
            let ext = semidirect(&a).unwrap();
            let sl = hom::image(&ext.s);
            let km = hom::image(&ext.k);
            let comm = commutator(&sl, &km).unwrap();
            let disp = displacement(&a);
            let disp_in_carrier: Vec<u32> = disp
                .elements()
                .iter()
                .map(|&i| ext.k.apply_idx(i))
                .collect();
            let disp_sub = Subgroup::generated_by_indices(&ext.carrier, &disp_in_carrier);
            assert_eq!(comm, disp_sub);
        }
    }

    #[test]
    fn invalid_action_data_is_rejected() {
        // Sending the Z4 generator to an order-2 automorphism source.
        let z4 = z4();
        let sq = GroupHom::new(&z4, &z4, vec![z4.generators()[0].compose(&z4.generators()[0])])
            .unwrap();
        // Not bijective: kernel is nontrivial.
        let err = Action::new(&z2(), &z4, vec![sq]).unwrap_err();
        assert_eq!(err, Error::NotAHomomorphism);

        // Bijective but of wrong order for the acting group: Z2 cannot act
        // through an order-4 automorphism of Z5.
        let z5 = PermGroup::from_generators(5, vec![Perm::from_cycles(5, "(1 2 3 4 5)").unwrap()])
            .unwrap();
        let dbl = GroupHom::new(
            &z5,
            &z5,
            vec![z5.generators()[0].compose(&z5.generators()[0])],
        )
        .unwrap();
        let err = Action::new(&z2(), &z5, vec![dbl]).unwrap_err();
        assert_eq!(err, Error::NotAHomomorphism);
    }
}
