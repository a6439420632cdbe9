use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{PermGroup, Subgroup};
use crate::perm::Perm;

/// A homomorphism between enumerated groups, given by generator images and
/// validated by the graph-subgroup test: the subgroup of `domain x codomain`
/// generated by the pairs `(gen_i, image_i)` must have exactly `|domain|`
/// elements, i.e. be the graph of a function.
///
/// Carries a full evaluation table indexed by domain element.
#[derive(Clone)]
pub struct GroupHom {
    domain: Arc<PermGroup>,
    codomain: Arc<PermGroup>,
    gen_images: Vec<Perm>,
    images: Vec<u32>,
}

impl GroupHom {
    pub fn new(
        domain: &Arc<PermGroup>,
        codomain: &Arc<PermGroup>,
        gen_images: Vec<Perm>,
    ) -> Result<GroupHom> {
        if gen_images.len() != domain.generators().len() {
            return Err(Error::NotAHomomorphism);
        }
        for img in &gen_images {
            if codomain.index_of(img).is_none() {
                return Err(Error::ElementNotInAmbient {
                    element: img.to_string(),
                });
            }
        }
        let pairs: Vec<Perm> = domain
            .generators()
            .iter()
            .zip(&gen_images)
            .map(|(g, h)| g.direct_sum(h))
            .collect();
        let graph = PermGroup::from_generators_capped(
            domain.degree() + codomain.degree(),
            pairs,
            domain.order() + 1,
        );
        match graph {
            Ok(gr) if gr.order() == domain.order() => {}
            _ => return Err(Error::NotAHomomorphism),
        }
        // Extend along the enumeration: images[j * gen_i] = images[j] * image_i.
        let mut images = vec![0u32; domain.order()];
        for k in 1..domain.order() as u32 {
            let (j, i) = domain.provenance(k).expect("non-identity has provenance");
            let img_perm = codomain
                .element(images[j as usize])
                .compose(&gen_images[i]);
            images[k as usize] = codomain
                .index_of(&img_perm)
                .expect("image stays in codomain");
        }
        Ok(GroupHom {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            gen_images,
            images,
        })
    }

    pub fn identity(g: &Arc<PermGroup>) -> GroupHom {
        GroupHom::new(g, g, g.generators().to_vec()).expect("identity is a homomorphism")
    }

    /// The hom sending every generator to the identity of the codomain.
    pub fn zero(domain: &Arc<PermGroup>, codomain: &Arc<PermGroup>) -> GroupHom {
        let id = Perm::identity(codomain.degree());
        GroupHom::new(
            domain,
            codomain,
            vec![id; domain.generators().len()],
        )
        .expect("zero map is a homomorphism")
    }

    pub fn domain(&self) -> &Arc<PermGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<PermGroup> {
        &self.codomain
    }

    pub fn gen_images(&self) -> &[Perm] {
        &self.gen_images
    }

    /// Image of the domain element with the given index.
    pub fn apply_idx(&self, idx: u32) -> u32 {
        self.images[idx as usize]
    }

    pub fn apply(&self, p: &Perm) -> Option<&Perm> {
        let idx = self.domain.index_of(p)?;
        Some(self.codomain.element(self.images[idx as usize]))
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` after `first`: the composite `x -> self(first(x))`.
    pub fn compose_with(&self, first: &GroupHom) -> Result<GroupHom> {
        if !PermGroup::same_group(first.codomain(), self.domain()) {
            return Err(Error::AmbientMismatch);
        }
        let gen_images: Vec<Perm> = first
            .gen_images
            .iter()
            .map(|p| {
                let mid = first.codomain.index_of(p).expect("image in codomain");
                self.codomain.element(self.images[mid as usize]).clone()
            })
            .collect();
        GroupHom::new(&first.domain, &self.codomain, gen_images)
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        image(self).order() == self.codomain.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_surjective()
    }

    /// Pointwise equality of evaluation tables (domains must agree).
    pub fn same_map(&self, other: &GroupHom) -> bool {
        PermGroup::same_group(&self.domain, &other.domain)
            && PermGroup::same_group(&self.codomain, &other.codomain)
            && self.images == other.images
    }
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupHom(|dom| = {}, |cod| = {}, |im| = {})",
            self.domain.order(),
            self.codomain.order(),
            image(self).order()
        )
    }
}

pub fn kernel(f: &GroupHom) -> Subgroup {
    let ker: Vec<u32> = (0..f.domain.order() as u32)
        .filter(|&i| f.images[i as usize] == 0)
        .collect();
    Subgroup::generated_by_indices(&f.domain, &ker)
}

pub fn image(f: &GroupHom) -> Subgroup {
    let gens: Vec<u32> = f
        .gen_images
        .iter()
        .map(|p| f.codomain.index_of(p).expect("image in codomain"))
        .collect();
    Subgroup::generated_by_indices(&f.codomain, &gens)
}

/// Image of a subgroup of the domain.
pub fn image_of_subgroup(f: &GroupHom, h: &Subgroup) -> Result<Subgroup> {
    if !PermGroup::same_group(h.ambient(), &f.domain) {
        return Err(Error::AmbientMismatch);
    }
    let idxs: Vec<u32> = h.elements().iter().map(|&e| f.apply_idx(e)).collect();
    Ok(Subgroup::generated_by_indices(&f.codomain, &idxs))
}

/// Preimage of a subgroup of the codomain.
pub fn preimage_of_subgroup(f: &GroupHom, h: &Subgroup) -> Result<Subgroup> {
    if !PermGroup::same_group(h.ambient(), &f.codomain) {
        return Err(Error::AmbientMismatch);
    }
    let idxs: Vec<u32> = (0..f.domain.order() as u32)
        .filter(|&i| h.contains(f.apply_idx(i)))
        .collect();
    Ok(Subgroup::generated_by_indices(&f.domain, &idxs))
}
