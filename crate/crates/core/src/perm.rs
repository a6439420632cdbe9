use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}`, stored as its image vector.
///
/// Products follow the composition convention `(a * b)(x) = a(b(x))`: in the
/// product `a * b` the right factor acts first. Words written left to right
/// multiply in the same order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its 0-based image vector, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::BadCycleNotation {
                    reason: format!("image vector {images:?} is not a bijection"),
                });
            }
            seen[i as usize] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses 1-based cycle notation, e.g. `(1 2)(3 4)` or `()` for the identity.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let bad = |reason: String| Error::BadCycleNotation { reason };
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| bad(format!("expected '(' in {text:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(bad(format!("unexpected text before cycle in {text:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| bad(format!("unclosed cycle in {text:?}")))?;
            let body = &rest[open + 1..close];
            rest = rest[close + 1..].trim_start();
            let mut points = Vec::new();
            for tok in body.split_whitespace() {
                let p: usize = tok
                    .parse()
                    .map_err(|_| bad(format!("bad point {tok:?} in {text:?}")))?;
                if p == 0 || p > degree {
                    return Err(bad(format!("point {p} out of range 1..={degree}")));
                }
                if points.contains(&(p - 1)) {
                    return Err(bad(format!("repeated point {p} in {text:?}")));
                }
                points.push(p - 1);
            }
            for w in 0..points.len() {
                let from = points[w];
                let to = points[(w + 1) % points.len()];
                if images[from] != from as u32 {
                    return Err(bad(format!("point {} used twice in {text:?}", from + 1)));
                }
                images[from] = to as u32;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self * other`, with `other` acting first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&p| self.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.images.len()];
        let mut ord: usize = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Direct-sum embedding: acts as `self` on the first block and as `other`
    /// on the second.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let shift = self.degree() as u32;
        let images: Vec<u32> = self
            .images
            .iter()
            .copied()
            .chain(other.images.iter().map(|&p| p + shift))
            .collect();
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Restriction of the image vector to the first `degree` points; fails if
    /// the permutation moves points across the cut.
    pub fn restrict(&self, degree: usize) -> Result<Perm> {
        let head = &self.images[..degree];
        if head.iter().any(|&p| p as usize >= degree) {
            return Err(Error::BadCycleNotation {
                reason: "permutation does not preserve the block".into(),
            });
        }
        Perm::from_images(head.to_vec())
    }
}

impl fmt::Display for Perm {
    /// 1-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_roundtrip() {
        let p = Perm::from_cycles(5, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.order(), 6);
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Perm::from_cycles(3, "(1 2)").unwrap();
        let b = Perm::from_cycles(3, "(1 2 3)").unwrap();
        // (a * b)(1) = a(b(1)) = a(2) = 1
        assert_eq!(a.compose(&b).apply(0), 0);
        // conjugation a b a^-1 = (1 3 2)
        let conj = a.compose(&b).compose(&a.inverse());
        assert_eq!(conj.to_string(), "(1 3 2)");
    }

    #[test]
    fn identity_parses_and_prints() {
        let e = Perm::from_cycles(4, "()").unwrap();
        assert!(e.is_identity());
        assert_eq!(e.to_string(), "()");
        assert!(Perm::from_cycles(4, "").unwrap().is_identity());
    }

    #[test]
    fn malformed_cycles_rejected() {
        assert!(Perm::from_cycles(3, "(1 2").is_err());
        assert!(Perm::from_cycles(3, "(1 4)").is_err());
        assert!(Perm::from_cycles(3, "(1 1)").is_err());
        assert!(Perm::from_cycles(3, "(1 2)(2 3)").is_err());
    }
}
