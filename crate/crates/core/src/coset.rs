//! Finite presentations and Todd-Coxeter coset enumeration (HLT strategy
//! with coincidence processing), after Holt, "Handbook of Computational
//! Group Theory", chapter 5.
//!
//! Enumeration always runs over the trivial subgroup, so a completed table is
//! the regular permutation representation of the presented group.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// A finite presentation. Relator letters are `+(i+1)` for generator `i` and
/// `-(i+1)` for its inverse. Relators are stored cyclically reduced, with
/// duplicates and empty relators dropped (first occurrence wins).
#[derive(Debug, Clone)]
pub struct Presentation {
    n_generators: usize,
    relators: Vec<Vec<i32>>,
}

impl Presentation {
    pub fn new(n_generators: usize, relators: Vec<Vec<i32>>) -> Result<Presentation> {
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut kept = Vec::new();
        for r in relators {
            for &letter in &r {
                let idx = letter.unsigned_abs() as usize;
                if letter == 0 || idx == 0 || idx > n_generators {
                    return Err(Error::InvalidPresentation {
                        reason: format!("letter {letter} out of range for {n_generators} generators"),
                    });
                }
            }
            let reduced = cyclically_reduce(&r);
            if !reduced.is_empty() && seen.insert(reduced.clone()) {
                kept.push(reduced);
            }
        }
        Ok(Presentation {
            n_generators,
            relators: kept,
        })
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// Debug text form, one `rel <word>` line per relator with `^-1` for
    /// inverse letters; generators print as `g1..gn`.
    pub fn to_debug_text(&self) -> String {
        let mut out = String::new();
        for r in &self.relators {
            out.push_str("rel");
            for &letter in r {
                let idx = letter.unsigned_abs();
                if letter > 0 {
                    out.push_str(&format!(" g{idx}"));
                } else {
                    out.push_str(&format!(" g{idx}^-1"));
                }
            }
            out.push('\n');
        }
        out
    }
}

fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut stack: Vec<i32> = Vec::with_capacity(word.len());
    for &x in word {
        if stack.last() == Some(&-x) {
            stack.pop();
        } else {
            stack.push(x);
        }
    }
    stack
}

fn cyclically_reduce(word: &[i32]) -> Vec<i32> {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
        w = free_reduce(&w);
    }
    w
}

/// Guard against tables whose sheer cell count would exhaust memory even
/// below the coset cap (wide alphabets).
const CELL_BUDGET: usize = 1 << 28;

const UNDEF: u32 = u32::MAX;

/// Enumerates the cosets of the trivial subgroup. On success returns the
/// regular permutation representation of the presented group together with
/// the permutation image of each abstract generator.
pub fn todd_coxeter(p: &Presentation, coset_cap: usize) -> Result<(Arc<PermGroup>, Vec<Perm>)> {
    assert!(coset_cap >= 1, "coset cap must be positive");
    if p.n_generators() == 0 {
        return Ok((PermGroup::trivial(1), Vec::new()));
    }
    let mut table = CosetTable::new(p.n_generators(), coset_cap);
    let mut alpha: usize = 0;
    while alpha < table.n_rows() {
        if table.is_alive(alpha as u32) {
            for ri in 0..p.relators().len() {
                table.scan_and_fill(alpha as u32, &p.relators()[ri])?;
                if !table.is_alive(alpha as u32) {
                    break;
                }
            }
            if table.is_alive(alpha as u32) {
                for col in 0..table.width {
                    if table.get(alpha as u32, col) == UNDEF {
                        table.define(alpha as u32, col)?;
                    }
                }
            }
        }
        alpha += 1;
    }
    table.into_group(p)
}

struct CosetTable {
    width: usize,
    cap: usize,
    rows: Vec<u32>,
    parent: Vec<u32>,
    dead_queue: std::collections::VecDeque<u32>,
    n_defined: usize,
}

impl CosetTable {
    fn new(n_generators: usize, cap: usize) -> CosetTable {
        let width = 2 * n_generators;
        CosetTable {
            width,
            cap,
            rows: vec![UNDEF; width],
            parent: vec![0],
            dead_queue: Default::default(),
            n_defined: 1,
        }
    }

    fn n_rows(&self) -> usize {
        self.parent.len()
    }

    fn is_alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    #[inline]
    fn get(&self, c: u32, col: usize) -> u32 {
        self.rows[c as usize * self.width + col]
    }

    #[inline]
    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.rows[c as usize * self.width + col] = v;
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut cur = c;
        while cur != r {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = r;
            cur = next;
        }
        r
    }

    fn col_of(letter: i32) -> usize {
        let idx = (letter.unsigned_abs() - 1) as usize;
        if letter > 0 {
            2 * idx
        } else {
            2 * idx + 1
        }
    }

    fn inv_col(col: usize) -> usize {
        col ^ 1
    }

    fn deduce(&mut self, a: u32, col: usize, b: u32) {
        self.set(a, col, b);
        self.set(b, Self::inv_col(col), a);
    }

    fn define(&mut self, a: u32, col: usize) -> Result<u32> {
        if self.n_defined >= self.cap {
            return Err(Error::CosetCapExceeded { cap: self.cap });
        }
        if (self.n_rows() + 1) * self.width > CELL_BUDGET {
            return Err(Error::CosetCapExceeded { cap: self.cap });
        }
        let fresh = self.n_rows() as u32;
        self.rows.extend(std::iter::repeat(UNDEF).take(self.width));
        self.parent.push(fresh);
        self.n_defined += 1;
        self.deduce(a, col, fresh);
        Ok(fresh)
    }

    fn merge(&mut self, a: u32, b: u32) {
        let ra = self.rep(a);
        let rb = self.rep(b);
        if ra != rb {
            let lo = ra.min(rb);
            let hi = ra.max(rb);
            self.parent[hi as usize] = lo;
            self.dead_queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(dead) = self.dead_queue.pop_front() {
            for col in 0..self.width {
                let delta = self.get(dead, col);
                if delta == UNDEF {
                    continue;
                }
                self.set(delta, Self::inv_col(col), UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(delta);
                let mu_entry = self.get(mu, col);
                let nu_entry = self.get(nu, Self::inv_col(col));
                if mu_entry != UNDEF {
                    self.merge(nu, mu_entry);
                } else if nu_entry != UNDEF {
                    self.merge(mu, nu_entry);
                } else {
                    self.deduce(mu, col, nu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, start: u32, word: &[i32]) -> Result<()> {
        let mut f = self.rep(start);
        let mut b = f;
        let mut i = 0isize;
        let mut j = word.len() as isize - 1;
        loop {
            while i <= j {
                let v = self.get(f, Self::col_of(word[i as usize]));
                if v == UNDEF {
                    break;
                }
                f = self.rep(v);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let v = self.get(b, Self::inv_col(Self::col_of(word[j as usize])));
                if v == UNDEF {
                    break;
                }
                b = self.rep(v);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i {
                self.deduce(f, Self::col_of(word[i as usize]), b);
                return Ok(());
            }
            self.define(f, Self::col_of(word[i as usize]))?;
        }
    }

    fn into_group(mut self, p: &Presentation) -> Result<(Arc<PermGroup>, Vec<Perm>)> {
        let live: Vec<u32> = (0..self.n_rows() as u32).filter(|&c| self.is_alive(c)).collect();
        let mut new_index = vec![UNDEF; self.n_rows()];
        for (ni, &c) in live.iter().enumerate() {
            new_index[c as usize] = ni as u32;
        }
        let degree = live.len().max(1);
        let mut gen_perms = Vec::with_capacity(p.n_generators());
        for g in 0..p.n_generators() {
            // The right action c -> c * g is an anti-homomorphism under the
            // crate's composition convention, so the inverse column is the
            // image of g.
            let col = 2 * g + 1;
            let images: Vec<u32> = live
                .iter()
                .map(|&c| {
                    let v = self.get(c, col);
                    debug_assert_ne!(v, UNDEF, "table incomplete after closure");
                    new_index[self.rep(v) as usize]
                })
                .collect();
            gen_perms.push(Perm::from_images(images).expect("closed table row is a permutation"));
        }
        let group = PermGroup::from_generators_capped(degree, gen_perms.clone(), live.len() + 1)?;
        debug_assert_eq!(group.order(), live.len());
        Ok((group, gen_perms))
    }
}
