//! Brute-force oracles for Higgins commutators via bounded words in free
//! products.
//!
//! A reduced word in `K * M` is a sequence of letters `(factor, element)`
//! with no identity letters and adjacent letters from distinct factors. The
//! binary oracle keeps the words whose image under the canonical map to
//! `K x M` is trivial (both per-factor products are the identity); the
//! ternary oracle keeps the words in `K * M * N` that die under all three
//! collapse maps to the two-factor free products (deleting the letters of the
//! third factor must leave a freely-trivial word). Surviving words are
//! evaluated in the ambient group and the evaluations generate the result.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exec;
use crate::group::Subgroup;

pub const DEFAULT_WORD_BUDGET: u64 = 10_000_000;

/// Result of a bounded oracle run. `stabilized_at` is the first length at
/// which the generated subgroup matched the previous length's; enumeration
/// stops there. Stabilization is evidence, not proof: the bounded run is an
/// under-approximation of the full kernel image.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub subgroup: Subgroup,
    pub stabilized_at: Option<usize>,
    pub words_enumerated: u64,
}

pub fn higgins_oracle_binary(k: &Subgroup, m: &Subgroup, max_len: usize) -> Result<OracleOutcome> {
    higgins_oracle_binary_budgeted(k, m, max_len, DEFAULT_WORD_BUDGET)
}

pub fn higgins_oracle_binary_budgeted(
    k: &Subgroup,
    m: &Subgroup,
    max_len: usize,
    budget: u64,
) -> Result<OracleOutcome> {
    assert!(max_len >= 2, "binary oracle needs max_len >= 2");
    check_ambients(&[k, m])?;
    oracle_run(&[k, m], max_len, budget)
}

pub fn higgins_oracle_ternary(
    k: &Subgroup,
    m: &Subgroup,
    n: &Subgroup,
    max_len: usize,
) -> Result<OracleOutcome> {
    higgins_oracle_ternary_budgeted(k, m, n, max_len, DEFAULT_WORD_BUDGET)
}

pub fn higgins_oracle_ternary_budgeted(
    k: &Subgroup,
    m: &Subgroup,
    n: &Subgroup,
    max_len: usize,
    budget: u64,
) -> Result<OracleOutcome> {
    assert!(max_len >= 3, "ternary oracle needs max_len >= 3");
    check_ambients(&[k, m, n])?;
    oracle_run(&[k, m, n], max_len, budget)
}

/// Subgroups generated by kernel words of length `<= l`, for each
/// `l = 1..=max_len`, without early stopping. Used to test monotonicity.
pub fn oracle_binary_by_length(
    k: &Subgroup,
    m: &Subgroup,
    max_len: usize,
    budget: u64,
) -> Result<Vec<Subgroup>> {
    check_ambients(&[k, m])?;
    let (per_len, _count) = enumerate_kernel_words(&[k, m], max_len, budget)?;
    Ok(accumulate(k, per_len))
}

fn check_ambients(subs: &[&Subgroup]) -> Result<()> {
    for s in &subs[1..] {
        if !crate::group::PermGroup::same_group(subs[0].ambient(), s.ambient()) {
            return Err(Error::AmbientMismatch);
        }
    }
    Ok(())
}

fn oracle_run(factors: &[&Subgroup], max_len: usize, budget: u64) -> Result<OracleOutcome> {
    let ambient = factors[0].ambient();
    let min_len = factors.len();
    let mut words_total = 0u64;
    let mut previous: Option<Subgroup> = None;
    for len in min_len..=max_len {
        let (per_len, count) =
            enumerate_kernel_words(factors, len, budget.saturating_sub(words_total))?;
        words_total += count;
        // Only compare successive lengths once kernel words have appeared at
        // an earlier length; before that, agreement is vacuous (the shortest
        // possible kernel word has length 4 in the binary case and longer in
        // the ternary one).
        let kernel_at_prev = per_len[..len - 1].iter().any(|s| !s.is_empty());
        let evals: BTreeSet<u32> = per_len.into_iter().flatten().collect();
        let gens: Vec<u32> = evals.into_iter().collect();
        let current = Subgroup::generated_by_indices(ambient, &gens);
        if kernel_at_prev {
            if let Some(prev) = &previous {
                if *prev == current {
                    return Ok(OracleOutcome {
                        subgroup: current,
                        stabilized_at: Some(len),
                        words_enumerated: words_total,
                    });
                }
            }
        }
        previous = Some(current);
    }
    Ok(OracleOutcome {
        subgroup: previous.expect("at least one length enumerated"),
        stabilized_at: None,
        words_enumerated: words_total,
    })
}

fn accumulate(first: &Subgroup, per_len: Vec<BTreeSet<u32>>) -> Vec<Subgroup> {
    let ambient = first.ambient();
    let mut acc: BTreeSet<u32> = BTreeSet::new();
    let mut out = Vec::with_capacity(per_len.len());
    for set in per_len {
        acc.extend(set);
        let gens: Vec<u32> = acc.iter().copied().collect();
        out.push(Subgroup::generated_by_indices(ambient, &gens));
    }
    out
}

/// Enumerates all reduced words of length `<= max_len`, fanning out over the
/// first letter. Returns the ambient evaluations of kernel words bucketed by
/// word length (index `l-1`), plus the number of words visited.
fn enumerate_kernel_words(
    factors: &[&Subgroup],
    max_len: usize,
    budget: u64,
) -> Result<(Vec<BTreeSet<u32>>, u64)> {
    let ambient = factors[0].ambient();
    let alphabets: Vec<Vec<u32>> = factors
        .iter()
        .map(|s| s.elements().iter().copied().filter(|&e| e != 0).collect())
        .collect();
    let firsts: Vec<(usize, u32)> = alphabets
        .iter()
        .enumerate()
        .flat_map(|(f, letters)| letters.iter().map(move |&x| (f, x)))
        .collect();

    let branch_results: Vec<(Vec<BTreeSet<u32>>, u64)> = exec::map_collect(&firsts, |&(f, x)| {
        let mut dfs = Dfs {
            ambient,
            alphabets: &alphabets,
            max_len,
            budget,
            count: 0,
            per_len: vec![BTreeSet::new(); max_len],
            collapse: vec![Vec::new(); factors.len()],
        };
        dfs.push_letter(f, x, 0, 1);
        (dfs.per_len, dfs.count)
    });

    let mut per_len = vec![BTreeSet::new(); max_len];
    let mut total = 0u64;
    for (buckets, count) in branch_results {
        total += count;
        for (acc, b) in per_len.iter_mut().zip(buckets) {
            acc.extend(b);
        }
    }
    if total > budget {
        return Err(Error::WordBudgetExceeded { budget });
    }
    Ok((per_len, total))
}

struct Dfs<'a> {
    ambient: &'a std::sync::Arc<crate::group::PermGroup>,
    alphabets: &'a [Vec<u32>],
    max_len: usize,
    budget: u64,
    count: u64,
    per_len: Vec<BTreeSet<u32>>,
    /// One reduced stack per collapse map. For `n` factors, stack `c` holds
    /// the word with the letters of factor `c` deleted, kept freely reduced.
    collapse: Vec<Vec<(usize, u32)>>,
}

impl<'a> Dfs<'a> {
    /// Appends letter `(factor, elem)` to the word whose ambient evaluation is
    /// `eval` and whose length is `len - 1`, then recurses.
    fn push_letter(&mut self, factor: usize, elem: u32, eval: u32, len: usize) {
        self.count += 1;
        if self.count > self.budget {
            return;
        }
        let eval = self.ambient.mul(eval, elem);
        let mut undo: Vec<(usize, Option<(usize, u32)>)> = Vec::with_capacity(self.collapse.len());
        for c in 0..self.collapse.len() {
            if c == factor {
                continue;
            }
            undo.push((
                c,
                push_reduced(self.ambient, &mut self.collapse[c], factor, elem),
            ));
        }
        if self.collapse.iter().all(|s| s.is_empty()) {
            self.per_len[len - 1].insert(eval);
        }
        if len < self.max_len {
            for f in 0..self.alphabets.len() {
                if f == factor {
                    continue;
                }
                for i in 0..self.alphabets[f].len() {
                    let x = self.alphabets[f][i];
                    self.push_letter(f, x, eval, len + 1);
                }
            }
        }
        for (c, popped) in undo.into_iter().rev() {
            pop_reduced(&mut self.collapse[c], popped);
        }
    }
}

/// Pushes a letter onto a freely-reduced stack, merging with a same-factor
/// top letter. Returns what must be restored on backtracking: `None` if the
/// letter was plainly pushed, `Some(old)` if it merged with (or cancelled)
/// the previous top `old`.
fn push_reduced(
    ambient: &crate::group::PermGroup,
    stack: &mut Vec<(usize, u32)>,
    factor: usize,
    elem: u32,
) -> Option<(usize, u32)> {
    if let Some(&(top_f, top_e)) = stack.last() {
        if top_f == factor {
            let merged = ambient.mul(top_e, elem);
            stack.pop();
            if merged != 0 {
                stack.push((factor, merged));
            }
            return Some((top_f, top_e));
        }
    }
    stack.push((factor, elem));
    None
}

fn pop_reduced(stack: &mut Vec<(usize, u32)>, popped: Option<(usize, u32)>) {
    match popped {
        None => {
            stack.pop();
        }
        Some(old) => {
            if let Some(&(f, _)) = stack.last() {
                if f == old.0 {
                    stack.pop();
                }
            }
            stack.push(old);
        }
    }
}
