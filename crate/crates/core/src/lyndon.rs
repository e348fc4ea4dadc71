//! Standard Lyndon words of positive roots and the induced convex order.
//!
//! `ℓ(α_i) = [i]`, and for a non-simple root `γ`, `ℓ(γ)` is the lexicographic
//! maximum of `ℓ(α)ℓ(β)` over decompositions `γ = α + β` into positive roots
//! with `ℓ(α) < ℓ(β)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::rootsystem::{height, positive_roots, RSType, RVec};

/// A word over the alphabet `1..=n` of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }
}

/// True iff `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::Invalid("empty word".into()));
    }
    Ok((1..w.len()).all(|k| w.0[..] < w.0[k..]))
}

/// Lyndon data for all positive roots of one type.
#[derive(Debug)]
pub struct LyndonTable {
    pub rstype: RSType,
    /// Positive roots sorted by the convex order `ℓ(α) < ℓ(β)`.
    pub roots: Vec<RVec>,
    pub words: Vec<Word>,
    /// Indices `(a, b)` into `roots` of the costandard pair, `None` for simple roots.
    pub costandard: Vec<Option<(usize, usize)>>,
}

impl LyndonTable {
    pub fn build(t: RSType) -> Self {
        let mut roots = positive_roots(t);
        roots.sort_by_key(|g| height(t, g).expect("roots lie in Q"));
        let mut word_of: HashMap<RVec, Word> = HashMap::new();
        let simple = crate::rootsystem::simple_roots(t);
        for g in &roots {
            if let Some(i) = simple.iter().position(|a| a == g) {
                word_of.insert(g.clone(), Word(vec![i + 1]));
                continue;
            }
            let mut best: Option<Word> = None;
            for a in &roots {
                let b = g - a;
                let (Some(wa), Some(wb)) = (word_of.get(a), word_of.get(&b)) else { continue };
                if wa < wb {
                    let cand = wa.concat(wb);
                    if best.as_ref().is_none_or(|x| cand > *x) {
                        best = Some(cand);
                    }
                }
            }
            word_of.insert(g.clone(), best.expect("every non-simple root decomposes"));
        }
        roots.sort_by(|x, y| word_of[x].cmp(&word_of[y]));
        let words: Vec<Word> = roots.iter().map(|g| word_of[g].clone()).collect();
        let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let costandard = words
            .iter()
            .map(|w| {
                if w.len() == 1 {
                    return None;
                }
                (1..w.len()).find_map(|cut| {
                    let k = w.len() - cut;
                    let (l, r) = (Word(w.0[..k].to_vec()), Word(w.0[k..].to_vec()));
                    Some((*index.get(&l)?, *index.get(&r)?))
                })
            })
            .collect();
        LyndonTable { rstype: t, roots, words, costandard }
    }

    pub fn index_of(&self, g: &RVec) -> Option<usize> {
        self.roots.iter().position(|x| x == g)
    }

    pub fn word(&self, g: &RVec) -> Result<&Word> {
        self.index_of(g).map(|k| &self.words[k]).ok_or_else(|| Error::NotARoot(g.to_string()))
    }

    pub fn root_of_word(&self, w: &Word) -> Option<&RVec> {
        self.words.iter().position(|x| x == w).map(|k| &self.roots[k])
    }
}

/// Shared, lazily built table for a type.
pub fn lyndon_table(t: RSType) -> Arc<LyndonTable> {
    static CACHE: OnceLock<Mutex<HashMap<RSType, Arc<LyndonTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(tab) = cache.lock().get(&t) {
        return tab.clone();
    }
    let tab = Arc::new(LyndonTable::build(t));
    cache.lock().entry(t).or_insert(tab).clone()
}

/// `ℓ(γ)` for a positive root `γ`.
pub fn standard_lyndon(t: RSType, g: &RVec) -> Result<Word> {
    lyndon_table(t).word(g).cloned()
}

/// Splits `ℓ(γ) = ℓ(α)ℓ(β)` with the longest possible left factor.
pub fn costandard_factorization(t: RSType, w: &Word) -> Result<(Word, Word)> {
    if w.len() <= 1 {
        return Err(Error::Invalid(format!("costandard factorization of the simple word {w}")));
    }
    let tab = lyndon_table(t);
    let k = tab.words.iter().position(|x| x == w).ok_or_else(|| Error::Invalid(format!("{w} is not ℓ(γ) for {t}")))?;
    let (a, b) = tab.costandard[k].ok_or_else(|| Error::Invalid(format!("no costandard split of {w}")))?;
    Ok((tab.words[a].clone(), tab.words[b].clone()))
}

/// Costandard pair `(α, β)` of a non-simple positive root.
pub fn costandard_roots(t: RSType, g: &RVec) -> Result<Option<(RVec, RVec)>> {
    let tab = lyndon_table(t);
    let k = tab.index_of(g).ok_or_else(|| Error::NotARoot(g.to_string()))?;
    Ok(tab.costandard[k].map(|(a, b)| (tab.roots[a].clone(), tab.roots[b].clone())))
}

/// Compares positive roots by their standard Lyndon words.
pub fn root_order(t: RSType, a: &RVec, b: &RVec) -> Result<Ordering> {
    let tab = lyndon_table(t);
    Ok(tab.word(a)?.cmp(tab.word(b)?))
}

/// Positive roots in increasing convex order.
pub fn convex_order(t: RSType) -> Vec<RVec> {
    lyndon_table(t).roots.clone()
}

/// Checks that `ℓ` is injective onto Lyndon words, that costandard splits
/// recover decompositions, and that the order is convex. Returns a list of
/// violations (empty on success).
pub fn check_lyndon_suite(t: RSType) -> Vec<String> {
    let tab = lyndon_table(t);
    let mut bad = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (k, w) in tab.words.iter().enumerate() {
        if !seen.insert(w.clone()) {
            bad.push(format!("{t}: word {w} repeated"));
        }
        if !is_lyndon(w).unwrap_or(false) {
            bad.push(format!("{t}: {w} is not Lyndon"));
        }
        let weight = w.0.iter().fold(RVec::zero(t.eps_dim()), |acc, &i| &acc + &crate::rootsystem::simple_roots(t)[i - 1]);
        if weight != tab.roots[k] {
            bad.push(format!("{t}: weight of {w} differs from its root"));
        }
        if w.len() > 1 {
            match tab.costandard[k] {
                Some((a, b)) => {
                    if &tab.roots[a] + &tab.roots[b] != tab.roots[k] {
                        bad.push(format!("{t}: costandard split of {w} has wrong weight"));
                    }
                    if tab.words[a] >= tab.words[b] {
                        bad.push(format!("{t}: costandard factors of {w} not increasing"));
                    }
                }
                None => bad.push(format!("{t}: {w} has no costandard split")),
            }
        }
    }
    for (i, a) in tab.roots.iter().enumerate() {
        for (j, b) in tab.roots.iter().enumerate() {
            let Some(c) = tab.index_of(&(a + b)) else { continue };
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            if !(lo < c && c < hi) {
                bad.push(format!("{t}: {a} + {b} not between its summands"));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{from_alpha_coords, Family};

    #[test]
    fn lyndon_predicate() {
        assert!(is_lyndon(&Word(vec![1, 2])).unwrap());
        assert!(!is_lyndon(&Word(vec![2, 1])).unwrap());
        assert!(is_lyndon(&Word(vec![1, 2, 2])).unwrap());
        assert!(is_lyndon(&Word(vec![])).is_err());
    }

    #[test]
    fn small_tables() {
        let a2 = RSType::of(Family::A, 2);
        assert_eq!(standard_lyndon(a2, &from_alpha_coords(a2, &[1, 1])).unwrap(), Word(vec![1, 2]));
        let b2 = RSType::of(Family::B, 2);
        assert_eq!(standard_lyndon(b2, &RVec::from_ints(&[1, 0])).unwrap(), Word(vec![1, 2]));
        assert_eq!(standard_lyndon(b2, &RVec::from_ints(&[1, 1])).unwrap(), Word(vec![1, 2, 2]));
        assert_eq!(costandard_factorization(b2, &Word(vec![1, 2, 2])).unwrap(), (Word(vec![1, 2]), Word(vec![2])));
        let a3 = RSType::of(Family::A, 3);
        assert_eq!(costandard_factorization(a3, &Word(vec![1, 2, 3])).unwrap(), (Word(vec![1, 2]), Word(vec![3])));
        assert!(costandard_factorization(a3, &Word(vec![2])).is_err());
        let order: Vec<RVec> = convex_order(b2);
        let expect = [[1, -1], [1, 0], [1, 1], [0, 1]].map(|v| RVec::from_ints(&v));
        assert_eq!(order, expect.to_vec());
    }

    #[test]
    fn suites_pass_through_rank_five() {
        for n in 1..=5 {
            for f in [Family::A, Family::B, Family::C, Family::D] {
                if let Ok(t) = RSType::new(f, n) {
                    let bad = check_lyndon_suite(t);
                    assert!(bad.is_empty(), "{bad:?}");
                }
            }
        }
    }
}
