//! Small finite group engine: element enumeration, conjugacy classes,
//! centralizers, and exact character tables.
//!
//! The engine targets the groups appearing as family groups and their
//! centralizers: symmetric groups up to S5, elementary abelian 2-groups,
//! and the reflection groups of rank at most 4. Tables of nonabelian
//! groups here are integer valued; the integer path refuses loudly if a
//! non-integer value ever shows up. Abelian tables are computed as exact
//! roots of unity.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cyclo::Cyc;
use crate::exact::{Int, Rat};
use crate::perm::Perm;

pub trait GroupElt: Clone + Eq + Ord + std::hash::Hash {
    fn gmul(&self, rhs: &Self) -> Self;
    fn ginv(&self) -> Self;
}

impl GroupElt for Perm {
    fn gmul(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }
    fn ginv(&self) -> Self {
        self.inverse()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group exceeds the size cap of {cap} elements")]
    TooLarge { cap: usize },
    #[error("element does not belong to the group")]
    NotInGroup,
    #[error("group is not a full symmetric group on its points")]
    NotSymmetric,
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("non-integer character value in the integer table path")]
    Irrational,
    #[error("character table search did not complete")]
    TableIncomplete,
}

#[derive(Debug, Clone)]
pub struct ConjClass {
    /// Index of the lexicographically minimal member.
    pub rep: usize,
    pub size: usize,
    pub members: Vec<usize>,
}

/// A fully enumerated finite group. Everything is computed eagerly at
/// construction and the object is immutable afterwards.
#[derive(Debug, Clone)]
pub struct FiniteGroup<T: GroupElt> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    gens: Vec<usize>,
    /// BFS word length over `gens`.
    lengths: Vec<u32>,
    /// BFS tree: `parents[i] = (gen position, predecessor index)`.
    parents: Vec<Option<(usize, usize)>>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl<T: GroupElt> FiniteGroup<T> {
    /// Enumerate the group generated by `gens` (breadth-first, so the word
    /// length of each element over the generators comes for free).
    pub fn from_generators(identity: T, gens: Vec<T>, cap: usize) -> Result<Self, GroupError> {
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut lengths = vec![0u32];
        let mut parents: Vec<Option<(usize, usize)>> = vec![None];
        let mut queue = VecDeque::from([0usize]);
        let gen_elems: Vec<T> = gens;
        while let Some(i) = queue.pop_front() {
            for (gpos, g) in gen_elems.iter().enumerate() {
                let next = elements[i].gmul(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(GroupError::TooLarge { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    lengths.push(lengths[i] + 1);
                    parents.push(Some((gpos, i)));
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        let gens = gen_elems.iter().map(|g| index[g]).collect();
        let (classes, class_of) = conjugacy_classes(&elements, &index);
        Ok(FiniteGroup {
            elements,
            index,
            gens,
            lengths,
            parents,
            classes,
            class_of,
        })
    }

    /// Build from an explicit element set (used for centralizers). The set
    /// must be closed; a generating set is extracted greedily.
    pub fn from_elements(identity: T, mut elems: Vec<T>) -> Result<Self, GroupError> {
        elems.sort();
        elems.dedup();
        let index: HashMap<T, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        if !index.contains_key(&identity) {
            return Err(GroupError::NotClosed);
        }
        for a in &elems {
            for b in &elems {
                if !index.contains_key(&a.gmul(b)) {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        // Greedy generating set.
        let mut gens: Vec<T> = Vec::new();
        let mut span = enumerate_span(&identity, &gens);
        for e in &elems {
            if span.len() == elems.len() {
                break;
            }
            if !span.contains(e) {
                gens.push(e.clone());
                span = enumerate_span(&identity, &gens);
            }
        }
        let g = Self::from_generators(identity, gens, elems.len() + 1)?;
        debug_assert_eq!(g.order(), elems.len());
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &T) -> bool {
        self.index.contains_key(e)
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }

    /// Word length over the construction generators.
    pub fn length(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    /// A reduced word (generator positions) for element `i` from the BFS tree.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while let Some((g, prev)) = self.parents[cur] {
            w.push(g);
            cur = prev;
        }
        w.reverse();
        w
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, elem: usize) -> usize {
        self.class_of[elem]
    }

    pub fn class_rep(&self, c: usize) -> &T {
        &self.elements[self.classes[c].rep]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        let inv = self.class_rep(c).ginv();
        self.class_of[self.index[&inv]]
    }

    /// Class of `rep^k`.
    pub fn power_class(&self, c: usize, k: u32) -> usize {
        let rep = self.class_rep(c);
        let mut acc = self.elements[0].clone();
        debug_assert!(acc.gmul(rep) == *rep, "element 0 must be the identity");
        for _ in 0..k {
            acc = acc.gmul(rep);
        }
        self.class_of[self.index[&acc]]
    }

    pub fn element_order(&self, i: usize) -> u32 {
        let e = &self.elements[i];
        let mut acc = e.clone();
        let mut n = 1;
        while self.index[&acc] != 0 {
            acc = acc.gmul(e);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| {
            self.gens.iter().all(|&b| {
                self.elements[a].gmul(&self.elements[b]) == self.elements[b].gmul(&self.elements[a])
            })
        })
    }

    pub fn is_central(&self, i: usize) -> bool {
        let e = &self.elements[i];
        self.gens
            .iter()
            .all(|&g| e.gmul(&self.elements[g]) == self.elements[g].gmul(e))
    }

    pub fn centralizer_indices(&self, i: usize) -> Vec<usize> {
        let x = &self.elements[i];
        (0..self.order())
            .filter(|&h| self.elements[h].gmul(x) == x.gmul(&self.elements[h]))
            .collect()
    }

    /// All one-dimensional characters, as exact root-of-unity vectors per
    /// element. Found by enumerating generator-value assignments and keeping
    /// the multiplicative ones.
    pub fn linear_characters(&self) -> Vec<Vec<Cyc>> {
        let gen_orders: Vec<u32> = self.gens.iter().map(|&g| self.element_order(g)).collect();
        let mut found: Vec<Vec<Cyc>> = Vec::new();
        let mut assignment = vec![0u32; self.gens.len()];
        loop {
            let gen_vals: Vec<Cyc> = gen_orders
                .iter()
                .zip(&assignment)
                .map(|(&o, &a)| Cyc::root_of_unity(o, a as i64))
                .collect();
            // Extend along the BFS tree, then check multiplicativity.
            let mut vals = vec![Cyc::one(); self.order()];
            for i in 1..self.order() {
                let (g, prev) = self.parents[i].expect("non-identity has a parent");
                vals[i] = vals[prev].mul(&gen_vals[g]);
            }
            let ok = (0..self.order()).all(|x| {
                (0..self.gens.len()).all(|g| {
                    let xg = self.index[&self.elements[x].gmul(&self.elements[self.gens[g]])];
                    vals[xg] == vals[x].mul(&gen_vals[g])
                })
            });
            if ok && !found.contains(&vals) {
                found.push(vals);
            }
            // Odometer step.
            let mut pos = 0;
            loop {
                if pos == assignment.len() {
                    return found;
                }
                assignment[pos] += 1;
                if assignment[pos] < gen_orders[pos] {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
        }
    }
}

fn enumerate_span<T: GroupElt>(identity: &T, gens: &[T]) -> BTreeSet<T> {
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let next = x.gmul(g);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn conjugacy_classes<T: GroupElt>(
    elements: &[T],
    index: &HashMap<T, usize>,
) -> (Vec<ConjClass>, Vec<usize>) {
    let n = elements.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        let mut members = vec![start];
        class_of[start] = cid;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for h in 0..n {
                let conj = elements[h].gmul(&elements[x]).gmul(&elements[h].ginv());
                let ci = index[&conj];
                if class_of[ci] == usize::MAX {
                    class_of[ci] = cid;
                    members.push(ci);
                    queue.push_back(ci);
                }
            }
        }
        members.sort_unstable();
        let rep = *members
            .iter()
            .min_by(|&&a, &&b| elements[a].cmp(&elements[b]))
            .unwrap();
        classes.push(ConjClass {
            rep,
            size: members.len(),
            members,
        });
    }
    (classes, class_of)
}

/// An exact character table: rows are irreducible characters evaluated on
/// the canonical class ordering, first row the trivial character.
#[derive(Debug, Clone)]
pub struct CharTable {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub dims: Vec<Int>,
    values: Vec<Vec<Cyc>>,
}

impl CharTable {
    pub fn n_irreps(&self) -> usize {
        self.values.len()
    }

    pub fn n_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn value(&self, irr: usize, class: usize) -> &Cyc {
        &self.values[irr][class]
    }

    pub fn row(&self, irr: usize) -> &[Cyc] {
        &self.values[irr]
    }

    pub fn integer_value(&self, irr: usize, class: usize) -> Result<Int, GroupError> {
        let r = self.values[irr][class]
            .as_rat()
            .ok_or(GroupError::Irrational)?;
        if !r.denom().is_one() {
            return Err(GroupError::Irrational);
        }
        Ok(r.numer().clone())
    }

    pub fn dim(&self, irr: usize) -> &Int {
        &self.dims[irr]
    }

    /// Exact row orthogonality with class weights.
    pub fn orthogonality_holds(&self, inverse_class: &[usize]) -> bool {
        for i in 0..self.n_irreps() {
            for j in 0..self.n_irreps() {
                let mut acc = Cyc::zero();
                for c in 0..self.n_classes() {
                    let term = self.values[i][c].mul(&self.values[j][inverse_class[c]]);
                    acc = acc.add(&term.scale(&Rat::from_integer(Int::from(
                        self.class_sizes[c] as i64,
                    ))));
                }
                let expect = if i == j {
                    Cyc::from_int(self.order as i64)
                } else {
                    Cyc::zero()
                };
                if acc != expect {
                    return false;
                }
            }
        }
        true
    }
}

/// Class-function context for the integer table search.
struct ClassCtx {
    order: usize,
    sizes: Vec<usize>,
    inv: Vec<usize>,
    square: Vec<usize>,
}

impl ClassCtx {
    fn inner(&self, a: &[Int], b: &[Int]) -> Rat {
        let mut num = Int::zero();
        for c in 0..self.sizes.len() {
            num += Int::from(self.sizes[c] as i64) * &a[c] * &b[self.inv[c]];
        }
        Rat::new(num, Int::from(self.order as i64))
    }

    fn inner_int(&self, a: &[Int], b: &[Int]) -> Result<Int, GroupError> {
        let r = self.inner(a, b);
        if r.denom().is_one() {
            Ok(r.numer().clone())
        } else {
            Err(GroupError::Irrational)
        }
    }

    fn reduce(&self, cand: &[Int], known: &[Vec<Int>]) -> Result<Vec<Int>, GroupError> {
        let mut r = cand.to_vec();
        for psi in known {
            let m = self.inner_int(&r, psi)?;
            if !m.is_zero() {
                for c in 0..r.len() {
                    r[c] = &r[c] - &m * &psi[c];
                }
            }
        }
        Ok(r)
    }

    fn product(a: &[Int], b: &[Int]) -> Vec<Int> {
        a.iter().zip(b).map(|(x, y)| x * y).collect()
    }

    fn alt_square(&self, a: &[Int]) -> Result<Vec<Int>, GroupError> {
        (0..a.len())
            .map(|c| {
                let v = &a[c] * &a[c] - &a[self.square[c]];
                let (q, r) = num_integer::Integer::div_rem(&v, &Int::from(2));
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(GroupError::Irrational)
                }
            })
            .collect()
    }

    fn sym_square(&self, a: &[Int]) -> Result<Vec<Int>, GroupError> {
        (0..a.len())
            .map(|c| {
                let v = &a[c] * &a[c] + &a[self.square[c]];
                let (q, r) = num_integer::Integer::div_rem(&v, &Int::from(2));
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(GroupError::Irrational)
                }
            })
            .collect()
    }
}

/// Compute the full character table of `g`, seeding the search with the
/// supplied class functions (which must be genuine characters).
///
/// Abelian groups are handled exactly via their linear characters. For
/// nonabelian groups we run an exact greedy decomposition over integer
/// class functions: seed characters are reduced against the known
/// irreducibles, norm-one remainders are new irreducibles, and the pool is
/// grown by products and symmetric/alternating squares until the sum of
/// squared dimensions reaches the group order.
pub fn character_table<T: GroupElt>(
    g: &FiniteGroup<T>,
    extra_seeds: Vec<Vec<Int>>,
) -> Result<CharTable, GroupError> {
    let sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
    if g.is_abelian() {
        let lin = g.linear_characters();
        if lin.len() != g.order() {
            return Err(GroupError::TableIncomplete);
        }
        let mut rows: Vec<Vec<Cyc>> = lin
            .into_iter()
            .map(|vals| {
                g.classes()
                    .iter()
                    .map(|c| vals[c.rep].clone())
                    .collect::<Vec<Cyc>>()
            })
            .collect();
        rows.sort();
        rows.dedup();
        if rows.len() != g.order() {
            return Err(GroupError::TableIncomplete);
        }
        let trivial = vec![Cyc::one(); g.class_count()];
        rows.retain(|r| *r != trivial);
        rows.insert(0, trivial);
        let dims = vec![Int::one(); rows.len()];
        return Ok(CharTable {
            order: g.order(),
            class_sizes: sizes,
            dims,
            values: rows,
        });
    }

    let ctx = ClassCtx {
        order: g.order(),
        sizes: sizes.clone(),
        inv: (0..g.class_count()).map(|c| g.inverse_class(c)).collect(),
        square: (0..g.class_count()).map(|c| g.power_class(c, 2)).collect(),
    };
    let nc = g.class_count();
    let mut known: Vec<Vec<Int>> = Vec::new();

    // All one-dimensional characters come from the abelianization; in the
    // groups this engine is for they are integer valued.
    for lin in g.linear_characters() {
        let row: Result<Vec<Int>, GroupError> = g
            .classes()
            .iter()
            .map(|c| {
                let r = lin[c.rep].as_rat().ok_or(GroupError::Irrational)?;
                if r.denom().is_one() {
                    Ok(r.numer().clone())
                } else {
                    Err(GroupError::Irrational)
                }
            })
            .collect();
        let row = row?;
        if !known.contains(&row) {
            known.push(row);
        }
    }

    let mut pool: BTreeSet<Vec<Int>> = extra_seeds.into_iter().collect();
    let order_int = Int::from(g.order() as i64);
    let sum_sq = |known: &[Vec<Int>]| -> Int {
        known.iter().map(|k| &k[0] * &k[0]).sum()
    };

    let mut rounds = 0usize;
    while sum_sq(&known) != order_int {
        rounds += 1;
        if rounds > 24 || pool.len() > 6000 {
            return Err(GroupError::TableIncomplete);
        }
        let mut next: BTreeSet<Vec<Int>> = BTreeSet::new();
        let mut progress = false;
        let mut queue: Vec<Vec<Int>> = pool.iter().cloned().collect();
        while let Some(cand) = queue.pop() {
            let r = ctx.reduce(&cand, &known)?;
            if r.iter().all(Int::is_zero) {
                continue;
            }
            if ctx.inner_int(&r, &r)? == Int::one() {
                let r = if r[0].is_negative() {
                    r.iter().map(|x| -x).collect()
                } else {
                    r
                };
                if !known.contains(&r) {
                    known.push(r);
                    progress = true;
                    // Re-reduce everything already set aside.
                    queue.extend(next.iter().cloned());
                    next.clear();
                }
            } else {
                next.insert(r);
            }
        }
        if sum_sq(&known) == order_int {
            break;
        }
        if !progress {
            // Grow the pool: products among stuck candidates and known
            // irreducibles, plus tensor-square splittings. Everything in
            // sight is a genuine character, so all of these are too.
            let stuck: Vec<Vec<Int>> = next.iter().cloned().collect();
            let mut sources = stuck.clone();
            sources.extend(known.iter().cloned());
            for r in &sources {
                for k in &known {
                    next.insert(ClassCtx::product(r, k));
                }
                for r2 in &stuck {
                    next.insert(ClassCtx::product(r, r2));
                }
                next.insert(ctx.alt_square(r)?);
                next.insert(ctx.sym_square(r)?);
            }
        }
        pool = next;
        let _ = nc;
    }

    // Canonical ordering: trivial first, then by dimension and values.
    let trivial: Vec<Int> = vec![Int::one(); g.class_count()];
    known.retain(|r| *r != trivial);
    known.sort_by(|a, b| a[0].cmp(&b[0]).then_with(|| a.cmp(b)));
    known.insert(0, trivial);
    let dims: Vec<Int> = known.iter().map(|r| r[0].clone()).collect();
    let values: Vec<Vec<Cyc>> = known
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| Cyc::from_rat(Rat::from_integer(v.clone())))
                .collect()
        })
        .collect();
    let table = CharTable {
        order: g.order(),
        class_sizes: sizes,
        dims,
        values,
    };
    let inv: Vec<usize> = (0..g.class_count()).map(|c| g.inverse_class(c)).collect();
    if !table.orthogonality_holds(&inv) {
        return Err(GroupError::TableIncomplete);
    }
    Ok(table)
}

/// A permutation group with eagerly built class data and a lazily built
/// character table.
#[derive(Debug)]
pub struct PermGroup {
    fg: FiniteGroup<Perm>,
    degree: usize,
    table: OnceLock<Result<CharTable, GroupError>>,
}

pub const PERM_GROUP_CAP: usize = 10_000;

impl PermGroup {
    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> Result<Self, GroupError> {
        let fg = FiniteGroup::from_generators(Perm::identity(degree), gens, PERM_GROUP_CAP)?;
        Ok(PermGroup {
            fg,
            degree,
            table: OnceLock::new(),
        })
    }

    pub fn trivial() -> Self {
        PermGroup::from_generators(1, vec![]).unwrap()
    }

    pub fn symmetric(n: usize) -> Self {
        let degree = n.max(1);
        let gens = (0..n.saturating_sub(1))
            .map(|i| Perm::transposition(degree, i, i + 1))
            .collect();
        PermGroup::from_generators(degree, gens).unwrap()
    }

    /// (Z/2)^d acting by `d` disjoint transpositions.
    pub fn elementary_abelian_two(d: usize) -> Self {
        if d == 0 {
            return PermGroup::trivial();
        }
        let degree = 2 * d;
        let gens = (0..d).map(|i| Perm::transposition(degree, 2 * i, 2 * i + 1)).collect();
        PermGroup::from_generators(degree, gens).unwrap()
    }

    pub fn from_elements(degree: usize, elems: Vec<Perm>) -> Result<Self, GroupError> {
        let fg = FiniteGroup::from_elements(Perm::identity(degree), elems)?;
        Ok(PermGroup {
            fg,
            degree,
            table: OnceLock::new(),
        })
    }

    pub fn inner(&self) -> &FiniteGroup<Perm> {
        &self.fg
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.fg.order()
    }

    pub fn is_abelian(&self) -> bool {
        self.fg.is_abelian()
    }

    pub fn conjugacy_classes(&self) -> Vec<(&Perm, usize)> {
        self.fg
            .classes()
            .iter()
            .map(|c| (&self.fg.elements()[c.rep], c.size))
            .collect()
    }

    pub fn class_of_element(&self, p: &Perm) -> Option<usize> {
        self.fg.index_of(p).map(|i| self.fg.class_of(i))
    }

    pub fn centralizer(&self, x: &Perm) -> Result<PermGroup, GroupError> {
        let i = self.fg.index_of(x).ok_or(GroupError::NotInGroup)?;
        let elems: Vec<Perm> = self
            .fg
            .centralizer_indices(i)
            .into_iter()
            .map(|h| self.fg.elements()[h].clone())
            .collect();
        PermGroup::from_elements(self.degree, elems)
    }

    /// Orbits of the group on its points.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(p) = queue.pop_front() {
                for &g in self.fg.generator_indices() {
                    let q = self.fg.elements()[g].apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                        queue.push_back(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn char_table(&self) -> Result<&CharTable, GroupError> {
        self.table
            .get_or_init(|| character_table(&self.fg, self.char_seeds()))
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// Seed characters: fixed points per orbit and the permutation parity.
    fn char_seeds(&self) -> Vec<Vec<Int>> {
        let mut seeds = Vec::new();
        for orbit in self.orbits() {
            let row: Vec<Int> = self
                .fg
                .classes()
                .iter()
                .map(|c| {
                    let rep = &self.fg.elements()[c.rep];
                    Int::from(orbit.iter().filter(|&&p| rep.apply(p) == p).count() as i64)
                })
                .collect();
            seeds.push(row);
        }
        let parity: Vec<Int> = self
            .fg
            .classes()
            .iter()
            .map(|c| Int::from(self.fg.elements()[c.rep].parity() as i64))
            .collect();
        seeds.push(parity);
        seeds
    }

    /// The sign character, defined only on full symmetric groups.
    pub fn sign_character(&self) -> Result<Vec<Int>, GroupError> {
        let fact: usize = (1..=self.degree).product();
        if self.order() != fact {
            return Err(GroupError::NotSymmetric);
        }
        Ok(self
            .fg
            .classes()
            .iter()
            .map(|c| Int::from(self.fg.elements()[c.rep].parity() as i64))
            .collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct ClassJson {
            rep: String,
            size: usize,
        }
        let classes: Vec<ClassJson> = self
            .fg
            .classes()
            .iter()
            .map(|c| ClassJson {
                rep: format!("{}", self.fg.elements()[c.rep]),
                size: c.size,
            })
            .collect();
        let rows: Option<Vec<Vec<String>>> = self.char_table().ok().map(|t| {
            (0..t.n_irreps())
                .map(|i| (0..t.n_classes()).map(|c| t.value(i, c).to_string()).collect())
                .collect()
        });
        serde_json::json!({
            "order": self.order(),
            "degree": self.degree,
            "classes": serde_json::to_value(classes).unwrap(),
            "irreducibles": rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn s3_classes_and_table() {
        let g = PermGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|(_, s)| *s).collect();
        assert_eq!(sizes.remove(0), 1); // identity class first
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
        let t = g.char_table().unwrap();
        let mut dims = t.dims.clone();
        dims.sort();
        assert_eq!(dims, vec![int(1), int(1), int(2)]);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().len(), 1);
        assert_eq!(g.char_table().unwrap().n_irreps(), 1);
    }

    #[test]
    fn s5_classes_and_dims() {
        let g = PermGroup::symmetric(5);
        assert_eq!(g.order(), 120);
        assert_eq!(g.conjugacy_classes().len(), 7);
        let t = g.char_table().unwrap();
        let mut dims = t.dims.clone();
        dims.sort();
        assert_eq!(
            dims,
            vec![int(1), int(1), int(4), int(4), int(5), int(5), int(6)]
        );
        let inv: Vec<usize> = (0..t.n_classes()).map(|c| g.inner().inverse_class(c)).collect();
        assert!(t.orthogonality_holds(&inv));
    }

    #[test]
    fn centralizer_orders_multiply() {
        let g = PermGroup::symmetric(5);
        for (rep, size) in g.conjugacy_classes() {
            let z = g.centralizer(&rep.clone()).unwrap();
            assert_eq!(z.order() * size, g.order());
        }
        let t = Perm::transposition(5, 0, 1);
        assert_eq!(g.centralizer(&t).unwrap().order(), 12);
    }

    #[test]
    fn centralizer_membership_error() {
        let g = PermGroup::elementary_abelian_two(2);
        let bad = Perm::from_cycles(4, &[&[0, 1, 2]]);
        assert_eq!(g.centralizer(&bad).err(), Some(GroupError::NotInGroup));
        // Abelian: centralizer of anything inside is everything.
        let x = Perm::transposition(4, 0, 1);
        assert_eq!(g.centralizer(&x).unwrap().order(), 4);
    }

    #[test]
    fn sign_character_values() {
        let g = PermGroup::symmetric(4);
        let sgn = g.sign_character().unwrap();
        for (c, (rep, _)) in g.conjugacy_classes().iter().enumerate() {
            assert_eq!(sgn[c], int(rep.parity() as i64));
        }
        assert!(PermGroup::elementary_abelian_two(2).sign_character().is_err());
    }

    #[test]
    fn dihedral_centralizer_table() {
        // Z((12)(34)) in S4 is dihedral of order 8: dims 1,1,1,1,2.
        let g = PermGroup::symmetric(4);
        let u = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]);
        let z = g.centralizer(&u).unwrap();
        assert_eq!(z.order(), 8);
        let t = z.char_table().unwrap();
        let mut dims = t.dims.clone();
        dims.sort();
        assert_eq!(dims, vec![int(1), int(1), int(1), int(1), int(2)]);
    }

    #[test]
    fn abelian_cyclic_table_is_exact() {
        // Z((123)(45)) in S5 is cyclic of order 6; character values are
        // sixth roots of unity, not rationals.
        let g = PermGroup::symmetric(5);
        let x = Perm::from_cycles(5, &[&[0, 1, 2], &[3, 4]]);
        let z = g.centralizer(&x).unwrap();
        assert_eq!(z.order(), 6);
        let t = z.char_table().unwrap();
        assert_eq!(t.n_irreps(), 6);
        assert!(t
            .row(0)
            .iter()
            .all(|v| v.as_rat().is_some_and(|r| r.is_one())));
        assert!((0..6).any(|i| (0..6).any(|c| t.value(i, c).as_rat().is_none())));
        let inv: Vec<usize> = (0..6).map(|c| z.inner().inverse_class(c)).collect();
        assert!(t.orthogonality_holds(&inv));
    }

    #[test]
    fn dims_squared_sum_to_order() {
        for g in [
            PermGroup::symmetric(4),
            PermGroup::symmetric(5),
            PermGroup::elementary_abelian_two(3),
        ] {
            let t = g.char_table().unwrap();
            let total: Int = t.dims.iter().map(|d| d * d).sum();
            assert_eq!(total, int(g.order() as i64));
        }
    }
}
