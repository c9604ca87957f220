//! Small permutation groups, induced actions and orbit decompositions.
//!
//! Groups are stored by generators. Actions record, for each generator, the
//! permutation it induces on a list of labelled points; orbits come from a
//! union-find pass over those images. All groups in this crate are tiny, so
//! full enumeration is available but always capped.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image array is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("generator degree {got} differs from group degree {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("index {value} out of range ({constraint})")]
    BadIndex { value: usize, constraint: String },
    #[error("point family is not invariant under generator {generator}")]
    NotInvariant { generator: usize },
    #[error("action has {points} points but {rows} generator rows for {generators} generators")]
    ActionShape {
        points: usize,
        rows: usize,
        generators: usize,
    },
}

/// A bijection of `0..k`; `images[i]` is the image of point `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(PermError::NotBijection(k));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(k: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut p = Permutation::identity(k);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..k).collect();
            for (n, &a) in cycle.iter().enumerate() {
                let b = cycle[(n + 1) % cycle.len()];
                if a >= k || b >= k {
                    return Err(PermError::NotBijection(k));
                }
                images[a] = b;
            }
            p = p.then(&Permutation::new(images)?);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }
}

#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceLock<Vec<Permutation>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(e) = self.elements.get() {
            let _ = elements.set(e.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements,
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                got: g.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("no generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Breadth-first closure of the generators, in insertion order starting
    /// from the identity. Successful enumerations are cached.
    pub fn enumerate(&self, cap: usize) -> Result<&[Permutation], PermError> {
        if let Some(e) = self.elements.get() {
            return if e.len() > cap {
                Err(PermError::CapExceeded { cap })
            } else {
                Ok(e)
            };
        }
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    if order.len() == cap {
                        return Err(PermError::CapExceeded { cap });
                    }
                    order.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(self.elements.get_or_init(|| order))
    }

    pub fn order(&self, cap: usize) -> Result<usize, PermError> {
        self.enumerate(cap).map(<[_]>::len)
    }
}

pub fn enumerate_group(g: &PermGroup, cap: usize) -> Result<Vec<Permutation>, PermError> {
    g.enumerate(cap).map(<[_]>::to_vec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardGroup {
    Symmetric(usize),
    /// `(S_2)^3 ⋊ S_3` on the six points `(p, q)`, `p in 1..=3`, `q in 1..=2`,
    /// numbered `2(p-1) + (q-1)`.
    Wreath32,
}

pub fn standard_group(kind: StandardGroup) -> PermGroup {
    match kind {
        StandardGroup::Symmetric(d) => {
            assert!(d >= 1, "symmetric group needs d >= 1");
            let mut gens = Vec::new();
            if d >= 2 {
                gens.push(Permutation::from_cycles(d, &[&[0, 1]]).unwrap());
                let cycle: Vec<usize> = (0..d).collect();
                gens.push(Permutation::from_cycles(d, &[&cycle]).unwrap());
            }
            PermGroup::new(d, gens).unwrap()
        }
        StandardGroup::Wreath32 => {
            let gens = vec![
                Permutation::from_cycles(6, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(6, &[&[2, 3]]).unwrap(),
                Permutation::from_cycles(6, &[&[4, 5]]).unwrap(),
                // block transposition 1 <-> 2
                Permutation::from_cycles(6, &[&[0, 2], &[1, 3]]).unwrap(),
                // block 3-cycle 1 -> 2 -> 3
                Permutation::from_cycles(6, &[&[0, 2, 4], &[1, 3, 5]]).unwrap(),
            ];
            PermGroup::new(6, gens).unwrap()
        }
    }
}

/// A permutation action of a group's generators on labelled points.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: PermGroup,
    points: Vec<String>,
    generator_images: Vec<Permutation>,
}

impl GroupAction {
    pub fn new(group: PermGroup, points: Vec<String>, generator_images: Vec<Vec<usize>>) -> Result<Self, PermError> {
        if generator_images.len() != group.generators().len() {
            return Err(PermError::ActionShape {
                points: points.len(),
                rows: generator_images.len(),
                generators: group.generators().len(),
            });
        }
        let mut rows = Vec::with_capacity(generator_images.len());
        for row in generator_images {
            if row.len() != points.len() {
                return Err(PermError::NotBijection(points.len()));
            }
            let p = Permutation::new(row)?;
            debug_assert!(p.then(&p.inverse()).is_identity());
            rows.push(p);
        }
        Ok(GroupAction {
            group,
            points,
            generator_images: rows,
        })
    }

    /// The action on a family of subsets of the group's points, which must be
    /// mapped into itself by every generator.
    pub fn on_subsets(group: PermGroup, family: Vec<BTreeSet<usize>>, labels: Vec<String>) -> Result<Self, PermError> {
        assert_eq!(family.len(), labels.len());
        let index: HashMap<&BTreeSet<usize>, usize> = family.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut rows = Vec::new();
        for (gi, g) in group.generators().iter().enumerate() {
            let row = family
                .iter()
                .map(|s| {
                    let image: BTreeSet<usize> = s.iter().map(|&x| g.apply(x)).collect();
                    index
                        .get(&image)
                        .copied()
                        .ok_or(PermError::NotInvariant { generator: gi })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        GroupAction::new(group, labels, rows)
    }

    /// The natural action on `0..degree`.
    pub fn natural(group: PermGroup) -> Self {
        let points = (0..group.degree()).map(|i| i.to_string()).collect();
        let rows = group.generators().iter().map(|g| g.images().to_vec()).collect();
        GroupAction::new(group, points, rows).expect("generators act on their own points")
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Same action with the generators listed in a different order.
    pub fn with_generator_order(&self, order: &[usize]) -> Result<Self, PermError> {
        let gens = order.iter().map(|&i| self.group.generators()[i].clone()).collect();
        let rows = order
            .iter()
            .map(|&i| self.generator_images[i].images().to_vec())
            .collect();
        GroupAction::new(PermGroup::new(self.group.degree(), gens)?, self.points.clone(), rows)
    }
}

fn subset_label(s: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// All `i`-element subsets of `0..d` in lexicographic order.
pub fn combinations(d: usize, i: usize) -> Vec<BTreeSet<usize>> {
    fn rec(start: usize, d: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if left == 0 {
            out.push(cur.iter().copied().collect());
            return;
        }
        for x in start..=d - left {
            cur.push(x);
            rec(x + 1, d, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i <= d {
        rec(0, d, i, &mut Vec::new(), &mut out);
    }
    out
}

/// `S_d` acting on the `i`-element subsets of a `d`-point fiber.
pub fn induced_subset_action(d: usize, i: usize) -> Result<GroupAction, PermError> {
    if i < 1 || i > d {
        return Err(PermError::BadIndex {
            value: i,
            constraint: format!("1 <= i <= d = {d}"),
        });
    }
    let family = combinations(d, i);
    let labels = family.iter().map(subset_label).collect();
    GroupAction::on_subsets(standard_group(StandardGroup::Symmetric(d)), family, labels)
}

/// The wreath product acting on star patterns `(q1, q2, q3)` over `{1, 2, *}`
/// with exactly `wildcards` stars. A pattern is identified with the set of
/// hyperplane indices `(p, q)` it uses: slot `q` picks `(p, q)`, `*` picks
/// both `(p, 1)` and `(p, 2)`.
pub fn cube_strata_action(wildcards: usize) -> Result<GroupAction, PermError> {
    if wildcards > 2 {
        return Err(PermError::BadIndex {
            value: wildcards,
            constraint: "wildcards in {0, 1, 2}".into(),
        });
    }
    const SYMBOLS: [char; 3] = ['1', '2', '*'];
    let mut family = Vec::new();
    let mut labels = Vec::new();
    for a in SYMBOLS {
        for b in SYMBOLS {
            for c in SYMBOLS {
                let slots = [a, b, c];
                if slots.iter().filter(|&&s| s == '*').count() != wildcards {
                    continue;
                }
                let mut set = BTreeSet::new();
                for (p, s) in slots.iter().enumerate() {
                    match s {
                        '1' => {
                            set.insert(2 * p);
                        }
                        '2' => {
                            set.insert(2 * p + 1);
                        }
                        _ => {
                            set.insert(2 * p);
                            set.insert(2 * p + 1);
                        }
                    }
                }
                family.push(set);
                labels.push(format!("({a},{b},{c})"));
            }
        }
    }
    GroupAction::on_subsets(standard_group(StandardGroup::Wreath32), family, labels)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    /// Disjoint orbits, each sorted, ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitDecomposition {
    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// Orbits as sorted label lists, for reports.
    pub fn labelled(&self, action: &GroupAction) -> Vec<Vec<String>> {
        self.orbits
            .iter()
            .map(|o| {
                let mut l: Vec<String> = o.iter().map(|&i| action.points()[i].clone()).collect();
                l.sort();
                l
            })
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so results do not depend on merge order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

pub fn orbit_decomposition(a: &GroupAction) -> OrbitDecomposition {
    let n = a.len();
    let mut uf = UnionFind::new(n);
    for g in a.generator_images() {
        for i in 0..n {
            uf.union(i, g.apply(i));
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        let r = uf.find(i);
        by_root[r].push(i);
    }
    OrbitDecomposition {
        orbits: by_root.into_iter().filter(|o| !o.is_empty()).collect(),
    }
}
