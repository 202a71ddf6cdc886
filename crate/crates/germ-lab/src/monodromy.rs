//! Local fundamental-group presentations and symmetric-group monodromy.
//!
//! The resolution graph of `x^k1 − y^k2` yields a presentation of the
//! local fundamental group of the curve complement on one generator per
//! vertex ([`local_pi1_presentation`]); eliminating the chain interior
//! leaves three generators with the boundary continuants as exponents
//! ([`reduced_presentation`]). For covers of degree `d >= 3` the center
//! generator must die, so a cover's monodromy is a triple of
//! permutations ([`MonodromyDatum`])
//!
//! ```text
//! a · t · b = id,   t a transposition,   ord(a) | k_lt,   ord(b) | k_rt,
//! ```
//!
//! generating all of `S_d`. [`enumerate_monodromy`] lists the triples up
//! to simultaneous conjugation; [`smoothness_test`] decides whether a
//! triple's cover is a germ of a *smooth* surface by the upstairs
//! self-intersection ledger; [`classify`] puts it together into the
//! family classification of germs per exponent pair.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::arith::coprime;
use crate::blowup;
use crate::chains::{continuant, hj_expand, CenteredChain, WeightedChain};
use crate::error::{Error, Result};

/// Default exhaustive-enumeration cap on the cover degree.
pub const DEFAULT_DEGREE_CAP: usize = 8;

// ---------------------------------------------------------------------
// permutations

/// Permutation of `{0, …, d−1}` as an image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Perm {
    img: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Perm {
    type Error = Error;
    fn try_from(img: Vec<u8>) -> Result<Self> {
        Perm::from_images(img)
    }
}

impl From<Perm> for Vec<u8> {
    fn from(p: Perm) -> Self {
        p.img
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm { img: (0..d as u8).collect() }
    }

    pub fn from_images(img: Vec<u8>) -> Result<Self> {
        let d = img.len();
        let mut seen = vec![false; d];
        for &x in &img {
            if (x as usize) >= d || seen[x as usize] {
                return Err(Error::invalid("not a permutation table"));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { img })
    }

    /// Canonical permutation with the given cycle lengths: consecutive
    /// blocks, longest first.
    pub fn from_cycle_lengths(d: usize, lengths: &[usize]) -> Result<Self> {
        if lengths.iter().sum::<usize>() != d {
            return Err(Error::invalid("cycle lengths do not sum to the degree"));
        }
        let mut img = vec![0u8; d];
        let mut start = 0usize;
        for &len in lengths {
            if len == 0 {
                return Err(Error::invalid("zero cycle length"));
            }
            for i in 0..len {
                img[start + i] = (start + (i + 1) % len) as u8;
            }
            start += len;
        }
        Ok(Perm { img })
    }

    pub fn transposition(d: usize, i: usize, j: usize) -> Result<Self> {
        if i >= d || j >= d || i == j {
            return Err(Error::invalid("bad transposition support"));
        }
        let mut img: Vec<u8> = (0..d as u8).collect();
        img.swap(i, j);
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { img: other.img.iter().map(|&x| self.img[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.degree()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u8;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    pub fn is_transposition(&self) -> bool {
        self.img.iter().enumerate().filter(|&(i, &x)| i as u8 != x).count() == 2
    }

    /// Cycle decomposition; fixed points appear as length-1 cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths, longest first; fixed points count.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> i64 {
        self.cycle_lengths().iter().fold(1i64, |acc, &l| lcm(acc, l as i64))
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut img = vec![0u8; self.degree()];
        for i in 0..self.degree() {
            img[g.apply(i)] = g.apply(self.apply(i)) as u8;
        }
        Perm { img }
    }

    /// One-based cycle notation, fixed points omitted; identity prints
    /// as `id`.
    pub fn cycle_notation(&self) -> String {
        let mut s = String::new();
        for cyc in self.cycles() {
            if cyc.len() < 2 {
                continue;
            }
            s.push('(');
            for (i, &x) in cyc.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&(x + 1).to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("id");
        }
        s
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / crate::arith::gcd(a, b) * b
}

/// Calls `f` with every permutation of degree `d` (Heap's algorithm).
pub fn for_each_permutation(d: usize, mut f: impl FnMut(&Perm)) {
    let mut img: Vec<u8> = (0..d as u8).collect();
    let mut c = vec![0usize; d];
    f(&Perm { img: img.clone() });
    let mut i = 1;
    while i < d {
        if c[i] < i {
            if i % 2 == 0 {
                img.swap(0, i);
            } else {
                img.swap(c[i], i);
            }
            f(&Perm { img: img.clone() });
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------
// generation test

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns true when the sets were actually merged.
    fn unite(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn is_transitive(gens: &[&Perm], d: usize) -> bool {
    let mut uf = UnionFind::new(d);
    for g in gens {
        for i in 0..d {
            uf.unite(i, g.apply(i));
        }
    }
    let root = uf.find(0);
    (0..d).all(|i| uf.find(i) == root)
}

/// Size of the minimal block (for the group generated by `gens`)
/// containing `{0, beta}`: the smallest congruence class through both.
fn minimal_block_size(gens: &[&Perm], d: usize, beta: usize) -> usize {
    let mut uf = UnionFind::new(d);
    uf.unite(0, beta);
    let mut queue = vec![(0usize, beta)];
    while let Some((u, v)) = queue.pop() {
        for g in gens {
            let (a, b) = (g.apply(u), g.apply(v));
            if uf.unite(a, b) {
                queue.push((a, b));
            }
        }
    }
    let root = uf.find(0);
    (0..d).filter(|&i| uf.find(i) == root).count()
}

fn is_primitive(gens: &[&Perm], d: usize) -> bool {
    (1..d).all(|beta| minimal_block_size(gens, d, beta) == d)
}

/// Whether `⟨g1, g2⟩ = S_d` for a transposition `g2`.
///
/// Equivalent to transitive + primitive: an imprimitive or intransitive
/// group is proper, and a primitive group containing a transposition is
/// the full symmetric group. Cross-checked against brute-force subgroup
/// closure in the tests.
pub fn generates_symmetric_with_transposition(g1: &Perm, g2: &Perm) -> Result<bool> {
    if g1.degree() != g2.degree() {
        return Err(Error::invalid("degree mismatch"));
    }
    if !g2.is_transposition() {
        return Err(Error::invalid("second element must be a transposition"));
    }
    let d = g1.degree();
    let gens = [g1, g2];
    Ok(is_transitive(&gens, d) && is_primitive(&gens, d))
}

/// What a (permutation, transposition) pair looks like against the
/// two-cycle generation criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmVerdict {
    pub generates: bool,
    /// Number of cycles of the first element, fixed points included.
    pub cycle_count: usize,
    /// Cycle lengths of `g1 ∘ g2`, longest first.
    pub product_cycle_lengths: Vec<usize>,
    /// Cycle lengths of `g2 ∘ g1`, longest first.
    pub reverse_product_cycle_lengths: Vec<usize>,
}

/// Generation verdict plus the product cycle data: when `⟨g1,g2⟩ = S_d`,
/// `g1` has at most two cycles; with two cycles `g1·g2` is a `d`-cycle,
/// with one cycle `g2·g1` splits into exactly two cycles.
pub fn symm_classify(g1: &Perm, g2: &Perm) -> Result<SymmVerdict> {
    let generates = generates_symmetric_with_transposition(g1, g2)?;
    Ok(SymmVerdict {
        generates,
        cycle_count: g1.cycles().len(),
        product_cycle_lengths: g1.compose(g2).cycle_lengths(),
        reverse_product_cycle_lengths: g2.compose(g1).cycle_lengths(),
    })
}

// ---------------------------------------------------------------------
// local fundamental group data

/// Boundary data of a resolved exponent pair: the two cyclic-quotient
/// types `(k_lt, q_lt)`, `(k_rt, q_rt)` flanking the center, and the
/// degree bound `μ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalPi1Data {
    pub k_lt: i64,
    pub q_lt: i64,
    pub k_rt: i64,
    pub q_rt: i64,
    pub degree_bound: i64,
}

impl LocalPi1Data {
    /// Reads the data off the resolution of `x^k1 − y^k2`.
    pub fn from_pair(k1: i64, k2: i64) -> Result<Self> {
        let r = blowup::resolve(k1, k2)?;
        let s = r.sbar;
        Ok(LocalPi1Data {
            k_lt: s.d_lt0,
            q_lt: s.d_lt1,
            k_rt: s.d_rt0,
            q_rt: s.d_rt1,
            degree_bound: k1.min(k2) + 1,
        })
    }
}

/// One relation of the vertex presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `[x_i, x_j] = 1`
    Commutator(usize, usize),
    /// `x_center = x_left · x_0 · x_right` (weight-1 vertex with the
    /// branch loop attached).
    Center { center: usize, left: Option<usize>, right: Option<usize> },
    /// `x_left · x_vertex^{-weight} · x_right = 1`
    Weight { vertex: usize, weight: i64, left: Option<usize>, right: Option<usize> },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: &Option<usize>| v.map(|i| format!("x{i}")).unwrap_or_default();
        match self {
            Relation::Commutator(i, j) => write!(f, "[x{i},x{j}] = 1"),
            Relation::Center { center, left, right } => {
                write!(f, "x{center} = {}x0{}", opt(left), opt(right))
            }
            Relation::Weight { vertex, weight, left, right } => {
                write!(f, "{}x{vertex}^-{weight}{} = 1", opt(left), opt(right))
            }
        }
    }
}

/// Vertex presentation of the local fundamental group of the curve
/// complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    /// `x0` is the branch loop; `x1..=xn` follow the chain order.
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    /// One-based chain position of the center vertex.
    pub center: usize,
    pub weights: Vec<i64>,
}

/// Presentation on one generator per exceptional component plus the
/// branch loop: adjacent generators commute, the center vertex carries
/// the branch loop, every other vertex contributes its weight relation.
pub fn local_pi1_presentation(k1: i64, k2: i64) -> Result<Presentation> {
    let r = blowup::resolve(k1, k2)?;
    let weights = r.graph.chain.weights();
    let n = weights.len();
    let n0 = r.graph.branch_vertex_at + 1; // one-based
    let generators = (0..=n).map(|i| format!("x{i}")).collect();
    let mut relations = Vec::new();
    for i in 1..n {
        relations.push(Relation::Commutator(i, i + 1));
    }
    relations.push(Relation::Commutator(0, n0));
    let side = |i: usize| if (1..=n).contains(&i) { Some(i) } else { None };
    relations.push(Relation::Center { center: n0, left: side(n0 - 1), right: side(n0 + 1) });
    for v in 1..=n {
        if v != n0 {
            relations.push(Relation::Weight {
                vertex: v,
                weight: weights[v - 1],
                left: side(v - 1),
                right: side(v + 1),
            });
        }
    }
    Ok(Presentation { generators, relations, center: n0, weights })
}

/// Three-generator reduction: the center element is central and the two
/// boundary generators obey power relations with the boundary
/// continuants as exponents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedPresentation {
    pub k_lt: i64,
    pub q_lt: i64,
    pub k_rt: i64,
    pub q_rt: i64,
    /// Rendered relations on generators `a` (left boundary), `t` (branch
    /// loop), `b` (right boundary), with `z = a·t·b` central.
    pub relations: Vec<String>,
}

pub fn reduced_presentation(k1: i64, k2: i64) -> Result<ReducedPresentation> {
    let d = LocalPi1Data::from_pair(k1, k2)?;
    let relations = vec![
        "z := a·t·b is central".to_string(),
        format!("z^-{} · a^{} = 1", d.q_lt, d.k_lt),
        format!("z^-{} · b^{} = 1", d.q_rt, d.k_rt),
        format!("at z = 1 this becomes a^{} = 1, b^{} = 1", d.k_lt, d.k_rt),
    ];
    Ok(ReducedPresentation {
        k_lt: d.k_lt,
        q_lt: d.q_lt,
        k_rt: d.k_rt,
        q_rt: d.q_rt,
        relations,
    })
}

// ---------------------------------------------------------------------
// monodromy data

/// A monodromy triple `(a, t, b)` with `a·t·b = id` and `t` a
/// transposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDatum", into = "RawDatum")]
pub struct MonodromyDatum {
    pub a: Perm,
    pub t: Perm,
    pub b: Perm,
}

#[derive(Serialize, Deserialize)]
struct RawDatum {
    a: Perm,
    t: Perm,
    b: Perm,
}

impl TryFrom<RawDatum> for MonodromyDatum {
    type Error = Error;
    fn try_from(r: RawDatum) -> Result<Self> {
        MonodromyDatum::new(r.a, r.t, r.b)
    }
}

impl From<MonodromyDatum> for RawDatum {
    fn from(d: MonodromyDatum) -> Self {
        RawDatum { a: d.a, t: d.t, b: d.b }
    }
}

impl fmt::Display for MonodromyDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a = {}, t = {}, b = {}", self.a, self.t, self.b)
    }
}

impl MonodromyDatum {
    pub fn new(a: Perm, t: Perm, b: Perm) -> Result<Self> {
        if a.degree() != t.degree() || t.degree() != b.degree() {
            return Err(Error::invalid("degree mismatch in monodromy triple"));
        }
        if !t.is_transposition() {
            return Err(Error::invalid("middle element must be a transposition"));
        }
        if !a.compose(&t).compose(&b).is_identity() {
            return Err(Error::invalid("a·t·b is not the identity"));
        }
        Ok(MonodromyDatum { a, t, b })
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    /// Lexicographically minimal simultaneous conjugate; exact canonical
    /// form for the degrees this crate enumerates.
    pub fn canonical(&self) -> MonodromyDatum {
        let mut best: Option<(Vec<u8>, MonodromyDatum)> = None;
        for_each_permutation(self.degree(), |g| {
            let cand = MonodromyDatum {
                a: self.a.conjugate_by(g),
                t: self.t.conjugate_by(g),
                b: self.b.conjugate_by(g),
            };
            let key: Vec<u8> = cand
                .a
                .img
                .iter()
                .chain(cand.t.img.iter())
                .chain(cand.b.img.iter())
                .copied()
                .collect();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, cand));
            }
        });
        best.expect("degree >= 1").1
    }
}

/// Integer partitions of `d`, parts in decreasing order.
fn partitions(d: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Exhaustively enumerates admissible monodromy triples of degree `d`
/// up to simultaneous conjugation, under the default degree cap.
///
/// Admissible: `a·t·b = id`, `t` a transposition, `ord(a) | k_lt`,
/// `ord(b) | k_rt`, and `⟨a, t, b⟩ = S_d`. Degrees below 3 are rejected
/// (degree 2 is the smooth-branch double cover, handled by the
/// classifier), degrees above the cap are refused rather than silently
/// truncated.
pub fn enumerate_monodromy(d: usize, k_lt: i64, k_rt: i64) -> Result<Vec<MonodromyDatum>> {
    enumerate_monodromy_capped(d, k_lt, k_rt, DEFAULT_DEGREE_CAP)
}

/// [`enumerate_monodromy`] with an explicit cap.
pub fn enumerate_monodromy_capped(
    d: usize,
    k_lt: i64,
    k_rt: i64,
    cap: usize,
) -> Result<Vec<MonodromyDatum>> {
    if d < 3 {
        return Err(Error::invalid("enumeration needs degree >= 3"));
    }
    if d > cap {
        return Err(Error::DegreeCap { degree: d, cap });
    }
    if k_lt < 1 || k_rt < 1 {
        return Err(Error::invalid("orders must be positive"));
    }
    let mut classes: BTreeSet<MonodromyDatum> = BTreeSet::new();
    // every conjugacy class of triples has a representative whose `a` is
    // in canonical cycle form, so one `a` per cycle type is exhaustive
    for parts in partitions(d) {
        let a = Perm::from_cycle_lengths(d, &parts)?;
        if k_lt % a.order() != 0 {
            continue;
        }
        for i in 0..d {
            for j in i + 1..d {
                let t = Perm::transposition(d, i, j)?;
                let b = a.compose(&t).inverse();
                if k_rt % b.order() != 0 {
                    continue;
                }
                if !generates_symmetric_with_transposition(&a, &t)? {
                    continue;
                }
                let datum = MonodromyDatum { a: a.clone(), t, b };
                classes.insert(datum.canonical());
            }
        }
    }
    Ok(classes.into_iter().collect())
}

// ---------------------------------------------------------------------
// smoothness ledger

/// Which boundary quotient a preimage point sits over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// One preimage point over a boundary quotient singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpstairsPoint {
    pub side: Side,
    /// Local degree of the cover at the point (the cycle length).
    pub cycle_len: i64,
    /// Upstairs quotient order `k_side / cycle_len`; 1 means smooth.
    pub k: i64,
    /// Upstairs quotient type parameter `q_side mod k` (0 when smooth).
    pub q: i64,
    /// Blowup count `(q_side − q) / k` the point contributes to the
    /// center self-intersection.
    pub m: i64,
}

/// The numeric smoothness criterion evaluated on upstairs data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpstairsLedger {
    pub degree: i64,
    pub points: Vec<UpstairsPoint>,
    /// `−degree + Σ m`; must be −1 on a smooth cover.
    pub center_self_intersection: i64,
    /// Continuant of the reassembled center chain (the at-most-two
    /// singular points' quotient chains around the center); `None` when
    /// more than two points are singular, which already fails.
    pub chain_determinant: Option<i64>,
    pub smooth: bool,
}

/// Evaluates the ledger from raw side data: `(k, q, cycle lengths)` per
/// side. Cycle lengths must divide `k`; a singular upstairs point with
/// `q` sharing a factor with its `k` is inconsistent data and rejected.
pub fn upstairs_ledger(
    degree: i64,
    left: (i64, i64, &[i64]),
    right: (i64, i64, &[i64]),
) -> Result<UpstairsLedger> {
    let mut points = Vec::new();
    for (side, (k_side, q_side, lens)) in
        [(Side::Left, left), (Side::Right, right)]
    {
        if lens.iter().sum::<i64>() != degree {
            return Err(Error::invalid("cycle lengths do not sum to the degree"));
        }
        for &l in lens {
            if l < 1 || k_side % l != 0 {
                return Err(Error::invalid(format!(
                    "cycle length {l} does not divide the boundary order {k_side}"
                )));
            }
            let k = k_side / l;
            let q = if k == 1 { 0 } else { q_side % k };
            if k > 1 && q == 0 {
                return Err(Error::invalid(format!(
                    "boundary parameter {q_side} degenerates mod {k}"
                )));
            }
            points.push(UpstairsPoint { side, cycle_len: l, k, q, m: (q_side - q) / k });
        }
    }
    let center_self_intersection = -degree + points.iter().map(|p| p.m).sum::<i64>();
    let singular: Vec<&UpstairsPoint> = points.iter().filter(|p| p.k > 1).collect();
    let chain_determinant = if singular.len() > 2 {
        None
    } else {
        let side_chain = |p: Option<&&UpstairsPoint>| -> Result<WeightedChain> {
            match p {
                None => Ok(WeightedChain::default()),
                Some(p) => hj_expand(p.k, p.q),
            }
        };
        let chain = CenteredChain::new(
            side_chain(singular.first())?.reversed(),
            -center_self_intersection,
            side_chain(singular.get(1))?,
        );
        Some(continuant(&chain.weights())?)
    };
    let smooth = center_self_intersection == -1 && chain_determinant == Some(1);
    Ok(UpstairsLedger { degree, points, center_self_intersection, chain_determinant, smooth })
}

/// Ledger of a monodromy triple against the boundary data of a pair.
pub fn datum_ledger(datum: &MonodromyDatum, data: &LocalPi1Data) -> Result<UpstairsLedger> {
    let d = datum.degree() as i64;
    let left: Vec<i64> = datum.a.cycle_lengths().iter().map(|&l| l as i64).collect();
    let right: Vec<i64> = datum.b.cycle_lengths().iter().map(|&l| l as i64).collect();
    upstairs_ledger(d, (data.k_lt, data.q_lt, &left), (data.k_rt, data.q_rt, &right))
}

/// Whether the cover defined by the triple is a germ of a smooth
/// surface: center self-intersection −1 and reassembled chain
/// continuant 1.
pub fn smoothness_test(datum: &MonodromyDatum, data: &LocalPi1Data) -> Result<bool> {
    Ok(datum_ledger(datum, data)?.smooth)
}

/// Admissible triples of degree `d` that pass the smoothness ledger.
pub fn smooth_classes(
    data: &LocalPi1Data,
    d: usize,
    cap: usize,
) -> Result<Vec<MonodromyDatum>> {
    let mut out = Vec::new();
    for datum in enumerate_monodromy_capped(d, data.k_lt, data.k_rt, cap)? {
        if smoothness_test(&datum, data)? {
            out.push(datum);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// subcase tags

/// Shape tag of an admissible triple: cycle counts per side and how many
/// cycles sit over a genuinely singular upstairs point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubcaseTag {
    pub left_cycles: usize,
    pub right_cycles: usize,
    pub left_nontrivial: usize,
    pub right_nontrivial: usize,
}

impl fmt::Display for SubcaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})_{{{}_{}}}",
            self.left_cycles, self.right_cycles, self.left_nontrivial, self.right_nontrivial
        )
    }
}

/// Computes the tag; the triple must be admissible (cycle counts summing
/// to three).
pub fn subcase_tag(datum: &MonodromyDatum, data: &LocalPi1Data) -> Result<SubcaseTag> {
    let lt = datum.a.cycle_lengths();
    let rt = datum.b.cycle_lengths();
    if lt.len() + rt.len() != 3 {
        return Err(Error::invalid(format!(
            "triple has {}+{} cycles; admissible data have 3",
            lt.len(),
            rt.len()
        )));
    }
    let nontrivial = |k_side: i64, lens: &[usize]| -> Result<usize> {
        let mut n = 0;
        for &l in lens {
            if k_side % (l as i64) != 0 {
                return Err(Error::invalid("cycle length does not divide the order"));
            }
            if k_side / (l as i64) > 1 {
                n += 1;
            }
        }
        Ok(n)
    };
    Ok(SubcaseTag {
        left_cycles: lt.len(),
        right_cycles: rt.len(),
        left_nontrivial: nontrivial(data.k_lt, &lt)?,
        right_nontrivial: nontrivial(data.k_rt, &rt)?,
    })
}

/// The nine tag shapes that never occur on admissible smooth data.
pub fn excluded_tags() -> Vec<SubcaseTag> {
    let tag = |lc, rc, ln, rn| SubcaseTag {
        left_cycles: lc,
        right_cycles: rc,
        left_nontrivial: ln,
        right_nontrivial: rn,
    };
    vec![
        tag(2, 1, 2, 1),
        tag(1, 2, 1, 2),
        tag(2, 1, 0, 0),
        tag(1, 2, 0, 0),
        tag(2, 1, 1, 1),
        tag(2, 1, 0, 1),
        tag(2, 1, 1, 0),
        tag(1, 2, 1, 0),
        tag(1, 2, 0, 2),
    ]
}

// ---------------------------------------------------------------------
// the germ classifier

/// Families of irreducible germs per branch exponent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// Branch `x^(a·b) − y^(a+b)`, coprime `a > b >= 2`; degree `a+b`.
    O,
    /// Branch `x^(a·(b+1)) − y^b`, coprime `a, b >= 2`; degree `b+1`.
    D,
    /// Branch `x^(k+1) − y^k`, `k >= 2`; degree `k+1`.
    N,
    /// Branch `{2,1}` (smooth); the unique double cover, degree 2.
    Double,
    /// No germ for this exponent pair.
    None,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::O => "O",
            Family::D => "D",
            Family::N => "N",
            Family::Double => "DOUBLE",
            Family::None => "NONE",
        };
        write!(f, "{s}")
    }
}

/// Classification of the germs branched at one exponent pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermClass {
    pub k1: i64,
    pub k2: i64,
    pub family: Family,
    /// Forced cover degree of the family; `None` for family `None`.
    pub degree: Option<i64>,
    /// Branch multiplicity `min(k1, k2)`; the degree bound is `mu + 1`.
    pub mu: i64,
    pub class_count: u32,
    /// Whether the count was confirmed by exhaustive enumeration (false
    /// above the degree cap, where only the formula layer answers).
    pub cross_checked: bool,
    pub witness: Option<MonodromyDatum>,
    pub subcase: Option<SubcaseTag>,
}

/// Formula layer: every family matching an exponent pair, with its
/// forced degree. Order: O, D, N, Double.
pub fn family_matches(k1: i64, k2: i64) -> Result<Vec<(Family, i64)>> {
    if !(k1 >= k2 && k2 >= 1) || !coprime(k1, k2) {
        return Err(Error::invalid(format!("need coprime k1 >= k2 >= 1, got ({k1},{k2})")));
    }
    let mut out = Vec::new();
    // O: k1 = a·b, k2 = a+b with coprime a > b >= 2
    let disc = k2 * k2 - 4 * k1;
    if disc > 0 {
        let s = (disc as f64).sqrt() as i64;
        for cand in [s - 1, s, s + 1] {
            if cand > 0 && cand * cand == disc {
                let (a, b) = ((k2 + cand) / 2, (k2 - cand) / 2);
                if (k2 + cand) % 2 == 0 && b >= 2 && coprime(a, b) && a * b == k1 {
                    out.push((Family::O, k2));
                }
                break;
            }
        }
    }
    // D: k1 = a·(k2+1) with coprime a >= 2, k2 >= 2
    if k2 >= 2 && k1 % (k2 + 1) == 0 {
        let a = k1 / (k2 + 1);
        if a >= 2 && coprime(a, k2) {
            out.push((Family::D, k2 + 1));
        }
    }
    // N: consecutive pair, k2 >= 2
    if k1 == k2 + 1 && k2 >= 2 {
        out.push((Family::N, k1));
    }
    // Double: the smooth branch pair {2,1}
    if (k1, k2) == (2, 1) {
        out.push((Family::Double, 2));
    }
    Ok(out)
}

/// Degree-2 rule: a double cover is branched in a smooth germ, whose
/// type is the pair {2,1}; so exactly one degree-2 germ exists for
/// {2,1} and none for any other pair.
///
/// For pairs of multiplicity 1 this rule is the whole story: their
/// branch germ is smooth, so any double cover over it is the {2,1}
/// germ after a coordinate change, and the exponent-pair ledger (which
/// sees only the fixed presentation) must not be consulted. For
/// multiplicity >= 2 the ledger applies and independently confirms the
/// rule; see [`degree_two_smooth_classes`].
pub fn degree_two_count(k1: i64, k2: i64) -> u32 {
    u32::from((k1, k2) == (2, 1))
}

/// Degree-2 triples passing the smoothness ledger, for boundary data of
/// a pair with multiplicity at least 2 (where the ledger is a valid
/// criterion). In `S_2` the only triples with `a·t·b = id` are
/// `(t, t, id)` and `(id, t, t)`.
pub fn degree_two_smooth_classes(data: &LocalPi1Data) -> Result<Vec<MonodromyDatum>> {
    if data.k_lt.min(data.k_rt) < 2 {
        return Err(Error::invalid(
            "the degree-2 ledger needs both boundary orders at least 2",
        ));
    }
    let t = Perm::transposition(2, 0, 1)?;
    let id = Perm::identity(2);
    let mut out = Vec::new();
    for (a, b) in [(t.clone(), id.clone()), (id, t.clone())] {
        let datum = MonodromyDatum::new(a, t.clone(), b)?;
        let orders_ok =
            data.k_lt % datum.a.order() == 0 && data.k_rt % datum.b.order() == 0;
        if orders_ok && smoothness_test(&datum, data)? {
            out.push(datum);
        }
    }
    Ok(out)
}

/// Classifies an exponent pair with the default degree cap.
pub fn classify(k1: i64, k2: i64) -> Result<GermClass> {
    classify_capped(k1, k2, DEFAULT_DEGREE_CAP)
}

/// Classifies with an explicit exhaustive cap.
pub fn classify_capped(k1: i64, k2: i64, cap: usize) -> Result<GermClass> {
    let matches = family_matches(k1, k2)?;
    let mu = k2.min(k1);
    match matches.first() {
        None => {
            // no family: confirm zero classes at every admissible degree
            let data = LocalPi1Data::from_pair(k1, k2)?;
            let mut cross_checked = true;
            for d in 2..=(mu + 1) {
                if d == 2 {
                    debug_assert_eq!(degree_two_count(k1, k2), 0);
                    continue;
                }
                if d as usize > cap {
                    cross_checked = false;
                    break;
                }
                let classes = smooth_classes(&data, d as usize, cap)?;
                if !classes.is_empty() {
                    return Err(Error::inconsistent(format!(
                        "({k1},{k2}) has no family but {} classes at degree {d}",
                        classes.len()
                    )));
                }
            }
            Ok(GermClass {
                k1,
                k2,
                family: Family::None,
                degree: None,
                mu,
                class_count: 0,
                cross_checked,
                witness: None,
                subcase: None,
            })
        }
        Some(&(family, degree)) => {
            if family == Family::Double {
                let t = Perm::transposition(2, 0, 1)?;
                let witness =
                    MonodromyDatum::new(t.clone(), t, Perm::identity(2))?;
                return Ok(GermClass {
                    k1,
                    k2,
                    family,
                    degree: Some(2),
                    mu,
                    class_count: 1,
                    cross_checked: true,
                    witness: Some(witness),
                    subcase: None,
                });
            }
            if degree as usize > cap {
                return Ok(GermClass {
                    k1,
                    k2,
                    family,
                    degree: Some(degree),
                    mu,
                    class_count: 1,
                    cross_checked: false,
                    witness: None,
                    subcase: None,
                });
            }
            let data = LocalPi1Data::from_pair(k1, k2)?;
            let classes = smooth_classes(&data, degree as usize, cap)?;
            let witness = classes.first().cloned();
            let subcase = match &witness {
                Some(w) => Some(subcase_tag(w, &data)?),
                None => None,
            };
            Ok(GermClass {
                k1,
                k2,
                family,
                degree: Some(degree),
                mu,
                class_count: classes.len() as u32,
                cross_checked: true,
                witness,
                subcase,
            })
        }
    }
}

/// One [`GermClass`] per matching family (families can overlap: a pair
/// can carry germs of two different degrees).
pub fn classify_all(k1: i64, k2: i64) -> Result<Vec<GermClass>> {
    classify_all_capped(k1, k2, DEFAULT_DEGREE_CAP)
}

pub fn classify_all_capped(k1: i64, k2: i64, cap: usize) -> Result<Vec<GermClass>> {
    let matches = family_matches(k1, k2)?;
    if matches.is_empty() {
        return Ok(vec![classify_capped(k1, k2, cap)?]);
    }
    let mu = k2.min(k1);
    let mut out = Vec::new();
    for (family, degree) in matches {
        if family == Family::Double {
            out.push(classify_capped(k1, k2, cap)?);
            continue;
        }
        if degree as usize > cap {
            out.push(GermClass {
                k1,
                k2,
                family,
                degree: Some(degree),
                mu,
                class_count: 1,
                cross_checked: false,
                witness: None,
                subcase: None,
            });
            continue;
        }
        let data = LocalPi1Data::from_pair(k1, k2)?;
        let classes = smooth_classes(&data, degree as usize, cap)?;
        let witness = classes.first().cloned();
        let subcase = match &witness {
            Some(w) => Some(subcase_tag(w, &data)?),
            None => None,
        };
        out.push(GermClass {
            k1,
            k2,
            family,
            degree: Some(degree),
            mu,
            class_count: classes.len() as u32,
            cross_checked: true,
            witness,
            subcase,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(img: &[u8]) -> Perm {
        Perm::from_images(img.to_vec()).unwrap()
    }

    #[test]
    fn perm_basics() {
        let p = perm(&[1, 2, 0, 4, 3]); // (1 2 3)(4 5) in one-based cycles
        assert_eq!(p.cycle_lengths(), vec![3, 2]);
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_notation(), "(1 2 3)(4 5)");
        assert!(p.compose(&p.inverse()).is_identity());
        let t = Perm::transposition(5, 2, 3).unwrap();
        assert!(t.is_transposition());
    }

    #[test]
    fn canonical_cycle_forms() {
        let p = Perm::from_cycle_lengths(5, &[3, 2]).unwrap();
        assert_eq!(p, perm(&[1, 2, 0, 4, 3]));
        let q = Perm::from_cycle_lengths(4, &[1, 1, 1, 1]).unwrap();
        assert!(q.is_identity());
    }

    // Brute-force subgroup closure, the oracle for the generation test.
    fn closure_size(gens: &[&Perm], d: usize) -> usize {
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = vec![Perm::identity(d)];
        seen.insert(Perm::identity(d));
        while let Some(p) = queue.pop() {
            for g in gens {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    queue.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn generation_matches_closure_up_to_degree_5() {
        for d in 2..=5usize {
            let fact: usize = (1..=d).product();
            let mut trans = Vec::new();
            for i in 0..d {
                for j in i + 1..d {
                    trans.push(Perm::transposition(d, i, j).unwrap());
                }
            }
            for_each_permutation(d, |g1| {
                for t in &trans {
                    let fast = generates_symmetric_with_transposition(g1, t).unwrap();
                    let slow = closure_size(&[g1, t], d) == fact;
                    assert_eq!(fast, slow, "d={d} g1={g1} t={t}");
                }
            });
        }
    }

    #[test]
    fn generation_matches_closure_samples_degree_6_and_7() {
        // deterministic sample: canonical representatives of every cycle
        // type against every transposition
        for d in [6usize, 7] {
            let fact: usize = (1..=d).product();
            for parts in partitions(d) {
                let g1 = Perm::from_cycle_lengths(d, &parts).unwrap();
                for i in 0..d {
                    for j in i + 1..d {
                        let t = Perm::transposition(d, i, j).unwrap();
                        let fast = generates_symmetric_with_transposition(&g1, &t).unwrap();
                        let slow = closure_size(&[&g1, &t], d) == fact;
                        assert_eq!(fast, slow, "d={d} g1={g1} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn symm_classify_examples() {
        // (1 2 3)(4 5) with (3 4): generates, product is a 5-cycle
        let g1 = perm(&[1, 2, 0, 4, 3]);
        let g2 = Perm::transposition(5, 2, 3).unwrap();
        let v = symm_classify(&g1, &g2).unwrap();
        assert!(v.generates);
        assert_eq!(v.cycle_count, 2);
        assert_eq!(v.product_cycle_lengths, vec![5]);

        // 5-cycle with a transposition inside its support: one cycle,
        // reverse product splits in two
        let g1 = Perm::from_cycle_lengths(5, &[5]).unwrap();
        let g2 = Perm::transposition(5, 0, 2).unwrap();
        let v = symm_classify(&g1, &g2).unwrap();
        assert_eq!(v.cycle_count, 1);
        assert_eq!(v.reverse_product_cycle_lengths.len(), 2);

        // (1 2)(3 4)(5 6) with (2 3): three cycles, no generation
        let g1 = perm(&[1, 0, 3, 2, 5, 4]);
        let g2 = Perm::transposition(6, 1, 2).unwrap();
        let v = symm_classify(&g1, &g2).unwrap();
        assert!(!v.generates);
        assert_eq!(v.cycle_count, 3);
    }

    #[test]
    fn presentation_shapes() {
        let p = local_pi1_presentation(2, 1).unwrap();
        assert_eq!(p.generators.len(), 3);
        assert!(p
            .relations
            .iter()
            .any(|r| matches!(r, Relation::Weight { vertex: 1, weight: 2, .. })));

        let p = local_pi1_presentation(3, 2).unwrap();
        assert_eq!(p.generators.len(), 4);
        assert!(p.relations.iter().any(|r| matches!(r, Relation::Center { .. })));

        // counts: n commutators + 1 center + n−1 weight relations
        for (k1, k2) in [(2, 1), (3, 2), (5, 3), (9, 2)] {
            let p = local_pi1_presentation(k1, k2).unwrap();
            let n = p.weights.len();
            assert_eq!(p.relations.len(), 2 * n);
        }
    }

    #[test]
    fn reduced_presentation_examples() {
        let r = reduced_presentation(5, 3).unwrap();
        assert_eq!((r.k_lt, r.q_lt, r.k_rt, r.q_rt), (5, 3, 3, 1));
        let r = reduced_presentation(6, 5).unwrap();
        assert_eq!((r.k_lt, r.q_lt, r.k_rt, r.q_rt), (6, 1, 5, 4));
        let r = reduced_presentation(9, 2).unwrap();
        assert_eq!((r.k_lt, r.q_lt, r.k_rt, r.q_rt), (9, 4, 2, 1));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_monodromy(3, 3, 2).unwrap().len(), 1);
        assert_eq!(enumerate_monodromy(5, 6, 5).unwrap().len(), 1);
        assert_eq!(enumerate_monodromy(3, 5, 3).unwrap().len(), 0);
        assert!(matches!(
            enumerate_monodromy(9, 3, 2),
            Err(Error::DegreeCap { degree: 9, cap: 8 })
        ));
        assert!(enumerate_monodromy(2, 3, 2).is_err());
    }

    #[test]
    fn enumerated_class_shapes() {
        let classes = enumerate_monodromy(5, 6, 5).unwrap();
        let w = &classes[0];
        assert_eq!(w.a.cycle_lengths(), vec![3, 2]);
        assert_eq!(w.b.cycle_lengths(), vec![5]);
        // admissibility invariants
        assert!(w.a.compose(&w.t).compose(&w.b).is_identity());
        assert_eq!(6 % w.a.order(), 0);
        assert_eq!(5 % w.b.order(), 0);
    }

    #[test]
    fn smoothness_examples() {
        // product-family witness on {6,5} at degree 5
        let data = LocalPi1Data::from_pair(6, 5).unwrap();
        assert_eq!((data.k_lt, data.q_lt, data.k_rt, data.q_rt), (6, 1, 5, 4));
        let classes = enumerate_monodromy(5, 6, 5).unwrap();
        let ledger = datum_ledger(&classes[0], &data).unwrap();
        assert_eq!(ledger.center_self_intersection, -1);
        assert_eq!(ledger.chain_determinant, Some(1));
        assert!(ledger.smooth);

        // extension-family data {9,2} at degree 3: m over the big side
        // equals k_rt − q_rt = 1
        let data = LocalPi1Data::from_pair(9, 2).unwrap();
        let classes = enumerate_monodromy(3, 9, 2).unwrap();
        let smooth: Vec<_> = classes
            .iter()
            .filter(|c| smoothness_test(c, &data).unwrap())
            .collect();
        assert_eq!(smooth.len(), 1);
        let ledger = datum_ledger(smooth[0], &data).unwrap();
        let m_left: Vec<i64> = ledger
            .points
            .iter()
            .filter(|p| p.side == Side::Left && p.k > 1)
            .map(|p| p.m)
            .collect();
        assert_eq!(m_left, vec![1]);

        // synthetic failing shape: right quotient not of the (k, k−1)
        // kind makes the chain determinant exceed 1
        let ledger = upstairs_ledger(5, (5, 3, &[5]), (4, 1, &[1, 4])).unwrap();
        assert_eq!(ledger.center_self_intersection, -1);
        assert_eq!(ledger.chain_determinant, Some(3));
        assert!(!ledger.smooth);

        // admissible non-smooth datum on {8,5} at degree 5: passes the
        // center count but the chain determinant is 2
        let data = LocalPi1Data::from_pair(8, 5).unwrap();
        let a = Perm::from_cycle_lengths(5, &[4, 1]).unwrap();
        let t = Perm::transposition(5, 3, 4).unwrap();
        let b = a.compose(&t).inverse();
        let datum = MonodromyDatum::new(a, t, b).unwrap();
        let ledger = datum_ledger(&datum, &data).unwrap();
        assert_eq!(ledger.center_self_intersection, -1);
        assert_eq!(ledger.chain_determinant, Some(2));
        assert!(!ledger.smooth);

        // inconsistent side data is rejected, not silently evaluated
        assert!(upstairs_ledger(5, (7, 3, &[5]), (4, 1, &[1, 4])).is_err()); // 5 does not divide 7
        assert!(upstairs_ledger(5, (10, 4, &[5]), (4, 1, &[1, 4])).is_err()); // 4 mod 2 degenerates
        assert!(upstairs_ledger(5, (5, 3, &[4]), (4, 1, &[1, 4])).is_err()); // lengths do not sum
    }

    #[test]
    fn subcase_tags_of_the_three_families() {
        let cases = [
            ((6, 5), 5, "(2,1)_{2_0}"),
            ((9, 2), 3, "(1,2)_{1_1}"),
            ((3, 2), 3, "(1,2)_{0_1}"),
        ];
        for ((k1, k2), d, expected) in cases {
            let data = LocalPi1Data::from_pair(k1, k2).unwrap();
            let smooth = smooth_classes(&data, d, 8).unwrap();
            assert_eq!(smooth.len(), 1, "({k1},{k2})@{d}");
            let tag = subcase_tag(&smooth[0], &data).unwrap();
            assert_eq!(tag.to_string(), expected);
        }
    }

    #[test]
    fn no_double_cover_over_a_singular_branch() {
        // the degree-2 ledger confirms the smooth-branch rule wherever
        // it applies
        for (k1, k2) in [(3, 2), (5, 4), (8, 3), (7, 5), (9, 2)] {
            let data = LocalPi1Data::from_pair(k1, k2).unwrap();
            assert_eq!(degree_two_smooth_classes(&data).unwrap(), vec![], "({k1},{k2})");
        }
        // multiplicity-1 boundary data are outside the ledger's domain
        let data = LocalPi1Data::from_pair(2, 1).unwrap();
        assert!(degree_two_smooth_classes(&data).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify(3, 2).unwrap();
        assert_eq!(c.family, Family::N);
        assert_eq!(c.degree, Some(3));
        assert_eq!(c.class_count, 1);

        let c = classify(6, 5).unwrap();
        assert_eq!(c.family, Family::O);
        assert_eq!(c.degree, Some(5));
        assert_eq!(c.class_count, 1);

        let c = classify(5, 3).unwrap();
        assert_eq!(c.family, Family::None);
        assert_eq!(c.class_count, 0);
        assert!(c.cross_checked);

        let c = classify(2, 1).unwrap();
        assert_eq!(c.family, Family::Double);
        assert_eq!(c.degree, Some(2));

        let c = classify(9, 2).unwrap();
        assert_eq!(c.family, Family::D);
        assert_eq!(c.degree, Some(3));
        assert_eq!(c.class_count, 1);
    }

    #[test]
    fn classify_all_sees_the_overlap() {
        let all = classify_all(6, 5).unwrap();
        let families: Vec<(Family, Option<i64>)> =
            all.iter().map(|c| (c.family, c.degree)).collect();
        assert_eq!(families, vec![(Family::O, Some(5)), (Family::N, Some(6))]);
        assert!(all.iter().all(|c| c.class_count == 1));
    }

    #[test]
    fn datum_json_round_trip() {
        let classes = enumerate_monodromy(5, 6, 5).unwrap();
        let s = serde_json::to_string(&classes[0]).unwrap();
        assert_eq!(serde_json::from_str::<MonodromyDatum>(&s).unwrap(), classes[0]);
        // invalid triple must not deserialize
        let bad = r#"{"a":[0,1],"t":[0,1],"b":[0,1]}"#;
        assert!(serde_json::from_str::<MonodromyDatum>(bad).is_err());
    }
}
