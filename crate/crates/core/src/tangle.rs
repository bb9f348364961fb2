//! Multiloop chord diagrams and k-labeled tangles.
//!
//! Internal vertices are `0..2m`; chord `i` joins `2i` and `2i + 1`. A tangle stores its
//! directed edges as one permutation `wiring` of `0..2m + k`, read as a map from tails to
//! heads: tail index `t < 2m` is the vertex `t` and `t = 2m + i` is root `i`; head index
//! `h < 2m` is the vertex `h` and `h = 2m + i` is sink `i`. Vertexless loops are a counter.
//!
//! Isomorphism is conjugacy under the hyperoctahedral group acting on the internal
//! vertices, with every root and sink label fixed.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{cycles, is_bijection, Hyperoctahedral, Perm};

/// Target of a directed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Head {
    Vertex(usize),
    Sink(usize),
}

/// Origin of a directed edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tail {
    Vertex(usize),
    Root(usize),
}

/// A k-labeled multiloop chord tangle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tangle {
    k: usize,
    loops: usize,
    wiring: Vec<usize>,
}

/// A multiloop chord diagram: `succ(v)` is the head of the directed edge leaving `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    loops: usize,
    succ: Vec<usize>,
}

impl Tangle {
    /// Validates and wraps a raw wiring permutation of `0..2m + k`.
    pub fn new(k: usize, wiring: Vec<usize>, loops: usize) -> Result<Self> {
        if wiring.len() < k || !(wiring.len() - k).is_multiple_of(2) {
            return Err(Error::NotABijection(format!(
                "wiring of length {} cannot carry {k} labels and whole chords",
                wiring.len()
            )));
        }
        if !is_bijection(&wiring) {
            return Err(Error::NotABijection(format!("wiring {wiring:?} is not a permutation")));
        }
        Ok(Tangle { k, loops, wiring })
    }

    /// Builds a tangle from the head of each internal vertex's outgoing edge and the head
    /// of each root's outgoing edge.
    pub fn from_heads(k: usize, vertex_heads: &[Head], root_heads: &[Head], loops: usize) -> Result<Self> {
        if root_heads.len() != k {
            return Err(Error::LabelMismatch { left: k, right: root_heads.len() });
        }
        if !vertex_heads.len().is_multiple_of(2) {
            return Err(Error::NotABijection("odd number of internal vertices".into()));
        }
        let two_m = vertex_heads.len();
        let encode = |h: &Head| -> Result<usize> {
            match *h {
                Head::Vertex(v) if v < two_m => Ok(v),
                Head::Vertex(v) => Err(Error::NotABijection(format!("vertex {} does not exist", v + 1))),
                Head::Sink(i) if i < k => Ok(two_m + i),
                Head::Sink(i) => Err(Error::DanglingLabel { label: i + 1, k }),
            }
        };
        let wiring = vertex_heads.iter().chain(root_heads).map(encode).collect::<Result<Vec<_>>>()?;
        Self::new(k, wiring, loops)
    }

    /// `1_k`: k parallel edges, root i to sink i.
    pub fn unit(k: usize) -> Self {
        Tangle { k, loops: 0, wiring: (0..k).collect() }
    }

    /// A chordless tangle whose root `i` is wired straight to sink `sink_of_root[i]`.
    pub fn pure_wiring(sink_of_root: &Perm) -> Self {
        Tangle { k: sink_of_root.len(), loops: 0, wiring: sink_of_root.images().to_vec() }
    }

    /// `T_π`: edge `e_i` has its head at sink `i` and its tail at root `π(i)`.
    pub fn permutation(pi: &Perm) -> Self {
        Self::pure_wiring(&pi.inverse())
    }

    /// `P_{k,π}`: the km-tangle permuting m blocks of k consecutive labels.
    ///
    /// Edge `e_{i,j}` (block `i`, strand `j`) has head label `j + i k` and tail label
    /// `j + π(i) k` (0-based), so that it moves copies of a k-tangle inside `x^{⊔m}`.
    pub fn block_permutation(k: usize, pi: &Perm) -> Self {
        let m = pi.len();
        let mut sink_of_root = vec![0; k * m];
        for i in 0..m {
            for j in 0..k {
                sink_of_root[j + pi.apply(i) * k] = j + i * k;
            }
        }
        Tangle { k: k * m, loops: 0, wiring: sink_of_root }
    }

    /// `t^{ij}`: the k-tangle with one chord between a vertex on strand `i` and a vertex
    /// on strand `j` (0-based, `i != j`); every other strand is a plain edge.
    pub fn chord_between(k: usize, i: usize, j: usize) -> Self {
        assert!(i < k && j < k && i != j, "chord_between needs two distinct strands");
        let mut wiring = vec![0; 2 + k];
        wiring[0] = 2 + i;
        wiring[1] = 2 + j;
        for l in 0..k {
            wiring[2 + l] = 2 + l;
        }
        wiring[2 + i] = 0;
        wiring[2 + j] = 1;
        Tangle { k, loops: 0, wiring }
    }

    /// A 1-tangle whose single strand carries both ends of one chord; closing it up gives
    /// the theta diagram.
    pub fn theta_strand() -> Self {
        Tangle { k: 1, loops: 0, wiring: vec![1, 2, 0] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        (self.wiring.len() - self.k) / 2
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn wiring(&self) -> &[usize] {
        &self.wiring
    }

    pub fn with_loops(mut self, loops: usize) -> Self {
        self.loops = loops;
        self
    }

    fn decode_head(&self, h: usize) -> Head {
        let two_m = 2 * self.m();
        if h < two_m {
            Head::Vertex(h)
        } else {
            Head::Sink(h - two_m)
        }
    }

    fn decode_tail(&self, t: usize) -> Tail {
        let two_m = 2 * self.m();
        if t < two_m {
            Tail::Vertex(t)
        } else {
            Tail::Root(t - two_m)
        }
    }

    pub fn head_of_vertex(&self, v: usize) -> Head {
        self.decode_head(self.wiring[v])
    }

    pub fn head_of_root(&self, i: usize) -> Head {
        self.decode_head(self.wiring[2 * self.m() + i])
    }

    pub fn tail_of_sink(&self, i: usize) -> Tail {
        let target = 2 * self.m() + i;
        let t = self.wiring.iter().position(|&h| h == target).expect("wiring is a bijection");
        self.decode_tail(t)
    }

    pub fn tail_of_vertex(&self, v: usize) -> Tail {
        let t = self.wiring.iter().position(|&h| h == v).expect("wiring is a bijection");
        self.decode_tail(t)
    }

    /// Views a 0-tangle as a chord diagram.
    pub fn to_diagram(&self) -> Result<ChordDiagram> {
        if self.k != 0 {
            return Err(Error::LabelMismatch { left: self.k, right: 0 });
        }
        Ok(ChordDiagram { loops: self.loops, succ: self.wiring.clone() })
    }

    /// Renames internal vertices by `h`, which must preserve the chord pairs.
    pub fn relabel(&self, h: &Perm) -> Tangle {
        let two_m = 2 * self.m();
        assert_eq!(h.len(), two_m);
        Tangle { k: self.k, loops: self.loops, wiring: conjugate(&self.wiring, h.images(), two_m) }
    }

    /// Lexicographically least wiring over all chord-preserving relabelings.
    ///
    /// Exhaustive over `2^m m!` relabelings.
    pub fn canonical_form(&self) -> Tangle {
        Tangle { k: self.k, loops: self.loops, wiring: canonical_wiring(&self.wiring, self.m()) }
    }

    pub fn is_isomorphic(&self, other: &Tangle) -> bool {
        self.k == other.k
            && self.loops == other.loops
            && self.wiring.len() == other.wiring.len()
            && self.canonical_form() == other.canonical_form()
    }

    /// `S·T`: sink i of S is glued to root i of T and sink i of T to root i of S.
    ///
    /// Glued points are smoothed away; strands that close up without meeting a vertex
    /// become vertexless loops.
    pub fn join(&self, other: &Tangle) -> Result<ChordDiagram> {
        if self.k != other.k {
            return Err(Error::LabelMismatch { left: self.k, right: other.k });
        }
        let k = self.k;
        let sides = [self, other];
        let two_m = [2 * self.m(), 2 * other.m()];
        let offset = [0, two_m[0]];
        let mut root_seen = [vec![false; k], vec![false; k]];

        // Follows a head on `side` through glued boundary points to a vertex of the result.
        let resolve = |mut side: usize, mut h: usize, root_seen: &mut [Vec<bool>; 2]| -> usize {
            loop {
                if h < two_m[side] {
                    return offset[side] + h;
                }
                let label = h - two_m[side];
                side = 1 - side;
                root_seen[side][label] = true;
                h = sides[side].wiring[two_m[side] + label];
            }
        };

        let mut succ = vec![0; two_m[0] + two_m[1]];
        for side in 0..2 {
            for v in 0..two_m[side] {
                succ[offset[side] + v] = resolve(side, sides[side].wiring[v], &mut root_seen);
            }
        }

        let mut closed = 0;
        for start in 0..k {
            if root_seen[0][start] {
                continue;
            }
            closed += 1;
            let (mut side, mut label) = (0, start);
            while !root_seen[side][label] {
                root_seen[side][label] = true;
                let h = sides[side].wiring[two_m[side] + label];
                debug_assert!(h >= two_m[side], "unvisited root must feed a sink");
                label = h - two_m[side];
                side = 1 - side;
            }
        }

        Ok(ChordDiagram { loops: self.loops + other.loops + closed, succ })
    }

    /// `ST`: sink i of S is glued to root i of T; roots come from S and sinks from T.
    pub fn compose(&self, other: &Tangle) -> Result<Tangle> {
        if self.k != other.k {
            return Err(Error::LabelMismatch { left: self.k, right: other.k });
        }
        let k = self.k;
        let (ms, mt) = (2 * self.m(), 2 * other.m());
        let total = ms + mt;
        let through_other = |h: usize| -> usize {
            if h < mt {
                ms + h
            } else {
                total + (h - mt)
            }
        };
        let through_self = |h: usize| -> usize {
            if h < ms {
                h
            } else {
                through_other(other.wiring[mt + (h - ms)])
            }
        };
        let mut wiring = vec![0; total + k];
        for v in 0..ms {
            wiring[v] = through_self(self.wiring[v]);
        }
        for v in 0..mt {
            wiring[ms + v] = through_other(other.wiring[v]);
        }
        for i in 0..k {
            wiring[total + i] = through_self(self.wiring[ms + i]);
        }
        Ok(Tangle { k, loops: self.loops + other.loops, wiring })
    }

    /// `S ⊔ T`: disjoint union, with `self.k()` added to every label of `other`.
    pub fn shift_union(&self, other: &Tangle) -> Tangle {
        let (ms, mt) = (2 * self.m(), 2 * other.m());
        let total = ms + mt;
        let k = self.k + other.k;
        let map_s = |x: usize| if x < ms { x } else { total + (x - ms) };
        let map_t = |x: usize| if x < mt { ms + x } else { total + self.k + (x - mt) };
        let mut wiring = vec![0; total + k];
        for (t, &h) in self.wiring.iter().enumerate() {
            wiring[map_s(t)] = map_s(h);
        }
        for (t, &h) in other.wiring.iter().enumerate() {
            wiring[map_t(t)] = map_t(h);
        }
        Tangle { k, loops: self.loops + other.loops, wiring }
    }
}

impl ChordDiagram {
    pub fn new(succ: Vec<usize>, loops: usize) -> Result<Self> {
        let t = Tangle::new(0, succ, loops)?;
        Ok(ChordDiagram { loops: t.loops, succ: t.wiring })
    }

    pub fn from_one_based(succ: &[usize], loops: usize) -> Result<Self> {
        let succ = succ
            .iter()
            .map(|&x| x.checked_sub(1).ok_or_else(|| Error::NotABijection("vertex 0 in 1-based input".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(succ, loops)
    }

    pub fn empty() -> Self {
        ChordDiagram { loops: 0, succ: Vec::new() }
    }

    /// The vertexless directed loop.
    pub fn vertexless_loop() -> Self {
        ChordDiagram { loops: 1, succ: Vec::new() }
    }

    /// One Wilson loop through both ends of one chord.
    pub fn theta() -> Self {
        ChordDiagram { loops: 0, succ: vec![1, 0] }
    }

    /// Two Wilson loops, one through each end of a single chord.
    pub fn dumbbell() -> Self {
        ChordDiagram { loops: 0, succ: vec![0, 1] }
    }

    pub fn m(&self) -> usize {
        self.succ.len() / 2
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn succ(&self) -> &[usize] {
        &self.succ
    }

    pub fn to_tangle(&self) -> Tangle {
        Tangle { k: 0, loops: self.loops, wiring: self.succ.clone() }
    }

    /// Wilson loops that carry vertices, each listed in traversal order.
    pub fn wilson_loops(&self) -> Vec<Vec<usize>> {
        cycles(&self.succ)
    }

    /// Number of connected components, vertexless loops included.
    pub fn component_count(&self) -> usize {
        let n = self.succ.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        };
        for v in 0..n {
            union(v, self.succ[v]);
            union(v, v ^ 1);
        }
        let roots = (0..n).filter(|&v| find(&mut parent, v) == v).count();
        roots + self.loops
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn disjoint_union(&self, other: &ChordDiagram) -> ChordDiagram {
        let shift = self.succ.len();
        let mut succ = self.succ.clone();
        succ.extend(other.succ.iter().map(|&x| x + shift));
        ChordDiagram { loops: self.loops + other.loops, succ }
    }

    pub fn relabel(&self, h: &Perm) -> ChordDiagram {
        assert_eq!(h.len(), self.succ.len());
        ChordDiagram { loops: self.loops, succ: conjugate(&self.succ, h.images(), self.succ.len()) }
    }

    pub fn canonical_form(&self) -> ChordDiagram {
        ChordDiagram { loops: self.loops, succ: canonical_wiring(&self.succ, self.m()) }
    }

    pub fn is_isomorphic(&self, other: &ChordDiagram) -> bool {
        self.to_tangle().is_isomorphic(&other.to_tangle())
    }
}

impl From<ChordDiagram> for Tangle {
    fn from(d: ChordDiagram) -> Tangle {
        Tangle { k: 0, loops: d.loops, wiring: d.succ }
    }
}

impl fmt::Debug for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tangle(k={}, m={}, loops={}, wiring={:?})", self.k, self.m(), self.loops, self.wiring)
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram(m={}, loops={}, succ={:?})", self.m(), self.loops, self.succ)
    }
}

/// `ĥ ∘ w ∘ ĥ⁻¹` where `ĥ` is `h` on `0..two_m` and the identity on boundary indices.
pub(crate) fn conjugate(wiring: &[usize], h: &[usize], two_m: usize) -> Vec<usize> {
    let lift = |x: usize| if x < two_m { h[x] } else { x };
    let mut out = vec![0; wiring.len()];
    for (t, &head) in wiring.iter().enumerate() {
        out[lift(t)] = lift(head);
    }
    out
}

/// True when no chord-preserving relabeling gives a lexicographically smaller wiring.
pub(crate) fn is_canonical_wiring(wiring: &[usize], m: usize) -> bool {
    let two_m = 2 * m;
    let mut inv = vec![0; two_m];
    for h in Hyperoctahedral::new(m).elements() {
        let h = h.images();
        for (i, &x) in h.iter().enumerate() {
            inv[x] = i;
        }
        for x in 0..wiring.len() {
            let pre = if x < two_m { inv[x] } else { x };
            let y = wiring[pre];
            let v = if y < two_m { h[y] } else { y };
            match v.cmp(&wiring[x]) {
                Ordering::Less => return false,
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    true
}

fn canonical_wiring(wiring: &[usize], m: usize) -> Vec<usize> {
    let two_m = 2 * m;
    let len = wiring.len();
    let mut best: Vec<usize> = wiring.to_vec();
    let mut cand = vec![0; len];
    let mut inv = vec![0; two_m];
    for h in Hyperoctahedral::new(m).elements() {
        let h = h.images();
        for (i, &x) in h.iter().enumerate() {
            inv[x] = i;
        }
        let mut order = Ordering::Equal;
        for x in 0..len {
            let pre = if x < two_m { inv[x] } else { x };
            let y = wiring[pre];
            let v = if y < two_m { h[y] } else { y };
            cand[x] = v;
            if order == Ordering::Equal {
                order = v.cmp(&best[x]);
                if order == Ordering::Greater {
                    break;
                }
            }
        }
        if order == Ordering::Less {
            best.copy_from_slice(&cand);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Single Wilson loop meeting chords in the order 1, 2, 1, 2.
    fn crossed() -> ChordDiagram {
        ChordDiagram::new(vec![2, 3, 1, 0], 0).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(ChordDiagram::new(vec![], 1).is_ok());
        assert!(ChordDiagram::from_one_based(&[2, 1], 0).is_ok());
        assert!(matches!(ChordDiagram::from_one_based(&[2, 2], 0), Err(Error::NotABijection(_))));
        assert!(matches!(
            Tangle::from_heads(1, &[], &[Head::Sink(1)], 0),
            Err(Error::DanglingLabel { label: 2, k: 1 })
        ));
        assert!(Tangle::new(1, vec![0, 1], 0).is_err());
    }

    #[test]
    fn canonical_form_of_theta_is_constant() {
        let theta = ChordDiagram::theta();
        for h in Hyperoctahedral::new(1).elements() {
            assert_eq!(theta.relabel(&h).canonical_form(), theta.canonical_form());
        }
    }

    #[test]
    fn crossed_diagram_swapped_chords_share_canonical_form() {
        let d = crossed();
        let swap = Perm::from_images(vec![2, 3, 0, 1]).unwrap();
        let e = d.relabel(&swap);
        assert_ne!(d, e);
        // Oracle: minimum over all 8 relabelings of each encoding, computed directly.
        let brute = |x: &ChordDiagram| {
            Hyperoctahedral::new(2).elements().map(|h| x.relabel(&h).succ).min().unwrap()
        };
        assert_eq!(brute(&d), brute(&e));
        assert_eq!(d.canonical_form().succ, brute(&d));
        assert_eq!(e.canonical_form(), d.canonical_form());
    }

    #[test]
    fn isomorphism_examples() {
        let theta = ChordDiagram::theta();
        let flip = Perm::from_images(vec![1, 0]).unwrap();
        assert!(theta.is_isomorphic(&theta.relabel(&flip)));
        assert!(!theta.is_isomorphic(&ChordDiagram::dumbbell()));
        assert_eq!(theta.wilson_loops().len(), 1);
        assert_eq!(ChordDiagram::dumbbell().wilson_loops().len(), 2);
        assert!(!ChordDiagram::vertexless_loop().is_isomorphic(&ChordDiagram::empty()));
    }

    #[test]
    fn join_of_units_is_loops() {
        for k in 0..5 {
            let d = Tangle::unit(k).join(&Tangle::unit(k)).unwrap();
            assert_eq!((d.m(), d.loops()), (0, k));
        }
    }

    #[test]
    fn join_of_diagrams_is_disjoint_union() {
        let c = ChordDiagram::theta().to_tangle();
        let d = crossed().to_tangle().with_loops(1);
        let j = c.join(&d).unwrap();
        assert_eq!(j, ChordDiagram::theta().disjoint_union(&crossed().to_tangle().with_loops(1).to_diagram().unwrap()));
        assert!(c.join(&Tangle::unit(1)).is_err());
    }

    #[test]
    fn join_of_t12_with_itself() {
        let t12 = Tangle::chord_between(3, 0, 1);
        let d = t12.join(&t12).unwrap();
        assert_eq!(d.m(), 2);
        assert_eq!(d.wilson_loops().len(), 2);
        assert_eq!(d.loops(), 1);
        // Each Wilson loop passes through one vertex of each copy.
        for cycle in d.wilson_loops() {
            assert_eq!(cycle.len(), 2);
            assert!(cycle.iter().any(|&v| v < 2) && cycle.iter().any(|&v| v >= 2));
        }
    }

    #[test]
    fn compose_t12_t13_orders_chords_along_strand_one() {
        let t12 = Tangle::chord_between(3, 0, 1);
        let t13 = Tangle::chord_between(3, 0, 2);
        let st = t12.compose(&t13).unwrap();
        assert_eq!((st.k(), st.m()), (3, 2));
        // root 1 -> vertex 0 (chord to strand 2) -> vertex 2 (chord to strand 3) -> sink 1
        assert_eq!(st.head_of_root(0), Head::Vertex(0));
        assert_eq!(st.head_of_vertex(0), Head::Vertex(2));
        assert_eq!(st.head_of_vertex(2), Head::Sink(0));
        assert_eq!(st.head_of_root(1), Head::Vertex(1));
        assert_eq!(st.head_of_vertex(1), Head::Sink(1));
        assert_eq!(st.head_of_root(2), Head::Vertex(3));
        assert_eq!(st.head_of_vertex(3), Head::Sink(2));
        assert_eq!(st.tail_of_sink(0), Tail::Vertex(2));
    }

    #[test]
    fn unit_laws_and_label_mismatch() {
        let t = Tangle::chord_between(3, 1, 2);
        assert_eq!(Tangle::unit(3).compose(&t).unwrap(), t);
        assert_eq!(t.compose(&Tangle::unit(3)).unwrap(), t);
        assert!(matches!(t.compose(&Tangle::unit(2)), Err(Error::LabelMismatch { .. })));
    }

    #[test]
    fn shift_union_examples() {
        let o = ChordDiagram::vertexless_loop().to_tangle();
        let u = o.shift_union(&o);
        assert_eq!((u.k(), u.m(), u.loops()), (0, 0, 2));
        assert_eq!(Tangle::unit(1).shift_union(&Tangle::unit(1)), Tangle::unit(2));

        let theta1 = Tangle::from_heads(1, &[Head::Vertex(1), Head::Sink(0)], &[Head::Vertex(0)], 0).unwrap();
        let two = theta1.shift_union(&theta1);
        assert_eq!((two.k(), two.m()), (2, 2));
        assert_eq!(two.head_of_root(0), Head::Vertex(0));
        assert_eq!(two.head_of_vertex(0), Head::Vertex(1));
        assert_eq!(two.head_of_vertex(1), Head::Sink(0));
        assert_eq!(two.head_of_root(1), Head::Vertex(2));
        assert_eq!(two.head_of_vertex(2), Head::Vertex(3));
        assert_eq!(two.head_of_vertex(3), Head::Sink(1));
    }

    #[test]
    fn permutation_tangles() {
        for m in 0..4 {
            assert_eq!(Tangle::block_permutation(1, &Perm::identity(m)), Tangle::unit(m));
        }
        let s = Perm::transposition(2, 0, 1);
        let t = Tangle::permutation(&s);
        assert_eq!(t.compose(&t).unwrap(), Tangle::unit(2));
        // join with the unit closes one loop per cycle
        let pi = Perm::from_images(vec![1, 0, 2]).unwrap();
        let d = Tangle::permutation(&pi).join(&Tangle::unit(3)).unwrap();
        assert_eq!((d.m(), d.loops()), (0, pi.orbit_count()));
    }

    #[test]
    fn connectivity() {
        assert!(ChordDiagram::vertexless_loop().is_connected());
        assert!(!ChordDiagram::empty().is_connected());
        assert!(ChordDiagram::theta().is_connected());
        assert!(ChordDiagram::dumbbell().is_connected());
        assert!(!ChordDiagram::theta().disjoint_union(&ChordDiagram::theta()).is_connected());
        assert!(!ChordDiagram::theta().to_tangle().with_loops(1).to_diagram().unwrap().is_connected());
    }
}
