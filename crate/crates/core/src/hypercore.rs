//! Four-vertex hypergraphs as 15-bit edge sets.
//!
//! A hyperedge is a nonempty vertex bitmask `e` in `1..=15` (vertex 1 is the
//! least significant bit). A hypergraph is the set of its hyperedges, stored as
//! a [`HypergraphCode`] whose bit `e - 1` is set when `e` is present. The
//! empty hyperedge would only contribute a global phase and is never stored.
//!
//! Every real equally weighted state on four qubits is, up to a global sign,
//! the hypergraph state of exactly one code: the sign pattern of the state is
//! the truth table of a Boolean function and the code is its algebraic normal
//! form. The two are related by the binary Möbius transform.

use std::fmt;
use std::str::FromStr;

use crate::error::HypergraphError;

pub const NUM_VERTICES: usize = 4;
/// Number of distinct hypergraph codes, `2^15`.
pub const NUM_CODES: usize = 1 << 15;

const FULL_MASK: u8 = 0b1111;

/// A vertex label in `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(u8);

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex(1), Vertex(2), Vertex(3), Vertex(4)];

    pub fn new(label: u8) -> Result<Self, HypergraphError> {
        if (1..=4).contains(&label) {
            Ok(Vertex(label))
        } else {
            Err(HypergraphError::VertexOutOfRange(label))
        }
    }

    /// The 1-based label.
    pub fn label(self) -> u8 {
        self.0
    }

    /// The 0-based qubit index.
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    pub fn bit(self) -> u8 {
        1 << (self.0 - 1)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One hyperedge: a nonempty subset of the four vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMask(u8);

impl EdgeMask {
    pub fn new(bits: u8) -> Result<Self, HypergraphError> {
        if bits == 0 || bits > FULL_MASK {
            Err(HypergraphError::InvalidEdgeMask(bits))
        } else {
            Ok(EdgeMask(bits))
        }
    }

    pub fn from_vertices(vertices: &[Vertex]) -> Result<Self, HypergraphError> {
        let bits = vertices.iter().fold(0u8, |acc, v| acc | v.bit());
        EdgeMask::new(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_loop(self) -> bool {
        self.cardinality() == 1
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 & v.bit() != 0
    }

    /// Whether every vertex of the edge is set in the basis string `mu`.
    pub fn is_subset_of(self, mu: u8) -> bool {
        self.0 & !mu == 0
    }

    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        Vertex::ALL.into_iter().filter(move |v| self.contains(*v))
    }

    fn code_bit(self) -> u16 {
        1 << (self.0 - 1)
    }
}

impl fmt::Display for EdgeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.vertices() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Truth table of `g(mu)`, bit `mu` set when the amplitude of `|mu>` is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignFunction(u16);

impl SignFunction {
    pub fn from_bits(bits: u16) -> Self {
        SignFunction(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn get(self, mu: usize) -> bool {
        self.0 >> mu & 1 == 1
    }

    /// The sign function of the globally negated state.
    pub fn negated(self) -> Self {
        SignFunction(!self.0)
    }
}

/// A vertex relabeling, stored 0-based: vertex `i + 1` maps to `images[i] + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: [u8; 4],
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation { images: [0, 1, 2, 3] };

    /// Builds a permutation from 1-based images, `labels[i]` being the image of vertex `i + 1`.
    pub fn new(labels: [u8; 4]) -> Result<Self, HypergraphError> {
        let mut seen = 0u8;
        let mut images = [0u8; 4];
        for (slot, &label) in images.iter_mut().zip(labels.iter()) {
            if !(1..=4).contains(&label) || seen & (1 << (label - 1)) != 0 {
                return Err(HypergraphError::InvalidPermutation(labels));
            }
            seen |= 1 << (label - 1);
            *slot = label - 1;
        }
        Ok(Permutation { images })
    }

    pub fn swap(a: Vertex, b: Vertex) -> Self {
        let mut images = Self::IDENTITY.images;
        images.swap(a.index(), b.index());
        Permutation { images }
    }

    /// All 24 permutations.
    pub fn all() -> Vec<Permutation> {
        (0..256u16)
            .map(|n| std::array::from_fn(|i| (n >> (2 * i) & 3) as u8))
            .filter(|images: &[u8; 4]| images.iter().fold(0u8, |seen, &x| seen | 1 << x) == 0b1111)
            .map(|images| Permutation { images })
            .collect()
    }

    pub fn image(&self, v: Vertex) -> Vertex {
        Vertex(self.images[v.index()] + 1)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        let mut images = [0u8; 4];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = self.images[first.images[i] as usize];
        }
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; 4];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Relabels a vertex bitmask.
    pub fn map_mask(&self, bits: u8) -> u8 {
        (0..4).filter(|i| bits >> i & 1 == 1).fold(0, |acc, i| acc | 1 << self.images[i])
    }
}

/// A four-vertex hypergraph, bit `e - 1` set when hyperedge `e` is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HypergraphCode(u16);

impl HypergraphCode {
    pub const EMPTY: HypergraphCode = HypergraphCode(0);

    pub fn new(code: u32) -> Result<Self, HypergraphError> {
        if (code as usize) < NUM_CODES {
            Ok(HypergraphCode(code as u16))
        } else {
            Err(HypergraphError::CodeOutOfRange(code))
        }
    }

    /// Every code in increasing order.
    pub fn all() -> impl Iterator<Item = HypergraphCode> {
        (0..NUM_CODES as u16).map(HypergraphCode)
    }

    pub fn from_edges<I: IntoIterator<Item = EdgeMask>>(edges: I) -> Self {
        HypergraphCode(edges.into_iter().fold(0, |acc, e| acc | e.code_bit()))
    }

    pub fn raw(self) -> u16 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: EdgeMask) -> bool {
        self.0 & e.code_bit() != 0
    }

    /// Symmetric difference of two edge sets.
    pub fn symmetric_difference(self, other: HypergraphCode) -> HypergraphCode {
        HypergraphCode(self.0 ^ other.0)
    }

    pub fn edges(self) -> impl Iterator<Item = EdgeMask> {
        (1..=FULL_MASK).map(EdgeMask).filter(move |e| self.contains(*e))
    }

    pub fn edge_count(self) -> u32 {
        self.0.count_ones()
    }

    pub fn has_loop(self, v: Vertex) -> bool {
        self.contains(EdgeMask(v.bit()))
    }

    pub fn is_loop_free(self) -> bool {
        Vertex::ALL.iter().all(|v| !self.has_loop(*v))
    }

    pub fn has_three_edges(self) -> bool {
        self.edges().any(|e| e.cardinality() == 3)
    }

    /// Maximum hyperedge cardinality; 0 for the edgeless hypergraph.
    pub fn rank(self) -> u32 {
        self.edges().map(EdgeMask::cardinality).max().unwrap_or(0)
    }

    /// `g(mu)` is the parity of the number of hyperedges contained in `mu`.
    pub fn signs(self) -> SignFunction {
        SignFunction(moebius16((self.0) << 1))
    }

    /// Inverse of [`HypergraphCode::signs`]; requires a nonnegative `|0000>` amplitude.
    pub fn from_signs(signs: SignFunction) -> Result<Self, HypergraphError> {
        if signs.get(0) {
            return Err(HypergraphError::NegativeReferenceAmplitude);
        }
        Ok(HypergraphCode(moebius16(signs.0) >> 1))
    }

    /// `N(v)`: every hyperedge through `v` with `v` removed. A loop on `v`
    /// would leave the empty edge, a global phase, which is dropped.
    pub fn neighborhood(self, v: Vertex) -> HypergraphCode {
        let mut out = 0u16;
        for e in self.edges().filter(|e| e.contains(v)) {
            let rest = e.0 & !v.bit();
            if rest != 0 {
                out |= EdgeMask(rest).code_bit();
            }
        }
        HypergraphCode(out)
    }

    /// Local `X_v`: `E -> N(v) Δ E`.
    pub fn apply_x(self, v: Vertex) -> HypergraphCode {
        self.symmetric_difference(self.neighborhood(v))
    }

    /// Local `Z_v`: toggles the loop on `v`.
    pub fn apply_z(self, v: Vertex) -> HypergraphCode {
        HypergraphCode(self.0 ^ EdgeMask(v.bit()).code_bit())
    }

    /// `Z^c`: toggles the loop on every vertex whose bit is set in `c`.
    pub fn hypergraph_basis(self, c: u8) -> HypergraphCode {
        Vertex::ALL.iter().filter(|v| c & v.bit() != 0).fold(self, |h, v| h.apply_z(*v))
    }

    pub fn permute(self, p: &Permutation) -> HypergraphCode {
        HypergraphCode::from_edges(self.edges().map(|e| EdgeMask(p.map_mask(e.0))))
    }

    /// Loop-free form in the same local orbit. Rank-4 hypergraphs are also
    /// cleared of 3-edges: `X_v` toggles exactly the 3-edge missing `v`.
    pub fn standardize(self) -> Result<HypergraphCode, HypergraphError> {
        const MAX_MOVES: usize = 16;
        let mut h = self;
        if h.rank() == 4 {
            let mut moves = 0;
            while let Some(v) = Vertex::ALL.into_iter().find(|v| h.contains(EdgeMask(FULL_MASK & !v.bit()))) {
                if moves == MAX_MOVES {
                    return Err(HypergraphError::StandardizeDiverged(MAX_MOVES));
                }
                h = h.apply_x(v);
                moves += 1;
            }
        }
        Ok(Vertex::ALL.into_iter().filter(|v| h.has_loop(*v)).fold(h, |h, v| h.apply_z(v)))
    }

    /// Whether the code is already in standard form (see [`HypergraphCode::standardize`]).
    pub fn is_standard(self) -> bool {
        self.is_loop_free() && !(self.rank() == 4 && self.has_three_edges())
    }
}

impl fmt::Display for HypergraphCode {
    /// Comma-separated edges, larger edges first: `1234,123,12,4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut edges: Vec<EdgeMask> = self.edges().collect();
        edges.sort_by_key(|e| (std::cmp::Reverse(e.cardinality()), e.to_string()));
        for (k, e) in edges.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for HypergraphCode {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(HypergraphCode::EMPTY);
        }
        let mut code = HypergraphCode::EMPTY;
        for token in s.split(',') {
            let token = token.trim();
            let err = |reason| HypergraphError::Parse { token: token.to_string(), reason };
            if token.is_empty() {
                return Err(err("empty edge"));
            }
            let mut bits = 0u8;
            for ch in token.chars() {
                let label = match ch.to_digit(10) {
                    Some(d @ 1..=4) => d as u8,
                    Some(_) => return Err(err("vertex outside 1-4")),
                    None => return Err(err("not a vertex digit")),
                };
                let bit = 1 << (label - 1);
                if bits & bit != 0 {
                    return Err(err("duplicate vertex in edge"));
                }
                bits |= bit;
            }
            let edge = EdgeMask(bits);
            if code.contains(edge) {
                return Err(err("duplicate edge"));
            }
            code = HypergraphCode(code.0 | edge.code_bit());
        }
        Ok(code)
    }
}

pub fn signs_from_hypergraph(h: HypergraphCode) -> SignFunction {
    h.signs()
}

pub fn hypergraph_from_signs(s: SignFunction) -> Result<HypergraphCode, HypergraphError> {
    HypergraphCode::from_signs(s)
}

/// Binary Möbius transform of a 4-variable truth table; an involution.
fn moebius16(mut f: u16) -> u16 {
    const LOW_HALVES: [u16; 4] = [0x5555, 0x3333, 0x0f0f, 0x00ff];
    for (i, mask) in LOW_HALVES.iter().enumerate() {
        f ^= (f & mask) << (1 << i);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> HypergraphCode {
        s.parse().unwrap()
    }

    fn v(i: u8) -> Vertex {
        Vertex::new(i).unwrap()
    }

    fn sign_oracle(code: HypergraphCode, mu: u8) -> bool {
        code.edges().filter(|e| e.is_subset_of(mu)).count() % 2 == 1
    }

    #[test]
    fn signs_of_small_hypergraphs() {
        assert_eq!(h("1234").signs().bits(), 1 << 0b1111);
        assert_eq!(h("").signs().bits(), 0);
        // mu_1 xor mu_1 mu_2: set at 1000,1001,1010,1011 read as (mu_1 mu_2 mu_3 mu_4)
        let g = h("1,12").signs();
        let expected: Vec<usize> = vec![0b0001, 0b0101, 0b1001, 0b1101];
        let got: Vec<usize> = (0..16).filter(|&mu| g.get(mu)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn butterfly_matches_direct_parity() {
        for code in HypergraphCode::all().step_by(7) {
            let g = code.signs();
            for mu in 0..16u8 {
                assert_eq!(g.get(mu as usize), sign_oracle(code, mu), "code {}", code.raw());
            }
        }
    }

    #[test]
    fn inverse_transform_rejects_negative_reference() {
        let err = HypergraphCode::from_signs(SignFunction::from_bits(1)).unwrap_err();
        assert_eq!(err, HypergraphError::NegativeReferenceAmplitude);
        assert_eq!(HypergraphCode::from_signs(SignFunction::from_bits(1 << 15)).unwrap(), h("1234"));
        assert_eq!(HypergraphCode::from_signs(SignFunction::from_bits(0)).unwrap(), HypergraphCode::EMPTY);
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(h("1234,123").neighborhood(v(4)), h("123"));
        assert_eq!(h("").neighborhood(v(1)), HypergraphCode::EMPTY);
        assert_eq!(h("1,12,134").neighborhood(v(1)), h("2,34"));
    }

    #[test]
    fn x_moves() {
        assert_eq!(h("1234,123").apply_x(v(4)), h("1234"));
        for i in 1..=4 {
            assert_eq!(h("").apply_x(v(i)), HypergraphCode::EMPTY);
        }
        assert_eq!(h("123").apply_x(v(4)), h("123"));
    }

    #[test]
    fn z_moves_and_basis() {
        assert_eq!(h("").apply_z(v(2)), h("2"));
        assert_eq!(h("2").apply_z(v(2)), h(""));
        assert_eq!(h("1234").apply_z(v(1)), h("1234,1"));
        assert_eq!(h("123,12").hypergraph_basis(0), h("123,12"));
        assert_eq!(h("").hypergraph_basis(0b1111), h("1,2,3,4"));
        let g = h("124,3");
        assert_eq!(g.hypergraph_basis(0b1010).hypergraph_basis(0b1010), g);
    }

    #[test]
    fn permutations() {
        let swap34 = Permutation::swap(v(3), v(4));
        assert_eq!(h("123").permute(&swap34), h("124"));
        assert_eq!(h("123,14,2").permute(&Permutation::IDENTITY), h("123,14,2"));
        let double = Permutation::new([3, 4, 1, 2]).unwrap();
        assert_eq!(h("12,34").permute(&double), h("12,34"));
        assert_eq!(Permutation::all().len(), 24);
        assert!(Permutation::new([1, 1, 2, 3]).is_err());
        assert!(Permutation::new([1, 2, 3, 5]).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(h("1234,12").rank(), 4);
        assert_eq!(h("123,12,4").rank(), 3);
        assert_eq!(h("").rank(), 0);
    }

    #[test]
    fn standard_forms() {
        assert_eq!(h("1234,123").standardize().unwrap(), h("1234"));
        assert_eq!(h("1,12").standardize().unwrap(), h("12"));
        let s = h("1234,124,13").standardize().unwrap();
        assert!(s.edges().all(|e| e.cardinality() == 4 || e.cardinality() == 2), "{s}");
        // X_3 removes the 3-edge 124 and adds 12 and 14 from N(3) = {124, 1}
        assert_eq!(h("1234,124,13").apply_x(v(3)), h("1234,13,1"));
        assert_eq!(s, h("1234,13"));
    }

    #[test]
    fn three_edge_elimination_oracle() {
        // brute force: some X-word on the rank-4 code reaches a 3-edge-free form
        for code in HypergraphCode::all().filter(|c| c.rank() == 4).step_by(13) {
            let reachable = (0..16u8).any(|word| {
                let moved = Vertex::ALL.iter().filter(|v| word & v.bit() != 0).fold(code, |c, v| c.apply_x(*v));
                !moved.has_three_edges()
            });
            assert!(reachable);
            assert!(code.standardize().unwrap().is_standard());
        }
    }

    #[test]
    fn text_format() {
        assert_eq!(h("1234,123").to_string(), "1234,123");
        assert_eq!(h(" 21 , 4,1234").to_string(), "1234,12,4");
        assert_eq!(h("").to_string(), "");
        for bad in ["125", "1,,2", "11", "12,21", "1a"] {
            assert!(bad.parse::<HypergraphCode>().is_err(), "{bad}");
        }
        match "125".parse::<HypergraphCode>() {
            Err(HypergraphError::Parse { token, .. }) => assert_eq!(token, "125"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn vertex_and_mask_bounds() {
        assert!(Vertex::new(0).is_err());
        assert!(Vertex::new(5).is_err());
        assert!(EdgeMask::new(0).is_err());
        assert!(EdgeMask::new(16).is_err());
        assert!(HypergraphCode::new(1 << 15).is_err());
    }
}
