//! Orbits of all `2^15` codes under local X/Z moves and vertex permutations.

use std::collections::VecDeque;
use std::fs;
use std::path::Path;

use crate::error::OrbitError;
use crate::hypercore::{HypergraphCode, Permutation, Vertex, NUM_CODES};

/// `|{X words}| * |{Z words}| * |S_4|`; every orbit size divides it.
pub const GROUP_ORDER: u32 = 16 * 16 * 24;

const CACHE_MAGIC: &[u8; 8] = b"HG4ORBIT";
const CACHE_VERSION: u32 = 1;
const CACHE_HEADER_LEN: usize = 16;

/// Images of `code` under the generating moves: four X, four Z and the
/// adjacent transpositions, which generate `S_4`.
pub fn generator_images(code: HypergraphCode) -> impl Iterator<Item = HypergraphCode> {
    let swaps = [(1, 2), (2, 3), (3, 4)].map(|(a, b)| Permutation::swap(Vertex::ALL[a - 1], Vertex::ALL[b - 1]));
    Vertex::ALL
        .into_iter()
        .flat_map(move |v| [code.apply_x(v), code.apply_z(v)])
        .chain(swaps.into_iter().map(move |p| code.permute(&p)))
}

/// Every move of the full generating set, including all 24 permutations.
pub fn all_moves(code: HypergraphCode) -> Vec<HypergraphCode> {
    let mut out: Vec<HypergraphCode> = Vertex::ALL.iter().flat_map(|&v| [code.apply_x(v), code.apply_z(v)]).collect();
    out.extend(Permutation::all().iter().map(|p| code.permute(p)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitRecord {
    pub id: usize,
    /// Smallest code in the orbit.
    pub rep: HypergraphCode,
    pub size: u32,
    pub rank: u32,
    /// Number of standard hypergraphs in the orbit: `size / 256` at rank 4,
    /// `size / 128` at rank 3.
    pub m: Option<u32>,
}

impl OrbitRecord {
    fn new(id: usize, rep: HypergraphCode, size: u32, rank: u32) -> Self {
        let per_standard = match rank {
            4 => Some(256),
            3 => Some(128),
            _ => None,
        };
        let m = per_standard.filter(|d| size.is_multiple_of(*d)).map(|d| size / d);
        OrbitRecord { id, rep, size, rank, m }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    class_id: Vec<u16>,
    reps: Vec<HypergraphCode>,
    sizes: Vec<u32>,
    rep_rank: Vec<u32>,
}

/// Breadth-first closure from each unvisited code in increasing order, so
/// orbit ids increase with their smallest member.
pub fn enumerate_orbits() -> OrbitTable {
    const UNSEEN: u16 = u16::MAX;
    let mut class_id = vec![UNSEEN; NUM_CODES];
    let mut next_id = 0u16;
    let mut queue = VecDeque::new();
    for start in HypergraphCode::all() {
        if class_id[start.raw() as usize] != UNSEEN {
            continue;
        }
        class_id[start.raw() as usize] = next_id;
        queue.push_back(start);
        while let Some(code) = queue.pop_front() {
            for image in generator_images(code) {
                let slot = &mut class_id[image.raw() as usize];
                if *slot == UNSEEN {
                    *slot = next_id;
                    queue.push_back(image);
                }
            }
        }
        next_id += 1;
    }
    OrbitTable::from_ids_unchecked(class_id)
}

impl OrbitTable {
    fn from_ids_unchecked(class_id: Vec<u16>) -> Self {
        let count = class_id.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut reps = vec![None; count];
        let mut sizes = vec![0u32; count];
        for (code, &id) in class_id.iter().enumerate() {
            let id = id as usize;
            sizes[id] += 1;
            reps[id].get_or_insert(HypergraphCode::new(code as u32).expect("code in range"));
        }
        let reps: Vec<HypergraphCode> = reps.into_iter().map(|r| r.unwrap_or_default()).collect();
        let rep_rank =
            reps.iter().map(|r| r.standardize().map(HypergraphCode::rank).unwrap_or_else(|_| r.rank())).collect();
        OrbitTable { class_id, reps, sizes, rep_rank }
    }

    /// Rebuilds a table from raw orbit ids, rejecting anything that is not
    /// a generator-closed partition numbered by smallest member.
    pub fn from_class_ids(class_id: Vec<u16>) -> Result<Self, String> {
        if class_id.len() != NUM_CODES {
            return Err(format!("expected {NUM_CODES} entries, found {}", class_id.len()));
        }
        let table = OrbitTable::from_ids_unchecked(class_id);
        if table.sizes.contains(&0) {
            return Err("orbit ids are not contiguous".into());
        }
        if table.reps.windows(2).any(|w| w[0] >= w[1]) {
            return Err("orbit ids are not ordered by smallest member".into());
        }
        if let Some(code) = table.first_closure_violation() {
            return Err(format!("code {} is not closed under the generators", code.raw()));
        }
        Ok(table)
    }

    fn first_closure_violation(&self) -> Option<HypergraphCode> {
        HypergraphCode::all().find(|&c| generator_images(c).any(|g| self.class_of(g) != self.class_of(c)))
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_of(&self, h: HypergraphCode) -> usize {
        self.class_id[h.raw() as usize] as usize
    }

    pub fn class_ids(&self) -> &[u16] {
        &self.class_id
    }

    pub fn record(&self, id: usize) -> OrbitRecord {
        OrbitRecord::new(id, self.reps[id], self.sizes[id], self.rep_rank[id])
    }

    pub fn orbit_of(&self, h: HypergraphCode) -> OrbitRecord {
        self.record(self.class_of(h))
    }

    pub fn records(&self) -> impl Iterator<Item = OrbitRecord> + '_ {
        (0..self.len()).map(|id| self.record(id))
    }

    pub fn members(&self, id: usize) -> impl Iterator<Item = HypergraphCode> + '_ {
        HypergraphCode::all().filter(move |&c| self.class_of(c) == id)
    }

    pub fn write_cache(&self, path: &Path) -> Result<(), OrbitError> {
        let mut bytes = Vec::with_capacity(CACHE_HEADER_LEN + 2 * NUM_CODES);
        bytes.extend_from_slice(CACHE_MAGIC);
        bytes.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        bytes.extend_from_slice(&(NUM_CODES as u32).to_le_bytes());
        for id in &self.class_id {
            bytes.extend_from_slice(&id.to_le_bytes());
        }
        fs::write(path, bytes).map_err(|source| OrbitError::Io { path: path.to_path_buf(), source })
    }

    pub fn read_cache(path: &Path) -> Result<Self, OrbitError> {
        let bad = |reason: String| OrbitError::BadCache { path: path.to_path_buf(), reason };
        let bytes = fs::read(path).map_err(|source| OrbitError::Io { path: path.to_path_buf(), source })?;
        if bytes.len() != CACHE_HEADER_LEN + 2 * NUM_CODES {
            return Err(bad(format!("unexpected length {}", bytes.len())));
        }
        if &bytes[..8] != CACHE_MAGIC {
            return Err(bad("missing header".into()));
        }
        let version = u32::from_le_bytes(bytes[8..12].try_into().expect("4 bytes"));
        if version != CACHE_VERSION {
            return Err(bad(format!("unsupported version {version}")));
        }
        let class_id = bytes[CACHE_HEADER_LEN..].chunks_exact(2).map(|b| u16::from_le_bytes([b[0], b[1]])).collect();
        OrbitTable::from_class_ids(class_id).map_err(bad)
    }

    /// Loads the cache at `path`, regenerating and rewriting it when it is
    /// absent or unreadable.
    pub fn load_or_build(path: &Path) -> Result<Self, OrbitError> {
        match OrbitTable::read_cache(path) {
            Ok(table) => Ok(table),
            Err(_) => {
                let table = enumerate_orbits();
                table.write_cache(path)?;
                Ok(table)
            }
        }
    }
}

/// Number of codes per rank, counting each orbit at its standardized rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RankCensus {
    pub by_rank: [u32; 5],
}

impl RankCensus {
    pub fn rank4(&self) -> u32 {
        self.by_rank[4]
    }

    pub fn rank3(&self) -> u32 {
        self.by_rank[3]
    }

    /// Ranks 0 to 2: graph states, possibly with loops.
    pub fn graphs(&self) -> u32 {
        self.by_rank[..3].iter().sum()
    }

    pub fn total(&self) -> u32 {
        self.by_rank.iter().sum()
    }
}

pub fn rank_census(t: &OrbitTable) -> Result<RankCensus, OrbitError> {
    let mut census = RankCensus::default();
    for code in HypergraphCode::all() {
        let id = t.class_of(code);
        let expected = t.rep_rank[id];
        let found = code.standardize().map(HypergraphCode::rank).unwrap_or(u32::MAX);
        if found != expected {
            return Err(OrbitError::RankInconsistent {
                orbit: id,
                code: code.raw(),
                expected: expected as u8,
                found: found as u8,
            });
        }
    }
    for record in t.records() {
        census.by_rank[record.rank as usize] += record.size;
    }
    Ok(census)
}
