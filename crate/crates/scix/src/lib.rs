//! Compact-space text indexing.
//!
//! Building blocks (bit vectors with rank/select, packed and compressed
//! integer sequences, wavelet trees, balanced-parentheses topologies) and
//! the text indexes assembled from them (FM-indexes, bidirectional
//! indexes, suffix tree topologies, longest-common-prefix arrays), plus
//! Burrows-Wheeler transform construction both by suffix sorting and by
//! blockwise alphabet doubling, and applications built on top: index
//! merging, maximal exact matches, maximal repeats, and distinct k-mer
//! profiles.

pub mod bitvec;
pub mod bptree;
pub mod elias_fano;
pub mod enumerate;
pub mod error;
pub mod interval;
pub mod naive;
pub mod packed;
pub mod rcr;
mod serial;
pub mod sufsort;
pub mod text;
pub mod topo;
pub mod wavelet;

pub use bitvec::{select_in_word, BitVector, BitVectorBuilder};
pub use bptree::{BpTree, NodeId};
pub use elias_fano::EliasFano;
pub use enumerate::{c_array, ceil_log2, enumerate_internal, EnumStats, NodeVisit};
pub use error::{Error, Result};
pub use interval::Interval;
pub use packed::PackedIntVec;
pub use rcr::{prev_occ_array, rcr_report, Rmq};
pub use text::Text;
pub use topo::{
    build_topology, emit_bp, CounterBackend, CounterPass1, Counters, PlainCounters,
    SuccinctCounterArray, TopoStats,
};
pub use wavelet::WaveletTree;
