#pragma once

#include <cstdint>
#include <vector>

#include "fhseq/cyclotomy.hpp"

namespace fhseq {

/// The e-cell partition of Z_L that defines the hopping pattern:
/// C_0 = D_0 u Q u R, C_{e/2} = D_{e/2} u P, and C_i = D_i otherwise.
struct Partition {
    Params params;
    std::vector<std::vector<std::int64_t>> cells;  // C_0 .. C_{e-1}
    std::vector<std::int32_t> cell_index;          // residue -> cell number in [0, e)
};

/// Builds the cells from the cyclotomic tables and verifies they are
/// pairwise disjoint and cover Z_L.
Partition build_partition(const CyclotomicTables& tables);

/// A set of e hopping sequences of length L over the symbol alphabet
/// {0, ..., e-1}. Sequence i is the symbol-wise rotation of sequence 0:
/// sequences[i][t] = (cell_index[t] + i) mod e.
struct FHSequenceSet {
    Params params;
    std::vector<std::vector<std::int32_t>> sequences;
};

/// Materializes all e sequences as dense arrays. Gated to e*L <= 2.5e8
/// entries (std::length_error); use symbol_at for larger instances.
FHSequenceSet build_sequence_set(const Partition& partition);

/// Symbol of sequence `label` at position t, computed on demand from the
/// partition index. Agrees with the corresponding dense-array entry.
std::int32_t symbol_at(const Partition& partition, std::int64_t label, std::int64_t t);

}  // namespace fhseq
