#include "fhseq/construction.hpp"

#include <stdexcept>

namespace fhseq {

namespace {

constexpr std::int64_t kMaxDenseEntries = 250'000'000;

}  // namespace

Partition build_partition(const CyclotomicTables& tables) {
    const Params& prm = tables.params;
    const std::int64_t e = prm.e;
    const std::int64_t half = e / 2;

    Partition part;
    part.params = prm;
    part.cell_index.assign(static_cast<std::size_t>(prm.L), -1);
    part.cells.resize(static_cast<std::size_t>(e));

    for (std::int64_t i = 0; i < e; ++i) {
        auto& cell = part.cells[static_cast<std::size_t>(i)];
        cell = tables.classes[static_cast<std::size_t>(i)];
        if (i == 0) {
            cell.insert(cell.end(), tables.q_multiples.begin(), tables.q_multiples.end());
            cell.push_back(0);
        } else if (i == half) {
            cell.insert(cell.end(), tables.p_multiples.begin(), tables.p_multiples.end());
        }
        for (std::int64_t v : cell) {
            auto& slot = part.cell_index[static_cast<std::size_t>(v)];
            if (slot != -1) throw std::logic_error("build_partition: cells are not disjoint");
            slot = static_cast<std::int32_t>(i);
        }
    }
    for (std::int32_t c : part.cell_index)
        if (c == -1) throw std::logic_error("build_partition: cells do not cover Z_L");

    // Size sanity: |C_0| = d + p, |C_{e/2}| = d + q - 1, |C_i| = d otherwise.
    if (static_cast<std::int64_t>(part.cells[0].size()) != prm.d + prm.p ||
        static_cast<std::int64_t>(part.cells[static_cast<std::size_t>(half)].size()) !=
            prm.d + prm.q - 1)
        throw std::logic_error("build_partition: unexpected cell sizes");
    return part;
}

FHSequenceSet build_sequence_set(const Partition& partition) {
    const Params& prm = partition.params;
    const std::int64_t e = prm.e;
    const std::int64_t L = prm.L;
    if (e * L > kMaxDenseEntries)
        throw std::length_error(
            "build_sequence_set: dense set exceeds the 2.5e8-entry gate; use symbol_at");

    FHSequenceSet set;
    set.params = prm;
    set.sequences.resize(static_cast<std::size_t>(e));
    for (std::int64_t i = 0; i < e; ++i) {
        auto& seq = set.sequences[static_cast<std::size_t>(i)];
        seq.resize(static_cast<std::size_t>(L));
        for (std::int64_t t = 0; t < L; ++t) {
            std::int32_t sym = partition.cell_index[static_cast<std::size_t>(t)] +
                               static_cast<std::int32_t>(i);
            if (sym >= e) sym -= static_cast<std::int32_t>(e);
            seq[static_cast<std::size_t>(t)] = sym;
        }
    }
    return set;
}

std::int32_t symbol_at(const Partition& partition, std::int64_t label, std::int64_t t) {
    const std::int64_t e = partition.params.e;
    if (label < 0 || label >= e) throw std::out_of_range("symbol_at: label outside [0, e)");
    if (t < 0 || t >= partition.params.L) throw std::out_of_range("symbol_at: position outside [0, L)");
    return static_cast<std::int32_t>(
        (partition.cell_index[static_cast<std::size_t>(t)] + label) % e);
}

}  // namespace fhseq
