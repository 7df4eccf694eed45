#ifndef REDSIM_NETWORK_HPP
#define REDSIM_NETWORK_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "redsim/model.hpp"
#include "redsim/rng.hpp"

namespace redsim {

/// Immutable undirected contact network without self-loops or parallel
/// edges. Adjacency is stored contiguously (CSR layout) with each per-node
/// neighbor list sorted, so neighbor iteration is cache-friendly and the
/// representation is canonical. Safe to share across concurrent
/// replications.
class ContactNetwork {
public:
    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return flat_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId n) const {
        return {flat_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
    }

    std::size_t degree(NodeId n) const { return offsets_[n + 1] - offsets_[n]; }

    /// Canonical edge list: each edge once, smaller id first, sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    friend bool operator==(const ContactNetwork&, const ContactNetwork&) = default;

    friend ContactNetwork build_network(
        std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges);

private:
    ContactNetwork() = default;

    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> flat_;
};

/// Constructs the symmetric adjacency from an edge list. Duplicate
/// undirected edges collapse to one; self-loops or out-of-range ids are
/// rejected with std::invalid_argument.
ContactNetwork build_network(std::size_t node_count,
                             std::span<const std::pair<NodeId, NodeId>> edges);

/// Degree sequence for the configuration model.
struct DegreeSequence {
    std::vector<std::uint32_t> degrees;
    std::uint32_t k_min = 0;
    std::uint32_t k_max = 0;

    std::uint64_t total() const;
};

/// Draws n degrees i.i.d. from the normalized discrete power law
/// k^(-beta) on [k_min, k_max]. If the sum comes out odd, one uniformly
/// chosen entry not already at k_max is incremented.
DegreeSequence sample_powerlaw_degrees(std::size_t n, double beta,
                                       std::uint32_t k_min, std::uint32_t k_max,
                                       RngStream& rng);

/// Exact probabilities of the truncated power law, normalized by direct
/// summation; reference for distribution tests.
std::vector<double> powerlaw_pmf(double beta, std::uint32_t k_min,
                                 std::uint32_t k_max);

struct ConfigModelStats {
    std::uint64_t total_stubs = 0;
    std::uint64_t erased_stubs = 0; // stubs lost to self-loops and multi-edges
};

/// Configuration model by uniform stub matching, erased variant: self-loops
/// and parallel edges are deleted, so realized degrees may fall slightly
/// below their targets. Requires an even degree sum.
ContactNetwork configuration_model(const DegreeSequence& degrees, RngStream& rng,
                                   ConfigModelStats* stats = nullptr);

/// Edge-list text I/O: one edge per line, two whitespace-separated decimal
/// ids, 0-indexed; lines starting with '#' are ignored. Reading rejects
/// malformed lines with their line number; writing emits the canonical form.
ContactNetwork read_edge_list(const std::filesystem::path& path);
void write_edge_list(const ContactNetwork& network,
                     const std::filesystem::path& path);

} // namespace redsim

#endif
