#include "redsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "redsim/errors.hpp"

namespace redsim {

std::vector<std::pair<NodeId, NodeId>> ContactNetwork::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId n = 0; n < node_count(); ++n)
        for (NodeId m : neighbors(n))
            if (n < m)
                out.emplace_back(n, m);
    return out;
}

ContactNetwork build_network(std::size_t node_count,
                             std::span<const std::pair<NodeId, NodeId>> edges) {
    std::vector<std::pair<NodeId, NodeId>> canonical;
    canonical.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("build_network: self-loop on node " +
                                        std::to_string(a));
        if (a >= node_count || b >= node_count)
            throw std::invalid_argument("build_network: node id out of range");
        canonical.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(canonical.begin(), canonical.end());
    canonical.erase(std::unique(canonical.begin(), canonical.end()),
                    canonical.end());

    ContactNetwork net;
    net.offsets_.assign(node_count + 1, 0);
    for (const auto& [a, b] : canonical) {
        ++net.offsets_[a + 1];
        ++net.offsets_[b + 1];
    }
    std::partial_sum(net.offsets_.begin(), net.offsets_.end(),
                     net.offsets_.begin());
    net.flat_.resize(canonical.size() * 2);
    std::vector<std::size_t> cursor(net.offsets_.begin(),
                                    net.offsets_.end() - 1);
    for (const auto& [a, b] : canonical) {
        net.flat_[cursor[a]++] = b;
        net.flat_[cursor[b]++] = a;
    }
    // Sorted input pairs leave each per-node list sorted already; keep the
    // invariant explicit.
    for (NodeId n = 0; n < node_count; ++n) {
        auto* begin = net.flat_.data() + net.offsets_[n];
        auto* end = net.flat_.data() + net.offsets_[n + 1];
        std::sort(begin, end);
    }
    return net;
}

std::uint64_t DegreeSequence::total() const {
    return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
}

std::vector<double> powerlaw_pmf(double beta, std::uint32_t k_min,
                                 std::uint32_t k_max) {
    if (k_min < 1 || k_min > k_max)
        throw std::invalid_argument("powerlaw_pmf: empty degree support");
    std::vector<double> pmf(k_max - k_min + 1);
    double sum = 0.0;
    // Accumulate from the small terms up for accuracy.
    for (std::uint32_t k = k_max; k >= k_min; --k) {
        sum += std::pow(static_cast<double>(k), -beta);
        if (k == k_min)
            break;
    }
    for (std::uint32_t k = k_min; k <= k_max; ++k)
        pmf[k - k_min] = std::pow(static_cast<double>(k), -beta) / sum;
    return pmf;
}

DegreeSequence sample_powerlaw_degrees(std::size_t n, double beta,
                                       std::uint32_t k_min, std::uint32_t k_max,
                                       RngStream& rng) {
    if (k_min < 1 || k_min > k_max)
        throw std::invalid_argument("sample_powerlaw_degrees: empty degree support");
    if (!(beta > 1.0))
        throw std::invalid_argument("sample_powerlaw_degrees: beta must exceed 1");
    if (n > 0 && k_max > n - 1)
        throw std::invalid_argument("sample_powerlaw_degrees: k_max exceeds n-1");

    const std::vector<double> pmf = powerlaw_pmf(beta, k_min, k_max);
    std::vector<double> cdf(pmf.size());
    std::partial_sum(pmf.begin(), pmf.end(), cdf.begin());
    cdf.back() = 1.0;

    DegreeSequence seq;
    seq.k_min = k_min;
    seq.k_max = k_max;
    seq.degrees.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        seq.degrees[i] = k_min + static_cast<std::uint32_t>(it - cdf.begin());
    }

    if (seq.total() % 2 != 0) {
        // Repair: bump one uniformly chosen entry that has headroom.
        const bool repairable =
            std::any_of(seq.degrees.begin(), seq.degrees.end(),
                        [&](std::uint32_t k) { return k < k_max; });
        if (!repairable)
            throw std::invalid_argument(
                "sample_powerlaw_degrees: odd degree sum with no entry below k_max");
        for (;;) {
            const std::size_t i = rng.uniform_below(n);
            if (seq.degrees[i] < k_max) {
                ++seq.degrees[i];
                break;
            }
        }
    }
    return seq;
}

ContactNetwork configuration_model(const DegreeSequence& degrees, RngStream& rng,
                                   ConfigModelStats* stats) {
    if (degrees.total() % 2 != 0)
        throw std::invalid_argument("configuration_model: odd degree sum");

    std::vector<NodeId> stubs;
    stubs.reserve(degrees.total());
    for (NodeId n = 0; n < degrees.degrees.size(); ++n)
        stubs.insert(stubs.end(), degrees.degrees[n], n);

    // Fisher-Yates: a uniformly random perfect matching of the stubs.
    for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.uniform_below(i)]);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(stubs.size() / 2);
    std::uint64_t erased = 0;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const NodeId a = stubs[i];
        const NodeId b = stubs[i + 1];
        if (a == b) {
            erased += 2;
            continue;
        }
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    const auto dup_begin = std::unique(edges.begin(), edges.end());
    erased += 2 * static_cast<std::uint64_t>(edges.end() - dup_begin);
    edges.erase(dup_begin, edges.end());

    if (stats) {
        stats->total_stubs = stubs.size();
        stats->erased_stubs = erased;
    }
    return build_network(degrees.degrees.size(), edges);
}

ContactNetwork read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge list '" + path.string() + "'");

    std::vector<std::pair<NodeId, NodeId>> edges;
    NodeId max_id = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        long long a = -1, b = -1;
        if (!(ls >> a >> b))
            throw EdgeListParseError(line_no, "expected two decimal node ids");
        std::string rest;
        if (ls >> rest)
            throw EdgeListParseError(line_no, "trailing content '" + rest + "'");
        if (a < 0 || b < 0)
            throw EdgeListParseError(line_no, "negative node id");
        if (a == b)
            throw EdgeListParseError(line_no,
                                     "self-loop on node " + std::to_string(a));
        edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
        max_id = std::max({max_id, static_cast<NodeId>(a), static_cast<NodeId>(b)});
    }
    const std::size_t nodes = edges.empty() ? 0 : static_cast<std::size_t>(max_id) + 1;
    return build_network(nodes, edges);
}

void write_edge_list(const ContactNetwork& network,
                     const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write edge list '" + path.string() + "'");
    for (const auto& [a, b] : network.edges())
        out << a << ' ' << b << '\n';
}

} // namespace redsim
