#include <gridlock/oracles.hpp>

#include <algorithm>
#include <bit>
#include <thread>

namespace gridlock {

namespace {

// Indexed view of a graph for the hot enumeration loops.
struct IndexedGraph {
    std::size_t n = 0;
    std::vector<VertexId> ids;                       // sorted
    std::vector<std::vector<int>> neighbors;         // voting, by index
    std::vector<std::pair<int, int>> constraints;    // non-voting edges + forced pairs
    bool any_isolated = false;

    explicit IndexedGraph(const Graph& g) {
        ids = g.vertex_ids();
        n = ids.size();
        neighbors.resize(n);
        auto index_of = [&](VertexId v) {
            return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
        };
        for (const auto& [a, b] : g.voting_edges()) {
            int ia = index_of(a);
            int ib = index_of(b);
            neighbors[static_cast<std::size_t>(ia)].push_back(ib);
            neighbors[static_cast<std::size_t>(ib)].push_back(ia);
        }
        for (const auto& [a, b] : g.non_voting_edges()) constraints.emplace_back(index_of(a), index_of(b));
        for (const auto& [a, b] : g.forced_pairs()) constraints.emplace_back(index_of(a), index_of(b));
        for (const auto& nbrs : neighbors) {
            if (nbrs.empty()) any_isolated = true;
        }
    }

    // Strict plurality check of one coloring given as dense color array.
    bool locally_optimal(const std::vector<int>& color, int k, std::vector<int>& scratch) const {
        for (const auto& [a, b] : constraints) {
            if (color[static_cast<std::size_t>(a)] != color[static_cast<std::size_t>(b)]) return false;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const auto& nbrs = neighbors[v];
            if (nbrs.empty()) return false;
            scratch.assign(static_cast<std::size_t>(k), 0);
            for (int u : nbrs) ++scratch[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])];
            int own = color[v];
            int own_count = scratch[static_cast<std::size_t>(own)];
            for (int c = 0; c < k; ++c) {
                if (c != own && scratch[static_cast<std::size_t>(c)] >= own_count) return false;
            }
        }
        return true;
    }
};

// k^n with saturation against the budget; returns budget+1 on overflow.
std::uint64_t checked_power(std::uint64_t k, std::size_t n, std::uint64_t budget) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (result > budget / (k == 0 ? 1 : k)) return budget + 1;
        result *= k;
        if (result > budget) return budget + 1;
    }
    return result;
}

std::int64_t count_two_colorings(const IndexedGraph& ig, std::uint64_t begin, std::uint64_t end) {
    // Bitmask fast path for k = 2: color of vertex i is bit i of the mask.
    std::vector<std::uint64_t> adjacency(ig.n, 0);
    std::vector<int> degree(ig.n, 0);
    for (std::size_t v = 0; v < ig.n; ++v) {
        for (int u : ig.neighbors[v]) adjacency[v] |= std::uint64_t{1} << u;
        degree[v] = static_cast<int>(ig.neighbors[v].size());
    }
    std::int64_t count = 0;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        bool ok = true;
        for (const auto& [a, b] : ig.constraints) {
            if (((mask >> a) & 1) != ((mask >> b) & 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::size_t v = 0; v < ig.n && ok; ++v) {
            std::uint64_t same_mask = ((mask >> v) & 1) ? mask : ~mask;
            int same = std::popcount(adjacency[v] & same_mask);
            ok = 2 * same > degree[v];
        }
        if (ok) ++count;
    }
    return count;
}

std::int64_t count_general_colorings(const IndexedGraph& ig, int k, std::uint64_t begin, std::uint64_t end) {
    std::vector<int> color(ig.n, 0);
    // seed the mixed-radix odometer at `begin` (least significant digit first)
    std::uint64_t seed = begin;
    for (std::size_t i = 0; i < ig.n; ++i) {
        color[i] = static_cast<int>(seed % static_cast<std::uint64_t>(k));
        seed /= static_cast<std::uint64_t>(k);
    }
    std::vector<int> scratch;
    std::int64_t count = 0;
    for (std::uint64_t index = begin; index < end; ++index) {
        if (ig.locally_optimal(color, k, scratch)) ++count;
        for (std::size_t i = 0; i < ig.n; ++i) {
            if (++color[i] < k) break;
            color[i] = 0;
        }
    }
    return count;
}

std::int64_t parallel_count(int workers, std::uint64_t total,
                            const std::function<std::int64_t(std::uint64_t, std::uint64_t)>& counter) {
    if (workers <= 1 || total < 1024) return counter(0, total);
    std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    std::vector<std::int64_t> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, w, begin, end] { partial[static_cast<std::size_t>(w)] = counter(begin, end); });
    }
    for (auto& t : threads) t.join();
    std::int64_t sum = 0;
    for (std::int64_t p : partial) sum += p;
    return sum;
}

// Bell number of n, saturated against the budget. Row i of the Bell triangle
// ends in Bell(i+1), so rows are built only up to i = n-1.
std::uint64_t bell_number_capped(std::size_t n, std::uint64_t cap) {
    if (n == 0) return 1;
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<std::uint64_t> next(i + 1, 0);
        next[0] = row.back();
        for (std::size_t j = 1; j <= i; ++j) {
            std::uint64_t sum = next[j - 1] + row[j - 1];
            if (sum < next[j - 1] || sum > cap) return cap + 1;
            next[j] = sum;
        }
        row = std::move(next);
    }
    return row.back();
}

// Visits every set partition of {0..n-1} as a restricted-growth string, in
// lexicographic order. The visitor receives the RGS and the block count.
template <typename Visitor>
void for_each_partition(std::size_t n, Visitor&& visit) {
    if (n == 0) {
        std::vector<int> empty;
        visit(empty, 0);
        return;
    }
    std::vector<int> rgs(n, 0);
    std::vector<int> prefix_max(n, 0); // max of rgs[0..i]
    while (true) {
        int blocks = prefix_max[n - 1] + 1;
        visit(rgs, blocks);
        // advance to the next restricted-growth string
        std::size_t i = n;
        while (i-- > 1) {
            if (rgs[i] <= prefix_max[i - 1]) {
                ++rgs[i];
                prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[j - 1];
                }
                break;
            }
            if (i == 1) return; // wrapped past the last string
        }
        if (n == 1) return;
    }
}

bool partition_is_locally_optimal(const IndexedGraph& ig, const std::vector<int>& block_of, int blocks,
                                  std::vector<int>& scratch) {
    for (const auto& [a, b] : ig.constraints) {
        if (block_of[static_cast<std::size_t>(a)] != block_of[static_cast<std::size_t>(b)]) return false;
    }
    for (std::size_t v = 0; v < ig.n; ++v) {
        const auto& nbrs = ig.neighbors[v];
        if (nbrs.empty()) return false;
        scratch.assign(static_cast<std::size_t>(blocks), 0);
        for (int u : nbrs) ++scratch[static_cast<std::size_t>(block_of[static_cast<std::size_t>(u)])];
        int own = block_of[v];
        int own_count = scratch[static_cast<std::size_t>(own)];
        for (int c = 0; c < blocks; ++c) {
            if (c != own && scratch[static_cast<std::size_t>(c)] >= own_count) return false;
        }
    }
    return true;
}

} // namespace

bool is_locally_optimal(const Graph& g, const Coloring& coloring) {
    IndexedGraph ig(g);
    std::vector<int> color(ig.n, 0);
    int max_color = 0;
    for (std::size_t i = 0; i < ig.n; ++i) {
        auto it = coloring.assignment.find(ig.ids[i]);
        if (it == coloring.assignment.end())
            raise(ErrorKind::InvalidArgument,
                  "coloring misses vertex " + std::to_string(ig.ids[i]));
        if (it->second < 0) raise(ErrorKind::InvalidArgument, "negative color index");
        color[i] = it->second;
        max_color = std::max(max_color, it->second);
    }
    if (ig.n == 0) return true; // the empty coloring is vacuously locally optimal
    std::vector<int> scratch;
    return ig.locally_optimal(color, max_color + 1, scratch);
}

std::int64_t brute_force_lo_count(const Graph& g, int k, const OracleOptions& options) {
    if (k < 0) raise(ErrorKind::InvalidArgument, "color count must be nonnegative");
    const std::size_t n = g.vertex_count();
    if (n == 0) return 1;
    if (k == 0) return 0;
    std::uint64_t total = checked_power(static_cast<std::uint64_t>(k), n, options.coloring_budget);
    if (total > options.coloring_budget)
        raise(ErrorKind::BudgetExceeded,
              "coloring enumeration exceeds budget of " + std::to_string(options.coloring_budget));
    IndexedGraph ig(g);
    if (ig.any_isolated) return 0;
    if (k == 1) return 1;
    if (k == 2 && n <= 64) {
        return parallel_count(options.workers, total,
                              [&](std::uint64_t b, std::uint64_t e) { return count_two_colorings(ig, b, e); });
    }
    return parallel_count(options.workers, total, [&](std::uint64_t b, std::uint64_t e) {
        return count_general_colorings(ig, k, b, e);
    });
}

std::vector<Partition> enumerate_lo_partitions(const Graph& g, const OracleOptions& options) {
    const std::size_t n = g.vertex_count();
    if (bell_number_capped(n, options.partition_budget) > options.partition_budget)
        raise(ErrorKind::BudgetExceeded,
              "partition enumeration exceeds budget of " + std::to_string(options.partition_budget));
    IndexedGraph ig(g);
    std::vector<Partition> result;
    if (n == 0) {
        result.push_back(Partition{});
        return result;
    }
    if (ig.any_isolated) return result;
    std::vector<int> scratch;
    for_each_partition(n, [&](const std::vector<int>& rgs, int blocks) {
        if (!partition_is_locally_optimal(ig, rgs, blocks, scratch)) return;
        Partition partition;
        partition.blocks.assign(static_cast<std::size_t>(blocks), {});
        for (std::size_t i = 0; i < n; ++i)
            partition.blocks[static_cast<std::size_t>(rgs[i])].push_back(ig.ids[i]);
        result.push_back(std::move(partition));
    });
    return result;
}

IntPolynomial lo_polynomial_via_partitions(const Graph& g, const OracleOptions& options) {
    const std::size_t n = g.vertex_count();
    if (bell_number_capped(n, options.partition_budget) > options.partition_budget)
        raise(ErrorKind::BudgetExceeded,
              "partition enumeration exceeds budget of " + std::to_string(options.partition_budget));
    IndexedGraph ig(g);
    IntPolynomial result;
    if (n == 0) return IntPolynomial::constant(1);
    if (ig.any_isolated) return result;
    std::vector<std::int64_t> count_by_blocks(n + 1, 0);
    std::vector<int> scratch;
    for_each_partition(n, [&](const std::vector<int>& rgs, int blocks) {
        if (partition_is_locally_optimal(ig, rgs, blocks, scratch))
            ++count_by_blocks[static_cast<std::size_t>(blocks)];
    });
    for (std::size_t m = 1; m <= n; ++m) {
        if (count_by_blocks[m] != 0)
            result += BigInt(count_by_blocks[m]) * falling_factorial(static_cast<int>(m));
    }
    return result;
}

IntPolynomial lo_polynomial_via_interpolation(const Graph& g, const OracleOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n < 3) raise(ErrorKind::Precondition, "interpolation requires at least 3 vertices");
    if (g.connected_components().size() != 1)
        raise(ErrorKind::Precondition, "interpolation requires a connected graph");

    const int max_degree = static_cast<int>(n / 3);
    std::vector<BigInt> values;
    for (int k = 0; k <= max_degree; ++k) values.emplace_back(brute_force_lo_count(g, k, options));

    // Lagrange interpolation on the nodes 0..max_degree with exact rationals.
    std::vector<BigRational> coeffs(static_cast<std::size_t>(max_degree) + 1, BigRational(0));
    for (int i = 0; i <= max_degree; ++i) {
        // basis_i(x) = prod_{j != i} (x - j), expanded over the integers
        std::vector<BigInt> basis{1};
        BigInt denominator = 1;
        for (int j = 0; j <= max_degree; ++j) {
            if (j == i) continue;
            denominator *= BigInt(i - j);
            std::vector<BigInt> next(basis.size() + 1, BigInt(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * j;
            }
            basis = std::move(next);
        }
        BigRational weight = BigRational(values[static_cast<std::size_t>(i)]) / BigRational(denominator);
        for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += weight * BigRational(basis[d]);
    }

    std::vector<BigInt> integral;
    integral.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (boost::multiprecision::denominator(c) != 1)
            raise(ErrorKind::Mismatch, "interpolation produced a non-integral coefficient; "
                                       "degree bound violated");
        integral.push_back(boost::multiprecision::numerator(c));
    }
    return IntPolynomial(std::move(integral));
}

} // namespace gridlock
