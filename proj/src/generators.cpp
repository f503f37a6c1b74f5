#include "sgbal/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "sgbal/rng.hpp"

namespace sgbal {

namespace {

long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

std::uint64_t pair_key(int u, int v) {
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    return (lo << 32) | hi;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

// Applies the requested sign pattern in place; edges arrive all-positive.
void assign_signs(std::vector<Edge>& edges, const SignAssignment& signs,
                  rng::Engine& eng) {
    require(signs.value >= 0.0 && signs.value <= 1.0,
            "negative-sign fraction/probability must lie in [0, 1]");
    const auto m = static_cast<long long>(edges.size());
    if (signs.mode == SignAssignment::Mode::exact_fraction) {
        auto wanted = static_cast<long long>(std::floor(signs.value * static_cast<double>(m) + 1e-9));
        wanted = std::min(wanted, m);
        // Partial Fisher-Yates: the first `wanted` slots end up a uniform
        // subset of the edge indices.
        std::vector<long long> idx(static_cast<std::size_t>(m));
        std::iota(idx.begin(), idx.end(), 0);
        for (long long i = 0; i < wanted; ++i) {
            const auto j = i + static_cast<long long>(rng::bounded(
                                   eng, static_cast<std::uint64_t>(m - i)));
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
            Edge& e = edges[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            e.sign = -1;
            e.weight = -1.0;
        }
    } else {
        for (Edge& e : edges)
            if (rng::unit(eng) < signs.value) {
                e.sign = -1;
                e.weight = -1.0;
            }
    }
}

std::vector<Edge> make_gnm(int n, long long m, rng::Engine& eng) {
    require(n >= 0, "node count must be nonnegative");
    require(m >= 0 && m <= pair_count(n), "edge count must lie in [0, n(n-1)/2]");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    const long long total = pair_count(n);
    if (total <= 4'000'000) {
        // Small pair space: shuffle all pairs and keep a uniform m-subset.
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(total));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        rng::shuffle(pairs, eng);
        for (long long i = 0; i < m; ++i)
            edges.push_back({pairs[static_cast<std::size_t>(i)].first,
                             pairs[static_cast<std::size_t>(i)].second});
    } else {
        // Sparse draw from a huge pair space: rejection sampling.
        std::unordered_set<std::uint64_t> seen;
        while (static_cast<long long>(edges.size()) < m) {
            const int u = static_cast<int>(rng::bounded(eng, static_cast<std::uint64_t>(n)));
            const int v = static_cast<int>(rng::bounded(eng, static_cast<std::uint64_t>(n)));
            if (u == v) continue;
            if (!seen.insert(pair_key(u, v)).second) continue;
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    return edges;
}

std::vector<Edge> make_gnp(int n, double p, rng::Engine& eng) {
    require(n >= 0, "node count must be nonnegative");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng::unit(eng) < p) edges.push_back({u, v});
    return edges;
}

std::vector<Edge> make_barabasi_albert(int n, int attachment, rng::Engine& eng) {
    require(attachment >= 1, "attachment count must be at least 1");
    require(n > attachment, "node count must exceed the attachment count");
    std::vector<Edge> edges;
    // Star seed on attachment+1 nodes, centred at node 0.
    std::vector<int> endpoints;
    for (int v = 1; v <= attachment; ++v) {
        edges.push_back({0, v});
        endpoints.push_back(0);
        endpoints.push_back(v);
    }
    std::vector<int> chosen;
    for (int v = attachment + 1; v < n; ++v) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < attachment) {
            const int target = endpoints[static_cast<std::size_t>(
                rng::bounded(eng, endpoints.size()))];
            if (std::find(chosen.begin(), chosen.end(), target) == chosen.end())
                chosen.push_back(target);
        }
        for (int target : chosen) {
            edges.push_back({std::min(v, target), std::max(v, target)});
            endpoints.push_back(target);
            endpoints.push_back(v);
        }
    }
    return edges;
}

std::vector<Edge> make_random_regular(int n, int degree, rng::Engine& eng) {
    require(degree >= 0, "degree must be nonnegative");
    require(n >= 0 && degree < std::max(n, 1), "degree must be below the node count");
    require(static_cast<long long>(n) * degree % 2 == 0,
            "n * degree must be even (handshake parity)");
    if (degree == 0 || n == 0) return {};
    // Configuration model: pair up degree stubs per node, restart on a loop
    // or duplicate edge so every accepted sample has exact degrees.
    std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));
    for (int attempt = 0; attempt < 2000; ++attempt) {
        std::size_t pos = 0;
        for (int v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d) stubs[pos++] = v;
        rng::shuffle(stubs, eng);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        std::unordered_set<std::uint64_t> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert(pair_key(u, v)).second) {
                ok = false;
                break;
            }
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        if (ok) return edges;
    }
    throw std::runtime_error("random-regular generation kept hitting loops or duplicate "
                             "edges; the (n, degree) combination is too tight");
}

std::vector<Edge> make_complete(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(pair_count(n)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return edges;
}

std::vector<Edge> make_ising_lattice(const std::vector<int>& dims) {
    require(!dims.empty(), "lattice needs at least one dimension");
    long long n = 1;
    for (int d : dims) {
        require(d >= 1, "lattice side lengths must be positive");
        n *= d;
        require(n <= 50'000'000, "lattice is too large");
    }
    // Row-major strides; axis a connects i to i + stride[a] unless i sits on
    // that axis's far boundary (open boundaries).
    std::vector<long long> stride(dims.size());
    long long acc = 1;
    for (std::size_t a = dims.size(); a-- > 0;) {
        stride[a] = acc;
        acc *= dims[a];
    }
    std::vector<Edge> edges;
    for (long long i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < dims.size(); ++a) {
            const long long coord = (i / stride[a]) % dims[a];
            if (coord + 1 < dims[a])
                edges.push_back({static_cast<int>(i), static_cast<int>(i + stride[a])});
        }
    }
    return edges;
}

std::vector<Edge> make_hypercube(int dimension) {
    require(dimension >= 0 && dimension <= 25, "cube dimension must lie in [0, 25]");
    const int n = 1 << dimension;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(dimension) * (static_cast<std::size_t>(n) / 2));
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < dimension; ++b) {
            const int j = i ^ (1 << b);
            if (i < j) edges.push_back({i, j});
        }
    return edges;
}

} // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::gnm: return "gnm";
        case Family::gnp: return "gnp";
        case Family::barabasi_albert: return "barabasi-albert";
        case Family::random_regular: return "random-regular";
        case Family::complete_single_negative: return "complete-single-negative";
        case Family::complete_all_negative: return "complete-all-negative";
        case Family::ising_lattice: return "ising-lattice";
        case Family::hypercube: return "hypercube";
    }
    return "unknown";
}

Family family_from_string(const std::string& text) {
    if (text == "gnm") return Family::gnm;
    if (text == "gnp") return Family::gnp;
    if (text == "barabasi-albert") return Family::barabasi_albert;
    if (text == "random-regular") return Family::random_regular;
    if (text == "complete-single-negative") return Family::complete_single_negative;
    if (text == "complete-all-negative") return Family::complete_all_negative;
    if (text == "ising-lattice") return Family::ising_lattice;
    if (text == "hypercube") return Family::hypercube;
    throw std::invalid_argument("unknown family '" + text + "'");
}

SignedGraph generate(const FamilySpec& spec) {
    rng::Engine eng(spec.seed);
    std::vector<Edge> edges;
    int n = spec.n;
    switch (spec.family) {
        case Family::gnm: edges = make_gnm(spec.n, spec.m, eng); break;
        case Family::gnp: edges = make_gnp(spec.n, spec.p, eng); break;
        case Family::barabasi_albert:
            edges = make_barabasi_albert(spec.n, spec.attachment, eng);
            break;
        case Family::random_regular:
            edges = make_random_regular(spec.n, spec.degree, eng);
            break;
        case Family::complete_single_negative: {
            require(spec.n >= 2, "a single-negative complete graph needs at least 2 nodes");
            edges = make_complete(spec.n);
            edges.front().sign = -1;
            edges.front().weight = -1.0;
            return SignedGraph(spec.n, std::move(edges), to_string(spec.family));
        }
        case Family::complete_all_negative: {
            require(spec.n >= 0, "node count must be nonnegative");
            edges = make_complete(spec.n);
            for (Edge& e : edges) {
                e.sign = -1;
                e.weight = -1.0;
            }
            return SignedGraph(spec.n, std::move(edges), to_string(spec.family));
        }
        case Family::ising_lattice: {
            edges = make_ising_lattice(spec.dims);
            long long total = 1;
            for (int d : spec.dims) total *= d;
            n = static_cast<int>(total);
            break;
        }
        case Family::hypercube:
            edges = make_hypercube(spec.dimension);
            n = 1 << spec.dimension;
            break;
    }
    assign_signs(edges, spec.signs, eng);
    return SignedGraph(n, std::move(edges), to_string(spec.family));
}

} // namespace sgbal
