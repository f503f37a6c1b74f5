#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgbal/signed_graph.hpp"

namespace sgbal {

enum class Family {
    gnm,                      // uniform graph with exactly m edges
    gnp,                      // each pair present independently with probability p
    barabasi_albert,          // preferential attachment, `attachment` edges per node
    random_regular,           // uniform-ish d-regular via the configuration model
    complete_single_negative, // K_n with exactly one negative edge
    complete_all_negative,    // K_n with every edge negative
    ising_lattice,            // open-boundary grid with the given side lengths
    hypercube                 // d-dimensional cube, n = 2^d
};

std::string to_string(Family f);
// Accepts the hyphenated names listed next to the enumerators above.
Family family_from_string(const std::string& text);

// How the random families pick negative edges.  The complete families carry
// their own fixed sign pattern and ignore this.
struct SignAssignment {
    enum class Mode {
        exact_fraction, // exactly floor(value * m) negatives, placed uniformly
        independent     // each edge negative independently with probability value
    };
    Mode mode = Mode::exact_fraction;
    double value = 0.0; // fraction or probability, in [0, 1]
};

struct FamilySpec {
    Family family = Family::gnm;
    int n = 0;             // nodes (gnm, gnp, barabasi-albert, random-regular, complete-*)
    long long m = 0;       // edges (gnm)
    double p = 0.0;        // edge probability (gnp)
    int attachment = 1;    // edges added per new node (barabasi-albert)
    int degree = 0;        // node degree (random-regular)
    std::vector<int> dims; // side lengths (ising-lattice)
    int dimension = 0;     // cube dimension (hypercube)
    SignAssignment signs;
    std::uint64_t seed = 0;
};

// Builds the requested graph; throws std::invalid_argument on infeasible
// parameters (m > n(n-1)/2, odd n*degree, probabilities outside [0,1], ...).
// Deterministic in (spec, seed).
SignedGraph generate(const FamilySpec& spec);

} // namespace sgbal
