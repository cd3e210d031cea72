#pragma once

#include <cstdint>
#include <vector>

#include "quintics/report/claim.hpp"

namespace quintics {

struct HesseOptions {
    std::vector<std::uint32_t> primes{31, 61};
    std::uint64_t seed = 42;
    std::uint32_t witness_bound = 2000;
    int group_law_triples = 500;
};

/// Group-law axioms on E_lambda(F_p), the base points, negation and the Hasse bound
/// for one (p, lambda).
Claims verify_group_law(std::uint32_t p, std::uint32_t lambda, std::uint64_t seed, int triples = 500);

/// Everything in the hesse suite: identities, singular members, group law, the torsion
/// witness and the arithmetic run on it.
Claims verify_hesse(const HesseOptions& options = {});

}  // namespace quintics
