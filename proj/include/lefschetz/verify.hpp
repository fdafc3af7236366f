#ifndef LEFSCHETZ_VERIFY_HPP
#define LEFSCHETZ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/document.hpp"

namespace lefschetz {

struct CheckResult {
    std::string name;
    bool holds;
    std::string detail;
};

struct VerifyOptions {
    /// Subcomplex pairs drawn per evaluator when the lattice is too large to enumerate.
    std::size_t sampled_pairs = 1000;
    std::uint64_t seed = 20130801;
    /// Enumerate all subcomplex pairs when the refined complex has at most this many simplices.
    std::size_t exhaustive_limit = 12;
};

/**
 * Runs every property check that applies to a loaded problem:
 * ∂∘∂ = 0, the subdivision chain-map law, the chain-map law of f, the
 * valuation law for χ and for each Lefschetz evaluator, the Hopf trace
 * identity on the whole complex, four-way agreement on the selected pair,
 * fixed-point soundness and, for Hopf simplicial maps, the Hopf axiom.
 *
 * A problem without a map on an identity subdivision is checked with the
 * identity map.
 */
std::vector<CheckResult> verify_problem(const Problem& problem, const VerifyOptions& options = {});

}  // namespace lefschetz

#endif
