#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilrev/matrix.hpp"
#include "nilrev/tags.hpp"

namespace nilrev {

enum class Feasibility { Feasible, Infeasible };

struct FeasibilityResult {
    Feasibility status;
    std::optional<SignedUnipotent> g;  // present iff Feasible
    long patterns_tried = 0;
    CertLevel level = CertLevel::Algebra;
};

struct OracleOptions {
    // The system has n(n-1)/2 scalar unknowns (x4 after quaternion
    // realification) and up to 2^{n-1} sign patterns; the bound keeps a
    // single call well under a second.
    int dim_limit = 8;
    // Fix the first diagonal sign to +1: g and -g conjugate identically,
    // so half the patterns are redundant. Disable to enumerate all 2^n.
    bool normalize_first_sign = true;
};

// Decides whether some g in the tagged group solves g X g^{-1} = -X, by
// exact linear feasibility of g X + X g = 0 in the strictly-upper entries
// of g, one diagonal sign pattern at a time (Gray-code order from
// all-plus; first hit wins). Independent of the constructive modules.
FeasibilityResult reverser_feasible(const NilpotentUpper& X, GroupTag tag,
                                    const OracleOptions& opts = {});

// Same machinery for the group-level equation g u = u^{-1} g.
FeasibilityResult group_reverser_feasible(const SignedUnipotent& u, GroupTag tag,
                                          const OracleOptions& opts = {});

struct SearchReport {
    Ring ring;
    int n = 0;
    long budget = 0;
    std::uint64_t seed = 0;
    long feasible = 0;
    long infeasible = 0;
    // Matrix body text of every sampled element with no signed reverser:
    // candidates for non-real elements. Expected to stay empty.
    std::vector<std::string> nonreal_candidates;
};

// Samples random elements of U_n^{+-1}(K) and reports any that
// group_reverser_feasible declares irreversible.
SearchReport nonreal_search(Ring ring, int n, long budget, std::uint64_t seed,
                            const OracleOptions& opts = {});

}  // namespace nilrev
