#pragma once

#include "kercok/io.hpp"
#include "kercok/repquiver.hpp"
#include "kercok/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kercok {

/// Outcome of one property suite. Case i always draws from
/// Rng(child_seed(seed, i)), so results do not depend on evaluation order.
struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> witnesses; ///< first failing cases, capped
    std::map<std::string, long long> counters;

    bool ok() const { return failures == 0; }
};

inline constexpr std::size_t max_witnesses = 10;

/// Suite names in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite. Without a ring, suites that admit several rings cycle
/// through INT, RAT, FP(2), FP(97) by case index. Throws InputError for an
/// unknown suite or a ring the suite cannot use.
SuiteResult run_suite(const std::string& name, long long cases, std::uint64_t seed,
                      std::optional<RingTag> ring = std::nullopt);

/// Every chain of three non-isomorphisms between the indecomposables of the
/// A2 quiver over F2 (n = 2); one case per chain.
SuiteResult harada_a2_sweep();

/// Random chains of 2^n − 1 non-isomorphisms between indecomposables of
/// length at most n; each must compose to zero and meet every length bound.
SuiteResult harada_random_chains(const Quiver& q, const PrimeField& field, int n, long long cases, std::uint64_t seed);

Json suite_to_json(const SuiteResult& r);

} // namespace kercok
