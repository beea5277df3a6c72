#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semigroups/core.hpp"

namespace semigroups {

// Exhaustive verifiers for the exact identities, each checked against the
// Apery-based engine over bounded ranges:
//   theorem1          d = gcd(a_1,...,a_{n-1}, a_n - 1) divides F,
//                     checked for every rotation of the tuple
//   johnson           G(a1,a2,a3) = d12 * G(a1/d12, a2/d12, a3)
//   brauer_shockley   C(a_1,...,a_n) = d C(a_1/d,...,a_{n-1}/d, a_n) + (d-1) a_n
//                     with d = gcd(a_1,...,a_{n-1})
//   theorem2          two-Sylvester conductor formula on symmetric triples
//   notice            strict two-Sylvester upper bound on non-symmetric triples
//   lemma3_equivalence  criterion verdict == definition verdict

enum class Identity {
    theorem1,
    johnson,
    brauer_shockley,
    theorem2,
    notice,
    lemma3_equivalence,
};

Identity identity_from_string(const std::string& name);
std::string identity_to_string(Identity id);

struct VerificationReport {
    Identity identity = Identity::theorem1;
    int64_t range_bound = 0;
    int64_t tuples_checked = 0;
    std::vector<std::vector<int64_t>> failures;  // sorted, empty on success

    bool success() const { return failures.empty(); }
};

/// Divisibility of F for every rotation of the tuple, each also re-derived
/// through the reduction chain F = d(C(a_1/d,...,a_{n-1}/d, a_n) + a_n) - (a_n - 1).
bool verify_theorem1(const GeneratorTuple& gens);

bool verify_johnson(int64_t a1, int64_t a2, int64_t a3);

bool verify_brauer_shockley(const GeneratorTuple& gens);

/// Enumerates coprime tuples with max generator <= bound in lexicographic
/// order (pairs and triples for theorem1, triples otherwise) and applies the
/// per-tuple verifier. tuples_checked counts tuples the identity applies to.
VerificationReport run_exhaustive(Identity identity, int64_t bound);

/// Enumeration helpers shared with the test suites. The callback receives
/// strictly increasing coprime tuples, lexicographically ordered.
void for_each_coprime_pair(int64_t bound,
                           const std::function<void(int64_t, int64_t)>& fn);
void for_each_coprime_triple(
    int64_t bound, const std::function<void(int64_t, int64_t, int64_t)>& fn);

}  // namespace semigroups
