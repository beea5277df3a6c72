#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "semigroups/core.hpp"

namespace semigroups {

// A semigroup is symmetric when s -> C - s maps gaps onto elements:
// for every s < F with s not in S, C - s lies in S. Every two-generator
// semigroup is symmetric. For three generators there is an equivalent
// O(log) criterion: S(a1, a2, a3) is symmetric iff for some i,
//   a_i in S(a_j / d, a_k / d)   with d = gcd(a_j, a_k), {i,j,k} = {1,2,3}.

struct SymmetryVerdict {
    bool by_definition = false;
    bool by_lemma3 = false;
    /// 1-based index of the generator witnessing the criterion, searched in
    /// the order 3, 1, 2 (so a witness in position 3 is preferred).
    std::optional<int> witness_index;
    int64_t d_pair = 0;                        // gcd of the paired generators
    std::pair<int64_t, int64_t> reduced_pair;  // paired generators divided by d_pair
};

/// Gap-reflection test, any number of generators. O(genus) membership
/// queries against the Apery table.
bool is_symmetric_by_definition(const GeneratorTuple& gens);

/// Three-generator criterion; checks all three pairings and records the
/// first witness in the order 3, 1, 2. Also fills by_definition.
SymmetryVerdict is_symmetric_lemma3(int64_t a1, int64_t a2, int64_t a3);

/// Witness-only variant used on hot paths: no definition check, no
/// tuple construction.
std::optional<int> lemma3_witness(int64_t a1, int64_t a2, int64_t a3);

/// Exact conductor of a symmetric coprime triple: with the witness
/// renumbered into position 3 and d = gcd of the remaining pair,
///   F = d * F(b1, b2) + F(d, a3)
/// evaluated with Sylvester's formula twice. Throws if the triple is not
/// symmetric.
int64_t theorem2_frobenius(int64_t a1, int64_t a2, int64_t a3);

/// For a non-symmetric coprime triple, the two-Sylvester expression is a
/// strict upper bound for every pairing choice. Returns true when all
/// three relabelings satisfy the strict inequality.
bool notice_inequality_check(int64_t a1, int64_t a2, int64_t a3);

}  // namespace semigroups
