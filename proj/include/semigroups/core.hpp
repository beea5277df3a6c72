#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "semigroups/arith.hpp"

namespace semigroups {

// Conventions used throughout:
//   S(a_1,...,a_n) = { x_1 a_1 + ... + x_n a_n : x_i >= 0 }
//   F = conductor: least s such that every integer >= s lies in S
//   C = F - 1    : largest integer not in S (the classical Frobenius number)
//   G = F - 1 + sum(a_i): largest integer not representable with all x_i >= 1
//   genus = number of gaps (non-negative integers missing from S)
// F, C, genus are finite iff gcd(a_1,...,a_n) = 1.

/// Validated generator tuple. Construction sorts ascending and removes
/// duplicates; the coprime flag caches gcd(values) == 1.
class GeneratorTuple {
  public:
    static GeneratorTuple from_values(std::vector<int64_t> values);

    const std::vector<int64_t>& values() const { return values_; }
    int64_t gcd() const { return gcd_; }
    bool coprime() const { return gcd_ == 1; }
    std::size_t size() const { return values_.size(); }
    int64_t smallest() const { return values_.front(); }
    int64_t sum() const;

    /// Throws std::domain_error unless gcd(values) == 1.
    void require_coprime(const char* op) const;

  private:
    GeneratorTuple() = default;
    std::vector<int64_t> values_;
    int64_t gcd_ = 0;
};

/// Coefficients x_1..x_n with sum(x_i * a_i) equal to the represented element.
struct RepresentationWitness {
    std::vector<int64_t> coefficients;

    int64_t evaluate(const std::vector<int64_t>& generators) const;
};

/// Minimal semigroup element per residue class mod the smallest generator.
/// entries[i] is the least s in S with s % base == i; entries[0] == 0.
struct AperyTable {
    int64_t base = 0;
    std::vector<int64_t> entries;

    /// Membership test: s is representable iff s >= entries[s % base].
    bool contains(int64_t s) const {
        if (s < 0) return false;
        return s >= entries[static_cast<std::size_t>(s % base)];
    }
};

struct SemigroupSummary {
    int64_t F = 0;      // conductor
    int64_t C = -1;     // F - 1, largest non-element
    int64_t G = 0;      // F - 1 + sum of generators
    int64_t genus = 0;  // number of gaps
    std::optional<bool> symmetric;  // filled by the symmetry layer

    bool operator==(const SemigroupSummary& o) const {
        return F == o.F && C == o.C && G == o.G && genus == o.genus;
    }
};

/// Sylvester's two-generator formula: F(a1, a2) = (a1 - 1)(a2 - 1).
/// Requires gcd(a1, a2) = 1.
int64_t sylvester_frobenius(int64_t a1, int64_t a2);

/// Two-generator membership in O(log): s in S(b1, b2) iff the minimal
/// x2 with x2*b2 == s (mod b1) satisfies x2*b2 <= s. Requires coprimality.
bool membership_two_gen(int64_t s, int64_t b1, int64_t b2);

/// Same test, returning coefficients (in the caller's argument order)
/// when the element is representable.
std::optional<RepresentationWitness> represent_two_gen(int64_t s, int64_t b1,
                                                       int64_t b2);

/// Apery table of a coprime tuple with respect to its smallest generator,
/// by Dijkstra on the residue graph: node i, edge i -> (i + a_j) mod base
/// of weight a_j.
AperyTable apery_table(const GeneratorTuple& gens);

/// F, C, G and genus from the Apery table:
///   F = max_i(entries[i] - base) + 1 (clamped at 0),
///   genus = sum_i floor(entries[i] / base).
SemigroupSummary frobenius_number(const GeneratorTuple& gens);

/// Sorted list of all gaps (non-representable s with 0 <= s <= C).
std::vector<int64_t> gaps(const GeneratorTuple& gens);

/// Brute-force oracle with the same contract as frobenius_number: sieve
/// representability on [0, M], doubling M until a run of `smallest`
/// consecutive representable values appears; F is the start of that run.
SemigroupSummary sieve_oracle(const GeneratorTuple& gens);

}  // namespace semigroups
