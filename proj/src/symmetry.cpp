#include "semigroups/symmetry.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace semigroups {

namespace {

struct Pairing {
    int index;        // 1-based position of the singled-out generator
    int64_t single;   // a_i
    int64_t first;    // a_j
    int64_t second;   // a_k
};

// Pairings in witness search order 3, 1, 2.
std::array<Pairing, 3> pairings(int64_t a1, int64_t a2, int64_t a3) {
    return {Pairing{3, a3, a1, a2}, Pairing{1, a1, a2, a3},
            Pairing{2, a2, a1, a3}};
}

void check_triple(int64_t a1, int64_t a2, int64_t a3, const char* op) {
    if (a1 < 1 || a2 < 1 || a3 < 1)
        throw std::invalid_argument(std::string(op) + ": generators must be positive");
    if (std::gcd(std::gcd(a1, a2), a3) != 1)
        throw std::domain_error(std::string(op) + ": generators are not coprime");
}

bool pairing_holds(const Pairing& p) {
    int64_t d = std::gcd(p.first, p.second);
    return membership_two_gen(p.single, p.first / d, p.second / d);
}

}  // namespace

bool is_symmetric_by_definition(const GeneratorTuple& gens) {
    gens.require_coprime("is_symmetric_by_definition");
    const AperyTable table = apery_table(gens);
    int64_t conductor = 0;
    for (int64_t entry : table.entries)
        conductor = std::max(conductor, entry - table.base + 1);
    const int64_t top_gap = conductor - 1;
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        for (int64_t g = static_cast<int64_t>(i); g < table.entries[i]; g += table.base) {
            if (!table.contains(top_gap - g)) return false;
        }
    }
    return true;
}

std::optional<int> lemma3_witness(int64_t a1, int64_t a2, int64_t a3) {
    check_triple(a1, a2, a3, "lemma3_witness");
    for (const Pairing& p : pairings(a1, a2, a3)) {
        if (pairing_holds(p)) return p.index;
    }
    return std::nullopt;
}

SymmetryVerdict is_symmetric_lemma3(int64_t a1, int64_t a2, int64_t a3) {
    check_triple(a1, a2, a3, "is_symmetric_lemma3");
    SymmetryVerdict v;
    for (const Pairing& p : pairings(a1, a2, a3)) {
        int64_t d = std::gcd(p.first, p.second);
        if (membership_two_gen(p.single, p.first / d, p.second / d)) {
            v.by_lemma3 = true;
            v.witness_index = p.index;
            v.d_pair = d;
            v.reduced_pair = {p.first / d, p.second / d};
            break;
        }
    }
    v.by_definition =
        is_symmetric_by_definition(GeneratorTuple::from_values({a1, a2, a3}));
    return v;
}

int64_t theorem2_frobenius(int64_t a1, int64_t a2, int64_t a3) {
    check_triple(a1, a2, a3, "theorem2_frobenius");
    for (const Pairing& p : pairings(a1, a2, a3)) {
        int64_t d = std::gcd(p.first, p.second);
        if (!membership_two_gen(p.single, p.first / d, p.second / d)) continue;
        // gcd(d, single) = 1 follows from the triple being coprime.
        return checked_add(checked_mul(d, sylvester_frobenius(p.first / d, p.second / d)),
                           sylvester_frobenius(d, p.single));
    }
    throw std::domain_error("theorem2_frobenius: triple is not symmetric");
}

bool notice_inequality_check(int64_t a1, int64_t a2, int64_t a3) {
    check_triple(a1, a2, a3, "notice_inequality_check");
    if (lemma3_witness(a1, a2, a3))
        throw std::domain_error("notice_inequality_check: triple is symmetric");
    const int64_t actual =
        frobenius_number(GeneratorTuple::from_values({a1, a2, a3})).F;
    for (const Pairing& p : pairings(a1, a2, a3)) {
        int64_t d = std::gcd(p.first, p.second);
        int64_t two_sylvester =
            checked_add(checked_mul(d, sylvester_frobenius(p.first / d, p.second / d)),
                        sylvester_frobenius(d, p.single));
        if (actual >= two_sylvester) return false;
    }
    return true;
}

}  // namespace semigroups
