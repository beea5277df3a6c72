#include "semigroups/core.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace semigroups {

GeneratorTuple GeneratorTuple::from_values(std::vector<int64_t> values) {
    if (values.size() < 2)
        throw std::invalid_argument("generator tuple needs at least 2 values");
    for (int64_t v : values) {
        if (v < 1)
            throw std::invalid_argument("generators must be positive");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    GeneratorTuple t;
    t.gcd_ = gcd_all(values);
    t.values_ = std::move(values);
    return t;
}

int64_t GeneratorTuple::sum() const {
    int64_t s = 0;
    for (int64_t v : values_) s = checked_add(s, v);
    return s;
}

void GeneratorTuple::require_coprime(const char* op) const {
    if (!coprime())
        throw std::domain_error(std::string(op) + ": generators are not coprime");
}

int64_t RepresentationWitness::evaluate(const std::vector<int64_t>& generators) const {
    if (coefficients.size() != generators.size())
        throw std::invalid_argument("witness length does not match generators");
    int64_t s = 0;
    for (std::size_t i = 0; i < generators.size(); ++i)
        s = checked_add(s, checked_mul(coefficients[i], generators[i]));
    return s;
}

int64_t sylvester_frobenius(int64_t a1, int64_t a2) {
    if (a1 < 1 || a2 < 1)
        throw std::invalid_argument("sylvester_frobenius: generators must be positive");
    if (std::gcd(a1, a2) != 1)
        throw std::domain_error("sylvester_frobenius: generators are not coprime");
    return checked_mul(a1 - 1, a2 - 1);
}

namespace {

// Minimal x2 >= 0 with x2*b2 == s (mod b1); membership holds iff x2*b2 <= s.
// Assumes b1 <= b2, gcd(b1, b2) = 1, s >= 0. Returns x2.
int64_t minimal_second_coefficient(int64_t s, int64_t b1, int64_t b2) {
    int64_t inv = mod_inverse(b2 % b1, b1);
    return checked_mul(s % b1, inv) % b1;
}

void check_two_gen_args(int64_t s, int64_t b1, int64_t b2) {
    if (b1 < 1 || b2 < 1)
        throw std::invalid_argument("two-generator membership: generators must be positive");
    if (s < 0)
        throw std::invalid_argument("two-generator membership: element must be non-negative");
    if (std::gcd(b1, b2) != 1)
        throw std::domain_error("two-generator membership: generators are not coprime");
}

}  // namespace

bool membership_two_gen(int64_t s, int64_t b1, int64_t b2) {
    check_two_gen_args(s, b1, b2);
    if (b1 > b2) std::swap(b1, b2);
    if (b1 == 1) return true;
    int64_t x2 = minimal_second_coefficient(s, b1, b2);
    return checked_mul(x2, b2) <= s;
}

std::optional<RepresentationWitness> represent_two_gen(int64_t s, int64_t b1,
                                                       int64_t b2) {
    check_two_gen_args(s, b1, b2);
    bool swapped = b1 > b2;
    int64_t lo = swapped ? b2 : b1;
    int64_t hi = swapped ? b1 : b2;
    int64_t x_lo, x_hi;
    if (lo == 1) {
        x_hi = 0;
        x_lo = s;
    } else {
        x_hi = minimal_second_coefficient(s, lo, hi);
        if (checked_mul(x_hi, hi) > s) return std::nullopt;
        x_lo = (s - x_hi * hi) / lo;
    }
    RepresentationWitness w;
    w.coefficients = swapped ? std::vector<int64_t>{x_hi, x_lo}
                             : std::vector<int64_t>{x_lo, x_hi};
    return w;
}

AperyTable apery_table(const GeneratorTuple& gens) {
    gens.require_coprime("apery_table");
    const int64_t base = gens.smallest();
    AperyTable table;
    table.base = base;
    table.entries.assign(static_cast<std::size_t>(base), -1);

    using Node = std::pair<int64_t, int64_t>;  // (element, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
    std::vector<int64_t> dist(static_cast<std::size_t>(base), -1);
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [value, residue] = queue.top();
        queue.pop();
        auto& slot = dist[static_cast<std::size_t>(residue)];
        if (slot != -1) continue;  // already settled with a smaller value
        slot = value;
        for (int64_t g : gens.values()) {
            if (g == base) continue;
            int64_t next = checked_add(value, g);
            int64_t next_residue = next % base;
            if (dist[static_cast<std::size_t>(next_residue)] == -1)
                queue.emplace(next, next_residue);
        }
    }
    table.entries = std::move(dist);
    return table;
}

namespace {

SemigroupSummary summary_from_table(const AperyTable& table,
                                    const GeneratorTuple& gens) {
    SemigroupSummary s;
    int64_t max_shifted = 0;  // F is never negative
    int64_t genus = 0;
    for (int64_t entry : table.entries) {
        max_shifted = std::max(max_shifted, checked_add(entry - table.base, 1));
        genus += entry / table.base;
    }
    s.F = max_shifted;
    s.C = s.F - 1;
    s.G = checked_add(s.C, gens.sum());
    s.genus = genus;
    return s;
}

}  // namespace

SemigroupSummary frobenius_number(const GeneratorTuple& gens) {
    return summary_from_table(apery_table(gens), gens);
}

std::vector<int64_t> gaps(const GeneratorTuple& gens) {
    const AperyTable table = apery_table(gens);
    std::vector<int64_t> out;
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        for (int64_t g = static_cast<int64_t>(i); g < table.entries[i]; g += table.base)
            out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SemigroupSummary sieve_oracle(const GeneratorTuple& gens) {
    gens.require_coprime("sieve_oracle");
    const auto& values = gens.values();
    const int64_t run_needed = gens.smallest();

    int64_t limit = 64;
    for (int64_t v : values) limit = std::max(limit, checked_mul(4, v));
    while (true) {
        const auto n = static_cast<std::size_t>(limit) + 1;
        std::vector<char> representable(n, 0);
        representable[0] = 1;
        for (std::size_t s = 1; s < n; ++s) {
            for (int64_t v : values) {
                if (static_cast<int64_t>(s) >= v && representable[s - v]) {
                    representable[s] = 1;
                    break;
                }
            }
        }
        int64_t run = 0;
        for (std::size_t s = 0; s < n; ++s) {
            run = representable[s] ? run + 1 : 0;
            if (run == run_needed) {
                const int64_t conductor = static_cast<int64_t>(s) - run_needed + 1;
                SemigroupSummary out;
                out.F = conductor;
                out.C = conductor - 1;
                out.G = checked_add(out.C, gens.sum());
                out.genus = 0;
                for (int64_t g = 0; g < conductor; ++g)
                    if (!representable[static_cast<std::size_t>(g)]) ++out.genus;
                return out;
            }
        }
        limit = checked_mul(limit, 2);
    }
}

}  // namespace semigroups
