#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Exhaustive search for noncontextual +-1 value assignments. Everything here
// is exact integer arithmetic; no floating point enters the engine.

namespace avn {

inline constexpr std::size_t kMaxObservables = 20;
inline constexpr std::size_t kDefaultWitnessCap = 32;

// Thrown when a scenario exceeds the enumeration cap (search is 2^n).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Constraint {
    enum class Kind { ProductEquals, SumOfProductsEquals };
    Kind kind = Kind::ProductEquals;
    std::vector<std::vector<int>> terms;  // symbol indices; ProductEquals has exactly one list
    int target = 1;
};

// Named abstract observables plus product/sum-of-products constraints.
struct Scenario {
    std::vector<std::string> observables;
    std::vector<Constraint> constraints;

    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < observables.size(); ++i)
            if (observables[i] == name) return static_cast<int>(i);
        return -1;
    }

    int add_observable(std::string name) {
        if (index_of(name) >= 0)
            throw std::invalid_argument("Scenario: duplicate observable " + name);
        observables.push_back(std::move(name));
        return static_cast<int>(observables.size() - 1);
    }

    void add_product(const std::vector<std::string>& symbols, int target) {
        Constraint c;
        c.kind = Constraint::Kind::ProductEquals;
        c.terms.push_back(resolve(symbols));
        c.target = target;
        constraints.push_back(std::move(c));
    }

    void add_sum(const std::vector<std::vector<std::string>>& term_lists, int target) {
        Constraint c;
        c.kind = Constraint::Kind::SumOfProductsEquals;
        for (const auto& t : term_lists) c.terms.push_back(resolve(t));
        c.target = target;
        constraints.push_back(std::move(c));
    }

    // Enforces the type invariants; throws on violation.
    void validate() const {
        if (observables.size() > kMaxObservables)
            throw capacity_error("Scenario: " + std::to_string(observables.size()) +
                                 " observables exceed the cap of " +
                                 std::to_string(kMaxObservables));
        const int n = static_cast<int>(observables.size());
        for (const Constraint& c : constraints) {
            if (c.terms.empty())
                throw std::invalid_argument("Scenario: constraint with no terms");
            if (c.kind == Constraint::Kind::ProductEquals && c.terms.size() != 1)
                throw std::invalid_argument("Scenario: product constraint needs exactly one term");
            for (const auto& t : c.terms) {
                if (t.empty()) throw std::invalid_argument("Scenario: empty symbol list");
                for (int s : t)
                    if (s < 0 || s >= n)
                        throw std::invalid_argument("Scenario: symbol index out of range");
            }
            if (c.kind == Constraint::Kind::ProductEquals) {
                if (c.target != 1 && c.target != -1)
                    throw std::invalid_argument("Scenario: product target must be +1 or -1");
            } else {
                const int k = static_cast<int>(c.terms.size());
                if (c.target < -k || c.target > k || ((k - c.target) % 2) != 0)
                    throw std::invalid_argument(
                        "Scenario: sum target must lie in [-k, k] with the parity of k");
            }
        }
    }

private:
    std::vector<int> resolve(const std::vector<std::string>& symbols) const {
        std::vector<int> out;
        for (const std::string& s : symbols) {
            const int i = index_of(s);
            if (i < 0) throw std::invalid_argument("Scenario: unknown observable " + s);
            out.push_back(i);
        }
        return out;
    }
};

// Value per observable, declared order, entries in {-1, +1}.
using Assignment = std::vector<std::int8_t>;

inline bool satisfies(const Constraint& c, const Assignment& values) {
    int sum = 0;
    for (const auto& t : c.terms) {
        int p = 1;
        for (int s : t) p *= values[static_cast<std::size_t>(s)];
        if (c.kind == Constraint::Kind::ProductEquals) return p == c.target;
        sum += p;
    }
    return sum == c.target;
}

inline bool satisfies(const Scenario& s, const Assignment& values) {
    for (const Constraint& c : s.constraints)
        if (!satisfies(c, values)) return false;
    return true;
}

struct SearchResult {
    bool satisfiable = false;
    std::uint64_t count = 0;           // exact, over all 2^n assignments
    std::uint64_t total = 0;           // 2^n
    std::vector<Assignment> witnesses;  // first `cap` in lexicographic order
};

// Exact exhaustive count. Witnesses come out in lexicographic order over the
// declared symbol order with -1 < +1; the count is always complete even when
// the stored witnesses are capped.
inline SearchResult search(const Scenario& s, std::size_t witness_cap = kDefaultWitnessCap) {
    s.validate();
    const std::size_t n = s.observables.size();
    SearchResult res;
    res.total = std::uint64_t{1} << n;
    Assignment values(n, -1);
    for (std::uint64_t mask = 0; mask < res.total; ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            values[i] = ((mask >> (n - 1 - i)) & 1) ? std::int8_t{1} : std::int8_t{-1};
        if (satisfies(s, values)) {
            ++res.count;
            if (res.witnesses.size() < witness_cap) res.witnesses.push_back(values);
        }
    }
    res.satisfiable = res.count > 0;
    return res;
}

// One assignment per context (constraint), each satisfying its own context
// in isolation. Symbols a context does not mention are fixed at +1; the
// mentioned symbols take the lexicographically first satisfying values.
struct ContextualWitness {
    std::vector<Assignment> per_context;
};

inline bool contextual_assignment_valid(const Scenario& s,
                                        const std::vector<Assignment>& per_context) {
    if (per_context.size() != s.constraints.size()) return false;
    for (std::size_t i = 0; i < s.constraints.size(); ++i) {
        if (per_context[i].size() != s.observables.size()) return false;
        for (std::int8_t v : per_context[i])
            if (v != 1 && v != -1) return false;
        if (!satisfies(s.constraints[i], per_context[i])) return false;
    }
    return true;
}

inline std::optional<ContextualWitness> contextual_witness(const Scenario& s) {
    s.validate();
    ContextualWitness w;
    for (const Constraint& c : s.constraints) {
        std::vector<int> used;
        for (const auto& t : c.terms)
            for (int sym : t)
                if (std::find(used.begin(), used.end(), sym) == used.end()) used.push_back(sym);
        std::sort(used.begin(), used.end());

        Assignment values(s.observables.size(), 1);
        bool found = false;
        const std::uint64_t combos = std::uint64_t{1} << used.size();
        for (std::uint64_t mask = 0; mask < combos && !found; ++mask) {
            for (std::size_t i = 0; i < used.size(); ++i)
                values[static_cast<std::size_t>(used[i])] =
                    ((mask >> (used.size() - 1 - i)) & 1) ? std::int8_t{1} : std::int8_t{-1};
            found = satisfies(c, values);
        }
        if (!found) return std::nullopt;
        w.per_context.push_back(values);
    }
    return w;
}

// The 3x3 two-qubit table: 9 named observables, row and column product
// constraints, last column -1.
inline Scenario mermin_square_scenario() {
    Scenario s;
    const char* names[3][3] = {{"IX", "XI", "XX"}, {"ZI", "IZ", "ZZ"}, {"ZX", "XZ", "YY"}};
    for (const auto& row : names)
        for (const char* n : row) s.add_observable(n);
    for (int r = 0; r < 3; ++r)
        s.add_product({names[r][0], names[r][1], names[r][2]}, 1);
    for (int col = 0; col < 3; ++col)
        s.add_product({names[0][col], names[1][col], names[2][col]}, col == 2 ? -1 : 1);
    return s;
}

}  // namespace avn
