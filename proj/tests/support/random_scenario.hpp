#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "avn/hv.hpp"

// Deterministic random scenario generator for property checks (n <= 12).

namespace testgen {

inline avn::Scenario random_scenario(std::mt19937& rng) {
    std::uniform_int_distribution<int> nsym(1, 12);
    std::uniform_int_distribution<int> ncon(0, 5);
    avn::Scenario s;
    const int n = nsym(rng);
    for (int i = 0; i < n; ++i) s.add_observable("s" + std::to_string(i));

    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    const int m = ncon(rng);
    for (int c = 0; c < m; ++c) {
        std::uniform_int_distribution<int> len(1, std::min(4, n));
        if (coin(rng) == 0) {
            std::vector<std::string> syms;
            const int k = len(rng);
            for (int i = 0; i < k; ++i) syms.push_back(s.observables[pick(rng)]);
            s.add_product(syms, coin(rng) ? 1 : -1);
        } else {
            std::uniform_int_distribution<int> nterms(1, 3);
            const int k = nterms(rng);
            std::vector<std::vector<std::string>> terms;
            for (int t = 0; t < k; ++t) {
                std::vector<std::string> syms;
                const int l = len(rng);
                for (int i = 0; i < l; ++i) syms.push_back(s.observables[pick(rng)]);
                terms.push_back(std::move(syms));
            }
            // Valid targets share the parity of k and lie in [-k, k].
            std::uniform_int_distribution<int> shift(0, k);
            s.add_sum(terms, k - 2 * shift(rng));
        }
    }
    return s;
}

}  // namespace testgen
