#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "avn/hilbert.hpp"
#include "avn/linalg.hpp"

// Symmetrization of labeled operators over particle permutations, using the
// distinct-term convention: the matrix is the plain sum over the orbit of the
// label, with no division by the orbit size. sym(XYY) = XYY + YXY + YYX has
// eigenvalue +3 on the GHZ state, not +1.

namespace avn {

// Distinct permutations of the label's factor list, in first-encounter order
// over lexicographically enumerated permutations (deterministic).
inline std::vector<ObservableLabel> label_orbit(const ObservableLabel& label) {
    std::vector<ObservableLabel> orbit;
    for (const Permutation& p : Permutation::all(static_cast<int>(label.particles()))) {
        ObservableLabel t = permute_label(label, p);
        if (std::find(orbit.begin(), orbit.end(), t) == orbit.end()) orbit.push_back(std::move(t));
    }
    return orbit;
}

inline std::size_t orbit_size(const ObservableLabel& label) { return label_orbit(label).size(); }

struct SymmetrizedOperator {
    ObservableLabel source;
    std::vector<ObservableLabel> terms;  // the orbit
    Operator matrix;                     // sum over the orbit

    // Orbit-average variant; every check in this project uses the plain sum.
    Operator averaged() const {
        return Complex(1.0 / static_cast<double>(terms.size())) * matrix;
    }

    std::string str() const {
        std::string s = "sym(" + source.str() + ")";
        return s;
    }
};

inline SymmetrizedOperator symmetrize(const ObservableLabel& label) {
    SymmetrizedOperator out{label, label_orbit(label), Operator(label.dim())};
    for (const ObservableLabel& t : out.terms) out.matrix = out.matrix + build_operator(t);
    return out;
}

}  // namespace avn
