#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "avn/hilbert.hpp"
#include "avn/linalg.hpp"

// The states under test, plus the exchange-symmetry audit.

namespace avn {

// (|uuu> - |ddd>)/sqrt(2) in the 8-dim spin space.
inline StateVector ghz_spin() {
    std::vector<Complex> v(8);
    v[0] = 1.0;
    v[7] = -1.0;
    return StateVector(std::move(v));
}

// Raw 27-dim mode vector |m1,m2,m3> with h=0, t=1, y=2.
inline std::vector<Complex> mode_basis(int m1, int m2, int m3) {
    std::vector<Complex> v(27);
    v[static_cast<std::size_t>(m1) * 9 + static_cast<std::size_t>(m2) * 3 +
      static_cast<std::size_t>(m3)] = 1.0;
    return v;
}

// Slater determinant of the three occupied modes: the signed sum of all six
// orderings of (h,t,y), coefficients (+,-,-,+,-,+)/sqrt(6) in this term
// order: (h,t,y) (h,y,t) (t,h,y) (t,y,h) (y,t,h) (y,h,t).
inline std::vector<Complex> slater_modes() {
    struct Term {
        int m1, m2, m3;
        double sign;
    };
    static constexpr Term terms[6] = {{0, 1, 2, +1}, {0, 2, 1, -1}, {1, 0, 2, -1},
                                      {1, 2, 0, +1}, {2, 1, 0, -1}, {2, 0, 1, +1}};
    std::vector<Complex> v(27);
    const double c = 1.0 / std::sqrt(6.0);
    for (const Term& t : terms)
        v[static_cast<std::size_t>(t.m1) * 9 + static_cast<std::size_t>(t.m2) * 3 +
          static_cast<std::size_t>(t.m3)] = t.sign * c;
    return v;
}

// Combine an 8-dim spin vector with a 27-dim mode vector into the 216-dim
// per-particle-interleaved ordering: index = sum over particles of
// (spin*3 + mode) in base 6, particle 1 slowest.
inline std::vector<Complex> assemble_spin_mode(const std::vector<Complex>& spin,
                                               const std::vector<Complex>& modes) {
    if (spin.size() != 8 || modes.size() != 27)
        throw std::invalid_argument("assemble_spin_mode: expected dims 8 and 27");
    std::vector<Complex> out(216);
    for (std::size_t s = 0; s < 8; ++s) {
        if (spin[s] == Complex{}) continue;
        const std::size_t s1 = (s >> 2) & 1, s2 = (s >> 1) & 1, s3 = s & 1;
        for (std::size_t m = 0; m < 27; ++m) {
            if (modes[m] == Complex{}) continue;
            const std::size_t m1 = m / 9, m2 = (m / 3) % 3, m3 = m % 3;
            out[(s1 * 3 + m1) * 36 + (s2 * 3 + m2) * 6 + (s3 * 3 + m3)] = spin[s] * modes[m];
        }
    }
    return out;
}

// GHZ spin state with all three particles here: GHZ (x) |h,h,h>, dim 216.
inline StateVector psi_prime() {
    return StateVector(assemble_spin_mode(ghz_spin().amplitudes(), mode_basis(0, 0, 0)));
}

// GHZ spin state with the spatial part antisymmetrized over (h,t,y), dim 216.
inline StateVector psi_tilde() {
    return StateVector(assemble_spin_mode(ghz_spin().amplitudes(), slater_modes()));
}

enum class PermVerdict { PlusOne, MinusOne, Neither };
enum class ExchangeSymmetry { Symmetric, ParitySigned, Neither };

inline std::string_view verdict_name(PermVerdict v) {
    switch (v) {
        case PermVerdict::PlusOne: return "+1";
        case PermVerdict::MinusOne: return "-1";
        case PermVerdict::Neither: return "neither";
    }
    return "?";
}

inline std::string_view exchange_symmetry_name(ExchangeSymmetry s) {
    switch (s) {
        case ExchangeSymmetry::Symmetric: return "symmetric";
        case ExchangeSymmetry::ParitySigned: return "parity-signed";
        case ExchangeSymmetry::Neither: return "neither";
    }
    return "?";
}

struct PermutationSymmetry {
    Permutation perm;
    int parity;
    double residual_plus;   // || P v - v ||
    double residual_minus;  // || P v + v ||
    PermVerdict verdict;
};

// Evidence-carrying classification of a state under the 6 full-particle
// permutation operators.
struct SymmetryReport {
    std::vector<PermutationSymmetry> entries;
    ExchangeSymmetry classification = ExchangeSymmetry::Neither;
    double tol = kEigenTol;
};

// Applies every full-particle permutation operator and classifies v.
// Accepts the 8-dim spin-only space or the 216-dim full space.
inline SymmetryReport symmetry_report(const StateVector& v, double tol = kEigenTol) {
    bool spin_only;
    if (v.dim() == 8)
        spin_only = true;
    else if (v.dim() == 216)
        spin_only = false;
    else
        throw std::invalid_argument("symmetry_report: expected dim 8 or 216");

    SymmetryReport rep;
    rep.tol = tol;
    bool all_plus = true, all_signed = true;
    for (const Permutation& p : Permutation::all(3)) {
        const Operator op = permutation_operator(p, spin_only);
        std::vector<Complex> pv = apply(op, v);
        std::vector<Complex> diff_plus(pv), diff_minus(pv);
        for (std::size_t i = 0; i < pv.size(); ++i) {
            diff_plus[i] -= v[i];
            diff_minus[i] += v[i];
        }
        PermutationSymmetry e{p, p.parity(), norm2(diff_plus), norm2(diff_minus),
                              PermVerdict::Neither};
        if (e.residual_plus < tol)
            e.verdict = PermVerdict::PlusOne;
        else if (e.residual_minus < tol)
            e.verdict = PermVerdict::MinusOne;
        if (e.verdict != PermVerdict::PlusOne) all_plus = false;
        const PermVerdict want =
            e.parity > 0 ? PermVerdict::PlusOne : PermVerdict::MinusOne;
        if (e.verdict != want) all_signed = false;
        rep.entries.push_back(std::move(e));
    }
    if (all_plus)
        rep.classification = ExchangeSymmetry::Symmetric;
    else if (all_signed)
        rep.classification = ExchangeSymmetry::ParitySigned;
    return rep;
}

}  // namespace avn
