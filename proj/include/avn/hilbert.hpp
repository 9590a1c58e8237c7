#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "avn/linalg.hpp"

// Physical Hilbert spaces. A single particle is spin (dim 2) x spatial mode
// (dim 3, basis Here/There/Yonder); the spin index varies slower than the
// mode index within each particle, and particle 1 is the slowest factor
// overall. Spin-only constructions drop the mode factor (dim 2 per particle).

namespace avn {

enum class Pauli { I, X, Y, Z };
enum class Region { Any, Here, There, Yonder };

inline char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

inline Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default: throw std::invalid_argument(std::string("unknown Pauli letter: ") + c);
    }
}

inline char region_char(Region r) {
    switch (r) {
        case Region::Any: return '*';
        case Region::Here: return 'h';
        case Region::There: return 't';
        case Region::Yonder: return 'y';
    }
    return '?';
}

inline const Operator& pauli_matrix(Pauli p) {
    static const Operator mI = Operator::identity(2);
    static const Operator mX(2, {0, 1, 1, 0});
    static const Operator mY(2, {0, Complex(0, -1), Complex(0, 1), 0});
    static const Operator mZ(2, {1, 0, 0, -1});
    switch (p) {
        case Pauli::I: return mI;
        case Pauli::X: return mX;
        case Pauli::Y: return mY;
        case Pauli::Z: return mZ;
    }
    throw std::logic_error("pauli_matrix: bad enum");
}

// Rank-1 projector onto the mode basis vector; Region::Any gives the 3x3 identity.
inline const Operator& region_projector(Region r) {
    static const Operator any = Operator::identity(3);
    static const Operator h(3, {1, 0, 0, 0, 0, 0, 0, 0, 0});
    static const Operator t(3, {0, 0, 0, 0, 1, 0, 0, 0, 0});
    static const Operator y(3, {0, 0, 0, 0, 0, 0, 0, 0, 1});
    switch (r) {
        case Region::Any: return any;
        case Region::Here: return h;
        case Region::There: return t;
        case Region::Yonder: return y;
    }
    throw std::logic_error("region_projector: bad enum");
}

// One per-particle factor of a labeled observable, e.g. X_h = X (x) Pi_h.
struct FactorSpec {
    Pauli pauli = Pauli::I;
    Region region = Region::Any;
    bool operator==(const FactorSpec&) const = default;
};

// Symbolic product observable over the particles. spin_only selects the
// 2^n spin space instead of the 6^n full space; spin-only labels must not
// carry region tags.
struct ObservableLabel {
    std::vector<FactorSpec> factors;
    bool spin_only = false;

    bool operator==(const ObservableLabel&) const = default;

    std::size_t particles() const { return factors.size(); }

    std::size_t dim() const {
        std::size_t d = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) d *= spin_only ? 2 : 6;
        return d;
    }

    // Spin-only label from a Pauli string, e.g. "XYY" or "IX".
    static ObservableLabel spin(std::string_view paulis) {
        ObservableLabel l;
        l.spin_only = true;
        for (char c : paulis) l.factors.push_back({pauli_from_char(c), Region::Any});
        return l;
    }

    // Full-space label with every region left unrestricted.
    static ObservableLabel full(std::string_view paulis) {
        ObservableLabel l;
        for (char c : paulis) l.factors.push_back({pauli_from_char(c), Region::Any});
        return l;
    }

    // Positional label: particle i carries its Pauli at region (Here, There,
    // Yonder)[i], e.g. positional("XYY") = X_h Y_t Y_y.
    static ObservableLabel positional(std::string_view paulis) {
        if (paulis.size() != 3)
            throw std::invalid_argument("ObservableLabel::positional: need exactly 3 Paulis");
        static constexpr std::array<Region, 3> order{Region::Here, Region::There, Region::Yonder};
        ObservableLabel l;
        for (std::size_t i = 0; i < 3; ++i)
            l.factors.push_back({pauli_from_char(paulis[i]), order[i]});
        return l;
    }

    static ObservableLabel make(std::string_view paulis, const std::vector<Region>& regions) {
        if (paulis.size() != regions.size())
            throw std::invalid_argument("ObservableLabel::make: length mismatch");
        ObservableLabel l;
        for (std::size_t i = 0; i < paulis.size(); ++i)
            l.factors.push_back({pauli_from_char(paulis[i]), regions[i]});
        return l;
    }

    std::string str() const {
        std::string s;
        for (const FactorSpec& f : factors) {
            s += pauli_char(f.pauli);
            if (!spin_only && f.region != Region::Any) {
                s += '_';
                s += region_char(f.region);
            }
        }
        return s;
    }
};

inline Operator factor_operator(const FactorSpec& f, bool spin_only) {
    if (spin_only) {
        if (f.region != Region::Any)
            throw std::invalid_argument("factor_operator: spin-only factor with a region tag");
        return pauli_matrix(f.pauli);
    }
    return tensor(pauli_matrix(f.pauli), region_projector(f.region));
}

// Tensor product over particles of (Pauli (x) spatial projector-or-identity).
inline Operator build_operator(const ObservableLabel& label) {
    if (label.factors.empty()) throw std::invalid_argument("build_operator: empty label");
    Operator m = factor_operator(label.factors[0], label.spin_only);
    for (std::size_t i = 1; i < label.factors.size(); ++i)
        m = tensor(m, factor_operator(label.factors[i], label.spin_only));
    return m;
}

// Bijection on particle slots {0..n-1}; image[i] is where slot i goes.
class Permutation {
public:
    explicit Permutation(std::vector<int> image) : img_(std::move(image)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    // All n! permutations in lexicographic order of the image vector.
    static std::vector<Permutation> all(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::vector<Permutation> out;
        do {
            out.push_back(Permutation(img));
        } while (std::next_permutation(img.begin(), img.end()));
        return out;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& image() const { return img_; }

    // (this o rhs)(i) = this(rhs(i))
    Permutation compose(const Permutation& rhs) const {
        if (size() != rhs.size()) throw std::invalid_argument("Permutation::compose: size mismatch");
        std::vector<int> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[rhs.img_[i]];
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
        return Permutation(std::move(img));
    }

    // (-1)^(inversion count)
    int parity() const {
        int inv = 0;
        for (std::size_t i = 0; i < img_.size(); ++i)
            for (std::size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(img_[i]);
        }
        s += ')';
        return s;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

// Label with factor slots permuted: slot p(i) receives factor i.
inline ObservableLabel permute_label(const ObservableLabel& label, const Permutation& p) {
    if (static_cast<std::size_t>(p.size()) != label.factors.size())
        throw std::invalid_argument("permute_label: size mismatch");
    ObservableLabel out = label;
    for (std::size_t i = 0; i < label.factors.size(); ++i)
        out.factors[p(static_cast<int>(i))] = label.factors[i];
    return out;
}

namespace detail {

// Big-endian digits of idx in base `radix`, n digits.
inline void to_digits(std::size_t idx, std::size_t radix, std::size_t n, std::size_t* out) {
    for (std::size_t k = n; k-- > 0;) {
        out[k] = idx % radix;
        idx /= radix;
    }
}

inline std::size_t from_digits(const std::size_t* d, std::size_t radix, std::size_t n) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) idx = idx * radix + d[k];
    return idx;
}

}  // namespace detail

// Unitary permuting whole tensor factors (full particles). Single-particle
// dimension is 2 when spin_only, 6 otherwise.
inline Operator permutation_operator(const Permutation& p, bool spin_only) {
    const std::size_t n = static_cast<std::size_t>(p.size());
    const std::size_t d = spin_only ? 2 : 6;
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= d;
    Operator m(dim);
    std::vector<std::size_t> in(n), out(n);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        detail::to_digits(idx, d, n, in.data());
        for (std::size_t k = 0; k < n; ++k) out[p(static_cast<int>(k))] = in[k];
        m(detail::from_digits(out.data(), d, n), idx) = 1.0;
    }
    return m;
}

// 216x216 unitary permuting the three mode factors across particles while
// every spin factor stays with its slot.
inline Operator spatial_permutation_operator(const Permutation& p) {
    if (p.size() != 3)
        throw std::invalid_argument("spatial_permutation_operator: three particles expected");
    Operator m(216);
    std::size_t in[3], spins[3], modes[3], out_modes[3], out[3];
    for (std::size_t idx = 0; idx < 216; ++idx) {
        detail::to_digits(idx, 6, 3, in);
        for (int k = 0; k < 3; ++k) {
            spins[k] = in[k] / 3;
            modes[k] = in[k] % 3;
        }
        for (int k = 0; k < 3; ++k) out_modes[p(k)] = modes[k];
        for (int k = 0; k < 3; ++k) out[k] = spins[k] * 3 + out_modes[k];
        m(detail::from_digits(out, 6, 3), idx) = 1.0;
    }
    return m;
}

}  // namespace avn
