#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

// Dense complex matrix/vector engine. Dimensions in this project stay tiny
// (2, 3, 4, 6, 8, 27, 36, 216), so everything is a plain dense array and all
// products are naive loops.

namespace avn {

using Complex = std::complex<double>;

inline constexpr double kEigenTol = 1e-10;  // eigenvalue / expectation checks
inline constexpr double kExactTol = 1e-12;  // matrix identities, normalization

// Dense square complex matrix, row-major.
class Operator {
public:
    Operator() = default;

    explicit Operator(std::size_t dim) : dim_(dim), a_(dim * dim) {
        if (dim == 0) throw std::invalid_argument("Operator: dim must be positive");
    }

    Operator(std::size_t dim, std::initializer_list<Complex> entries)
        : dim_(dim), a_(entries) {
        if (dim == 0) throw std::invalid_argument("Operator: dim must be positive");
        if (a_.size() != dim * dim)
            throw std::invalid_argument("Operator: entry count does not match dim^2");
    }

    static Operator identity(std::size_t dim) {
        Operator m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static Operator zero(std::size_t dim) { return Operator(dim); }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const { return a_; }

    Operator adjoint() const {
        Operator m(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    double max_abs() const {
        double m = 0.0;
        for (const Complex& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const Complex& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    bool is_hermitian(double tol = kExactTol) const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;
};

namespace detail {
inline void require_same_dim(const Operator& a, const Operator& b, const char* what) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}
}  // namespace detail

inline Operator operator+(const Operator& a, const Operator& b) {
    detail::require_same_dim(a, b, "operator+");
    Operator c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

inline Operator operator-(const Operator& a, const Operator& b) {
    detail::require_same_dim(a, b, "operator-");
    Operator c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

inline Operator operator-(const Operator& a) {
    Operator c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = -a(i, j);
    return c;
}

inline Operator operator*(const Complex& s, const Operator& a) {
    Operator c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
    return c;
}

inline Operator operator*(const Operator& a, const Complex& s) { return s * a; }

inline Operator operator*(const Operator& a, const Operator& b) {
    detail::require_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    Operator c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

// Kronecker product; dim = a.dim * b.dim.
inline Operator tensor(const Operator& a, const Operator& b) {
    const std::size_t da = a.dim(), db = b.dim();
    Operator c(da * db);
    for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t j1 = 0; j1 < da; ++j1) {
            const Complex v = a(i1, j1);
            if (v == Complex{}) continue;
            for (std::size_t i2 = 0; i2 < db; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2)
                    c(i1 * db + i2, j1 * db + j2) = v * b(i2, j2);
        }
    return c;
}

inline Operator commutator(const Operator& a, const Operator& b) {
    detail::require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

inline double max_abs_diff(const Operator& a, const Operator& b) {
    detail::require_same_dim(a, b, "max_abs_diff");
    return (a - b).max_abs();
}

inline bool approx_equal(const Operator& a, const Operator& b, double tol = kExactTol) {
    return max_abs_diff(a, b) < tol;
}

// ---- vectors ----

inline double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

inline Complex inner(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("inner: dimension mismatch");
    Complex s{};
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

// Kronecker product of raw vectors.
inline std::vector<Complex> tensor(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> c(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
    return c;
}

// Unit-norm complex vector. The constructor normalizes.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> amplitudes) : a_(std::move(amplitudes)) {
        if (a_.empty()) throw std::invalid_argument("StateVector: empty amplitude vector");
        const double n = norm2(a_);
        if (n < 1e-150) throw std::invalid_argument("StateVector: cannot normalize zero vector");
        for (Complex& z : a_) z /= n;
    }

    static StateVector basis(std::size_t dim, std::size_t index) {
        std::vector<Complex> v(dim);
        v.at(index) = 1.0;
        return StateVector(std::move(v));
    }

    std::size_t dim() const { return a_.size(); }
    const Complex& operator[](std::size_t i) const { return a_[i]; }
    const std::vector<Complex>& amplitudes() const { return a_; }

private:
    std::vector<Complex> a_;
};

// Matrix-vector product. The result is deliberately not renormalized:
// callers test eigen-relations on it.
inline std::vector<Complex> apply(const Operator& a, const std::vector<Complex>& v) {
    if (a.dim() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Complex> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Complex s{};
        for (std::size_t j = 0; j < a.dim(); ++j) s += a(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

inline std::vector<Complex> apply(const Operator& a, const StateVector& v) {
    return apply(a, v.amplitudes());
}

// || a.v - lambda.v ||_2
inline double eigen_residual(const Operator& a, const StateVector& v, const Complex& lambda) {
    std::vector<Complex> av = apply(a, v);
    for (std::size_t i = 0; i < av.size(); ++i) av[i] -= lambda * v[i];
    return norm2(av);
}

inline bool is_eigenvector(const Operator& a, const StateVector& v, const Complex& lambda,
                           double tol = kEigenTol) {
    return eigen_residual(a, v, lambda) < tol;
}

// <v|a|v>
inline Complex expectation(const Operator& a, const StateVector& v) {
    return inner(v.amplitudes(), apply(a, v));
}

}  // namespace avn
