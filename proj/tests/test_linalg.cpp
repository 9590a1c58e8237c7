#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "avn/hilbert.hpp"
#include "avn/linalg.hpp"
#include "avn/states.hpp"

using namespace avn;

namespace {

Operator random_int_matrix(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> d(-2, 2);
    Operator m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(d(rng), d(rng));
    return m;
}

std::vector<Complex> random_vector(std::mt19937& rng, std::size_t dim) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Complex> v(dim);
    for (Complex& z : v) z = Complex(d(rng), d(rng));
    return v;
}

}  // namespace

TEST_CASE("tensor products") {
    SECTION("identity factors give the identity") {
        REQUIRE(max_abs_diff(tensor(Operator::identity(2), Operator::identity(2)),
                             Operator::identity(4)) == 0.0);
    }

    SECTION("X (x) X flips both spins") {
        const Operator xx = tensor(pauli_matrix(Pauli::X), pauli_matrix(Pauli::X));
        const StateVector up_up = StateVector::basis(4, 0);
        const std::vector<Complex> out = apply(xx, up_up);
        REQUIRE(std::abs(out[3] - Complex(1.0)) < 1e-15);
        REQUIRE(std::abs(out[0]) + std::abs(out[1]) + std::abs(out[2]) < 1e-15);
    }

    SECTION("nested tensor agrees with the label-built 8x8 operator") {
        const Operator direct = tensor(
            pauli_matrix(Pauli::X), tensor(pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y)));
        REQUIRE(max_abs_diff(direct, build_operator(ObservableLabel::spin("XYY"))) == 0.0);
    }

    SECTION("associativity is exact on integer matrices") {
        std::mt19937 rng(1234);
        for (int iter = 0; iter < 20; ++iter) {
            const Operator a = random_int_matrix(rng, 2);
            const Operator b = random_int_matrix(rng, 3);
            const Operator c = random_int_matrix(rng, 2);
            REQUIRE(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) == 0.0);
        }
    }

    SECTION("bilinearity") {
        std::mt19937 rng(77);
        const Operator a = random_int_matrix(rng, 3);
        const Operator b = random_int_matrix(rng, 3);
        const Operator c = random_int_matrix(rng, 2);
        const Complex alpha(2, -1), beta(-3, 4);
        REQUIRE(max_abs_diff(tensor(alpha * a + beta * b, c),
                             alpha * tensor(a, c) + beta * tensor(b, c)) < 1e-12);
        REQUIRE(max_abs_diff(tensor(c, alpha * a + beta * b),
                             alpha * tensor(c, a) + beta * tensor(c, b)) < 1e-12);
    }

    SECTION("dimension bookkeeping") {
        const Operator t = tensor(Operator::identity(3), Operator::identity(2));
        REQUIRE(t.dim() == 6);
    }
}

TEST_CASE("commutators") {
    const Operator X = pauli_matrix(Pauli::X);
    const Operator Y = pauli_matrix(Pauli::Y);
    const Operator Z = pauli_matrix(Pauli::Z);

    SECTION("[X, X] vanishes") { REQUIRE(commutator(X, X).max_abs() == 0.0); }

    SECTION("[X, Z] = -2iY") {
        REQUIRE(max_abs_diff(commutator(X, Z), Complex(0, -2) * Y) < 1e-15);
    }

    SECTION("antisymmetry") {
        std::mt19937 rng(99);
        for (int iter = 0; iter < 20; ++iter) {
            const Operator a = random_int_matrix(rng, 4);
            const Operator b = random_int_matrix(rng, 4);
            REQUIRE(max_abs_diff(commutator(a, b), -commutator(b, a)) == 0.0);
        }
    }

    SECTION("dimension mismatch is a caller bug") {
        REQUIRE_THROWS_AS(commutator(X, Operator::identity(3)), std::invalid_argument);
    }
}

TEST_CASE("apply") {
    SECTION("identity acts trivially") {
        std::mt19937 rng(7);
        const StateVector v(random_vector(rng, 6));
        const std::vector<Complex> out = apply(Operator::identity(6), v);
        for (std::size_t i = 0; i < 6; ++i) REQUIRE(std::abs(out[i] - v[i]) < 1e-15);
    }

    SECTION("XXX negates the GHZ state") {
        const Operator xxx = build_operator(ObservableLabel::spin("XXX"));
        const StateVector ghz = ghz_spin();
        std::vector<Complex> out = apply(xxx, ghz);
        for (std::size_t i = 0; i < 8; ++i) out[i] += ghz[i];
        REQUIRE(norm2(out) < 1e-10);
    }

    SECTION("Z on the first qubit leaves |uuu> alone") {
        const Operator ziI = build_operator(ObservableLabel::spin("ZII"));
        const StateVector uuu = StateVector::basis(8, 0);
        std::vector<Complex> out = apply(ziI, uuu);
        for (std::size_t i = 0; i < 8; ++i) out[i] -= uuu[i];
        REQUIRE(norm2(out) < 1e-15);
    }

    SECTION("linearity") {
        std::mt19937 rng(21);
        const Operator a = random_int_matrix(rng, 5);
        const std::vector<Complex> u = random_vector(rng, 5);
        const std::vector<Complex> v = random_vector(rng, 5);
        const Complex alpha(0.3, -1.1), beta(-0.7, 0.2);
        std::vector<Complex> combo(5);
        for (std::size_t i = 0; i < 5; ++i) combo[i] = alpha * u[i] + beta * v[i];
        const std::vector<Complex> lhs = avn::apply(a, combo);
        const std::vector<Complex> au = avn::apply(a, u);
        const std::vector<Complex> av = avn::apply(a, v);
        for (std::size_t i = 0; i < 5; ++i)
            REQUIRE(std::abs(lhs[i] - (alpha * au[i] + beta * av[i])) < 1e-12);
    }

    SECTION("dimension mismatch throws") {
        REQUIRE_THROWS_AS(avn::apply(Operator::identity(3), std::vector<Complex>(4)),
                          std::invalid_argument);
    }
}

TEST_CASE("eigenvector tests") {
    SECTION("identity has eigenvalue 1 everywhere") {
        std::mt19937 rng(5);
        const StateVector v(random_vector(rng, 8));
        REQUIRE(is_eigenvector(Operator::identity(8), v, 1.0, 1e-10));
    }

    SECTION("XYY on GHZ has eigenvalue +1, not -1") {
        const Operator xyy = build_operator(ObservableLabel::spin("XYY"));
        const StateVector ghz = ghz_spin();
        REQUIRE(is_eigenvector(xyy, ghz, 1.0, 1e-10));
        REQUIRE_FALSE(is_eigenvector(xyy, ghz, -1.0, 1e-10));
    }
}

TEST_CASE("expectation values") {
    SECTION("identity expectation is 1 on unit vectors") {
        std::mt19937 rng(31);
        const StateVector v(random_vector(rng, 6));
        REQUIRE(std::abs(expectation(Operator::identity(6), v) - 1.0) < 1e-12);
    }

    SECTION("hermitian operators give real expectations") {
        std::mt19937 rng(17);
        for (int iter = 0; iter < 20; ++iter) {
            Operator a = random_int_matrix(rng, 4);
            a = a + a.adjoint();  // hermitize
            REQUIRE(a.is_hermitian());
            const StateVector v(random_vector(rng, 4));
            REQUIRE(std::abs(expectation(a, v).imag()) < 1e-12);
        }
    }

    SECTION("dimension mismatch throws") {
        std::mt19937 rng(3);
        const StateVector v(random_vector(rng, 4));
        REQUIRE_THROWS_AS(expectation(Operator::identity(3), v), std::invalid_argument);
    }
}

TEST_CASE("state vectors normalize on construction") {
    StateVector v(std::vector<Complex>{Complex(3, 0), Complex(0, 4)});
    REQUIRE(std::abs(norm2(v.amplitudes()) - 1.0) < 1e-12);
    REQUIRE(std::abs(v[0] - Complex(0.6)) < 1e-12);
    REQUIRE_THROWS_AS(StateVector(std::vector<Complex>(4)), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector(std::vector<Complex>{}), std::invalid_argument);
}

TEST_CASE("operator construction guards") {
    REQUIRE_THROWS_AS(Operator(0), std::invalid_argument);
    REQUIRE_THROWS_AS(Operator(2, {1, 2, 3}), std::invalid_argument);
}
