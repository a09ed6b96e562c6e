// test_superoperator.cpp — Vectorization, reshaped generator, propagation

#include <cmath>

#include <doctest.h>

#include "qme/basis.hpp"
#include "qme/errors.hpp"
#include "qme/lyapunov.hpp"
#include "qme/presets.hpp"
#include "qme/superoperator.hpp"
#include "support.hpp"

using namespace qme;
using test::near;

TEST_CASE("reshape stacks rows")
{
    Matrix m(2, 2);
    m << 1, 2, 3, 4;
    Vector v = reshape(m);
    CHECK(v(0) == Complex(1));
    CHECK(v(1) == Complex(2));
    CHECK(v(2) == Complex(3));
    CHECK(v(3) == Complex(4));

    Vector id = reshape(Matrix::Identity(2, 2));
    CHECK(id(0) == Complex(1));
    CHECK(id(1) == Complex(0));
    CHECK(id(2) == Complex(0));
    CHECK(id(3) == Complex(1));
}

TEST_CASE("reshape/unreshape are mutually inverse and norm preserving")
{
    Rng rng(3);
    for (int d : {2, 3, 5}) {
        const Matrix m = ginibre(d, d, rng);
        CHECK(near(unreshape(reshape(m)), m, 0.0));
        CHECK(reshape(m).norm() == doctest::Approx(m.norm()));
    }
    Vector bad(3);
    bad << 1, 2, 3;
    CHECK_THROWS_AS(unreshape(bad), StructuralError);
}

TEST_CASE("reshaped Pauli-channel generator matches the block form")
{
    const double r1 = 0.3, r2 = 0.8, r3 = 0.4;
    const double total = r1 + r2 + r3;
    const GeneratorSpec spec = preset_pauli_channel(r1, r2, r3);
    const Matrix built = build_superoperator(spec, 0.0).matrix;

    const Complex i_unit{0.0, 1.0};
    const Matrix id2 = Matrix::Identity(2, 2);
    Matrix expected(4, 4);
    expected.block(0, 0, 2, 2) = 0.5 * (r3 * pauli(3) - total * id2);
    expected.block(0, 2, 2, 2) = 0.5 * (r1 * pauli(1) + i_unit * r2 * pauli(2));
    expected.block(2, 0, 2, 2) = 0.5 * (r1 * pauli(1) - i_unit * r2 * pauli(2));
    expected.block(2, 2, 2, 2) = 0.5 * (-r3 * pauli(3) - total * id2);
    CHECK(near(built, expected, 1e-14));
}

TEST_CASE("superoperator agrees with apply_generator on a matrix basis")
{
    Rng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const auto spec = test::random_canonical_spec(d, d * d - 1, 2.0, false, rng);
        const Superoperator gen = build_superoperator(spec, 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Matrix e = Matrix::Zero(d, d);
                e(i, j) = 1.0;
                CHECK(near(unreshape(gen.matrix * reshape(e)),
                           apply_generator(spec, 0.0, e), 1e-12));
            }
        CHECK(gen.matrix.trace().real() ==
              doctest::Approx(generator_trace(spec, 0.0)).epsilon(1e-10));
    }
}

TEST_CASE("propagate basics")
{
    SUBCASE("zero generator gives the identity")
    {
        GeneratorSpec spec(2, Matrix::Zero(2, 2), {});
        CHECK(near(propagate(spec, 0.0, 3.0).matrix, Matrix::Identity(4, 4), 1e-14));
    }
    SUBCASE("requires t >= s")
    {
        GeneratorSpec spec(2, Matrix::Zero(2, 2), {});
        CHECK_THROWS_AS(propagate(spec, 1.0, 0.0), StructuralError);
    }
    SUBCASE("static negative-coupling preset: transfer diag(1,1,1,e^{-2t})")
    {
        const GeneratorSpec spec = preset_static_negative();
        for (double t : {0.5, 1.0, 2.0}) {
            const RealMatrix transfer = pauli_transfer_matrix(propagate(spec, 0.0, t));
            RealMatrix expected = RealMatrix::Identity(4, 4);
            expected(3, 3) = std::exp(-2.0 * t);
            CHECK((transfer - expected).cwiseAbs().maxCoeff() <= 1e-10);
        }
    }
    SUBCASE("sign-changing preset: transfer diag(1, e^-t cosh t, ., e^-2t)")
    {
        const GeneratorSpec spec = preset_driven_sign_changing();
        const double t = 0.8;
        const RealMatrix transfer = pauli_transfer_matrix(propagate(spec, 0.0, t));
        RealMatrix expected = RealMatrix::Zero(4, 4);
        expected(0, 0) = 1.0;
        expected(1, 1) = std::exp(-t) * std::cosh(t);
        expected(2, 2) = std::exp(-t) * std::cosh(t);
        expected(3, 3) = std::exp(-2.0 * t);
        CHECK((transfer - expected).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("semigroup composition within 10x step tolerance")
{
    const StepControl ctrl; // tol 1e-10
    SUBCASE("autonomous")
    {
        Rng rng(23);
        const auto spec = test::random_canonical_spec(2, 3, 1.0, false, rng);
        const Matrix direct = propagate(spec, 0.0, 2.0, ctrl).matrix;
        const Matrix composed = propagate(spec, 1.2, 2.0, ctrl).matrix *
                                propagate(spec, 0.0, 1.2, ctrl).matrix;
        CHECK(matrix_norm(direct - composed, NormKind::Two) <= 10.0 * ctrl.tol);
    }
    SUBCASE("driven")
    {
        const GeneratorSpec spec = preset_driven_sign_changing();
        const Matrix direct = propagate(spec, 0.0, 2.0, ctrl).matrix;
        const Matrix composed = propagate(spec, 0.7, 2.0, ctrl).matrix *
                                propagate(spec, 0.0, 0.7, ctrl).matrix;
        CHECK(matrix_norm(direct - composed, NormKind::Two) <= 10.0 * ctrl.tol);
    }
}

TEST_CASE("propagated states stay normalized, self-adjoint and positive")
{
    Rng rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const auto spec = test::random_canonical_spec(d, d * d - 1, 0.4,
                                                      /*nonnegative=*/true, rng);
        const Matrix rho0 = random_density(d, rng);
        Vector v = reshape(rho0);
        for (double t : {1.0, 5.0, 20.0}) {
            const Matrix rho = unreshape(propagate(spec, 0.0, t).matrix * reshape(rho0));
            CHECK(std::abs(rho.trace() - Complex(1.0)) <= 1e-8);
            CHECK(hermiticity_residual(rho) <= 1e-8);
            Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(rho));
            CHECK(eig.eigenvalues()(0) >= -1e-8);
        }
        (void)v;
    }
}

TEST_CASE("step controller failure raises an integration error")
{
    const GeneratorSpec spec = preset_driven_sign_changing();
    StepControl starved;
    starved.max_steps = 2;
    CHECK_THROWS_AS(propagate(spec, 0.0, 50.0, starved), IntegrationError);
}

TEST_CASE("pauli_transfer_matrix of the identity map")
{
    const Superoperator id{3, Matrix::Identity(9, 9)};
    CHECK((pauli_transfer_matrix(id) - RealMatrix::Identity(9, 9))
              .cwiseAbs()
              .maxCoeff() <= 1e-14);
}

TEST_CASE("volume rate")
{
    SUBCASE("Pauli channel: constant integrand")
    {
        const GeneratorSpec spec = preset_pauli_channel(0.2, 0.3, 0.4);
        CHECK(volume_rate(spec, 7.0) == doctest::Approx(-1.8).epsilon(1e-10));
    }
    SUBCASE("no jumps: zero")
    {
        GeneratorSpec spec(2, Matrix::Zero(2, 2), {});
        CHECK(volume_rate(spec, 3.0) == doctest::Approx(0.0));
    }
    SUBCASE("sign-changing preset: -4 + 2 ln cosh(T)/T, equals log det of the flow")
    {
        const GeneratorSpec spec = preset_driven_sign_changing();
        const double T = 5.0;
        const double analytic = -4.0 + 2.0 * std::log(std::cosh(T)) / T;
        const double rate = volume_rate(spec, T);
        CHECK(rate == doctest::Approx(analytic).epsilon(1e-9));
        const double logdet = log_abs_det(propagate(spec, 0.0, T).matrix);
        CHECK(rate == doctest::Approx(logdet / T).epsilon(1e-6));
    }
}

TEST_CASE("log det equals integrated trace for random specs")
{
    Rng rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const auto spec = test::random_canonical_spec(d, 3, 0.3, false, rng);
        const double T = 20.0;
        const double lhs = log_abs_det(propagate(spec, 0.0, T).matrix);
        const double rhs = volume_rate(spec, T) * T;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
    }
}
