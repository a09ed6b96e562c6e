// test_trajectory.cpp — Spectral flow, embedded W, Kossakowski, classical
// propagation

#include <cmath>

#include <doctest.h>

#include "qme/basis.hpp"
#include "qme/errors.hpp"
#include "qme/presets.hpp"
#include "qme/trajectory.hpp"
#include "support.hpp"

using namespace qme;
using test::near;

namespace {

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    return out;
}

} // namespace

TEST_CASE("stationary maximally mixed state")
{
    const GeneratorSpec spec = preset_pauli_channel(0.5, 0.5, 1.0);
    const Matrix rho0 = 0.5 * Matrix::Identity(2, 2);
    const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 2.0, 9));
    for (const auto& pops : traj.populations) {
        CHECK(pops(0) == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(pops(1) == doctest::Approx(0.5).epsilon(1e-10));
    }
}

TEST_CASE("pure dephasing keeps the sigma_3 eigenbasis")
{
    const GeneratorSpec spec = preset_pauli_channel(0.0, 0.0, 1.0);
    const double x0 = 0.6;
    const Matrix rho0 = 0.5 * (Matrix::Identity(2, 2) + x0 * pauli(3));
    const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 3.0, 16));
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        CHECK(traj.populations[k](0) == doctest::Approx(0.8).epsilon(1e-9));
        CHECK(traj.populations[k](1) == doctest::Approx(0.2).epsilon(1e-9));
        // Frames stay the computational projectors.
        const Matrix p0 = traj.frames[k].col(0) * traj.frames[k].col(0).adjoint();
        Matrix e00 = Matrix::Zero(2, 2);
        e00(0, 0) = 1.0;
        CHECK(near(p0, e00, 1e-9));
    }
}

TEST_CASE("sign-changing preset population follows the longitudinal decay")
{
    const GeneratorSpec spec = preset_driven_sign_changing();
    const Matrix rho0 = 0.5 * (Matrix::Identity(2, 2) + pauli(3));
    const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 3.0, 31));
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const double expected = 0.5 * (1.0 + std::exp(-2.0 * traj.times[k]));
        CHECK(traj.populations[k](0) == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("trajectory invariants on random specs")
{
    Rng rng(101);
    for (int trial = 0; trial < 6; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const bool nonneg = trial % 2 == 0;
        const auto spec = test::random_canonical_spec(d, d, 0.8, nonneg, rng);
        const Matrix rho0 = random_density(d, rng);
        const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 4.0, 21));

        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            // Populations sum to one (trace preservation).
            CHECK(traj.populations[k].sum() == doctest::Approx(1.0).epsilon(1e-10));
            // Frames are unitary.
            CHECK(near(traj.frames[k].adjoint() * traj.frames[k],
                       Matrix::Identity(d, d), 1e-10));
            // Eigenpairs reconstruct the state.
            Matrix rebuilt = Matrix::Zero(d, d);
            for (int i = 0; i < d; ++i)
                rebuilt += traj.populations[k](i) * traj.frames[k].col(i) *
                           traj.frames[k].col(i).adjoint();
            CHECK(near(rebuilt, traj.states[k], 1e-8));
            // Schatten-1 norm of the state equals the 1-norm of populations.
            Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitize(traj.states[k]));
            CHECK(eig.eigenvalues().cwiseAbs().sum() ==
                  doctest::Approx(traj.populations[k].cwiseAbs().sum()).epsilon(1e-8));
        }
    }
}

TEST_CASE("population flow solves the embedded classical master equation")
{
    const GeneratorSpec spec = canonicalize(preset_driven_sign_changing());
    Matrix rho0 = 0.5 * Matrix::Identity(2, 2) + 0.15 * pauli(1) + 0.25 * pauli(3);
    const double dt = 0.005;
    const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 1.0, 201));
    for (std::size_t k = 1; k + 1 < traj.times.size(); k += 20) {
        const RealVector numeric =
            (traj.populations[k + 1] - traj.populations[k - 1]) / (2.0 * dt);
        const RealVector flow =
            embedded_w(traj, k).matrix * traj.populations[k];
        CHECK((numeric - flow).cwiseAbs().maxCoeff() <= 5.0 * dt);
    }
}

TEST_CASE("embedded W for the Pauli channel in the sigma_3 basis")
{
    const double r1 = 0.4, r2 = 0.9;
    const GeneratorSpec spec = preset_pauli_channel(r1, r2, 0.6);
    const Matrix rho0 = 0.5 * (Matrix::Identity(2, 2) + 0.5 * pauli(3));
    const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 0.5, 6));
    const double w = 0.5 * (r1 + r2);
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const ClassicalGenerator gen = embedded_w(traj, k);
        CHECK(gen.matrix(0, 1) == doctest::Approx(w).epsilon(1e-9));
        CHECK(gen.matrix(1, 0) == doctest::Approx(w).epsilon(1e-9));
        CHECK(gen.matrix(0, 0) == doctest::Approx(-w).epsilon(1e-9));
        CHECK(gen.matrix(1, 1) == doctest::Approx(-w).epsilon(1e-9));
    }
}

TEST_CASE("embedded W of the zero generator vanishes")
{
    GeneratorSpec spec(2, Matrix::Zero(2, 2), {});
    const Matrix rho0 = 0.5 * (Matrix::Identity(2, 2) + 0.3 * pauli(1));
    const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 1.0, 3));
    CHECK(embedded_w(traj, 1).matrix.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("embedded W properties on random nonnegative-coupling specs")
{
    Rng rng(202);
    for (int trial = 0; trial < 5; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        const auto spec = test::random_canonical_spec(d, d * d - 1, 1.0,
                                                      /*nonnegative=*/true, rng);
        const Matrix rho0 = random_density(d, rng);
        const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 2.0, 9));
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            const RealMatrix w = embedded_w(traj, k).matrix;
            // Columns sum to zero by construction.
            for (int j = 0; j < d; ++j)
                CHECK(std::abs(w.col(j).sum()) <= 1e-12);
            // Nonnegative couplings give nonnegative off-diagonal rates.
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (i != j) CHECK(w(i, j) >= -1e-10);
        }
    }
}

TEST_CASE("kossakowski_check")
{
    SUBCASE("Pauli channel passes on the computational frame")
    {
        const double r1 = 0.3, r2 = 0.7;
        const GeneratorSpec spec = preset_pauli_channel(r1, r2, 0.5);
        const auto report =
            kossakowski_check(spec, 0.0, computational_frame(2));
        CHECK(report.pass);
        CHECK(report.matrix(0, 1) == doctest::Approx(0.5 * (r1 + r2)).epsilon(1e-12));
    }
    SUBCASE("sign-changing preset passes on the computational frame at t > 0")
    {
        const GeneratorSpec spec = preset_driven_sign_changing();
        CHECK(kossakowski_check(spec, 1.5, computational_frame(2)).pass);
        // And on random frames: the semigroup stays positive.
        Rng rng(7);
        for (int s = 0; s < 50; ++s)
            CHECK(kossakowski_check(spec, 1.5, haar_frame(2, rng)).pass);
    }
    SUBCASE("zero generator passes with all zeros")
    {
        GeneratorSpec spec(3, Matrix::Zero(3, 3), {});
        const auto report = kossakowski_check(spec, 0.0, computational_frame(3));
        CHECK(report.pass);
        CHECK(report.matrix.cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("invalid frame is structural")
    {
        const GeneratorSpec spec = preset_pauli_channel(1.0, 0.0, 0.0);
        auto frame = computational_frame(2);
        frame[0](0, 0) = 0.5; // no longer a projector
        CHECK_THROWS_AS(kossakowski_check(spec, 0.0, frame), StructuralError);
    }
}

TEST_CASE("classical_propagate")
{
    SUBCASE("zero generator is the identity")
    {
        RealVector p0(3);
        p0 << 0.2, 0.3, 0.5;
        auto gen = [](double) { return RealMatrix::Zero(3, 3); };
        CHECK((classical_propagate(gen, p0, 2.0) - p0).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("two-state chain relaxes to its stationary vector")
    {
        RealMatrix g(2, 2);
        g << -1.0, 2.0, 1.0, -2.0;
        auto gen = [&g](double) { return g; };
        RealVector p0(2);
        p0 << 1.0, 0.0;
        const RealVector p = classical_propagate(gen, p0, 40.0);
        CHECK(p(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
        CHECK(p(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    }
    SUBCASE("entry sums are preserved and signed vectors contract in 1-norm")
    {
        Rng rng(404);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        for (int trial = 0; trial < 10; ++trial) {
            const int d = 3;
            RealMatrix base(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) base(i, j) = uniform(rng);
            auto gen = [&base, d](double t) {
                RealMatrix w = base * (1.0 + 0.5 * std::sin(t));
                for (int j = 0; j < d; ++j) {
                    w(j, j) = 0.0;
                    w(j, j) = -w.col(j).sum();
                }
                return w;
            };
            RealVector p(d), q(d);
            for (int i = 0; i < d; ++i) {
                p(i) = uniform(rng);
                q(i) = uniform(rng);
            }
            p /= p.sum();
            q /= q.sum();
            const double t = 2.0;
            const RealVector pt = classical_propagate(gen, p, t);
            const RealVector qt = classical_propagate(gen, q, t);
            CHECK(pt.sum() == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(pt.minCoeff() >= -1e-12);
            CHECK((pt - qt).cwiseAbs().sum() <=
                  (p - q).cwiseAbs().sum() + 1e-10);
        }
    }
}

TEST_CASE("trace inequality margins")
{
    SUBCASE("Pauli channel: Tr W = -(r1+r2) and nonnegative margins")
    {
        const double r1 = 0.4, r2 = 0.5, r3 = 0.8;
        const GeneratorSpec spec = preset_pauli_channel(r1, r2, r3);
        const Matrix rho0 = 0.5 * (Matrix::Identity(2, 2) + 0.7 * pauli(3));
        const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 1.0, 5));
        const auto result =
            trace_inequality_check(traj, TraceInequalityKind::TwoPositive);
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
            CHECK(result.trace_w[k] == doctest::Approx(-(r1 + r2)).epsilon(1e-9));
            const double expected = -(r1 + r2) + 0.5 * 2.0 * (r1 + r2 + r3);
            CHECK(result.margins[k] == doctest::Approx(expected).epsilon(1e-9));
            CHECK(result.margins[k] >= -1e-8);
            CHECK(result.trace_w[k] <= 1e-12);
        }
    }
    SUBCASE("zero generator: all margins vanish")
    {
        GeneratorSpec spec(2, Matrix::Zero(2, 2), {});
        const Matrix rho0 = 0.5 * (Matrix::Identity(2, 2) + 0.3 * pauli(2));
        const Trajectory traj = evolve_trajectory(spec, rho0, linspace(0.0, 1.0, 4));
        for (auto kind :
             {TraceInequalityKind::TwoPositive, TraceInequalityKind::Schwarz}) {
            const auto result = trace_inequality_check(traj, kind);
            for (double margin : result.margins)
                CHECK(margin == doctest::Approx(0.0));
        }
    }
    SUBCASE("random nonnegative-coupling specs keep two-positive margins")
    {
        Rng rng(505);
        for (int trial = 0; trial < 5; ++trial) {
            const int d = 2 + static_cast<int>(rng() % 2);
            const auto spec = test::random_canonical_spec(d, d, 1.0, true, rng);
            const Matrix rho0 = random_density(d, rng);
            const Trajectory traj =
                evolve_trajectory(spec, rho0, linspace(0.0, 2.0, 9));
            const auto result =
                trace_inequality_check(traj, TraceInequalityKind::TwoPositive);
            for (double margin : result.margins) CHECK(margin >= -1e-8);
        }
    }
}
