// generator.cpp — Canonical-form generator operations

#include "qme/generator.hpp"

#include <cmath>
#include <utility>

#include "qme/errors.hpp"

namespace qme {

namespace {
const Complex kI{0.0, 1.0};

void require_square(const Matrix& m, int d, const std::string& what)
{
    if (m.rows() != d || m.cols() != d)
        throw StructuralError(what + ": expected " + std::to_string(d) + "x" +
                              std::to_string(d) + ", got " + std::to_string(m.rows()) +
                              "x" + std::to_string(m.cols()));
    if (!m.allFinite())
        throw StructuralError(what + ": non-finite entries");
}

} // namespace

GeneratorSpec::GeneratorSpec(int d, Matrix hamiltonian, std::vector<Jump> jumps,
                             bool canonical_flag)
    : d_(d), hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)),
      canonical_flag_(canonical_flag)
{
    if (d_ < 2) throw StructuralError("GeneratorSpec: dimension must be >= 2");
    require_square(hamiltonian_, d_, "hamiltonian");
    if (jumps_.size() > static_cast<std::size_t>(d_) * d_ - 1)
        throw StructuralError("GeneratorSpec: more than d^2-1 jump channels");
    jump_traces_.reserve(jumps_.size());
    jump_hs_norms2_.reserve(jumps_.size());
    jump_ldag_l_.reserve(jumps_.size());
    for (std::size_t l = 0; l < jumps_.size(); ++l) {
        require_square(jumps_[l].matrix, d_, "jump " + std::to_string(l));
        jump_traces_.push_back(jumps_[l].matrix.trace());
        jump_hs_norms2_.push_back(jumps_[l].matrix.squaredNorm());
        jump_ldag_l_.push_back(jumps_[l].matrix.adjoint() * jumps_[l].matrix);
    }
}

std::vector<double> GeneratorSpec::couplings_at(double t) const
{
    std::vector<double> c;
    c.reserve(jumps_.size());
    for (const auto& jump : jumps_) c.push_back(jump.coupling(t));
    return c;
}

bool GeneratorSpec::time_autonomous() const
{
    for (const auto& jump : jumps_)
        if (!jump.coupling.is_constant()) return false;
    return true;
}

ValidationReport validate_canonical(const GeneratorSpec& spec, double tol)
{
    ValidationReport report;
    const double h_scale = std::max(1.0, max_abs(spec.hamiltonian()));
    const double h_residual = hermiticity_residual(spec.hamiltonian());
    if (h_residual > tol * h_scale)
        report.violations.push_back("H != H^dagger (residual " +
                                    std::to_string(h_residual) + ")");

    const auto& jumps = spec.jumps();
    for (std::size_t l = 0; l < jumps.size(); ++l) {
        const double tr = std::abs(spec.jump_trace(l));
        if (tr > tol * std::max(1.0, std::sqrt(spec.jump_hs_norm2(l))))
            report.violations.push_back("jump " + std::to_string(l) + ": Tr L = " +
                                        std::to_string(tr) + " != 0");
        const double norm2 = spec.jump_hs_norm2(l);
        if (std::abs(norm2 - 1.0) > tol * std::max(1.0, norm2))
            report.violations.push_back("jump " + std::to_string(l) +
                                        ": Tr(L^dag L) = " + std::to_string(norm2) +
                                        " != 1");
    }
    for (std::size_t l = 0; l < jumps.size(); ++l) {
        for (std::size_t k = l + 1; k < jumps.size(); ++k) {
            const double overlap =
                std::abs((jumps[l].matrix.adjoint() * jumps[k].matrix).trace());
            if (overlap > tol)
                report.violations.push_back("jumps " + std::to_string(l) + "," +
                                            std::to_string(k) + ": |Tr(L^dag L)| = " +
                                            std::to_string(overlap) + " != 0");
        }
    }
    return report;
}

GeneratorSpec canonicalize(const GeneratorSpec& spec, double tol)
{
    std::vector<Jump> jumps;
    jumps.reserve(spec.jumps().size());
    for (std::size_t l = 0; l < spec.jumps().size(); ++l) {
        const double norm = std::sqrt(spec.jump_hs_norm2(l));
        if (norm == 0.0)
            throw UnsupportedFormError("canonicalize: jump " + std::to_string(l) +
                                       " is zero");
        if (std::abs(spec.jump_trace(l)) > tol * std::max(1.0, norm))
            throw UnsupportedFormError("canonicalize: jump " + std::to_string(l) +
                                       " is not traceless (Tr L = " +
                                       std::to_string(std::abs(spec.jump_trace(l))) + ")");
        jumps.push_back({spec.jumps()[l].matrix / norm,
                         spec.jumps()[l].coupling.scaled(norm * norm)});
    }
    for (std::size_t l = 0; l < jumps.size(); ++l) {
        for (std::size_t k = l + 1; k < jumps.size(); ++k) {
            const double overlap =
                std::abs((jumps[l].matrix.adjoint() * jumps[k].matrix).trace());
            if (overlap > tol)
                throw UnsupportedFormError(
                    "canonicalize: jumps " + std::to_string(l) + " and " +
                    std::to_string(k) + " are not orthogonal after normalization; "
                    "orthogonalization would mix couplings");
        }
    }
    return GeneratorSpec(spec.dim(), spec.hamiltonian(), std::move(jumps),
                         /*canonical_flag=*/true);
}

Matrix apply_generator(const GeneratorSpec& spec, double t, const Matrix& op)
{
    if (op.rows() != spec.dim() || op.cols() != spec.dim())
        throw StructuralError("apply_generator: operator dimension mismatch");
    const Matrix& h = spec.hamiltonian();
    Matrix out = -kI * (h * op - op * h);
    for (std::size_t l = 0; l < spec.jumps().size(); ++l) {
        const double c = spec.jumps()[l].coupling(t);
        if (c == 0.0) continue;
        const Matrix& jump = spec.jumps()[l].matrix;
        const Matrix& ldl = spec.jump_ldag_l(l);
        out += c * (jump * op * jump.adjoint() - 0.5 * (ldl * op + op * ldl));
    }
    return out;
}

Matrix apply_hs_adjoint(const GeneratorSpec& spec, double t, const Matrix& op)
{
    if (op.rows() != spec.dim() || op.cols() != spec.dim())
        throw StructuralError("apply_hs_adjoint: operator dimension mismatch");
    const Matrix& h = spec.hamiltonian();
    Matrix out = kI * (h * op - op * h);
    for (std::size_t l = 0; l < spec.jumps().size(); ++l) {
        const double c = spec.jumps()[l].coupling(t);
        if (c == 0.0) continue;
        const Matrix& jump = spec.jumps()[l].matrix;
        const Matrix& ldl = spec.jump_ldag_l(l);
        out += c * (jump.adjoint() * op * jump - 0.5 * (ldl * op + op * ldl));
    }
    return out;
}

double generator_trace(const GeneratorSpec& spec, double t)
{
    double trace = 0.0;
    for (std::size_t l = 0; l < spec.jumps().size(); ++l) {
        const double c = spec.jumps()[l].coupling(t);
        trace += c * (std::norm(spec.jump_trace(l)) -
                      spec.dim() * spec.jump_hs_norm2(l));
    }
    return trace;
}

} // namespace qme
