// generator.hpp — Time-dependent master-equation generators in canonical form

#pragma once

#include <string>
#include <vector>

#include "qme/schedule.hpp"
#include "qme/types.hpp"

namespace qme {

inline constexpr double kCanonicalTol = 1e-10;

struct Jump {
    Matrix matrix;
    CouplingSchedule coupling;
};

// Immutable description of the generator
//   L(t)[O] = -i[H, O] + sum_l c_l(t) (L_l O L_l^dag - {L_l^dag L_l, O}/2).
// H and the jump matrices are constant; all time dependence lives in the
// scalar coupling schedules.
class GeneratorSpec {
public:
    GeneratorSpec(int d, Matrix hamiltonian, std::vector<Jump> jumps,
                  bool canonical_flag = false);

    int dim() const { return d_; }
    const Matrix& hamiltonian() const { return hamiltonian_; }
    const std::vector<Jump>& jumps() const { return jumps_; }
    bool canonical_flag() const { return canonical_flag_; }

    std::vector<double> couplings_at(double t) const;
    bool time_autonomous() const;

    // Cached per-jump data used across operations.
    Complex jump_trace(std::size_t l) const { return jump_traces_[l]; }
    double jump_hs_norm2(std::size_t l) const { return jump_hs_norms2_[l]; }
    const Matrix& jump_ldag_l(std::size_t l) const { return jump_ldag_l_[l]; }

private:
    int d_;
    Matrix hamiltonian_;
    std::vector<Jump> jumps_;
    bool canonical_flag_;
    std::vector<Complex> jump_traces_;
    std::vector<double> jump_hs_norms2_;
    std::vector<Matrix> jump_ldag_l_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks H = H^dag, Tr L_l = 0 and Tr(L_l^dag L_k) = delta_lk within tol.
ValidationReport validate_canonical(const GeneratorSpec& spec,
                                    double tol = kCanonicalTol);

// Rescales jumps to unit Hilbert-Schmidt norm, moving the weight into the
// couplings. Rejects non-traceless jumps and sets that stay non-orthogonal
// after normalization (mixing couplings is out of scope).
GeneratorSpec canonicalize(const GeneratorSpec& spec, double tol = kCanonicalTol);

// Action of the generator on an operator at time t.
Matrix apply_generator(const GeneratorSpec& spec, double t, const Matrix& op);

// Hilbert-Schmidt adjoint: Tr(A^dag L[B]) = Tr((L^adj[A])^dag B).
Matrix apply_hs_adjoint(const GeneratorSpec& spec, double t, const Matrix& op);

// Trace of the reshaped generator, computed channel-wise as
// sum_l c_l(t) (|Tr L_l|^2 - d ||L_l||_HS^2); equals -d sum_l c_l(t) for
// canonical specs.
double generator_trace(const GeneratorSpec& spec, double t);

} // namespace qme
