// schedule.hpp — Scalar coupling schedules c(t) for master-equation channels

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qme/expression.hpp"

namespace qme {

// Time-dependent scalar coupling. Four kinds:
//   constant      fixed value
//   periodic-sum  sum of amplitude*cos(omega*t + phase) harmonics
//   tabulated     (time, value) samples, linear interpolation, clamped ends
//   expression    parsed formula in t
// Every schedule carries a scale factor so canonicalization can rescale
// couplings without touching the payload.
class CouplingSchedule {
public:
    enum class Kind { Constant, PeriodicSum, Tabulated, Expr };

    struct Harmonic {
        double amplitude = 0.0;
        double omega = 0.0;
        double phase = 0.0;
    };

    static CouplingSchedule constant(double value);
    static CouplingSchedule periodic_sum(std::vector<Harmonic> harmonics);
    static CouplingSchedule tabulated(std::vector<std::pair<double, double>> samples);
    static CouplingSchedule expression(const std::string& formula);

    // Evaluates scale * payload(t); throws ScheduleError on non-finite values.
    double operator()(double t) const;

    CouplingSchedule scaled(double factor) const;

    Kind kind() const { return kind_; }
    bool is_constant() const { return kind_ == Kind::Constant; }
    double scale() const { return scale_; }

    double constant_value() const;                       // Kind::Constant only
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }
    const std::string& formula() const;                  // Kind::Expr only

private:
    CouplingSchedule() = default;

    Kind kind_ = Kind::Constant;
    double scale_ = 1.0;
    double value_ = 0.0;
    std::vector<Harmonic> harmonics_;
    std::vector<std::pair<double, double>> samples_;
    std::optional<Expression> expr_;
};

} // namespace qme
