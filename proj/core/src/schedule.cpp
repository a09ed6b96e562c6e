// schedule.cpp — Coupling schedule evaluation

#include "qme/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "qme/errors.hpp"

namespace qme {

CouplingSchedule CouplingSchedule::constant(double value)
{
    CouplingSchedule s;
    s.kind_ = Kind::Constant;
    s.value_ = value;
    return s;
}

CouplingSchedule CouplingSchedule::periodic_sum(std::vector<Harmonic> harmonics)
{
    CouplingSchedule s;
    s.kind_ = Kind::PeriodicSum;
    s.harmonics_ = std::move(harmonics);
    return s;
}

CouplingSchedule CouplingSchedule::tabulated(std::vector<std::pair<double, double>> samples)
{
    if (samples.empty())
        throw ScheduleError("tabulated schedule needs at least one sample");
    std::sort(samples.begin(), samples.end());
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (samples[i].first == samples[i - 1].first)
            throw ScheduleError("tabulated schedule has duplicate time " +
                                std::to_string(samples[i].first));
    CouplingSchedule s;
    s.kind_ = Kind::Tabulated;
    s.samples_ = std::move(samples);
    return s;
}

CouplingSchedule CouplingSchedule::expression(const std::string& formula)
{
    CouplingSchedule s;
    s.kind_ = Kind::Expr;
    s.expr_ = Expression::parse(formula);
    return s;
}

double CouplingSchedule::operator()(double t) const
{
    double value = 0.0;
    switch (kind_) {
    case Kind::Constant:
        value = value_;
        break;
    case Kind::PeriodicSum:
        for (const auto& h : harmonics_)
            value += h.amplitude * std::cos(h.omega * t + h.phase);
        break;
    case Kind::Tabulated: {
        if (t <= samples_.front().first) {
            value = samples_.front().second;
        } else if (t >= samples_.back().first) {
            value = samples_.back().second;
        } else {
            auto hi = std::upper_bound(samples_.begin(), samples_.end(),
                                       std::make_pair(t, std::numeric_limits<double>::infinity()));
            auto lo = hi - 1;
            const double w = (t - lo->first) / (hi->first - lo->first);
            value = (1.0 - w) * lo->second + w * hi->second;
        }
        break;
    }
    case Kind::Expr:
        value = expr_->eval(t);
        break;
    }
    value *= scale_;
    if (!std::isfinite(value))
        throw ScheduleError("schedule evaluated to a non-finite value at t = " +
                            std::to_string(t));
    return value;
}

CouplingSchedule CouplingSchedule::scaled(double factor) const
{
    CouplingSchedule s = *this;
    s.scale_ *= factor;
    return s;
}

double CouplingSchedule::constant_value() const
{
    if (kind_ != Kind::Constant)
        throw ScheduleError("constant_value called on a non-constant schedule");
    return scale_ * value_;
}

const std::string& CouplingSchedule::formula() const
{
    if (kind_ != Kind::Expr)
        throw ScheduleError("formula called on a non-expression schedule");
    return expr_->text();
}

} // namespace qme
