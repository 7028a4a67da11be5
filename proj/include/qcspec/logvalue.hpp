#pragma once

// Positive reals carried as log10 magnitudes. The quasidisc constants contain
// exp{K^2 pi^2 (2+pi^2)^2 / (4 log 3)} which overflows double, so every
// product on that path stays in log space.

#include <cmath>
#include <stdexcept>

namespace qcspec {

struct LogValue {
    double log10 = 0.0;

    static LogValue from_linear(double x) {
        if (!(x > 0.0)) throw std::domain_error("LogValue: requires a positive value");
        return {std::log10(x)};
    }
    static LogValue from_log10(double l) { return {l}; }

    bool representable() const { return std::abs(log10) < 300.0; }
    double to_linear() const {
        if (!representable())
            throw std::range_error("LogValue: magnitude exceeds double range");
        return std::pow(10.0, log10);
    }

    LogValue operator*(LogValue o) const { return {log10 + o.log10}; }
    LogValue operator/(LogValue o) const { return {log10 - o.log10}; }
    LogValue pow(double e) const { return {log10 * e}; }

    /// 10^a + 10^b by log-sum-exp.
    friend LogValue log_add(LogValue a, LogValue b) {
        const double hi = std::max(a.log10, b.log10);
        const double lo = std::min(a.log10, b.log10);
        return {hi + std::log1p(std::pow(10.0, lo - hi)) / std::log(10.0)};
    }
};

}  // namespace qcspec
