#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bmcts {

/// Visit-count dependent coefficient, used for decayed temperatures and for
/// entropy weights. Evaluates to a positive real for every m >= 0.
struct Schedule {
    enum class Kind { constant, inverse_log, inverse_sqrt };

    Kind kind = Kind::constant;
    double init = 1.0;

    double operator()(std::int64_t m) const {
        switch (kind) {
            case Kind::constant:
                return init;
            case Kind::inverse_log:
                return init / std::log(std::exp(1.0) + static_cast<double>(m));
            case Kind::inverse_sqrt:
                return init / std::sqrt(static_cast<double>(m < 1 ? 1 : m));
        }
        return init;
    }

    bool decays_to_zero() const { return kind == Kind::inverse_sqrt; }

    static Schedule constant(double value) { return {Kind::constant, value}; }
    static Schedule inverse_log(double init) { return {Kind::inverse_log, init}; }
    static Schedule inverse_sqrt(double init) { return {Kind::inverse_sqrt, init}; }

    static Schedule parse(const std::string& kind, double init) {
        if (kind == "constant") return constant(init);
        if (kind == "inverse_log") return inverse_log(init);
        if (kind == "inverse_sqrt") return inverse_sqrt(init);
        throw std::invalid_argument("Schedule::parse: unknown kind '" + kind + "'");
    }

    std::string kind_name() const {
        switch (kind) {
            case Kind::constant: return "constant";
            case Kind::inverse_log: return "inverse_log";
            case Kind::inverse_sqrt: return "inverse_sqrt";
        }
        return "constant";
    }
};

}  // namespace bmcts
