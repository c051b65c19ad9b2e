#include "bmcts/config.hpp"

#include <stdexcept>

namespace bmcts {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::uct: return "uct";
        case Algorithm::ments: return "ments";
        case Algorithm::bts: return "bts";
        case Algorithm::dents: return "dents";
        case Algorithm::ar_bts: return "ar-bts";
        case Algorithm::ar_dents: return "ar-dents";
        case Algorithm::ar_ments: return "ar-ments";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
    if (name == "uct") return Algorithm::uct;
    if (name == "ments") return Algorithm::ments;
    if (name == "bts") return Algorithm::bts;
    if (name == "dents") return Algorithm::dents;
    if (name == "ar-bts" || name == "ar_bts") return Algorithm::ar_bts;
    if (name == "ar-dents" || name == "ar_dents") return Algorithm::ar_dents;
    if (name == "ar-ments" || name == "ar_ments") return Algorithm::ar_ments;
    return std::nullopt;
}

std::vector<std::string> AlgorithmConfig::validate() const {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("AlgorithmConfig: epsilon must be > 0");
    if (algorithm != Algorithm::uct && !is_ar() && !(alpha > 0.0))
        throw std::invalid_argument("AlgorithmConfig: alpha must be > 0");
    if (uct_c < 0.0)
        throw std::invalid_argument("AlgorithmConfig: uct_c must be >= 0");
    if (is_ar() && !(alpha_schedule.init > 0.0))
        throw std::invalid_argument("AlgorithmConfig: alpha schedule init must be > 0");
    if (alias_rebuild_every < 0)
        throw std::invalid_argument("AlgorithmConfig: alias_rebuild_every must be >= 0");

    std::vector<std::string> warnings;
    if ((algorithm == Algorithm::ar_bts || algorithm == Algorithm::ar_dents) &&
        !alpha_schedule.decays_to_zero()) {
        warnings.push_back(algorithm_name(algorithm) +
                           ": temperature schedule does not decay to zero; "
                           "recommendations are not guaranteed to converge to the optimal action");
    }
    return warnings;
}

}  // namespace bmcts
