#include "oracle_dump.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace bmcts::tools {

std::string format_oracle(const MdpModel& mdp, const ValueTables& tables) {
    std::string out = "# bmcts oracle dump v1\n";
    out += "# env=" + mdp.id();
    switch (tables.flavor()) {
        case ValueFlavor::standard: out += " kind=standard"; break;
        case ValueFlavor::minimax: out += " kind=minimax"; break;
        case ValueFlavor::soft: {
            char buf[48];
            std::snprintf(buf, sizeof(buf), " kind=soft alpha=%.9g", tables.alpha());
            out += buf;
            break;
        }
    }
    out += "\n# columns: state t v q...\n";

    std::vector<const ValueTables::Entry*> sorted;
    sorted.reserve(tables.entries().size());
    for (const auto& e : tables.entries()) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
        return std::tie(a->t, a->state) < std::tie(b->t, b->state);
    });

    char buf[64];
    for (const auto* e : sorted) {
        out += std::to_string(e->state);
        out += ' ';
        out += std::to_string(e->t);
        std::snprintf(buf, sizeof(buf), " %.9g", e->v);
        out += buf;
        for (double q : e->q) {
            std::snprintf(buf, sizeof(buf), " %.9g", q);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::string dump_oracle(const MdpModel& mdp, const std::string& kind, double alpha) {
    if (kind == "standard") return format_oracle(mdp, value_iterate(mdp));
    if (kind == "soft") return format_oracle(mdp, soft_value_iterate(mdp, alpha));
    if (kind == "minimax") return format_oracle(mdp, minimax_solve(mdp));
    throw std::invalid_argument("dump_oracle: kind must be standard, soft or minimax");
}

}  // namespace bmcts::tools
