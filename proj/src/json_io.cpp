#include "schurcalc/json_io.hpp"

#include <limits>

namespace schurcalc {

nlohmann::json count_json(Count value) {
    if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
        return static_cast<long long>(value);
    return count_to_string(value);
}

nlohmann::json to_json(const Partition& lambda) {
    return nlohmann::json(lambda.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("partition JSON must be an array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("partition JSON must be an array of integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

nlohmann::json to_json(const GradedObject& x) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [degree, mult] : x.dims()) out[std::to_string(degree)] = count_json(mult);
    return out;
}

nlohmann::json to_json(const SchurExpansion& expansion) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [lambda, mult] : expansion.terms())
        out.push_back(nlohmann::json{{"lambda", to_json(lambda)}, {"multiplicity", mult}});
    return out;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json out{{"suite", report.suite},
                       {"checked", report.checked},
                       {"passed", report.passed},
                       {"counterexamples", report.counterexamples}};
    if (!report.details.empty()) out["details"] = report.details;
    return out;
}

nlohmann::json to_json(const CharacterTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < table.labels().size(); ++i) {
        nlohmann::json values = nlohmann::json::object();
        for (size_t j = 0; j < table.labels().size(); ++j)
            values[table.labels()[j].to_string()] = table.value(i, j);
        rows.push_back(nlohmann::json{{"lambda", to_json(table.labels()[i])}, {"values", values}});
    }
    return nlohmann::json{{"n", table.n()}, {"rows", rows}};
}

nlohmann::json to_json(const IdealTruncation& s) {
    nlohmann::json members = nlohmann::json::array();
    for (const Partition& lambda : s.sorted_members()) members.push_back(to_json(lambda));
    return nlohmann::json{{"max_size", s.max_size()}, {"members", members}};
}

nlohmann::json to_json(const Classification& c) {
    switch (c.kind) {
        case Classification::Kind::Zero:
            return nlohmann::json{{"result", "zero"}};
        case Classification::Kind::Prime:
            return nlohmann::json{{"result", "prime"}, {"p", c.label.p}, {"q", c.label.q}};
        case Classification::Kind::NotPrime: {
            nlohmann::json out{{"result", "not_prime"}};
            if (c.witness)
                out["witness"] = nlohmann::json{{"mu", to_json(c.witness->mu)}, {"nu", to_json(c.witness->nu)}};
            return out;
        }
    }
    throw std::logic_error("unreachable classification kind");
}

}  // namespace schurcalc
