#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace weylcq {

/* Result of a verification sweep.  counterexamples stays empty on success;
 * each entry records the parameters of one failing instance. */
struct Report {
    std::string check;
    std::string type;
    nlohmann::json parameters = nlohmann::json::object();
    bool passed = true;
    std::vector<nlohmann::json> counterexamples;

    void fail(nlohmann::json detail) {
        passed = false;
        counterexamples.push_back(std::move(detail));
    }
    nlohmann::json to_json() const {
        return {{"check", check},
                {"type", type},
                {"parameters", parameters},
                {"passed", passed},
                {"counterexamples", counterexamples}};
    }
};

}  // namespace weylcq
