#pragma once

#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

#include "mars/milp.hpp"
#include "mars/solver.hpp"

namespace mars {

inline constexpr const char* kToolVersion = "0.3.0";

/// One command result. The structured form is the source of truth; the text
/// form is rendered from it so both always agree.
struct Report {
    std::string operation;
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json outcome = nlohmann::ordered_json::object();
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    bool decisive = true;

    nlohmann::ordered_json to_json() const;
    void write_json(std::ostream& out) const;
    void write_text(std::ostream& out) const;
};

nlohmann::ordered_json describe_input(const std::string& source, const Graph& g, const DistanceMatrix& dm);
nlohmann::ordered_json describe_budget(const SolverOptions& options);

nlohmann::ordered_json outcome_json(const SolveOutcome& outcome);
nlohmann::ordered_json kappa_json(const KappaResult& result);
nlohmann::ordered_json anonymity_json(const AnonymityProfile& profile);
nlohmann::ordered_json spectrum_json(const std::map<std::size_t, SolveOutcome>& outcomes);
nlohmann::ordered_json certificate_json(const WitnessCertificate& cert);
nlohmann::ordered_json model_json(const MilpModel& model);

// Optimal and InfeasibleProven are decisive; other statuses are not.
bool is_decisive(SolveStatus status);

}  // namespace mars
