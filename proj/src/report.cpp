#include "mars/report.hpp"

#include <iomanip>
#include <sstream>

namespace mars {

using json = nlohmann::ordered_json;

namespace {

json set_json(const VertexSet& s) { return json(s); }

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += ',';
            out += scalar_text(x);
        }
        return out.empty() ? "{}" : "{" + out + "}";
    }
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << v.get<double>();
        return s.str();
    }
    return v.dump();
}

bool is_table(const json& v) { return v.is_array() && !v.empty() && v.front().is_object(); }

void write_table(std::ostream& out, const std::string& title, const json& rows) {
    std::vector<std::string> header;
    for (const auto& [key, _] : rows.front().items()) header.push_back(key);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        auto& line = cells.emplace_back();
        for (std::size_t c = 0; c < header.size(); ++c) {
            line.push_back(row.contains(header[c]) ? scalar_text(row[header[c]]) : "");
            width[c] = std::max(width[c], line.back().size());
        }
    }
    out << title << ":\n";
    auto emit = [&](const std::vector<std::string>& line) {
        out << ' ';
        for (std::size_t c = 0; c < line.size(); ++c)
            out << ' ' << std::left << std::setw(int(width[c])) << line[c];
        out << '\n';
    };
    emit(header);
    for (const auto& line : cells) emit(line);
}

void write_section(std::ostream& out, const std::string& prefix, const json& obj) {
    for (const auto& [key, value] : obj.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object())
            write_section(out, name, value);
        else if (is_table(value))
            write_table(out, name, value);
        else
            out << name << ": " << scalar_text(value) << '\n';
    }
}

json value_json(const SolveOutcome& o) {
    if (o.value) return *o.value;
    if (o.status == SolveStatus::InfeasibleProven) return "inf";
    return nullptr;
}

}  // namespace

bool is_decisive(SolveStatus status) {
    return status == SolveStatus::Optimal || status == SolveStatus::InfeasibleProven;
}

json Report::to_json() const {
    json j;
    j["tool"] = "mars";
    j["version"] = kToolVersion;
    j["operation"] = operation;
    j["input"] = input;
    j["parameters"] = parameters;
    j["outcome"] = outcome;
    j["decisive"] = decisive;
    j["timings"] = timings;
    return j;
}

void Report::write_json(std::ostream& out) const { out << to_json().dump(2) << '\n'; }

void Report::write_text(std::ostream& out) const {
    out << "operation: " << operation << '\n';
    write_section(out, "input", input);
    write_section(out, "", parameters);
    // Outcome fields that only echo a parameter are not repeated.
    json shown = outcome;
    if (shown.is_object() && parameters.is_object())
        for (const auto& [key, value] : parameters.items())
            if (shown.contains(key) && shown[key] == value) shown.erase(key);
    write_section(out, "", shown);
    write_section(out, "", timings);
}

json describe_input(const std::string& source, const Graph& g, const DistanceMatrix& dm) {
    json j;
    j["source"] = source;
    j["n"] = g.order();
    j["m"] = g.size();
    j["diameter"] = dm.diameter();
    return j;
}

json describe_budget(const SolverOptions& options) {
    json j;
    j["max_card"] = options.max_card;
    j["budget_seconds"] = options.budget.wall_seconds;
    j["budget_subsets"] = options.budget.max_subsets;
    return j;
}

json outcome_json(const SolveOutcome& o) {
    json j;
    j["k"] = o.k;
    j["status"] = std::string(to_string(o.status));
    j["value"] = value_json(o);
    j["witness"] = o.value ? set_json(o.witness) : json(nullptr);
    j["explored_bound"] = o.explored_bound;
    return j;
}

json kappa_json(const KappaResult& r) {
    json j;
    j["kappa"] = r.value;
    j["exact"] = r.exact;
    j["witness"] = set_json(r.witness);
    j["explored_bound"] = r.explored_bound;
    return j;
}

json anonymity_json(const AnonymityProfile& p) {
    json j;
    j["ell"] = p.ell;
    j["level"] = p.level;
    j["exact"] = p.exact;
    j["worst_witness"] = set_json(p.worst_witness);
    json spectrum = json::array();
    for (const auto& [k, entry] : p.spectrum) spectrum.push_back({{"k", k}, {"size", entry.size}, {"witness", entry.witness}});
    j["spectrum"] = spectrum;
    return j;
}

json spectrum_json(const std::map<std::size_t, SolveOutcome>& outcomes) {
    json rows = json::array();
    for (const auto& [k, o] : outcomes) rows.push_back(outcome_json(o));
    json j;
    j["results"] = rows;
    return j;
}

json certificate_json(const WitnessCertificate& c) {
    json j;
    j["set"] = set_json(c.set);
    j["requested_k"] = c.requested_k;
    j["actual_k"] = c.actual_k;
    j["certified"] = c.certified;
    if (c.certified)
        j["upper_bound"] = c.set.size();
    else
        j["upper_bound"] = nullptr;
    return j;
}

json model_json(const MilpModel& model) {
    json j;
    j["big_m"] = model.big_m();
    j["variables"] = {{"s", model.count_of(VarKind::S)},
                      {"q", model.count_of(VarKind::Q)},
                      {"t", model.count_of(VarKind::T)},
                      {"delta", model.count_of(VarKind::Delta)}};
    json rows = json::object();
    for (auto family : MilpModel::families()) rows[std::string(family)] = model.rows_in_family(family);
    j["rows"] = rows;
    j["total_rows"] = model.rows().size();
    return j;
}

}  // namespace mars
