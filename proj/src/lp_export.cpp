#include <sstream>

#include "mars/milp.hpp"

namespace mars {

namespace {

constexpr std::size_t kWrapAt = 200;

// Appends tokens to a line, starting a continuation line once it gets long.
class LineWriter {
public:
    explicit LineWriter(std::ostream& out) : out_(out) {}

    void start(std::string_view head) {
        line_.assign(head);
    }
    void token(std::string_view tok) {
        if (line_.size() + 1 + tok.size() > kWrapAt) {
            out_ << line_ << '\n';
            line_ = "   ";
            line_ += tok;
            return;
        }
        if (!line_.empty() && line_.back() != ' ') line_ += ' ';
        line_ += tok;
    }
    void finish() {
        out_ << line_ << '\n';
        line_.clear();
    }

private:
    std::ostream& out_;
    std::string line_;
};

void write_terms(LineWriter& w, const MilpModel& model, const std::vector<LinearTerm>& terms) {
    bool first = true;
    for (const auto& term : terms) {
        std::string tok;
        std::int64_t c = term.coef;
        if (c < 0) {
            tok = "- ";
            c = -c;
        } else if (!first) {
            tok = "+ ";
        }
        if (c != 1) tok += std::to_string(c) + " ";
        tok += model.variables()[term.var].name;
        w.token(tok);
        first = false;
    }
}

std::string_view sense_token(Sense sense) {
    switch (sense) {
        case Sense::LessEq: return "<=";
        case Sense::GreaterEq: return ">=";
        case Sense::Equal: return "=";
    }
    return "?";
}

}  // namespace

void export_lp(const MilpModel& model, std::ostream& out) {
    const auto& vars = model.variables();
    LineWriter w(out);

    out << "Minimize\n";
    w.start("obj:");
    std::vector<LinearTerm> objective;
    for (Vertex u = 0; u < model.order(); ++u) objective.push_back({std::uint32_t(model.s_index(u)), 1});
    write_terms(w, model, objective);
    w.finish();

    out << "Subject To\n";
    for (const auto& row : model.rows()) {
        w.start(" " + row.name + ":");
        write_terms(w, model, row.terms);
        w.token(sense_token(row.sense));
        w.token(std::to_string(row.rhs));
        w.finish();
    }

    out << "Bounds\n";
    for (const auto& var : vars)
        if (!var.is_binary()) out << ' ' << var.lower << " <= " << var.name << " <= " << var.upper << '\n';

    out << "Binaries\n";
    w.start("");
    for (const auto& var : vars)
        if (var.is_binary()) w.token(var.name);
    w.finish();

    out << "Generals\n";
    w.start("");
    for (const auto& var : vars)
        if (!var.is_binary()) w.token(var.name);
    w.finish();
    out << "End\n";
}

std::string export_lp(const MilpModel& model) {
    std::ostringstream out;
    export_lp(model, out);
    return out.str();
}

}  // namespace mars
