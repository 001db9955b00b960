#include "mars/milp.hpp"

#include <array>

#include "mars/multiset.hpp"
#include "mars/solver.hpp"

namespace mars {

namespace {

constexpr std::array<std::string_view, MilpModel::kFamilyCount> kFamilies{
    "noempty", "partition", "replogic", "incompat", "card",     "count", "classeq1",
    "classeq2", "dscope",   "maximal",  "dmeaning", "sep1",     "sep2",
};

enum Family : std::uint8_t {
    NoEmpty,
    Partition,
    RepLogic,
    Incompat,
    Card,
    Count,
    ClassEq1,
    ClassEq2,
    DScope,
    Maximal,
    DMeaning,
    Sep1,
    Sep2,
};

std::string join_name(std::string_view tag, std::initializer_list<std::size_t> idx) {
    std::string name(tag);
    for (std::size_t i : idx) {
        name += '_';
        name += std::to_string(i);
    }
    return name;
}

std::uint32_t u32(std::size_t x) { return static_cast<std::uint32_t>(x); }

}  // namespace

std::span<const std::string_view> MilpModel::families() { return kFamilies; }

std::size_t MilpModel::q_index(Vertex u, Vertex v) const { return q_base_ + u * n_ - u * (u - 1) / 2 + (v - u); }

std::size_t MilpModel::t_index(Vertex u, std::size_t r) const { return t_base_ + u * diameter_ + (r - 1); }

std::size_t MilpModel::d_index(Vertex u, Vertex v, std::size_t r) const {
    const std::size_t pair = std::size_t(u) * n_ - std::size_t(u) * (u + 1) / 2 + (v - u - 1);
    return d_base_ + pair * diameter_ + (r - 1);
}

MilpModel::MilpModel(const DistanceMatrix& dm, std::size_t k)
    : n_(dm.order()), k_(k), diameter_(dm.diameter()), big_m_(std::int64_t(n_) - std::int64_t(k)) {
    if (k < 1 || k > n_ - 1)
        throw InvalidKError("k must be in [1, " + std::to_string(n_ - 1) + "], got " + std::to_string(k));
    const std::size_t n = n_, D = diameter_;
    const std::int64_t M = big_m_;

    auto add_var = [&](std::string name, VarKind kind, std::int64_t upper) {
        by_name_.emplace(name, vars_.size());
        vars_.push_back({std::move(name), kind, 0, upper});
    };
    for (Vertex u = 0; u < n; ++u) add_var(join_name("s", {u}), VarKind::S, 1);
    q_base_ = vars_.size();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v) add_var(join_name("q", {u, v}), VarKind::Q, 1);
    t_base_ = vars_.size();
    for (Vertex u = 0; u < n; ++u)
        for (std::size_t r = 1; r <= D; ++r) add_var(join_name("t", {u, r}), VarKind::T, M);
    d_base_ = vars_.size();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (std::size_t r = 1; r <= D; ++r) add_var(join_name("d", {u, v, r}), VarKind::Delta, 1);

    auto S = [&](Vertex u) { return u32(s_index(u)); };
    auto Q = [&](Vertex u, Vertex v) { return u32(q_index(u, v)); };
    auto T = [&](Vertex u, std::size_t r) { return u32(t_index(u, r)); };
    auto Dl = [&](Vertex u, Vertex v, std::size_t r) { return u32(d_index(u, v, r)); };

    {
        std::vector<LinearTerm> terms;
        for (Vertex u = 0; u < n; ++u) terms.push_back({S(u), 1});
        add_row(NoEmpty, "noempty", Sense::GreaterEq, 1, std::move(terms));
    }
    for (Vertex u = 0; u < n; ++u) {
        std::vector<LinearTerm> terms{{S(u), 1}};
        for (Vertex v = 0; v <= u; ++v) terms.push_back({Q(v, u), 1});
        add_row(Partition, join_name("partition", {u}), Sense::Equal, 1, std::move(terms));
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            add_row(RepLogic, join_name("replogic", {u, v}), Sense::LessEq, 0, {{Q(u, v), 1}, {Q(u, u), -1}});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u; v < n; ++v)
            add_row(Incompat, join_name("incompat", {u, v}), Sense::LessEq, 1, {{S(u), 1}, {Q(u, v), 1}});
    for (Vertex u = 0; u < n; ++u) {
        std::vector<LinearTerm> terms;
        for (Vertex v = u + 1; v < n; ++v) terms.push_back({Q(u, v), 1});
        // Kept even when k = 1 so that the row is never empty.
        terms.push_back({Q(u, u), -std::int64_t(k - 1)});
        add_row(Card, join_name("card", {u}), Sense::GreaterEq, 0, std::move(terms));
    }
    for (Vertex u = 0; u < n; ++u)
        for (std::size_t r = 1; r <= D; ++r) {
            std::vector<LinearTerm> terms{{T(u, r), 1}};
            for (Vertex v = 0; v < n; ++v)
                if (dm(u, v) == r) terms.push_back({S(v), -1});
            add_row(Count, join_name("count", {u, r}), Sense::Equal, 0, std::move(terms));
        }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (std::size_t r = 1; r <= D; ++r)
                add_row(ClassEq1, join_name("classeq1", {u, v, r}), Sense::GreaterEq, -M,
                        {{T(u, r), 1}, {T(v, r), -1}, {Q(u, v), -M}});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (std::size_t r = 1; r <= D; ++r)
                add_row(ClassEq2, join_name("classeq2", {u, v, r}), Sense::GreaterEq, -M,
                        {{T(v, r), 1}, {T(u, r), -1}, {Q(u, v), -M}});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (std::size_t r = 1; r <= D; ++r)
                add_row(DScope, join_name("dscope", {u, v, r}), Sense::LessEq, 1, {{Dl(u, v, r), 1}, {Q(u, v), 1}});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            std::vector<LinearTerm> terms{{Q(u, u), 1}, {Q(v, v), 1}};
            for (std::size_t r = 1; r <= D; ++r) terms.push_back({Dl(u, v, r), -1});
            add_row(Maximal, join_name("maximal", {u, v}), Sense::LessEq, 1, std::move(terms));
        }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (std::size_t r = 1; r <= D; ++r)
                add_row(DMeaning, join_name("dmeaning", {u, v, r}), Sense::LessEq, M,
                        {{Dl(u, v, r), M + 1}, {T(u, r), -1}, {T(v, r), 1}});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (std::size_t r = 1; r <= D; ++r)
                add_row(Sep1, join_name("sep1", {u, v, r}), Sense::LessEq, M,
                        {{T(u, r), 1}, {T(v, r), -1}, {S(u), -M}, {Q(u, v), M}});
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            for (std::size_t r = 1; r <= D; ++r)
                add_row(Sep2, join_name("sep2", {u, v, r}), Sense::LessEq, M,
                        {{T(v, r), 1}, {T(u, r), -1}, {S(u), -M}, {Q(u, v), M}});
}

void MilpModel::add_row(std::uint8_t family, std::string name, Sense sense, std::int64_t rhs,
                        std::vector<LinearTerm> terms) {
    rows_.push_back({std::move(name), family, sense, rhs, std::move(terms)});
}

std::size_t MilpModel::count_of(VarKind kind) const {
    switch (kind) {
        case VarKind::S: return q_base_;
        case VarKind::Q: return t_base_ - q_base_;
        case VarKind::T: return d_base_ - t_base_;
        case VarKind::Delta: return vars_.size() - d_base_;
    }
    return 0;
}

std::size_t MilpModel::rows_in_family(std::string_view family) const {
    std::size_t count = 0;
    for (const auto& row : rows_)
        if (kFamilies[row.family] == family) ++count;
    return count;
}

std::optional<std::size_t> MilpModel::find_variable(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

MilpModel build_model(const Graph& g, const DistanceMatrix& dm, std::size_t k) {
    if (g.order() != dm.order()) throw std::invalid_argument("distance matrix does not belong to the graph");
    return MilpModel(dm, k);
}

ModelCounts expected_counts(std::size_t n, std::size_t diameter) {
    const std::size_t pairs = n * (n - 1) / 2;
    ModelCounts c;
    c.s = n;
    c.q = n * (n + 1) / 2;
    c.t = n * diameter;
    c.delta = pairs * diameter;
    c.rows = 1 + 3 * n + 3 * pairs + n * diameter + 6 * pairs * diameter;
    return c;
}

Assignment assignment_from_set(const MilpModel& model, const DistanceMatrix& dm, std::span<const Vertex> s) {
    const std::size_t n = model.order();
    if (dm.order() != n) throw std::invalid_argument("distance matrix does not belong to the model");
    const ClassPartition classes = partition(dm, s);
    for (const auto& cls : classes.classes)
        if (cls.members.size() < model.k())
            throw ClassTooSmallError("class of vertex " + std::to_string(cls.members.front()) + " has " +
                                     std::to_string(cls.members.size()) + " members, fewer than k = " +
                                     std::to_string(model.k()));

    Assignment a(model);
    for (auto& value : a.values) value = 0;
    for (Vertex v : classes.subject_set) a.set(model.s_index(v), 1);
    for (const auto& cls : classes.classes) {
        const Vertex rep = cls.members.front();
        for (Vertex v : cls.members) a.set(model.q_index(rep, v), 1);
    }
    std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(model.diameter() + 1, 0));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : classes.subject_set)
            if (v != u) ++t[u][dm(u, v)];
        for (std::size_t r = 1; r <= model.diameter(); ++r) a.set(model.t_index(u, r), t[u][r]);
    }
    for (std::size_t i = 0; i < classes.classes.size(); ++i)
        for (std::size_t j = 0; j < classes.classes.size(); ++j) {
            const Vertex u = classes.classes[i].members.front(), v = classes.classes[j].members.front();
            if (u >= v) continue;
            for (std::size_t r = 1; r <= model.diameter(); ++r)
                if (t[u][r] > t[v][r]) a.set(model.d_index(u, v, r), 1);
        }
    return a;
}

FeasibilityReport check_assignment(const MilpModel& model, const Assignment& a) {
    const auto& vars = model.variables();
    if (a.values.size() != vars.size())
        throw MissingVariableError(a.values.size() < vars.size() ? vars[a.values.size()].name : "(extra values)");
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (!a.values[i]) throw MissingVariableError(vars[i].name);

    FeasibilityReport report;
    FamilyCheck domain{"domain", 0, 0, {}};
    for (std::size_t i = 0; i < vars.size(); ++i) {
        ++domain.rows;
        const std::int64_t x = *a.values[i];
        if (x < vars[i].lower || x > vars[i].upper) {
            if (domain.violations++ == 0) domain.first_violation = vars[i].name;
        }
        if (vars[i].kind == VarKind::S) report.objective += x;
    }
    report.families.push_back(domain);

    std::vector<FamilyCheck> checks;
    for (auto name : MilpModel::families()) checks.push_back({std::string(name), 0, 0, {}});
    for (const auto& row : model.rows()) {
        std::int64_t lhs = 0;
        for (const auto& term : row.terms) lhs += term.coef * *a.values[term.var];
        bool ok = row.sense == Sense::LessEq ? lhs <= row.rhs : row.sense == Sense::GreaterEq ? lhs >= row.rhs
                                                                                             : lhs == row.rhs;
        auto& check = checks[row.family];
        ++check.rows;
        if (!ok && check.violations++ == 0) check.first_violation = row.name;
    }
    report.families.insert(report.families.end(), checks.begin(), checks.end());
    for (const auto& check : report.families)
        if (!check.passed()) report.feasible = false;
    return report;
}

DecodedSolution decode(const MilpModel& model, const Assignment& a) {
    auto value = [&](std::size_t i) {
        if (!a.values.at(i)) throw MissingVariableError(model.variables()[i].name);
        return *a.values[i];
    };
    DecodedSolution out;
    const std::size_t n = model.order();
    for (Vertex u = 0; u < n; ++u)
        if (value(model.s_index(u)) == 1) out.set.push_back(u);
    for (Vertex u = 0; u < n; ++u) {
        if (value(model.q_index(u, u)) != 1) continue;
        VertexSet cls;
        for (Vertex v = u; v < n; ++v)
            if (value(model.q_index(u, v)) == 1) cls.push_back(v);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

}  // namespace mars
