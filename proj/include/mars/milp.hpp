#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mars/graph.hpp"

namespace mars {

class ClassTooSmallError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MissingVariableError : public std::invalid_argument {
public:
    explicit MissingVariableError(const std::string& name)
        : std::invalid_argument("assignment has no value for " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

enum class VarKind { S, Q, T, Delta };

struct MilpVariable {
    std::string name;
    VarKind kind;
    std::int64_t lower = 0;
    std::int64_t upper = 1;
    bool is_binary() const { return kind != VarKind::T; }
};

enum class Sense { LessEq, GreaterEq, Equal };

struct LinearTerm {
    std::uint32_t var;
    std::int64_t coef;
};

struct MilpRow {
    std::string name;
    std::uint8_t family;  // index into MilpModel::families()
    Sense sense;
    std::int64_t rhs;
    std::vector<LinearTerm> terms;
};

/// Row families of the model, in emission order:
///   noempty    sum s_u >= 1
///   partition  s_u + sum_{v<=u} q_vu = 1
///   replogic   q_uv <= q_uu                         (v > u)
///   incompat   s_u + q_uv <= 1                      (v >= u)
///   card       sum_{v>u} q_uv >= (k-1) q_uu
///   count      t_ur = sum_{v : d(u,v)=r} s_v
///   classeq1   t_ur >= t_vr - M (1 - q_uv)          (u < v)
///   classeq2   t_vr >= t_ur - M (1 - q_uv)          (u < v)
///   dscope     d_uvr + q_uv <= 1                    (u < v)
///   maximal    q_uu + q_vv <= 1 + sum_r d_uvr       (u < v)
///   dmeaning   d_uvr <= t_ur - t_vr + M (1 - d_uvr) (u < v)
///   sep1       t_ur - t_vr <= M (1 + s_u - q_uv)    (u < v)
///   sep2       t_vr - t_ur <= M (1 + s_u - q_uv)    (u < v)
/// with M = n - k and r ranging over 1..diameter.
class MilpModel {
public:
    static constexpr std::size_t kFamilyCount = 13;

    MilpModel(const DistanceMatrix& dm, std::size_t k);

    std::size_t order() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t diameter() const { return diameter_; }
    std::int64_t big_m() const { return big_m_; }

    const std::vector<MilpVariable>& variables() const { return vars_; }
    const std::vector<MilpRow>& rows() const { return rows_; }
    static std::span<const std::string_view> families();

    std::size_t s_index(Vertex u) const { return u; }
    std::size_t q_index(Vertex u, Vertex v) const;           // u <= v
    std::size_t t_index(Vertex u, std::size_t r) const;      // 1 <= r <= diameter
    std::size_t d_index(Vertex u, Vertex v, std::size_t r) const;  // u < v

    std::size_t count_of(VarKind kind) const;
    std::size_t rows_in_family(std::string_view family) const;
    std::optional<std::size_t> find_variable(std::string_view name) const;

private:
    void add_row(std::uint8_t family, std::string name, Sense sense, std::int64_t rhs, std::vector<LinearTerm> terms);

    std::size_t n_;
    std::size_t k_;
    std::size_t diameter_;
    std::int64_t big_m_;
    std::size_t q_base_ = 0, t_base_ = 0, d_base_ = 0;
    std::vector<MilpVariable> vars_;
    std::vector<MilpRow> rows_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

// Throws InvalidKError unless 1 <= k <= n-1.
MilpModel build_model(const Graph& g, const DistanceMatrix& dm, std::size_t k);

// Expected counts from the closed formulas, for auditing a built model.
struct ModelCounts {
    std::size_t s = 0, q = 0, t = 0, delta = 0;
    std::size_t rows = 0;
};
ModelCounts expected_counts(std::size_t n, std::size_t diameter);

/// LP-file text: Minimize / Subject To / Bounds / Binaries / Generals / End.
/// Output depends only on the model.
void export_lp(const MilpModel& model, std::ostream& out);
std::string export_lp(const MilpModel& model);

struct Assignment {
    std::vector<std::optional<std::int64_t>> values;  // by variable index

    explicit Assignment(const MilpModel& model) : values(model.variables().size()) {}
    void set(std::size_t var, std::int64_t value) { values.at(var) = value; }
};

/// Encodes S and its anonymity classes. The representative of a class is its
/// lowest vertex; d_uvr = 1 only for representatives u < v of distinct classes
/// with t_ur > t_vr. Throws ClassTooSmallError when some class has fewer than
/// k members.
Assignment assignment_from_set(const MilpModel& model, const DistanceMatrix& dm, std::span<const Vertex> s);

struct FamilyCheck {
    std::string family;
    std::size_t rows = 0;
    std::size_t violations = 0;
    std::string first_violation;  // row name, empty when the family passes
    bool passed() const { return violations == 0; }
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<FamilyCheck> families;  // "domain" first, then the row families
    std::int64_t objective = 0;
};

// Evaluates variable domains and every row. Throws MissingVariableError.
FeasibilityReport check_assignment(const MilpModel& model, const Assignment& a);

struct DecodedSolution {
    VertexSet set;
    std::vector<VertexSet> classes;  // Q-subsets, by representative
};

DecodedSolution decode(const MilpModel& model, const Assignment& a);

}  // namespace mars
