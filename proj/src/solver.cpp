#include "mars/solver.hpp"

#include <algorithm>
#include <vector>

#include "mars/multiset.hpp"

namespace mars {

std::string_view to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::InfeasibleProven: return "InfeasibleProven";
        case SolveStatus::OpenWithinBound: return "OpenWithinBound";
        case SolveStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

namespace {

std::size_t resolve_max_card(const DistanceMatrix& dm, const SolverOptions& options) {
    const std::size_t n = dm.order();
    if (options.max_card == 0) return n - 1;
    if (options.max_card > n - 1)
        throw std::invalid_argument("max-card " + std::to_string(options.max_card) + " exceeds n-1 = " +
                                    std::to_string(n - 1));
    return options.max_card;
}

void check_k(const DistanceMatrix& dm, std::size_t k) {
    if (k < 1 || k > dm.order() - 1)
        throw InvalidKError("k must be in [1, " + std::to_string(dm.order() - 1) + "], got " + std::to_string(k));
}

}  // namespace

std::map<std::size_t, SolveOutcome> k_spectrum(const DistanceMatrix& dm, std::span<const std::size_t> ks,
                                               const SolverOptions& options) {
    const std::size_t n = dm.order();
    const std::size_t max_card = resolve_max_card(dm, options);
    std::map<std::size_t, SolveOutcome> outcomes;
    for (std::size_t k : ks) {
        check_k(dm, k);
        outcomes[k].k = k;
    }

    BudgetTracker budget(options.budget);
    std::size_t explored = 0;
    bool exhausted = false;
    for (std::size_t c = 1; c <= max_card; ++c) {
        std::vector<std::size_t> targets;
        for (const auto& [k, outcome] : outcomes)
            if (!outcome.value && k <= n - c) targets.push_back(k);
        if (targets.empty()) break;
        if (budget.exhausted()) {
            exhausted = true;
            break;
        }

        LayerScan layer = scan_layer(dm, c, targets, options.threads, budget);
        for (std::size_t k : targets) {
            auto it = layer.hits.find(k);
            if (it == layer.hits.end() || !it->second.first_in_layer) continue;
            auto& outcome = outcomes[k];
            outcome.status = SolveStatus::Optimal;
            outcome.value = c;
            outcome.witness = it->second.subset;
            outcome.explored_bound = c;
        }
        if (!layer.settled) {
            exhausted = true;
            break;
        }
        explored = c;
    }

    for (auto& [k, outcome] : outcomes) {
        outcome.subsets_evaluated = budget.evaluated();
        outcome.elapsed_seconds = budget.elapsed_seconds();
        if (outcome.value) continue;
        // A k-MARS leaves at least k vertices outside, so |S| <= n - k.
        outcome.explored_bound = explored;
        if (explored >= n - k)
            outcome.status = SolveStatus::InfeasibleProven;
        else
            outcome.status = exhausted ? SolveStatus::BudgetExhausted : SolveStatus::OpenWithinBound;
    }
    return outcomes;
}

SolveOutcome msad(const DistanceMatrix& dm, std::size_t k, const SolverOptions& options) {
    const std::size_t ks[] = {k};
    return k_spectrum(dm, ks, options).at(k);
}

KappaResult kappa(const DistanceMatrix& dm, const SolverOptions& options) {
    const std::size_t n = dm.order();
    const std::size_t max_card = resolve_max_card(dm, options);
    KappaResult result;

    for (Vertex v = 0; v < n; ++v) {
        if (dm.eccentricity(v) == 1) {
            result.value = n - 1;
            result.exact = true;
            result.witness = {v};
            result.explored_bound = 0;
            return result;
        }
    }

    BudgetTracker budget(options.budget);
    bool bounded = false;
    bool exhausted = false;
    for (std::size_t c = 1; c <= max_card; ++c) {
        if (n - c <= result.value) {
            bounded = true;
            break;
        }
        if (budget.exhausted()) {
            exhausted = true;
            break;
        }
        LayerScan layer = scan_layer(dm, c, {}, options.threads, budget);
        if (!layer.hits.empty()) {
            const auto& [best_k, hit] = *layer.hits.rbegin();
            if (best_k > result.value) {
                result.value = best_k;
                result.witness = hit.subset;
            }
        }
        if (!layer.settled) {
            exhausted = true;
            break;
        }
        result.explored_bound = c;
    }
    if (!exhausted && !bounded && n - (result.explored_bound + 1) <= result.value) bounded = true;
    result.exact = bounded && !exhausted;
    result.subsets_evaluated = budget.evaluated();
    result.elapsed_seconds = budget.elapsed_seconds();
    return result;
}

AnonymityProfile anonymity_level(const DistanceMatrix& dm, std::size_t ell, const SolverOptions& options) {
    const std::size_t n = dm.order();
    if (ell < 1 || ell > n - 1)
        throw std::invalid_argument("ell must be in [1, " + std::to_string(n - 1) + "], got " + std::to_string(ell));

    AnonymityProfile profile;
    profile.ell = ell;
    profile.exact = true;
    BudgetTracker budget(options.budget);
    for (std::size_t c = 1; c <= ell; ++c) {
        if (budget.exhausted()) {
            profile.exact = false;
            break;
        }
        LayerScan layer = scan_layer(dm, c, {}, options.threads, budget);
        for (const auto& [k, hit] : layer.hits) {
            profile.spectrum.try_emplace(k, SpectrumEntry{c, hit.subset});
            if (profile.level == 0 || k < profile.level) {
                profile.level = k;
                profile.worst_witness = hit.subset;
            }
        }
        if (!layer.settled) {
            profile.exact = false;
            break;
        }
    }
    profile.subsets_evaluated = budget.evaluated();
    profile.elapsed_seconds = budget.elapsed_seconds();
    return profile;
}

WitnessCertificate verify_witness(const DistanceMatrix& dm, std::span<const Vertex> s, std::size_t k) {
    WitnessCertificate cert;
    cert.set = normalize_proper_set(s, dm.order());
    cert.requested_k = k;
    cert.actual_k = k_value(dm, cert.set);
    cert.certified = cert.actual_k == k;
    return cert;
}

}  // namespace mars
