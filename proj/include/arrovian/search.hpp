#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrovian/classes.hpp"
#include "arrovian/decisive.hpp"
#include "arrovian/swf.hpp"

namespace arrovian {

struct SearchStats {
    std::uint64_t nodes = 0;  // decisions taken
    std::uint64_t prunes = 0; // conflicts hit
    int workers = 1;
};

/// Every chromatic simplicial map on the nerve that satisfies unanimity:
/// complete, duplicate-free, sorted by sign string. Backtracking over the
/// free (mixed-sign) vertices with per-facet transitivity propagation;
/// unanimity pins the unanimous vertices up front.
std::vector<ChromaticMap> enumerate_unanimous_maps(NervePtr nerve, SearchStats* stats = nullptr,
                                                   int threads = 1);

/// The Arrow decision for a domain, with certificates.
struct Verdict {
    bool inconsistent = false;
    int maps_found = 0;
    /// Dictator sets per map, aligned with the canonical map order.
    std::vector<std::vector<int>> dictator_sets;
    /// Index of a non-dictatorial map when consistent.
    std::optional<int> witness_index;
    std::vector<ChromaticMap> maps;
    SearchStats stats;
};

/// Enumerates all unanimous simplicial maps; the domain is Arrow-inconsistent
/// iff every one of them has a dictator.
Verdict arrow_verdict(const Domain& d, int threads = 1);

struct AuditCheck {
    std::string name;
    std::int64_t instances = 0;
    std::vector<std::string> failures;
};

struct AuditReport {
    std::vector<AuditCheck> checks;

    std::int64_t failure_count() const;
    bool all_passed() const { return failure_count() == 0; }
};

/// Machine-checks the structural consequences of unanimity and the domain
/// classes on every supplied map: forbidden triangle and edge images,
/// non-DbT images of polarized-block edges, decisiveness dichotomies and
/// contagion, intersection closure, the empty-coalition exclusion, the
/// vertex-existence dichotomy, and the ultrafilter-to-dictator step.
/// `maps` must be enumerate_unanimous_maps(nerve).
AuditReport audit_lemmas(const Domain& d, NervePtr nerve, const std::vector<ChromaticMap>& maps);

struct ProbeReport {
    int add = 0;
    std::uint64_t trials = 0;
    bool exhaustive = false;
    std::uint64_t extensions_tested = 0;
    bool all_inconsistent = false;
    std::vector<std::string> failures; // offending added profiles
};

/// Asserts Arrow-inconsistency of superdomains D + k extra profiles:
/// exhaustive over all C(|complement|, k) extensions when that count is
/// within budget, otherwise `trials` seeded samples.
ProbeReport super_arrovian_probe(const Domain& d, int k, std::uint64_t trials, std::uint64_t seed,
                                 std::uint64_t budget = 10000, int threads = 1);

} // namespace arrovian
