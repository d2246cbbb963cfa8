#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "arrovian/nerve.hpp"
#include "arrovian/preferences.hpp"

namespace arrovian {

/// An explicit social welfare function: one output ranking per profile of
/// the domain, aligned with the domain's canonical profile order.
class SwfTable {
public:
    SwfTable(Domain domain, std::vector<Ranking> outputs);

    /// F(P) = P_voter (0-based voter index).
    static SwfTable projection(const Domain& d, int voter);
    /// F(P) = fixed ranking.
    static SwfTable constant(const Domain& d, Ranking value);

    const Domain& domain() const { return domain_; }
    const Ranking& output(int profile_index) const {
        return outputs_.at(static_cast<size_t>(profile_index));
    }
    const Ranking& output(const Profile& p) const;
    const std::vector<Ranking>& outputs() const { return outputs_; }

    bool operator==(const SwfTable& o) const {
        return domain_ == o.domain_ && outputs_ == o.outputs_;
    }

private:
    Domain domain_;
    std::vector<Ranking> outputs_;
};

/// A sign per canonical vertex of N_D, encoding the vertex map
/// f(U_ab^sigma) = U_ab^{sign}. Chromaticity is structural; simpliciality is
/// a property checked by is_simplicial. The sign of a non-canonical spelling
/// is the negation, applied transparently by sign_of.
class ChromaticMap {
public:
    ChromaticMap(NervePtr nerve, std::vector<std::int8_t> signs);

    const Nerve& nerve() const { return *nerve_; }
    const NervePtr& nerve_ptr() const { return nerve_; }

    std::int8_t sign_at(int vertex_id) const { return signs_.at(static_cast<size_t>(vertex_id)); }
    /// Image sign in the (alpha, beta) orientation: +1 means society ranks
    /// alpha over beta. 0 when U_{alpha beta}^{sigma} is not a vertex of N_D.
    std::int8_t sign_of(Alt alpha, Alt beta, const SignVector& sigma) const;
    const std::vector<std::int8_t>& signs() const { return signs_; }

    /// '+'/'-' over the canonical vertex order; the map's canonical key.
    std::string sign_string() const;

    bool operator==(const ChromaticMap& o) const { return signs_ == o.signs_; }

private:
    NervePtr nerve_;
    std::vector<std::int8_t> signs_;
};

struct IiaViolation {
    Alt a = 0;
    Alt b = 0;
    int profile_i = 0;
    int profile_j = 0;
};

/// Scans all pairs and profile pairs; nullopt when F satisfies IIA.
std::optional<IiaViolation> find_iia_violation(const SwfTable& f);
bool satisfies_iia(const SwfTable& f);

bool satisfies_unanimity(const SwfTable& f);
/// Every vertex whose sign vector is unanimous maps to the unanimous side.
bool map_satisfies_unanimity(const ChromaticMap& f);

/// All dictators, 1-based ascending. Tiny domains admit several at once;
/// non-dictatorship is exactly an empty result.
std::vector<int> dictators(const SwfTable& f);
std::vector<int> dictators(const ChromaticMap& f);

/// The table-to-map direction of the bijection. The nerve must be built from
/// f's domain; F must satisfy IIA (error names a witness pair and profiles).
ChromaticMap to_chromatic_map(const SwfTable& f, NervePtr nerve);

/// The map-to-table direction: P -> h_social(f(g_X(P))). Rejects
/// non-simplicial maps, naming a facet whose image is intransitive.
SwfTable to_swf_table(const ChromaticMap& f);

/// True iff every facet's image label set is a simplex of N_{W(X)},
/// equivalently the induced pairwise relation is transitive.
bool is_simplicial(const ChromaticMap& f);

} // namespace arrovian
