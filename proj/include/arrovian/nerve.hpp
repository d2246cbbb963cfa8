#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrovian/preferences.hpp"

namespace arrovian {

/// Nerve vertex U_{ab}^{sigma} in canonical form: a < b by index. The raw
/// spelling (b, a, -sigma) denotes the same vertex; canonical_label folds it.
struct Label {
    Alt a = 0;
    Alt b = 0;
    SignVector sigma;

    std::strong_ordering operator<=>(const Label& o) const {
        if (auto c = a <=> o.a; c != 0)
            return c;
        if (auto c = b <=> o.b; c != 0)
            return c;
        return sigma <=> o.sigma;
    }
    bool operator==(const Label& o) const = default;
};

Label canonical_label(Alt alpha, Alt beta, const SignVector& sigma);

/// Vertex of N_{W(X)}: U_{ab}^{sign} with a < b; U_{ab}^+ = U_{ba}^-.
struct SocialLabel {
    Alt a = 0;
    Alt b = 0;
    std::int8_t sign = +1;

    std::strong_ordering operator<=>(const SocialLabel& o) const {
        if (auto c = a <=> o.a; c != 0)
            return c;
        if (auto c = b <=> o.b; c != 0)
            return c;
        // '+' sorts before '-'
        return (sign > 0 ? 0 : 1) <=> (o.sign > 0 ? 0 : 1);
    }
    bool operator==(const SocialLabel& o) const = default;
};

SocialLabel canonical_social_label(Alt alpha, Alt beta, std::int8_t sign);

using Simplex = std::vector<Label>;             // sorted, one label per pair
using SocialSimplex = std::vector<SocialLabel>; // sorted

/// The profiles of D whose pairwise sign vector on u's pair equals u's sigma.
std::vector<Profile> support(const Label& u, const Domain& d);

/// The simplicial complex N_D, stored by its facets (one per profile).
/// Simplices are implicit: a label set is a simplex iff it is a subset of
/// some facet.
class Nerve {
public:
    explicit Nerve(Domain d);

    const Domain& domain() const { return domain_; }
    const AlternativeSet& alternatives() const { return domain_.alternatives(); }
    int voters() const { return domain_.voters(); }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Label>& vertices() const { return vertices_; }
    const Label& vertex(int id) const { return vertices_.at(static_cast<size_t>(id)); }
    /// Canonical vertex id, or -1 when the label is not a vertex of N_D.
    int vertex_index(const Label& u) const;

    int facet_count() const { return static_cast<int>(facets_.size()); }
    /// Sorted vertex ids of facet i; facet i corresponds to domain().profile(i).
    std::span<const int> facet(int i) const { return facets_.at(static_cast<size_t>(i)); }
    /// Vertex id of the pair (a,b), a<b, inside facet i.
    int facet_vertex(int i, Alt a, Alt b) const;

    /// C(m,2)-1; every facet has exactly C(m,2) vertices.
    int dimension() const;

    int pair_count() const { return pair_index_.empty() ? 0 : static_cast<int>(pairs_.size()); }
    int pair_rank(Alt a, Alt b) const; // rank of (a,b), a<b, in lex order
    std::pair<Alt, Alt> pair_at(int rank) const { return pairs_.at(static_cast<size_t>(rank)); }

    bool is_simplex(std::span<const int> sorted_vertex_ids) const;

    /// Visits every simplex of dimension <= max_dim exactly once, streaming;
    /// a subset is emitted from its first containing facet only.
    void for_each_simplex(int max_dim, const std::function<void(std::span<const int>)>& visit) const;

    /// Materialized l-skeleton, simplices sorted canonically.
    std::vector<std::vector<int>> skeleton(int l) const;

private:
    Domain domain_;
    std::vector<std::pair<Alt, Alt>> pairs_;
    std::vector<int> pair_index_;               // (a*m+b) -> rank
    std::vector<Label> vertices_;                // canonically sorted
    std::vector<std::vector<int>> facets_;       // sorted vertex ids
    std::vector<std::vector<int>> facet_by_pair_; // [facet][pair rank] -> vertex id
};

Nerve build_nerve(Domain d);
using NervePtr = std::shared_ptr<const Nerve>;

/// The complex N_{W(X)}: 2*C(m,2) vertices, m! facets, pure of dimension
/// C(m,2)-1.
class SocialNerve {
public:
    explicit SocialNerve(AlternativeSet alts); // m >= 2

    const AlternativeSet& alternatives() const { return alts_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<SocialLabel>& vertices() const { return vertices_; }
    int vertex_index(const SocialLabel& u) const;
    int facet_count() const { return static_cast<int>(facets_.size()); }
    std::span<const int> facet(int i) const { return facets_.at(static_cast<size_t>(i)); }
    /// Facet i corresponds to ranking i in enumerate_rankings order.
    const Ranking& facet_ranking(int i) const { return rankings_.at(static_cast<size_t>(i)); }
    int dimension() const;
    bool is_pure() const;
    bool is_simplex(std::span<const int> sorted_vertex_ids) const;
    void for_each_simplex(int max_dim, const std::function<void(std::span<const int>)>& visit) const;
    std::vector<std::vector<int>> skeleton(int l) const;

private:
    AlternativeSet alts_;
    std::vector<Ranking> rankings_;
    std::vector<SocialLabel> vertices_;
    std::vector<std::vector<int>> facets_;
};

SocialNerve build_social_nerve(AlternativeSet alts);

/// The simplex g_Y(subprofile): one label per unordered pair in Y, with
/// X-level indices. `subset` gives the X-indices of Y; the subprofile is
/// over 0..|Y|-1 as produced by restrict_profile.
Simplex g_sub(const Profile& subprofile, std::span<const Alt> subset);

/// Inverse of g_sub within N_D: checks the label set is a full simplex over
/// its alternatives and is realized by some profile of the nerve's domain;
/// returns that profile's restriction.
Profile h_sub(const Nerve& nerve, const Simplex& simplex);

/// The facet g_bar(P) = {U_xy^+ : x before y in P} of N_{W(X)}.
SocialSimplex g_social(const Ranking& r);

/// Inverse of g_social: rejects label sets that are incomplete or encode an
/// intransitive relation.
Ranking h_social(const SocialSimplex& facet, int m);

/// True iff the edge can be written {U_ab^+, U_bc^+}; such an edge lies in a
/// unique same-triple triangle, forced by transitivity. Edges on disjoint
/// pairs are never DbT.
bool is_dbt_edge(const SocialLabel& u, const SocialLabel& v);

/// Vertex name used by reports and DOT export, e.g. "U[x,y][+-]".
std::string vertex_name(const Label& u, const AlternativeSet& alts);
std::string vertex_name(const SocialLabel& u, const AlternativeSet& alts);

/// DOT rendering of the 2-skeleton; vertices, edges and triangles in sorted
/// canonical order (triangles as comments; DOT has no 2-cell primitive).
std::string to_dot(const Nerve& nerve);

} // namespace arrovian
