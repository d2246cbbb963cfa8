#include "arrovian/nerve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arrovian {

Label canonical_label(Alt alpha, Alt beta, const SignVector& sigma) {
    if (alpha == beta)
        throw PreconditionError("label needs two distinct alternatives");
    if (alpha < beta)
        return Label{alpha, beta, sigma};
    return Label{beta, alpha, sigma.negated()};
}

SocialLabel canonical_social_label(Alt alpha, Alt beta, std::int8_t sign) {
    if (alpha == beta)
        throw PreconditionError("label needs two distinct alternatives");
    if (alpha < beta)
        return SocialLabel{alpha, beta, sign};
    return SocialLabel{beta, alpha, static_cast<std::int8_t>(-sign)};
}

std::vector<Profile> support(const Label& u, const Domain& d) {
    if (u.a < 0 || u.b >= d.alternatives().size())
        throw PreconditionError("label alternatives outside the domain's alternative set");
    std::vector<Profile> out;
    for (const auto& p : d.profiles())
        if (pair_sign_vector(p, u.a, u.b) == u.sigma)
            out.push_back(p);
    return out;
}

Nerve::Nerve(Domain d) : domain_(std::move(d)) {
    const int m = domain_.alternatives().size();
    if (m < 2)
        throw PreconditionError("nerve needs at least two alternatives");

    pair_index_.assign(static_cast<size_t>(m * m), -1);
    for (Alt a = 0; a < m; ++a)
        for (Alt b = a + 1; b < m; ++b) {
            pair_index_[static_cast<size_t>(a * m + b)] = static_cast<int>(pairs_.size());
            pairs_.emplace_back(a, b);
        }

    // Pass 1: collect the distinct labels occurring in some profile.
    std::set<Label> seen;
    for (const auto& p : domain_.profiles())
        for (auto [a, b] : pairs_)
            seen.insert(Label{a, b, pair_sign_vector(p, a, b)});
    vertices_.assign(seen.begin(), seen.end());

    // Pass 2: one facet per profile, in domain order.
    facets_.reserve(static_cast<size_t>(domain_.size()));
    facet_by_pair_.reserve(static_cast<size_t>(domain_.size()));
    for (const auto& p : domain_.profiles()) {
        std::vector<int> ids;
        std::vector<int> by_pair(pairs_.size(), -1);
        ids.reserve(pairs_.size());
        for (size_t r = 0; r < pairs_.size(); ++r) {
            auto [a, b] = pairs_[r];
            int id = vertex_index(Label{a, b, pair_sign_vector(p, a, b)});
            ids.push_back(id);
            by_pair[r] = id;
        }
        std::sort(ids.begin(), ids.end());
        facets_.push_back(std::move(ids));
        facet_by_pair_.push_back(std::move(by_pair));
    }
}

int Nerve::vertex_index(const Label& u) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u);
    if (it != vertices_.end() && *it == u)
        return static_cast<int>(it - vertices_.begin());
    return -1;
}

int Nerve::pair_rank(Alt a, Alt b) const {
    const int m = domain_.alternatives().size();
    if (a < 0 || b <= a || b >= m)
        throw PreconditionError("pair_rank needs 0 <= a < b < m");
    return pair_index_[static_cast<size_t>(a * m + b)];
}

int Nerve::facet_vertex(int i, Alt a, Alt b) const {
    return facet_by_pair_.at(static_cast<size_t>(i))[static_cast<size_t>(pair_rank(a, b))];
}

int Nerve::dimension() const { return static_cast<int>(pairs_.size()) - 1; }

bool Nerve::is_simplex(std::span<const int> sorted_vertex_ids) const {
    if (sorted_vertex_ids.empty())
        return false;
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), sorted_vertex_ids.begin(), sorted_vertex_ids.end()))
            return true;
    return false;
}

namespace {

// Streams every subset of every facet once: a subset is emitted from its
// first containing facet only, so no dedup store is needed.
void enumerate_simplices(const std::vector<std::vector<int>>& facets, int max_dim,
                         const std::function<void(std::span<const int>)>& visit) {
    if (max_dim < 0)
        throw PreconditionError("skeleton level must be non-negative");
    std::vector<int> subset;
    for (size_t fi = 0; fi < facets.size(); ++fi) {
        const auto& f = facets[fi];
        auto first_containing = [&](std::span<const int> s) {
            for (size_t fj = 0; fj < fi; ++fj) {
                const auto& g = facets[fj];
                if (std::includes(g.begin(), g.end(), s.begin(), s.end()))
                    return false;
            }
            return true;
        };
        const int take_max = std::min(max_dim + 1, static_cast<int>(f.size()));
        for (int k = 1; k <= take_max; ++k) {
            subset.assign(static_cast<size_t>(k), 0);
            std::vector<int> idx(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                idx[static_cast<size_t>(i)] = i;
            const int nf = static_cast<int>(f.size());
            while (true) {
                for (int i = 0; i < k; ++i)
                    subset[static_cast<size_t>(i)] =
                        f[static_cast<size_t>(idx[static_cast<size_t>(i)])];
                if (first_containing(subset))
                    visit(subset);
                int i = k - 1;
                while (i >= 0 && idx[static_cast<size_t>(i)] == nf - k + i)
                    --i;
                if (i < 0)
                    break;
                ++idx[static_cast<size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            }
        }
    }
}

std::vector<std::vector<int>> collect_skeleton(const std::vector<std::vector<int>>& facets,
                                               int l) {
    std::vector<std::vector<int>> out;
    enumerate_simplices(facets, l,
                        [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); });
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return x < y;
    });
    return out;
}

} // namespace

void Nerve::for_each_simplex(int max_dim,
                             const std::function<void(std::span<const int>)>& visit) const {
    enumerate_simplices(facets_, max_dim, visit);
}

std::vector<std::vector<int>> Nerve::skeleton(int l) const { return collect_skeleton(facets_, l); }

Nerve build_nerve(Domain d) { return Nerve(std::move(d)); }

SocialNerve::SocialNerve(AlternativeSet alts) : alts_(std::move(alts)) {
    const int m = alts_.size();
    if (m < 2)
        throw PreconditionError("social nerve needs at least two alternatives");
    for (Alt a = 0; a < m; ++a)
        for (Alt b = a + 1; b < m; ++b) {
            vertices_.push_back(SocialLabel{a, b, +1});
            vertices_.push_back(SocialLabel{a, b, -1});
        }
    std::sort(vertices_.begin(), vertices_.end());
    rankings_ = enumerate_rankings(alts_);
    for (const auto& r : rankings_) {
        std::vector<int> ids;
        for (Alt a = 0; a < m; ++a)
            for (Alt b = a + 1; b < m; ++b)
                ids.push_back(vertex_index(
                    SocialLabel{a, b, static_cast<std::int8_t>(r.prefers(a, b) ? +1 : -1)}));
        std::sort(ids.begin(), ids.end());
        facets_.push_back(std::move(ids));
    }
}

int SocialNerve::vertex_index(const SocialLabel& u) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u);
    if (it != vertices_.end() && *it == u)
        return static_cast<int>(it - vertices_.begin());
    return -1;
}

int SocialNerve::dimension() const {
    const int m = alts_.size();
    return m * (m - 1) / 2 - 1;
}

bool SocialNerve::is_pure() const {
    const size_t want = static_cast<size_t>(dimension() + 1);
    for (const auto& f : facets_)
        if (f.size() != want)
            return false;
    return true;
}

bool SocialNerve::is_simplex(std::span<const int> sorted_vertex_ids) const {
    if (sorted_vertex_ids.empty())
        return false;
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), sorted_vertex_ids.begin(), sorted_vertex_ids.end()))
            return true;
    return false;
}

void SocialNerve::for_each_simplex(
    int max_dim, const std::function<void(std::span<const int>)>& visit) const {
    enumerate_simplices(facets_, max_dim, visit);
}

std::vector<std::vector<int>> SocialNerve::skeleton(int l) const {
    return collect_skeleton(facets_, l);
}

SocialNerve build_social_nerve(AlternativeSet alts) { return SocialNerve(std::move(alts)); }

Simplex g_sub(const Profile& subprofile, std::span<const Alt> subset) {
    if (static_cast<int>(subset.size()) != subprofile.alternatives())
        throw PreconditionError("subset size must match the subprofile's alternatives");
    Simplex out;
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            out.push_back(Label{subset[static_cast<size_t>(i)], subset[static_cast<size_t>(j)],
                                pair_sign_vector(subprofile, i, j)});
    std::sort(out.begin(), out.end());
    return out;
}

Profile h_sub(const Nerve& nerve, const Simplex& simplex) {
    if (simplex.empty())
        throw PreconditionError("empty label set");
    // Collect the alternatives of Y and check one label per pair.
    std::set<Alt> ys;
    std::set<std::pair<Alt, Alt>> pairs;
    for (const auto& u : simplex) {
        if (u.a >= u.b)
            throw PreconditionError("labels must be canonical");
        ys.insert(u.a);
        ys.insert(u.b);
        if (!pairs.emplace(u.a, u.b).second)
            throw PreconditionError("duplicate pair in label set");
    }
    std::vector<Alt> y(ys.begin(), ys.end());
    const size_t want = y.size() * (y.size() - 1) / 2;
    if (simplex.size() != want)
        throw PreconditionError("label set must cover every pair of its alternatives exactly once");
    // Find a realizing profile in D.
    for (const auto& p : nerve.domain().profiles()) {
        bool ok = true;
        for (const auto& u : simplex)
            if (!(pair_sign_vector(p, u.a, u.b) == u.sigma)) {
                ok = false;
                break;
            }
        if (ok)
            return restrict_profile(p, y);
    }
    throw PreconditionError("label set is not realized by any profile of the domain");
}

SocialSimplex g_social(const Ranking& r) {
    SocialSimplex out;
    const int m = r.size();
    for (Alt a = 0; a < m; ++a)
        for (Alt b = a + 1; b < m; ++b)
            out.push_back(SocialLabel{a, b, static_cast<std::int8_t>(r.prefers(a, b) ? +1 : -1)});
    std::sort(out.begin(), out.end());
    return out;
}

Ranking h_social(const SocialSimplex& facet, int m) {
    const size_t want = static_cast<size_t>(m) * (m - 1) / 2;
    if (facet.size() != want)
        throw PreconditionError("facet must have one label per pair");
    // wins[a] = how many b it beats; a transitive tournament has score
    // sequence m-1, m-2, ..., 0.
    std::vector<int> wins(static_cast<size_t>(m), 0);
    std::set<std::pair<Alt, Alt>> pairs;
    for (const auto& u : facet) {
        if (u.a < 0 || u.a >= u.b || u.b >= m)
            throw PreconditionError("label out of range or not canonical");
        if (!pairs.emplace(u.a, u.b).second)
            throw PreconditionError("duplicate pair in facet");
        ++wins[static_cast<size_t>(u.sign > 0 ? u.a : u.b)];
    }
    std::vector<Alt> order(static_cast<size_t>(m));
    std::vector<bool> used(static_cast<size_t>(m), false);
    for (int pos = 0; pos < m; ++pos) {
        int wantScore = m - 1 - pos;
        Alt who = -1;
        for (Alt a = 0; a < m; ++a)
            if (!used[static_cast<size_t>(a)] && wins[static_cast<size_t>(a)] == wantScore) {
                who = a;
                break;
            }
        if (who < 0)
            throw PreconditionError("label set encodes an intransitive relation");
        used[static_cast<size_t>(who)] = true;
        order[static_cast<size_t>(pos)] = who;
    }
    return Ranking(std::move(order));
}

bool is_dbt_edge(const SocialLabel& u, const SocialLabel& v) {
    if (u.a == v.a && u.b == v.b)
        throw PreconditionError("edge vertices must carry distinct pairs");
    // Directed reading: + means first-over-second on the canonical pair.
    Alt ut = u.sign > 0 ? u.a : u.b, uh = u.sign > 0 ? u.b : u.a;
    Alt vt = v.sign > 0 ? v.a : v.b, vh = v.sign > 0 ? v.b : v.a;
    return uh == vt || vh == ut;
}

std::string vertex_name(const Label& u, const AlternativeSet& alts) {
    return "U[" + alts.name(u.a) + "," + alts.name(u.b) + "][" + u.sigma.str() + "]";
}

std::string vertex_name(const SocialLabel& u, const AlternativeSet& alts) {
    return "U[" + alts.name(u.a) + "," + alts.name(u.b) + "][" + (u.sign > 0 ? "+" : "-") + "]";
}

std::string to_dot(const Nerve& nerve) {
    const auto& alts = nerve.alternatives();
    std::ostringstream out;
    out << "graph nerve {\n";
    for (const auto& u : nerve.vertices())
        out << "  \"" << vertex_name(u, alts) << "\";\n";
    auto skel = nerve.skeleton(2);
    for (const auto& s : skel)
        if (s.size() == 2)
            out << "  \"" << vertex_name(nerve.vertex(s[0]), alts) << "\" -- \""
                << vertex_name(nerve.vertex(s[1]), alts) << "\";\n";
    out << "  // 2-simplices\n";
    for (const auto& s : skel)
        if (s.size() == 3)
            out << "  // {" << vertex_name(nerve.vertex(s[0]), alts) << ", "
                << vertex_name(nerve.vertex(s[1]), alts) << ", "
                << vertex_name(nerve.vertex(s[2]), alts) << "}\n";
    out << "}\n";
    return out.str();
}

} // namespace arrovian
