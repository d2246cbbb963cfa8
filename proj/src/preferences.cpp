#include "arrovian/preferences.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace arrovian {

AlternativeSet::AlternativeSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw PreconditionError("alternative set must not be empty");
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw PreconditionError("alternative names must not be empty");
        if (!seen.insert(n).second)
            throw PreconditionError("duplicate alternative name: " + n);
    }
}

Alt AlternativeSet::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<Alt>(i);
    return -1;
}

AlternativeSet subset_alternatives(const AlternativeSet& alts, std::span<const Alt> subset) {
    std::vector<std::string> names;
    names.reserve(subset.size());
    Alt prev = -1;
    for (Alt a : subset) {
        if (a < 0 || a >= alts.size())
            throw PreconditionError("subset alternative out of range");
        if (a <= prev)
            throw PreconditionError("subset must be strictly increasing");
        prev = a;
        names.push_back(alts.name(a));
    }
    return AlternativeSet(std::move(names));
}

Ranking::Ranking(std::vector<Alt> best_to_worst) : order_(std::move(best_to_worst)) {
    const int m = static_cast<int>(order_.size());
    if (m == 0)
        throw PreconditionError("ranking must not be empty");
    pos_.assign(static_cast<size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        Alt a = order_[static_cast<size_t>(i)];
        if (a < 0 || a >= m || pos_[static_cast<size_t>(a)] != -1)
            throw PreconditionError("ranking is not a permutation of the alternatives");
        pos_[static_cast<size_t>(a)] = i;
    }
}

Profile::Profile(std::vector<Ranking> rankings) : rankings_(std::move(rankings)) {
    if (rankings_.empty())
        throw PreconditionError("profile needs at least one voter");
    const int m = rankings_.front().size();
    for (const auto& r : rankings_)
        if (r.size() != m)
            throw PreconditionError("all rankings in a profile must share the alternative set");
}

Domain::Domain(AlternativeSet alts, int voters, std::vector<Profile> profiles)
    : alts_(std::move(alts)), voters_(voters), profiles_(std::move(profiles)) {
    if (profiles_.empty())
        throw PreconditionError("domain must not be empty");
    if (voters_ < 1)
        throw PreconditionError("domain needs at least one voter");
    for (const auto& p : profiles_) {
        if (p.voters() != voters_)
            throw PreconditionError("profile voter count does not match the domain");
        if (p.alternatives() != alts_.size())
            throw PreconditionError("profile alternative count does not match the domain");
    }
    std::sort(profiles_.begin(), profiles_.end());
    profiles_.erase(std::unique(profiles_.begin(), profiles_.end()), profiles_.end());
}

bool Domain::contains(const Profile& p) const {
    return std::binary_search(profiles_.begin(), profiles_.end(), p);
}

int Coalition::size() const { return std::popcount(mask & full_mask()); }

std::vector<int> Coalition::members() const {
    std::vector<int> out;
    for (int i = 0; i < voters; ++i)
        if (contains(i))
            out.push_back(i + 1);
    return out;
}

SignVector::SignVector(std::uint32_t plus_mask, int voters) : voters_(voters) {
    if (voters < 1 || voters > 31)
        throw PreconditionError("sign vector supports 1..31 voters");
    plus_mask_ = plus_mask & ((1u << voters) - 1u);
}

bool SignVector::is_all_plus() const { return plus_mask_ == ((1u << voters_) - 1u); }

SignVector SignVector::negated() const { return SignVector(~plus_mask_, voters_); }

std::string SignVector::str() const {
    std::string s(static_cast<size_t>(voters_), '-');
    for (int i = 0; i < voters_; ++i)
        if (plus(i))
            s[static_cast<size_t>(i)] = '+';
    return s;
}

std::strong_ordering SignVector::operator<=>(const SignVector& o) const {
    if (auto c = voters_ <=> o.voters_; c != 0)
        return c;
    for (int i = 0; i < voters_; ++i) {
        // '+' sorts before '-'
        int a = plus(i) ? 0 : 1;
        int b = o.plus(i) ? 0 : 1;
        if (auto c = a <=> b; c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

std::vector<Ranking> enumerate_rankings(const AlternativeSet& alts) {
    std::vector<Alt> perm(static_cast<size_t>(alts.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Ranking> out;
    do {
        out.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

void validate_subset(std::span<const Alt> subset, int m) {
    if (subset.empty())
        throw PreconditionError("restriction subset must not be empty");
    Alt prev = -1;
    for (Alt a : subset) {
        if (a < 0 || a >= m)
            throw PreconditionError("restriction subset is not a subset of the alternatives");
        if (a <= prev)
            throw PreconditionError("restriction subset must be strictly increasing");
        prev = a;
    }
}

} // namespace

Ranking restrict_ranking(const Ranking& r, std::span<const Alt> subset) {
    validate_subset(subset, r.size());
    // Walk the ranking best-to-worst, keeping subset members, reindexed by
    // their rank inside the subset.
    std::vector<Alt> kept;
    kept.reserve(subset.size());
    for (int p = 0; p < r.size(); ++p) {
        Alt a = r.at(p);
        auto it = std::lower_bound(subset.begin(), subset.end(), a);
        if (it != subset.end() && *it == a)
            kept.push_back(static_cast<Alt>(it - subset.begin()));
    }
    return Ranking(std::move(kept));
}

Profile restrict_profile(const Profile& p, std::span<const Alt> subset) {
    std::vector<Ranking> rs;
    rs.reserve(static_cast<size_t>(p.voters()));
    for (const auto& r : p.rankings())
        rs.push_back(restrict_ranking(r, subset));
    return Profile(std::move(rs));
}

Domain restrict_domain(const Domain& d, std::span<const Alt> subset) {
    std::vector<Profile> out;
    out.reserve(static_cast<size_t>(d.size()));
    for (const auto& p : d.profiles())
        out.push_back(restrict_profile(p, subset));
    return Domain(subset_alternatives(d.alternatives(), subset), d.voters(), std::move(out));
}

bool is_value_restricted(const Profile& p, std::span<const Alt> subset) {
    validate_subset(subset, p.alternatives());
    if (subset.size() < 3)
        throw PreconditionError("value restriction needs at least three alternatives");
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            for (int l = j + 1; l < k; ++l) {
                const Alt triple[3] = {subset[static_cast<size_t>(i)],
                                       subset[static_cast<size_t>(j)],
                                       subset[static_cast<size_t>(l)]};
                // occupied[a][pos]: some voter places triple[a] at pos within the triple
                bool occupied[3][3] = {};
                for (const auto& r : p.rankings()) {
                    for (int a = 0; a < 3; ++a) {
                        int pos = 0;
                        for (int b = 0; b < 3; ++b)
                            if (b != a && r.prefers(triple[b], triple[a]))
                                ++pos;
                        occupied[a][pos] = true;
                    }
                }
                bool ok = false;
                for (int a = 0; a < 3 && !ok; ++a)
                    for (int pos = 0; pos < 3 && !ok; ++pos)
                        if (!occupied[a][pos])
                            ok = true;
                if (!ok)
                    return false;
            }
        }
    }
    return true;
}

SignVector pair_sign_vector(const Profile& p, Alt a, Alt b) {
    if (a == b)
        throw PreconditionError("pair sign vector needs two distinct alternatives");
    if (a < 0 || b < 0 || a >= p.alternatives() || b >= p.alternatives())
        throw PreconditionError("alternative out of range");
    std::uint32_t mask = 0;
    for (int i = 0; i < p.voters(); ++i)
        if (p.ranking(i).prefers(a, b))
            mask |= 1u << i;
    return SignVector(mask, p.voters());
}

std::string ranking_str(const Ranking& r, const AlternativeSet& alts) {
    std::string out;
    for (int i = 0; i < r.size(); ++i) {
        if (i > 0)
            out += '>';
        out += alts.name(r.at(i));
    }
    return out;
}

Ranking ranking_from_str(std::string_view text, const AlternativeSet& alts) {
    std::vector<Alt> order;
    size_t start = 0;
    while (start <= text.size()) {
        size_t gt = text.find('>', start);
        std::string_view tok = text.substr(start, gt == std::string_view::npos ? gt : gt - start);
        Alt a = alts.index_of(tok);
        if (a < 0)
            throw ParseError("unknown alternative '" + std::string(tok) + "'");
        order.push_back(a);
        if (gt == std::string_view::npos)
            break;
        start = gt + 1;
    }
    if (static_cast<int>(order.size()) != alts.size())
        throw ParseError("ranking must list every alternative exactly once");
    try {
        return Ranking(std::move(order));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string profile_str(const Profile& p, const AlternativeSet& alts) {
    std::string out;
    for (int i = 0; i < p.voters(); ++i) {
        if (i > 0)
            out += ' ';
        out += ranking_str(p.ranking(i), alts);
    }
    return out;
}

} // namespace arrovian
