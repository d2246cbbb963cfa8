#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrovian/errors.hpp"

namespace arrovian {

/// Alternatives are indices into the declared name list of an AlternativeSet.
/// Every canonical ordering in this library is index order, so results do not
/// depend on how alternatives are spelled.
using Alt = int;

class AlternativeSet {
public:
    explicit AlternativeSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Alt a) const { return names_.at(static_cast<size_t>(a)); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a name, or -1 when unknown.
    Alt index_of(std::string_view name) const;

    bool operator==(const AlternativeSet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

/// Builds the alternative set for a subset Y of X, keeping X's index order.
/// `subset` must be strictly increasing X-indices.
AlternativeSet subset_alternatives(const AlternativeSet& alts, std::span<const Alt> subset);

/// A strict total order on alternatives 0..m-1, stored best-to-worst.
class Ranking {
public:
    explicit Ranking(std::vector<Alt> best_to_worst);

    int size() const { return static_cast<int>(order_.size()); }
    Alt at(int position) const { return order_.at(static_cast<size_t>(position)); }
    int position_of(Alt a) const { return pos_.at(static_cast<size_t>(a)); }
    bool prefers(Alt a, Alt b) const { return position_of(a) < position_of(b); }
    const std::vector<Alt>& order() const { return order_; }

    std::strong_ordering operator<=>(const Ranking& o) const { return order_ <=> o.order_; }
    bool operator==(const Ranking& o) const { return order_ == o.order_; }

private:
    std::vector<Alt> order_;
    std::vector<int> pos_;
};

/// One ranking per voter, all over the same alternative set.
class Profile {
public:
    explicit Profile(std::vector<Ranking> rankings);

    int voters() const { return static_cast<int>(rankings_.size()); }
    int alternatives() const { return rankings_.front().size(); }
    const Ranking& ranking(int voter) const { return rankings_.at(static_cast<size_t>(voter)); }
    const std::vector<Ranking>& rankings() const { return rankings_; }

    std::strong_ordering operator<=>(const Profile& o) const { return rankings_ <=> o.rankings_; }
    bool operator==(const Profile& o) const { return rankings_ == o.rankings_; }

private:
    std::vector<Ranking> rankings_;
};

/// A non-empty, deduplicated, canonically sorted set of profiles.
class Domain {
public:
    Domain(AlternativeSet alts, int voters, std::vector<Profile> profiles);

    const AlternativeSet& alternatives() const { return alts_; }
    int voters() const { return voters_; }
    int size() const { return static_cast<int>(profiles_.size()); }
    const std::vector<Profile>& profiles() const { return profiles_; }
    const Profile& profile(int i) const { return profiles_.at(static_cast<size_t>(i)); }
    bool contains(const Profile& p) const;

    bool operator==(const Domain& o) const {
        return alts_ == o.alts_ && voters_ == o.voters_ && profiles_ == o.profiles_;
    }

private:
    AlternativeSet alts_;
    int voters_;
    std::vector<Profile> profiles_;
};

/// A subset of the voters 1..n, stored as a bitmask with bit i-1 for voter i.
struct Coalition {
    std::uint32_t mask = 0;
    int voters = 0;

    Coalition() = default;
    Coalition(std::uint32_t m, int n) : mask(m), voters(n) {}

    bool contains(int voter) const { return (mask >> voter) & 1u; } // 0-based
    bool empty() const { return mask == 0; }
    bool full() const { return mask == full_mask(); }
    std::uint32_t full_mask() const { return (voters >= 32) ? ~0u : ((1u << voters) - 1u); }
    Coalition complement() const { return Coalition(~mask & full_mask(), voters); }
    int size() const;

    /// Voter numbers, 1-based ascending, for reports.
    std::vector<int> members() const;

    bool operator==(const Coalition& o) const { return mask == o.mask && voters == o.voters; }
};

/// One +/- sign per voter. Negation flips every entry.
class SignVector {
public:
    SignVector() = default;
    SignVector(std::uint32_t plus_mask, int voters);

    static SignVector all_plus(int voters) { return SignVector(~0u, voters); }
    static SignVector all_minus(int voters) { return SignVector(0, voters); }
    /// sigma^G: + exactly on the coalition's members.
    static SignVector for_coalition(const Coalition& g) { return SignVector(g.mask, g.voters); }

    int voters() const { return voters_; }
    bool plus(int voter) const { return (plus_mask_ >> voter) & 1u; } // 0-based
    std::uint32_t plus_mask() const { return plus_mask_; }
    bool is_all_plus() const;
    bool is_all_minus() const { return plus_mask_ == 0; }
    SignVector negated() const;

    /// Rendered voter 1 first, e.g. "+-" for sigma_1=+, sigma_2=-.
    std::string str() const;

    /// Canonical order: voter 1 is most significant, '+' before '-'.
    std::strong_ordering operator<=>(const SignVector& o) const;
    bool operator==(const SignVector& o) const {
        return voters_ == o.voters_ && plus_mask_ == o.plus_mask_;
    }

private:
    std::uint32_t plus_mask_ = 0; // bit i set: voter i (0-based) signs '+'
    int voters_ = 0;
};

/// All m! strict total orders, in lexicographic order of alternative indices.
std::vector<Ranking> enumerate_rankings(const AlternativeSet& alts);

/// Restriction of a ranking to the alternatives in `subset` (strictly
/// increasing X-indices), reindexed to 0..|subset|-1.
Ranking restrict_ranking(const Ranking& r, std::span<const Alt> subset);
Profile restrict_profile(const Profile& p, std::span<const Alt> subset);
/// Componentwise restriction of every profile; the image is a set, so the
/// result is deduplicated.
Domain restrict_domain(const Domain& d, std::span<const Alt> subset);

/// Sen's value restriction over Y: every triple in Y has some alternative
/// that no voter places top, or none places middle, or none places bottom.
bool is_value_restricted(const Profile& p, std::span<const Alt> subset);

/// Entry i is + iff voter i ranks a above b.
SignVector pair_sign_vector(const Profile& p, Alt a, Alt b);

/// Renders "x>y>z" using declared names.
std::string ranking_str(const Ranking& r, const AlternativeSet& alts);
/// Parses "x>y>z" against declared names.
Ranking ranking_from_str(std::string_view text, const AlternativeSet& alts);
std::string profile_str(const Profile& p, const AlternativeSet& alts);

} // namespace arrovian
