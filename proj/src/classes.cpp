#include "arrovian/classes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrovian {

std::uint64_t BitSource::next_bits(int k) {
    std::uint64_t out = 0;
    for (int i = 0; i < k; ++i)
        out = (out << 1) | static_cast<std::uint64_t>(next_bit() & 1);
    return out;
}

std::vector<std::array<Alt, 3>> all_triples(int m) {
    std::vector<std::array<Alt, 3>> out;
    for (Alt a = 0; a < m; ++a)
        for (Alt b = a + 1; b < m; ++b)
            for (Alt c = b + 1; c < m; ++c)
                out.push_back({a, b, c});
    return out;
}

bool is_strongly_polarized(const Profile& p) {
    if (p.alternatives() != 3)
        throw PreconditionError("strong polarization is defined on triples");
    const Ranking& first = p.ranking(0);
    const Ranking* other = nullptr;
    for (int i = 1; i < p.voters(); ++i) {
        const Ranking& r = p.ranking(i);
        if (r == first)
            continue;
        if (other && !(r == *other))
            return false; // three distinct blocks
        other = &r;
    }
    if (!other)
        return false; // unanimous: the coalition would be empty
    int differing = 0;
    for (Alt a = 0; a < 3; ++a)
        for (Alt b = a + 1; b < 3; ++b)
            if (first.prefers(a, b) != other->prefers(a, b))
                ++differing;
    return differing == 2;
}

namespace {

// Rankings over a triple, as index sequences best-to-worst.
using T = std::array<Alt, 3>;
constexpr T kABG{0, 1, 2}, kAGB{0, 2, 1}, kBAG{1, 0, 2}, kBGA{1, 2, 0}, kGAB{2, 0, 1},
    kGBA{2, 1, 0};

// The six (G-side, G^c-side) blocks of the first generator set.
constexpr std::array<std::pair<T, T>, 6> kD1Blocks{{
    {kBGA, kABG},
    {kBAG, kAGB},
    {kABG, kGAB},
    {kAGB, kGBA},
    {kGAB, kBGA},
    {kGBA, kBAG},
}};

// The second set swaps the block roles of the first.
constexpr std::array<std::pair<T, T>, 6> kD2Blocks{{
    {kABG, kBGA},
    {kAGB, kBAG},
    {kGAB, kABG},
    {kGBA, kAGB},
    {kBGA, kGAB},
    {kBAG, kGBA},
}};

Ranking triple_ranking(const T& seq) {
    return Ranking(std::vector<Alt>(seq.begin(), seq.end()));
}

Profile polarized_profile(const Coalition& g, const T& g_side, const T& rest) {
    std::vector<Ranking> rs;
    rs.reserve(static_cast<size_t>(g.voters));
    Ranking pg = triple_ranking(g_side);
    Ranking pc = triple_ranking(rest);
    for (int i = 0; i < g.voters; ++i)
        rs.push_back(g.contains(i) ? pg : pc);
    return Profile(std::move(rs));
}

void validate_triple(const AlternativeSet& alts, std::array<Alt, 3> t) {
    if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < alts.size()))
        throw PreconditionError("triple must be three ascending alternative indices");
}

TripleProfileSet gen_block(const AlternativeSet& alts, std::array<Alt, 3> triple,
                           const Coalition& g,
                           const std::array<std::pair<T, T>, 6>& blocks) {
    validate_triple(alts, triple);
    if (g.empty() || g.full())
        throw PreconditionError("coalition must be non-empty and distinct from the full society");
    std::vector<Profile> ps;
    ps.reserve(6);
    for (const auto& [gp, cp] : blocks)
        ps.push_back(polarized_profile(g, gp, cp));
    std::sort(ps.begin(), ps.end());
    return TripleProfileSet(g, triple, subset_alternatives(alts, triple), std::move(ps));
}

} // namespace

TripleProfileSet gen_d1(const AlternativeSet& alts, std::array<Alt, 3> triple, const Coalition& g) {
    return gen_block(alts, triple, g, kD1Blocks);
}

TripleProfileSet gen_d2(const AlternativeSet& alts, std::array<Alt, 3> triple, const Coalition& g) {
    return gen_block(alts, triple, g, kD2Blocks);
}

namespace {

bool block_in_restriction(const Domain& restricted, const TripleProfileSet& block) {
    for (const auto& p : block.profiles)
        if (!restricted.contains(p))
            return false;
    return true;
}

std::optional<Profile> first_missing(const Domain& restricted, const TripleProfileSet& block) {
    for (const auto& p : block.profiles)
        if (!restricted.contains(p))
            return p;
    return std::nullopt;
}

} // namespace

bool has_polarized_block(const Domain& d, const Coalition& g, std::array<Alt, 3> triple, int i) {
    if (i != 1 && i != 2)
        throw PreconditionError("block index must be 1 or 2");
    Domain restricted = restrict_domain(d, triple);
    auto block = i == 1 ? gen_d1(d.alternatives(), triple, g) : gen_d2(d.alternatives(), triple, g);
    return block_in_restriction(restricted, block);
}

bool in_gy_class(const Domain& d, const Coalition& g, std::span<const Alt> y) {
    if (y.size() < 2)
        throw PreconditionError("the class test needs at least two alternatives");
    SignVector sigma = SignVector::for_coalition(g);
    for (Alt a : y)
        for (Alt b : y) {
            if (a == b)
                continue;
            // U_ab^{sigma^G} is a vertex iff some profile realizes it
            for (const auto& p : d.profiles())
                if (pair_sign_vector(p, a, b) == sigma)
                    return true;
        }
    return false;
}

bool in_nx_class(const Domain& d) {
    std::vector<Alt> xs(static_cast<size_t>(d.alternatives().size()));
    for (size_t i = 0; i < xs.size(); ++i)
        xs[i] = static_cast<Alt>(i);
    return in_gy_class(d, Coalition((1u << d.voters()) - 1u, d.voters()), xs);
}

std::vector<const CertEntry*> ClassCertificate::failures() const {
    std::vector<const CertEntry*> out;
    for (const auto& e : entries)
        if (!e.ok)
            out.push_back(&e);
    return out;
}

ClassCertificate in_pt(const Domain& d) {
    const int m = d.alternatives().size();
    const int n = d.voters();
    if (m < 3 || n < 2)
        throw PreconditionError("polarization class needs at least 3 alternatives and 2 voters");
    auto triples = all_triples(m);
    std::vector<Domain> restricted;
    restricted.reserve(triples.size());
    for (const auto& t : triples)
        restricted.push_back(restrict_domain(d, t));

    ClassCertificate cert;
    cert.member = true;
    const std::uint32_t full = (1u << n) - 1u;
    // one cell per unordered pair {G, G^c}; the representative contains voter 1
    for (std::uint32_t rep = 1; rep < full; rep += 2) {
        Coalition g(rep, n);
        for (size_t t = 0; t < triples.size(); ++t) {
            auto b1 = gen_d1(d.alternatives(), triples[t], g);
            auto b2 = gen_d2(d.alternatives(), triples[t], g);
            bool ok1 = block_in_restriction(restricted[t], b1);
            bool ok2 = block_in_restriction(restricted[t], b2);
            CertEntry e;
            e.coalitions = {g, g.complement()};
            e.triple = triples[t];
            e.ok = ok1 || ok2;
            if (e.ok) {
                e.note = ok1 && ok2 ? "D1+D2" : ok1 ? "D1" : "D2";
            } else {
                const auto& sub = b1.triple_alts;
                e.note = "missing D1 subprofile (" + profile_str(*first_missing(restricted[t], b1), sub) +
                         "), missing D2 subprofile (" + profile_str(*first_missing(restricted[t], b2), sub) + ")";
                cert.member = false;
            }
            cert.entries.push_back(std::move(e));
        }
    }
    return cert;
}

ClassCertificate in_dt(const Domain& d) {
    const int m = d.alternatives().size();
    const int n = d.voters();
    if (m < 3 || n < 2)
        throw PreconditionError("diversity class needs at least 3 alternatives and 2 voters");
    const std::uint32_t full = (1u << n) - 1u;
    ClassCertificate cert;
    cert.member = true;
    for (std::uint32_t gm = 1; gm <= full; ++gm) {
        for (std::uint32_t hm = 1; hm <= full; ++hm) {
            if ((gm & ~hm) == 0 || (hm & ~gm) == 0)
                continue; // comparable
            Coalition g(gm, n), h(hm, n);
            SignVector sg = SignVector::for_coalition(g);
            SignVector sh = SignVector::for_coalition(h);
            SignVector sr = SignVector(~(gm & hm), n); // sigma^{(G and G')^c}
            CertEntry e;
            e.coalitions = {g, h};
            bool found = false;
            for (int pi = 0; pi < d.size() && !found; ++pi) {
                const Profile& p = d.profile(pi);
                for (Alt a = 0; a < m && !found; ++a)
                    for (Alt b = 0; b < m && !found; ++b)
                        for (Alt c = 0; c < m && !found; ++c) {
                            if (a == b || b == c || a == c)
                                continue;
                            if (pair_sign_vector(p, a, b) == sg &&
                                pair_sign_vector(p, b, c) == sh &&
                                pair_sign_vector(p, c, a) == sr) {
                                e.triple = {a, b, c};
                                e.note = "realized by profile (" +
                                         profile_str(p, d.alternatives()) + ")";
                                found = true;
                            }
                        }
            }
            e.ok = found;
            if (!found) {
                e.note = "no realizable simplex for any ordered triple";
                cert.member = false;
            }
            cert.entries.push_back(std::move(e));
        }
    }
    return cert;
}

namespace {

// Lift a triple ranking to X: the triple in its given order, then the
// remaining alternatives below it in ascending index order.
Ranking lift_ranking(const T& triple_order, std::array<Alt, 3> triple, int m) {
    std::vector<Alt> order;
    order.reserve(static_cast<size_t>(m));
    for (Alt k : triple_order)
        order.push_back(triple[static_cast<size_t>(k)]);
    for (Alt a = 0; a < m; ++a)
        if (a != triple[0] && a != triple[1] && a != triple[2])
            order.push_back(a);
    return Ranking(std::move(order));
}

Profile lift_profile(const Profile& triple_profile, std::array<Alt, 3> triple, int m) {
    std::vector<Ranking> rs;
    rs.reserve(static_cast<size_t>(triple_profile.voters()));
    for (const auto& r : triple_profile.rankings()) {
        T seq{r.at(0), r.at(1), r.at(2)};
        rs.push_back(lift_ranking(seq, triple, m));
    }
    return Profile(std::move(rs));
}

// The diversity witness pattern for an ordered pair (G, G') on a triple
// (a, b, c): G\G' ranks c a b, G&G' ranks a b c, G'\G ranks b c a, everyone
// else c b a. It realizes {U_ab^{sG}, U_bc^{sG'}, U_ca^{s(G&G')^c}}.
Profile diversity_witness(std::uint32_t gm, std::uint32_t hm, std::array<Alt, 3> triple, int m,
                          int n) {
    std::vector<Ranking> rs;
    rs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        bool ing = (gm >> i) & 1u, inh = (hm >> i) & 1u;
        T seq = ing && inh ? kABG : ing ? kGAB : inh ? kBGA : kGBA;
        rs.push_back(lift_ranking(seq, triple, m));
    }
    return Profile(std::move(rs));
}

int ceil_log2(int k) {
    int bits = 0;
    while ((1 << bits) < k)
        ++bits;
    return bits;
}

} // namespace

Domain gen_ptdt_domain(const AlternativeSet& alts, int voters, BitSource& choices) {
    const int m = alts.size();
    if (m < 3 || voters < 2)
        throw PreconditionError("witness generation needs at least 3 alternatives and 2 voters");
    if (voters > 10)
        throw PreconditionError("witness generation supports up to 10 voters");
    auto triples = all_triples(m);
    const std::uint32_t full = (1u << voters) - 1u;
    std::vector<Profile> profiles;

    for (std::uint32_t rep = 1; rep < full; rep += 2) {
        Coalition g(rep, voters);
        for (const auto& t : triples) {
            int pick = choices.next_bit() ? 2 : 1;
            auto block = pick == 1 ? gen_d1(alts, t, g) : gen_d2(alts, t, g);
            for (const auto& p : block.profiles)
                profiles.push_back(lift_profile(p, t, m));
        }
    }
    const int triple_bits = ceil_log2(static_cast<int>(triples.size()));
    for (std::uint32_t gm = 1; gm <= full; ++gm)
        for (std::uint32_t hm = 1; hm <= full; ++hm) {
            if ((gm & ~hm) == 0 || (hm & ~gm) == 0)
                continue;
            size_t t = triple_bits == 0
                           ? 0
                           : static_cast<size_t>(choices.next_bits(triple_bits) % triples.size());
            profiles.push_back(diversity_witness(gm, hm, triples[t], m, voters));
        }

    Domain out(alts, voters, std::move(profiles));
    if (!in_pt(out).member || !in_dt(out).member)
        throw std::logic_error("generated witness domain failed re-verification");
    return out;
}

bool check_upward_closure(const Domain& d_member, const Domain& d_super) {
    if (!(d_member.alternatives() == d_super.alternatives()) ||
        d_member.voters() != d_super.voters())
        throw PreconditionError("superset domain must share alternatives and voters");
    for (const auto& p : d_member.profiles())
        if (!d_super.contains(p))
            throw PreconditionError("the second domain does not contain the first");
    return in_pt(d_super).member && in_dt(d_super).member;
}

} // namespace arrovian
