#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrovian/preferences.hpp"

namespace arrovian {

/// Supplies the selection bits that drive witness-domain generation. The CLI
/// feeds it from the seed expander; tests can fix the stream.
class BitSource {
public:
    virtual ~BitSource() = default;
    virtual int next_bit() = 0;
    /// k bits, first bit most significant.
    std::uint64_t next_bits(int k);
};

/// All-zero choices: D_1 everywhere, first triple for every diversity witness.
class ZeroBits final : public BitSource {
public:
    int next_bit() override { return 0; }
};

/// The six-profile generator block for a coalition and a triple: one profile
/// per ranking on the coalition side, each strongly polarized.
struct TripleProfileSet {
    Coalition g;
    std::array<Alt, 3> triple{}; // X-indices, ascending
    AlternativeSet triple_alts;  // the sub-alternative set of the triple
    std::vector<Profile> profiles; // six, canonically sorted

    TripleProfileSet(Coalition g_, std::array<Alt, 3> t, AlternativeSet a, std::vector<Profile> ps)
        : g(g_), triple(t), triple_alts(std::move(a)), profiles(std::move(ps)) {}
};

/// True iff the profile on a triple splits into two blocks (G: P, G^c: P')
/// with P and P' differing on exactly two of the three pairs.
bool is_strongly_polarized(const Profile& p);

TripleProfileSet gen_d1(const AlternativeSet& alts, std::array<Alt, 3> triple, const Coalition& g);
TripleProfileSet gen_d2(const AlternativeSet& alts, std::array<Alt, 3> triple, const Coalition& g);

/// True iff every profile of gen_d{i} lies in D restricted to the triple;
/// equivalently B_i(G, triple) is a subcomplex of N_D.
bool has_polarized_block(const Domain& d, const Coalition& g, std::array<Alt, 3> triple, int i);

/// True iff some ordered pair from y yields a vertex U_ab^{sigma^G} of N_D.
bool in_gy_class(const Domain& d, const Coalition& g, std::span<const Alt> y);
/// The unanimity-vertex class: in_gy_class with G = N, Y = X.
bool in_nx_class(const Domain& d);

/// One line of a membership certificate. For the polarization class an entry
/// covers an unordered coalition pair {G, G^c} and a triple; for the
/// diversity class an ordered coalition pair, with the triple carrying the
/// witness orientation.
struct CertEntry {
    std::vector<Coalition> coalitions;
    std::optional<std::array<Alt, 3>> triple;
    bool ok = false;
    std::string note;
};

struct ClassCertificate {
    bool member = false;
    std::vector<CertEntry> entries;

    std::vector<const CertEntry*> failures() const;
};

/// Membership in the polarization-over-triples class: every proper coalition
/// and triple has a full D_1 or D_2 block among the restricted profiles.
/// Iterates unordered pairs {G, G^c}; the block sets swap under
/// complementation, so the verdict is unchanged.
ClassCertificate in_pt(const Domain& d);

/// Membership in the diversity-over-triples class: every ordered pair of
/// incomparable coalitions has a realizable simplex
/// {U_ab^{sG}, U_bc^{sG'}, U_ca^{s(G and G')^c}}.
ClassCertificate in_dt(const Domain& d);

/// Builds a minimal member of both classes: lifted D_1/D_2 blocks per
/// (coalition pair, triple) cell plus one lifted diversity witness per
/// ordered incomparable coalition pair. Membership is re-verified before
/// returning.
Domain gen_ptdt_domain(const AlternativeSet& alts, int voters, BitSource& choices);

/// Re-runs both membership checks on a superset domain. Errors unless
/// d_member's profiles all appear in d_super.
bool check_upward_closure(const Domain& d_member, const Domain& d_super);

/// Ordered triples (ranks) of the alternative set, lexicographic.
std::vector<std::array<Alt, 3>> all_triples(int m);

} // namespace arrovian
