#include "arrovian/swf.hpp"

#include <algorithm>
#include <map>

namespace arrovian {

SwfTable::SwfTable(Domain domain, std::vector<Ranking> outputs)
    : domain_(std::move(domain)), outputs_(std::move(outputs)) {
    if (static_cast<int>(outputs_.size()) != domain_.size())
        throw PreconditionError("table must assign an output to every profile of the domain");
    for (const auto& r : outputs_)
        if (r.size() != domain_.alternatives().size())
            throw PreconditionError("table outputs must rank the domain's alternatives");
}

SwfTable SwfTable::projection(const Domain& d, int voter) {
    if (voter < 0 || voter >= d.voters())
        throw PreconditionError("projection voter out of range");
    std::vector<Ranking> out;
    out.reserve(static_cast<size_t>(d.size()));
    for (const auto& p : d.profiles())
        out.push_back(p.ranking(voter));
    return SwfTable(d, std::move(out));
}

SwfTable SwfTable::constant(const Domain& d, Ranking value) {
    std::vector<Ranking> out(static_cast<size_t>(d.size()), value);
    return SwfTable(d, std::move(out));
}

const Ranking& SwfTable::output(const Profile& p) const {
    const auto& ps = domain_.profiles();
    auto it = std::lower_bound(ps.begin(), ps.end(), p);
    if (it == ps.end() || !(*it == p))
        throw PreconditionError("profile is not in the table's domain");
    return outputs_[static_cast<size_t>(it - ps.begin())];
}

ChromaticMap::ChromaticMap(NervePtr nerve, std::vector<std::int8_t> signs)
    : nerve_(std::move(nerve)), signs_(std::move(signs)) {
    if (!nerve_)
        throw PreconditionError("chromatic map needs a nerve");
    if (static_cast<int>(signs_.size()) != nerve_->vertex_count())
        throw PreconditionError("chromatic map must sign every vertex of the nerve");
    for (auto s : signs_)
        if (s != 1 && s != -1)
            throw PreconditionError("signs must be +1 or -1");
}

std::int8_t ChromaticMap::sign_of(Alt alpha, Alt beta, const SignVector& sigma) const {
    Label u = canonical_label(alpha, beta, sigma);
    int id = nerve_->vertex_index(u);
    if (id < 0)
        return 0;
    std::int8_t s = signs_[static_cast<size_t>(id)];
    return alpha < beta ? s : static_cast<std::int8_t>(-s);
}

std::string ChromaticMap::sign_string() const {
    std::string out(signs_.size(), '+');
    for (size_t i = 0; i < signs_.size(); ++i)
        if (signs_[i] < 0)
            out[i] = '-';
    return out;
}

std::optional<IiaViolation> find_iia_violation(const SwfTable& f) {
    const auto& d = f.domain();
    const int m = d.alternatives().size();
    for (Alt a = 0; a < m; ++a) {
        for (Alt b = a + 1; b < m; ++b) {
            // group profiles by their pair restriction; outputs must agree
            std::map<SignVector, std::pair<int, bool>> first; // sigma -> (profile, a over b)
            for (int i = 0; i < d.size(); ++i) {
                SignVector sig = pair_sign_vector(d.profile(i), a, b);
                bool out = f.output(i).prefers(a, b);
                auto [it, inserted] = first.try_emplace(sig, i, out);
                if (!inserted && it->second.second != out)
                    return IiaViolation{a, b, it->second.first, i};
            }
        }
    }
    return std::nullopt;
}

bool satisfies_iia(const SwfTable& f) { return !find_iia_violation(f).has_value(); }

bool satisfies_unanimity(const SwfTable& f) {
    const auto& d = f.domain();
    const int m = d.alternatives().size();
    for (int i = 0; i < d.size(); ++i) {
        const Profile& p = d.profile(i);
        for (Alt a = 0; a < m; ++a)
            for (Alt b = 0; b < m; ++b) {
                if (a == b)
                    continue;
                bool all = true;
                for (int v = 0; v < d.voters(); ++v)
                    if (!p.ranking(v).prefers(a, b)) {
                        all = false;
                        break;
                    }
                if (all && !f.output(i).prefers(a, b))
                    return false;
            }
    }
    return true;
}

bool map_satisfies_unanimity(const ChromaticMap& f) {
    const auto& verts = f.nerve().vertices();
    for (size_t i = 0; i < verts.size(); ++i) {
        // the all-minus canonical spelling is U_{ba}^{sigma^N}; unanimity
        // pins it to the negative side
        if (verts[i].sigma.is_all_plus() && f.sign_at(static_cast<int>(i)) != +1)
            return false;
        if (verts[i].sigma.is_all_minus() && f.sign_at(static_cast<int>(i)) != -1)
            return false;
    }
    return true;
}

std::vector<int> dictators(const SwfTable& f) {
    std::vector<int> out;
    for (int v = 0; v < f.domain().voters(); ++v) {
        bool ok = true;
        for (int i = 0; i < f.domain().size() && ok; ++i)
            ok = f.output(i) == f.domain().profile(i).ranking(v);
        if (ok)
            out.push_back(v + 1);
    }
    return out;
}

std::vector<int> dictators(const ChromaticMap& f) {
    const auto& verts = f.nerve().vertices();
    std::vector<int> out;
    for (int v = 0; v < f.nerve().voters(); ++v) {
        bool ok = true;
        for (size_t i = 0; i < verts.size() && ok; ++i) {
            std::int8_t want = verts[i].sigma.plus(v) ? +1 : -1;
            ok = f.sign_at(static_cast<int>(i)) == want;
        }
        if (ok)
            out.push_back(v + 1);
    }
    return out;
}

ChromaticMap to_chromatic_map(const SwfTable& f, NervePtr nerve) {
    if (!nerve || !(nerve->domain() == f.domain()))
        throw PreconditionError("nerve was not built from the table's domain");
    if (auto v = find_iia_violation(f)) {
        const auto& alts = f.domain().alternatives();
        throw PreconditionError(
            "table violates IIA on pair {" + alts.name(v->a) + "," + alts.name(v->b) +
            "}: profiles (" + profile_str(f.domain().profile(v->profile_i), alts) + ") and (" +
            profile_str(f.domain().profile(v->profile_j), alts) +
            ") agree on the pair but the outputs differ on it");
    }
    // each vertex has non-empty support by nerve construction; pick the
    // first facet containing it
    std::vector<int> witness(static_cast<size_t>(nerve->vertex_count()), -1);
    for (int i = 0; i < nerve->facet_count(); ++i)
        for (int id : nerve->facet(i))
            if (witness[static_cast<size_t>(id)] < 0)
                witness[static_cast<size_t>(id)] = i;
    std::vector<std::int8_t> signs(static_cast<size_t>(nerve->vertex_count()), 0);
    for (int id = 0; id < nerve->vertex_count(); ++id) {
        const Label& u = nerve->vertex(id);
        const Ranking& out = f.output(witness[static_cast<size_t>(id)]);
        signs[static_cast<size_t>(id)] = out.prefers(u.a, u.b) ? +1 : -1;
    }
    return ChromaticMap(std::move(nerve), std::move(signs));
}

SwfTable to_swf_table(const ChromaticMap& f) {
    const Nerve& nv = f.nerve();
    const int m = nv.alternatives().size();
    std::vector<Ranking> outputs;
    outputs.reserve(static_cast<size_t>(nv.facet_count()));
    for (int i = 0; i < nv.facet_count(); ++i) {
        SocialSimplex image;
        for (Alt a = 0; a < m; ++a)
            for (Alt b = a + 1; b < m; ++b)
                image.push_back(SocialLabel{a, b, f.sign_at(nv.facet_vertex(i, a, b))});
        std::sort(image.begin(), image.end());
        try {
            outputs.push_back(h_social(image, m));
        } catch (const PreconditionError&) {
            throw PreconditionError(
                "map is not simplicial: the facet of profile (" +
                profile_str(nv.domain().profile(i), nv.alternatives()) +
                ") has an intransitive image");
        }
    }
    return SwfTable(nv.domain(), std::move(outputs));
}

bool is_simplicial(const ChromaticMap& f) {
    const Nerve& nv = f.nerve();
    const int m = nv.alternatives().size();
    for (int i = 0; i < nv.facet_count(); ++i) {
        for (Alt a = 0; a < m; ++a)
            for (Alt b = a + 1; b < m; ++b)
                for (Alt c = b + 1; c < m; ++c) {
                    std::int8_t sab = f.sign_at(nv.facet_vertex(i, a, b));
                    std::int8_t sbc = f.sign_at(nv.facet_vertex(i, b, c));
                    std::int8_t sac = f.sign_at(nv.facet_vertex(i, a, c));
                    // the two cyclic tournaments on {a,b,c}
                    if ((sab > 0 && sbc > 0 && sac < 0) || (sab < 0 && sbc < 0 && sac > 0))
                        return false;
                }
    }
    return true;
}

} // namespace arrovian
