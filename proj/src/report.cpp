#include "arrovian/report.hpp"

#include <cstdlib>
#include <thread>

#include "arrovian/swf.hpp"

namespace arrovian {

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Json report_envelope(const std::string& command, const Json& input) {
    Json r;
    r["schema"] = kReportSchema;
    r["tool"] = std::string(kToolName) + " " + std::string(kToolVersion);
    r["command"] = command;
    r["input"] = input;
    return r;
}

Json json_coalition(const Coalition& g) { return g.members(); }

Json json_certificate(const ClassCertificate& cert, const AlternativeSet& alts) {
    Json out;
    out["verdict"] = cert.member ? "member" : "non-member";
    Json entries = Json::array();
    for (const auto& e : cert.entries) {
        Json je;
        Json cs = Json::array();
        for (const auto& g : e.coalitions)
            cs.push_back(json_coalition(g));
        je["coalitions"] = cs;
        if (e.triple) {
            Json t = Json::array();
            for (Alt a : *e.triple)
                t.push_back(alts.name(a));
            je["triple"] = t;
        } else {
            je["triple"] = nullptr;
        }
        je["ok"] = e.ok;
        je["note"] = e.note;
        entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    return out;
}

Json json_map(const ChromaticMap& map, bool with_table) {
    Json out;
    out["signs"] = map.sign_string();
    out["dictators"] = dictators(map);
    if (with_table) {
        SwfTable table = to_swf_table(map);
        Json rows = Json::array();
        const auto& alts = table.domain().alternatives();
        for (int i = 0; i < table.domain().size(); ++i) {
            Json row;
            Json prof = Json::array();
            for (const auto& r : table.domain().profile(i).rankings())
                prof.push_back(ranking_str(r, alts));
            row["profile"] = prof;
            row["output"] = ranking_str(table.output(i), alts);
            rows.push_back(std::move(row));
        }
        out["table"] = std::move(rows);
    }
    return out;
}

Json json_verdict(const Verdict& v, const Domain& d, bool with_tables) {
    Json out;
    out["status"] = v.inconsistent ? "inconsistent" : "consistent";
    out["maps"] = v.maps_found;
    if (v.inconsistent) {
        out["dictators"] = v.dictator_sets;
    } else {
        Json w = json_map(v.maps[static_cast<size_t>(*v.witness_index)], with_tables);
        Json names = Json::array();
        const auto& nv = v.maps[static_cast<size_t>(*v.witness_index)].nerve();
        for (const auto& u : nv.vertices())
            names.push_back(vertex_name(u, d.alternatives()));
        w["vertices"] = std::move(names);
        out["witness"] = std::move(w);
    }
    return out;
}

Json json_audit(const AuditReport& report) {
    Json out;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["instances"] = c.instances;
        jc["failures"] = c.failures;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["failures_total"] = report.failure_count();
    return out;
}

Json json_probe(const ProbeReport& report) {
    Json out;
    out["add"] = report.add;
    out["trials"] = report.trials;
    out["mode"] = report.exhaustive ? "exhaustive" : "sampled";
    out["extensions_tested"] = report.extensions_tested;
    out["all_inconsistent"] = report.all_inconsistent;
    out["failures"] = report.failures;
    return out;
}

int resolve_threads() {
    const char* env = std::getenv("ARROVIAN_THREADS");
    long v = 0;
    if (env && *env)
        v = std::strtol(env, nullptr, 10);
    if (v < 0)
        v = 0;
    if (v == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        v = hw == 0 ? 1 : static_cast<long>(std::min(hw, 8u));
    }
    return static_cast<int>(v);
}

} // namespace arrovian
