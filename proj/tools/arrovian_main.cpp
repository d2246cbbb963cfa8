#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "arrovian/domain_io.hpp"
#include "arrovian/report.hpp"
#include "arrovian/seedstream.hpp"

namespace {

using arrovian::Json;

struct LoadedDomain {
    arrovian::Domain domain;
    Json input;
};

LoadedDomain load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw arrovian::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto parsed = arrovian::parse_domain(text);
    for (const auto& w : parsed.warnings)
        std::cerr << "warning: " << path << ": " << w << '\n';
    Json input;
    input["path"] = path;
    input["digest"] = arrovian::digest(text);
    return LoadedDomain{std::move(parsed.domain), std::move(input)};
}

std::string command_echo(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1)
            out += ' ';
        out += argv[i];
    }
    return out;
}

void emit(Json report, bool quiet, const arrovian::SearchStats* stats) {
    if (!quiet) {
        Json js;
        js["workers"] = stats ? stats->workers : 1;
        if (stats) {
            js["nodes"] = stats->nodes;
            js["prunes"] = stats->prunes;
        }
        report["stats"] = std::move(js);
    }
    std::cout << report.dump(2) << '\n';
}

std::vector<std::string> gen_names(int m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) {
        std::string n(1, static_cast<char>('a' + i % 26));
        if (i >= 26)
            n += std::to_string(i / 26);
        names.push_back(std::move(n));
    }
    return names;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nerve complexes, chromatic map enumeration and Arrow verdicts for preference domains"};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress the stats block");

    // nerve build
    auto* nerve_cmd = app.add_subcommand("nerve", "nerve complex operations");
    nerve_cmd->require_subcommand(1);
    auto* nerve_build = nerve_cmd->add_subcommand("build", "build N_D and report its shape");
    std::string nb_file, nb_dot;
    nerve_build->add_option("file", nb_file, "domain file")->required();
    nerve_build->add_option("--dot", nb_dot, "write the 2-skeleton as DOT");

    // domain check / gen
    auto* domain_cmd = app.add_subcommand("domain", "domain class operations");
    domain_cmd->require_subcommand(1);
    auto* domain_check = domain_cmd->add_subcommand("check", "class membership with certificate");
    std::string dc_file, dc_class;
    domain_check->add_option("file", dc_file, "domain file")->required();
    domain_check->add_option("--class", dc_class, "pt|dt|ptdt|nx")->required();
    auto* domain_gen = domain_cmd->add_subcommand("gen", "generate a seeded witness domain");
    int dg_alts = 3, dg_voters = 2;
    std::uint64_t dg_seed = 0;
    std::string dg_out;
    domain_gen->add_option("--alternatives", dg_alts, "alternative count")->required();
    domain_gen->add_option("--voters", dg_voters, "voter count")->required();
    domain_gen->add_option("--seed", dg_seed, "64-bit seed")->required();
    domain_gen->add_option("-o,--output", dg_out, "output file")->required();

    // swf enumerate / verdict
    auto* swf_cmd = app.add_subcommand("swf", "social welfare function operations");
    swf_cmd->require_subcommand(1);
    auto* swf_enum = swf_cmd->add_subcommand("enumerate", "all unanimous simplicial maps");
    std::string se_file;
    bool se_tables = false;
    swf_enum->add_option("file", se_file, "domain file")->required();
    swf_enum->add_flag("--tables", se_tables, "attach the explicit tables");
    auto* swf_verdict = swf_cmd->add_subcommand("verdict", "Arrow consistency decision");
    std::string sv_file;
    swf_verdict->add_option("file", sv_file, "domain file")->required();

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "machine-check the structural lemmas");
    std::string au_file;
    audit_cmd->add_option("file", au_file, "domain file")->required();

    // probe super
    auto* probe_cmd = app.add_subcommand("probe", "superdomain probes");
    probe_cmd->require_subcommand(1);
    auto* probe_super = probe_cmd->add_subcommand("super", "verdicts on extended domains");
    std::string ps_file;
    int ps_add = 1;
    std::uint64_t ps_trials = 100, ps_seed = 0, ps_budget = 10000;
    probe_super->add_option("--file", ps_file, "domain file")->required();
    probe_super->add_option("--add", ps_add, "profiles added per extension")->required();
    probe_super->add_option("--trials", ps_trials, "samples when not exhaustive")->required();
    probe_super->add_option("--seed", ps_seed, "sampling seed");
    probe_super->add_option("--budget", ps_budget, "max extensions for the exhaustive sweep");

    // ultra enum
    auto* ultra_cmd = app.add_subcommand("ultra", "ultrafilter operations");
    ultra_cmd->require_subcommand(1);
    auto* ultra_enum = ultra_cmd->add_subcommand("enum", "exhaustive ultrafilter sweep");
    int ue_voters = 2;
    ultra_enum->add_option("--voters", ue_voters, "voter count (1..4)")->required();

    // let --quiet appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands({}))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const std::string cmd = command_echo(argc, argv);
    const int threads = arrovian::resolve_threads();
    try {
        if (*nerve_build) {
            auto in = load(nb_file);
            auto nerve = arrovian::build_nerve(in.domain);
            Json report = arrovian::report_envelope(cmd, in.input);
            Json result;
            result["alternatives"] = in.domain.alternatives().size();
            result["voters"] = in.domain.voters();
            result["profiles"] = in.domain.size();
            result["vertices"] = nerve.vertex_count();
            result["facets"] = nerve.facet_count();
            result["dimension"] = nerve.dimension();
            if (!nb_dot.empty()) {
                arrovian::write_file(nb_dot, arrovian::to_dot(nerve));
                result["dot"] = nb_dot;
            } else {
                result["dot"] = nullptr;
            }
            report["result"] = std::move(result);
            emit(std::move(report), quiet, nullptr);
        } else if (*domain_check) {
            auto in = load(dc_file);
            Json report = arrovian::report_envelope(cmd, in.input);
            Json result;
            result["class"] = dc_class;
            if (dc_class == "nx") {
                result["verdict"] =
                    arrovian::in_nx_class(in.domain) ? "member" : "non-member";
            } else if (dc_class == "pt" || dc_class == "dt" || dc_class == "ptdt") {
                bool member = true;
                if (dc_class == "pt" || dc_class == "ptdt") {
                    auto cert = arrovian::in_pt(in.domain);
                    member = member && cert.member;
                    result["pt"] = arrovian::json_certificate(cert, in.domain.alternatives());
                }
                if (dc_class == "dt" || dc_class == "ptdt") {
                    auto cert = arrovian::in_dt(in.domain);
                    member = member && cert.member;
                    result["dt"] = arrovian::json_certificate(cert, in.domain.alternatives());
                }
                result["verdict"] = member ? "member" : "non-member";
            } else {
                throw arrovian::PreconditionError("unknown class: " + dc_class);
            }
            report["result"] = std::move(result);
            emit(std::move(report), quiet, nullptr);
        } else if (*domain_gen) {
            arrovian::AlternativeSet alts(gen_names(dg_alts));
            arrovian::SeedBits bits(dg_seed);
            auto domain = arrovian::gen_ptdt_domain(alts, dg_voters, bits);
            arrovian::write_file(dg_out, arrovian::serialize_domain(domain));
            Json report = arrovian::report_envelope(cmd, nullptr);
            Json result;
            result["alternatives"] = dg_alts;
            result["voters"] = dg_voters;
            result["seed"] = dg_seed;
            result["profiles"] = domain.size();
            result["pt"] = "member";
            result["dt"] = "member";
            result["output"] = dg_out;
            report["result"] = std::move(result);
            emit(std::move(report), quiet, nullptr);
        } else if (*swf_enum) {
            auto in = load(se_file);
            auto nerve = std::make_shared<const arrovian::Nerve>(in.domain);
            arrovian::SearchStats stats;
            auto maps = arrovian::enumerate_unanimous_maps(nerve, &stats, threads);
            Json report = arrovian::report_envelope(cmd, in.input);
            Json result;
            result["maps"] = static_cast<int>(maps.size());
            Json names = Json::array();
            for (const auto& u : nerve->vertices())
                names.push_back(arrovian::vertex_name(u, in.domain.alternatives()));
            result["vertices"] = std::move(names);
            Json list = Json::array();
            for (const auto& map : maps)
                list.push_back(arrovian::json_map(map, se_tables));
            result["list"] = std::move(list);
            report["result"] = std::move(result);
            emit(std::move(report), quiet, &stats);
        } else if (*swf_verdict) {
            auto in = load(sv_file);
            auto verdict = arrovian::arrow_verdict(in.domain, threads);
            Json report = arrovian::report_envelope(cmd, in.input);
            report["result"] = arrovian::json_verdict(verdict, in.domain, false);
            emit(std::move(report), quiet, &verdict.stats);
        } else if (*audit_cmd) {
            auto in = load(au_file);
            auto nerve = std::make_shared<const arrovian::Nerve>(in.domain);
            arrovian::SearchStats stats;
            auto maps = arrovian::enumerate_unanimous_maps(nerve, &stats, threads);
            auto audit = arrovian::audit_lemmas(in.domain, nerve, maps);
            Json report = arrovian::report_envelope(cmd, in.input);
            Json result = arrovian::json_audit(audit);
            result["maps"] = static_cast<int>(maps.size());
            report["result"] = std::move(result);
            emit(std::move(report), quiet, &stats);
        } else if (*probe_super) {
            auto in = load(ps_file);
            auto pr = arrovian::super_arrovian_probe(in.domain, ps_add, ps_trials, ps_seed,
                                                     ps_budget, threads);
            Json report = arrovian::report_envelope(cmd, in.input);
            report["result"] = arrovian::json_probe(pr);
            emit(std::move(report), quiet, nullptr);
        } else if (*ultra_enum) {
            auto ultras = arrovian::enumerate_ultrafilters(ue_voters);
            Json report = arrovian::report_envelope(cmd, nullptr);
            Json result;
            result["voters"] = ue_voters;
            result["families_checked"] = 1ull << (1 << ue_voters);
            result["count"] = static_cast<int>(ultras.size());
            Json list = Json::array();
            for (const auto& fam : ultras) {
                Json jf;
                jf["principal"] = arrovian::principal_element(fam, ue_voters);
                Json members = Json::array();
                for (auto mask : fam.masks)
                    members.push_back(arrovian::json_coalition(arrovian::Coalition(mask, ue_voters)));
                jf["family"] = std::move(members);
                list.push_back(std::move(jf));
            }
            result["ultrafilters"] = std::move(list);
            report["result"] = std::move(result);
            emit(std::move(report), quiet, nullptr);
        }
    } catch (const arrovian::ParseError& e) {
        Json report = arrovian::report_envelope(cmd, nullptr);
        report["error"] = Json{{"kind", "parse"}, {"message", e.what()}};
        std::cout << report.dump(2) << '\n';
        return 2;
    } catch (const arrovian::PreconditionError& e) {
        Json report = arrovian::report_envelope(cmd, nullptr);
        report["error"] = Json{{"kind", "precondition"}, {"message", e.what()}};
        std::cout << report.dump(2) << '\n';
        return 3;
    }
    return 0;
}
