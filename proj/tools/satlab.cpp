#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satlab/config.hpp"
#include "satlab/family.hpp"
#include "satlab/formulas.hpp"
#include "satlab/graph6.hpp"
#include "satlab/report.hpp"
#include "satlab/saturation.hpp"
#include "satlab/verify.hpp"

namespace {

satlab::Graph parse_base(const std::string& text) {
    static const std::regex re(R"(^K(\d+)(?:v(\d+)K1)?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw satlab::precondition_error("base must look like K3 or K2v2K1, got \"" + text + "\"");
    int a = std::stoi(m[1].str());
    if (a < 1 || a > satlab::kMaxOrder)
        throw satlab::precondition_error("base clique size out of range");
    if (!m[2].matched) return satlab::complete_graph(a);
    int b = std::stoi(m[2].str());
    if (b < 1 || a + b > satlab::kMaxOrder)
        throw satlab::precondition_error("base join size out of range");
    return satlab::join(satlab::complete_graph(a), satlab::empty_graph(b));
}

std::pair<int, int> parse_range(const std::string& text) {
    static const std::regex re(R"(^(\d+)(?:\.\.(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, re))
        throw satlab::precondition_error("range must look like 7 or 6..8, got \"" + text + "\"");
    int lo = std::stoi(m[1].str());
    int hi = m[2].matched ? std::stoi(m[2].str()) : lo;
    if (hi < lo) throw satlab::precondition_error("range upper bound below lower bound");
    return {lo, hi};
}

std::vector<satlab::Graph> read_graph_file(const std::string& path) {
    if (path == "-") return satlab::read_graph6_lines(std::cin);
    std::ifstream in(path);
    if (!in) throw satlab::precondition_error("cannot open input file " + path);
    return satlab::read_graph6_lines(in);
}

void print_graph(const satlab::Graph& g, const std::string& format) {
    if (format == "dot") std::cout << satlab::encode_dot(g);
    else std::cout << satlab::encode_graph6(g) << "\n";
}

int check_and_print(const satlab::Graph& g, satlab::VirusPattern p, const std::string& format,
                    bool check) {
    print_graph(g, format);
    if (!check) return 0;
    satlab::SaturationVerdict v = satlab::check_saturation(g, p);
    if (v.is_saturated) return 0;
    std::cerr << "construction is not saturated for pattern (" << p.s << "," << p.t
              << "): free=" << (v.is_free ? "yes" : "no") << " completing=" << v.completing_nonedges
              << "/" << v.total_nonedges << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph saturation laboratory"};
    app.require_subcommand(1);

    std::string config_file;
    int flag_jobs = 0, flag_max_n = 0;
    bool stable = false;
    app.add_option("--config", config_file, "key=value config file (default satlab.toml if present)");
    app.add_option("--jobs", flag_jobs, "worker threads for search scans");
    app.add_option("--max-n", flag_max_n, "largest order exhaustive enumeration will accept");
    app.add_flag("--stable", stable, "omit timing fields so output is byte-reproducible");

    // build
    auto* build = app.add_subcommand("build", "construct a named graph and print it");
    build->require_subcommand(1);
    std::string format = "graph6";
    bool check = false;
    int b_n = 0, b_alpha = 0, b_t = 0;
    std::string b_variant, b_base = "K2";
    std::vector<int> b_p, b_q;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "graph6 or dot")
            ->check(CLI::IsMember({"graph6", "dot"}));
        sub->add_flag("--check", check, "verify saturation for the construction's pattern");
    };
    auto* b_ehm = build->add_subcommand("ehm", "clique joined to an independent set");
    b_ehm->add_option("--n", b_n, "order")->required();
    b_ehm->add_option("--alpha", b_alpha, "forbidden clique size")->required();
    add_common(b_ehm);
    auto* b_k33 = build->add_subcommand("k33", "three-leaf triangle minimum constructions");
    b_k33->add_option("--n", b_n, "order")->required();
    b_k33->add_option("--variant", b_variant, "odd, even, or pendant")
        ->required()
        ->check(CLI::IsMember({"odd", "even", "pendant"}));
    add_common(b_k33);
    auto* b_thm4 = build->add_subcommand("thm4", "general two-leaf minimum construction");
    b_thm4->add_option("--n", b_n, "order")->required();
    b_thm4->add_option("--t", b_t, "clique size t >= 5")->required();
    add_common(b_thm4);
    auto* b_member = build->add_subcommand("member", "attachment-family member over a base");
    b_member->add_option("--base", b_base, "base graph, K3 or K2v2K1 style")->required();
    b_member->add_option("--t", b_t, "attachment clique size")->required();
    b_member->add_option("--p", b_p, "plain K_{t-1} counts per base vertex")->delimiter(',');
    b_member->add_option("--q", b_q, "bridged K_t counts per base vertex")->delimiter(',');
    add_common(b_member);

    // family
    auto* family = app.add_subcommand("family", "enumerate family members as canonical graph6");
    std::string f_base = "K2";
    int f_t = 4, f_n = 0;
    bool f_simple = false, f_k24 = false;
    family->add_option("--base", f_base, "base graph, K3 or K2v2K1 style");
    family->add_option("--t", f_t, "attachment clique size");
    family->add_option("--n", f_n, "member order")->required();
    family->add_flag("--simple", f_simple, "restrict to q = 0 members");
    family->add_flag("--k24", f_k24, "emit the full two-leaf t=4 minimum family instead");

    // search
    auto* search = app.add_subcommand("search", "exhaustive minimum-saturation search");
    int s_n = 0;
    std::vector<int> s_virus;
    std::string s_mode = "all", s_input;
    std::optional<int> s_expect;
    search->add_option("--n", s_n, "graph order");
    search->add_option("--virus", s_virus, "pattern as s,t")->delimiter(',')->required();
    search->add_option("--mode", s_mode, "all or connected")
        ->check(CLI::IsMember({"all", "connected"}));
    search->add_option("--input", s_input, "graph6 file to scan instead of enumerating (- for stdin)");
    search->add_option("--expect", s_expect, "exit 1 unless the minimum equals this");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification task, one JSON row per order");
    std::string v_task, v_range;
    int v_t = 0;
    verify->add_option("--theorem", v_task, "task id, e.g. T1_2")->required();
    verify->add_option("--n", v_range, "order range like 6..8 (task default otherwise)");
    verify->add_option("--t", v_t, "clique size for tasks that take one");

    // formula
    auto* formula = app.add_subcommand("formula", "closed-form minimum edge counts");
    std::string fo_family;
    int fo_n = 0, fo_alpha = 0, fo_t = 0;
    bool fo_json = false;
    formula->add_option("--family", fo_family, "complete, k24, csat_k2t, k2t, or k33")
        ->required()
        ->check(CLI::IsMember({"complete", "k24", "csat_k2t", "k2t", "k33"}));
    formula->add_option("--n", fo_n, "order")->required();
    formula->add_option("--alpha", fo_alpha, "clique size for the complete family");
    formula->add_option("--t", fo_t, "clique size for the two-leaf families");
    formula->add_flag("--json", fo_json, "emit a JSON record with branch provenance");

    // convert
    auto* convert = app.add_subcommand("convert", "re-encode graph6 input");
    std::string c_input = "-", c_to = "graph6";
    bool c_canonical = false;
    convert->add_option("--input", c_input, "graph6 file (- for stdin)");
    convert->add_option("--to", c_to, "graph6 or dot")->check(CLI::IsMember({"graph6", "dot"}));
    convert->add_flag("--canonical", c_canonical, "relabel canonically first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        satlab::Config cfg = satlab::load_config(config_file);
        if (flag_jobs > 0) cfg.jobs = flag_jobs;
        if (flag_max_n > 0) cfg.max_n = flag_max_n;

        if (b_ehm->parsed()) {
            return check_and_print(satlab::ehm_graph(b_n, b_alpha),
                                   satlab::VirusPattern(0, b_alpha), format, check);
        }
        if (b_k33->parsed()) {
            satlab::K33Variant variant = b_variant == "odd"    ? satlab::K33Variant::ODD
                                         : b_variant == "even" ? satlab::K33Variant::EVEN
                                                               : satlab::K33Variant::PENDANT;
            return check_and_print(satlab::k33_extremal(b_n, variant), satlab::VirusPattern(3, 3),
                                   format, check);
        }
        if (b_thm4->parsed()) {
            return check_and_print(satlab::two_leaf_minimum_construction(b_n, b_t),
                                   satlab::VirusPattern(2, b_t), format, check);
        }
        if (b_member->parsed()) {
            satlab::Graph base = parse_base(b_base);
            b_p.resize(base.order(), 0);
            b_q.resize(base.order(), 0);
            satlab::Graph g = satlab::build_family_member({base, b_t, b_p, b_q});
            return check_and_print(g, satlab::VirusPattern(2, b_t), format, check);
        }
        if (family->parsed()) {
            std::vector<std::string> members =
                f_k24 ? satlab::k24_extremal_family(f_n)
                      : satlab::enumerate_family_members(parse_base(f_base), f_t, f_n, f_simple);
            for (const std::string& m : members) std::cout << m << "\n";
            return 0;
        }
        if (search->parsed()) {
            if (s_virus.size() != 2)
                throw satlab::precondition_error("--virus wants two values, s,t");
            satlab::VirusPattern p(s_virus[0], s_virus[1]);
            satlab::SearchMode mode =
                s_mode == "all" ? satlab::SearchMode::ALL : satlab::SearchMode::CONNECTED;
            satlab::SaturationReport rep;
            if (!s_input.empty()) {
                std::vector<satlab::Graph> graphs = read_graph_file(s_input);
                int n = s_n;
                if (n == 0 && !graphs.empty()) n = graphs[0].order();
                for (const satlab::Graph& g : graphs)
                    if (g.order() != n)
                        throw satlab::precondition_error(
                            "input graphs must all have the searched order");
                rep = satlab::saturation_search_stream(graphs, n, p, mode, cfg.jobs);
            } else {
                if (s_n <= 0) throw satlab::precondition_error("--n is required without --input");
                rep = satlab::saturation_search(s_n, p, mode, cfg.jobs, cfg.max_n);
            }
            std::cout << satlab::report_line(rep, stable);
            if (s_expect && (!rep.sat_value || *rep.sat_value != *s_expect)) return 1;
            return 0;
        }
        if (verify->parsed()) {
            satlab::VerifyOptions opt;
            opt.task = v_task;
            opt.t = v_t;
            opt.limit = cfg.max_n;
            opt.stable = stable;
            if (!v_range.empty()) std::tie(opt.n_lo, opt.n_hi) = parse_range(v_range);
            std::vector<nlohmann::ordered_json> rows = satlab::run_verify(opt);
            for (const auto& row : rows) std::cout << row.dump() << "\n";
            return satlab::all_rows_pass(rows) ? 0 : 1;
        }
        if (formula->parsed()) {
            satlab::FormulaFamily fam;
            int param = 0;
            if (fo_family == "complete") fam = satlab::FormulaFamily::SAT_COMPLETE, param = fo_alpha;
            else if (fo_family == "k24") fam = satlab::FormulaFamily::SAT_K24;
            else if (fo_family == "csat_k2t") fam = satlab::FormulaFamily::CSAT_K2T, param = fo_t;
            else if (fo_family == "k2t") fam = satlab::FormulaFamily::SAT_K2T, param = fo_t;
            else fam = satlab::FormulaFamily::SAT_K33;
            satlab::FormulaResult res = satlab::sat_formula(fam, fo_n, param);
            if (fo_json) {
                nlohmann::ordered_json j;
                j["schema"] = 1;
                j["task"] = "formula";
                j["family"] = fo_family;
                j["n"] = fo_n;
                if (param != 0) j["param"] = param;
                j["value"] = res.value;
                j["branch"] = res.branch;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << res.value << "\n";
            }
            return 0;
        }
        if (convert->parsed()) {
            for (const satlab::Graph& g : read_graph_file(c_input)) {
                satlab::Graph out = c_canonical ? satlab::canonical_graph(g) : g;
                print_graph(out, c_to);
            }
            return 0;
        }
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const satlab::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const satlab::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
