// Command-line front end: statistics, codes, bijections, enumeration,
// generating functions, theorem verification, and the independent oracles.
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
// input errors.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cperm/codes.hpp"
#include "cperm/core.hpp"
#include "cperm/ferrers.hpp"
#include "cperm/poly.hpp"
#include "cperm/stats.hpp"
#include "cperm/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kSetNames[] = {"Cyc", "Rmil", "Rmip", "Lmal", "Lmap", "Lmil", "Lmic"};

const std::vector<cperm::ColoredLetter>& set_by_name(const cperm::StatBundle& st, int k) {
    switch (k) {
        case 0: return st.Cyc;
        case 1: return st.Rmil;
        case 2: return st.Rmip;
        case 3: return st.Lmal;
        case 4: return st.Lmap;
        case 5: return st.Lmil;
        default: return st.Lmic;
    }
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(v[i]);
    }
    return out;
}

std::string format_letter_set(const std::vector<cperm::ColoredLetter>& set, int r) {
    if (set.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) out.push_back(',');
        out += cperm::format_letter(set[i], r);
    }
    return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    throw std::invalid_argument("format '" + format + "' not supported by this command");
}

// RFC 4180 quoting for the one CSV field that contains commas.
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

struct Options {
    int r = 1;
    bool r_set = false;
    int n = -1;
    std::string ferrers;
    bool has_ferrers = false;
    std::string format = "text";
    long long cap = cperm::kDefaultEnumCap;
    long long bfs_cap = 100'000;
    int jobs = 1;
};

int cmd_stat(const Options& opt, const std::string& window_text) {
    require_format(opt.format, {"text", "json"});
    const cperm::ColoredPermutation pi = cperm::parse_window(window_text, opt.r);
    const cperm::StatBundle st = cperm::set_stats(pi);
    const bool type_d = cperm::is_even_signed(pi);

    if (opt.format == "json") {
        ordered_json j;
        j["ell"] = st.ell;
        j["sor"] = st.sor;
        j["refl_len"] = st.refl_len;
        j["inv"] = st.inv;
        ordered_json sets, refined;
        for (int k = 0; k < 7; ++k) {
            const auto& set = set_by_name(st, k);
            ordered_json pairs = ordered_json::array();
            for (const auto& l : set) pairs.push_back({l.base, l.color});
            sets[kSetNames[k]] = std::move(pairs);
            ordered_json by_color;
            for (int t = 0; t < pi.r; ++t)
                by_color[std::to_string(t)] = cperm::refined_bases(set, t);
            refined[kSetNames[k]] = std::move(by_color);
        }
        j["sets"] = std::move(sets);
        j["refined"] = std::move(refined);
        if (type_d) {
            const cperm::TwistedDStats tw = cperm::twisted_d_stats(pi);
            j["sor_d"] = cperm::sor_d(pi);
            j["ell_d"] = cperm::length_d(pi);
            j["ell_tilde_d"] = cperm::ell_tilde_d(pi);
            j["twisted"] = {{"CycPlus", tw.CycPlus},
                            {"CycMinus", tw.CycMinus},
                            {"RmilPlus", tw.RmilPlus},
                            {"RmilMinus", tw.RmilMinus}};
        }
        std::cout << j.dump() << "\n";
        return 0;
    }

    std::cout << "ell = " << st.ell << "\n";
    std::cout << "inv = " << st.inv << "\n";
    std::cout << "sor = " << st.sor << "\n";
    std::cout << "refl_len = " << st.refl_len << "\n";
    for (int k = 0; k < 7; ++k)
        std::cout << kSetNames[k] << " = " << format_letter_set(set_by_name(st, k), pi.r) << "\n";
    if (type_d) {
        const cperm::TwistedDStats tw = cperm::twisted_d_stats(pi);
        std::cout << "sor_d = " << cperm::sor_d(pi) << "\n";
        std::cout << "ell_d = " << cperm::length_d(pi) << "\n";
        std::cout << "ell_tilde_d = " << cperm::ell_tilde_d(pi) << "\n";
        std::cout << "CycPlus = " << (tw.CycPlus.empty() ? "-" : join_ints(tw.CycPlus, ',')) << "\n";
        std::cout << "CycMinus = " << (tw.CycMinus.empty() ? "-" : join_ints(tw.CycMinus, ',')) << "\n";
        std::cout << "RmilPlus = " << (tw.RmilPlus.empty() ? "-" : join_ints(tw.RmilPlus, ',')) << "\n";
        std::cout << "RmilMinus = " << (tw.RmilMinus.empty() ? "-" : join_ints(tw.RmilMinus, ',')) << "\n";
    }
    return 0;
}

int cmd_code(const Options& opt, const std::string& kind, const std::string& window_text) {
    require_format(opt.format, {"text", "json"});
    const cperm::ColoredPermutation pi = cperm::parse_window(window_text, opt.r);

    if (kind == "a" || kind == "b") {
        const cperm::Code code = kind == "a" ? cperm::a_code(pi) : cperm::b_code(pi);
        if (opt.format == "json") {
            ordered_json entries = ordered_json::array();
            for (const auto& e : code.entries) entries.push_back({e.base, e.color});
            std::cout << ordered_json{{"kind", kind}, {"entries", std::move(entries)}}.dump()
                      << "\n";
        } else {
            std::string out = "(";
            for (size_t i = 0; i < code.entries.size(); ++i) {
                if (i) out.push_back(',');
                out += cperm::format_letter(code.entries[i], code.r);
            }
            std::cout << out << ")\n";
        }
        return 0;
    }
    if (kind == "c" || kind == "d") {
        const cperm::SignedCode code = kind == "c" ? cperm::c_code(pi) : cperm::d_code(pi);
        if (opt.format == "json") {
            std::cout << ordered_json{{"kind", kind}, {"entries", code.entries}}.dump() << "\n";
        } else {
            std::cout << "(" << join_ints(code.entries, ',') << ")\n";
        }
        return 0;
    }
    throw std::invalid_argument("unknown code kind '" + kind + "' (expected a, b, c or d)");
}

int cmd_map(const Options& opt, const std::string& bijection, const std::string& window_text) {
    require_format(opt.format, {"text", "json"});
    const cperm::ColoredPermutation pi = cperm::parse_window(window_text, opt.r);
    cperm::ColoredPermutation image;
    if (bijection == "phi") image = cperm::phi(pi);
    else if (bijection == "psi") image = cperm::psi(pi);
    else throw std::invalid_argument("unknown bijection '" + bijection + "' (expected phi or psi)");
    if (opt.format == "json") {
        std::cout << ordered_json{{"window", cperm::format_window(image)}}.dump() << "\n";
    } else {
        std::cout << cperm::format_window(image) << "\n";
    }
    return 0;
}

int cmd_enumerate(const Options& opt, bool type_d) {
    require_format(opt.format, {"text", "csv", "json"});
    if (opt.n < 0) throw std::invalid_argument("enumerate requires --n");
    int r = opt.r;
    if (type_d) {
        if (opt.r_set && opt.r != 2) throw std::invalid_argument("--type-d requires r = 2");
        r = 2;
    }
    std::optional<cperm::FerrersBound> f;
    if (opt.has_ferrers) f = cperm::parse_bound(opt.ferrers);

    std::vector<cperm::ColoredPermutation> fam;
    if (type_d) {
        fam = f ? cperm::enumerate_restricted_d(opt.n, *f, opt.cap)
                : cperm::enumerate_group_d(opt.n, opt.cap);
    } else {
        fam = f ? cperm::enumerate_restricted(r, opt.n, *f, opt.cap)
                : cperm::enumerate_group(r, opt.n, opt.cap);
    }

    if (opt.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& pi : fam) {
            const cperm::StatBundle st = cperm::set_stats(pi);
            ordered_json row;
            row["window"] = cperm::format_window(pi);
            row["ell"] = st.ell;
            row["sor"] = st.sor;
            row["refl_len"] = st.refl_len;
            ordered_json refined;
            for (int k = 0; k < 7; ++k) {
                ordered_json by_color;
                for (int t = 0; t < r; ++t)
                    by_color[std::to_string(t)] = cperm::refined_bases(set_by_name(st, k), t);
                refined[kSetNames[k]] = std::move(by_color);
            }
            row["refined"] = std::move(refined);
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
        return 0;
    }

    std::string header = "window,ell,sor,refl_len";
    for (int k = 0; k < 7; ++k)
        for (int t = 0; t < r; ++t)
            header += "," + std::string(kSetNames[k]) + std::to_string(t);
    std::cout << header << "\n";
    for (const auto& pi : fam) {
        const cperm::StatBundle st = cperm::set_stats(pi);
        std::string line = csv_quote(cperm::format_window(pi));
        line += "," + std::to_string(st.ell);
        line += "," + std::to_string(st.sor);
        line += "," + std::to_string(st.refl_len);
        for (int k = 0; k < 7; ++k)
            for (int t = 0; t < r; ++t)
                line += "," + join_ints(cperm::refined_bases(set_by_name(st, k), t), ';');
        std::cout << line << "\n";
    }
    return 0;
}

int cmd_gf(const Options& opt, const std::string& which) {
    require_format(opt.format, {"text", "json", "latex"});
    if (opt.n < 0) throw std::invalid_argument("gf requires --n");
    const int n = opt.n;
    std::optional<cperm::FerrersBound> f;
    if (opt.has_ferrers) f = cperm::parse_bound(opt.ferrers);
    const cperm::FerrersBound bound = f ? *f : cperm::full_bound(n);

    cperm::MVPoly p;
    if (which == "length-dist" || which == "sor-dist") p = cperm::gf_length_dist(opt.r, n);
    else if (which == "cyc0-dist") p = cperm::gf_cyc0_dist(opt.r, n);
    else if (which == "ellprime-dist") p = cperm::gf_ellprime_dist(opt.r, n);
    else if (which == "main-b") p = cperm::gf_main_b(opt.r, n, bound);
    else if (which == "cor-restricted") p = cperm::gf_cor_restricted(opt.r, n, bound);
    else if (which == "d") p = cperm::gf_d(n, bound);
    else if (which == "cor-d") p = cperm::gf_cor_d(n, bound);
    else if (which == "cycplus-dist-d") p = cperm::gf_cycplus_dist_d(n);
    else if (which == "ellprime-dist-d") p = cperm::gf_ellprime_dist_d(n);
    else throw std::invalid_argument("unknown generating function '" + which + "'");

    if (opt.format == "json") std::cout << p.to_json() << "\n";
    else if (opt.format == "latex") std::cout << p.to_latex() << "\n";
    else std::cout << p.to_text() << "\n";
    return 0;
}

int cmd_verify(const Options& opt, const std::string& id_text, bool all_f, bool negative_control) {
    require_format(opt.format, {"text", "json"});
    cperm::CheckOptions copts;
    copts.enum_cap = opt.cap;
    copts.bfs_cap = opt.bfs_cap;
    copts.jobs = opt.jobs;
    copts.negative_control = negative_control;

    std::vector<cperm::TheoremId> ids;
    if (id_text == "all") ids = cperm::all_theorems();
    else ids.push_back(cperm::theorem_from_name(id_text));

    const bool have_point = opt.n >= 0;
    std::vector<cperm::Report> reports;
    for (cperm::TheoremId id : ids) {
        if (have_point) {
            int r = opt.r;
            if (!opt.r_set) {
                // type D claims live at r = 2; everything else defaults to r = 1
                r = cperm::theorem_name(id).rfind("d-", 0) == 0 ? 2 : 1;
            }
            std::optional<cperm::FerrersBound> f;
            if (opt.has_ferrers) f = cperm::parse_bound(opt.ferrers);
            reports.push_back(cperm::check(id, r, opt.n, f, all_f, copts));
        } else {
            if (opt.has_ferrers || all_f)
                throw std::invalid_argument("a Ferrers bound needs an explicit --n");
            for (auto& rep : cperm::check_default_grid(id, copts)) reports.push_back(std::move(rep));
        }
    }

    bool all_pass = true;
    if (opt.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& rep : reports) {
            arr.push_back(ordered_json::parse(rep.to_json()));
            all_pass = all_pass && rep.pass;
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& rep : reports) {
            std::cout << rep.to_text() << "\n";
            all_pass = all_pass && rep.pass;
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_oracle(const Options& opt, const std::string& mode, const std::string& window_text,
               const std::string& genset_text) {
    require_format(opt.format, {"text", "json"});
    if (mode == "sor-graph") {
        if (window_text.empty()) throw std::invalid_argument("oracle sor-graph needs a window");
        const cperm::ColoredPermutation pi = cperm::parse_window(window_text, opt.r);
        std::vector<int> steps;
        const long long total = cperm::sor_graph_oracle(pi, &steps);
        if (opt.format == "json") {
            std::cout << ordered_json{{"sor", total}, {"steps", steps}}.dump() << "\n";
        } else {
            std::cout << "sor = " << total << "\n";
            std::cout << "steps = " << join_ints(steps, ',') << "\n";
        }
        return 0;
    }
    if (mode == "bfs") {
        if (opt.n < 0) throw std::invalid_argument("oracle bfs requires --n");
        const cperm::GenSet genset = cperm::genset_from_name(genset_text);
        int r = opt.r;
        if (!opt.r_set && genset == cperm::GenSet::coxeter_d) r = 2;
        const auto dist = cperm::bfs_lengths(genset, r, opt.n, opt.bfs_cap);
        if (!window_text.empty()) {
            const cperm::ColoredPermutation pi = cperm::parse_window(window_text, r);
            const auto it = dist.find(pi);
            if (it == dist.end())
                throw std::invalid_argument("window not reachable from the identity");
            if (opt.format == "json")
                std::cout << ordered_json{{"distance", it->second}}.dump() << "\n";
            else
                std::cout << "distance = " << it->second << "\n";
            return 0;
        }
        std::map<int, long long> histogram;
        for (const auto& [pi, d] : dist) histogram[d] += 1;
        if (opt.format == "json") {
            ordered_json h;
            for (const auto& [d, c] : histogram) h[std::to_string(d)] = c;
            std::cout << ordered_json{{"reached", dist.size()}, {"histogram", std::move(h)}}.dump()
                      << "\n";
        } else {
            for (const auto& [d, c] : histogram) std::cout << d << ": " << c << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("unknown oracle '" + mode + "' (expected sor-graph or bfs)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored permutation statistics, code bijections and theorem checks"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--r", opt.r, "Number of colors (default 1)");
    app.add_option("--n", opt.n, "Window size");
    app.add_option("--ferrers", opt.ferrers, "Ferrers bound, e.g. 2,3,3,4");
    app.add_option("--format", opt.format, "Output format: text, json, csv, latex");
    app.add_option("--cap", opt.cap, "Enumeration cap (error when exceeded)");
    app.add_option("--bfs-cap", opt.bfs_cap, "BFS visit cap (error when exceeded)");
    app.add_option("--jobs", opt.jobs, "Worker threads for generating-function sums");

    std::string window_text, kind, bijection, gf_which, verify_id = "all", oracle_mode;
    std::string genset_text = "coxeter-G";
    bool type_d = false, all_f = false, negative_control = false;

    CLI::App* stat = app.add_subcommand("stat", "Statistics of one window");
    stat->fallthrough();
    stat->add_option("window", window_text, "Window text, e.g. 3^2,2^1,4,1^1")->required();

    CLI::App* code = app.add_subcommand("code", "Encode a window");
    code->fallthrough();
    code->add_option("--kind", kind, "Code kind: a, b, c or d")->required();
    code->add_option("window", window_text)->required();

    CLI::App* map_cmd = app.add_subcommand("map", "Apply a code bijection");
    map_cmd->fallthrough();
    map_cmd->add_option("--bijection", bijection, "phi or psi")->required();
    map_cmd->add_option("window", window_text)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "List a (restricted) group with statistics");
    enumerate->fallthrough();
    enumerate->add_flag("--type-d", type_d, "Enumerate the even-signed group D(n)");

    CLI::App* gf = app.add_subcommand("gf", "Closed-form generating functions");
    gf->fallthrough();
    gf->add_option("which", gf_which,
                   "length-dist, sor-dist, cyc0-dist, ellprime-dist, main-b, cor-restricted, "
                   "d, cor-d, cycplus-dist-d, ellprime-dist-d")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "Check theorems against oracles");
    verify->fallthrough();
    verify->add_option("id", verify_id, "Theorem id or 'all'");
    verify->add_flag("--all-ferrers", all_f, "Check every bound of size n");
    verify->add_flag("--negative-control", negative_control,
                     "Corrupt the sorting statistics to prove checks can fail");

    CLI::App* oracle = app.add_subcommand("oracle", "Run an oracle directly");
    oracle->fallthrough();
    oracle->add_option("mode", oracle_mode, "sor-graph or bfs")->required();
    oracle->add_option("window", window_text);
    oracle->add_option("--genset", genset_text, "coxeter-G, reflections-T or coxeter-D");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code_ = app.exit(e);
        return code_ == 0 ? 0 : 2;
    }
    opt.r_set = app.count("--r") > 0;
    opt.has_ferrers = app.count("--ferrers") > 0;

    try {
        if (app.got_subcommand(stat)) return cmd_stat(opt, window_text);
        if (app.got_subcommand(code)) return cmd_code(opt, kind, window_text);
        if (app.got_subcommand(map_cmd)) return cmd_map(opt, bijection, window_text);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(opt, type_d);
        if (app.got_subcommand(gf)) return cmd_gf(opt, gf_which);
        if (app.got_subcommand(verify)) return cmd_verify(opt, verify_id, all_f, negative_control);
        if (app.got_subcommand(oracle)) return cmd_oracle(opt, oracle_mode, window_text, genset_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
