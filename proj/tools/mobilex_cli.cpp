// Command-line front end: parses poset specs, dispatches the hook-length
// computations, and runs the verification corpus.

#include <CLI11.hpp>

#include <mobilex/formulas.hpp>
#include <mobilex/json_io.hpp>
#include <mobilex/mobile.hpp>
#include <mobilex/verify.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using mobilex::json;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_verify_mismatch = 2;

struct io_options {
    std::string input_path;
    std::string inline_json;
    std::string format = "json";
};

void add_io_options(CLI::App* cmd, io_options& io) {
    cmd->add_option("--input,-i", io.input_path, "path to a JSON input file ('-' for stdin)");
    cmd->add_option("--json,-j", io.inline_json, "inline JSON input");
    cmd->add_option("--format,-f", io.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

json load_input(const io_options& io) {
    std::string text;
    if (!io.inline_json.empty()) {
        text = io.inline_json;
    } else if (io.input_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!io.input_path.empty()) {
        std::ifstream f(io.input_path);
        if (!f) throw mobilex::input_error("cannot open input file: " + io.input_path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        throw mobilex::input_error("no input: pass --input FILE or --json '...'");
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw mobilex::input_error(std::string("malformed JSON: ") + e.what());
    }
}

void emit_poly(const mobilex::int_poly& p, const io_options& io) {
    if (io.format == "csv") {
        std::cout << "power,coefficient\n";
        for (int k = 0; k <= p.degree(); ++k) std::cout << k << "," << p.coeff(k) << "\n";
    } else {
        std::cout << json{{"coefficients", mobilex::poly_to_json(p)}}.dump() << "\n";
    }
}

int run_count(const io_options& io) {
    const mobilex::mobile_poset m = mobilex::mobile_from_json(load_input(io));
    const mobilex::Int e = mobilex::mobile_count(m);
    if (io.format == "csv")
        std::cout << "e\n" << e << "\n";
    else
        std::cout << json{{"e", e.str()}}.dump() << "\n";
    return exit_ok;
}

int run_maj_poly(const io_options& io) {
    const mobilex::mobile_poset m = mobilex::mobile_from_json(load_input(io));
    emit_poly(mobilex::mobile_maj_poly(m), io);
    return exit_ok;
}

int run_inv_poly(const io_options& io) {
    const mobilex::mobile_poset m = mobilex::mobile_from_json(load_input(io));
    if (!m.all_tree_hangings())
        throw mobilex::input_error("inv-poly: the inversion formula needs all hangings to be rooted trees");
    emit_poly(mobilex::mobile_inv_poly(m), io);
    return exit_ok;
}

int run_excited(const io_options& io) {
    const json j = load_input(io);
    const mobilex::mobile_poset m = mobilex::mobile_from_json(j);
    const auto& lam = m.strip().outer();
    auto plain = [&](mobilex::cell u) { return mobilex::hook(lam, u); };
    auto modified = [&](mobilex::cell u) { return m.modified_hook(u); };
    for (const auto& d : mobilex::enumerate_excited(m.strip())) {
        const long long w = mobilex::w_stat(d, plain);
        const long long wp = mobilex::w_stat(d, modified);
        const long long pd = mobilex::p_d_stat(m, d);
        if (io.format == "csv") {
            auto cells_str = [](const std::set<mobilex::cell>& cs) {
                std::string s;
                for (auto u : cs) s += std::to_string(u.row) + ":" + std::to_string(u.col) + " ";
                if (!s.empty()) s.pop_back();
                return s;
            };
            std::cout << cells_str(d.cells) << "," << cells_str(d.broken) << "," << w << "," << wp << "," << pd
                      << "\n";
        } else {
            json cells = json::array(), broken = json::array();
            for (auto u : d.cells) cells.push_back(json::array({u.row, u.col}));
            for (auto u : d.broken) broken.push_back(json::array({u.row, u.col}));
            std::cout << json{{"cells", cells}, {"broken", broken}, {"w", w}, {"w_prime", wp}, {"p_d", pd}}.dump()
                      << "\n";
        }
    }
    return exit_ok;
}

int run_hooks(const io_options& io) {
    const mobilex::mobile_poset m = mobilex::mobile_from_json(load_input(io));
    const auto& lam = m.strip().outer();
    if (io.format == "csv") std::cout << "row,col,on_strip,h,h_prime\n";
    json rows = json::array();
    for (mobilex::cell u : lam.cells()) {
        const int h = mobilex::hook(lam, u);
        const int hp = m.modified_hook(u);
        const bool on_strip = m.strip().contains(u);
        if (io.format == "csv")
            std::cout << u.row << "," << u.col << "," << on_strip << "," << h << "," << hp << "\n";
        else
            rows.push_back(json{{"cell", json::array({u.row, u.col})},
                                {"on_strip", on_strip},
                                {"h", h},
                                {"h_prime", hp}});
    }
    if (io.format != "csv")
        std::cout << json{{"cells", rows},
                          {"hanging_hooks", m.hangings_hook_multiset()},
                          {"n", m.size()}}
                         .dump()
                  << "\n";
    return exit_ok;
}

int run_oracle(const io_options& io, int cap, int series_degree) {
    const json j = load_input(io);
    json out;
    if (j.contains("n")) {
        // raw labeled poset
        const mobilex::labeled_poset lp = mobilex::labeled_poset_from_json(j);
        out["e"] = mobilex::extension_count(lp, cap).str();
        out["maj"] = mobilex::poly_to_json(mobilex::eq_stat(lp, mobilex::stat_kind::maj, cap));
        out["inv"] = mobilex::poly_to_json(mobilex::eq_stat(lp, mobilex::stat_kind::inv, cap));
        if (series_degree >= 0)
            out["pp_series"] = mobilex::poly_to_json(mobilex::ppartition_series(lp, series_degree));
    } else {
        const mobilex::mobile_poset m = mobilex::mobile_from_json(j);
        const auto ml = mobilex::reversed_schur_labeling(m);
        out["e"] = mobilex::extension_count(ml.lp, cap).str();
        out["maj"] = mobilex::poly_to_json(mobilex::eq_stat(ml.lp, mobilex::stat_kind::maj, cap));
        if (m.all_tree_hangings()) {
            const auto mi = mobilex::omega_inv_labeling(m);
            out["inv"] = mobilex::poly_to_json(mobilex::eq_stat(mi.lp, mobilex::stat_kind::inv, cap));
        }
        if (series_degree >= 0)
            out["pp_series"] = mobilex::poly_to_json(mobilex::ppartition_series(ml.lp, series_degree));
    }
    if (io.format == "csv") {
        std::cout << "key,value\n";
        for (auto& [k, v] : out.items()) std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
        std::cout << out.dump() << "\n";
    }
    return exit_ok;
}

int run_bounds(const io_options& io) {
    const mobilex::mobile_poset m = mobilex::mobile_from_json(load_input(io));
    const auto b = mobilex::mobile_bounds(m);
    if (io.format == "csv") {
        std::cout << "bound,num,den\n";
        std::cout << "lower," << b.lower.num << "," << b.lower.den << "\n";
        std::cout << "upper," << b.upper.num << "," << b.upper.den << "\n";
        std::cout << "excited," << b.excited_count << ",1\n";
    } else {
        std::cout << json{{"lower", {{"num", b.lower.num.str()}, {"den", b.lower.den.str()}}},
                          {"upper", {{"num", b.upper.num.str()}, {"den", b.upper.den.str()}}},
                          {"excited", b.excited_count.str()}}
                         .dump()
                  << "\n";
    }
    return exit_ok;
}

int run_euler_family(const std::string& kind, int p, int k, bool audit, int cap, const io_options& io) {
    const mobilex::euler_kind ek =
        (kind == "C" || kind == "chains") ? mobilex::euler_kind::chains : mobilex::euler_kind::antichains;
    const mobilex::mobile_poset m = mobilex::euler_family(ek, p, k);
    json out = mobilex::mobile_to_json(m);
    if (audit) {
        const auto a = mobilex::audit_zigzag_bounds(ek, p, k, cap);
        out["audit"] = json{{"printed_lower", {{"num", a.printed_lower.num.str()}, {"den", a.printed_lower.den.str()}}},
                            {"computed_lower", {{"num", a.computed.lower.num.str()}, {"den", a.computed.lower.den.str()}}},
                            {"excited", a.computed.excited_count.str()},
                            {"e", a.oracle_count.str()},
                            {"printed_matches_computed", a.printed_matches_computed},
                            {"sandwich_holds", a.sandwich_holds}};
    }
    std::cout << out.dump() << "\n";
    (void)io;
    return exit_ok;
}

int run_verify(const std::string& corpus_name, unsigned seed, int jobs, int cap) {
    if (corpus_name != "small")
        throw mobilex::input_error("verify: unknown corpus '" + corpus_name + "' (available: small)");
    mobilex::verify_options opt;
    opt.seed = seed;
    opt.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (opt.jobs <= 0) opt.jobs = 1;
    opt.oracle_cap = cap;
    const auto summary = mobilex::verify_small_corpus(opt);
    for (const auto& c : summary.checks) {
        std::cout << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.checked << " instances";
        if (c.failed) std::cout << ", " << c.failed << " failed";
        std::cout << ")\n";
        for (const auto& d : c.details) std::cout << "      " << d << "\n";
    }
    for (const auto& n : summary.notes) std::cout << "note: " << n << "\n";
    std::cout << (summary.all_passed() ? "verification passed" : "verification FAILED") << "\n";
    return summary.all_passed() ? exit_ok : exit_verify_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear-extension counts and q-analogues for mobile posets"};
    app.require_subcommand(1);

    io_options io;
    int cap = 16;
    int series_degree = -1;
    std::string euler_kind_str = "C";
    int euler_p = 0, euler_k = 1;
    bool euler_audit = false;
    std::string corpus_name = "small";
    unsigned seed = 20240711;
    int jobs = 0;

    auto* count = app.add_subcommand("count", "number of linear extensions of a mobile poset");
    add_io_options(count, io);
    auto* majp = app.add_subcommand("maj-poly", "major-index q-analogue polynomial");
    add_io_options(majp, io);
    auto* invp = app.add_subcommand("inv-poly", "inversion q-analogue polynomial (mobile tree posets)");
    add_io_options(invp, io);
    auto* exc = app.add_subcommand("excited", "excited diagrams with broken diagonals and statistics");
    add_io_options(exc, io);
    auto* hooks = app.add_subcommand("hooks", "hook and modified-hook tables");
    add_io_options(hooks, io);
    auto* oracle = app.add_subcommand("oracle", "brute-force counts and statistics polynomials");
    add_io_options(oracle, io);
    oracle->add_option("--cap", cap, "oracle size cap (default 16, max 18)");
    oracle->add_option("--series", series_degree, "also print the truncated P-partition series up to this degree");
    auto* bounds = app.add_subcommand("bounds", "hook-product lower/upper bounds for the extension count");
    add_io_options(bounds, io);
    auto* euler = app.add_subcommand("euler-family", "construct the zigzag posets C_p(k) / A_p(k)");
    euler->add_option("--kind", euler_kind_str, "C (chains) or A (antichains)")
        ->check(CLI::IsMember({"C", "A", "chains", "antichains"}));
    euler->add_option("-p", euler_p, "hanging size p")->required();
    euler->add_option("-k", euler_k, "number of zigzag peaks k")->required();
    euler->add_flag("--audit", euler_audit, "compare the closed-form bounds against hook products and the oracle");
    euler->add_option("--cap", cap, "oracle size cap for --audit");
    add_io_options(euler, io);
    auto* verify = app.add_subcommand("verify", "run the verification corpus; exit 2 on any mismatch");
    verify->add_option("--corpus", corpus_name, "corpus name (small)");
    verify->add_option("--seed", seed, "corpus seed");
    verify->add_option("--jobs", jobs, "worker threads (default: available cores)");
    verify->add_option("--cap", cap, "oracle size cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) return run_count(io);
        if (majp->parsed()) return run_maj_poly(io);
        if (invp->parsed()) return run_inv_poly(io);
        if (exc->parsed()) return run_excited(io);
        if (hooks->parsed()) return run_hooks(io);
        if (oracle->parsed()) return run_oracle(io, cap, series_degree);
        if (bounds->parsed()) return run_bounds(io);
        if (euler->parsed()) return run_euler_family(euler_kind_str, euler_p, euler_k, euler_audit, cap, io);
        if (verify->parsed()) return run_verify(corpus_name, seed, jobs, cap);
    } catch (const mobilex::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const mobilex::non_exact_division& e) {
        std::cerr << "internal error (formula produced a non-polynomial): " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_ok;
}
