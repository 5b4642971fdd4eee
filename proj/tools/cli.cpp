#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dioph/conjecture.hpp"
#include "dioph/equation.hpp"
#include "dioph/lemma_suite.hpp"
#include "dioph/natural.hpp"
#include "dioph/propositions.hpp"
#include "dioph/search.hpp"
#include "dioph/valuation.hpp"

#ifndef DIOPH_VERSION
#define DIOPH_VERSION "0.0.0"
#endif

namespace dioph::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown by handlers to stop with a specific exit code.
struct Exit {
    int code;
    std::string message;
};

struct Record {
    std::string type;
    json fields;
};

std::string dec(std::uint64_t v)
{
    return std::to_string(v);
}

json dec_list(const std::vector<std::uint64_t>& xs)
{
    json a = json::array();
    for (const auto x : xs) a.push_back(dec(x));
    return a;
}

json binding_json(const CaseInstance& inst)
{
    const auto& sig = signature(inst.id);
    json b = json::object();
    for (std::size_t i = 0; i < 4; ++i) b[std::string(1, sig.variables[i])] = dec(inst.binding[i]);
    return b;
}

std::string csv_cell(const json& v)
{
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    } else if (v.is_object()) {
        bool first = true;
        for (const auto& [k, x] : v.items()) {
            s += (first ? "" : ";") + k + "=" + csv_cell(x);
            first = false;
        }
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (const char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

std::string render(const std::vector<Record>& records, const std::string& format, const json* manifest)
{
    std::ostringstream ss;
    if (format == "json") {
        if (manifest) ss << json{{"manifest", *manifest}}.dump() << '\n';
        for (const auto& r : records) ss << json{{"record", r.type}, {"fields", r.fields}}.dump() << '\n';
        return ss.str();
    }
    if (manifest) ss << "# " << json{{"manifest", *manifest}}.dump() << '\n';
    std::string header;
    for (const auto& r : records) {
        std::string h = "record";
        for (const auto& [k, v] : r.fields.items()) h += "," + k;
        if (h != header) {
            ss << h << '\n';
            header = h;
        }
        ss << r.type;
        for (const auto& [k, v] : r.fields.items()) ss << ',' << csv_cell(v);
        ss << '\n';
    }
    return ss.str();
}

// Options shared by every subcommand.
struct Common {
    std::string format = "json";
    std::size_t workers = 1;
    std::uint64_t seed = 0;
    std::string out;
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--seed", c.seed, "Random seed recorded in the manifest")->capture_default_str();
    sub->add_option("--out", c.out, "Write records, preceded by a run manifest, to FILE");
}

// ---------------------------------------------------------------------------

struct ValuationArgs {
    std::string base, a;
    std::uint64_t n = 1;
    std::string sign = "minus";
    std::string mode = "fast";
};

int cmd_valuation(const ValuationArgs& args, std::vector<Record>& records, json& params, std::ostream& err)
{
    const Natural base = Natural::parse(args.base);
    const Natural a = Natural::parse(args.a);
    const Sign sign = args.sign == "plus" ? Sign::plus : Sign::minus;
    params = {{"base", base.str()}, {"a", a.str()}, {"n", dec(args.n)}, {"sign", args.sign}, {"mode", args.mode}};

    std::optional<ValuationCertificate> fast, naive;
    if (args.mode != "naive") fast = valuation_pow(sign, base, a, args.n);
    if (args.mode != "fast") naive = naive_valuation_pow(sign, base, a, args.n);
    if (fast && naive && fast->exponent != naive->exponent) {
        err << "fast path gives " << fast->exponent << ", naive path gives " << naive->exponent << '\n';
        return kExitDisagreement;
    }
    const auto& cert = fast ? *fast : *naive;
    json f = {{"base", base.str()}, {"a", a.str()}, {"n", dec(args.n)}, {"sign", args.sign},
              {"mode", args.mode},  {"valuation", dec(cert.exponent)}};
    if (cert.witness_residue) f["witness_residue"] = cert.witness_residue->str();
    records.push_back({"valuation", f});
    return kExitOk;
}

struct SolveArgs {
    std::string which;
    std::optional<std::uint64_t> k_max, m_max, n_max, p_max, q_max;
    bool cross_check = false;
};

int cmd_solve(const SolveArgs& args, std::vector<Record>& records, json& params)
{
    const SolveOptions opts{args.cross_check};
    if (args.which == "prop6") {
        if (args.p_max || args.q_max) throw Exit{kExitUsage, "--p-max/--q-max do not apply to prop6"};
        const auto k = args.k_max.value_or(10), m = args.m_max.value_or(60), n = args.n_max.value_or(60);
        params = {{"which", "prop6"}, {"k_max", dec(k)}, {"m_max", dec(m)}, {"n_max", dec(n)},
                  {"cross_check", args.cross_check}};
        for (const auto& s : solve_prop6(k, m, n, opts)) {
            records.push_back({"prop6_solution", {{"k", dec(s.k)}, {"m", dec(s.m)}, {"n", dec(s.n)}}});
        }
        return kExitOk;
    }
    if (args.m_max) throw Exit{kExitUsage, "--m-max does not apply to prop9"};
    const auto k = args.k_max.value_or(8), p = args.p_max.value_or(40), q = args.q_max.value_or(40),
               n = args.n_max.value_or(12);
    params = {{"which", "prop9"},  {"k_max", dec(k)}, {"p_max", dec(p)},
              {"q_max", dec(q)},   {"n_max", dec(n)}, {"cross_check", args.cross_check}};
    for (const auto& s : solve_prop9(k, p, q, n, opts)) {
        records.push_back({"prop9_solution", {{"k", dec(s.k)}, {"p", dec(s.p)}, {"q", dec(s.q)}, {"n", dec(s.n)}}});
    }
    return kExitOk;
}

struct SearchArgs {
    std::string case_name;
    std::uint64_t bound = 12;
};

int cmd_search(const SearchArgs& args, const Common& common, std::vector<Record>& records, json& params)
{
    SearchConfig cfg;
    cfg.bound = args.bound;
    cfg.workers = common.workers;
    if (args.case_name != "master") {
        cfg.case_id = parse_case(args.case_name);
        if (!cfg.case_id) throw Exit{kExitUsage, "unknown case: " + args.case_name};
    }
    params = {{"case", args.case_name}, {"bound", dec(args.bound)}};

    if (!cfg.case_id) {
        for (const auto& s : search_master(cfg)) {
            json f = json::object();
            const char* names = "abcdefgh";
            for (std::size_t i = 0; i < 8; ++i) f[std::string(1, names[i])] = dec(s.tuple[i]);
            f["case"] = signature(s.instance.id).tag;
            f["binding"] = binding_json(s.instance);
            records.push_back({"master_solution", f});
        }
        return kExitOk;
    }
    for (const auto& inst : search_case(cfg)) {
        json f = {{"case", signature(inst.id).tag}};
        f.update(binding_json(inst));
        records.push_back({"case_solution", f});
    }
    return kExitOk;
}

int cmd_classify(const std::string& text, std::vector<Record>& records, json& params, std::ostream& err)
{
    ExponentTuple t;
    try {
        t = ExponentTuple::parse(text);
    } catch (const std::invalid_argument& e) {
        throw Exit{kExitUsage, e.what()};
    }
    params = {{"tuple", t.str()}};
    const auto [lhs, rhs] = evaluate(t);
    if (lhs != rhs) {
        err << "equation does not hold: " << lhs << " != " << rhs << '\n';
        return kExitNegative;
    }
    const ExponentTuple norm = normalize(t);
    const ZeroPattern z = zero_pattern(norm);
    const auto inst = classify(norm);
    if (!inst) throw std::logic_error("holding tuple without a case: " + norm.str());
    const auto& sig = signature(inst->id);
    records.push_back({"classification",
                       {{"tuple", t.str()},
                        {"normalized", norm.str()},
                        {"count2", dec(z.count2)},
                        {"count3", dec(z.count3)},
                        {"case", sig.tag},
                        {"equation", sig.display},
                        {"binding", binding_json(*inst)}}});
    return kExitOk;
}

struct ConjectureArgs {
    std::uint64_t m_min = 4, m_max = 20, n_max = 10000;
};

int cmd_conjecture(const ConjectureArgs& args, const Common& common, std::vector<Record>& records, json& params)
{
    for (const auto m : {args.m_min, args.m_max}) {
        if (m <= 3 || m % 2 != 0) throw Exit{kExitUsage, "m bounds must be even and > 3"};
    }
    params = {{"m_min", dec(args.m_min)}, {"m_max", dec(args.m_max)}, {"n_max", dec(args.n_max)}};
    const auto reports = scan_conjecture(args.m_min, args.m_max, args.n_max, common.workers);
    std::optional<std::uint64_t> worst = 0;
    for (const auto& r : reports) {
        records.push_back({"conjecture_report",
                           {{"m", dec(r.base_m)},
                            {"n_max", dec(r.n_max)},
                            {"violations", dec_list(r.violations)},
                            {"minimal_N", r.minimal_n ? dec(*r.minimal_n) : "none found"}}});
        if (!r.minimal_n) {
            worst.reset();
        } else if (worst) {
            worst = std::max(*worst, *r.minimal_n);
        }
    }
    records.push_back({"conjecture_summary",
                       {{"m_min", dec(args.m_min)},
                        {"m_max", dec(args.m_max)},
                        {"n_max", dec(args.n_max)},
                        {"max_minimal_N", worst ? dec(*worst) : "none found"}}});
    return kExitOk;
}

struct LemmaArgs {
    std::string lemma = "all";
    std::optional<std::uint64_t> base, n_max;
};

int cmd_verify_lemmas(const LemmaArgs& args, std::vector<Record>& records, json& params, std::ostream& err)
{
    LemmaSuiteConfig cfg;
    params = {{"lemma", args.lemma}};
    if (args.base) {
        params["base"] = dec(*args.base);
        if (args.lemma == "power-odd-minus") {
            cfg.odd_minus_bases = {*args.base};
            cfg.odd_minus_part1_even_bases.clear();
        } else if (args.lemma == "cyclotomic-division") {
            cfg.cyclotomic_p_min = cfg.cyclotomic_p_max = *args.base;
        } else {
            throw Exit{kExitUsage, "--base applies only to power-odd-minus and cyclotomic-division"};
        }
    }
    if (args.n_max) {
        params["n_max"] = dec(*args.n_max);
        cfg.cyclotomic_m_max = cfg.cyclotomic_n_max = *args.n_max;
        cfg.odd_minus_n_max = *args.n_max;
        cfg.three_plus_m_max = *args.n_max;
    }

    std::vector<LemmaCheckResult> results;
    try {
        results = run_lemma_suite(cfg, args.lemma);
    } catch (const std::invalid_argument& e) {
        throw Exit{kExitUsage, e.what()};
    }
    bool ok = true;
    for (const auto& r : results) {
        json ce = json::array();
        for (const auto& c : r.counterexamples) ce.push_back(c);
        records.push_back({"lemma_check",
                           {{"lemma", r.lemma},
                            {"checks", dec(r.checks)},
                            {"status", r.passed() ? "pass" : "fail"},
                            {"counterexamples", ce}}});
        if (!r.passed()) {
            ok = false;
            err << r.lemma << ": FAIL\n";
            for (const auto& c : r.counterexamples) err << "  " << c << '\n';
        }
    }
    return ok ? kExitOk : kExitLemmaFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact solvers and search tools for 2^a 3^b + 2^c 3^d = 2^e 3^f + 2^g 3^h and related equations",
                 "dioph"};
    app.set_version_flag("--version", DIOPH_VERSION);
    app.require_subcommand(1);

    Common common;

    ValuationArgs val;
    auto* sub_val = app.add_subcommand("valuation", "v_base(a^n - 1) or v_base(a^n + 1)");
    sub_val->add_option("--base", val.base, "Valuation base m >= 2")->required();
    sub_val->add_option("--a", val.a, "Power base a >= 2")->required();
    sub_val->add_option("--n", val.n, "Exponent n >= 1")->required()->check(CLI::PositiveNumber);
    sub_val->add_option("--sign", val.sign)->check(CLI::IsMember({"minus", "plus"}))->capture_default_str();
    sub_val->add_option("--mode", val.mode)->check(CLI::IsMember({"fast", "naive", "both"}))->capture_default_str();
    add_common(sub_val, common);

    SolveArgs solve;
    auto* sub_solve = app.add_subcommand("solve", "Bounded complete solver for prop6 or prop9");
    sub_solve->add_option("which", solve.which, "prop6: 3^k(2^m-1)=2^n-1; prop9: (2n+1)^k((2n)^p-1)=(2n)^q-1")
        ->required()
        ->check(CLI::IsMember({"prop6", "prop9"}));
    sub_solve->add_option("--k-max", solve.k_max);
    sub_solve->add_option("--m-max", solve.m_max);
    sub_solve->add_option("--n-max", solve.n_max);
    sub_solve->add_option("--p-max", solve.p_max);
    sub_solve->add_option("--q-max", solve.q_max);
    sub_solve->add_flag("--cross-check", solve.cross_check, "Confirm every pruned candidate by exact arithmetic");
    add_common(sub_solve, common);

    SearchArgs search;
    auto* sub_search = app.add_subcommand("search", "Bounded search over a case equation or the master equation");
    sub_search->add_option("--case", search.case_name, "Case name (1plus1, 1plus3d, 3b3d, 1plus2c, identity, "
                                                       "3b2c-mixed, 3b2c-split) or master")
        ->required();
    sub_search->add_option("--bound", search.bound, "Inclusive bound on every exponent")->capture_default_str();
    add_common(sub_search, common);

    std::string tuple;
    auto* sub_classify = app.add_subcommand("classify", "Normalize and classify a solution tuple");
    sub_classify->add_option("--tuple", tuple, "a,b,c,d,e,f,g,h")->required();
    add_common(sub_classify, common);

    ConjectureArgs conj;
    auto* sub_conj = app.add_subcommand("conjecture", "Scan m^(2 v_m((m-1)^n - 1)) <= (m-1)^n - 1 for even m");
    sub_conj->add_option("--m-min", conj.m_min)->capture_default_str();
    sub_conj->add_option("--m-max", conj.m_max)->capture_default_str();
    sub_conj->add_option("--n-max", conj.n_max)->check(CLI::PositiveNumber)->capture_default_str();
    add_common(sub_conj, common);

    LemmaArgs lem;
    auto* sub_lem = app.add_subcommand("verify-lemmas", "Check the closed-form valuations against exact arithmetic");
    std::vector<std::string> lemma_choices = lemma_names();
    lemma_choices.insert(lemma_choices.begin(), "all");
    sub_lem->add_option("--lemma", lem.lemma)->check(CLI::IsMember(lemma_choices))->capture_default_str();
    sub_lem->add_option("--base", lem.base, "Restrict power-odd-minus to this base, or cyclotomic-division to p");
    sub_lem->add_option("--n-max", lem.n_max, "Range for cyclotomic-division, power-three-plus, power-odd-minus");
    add_common(sub_lem, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    std::vector<Record> records;
    json params = json::object();
    std::string command;
    int code = kExitOk;
    try {
        if (sub_val->parsed()) {
            command = "valuation";
            code = cmd_valuation(val, records, params, err);
        } else if (sub_solve->parsed()) {
            command = "solve";
            code = cmd_solve(solve, records, params);
        } else if (sub_search->parsed()) {
            command = "search";
            code = cmd_search(search, common, records, params);
        } else if (sub_classify->parsed()) {
            command = "classify";
            code = cmd_classify(tuple, records, params, err);
        } else if (sub_conj->parsed()) {
            command = "conjecture";
            code = cmd_conjecture(conj, common, records, params);
        } else {
            command = "verify-lemmas";
            code = cmd_verify_lemmas(lem, records, params, err);
        }
    } catch (const Exit& e) {
        err << e.message << '\n';
        return e.code;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    if (code == kExitDisagreement || code == kExitNegative) return code;

    if (common.out.empty()) {
        out << render(records, common.format, nullptr);
        return code;
    }
    // Worker count and timing stay out of the file so that it is
    // byte-identical across worker counts.
    const json manifest = {{"command", command},
                           {"parameters", params},
                           {"format", common.format},
                           {"version", DIOPH_VERSION},
                           {"seed", dec(common.seed)}};
    std::ofstream file(common.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "cannot open " << common.out << '\n';
        return kExitUsage;
    }
    file << render(records, common.format, &manifest);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    err << "wrote " << records.size() << " records to " << common.out << " (wall_time_ms=" << ms
        << ", workers=" << common.workers << ")\n";
    return code;
}

} // namespace dioph::cli
