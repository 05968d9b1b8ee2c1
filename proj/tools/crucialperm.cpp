// Command-line front end: classify permutations, run the RSK map, count and
// list crucial permutations, print the known extremal constructions, and run
// the cross-verification suites.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crucial/count.hpp"
#include "crucial/text.hpp"
#include "crucial/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace crucial;

constexpr int kExitBadInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBruteCap = 4;

struct Options {
    std::string perm_text;
    int k = 3;
    int l = 3;
    int n = 0;
    int nmax = -1;
    int jobs = 0;
    std::string type = "right";
    std::string method;
    std::string format;
    std::string suite;
};

std::string default_format(const std::string& subcommand) {
    if (subcommand == "count") return "json";
    if (subcommand == "table") return "csv";
    return "text";
}

CountMethod pick_method(const Options& opt) {
    if (!opt.method.empty()) return count_method_from_string(opt.method);
    return opt.n > brute_cap() ? CountMethod::syt : CountMethod::brute;
}

CountReport run_count(const Options& opt) {
    const PatternSpec spec(opt.k, opt.l);
    const CrucialType type = crucial_type_from_string(opt.type);
    switch (pick_method(opt)) {
        case CountMethod::brute: return count_brute(opt.n, spec, type, opt.jobs);
        case CountMethod::syt: return count_syt(opt.n, spec, type);
        case CountMethod::formula: return count_formula(opt.n, spec, type);
    }
    throw std::logic_error("unreachable");
}

void print_count(const CountReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(rep).dump() << "\n";
    } else if (format == "csv") {
        std::cout << count_report_csv_header() << "\n" << count_report_csv_row(rep) << "\n";
    } else {
        std::cout << rep.count.str() << "\n";
    }
}

int cmd_classify(const Options& opt, const std::string& format) {
    const Permutation p = parse_permutation(opt.perm_text);
    const CrucialClass cc = classify_direct(p, PatternSpec(opt.k, opt.l));
    if (format == "json") {
        std::cout << to_json(cc).dump() << "\n";
    } else {
        std::cout << "n: " << cc.n << "\nk: " << cc.k << "\nl: " << cc.l << "\n";
        std::cout << "right: " << (cc.right ? "true" : "false") << "\n";
        std::cout << "left: " << (cc.left ? "true" : "false") << "\n";
        std::cout << "top: " << (cc.top ? "true" : "false") << "\n";
        std::cout << "bottom: " << (cc.bottom ? "true" : "false") << "\n";
        std::cout << "bicrucial: " << (cc.bicrucial() ? "true" : "false") << "\n";
        std::cout << "top_right: " << (cc.top_right() ? "true" : "false") << "\n";
        std::cout << "tricrucial: " << (cc.tricrucial() ? "true" : "false") << "\n";
        std::cout << "quadrocrucial: " << (cc.quadrocrucial() ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_rsk(const Options& opt, const std::string& format) {
    const Permutation p = parse_permutation(opt.perm_text);
    const TableauPair pair = rsk(p);
    if (format == "json") {
        nlohmann::json j{{"P", pair.P.rows()}, {"Q", pair.Q.rows()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << format_tableau_pair(pair);
    }
    return 0;
}

int cmd_list(const Options& opt) {
    const PatternSpec spec(opt.k, opt.l);
    const CrucialType type = crucial_type_from_string(opt.type);
    const CountMethod method = pick_method(opt);
    const auto perms = method == CountMethod::syt ? list_syt(opt.n, spec, type)
                                                  : list_brute(opt.n, spec, type, opt.jobs);
    for (const auto& p : perms) std::cout << format_permutation(p) << "\n";
    return 0;
}

int cmd_minimal(const Options& opt) {
    const PatternSpec spec(opt.k, opt.l);
    const CrucialType type = crucial_type_from_string(opt.type);
    switch (type) {
        case CrucialType::top_right:
            std::cout << format_permutation(minimal_top_right(spec)) << "\n";
            return 0;
        case CrucialType::quadrocrucial:
            std::cout << format_permutation(minimal_quadrocrucial(spec)) << "\n";
            return 0;
        default: {
            const int n = min_length(spec, type);
            for (const auto& p : list_syt(n, spec, type)) std::cout << format_permutation(p) << "\n";
            return 0;
        }
    }
}

int cmd_table(const Options& opt, const std::string& format) {
    const PatternSpec spec(opt.k, opt.l);
    const int lo = spec.k + spec.l - 3;
    const int hi = opt.nmax >= 0 ? std::min(opt.nmax, max_length(spec)) : max_length(spec);
    std::vector<CountReport> rows;
    for (int n = lo; n <= hi; ++n)
        for (CrucialType type : kAllCrucialTypes) rows.push_back(count_syt(n, spec, type));
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : rows) arr.push_back(to_json(rep));
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << count_report_csv_header() << "\n";
        for (const auto& rep : rows) std::cout << count_report_csv_row(rep) << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    if ((opt.k > 0) != (opt.l > 0))
        throw std::invalid_argument("verify: pass both --k and --l or neither");
    const bool spec_given = opt.k > 0 && opt.l > 0;
    std::vector<PatternSpec> specs;
    if (spec_given) specs.emplace_back(opt.k, opt.l);

    SuiteResult res;
    if (opt.suite == "roundtrip") {
        res = run_roundtrip_suite(opt.nmax >= 0 ? opt.nmax : 7);
    } else if (opt.suite == "equivalence") {
        res = run_equivalence_suite(spec_given ? specs : default_spec_grid(),
                                    opt.nmax >= 0 ? opt.nmax : 8, opt.jobs);
    } else if (opt.suite == "symmetry") {
        res = run_symmetry_suite(spec_given ? specs : default_spec_grid(),
                                 opt.nmax >= 0 ? opt.nmax : 7);
    } else if (opt.suite == "growth") {
        res = run_growth_suite(spec_given ? specs : default_growth_specs());
    } else if (opt.suite == "inequalities") {
        res = run_inequalities_suite(spec_given ? specs : default_growth_specs());
    } else if (opt.suite == "formulas") {
        res = run_formulas_suite(opt.jobs);
    } else {
        throw std::invalid_argument("unknown suite: " + opt.suite);
    }
    for (const auto& line : res.lines) std::cout << line << "\n";
    std::cout << "suite " << res.name << ": " << (res.ok ? "PASS" : "FAIL") << " ("
              << res.lines.size() << " checks)\n";
    return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crucial permutations for monotone prohibitions: classification, RSK, enumeration"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--jobs", opt.jobs, "worker threads (default: all cores)");

    auto add_spec = [&](CLI::App* cmd, bool required) {
        auto* ko = cmd->add_option("--k", opt.k, "forbidden increasing length k");
        auto* lo = cmd->add_option("--l", opt.l, "forbidden decreasing length l");
        ko->check(CLI::Range(2, 64));
        lo->check(CLI::Range(2, 64));
        if (required) {
            ko->required();
            lo->required();
        }
    };

    auto* classify = app.add_subcommand("classify", "classify one permutation");
    classify->fallthrough();
    classify->add_option("perm", opt.perm_text, "permutation word")->required();
    add_spec(classify, true);
    classify->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* rsk_cmd = app.add_subcommand("rsk", "insertion and recording tableaux of a permutation");
    rsk_cmd->fallthrough();
    rsk_cmd->add_option("perm", opt.perm_text, "permutation word")->required();
    rsk_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    auto* count = app.add_subcommand("count", "count crucial permutations of one length");
    count->fallthrough();
    count->add_option("--n", opt.n, "permutation length")->required()->check(CLI::Range(0, 64));
    add_spec(count, true);
    count->add_option("--type", opt.type)->required()->check(CLI::IsMember(
        {"right", "left", "top", "bottom", "bi", "top_right", "tri", "quadro"}));
    count->add_option("--method", opt.method)->check(CLI::IsMember({"brute", "syt", "formula"}));
    count->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* list = app.add_subcommand("list", "list crucial permutations of one length");
    list->fallthrough();
    list->add_option("--n", opt.n, "permutation length")->required()->check(CLI::Range(0, 64));
    add_spec(list, true);
    list->add_option("--type", opt.type)->required()->check(CLI::IsMember(
        {"right", "left", "top", "bottom", "bi", "top_right", "tri", "quadro"}));
    list->add_option("--method", opt.method)->check(CLI::IsMember({"brute", "syt"}));

    auto* minimal = app.add_subcommand("minimal", "shortest permutations of a type");
    minimal->fallthrough();
    add_spec(minimal, true);
    minimal->add_option("--type", opt.type)->required()->check(CLI::IsMember(
        {"right", "left", "top", "bottom", "bi", "top_right", "tri", "quadro"}));

    auto* table = app.add_subcommand("table", "counts for every type over a length range");
    table->fallthrough();
    add_spec(table, true);
    table->add_option("--nmax", opt.nmax, "largest length (default: maximal)");
    table->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "run a cross-verification suite");
    verify->fallthrough();
    verify->add_option("--suite", opt.suite)
        ->required()
        ->check(CLI::IsMember({"roundtrip", "equivalence", "symmetry", "growth", "inequalities", "formulas"}));
    opt.k = opt.l = 0;  // for verify, absent means suite defaults
    verify->add_option("--k", opt.k)->check(CLI::Range(2, 64));
    verify->add_option("--l", opt.l)->check(CLI::Range(2, 64));
    verify->add_option("--nmax", opt.nmax);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
#endif

    try {
        if (classify->parsed()) return cmd_classify(opt, opt.format.empty() ? "text" : opt.format);
        if (rsk_cmd->parsed()) return cmd_rsk(opt, opt.format.empty() ? "text" : opt.format);
        if (count->parsed()) {
            print_count(run_count(opt), opt.format.empty() ? default_format("count") : opt.format);
            return 0;
        }
        if (list->parsed()) return cmd_list(opt);
        if (minimal->parsed()) return cmd_minimal(opt);
        if (table->parsed()) return cmd_table(opt, opt.format.empty() ? default_format("table") : opt.format);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const BruteCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBruteCap;
    } catch (const UnsupportedSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
