#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "starmat/bench.hpp"
#include "starmat/errors.hpp"
#include "starmat/expr.hpp"
#include "starmat/matrix_rep.hpp"
#include "starmat/verify.hpp"

namespace {

using nlohmann::json;
using namespace starmat;

json ebasis_json(const EBasisElement& e) {
    json arr = json::array();
    std::istringstream in(e.to_text());
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::int64_t a = 0, b = 0;
        char colon = 0;
        ls >> a >> b >> colon;
        std::string coeff;
        std::getline(ls, coeff);
        if (!coeff.empty() && coeff.front() == ' ') coeff.erase(0, 1);
        arr.push_back(json::array({a, b, coeff}));
    }
    return arr;
}

json dense_json(const DenseMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

int cmd_eval(const std::string& input, int n_pairs, const std::string& format) {
    PhasePoly result = eval_expr(parse(input), n_pairs);
    if (format == "json") {
        json out = {{"input", input}, {"result", result.to_string()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << result.to_string() << "\n";
    }
    return 0;
}

int cmd_map(const std::string& input, bool use_psi, int dense_n, const std::string& format) {
    if (dense_n < 0) throw std::invalid_argument("--dense size must be positive");
    PhasePoly poly = eval_expr(parse(input), 1);
    EBasisElement image = use_psi ? psi(poly) : phi(poly);
    if (format == "json") {
        json out = {{"input", input}, {"ebasis", ebasis_json(image)}};
        if (dense_n > 0) out["dense"] = dense_json(realize_dense(image, dense_n));
        std::cout << out.dump() << "\n";
    } else {
        std::cout << image.to_text();
        if (dense_n > 0) std::cout << realize_dense(image, dense_n).to_text();
    }
    return 0;
}

int cmd_inv(const std::string& path, bool use_psi, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    EBasisElement e = ebasis_from_text(buf.str());
    PhasePoly result = use_psi ? psi_inv(e) : phi_inv(e);
    if (format == "json") {
        json out = {{"input", path}, {"result", result.to_string()}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << result.to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Moyal and standard-ordered star products on polynomial observables,\n"
                 "and their realization inside an infinite matrix algebra"};
    app.require_subcommand(1);

    std::string expr_text, file_path;
    std::string format = "text";
    int n_pairs = 1;
    int dense_n = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a star expression");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"p <*> x^2\"")->required();
    eval_cmd->add_option("--n", n_pairs, "number of (x,p) pairs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(eval_cmd);

    CLI::App* phi_cmd = app.add_subcommand("phi", "map an expression into the matrix algebra "
                                                  "via the standard-ordering isomorphism");
    CLI::App* psi_cmd = app.add_subcommand("psi", "map an expression into the matrix algebra "
                                                  "via the Moyal isomorphism");
    for (CLI::App* sub : {phi_cmd, psi_cmd}) {
        sub->add_option("expr", expr_text, "expression over one (x,p) pair")->required();
        sub->add_flag("--dense{6}", dense_n,
                      "also print the dense top-left corner (default size 6)");
        add_format(sub);
    }

    CLI::App* inv_phi_cmd =
        app.add_subcommand("inv-phi", "read an E-basis file and invert the standard-ordering "
                                      "isomorphism");
    CLI::App* inv_psi_cmd =
        app.add_subcommand("inv-psi", "read an E-basis file and invert the Moyal isomorphism");
    for (CLI::App* sub : {inv_phi_cmd, inv_psi_cmd}) {
        sub->add_option("file", file_path, "E-basis text file: lines \"a b : <h-polynomial>\"")
            ->required();
        add_format(sub);
    }

    VerifyConfig vcfg;
    std::string suite = "all";
    CLI::App* verify_cmd = app.add_subcommand("verify", "run randomized identity suites");
    verify_cmd->add_option("--suite", suite, "all, assoc, unit, semiclassical, gauge, hom-phi, "
                                             "hom-psi, eqE, membership, parser")
        ->capture_default_str();
    verify_cmd->add_option("--max-degree", vcfg.max_degree, "total degree of random inputs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--trials", vcfg.trials, "randomized trials per suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", vcfg.seed, "random seed")->capture_default_str();
    verify_cmd->add_option("--n", vcfg.n_pairs, "number of (x,p) pairs for n-ary suites")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    BenchConfig bcfg;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time the three product routes against each other");
    bench_cmd->add_option("--max-degree", bcfg.max_degree, "total degree of random inputs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--trials", bcfg.trials, "number of random pairs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--dense-n", bcfg.dense_n, "dense truncation size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--seed", bcfg.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(expr_text, n_pairs, format);
        if (phi_cmd->parsed()) return cmd_map(expr_text, false, dense_n, format);
        if (psi_cmd->parsed()) return cmd_map(expr_text, true, dense_n, format);
        if (inv_phi_cmd->parsed()) return cmd_inv(file_path, false, format);
        if (inv_psi_cmd->parsed()) return cmd_inv(file_path, true, format);
        if (verify_cmd->parsed()) {
            vcfg.suite = suite_from_name(suite);
            auto results = run_suite(vcfg);
            std::cout << format_report(vcfg, results);
            return all_passed(results) ? 0 : 1;
        }
        if (bench_cmd->parsed()) {
            BenchReport report = run_bench(bcfg);
            std::cout << format_table(report);
            return report.consistent ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " at byte " << e.offset();
        if (!e.expected().empty()) std::cerr << " (expected " << e.expected() << ")";
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
