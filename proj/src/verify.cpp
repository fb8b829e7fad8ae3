#include "starmat/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "starmat/errors.hpp"
#include "starmat/expr.hpp"
#include "starmat/random_poly.hpp"
#include "starmat/star_product.hpp"

namespace starmat {

Suite suite_from_name(const std::string& name) {
    for (Suite s : all_suites())
        if (suite_name(s) == name) return s;
    if (name == "all") return Suite::All;
    throw std::invalid_argument("unknown suite: " + name);
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::All: return "all";
        case Suite::Assoc: return "assoc";
        case Suite::Unit: return "unit";
        case Suite::Semiclassical: return "semiclassical";
        case Suite::Gauge: return "gauge";
        case Suite::HomPhi: return "hom-phi";
        case Suite::HomPsi: return "hom-psi";
        case Suite::EqE: return "eqE";
        case Suite::Membership: return "membership";
        case Suite::Parser: return "parser";
    }
    throw std::logic_error("unreachable");
}

std::vector<Suite> all_suites() {
    return {Suite::Assoc, Suite::Unit,  Suite::Semiclassical, Suite::Gauge,      Suite::HomPhi,
            Suite::HomPsi, Suite::EqE, Suite::Membership,    Suite::Parser};
}

namespace {

std::string poly_line(const std::string& label, const PhasePoly& p) {
    return "  " + label + " = " + p.to_string() + "\n";
}

std::string ebasis_block(const std::string& label, const EBasisElement& e) {
    std::string out = "  " + label + " =";
    if (e.is_zero()) return out + " 0\n";
    out += "\n";
    std::istringstream in(e.to_text());
    std::string line;
    while (std::getline(in, line)) out += "    " + line + "\n";
    return out;
}

struct Failure {
    long trial;
    std::string detail;
};

SuiteResult finish(const std::string& name, long checks, const std::optional<Failure>& failure) {
    SuiteResult r{name, checks, !failure.has_value(), {}};
    if (failure)
        r.counterexample = "trial " + std::to_string(failure->trial) + ":\n" + failure->detail;
    return r;
}

SuiteResult run_assoc(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    // The two-pair leg uses degree <= 4; the expansion cost grows fast enough
    // with degree that anything larger stops being a quick check.
    const int deg2 = std::min(cfg.max_degree, 4);
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        PhasePoly f = random_poly(cfg.max_degree, 1, false, rng);
        PhasePoly g = random_poly(cfg.max_degree, 1, false, rng);
        PhasePoly h = random_poly(cfg.max_degree, 1, false, rng);
        struct ProductCase {
            const char* label;
            PhasePoly (*prod)(const PhasePoly&, const PhasePoly&);
        };
        for (const auto& pc : {ProductCase{"moyal", moyal_product},
                               ProductCase{"standard", standard_product}}) {
            PhasePoly lhs = pc.prod(pc.prod(f, g), h);
            PhasePoly rhs = pc.prod(f, pc.prod(g, h));
            ++checks;
            if (lhs != rhs) {
                failure = Failure{t, poly_line("f", f) + poly_line("g", g) + poly_line("h", h) +
                                         poly_line(std::string("(f ") + pc.label + " g) " +
                                                       pc.label + " h",
                                                   lhs) +
                                         poly_line(std::string("f ") + pc.label + " (g " +
                                                       pc.label + " h)",
                                                   rhs)};
                break;
            }
        }
        if (failure) break;
        PhasePoly f2 = random_poly(deg2, 2, false, rng);
        PhasePoly g2 = random_poly(deg2, 2, false, rng);
        PhasePoly h2 = random_poly(deg2, 2, false, rng);
        PhasePoly lhs = moyal_product(moyal_product(f2, g2), h2);
        PhasePoly rhs = moyal_product(f2, moyal_product(g2, h2));
        ++checks;
        if (lhs != rhs)
            failure = Failure{t, poly_line("f", f2) + poly_line("g", g2) + poly_line("h", h2) +
                                     poly_line("(f *_h g) *_h h", lhs) +
                                     poly_line("f *_h (g *_h h)", rhs)};
    }
    return finish("assoc", checks, failure);
}

SuiteResult run_unit(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    const PhasePoly one1 = PhasePoly::constant(1, Rational(1));
    const PhasePoly one_n = PhasePoly::constant(cfg.n_pairs, Rational(1));
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        PhasePoly f = random_poly(cfg.max_degree, cfg.n_pairs, false, rng);
        for (const auto& [label, val] : {std::pair{"1 *_h f", moyal_product(one_n, f)},
                                         std::pair{"f *_h 1", moyal_product(f, one_n)}}) {
            ++checks;
            if (val != f) {
                failure = Failure{t, poly_line("f", f) + poly_line(label, val)};
                break;
            }
        }
        if (failure) break;
        PhasePoly f1 = random_poly(cfg.max_degree, 1, false, rng);
        for (const auto& [label, val] : {std::pair{"1 star_h f", standard_product(one1, f1)},
                                         std::pair{"f star_h 1", standard_product(f1, one1)}}) {
            ++checks;
            if (val != f1) {
                failure = Failure{t, poly_line("f", f1) + poly_line(label, val)};
                break;
            }
        }
    }
    return finish("unit", checks, failure);
}

SuiteResult run_semiclassical(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        // The h-grading argument needs h-free inputs.
        PhasePoly f = random_poly(cfg.max_degree, cfg.n_pairs, true, rng);
        PhasePoly g = random_poly(cfg.max_degree, cfg.n_pairs, true, rng);
        PhasePoly f1 = cfg.n_pairs == 1 ? f : random_poly(cfg.max_degree, 1, true, rng);
        PhasePoly g1 = cfg.n_pairs == 1 ? g : random_poly(cfg.max_degree, 1, true, rng);

        PhasePoly classical = f * g;
        PhasePoly bracket = poisson_bracket(f, g);
        PhasePoly prod = moyal_product(f, g);
        PhasePoly comm = prod - moyal_product(g, f);
        checks += 2;
        if (coeff_of_hbar(prod, 0) != classical) {
            failure = Failure{t, poly_line("f", f) + poly_line("g", g) +
                                     poly_line("h^0 part of f *_h g", coeff_of_hbar(prod, 0)) +
                                     poly_line("f g", classical)};
            break;
        }
        if (coeff_of_hbar(comm, 1) != bracket) {
            failure = Failure{t, poly_line("f", f) + poly_line("g", g) +
                                     poly_line("h^1 part of [f, g]_*", coeff_of_hbar(comm, 1)) +
                                     poly_line("{f, g}", bracket)};
            break;
        }
        PhasePoly sprod = standard_product(f1, g1);
        PhasePoly scomm = sprod - standard_product(g1, f1);
        checks += 2;
        if (coeff_of_hbar(sprod, 0) != f1 * g1) {
            failure = Failure{t, poly_line("f", f1) + poly_line("g", g1) +
                                     poly_line("h^0 part of f star_h g", coeff_of_hbar(sprod, 0)) +
                                     poly_line("f g", f1 * g1)};
            break;
        }
        if (coeff_of_hbar(scomm, 1) != poisson_bracket(f1, g1)) {
            failure = Failure{t, poly_line("f", f1) + poly_line("g", g1) +
                                     poly_line("h^1 part of [f, g]_star",
                                               coeff_of_hbar(scomm, 1)) +
                                     poly_line("{f, g}", poisson_bracket(f1, g1))};
            break;
        }
    }
    return finish("semiclassical", checks, failure);
}

SuiteResult run_gauge(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        PhasePoly f = random_poly(cfg.max_degree, 1, false, rng);
        PhasePoly g = random_poly(cfg.max_degree, 1, false, rng);
        PhasePoly lhs = standard_product(gauge_to_standard(f), gauge_to_standard(g));
        PhasePoly rhs = gauge_to_standard(moyal_product(f, g));
        ++checks;
        if (lhs != rhs) {
            failure = Failure{t, poly_line("f", f) + poly_line("g", g) +
                                     poly_line("T(f) star_h T(g)", lhs) +
                                     poly_line("T(f *_h g)", rhs)};
            break;
        }
        PhasePoly round = gauge_to_moyal(gauge_to_standard(f));
        ++checks;
        if (round != f)
            failure = Failure{t, poly_line("f", f) + poly_line("T^-1(T(f))", round)};
    }
    return finish("gauge", checks, failure);
}

SuiteResult run_hom_phi(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        PhasePoly f = random_poly(cfg.max_degree, 1, false, rng);
        PhasePoly g = random_poly(cfg.max_degree, 1, false, rng);
        EBasisElement lhs = phi(standard_product(f, g));
        EBasisElement rhs = ebasis_product(phi(f), phi(g));
        ++checks;
        if (lhs != rhs)
            failure = Failure{t, poly_line("f", f) + poly_line("g", g) +
                                     ebasis_block("phi(f star_h g)", lhs) +
                                     ebasis_block("phi(f) phi(g)", rhs)};
    }
    return finish("hom-phi", checks, failure);
}

SuiteResult run_hom_psi(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        PhasePoly f = random_poly(cfg.max_degree, 1, false, rng);
        PhasePoly g = random_poly(cfg.max_degree, 1, false, rng);
        EBasisElement lhs = psi(moyal_product(f, g));
        EBasisElement rhs = ebasis_product(psi(f), psi(g));
        ++checks;
        if (lhs != rhs)
            failure = Failure{t, poly_line("f", f) + poly_line("g", g) +
                                     ebasis_block("psi(f *_h g)", lhs) +
                                     ebasis_block("psi(f) psi(g)", rhs)};
    }
    return finish("hom-psi", checks, failure);
}

SuiteResult run_eqE(const VerifyConfig& cfg) {
    std::optional<Failure> failure;
    long checks = 0;
    const std::int64_t dmax = cfg.max_degree;
    const int N = static_cast<int>(4 * dmax + 4);
    for (std::int64_t a = 0; a <= dmax && !failure; ++a)
        for (std::int64_t b = 0; b <= dmax && !failure; ++b)
            for (std::int64_t c = 0; c <= dmax && !failure; ++c)
                for (std::int64_t d = 0; d <= dmax && !failure; ++d) {
                    EBasisElement claimed =
                        ebasis_product(EBasisElement::unit(a, b), EBasisElement::unit(c, d));
                    ++checks;
                    if (auto err = eqE_check_against_dense(a, b, c, d, N, claimed))
                        failure = Failure{checks - 1, "  " + *err + "\n" +
                                                      ebasis_block("structure-constant product",
                                                                   claimed)};
                }
    return finish("eqE", checks, failure);
}

SuiteResult run_membership(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    const int N = 16;
    auto check = [&](long trial, const std::string& label, const EBasisElement& e) {
        if (failure) return;
        ++checks;
        if (auto v = check_membership(realize_dense(e, N)))
            failure = Failure{trial, "  " + label + " violates the band condition at (" +
                                         std::to_string(v->i) + ", " + std::to_string(v->j) +
                                         "), valuation " + std::to_string(v->valuation) + "\n" +
                                         ebasis_block(label, e)};
    };
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        PhasePoly f = random_poly(cfg.max_degree, 1, false, rng);
        PhasePoly g = random_poly(cfg.max_degree, 1, false, rng);
        EBasisElement pf = phi(f), sf = psi(f), sg = psi(g);
        check(t, "phi(f)", pf);
        check(t, "psi(f)", sf);
        check(t, "psi(f) psi(g)", ebasis_product(sf, sg));
        check(t, "phi(f) phi(g)", ebasis_product(pf, phi(g)));
    }
    return finish("membership", checks, failure);
}

SuiteResult run_parser(const VerifyConfig& cfg) {
    SeedStream rng(cfg.seed);
    std::optional<Failure> failure;
    long checks = 0;
    for (int t = 0; t < cfg.trials && !failure; ++t) {
        ExprPtr e = random_expr(6, rng);
        const std::string printed = print_expr(e);
        ExprPtr back = parse(printed);
        ++checks;
        if (*back != *e) {
            failure = Failure{t, "  round trip changed the tree\n  printed: " + printed +
                                     "\n  reprinted: " + print_expr(back) + "\n"};
            break;
        }
        ++checks;
        if (print_expr(back) != printed) {
            failure = Failure{t, "  printing is not idempotent on: " + printed + "\n"};
            break;
        }
    }
    if (!failure) {
        PhasePoly val = eval_expr(parse("x <*> p - p <*> x"), 1);
        ++checks;
        if (val != PhasePoly::hbar(1))
            failure = Failure{cfg.trials,
                              poly_line("eval(\"x <*> p - p <*> x\")", val) + "  expected h\n"};
    }
    if (!failure) {
        // Lexical and syntax errors must carry a position inside the input.
        for (const std::string bad : {"x +", "(x", "x / 2", "3/ ", "[x, p", "q", "2 ^^ 3"}) {
            ++checks;
            try {
                eval_expr(parse(bad), 1);
                failure = Failure{cfg.trials, "  no error for malformed input: " + bad + "\n"};
                break;
            } catch (const ParseError& err) {
                if (err.offset() > bad.size()) {
                    failure = Failure{cfg.trials, "  error offset " +
                                                      std::to_string(err.offset()) +
                                                      " outside input: " + bad + "\n"};
                    break;
                }
            }
        }
    }
    return finish("parser", checks, failure);
}

}  // namespace

std::optional<std::string> eqE_check_against_dense(std::int64_t a, std::int64_t b, std::int64_t c,
                                                   std::int64_t d, int N,
                                                   const EBasisElement& claimed) {
    const EBasisElement A = EBasisElement::unit(a, b);
    const EBasisElement B = EBasisElement::unit(c, d);
    const DenseMatrix lhs = realize_dense(claimed, N);
    const DenseMatrix rhs = dense_product(realize_dense(A, N), realize_dense(B, N));
    const int block = N - static_cast<int>(safe_block_width(A));
    for (int i = 0; i < block; ++i)
        for (int j = 0; j < block; ++j)
            if (lhs.at(i, j) != rhs.at(i, j))
                return "E_{" + std::to_string(a) + "," + std::to_string(b) + "} E_{" +
                       std::to_string(c) + "," + std::to_string(d) + "}: entry (" +
                       std::to_string(i) + ", " + std::to_string(j) + ") is " +
                       lhs.at(i, j).to_string() + " from the structure constants but " +
                       rhs.at(i, j).to_string() + " from the dense product (N = " +
                       std::to_string(N) + ")";
    return std::nullopt;
}

std::vector<SuiteResult> run_suite(const VerifyConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    if (cfg.n_pairs < 1) throw std::invalid_argument("n_pairs must be >= 1");
    std::vector<SuiteResult> results;
    auto dispatch = [&](Suite s) {
        switch (s) {
            case Suite::Assoc: return run_assoc(cfg);
            case Suite::Unit: return run_unit(cfg);
            case Suite::Semiclassical: return run_semiclassical(cfg);
            case Suite::Gauge: return run_gauge(cfg);
            case Suite::HomPhi: return run_hom_phi(cfg);
            case Suite::HomPsi: return run_hom_psi(cfg);
            case Suite::EqE: return run_eqE(cfg);
            case Suite::Membership: return run_membership(cfg);
            case Suite::Parser: return run_parser(cfg);
            case Suite::All: break;
        }
        throw std::logic_error("unreachable");
    };
    if (cfg.suite == Suite::All) {
        for (Suite s : all_suites()) results.push_back(dispatch(s));
    } else {
        results.push_back(dispatch(cfg.suite));
    }
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed; });
}

std::string format_report(const VerifyConfig& cfg, const std::vector<SuiteResult>& results) {
    std::string out = "verify: suite " + suite_name(cfg.suite) + ", max degree " +
                      std::to_string(cfg.max_degree) + ", trials " + std::to_string(cfg.trials) +
                      ", seed " + std::to_string(cfg.seed) + ", n pairs " +
                      std::to_string(cfg.n_pairs) + "\n";
    for (const auto& r : results) {
        out += (r.passed ? "[pass] " : "[FAIL] ") + r.name + ": " + std::to_string(r.checks) +
               " checks\n";
        if (!r.passed) out += r.counterexample;
    }
    out += all_passed(results) ? "all suites passed\n" : "FAILURES detected\n";
    return out;
}

}  // namespace starmat
