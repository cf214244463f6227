// Command-line driver: combinatorial operations, Hilbert matrices of the
// diagonal Temperley-Lieb quotients, and the verification suites.
//
// Exit codes: 0 success / verification passed, 1 a verification failed,
// 2 usage or parse error.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dqsym/dqsym.hpp"
#include "dqsym/quotient.hpp"
#include "dqsym/verify.hpp"

using json = nlohmann::ordered_json;
using namespace dqsym;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Report {
    std::string command;
    json params = json::object();
    std::string status = "computed";  // computed | pass | fail
    json payload;
};

json hilbert_json(const HilbertMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.display_rows()) rows.push_back(row);
    json bidegrees = json::array();
    for (const auto& [d, v] : m.entries) bidegrees.push_back({d.first, d.second, v});
    return {{"n", m.n}, {"convention", "cartesian"}, {"rows", rows}, {"bidegrees", bidegrees}};
}

void emit(const Report& r, bool as_json, const std::string& text) {
    if (as_json) {
        json out{{"command", r.command},
                 {"params", r.params},
                 {"status", r.status},
                 {"payload", r.payload}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

Bidegree parse_trunc(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--trunc expects d1,d2");
    return {static_cast<unsigned>(std::stoul(text.substr(0, comma))),
            static_cast<unsigned>(std::stoul(text.substr(comma + 1)))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal quasi-symmetric functions, Temperley-Lieb harmonics, and the"
                 " associated Hilbert matrix computations"};
    app.require_subcommand(1);
    bool as_json = false;
    bool force = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--force", force, "lift the default resource guards");

    std::string arg_a, arg_b, arg_space, arg_suite, arg_trunc;
    unsigned arg_n = 0, arg_d1 = 0, arg_d2 = 0, arg_bound = 0, arg_gen_maxdeg = 0;

    CLI::App* shuffle = app.add_subcommand("shuffle", "quasi-shuffle of two bicompositions");
    shuffle->add_option("a", arg_a)->required();
    shuffle->add_option("b", arg_b)->required();

    CLI::App* mult = app.add_subcommand("mult", "product M_a M_b in the bimonomial basis");
    mult->add_option("a", arg_a)->required();
    mult->add_option("b", arg_b)->required();

    CLI::App* fbasis = app.add_subcommand("fbasis", "fundamental element in the M basis");
    fbasis->add_option("b", arg_a)->required();

    CLI::App* expand_cmd = app.add_subcommand("expand", "polynomial expansion of M_a at n");
    expand_cmd->add_option("a", arg_a)->required();
    expand_cmd->add_option("n", arg_n)->required();

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert matrix or series of a quotient");
    hilbert->add_option("space", arg_space)->required()->check(CLI::IsMember({"dq", "rdiag", "runi"}));
    hilbert->add_option("n", arg_n)->required();
    hilbert->add_option("--trunc", arg_trunc, "bidegree corner d1,d2 for rdiag");
    hilbert->add_option("--gen-maxdeg", arg_gen_maxdeg,
                        "degree bound for the diagonally symmetric generators (default n)");

    CLI::App* harmonics = app.add_subcommand("harmonics", "basis of the TL-harmonics component");
    harmonics->add_option("n", arg_n)->required();
    harmonics->add_option("d1", arg_d1)->required();
    harmonics->add_option("d2", arg_d2)->required();

    CLI::App* basis = app.add_subcommand("basis", "conjectured monomial basis of DQ_n");
    basis->add_option("n", arg_n)->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", arg_suite)
        ->required()
        ->check(CLI::IsMember({"kernel", "duality", "frobenius", "lyndon", "basis", "hopf"}));
    verify->add_option("bound", arg_bound)->required();

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int rc = kExitPass;
    try {
        Report report;
        if (*shuffle) {
            report.command = "shuffle";
            const Bicomposition a = Bicomposition::parse(arg_a), b = Bicomposition::parse(arg_b);
            report.params = {{"a", a.str()}, {"b", b.str()}};
            std::string text;
            json items = json::array();
            for (const Bicomposition& c : quasi_shuffle(a, b)) {
                text += c.str() + "\n";
                items.push_back(c.str());
            }
            report.payload = items;
            emit(report, as_json, text);
        } else if (*mult) {
            report.command = "mult";
            const Bicomposition a = Bicomposition::parse(arg_a), b = Bicomposition::parse(arg_b);
            report.params = {{"a", a.str()}, {"b", b.str()}};
            const DQSymElt prod = m_mult(a, b);
            json items = json::array();
            for (const auto& [c, v] : prod.terms()) items.push_back({c.str(), v.get_str()});
            report.payload = items;
            emit(report, as_json, prod.str() + "\n");
        } else if (*fbasis) {
            report.command = "fbasis";
            const Bicomposition b = Bicomposition::parse(arg_a);
            report.params = {{"b", b.str()}};
            const DQSymElt f = f_basis(b);
            json items = json::array();
            for (const auto& [c, v] : f.terms()) items.push_back({c.str(), v.get_str()});
            report.payload = items;
            emit(report, as_json, f.str() + "\n");
        } else if (*expand_cmd) {
            report.command = "expand";
            const Bicomposition a = Bicomposition::parse(arg_a);
            report.params = {{"a", a.str()}, {"n", arg_n}};
            const Polynomial p = m_expand(a, arg_n);
            report.payload = p.str();
            emit(report, as_json, p.str() + "\n");
        } else if (*hilbert) {
            report.command = "hilbert";
            report.params = {{"space", arg_space}, {"n", arg_n}};
            if (arg_n < 1) throw CLI::ValidationError("n must be >= 1");
            if (arg_space == "dq") {
                if (arg_n > 5 && !force)
                    throw CLI::ValidationError("no guarantees for hilbert dq with n >= 6; pass --force");
                const HilbertMatrix computed = hilbert_dq(arg_n);
                const bool match = same_dimensions(computed, predicted_dq(arg_n));
                report.status = match ? "pass" : "fail";
                report.payload = hilbert_json(computed);
                report.payload["conjecture-1"] = match ? "MATCH" : "MISMATCH";
                emit(report, as_json,
                     computed.str() + "conjecture-1: " + (match ? "MATCH" : "MISMATCH") + "\n");
                rc = match ? kExitPass : kExitFail;
            } else if (arg_space == "rdiag") {
                const unsigned reach = psi(arg_n).degree() + 1;
                Bidegree corner{reach, reach};
                unsigned cap = reach;
                if (!arg_trunc.empty()) {
                    corner = parse_trunc(arg_trunc);
                    cap = corner.first + corner.second;
                }
                if (cap > 6 && arg_n > 3 && !force)
                    throw CLI::ValidationError("large rdiag range; pass --force");
                const HilbertMatrix m = hilbert_r_diag(arg_n, corner, cap, arg_gen_maxdeg);
                report.payload = hilbert_json(m);
                emit(report, as_json, m.str());
            } else {
                const UnivariateSeries dims = hilbert_r_univariate(arg_n);
                const UnivariateSeries expected = psi(arg_n);
                const bool match = dims == expected;
                report.status = match ? "pass" : "fail";
                json coeffs = json::array();
                for (unsigned k = 0; k <= dims.degree(); ++k)
                    coeffs.push_back(dims.coeff(k).get_str());
                report.payload = {{"series", dims.str()}, {"coefficients", coeffs}};
                report.payload["psi"] = match ? "MATCH" : "MISMATCH";
                emit(report, as_json,
                     dims.str() + "\npsi: " + (match ? "MATCH" : "MISMATCH") + "\n");
                rc = match ? kExitPass : kExitFail;
            }
        } else if (*harmonics) {
            report.command = "harmonics";
            report.params = {{"n", arg_n}, {"d", {arg_d1, arg_d2}}};
            if ((arg_n > 4 || arg_d1 + arg_d2 > 6) && !force)
                throw CLI::ValidationError("large harmonics computation; pass --force");
            std::string text;
            json items = json::array();
            for (const Polynomial& h : harmonics_basis(arg_n, {arg_d1, arg_d2})) {
                text += h.str() + "\n";
                items.push_back(h.str());
            }
            report.payload = items;
            emit(report, as_json, text);
        } else if (*basis) {
            report.command = "basis";
            report.params = {{"n", arg_n}};
            if (arg_n > 5 && !force)
                throw CLI::ValidationError("large basis construction; pass --force");
            std::string text;
            json cells = json::object();
            for (const auto& [d, monos] : conjectured_basis(arg_n)) {
                std::string line = std::to_string(d.first) + "," + std::to_string(d.second) + ":";
                json list = json::array();
                for (const Monomial& m : monos) {
                    line += " " + m.str();
                    list.push_back(m.str());
                }
                cells[std::to_string(d.first) + "," + std::to_string(d.second)] = list;
                text += line + "\n";
            }
            report.payload = cells;
            emit(report, as_json, text);
        } else if (*verify) {
            report.command = "verify";
            report.params = {{"suite", arg_suite}, {"bound", arg_bound}};
            const unsigned guard = arg_suite == "kernel" || arg_suite == "basis" ||
                                           arg_suite == "frobenius"
                                       ? 5
                                       : 6;
            if (arg_bound > guard && !force)
                throw CLI::ValidationError("bound exceeds the default resource guard; pass --force");
            CheckResult result;
            if (arg_suite == "kernel")
                result = verify_kernel(arg_bound);
            else if (arg_suite == "duality")
                result = verify_duality(arg_bound);
            else if (arg_suite == "frobenius")
                result = verify_frobenius(arg_bound);
            else if (arg_suite == "lyndon")
                result = verify_lyndon(arg_bound);
            else if (arg_suite == "basis")
                result = verify_basis(arg_bound);
            else
                result = verify_hopf(arg_bound);
            const bool pass = result.pass;
            report.status = pass ? "pass" : "fail";
            report.payload = pass ? json::object() : json{{"counterexample", result.witness}};
            std::string text = pass ? "PASS\n" : "FAIL: " + result.witness + "\n";
            if (arg_suite == "basis" && arg_bound <= 3 && pass) {
                for (const auto& [d, monos] : conjectured_basis(arg_bound)) {
                    text += std::to_string(d.first) + "," + std::to_string(d.second) + ":";
                    for (const Monomial& m : monos) text += " " + m.str();
                    text += "\n";
                }
            }
            emit(report, as_json, text);
            rc = pass ? kExitPass : kExitFail;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cerr << "time: " << ms << " ms\n";
    return rc;
}
