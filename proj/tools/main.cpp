// racahops CLI: run verification suites, enumerate coupling schemes, print
// expansions and transition tables. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage error, 3 inadmissible parameters.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "racahops/verify.hpp"

using namespace racahops;

namespace {

struct Options {
    std::string params_csv;
    unsigned N = 4;
    int D = 8;
    int K = 4;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
    int jobs = 1;
    bool timing = false;
};

int default_jobs() {
    if (const char* env = std::getenv("RACAHOPS_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1)
            return j;
    }
    return 1;
}

ParameterSet parse_params(const std::string& csv) {
    ParameterSet p;
    if (csv.empty())
        return p;
    std::istringstream is(csv);
    std::string piece;
    while (std::getline(is, piece, ','))
        p.lambdas.push_back(Rational::parse(piece));
    return p;
}

std::ostream& output_stream(const Options& opt, std::ofstream& file) {
    if (opt.out.empty())
        return std::cout;
    file.open(opt.out);
    if (!file)
        throw Error("cannot open output file '" + opt.out + "'");
    return file;
}

void emit_reports(const std::vector<Report>& reports, const Options& opt, std::ostream& os) {
    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back(r.to_json(opt.timing));
        os << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
    } else if (opt.format == "csv") {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const std::string csv = reports[i].to_csv(opt.timing);
            if (i == 0)
                os << csv;
            else
                os << csv.substr(csv.find('\n') + 1); // drop the repeated header
        }
    } else {
        for (const auto& r : reports)
            os << r.to_text(opt.timing) << "\n";
    }
}

void add_common(CLI::App* cmd, Options& opt, bool with_scope = true) {
    cmd->add_option("--params", opt.params_csv,
                    "comma-separated exact rationals, e.g. 1/2,3/2 (sampled when omitted)");
    if (with_scope) {
        cmd->add_option("--N", opt.N, "level (matrix size is N+1)");
        cmd->add_option("--D", opt.D, "degree bound for operator checks");
        cmd->add_option("--K", opt.K, "bound on |k|_1 for eigenvector checks");
    }
    cmd->add_option("--seed", opt.seed, "seed for parameter sampling (recorded in the report)");
    cmd->add_option("--format", opt.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    cmd->add_option("--jobs", opt.jobs, "worker threads for suite-internal parallelism");
    cmd->add_flag("--timing", opt.timing, "include measured elapsed_ms in the output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Hahn/Racah algebra realisations by Jacobi operators"};
    app.require_subcommand(1);

    Options opt;
    opt.jobs = default_jobs();

    // verify <suite>
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    std::string family_str = "hahn";
    std::string side_str = "hahn-y";
    std::vector<std::pair<CLI::App*, std::string>> suite_cmds;
    for (const char* name : {"hahn-algebra", "racah-algebra", "hahn-convolution",
                             "racah-convolution", "cross-family", "conjugation"}) {
        auto* c = verify->add_subcommand(name, std::string("the ") + name + " suite");
        add_common(c, opt);
        suite_cmds.emplace_back(c, name);
    }
    {
        auto* c = verify->add_subcommand("orthogonality", "biorthogonality sums against Gamma");
        add_common(c, opt);
        c->add_option("--family", family_str, "hahn | racah")
            ->check(CLI::IsMember({"hahn", "racah"}));
        suite_cmds.emplace_back(c, "orthogonality");
        c = verify->add_subcommand("gamma-sums", "Gamma product sums and the normalised identity");
        add_common(c, opt);
        c->add_option("--family", family_str, "hahn | racah")
            ->check(CLI::IsMember({"hahn", "racah"}));
        suite_cmds.emplace_back(c, "gamma-sums");
        c = verify->add_subcommand("tridiagonal", "tridiagonal action in the dual eigenbasis");
        add_common(c, opt);
        c->add_option("--side", side_str, "hahn-x | hahn-y | racah-x | racah-y")
            ->check(CLI::IsMember({"hahn-x", "hahn-y", "racah-x", "racah-y"}));
        suite_cmds.emplace_back(c, "tridiagonal");
    }

    // schemes enumerate / eigencheck
    auto* schemes = app.add_subcommand("schemes", "coupling scheme utilities");
    schemes->require_subcommand(1);
    int scheme_n = 4;
    bool dedupe = false;
    std::string scheme_text;
    auto* enumerate = schemes->add_subcommand("enumerate", "list all coupling schemes");
    enumerate->add_option("--n", scheme_n, "number of factors")->check(CLI::Range(2, 7));
    enumerate->add_flag("--dedupe", dedupe, "also list the distinct commutative families");
    enumerate->add_option("--format", opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->add_option("--out", opt.out, "write output to a file");

    auto* eigencheck = schemes->add_subcommand(
        "eigencheck", "commutativity and eigenvector checks for coupling schemes");
    eigencheck->add_option("--n", scheme_n, "number of factors")->check(CLI::Range(2, 7));
    eigencheck->add_option("--scheme", scheme_text,
                           "scheme text like '1|2|3 -> 12|3 -> 123' (all schemes when omitted)");
    add_common(eigencheck, opt);

    // expand / table
    auto* expand = app.add_subcommand("expand", "print convolution expansion matrices");
    std::string expand_family = "hahn";
    expand->add_option("--family", expand_family, "hahn | racah")
        ->check(CLI::IsMember({"hahn", "racah"}));
    add_common(expand, opt);

    auto* table = app.add_subcommand("table", "print a transition table as JSON");
    std::string table_family = "hahn";
    table->add_option("--family", table_family, "hahn | racah")
        ->check(CLI::IsMember({"hahn", "racah"}));
    add_common(table, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ofstream file;
        std::ostream& os = output_stream(opt, file);
        ParameterSet params = parse_params(opt.params_csv);

        if (verify->parsed()) {
            std::string suite;
            for (const auto& [cmd, name] : suite_cmds)
                if (cmd->parsed())
                    suite = name;
            if (suite == "orthogonality" || suite == "gamma-sums")
                suite += "-" + family_str;
            else if (suite == "tridiagonal")
                suite += "-" + side_str;
            const Report rep =
                run_named_suite(suite, params, opt.N, opt.D, opt.K, opt.seed, opt.jobs);
            emit_reports({rep}, opt, os);
            return rep.all_pass() ? 0 : 1;
        }

        if (enumerate->parsed()) {
            const auto all = enumerate_schemes(scheme_n);
            if (opt.format == "json") {
                nlohmann::json j;
                j["n"] = scheme_n;
                j["schemes"] = nlohmann::json::array();
                for (const auto& s : all)
                    j["schemes"].push_back(s.str());
                if (dedupe) {
                    j["families"] = nlohmann::json::array();
                    for (const auto& fam : dedupe_families(all)) {
                        nlohmann::json fj = nlohmann::json::array();
                        for (const auto& blk : fam) {
                            std::string b;
                            for (int i : blk)
                                b += std::to_string(i);
                            fj.push_back(b);
                        }
                        j["families"].push_back(fj);
                    }
                }
                os << j.dump(2) << "\n";
            } else {
                for (const auto& s : all)
                    os << s.str() << "\n";
                os << all.size() << " schemes\n";
                if (dedupe) {
                    const auto fams = dedupe_families(all);
                    for (const auto& fam : fams) {
                        std::string line;
                        for (const auto& blk : fam) {
                            line += line.empty() ? "{" : ", {";
                            for (int i : blk)
                                line += std::to_string(i);
                            line += "}";
                        }
                        os << line << "\n";
                    }
                    os << fams.size() << " distinct families\n";
                }
            }
            return 0;
        }

        if (eigencheck->parsed()) {
            if (params.size() == 0)
                params = sample_higher_rank_params(static_cast<std::size_t>(scheme_n),
                                                   static_cast<unsigned>(std::max(opt.D, opt.K)),
                                                   opt.seed);
            std::vector<Report> reports;
            if (!scheme_text.empty()) {
                reports.push_back(verify_scheme(CouplingScheme::parse(scheme_text), params, opt.D,
                                                opt.K, opt.seed, opt.jobs));
            } else {
                for (const auto& s : enumerate_schemes(scheme_n))
                    reports.push_back(verify_scheme(s, params, opt.D, opt.K, opt.seed, opt.jobs));
            }
            emit_reports(reports, opt, os);
            for (const auto& r : reports)
                if (!r.all_pass())
                    return 1;
            return 0;
        }

        if (expand->parsed()) {
            const Family family = expand_family == "hahn" ? Family::Hahn : Family::Racah;
            if (params.size() == 0)
                params = sample_family_params(family, opt.N, opt.seed);
            const auto fwd = family == Family::Hahn ? hahn_convolution_matrix(params, opt.N, true)
                                                    : racah_convolution_matrix(params, opt.N, true);
            const auto inv = family == Family::Hahn ? hahn_convolution_matrix(params, opt.N, false)
                                                    : racah_convolution_matrix(params, opt.N, false);
            if (opt.format == "json") {
                nlohmann::json j;
                j["family"] = expand_family;
                j["params"] = nlohmann::json::array();
                for (const auto& l : params.lambdas)
                    j["params"].push_back(l.str());
                j["N"] = opt.N;
                j["seed"] = opt.seed;
                auto mat = [](const RationalMatrix& m) {
                    nlohmann::json rows = nlohmann::json::array();
                    for (std::size_t r = 0; r < m.rows(); ++r) {
                        nlohmann::json row = nlohmann::json::array();
                        for (std::size_t c = 0; c < m.cols(); ++c)
                            row.push_back(m.at(r, c).str());
                        rows.push_back(row);
                    }
                    return rows;
                };
                j["w_in_v"] = mat(fwd);
                j["v_in_w"] = mat(inv);
                os << j.dump(2) << "\n";
            } else {
                os << "family: " << expand_family << ", params: [" << params.str()
                   << "], N=" << opt.N << ", seed=" << opt.seed << "\n";
                os << "w_l = sum_k M[l][k] v_k:\n" << fwd.str();
                os << "v_l = sum_k M[l][k] w_k:\n" << inv.str();
            }
            return 0;
        }

        if (table->parsed()) {
            const Family family = table_family == "hahn" ? Family::Hahn : Family::Racah;
            if (params.size() == 0)
                params = sample_family_params(family, opt.N, opt.seed);
            os << transition_table(family, params, opt.N).to_json().dump(2) << "\n";
            return 0;
        }
    } catch (const InadmissibleParameters& e) {
        std::cerr << "inadmissible parameters: " << e.what() << "\n";
        return 3;
    } catch (const ModeArityMismatch& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
