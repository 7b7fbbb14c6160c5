#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "racahops/verify.hpp"

namespace py = pybind11;
using namespace racahops;

namespace {

Rational rat(const std::string& s) {
    return Rational::parse(s);
}

ParameterSet params_from(const std::vector<std::string>& ls) {
    ParameterSet p;
    for (const auto& s : ls)
        p.lambdas.push_back(rat(s));
    return p;
}

std::vector<std::string> params_to(const ParameterSet& p) {
    std::vector<std::string> out;
    for (const auto& l : p.lambdas)
        out.push_back(l.str());
    return out;
}

Family family_from(const std::string& name) {
    if (name == "hahn")
        return Family::Hahn;
    if (name == "racah")
        return Family::Racah;
    throw Error("unknown family '" + name + "'");
}

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list out;
        for (const auto& item : j)
            out.append(json_to_py(item));
        return out;
    }
    case nlohmann::json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

std::vector<std::string> matrix_row(const RationalMatrix& m, std::size_t r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c)
        row.push_back(m.at(r, c).str());
    return row;
}

std::vector<std::vector<std::string>> matrix_to(const RationalMatrix& m) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(matrix_row(m, r));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Hahn/Racah algebra realisations by Jacobi operators";

    py::register_exception<Error>(m, "RacahopsError");
    py::register_exception<ZeroDenominator>(m, "ZeroDenominatorError");
    py::register_exception<InadmissibleParameters>(m, "InadmissibleParametersError");

    m.def(
        "pochhammer",
        [](const std::string& x, unsigned n) { return pochhammer(rat(x), n).str(); },
        py::arg("x"), py::arg("n"), "rising factorial (x)_n as an exact rational string");

    m.def(
        "gen_binomial",
        [](const std::string& x, unsigned k) { return gen_binomial(rat(x), k).str(); },
        py::arg("x"), py::arg("k"));

    m.def(
        "hyp_terminating",
        [](const std::vector<std::string>& num, const std::vector<std::string>& den, unsigned k,
           const std::string& arg) {
            std::vector<Rational> nr, dr;
            for (const auto& s : num)
                nr.push_back(rat(s));
            for (const auto& s : den)
                dr.push_back(rat(s));
            return hyp_terminating(nr, dr, k, rat(arg)).str();
        },
        py::arg("num_params"), py::arg("den_params"), py::arg("k"), py::arg("arg") = "1");

    m.def(
        "check_admissible",
        [](const std::vector<std::string>& params, unsigned N, const std::string& mode,
           unsigned degree_bound) {
            AdmissibilityMode am = AdmissibilityMode::hahn();
            if (mode == "racah")
                am = AdmissibilityMode::racah();
            else if (mode == "higher-rank")
                am = AdmissibilityMode::higher_rank(degree_bound);
            else if (mode != "hahn")
                throw Error("unknown admissibility mode '" + mode + "'");
            return check_admissible(params_from(params), N, am);
        },
        py::arg("params"), py::arg("N"), py::arg("mode"), py::arg("degree_bound") = 0,
        "returns the violated conditions; empty means admissible");

    m.def(
        "sample_params",
        [](const std::string& family, unsigned N, std::uint64_t seed) {
            return params_to(sample_family_params(family_from(family), N, seed));
        },
        py::arg("family"), py::arg("N"), py::arg("seed"));

    m.def(
        "jacobi_poly",
        [](unsigned l, const std::string& lam, const std::string& lamp, const std::string& var) {
            return jacobi_poly(l, rat(lam), rat(lamp), VarSet::single(var)).str();
        },
        py::arg("l"), py::arg("lam"), py::arg("lam_prime"), py::arg("var") = "v",
        "degree-l Jacobi polynomial in text form");

    m.def(
        "homogenized_jacobi",
        [](unsigned k, const std::string& lamI, const std::string& lamJ) {
            const auto vars = VarSet::make({"x", "y"});
            return homogenized_jacobi(k, rat(lamI), rat(lamJ), MultiPoly::variable(vars, 0),
                                      MultiPoly::variable(vars, 1))
                .str();
        },
        py::arg("k"), py::arg("lam_I"), py::arg("lam_J"),
        "(x+y)^k P_k((y-x)/(x+y)) expanded over x, y");

    m.def(
        "classical_value",
        [](const std::string& family, unsigned k, unsigned l, const std::vector<std::string>& params,
           unsigned N) {
            return classical_value(family_from(family), k, l, params_from(params), N).str();
        },
        py::arg("family"), py::arg("k"), py::arg("l"), py::arg("params"), py::arg("N"),
        "Hahn Q_{k,l} or Racah R_{k,l} as an exact rational string");

    m.def(
        "transition_table",
        [](const std::string& family, const std::vector<std::string>& params, unsigned N) {
            return json_to_py(transition_table(family_from(family), params_from(params), N).to_json());
        },
        py::arg("family"), py::arg("params"), py::arg("N"));

    m.def(
        "recurrence_values",
        [](const std::string& family, const std::vector<std::string>& params, unsigned N) {
            const auto rec = recurrence_data(family_from(family), params_from(params), N);
            py::dict out;
            auto conv = [](const std::vector<Rational>& v) {
                std::vector<std::string> s;
                for (const auto& r : v)
                    s.push_back(r.str());
                return s;
            };
            out["B"] = conv(rec.B);
            out["D"] = conv(rec.D);
            out["M"] = conv(rec.M);
            out["A"] = conv(rec.A);
            out["C"] = conv(rec.C);
            out["N"] = conv(rec.Nk);
            return out;
        },
        py::arg("family"), py::arg("params"), py::arg("N"));

    m.def(
        "convolution_matrix",
        [](const std::string& family, const std::vector<std::string>& params, unsigned N,
           bool forward) {
            const Family f = family_from(family);
            return matrix_to(f == Family::Hahn
                                 ? hahn_convolution_matrix(params_from(params), N, forward)
                                 : racah_convolution_matrix(params_from(params), N, forward));
        },
        py::arg("family"), py::arg("params"), py::arg("N"), py::arg("forward") = true,
        "closed-form transition matrix between the two eigenvector families");

    m.def(
        "enumerate_schemes",
        [](int n) {
            std::vector<std::string> out;
            for (const auto& s : enumerate_schemes(n))
                out.push_back(s.str());
            return out;
        },
        py::arg("n"));

    m.def(
        "dedupe_families",
        [](int n) {
            std::vector<std::vector<std::string>> out;
            for (const auto& fam : dedupe_families(enumerate_schemes(n))) {
                std::vector<std::string> f;
                for (const auto& blk : fam) {
                    std::string b;
                    for (int i : blk)
                        b += std::to_string(i);
                    f.push_back(b);
                }
                out.push_back(f);
            }
            return out;
        },
        py::arg("n"), "distinct commutative families as lists of block strings");

    m.def(
        "scheme_eigenvector",
        [](const std::string& scheme, const std::vector<int>& kvec,
           const std::vector<std::string>& params) {
            return scheme_eigenvector(CouplingScheme::parse(scheme), kvec, params_from(params)).str();
        },
        py::arg("scheme"), py::arg("kvec"), py::arg("params"));

    m.def(
        "scheme_eigenvalue",
        [](const std::string& scheme, int b, const std::vector<int>& kvec,
           const std::vector<std::string>& params) {
            return scheme_eigenvalue(CouplingScheme::parse(scheme), b, kvec, params_from(params))
                .str();
        },
        py::arg("scheme"), py::arg("b"), py::arg("kvec"), py::arg("params"));

    m.def(
        "verify_scheme",
        [](const std::string& scheme, const std::vector<std::string>& params, int D, int K,
           std::uint64_t seed, int jobs) {
            return json_to_py(
                verify_scheme(CouplingScheme::parse(scheme), params_from(params), D, K, seed, jobs)
                    .to_json());
        },
        py::arg("scheme"), py::arg("params"), py::arg("D") = 4, py::arg("K") = 4,
        py::arg("seed") = 0, py::arg("jobs") = 1);

    m.def(
        "run_suite",
        [](const std::string& name, const std::vector<std::string>& params, unsigned N, int D, int K,
           std::uint64_t seed, int jobs) {
            return json_to_py(run_named_suite(name, params_from(params), N, D, K, seed, jobs)
                                  .to_json());
        },
        py::arg("name"), py::arg("params") = std::vector<std::string>{}, py::arg("N") = 4,
        py::arg("D") = 8, py::arg("K") = 4, py::arg("seed") = 0, py::arg("jobs") = 1,
        "run a named verification suite and return the report as a dict");

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
