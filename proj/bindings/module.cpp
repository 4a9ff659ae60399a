#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lolab/exact_engine.hpp"
#include "lolab/extremal.hpp"
#include "lolab/json_io.hpp"
#include "lolab/lemma_suites.hpp"
#include "lolab/mc_engine.hpp"
#include "lolab/pipeline.hpp"

namespace py = pybind11;
using namespace lolab;

namespace {

// nlohmann json -> native python objects, so certificates and reports come
// back as plain dicts/lists
py::object json_to_py(const ordered_json& j) {
    switch (j.type()) {
        case nlohmann::detail::value_t::object: {
            py::dict d;
            for (auto it = j.begin(); it != j.end(); ++it)
                d[py::str(it.key())] = json_to_py(it.value());
            return d;
        }
        case nlohmann::detail::value_t::array: {
            py::list l;
            for (const auto& e : j) l.append(json_to_py(e));
            return l;
        }
        case nlohmann::detail::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::detail::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::detail::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case nlohmann::detail::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case nlohmann::detail::value_t::number_float:
            return py::float_(j.get<double>());
        default:
            return py::none();
    }
}

Configuration make_config(const py::object& spec) {
    if (py::isinstance<Configuration>(spec)) return spec.cast<Configuration>();
    if (py::isinstance<py::dict>(spec)) {
        const std::string text = py::str(py::module_::import("json").attr("dumps")(spec));
        return config_from_json(ordered_json::parse(text));
    }
    return Configuration::from_angles(spec.cast<std::vector<double>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact, Monte Carlo and certificate engines for small-ball "
              "probabilities of planar random signed sums";

    py::class_<Configuration>(m, "Configuration")
        .def_static("from_angles", &Configuration::from_angles, py::arg("angles"))
        .def_static(
            "from_vectors",
            [](const std::vector<std::pair<double, double>>& vs) {
                std::vector<Vec2> v;
                for (auto [x, y] : vs) v.emplace_back(x, y);
                return Configuration::from_vectors(v);
            },
            py::arg("vectors"))
        .def_static(
            "from_rational",
            [](std::int64_t scale, const std::vector<std::pair<std::int64_t, std::int64_t>>& ps) {
                return Configuration::from_rational({scale, ps});
            },
            py::arg("scale"), py::arg("pairs"))
        .def("__len__", &Configuration::size)
        .def_property_readonly("is_exact", &Configuration::is_exact)
        .def_property_readonly("vectors", [](const Configuration& c) {
            std::vector<std::pair<double, double>> out;
            for (const auto& u : c.vectors()) out.emplace_back(u.x(), u.y());
            return out;
        });

    py::class_<CountResult>(m, "CountResult")
        .def_readonly("n", &CountResult::n)
        .def_readonly("r_sq", &CountResult::r_sq)
        .def_readonly("count_inside", &CountResult::count_inside)
        .def_readonly("count_uncertain", &CountResult::count_uncertain)
        .def_readonly("total", &CountResult::total)
        .def_readonly("prob_lower", &CountResult::prob_lower)
        .def_readonly("prob_upper", &CountResult::prob_upper)
        .def_readonly("eps_band", &CountResult::eps_band)
        .def_readonly("exact_mode", &CountResult::exact_mode)
        .def("__repr__", [](const CountResult& r) {
            return "CountResult(inside=" + std::to_string(r.count_inside) +
                   ", uncertain=" + std::to_string(r.count_uncertain) +
                   ", total=" + std::to_string(r.total) + ")";
        });

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("point", &McEstimate::point)
        .def_readonly("ci_low", &McEstimate::ci_low)
        .def_readonly("ci_high", &McEstimate::ci_high)
        .def_readonly("samples", &McEstimate::samples)
        .def_readonly("hits", &McEstimate::hits)
        .def_readonly("seed", &McEstimate::seed)
        .def_readonly("confidence", &McEstimate::confidence)
        .def_readonly("generator", &McEstimate::generator);

    m.def(
        "naive_probability",
        [](const py::object& cfg, double r_sq) { return naive_probability(make_config(cfg), r_sq); },
        py::arg("config"), py::arg("r_sq"));
    m.def(
        "exact_probability",
        [](const py::object& cfg, double r_sq, int threads) {
            return exact_probability(make_config(cfg), r_sq, std::nullopt, threads);
        },
        py::arg("config"), py::arg("r_sq"), py::arg("threads") = 0);
    m.def(
        "exact_q",
        [](const py::object& cfg, double a) { return exact_q(make_config(cfg), a); },
        py::arg("config"), py::arg("a"));
    m.def(
        "mean_norm_sq",
        [](const py::object& cfg) { return mean_norm_sq(make_config(cfg)); }, py::arg("config"));
    m.def(
        "mc_probability",
        [](const py::object& cfg, double r_sq, std::uint64_t samples, std::uint64_t seed,
           double confidence, int threads) {
            return mc_probability(make_config(cfg), r_sq, samples, seed, confidence, threads);
        },
        py::arg("config"), py::arg("r_sq"), py::arg("samples"), py::arg("seed"),
        py::arg("confidence") = 0.95, py::arg("threads") = 0);
    m.def(
        "mc_q",
        [](const py::object& cfg, double a, std::uint64_t samples, std::uint64_t seed,
           double confidence, int threads) {
            return mc_q(make_config(cfg), a, samples, seed, confidence, threads);
        },
        py::arg("config"), py::arg("a"), py::arg("samples"), py::arg("seed"),
        py::arg("confidence") = 0.95, py::arg("threads") = 0);

    m.def(
        "certify",
        [](const py::object& cfg, double r) { return json_to_py(to_json(certify(make_config(cfg), r))); },
        py::arg("config"), py::arg("r") = 1.4142135623730951,
        "Explicit lower-bound certificate as a dict (branch, constants, trace, bound)");
    m.def(
        "pairing_bound",
        [](int n, double delta, double r, double alpha, bool odd) {
            return pairing_bound(n, delta, r, alpha, odd);
        },
        py::arg("n"), py::arg("delta_sq_sum"), py::arg("r"), py::arg("alpha"),
        py::arg("odd") = false);
    m.def("chebyshev_pair_bound", &chebyshev_pair_bound, py::arg("m"), py::arg("K"), py::arg("a"),
          py::arg("d"));
    m.def("markov_tail_bound", &markov_tail_bound, py::arg("sum_sq"), py::arg("b"));
    m.def(
        "iterate_identity_check",
        [](const py::object& cfg) { return iterate_identity_check(make_config(cfg)); },
        py::arg("config"));

    m.def(
        "axis_probability",
        [](int n, int t, double r_sq) {
            const auto p = axis_probability(n, t, r_sq);
            return py::make_tuple(p.get_num().get_str(), p.get_den().get_str(), p.get_d());
        },
        py::arg("n"), py::arg("t"), py::arg("r_sq"),
        "Exact rational as (num_str, den_str, float_value)");
    m.def(
        "axis_profile",
        [](int n, double r_sq) { return json_to_py(to_json(axis_profile(n, r_sq))); },
        py::arg("n"), py::arg("r_sq"));
    m.def(
        "f_probe",
        [](double r, const std::vector<int>& ns) { return json_to_py(to_json(f_probe(r, ns))); },
        py::arg("r"), py::arg("n_list"));
    m.def(
        "search_min",
        [](int n, double r_sq, std::uint64_t seed, int iterations, int restarts) {
            const auto res = search_min(n, r_sq, seed, iterations, restarts);
            py::dict d;
            d["angles"] = res.angles;
            d["probability"] = res.probability;
            d["start_probability"] = res.start_probability;
            d["seed"] = res.seed;
            return d;
        },
        py::arg("n"), py::arg("r_sq"), py::arg("seed"), py::arg("iterations"),
        py::arg("restarts") = 200);

    m.def(
        "run_lemma_suites",
        [](std::uint64_t trials, std::uint64_t seed) {
            py::list out;
            for (const auto& s : run_lemma_suites(trials, seed)) {
                py::dict d;
                d["name"] = s.name;
                d["trials"] = s.trials;
                d["violations"] = s.violations;
                d["worst_margin"] = s.worst_margin;
                out.append(d);
            }
            return out;
        },
        py::arg("trials"), py::arg("seed"));
}
