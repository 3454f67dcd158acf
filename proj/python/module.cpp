#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracx/dist.hpp"
#include "fracx/errors.hpp"
#include "fracx/fracsolve.hpp"
#include "fracx/mc.hpp"
#include "fracx/specfun.hpp"
#include "fracx/verify.hpp"

namespace py = pybind11;
using namespace fracx;

namespace {

DistKind kind_of(const std::string& s) {
  if (s == "fweibull") return DistKind::fweibull;
  if (s == "ffrechet") return DistKind::ffrechet;
  if (s == "fgumbel") return DistKind::fgumbel;
  throw DomainError("unknown distribution kind " + s);
}

FunctionalKind fkind_of(const std::string& s) {
  if (s == "weibull_int") return FunctionalKind::weibull_int;
  if (s == "frechet_int") return FunctionalKind::frechet_int;
  if (s == "exp_int") return FunctionalKind::exp_int;
  throw DomainError("unknown functional kind " + s);
}

}  // namespace

PYBIND11_MODULE(fracxpy, m) {
  m.doc() = "fractional extreme distributions: certified series, exact "
            "samplers, fixed-point solvers";

  py::register_exception<DomainError>(m, "FracxDomainError",
                                      PyExc_ValueError);
  py::register_exception<NonConvergent>(m, "NonConvergent",
                                        PyExc_RuntimeError);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("abs_error_bound", &EvalResult::abs_error_bound)
      .def_readonly("terms_used", &EvalResult::terms_used)
      .def_readonly("precision_bits_used", &EvalResult::precision_bits_used)
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + std::to_string(r.value) +
               ", abs_error_bound=" + std::to_string(r.abs_error_bound) + ")";
      });

  m.def(
      "mittag_leffler",
      [](double alpha, double beta, double z) {
        return mittag_leffler(alpha, beta, z, EvalConfig{}.with_env_cap());
      },
      py::arg("alpha"), py::arg("beta"), py::arg("z"));
  m.def(
      "kilbas_saigo",
      [](double alpha, double mm, double l, double z) {
        return kilbas_saigo(KSParams(alpha, mm, l), z,
                            EvalConfig{}.with_env_cap());
      },
      py::arg("alpha"), py::arg("m"), py::arg("l"), py::arg("z"));
  m.def(
      "le_roy",
      [](double alpha, double z) {
        return le_roy(alpha, z, EvalConfig{}.with_env_cap());
      },
      py::arg("alpha"), py::arg("z"));

  auto dist_fn = [](EvalResult (*f)(const DistDescriptor&, double,
                                    const EvalConfig&)) {
    return [f](const std::string& kind, double alpha, double lambda,
               double rho, double x) {
      return f(make_dist(kind_of(kind), alpha, lambda, rho), x,
               EvalConfig{}.with_env_cap());
    };
  };
  m.def("sf", dist_fn(&sf), py::arg("kind"), py::arg("alpha"),
        py::arg("lambda_"), py::arg("rho"), py::arg("x"));
  m.def("cdf", dist_fn(&cdf), py::arg("kind"), py::arg("alpha"),
        py::arg("lambda_"), py::arg("rho"), py::arg("x"));
  m.def("pdf", dist_fn(&pdf), py::arg("kind"), py::arg("alpha"),
        py::arg("lambda_"), py::arg("rho"), py::arg("x"));
  m.def(
      "quantile",
      [](const std::string& kind, double alpha, double lambda, double rho,
         double p) {
        return quantile(make_dist(kind_of(kind), alpha, lambda, rho), p,
                        EvalConfig{}.with_env_cap());
      },
      py::arg("kind"), py::arg("alpha"), py::arg("lambda_"), py::arg("rho"),
      py::arg("p"));
  m.def(
      "mellin",
      [](const std::string& kind, double alpha, double lambda, double rho,
         double s) {
        return mellin(make_dist(kind_of(kind), alpha, lambda, rho), s,
                      PochhammerContext{rho});
      },
      py::arg("kind"), py::arg("alpha"), py::arg("lambda_"), py::arg("rho"),
      py::arg("s"));

  m.def(
      "log_double_gamma",
      [](double z, double delta) {
        return log_double_gamma(z, PochhammerContext{delta});
      },
      py::arg("z"), py::arg("delta"));
  m.def(
      "log_pochhammer",
      [](double a, double s, double delta) {
        return log_pochhammer(a, s, PochhammerContext{delta});
      },
      py::arg("a"), py::arg("s"), py::arg("delta"));

  m.def(
      "sample",
      [](const std::string& kind, double alpha, double lambda, double rho,
         long n, std::uint64_t seed, std::uint64_t stream, long n_factors) {
        ProductConfig pc;
        pc.n_factors = n_factors;
        return sample_dist(make_dist(kind_of(kind), alpha, lambda, rho), n,
                           {seed, stream}, SampleMethod::beta_product, {}, pc)
            .values;
      },
      py::arg("kind"), py::arg("alpha"), py::arg("lambda_"), py::arg("rho"),
      py::arg("n"), py::arg("seed") = 0, py::arg("stream") = 0,
      py::arg("n_factors") = 20000);
  m.def(
      "sample_functional",
      [](const std::string& kind, double alpha, double rho, long n,
         std::uint64_t seed, std::uint64_t stream, long n_factors) {
        ProductConfig pc;
        pc.n_factors = n_factors;
        Rng rng({seed, stream});
        std::vector<double> out;
        out.reserve(n);
        for (long i = 0; i < n; ++i)
          out.push_back(sample_functional(fkind_of(kind), alpha, rho,
                                          SampleMethod::beta_product, {}, pc,
                                          rng));
        return out;
      },
      py::arg("kind"), py::arg("alpha"), py::arg("rho"), py::arg("n"),
      py::arg("seed") = 0, py::arg("stream") = 0,
      py::arg("n_factors") = 20000);

  m.def(
      "power_hazard_solve",
      [](const std::string& kind, double alpha, double lambda, double rho,
         double x) {
        HazardKind k = kind == "weibull" ? HazardKind::weibull_type
                       : kind == "frechet" ? HazardKind::frechet_type
                                           : HazardKind::gumbel_type;
        return power_hazard_solve(k, alpha, lambda, rho, x,
                                  EvalConfig{}.with_env_cap());
      },
      py::arg("kind"), py::arg("alpha"), py::arg("lambda_"), py::arg("rho"),
      py::arg("x"));

  m.def(
      "verify",
      [](const std::string& suite, bool quick, std::uint64_t seed) {
        SuiteConfig sc;
        sc.quick = quick;
        sc.rng.seed = seed;
        py::list out;
        for (const auto& r : verify_suite(suite, sc)) {
          py::dict d;
          d["name"] = r.name;
          d["statistic"] = r.statistic;
          d["threshold"] = r.threshold;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("quick") = true,
      py::arg("seed") = 20260824);
}
