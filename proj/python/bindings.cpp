#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "ztower/campaign.hpp"
#include "ztower/oracle.hpp"

namespace py = pybind11;
using namespace ztower;
using nlohmann::json;

namespace {

// Big integers cross the boundary as decimal strings; Python side converts.
IntMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

std::vector<std::string> divisor_strings(const std::vector<Integer>& d) {
  std::vector<std::string> out;
  for (const auto& x : d) out.push_back(x.get_str());
  return out;
}

GModule module_from_spec_json(const std::string& text) {
  return build_module(block_spec_from_json(json::parse(text)));
}

}  // namespace

PYBIND11_MODULE(_ztower, m) {
  m.doc() = "exact cohomology engine for modules over cyclic p-groups";

  m.def("snf_divisors",
        [](const std::vector<std::vector<std::string>>& rows) {
          return divisor_strings(snf(matrix_from_rows(rows)).divisors);
        },
        "Smith normal form divisors of an integer matrix given as decimal "
        "string rows");

  m.def("kernel_rank", [](const std::vector<std::vector<std::string>>& rows) {
    return kernel_basis(matrix_from_rows(rows)).cols();
  });

  m.def("cyclotomic_chi_closed_form", &cyclotomic_chi_closed_form,
        py::arg("p"), py::arg("n"), py::arg("i"), py::arg("j"));

  m.def("generate_spec",
        [](std::uint64_t seed, unsigned long p, unsigned n, std::size_t max_rank,
           unsigned max_multiplicity, unsigned conjugator_bound,
           bool finite_blocks) {
          return to_json(sample_block_spec(seed, p, n, max_rank,
                                           max_multiplicity, conjugator_bound,
                                           finite_blocks))
              .dump();
        },
        py::arg("seed"), py::arg("p"), py::arg("n"), py::arg("max_rank") = 20,
        py::arg("max_multiplicity") = 4, py::arg("conjugator_bound") = 2,
        py::arg("finite_blocks") = false);

  m.def("analyze", [](const std::string& spec_json) {
    return to_json(run_trial(block_spec_from_json(json::parse(spec_json)), 0),
                   true)
        .dump();
  });

  m.def("tate_orders", [](const std::string& spec_json, unsigned i) {
    const auto o = tate_orders(module_from_spec_json(spec_json), i);
    return py::make_tuple(o.v1, o.v2, o.chi);
  });

  m.def("rank_sequence", [](const std::string& spec_json) {
    return rank_sequence(module_from_spec_json(spec_json)).r;
  });

  m.def("dual_euler_char",
        [](const std::string& spec_json, unsigned i, unsigned k_cap) {
          return dual_euler_char(module_from_spec_json(spec_json), i, k_cap);
        },
        py::arg("spec_json"), py::arg("i"), py::arg("k_cap") = 64);

  m.def("oracle_cross_check",
        [](const std::string& spec_json, std::size_t rank_cap) {
          return oracle::cross_check(module_from_spec_json(spec_json), rank_cap)
              .empty();
        },
        py::arg("spec_json"), py::arg("rank_cap") = 8);
}
