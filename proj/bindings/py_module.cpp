#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepinv/json_io.hpp"

namespace py = pybind11;

namespace {

// Reports are assembled as JSON internally; hand them to python as native
// dicts/lists so the module feels like a normal python API.
py::object json_to_py(const sepinv::Json& j) {
  switch (j.type()) {
    case nlohmann::detail::value_t::null: return py::none();
    case nlohmann::detail::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::detail::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::detail::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::detail::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::detail::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::detail::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::detail::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

sepinv::BinaryForm form_from_list(const std::vector<std::string>& coeffs) {
  sepinv::Json arr = sepinv::Json::array();
  for (const auto& c : coeffs) arr.push_back(c);
  return sepinv::form_from_json(arr);
}

std::vector<sepinv::BinaryForm> forms_from_lists(const std::vector<std::vector<std::string>>& forms) {
  std::vector<sepinv::BinaryForm> out;
  for (const auto& f : forms) out.push_back(form_from_list(f));
  return out;
}

}  // namespace

PYBIND11_MODULE(sepinv, m) {
  m.doc() =
      "Exact computations around Helly dimensions of finite groups, orbit\n"
      "separation via transporter cosets, diagonal torus monomial invariants\n"
      "and binary form root-multiplicity predicates.";

  py::class_<sepinv::GroupTable>(m, "Group")
      .def(py::init([](const std::string& spec) { return sepinv::build_from_spec(spec); }),
           py::arg("spec"),
           "Build from a spec string: cyclic:n, dicyclic:n, binary:{tet,oct,ico},\n"
           "klein4, alternating:{4,5}, symmetric:{3,4}.")
      .def_property_readonly("name", &sepinv::GroupTable::name)
      .def_property_readonly("order", &sepinv::GroupTable::order)
      .def("mul", &sepinv::GroupTable::mul, py::arg("a"), py::arg("b"))
      .def("inverse", &sepinv::GroupTable::inverse, py::arg("x"))
      .def("label", &sepinv::GroupTable::label, py::arg("x"))
      .def("element_order", &sepinv::GroupTable::element_order, py::arg("x"))
      .def("center_size", [](const sepinv::GroupTable& g) { return g.center().count(); })
      .def("abelianization_order", &sepinv::GroupTable::abelianization_order)
      .def("__repr__",
           [](const sepinv::GroupTable& g) { return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def(
      "subgroup_sizes",
      [](const sepinv::GroupTable& g, const std::string& cache_dir) {
        sepinv::SubgroupLattice l = sepinv::enumerate_subgroups(g, cache_dir);
        std::vector<int> sizes;
        for (int i = 0; i < l.count(); ++i) sizes.push_back(l.size_of(i));
        return sizes;
      },
      py::arg("group"), py::arg("cache_dir") = "", "Sizes of all subgroups, ascending.");

  m.def(
      "lattice_lambda",
      [](const sepinv::GroupTable& g, const std::string& cache_dir) {
        return sepinv::lattice_lambda(sepinv::enumerate_subgroups(g, cache_dir));
      },
      py::arg("group"), py::arg("cache_dir") = "",
      "Longest strictly increasing chain of proper subgroups.");

  m.def(
      "lattice_mu",
      [](const sepinv::GroupTable& g, const std::string& cache_dir) {
        sepinv::MuResult r = sepinv::lattice_mu(sepinv::enumerate_subgroups(g, cache_dir));
        return py::make_tuple(r.mu, r.witness);
      },
      py::arg("group"), py::arg("cache_dir") = "",
      "Largest intersection independent family: (mu, witness subgroup ids).");

  m.def(
      "helly_report",
      [](const sepinv::GroupTable& g, const std::string& cache_dir) {
        return json_to_py(sepinv::to_json(sepinv::report_for_group(g, cache_dir)));
      },
      py::arg("group"), py::arg("cache_dir") = "",
      "Exact kappa with mu, lambda, bound checks and the canonical witness.");

  m.def(
      "kappa_oracle",
      [](const sepinv::GroupTable& g, int cap, const std::string& cache_dir) {
        return sepinv::kappa_oracle(g, sepinv::enumerate_subgroups(g, cache_dir), cap);
      },
      py::arg("group"), py::arg("cap"), py::arg("cache_dir") = "",
      "Definition-level brute force; cap must be at least mu+1 for soundness.");

  m.def(
      "verify_paper",
      [](int max_cyclic, int max_dicyclic, const std::string& cache_dir) {
        auto zoo = sepinv::build_zoo(max_cyclic, max_dicyclic);
        return json_to_py(sepinv::to_json(sepinv::verify_section4(zoo, cache_dir)));
      },
      py::arg("max_cyclic") = 60, py::arg("max_dicyclic") = 12, py::arg("cache_dir") = "",
      "Full zoo verification: cyclic, dicyclic and binary polyhedral claims.");

  m.def(
      "witness_verdicts",
      [](const sepinv::GroupTable& g, const std::string& cache_dir) {
        sepinv::SubgroupLattice l = sepinv::enumerate_subgroups(g, cache_dir);
        sepinv::KappaResult kr = sepinv::kappa_exact(g, l);
        if (!kr.witness) throw std::invalid_argument("group has kappa = 1");
        sepinv::WitnessInstance wi = sepinv::witness_instance(l, *kr.witness);
        sepinv::TupleInstance inst{&wi.action, wi.x, wi.x_prime};
        py::dict out;
        out["kappa"] = kr.kappa;
        out["points"] = wi.action.points();
        out["m"] = static_cast<int>(wi.x.size());
        if (kr.kappa >= 2)
          out["verdict_at_kappa_minus_1"] =
              sepinv::to_string(sepinv::dwise_implies_global(inst, kr.kappa - 1));
        out["verdict_at_kappa"] = sepinv::to_string(sepinv::dwise_implies_global(inst, kr.kappa));
        return out;
      },
      py::arg("group"), py::arg("cache_dir") = "",
      "Counterexample tuples built from the kappa witness, judged at kappa-1 and kappa.");

  m.def(
      "same_orbit_regular",
      [](const sepinv::GroupTable& g, std::vector<int> x, std::vector<int> x_prime) {
        sepinv::ActionTable a = sepinv::regular_action(g);
        sepinv::TupleInstance inst{&a, std::move(x), std::move(x_prime)};
        sepinv::OrbitCheck r = sepinv::same_orbit(inst);
        py::dict out;
        out["same"] = r.same;
        if (r.same) out["witness_element"] = g.label(r.witness);
        return out;
      },
      py::arg("group"), py::arg("x"), py::arg("x_prime"),
      "Tuple orbit equality under the regular action.");

  m.def(
      "verify_reductive",
      [](int n, int q, int dim, int trials, std::uint64_t seed) {
        sepinv::GroupTable g = sepinv::build_cyclic(n);
        static std::map<int, sepinv::Gf> fields;  // keep fields alive across calls
        auto [it, unused] = fields.try_emplace(q, q);
        sepinv::LinearAction a = sepinv::diagonal_cyclic_action(g, it->second, dim);
        return json_to_py(sepinv::to_json(sepinv::verify_reductive_bound(a, trials, seed)));
      },
      py::arg("n"), py::arg("q"), py::arg("dim"), py::arg("trials"), py::arg("seed"),
      "Randomized d-wise check for C_n acting diagonally on GF(q)^dim.");

  m.def(
      "torus_sharpness",
      [](int n, int degree_cap) { return json_to_py(sepinv::to_json(sepinv::sharpness_check(n, degree_cap))); },
      py::arg("n"), py::arg("degree_cap") = 12);

  m.def(
      "torus_char2",
      [](int n, int degree_cap) { return json_to_py(sepinv::to_json(sepinv::char2_check(n, degree_cap))); },
      py::arg("n"), py::arg("degree_cap") = 12);

  m.def(
      "torus_separates",
      [](const py::dict& weights, const std::vector<std::string>& v,
         const std::vector<std::string>& v_prime, int degree_cap,
         const std::optional<std::vector<int>>& support) {
        sepinv::Json wj;
        wj["rank"] = weights["rank"].cast<int>();
        wj["dim"] = weights["dim"].cast<int>();
        wj["copies"] = weights["copies"].cast<int>();
        sepinv::Json rows = sepinv::Json::array();
        for (const auto& row : weights["weights"].cast<std::vector<std::vector<long long>>>())
          rows.push_back(row);
        wj["weights"] = rows;
        sepinv::WeightMatrix w = sepinv::weight_matrix_from_json(wj);

        auto parse_point = [](const std::vector<std::string>& p) {
          std::vector<sepinv::Rational> out;
          for (const auto& c : p) out.push_back(sepinv::Rational::from_string(c));
          return out;
        };
        auto mono = sepinv::separates(w, parse_point(v), parse_point(v_prime), degree_cap, support);
        if (!mono) return py::object(py::none());
        return json_to_py(sepinv::monomial_to_json(*mono, w.copy_dim));
      },
      py::arg("weights"), py::arg("v"), py::arg("v_prime"), py::arg("degree_cap") = 12,
      py::arg("support") = py::none(),
      "First separating invariant monomial over Q, or None (support None means\n"
      "all copies; an empty list admits only the constant monomial).");

  m.def(
      "form_profile",
      [](const std::vector<std::string>& coeffs) {
        return json_to_py(sepinv::to_json(sepinv::multiplicity_profile(form_from_list(coeffs))));
      },
      py::arg("coefficients"), "Root multiplicity strata of sum c_i x^i y^(d-i).");

  m.def(
      "form_classify",
      [](const std::vector<std::vector<std::string>>& forms) {
        auto tuple = forms_from_lists(forms);
        py::dict out;
        out["case"] = sepinv::to_string(sepinv::case_classify(tuple));
        out["flags"] = json_to_py(sepinv::to_json(sepinv::orbit_flags(tuple)));
        return out;
      },
      py::arg("forms"), "Structural case label plus the closed-maximal sufficiency flag.");

  m.def(
      "form_limit",
      [](const std::vector<std::string>& form, const std::vector<std::string>& l,
         const std::vector<std::string>& m_form) {
        return json_to_py(sepinv::to_json(
            sepinv::limit_along_torus(form_from_list(form), form_from_list(l), form_from_list(m_form))));
      },
      py::arg("form"), py::arg("l"), py::arg("m"),
      "One-parameter limit verdict along the l/m frame: NoLimit, Zero or Balanced.");
}
