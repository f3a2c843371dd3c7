#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepinv/json_io.hpp"

namespace {

using sepinv::Json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  bool json = false;

  void emit(const Json& doc, const std::string& text) const {
    if (json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << text;
  }
};

std::string render_group_report(const sepinv::GroupReport& r) {
  std::string line = r.group + ": kappa=" + std::to_string(r.kappa) + " mu=" + std::to_string(r.mu) +
                     " lambda=" + std::to_string(r.lambda);
  line += r.bounds_ok ? " bounds=ok" : " bounds=VIOLATED";
  if (!r.claim.empty()) line += " [" + r.claim + (r.paper_ok ? ": ok]" : ": VIOLATED]");
  line += "\n";
  for (const auto& c : r.witness) {
    line += "  coset |H|=" + std::to_string(c.subgroup_size) + " rep=" + c.representative_label + " {";
    for (std::size_t i = 0; i < c.members.size(); ++i) line += (i ? ", " : "") + c.members[i];
    line += "}\n";
  }
  return line;
}

Json parse_json_arg(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around Helly dimensions of finite groups,\n"
               "orbit separation, torus monomial invariants and binary forms"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Output out;
  std::string cache_dir;
  app.add_flag("--json", out.json, "emit JSON instead of text");
  app.add_option("--cache-dir", cache_dir, "directory for subgroup-lattice caches");

  std::string group_spec;
  std::uint64_t seed = 0;
  int degree_cap = 12;
  int trials = 200;
  int cap = 0;  // helly oracle: 0 means "use mu+1"

  // group ------------------------------------------------------------------
  auto* group_cmd = app.add_subcommand("group", "group construction and inspection");
  group_cmd->require_subcommand(1);
  auto* group_info = group_cmd->add_subcommand("info", "order, center, element orders");
  group_info->add_option("--group", group_spec, "cyclic:n | dicyclic:n | binary:{tet,oct,ico} | klein4")
      ->required();
  auto* group_build = group_cmd->add_subcommand("build", "emit the full multiplication table");
  group_build->add_option("--group", group_spec)->required();

  // lattice ----------------------------------------------------------------
  auto* lattice_cmd = app.add_subcommand("lattice", "subgroup lattice statistics");
  lattice_cmd->require_subcommand(1);
  auto* lattice_subs = lattice_cmd->add_subcommand("subgroups", "enumerate all subgroups");
  lattice_subs->add_option("--group", group_spec)->required();
  auto* lattice_lambda_cmd = lattice_cmd->add_subcommand("lambda", "longest proper-subgroup chain");
  lattice_lambda_cmd->add_option("--group", group_spec)->required();
  auto* lattice_mu_cmd = lattice_cmd->add_subcommand("mu", "largest intersection independent family");
  lattice_mu_cmd->add_option("--group", group_spec)->required();

  // helly ------------------------------------------------------------------
  auto* helly_cmd = app.add_subcommand("helly", "Helly dimension computations");
  helly_cmd->require_subcommand(1);
  auto* helly_compute = helly_cmd->add_subcommand("compute", "exact kappa with mu and lambda");
  helly_compute->add_option("--group", group_spec)->required();
  auto* helly_oracle = helly_cmd->add_subcommand("oracle", "definition-level brute force kappa");
  helly_oracle->add_option("--group", group_spec)->required();
  helly_oracle->add_option("--cap", cap,
                           "largest family size enumerated (must be >= mu+1; default: mu+1)");
  auto* helly_witness = helly_cmd->add_subcommand("witness", "canonical minimal empty coset family");
  helly_witness->add_option("--group", group_spec)->required();
  auto* helly_verify = helly_cmd->add_subcommand("verify-paper", "run the full zoo verification");
  int max_cyclic = 60, max_dicyclic = 12;
  helly_verify->add_option("--max-cyclic", max_cyclic, "largest cyclic order (default 60)");
  helly_verify->add_option("--max-dicyclic", max_dicyclic, "largest dicyclic parameter (default 12)");

  // orbit ------------------------------------------------------------------
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit equality via transporter cosets");
  orbit_cmd->require_subcommand(1);
  auto* orbit_check = orbit_cmd->add_subcommand("check", "same-orbit test on the regular action");
  std::string x_list, xp_list;
  int dwise_d = 0;
  orbit_check->add_option("--group", group_spec)->required();
  orbit_check->add_option("--x", x_list, "comma-separated element indices")->required();
  orbit_check->add_option("--x-prime", xp_list, "comma-separated element indices")->required();
  orbit_check->add_option("--d", dwise_d, "also report the d-wise verdict");
  auto* orbit_witness = orbit_cmd->add_subcommand("witness-instance",
                                                  "counterexample tuples from the kappa witness");
  orbit_witness->add_option("--group", group_spec)->required();
  auto* orbit_reductive = orbit_cmd->add_subcommand("verify-reductive", "randomized d-wise checks");
  int field_q = 7, lin_dim = 2;
  orbit_reductive->add_option("--group", group_spec, "cyclic:n only")->required();
  orbit_reductive->add_option("--field", field_q, "prime power q <= 9 with n | q-1");
  orbit_reductive->add_option("--dim", lin_dim, "dimension of the diagonal action");
  orbit_reductive->add_option("--trials", trials);
  orbit_reductive->add_option("--seed", seed)->required();

  // torus ------------------------------------------------------------------
  auto* torus_cmd = app.add_subcommand("torus", "diagonal torus monomial invariants");
  torus_cmd->require_subcommand(1);
  auto* torus_sep = torus_cmd->add_subcommand("separate", "first separating invariant monomial");
  std::string weights_text, v_text, vp_text, support_text;
  torus_sep->add_option("--weights", weights_text, "weight matrix JSON")->required();
  torus_sep->add_option("--v", v_text, "point JSON (array of rationals)")->required();
  torus_sep->add_option("--v-prime", vp_text, "point JSON")->required();
  torus_sep->add_option("--degree-cap", degree_cap);
  torus_sep->add_option("--support", support_text, "comma-separated copy indices (default: all)");
  auto* torus_sharp = torus_cmd->add_subcommand("sharpness", "rank n-1 torus sharpness instance");
  int torus_n = 3;
  torus_sharp->add_option("--n", torus_n)->required();
  torus_sharp->add_option("--degree-cap", degree_cap);
  auto* torus_char2 = torus_cmd->add_subcommand("char2", "characteristic-2 variant over GF(4)");
  torus_char2->add_option("--n", torus_n)->required();
  torus_char2->add_option("--degree-cap", degree_cap);

  // binary -----------------------------------------------------------------
  auto* binary_cmd = app.add_subcommand("binary", "binary form predicates");
  binary_cmd->require_subcommand(1);
  std::string form_text, forms_text, l_text, m_text;
  auto* binary_profile = binary_cmd->add_subcommand("profile", "root multiplicity strata");
  binary_profile->add_option("--form", form_text, "coefficient array JSON, c0..cd for sum ci x^i y^(d-i)")
      ->required();
  auto* binary_classify = binary_cmd->add_subcommand("classify", "structural case label of a tuple");
  binary_classify->add_option("--forms", forms_text, "array of coefficient arrays")->required();
  auto* binary_limit = binary_cmd->add_subcommand("limit", "one-parameter limit along l/m");
  binary_limit->add_option("--form", form_text)->required();
  binary_limit->add_option("--l", l_text, "linear form [c0, c1]")->required();
  binary_limit->add_option("--m", m_text, "linear form [c0, c1]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    // group ----------------------------------------------------------------
    if (group_info->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      Json j;
      j["group"] = g.name();
      j["order"] = g.order();
      j["center_size"] = g.center().count();
      j["abelianization_order"] = g.abelianization_order();
      Json orders = Json::array();
      for (int x = 0; x < g.order(); ++x)
        orders.push_back(Json{{"label", g.label(x)}, {"order", g.element_order(x)}});
      j["elements"] = orders;
      std::string text = g.name() + ": order " + std::to_string(g.order()) + ", center " +
                         std::to_string(g.center().count()) + ", abelianization " +
                         std::to_string(g.abelianization_order()) + "\n";
      out.emit(j, text);
      return kExitOk;
    }
    if (group_build->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      Json rows = Json::array();
      for (int a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        rows.push_back(row);
      }
      Json labels = Json::array();
      for (int x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
      Json j{{"group", g.name()}, {"order", g.order()}, {"labels", labels}, {"product", rows}};
      std::string text;
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) text += (b ? " " : "") + std::to_string(g.mul(a, b));
        text += "\n";
      }
      out.emit(j, text);
      return kExitOk;
    }

    // lattice ----------------------------------------------------------------
    if (lattice_subs->parsed() || lattice_lambda_cmd->parsed() || lattice_mu_cmd->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      sepinv::SubgroupLattice l = sepinv::enumerate_subgroups(g, cache_dir);
      if (lattice_subs->parsed()) {
        Json subs = Json::array();
        for (int i = 0; i < l.count(); ++i)
          subs.push_back(Json{{"id", i},
                              {"size", l.size_of(i)},
                              {"members", sepinv::elemset_to_hex(l.subgroup(i), g.order())}});
        Json j{{"group", g.name()}, {"count", l.count()}, {"subgroups", subs}};
        std::string text = g.name() + ": " + std::to_string(l.count()) + " subgroups\n";
        for (int i = 0; i < l.count(); ++i)
          text += "  id " + std::to_string(i) + " size " + std::to_string(l.size_of(i)) + "\n";
        out.emit(j, text);
      } else if (lattice_lambda_cmd->parsed()) {
        int lambda = sepinv::lattice_lambda(l);
        out.emit(Json{{"group", g.name()}, {"lambda", lambda}},
                 g.name() + ": lambda = " + std::to_string(lambda) + "\n");
      } else {
        sepinv::MuResult mu = sepinv::lattice_mu(l);
        Json j{{"group", g.name()}, {"mu", mu.mu}, {"witness_subgroup_ids", mu.witness}};
        std::string text = g.name() + ": mu = " + std::to_string(mu.mu) + "\n";
        out.emit(j, text);
      }
      return kExitOk;
    }

    // helly ------------------------------------------------------------------
    if (helly_compute->parsed() || helly_witness->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      sepinv::GroupReport r = sepinv::report_for_group(g, cache_dir);
      out.emit(sepinv::to_json(r), render_group_report(r));
      return r.bounds_ok && r.paper_ok ? kExitOk : kExitClaimFailed;
    }
    if (helly_oracle->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      sepinv::SubgroupLattice l = sepinv::enumerate_subgroups(g, cache_dir);
      if (cap <= 0) cap = sepinv::lattice_mu(l).mu + 1;
      int kappa = sepinv::kappa_oracle(g, l, cap);
      out.emit(Json{{"group", g.name()}, {"cap", cap}, {"kappa_oracle", kappa}},
               g.name() + ": kappa_oracle = " + std::to_string(kappa) + " (cap " + std::to_string(cap) +
                   ")\n");
      return kExitOk;
    }
    if (helly_verify->parsed()) {
      auto zoo = sepinv::build_zoo(max_cyclic, max_dicyclic);
      sepinv::Section4Report report = sepinv::verify_section4(zoo, cache_dir);
      std::string text;
      for (const auto& r : report.groups) text += render_group_report(r);
      text += report.all_ok ? "all claims verified\n" : "CLAIM VIOLATIONS FOUND\n";
      out.emit(sepinv::to_json(report), text);
      return report.all_ok ? kExitOk : kExitClaimFailed;
    }

    // orbit ------------------------------------------------------------------
    if (orbit_check->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      sepinv::ActionTable action = sepinv::regular_action(g);
      sepinv::TupleInstance inst{&action, parse_int_list(x_list), parse_int_list(xp_list)};
      for (int v : inst.x)
        if (v < 0 || v >= action.points()) throw std::invalid_argument("point index out of range");
      for (int v : inst.x_prime)
        if (v < 0 || v >= action.points()) throw std::invalid_argument("point index out of range");
      sepinv::OrbitCheck same = sepinv::same_orbit(inst);
      Json j{{"instance_hash", sepinv::instance_hash(inst)}, {"same_orbit", same.same}};
      std::string text = std::string("same_orbit = ") + (same.same ? "true" : "false");
      if (same.same) {
        j["witness_element"] = g.label(same.witness);
        text += " via " + g.label(same.witness);
      }
      if (dwise_d > 0) {
        sepinv::DwiseVerdict v = sepinv::dwise_implies_global(inst, dwise_d);
        j["d"] = dwise_d;
        j["verdict"] = sepinv::to_string(v);
        text += std::string("; d=") + std::to_string(dwise_d) + " verdict " + sepinv::to_string(v);
      }
      out.emit(j, text + "\n");
      return kExitOk;
    }
    if (orbit_witness->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      sepinv::SubgroupLattice l = sepinv::enumerate_subgroups(g, cache_dir);
      sepinv::KappaResult kr = sepinv::kappa_exact(g, l);
      if (!kr.witness) throw std::runtime_error("group has kappa = 1, no witness instance");
      sepinv::WitnessInstance wi = sepinv::witness_instance(l, *kr.witness);
      sepinv::TupleInstance inst{&wi.action, wi.x, wi.x_prime};
      int d_low = kr.kappa - 1;
      Json j{{"group", g.name()},
             {"kappa", kr.kappa},
             {"points", wi.action.points()},
             {"m", static_cast<int>(wi.x.size())},
             {"instance_hash", sepinv::instance_hash(inst)}};
      std::string text = g.name() + ": kappa = " + std::to_string(kr.kappa) + ", instance over " +
                         std::to_string(wi.action.points()) + " points\n";
      if (d_low >= 1) {
        sepinv::DwiseVerdict low = sepinv::dwise_implies_global(inst, d_low);
        j["verdict_at_kappa_minus_1"] = sepinv::to_string(low);
        text += "  d = kappa-1: " + std::string(sepinv::to_string(low)) + "\n";
      }
      sepinv::DwiseVerdict high = sepinv::dwise_implies_global(inst, kr.kappa);
      j["verdict_at_kappa"] = sepinv::to_string(high);
      text += "  d = kappa:   " + std::string(sepinv::to_string(high)) + "\n";
      out.emit(j, text);
      bool ok = (d_low < 1 || j["verdict_at_kappa_minus_1"] == "COUNTEREXAMPLE") &&
                high != sepinv::DwiseVerdict::COUNTEREXAMPLE;
      return ok ? kExitOk : kExitClaimFailed;
    }
    if (orbit_reductive->parsed()) {
      sepinv::GroupTable g = sepinv::build_from_spec(group_spec);
      if (g.name().rfind("cyclic:", 0) != 0)
        throw std::invalid_argument("verify-reductive drives the diagonal action of a cyclic group");
      sepinv::Gf field(field_q);
      sepinv::LinearAction action = sepinv::diagonal_cyclic_action(g, field, lin_dim);
      sepinv::ReductiveReport report = sepinv::verify_reductive_bound(action, trials, seed);
      std::string text = g.name() + " on GF(" + std::to_string(field_q) + ")^" + std::to_string(lin_dim) +
                         ": trials " + std::to_string(report.trials) + ", d-wise-equal " +
                         std::to_string(report.dwise_equal_count) + ", violations " +
                         std::to_string(report.violations.size()) + "\n";
      out.emit(sepinv::to_json(report), text);
      return report.violations.empty() ? kExitOk : kExitClaimFailed;
    }

    // torus ------------------------------------------------------------------
    if (torus_sep->parsed()) {
      sepinv::WeightMatrix w = sepinv::weight_matrix_from_json(parse_json_arg(weights_text, "--weights"));
      std::vector<sepinv::Rational> v = sepinv::point_from_json(parse_json_arg(v_text, "--v"));
      std::vector<sepinv::Rational> vp = sepinv::point_from_json(parse_json_arg(vp_text, "--v-prime"));
      sepinv::CopySupport support;
      if (!support_text.empty()) support = parse_int_list(support_text);
      auto monomial = sepinv::separates(w, v, vp, degree_cap, support);
      Json j{{"degree_cap", degree_cap}, {"support", support ? Json(*support) : Json("all")}};
      std::string text;
      if (monomial) {
        j["separating_monomial"] = sepinv::monomial_to_json(*monomial, w.copy_dim);
        text = "separating monomial: " + monomial->to_string(w.copy_dim) + "\n";
      } else {
        j["separating_monomial"] = nullptr;
        text = "no separating invariant monomial within the cap\n";
      }
      out.emit(j, text);
      return kExitOk;
    }
    if (torus_sharp->parsed() || torus_char2->parsed()) {
      sepinv::SharpnessReport r = torus_sharp->parsed() ? sepinv::sharpness_check(torus_n, degree_cap)
                                                        : sepinv::char2_check(torus_n, degree_cap);
      std::string text = "n = " + std::to_string(r.n) + ": ";
      text += r.full_support_monomial
                  ? "separated by " + r.full_support_monomial->to_string(torus_n)
                  : "NOT separated with full support";
      text += r.restricted_all_fail ? "; no n-copy support separates (cap " + std::to_string(r.degree_cap) + ")\n"
                                    : "; SOME n-copy support separates\n";
      out.emit(sepinv::to_json(r), text);
      return r.ok ? kExitOk : kExitClaimFailed;
    }

    // binary -----------------------------------------------------------------
    if (binary_profile->parsed()) {
      sepinv::BinaryForm f = sepinv::form_from_json(parse_json_arg(form_text, "--form"));
      sepinv::MultiplicityProfile p = sepinv::multiplicity_profile(f);
      Json j = sepinv::to_json(p);
      j["degree"] = f.degree;
      j["form"] = f.to_string();
      std::string text = f.to_string() + ": infinity mult " + std::to_string(p.infinity_mult);
      for (const auto& [mult, deg] : p.finite)
        text += ", mult " + std::to_string(mult) + " on degree " + std::to_string(deg);
      out.emit(j, text + "\n");
      return kExitOk;
    }
    if (binary_classify->parsed()) {
      std::vector<sepinv::BinaryForm> forms = sepinv::forms_from_json(parse_json_arg(forms_text, "--forms"));
      sepinv::CaseTag tag = sepinv::case_classify(forms);
      sepinv::OrbitFlags flags = sepinv::orbit_flags(forms);
      Json profiles = Json::array();
      for (const auto& f : forms)
        profiles.push_back(f.is_zero() ? Json(nullptr) : sepinv::to_json(sepinv::multiplicity_profile(f)));
      Json j{{"case", sepinv::to_string(tag)}, {"flags", sepinv::to_json(flags)}, {"profile", profiles}};
      out.emit(j, std::string("case ") + sepinv::to_string(tag) + "\n");
      return kExitOk;
    }
    if (binary_limit->parsed()) {
      sepinv::BinaryForm f = sepinv::form_from_json(parse_json_arg(form_text, "--form"));
      sepinv::BinaryForm l = sepinv::form_from_json(parse_json_arg(l_text, "--l"));
      sepinv::BinaryForm m = sepinv::form_from_json(parse_json_arg(m_text, "--m"));
      sepinv::TorusLimit limit = sepinv::limit_along_torus(f, l, m);
      Json j = sepinv::to_json(limit);
      std::string text = j["kind"].get<std::string>();
      if (limit.value) text += ": " + limit.value->to_string();
      out.emit(j, text + "\n");
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaimFailed;
  }
  return kExitUsage;
}
