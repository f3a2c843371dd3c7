#include "sepinv/json_io.hpp"

namespace sepinv {

Json to_json(const GroupReport& r) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["kappa"] = r.kappa;
  j["mu"] = r.mu;
  j["lambda"] = r.lambda;
  j["bounds_ok"] = r.bounds_ok;
  if (!r.claim.empty()) {
    j["claim"] = r.claim;
    j["claim_ok"] = r.paper_ok;
  }
  Json witness = Json::array();
  for (const auto& c : r.witness) {
    Json wc;
    wc["subgroup_size"] = c.subgroup_size;
    wc["representative_label"] = c.representative_label;
    wc["members"] = c.members;
    witness.push_back(wc);
  }
  j["witness"] = witness;
  return j;
}

Json to_json(const Section4Report& r) {
  Json j;
  j["all_ok"] = r.all_ok;
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(to_json(g));
  j["groups"] = groups;
  return j;
}

Json to_json(const MultiplicityProfile& p) {
  Json j;
  j["infinity_mult"] = p.infinity_mult;
  Json strata = Json::array();
  for (const auto& [mult, deg] : p.finite) strata.push_back(Json{{"multiplicity", mult}, {"degree", deg}});
  j["finite"] = strata;
  return j;
}

namespace {
const char* reason_name(OrbitFlagReason r) {
  switch (r) {
    case OrbitFlagReason::NO_COMMON_HIGH_ROOT: return "NO_COMMON_HIGH_ROOT";
    case OrbitFlagReason::COMMON_HIGH_ROOT: return "COMMON_HIGH_ROOT";
    case OrbitFlagReason::ALL_ZERO: return "ALL_ZERO";
  }
  return "?";
}
}  // namespace

Json to_json(const OrbitFlags& f) {
  return Json{{"closed_maximal_sufficient", f.closed_maximal_sufficient}, {"reason", reason_name(f.reason)}};
}

Json to_json(const TorusLimit& t) {
  Json j;
  switch (t.kind) {
    case TorusLimitKind::NoLimit: j["kind"] = "NoLimit"; break;
    case TorusLimitKind::Zero: j["kind"] = "Zero"; break;
    case TorusLimitKind::Balanced: j["kind"] = "Balanced"; break;
  }
  if (t.value) j["form"] = form_to_json(*t.value);
  return j;
}

Json to_json(const ReductiveReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["d"] = r.d;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["dwise_equal_count"] = r.dwise_equal_count;
  j["violations"] = static_cast<int>(r.violations.size());
  return j;
}

Json to_json(const SharpnessReport& r) {
  Json j;
  j["n"] = r.n;
  j["degree_cap"] = r.degree_cap;
  if (r.full_support_monomial)
    j["separating_monomial"] = r.full_support_monomial->to_string(r.n);
  else
    j["separating_monomial"] = nullptr;
  j["restricted_supports_all_fail"] = r.restricted_all_fail;
  j["ok"] = r.ok;
  return j;
}

Json to_json(const SpanLemmaReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["separable_pairs"] = r.separable_pairs;
  j["disagreements"] = r.disagreements;
  return j;
}

Json form_to_json(const BinaryForm& f) {
  Json arr = Json::array();
  for (const Rational& c : f.coeffs) arr.push_back(c.to_string());
  return Json{{"degree", f.degree}, {"coefficients", arr}, {"display", f.to_string()}};
}

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  throw std::invalid_argument("expected a rational as an integer or \"p/q\" string");
}

}  // namespace

BinaryForm form_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("a form is a non-empty coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  int degree = static_cast<int>(coeffs.size()) - 1;
  return BinaryForm(degree, std::move(coeffs));
}

std::vector<BinaryForm> forms_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a non-empty array of forms");
  std::vector<BinaryForm> forms;
  for (const auto& f : j) forms.push_back(form_from_json(f));
  return forms;
}

WeightMatrix weight_matrix_from_json(const Json& j) {
  int rank = j.at("rank").get<int>();
  int dim = j.at("dim").get<int>();
  int copies = j.at("copies").get<int>();
  const auto& rows = j.at("weights");
  if (!rows.is_array() || static_cast<int>(rows.size()) != rank)
    throw std::invalid_argument("weights must have `rank` rows");
  std::vector<long long> base;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("each weights row must have `dim` entries");
    for (const auto& v : row) base.push_back(v.get<long long>());
  }
  return WeightMatrix(rank, dim, copies, std::move(base));
}

Json to_json(const WeightMatrix& w) {
  Json rows = Json::array();
  for (int r = 0; r < w.rank; ++r) {
    Json row = Json::array();
    for (int c = 0; c < w.copy_dim; ++c) row.push_back(w.base[r * w.copy_dim + c]);
    rows.push_back(row);
  }
  return Json{{"rank", w.rank}, {"dim", w.copy_dim}, {"copies", w.copies}, {"weights", rows}};
}

Json monomial_to_json(const Monomial& m, int copy_dim) {
  return Json{{"exponents", m.exponents}, {"display", m.to_string(copy_dim)}, {"degree", m.degree()}};
}

std::vector<Rational> point_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("a point is an array of rationals");
  std::vector<Rational> p;
  for (const auto& c : j) p.push_back(rational_from_json(c));
  return p;
}

Json point_to_json(std::span<const Rational> p) {
  Json arr = Json::array();
  for (const Rational& c : p) arr.push_back(c.to_string());
  return arr;
}

}  // namespace sepinv
