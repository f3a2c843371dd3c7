#pragma once

#include <nlohmann/json.hpp>

#include "sepinv/action.hpp"
#include "sepinv/binary_forms.hpp"
#include "sepinv/helly.hpp"
#include "sepinv/torus.hpp"

namespace sepinv {

using Json = nlohmann::ordered_json;

Json to_json(const GroupReport& r);
Json to_json(const Section4Report& r);
Json to_json(const MultiplicityProfile& p);
Json to_json(const OrbitFlags& f);
Json to_json(const TorusLimit& t);
Json to_json(const ReductiveReport& r);
Json to_json(const SharpnessReport& r);
Json to_json(const SpanLemmaReport& r);

Json form_to_json(const BinaryForm& f);
// Accepts an array of rationals written as "p/q" strings or plain integers.
BinaryForm form_from_json(const Json& j);
std::vector<BinaryForm> forms_from_json(const Json& j);

// {"rank": r, "dim": n, "copies": c, "weights": [[...], ...]} (rank rows of
// dim integers each).
WeightMatrix weight_matrix_from_json(const Json& j);
Json to_json(const WeightMatrix& w);

Json monomial_to_json(const Monomial& m, int copy_dim);

std::vector<Rational> point_from_json(const Json& j);
Json point_to_json(std::span<const Rational> p);

}  // namespace sepinv
