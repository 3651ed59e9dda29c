#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "acceptance.hpp"
#include "lagorb/ff_oracle.hpp"
#include "lagorb/gl_orbits.hpp"
#include "lagorb/random.hpp"
#include "lagorb/spsp_orbits.hpp"

namespace lagorb::cli {
namespace {

using io::json;

FieldTag field_from(const json& in) {
  if (!in.contains("field")) return FieldTag::rationals();
  const json& f = in["field"];
  if (!f.is_string()) fail(ErrorCode::Schema, "field must be a string");
  return FieldTag::parse(f.get<std::string>());
}

template <class S>
SumSpace<S> sum_space_from(const json& in, const FieldTag& field) {
  std::size_t m = io::size_of(in, "m"), n = io::size_of(in, "n");
  if (m == 0 || n == 0) fail(ErrorCode::Schema, "m and n must be positive");
  if (m > 16 || n > 16) fail(ErrorCode::TooLarge, "m and n are limited to 16");
  return make_sum_space<S>(m, n, field);
}

// Subspaces arrive in caller coordinates (V1 first) and are normalized so the
// smaller factor comes first.
template <class S>
Subspace<S> lagrangian_from(const json& in, const char* key, const SumSpace<S>& s) {
  return s.normalize(io::subspace_from_json<S>(io::field_of(in, key), s.field(), s.dim()));
}

template <class S>
json spsp_dims(const SumSpace<S>& s, const SpSpClass& c) {
  // Reported in caller order: U1 is the intersection with the first factor given.
  std::size_t u1 = s.swapped ? c.dim_u2 : c.dim_u1;
  std::size_t u2 = s.swapped ? c.dim_u1 : c.dim_u2;
  return json{{"ambient", s.dim()}, {"U", s.m + s.n}, {"U1", u1}, {"U2", u2}};
}

template <class S>
json classify_spsp(const json& in, const FieldTag& field) {
  auto s = sum_space_from<S>(in, field);
  auto u = lagrangian_from(in, "U", s);
  SpSpClass c = classify(s, u);  // asserts the perp identity and the dimension ladder
  json dims = spsp_dims(s, c);
  return json{{"i", c.i},
              {"dim_u1", dims["U1"]},
              {"dim_u2", dims["U2"]},
              {"dims", dims},
              {"checks", {{"lagrangian", true}, {"perp_identity", true}, {"dimension_ladder", true}}}};
}

template <class S>
json canonical_spsp(const json& in, const FieldTag& field) {
  auto s = sum_space_from<S>(in, field);
  std::size_t i = io::size_of(in, "i");
  auto u = canonical_rep(s, i);
  bool ok = classify(s, u).i == i;
  return json{{"i", i}, {"U", io::to_json(s.denormalize(u))}, {"checks", {{"classify_matches", ok}}}};
}

template <class S>
json witness_spsp(const json& in, const FieldTag& field) {
  auto s = sum_space_from<S>(in, field);
  auto u = lagrangian_from(in, "U", s);
  auto u_prime = lagrangian_from(in, "U_prime", s);
  auto w = witness(s, u, u_prime);
  bool maps = act(s, w.g1, w.g2, u) == u_prime;
  // g1 acts on the first factor the caller listed.
  const Matrix<S>& first = s.swapped ? w.g2 : w.g1;
  const Matrix<S>& second = s.swapped ? w.g1 : w.g2;
  return json{{"i", classify(s, u).i},
              {"g1", io::to_json(first)},
              {"g2", io::to_json(second)},
              {"checks",
               {{"g1_symplectic", is_symplectic_map(s.v1, w.g1)},
                {"g2_symplectic", is_symplectic_map(s.v2, w.g2)},
                {"maps_U_to_U_prime", maps}}}};
}

template <class S>
json stab_dim_spsp(const json& in, const FieldTag& field) {
  auto s = sum_space_from<S>(in, field);
  Subspace<S> u;
  if (in.contains("U")) u = lagrangian_from(in, "U", s);
  else u = canonical_rep(s, io::size_of(in, "i"));
  std::size_t i = classify(s, u).i;
  std::size_t stab = stab_dim(s, u);
  std::size_t group = s.m * (2 * s.m + 1) + s.n * (2 * s.n + 1);
  std::size_t expected = expected_stab_dim(s.m, s.n, i);
  std::size_t closed = closed_form_orbit_dim(s.m, s.n, i);
  return json{{"i", i},
              {"stab_dim", stab},
              {"expected_stab_dim", expected},
              {"orbit_dim", group - stab},
              {"closed_form_orbit_dim", closed},
              {"checks", {{"stab_matches", stab == expected}, {"orbit_matches", group - stab == closed}}}};
}

json closure_curve_cmd(const json& in) {
  auto s = sum_space_from<Rational>(in, FieldTag::rationals());
  std::size_t i = io::size_of(in, "i");
  std::vector<Rational> ts;
  if (in.contains("t")) {
    const json& list = in["t"];
    if (!list.is_array()) fail(ErrorCode::Schema, "t must be an array of scalars");
    for (const json& t : list) ts.push_back(io::scalar_from_json<Rational>(t, FieldTag::rationals()));
  } else {
    ts = default_curve_parameters();
  }
  auto curve = closure_curve(s, i, ts);
  json points = json::array();
  bool stays = true;
  for (const auto& [t, u] : curve.points) {
    std::size_t cls = classify(s, u).i;
    stays = stays && cls == i;
    points.push_back(json{{"t", t.get_str()}, {"i", cls}, {"U", io::to_json(s.denormalize(u))}});
  }
  std::size_t limit_cls = classify(s, curve.limit).i;
  return json{{"i", i},
              {"points", std::move(points)},
              {"limit", {{"i", limit_cls}, {"U", io::to_json(s.denormalize(curve.limit))}}},
              {"checks", {{"points_in_stratum", stays}, {"limit_in_next_stratum", limit_cls == i + 1}}}};
}

PolarizedSpace polarized_from(const json& in) {
  std::size_t n = io::size_of(in, "n");
  if (n > 16) fail(ErrorCode::TooLarge, "n is limited to 16");
  return make_polarized_space(n);
}

json class_json(const GlClass& c) {
  return json{{"i", c.i}, {"j", c.j}, {"k", c.k}, {"d", c.d}, {"signature", {c.k, c.d - c.k}}};
}

QSubspace gl_lagrangian(const json& in, const char* key, const PolarizedSpace& p) {
  return io::subspace_from_json<Rational>(io::field_of(in, key), FieldTag::rationals(), 2 * p.n);
}

json classify_gl(const json& in) {
  auto p = polarized_from(in);
  auto u = gl_lagrangian(in, "U", p);
  GlClass c = classify(p, u);
  Signature beta = signature(beta_form(p, u));
  json out = class_json(c);
  out["beta_signature"] = {beta.positive, beta.negative};
  out["checks"] = {{"lagrangian", true}, {"beta_agrees", beta == c.signature()}};
  return out;
}

json canonical_gl(const json& in) {
  auto p = polarized_from(in);
  std::size_t i = io::size_of(in, "i"), j = io::size_of(in, "j"), k = io::size_of(in, "k");
  auto u = canonical_rep(p, i, j, k);
  GlClass c = classify(p, u);
  return json{{"class", class_json(c)},
              {"U", io::to_json(u)},
              {"checks", {{"classify_matches", c.i == i && c.j == j && c.k == k}}}};
}

json witness_gl(const json& in) {
  auto p = polarized_from(in);
  auto u = gl_lagrangian(in, "U", p);
  auto u_prime = gl_lagrangian(in, "U_prime", p);
  QMat g = witness(p, u, u_prime);
  return json{{"class", class_json(classify(p, u))},
              {"g", io::to_json(g)},
              {"checks", {{"invertible", is_invertible(g)}, {"maps_U_to_U_prime", gl_action(p, g, u) == u_prime}}}};
}

json stab_dim_gl(const json& in) {
  auto p = polarized_from(in);
  QSubspace u;
  if (in.contains("U")) u = gl_lagrangian(in, "U", p);
  else u = canonical_rep(p, io::size_of(in, "i"), io::size_of(in, "j"), io::size_of(in, "k"));
  GlClass c = classify(p, u);
  std::size_t stab = stab_dim(p, u);
  std::size_t expected = expected_stab_dim(p.n, c.i, c.j, c.k);
  return json{{"class", class_json(c)},
              {"stab_dim", stab},
              {"expected_stab_dim", expected},
              {"orbit_dim", p.n * p.n - stab},
              {"checks", {{"stab_matches", stab == expected}}}};
}

json census_gl(const json& in, const RunOptions& options) {
  auto p = polarized_from(in);
  std::size_t samples = io::size_of(in, "samples", 100);
  if (samples > 100000) fail(ErrorCode::TooLarge, "samples are limited to 100000");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> hits;
  json classes = json::array();
  bool distinct = true;
  for (std::size_t i = 0; i <= p.n; ++i)
    for (std::size_t j = 0; i + j <= p.n; ++j)
      for (std::size_t k = 0; k <= p.n - i - j; ++k) {
        GlClass c = classify(p, canonical_rep(p, i, j, k));
        auto key = std::make_tuple(c.i, c.j, c.k);
        distinct = distinct && hits.count(key) == 0 && c.i == i && c.j == j && c.k == k;
        hits[key] = 0;
      }
  Rng rng(options.seed);
  bool known = true;
  for (std::size_t t = 0; t < samples; ++t) {
    QSubspace u = image(random_symplectic(p.v, rng, static_cast<std::size_t>(rng.uniform(0, 4))), p.w1);
    GlClass c = classify(p, u);
    auto it = hits.find(std::make_tuple(c.i, c.j, c.k));
    if (it == hits.end()) known = false;
    else ++it->second;
  }
  for (const auto& [key, count] : hits)
    classes.push_back(json{{"i", std::get<0>(key)}, {"j", std::get<1>(key)}, {"k", std::get<2>(key)}, {"samples", count}});
  return json{{"n", p.n},
              {"formula_count", orbit_census_formula(p.n)},
              {"canonical_count", hits.size()},
              {"classes", std::move(classes)},
              {"samples", samples},
              {"checks", {{"distinct", distinct}, {"count_matches", hits.size() == orbit_census_formula(p.n)},
                          {"samples_classified", known}}}};
}

json ff_census(const json& in, const RunOptions& options) {
  std::size_t m = io::size_of(in, "m"), n = io::size_of(in, "n"), p = io::size_of(in, "p");
  if (p > 65521) fail(ErrorCode::TooLarge, "p is too large for a census");
  if (!is_prime_u32(static_cast<std::uint32_t>(p))) fail(ErrorCode::Schema, "p must be prime");
  CensusReport r = orbit_census(m, n, static_cast<std::uint32_t>(p), options.threads);
  json orbits = json::array();
  for (const auto& o : r.orbits) orbits.push_back(json{{"size", o.size}, {"invariant_i", o.invariant_i}});
  return json{{"p", r.p},
              {"m", r.m},
              {"n", r.n},
              {"total_lagrangians", r.total_lagrangians},
              {"group_order", r.group_order},
              {"orbits", std::move(orbits)},
              {"agreement", r.agreement}};
}

json selftest(const RunOptions& options) {
  json criteria = json::array();
  bool all = true;
  for (const auto& r : acceptance::run_all(options.seed)) {
    all = all && r.pass;
    criteria.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  return json{{"all_passed", all}, {"criteria", std::move(criteria)}};
}

using Handler = std::function<json(const json&, const RunOptions&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"classify-spsp",
       [](const json& in, const RunOptions&) {
         FieldTag f = field_from(in);
         return f.is_rational() ? classify_spsp<Rational>(in, f) : classify_spsp<Zp>(in, f);
       }},
      {"canonical-spsp",
       [](const json& in, const RunOptions&) {
         FieldTag f = field_from(in);
         return f.is_rational() ? canonical_spsp<Rational>(in, f) : canonical_spsp<Zp>(in, f);
       }},
      {"witness-spsp",
       [](const json& in, const RunOptions&) {
         FieldTag f = field_from(in);
         return f.is_rational() ? witness_spsp<Rational>(in, f) : witness_spsp<Zp>(in, f);
       }},
      {"stab-dim-spsp",
       [](const json& in, const RunOptions&) {
         FieldTag f = field_from(in);
         return f.is_rational() ? stab_dim_spsp<Rational>(in, f) : stab_dim_spsp<Zp>(in, f);
       }},
      {"closure-curve", [](const json& in, const RunOptions&) { return closure_curve_cmd(in); }},
      {"classify-gl", [](const json& in, const RunOptions&) { return classify_gl(in); }},
      {"canonical-gl", [](const json& in, const RunOptions&) { return canonical_gl(in); }},
      {"witness-gl", [](const json& in, const RunOptions&) { return witness_gl(in); }},
      {"stab-dim-gl", [](const json& in, const RunOptions&) { return stab_dim_gl(in); }},
      {"census-gl", census_gl},
      {"ff-census", ff_census},
      {"selftest", [](const json&, const RunOptions& o) { return selftest(o); }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "classify-spsp", "canonical-spsp", "witness-spsp", "stab-dim-spsp", "closure-curve", "classify-gl",
      "canonical-gl",  "witness-gl",     "stab-dim-gl",  "census-gl",     "ff-census",     "selftest"};
  return names;
}

bool takes_input(const std::string& command) { return command != "ff-census" && command != "selftest"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Schema:
    case ErrorCode::Shape:
    case ErrorCode::DimensionMismatch:
      return kExitSchema;
    case ErrorCode::TooLarge:
      return kExitScale;
    case ErrorCode::Internal:
      return kExitInternal;
    default:
      return kExitMath;
  }
}

io::json error_json(ErrorCode code, const std::string& message) {
  return io::json{{"error", {{"code", std::string(to_string(code))}, {"message", message}}}};
}

RunResult run(const std::string& command, const io::json& input, const RunOptions& options) {
  auto it = handlers().find(command);
  if (it == handlers().end()) return {error_json(ErrorCode::Schema, "unknown command: " + command), kExitSchema};
  try {
    json out = it->second(input, options);
    int code = kExitOk;
    if (command == "selftest" && !out["all_passed"].get<bool>()) code = kExitFailed;
    return {std::move(out), code};
  } catch (const Error& e) {
    return {error_json(e.code(), e.what()), exit_code_for(e.code())};
  } catch (const nlohmann::json::exception& e) {
    return {error_json(ErrorCode::Schema, e.what()), kExitSchema};
  } catch (const std::exception& e) {
    return {error_json(ErrorCode::Internal, e.what()), kExitInternal};
  }
}

}  // namespace lagorb::cli
