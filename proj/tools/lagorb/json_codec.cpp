#include "json_codec.hpp"

#include <string>

namespace lagorb::io {
namespace {

[[noreturn]] void schema(const std::string& message) { fail(ErrorCode::Schema, message); }

}  // namespace

const json& field_of(const json& obj, const char* key) {
  if (!obj.is_object()) schema("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_of(const json& obj, const char* key) {
  const json& v = field_of(obj, key);
  if (!v.is_number_unsigned()) schema(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::size_t size_of(const json& obj, const char* key, std::size_t fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return size_of(obj, key);
}

template <class S>
S scalar_from_json(const json& j, const FieldTag& field) {
  if (j.is_string()) return scalar_traits<S>::parse(j.get<std::string>(), field);
  if (j.is_number_integer()) return scalar_traits<S>::parse(std::to_string(j.get<std::int64_t>()), field);
  schema("scalars must be strings or integers");
}

template <class S>
json to_json(const Matrix<S>& m) {
  json entries = json::array();
  for (const S& x : m.entries()) entries.push_back(scalar_traits<S>::to_string(x));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template <class S>
json to_json(const Subspace<S>& u) {
  return json{{"ambient_dim", u.ambient_dim()}, {"dim", u.dim()}, {"basis", to_json(u.basis())}};
}

template <class S>
json to_json(const SymplecticSpace<S>& v) {
  return json{{"field", v.field().name()}, {"dim", v.dim()}, {"gram", to_json(v.gram())}};
}

template <class S>
Matrix<S> matrix_from_json(const json& j, const FieldTag& field) {
  if (!j.is_object()) schema("matrix must be an object {rows, cols, entries}");
  std::size_t rows = size_of(j, "rows"), cols = size_of(j, "cols");
  const json& entries = field_of(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) schema("matrix entries must be an array of rows*cols scalars");
  Matrix<S> m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m(k / cols, k % cols) = scalar_from_json<S>(entries[k], field);
  return m;
}

template <class S>
Subspace<S> subspace_from_json(const json& j, const FieldTag& field, std::size_t expected_ambient) {
  if (!j.is_object()) schema("subspace must be an object with a basis");
  const json& basis = field_of(j, "basis");
  Matrix<S> m;
  if (basis.is_array()) {
    // Array of column vectors; an empty array needs ambient_dim.
    std::size_t rows = basis.empty() ? size_of(j, "ambient_dim", expected_ambient) : 0;
    for (const json& col : basis) {
      if (!col.is_array()) schema("basis columns must be arrays of scalars");
      if (rows == 0) rows = col.size();
      if (col.size() != rows) schema("basis columns have different lengths");
    }
    m = Matrix<S>(field, rows, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = scalar_from_json<S>(basis[c][r], field);
  } else {
    m = matrix_from_json<S>(basis, field);
  }
  if (j.contains("ambient_dim") && size_of(j, "ambient_dim") != m.rows()) schema("ambient_dim does not match the basis");
  if (expected_ambient != 0 && m.rows() != expected_ambient)
    fail(ErrorCode::DimensionMismatch,
         "subspace lives in dimension " + std::to_string(m.rows()) + ", expected " + std::to_string(expected_ambient));
  return Subspace<S>::span(m);
}

template <class S>
SymplecticSpace<S> space_from_json(const json& j) {
  const json& name = field_of(j, "field");
  if (!name.is_string()) schema("field must be a string");
  FieldTag field = FieldTag::parse(name.get<std::string>());
  Matrix<S> gram = matrix_from_json<S>(field_of(j, "gram"), field);
  if (j.contains("dim") && size_of(j, "dim") != gram.rows()) schema("dim does not match the gram matrix");
  return SymplecticSpace<S>(std::move(gram));
}

#define LAGORB_INSTANTIATE(S)                                                                 \
  template S scalar_from_json<S>(const json&, const FieldTag&);                               \
  template json to_json<S>(const Matrix<S>&);                                                 \
  template json to_json<S>(const Subspace<S>&);                                               \
  template json to_json<S>(const SymplecticSpace<S>&);                                        \
  template Matrix<S> matrix_from_json<S>(const json&, const FieldTag&);                       \
  template Subspace<S> subspace_from_json<S>(const json&, const FieldTag&, std::size_t);      \
  template SymplecticSpace<S> space_from_json<S>(const json&);

LAGORB_INSTANTIATE(Rational)
LAGORB_INSTANTIATE(Zp)

#undef LAGORB_INSTANTIATE

}  // namespace lagorb::io
