#pragma once

// JSON wire format. Scalars are strings ("-3/7", or a residue "2" over F_p);
// plain JSON integers are accepted on input. Matrices are
// {rows, cols, entries} in row-major order; subspaces are {ambient_dim, basis}
// where basis is a matrix whose columns span the subspace. On input a basis
// may also be given as an array of column vectors.

#include "json.hpp"

#include "lagorb/symplectic.hpp"

namespace lagorb::io {

using json = nlohmann::ordered_json;

template <class S>
S scalar_from_json(const json& j, const FieldTag& field);

template <class S>
json to_json(const Matrix<S>& m);

template <class S>
json to_json(const Subspace<S>& u);

template <class S>
json to_json(const SymplecticSpace<S>& v);

template <class S>
Matrix<S> matrix_from_json(const json& j, const FieldTag& field);

/// `expected_ambient` is checked when nonzero.
template <class S>
Subspace<S> subspace_from_json(const json& j, const FieldTag& field, std::size_t expected_ambient = 0);

template <class S>
SymplecticSpace<S> space_from_json(const json& j);

// Typed field access with schema errors.
const json& field_of(const json& obj, const char* key);
std::size_t size_of(const json& obj, const char* key);
std::size_t size_of(const json& obj, const char* key, std::size_t fallback);

}  // namespace lagorb::io
