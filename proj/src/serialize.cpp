#include "chaingeo/serialize.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Schema, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(ErrorKind::Schema, std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(ErrorKind::Schema, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

void expect_kind(const Json& j, const char* kind) {
  if (j.contains("kind") && !(j.at("kind").is_string() && j.at("kind").get<std::string>() == kind))
    fail(ErrorKind::Schema, std::string("expected kind '") + kind + "'");
}

HermSpace space_from_json(const Json& j) {
  try {
    return {count_field(j, "m"), count_field(j, "n")};
  } catch (const GeometryError& e) {
    fail(ErrorKind::Schema, e.what());
  }
}

template <typename F>
auto rethrow_as_schema(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::Schema) throw;
    fail(ErrorKind::Schema, e.what());
  }
}

}  // namespace

Json to_json(const GaussianRational& z) {
  return {{"re", fraction_string(z.re())}, {"im", fraction_string(z.im())}};
}

Json to_json(const Matrix& a) {
  Json data = Json::array();
  for (const auto& x : a.data()) data.push_back(to_json(x));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

Json to_json(const Subspace& s) {
  return {{"m", s.space().m}, {"n", s.space().n}, {"basis", to_json(s.basis())}};
}

Json to_json(const ShilovPoint& x) {
  Json j = to_json(x.subspace());
  j["kind"] = "shilov-point";
  return j;
}

Json to_json(const MChain& t) {
  Json j = to_json(t.subspace());
  j["kind"] = "m-chain";
  if (t.has_frame()) j["frame"] = {to_json(t.frame().first), to_json(t.frame().second)};
  return j;
}

Json to_json(const HeisPoint& p) { return {{"X", to_json(p.X)}, {"Y", to_json(p.Y)}}; }

Json to_json(const WPoint& w) { return {{"A", to_json(w.A)}}; }

Json to_json(const USubspace& u) {
  Json out = Json::array();
  for (const Matrix& b : u.basis()) out.push_back(to_json(b));
  return out;
}

Json to_json(const Circle& c) {
  return {{"k", c.k}, {"witness", to_json(c.witness)}, {"marked", to_json(c.marked)}};
}

GaussianRational scalar_from_json(const Json& j) {
  return {parse_fraction(string_field(j, "re")), parse_fraction(string_field(j, "im"))};
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_field(j, "rows"), cols = count_field(j, "cols");
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != rows * cols) fail(ErrorKind::Schema, "matrix data has wrong length");
  std::vector<GaussianRational> entries;
  entries.reserve(data.size());
  for (const Json& x : data) entries.push_back(scalar_from_json(x));
  return {rows, cols, std::move(entries)};
}

Subspace subspace_from_json(const Json& j) {
  const HermSpace s = space_from_json(j);
  const Matrix b = matrix_from_json(field(j, "basis"));
  return rethrow_as_schema([&] { return Subspace(s, b); });
}

ShilovPoint point_from_json(const Json& j) {
  expect_kind(j, "shilov-point");
  const Subspace s = subspace_from_json(j);
  return rethrow_as_schema([&] { return ShilovPoint(s); });
}

MChain chain_from_json(const Json& j) {
  expect_kind(j, "m-chain");
  const Subspace v = subspace_from_json(j);
  if (j.contains("frame")) {
    const Json& f = j.at("frame");
    if (!f.is_array() || f.size() != 2) fail(ErrorKind::Schema, "frame must hold two points");
    const ShilovPoint x = point_from_json(f[0]), y = point_from_json(f[1]);
    return rethrow_as_schema([&] { return MChain(v, x, y); });
  }
  return rethrow_as_schema([&] { return MChain(v); });
}

HeisPoint heis_from_json(const Json& j) {
  HeisPoint p{matrix_from_json(field(j, "X")), matrix_from_json(field(j, "Y"))};
  if (!is_anti_hermitian(p.Y) || p.X.cols() != p.Y.rows()) fail(ErrorKind::Schema, "bad chart point");
  return p;
}

WPoint wpoint_from_json(const Json& j) { return {matrix_from_json(field(j, "A"))}; }

Circle circle_from_json(const Json& j) {
  return {count_field(j, "k"), chain_from_json(field(j, "witness")), heis_from_json(field(j, "marked"))};
}

}  // namespace chaingeo
