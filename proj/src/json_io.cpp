#include "freefrac/json_io.hpp"

namespace freefrac {

using nlohmann::json;

namespace {

std::string child(const std::string& ptr, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~')
      k += "~0";
    else if (c == '/')
      k += "~1";
    else
      k += c;
  }
  return ptr + "/" + k;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw SchemaError(ptr.empty() ? "(document)" : ptr, what);
}

const json& field(const json& obj, const std::string& ptr, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(child(ptr, key), "missing field");
  return *it;
}

Rational read_rational(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.dump(), 10);
  if (!j.is_string()) fail(ptr, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const UserError& e) {
    fail(ptr, e.what());
  }
}

RatVector read_vector(const json& j, const std::string& ptr, std::size_t n) {
  if (!j.is_array()) fail(ptr, "expected an array");
  if (j.size() != n) fail(ptr, "expected " + std::to_string(n) + " entries");
  RatVector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_rational(j[i], child(ptr, i)));
  return out;
}

RatMatrix read_matrix(const json& j, const std::string& ptr, std::size_t n) {
  if (!j.is_array()) fail(ptr, "expected an array of rows");
  if (j.size() != n) fail(ptr, "expected " + std::to_string(n) + " rows");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVector row = read_vector(j[i], child(ptr, i), n);
    for (std::size_t k = 0; k < n; ++k) m(i, k) = row[k];
  }
  return m;
}

std::size_t read_size(const json& j, const std::string& ptr) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(ptr, "expected a non-negative integer");
  return j.get<std::size_t>();
}

json vector_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

}  // namespace

json rational_json(const Rational& q) { return to_string(q); }

json matrix_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

json als_to_json(const Als& f, const Alphabet& alphabet) {
  if (alphabet.size() != f.letters()) throw ContractViolation("als_to_json: alphabet mismatch");
  json a = json::object();
  const std::size_t n = f.dim();
  a["const"] = matrix_json(n ? f.matrix().constant() : RatMatrix());
  for (std::size_t l = 0; l < f.letters(); ++l)
    a[alphabet.name(l)] = matrix_json(n ? f.matrix().letter(l) : RatMatrix());
  return json{{"letters", alphabet.letters()},
              {"n", n},
              {"u", vector_json(f.u())},
              {"v", vector_json(f.rhs())},
              {"A", std::move(a)}};
}

AlsDocument als_from_json(const json& doc) {
  if (!doc.is_object()) fail("", "expected an object");
  const json& letters = field(doc, "", "letters");
  if (!letters.is_array()) fail("/letters", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!letters[i].is_string()) fail(child("/letters", i), "expected a string");
    names.push_back(letters[i].get<std::string>());
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(names);
  } catch (const UserError& e) {
    fail("/letters", e.what());
  }
  const std::size_t n = read_size(field(doc, "", "n"), "/n");
  const RatVector u = read_vector(field(doc, "", "u"), "/u", n);
  if (n > 0 && u != unit_vector(n, 0)) fail("/u", "u must be e_1");
  RatVector v = read_vector(field(doc, "", "v"), "/v", n);

  const json& a = field(doc, "", "A");
  if (!a.is_object()) fail("/A", "expected an object of coefficient matrices");
  for (const auto& [key, value] : a.items())
    if (key != "const" && !alphabet.index_of(key)) fail(child("/A", key), "unknown letter");
  Pencil pencil(n, alphabet.size());
  pencil.constant() = read_matrix(field(a, "/A", "const"), "/A/const", n);
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    const std::string& name = alphabet.name(l);
    pencil.letter(l) = read_matrix(field(a, "/A", name), child("/A", name), n);
  }
  return {std::move(alphabet), Als(std::move(pencil), std::move(v))};
}

std::string export_als(const Als& f, const Alphabet& alphabet) {
  return als_to_json(f, alphabet).dump(2) + "\n";
}

AlsDocument import_als(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UserError(std::string("invalid JSON: ") + e.what());
  }
  return als_from_json(doc);
}

json point_to_json(const MatrixPoint& pt, const Alphabet& alphabet) {
  json values = json::object();
  for (std::size_t l = 0; l < pt.values.size(); ++l)
    values[alphabet.name(l)] = matrix_json(pt.values[l]);
  return json{{"m", pt.m}, {"values", std::move(values)}};
}

MatrixPoint point_from_json(const json& doc, const Alphabet& alphabet) {
  if (!doc.is_object()) fail("", "expected an object");
  MatrixPoint pt;
  pt.m = read_size(field(doc, "", "m"), "/m");
  if (pt.m == 0) fail("/m", "size must be positive");
  const json& values = field(doc, "", "values");
  if (!values.is_object()) fail("/values", "expected an object of matrices");
  for (const auto& [key, value] : values.items())
    if (!alphabet.index_of(key)) fail(child("/values", key), "unknown letter");
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    const std::string& name = alphabet.name(l);
    pt.values.push_back(read_matrix(field(values, "/values", name), child("/values", name), pt.m));
  }
  return pt;
}

json verdict_to_json(const EqualityVerdict& v, const Alphabet& alphabet) {
  json witness = nullptr;
  if (v.transformation)
    witness = json{{"T", matrix_json(v.transformation->first)},
                   {"U", matrix_json(v.transformation->second)}};
  else if (v.point)
    witness = json{{"point", point_to_json(*v.point, alphabet)}};
  return json{{"verdict", verdict_str(v.result)}, {"witness", std::move(witness)}};
}

}  // namespace freefrac
