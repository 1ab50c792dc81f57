#pragma once

#include <string>

#include <json.hpp>

#include "freefrac/als.hpp"
#include "freefrac/wordproblem.hpp"

namespace freefrac {

// Schema violation; `pointer` is the JSON pointer of the offending value.
class SchemaError : public UserError {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : UserError(pointer + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct AlsDocument {
  Alphabet alphabet;
  Als als;
};

nlohmann::json rational_json(const Rational& q);
nlohmann::json matrix_json(const RatMatrix& m);

// { "letters": [...], "n": n, "u": [...], "v": [...], "A": { "const": grid, "<letter>": grid } }
nlohmann::json als_to_json(const Als& f, const Alphabet& alphabet);
AlsDocument als_from_json(const nlohmann::json& doc);

std::string export_als(const Als& f, const Alphabet& alphabet);
AlsDocument import_als(const std::string& text);

// { "m": m, "values": { "<letter>": grid } }; every letter must be assigned.
nlohmann::json point_to_json(const MatrixPoint& pt, const Alphabet& alphabet);
MatrixPoint point_from_json(const nlohmann::json& doc, const Alphabet& alphabet);

// { "verdict": string, "witness": {...} | null }
nlohmann::json verdict_to_json(const EqualityVerdict& v, const Alphabet& alphabet);

}  // namespace freefrac
