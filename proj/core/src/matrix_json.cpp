#include "liecurv/matrix_json.hpp"

#include <cmath>
#include <string>

#include "json.hpp"

namespace liecurv {

using nlohmann::json;

std::string to_json_string(const MatrixElement& m) {
  json entries = json::array();
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Scalar z = m(i, j);
      if (m.is_real()) {
        entries.push_back(z.real());
      } else {
        entries.push_back(json::array({z.real(), z.imag()}));
      }
    }
  }
  json doc = {{"n", n}, {"field", std::string(to_string(m.field()))}, {"entries", std::move(entries)}};
  return doc.dump();
}

namespace {

double as_number(const json& value, const char* what) {
  if (!value.is_number()) throw ParseError(std::string("matrix JSON: ") + what + " must be a number");
  return value.get<double>();
}

}  // namespace

MatrixElement parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix JSON: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("matrix JSON: missing integer \"n\"");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ParseError("matrix JSON: missing array \"entries\"");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > 4096) throw ParseError("matrix JSON: \"n\" out of range");

  Field field = Field::kReal;
  if (doc.contains("field")) {
    const json& f = doc["field"];
    if (f == "real") {
      field = Field::kReal;
    } else if (f == "complex") {
      field = Field::kComplex;
    } else {
      throw ParseError("matrix JSON: \"field\" must be \"real\" or \"complex\"");
    }
  }

  const json& entries = doc["entries"];
  if (static_cast<long long>(entries.size()) != n * n) {
    throw ParseError("matrix JSON: expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(entries.size()));
  }
  ComplexMatrix m(n, n);
  for (long long k = 0; k < n * n; ++k) {
    const json& e = entries[static_cast<std::size_t>(k)];
    Scalar z;
    if (e.is_array()) {
      if (field == Field::kReal) {
        if (e.size() != 1 && !(e.size() == 2 && as_number(e[1], "entry") == 0.0)) {
          throw ParseError("matrix JSON: real field entries must be plain numbers");
        }
        z = as_number(e[0], "entry");
      } else {
        if (e.size() != 2) throw ParseError("matrix JSON: complex entries must be [re, im]");
        z = Scalar(as_number(e[0], "entry"), as_number(e[1], "entry"));
      }
    } else {
      z = as_number(e, "entry");
    }
    m(k / n, k % n) = z;
  }
  return field == Field::kReal ? MatrixElement::from_real(m.real()) : MatrixElement::from_complex(m);
}

}  // namespace liecurv
