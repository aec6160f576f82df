#pragma once

/// JSON file format for hypermatrices:
///   {"dim": n, "entries": [[re, im], ...]}
/// with n^3 pairs in canonical order (first index slowest). Doubles are
/// written in shortest round-trip form, so read(write(T)) == T bit for bit.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ternalg/hypermatrix.hpp"

namespace ternalg::codec {

class ParseError : public InputError {
public:
  using InputError::InputError;
};

inline nlohmann::json to_json(const Hypermatrix& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : t.entries()) entries.push_back({e.real(), e.imag()});
  return {{"dim", t.dim()}, {"entries", std::move(entries)}};
}

inline Hypermatrix from_json(const nlohmann::json& j, const std::string& origin = "<json>") {
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(origin + ": " + what);
  };
  if (!j.is_object()) throw fail("top level must be an object");
  if (!j.contains("dim")) throw fail("missing field \"dim\"");
  if (!j.contains("entries")) throw fail("missing field \"entries\"");
  const auto& jd = j.at("dim");
  if (!jd.is_number_integer() || jd.get<long long>() <= 0)
    throw fail("field \"dim\" must be a positive integer");
  const auto dim = static_cast<std::size_t>(jd.get<long long>());
  const auto& je = j.at("entries");
  if (!je.is_array()) throw fail("field \"entries\" must be an array");
  const std::size_t want = dim * dim * dim;
  if (je.size() != want)
    throw fail("field \"entries\": expected " + std::to_string(want) + " entries for dim " +
               std::to_string(dim) + ", got " + std::to_string(je.size()));
  std::vector<Complex> values;
  values.reserve(want);
  for (std::size_t i = 0; i < want; ++i) {
    const auto& pair = je[i];
    const std::string where = "field \"entries\"[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw fail(where + " must be a [re, im] pair of numbers");
    const Complex z{pair[0].get<double>(), pair[1].get<double>()};
    if (!is_finite(z)) throw fail(where + " is not finite");
    values.push_back(z);
  }
  return Hypermatrix(dim, std::move(values));
}

/// One entry pair per line; number formatting is nlohmann's round-trip form.
inline std::string dump(const Hypermatrix& t) {
  std::string out = "{\n  \"dim\": " + std::to_string(t.dim()) + ",\n  \"entries\": [";
  const auto e = t.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    out += nlohmann::json::array({e[i].real(), e[i].imag()}).dump();
  }
  out += "\n  ]\n}\n";
  return out;
}

inline Hypermatrix parse(const std::string& text, const std::string& origin = "<string>") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // The library message carries "at line L, column C".
    throw ParseError(origin + ": " + e.what());
  }
  return from_json(j, origin);
}

inline Hypermatrix read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

inline void write(const std::filesystem::path& path, const Hypermatrix& t) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot open file for writing");
  out << dump(t);
  if (!out) throw InputError(path.string() + ": write failed");
}

} // namespace ternalg::codec
