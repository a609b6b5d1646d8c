#include "zhou/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "zhou/error.hpp"

namespace zhou::io {

namespace {

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T to_int(std::string_view tok, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(std::string("invalid ") + what + " '" + std::string(tok) + "'");
  return value;
}

void check_modulus(u64 n) {
  if (n < 2) throw UnsupportedModulus(n, 0);
}

MatZ from_json_rows(u64 n, const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("'rows' must be a non-empty array");
  std::vector<std::vector<std::int64_t>> v;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    auto& out = v.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError("matrix entries must be integers");
      out.push_back(x.get<std::int64_t>());
    }
  }
  try {
    return MatZ::from_rows(n, v);
  } catch (const ShapeMismatch& e) {
    throw ParseError(std::string("matrix is not square: ") + e.what());
  }
}

MatZ matrix_field(const nlohmann::json& j, const char* key, u64 n) {
  if (!j.contains(key)) throw ParseError(std::string("certificate lacks '") + key + "'");
  return from_json_rows(n, j.at(key));
}

}  // namespace

MatZ parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_matrix_json(text);
  return parse_matrix_text(text);
}

MatZ parse_matrix_text(std::string_view text) {
  const auto toks = tokens(text);
  if (toks.size() < 2) throw ParseError("expected header 'n d'");
  const u64 n = to_int<u64>(toks[0], "modulus");
  const u64 d = to_int<u64>(toks[1], "dimension");
  check_modulus(n);
  if (d == 0) throw ParseError("dimension must be at least 1");
  if (d > 100'000 || toks.size() - 2 != d * d)
    throw ParseError("expected " + std::to_string(d * d) + " entries, found " + std::to_string(toks.size() - 2));
  MatZ out(n, d);
  for (u64 i = 0; i < d * d; ++i) out.data()[i] = reduce_signed(to_int<std::int64_t>(toks[2 + i], "entry"), n);
  return out;
}

MatZ parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("modulus") || !j.contains("rows"))
    throw ParseError("JSON input needs 'modulus' and 'rows'");
  if (!j["modulus"].is_number_unsigned()) throw ParseError("'modulus' must be a positive integer");
  const u64 n = j["modulus"].get<u64>();
  check_modulus(n);
  return from_json_rows(n, j["rows"]);
}

std::string format_matrix_text(const MatZ& a) {
  std::ostringstream os;
  os << a.modulus() << ' ' << a.dim() << '\n';
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) os << (c ? " " : "") << a(r, c);
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json matrix_json(const MatZ& a) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : a.rows()) out.push_back(row);
  return out;
}

nlohmann::ordered_json certificate_json(const Decomposition& d, bool verified) {
  nlohmann::ordered_json j;
  j["modulus"] = d.modulus;
  j["dim"] = d.t1.dim();
  j["t1"] = matrix_json(d.t1);
  j["t2"] = matrix_json(d.t2);
  j["nil"] = matrix_json(d.nil);
  j["nil_index_bound"] = d.nil_index_bound;
  j["verified"] = verified;
  return j;
}

std::string certificate_text(const Decomposition& d, bool verified) {
  std::size_t width = 1;
  for (const MatZ* m : {&d.t1, &d.t2, &d.nil})
    for (u64 x : m->data()) width = std::max(width, std::to_string(x).size());

  std::ostringstream os;
  os << "modulus          " << d.modulus << '\n'
     << "dim              " << d.t1.dim() << '\n'
     << "nil_index_bound  " << d.nil_index_bound << '\n'
     << "verified         " << (verified ? "true" : "false") << '\n';
  auto block = [&](const char* name, const MatZ& m) {
    os << name << ":\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
      os << ' ';
      for (std::size_t c = 0; c < m.dim(); ++c) {
        const std::string s = std::to_string(m(r, c));
        os << ' ' << std::string(width - s.size(), ' ') << s;
      }
      os << '\n';
    }
  };
  block("t1", d.t1);
  block("t2", d.t2);
  block("nil", d.nil);
  return os.str();
}

Decomposition parse_certificate(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  for (const char* key : {"modulus", "dim", "nil_index_bound"})
    if (!j.contains(key) || !j[key].is_number_unsigned())
      throw ParseError(std::string("certificate field '") + key + "' missing or not an unsigned integer");
  const u64 n = j["modulus"].get<u64>();
  check_modulus(n);
  Decomposition d{matrix_field(j, "t1", n), matrix_field(j, "t2", n), matrix_field(j, "nil", n), n,
                  j["nil_index_bound"].get<u64>()};
  const u64 dim = j["dim"].get<u64>();
  if (d.t1.dim() != dim || d.t2.dim() != dim || d.nil.dim() != dim)
    throw ParseError("certificate matrices disagree with 'dim'");
  return d;
}

}  // namespace zhou::io
