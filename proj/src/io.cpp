// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#include "wgcalc/io.hpp"

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "wgcalc/error.hpp"

namespace wgcalc {

namespace {

std::size_t dimension_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1) {
    throw InvalidArgument(std::string("matrix file: '") + key + "' must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

Rational rational_entry(const Json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) return Rational(e.get<long>());
  throw InvalidArgument("matrix file: rational entries must be \"num/den\" strings or integers");
}

double real_entry(const Json& e) {
  if (!e.is_number()) throw InvalidArgument("matrix file: real entries must be numbers");
  const double v = e.get<double>();
  if (!std::isfinite(v)) throw InvalidArgument("matrix file: entries must be finite");
  return v;
}

std::complex<double> complex_entry(const Json& e) {
  if (!e.is_array() || e.size() != 2) throw InvalidArgument("matrix file: complex entries must be [re, im] pairs");
  return {real_entry(e[0]), real_entry(e[1])};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& v, const std::string& key, std::string& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, key.empty() ? k : key + "." + k, out);
    return;
  }
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto k = std::to_string(i);
      flatten(v[i], key.empty() ? k : key + "." + k, out);
    }
    return;
  }
  out += csv_field(key.empty() ? "value" : key);
  out += ',';
  out += csv_field(v.is_string() ? v.get<std::string>() : v.dump());
  out += '\n';
}

Json number(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

template <class F>
Json table(const F& f) {
  Json out = Json::object();
  const auto& parts = PartitionIndex::of(f.k()).partitions();
  for (std::size_t m = 0; m < parts.size(); ++m) out[parts[m].to_string()] = to_string(f[m]);
  return out;
}

}  // namespace

MatrixSpec parse_matrix_json(const Json& doc) {
  if (!doc.is_object()) throw InvalidArgument("matrix file: top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw InvalidArgument("matrix file: missing 'kind'");
  const auto kind = doc["kind"].get<std::string>();
  const auto rows = dimension_field(doc, "rows");
  const auto cols = dimension_field(doc, "cols");
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != rows) {
    throw InvalidArgument("matrix file: 'entries' must hold " + std::to_string(rows) + " rows");
  }
  const auto& entries = doc["entries"];
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) {
      throw InvalidArgument("matrix file: every row must hold " + std::to_string(cols) + " entries");
    }
  }
  if (kind == "rational") {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_entry(entries[r][c]);
    return MatrixSpec::from_rational(m);
  }
  Matrix<std::complex<double>> m(rows, cols);
  if (kind == "real") {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = real_entry(entries[r][c]);
  } else if (kind == "complex") {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_entry(entries[r][c]);
  } else {
    throw InvalidArgument("matrix file: unknown kind '" + kind + "'");
  }
  return MatrixSpec::from_complex(std::move(m));
}

MatrixSpec load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open matrix file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("matrix file '" + path + "': " + e.what());
  }
  return parse_matrix_json(doc);
}

namespace {

// Splits on `sep`, keeping empty fields ("1,2," has three).
std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

IndexSeq parse_index_list(std::string_view text) {
  if (text.find_first_not_of(" \t") == std::string_view::npos) throw InvalidArgument("empty index list");
  IndexSeq out;
  for (auto item : split(text, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidArgument("empty entry in index list '" + std::string(text) + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidArgument("bad index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::pair<IndexSeq, IndexSeq> parse_index_pairs(std::string_view text) {
  if (text.find_first_not_of(" \t") == std::string_view::npos) throw InvalidArgument("empty index pair list");
  std::pair<IndexSeq, IndexSeq> out;
  for (const auto& item : split(text, ';')) {
    const auto pair = parse_index_list(item);
    if (pair.size() != 2) throw InvalidArgument("index pair '" + item + "' must be 'row,col'");
    out.first.push_back(pair[0]);
    out.second.push_back(pair[1]);
  }
  return out;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(std::complex<double> z) { return Json::array({number(z.real()), number(z.imag())}); }

Json to_json(const ClassFunction& f) { return table(f); }

Json to_json(const BiinvariantFunction& f) { return table(f); }

Json to_json(const MomentFormula& f) {
  Json out = Json::object();
  out["order"] = f.order;
  out["basis"] = f.basis == TraceBasis::unitary ? "unitary-trace" : "orthogonal-trace";
  Json terms = Json::array();
  const auto& parts = PartitionIndex::of(f.order).partitions();
  for (std::size_t m = 0; m < parts.size(); ++m) {
    Json term = Json::object();
    term["partition"] = parts[m].parts();
    term["coeff"] = to_string(f.coefficients[m]);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const EstimatorResult& r) {
  Json out = Json::object();
  out["model"] = r.model;
  out["estimate"] = to_json(r.estimate);
  out["stderr"] = Json::array({number(r.stderr_re), number(r.stderr_im)});
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["chunk_size"] = r.chunk_size;
  out["resampled"] = r.resampled;
  out["exact"] = r.exact ? to_json(*r.exact) : Json(nullptr);
  out["z_score"] = r.z_score ? number(*r.z_score) : Json(nullptr);
  return out;
}

std::string to_csv(const Json& doc) {
  std::string out = "key,value\n";
  flatten(doc, "", out);
  return out;
}

}  // namespace wgcalc
