#include "posmap/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace posmap {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::BadFile, "invalid JSON");
  return j;
}

Complex entry_from_json(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw Error(Errc::BadFile, "matrix entries must be [re, im] pairs");
  const double re = e[0].get<double>(), im = e[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw Error(Errc::BadFile, "matrix entries must be finite");
  return {re, im};
}

void append_data(std::string& out, const Matrix& data) {
  out += "[";
  for (Index i = 0; i < data.rows(); ++i)
    for (Index j = 0; j < data.cols(); ++j) {
      if (i != 0 || j != 0) out += ",";
      out += "[" + format_double(data(i, j).real()) + "," + format_double(data(i, j).imag()) + "]";
    }
  out += "]";
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::BadFile, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::BadFile, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_json(const MatrixFile& f) {
  std::string out = "{\"m\":" + std::to_string(f.m) + ",\"n\":" + std::to_string(f.n) +
                    ",\"kind\":\"" + f.kind + "\",\"data\":";
  append_data(out, f.data);
  if (!f.metadata.empty()) {
    out += ",\"metadata\":{";
    bool first = true;
    for (const auto& [k, v] : f.metadata) {
      if (!first) out += ",";
      first = false;
      out += json(k).dump() + ":" + json(v).dump();
    }
    out += "}";
  }
  out += "}";
  return out;
}

MatrixFile matrix_file_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("kind") ||
      !j.contains("data"))
    throw Error(Errc::BadFile, "matrix file needs m, n, kind and data");

  MatrixFile f;
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    throw Error(Errc::BadFile, "m and n must be integers");
  f.m = j["m"].get<Index>();
  f.n = j["n"].get<Index>();
  if (f.m < 1 || f.n < 1) throw Error(Errc::BadFile, "m and n must be positive");
  f.kind = j["kind"].get<std::string>();
  if (f.kind != "state" && f.kind != "block" && f.kind != "map-choi")
    throw Error(Errc::BadFile, "kind must be state, block or map-choi");

  const Index d = f.m * f.n;
  const json& data = j["data"];
  if (!data.is_array() || static_cast<Index>(data.size()) != d * d)
    throw Error(Errc::BadFile, "data must hold (m n)^2 entries");
  f.data.resize(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index jj = 0; jj < d; ++jj) f.data(i, jj) = entry_from_json(data[i * d + jj]);

  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw Error(Errc::BadFile, "metadata must be an object");
    for (const auto& [k, v] : j["metadata"].items())
      f.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  return f;
}

void write_matrix_file(const std::string& path, const MatrixFile& f) {
  write_all(path, to_json(f) + "\n");
}

MatrixFile read_matrix_file(const std::string& path) {
  return matrix_file_from_json(read_all(path));
}

std::string vector_to_json(const Vector& x, Index m) {
  std::string out = "{\"m\":" + std::to_string(m) + ",\"kind\":\"vector\",\"data\":[";
  for (Index i = 0; i < x.size(); ++i) {
    if (i != 0) out += ",";
    out += "[" + format_double(x(i).real()) + "," + format_double(x(i).imag()) + "]";
  }
  out += "]}";
  return out;
}

Vector vector_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("data") ||
      j.value("kind", "") != "vector")
    throw Error(Errc::BadFile, "vector file needs m, kind=vector and data");
  const Index m = j["m"].get<Index>();
  const json& data = j["data"];
  if (!data.is_array() || static_cast<Index>(data.size()) != m * m)
    throw Error(Errc::BadFile, "vector data must hold m^2 entries");
  Vector x(m * m);
  for (Index i = 0; i < m * m; ++i) x(i) = entry_from_json(data[i]);
  return x;
}

void write_vector_file(const std::string& path, const Vector& x, Index m) {
  write_all(path, vector_to_json(x, m) + "\n");
}

Vector read_vector_file(const std::string& path) { return vector_from_json(read_all(path)); }

namespace {

const char kSweepHeader[] = "param,value,choi_min_eig,seesaw_min,cp,positive,ppt";

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw Error(Errc::BadFile, "bad number '" + s + "'");
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::BadFile, "bad number '" + s + "'");
  }
}

std::optional<bool> parse_opt_bool(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(Errc::BadFile, "bad boolean '" + s + "'");
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const SweepRow& r : rows) {
    out += r.param_name + "," + format_double(r.param_value) + "," + cell(r.choi_min_eig) + "," +
           cell(r.seesaw_min) + "," + cell(r.cp) + "," + cell(r.positive) + "," + cell(r.ppt) +
           "\n";
  }
  return out;
}

std::vector<SweepRow> sweep_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader)
    throw Error(Errc::BadFile, "missing or unexpected CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 7) throw Error(Errc::BadFile, "CSV row must have 7 fields");
    SweepRow r;
    r.param_name = f[0];
    r.param_value = parse_double(f[1]);
    if (!f[2].empty()) r.choi_min_eig = parse_double(f[2]);
    if (!f[3].empty()) r.seesaw_min = parse_double(f[3]);
    r.cp = parse_opt_bool(f[4]);
    r.positive = parse_opt_bool(f[5]);
    r.ppt = parse_opt_bool(f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace posmap
