// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#include "snideal/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace snideal {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

} // namespace

ojson cmatrix_to_json(const CMatrix& a) {
  ojson data = ojson::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      data.push_back({a(i, j).real(), a(i, j).imag()});
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

CMatrix cmatrix_from_json(const ojson& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    fail(where, "needs rows, cols, data");
  Eigen::Index rows = j["rows"].get<Eigen::Index>();
  Eigen::Index cols = j["cols"].get<Eigen::Index>();
  if (rows <= 0 || cols <= 0) fail(where, "rows and cols must be positive");
  const ojson& data = j["data"];
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
    fail(where + ".data", "expected " + std::to_string(rows * cols) + " [re, im] pairs");
  CMatrix a(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const ojson& cell = data[static_cast<std::size_t>(k)];
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
      fail(where + ".data[" + std::to_string(k) + "]", "expected [re, im]");
    a(k / cols, k % cols) = Complex(cell[0].get<double>(), cell[1].get<double>());
  }
  return a;
}

ojson tuple_to_json(const MatrixTuple& t) {
  ojson ms = ojson::array();
  for (const CMatrix& m : t.matrices) ms.push_back(cmatrix_to_json(m));
  return {{"m", t.m()}, {"n", t.n()}, {"matrices", ms}};
}

MatrixTuple tuple_from_json(const ojson& j, const std::string& where) {
  if (!j.is_object() || !j.contains("matrices"))
    fail(where, "expected an object with a matrices array");
  const ojson& ms = j["matrices"];
  if (!ms.is_array() || ms.empty()) fail(where + ".matrices", "expected a nonempty array");
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < ms.size(); ++i)
    out.push_back(cmatrix_from_json(ms[i], where + ".matrices[" + std::to_string(i) + "]"));
  MatrixTuple t(std::move(out));
  if (j.contains("m") && j["m"].get<std::size_t>() != t.m())
    fail(where, "declared m does not match the matrices array");
  if (j.contains("n") && j["n"].get<Eigen::Index>() != t.n())
    fail(where, "declared n does not match the matrix shapes");
  return t;
}

ojson spectrum_to_json(const Spectrum& s) { return ojson(s.values()); }

Spectrum spectrum_from_json(const ojson& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of nonnegative reals");
  std::vector<double> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) fail(where + "[" + std::to_string(i) + "]", "expected a number");
    v.push_back(j[i].get<double>());
  }
  return Spectrum(std::move(v));
}

ojson estimate_to_json(const NormEstimate& e, bool include_witnesses) {
  ojson j;
  j["value"] = e.value;
  j["exactness"] = to_string(e.exactness);
  j["method"] = e.method;
  j["iterations"] = e.iterations;
  j["restarts_used"] = e.restarts_used;
  if (!e.diagnostic.empty()) j["diagnostic"] = e.diagnostic;
  if (include_witnesses && e.witness_a.size() > 0 && e.witness_b.size() > 0) {
    j["witness_a"] = cmatrix_to_json(e.witness_a);
    j["witness_b"] = cmatrix_to_json(e.witness_b);
  }
  return j;
}

ojson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return ojson::parse(in);
  } catch (const ojson::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_atomic(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write: " + tmp);
    out << text;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename into place: " + path);
}

} // namespace snideal
