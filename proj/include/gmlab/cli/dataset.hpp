#pragma once

#include "gmlab/gmlag.hpp"
#include "gmlab/report.hpp"

#include <string>

namespace gmlab::cli {

using report::json;

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RingDesc {
  enum class Kind { Q, Fq, Zpk };
  Kind kind = Kind::Q;
  std::uint32_t p = 0;
  unsigned k = 1;  // extension degree for Fq, precision for Zpk

  // "Q", "F5", "F9", "Z/625"
  static auto parse(const std::string& s) -> RingDesc;
  static auto from_json(const json& j) -> RingDesc;
  [[nodiscard]] auto to_json() const -> json;
  [[nodiscard]] auto name() const -> std::string;
};

template <class F>
auto with_ring(const RingDesc& d, F&& f) {
  switch (d.kind) {
    case RingDesc::Kind::Q: return f(Rationals{});
    case RingDesc::Kind::Fq: return f(FiniteField::get(d.p, d.k));
    case RingDesc::Kind::Zpk: break;
  }
  return f(IntegersMod::get(d.p, d.k));
}

auto parse_elem(const Rationals& R, const std::string& s) -> Rat;
auto parse_elem(const FiniteField& F, const std::string& s) -> Fq;
auto parse_elem(const IntegersMod& Z, const std::string& s) -> Zpk;

template <class R>
auto matrix_to_json(const Matrix<typename R::value_type>& M) -> json {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(gm::elem_string(M(i, j)));
    rows.push_back(r);
  }
  return rows;
}

template <class R>
auto matrix_from_json(const R& ring, const json& j, std::size_t rows, std::size_t cols, const std::string& what)
    -> Matrix<typename R::value_type> {
  if (!j.is_array() || j.size() != rows) throw DatasetError(what + ": expected " + std::to_string(rows) + " rows");
  Matrix<typename R::value_type> M(rows, cols, ring.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw DatasetError(what + ": row " + std::to_string(i) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_string()) throw DatasetError(what + ": entries are strings");
      M(i, c) = parse_elem(ring, j[i][c].template get<std::string>());
    }
  }
  return M;
}

inline auto read_int_field(const json& j, const char* key) -> long long {
  if (!j.contains(key)) throw DatasetError(std::string("missing field ") + key);
  const auto& v = j.at(key);
  try {
    return v.is_string() ? std::stoll(v.get<std::string>()) : v.get<long long>();
  } catch (const std::exception&) {
    throw DatasetError(std::string("bad integer in field ") + key);
  }
}

template <class R>
auto lagrangian_to_json(const RingDesc& d, const gm::LagrangianDatum<R>& L) -> json {
  json j;
  j["schema"] = report::kSchema;
  j["ring"] = d.to_json();
  j["n"] = std::to_string(L.n);
  j["V5"] = matrix_to_json<R>(L.V5);
  j["epsilon"] = gm::elem_string(L.eps);
  j["A"] = matrix_to_json<R>(L.A);
  return j;
}

template <class R>
auto gm_to_json(const RingDesc& d, const gm::GMDatum<R>& D) -> json {
  json j;
  j["schema"] = report::kSchema;
  j["ring"] = d.to_json();
  j["n"] = std::to_string(D.n);
  j["V5"] = matrix_to_json<R>(D.V5);
  j["epsilon"] = gm::elem_string(D.eps);
  j["W"] = matrix_to_json<R>(D.W);
  json q = json::array();
  for (const auto& S : D.q) q.push_back(matrix_to_json<R>(S));
  j["q"] = q;
  return j;
}

template <class R>
auto lagrangian_from_json(const R& ring, const json& j) -> gm::LagrangianDatum<R> {
  gm::LagrangianDatum<R> L;
  L.n = static_cast<int>(read_int_field(j, "n"));
  if (L.n < 3 || L.n > 5) throw DatasetError("n must be 3, 4 or 5");
  L.V5 = matrix_from_json(ring, j.at("V5"), 6, 5, "V5");
  if (!j.contains("epsilon") || !j["epsilon"].is_string()) throw DatasetError("missing field epsilon");
  L.eps = parse_elem(ring, j["epsilon"].template get<std::string>());
  L.A = matrix_from_json(ring, j.at("A"), 20, 10, "A");
  return L;
}

template <class R>
auto gm_from_json(const R& ring, const json& j) -> gm::GMDatum<R> {
  gm::GMDatum<R> D;
  D.n = static_cast<int>(read_int_field(j, "n"));
  if (D.n < 3 || D.n > 5) throw DatasetError("n must be 3, 4 or 5");
  auto m = static_cast<std::size_t>(D.n + 5);
  D.V5 = matrix_from_json(ring, j.at("V5"), 6, 5, "V5");
  if (!j.contains("epsilon") || !j["epsilon"].is_string()) throw DatasetError("missing field epsilon");
  D.eps = parse_elem(ring, j["epsilon"].template get<std::string>());
  D.W = matrix_from_json(ring, j.at("W"), 10, m, "W");
  const auto& q = j.at("q");
  if (!q.is_array() || q.size() != 6) throw DatasetError("q needs 6 matrices");
  for (std::size_t i = 0; i < 6; ++i) D.q[i] = matrix_from_json(ring, q[i], m, m, "q[" + std::to_string(i) + "]");
  return D;
}

} // namespace gmlab::cli
