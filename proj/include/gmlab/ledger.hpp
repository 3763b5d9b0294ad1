#pragma once

#include "gmlab/bott.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmlab {

enum class Variety { Gr, Y, X };
auto variety_dim(Variety v) -> int;
auto variety_name(Variety v) -> std::string;
auto parse_variety(const std::string& s) -> Variety;

enum class SheafKind { O, Omega, Tangent, RestrictedOmega, RestrictedTangent };

struct SheafRef {
  Variety var = Variety::Gr;
  SheafKind kind = SheafKind::O;
  int i = 0;
  long m = 0;

  static auto O(Variety v, long m) -> SheafRef { return {v, SheafKind::O, 0, m}; }
  // Omega^0 normalizes to O.
  static auto omega(Variety v, int i, long m) -> SheafRef;
  static auto tangent(Variety v, long m) -> SheafRef { return {v, SheafKind::Tangent, 0, m}; }
  // Omega^i_Gr(m) restricted to Y; i = 0 gives O_Y(m).
  static auto restricted_omega(int i, long m) -> SheafRef;
  static auto restricted_tangent(long m) -> SheafRef { return {Variety::Y, SheafKind::RestrictedTangent, 0, m}; }

  [[nodiscard]] auto name() const -> std::string;
  friend auto operator<=>(const SheafRef&, const SheafRef&) = default;
};

// Independent Euler characteristic: Weyl character formula on Gr, additivity
// along the defining sequences on Y and X.
auto chi(const SheafRef& s) -> Int;

// chi(O_X(m)) from the Koszul-type resolution on P^10.
auto chi_X_twist(long m) -> Int;

struct Dim {
  std::optional<Int> exact;
  std::optional<Int> upper;
  [[nodiscard]] auto known() const -> bool { return exact.has_value(); }
  [[nodiscard]] auto to_string() const -> std::string;
};

struct TraceEntry {
  std::string rule;   // bott, ses, serre, raynaud, chi, axiom
  std::string label;  // which sequence or citation
  SheafRef sheaf;
  int degree = 0;
  Dim value;
};

class ContradictionInLedger : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndecidableDependency : public std::runtime_error {
 public:
  UndecidableDependency(const std::string& what, std::vector<Weight> ws)
      : std::runtime_error(what), weights(std::move(ws)) {}
  std::vector<Weight> weights;
};

using Term = std::vector<SheafRef>;  // direct sum

class Ledger {
 public:
  explicit Ledger(std::uint32_t p);

  [[nodiscard]] auto p() const -> std::uint32_t { return p_; }
  [[nodiscard]] auto get(const SheafRef& s, int j) const -> Dim;
  [[nodiscard]] auto exact(const SheafRef& s, int j) const -> std::optional<Int> { return get(s, j).exact; }
  [[nodiscard]] auto trace() const -> const std::vector<TraceEntry>& { return trace_; }
  [[nodiscard]] auto undecidable() const -> const std::vector<Weight>& { return undecidable_; }

  void import_gr(const SheafRef& s);
  // 0 -> A -> B -> C -> 0, applied now and on every saturation pass.
  void add_ses(const std::string& label, const Term& a, const Term& b, const Term& c);
  void add_axiom(const SheafRef& s, int j, const Int& value, const std::string& label);
  // Serre duality, Raynaud vanishing and chi pinning over all known sheaves,
  // interleaved with the registered sequences until nothing changes.
  void saturate();

  // Registers the restriction and conormal sequences needed for Omega^i_Y(m).
  void derive_y_omega(int i, long m);

 private:
  struct Seq {
    std::string label;
    Term a, b, c;
  };
  auto set_exact(const SheafRef& s, int j, const Int& v, const std::string& rule, const std::string& label) -> bool;
  auto set_upper(const SheafRef& s, int j, const Int& v, const std::string& rule, const std::string& label) -> bool;
  auto apply_ses(const Seq& q) -> bool;
  auto apply_serre(const SheafRef& s) -> bool;
  auto apply_raynaud(const SheafRef& s) -> bool;
  auto apply_chi(const SheafRef& s) -> bool;
  auto touch(const SheafRef& s) -> std::array<Dim, 7>&;

  std::uint32_t p_;
  std::map<SheafRef, std::array<Dim, 7>> facts_;
  std::vector<Seq> seqs_;
  std::set<std::pair<int, long>> derived_y_;
  std::vector<TraceEntry> trace_;
  std::vector<Weight> undecidable_;
};

struct HodgeDiamond {
  int dim = 0;
  std::vector<std::vector<Int>> h;  // h[i][j] = h^j(Omega^i)

  [[nodiscard]] auto at(int i, int j) const -> const Int& { return h.at(i).at(j); }
  [[nodiscard]] auto serre_symmetric() const -> bool;
  [[nodiscard]] auto hodge_symmetric() const -> bool;
  [[nodiscard]] auto topological_euler() const -> Int;
  // Centered triangle, row k lists h^{i,k-i} with i decreasing.
  [[nodiscard]] auto layout() const -> std::string;
  friend auto operator==(const HodgeDiamond&, const HodgeDiamond&) -> bool = default;
};

struct Derivation {
  HodgeDiamond diamond;
  std::vector<TraceEntry> trace;
};

auto derive_diamond(Variety v, std::uint32_t p) -> Derivation;
auto topological_euler(Variety v, std::uint32_t p = 5) -> Int;

struct TangentReport {
  std::array<Int, 6> h_TY{};  // h^j(Y, T_Y)
  std::array<Int, 7> h_TX{};  // h^j(X, T_X)
  Int h0_OY1, h0_OY2, h33_00, h24;
  std::vector<std::string> axioms;
  std::vector<TraceEntry> trace;
};

auto tangent_report(std::uint32_t p) -> TangentReport;

} // namespace gmlab
