#pragma once

#include "gmlab/exact/integer.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmlab::ck {

enum class GMVariety { GM4, GM6 };
auto variety_dim(GMVariety v) -> int;
auto variety_name(GMVariety v) -> std::string;
auto parse_variety(const std::string& s) -> GMVariety;

// H^a e2^b
struct Mono {
  int a = 0, b = 0;
  [[nodiscard]] auto codim() const -> int { return a + 2 * b; }
  auto operator<=>(const Mono&) const = default;
};
auto mono_string(Mono m) -> std::string;

class WrongCodimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class IdentityViolation : public std::runtime_error {
 public:
  explicit IdentityViolation(std::string which) : std::runtime_error("identity violated: " + which), which(std::move(which)) {}
  std::string which;
};

class TautClass {
 public:
  TautClass() = default;
  explicit TautClass(GMVariety v) : v_(v) {}
  static auto monomial(GMVariety v, Mono m, Rat c = 1) -> TautClass;
  static auto fundamental(GMVariety v) -> TautClass { return monomial(v, {0, 0}); }
  static auto H(GMVariety v, int a = 1) -> TautClass { return monomial(v, {a, 0}); }
  static auto e2(GMVariety v, int b = 1) -> TautClass { return monomial(v, {0, b}); }
  static auto pt(GMVariety v) -> TautClass;

  [[nodiscard]] auto variety() const -> GMVariety { return v_; }
  [[nodiscard]] auto terms() const -> const std::map<Mono, Rat>& { return t_; }
  [[nodiscard]] auto is_zero() const -> bool { return t_.empty(); }
  // Codimension of a homogeneous class; -1 for zero, throws if mixed.
  [[nodiscard]] auto codim() const -> int;
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator+(const TautClass& x, const TautClass& y) -> TautClass;
  friend auto operator-(const TautClass& x, const TautClass& y) -> TautClass;
  friend auto operator*(const Rat& c, const TautClass& x) -> TautClass;
  // Intersection product; terms beyond the dimension vanish.
  friend auto operator*(const TautClass& x, const TautClass& y) -> TautClass;
  friend auto operator==(const TautClass& x, const TautClass& y) -> bool { return x.v_ == y.v_ && x.t_ == y.t_; }

 private:
  void add(Mono m, const Rat& c);
  GMVariety v_ = GMVariety::GM4;
  std::map<Mono, Rat> t_;
};

// Formal sum of products alpha x beta plus delta * Diagonal.
class Correspondence {
 public:
  Correspondence() = default;
  explicit Correspondence(GMVariety v) : v_(v) {}
  static auto product(const TautClass& alpha, const TautClass& beta) -> Correspondence;
  static auto diagonal(GMVariety v, Rat c = 1) -> Correspondence;

  [[nodiscard]] auto variety() const -> GMVariety { return v_; }
  [[nodiscard]] auto delta() const -> const Rat& { return delta_; }
  [[nodiscard]] auto terms() const -> const std::map<std::pair<Mono, Mono>, Rat>& { return t_; }
  [[nodiscard]] auto is_zero() const -> bool { return delta_ == 0 && t_.empty(); }
  [[nodiscard]] auto transpose() const -> Correspondence;
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator+(const Correspondence& x, const Correspondence& y) -> Correspondence;
  friend auto operator-(const Correspondence& x, const Correspondence& y) -> Correspondence;
  friend auto operator*(const Rat& c, const Correspondence& x) -> Correspondence;
  friend auto operator==(const Correspondence& x, const Correspondence& y) -> bool {
    return x.v_ == y.v_ && x.delta_ == y.delta_ && x.t_ == y.t_;
  }

  void add_term(Mono a, Mono b, const Rat& c);

 private:
  GMVariety v_ = GMVariety::GM4;
  Rat delta_ = 0;
  std::map<std::pair<Mono, Mono>, Rat> t_;
};

// Degrees of top-codimension monomials.
struct Degrees {
  std::map<Mono, Rat> top;
  static auto standard(GMVariety v) -> Degrees;
};

class TautAlgebra {
 public:
  explicit TautAlgebra(GMVariety v) : v_(v), deg_(Degrees::standard(v)) {}
  TautAlgebra(GMVariety v, Degrees d) : v_(v), deg_(std::move(d)) {}

  [[nodiscard]] auto variety() const -> GMVariety { return v_; }
  [[nodiscard]] auto degrees() const -> const Degrees& { return deg_; }
  // Requires a class of top codimension (zero is allowed).
  [[nodiscard]] auto taut_degree(const TautClass& x) const -> Rat;
  // Degree of the top-codimension part of x*y; lower parts contribute 0.
  [[nodiscard]] auto pairing(const TautClass& x, const TautClass& y) const -> Rat;
  // g o f: apply f first. (a x b) o (c x d) = deg(d.a) (c x b).
  [[nodiscard]] auto compose(const Correspondence& g, const Correspondence& f) const -> Correspondence;
  // (a x b) sends x to deg(x.a) b; the diagonal acts as identity.
  [[nodiscard]] auto act(const Correspondence& c, const TautClass& x) const -> TautClass;
  // Equal degree pairings against every monomial of complementary codimension.
  [[nodiscard]] auto numerically_equal(const TautClass& x, const TautClass& y) const -> bool;
  // All monomials H^a e2^b with codim <= dim.
  [[nodiscard]] auto monomials() const -> std::vector<Mono>;

 private:
  GMVariety v_;
  Degrees deg_;
};

struct Projector {
  int index = 0;  // i in pi^i
  Correspondence pi;
};
auto projectors(GMVariety v) -> std::vector<Projector>;

// f1 = H^4/2 - H^2 e2, f2 = -H^4 + 5/2 H^2 e2 on GM6.
auto f1() -> TautClass;
auto f2() -> TautClass;

struct CkCheck {
  std::string name;
  bool ok = false;
};
struct CkReport {
  GMVariety variety = GMVariety::GM4;
  std::vector<CkCheck> checks;
  [[nodiscard]] auto passed() const -> bool;
  [[nodiscard]] auto failures() const -> std::vector<std::string>;
};
auto verify_chow_kunneth(const TautAlgebra& alg) -> CkReport;
// Throws IdentityViolation naming the first failed check.
void require_chow_kunneth(const TautAlgebra& alg);

// Unique (deg H^4 e2, deg H^2 e2^2) making int e_i f_j = delta_ij, given deg H^6.
auto solve_delta_system(const Rat& deg_h6) -> std::optional<std::pair<Rat, Rat>>;

} // namespace gmlab::ck
