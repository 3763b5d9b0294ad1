#pragma once

#include "gmlab/weights.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmlab {

struct BottOutcome {
  enum class Kind { AllZero, Single, Undecidable };
  Kind kind = Kind::AllZero;
  std::string rule;  // kempf, demazure-a, demazure-pair, alcove, beyond-alcove
  int degree = -1;
  Int dim = 0;
  Weight mu;  // dominant w.lambda for Single
  WeylElem w;
  long spread = 0;
};

auto line_cohomology(const Weight& lambda, std::uint32_t p) -> BottOutcome;

enum class BundleKind { Structure, Omega, Tangent };

struct BundleSpec {
  BundleKind kind = BundleKind::Structure;
  int i = 0;
  long m = 0;

  static auto structure(long m) -> BundleSpec { return {BundleKind::Structure, 0, m}; }
  static auto omega(int i, long m) -> BundleSpec;
  static auto tangent(long m) -> BundleSpec { return {BundleKind::Tangent, 0, m}; }
  // "omega2", "tangent", "structure" / "O"
  static auto parse(const std::string& name, long twist) -> BundleSpec;

  [[nodiscard]] auto name() const -> std::string;
  friend auto operator==(const BundleSpec&, const BundleSpec&) -> bool = default;
};

// Dual twisted by the canonical bundle O(-5).
auto serre_dual(const BundleSpec& b) -> BundleSpec;

// Weights of the graded pieces of the pulled-back bundle, with multiplicity.
// Entries are raw representatives in the layout of the printed tables.
auto bundle_weights(const BundleSpec& b) -> std::vector<Vec5>;

struct WeightTerm {
  Vec5 lambda;
  int multiplicity;
};
auto distinct_weights(const BundleSpec& b) -> std::vector<WeightTerm>;

auto euler_char(const BundleSpec& b) -> Int;

struct CohomEntry {
  enum class Kind { Zero, Exact, UpperBound };
  Kind kind = Kind::Zero;
  Int value = 0;
  [[nodiscard]] auto to_string() const -> std::string;
};

struct CohomTable {
  BundleSpec bundle;
  std::uint32_t p = 0;
  std::array<CohomEntry, 7> h;
  Int chi = 0;
  std::string method;  // direct | serre-dual | direct+serre-dual
  [[nodiscard]] auto fully_exact() const -> bool;
  [[nodiscard]] auto exact(int j) const -> std::optional<Int>;
};

class UndecidableWeights : public std::runtime_error {
 public:
  UndecidableWeights(const BundleSpec& b, std::vector<Weight> ws);
  std::vector<Weight> weights;
};

// Weight-by-weight evaluation only.
auto bundle_cohomology_direct(const BundleSpec& b, std::uint32_t p) -> CohomTable;
// Falls back to the Serre-dual bundle when some weight is out of reach and
// intersects both sides' bounds when neither is exact.
auto bundle_cohomology(const BundleSpec& b, std::uint32_t p) -> CohomTable;

enum class WListing { Auto, Always, ContributingOnly };

struct TableRow {
  Vec5 lambda;
  Vec5 lambda_rho;
  std::optional<WeylElem> w;
  Vec5 v;      // w(lambda + rho)
  Vec5 w_dot;  // v - rho
  int multiplicity = 1;
  BottOutcome outcome;
};

// One row per distinct weight, sorted lexicographically by lambda.
auto weight_table(const BundleSpec& b, std::uint32_t p, WListing listing = WListing::Auto) -> std::vector<TableRow>;

} // namespace gmlab
