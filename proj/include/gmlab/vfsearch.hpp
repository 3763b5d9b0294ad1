#pragma once

#include "gmlab/exact/integer.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmlab::vf {

using Row = std::array<int, 5>;
using AVec = std::array<std::uint32_t, 5>;

struct EMatrix {
  std::vector<Row> rows;                 // 45 rows
  std::vector<std::vector<int>> monos;   // monomial indices behind each row
  std::vector<std::string> type;         // "11000", "21100", "11110"
  [[nodiscard]] auto hash() const -> std::string;
};

auto build_E() -> const EMatrix&;

struct PrimeFilter {
  std::uint32_t lo = 5;
  std::uint32_t hi = kNoBound;
  static constexpr std::uint32_t kNoBound = 0xffffffffU;
  [[nodiscard]] auto contains(std::uint32_t p) const -> bool { return p >= lo && p <= hi; }
  // "5", "11..200", "11.." or "" for all p >= 5
  static auto parse(const std::string& s) -> PrimeFilter;
  [[nodiscard]] auto to_string() const -> std::string;
};

struct SearchHit {
  std::uint32_t p = 0;
  AVec a{};                        // kernel of N mod p, first nonzero entry 1
  std::array<std::uint8_t, 5> N{}; // row indices into E
  long det = 0;
};

struct LemmaViolation {
  std::array<std::uint8_t, 5> N{};
  std::uint32_t p = 0;
  std::size_t rank = 0;
};

struct Enumeration {
  std::uint64_t subsets = 0;
  std::uint64_t nonsingular = 0;
  std::map<std::uint32_t, std::uint64_t> hits_per_prime;
  std::vector<SearchHit> hits;
  std::vector<LemmaViolation> violations;
  [[nodiscard]] auto raw_hits() const -> std::uint64_t { return hits.size(); }
};

// All C(45,5) subsets; deterministic for any job count.
auto enumerate_hits(const PrimeFilter& filter, unsigned jobs = 1) -> Enumeration;

// Monomials m with weight(m).a = 0 mod p.
auto monomial_set(std::uint32_t p, const AVec& a) -> std::vector<int>;
auto normalize(std::uint32_t p, AVec a) -> AVec;
// Lexicographic minimum over permutations and nonzero scalars.
auto canonical(std::uint32_t p, const AVec& a) -> AVec;
auto cond_singular_points(std::uint32_t p, const AVec& a) -> bool;  // every pair covered
auto cond_repeated_eigenvalue(const AVec& a) -> bool;

struct ClassKey {
  std::uint32_t p;
  AVec a;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct FamilyClass {
  std::uint32_t p = 0;
  AVec a{};                      // canonical
  std::vector<int> monomials;    // M_A for the canonical a
  std::uint64_t witnesses = 0;   // raw hits in the orbit
  std::vector<AVec> members;     // projective a seen in the orbit
};

// Distinct (p, projective a) before filters.
auto distinct_pairs(const std::vector<SearchHit>& hits) -> std::map<ClassKey, std::uint64_t>;
auto classes_before_filters(const std::vector<SearchHit>& hits) -> std::map<ClassKey, FamilyClass>;
auto filter_hits(const std::vector<SearchHit>& hits) -> std::vector<FamilyClass>;

// The five families in the printed coordinates.
struct KnownFamily {
  std::string id;                // "1".."4", "p7"
  std::uint32_t p;
  std::array<int, 5> diag;       // A = diag(...)
  std::vector<std::string> monomials;  // "14.24" keys, t_1 first
  [[nodiscard]] auto a() const -> AVec;
};
auto known_families() -> const std::vector<KnownFamily>&;
auto known_family(const std::string& id) -> const KnownFamily&;

// sigma with canonical(a) = c * (a o sigma), and sigma(M_A(printed)) = M_A(canonical).
auto match_family(const KnownFamily& f, const FamilyClass& cls) -> bool;

struct MinorWitness {
  std::array<int, 3> rows{};
  std::array<int, 3> cols{};
  std::string value;
};

struct SingularityCertificate {
  std::string family;
  std::uint32_t p = 0;
  std::vector<std::string> variables;
  std::string ring;       // description of the coefficient ring
  std::string quadric;
  std::vector<std::string> point;
  bool point_nonzero = false;
  bool on_grassmannian = false;
  bool on_quadric = false;
  std::size_t minors4_checked = 0;
  bool minors4_vanish = false;
  std::optional<MinorWitness> minor3;
  std::size_t numeric_samples = 0;
  std::size_t numeric_passed = 0;
  [[nodiscard]] auto passed() const -> bool;
};

class CertificateFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact identities, followed by a numeric re-check over F_{p^4}.
auto certify_family_singular(const KnownFamily& f, std::size_t samples = 100, std::uint64_t seed = 1)
    -> SingularityCertificate;

struct NilpotentCase {
  unsigned pattern;   // bits for the superdiagonal slots (1,2),(2,3),(3,4),(4,5)
  std::size_t kernel_q;
  std::size_t kernel_p;
};

struct NilpotentReport {
  std::uint32_t p;
  std::vector<NilpotentCase> cases;
  [[nodiscard]] auto passed() const -> bool;
};

auto verify_nilpotent_lift(std::uint32_t p) -> NilpotentReport;
// Superdiagonal slots in order, "1111" for the full Jordan block.
auto pattern_string(unsigned pattern) -> std::string;

auto avec_string(const AVec& a) -> std::string;

} // namespace gmlab::vf
