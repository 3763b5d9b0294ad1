#include "gmlab/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmlab {

auto vec_add(const Vec5& a, const Vec5& b) -> Vec5 {
  Vec5 r{};
  for (int i = 0; i < 5; ++i) r[i] = a[i] + b[i];
  return r;
}

auto vec_sub(const Vec5& a, const Vec5& b) -> Vec5 {
  Vec5 r{};
  for (int i = 0; i < 5; ++i) r[i] = a[i] - b[i];
  return r;
}

auto vec_scale(long c, const Vec5& a) -> Vec5 {
  Vec5 r{};
  for (int i = 0; i < 5; ++i) r[i] = c * a[i];
  return r;
}

auto vec_string(const Vec5& a) -> std::string {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 5; ++i) os << (i ? "," : "") << a[i];
  os << ']';
  return os.str();
}

Weight::Weight(const Vec5& raw) : a_(raw) {
  long m = *std::min_element(a_.begin(), a_.end());
  for (auto& x : a_) x -= m;
}

auto Weight::is_dominant() const -> bool {
  for (int i = 0; i < 4; ++i)
    if (a_[i] < a_[i + 1]) return false;
  return true;
}

auto Weight::is_zero() const -> bool {
  return std::all_of(a_.begin(), a_.end(), [](long x) { return x == 0; });
}

namespace {

auto inversions(const std::array<int, 5>& p) -> int {
  int n = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

} // namespace

WeylElem::WeylElem() { std::iota(p_.begin(), p_.end(), 0); }

WeylElem::WeylElem(const std::array<int, 5>& perm) : p_(perm), len_(inversions(perm)) {
  std::array<int, 5> s = perm;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < 5; ++i)
    if (s[i] != i) throw std::invalid_argument("not a permutation of 5 letters");
}

auto WeylElem::parse(const std::string& cycles) -> WeylElem {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  if (cycles.empty() || cycles == "id") return WeylElem(p);
  std::vector<int> cur;
  bool open = false;
  auto close = [&] {
    for (std::size_t k = 0; k < cur.size(); ++k) p[cur[k]] = cur[(k + 1) % cur.size()];
    cur.clear();
  };
  for (char c : cycles) {
    if (c == '(') {
      if (open) throw std::invalid_argument("nested cycle in " + cycles);
      open = true;
    } else if (c == ')') {
      if (!open) throw std::invalid_argument("unbalanced cycle in " + cycles);
      close();
      open = false;
    } else if (c >= '1' && c <= '5') {
      if (!open) throw std::invalid_argument("digit outside cycle in " + cycles);
      cur.push_back(c - '1');
    } else if (c != ' ') {
      throw std::invalid_argument("bad character in cycle notation: " + cycles);
    }
  }
  if (open) throw std::invalid_argument("unterminated cycle in " + cycles);
  return WeylElem(p);
}

auto WeylElem::inverse() const -> WeylElem {
  std::array<int, 5> q{};
  for (int i = 0; i < 5; ++i) q[p_[i]] = i;
  return WeylElem(q);
}

auto WeylElem::apply(const Vec5& v) const -> Vec5 {
  Vec5 r{};
  for (int i = 0; i < 5; ++i) r[p_[i]] = v[i];
  return r;
}

auto WeylElem::to_string() const -> std::string {
  std::string out;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (seen[i] || p_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += static_cast<char>('1' + j);
      first = false;
      j = p_[j];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

auto operator*(const WeylElem& x, const WeylElem& y) -> WeylElem {
  std::array<int, 5> r{};
  for (int i = 0; i < 5; ++i) r[i] = x.p_[y.p_[i]];
  return WeylElem(r);
}

auto pairing(const Vec5& lambda, int i, int j) -> long {
  if (i < 1 || j > 5 || i >= j) throw std::invalid_argument("pairing needs 1 <= i < j <= 5");
  return lambda[i - 1] - lambda[j - 1];
}

auto pairing(const Weight& lambda, int i, int j) -> long { return pairing(lambda.rep(), i, j); }

auto dot_act_raw(const WeylElem& w, const Vec5& lambda) -> Vec5 {
  return vec_sub(w.apply(vec_add(lambda, kRho)), kRho);
}

auto dot_act(const WeylElem& w, const Weight& lambda) -> Weight { return Weight(dot_act_raw(w, lambda.rep())); }

auto sorting_word(const Vec5& lambda) -> SortingWord {
  Vec5 s = vec_add(lambda, kRho);
  std::array<int, 5> idx{0, 1, 2, 3, 4};
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return s[a] > s[b]; });
  std::array<int, 5> perm{};
  for (int pos = 0; pos < 5; ++pos) perm[idx[pos]] = pos;
  WeylElem w(perm);
  return {w, w.apply(s)};
}

auto weyl_dim(const Weight& mu) -> Int {
  if (!mu.is_dominant()) throw std::invalid_argument("weyl_dim: weight " + mu.to_string() + " is not dominant");
  Vec5 m = vec_add(mu.rep(), kRho);
  Int num = 1, den = 1;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      num *= m[i] - m[j];
      den *= j - i;
    }
  return num / den;
}

} // namespace gmlab
