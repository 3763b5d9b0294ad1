#include "gmlab/pluecker.hpp"

namespace gmlab::pl {

namespace {

struct Tables {
  std::array<std::pair<int, int>, kPairs> pairs{};
  std::array<std::array<int, 6>, 6> pidx{};
  std::array<std::pair<int, int>, kMonos> monos{};
  std::array<std::array<int, kPairs>, kPairs> midx{};
  Tables() {
    int n = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        pairs[n] = {i, j};
        pidx[i][j] = pidx[j][i] = n;
        ++n;
      }
    n = 0;
    for (int a = 0; a < kPairs; ++a)
      for (int b = a; b < kPairs; ++b) {
        monos[n] = {a, b};
        midx[a][b] = midx[b][a] = n;
        ++n;
      }
  }
};

auto tables() -> const Tables& {
  static const Tables t;
  return t;
}

} // namespace

auto pair_at(int idx) -> std::pair<int, int> { return tables().pairs.at(idx); }

auto pair_index(int i, int j) -> int {
  if (i == j || i < 1 || j < 1 || i > 5 || j > 5) throw std::invalid_argument("pair_index needs distinct i, j in 1..5");
  return tables().pidx[i][j];
}

auto pair_name(int idx) -> std::string {
  auto [i, j] = pair_at(idx);
  return "x" + std::to_string(i) + std::to_string(j);
}

auto mono_at(int idx) -> std::pair<int, int> { return tables().monos.at(idx); }

auto mono_index(int a, int b) -> int { return tables().midx.at(a).at(b); }

auto mono_name(int idx) -> std::string {
  auto [a, b] = mono_at(idx);
  return a == b ? pair_name(a) + "^2" : pair_name(a) + "*" + pair_name(b);
}

auto mono_key(int idx) -> std::string {
  auto [a, b] = mono_at(idx);
  return pair_name(a).substr(1) + "." + pair_name(b).substr(1);
}

auto mono_from_key(const std::string& key) -> int {
  if (key.size() != 5 || key[2] != '.') throw std::invalid_argument("bad monomial key '" + key + "'");
  int a = pair_index(key[0] - '0', key[1] - '0');
  int b = pair_index(key[3] - '0', key[4] - '0');
  return mono_index(std::min(a, b), std::max(a, b));
}

auto mono_weight(int idx) -> std::array<int, 5> {
  auto [a, b] = mono_at(idx);
  std::array<int, 5> w{};
  for (int p : {a, b}) {
    auto [i, j] = pair_at(p);
    ++w[i - 1];
    ++w[j - 1];
  }
  return w;
}

auto quadric_terms(int k) -> std::array<SignedMono, 3> {
  if (k < 1 || k > 5) throw std::invalid_argument("Pluecker quadric index must be 1..5");
  std::array<int, 4> c{};
  int n = 0;
  for (int i = 1; i <= 5; ++i)
    if (i != k) c[n++] = i;
  auto m = [](int i, int j, int l, int r) {
    int a = pair_index(i, j), b = pair_index(l, r);
    return mono_index(std::min(a, b), std::max(a, b));
  };
  auto [a, b, cc, d] = c;
  return {{{m(a, b, cc, d), 1}, {m(a, cc, b, d), -1}, {m(a, d, b, cc), 1}}};
}

} // namespace gmlab::pl
