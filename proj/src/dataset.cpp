#include "gmlab/cli/dataset.hpp"

namespace gmlab::cli {

namespace {

auto prime_power(std::uint64_t q) -> std::pair<std::uint32_t, unsigned> {
  if (q < 2) throw DatasetError("field order must be at least 2");
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  unsigned e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw DatasetError(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), e};
}

auto to_uint(const std::string& s) -> std::uint64_t {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw DatasetError("bad number '" + s + "'");
  return std::stoull(s);
}

} // namespace

auto RingDesc::parse(const std::string& s) -> RingDesc {
  RingDesc d;
  if (s == "Q" || s == "QQ") return d;
  if (s.size() > 1 && s[0] == 'F') {
    auto [p, e] = prime_power(to_uint(s.substr(1)));
    d.kind = Kind::Fq;
    d.p = p;
    d.k = e;
    return d;
  }
  if (s.rfind("Z/", 0) == 0) {
    auto [p, e] = prime_power(to_uint(s.substr(2)));
    d.kind = Kind::Zpk;
    d.p = p;
    d.k = e;
    return d;
  }
  throw DatasetError("unknown ring '" + s + "' (use Q, F<q> or Z/<p^k>)");
}

auto RingDesc::from_json(const json& j) -> RingDesc {
  if (!j.is_object() || !j.contains("kind")) throw DatasetError("ring needs a kind");
  auto kind = j["kind"].get<std::string>();
  RingDesc d;
  if (kind == "Q") return d;
  if (kind != "Fq" && kind != "Zpk") throw DatasetError("unknown ring kind '" + kind + "'");
  d.kind = kind == "Fq" ? Kind::Fq : Kind::Zpk;
  d.p = static_cast<std::uint32_t>(read_int_field(j, "p"));
  d.k = j.contains("k") ? static_cast<unsigned>(read_int_field(j, "k")) : 1;
  if (prime_power(d.p).second != 1) throw DatasetError("p must be prime");
  if (d.k < 1) throw DatasetError("k must be positive");
  return d;
}

auto RingDesc::to_json() const -> json {
  json j;
  j["kind"] = kind == Kind::Q ? "Q" : kind == Kind::Fq ? "Fq" : "Zpk";
  j["p"] = std::to_string(p);
  j["k"] = std::to_string(k);
  return j;
}

auto RingDesc::name() const -> std::string {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  switch (kind) {
    case Kind::Q: return "Q";
    case Kind::Fq: return "F" + std::to_string(q);
    case Kind::Zpk: break;
  }
  return "Z/" + std::to_string(q);
}

auto parse_elem(const Rationals&, const std::string& s) -> Rat {
  try {
    return parse_rat(s);
  } catch (const std::exception&) {
    throw DatasetError("bad rational '" + s + "'");
  }
}

auto parse_elem(const FiniteField& F, const std::string& s) -> Fq {
  if (F.degree() == 1) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used == s.size()) return F.from_int(v);
    } catch (const std::exception&) {
    }
    throw DatasetError("bad element '" + s + "' of " + F.name());
  }
  auto v = to_uint(s);
  if (v >= F.order()) throw DatasetError("element index " + s + " out of range for " + F.name());
  return F.element(static_cast<std::uint32_t>(v));
}

auto parse_elem(const IntegersMod& Z, const std::string& s) -> Zpk {
  try {
    return Z.from_int(Int(s));
  } catch (const std::exception&) {
    throw DatasetError("bad element '" + s + "' of " + Z.name());
  }
}

} // namespace gmlab::cli
