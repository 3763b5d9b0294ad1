#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gmlab {

using Int = mpz_class;
using Rat = mpq_class;

auto make_rat(const Int& num, const Int& den) -> Rat;

auto to_string(const Int& x) -> std::string;
auto to_string(const Rat& x) -> std::string;
auto parse_int(std::string_view s) -> Int;
auto parse_rat(std::string_view s) -> Rat;

// Throws std::overflow_error when x does not fit.
auto to_i64(const Int& x) -> std::int64_t;

auto floor_div(const Int& a, const Int& b) -> Int;
auto floor_mod(const Int& a, const Int& b) -> Int;

// Polynomial binomial n(n-1)...(n-k+1)/k!, valid for negative n.
auto binomial(const Int& n, unsigned k) -> Int;

auto is_prime(std::uint64_t n) -> bool;

} // namespace gmlab
