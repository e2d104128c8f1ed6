#pragma once

// Incremental double description for bounded systems containing the unit-cube
// bounds. Rays are homogeneous integer vectors (x0, x1..xn) with x0 > 0.

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tperfect/polytope.hpp"

namespace tperfect::detail {

struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("int64 overflow in double description") {}
};

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}
inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t negate(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticOverflow();
  return -a;
}

inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt negate(const BigInt& a) { return -a; }

template <class Int>
struct Ray {
  std::vector<Int> x;
  std::vector<std::uint64_t> tight;
};

inline bool subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

inline int popcount(const std::vector<std::uint64_t>& a) {
  int c = 0;
  for (auto w : a) c += std::popcount(w);
  return c;
}

template <class Int>
std::vector<Ray<Int>> double_description(const ConstraintSystem& system) {
  const int n = system.variables;
  const std::size_t rows = system.constraints.size();
  const std::size_t words = (rows + 63) / 64;
  auto set_bit = [](std::vector<std::uint64_t>& t, std::size_t k) { t[k >> 6] |= std::uint64_t{1} << (k & 63); };

  std::vector<std::size_t> lower(static_cast<std::size_t>(n), rows);
  std::vector<std::size_t> upper(static_cast<std::size_t>(n), rows);
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < rows; ++k) {
    const auto& c = system.constraints[k];
    if (c.kind == ConstraintKind::LowerBound) lower[static_cast<std::size_t>(c.support.at(0))] = k;
    else if (c.kind == ConstraintKind::UpperBound) upper[static_cast<std::size_t>(c.support.at(0))] = k;
    else others.push_back(k);
  }
  for (int v = 0; v < n; ++v)
    if (lower[static_cast<std::size_t>(v)] == rows || upper[static_cast<std::size_t>(v)] == rows)
      throw PreconditionError("double description needs both bounds on every variable");
  if (n > 24) throw PreconditionError("double description is limited to 24 variables");

  std::vector<Ray<Int>> rays;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Ray<Int> r{std::vector<Int>(static_cast<std::size_t>(n) + 1, Int(0)), std::vector<std::uint64_t>(words, 0)};
    r.x[0] = 1;
    for (int v = 0; v < n; ++v) {
      const bool one = (mask >> v) & 1U;
      r.x[static_cast<std::size_t>(v) + 1] = one ? 1 : 0;
      set_bit(r.tight, one ? upper[static_cast<std::size_t>(v)] : lower[static_cast<std::size_t>(v)]);
    }
    rays.push_back(std::move(r));
  }

  for (std::size_t k : others) {
    const auto& c = system.constraints[k];
    std::vector<Int> slack(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray<Int>> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      Int s = mul(Int(c.rhs), rays[i].x[0]);
      for (int v = 0; v < n; ++v)
        if (c.coefficients[static_cast<std::size_t>(v)] != 0)
          s = add(s, negate(mul(Int(c.coefficients[static_cast<std::size_t>(v)]), rays[i].x[static_cast<std::size_t>(v) + 1])));
      slack[i] = s;
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (slack[i] == 0) set_bit(rays[i].tight, k);
      continue;
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (slack[i] < 0) continue;
      if (slack[i] == 0) set_bit(rays[i].tight, k);
      next.push_back(rays[i]);
    }
    std::vector<std::uint64_t> common(words);
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].tight[w] & rays[q].tight[w];
        if (popcount(common) < n - 1) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && subset(common, rays[r].tight)) adjacent = false;
        if (!adjacent) continue;
        Ray<Int> nr{std::vector<Int>(static_cast<std::size_t>(n) + 1), common};
        const Int sp = slack[p];
        const Int sq = negate(slack[q]);
        Int g(0);
        for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
          nr.x[j] = add(mul(sp, rays[q].x[j]), mul(sq, rays[p].x[j]));
          g = gcd(g, nr.x[j]);
        }
        if (g > 1)
          for (auto& xj : nr.x) xj /= g;
        set_bit(nr.tight, k);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }
  return rays;
}

}  // namespace tperfect::detail
