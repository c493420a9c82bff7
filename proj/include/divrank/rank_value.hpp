// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIVRANK_RANK_VALUE_HPP
#define DIVRANK_RANK_VALUE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "divrank/rational.hpp"

namespace divrank {

/// A non-negative rank. Three carriers:
///   Exact    — an exact rational (explicit tables, simple models, linear rank)
///   LogCount — log2(n) carried as the integer n itself (relational rank);
///              comparisons go through products of counts, never floats
///   Approx   — a double compared with a tolerance (entropy, float tables)
class RankValue {
 public:
  enum class Kind { Exact, LogCount, Approx };

  static RankValue exact(Rational r) {
    if (r < Rational(0)) throw std::invalid_argument("negative rank");
    RankValue v;
    v.kind_ = Kind::Exact;
    v.exact_ = std::move(r);
    return v;
  }

  static RankValue log_count(Int n) {
    if (n < 1) throw std::invalid_argument("log-count rank needs count >= 1");
    RankValue v;
    v.kind_ = Kind::LogCount;
    v.count_ = std::move(n);
    return v;
  }

  static RankValue approx(double d) {
    if (d < 0 || !std::isfinite(d)) throw std::invalid_argument("bad approx rank");
    RankValue v;
    v.kind_ = Kind::Approx;
    v.approx_ = d;
    return v;
  }

  static RankValue zero_like(Kind k) {
    switch (k) {
      case Kind::Exact: return exact(Rational(0));
      case Kind::LogCount: return log_count(1);
      case Kind::Approx: return approx(0.0);
    }
    throw std::logic_error("bad kind");
  }

  Kind kind() const { return kind_; }
  const Rational& exact_value() const { return exact_; }
  const Int& count() const { return count_; }

  double to_double() const {
    switch (kind_) {
      case Kind::Exact: return divrank::to_double(exact_);
      case Kind::LogCount: return std::log2(count_.convert_to<double>());
      case Kind::Approx: return approx_;
    }
    throw std::logic_error("bad kind");
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Exact: return format_rational(exact_);
      case Kind::LogCount:
        return count_ == 1 ? "0" : "log2(" + count_.str() + ")";
      case Kind::Approx: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", approx_);
        return buf;
      }
    }
    throw std::logic_error("bad kind");
  }

  /// Compares a+b against c+d: -1, 0 or 1. Every rank comparison in the
  /// library (equality, additivity, SUBM) reduces to this form. Values of a
  /// single model share one kind; mixed kinds fall back to epsilon doubles.
  friend int cmp_sum(const RankValue& a, const RankValue& b, const RankValue& c,
                     const RankValue& d, double eps) {
    Kind k = a.kind_;
    if (b.kind_ == k && c.kind_ == k && d.kind_ == k) {
      if (k == Kind::Exact) {
        Rational lhs = a.exact_ + b.exact_;
        Rational rhs = c.exact_ + d.exact_;
        return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
      }
      if (k == Kind::LogCount) {
        Int lhs = a.count_ * b.count_;
        Int rhs = c.count_ * d.count_;
        return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
      }
    }
    double lhs = a.to_double() + b.to_double();
    double rhs = c.to_double() + d.to_double();
    if (std::fabs(lhs - rhs) <= eps) return 0;
    return lhs < rhs ? -1 : 1;
  }

  friend int cmp_rank(const RankValue& a, const RankValue& b, double eps) {
    return cmp_sum(a, zero_like(a.kind_), b, zero_like(b.kind_), eps);
  }

  friend bool rank_eq(const RankValue& a, const RankValue& b, double eps) {
    return cmp_rank(a, b, eps) == 0;
  }

  bool is_zero(double eps) const { return rank_eq(*this, zero_like(kind_), eps); }

 private:
  Kind kind_ = Kind::Exact;
  Rational exact_{0};
  Int count_{1};
  double approx_ = 0.0;
};

}  // namespace divrank

#endif  // DIVRANK_RANK_VALUE_HPP
