// Copyright 2026 The realtypes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "realtypes/exact_poly.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "realtypes/error.hpp"

namespace realtypes {

ExactPoly::ExactPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

ExactPoly::ExactPoly(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(static_cast<long>(c));
  trim();
}

ExactPoly ExactPoly::constant(const Rational& value) {
  return ExactPoly(std::vector<Rational>{value});
}

ExactPoly ExactPoly::monomial(const Rational& value, std::size_t power) {
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = value;
  return ExactPoly(std::move(coeffs));
}

void ExactPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool ExactPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
    return c.get_den() == 1;
  });
}

Rational ExactPoly::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

ExactPoly ExactPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  }
  return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const ExactPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ExactPoly& ExactPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

DivisionResult divide(const ExactPoly& dividend, const ExactPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  std::vector<Rational> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {ExactPoly(), dividend};
  std::vector<Rational> quot(rem.size() - dn + 1, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + dn - 1] / d.back();
    quot[k] = factor;
    if (sgn(factor) == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= factor * d[j];
  }
  rem.resize(dn - 1);
  return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

ExactPoly pow(const ExactPoly& base, unsigned exponent) {
  ExactPoly result{1};
  ExactPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

ExactPoly normalize_positive(const ExactPoly& f) {
  if (f.is_zero()) return f;
  mpz_class denominators = 1;
  for (const auto& c : f.coefficients()) {
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get_den_mpz_t());
  }
  mpz_class content = 0;
  for (const auto& c : f.coefficients()) {
    const mpz_class scaled = c.get_num() * (denominators / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(denominators, content);
  scale.canonicalize();
  return f * scale;
}

ExactPoly primitive_part(const ExactPoly& f) {
  ExactPoly out = normalize_positive(f);
  if (!out.is_zero() && sgn(out.leading()) < 0) out = -out;
  return out;
}

ExactPoly gcd(const ExactPoly& a, const ExactPoly& b) {
  ExactPoly x = normalize_positive(a);
  ExactPoly y = normalize_positive(b);
  while (!y.is_zero()) {
    ExactPoly r = divide(x, y).remainder;
    x = std::move(y);
    y = normalize_positive(r);
  }
  return primitive_part(x);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const ExactPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "cannot decompose the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (f.degree() == 0) return out;
  // Yun's algorithm.
  const ExactPoly p = primitive_part(f);
  const ExactPoly dp = p.derivative();
  const ExactPoly a0 = gcd(p, dp);
  ExactPoly b = divide(p, a0).quotient;
  ExactPoly c = divide(dp, a0).quotient;
  ExactPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const ExactPoly a = gcd(b, d);
    b = divide(b, a).quotient;
    c = divide(d, a).quotient;
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({primitive_part(a), i});
  }
  return out;
}

ExactPoly squarefree_part(const ExactPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "zero polynomial has no square-free part");
  if (f.degree() == 0) return ExactPoly{1};
  return primitive_part(divide(f, gcd(f, f.derivative())).quotient);
}

std::vector<ExactPoly> sturm_sequence(const ExactPoly& f) {
  std::vector<ExactPoly> chain;
  if (f.is_zero()) return chain;
  chain.push_back(normalize_positive(f));
  ExactPoly next = normalize_positive(f.derivative());
  while (!next.is_zero()) {
    chain.push_back(std::move(next));
    const auto& last = chain.back();
    next = normalize_positive(-divide(chain[chain.size() - 2], last).remainder);
  }
  return chain;
}

Sign sign_of(const Rational& value) noexcept {
  const int s = sgn(value);
  return s < 0 ? Sign::kNegative : (s > 0 ? Sign::kPositive : Sign::kZero);
}

Sign sign_at(const ExactPoly& f, const Rational& x) { return sign_of(f(x)); }

namespace {

int sign_variations(const std::vector<ExactPoly>& chain, const Rational& x) {
  int variations = 0;
  int previous = 0;
  for (const auto& p : chain) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

struct Interval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
};

// Isolation of the real roots of one square-free polynomial of positive
// degree. Endpoints of open intervals are never roots of the polynomial.
class SquarefreeIsolator {
 public:
  explicit SquarefreeIsolator(ExactPoly g)
      : g_(primitive_part(g)), chain_(sturm_sequence(g_)) {}

  std::vector<Interval> run() {
    const Rational bound = cauchy_bound(g_);
    const Rational lo = -bound;
    const Rational hi = bound;
    const int count = sign_variations(chain_, lo) - sign_variations(chain_, hi);
    bisect(lo, hi, count);
    recover_rational_roots();
    separate();
    return std::move(found_);
  }

 private:
  void bisect(const Rational& lo, const Rational& hi, int count) {
    if (count == 0) return;
    if (count == 1) {
      found_.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(g_(mid)) != 0) {
      const int left = sign_variations(chain_, lo) - sign_variations(chain_, mid);
      bisect(lo, mid, left);
      bisect(mid, hi, count - left);
      return;
    }
    // Exact hit: cut out a neighbourhood of mid holding no other root.
    Rational radius = (hi - lo) / 4;
    while (true) {
      const Rational a = mid - radius;
      const Rational b = mid + radius;
      if (sgn(g_(a)) != 0 && sgn(g_(b)) != 0 &&
          sign_variations(chain_, a) - sign_variations(chain_, b) == 1) {
        const int left = sign_variations(chain_, lo) - sign_variations(chain_, a);
        bisect(lo, a, left);
        found_.push_back({mid, mid});
        bisect(b, hi, count - 1 - left);
        return;
      }
      radius /= 2;
    }
  }

  // One bisection step on a simple root; may turn the interval exact.
  void refine(Interval& iv) const {
    if (iv.exact()) return;
    Rational mid = (iv.lo + iv.hi) / 2;
    const int at_mid = sgn(g_(mid));
    if (at_mid == 0) {
      iv.lo = mid;
      iv.hi = std::move(mid);
    } else if (at_mid == sgn(g_(iv.lo))) {
      iv.lo = std::move(mid);
    } else {
      iv.hi = std::move(mid);
    }
  }

  // A rational root of a primitive integer polynomial has a denominator
  // dividing lc. Two such rationals are at least 1/lc^2 apart, so once the
  // interval is narrower than that, the simplest rational inside is the only
  // candidate.
  void recover_rational_roots() {
    const mpz_class lc = abs(g_.leading().get_num());
    const Rational width_limit(mpz_class(1), lc * lc);
    for (auto& iv : found_) {
      while (!iv.exact() && iv.hi - iv.lo >= width_limit) refine(iv);
      if (iv.exact()) continue;
      Rational candidate = simplest_rational_between(iv.lo, iv.hi);
      if (sgn(g_(candidate)) == 0) {
        iv.lo = candidate;
        iv.hi = std::move(candidate);
      }
    }
  }

  void separate() {
    for (std::size_t i = 0; i + 1 < found_.size(); ++i) {
      while (found_[i].hi >= found_[i + 1].lo) {
        refine(found_[i]);
        refine(found_[i + 1]);
      }
    }
  }

  ExactPoly g_;
  std::vector<ExactPoly> chain_;
  std::vector<Interval> found_;
};

// h divides the square-free polynomial the interval was isolated for.
bool vanishes_in(const ExactPoly& h, const Interval& iv) {
  if (h.degree() < 1) return false;
  if (iv.exact()) return sgn(h(iv.lo)) == 0;
  return sgn(h(iv.lo)) * sgn(h(iv.hi)) < 0;
}

Rational simplest_nonnegative(const Rational& lo, const Rational* hi) {
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  const Rational next(whole + 1);
  if (hi == nullptr || next < *hi) return next;
  const Rational base(whole);
  const Rational lo_frac = lo - base;
  const Rational hi_frac = *hi - base;
  const Rational inv_hi = 1 / hi_frac;
  Rational tail;
  if (sgn(lo_frac) == 0) {
    tail = simplest_nonnegative(inv_hi, nullptr);
  } else {
    const Rational inv_lo = 1 / lo_frac;
    tail = simplest_nonnegative(inv_hi, &inv_lo);
  }
  Rational out = base + 1 / tail;
  out.canonicalize();
  return out;
}

}  // namespace

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::kDomainError, "empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
  if (sgn(hi) <= 0) {
    const Rational neg_lo = -lo;
    return -simplest_nonnegative(-hi, &neg_lo);
  }
  return simplest_nonnegative(lo, &hi);
}

Rational cauchy_bound(const ExactPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "zero polynomial has no root bound");
  Rational largest = 0;
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) largest = std::max(largest, Rational(abs(c[k])));
  return 1 + largest / abs(f.leading());
}

int sturm_root_count(const ExactPoly& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "sturm_root_count on zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::kDomainError, "interval bounds must satisfy lo < hi");
  if (sgn(f(lo)) == 0 || sgn(f(hi)) == 0) {
    throw Error(ErrorCode::kEndpointIsRoot, "interval endpoint is a root");
  }
  if (gcd(f, f.derivative()).degree() > 0) {
    throw Error(ErrorCode::kNotSquarefree, "polynomial has a repeated factor");
  }
  const auto chain = sturm_sequence(f);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::vector<RootRecord> isolate_real_roots(const ExactPoly& f) {
  const auto factors = squarefree_decomposition(f);
  std::vector<RootRecord> out;
  if (factors.empty()) return out;
  ExactPoly product{1};
  for (const auto& part : factors) product *= part.factor;
  for (auto& iv : SquarefreeIsolator(product).run()) {
    int multiplicity = 0;
    for (const auto& part : factors) {
      if (vanishes_in(part.factor, iv)) multiplicity = part.multiplicity;
    }
    out.push_back({std::move(iv.lo), std::move(iv.hi), multiplicity});
  }
  return out;
}

FamilySignLayout family_sign_layout(std::span<const ExactPoly> family) {
  if (family.empty()) throw Error(ErrorCode::kEmptyFamily, "no polynomials given");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_zero()) {
      throw Error(ErrorCode::kZeroPolynomial,
                  "family member " + std::to_string(i + 1) + " is zero");
    }
  }
  std::vector<ExactPoly> parts;
  ExactPoly product{1};
  for (const auto& f : family) {
    parts.push_back(squarefree_part(f));
    product *= parts.back();
  }
  std::vector<Interval> intervals;
  if (product.degree() > 0) intervals = SquarefreeIsolator(squarefree_part(product)).run();

  std::vector<Rational> samples;
  if (intervals.empty()) {
    samples.emplace_back(0);
  } else {
    samples.push_back(intervals.front().lo - 1);
    for (std::size_t k = 0; k + 1 < intervals.size(); ++k) {
      samples.push_back((intervals[k].hi + intervals[k + 1].lo) / 2);
    }
    samples.push_back(intervals.back().hi + 1);
  }

  std::vector<std::vector<Sign>> rows(family.size());
  std::vector<FamilyRoot> roots;
  for (std::size_t k = 0; k <= intervals.size(); ++k) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      rows[i].push_back(sign_at(family[i], samples[k]));
    }
    if (k == intervals.size()) break;
    const Interval& iv = intervals[k];
    ExactPoly defining;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (vanishes_in(parts[i], iv)) {
        rows[i].push_back(Sign::kZero);
        defining = defining.is_zero() ? parts[i] : gcd(defining, parts[i]);
      } else {
        // No root of family[i] lies in the closed interval.
        rows[i].push_back(sign_at(family[i], iv.lo));
      }
    }
    roots.push_back({iv.lo, iv.hi, std::move(defining)});
  }
  return {SignMatrix::validate(std::move(rows)), std::move(roots), std::move(samples)};
}

SignMatrix family_real_type(std::span<const ExactPoly> family) {
  return family_sign_layout(family).matrix;
}

RealType real_type_of(const ExactPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "the zero polynomial has no real type");
  const ExactPoly single[] = {f};
  return condense_row(family_real_type(single), 0);
}

std::string to_string(const ExactPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const Rational magnitude = abs(c[k]);
    if (out.empty()) {
      if (sgn(c[k]) < 0) out += "-";
    } else {
      out += sgn(c[k]) < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (k == 0 || !unit) out += magnitude.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace realtypes
