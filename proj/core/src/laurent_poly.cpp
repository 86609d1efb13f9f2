#include "twistrim/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace twistrim {

LaurentPoly::LaurentPoly(Integer constant) {
  coeffs_.push_back(std::move(constant));
  trim();
}

LaurentPoly::LaurentPoly(std::int64_t min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Integer coeff, std::int64_t exp) {
  return LaurentPoly(exp, {std::move(coeff)});
}

LaurentPoly LaurentPoly::from_ints(std::int64_t min_exp,
                                   const std::vector<long>& coeffs) {
  std::vector<Integer> big(coeffs.begin(), coeffs.end());
  return LaurentPoly(min_exp, std::move(big));
}

void LaurentPoly::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  min_exp_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1;
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && abs(coeffs_[0]) == 1;
}

std::int64_t LaurentPoly::max_exp() const {
  return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::int64_t LaurentPoly::width() const {
  return static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coeff(std::int64_t exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const std::int64_t lo = std::min(min_exp_, rhs.min_exp_);
  const std::int64_t hi = std::max(max_exp(), rhs.max_exp());
  std::vector<Integer> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum[static_cast<std::size_t>(min_exp_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    sum[static_cast<std::size_t>(rhs.min_exp_ - lo) + i] += rhs.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
  }
  return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(prod));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  return *this = *this * rhs;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& rhs) {
  if (rhs == 0) return *this = LaurentPoly();
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_exp_ += k;
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return {};
  std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-max_exp(), std::move(rev));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly out = shifted(-min_exp_);
  if (out.coeffs_.front() < 0) out = -out;
  return out;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
  if (is_zero()) return 0;
  if (min_exp_ < 0 && abs(x) != 1)
    throw std::domain_error("evaluate: negative exponent at non-unit point");
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  std::int64_t e = min_exp_;
  if (e < 0) e = -e;  // x^{-k} == x^{k} for x = ±1
  return acc * ipow(x, static_cast<unsigned long>(e));
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t e = max_exp(); e >= min_exp_; --e) {
    const Integer& c = coeffs_[static_cast<std::size_t>(e - min_exp_)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

// Dense view of a polynomial with exponents from 0; requires min_exp >= 0.
std::vector<Integer> dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.min_exp() < 0) throw std::domain_error("negative exponent in polynomial");
  std::vector<Integer> out(static_cast<std::size_t>(p.min_exp()));
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return out;
}

}  // namespace

LaurentPoly divexact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("divexact: division by zero");
  if (num.is_zero()) return {};
  // Work with the t^0-based representatives; units t^k factor out.
  std::vector<Integer> rem = num.coeffs();
  const auto& d = den.coeffs();
  if (rem.size() < d.size()) throw std::domain_error("divexact: inexact");
  std::vector<Integer> quot(rem.size() - d.size() + 1);
  const Integer& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("divexact: inexact");
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < d.size(); ++j)
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), d[j].get_mpz_t());
    quot[k] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("divexact: inexact");
  return LaurentPoly(num.min_exp() - den.min_exp(), std::move(quot));
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return a.normalized() == b.normalized();
}

LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const Integer g = p.content();
  std::vector<Integer> cs = p.coeffs();
  for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return LaurentPoly(p.min_exp(), std::move(cs));
}

LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  std::vector<Integer> r = dense(a);
  const std::vector<Integer> d = dense(b);
  if (r.size() < d.size()) return a;
  const Integer& lead = d.back();
  while (!r.empty() && r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const Integer top = r.back();
    for (auto& c : r) c *= lead;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= top * d[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return LaurentPoly(0, std::move(r));
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  Integer g;
  const Integer ca = a.content(), cb = b.content();
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPoly x = primitive_part(a.normalized());
  LaurentPoly y = primitive_part(b.normalized());
  if (x.max_exp() < y.max_exp()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return (primitive_part(x) * g).normalized();
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace twistrim
