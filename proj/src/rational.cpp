#include "deflogic/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace deflogic {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  bool neg = false;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) return std::nullopt;
    auto nv = parse_int(n), dv = parse_int(d);
    if (!nv || !dv || *dv == 0) return std::nullopt;
    return Rational(neg ? -*nv : *nv, *dv);
  }
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp) || fp.size() > 18) return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    auto iv = parse_int(ip), fv = parse_int(fp);
    if (!iv || !fv) return std::nullopt;
    Rational r = Rational(*iv) + Rational(*fv, scale);
    return neg ? Rational(-r.num(), r.den()) : r;
  }
  if (!all_digits(body)) return std::nullopt;
  auto v = parse_int(body);
  if (!v) return std::nullopt;
  return Rational(neg ? -*v : *v);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace deflogic
