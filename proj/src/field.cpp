#include "cwk/field.hpp"

#include <ostream>
#include <regex>

namespace cwk {

namespace {

thread_local std::uint32_t tlsPrime = 0;

long long mod(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}

std::uint32_t common(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw FieldError("mixed moduli " + std::to_string(a) + " and " + std::to_string(b));
}

long long powmod(long long b, long long e, std::uint32_t p) {
  long long r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string FieldSpec::str() const {
  return isQ() ? "Q" : std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "QQ" || s == "q") return {};
  static const std::regex re(R"((?:F_?|GF\()?(\d+)\)?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw FieldError("unrecognised field '" + s + "'");
  std::uint64_t p = std::stoull(m[1]);
  if (p >= (1u << 31) || !isPrime(p)) throw FieldError("field size " + m[1].str() + " is not a prime below 2^31");
  return {static_cast<std::uint32_t>(p)};
}

std::uint32_t Zp::currentPrime() { return tlsPrime; }

Zp::Zp(long long n) : p_(tlsPrime) { v_ = p_ ? mod(n, p_) : n; }

Zp::Zp(long long n, std::uint32_t p) : v_(p ? mod(n, p) : n), p_(p) {}

long long Zp::reduced(std::uint32_t p) const {
  if (p == 0) return v_;
  if (p_ != 0 && p_ != p) common(p_, p);
  return mod(v_, p);
}

Zp Zp::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw FieldError("cannot invert an untyped literal");
  }
  if (v_ == 0) throw FieldError("division by zero in F_" + std::to_string(p_));
  return Zp(powmod(v_, p_ - 2, p_), p_);
}

Zp operator+(const Zp& a, const Zp& b) {
  std::uint32_t p = common(a.p_, b.p_);
  if (p == 0) return Zp(a.v_ + b.v_, 0);
  return Zp(a.reduced(p) + b.reduced(p), p);
}

Zp operator-(const Zp& a, const Zp& b) {
  std::uint32_t p = common(a.p_, b.p_);
  if (p == 0) return Zp(a.v_ - b.v_, 0);
  return Zp(a.reduced(p) - b.reduced(p), p);
}

Zp operator*(const Zp& a, const Zp& b) {
  std::uint32_t p = common(a.p_, b.p_);
  if (p == 0) return Zp(a.v_ * b.v_, 0);
  return Zp(a.reduced(p) * b.reduced(p), p);
}

Zp operator/(const Zp& a, const Zp& b) {
  std::uint32_t p = common(a.p_, b.p_);
  if (p == 0) return a * b.inverse();
  return Zp(a.reduced(p), p) * Zp(b.reduced(p), p).inverse();
}

Zp Zp::operator-() const { return Zp(-v_, p_); }

bool operator==(const Zp& a, const Zp& b) {
  std::uint32_t p = common(a.p_, b.p_);
  return a.reduced(p) == b.reduced(p);
}

std::ostream& operator<<(std::ostream& os, const Zp& z) {
  return os << ScalarTraits<Zp>::format(z);
}

PrimeScope::PrimeScope(std::uint32_t p) : saved_(tlsPrime) { tlsPrime = p; }
PrimeScope::~PrimeScope() { tlsPrime = saved_; }

namespace {

const std::regex& scalarRe() {
  static const std::regex re(R"(\s*(-?\d+)(?:\s*/\s*(\d+))?(?:\s+mod\s+(\d+))?\s*)");
  return re;
}

}  // namespace

Rational ScalarTraits<Rational>::parse(const std::string& s, const FieldSpec& f) {
  std::smatch m;
  if (!f.isQ()) throw FieldError("rational scalar requested in F_" + f.str());
  if (!std::regex_match(s, m, scalarRe())) throw FieldError("malformed scalar '" + s + "'");
  if (m[3].matched) throw FieldError("modular scalar '" + s + "' in a rational workspace");
  Integer num(m[1].str());
  Integer den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw FieldError("zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string ScalarTraits<Rational>::format(const Rational& x) {
  return x.str();
}

Zp ScalarTraits<Zp>::parse(const std::string& s, const FieldSpec& f) {
  std::smatch m;
  if (f.isQ()) throw FieldError("modular scalar requested in Q");
  if (!std::regex_match(s, m, scalarRe())) throw FieldError("malformed scalar '" + s + "'");
  if (m[3].matched && std::stoull(m[3]) != f.p)
    throw FieldError("scalar '" + s + "' does not live in F_" + f.str());
  Integer num(m[1].str());
  Integer den(m[2].matched ? m[2].str() : std::string("1"));
  long long n = static_cast<long long>(Integer(num % f.p));
  long long d = static_cast<long long>(Integer(den % f.p));
  if (d == 0) throw FieldError("denominator of '" + s + "' vanishes mod " + f.str());
  return Zp(n, f.p) / Zp(d, f.p);
}

std::string ScalarTraits<Zp>::format(const Zp& x) {
  if (x.modulus() == 0) return std::to_string(x.value());
  return std::to_string(x.value()) + " mod " + std::to_string(x.modulus());
}

}  // namespace cwk
