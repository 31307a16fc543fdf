#ifndef CWK_FIELD_HPP
#define CWK_FIELD_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace cwk {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p == 0 is the rationals.
struct FieldSpec {
  std::uint32_t p = 0;

  bool isQ() const { return p == 0; }
  std::string str() const;
  bool operator==(const FieldSpec&) const = default;

  static FieldSpec parse(const std::string& s);
};

bool isPrime(std::uint64_t n);

// Element of F_p. A value built without a modulus (p == 0) is an untyped
// integer literal; it adopts the modulus of whatever it meets. Literals made
// while a PrimeScope is active are typed from the start.
class Zp {
 public:
  Zp() : v_(0), p_(currentPrime()) {}
  Zp(long long n);  // NOLINT: Eigen builds Scalar(0), Scalar(1)
  Zp(long long n, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  // Representative in [0, p) once typed, raw integer otherwise.
  long long value() const { return v_; }
  long long reduced(std::uint32_t p) const;

  Zp inverse() const;

  friend Zp operator+(const Zp& a, const Zp& b);
  friend Zp operator-(const Zp& a, const Zp& b);
  friend Zp operator*(const Zp& a, const Zp& b);
  friend Zp operator/(const Zp& a, const Zp& b);
  Zp operator-() const;
  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  Zp& operator/=(const Zp& o) { return *this = *this / o; }
  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }

  static std::uint32_t currentPrime();

 private:
  long long v_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

// Sets the modulus used for untyped Zp construction on this thread.
class PrimeScope {
 public:
  explicit PrimeScope(std::uint32_t p);
  ~PrimeScope();
  PrimeScope(const PrimeScope&) = delete;
  PrimeScope& operator=(const PrimeScope&) = delete;

 private:
  std::uint32_t saved_;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational fromInt(long long n) { return Rational(n); }
  static bool isZero(const Rational& x) { return x == 0; }
  static Rational parse(const std::string& s, const FieldSpec& f);
  static std::string format(const Rational& x);
  static bool accepts(const FieldSpec& f) { return f.isQ(); }
};

template <>
struct ScalarTraits<Zp> {
  static Zp fromInt(long long n) { return Zp(n); }
  static bool isZero(const Zp& x) { return x == Zp(0); }
  static Zp parse(const std::string& s, const FieldSpec& f);
  static std::string format(const Zp& x);
  static bool accepts(const FieldSpec& f) { return !f.isQ(); }
};

template <class S>
std::string formatScalar(const S& x) {
  return ScalarTraits<S>::format(x);
}

}  // namespace cwk

namespace Eigen {

template <>
struct NumTraits<cwk::Zp> : GenericNumTraits<cwk::Zp> {
  typedef cwk::Zp Real;
  typedef cwk::Zp NonInteger;
  typedef cwk::Zp Literal;
  typedef cwk::Zp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline Real highest() { return Real(0); }
  static inline Real lowest() { return Real(0); }
};

}  // namespace Eigen

#endif
