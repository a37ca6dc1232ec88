#pragma once

// Exact field scalars: arbitrary-precision rationals (GMP-backed) and prime
// fields with a runtime modulus. Both plug into Eigen dense matrices via the
// NumTraits specializations at the bottom of this header.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include <Eigen/Core>

namespace qrep {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

// Which field the computation runs over. Scalars of a prime field carry the
// modulus themselves, so FieldSpec is a descriptor used at construction
// sites and for dispatch, not per-element context.
struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

  static FieldSpec prime(std::int64_t p) {
    if (p < 2 || !detail::is_prime_u64(static_cast<std::uint64_t>(p)))
      throw FieldError("FieldSpec: modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::Prime, p};
  }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string name() const {
    return kind == Kind::Rationals ? std::string("Q") : "F" + std::to_string(p);
  }
};

// Arbitrary-precision rational, always stored in lowest terms with positive
// denominator (mpq canonical form).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design, Eigen casts int literals
  Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw FieldError("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) {}

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const {
    if (is_zero()) throw FieldError("Rational: division by zero");
    return Rational(mpq_class(1 / v_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw FieldError("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  mpq_class v_;
};

// Element of F_p with the modulus stored alongside the value. A modulus of 0
// marks a plain integer literal (Eigen materializes Scalar(0)/Scalar(1) out
// of thin air); any arithmetic against a moduled value adopts its modulus.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long n) : v_(n), p_(0) {}  // NOLINT: implicit by design
  Fp(long long n, std::int64_t p) : v_(norm(n, p)), p_(p) {}

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return p_ == 0 ? v_ == 1 : norm(v_, p_) == 1; }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw FieldError("Fp: inverse of unmoduled scalar");
    }
    if (v_ == 0) throw FieldError("Fp: division by zero");
    // Extended Euclid.
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b; b = t;
      t = x0 - q * x1;
      x0 = x1; x1 = t;
    }
    return Fp(x0, p_);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    return p == 0 ? Fp(x + y) : Fp(x + y, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    return p == 0 ? Fp(x - y) : Fp(x - y, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    if (p == 0) return Fp(x * y);
    std::uint64_t prod = detail::mulmod_u64(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y),
                                            static_cast<std::uint64_t>(p));
    return Fp(static_cast<std::int64_t>(prod), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(p_ - v_, p_); }

  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
  Fp& operator/=(const Fp& o) { *this = *this / o; return *this; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto [x, y, p] = align(a, b);
    return x == y;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

 private:
  static std::int64_t norm(std::int64_t v, std::int64_t p) {
    if (p == 0) return v;
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
  }

  // Common modulus and both values reduced under it.
  static std::tuple<std::int64_t, std::int64_t, std::int64_t> align(const Fp& a, const Fp& b) {
    std::int64_t p = a.p_ != 0 ? a.p_ : b.p_;
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw FieldError("Fp: mixed moduli " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
    return {norm(a.v_, p), norm(b.v_, p), p};
  }

  std::int64_t v_;
  std::int64_t p_;
};

// Uniform construction of scalars under a FieldSpec.
template <class Scalar>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::Rationals;
  static Rational from_long(const FieldSpec&, long long n) { return Rational(n); }
  static Rational from_fraction(const FieldSpec&, long long num, long long den) { return Rational(num, den); }
  static bool admits(const FieldSpec& fs) { return fs.kind == FieldSpec::Kind::Rationals; }
};

template <>
struct FieldOps<Fp> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::Prime;
  static Fp from_long(const FieldSpec& fs, long long n) { return Fp(n, fs.p); }
  static Fp from_fraction(const FieldSpec& fs, long long num, long long den) {
    return Fp(num, fs.p) / Fp(den, fs.p);
  }
  static bool admits(const FieldSpec& fs) { return fs.kind == FieldSpec::Kind::Prime; }
};

}  // namespace qrep

namespace Eigen {

template <>
struct NumTraits<qrep::Rational> : GenericNumTraits<qrep::Rational> {
  typedef qrep::Rational Real;
  typedef qrep::Rational NonInteger;
  typedef qrep::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return qrep::Rational(0); }
  static inline Real dummy_precision() { return qrep::Rational(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qrep::Fp> : GenericNumTraits<qrep::Fp> {
  typedef qrep::Fp Real;
  typedef qrep::Fp NonInteger;
  typedef qrep::Fp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 6
  };
  static inline Real epsilon() { return qrep::Fp(0); }
  static inline Real dummy_precision() { return qrep::Fp(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
