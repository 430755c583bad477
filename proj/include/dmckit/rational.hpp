#pragma once

// Exact rationals and extended values (Q plus +inf).
//
// Values whose numerator and denominator fit in 62 bits are stored inline and
// combined through 128-bit intermediates; anything larger falls back to
// boost::multiprecision::cpp_rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dmckit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;
  using BigInt = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(long long v) {  // NOLINT(google-explicit-constructor)
    if (fits(v)) {
      num_ = v;
    } else {
      assign(Big(v));
    }
  }
  Rational(int v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    *this = from_wide(n, d);
  }
  explicit Rational(const Big& b) { assign(b); }

  static Rational parse(std::string_view s) {
    auto bad = [&] { return Error("malformed rational literal '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](std::string_view t, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i >= t.size()) throw bad();
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') throw bad();
    };
    std::string_view ns = s.substr(0, slash);
    check_int(ns, true);
    std::string nstr(ns);
    if (!nstr.empty() && nstr[0] == '+') nstr.erase(0, 1);
    BigInt n(nstr);
    BigInt d(1);
    if (slash != std::string_view::npos) {
      std::string_view ds = s.substr(slash + 1);
      check_int(ds, false);
      d = BigInt(std::string(ds));
      if (d == 0) throw Error("rational with zero denominator: '" + std::string(s) + "'");
    }
    return Rational(Big(n, d));
  }

  bool is_big() const { return static_cast<bool>(big_); }
  bool is_integer() const { return big_ ? denominator(*big_) == 1 : den_ == 1; }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  Big to_big() const { return big_ ? *big_ : Big(num_, den_); }

  // Numerator and denominator when the value is in the inline range.
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  // Largest integer not above the value; throws if it does not fit in int64.
  std::int64_t floor_int() const {
    if (!big_) {
      long long q = num_ / den_;
      if (num_ % den_ != 0 && num_ < 0) --q;
      return q;
    }
    BigInt n = numerator(*big_), d = denominator(*big_);
    BigInt q = n / d;
    if (q * d != n && n < 0) --q;
    if (q > BigInt(INT64_MAX) || q < BigInt(INT64_MIN)) throw Error("rational floor out of int64 range");
    return q.convert_to<std::int64_t>();
  }

  double to_double() const {
    if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
    return big_->convert_to<double>();
  }

  std::string str() const {
    if (big_) {
      std::string s = numerator(*big_).str();
      if (denominator(*big_) != 1) s += "/" + denominator(*big_).str();
      return s;
    }
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  Rational operator-() const {
    if (big_) return Rational(Big(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_wide(I128(a.num_) + b.num_, 1);
      return from_wide(I128(a.num_) * b.den_ + I128(b.num_) * a.den_, I128(a.den_) * b.den_);
    }
    return Rational(Big(a.to_big() + b.to_big()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_wide(I128(a.num_) - b.num_, 1);
      return from_wide(I128(a.num_) * b.den_ - I128(b.num_) * a.den_, I128(a.den_) * b.den_);
    }
    return Rational(Big(a.to_big() - b.to_big()));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return from_wide(I128(a.num_) * b.num_, I128(a.den_) * b.den_);
    return Rational(Big(a.to_big() * b.to_big()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw Error("division by zero rational");
    if (!a.big_ && !b.big_) return from_wide(I128(a.num_) * b.den_, I128(a.den_) * b.num_);
    return Rational(Big(a.to_big() / b.to_big()));
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_big() == b.to_big();
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      I128 l = I128(a.num_) * b.den_, r = I128(b.num_) * a.den_;
      return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    Big l = a.to_big(), r = b.to_big();
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using I128 = __int128;
  using U128 = unsigned __int128;
  static constexpr long long kLimit = 1LL << 62;

  static bool fits(long long v) { return v > -kLimit && v < kLimit; }

  static U128 gcd128(U128 a, U128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0)
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    while (b != 0) {
      U128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static BigInt to_bigint(I128 v) {
    bool neg = v < 0;
    U128 u = neg ? U128(0) - U128(v) : U128(v);
    BigInt r = BigInt(static_cast<std::uint64_t>(u >> 64));
    r <<= 64;
    r += BigInt(static_cast<std::uint64_t>(u));
    return neg ? BigInt(-r) : r;
  }

  static Rational from_wide(I128 n, I128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (d != 1) {
      U128 g = gcd128(n < 0 ? U128(0) - U128(n) : U128(n), U128(d));
      if (g > 1) {
        n /= I128(g);
        d /= I128(g);
      }
    }
    if (n > -kLimit && n < kLimit && d < kLimit) {
      Rational r;
      r.num_ = static_cast<long long>(n);
      r.den_ = static_cast<long long>(d);
      return r;
    }
    Rational r;
    r.big_ = std::make_shared<const Big>(to_bigint(n), to_bigint(d));
    return r;
  }

  void assign(const Big& b) {
    const BigInt& n = numerator(b);
    const BigInt& d = denominator(b);
    if (n > -kLimit && n < kLimit && d < kLimit) {
      num_ = n.convert_to<long long>();
      den_ = d.convert_to<long long>();
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const Big>(b);
    }
  }

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const Big> big_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// An element of Q together with +inf. Subtracting +inf is undefined and throws.
class ExtValue {
 public:
  ExtValue() = default;
  ExtValue(Rational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtValue(long long v) : v_(v) {}            // NOLINT
  ExtValue(long v) : v_(v) {}                 // NOLINT
  ExtValue(int v) : v_(v) {}                  // NOLINT

  static ExtValue infinity() {
    ExtValue e;
    e.inf_ = true;
    return e;
  }
  static ExtValue parse(std::string_view s) {
    if (s == "inf" || s == "+inf") return infinity();
    return ExtValue(Rational::parse(s));
  }

  bool is_finite() const { return !inf_; }
  bool is_inf() const { return inf_; }
  const Rational& value() const {
    if (inf_) throw Error("value() of +inf");
    return v_;
  }

  // a * this for a >= 0, with the convention 0 * (+inf) = 0.
  ExtValue scaled(const Rational& a) const {
    if (a.sign() < 0) throw Error("negative scaling of an extended value");
    if (inf_) return a.sign() == 0 ? ExtValue(0) : infinity();
    return ExtValue(a * v_);
  }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtValue(a.v_ + b.v_);
  }
  friend ExtValue operator-(const ExtValue& a, const ExtValue& b) {
    if (b.inf_) throw Error("subtraction of +inf");
    if (a.inf_) return infinity();
    return ExtValue(a.v_ - b.v_);
  }
  ExtValue& operator+=(const ExtValue& o) { return *this = *this + o; }

  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (a.inf_ || b.inf_) return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
    return a.v_ <=> b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtValue& e) { return os << e.str(); }

 private:
  Rational v_;
  bool inf_ = false;
};

}  // namespace dmckit
