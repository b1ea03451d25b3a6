#pragma once

// Exact scalar fields: the rationals Q (GMP-backed) and the Gaussian
// rationals Q(i). Both keep a unique canonical form, so equality is
// structural equality.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liebialg {

/// Base class of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad text, dimension mismatch, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed: a theorem-backed implication was
/// violated, or a structure that must satisfy Jacobi does not.
class CheckFailure : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(mpz_class(std::to_string(v))) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  /// Accepts "p", "p/q", with optional sign and surrounding blanks.
  static Rational parse(std::string_view text) {
    auto s = detail::trim(text);
    if (s.empty()) throw InputError("empty rational");
    auto slash = s.find('/');
    auto check_int = [&](std::string_view part) {
      std::size_t i = 0;
      if (!part.empty() && (part[0] == '+' || part[0] == '-')) i = 1;
      if (i == part.size()) throw InputError("malformed rational '" + std::string(text) + "'");
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9')
          throw InputError("malformed rational '" + std::string(text) + "'");
    };
    auto to_mpz = [](std::string_view part) {
      if (!part.empty() && part[0] == '+') part.remove_prefix(1);
      return mpz_class(std::string(part));
    };
    if (slash == std::string_view::npos) {
      check_int(s);
      return Rational(to_mpz(s), 1);
    }
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (den[0] == '-' || den[0] == '+')
      throw InputError("malformed rational '" + std::string(text) + "'");
    return Rational(to_mpz(num), to_mpz(den));
  }

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] const mpq_class& value() const { return v_; }
  [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

  [[nodiscard]] std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_{0};
};

/// Element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1)}; }
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "a", "b*i", "a+b*i", "a-b*i", "i", "-i", "a+i" where a, b are
  /// rationals in the "p" or "p/q" form.
  static GaussianRational parse(std::string_view text) {
    auto s = detail::trim(text);
    if (s.empty()) throw InputError("empty gaussian rational");
    auto bad = [&] { return InputError("malformed gaussian rational '" + std::string(text) + "'"); };
    if (s.back() != 'i') return {Rational::parse(s)};

    // Find the sign that separates the real part from the imaginary part.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
        split = k;
        break;
      }
    }
    std::string_view re_part;
    std::string_view im_part = s;
    if (split != std::string_view::npos) {
      re_part = detail::trim(s.substr(0, split));
      im_part = s.substr(split);
    }
    im_part.remove_suffix(1);  // drop 'i'
    im_part = detail::trim(im_part);
    if (!im_part.empty() && im_part.back() == '*') {
      im_part.remove_suffix(1);
      if (im_part.empty() || im_part == "+" || im_part == "-") throw bad();
    }
    Rational im;
    if (im_part.empty() || im_part == "+")
      im = Rational(1);
    else if (im_part == "-")
      im = Rational(-1);
    else
      im = Rational::parse(im_part);
    Rational re;
    if (!re_part.empty()) re = Rational::parse(re_part);
    return {re, im};
  }

  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] const Rational& real() const { return re_; }
  [[nodiscard]] const Rational& imag() const { return im_; }
  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }

  [[nodiscard]] std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string out;
    if (!re_.is_zero()) out = re_.to_string();
    Rational mag = im_.sign() < 0 ? -im_ : im_;
    if (im_.sign() < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "i";
    return out;
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

 private:
  Rational re_;
  Rational im_;
};

/// The operations every scalar type used by the library must provide.
template <class F>
concept Field = std::regular<F> && requires(const F a, const F b, std::string_view s) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { F::zero() } -> std::convertible_to<F>;
  { F::one() } -> std::convertible_to<F>;
  { F::parse(s) } -> std::convertible_to<F>;
  F(Rational{});
};

template <Field F>
std::string to_string(const F& x) {
  return x.to_string();
}

/// Short name used in file formats: "Q" or "Qi".
template <Field F>
constexpr std::string_view field_name() {
  if constexpr (std::same_as<F, Rational>)
    return "Q";
  else
    return "Qi";
}

}  // namespace liebialg
