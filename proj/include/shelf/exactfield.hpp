// Exact scalar fields: rationals, Gaussian rationals and prime fields.
//
// Every scalar type used by the library models the `FieldScalar` concept
// below. A default-constructed scalar is always the zero element, so dense
// and sparse containers can be value-initialised without knowing the field.

#ifndef SHELF_EXACTFIELD_HPP
#define SHELF_EXACTFIELD_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace shelf {

enum class FieldKind { Rationals, GaussianRationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;  // PrimeField only

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec gaussian() { return {FieldKind::GaussianRationals, 0}; }
  static FieldSpec prime(std::uint64_t p);

  std::uint64_t characteristic() const { return kind == FieldKind::PrimeField ? modulus : 0; }
  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool is_int_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline mpz_class parse_int(std::string_view s) {
  if (!is_int_literal(s)) throw std::invalid_argument("malformed integer literal '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

// int | int/int
inline mpq_class parse_fraction(std::string_view s) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_int(s));
  mpz_class num = parse_int(trim(s.substr(0, slash)));
  mpz_class den = parse_int(trim(s.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("denominator zero in literal '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline std::string fraction_string(const mpq_class& q) { return q.get_str(10); }

}  // namespace detail

inline FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!detail::is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return {FieldKind::PrimeField, p};
}

inline std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::Rationals: return "q";
    case FieldKind::GaussianRationals: return "qi";
    case FieldKind::PrimeField: return "fp:" + std::to_string(modulus);
  }
  return "?";
}

/// Accepts `q`, `qi`, `fp:<p>` and the short form `f<p>`.
inline FieldSpec parse_field_spec(std::string_view s) {
  s = detail::trim(s);
  if (s == "q" || s == "Q") return FieldSpec::rationals();
  if (s == "qi" || s == "Q(i)") return FieldSpec::gaussian();
  std::string_view digits;
  if (s.starts_with("fp:")) digits = s.substr(3);
  else if (s.starts_with("f") || s.starts_with("F")) digits = s.substr(1);
  if (digits.empty() || !detail::is_int_literal(digits) || digits.front() == '-')
    throw std::invalid_argument("unknown field spec '" + std::string(s) + "'");
  return FieldSpec::prime(std::stoull(std::string(digits)));
}

template <class F>
concept FieldScalar = std::regular<F> && requires(F a, const F& b, long long n, const FieldSpec& spec) {
  { F::from_int(n, spec) } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inverse() } -> std::same_as<F>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
};

class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_int(long long n, const FieldSpec& = {}) { return Rational(mpq_class(mpz_class(std::to_string(n)))); }
  static Rational parse(std::string_view s) { return Rational(detail::parse_fraction(s)); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero");
    return Rational(mpq_class(1) / v_);
  }
  std::string to_string() const { return detail::fraction_string(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_{0};
};

/// re + im*i with both parts in Q.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational from_int(long long n, const FieldSpec& = {}) {
    return {mpq_class(mpz_class(std::to_string(n))), mpq_class(0)};
  }
  static GaussianRational unit_i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational parse(std::string_view s);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, mpq_class(-im_)}; }
  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return {mpq_class(re_ / n), mpq_class(-im_ / n)};
  }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) { return a * b.inverse(); }
  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return detail::fraction_string(re_);
  std::string imag;
  mpq_class a = abs(im_);
  if (a != 1) imag = detail::fraction_string(a);
  imag += "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return detail::fraction_string(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

// Accepts: frac | frac i | frac(+|-)frac i, where a bare `i` means 1i.
inline GaussianRational GaussianRational::parse(std::string_view literal) {
  std::string_view s = detail::trim(literal);
  if (s.empty()) throw std::invalid_argument("empty literal");
  // rewrite "i/4" into "1/4i"
  std::string normalized;
  if (auto k = s.find("i/"); k != std::string_view::npos) {
    bool coefficient_before = k > 0 && s[k - 1] >= '0' && s[k - 1] <= '9';
    normalized = std::string(s.substr(0, k)) + (coefficient_before ? "" : "1") + std::string(s.substr(k + 1)) + "i";
    s = normalized;
  }
  if (s.back() != 'i') return {detail::parse_fraction(s), mpq_class(0)};
  std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not the leading one and not after '/'
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);
  imag_part = detail::trim(imag_part);
  mpq_class im;
  if (imag_part.empty() || imag_part == "+") im = 1;
  else if (imag_part == "-") im = -1;
  else {
    std::string t(imag_part);
    if (t.front() == '+') t.erase(0, 1);
    // "-i/4" style: imaginary unit written before the denominator
    im = detail::parse_fraction(t);
  }
  mpq_class re = real_part.empty() ? mpq_class(0) : detail::parse_fraction(real_part);
  return {re, im};
}

/// Residue modulo a prime. A value with modulus 0 is the field-agnostic zero.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t residue, std::uint64_t p) : v_(p ? residue % p : 0), p_(p) {}

  static ModP from_int(long long n, const FieldSpec& spec) {
    if (spec.kind != FieldKind::PrimeField) throw std::invalid_argument("ModP requires a prime field spec");
    auto p = static_cast<long long>(spec.modulus);
    long long r = n % p;
    if (r < 0) r += p;
    return {static_cast<std::uint64_t>(r), spec.modulus};
  }

  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  ModP inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero");
    // extended Euclid
    long long a = static_cast<long long>(v_), m = static_cast<long long>(p_);
    long long x0 = 1, x1 = 0;
    while (m != 0) {
      long long t = a / m;
      std::tie(a, m) = std::pair{m, a - t * m};
      std::tie(x0, x1) = std::pair{x1, x0 - t * x1};
    }
    long long p = static_cast<long long>(p_);
    return {static_cast<std::uint64_t>(((x0 % p) + p) % p), p_};
  }
  std::string to_string() const { return std::to_string(v_); }

  ModP& operator+=(const ModP& o) {
    std::uint64_t p = join(o);
    if (p) v_ = (v_ + o.v_) % p;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    std::uint64_t p = join(o);
    if (p) v_ = (v_ + p - o.v_) % p;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    std::uint64_t p = join(o);
    v_ = p ? static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p) : 0;
    return *this;
  }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  ModP operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
  friend bool operator==(const ModP& a, const ModP& b) {
    if (a.p_ && b.p_ && a.p_ != b.p_) return false;
    return a.v_ == b.v_;
  }

 private:
  std::uint64_t join(const ModP& o) {
    if (p_ == 0) p_ = o.p_;
    else if (o.p_ != 0 && o.p_ != p_) throw std::invalid_argument("mixed field specs in arithmetic");
    return p_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<GaussianRational>);
static_assert(FieldScalar<ModP>);

template <FieldScalar F>
F parse_scalar(std::string_view literal, const FieldSpec& spec);

template <>
inline Rational parse_scalar<Rational>(std::string_view literal, const FieldSpec&) {
  return Rational::parse(literal);
}

template <>
inline GaussianRational parse_scalar<GaussianRational>(std::string_view literal, const FieldSpec&) {
  return GaussianRational::parse(literal);
}

// int | int/int | int mod p
template <>
inline ModP parse_scalar<ModP>(std::string_view literal, const FieldSpec& spec) {
  std::string_view s = detail::trim(literal);
  auto pos = s.find("mod");
  if (pos != std::string_view::npos) {
    std::string_view mod = detail::trim(s.substr(pos + 3));
    if (!detail::is_int_literal(mod) || std::stoull(std::string(mod)) != spec.modulus)
      throw std::invalid_argument("modulus mismatch in literal '" + std::string(literal) + "'");
    s = detail::trim(s.substr(0, pos));
  }
  mpq_class q = detail::parse_fraction(s);
  mpz_class p(std::to_string(spec.modulus));
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (den == 0) throw std::invalid_argument("denominator vanishes modulo " + std::to_string(spec.modulus));
  auto to_mod = [&](mpz_class z) {
    if (z < 0) z += p;
    return ModP(z.get_ui(), spec.modulus);
  };
  return to_mod(num) / to_mod(den);
}

/// Which concrete scalar type realises a field kind.
template <FieldScalar F>
constexpr bool scalar_matches(FieldKind k) {
  if constexpr (std::same_as<F, Rational>) return k == FieldKind::Rationals;
  else if constexpr (std::same_as<F, GaussianRational>) return k == FieldKind::GaussianRationals;
  else return k == FieldKind::PrimeField;
}

/// Runtime-typed scalar: the literal-level surface used by file formats and the CLI.
class FieldElement {
 public:
  using Storage = std::variant<Rational, GaussianRational, ModP>;

  FieldElement(FieldSpec spec, Storage v) : spec_(spec), v_(std::move(v)) {}

  static FieldElement parse(std::string_view literal, const FieldSpec& spec) {
    switch (spec.kind) {
      case FieldKind::Rationals: return {spec, parse_scalar<Rational>(literal, spec)};
      case FieldKind::GaussianRationals: return {spec, parse_scalar<GaussianRational>(literal, spec)};
      case FieldKind::PrimeField: return {spec, parse_scalar<ModP>(literal, spec)};
    }
    throw std::invalid_argument("unknown field kind");
  }
  static FieldElement from_int(long long n, const FieldSpec& spec) { return parse(std::to_string(n), spec); }

  const FieldSpec& spec() const { return spec_; }
  const Storage& storage() const { return v_; }
  bool is_zero() const {
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
  }
  std::string to_string() const {
    return std::visit([](const auto& x) { return x.to_string(); }, v_);
  }

  enum class Op { Add, Sub, Mul, Neg, Inv };
  static FieldElement arith(Op op, const FieldElement& x, const FieldElement* y = nullptr) {
    if ((op == Op::Add || op == Op::Sub || op == Op::Mul) && y == nullptr)
      throw std::invalid_argument("binary operation needs two operands");
    if (y && !(x.spec_ == y->spec_)) throw std::invalid_argument("mixed field specs in arithmetic");
    return std::visit(
        [&](const auto& a) -> FieldElement {
          using T = std::decay_t<decltype(a)>;
          switch (op) {
            case Op::Neg: return {x.spec_, -a};
            case Op::Inv: return {x.spec_, a.inverse()};
            default: break;
          }
          const T& b = std::get<T>(y->v_);
          switch (op) {
            case Op::Add: return {x.spec_, a + b};
            case Op::Sub: return {x.spec_, a - b};
            default: return {x.spec_, a * b};
          }
        },
        x.v_);
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return arith(Op::Add, a, &b); }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return arith(Op::Sub, a, &b); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return arith(Op::Mul, a, &b); }
  FieldElement operator-() const { return arith(Op::Neg, *this); }
  FieldElement inverse() const { return arith(Op::Inv, *this); }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.spec_ == b.spec_ && a.v_ == b.v_; }

 private:
  FieldSpec spec_;
  Storage v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace shelf

#endif  // SHELF_EXACTFIELD_HPP
