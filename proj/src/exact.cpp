#include "tropvis/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "tropvis/errors.hpp"

namespace tropvis {
namespace {

const Rational kZero(0);
constexpr unsigned long kTrialPrimeBound = 1000;

// log(|z|) without overflowing double for huge integers.
double log_abs(const mpz_class& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_rational(const Rational& r) {
  return log_abs(r.get_num()) - log_abs(r.get_den());
}

Rational rational_pow(const Rational& r, unsigned k) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), k);
  return out;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Rational from_double(double d) {
  Rational r(d);
  r.canonicalize();
  return r;
}

// Bounds of sum_e c_e * t^e for t in [lo, hi], lo > 0.
std::pair<Rational, Rational> evaluate_bounds(const std::vector<Rational>& c, const Rational& lo,
                                              const Rational& hi) {
  Rational low(0), high(0), plo(1), phi(1);
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (e > 0) {
      plo *= lo;
      phi *= hi;
    }
    int s = sgn(c[e]);
    if (s > 0) {
      low += c[e] * plo;
      high += c[e] * phi;
    } else if (s < 0) {
      low += c[e] * phi;
      high += c[e] * plo;
    }
  }
  return {low, high};
}

void bisect(const Rational& base, unsigned degree, Rational& lo, Rational& hi, int steps) {
  for (int s = 0; s < steps; ++s) {
    Rational mid = (lo + hi) / 2;
    if (rational_pow(mid, degree) <= base) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    auto is_integer = [](const std::string& s, bool allow_sign) {
      std::size_t start = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      return s.size() > start &&
             std::all_of(s.begin() + static_cast<long>(start), s.end(),
                         [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    };
    std::string p = text.substr(0, slash);
    std::string q = text.substr(slash + 1);
    if (!is_integer(p, true) || !is_integer(q, false)) return std::nullopt;
    if (p[0] == '+') p.erase(0, 1);
    mpz_class den(q, 10);
    if (sgn(den) == 0) return std::nullopt;
    Rational r(mpz_class(p, 10), den);
    r.canonicalize();
    return r;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return std::nullopt;
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return std::nullopt;
    ++pos;
    std::string exp_text = text.substr(pos);
    if (exp_text.empty()) return std::nullopt;
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != exp_text.size() || std::labs(exponent) > 10000) return std::nullopt;
  }
  mpz_class num(digits, 10);
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  Rational r = shift >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::optional<Rational> rational_root(const Rational& r, unsigned n) {
  if (n == 1) return r;
  if (sgn(r) < 0) return std::nullopt;
  if (sgn(r) == 0) return Rational(0);
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), n) == 0) return std::nullopt;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

RadicalField::RadicalField(Rational base, unsigned degree)
    : base_(std::move(base)), degree_(degree) {
  double log_theta = log_rational(base_) / degree_;
  approx_ = std::exp(static_cast<long double>(log_theta));
  double width = 1e-12;
  for (;;) {
    lower_ = from_double(std::exp(log_theta) * (1 - width));
    upper_ = from_double(std::exp(log_theta) * (1 + width));
    if (rational_pow(lower_, degree_) < base_ && rational_pow(upper_, degree_) > base_) break;
    width *= 16;
  }
  bisect(base_, degree_, lower_, upper_, 40);
  approx_ = static_cast<long double>(Rational((lower_ + upper_) / 2).get_d());
}

std::string RadicalField::power_string(unsigned exponent) const {
  std::string b = base_.get_str();
  if (base_.get_den() != 1) b = "(" + b + ")";
  return b + "^(" + std::to_string(exponent) + "/" + std::to_string(degree_) + ")";
}

Exact::Exact(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

void Exact::normalize() {
  for (auto& c : c_) c.canonicalize();
  if (!field_) {
    c_.resize(1);
    return;
  }
  c_.resize(field_->degree());
  bool rational = std::all_of(c_.begin() + 1, c_.end(), [](const Rational& c) { return sgn(c) == 0; });
  if (rational) {
    field_.reset();
    c_.resize(1);
  }
}

const Rational& Exact::coeff(std::size_t e) const { return e < c_.size() ? c_[e] : kZero; }

Exact Exact::root(const Rational& w, unsigned n) {
  if (sgn(w) < 0) throw DomainError("root of a negative number");
  if (n == 0) throw UsageError("zeroth root");
  if (sgn(w) == 0) return Exact();
  // w^(1/n) = coef * base^(1/degree) with base a positive integer free of
  // small degree-th powers and not a p-th power for any prime p | degree.
  Rational base = w;
  base.canonicalize();
  Rational coef(1);
  unsigned degree = n;
  for (bool changed = true; changed && degree > 1;) {
    changed = false;
    for (unsigned p : prime_factors(degree)) {
      if (auto r = rational_root(base, p)) {
        base = *r;
        degree /= p;
        changed = true;
        break;
      }
    }
    if (changed || degree == 1) continue;
    if (base.get_den() != 1) {
      mpz_class den = base.get_den();
      mpz_class scaled;
      mpz_pow_ui(scaled.get_mpz_t(), den.get_mpz_t(), degree - 1);
      base = Rational(base.get_num() * scaled);
      coef /= den;
      changed = true;
      continue;
    }
    mpz_class num = base.get_num();
    mpz_class out(1);
    for (unsigned long p = 2; p < kTrialPrimeBound && p <= num; ++p) {
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, degree);
      while (mpz_divisible_p(num.get_mpz_t(), pk.get_mpz_t())) {
        num /= pk;
        out *= p;
      }
    }
    if (out != 1) {
      base = Rational(num);
      coef *= out;
      changed = true;
    }
  }
  coef.canonicalize();
  if (degree == 1) return Exact(Rational(base * coef));
  auto field = std::make_shared<const RadicalField>(base, degree);
  std::vector<Rational> c(degree);
  c[1] = coef;
  return Exact(std::move(field), std::move(c));
}

const Rational& Exact::rational() const {
  if (field_) throw UsageError("value " + to_string() + " is not rational");
  return c_[0];
}

std::optional<std::pair<Rational, unsigned>> Exact::as_monomial() const {
  std::optional<std::pair<Rational, unsigned>> out;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (sgn(c_[e]) == 0) continue;
    if (out) return std::nullopt;
    out.emplace(c_[e], static_cast<unsigned>(e));
  }
  if (!out) out.emplace(Rational(0), 0U);
  return out;
}

int Exact::sign() const {
  if (!field_) return sgn(c_[0]);
  if (auto mono = as_monomial()) return sgn(mono->first);
  Rational lo = field_->lower();
  Rational hi = field_->upper();
  for (;;) {
    auto [low, high] = evaluate_bounds(c_, lo, hi);
    if (sgn(low) > 0) return 1;
    if (sgn(high) < 0) return -1;
    // Nonzero by irreducibility of t^k - b, so refinement terminates.
    bisect(field_->base(), field_->degree(), lo, hi, 32);
  }
}

namespace {

// Coefficients of x in the field `to`, when Q(theta_x) embeds as
// theta_x = r * theta_to^m.
std::optional<std::vector<Rational>> embed(const FieldPtr& from, const std::vector<Rational>& c,
                                           const FieldPtr& to) {
  if (!from) {
    std::vector<Rational> out(to->degree());
    out[0] = c[0];
    return out;
  }
  if (from == to || *from == *to) return c;
  if (to->degree() % from->degree() != 0) return std::nullopt;
  const unsigned m = to->degree() / from->degree();
  auto r = rational_root(from->base() / to->base(), from->degree());
  if (!r) return std::nullopt;
  std::vector<Rational> out(to->degree());
  Rational rp(1);
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (e > 0) rp *= *r;
    out[e * m] = c[e] * rp;
  }
  return out;
}

struct Unified {
  FieldPtr field;
  std::vector<Rational> a;
  std::vector<Rational> b;
};

Unified unify(const FieldPtr& fa, const std::vector<Rational>& ca, const FieldPtr& fb,
              const std::vector<Rational>& cb) {
  const FieldPtr& big = (!fb || (fa && fa->degree() >= fb->degree())) ? fa : fb;
  auto ea = embed(fa, ca, big);
  auto eb = embed(fb, cb, big);
  if (!ea || !eb) {
    throw ModeMismatch("exact values from different radical extensions " + fa->power_string(1) +
                       " and " + fb->power_string(1) + " cannot be combined");
  }
  return {big, std::move(*ea), std::move(*eb)};
}

}  // namespace

Exact operator+(const Exact& a, const Exact& b) {
  if (!a.field_ && !b.field_) return Exact(Rational(a.c_[0] + b.c_[0]));
  Unified u = unify(a.field_, a.c_, b.field_, b.c_);
  for (std::size_t e = 0; e < u.a.size(); ++e) u.a[e] += u.b[e];
  return Exact(std::move(u.field), std::move(u.a));
}

Exact Exact::operator-() const {
  Exact out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Exact operator-(const Exact& a, const Exact& b) { return a + (-b); }

Exact operator*(const Exact& a, const Exact& b) {
  if (!a.field_ && !b.field_) return Exact(Rational(a.c_[0] * b.c_[0]));
  if (!a.field_ || !b.field_) {
    const Exact& scalar = a.field_ ? b : a;
    const Exact& poly = a.field_ ? a : b;
    std::vector<Rational> c(poly.c_.size());
    for (std::size_t e = 0; e < c.size(); ++e) c[e] = poly.c_[e] * scalar.c_[0];
    return Exact(poly.field_, std::move(c));
  }
  Unified u = unify(a.field_, a.c_, b.field_, b.c_);
  const std::size_t k = u.field->degree();
  std::vector<Rational> wide(2 * k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(u.a[i]) == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(u.b[j]) == 0) continue;
      wide[i + j] += u.a[i] * u.b[j];
    }
  }
  // theta^k = base
  std::vector<Rational> c(k);
  for (std::size_t e = 0; e < wide.size(); ++e) {
    if (e < k) {
      c[e] += wide[e];
    } else {
      c[e - k] += wide[e] * u.field->base();
    }
  }
  return Exact(std::move(u.field), std::move(c));
}

Exact Exact::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (!field_) return Exact(Rational(1 / c_[0]));
  const std::size_t k = field_->degree();
  if (auto mono = as_monomial()) {
    // (c theta^e)^-1 = theta^(k-e) / (c * base)
    std::vector<Rational> c(k);
    c[k - mono->second] = 1 / (mono->first * field_->base());
    return Exact(field_, std::move(c));
  }
  // Solve M y = e_0 where column j of M holds the coefficients of this * theta^j.
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1));
  std::vector<Rational> basis(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::fill(basis.begin(), basis.end(), Rational(0));
    basis[j] = 1;
    Exact col = *this * Exact(field_, basis);
    for (std::size_t i = 0; i < k; ++i) m[i][j] = col.coeff(i);
  }
  m[0][k] = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && sgn(m[piv][col]) == 0) ++piv;
    if (piv == k) throw DomainError("singular element in radical field");
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (std::size_t j = col; j <= k; ++j) m[col][j] *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = col; j <= k; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<Rational> y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = m[i][k];
  return Exact(field_, std::move(y));
}

bool operator==(const Exact& a, const Exact& b) {
  if (!a.field_ && !b.field_) return a.c_[0] == b.c_[0];
  if (!a.field_ || !b.field_) return false;  // normalized: one rational, one not
  Unified u = unify(a.field_, a.c_, b.field_, b.c_);
  return u.a == u.b;
}

std::strong_ordering operator<=>(const Exact& a, const Exact& b) {
  if (!a.field_ && !b.field_) {
    int c = cmp(a.c_[0], b.c_[0]);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

long double Exact::to_long_double() const {
  if (!field_) return static_cast<long double>(c_[0].get_d());
  long double sum = 0, p = 1;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (e > 0) p *= field_->approx();
    sum += static_cast<long double>(c_[e].get_d()) * p;
  }
  return sum;
}

double Exact::log() const {
  int s = sign();
  if (s < 0) throw DomainError("log of a negative value");
  if (s == 0) return -std::numeric_limits<double>::infinity();
  if (!field_) return log_rational(c_[0]);
  if (auto mono = as_monomial()) {
    return log_rational(mono->first) +
           static_cast<double>(mono->second) * log_rational(field_->base()) / field_->degree();
  }
  return static_cast<double>(std::log(to_long_double()));
}

std::string Exact::to_string() const {
  if (!field_) return c_[0].get_str();
  std::string out;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (sgn(c_[e]) == 0) continue;
    std::string term;
    if (e == 0) {
      term = c_[e].get_str();
    } else if (c_[e] == 1) {
      term = field_->power_string(static_cast<unsigned>(e));
    } else if (c_[e] == -1) {
      term = "-" + field_->power_string(static_cast<unsigned>(e));
    } else {
      term = c_[e].get_str() + "*" + field_->power_string(static_cast<unsigned>(e));
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Exact pow(const Exact& a, unsigned k) {
  Exact result = Exact::one();
  Exact base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Exact nth_root(const Exact& w, unsigned k) {
  if (k == 1) return w;
  if (w.sign() < 0) throw DomainError("root of a negative number");
  if (w.is_rational()) return Exact::root(w.rational(), k);
  // w = c theta^f in Q(theta), theta^d = b; look for r theta^e with
  // (r theta^e)^k = w, i.e. e*k = f + d*m and r^k b^m = c.
  auto mono = w.as_monomial();
  if (mono) {
    const auto& f = *w.field();
    const long d = f.degree();
    for (long e = 0; e < d; ++e) {
      long ek = e * static_cast<long>(k);
      long diff = ek - static_cast<long>(mono->second);
      if (diff < 0 || diff % d != 0) continue;
      long m = diff / d;
      Rational target = mono->first / rational_pow(f.base(), static_cast<unsigned>(m));
      if (auto r = rational_root(target, k)) {
        return Exact(*r) * pow(Exact::root(f.base(), f.degree()), static_cast<unsigned>(e));
      }
    }
    // (c theta^f)^(1/k) = (c^d b^f)^(1/(d k)), a fresh radical.
    if (sgn(mono->first) > 0) {
      Rational radicand = rational_pow(mono->first, static_cast<unsigned>(d)) *
                          rational_pow(f.base(), mono->second);
      return Exact::root(radicand, static_cast<unsigned>(d) * k);
    }
  }
  throw ExactRootUnavailable("the " + std::to_string(k) + "-th root of " + w.to_string());
}

}  // namespace tropvis
