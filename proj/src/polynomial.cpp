#include "flipsig/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flipsig {

namespace {

void strip_trailing_zeros(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Int content(const std::vector<Int>& c) {
  Int g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

using RatPoly = std::vector<Rat>;  // ascending coefficients, trailing zeros trimmed

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat_poly(const IntPolynomial& p) {
  RatPoly r(p.coeffs().size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = Rat(p.coeff(k));
  return r;
}

/// Remainder of a by b over Q; b nonzero.
RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return a;
}

IntPolynomial primitive_from_rat(const RatPoly& p) {
  if (p.empty()) return IntPolynomial();
  Int lcm = 1;
  for (const auto& q : p) {
    Int den = q.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> c(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    Rat v = p[k] * Rat(lcm);
    c[k] = v.get_num();
  }
  Int g = content(c);
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  if (c.back() < 0)
    for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  strip_trailing_zeros(c_);
}

IntPolynomial IntPolynomial::from_longs(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t k) {
  if (c == 0) return IntPolynomial();
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return IntPolynomial(std::move(d));
}

Rat IntPolynomial::evaluate(const Rat& t) const {
  Rat v = 0;
  for (std::size_t k = c_.size(); k-- > 0;) v = v * t + Rat(c_[k]);
  return v;
}

IntMatrix IntPolynomial::evaluate(const IntMatrix& m) const {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "polynomial of non-square matrix");
  IntMatrix v(m.rows(), m.rows());
  for (std::size_t k = c_.size(); k-- > 0;) {
    v = v * m;
    for (std::size_t i = 0; i < m.rows(); ++i) v.at(i, i) += c_[k];
  }
  return v;
}

IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<Int> c(std::max(x.c_.size(), y.c_.size()), Int(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coeff(k) + y.coeff(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y) {
  std::vector<Int> c(std::max(x.c_.size(), y.c_.size()), Int(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = x.coeff(k) - y.coeff(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
  if (x.is_zero() || y.is_zero()) return IntPolynomial();
  std::vector<Int> c(x.c_.size() + y.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (first) {
      if (c_[k] < 0) out << "-";
      first = false;
    } else {
      out << (c_[k] < 0 ? " - " : " + ");
    }
    Int mag = abs(c_[k]);
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPolynomial divide_exact(const IntPolynomial& x, const IntPolynomial& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (x.is_zero()) return IntPolynomial();
  if (x.degree() < y.degree())
    throw Error(ErrorCode::InvalidFactor, "division with nonzero remainder");
  RatPoly rem = to_rat_poly(x);
  RatPoly div = to_rat_poly(y);
  std::vector<Rat> q(x.degree() - y.degree() + 1, Rat(0));
  while (rem.size() >= div.size() && !rem.empty()) {
    Rat c = rem.back() / div.back();
    std::size_t shift = rem.size() - div.size();
    q[shift] = c;
    for (std::size_t j = 0; j < div.size(); ++j) rem[shift + j] -= c * div[j];
    trim(rem);
  }
  if (!rem.empty()) throw Error(ErrorCode::InvalidFactor, "division with nonzero remainder");
  std::vector<Int> qi(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k].get_den() != 1)
      throw Error(ErrorCode::InvalidFactor, "quotient is not an integer polynomial");
    qi[k] = q[k].get_num();
  }
  return IntPolynomial(std::move(qi));
}

IntPolynomial poly_gcd(const IntPolynomial& x, const IntPolynomial& y) {
  RatPoly a = to_rat_poly(x), b = to_rat_poly(y);
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_from_rat(a);
}

FactorList candidate_factors(const IntPolynomial& p) {
  FactorList out;
  out.remainder = IntPolynomial::monomial(1, 0);
  if (p.is_zero() || p.degree() == 0) return out;
  IntPolynomial g = poly_gcd(p, p.derivative());
  IntPolynomial sf = g.degree() == 0 ? p : divide_exact(p, g);
  if (sf.coeff(0) == 0) {
    out.factors.push_back(IntPolynomial::from_longs({0, 1}));
    std::vector<Int> c(sf.coeffs().begin() + 1, sf.coeffs().end());
    sf = IntPolynomial(std::move(c));
  }
  // Rational roots r = +-num/den with num | sf(0), den | leading coefficient.
  bool progress = true;
  while (progress && sf.degree() >= 1) {
    progress = false;
    Int a0 = abs(sf.coeff(0)), lead = abs(sf.leading());
    std::vector<Int> nums{1}, dens{1};
    for (Int d = 1; d * d <= a0; ++d)
      if (a0 % d == 0) {
        nums.push_back(d);
        nums.push_back(a0 / d);
      }
    for (Int d = 1; d * d <= lead; ++d)
      if (lead % d == 0) {
        dens.push_back(d);
        dens.push_back(lead / d);
      }
    std::sort(nums.begin(), nums.end());
    nums.erase(std::unique(nums.begin(), nums.end()), nums.end());
    std::sort(dens.begin(), dens.end());
    dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
    for (const Int& n : nums) {
      for (const Int& d : dens) {
        for (int s : {+1, -1}) {
          Rat r = make_rat(s * n, d);
          if (sf.evaluate(r) == 0) {
            IntPolynomial lin(std::vector<Int>{-r.get_num(), r.get_den()});
            out.factors.push_back(lin);
            sf = divide_exact(sf, lin);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  if (sf.degree() == 2) {
    out.factors.push_back(sf);  // no rational roots left, so irreducible over Q
  } else if (sf.degree() >= 3) {
    out.remainder = sf;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const IntPolynomial& x, const IntPolynomial& y) {
              if (x.degree() != y.degree()) return x.degree() < y.degree();
              for (std::size_t k = x.degree() + 1; k-- > 0;)
                if (x.coeff(k) != y.coeff(k)) return x.coeff(k) < y.coeff(k);
              return false;
            });
  return out;
}

IntPolynomial parse_polynomial(const std::string& text) {
  std::vector<Int> coeffs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_digits = [&]() -> std::string {
    std::string d;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      d += text[i++];
    return d;
  };
  auto add_coeff = [&](std::size_t k, const Int& v) {
    if (coeffs.size() <= k) coeffs.resize(k + 1, Int(0));
    coeffs[k] += v;
  };
  skip_ws();
  if (i >= text.size()) throw Error(ErrorCode::ParseError, "empty polynomial");
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' in polynomial");
    }
    first = false;
    std::string digits = parse_digits();
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    bool has_t = i < text.size() && (text[i] == 't' || text[i] == 'T');
    if (!has_t && digits.empty())
      throw Error(ErrorCode::ParseError, "expected a term in polynomial");
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    std::size_t exp = 0;
    if (has_t) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::string e = parse_digits();
        if (e.empty()) throw Error(ErrorCode::ParseError, "missing exponent");
        exp = std::stoul(e);
      }
    }
    add_coeff(exp, sign * coeff);
  }
  IntPolynomial p{std::move(coeffs)};
  if (p.is_zero()) throw Error(ErrorCode::ParseError, "zero polynomial");
  return p;
}

}  // namespace flipsig
