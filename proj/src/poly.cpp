#include "cayley/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cayley {

Poly::Poly(Rational c) {
  if (!cayley::is_zero(c)) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

void Poly::trim() {
  while (!coeffs_.empty() && cayley::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (cayley::is_zero(coeffs_[i])) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& c) const {
  std::vector<Rational> r = coeffs_;
  for (auto& x : r) x *= c;
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return scaled(1 / Rational(leading()));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(c));
}

void Poly::divmod(const Poly& num, const Poly& den, Poly* q, Poly* r) {
  if (den.is_zero()) throw std::invalid_argument("poly division by zero");
  std::vector<Rational> rem = num.coeffs_;
  const int dd = den.degree();
  const Rational inv = 1 / Rational(den.leading());
  std::vector<Rational> quot;
  if (static_cast<int>(rem.size()) - 1 >= dd) quot.assign(rem.size() - dd, Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (cayley::is_zero(rem[i])) continue;
    const Rational f = rem[i] * inv;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs_[j];
  }
  if (q) *q = Poly(std::move(quot));
  if (r) *r = Poly(std::move(rem));
}

Poly Poly::exact_div(const Poly& den) const {
  Poly q, r;
  divmod(*this, den, &q, &r);
  if (!r.is_zero()) throw std::runtime_error("exact_div: nonzero remainder");
  return q;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (cayley::is_zero(coeffs_[i])) continue;
    if (!first) out << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    Rational a = first ? coeffs_[i] : Rational(abs(coeffs_[i]));
    if (i == 0 || a != 1) out << a.get_str();
    if (i > 0) {
      if (a != 1 || i == 0) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r;
    Poly::divmod(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return p.monic();
  Poly g = poly_gcd(p, p.derivative());
  return p.exact_div(g).monic();
}

namespace {

int sign_changes(const std::vector<Rational>& seq) {
  int changes = 0;
  int prev = 0;
  for (const auto& v : seq) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const Poly& p) {
  Poly q = squarefree_part(p);
  if (q.is_zero() || q.is_constant()) return 0;
  if (q.degree() == 1) return 1;
  // Sturm chain, signs at -inf and +inf from leading terms.
  std::vector<Poly> chain = {q, q.derivative()};
  while (!chain.back().is_zero()) {
    Poly r;
    Poly::divmod(chain[chain.size() - 2], chain.back(), nullptr, &r);
    chain.push_back(-r);
  }
  chain.pop_back();
  std::vector<Rational> at_minus, at_plus;
  for (const Poly& f : chain) {
    if (f.is_zero()) continue;
    const int d = f.degree();
    at_plus.push_back(f.leading());
    at_minus.push_back((d % 2 == 0) ? f.leading() : Rational(-f.leading()));
  }
  return sign_changes(at_minus) - sign_changes(at_plus);
}

namespace {

std::vector<mpz_class> divisors_bounded(mpz_class n, bool* complete) {
  // Divisors via trial division; gives up (complete=false) past the bound,
  // returning the divisors built from the small prime part only.
  *complete = true;
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class d = 2;
  const long bound = 1000000;
  while (d * d <= n && d <= bound) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (n <= bound * static_cast<long>(bound)) {
      fac.push_back({n, 1});
    } else {
      *complete = false;
    }
  }
  std::vector<mpz_class> divs = {1};
  for (const auto& [p, e] : fac) {
    const size_t sz = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  Poly q = squarefree_part(p);
  if (q.is_zero() || q.is_constant()) return roots;

  // Strip t = 0 roots.
  std::vector<Rational> c = q.coeffs();
  size_t shift = 0;
  while (shift < c.size() && is_zero(c[shift])) ++shift;
  if (shift > 0) {
    roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + shift);
  }
  q = Poly(c);
  if (q.is_constant()) return roots;

  // Clear denominators to a primitive integer polynomial.
  mpz_class lcm = 1;
  for (const auto& a : q.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  std::vector<mpz_class> ic(q.coeffs().size());
  for (size_t i = 0; i < ic.size(); ++i) ic[i] = q.coeffs()[i].get_num() * (lcm / q.coeffs()[i].get_den());
  mpz_class content = 0;
  for (const auto& a : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
  if (content > 1) {
    for (auto& a : ic) a /= content;
  }

  bool c0_ok = true, cn_ok = true;
  const std::vector<mpz_class> ps = divisors_bounded(ic.front(), &c0_ok);
  const std::vector<mpz_class> qs = divisors_bounded(ic.back(), &cn_ok);
  if (!c0_ok || !cn_ok) return roots;  // candidate set incomplete; report none beyond t=0

  for (const auto& num : ps) {
    for (const auto& den : qs) {
      for (int s = -1; s <= 1; s += 2) {
        Rational cand(s * num, den);
        cand.canonicalize();
        if (is_zero(q.eval(cand))) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace cayley
