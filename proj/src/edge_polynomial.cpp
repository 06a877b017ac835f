#include "rhp/edge_polynomial.hpp"

#include <algorithm>

namespace rhp {

EdgePolynomial::EdgePolynomial(long long constant) : EdgePolynomial(BigInt(constant)) {}

EdgePolynomial::EdgePolynomial(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

EdgePolynomial EdgePolynomial::variable(NodeId i, NodeId j) { return monomial({{i, j}}); }

EdgePolynomial EdgePolynomial::monomial(Monomial m, const BigInt& coefficient) {
  std::sort(m.begin(), m.end());
  EdgePolynomial p;
  p.add_term(m, coefficient);
  return p;
}

BigInt EdgePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void EdgePolynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

EdgePolynomial& EdgePolynomial::operator+=(const EdgePolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

EdgePolynomial& EdgePolynomial::operator-=(const EdgePolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgePolynomial operator*(const EdgePolynomial& a, const EdgePolynomial& b) {
  EdgePolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
  }
  return out;
}

EdgePolynomial& EdgePolynomial::operator*=(const EdgePolynomial& rhs) { return *this = *this * rhs; }

EdgePolynomial operator-(EdgePolynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

EdgePolynomial EdgePolynomial::pow(unsigned exponent) const {
  EdgePolynomial result(1);
  EdgePolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

BigInt EdgePolynomial::evaluate(const std::function<BigInt(const Variable&)>& value) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt term = c;
    for (const auto& v : m) term *= value(v);
    total += term;
  }
  return total;
}

std::string EdgePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    const bool show_coeff = m.empty() || mag != 1;
    if (show_coeff) s += mag.str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (show_coeff || i > 0) s += "*";
      s += "a" + std::to_string(m[i].first) + "_" + std::to_string(m[i].second);
    }
  }
  return s;
}

}  // namespace rhp
