#pragma once

// Exact multivariate polynomials over the integers in edge indeterminates
// a_ij, keyed by sorted lists of (i, j) pairs.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rhp/big_int.hpp"
#include "rhp/forest.hpp"

namespace rhp {

using Variable = std::pair<NodeId, NodeId>;
using Monomial = std::vector<Variable>;  // sorted, repeats allowed

class EdgePolynomial {
 public:
  EdgePolynomial() = default;
  EdgePolynomial(long long constant);  // NOLINT(google-explicit-constructor)
  EdgePolynomial(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  static EdgePolynomial variable(NodeId i, NodeId j);
  static EdgePolynomial monomial(Monomial m, const BigInt& coefficient = 1);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Monomial& m) const;

  EdgePolynomial& operator+=(const EdgePolynomial& rhs);
  EdgePolynomial& operator-=(const EdgePolynomial& rhs);
  EdgePolynomial& operator*=(const EdgePolynomial& rhs);

  friend EdgePolynomial operator+(EdgePolynomial a, const EdgePolynomial& b) { return a += b; }
  friend EdgePolynomial operator-(EdgePolynomial a, const EdgePolynomial& b) { return a -= b; }
  friend EdgePolynomial operator*(const EdgePolynomial& a, const EdgePolynomial& b);
  friend EdgePolynomial operator-(EdgePolynomial a);

  friend bool operator==(const EdgePolynomial&, const EdgePolynomial&) = default;

  EdgePolynomial pow(unsigned exponent) const;

  BigInt evaluate(const std::function<BigInt(const Variable&)>& value) const;

  // e.g. "2*a01*a12 - a10"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  std::map<Monomial, BigInt> terms_;
};

Monomial multiply_monomials(const Monomial& a, const Monomial& b);

}  // namespace rhp

namespace Eigen {

template <>
struct NumTraits<rhp::EdgePolynomial> : GenericNumTraits<rhp::EdgePolynomial> {
  using Real = rhp::EdgePolynomial;
  using NonInteger = rhp::EdgePolynomial;
  using Literal = rhp::EdgePolynomial;
  using Nested = rhp::EdgePolynomial;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
};

}  // namespace Eigen
