#ifndef ODDSIGN_RATIONAL_HPP
#define ODDSIGN_RATIONAL_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddsign/graph.hpp"

namespace oddsign {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", "p", and surrounding whitespace. Throws DataError.
Rational parse_rational(const std::string& text);
// Always "p/q" with q > 0, reduced.
std::string format_rational(const Rational& r);

// Exact vertex weights on a host graph. Entries outside the domain are
// zero; the domain records which vertices the assignment ranges over.
class WeightAssignment {
 public:
  WeightAssignment() = default;
  WeightAssignment(int n, VertexSet domain) : w_(n), domain_(domain) {}

  static WeightAssignment uniform(int n, VertexSet domain);
  static WeightAssignment uniform(const Graph& g) { return uniform(g.order(), g.vertices()); }

  const Rational& operator[](int v) const { return w_[v]; }
  void set(int v, const Rational& value);
  void add(int v, const Rational& value);

  VertexSet domain() const { return domain_; }
  int host_order() const { return static_cast<int>(w_.size()); }
  Rational sum(VertexSet s) const;
  Rational total() const { return sum(domain_); }
  Rational max() const;
  // Same values restricted to a sub-domain.
  WeightAssignment restricted(VertexSet sub) const;

 private:
  std::vector<Rational> w_;
  VertexSet domain_;
};

}  // namespace oddsign

#endif  // ODDSIGN_RATIONAL_HPP
