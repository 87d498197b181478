#include "oddsign/rational.hpp"

#include <algorithm>
#include <cctype>

#include "oddsign/errors.hpp"

namespace oddsign {

namespace {

std::string trim(const std::string& s) {
  auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
  return b < e ? std::string(b, e) : std::string();
}

BigInt parse_integer(const std::string& s, const std::string& whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw DataError("malformed rational: '" + whole + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw DataError("malformed rational: '" + whole + "'");
  }
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t, text));
  BigInt p = parse_integer(trim(t.substr(0, slash)), text);
  BigInt q = parse_integer(trim(t.substr(slash + 1)), text);
  if (q == 0) throw DataError("zero denominator: '" + text + "'");
  return Rational(p, q);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

WeightAssignment WeightAssignment::uniform(int n, VertexSet domain) {
  WeightAssignment w(n, domain);
  if (domain.empty()) return w;
  Rational each(1, domain.size());
  for (int v : domain) w.w_[v] = each;
  return w;
}

void WeightAssignment::set(int v, const Rational& value) {
  if (value < 0) throw DataError("negative weight at vertex " + std::to_string(v));
  w_[v] = value;
}

void WeightAssignment::add(int v, const Rational& value) { set(v, w_[v] + value); }

Rational WeightAssignment::sum(VertexSet s) const {
  Rational total = 0;
  for (int v : s & domain_) total += w_[v];
  return total;
}

Rational WeightAssignment::max() const {
  Rational best = 0;
  for (int v : domain_) best = std::max(best, w_[v]);
  return best;
}

WeightAssignment WeightAssignment::restricted(VertexSet sub) const {
  WeightAssignment out(host_order(), sub & domain_);
  for (int v : out.domain_) out.w_[v] = w_[v];
  return out;
}

}  // namespace oddsign
