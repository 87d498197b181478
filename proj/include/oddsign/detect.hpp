#ifndef ODDSIGN_DETECT_HPP
#define ODDSIGN_DETECT_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "oddsign/budget.hpp"
#include "oddsign/graph.hpp"

namespace oddsign {

enum class ThreePathKind { theta, prism, pyramid };

const char* to_string(ThreePathKind k);

struct KindSet {
  bool theta = false;
  bool prism = false;
  bool pyramid = false;

  static KindSet all() { return {true, true, true}; }
  static KindSet only(ThreePathKind k);
  bool has(ThreePathKind k) const;
};

struct ThreePathConfig {
  ThreePathKind kind = ThreePathKind::theta;
  std::array<PathRecord, 3> paths;
  // theta: a, b. pyramid: a, b1, b2, b3. prism: a1, a2, a3, b1, b2, b3.
  std::vector<int> frame;

  VertexSet members() const;
};

struct WheelRecord {
  HoleRecord hole;
  int hub = -1;
  VertexSet spokes;  // hub neighbours on the hole
};

template <typename T>
struct Detection {
  Outcome outcome = Outcome::absent;
  std::optional<T> witness;

  bool found() const { return outcome == Outcome::found; }
};

enum class Violation { none, c4, theta, prism, even_wheel };

const char* to_string(Violation v);

struct MembershipResult {
  Outcome outcome = Outcome::absent;  // found means a violation was found
  Violation violation = Violation::none;
  std::optional<VertexSet> c4;
  std::optional<ThreePathConfig> config;
  std::optional<WheelRecord> wheel;

  bool member() const { return outcome == Outcome::absent; }
  bool capped() const { return outcome == Outcome::capped; }
};

// Lexicographically least induced 4-cycle.
Detection<VertexSet> find_c4(const Graph& g, VertexSet mask);
Detection<VertexSet> find_c4(const Graph& g);

// Searched in the order theta, prism, pyramid; frames in increasing index
// order, first witness wins.
Detection<ThreePathConfig> find_theta_prism_pyramid(const Graph& g, KindSet kinds, WorkBudget& budget, VertexSet mask);
Detection<ThreePathConfig> find_theta_prism_pyramid(const Graph& g, KindSet kinds, WorkBudget& budget);

Detection<WheelRecord> find_even_wheel(const Graph& g, WorkBudget& budget, VertexSet mask);
Detection<WheelRecord> find_even_wheel(const Graph& g, WorkBudget& budget);

// Checks C4, theta, prism, even wheel in that order.
MembershipResult is_c4free_odd_signable(const Graph& g, WorkBudget& budget, VertexSet mask);
MembershipResult is_c4free_odd_signable(const Graph& g, WorkBudget& budget);
MembershipResult is_c4free_odd_signable(const Graph& g);

// Visits each hole of length in [4, max_len] once, anchored at its least
// vertex. The visitor returns false to stop. Throws CapExceeded.
void enumerate_holes(const Graph& g, int max_len, const std::function<bool(const HoleRecord&)>& visitor,
                     WorkBudget& budget, VertexSet mask);
std::vector<HoleRecord> all_holes(const Graph& g, VertexSet mask, WorkBudget& budget, int max_len = kMaxVertices);

// Enumerates induced s-t paths whose interior lies in `allowed`.
void enumerate_induced_paths(const Graph& g, int s, int t, VertexSet allowed,
                             const std::function<bool(const std::vector<int>&)>& visitor, WorkBudget& budget);

// Post-hoc checks against the structure definitions.
bool validate_three_path(const Graph& g, const ThreePathConfig& cfg);
bool validate_wheel(const Graph& g, const WheelRecord& w);

}  // namespace oddsign

#endif  // ODDSIGN_DETECT_HPP
