#ifndef ODDSIGN_PIPELINE_HPP
#define ODDSIGN_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "oddsign/balanced.hpp"
#include "oddsign/budget.hpp"
#include "oddsign/graph.hpp"
#include "oddsign/rational.hpp"
#include "oddsign/separation.hpp"
#include "oddsign/wheel.hpp"

namespace oddsign {

struct PipelineParams {
  int delta = 0;
  Rational wmax;
  BigInt f2;             // f(2, delta)
  int d = 0;             // 49δ + 4f(2,δ)δ − 4
  int d_clean = 0;       // 47δ + 2f(2,δ)δ − 2
  Rational c;            // 1 − 2^-k for the least admissible k
  int ladder_exponent = 0;
  BigInt big_delta;      // Δ(d)
  Rational tw_bound;     // Δ(d) / (1 − c)
  Rational wmax_ceiling; // wmax must stay below this for any c to work
  bool satisfiable = false;
};

BigInt delta_of(int d, int delta);  // d + dδ + … + dδ^d

// Smallest d from the main bound, then the least c on the 1 − 2^-k ladder
// meeting the headline inequality. satisfiable is false when wmax is at or
// above the ceiling.
PipelineParams params_for(int delta, const Rational& wmax);

// The inequality itself: (1−c) + [wmax + 3fδ2^δ(1−c) + 2(δ−1)2^δ(1−c)](δ+δ²) < 1/2.
bool headline_inequality(int delta, const Rational& wmax, const Rational& c);

enum class StageKind { clique_free, strong_forcer, twin_forcer, terminal, shortcut };

const char* to_string(StageKind k);

// One (bag, weights, budget) triple. Level 0 is the input graph.
struct Level {
  VertexSet bag;
  WeightAssignment w;
  int d = 0;
};

struct StageRecord {
  StageKind kind = StageKind::clique_free;
  int from_level = 0;
  int to_level = 0;                   // equals from_level when no bag was taken
  std::vector<Separation> collection; // light side first
  std::vector<int> anchors;
  int clique_size = 0;                // clique-free steps
  int forcer_class = -1;              // forcer steps
  int active_forcers = 0;
  std::string note;
};

struct LiftRecord {
  int from_level = 0;  // y lives in this level's bag
  VertexSet y;
  VertexSet lifted;    // separator of from_level − 1
  std::vector<int> centers;
  bool verified = false;
};

struct TerminalCheck {
  bool no_strong_forcer = false;
  bool no_terminal_twin = false;
  bool no_clique_cutset = false;
  bool no_star_cutset = false;
  bool rescued = false;  // a check failed and a 2-bounded separator was found instead
  bool all() const { return no_strong_forcer && no_terminal_twin && no_clique_cutset && no_star_cutset; }
};

struct DecompTrace {
  std::vector<Level> levels;
  std::vector<StageRecord> stages;
  std::vector<LiftRecord> lifts;
  std::optional<TerminalCheck> terminal;
  bool terminal_td_exact = false;
  int terminal_width = -1;
};

struct BalancedSeparatorCertificate {
  VertexSet y;        // pruned
  VertexSet lifted;   // end of the lift chain, before pruning
  std::vector<int> centers;
  Rational c;
  int d = 0;
  std::vector<VertexSet> components;
  std::vector<Rational> weights;
};

enum class PipelineMode {
  eager,  // test for a 2-bounded separator before every step
  lazy,   // search only when a lemma conclusion fails on the instance
};

const char* to_string(PipelineMode m);

struct PipelineOptions {
  PipelineMode mode = PipelineMode::eager;
  bool waive_membership = false;
  int treewidth_cap = 20;
  std::uint64_t work_budget = kDefaultWorkBudget;
};

enum class RunStatus { certified, budget_exhausted, assertion_failed, capped };

const char* to_string(RunStatus s);

struct PipelineResult {
  RunStatus status = RunStatus::assertion_failed;
  std::optional<BalancedSeparatorCertificate> certificate;
  DecompTrace trace;
  std::string route;   // "terminal" or the shortcut reason
  int source_level = 0;
  std::string failure;

  bool ok() const { return status == RunStatus::certified; }
};

// Outcome of a single decomposition phase run on trace.levels.back().
struct PhaseOutcome {
  enum Status { completed, shortcut, budget_exhausted } status = completed;
  int level = 0;
  VertexSet y;
  std::vector<int> centers;
  std::string reason;
};

// Iterated minimal-clique-separation central bags until the bag has no
// clique cutset. Throws AssertionFailure when a guaranteed property fails
// and no separator rescues the step.
PhaseOutcome clique_free_bag(const Graph& g, DecompTrace& trace, const Rational& c, const PipelineOptions& opts,
                             WorkBudget& budget);

// Forcer-class central bags interleaved with clique-free steps until no
// forcer of the family is active.
PhaseOutcome forcer_decomposition(const Graph& g, DecompTrace& trace, const Rational& c, ForcerFamily family,
                                  const PipelineOptions& opts, WorkBudget& budget);

// Throws DataError when g is disconnected or w does not total 1, and
// AssertionFailure carrying the witness when g is outside the class (unless
// waived). Every other outcome is reported in the result.
PipelineResult compute_balanced_separator(const Graph& g, const WeightAssignment& w, const Rational& c, int d,
                                          const PipelineOptions& opts = {});

struct TightResult {
  PipelineResult result;
  int d = 0;
  std::vector<RunStatus> attempts;  // per d from 1
};

// Least d for which the driver returns a certificate.
TightResult compute_tight(const Graph& g, const WeightAssignment& w, const Rational& c, const PipelineOptions& opts = {});

struct Sandwich {
  int sep_star = 0;
  int tw = 0;
  bool ok = false;
};

// sep*_c <= tw + 1 <= sep*_c / (1 − c), both sides by exhaustion.
Sandwich sep_tw_sandwich_check(const Graph& g, const Rational& c);

}  // namespace oddsign

#endif  // ODDSIGN_PIPELINE_HPP
