#ifndef ODDSIGN_WHEEL_HPP
#define ODDSIGN_WHEEL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddsign/budget.hpp"
#include "oddsign/detect.hpp"
#include "oddsign/graph.hpp"

namespace oddsign {

enum class WheelKind { universal, twin, short_pyramid, proper };

const char* to_string(WheelKind k);

struct WheelClass {
  WheelKind kind = WheelKind::proper;
  int clone = -1;           // twin: middle spoke
  int x1 = -1, x2 = -1;     // short pyramid: the adjacent spoke pair
  int y = -1;               // short pyramid: the remaining spoke
  std::vector<PathRecord> sectors;

  // A universal wheel is a proper wheel.
  bool proper() const { return kind == WheelKind::proper || kind == WheelKind::universal; }
};

// Sectors run between consecutive spokes in hole order, starting from the
// first spoke met when walking the canonical cycle.
WheelClass classify_wheel(const Graph& g, const WheelRecord& w);

struct Richness {
  bool x_rich = false;
  bool x2_rich = false;
  bool terminal = true;
};

// Richness of a twin wheel (hole, x) with clone x2, paths taken inside mask.
Richness twin_richness(const Graph& g, VertexSet mask, const HoleRecord& hole, int x, int x2);

enum class ForcerKind { proper_wheel, short_pyramid, twin_wheel };

const char* to_string(ForcerKind k);

struct ForcerRecord {
  HoleRecord hole;
  VertexSet center;
  ForcerKind kind = ForcerKind::proper_wheel;
  int hub = -1;
  int clone = -1;         // twin: the clone, on whose side the wheel is poor
  int y = -1;             // short pyramid: second centre vertex
  bool universal = false;
  bool swapped = false;   // twin: emitted from the symmetric wheel

  bool strong() const { return kind != ForcerKind::twin_wheel; }
  // Active for a bag when both the hole and the centre lie inside it.
  bool active_in(VertexSet bag) const { return hole.members().subset_of(bag) && center.subset_of(bag); }
};

struct CutsetCertificate {
  VertexSet cutset;
  VertexSet side_a;
  VertexSet side_b;
  std::string rule;  // which construction produced it
};

// True iff both sides are nonempty, disjoint from each other and the cutset,
// and fall into distinct single components of mask minus the cutset.
bool verify_certificate(const Graph& g, VertexSet mask, const CutsetCertificate& cert);

// Builds and verifies the cutset guaranteed for a forcer. Throws
// AssertionFailure when the component check fails.
CutsetCertificate forcer_cutset(const Graph& g, VertexSet mask, const ForcerRecord& f);

enum class ForcerFamily { strong, twin };

std::vector<ForcerRecord> enumerate_forcers(const Graph& g, VertexSet mask, ForcerFamily family, WorkBudget& budget);

// Every wheel (hole plus hub with at least three spokes) inside mask.
std::vector<WheelRecord> enumerate_wheels(const Graph& g, VertexSet mask, WorkBudget& budget);

struct PoorImplication {
  bool hypothesis = false;
  bool conclusion = false;
  bool holds() const { return !hypothesis || conclusion; }
};

// Hypothesis: N(u) meets hole+x in exactly {x, x1, x1'} for one labelling of
// the twin spokes; conclusion: the wheel is x2-poor.
PoorImplication check_u_x_poor_predicate(const Graph& g, VertexSet mask, const HoleRecord& hole, int x, int u);

// For a non-terminal twin wheel: a path P leaving x and a path Q leaving the
// clone, each landing on an edge of the hole away from the spokes, with
// interiors anticomplete to hole+x.
std::optional<std::pair<PathRecord, PathRecord>> check_paths_shapes_predicate(const Graph& g, VertexSet mask,
                                                                              const HoleRecord& hole, int x);

}  // namespace oddsign

#endif  // ODDSIGN_WHEEL_HPP
