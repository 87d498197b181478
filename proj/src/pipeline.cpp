#include "oddsign/pipeline.hpp"

#include <algorithm>
#include <set>

#include "oddsign/detect.hpp"
#include "oddsign/laminar.hpp"
#include "oddsign/oracle.hpp"

namespace oddsign {

const char* to_string(StageKind k) {
  switch (k) {
    case StageKind::clique_free: return "clique_free";
    case StageKind::strong_forcer: return "strong_forcer";
    case StageKind::twin_forcer: return "twin_forcer";
    case StageKind::terminal: return "terminal";
    case StageKind::shortcut: return "shortcut";
  }
  return "?";
}

const char* to_string(PipelineMode m) { return m == PipelineMode::eager ? "eager" : "lazy"; }

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::certified: return "certified";
    case RunStatus::budget_exhausted: return "budget_exhausted";
    case RunStatus::assertion_failed: return "assertion_failed";
    case RunStatus::capped: return "capped";
  }
  return "?";
}

BigInt delta_of(int d, int delta) {
  BigInt sum = 0, power = 1;
  for (int i = 0; i <= d; ++i) {
    sum += power;
    power *= delta;
  }
  return sum * d;
}

namespace {

Rational pow2(int k) { return Rational(BigInt(1) << k); }

Rational k_constant(int delta, const BigInt& f2) {
  return Rational(3 * f2 * delta) * pow2(delta) + Rational(2 * (delta - 1)) * pow2(delta);
}

}  // namespace

bool headline_inequality(int delta, const Rational& wmax, const Rational& c) {
  BigInt f2 = f_bound(2, delta);
  Rational t = 1 - c;
  Rational s = delta + delta * delta;
  return t + (wmax + k_constant(delta, f2) * t) * s < Rational(1, 2);
}

PipelineParams params_for(int delta, const Rational& wmax) {
  if (delta < 1) throw std::invalid_argument("params_for: delta must be positive");
  PipelineParams p;
  p.delta = delta;
  p.wmax = wmax;
  p.f2 = f_bound(2, delta);
  int f2 = static_cast<int>(p.f2);
  p.d = 49 * delta + 4 * f2 * delta - 4;
  p.d_clean = 47 * delta + 2 * f2 * delta - 2;
  Rational s = delta + delta * delta;
  p.wmax_ceiling = 1 / (2 * s);
  p.big_delta = delta_of(p.d, delta);
  p.satisfiable = wmax < p.wmax_ceiling;
  if (!p.satisfiable) return p;
  for (int k = 1;; ++k) {
    Rational c = 1 - 1 / pow2(k);
    if (headline_inequality(delta, wmax, c)) {
      p.c = c;
      p.ladder_exponent = k;
      break;
    }
  }
  p.tw_bound = Rational(p.big_delta) * pow2(p.ladder_exponent);
  return p;
}

namespace {

struct Context {
  const Graph& g;
  DecompTrace& trace;
  const Rational& c;
  const PipelineOptions& opts;
  WorkBudget& budget;

  Rational eps() const { return 1 - c; }
  int top() const { return static_cast<int>(trace.levels.size()) - 1; }
  const Level& level() const { return trace.levels.back(); }
};

PhaseOutcome shortcut(int level, VertexSet y, std::vector<int> centers, std::string reason) {
  PhaseOutcome out;
  out.status = PhaseOutcome::shortcut;
  out.level = level;
  out.y = y;
  out.centers = std::move(centers);
  out.reason = std::move(reason);
  return out;
}

// Exact test for a (w, c, 2)-balanced separator (1-bounded when d is 1):
// supersets of a balanced separator stay balanced, so the union of the
// balls around two centres decides it.
std::optional<PhaseOutcome> bounded_search(Context& cx, int li) {
  const Level& l = cx.trace.levels[li];
  if (l.d <= 0) return std::nullopt;
  int radius = std::min(l.d, 2);
  int count = std::min(l.d, 2);
  std::vector<VertexSet> balls;
  std::vector<int> verts = l.bag.to_vector();
  for (int v : verts) balls.push_back(ball(cx.g, VertexSet::single(v), radius, l.bag));
  auto light = [&](VertexSet y) {
    for (VertexSet comp : components(cx.g, l.bag - y))
      if (l.w.sum(comp) > cx.c) return false;
    return true;
  };
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i; j < (count == 2 ? verts.size() : i + 1); ++j) {
      cx.budget.charge();
      VertexSet y = balls[i] | balls[j];
      if (light(y)) {
        std::vector<int> centers{verts[i]};
        if (j != i) centers.push_back(verts[j]);
        return shortcut(li, y, centers, std::to_string(radius) + "-ball separator at level " + std::to_string(li));
      }
    }
  }
  return std::nullopt;
}

std::optional<PhaseOutcome> eager_probe(Context& cx) {
  if (cx.opts.mode != PipelineMode::eager) return std::nullopt;
  return bounded_search(cx, cx.top());
}

struct Candidate {
  VertexSet y;
  std::vector<int> centers;
};

// A lemma conclusion failed on the instance. The derived candidates are
// tried first, then the exact 2-bounded search; without a separator the
// failure is reported.
PhaseOutcome rescue(Context& cx, const std::string& what, const std::vector<Candidate>& derived) {
  const Level& l = cx.level();
  for (const auto& cand : derived) {
    auto audit = verify_balanced_separator(cx.g, l.bag, l.w, cand.y, cx.c, l.d, cand.centers);
    if (audit.ok) return shortcut(cx.top(), cand.y, audit.centers, what + " (derived separator)");
  }
  if (auto found = bounded_search(cx, cx.top())) {
    found->reason = what + " (" + found->reason + ")";
    return *found;
  }
  throw AssertionFailure(what, "level " + std::to_string(cx.top()) + ", bag " + to_string(l.bag));
}

// Central bag of seps over the top level; pushes the new level.
PhaseOutcome descend(Context& cx, StageRecord stage) {
  const Level& l = cx.level();
  if (l.d <= 2) {
    PhaseOutcome out;
    out.status = PhaseOutcome::budget_exhausted;
    out.level = cx.top();
    out.reason = "d budget " + std::to_string(l.d) + " leaves no room for a central bag";
    return out;
  }
  CentralBag cb;
  try {
    cb = central_bag(cx.g, l.bag, l.w, stage.collection, cx.eps());
  } catch (const std::invalid_argument& e) {
    return rescue(cx, std::string("central bag precondition failed: ") + e.what(), {});
  } catch (const AssertionFailure& e) {
    return rescue(cx, std::string(e.what()) + ": " + e.detail(), {});
  }
  if (!cb.connected) return rescue(cx, "central bag is disconnected", {});
  stage.from_level = cx.top();
  stage.collection = cb.dec.seps;
  stage.anchors = cb.anchor;
  Level next{cb.beta, cb.w_x, l.d - 2};
  cx.trace.levels.push_back(std::move(next));
  stage.to_level = cx.top();
  cx.trace.stages.push_back(std::move(stage));
  if (auto hit = eager_probe(cx)) return *hit;
  return {};
}

std::string describe(VertexSet s) { return to_string(s); }

}  // namespace

PhaseOutcome clique_free_bag(const Graph& g, DecompTrace& trace, const Rational& c, const PipelineOptions& opts,
                             WorkBudget& budget) {
  Context cx{g, trace, c, opts, budget};
  int previous = 0, steps = 0;
  int delta = std::max(1, g.max_degree());
  while (true) {
    const Level& l = cx.level();
    std::vector<VertexSet> cutsets;
    int k = 1;
    for (; k <= std::min(l.bag.size(), delta + 1); ++k) {
      budget.charge();
      cutsets = minimal_clique_cutsets(g, l.bag, k);
      if (!cutsets.empty()) break;
    }
    if (cutsets.empty()) return {};
    if (k <= previous) {
      std::vector<Candidate> derived;
      for (VertexSet cs : cutsets) derived.push_back({cs, {cs.min()}});
      return rescue(cx, "smallest clique cutset did not grow (size " + std::to_string(k) + ")", derived);
    }
    if (steps >= delta - 1 && delta > 1) {
      std::vector<Candidate> derived;
      for (VertexSet cs : cutsets) derived.push_back({cs, {cs.min()}});
      return rescue(cx, "more clique-free iterations than the degree allows", derived);
    }
    StageRecord stage;
    stage.kind = StageKind::clique_free;
    stage.clique_size = k;
    for (VertexSet cs : cutsets) {
      Separation s = minimal_clique_separation(g, l.bag, l.w, cs);
      auto sk = is_skewed(s, l.w, cx.eps());
      if (!sk.skewed) return rescue(cx, "minimal clique separation at " + describe(cs) + " is not skewed", {{cs, {cs.min()}}});
      stage.collection.push_back(sk.normalized);
    }
    auto lam = is_laminar(stage.collection);
    if (!lam.laminar) {
      const auto& s1 = stage.collection[lam.crossing->first];
      const auto& s2 = stage.collection[lam.crossing->second];
      return rescue(cx, "minimal clique separations cross", {{s1.c | s2.c, {s1.c.min(), s2.c.min()}}});
    }
    PhaseOutcome out = descend(cx, std::move(stage));
    if (out.status != PhaseOutcome::completed) return out;
    previous = k;
    ++steps;
  }
}

PhaseOutcome forcer_decomposition(const Graph& g, DecompTrace& trace, const Rational& c, ForcerFamily family,
                                  const PipelineOptions& opts, WorkBudget& budget) {
  Context cx{g, trace, c, opts, budget};
  const StageKind kind = family == ForcerFamily::strong ? StageKind::strong_forcer : StageKind::twin_forcer;
  std::vector<ForcerRecord> forcers = enumerate_forcers(g, cx.level().bag, family, budget);
  std::vector<VertexSet> centers;
  bool pair_centres = false;
  for (const auto& f : forcers) {
    centers.push_back(f.center);
    pair_centres = pair_centres || f.center.size() > 1;
  }
  int delta = std::max(1, g.max_degree());
  std::vector<int> cls = partition_centers(g, centers, pair_centres ? 2 : 1, delta);
  int classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  if (BigInt(classes) > f_bound(pair_centres ? 2 : 1, delta))
    throw AssertionFailure("forcer centres need more classes than f(k, delta)", std::to_string(classes));
  std::vector<bool> used(classes, false);

  while (true) {
    PhaseOutcome cf = clique_free_bag(g, trace, c, opts, budget);
    if (cf.status != PhaseOutcome::completed) return cf;
    const Level& l = cx.level();
    int sigma = -1;
    bool any_active = false;
    for (std::size_t i = 0; i < forcers.size(); ++i) {
      if (!forcers[i].active_in(l.bag)) continue;
      any_active = true;
      if (!used[cls[i]] && (sigma < 0 || cls[i] < sigma)) sigma = cls[i];
    }
    if (!any_active) return {};
    if (sigma < 0) return rescue(cx, "a forcer of a processed class is active again", {});
    used[sigma] = true;

    StageRecord stage;
    stage.kind = kind;
    stage.forcer_class = sigma;
    std::vector<VertexSet> ks;
    for (std::size_t i = 0; i < forcers.size(); ++i)
      if (cls[i] == sigma && forcers[i].active_in(l.bag)) {
        ++stage.active_forcers;
        if (std::find(ks.begin(), ks.end(), forcers[i].center) == ks.end()) ks.push_back(forcers[i].center);
      }
    for (VertexSet k : ks) {
      budget.charge();
      auto cs = canonical_star_separation(g, l.bag, l.w, k);
      VertexSet closed = g.closed_neighborhood(k) & l.bag;
      std::vector<int> hint = k.to_vector();
      if (l.w.sum(cs.sep.b) <= c)
        return rescue(cx, "canonical separation of " + describe(k) + " has a light far side", {{closed, hint}});
      auto sk = is_skewed(cs.sep, l.w, cx.eps());
      if (!sk.skewed)
        return rescue(cx, "canonical separation of " + describe(k) + " is not skewed", {{closed, hint}});
      if (!sk.normalized.proper()) continue;
      bool repeat = false;
      for (const auto& s : stage.collection) repeat = repeat || s.same_sets(sk.normalized);
      if (!repeat) stage.collection.push_back(sk.normalized);
    }
    auto lam = is_laminar(stage.collection);
    if (!lam.laminar) {
      const auto& s1 = stage.collection[lam.crossing->first];
      const auto& s2 = stage.collection[lam.crossing->second];
      std::vector<int> hint{s1.center->min(), s2.center->min()};
      return rescue(cx, "canonical star separations of one class cross", {{s1.c | s2.c, hint}});
    }
    stage.note = std::to_string(stage.collection.size()) + " separations";
    PhaseOutcome out = descend(cx, std::move(stage));
    if (out.status != PhaseOutcome::completed) return out;
    for (std::size_t i = 0; i < forcers.size(); ++i)
      if (cls[i] == sigma && forcers[i].active_in(cx.level().bag))
        return rescue(cx, "forcer class " + std::to_string(sigma) + " still active after its central bag", {});
  }
}

namespace {

TerminalCheck terminal_checks(const Graph& g, VertexSet bag, WorkBudget& budget) {
  TerminalCheck t;
  t.no_strong_forcer = enumerate_forcers(g, bag, ForcerFamily::strong, budget).empty();
  t.no_terminal_twin = true;
  for (const auto& w : enumerate_wheels(g, bag, budget)) {
    WheelClass wc = classify_wheel(g, w);
    if (wc.kind != WheelKind::twin) continue;
    if (twin_richness(g, bag, w.hole, w.hub, wc.clone).terminal) {
      t.no_terminal_twin = false;
      break;
    }
  }
  t.no_clique_cutset = !has_clique_cutset(g, bag);
  t.no_star_cutset = !find_star_cutset(g, bag).has_value();
  return t;
}

void lift_chain(const Graph& g, PipelineResult& r, int source, VertexSet y, std::vector<int> centers,
                const Rational& c) {
  auto& levels = r.trace.levels;
  {
    const Level& l = levels[source];
    auto audit = verify_balanced_separator(g, l.bag, l.w, y, c, l.d, centers);
    if (!audit.ok) {
      // An unbounded separator means d is too small here, not a broken lemma.
      r.status = audit.capped ? RunStatus::capped
                 : audit.balanced ? RunStatus::budget_exhausted
                                  : RunStatus::assertion_failed;
      r.failure = "separator at level " + std::to_string(source) + " does not verify";
      return;
    }
    centers = audit.centers;
  }
  for (int li = source; li > 0; --li) {
    const Level& parent = levels[li - 1];
    LiftRecord rec;
    rec.from_level = li;
    rec.y = y;
    rec.lifted = lift_separator(g, parent.bag, levels[li].bag, y);
    auto audit = verify_balanced_separator(g, parent.bag, parent.w, rec.lifted, c, parent.d, centers);
    rec.verified = audit.ok;
    rec.centers = audit.centers;
    r.trace.lifts.push_back(rec);
    if (!audit.ok) {
      r.status = audit.capped ? RunStatus::capped : RunStatus::assertion_failed;
      r.failure = "lift from level " + std::to_string(li) + " does not verify";
      return;
    }
    y = rec.lifted;
    centers = audit.centers;
  }
  const Level& root = levels.front();
  VertexSet pruned = prune_balanced(g, root.bag, root.w, y, c);
  auto audit = verify_balanced_separator(g, root.bag, root.w, pruned, c, root.d, centers);
  if (!audit.ok) {
    r.status = RunStatus::assertion_failed;
    r.failure = "final separator does not verify";
    return;
  }
  r.status = RunStatus::certified;
  r.certificate = BalancedSeparatorCertificate{pruned, y, audit.centers, c, root.d, audit.components, audit.weights};
}

bool finish_phase(const Graph& g, PipelineResult& r, const PhaseOutcome& out, const Rational& c) {
  if (out.status == PhaseOutcome::completed) return false;
  if (out.status == PhaseOutcome::budget_exhausted) {
    r.status = RunStatus::budget_exhausted;
    r.failure = out.reason;
    return true;
  }
  StageRecord st;
  st.kind = StageKind::shortcut;
  st.from_level = st.to_level = out.level;
  st.note = out.reason;
  r.trace.stages.push_back(st);
  r.route = out.reason;
  r.source_level = out.level;
  lift_chain(g, r, out.level, out.y, out.centers, c);
  return true;
}

}  // namespace

PipelineResult compute_balanced_separator(const Graph& g, const WeightAssignment& w, const Rational& c, int d,
                                          const PipelineOptions& opts) {
  VertexSet mask = g.vertices();
  if (!is_connected(g, mask)) throw DataError("compute_balanced_separator: graph is not connected");
  if (w.total() != 1) throw DataError("compute_balanced_separator: weights total " + format_rational(w.total()));
  if (c < Rational(1, 2) || c >= 1) throw DataError("compute_balanced_separator: c must lie in [1/2, 1)");
  if (d < 1) throw DataError("compute_balanced_separator: d must be positive");
  if (!opts.waive_membership) {
    WorkBudget mb(opts.work_budget);
    auto m = is_c4free_odd_signable(g, mb);
    if (m.capped()) throw CapExceeded("class membership check ran out of budget");
    if (!m.member()) throw DataError(std::string("graph is not C4-free odd-signable: contains ") + to_string(m.violation));
  }

  PipelineResult r;
  r.trace.levels.push_back(Level{mask, w, d});
  WorkBudget budget(opts.work_budget);
  try {
    Context cx{g, r.trace, c, opts, budget};
    if (auto hit = eager_probe(cx)) {
      finish_phase(g, r, *hit, c);
      return r;
    }
    if (finish_phase(g, r, forcer_decomposition(g, r.trace, c, ForcerFamily::strong, opts, budget), c)) return r;
    if (finish_phase(g, r, forcer_decomposition(g, r.trace, c, ForcerFamily::twin, opts, budget), c)) return r;

    const Level& l = r.trace.levels.back();
    StageRecord st;
    st.kind = StageKind::terminal;
    st.from_level = st.to_level = cx.top();
    TerminalCheck tc = terminal_checks(g, l.bag, budget);
    if (!tc.all()) {
      auto found = bounded_search(cx, cx.top());
      if (!found) {
        r.trace.terminal = tc;
        r.status = RunStatus::assertion_failed;
        r.failure = "terminal bag keeps a forbidden structure and has no 2-bounded separator";
        return r;
      }
      tc.rescued = true;
      r.trace.terminal = tc;
      st.note = "rescued: " + found->reason;
      r.trace.stages.push_back(st);
      r.route = "terminal rescue";
      r.source_level = cx.top();
      lift_chain(g, r, cx.top(), found->y, found->centers, c);
      return r;
    }
    r.trace.terminal = tc;
    TreewidthResult tw;
    if (l.bag.size() <= opts.treewidth_cap) {
      tw = treewidth_exact(g, l.bag, opts.treewidth_cap);
    } else {
      tw = treewidth_min_fill(g, l.bag);
    }
    r.trace.terminal_td_exact = tw.exact;
    r.trace.terminal_width = tw.width;
    std::optional<VertexSet> pick;
    for (VertexSet x : tw.td.bags) {
      bool half = true;
      for (VertexSet comp : components(g, l.bag - x))
        if (l.w.sum(comp) > Rational(1, 2)) half = false;
      if (half) {
        pick = x;
        break;
      }
    }
    if (!pick) {
      r.status = RunStatus::assertion_failed;
      r.failure = "no bag of the terminal tree decomposition is a 1/2-balanced separator";
      return r;
    }
    st.note = "tree decomposition width " + std::to_string(tw.width) + (tw.exact ? " (exact)" : " (min-fill)");
    r.trace.stages.push_back(st);
    r.route = "terminal";
    r.source_level = cx.top();
    lift_chain(g, r, cx.top(), *pick, {}, c);
  } catch (const CapExceeded& e) {
    r.status = RunStatus::capped;
    r.failure = e.what();
  } catch (const AssertionFailure& e) {
    r.status = RunStatus::assertion_failed;
    r.failure = std::string(e.what()) + (e.detail().empty() ? "" : ": " + e.detail());
  }
  return r;
}

TightResult compute_tight(const Graph& g, const WeightAssignment& w, const Rational& c, const PipelineOptions& opts) {
  TightResult out;
  for (int d = 1; d <= std::max(1, g.order()); ++d) {
    PipelineResult r = compute_balanced_separator(g, w, c, d, opts);
    out.attempts.push_back(r.status);
    if (r.ok()) {
      out.result = std::move(r);
      out.d = d;
      return out;
    }
    out.result = std::move(r);
  }
  out.d = -1;
  return out;
}

Sandwich sep_tw_sandwich_check(const Graph& g, const Rational& c) {
  Sandwich s;
  s.sep_star = sep_star_exact(g, c);
  s.tw = treewidth_exact(g).width;
  s.ok = s.sep_star <= s.tw + 1 && Rational(s.tw + 1) * (1 - c) <= s.sep_star;
  return s;
}

}  // namespace oddsign
