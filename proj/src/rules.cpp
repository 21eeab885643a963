#include "relipoly/rules.hpp"

#include "relipoly/errors.hpp"
#include "relipoly/random.hpp"

#include <algorithm>
#include <numeric>

namespace relipoly {

namespace mp = boost::multiprecision;

std::string to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::two_terminal: return "two_terminal";
    case RuleKind::k_terminal: return "k_terminal";
    case RuleKind::all_terminal: return "all_terminal";
    case RuleKind::ar_alpha: return "ar_alpha";
    case RuleKind::ear_alpha: return "ear_alpha";
  }
  return "unknown";
}

RuleKind parse_rule_kind(std::string_view name) {
  for (RuleKind k : {RuleKind::two_terminal, RuleKind::k_terminal, RuleKind::all_terminal, RuleKind::ar_alpha,
                     RuleKind::ear_alpha}) {
    if (name == to_string(k)) return k;
  }
  throw ParseError("unknown rule '" + std::string(name) + "'");
}

RuleSpec RuleSpec::two_terminal(int source, int target) {
  RuleSpec r;
  r.kind = RuleKind::two_terminal;
  r.source = source;
  r.target = target;
  return r;
}

RuleSpec RuleSpec::k_terminal(std::vector<int> terminals) {
  RuleSpec r;
  r.kind = RuleKind::k_terminal;
  r.terminals = std::move(terminals);
  return r;
}

RuleSpec RuleSpec::all_terminal() { return RuleSpec{}; }

RuleSpec RuleSpec::ar_alpha(Rational alpha) {
  RuleSpec r;
  r.kind = RuleKind::ar_alpha;
  r.alpha = std::move(alpha);
  return r;
}

RuleSpec RuleSpec::ear_alpha(Rational alpha) {
  RuleSpec r;
  r.kind = RuleKind::ear_alpha;
  r.alpha = std::move(alpha);
  return r;
}

void RuleSpec::validate(const Graph& g) const {
  auto check_vertex = [&](int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
      throw ConstraintError(std::string(what) + " vertex " + std::to_string(v) + " is outside the graph");
  };
  switch (kind) {
    case RuleKind::two_terminal:
      if (!source || !target) throw ConstraintError("two_terminal needs a source and a target");
      check_vertex(*source, "source");
      check_vertex(*target, "target");
      if (*source == *target) throw ConstraintError("two_terminal source and target must differ");
      break;
    case RuleKind::k_terminal:
      if (terminals.empty()) throw ConstraintError("k_terminal needs at least one terminal");
      for (int t : terminals) check_vertex(t, "terminal");
      break;
    case RuleKind::all_terminal:
      break;
    case RuleKind::ar_alpha:
    case RuleKind::ear_alpha:
      if (!alpha) throw ConstraintError(to_string(kind) + " needs alpha");
      if (*alpha <= 0 || *alpha > 1) throw ConstraintError("alpha must lie in (0, 1]");
      break;
  }
}

std::string RuleSpec::describe() const {
  std::string out = to_string(kind);
  switch (kind) {
    case RuleKind::two_terminal:
      out += "(" + std::to_string(source.value_or(-1)) + "->" + std::to_string(target.value_or(-1)) + ")";
      break;
    case RuleKind::k_terminal: {
      out += "{";
      for (std::size_t i = 0; i < terminals.size(); ++i) out += (i ? "," : "") + std::to_string(terminals[i]);
      out += "}";
      break;
    }
    case RuleKind::ar_alpha:
    case RuleKind::ear_alpha:
      out += "(" + (alpha ? relipoly::to_string(*alpha) : std::string("?")) + ")";
      break;
    case RuleKind::all_terminal:
      break;
  }
  return out;
}

DamageModel::DamageModel(double x) : x_(x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("edge operational probability must lie in [0, 1]");
}

RuleEvaluator::RuleEvaluator(const RuleSpec& rule, const Graph& g)
    : rule_(rule), graph_(&g), dsu_(g.vertex_count()) {
  rule_.validate(g);
  const long v = g.vertex_count();
  if (rule_.alpha) {
    const BigInt p = mp::numerator(*rule_.alpha);
    const BigInt q = mp::denominator(*rule_.alpha);
    // alpha <= 1, so p <= q and the thresholds below are bounded by V and V^2.
    const BigInt ceil_av = (p * v + q - 1) / q;
    ar_threshold_ = ceil_av.convert_to<int>();
    if (q > BigInt(std::numeric_limits<std::int64_t>::max()))
      throw ConstraintError("alpha denominator too large");
    ear_lhs_scale_ = static_cast<__int128>(q.convert_to<std::int64_t>());
    ear_rhs_ = static_cast<__int128>(p.convert_to<std::int64_t>()) * v * v;
  }
}

template <class ForEachEdge>
bool RuleEvaluator::evaluate(ForEachEdge&& for_each_edge) {
  dsu_.reset();
  const auto edges = graph_->edges();
  for_each_edge([&](int e) { dsu_.unite(edges[e].a, edges[e].b); });
  return decide();
}

bool RuleEvaluator::decide() {
  const int v = graph_->vertex_count();
  switch (rule_.kind) {
    case RuleKind::two_terminal:
      return dsu_.find(*rule_.source) == dsu_.find(*rule_.target);
    case RuleKind::all_terminal:
      return dsu_.set_count() == 1;
    case RuleKind::k_terminal: {
      const int root = dsu_.find(rule_.terminals.front());
      for (int t : rule_.terminals)
        if (dsu_.find(t) != root) return false;
      return true;
    }
    case RuleKind::ar_alpha: {
      for (int i = 0; i < v; ++i)
        if (dsu_.find(i) == i && dsu_.size_of(i) >= ar_threshold_) return true;
      return false;
    }
    case RuleKind::ear_alpha: {
      __int128 squares = 0;
      for (int i = 0; i < v; ++i) {
        if (dsu_.find(i) == i) {
          const __int128 s = dsu_.size_of(i);
          squares += s * s;
        }
      }
      return ear_lhs_scale_ * squares >= ear_rhs_;
    }
  }
  return false;
}

bool RuleEvaluator::operator()(const EdgeSet& active) {
  return evaluate([&](auto&& f) { active.for_each(f); });
}

bool RuleEvaluator::operator()(std::span<const int> active) {
  return evaluate([&](auto&& f) {
    for (int e : active) f(e);
  });
}

bool accepts(const RuleSpec& rule, const Graph& g, const EdgeSet& active) {
  RuleEvaluator eval(rule, g);
  return eval(active);
}

bool accepts(const RuleSpec& rule, const Graph& g, std::span<const int> active) {
  RuleEvaluator eval(rule, g);
  return eval(active);
}

CoherenceResult is_coherent_witness(const SubgraphPredicate& accepts, const Graph& g, int trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  const int e_count = g.edge_count();
  const EdgeSet all = g.all_edges();
  std::vector<int> order(static_cast<std::size_t>(e_count));
  CoherenceResult result;
  for (int t = 0; t < trials; ++t) {
    PhiloxStream rng(seed, 0xC0u, static_cast<std::uint32_t>(t));
    std::iota(order.begin(), order.end(), 0);
    const int k = static_cast<int>(rng.bounded(static_cast<std::uint32_t>(e_count) + 1));
    EdgeSet sample;
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(e_count - i)));
      std::swap(order[i], order[j]);
      sample.insert(order[i]);
    }
    if (!accepts(sample)) continue;
    ++result.accepted_samples;
    const EdgeSet missing = all - sample;
    bool violated = false;
    missing.for_each([&](int e) {
      if (violated) return;
      EdgeSet grown = sample;
      grown.insert(e);
      if (!accepts(grown)) {
        violated = true;
        result.coherent = false;
        result.counterexample = sample;
        result.added_edge = e;
      }
    });
    if (violated) return result;
  }
  return result;
}

CoherenceResult is_coherent_witness(const RuleSpec& rule, const Graph& g, int trials, std::uint64_t seed) {
  RuleEvaluator eval(rule, g);
  return is_coherent_witness([&](const EdgeSet& s) { return eval(s); }, g, trials, seed);
}

}  // namespace relipoly
