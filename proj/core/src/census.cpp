#include "triexp/census.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "triexp/error.hpp"
#include "scc.hpp"

namespace triexp {

std::size_t ExpansionGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& out : edges) n += out.size();
  return n;
}

std::optional<std::size_t> ExpansionGraph::find(const FieldElement& v) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == v) return i;
  }
  return std::nullopt;
}

std::string_view to_string(Cardinality::Kind k) noexcept {
  switch (k) {
    case Cardinality::Kind::Zero: return "zero";
    case Cardinality::Kind::Finite: return "finite";
    case Cardinality::Kind::CountablyInfinite: return "countably-infinite";
    case Cardinality::Kind::Continuum: return "continuum";
    case Cardinality::Kind::UnresolvedAtCap: return "unresolved";
  }
  return "?";
}

std::string describe(const Cardinality& c) {
  std::string s(to_string(c.kind));
  if (c.kind == Cardinality::Kind::Finite) s += " " + std::to_string(c.count);
  return s;
}

namespace {

constexpr std::array<Digit, 3> kAscending{Digit::Zero, Digit::One, Digit::Q};
constexpr std::size_t kMaxWitnesses = std::size_t{1} << 20;

using Adjacency = std::vector<std::vector<ExpansionGraph::Edge>>;

using detail::Components;

Components strong_components(const Adjacency& adj) {
  return detail::strong_components(adj, [](const ExpansionGraph::Edge& e) { return e.target; });
}

struct ComponentShape {
  std::size_t nodes = 0;
  std::size_t internal_edges = 0;
  std::size_t exits = 0;
  [[nodiscard]] bool has_cycle() const { return internal_edges > 0; }
  [[nodiscard]] bool has_two_cycles() const { return internal_edges > nodes; }
};

std::vector<ComponentShape> shapes(const Adjacency& adj, const Components& comps) {
  std::vector<ComponentShape> out(comps.count);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    auto& s = out[comps.of[v]];
    ++s.nodes;
    for (const auto& e : adj[v]) {
      if (comps.of[e.target] == comps.of[v]) {
        ++s.internal_edges;
      } else {
        ++s.exits;
      }
    }
  }
  return out;
}

bool any_two_cycle_component(const Adjacency& adj) {
  const Components comps = strong_components(adj);
  for (const auto& s : shapes(adj, comps)) {
    if (s.has_two_cycles()) return true;
  }
  return false;
}

// Breadth-first exploration state shared by build_graph and classify.
class Explorer {
 public:
  Explorer(const FieldElement& x, const Base& base) : base_(base) {
    if (base_.in_hull(x)) add(x);
  }

  [[nodiscard]] bool done() const { return processed_ == nodes_.size(); }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] std::size_t processed() const { return processed_; }
  [[nodiscard]] const std::vector<FieldElement>& nodes() const { return nodes_; }
  [[nodiscard]] const Adjacency& edges() const { return edges_; }

  void step() {
    const std::size_t v = processed_++;
    const FieldElement qv = nodes_[v] * base_.q();
    for (Digit d : kAscending) {
      FieldElement w = qv - base_.digit_value(d);
      if (!base_.in_hull(w)) continue;
      auto it = index_.find(w);
      const std::size_t target = it != index_.end() ? it->second : add(std::move(w));
      edges_[v].push_back({d, target});
    }
  }

  // Only edges out of processed nodes are final; the rest are dropped.
  [[nodiscard]] Adjacency explored_edges() const {
    Adjacency adj(nodes_.size());
    for (std::size_t v = 0; v < processed_; ++v) adj[v] = edges_[v];
    return adj;
  }

 private:
  std::size_t add(FieldElement w) {
    const std::size_t id = nodes_.size();
    index_.emplace(w, id);
    nodes_.push_back(std::move(w));
    edges_.emplace_back();
    return id;
  }

  const Base& base_;
  std::vector<FieldElement> nodes_;
  Adjacency edges_;
  std::unordered_map<FieldElement, std::size_t, FieldElementHash> index_;
  std::size_t processed_ = 0;
};

ExpansionGraph prune(std::vector<FieldElement> nodes, const Adjacency& adj) {
  ExpansionGraph g;
  g.pruned = true;
  if (nodes.empty()) return g;
  const std::size_t n = nodes.size();
  const Components comps = strong_components(adj);
  const auto comp_shapes = shapes(adj, comps);
  // Components complete sinks-first, so one pass in id order settles liveness.
  std::vector<std::vector<std::size_t>> members(comps.count);
  for (std::size_t v = 0; v < n; ++v) members[comps.of[v]].push_back(v);
  std::vector<bool> comp_alive(comps.count, false);
  for (std::size_t c = 0; c < comps.count; ++c) {
    bool alive = comp_shapes[c].has_cycle();
    for (std::size_t v : members[c]) {
      for (const auto& e : adj[v]) alive = alive || comp_alive[comps.of[e.target]];
    }
    comp_alive[c] = alive;
  }
  if (!comp_alive[comps.of[0]]) return g;

  std::vector<std::size_t> remap(n, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> order{0};
  remap[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& e : adj[order[k]]) {
      if (comp_alive[comps.of[e.target]] && remap[e.target] == std::numeric_limits<std::size_t>::max()) {
        remap[e.target] = order.size();
        order.push_back(e.target);
      }
    }
  }
  g.nodes.reserve(order.size());
  g.edges.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    g.nodes.push_back(std::move(nodes[order[k]]));
    for (const auto& e : adj[order[k]]) {
      if (remap[e.target] != std::numeric_limits<std::size_t>::max()) g.edges[k].push_back({e.digit, remap[e.target]});
    }
  }
  g.root = 0;
  return g;
}

struct NodeClass {
  Cardinality::Kind kind = Cardinality::Kind::Zero;
  std::size_t count = 0;
};

std::size_t checked_add(std::size_t a, std::size_t b) {
  if (a > kMaxWitnesses - std::min(b, kMaxWitnesses)) {
    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(kMaxWitnesses) + " finite expansions");
  }
  return a + b;
}

// Class of every node of a complete pruned graph.
struct Classification {
  Components comps;
  std::vector<NodeClass> of_component;
  [[nodiscard]] const NodeClass& at(std::size_t v) const { return of_component[comps.of[v]]; }
};

Classification classify_nodes(const ExpansionGraph& g) {
  using K = Cardinality::Kind;
  Classification out{strong_components(g.edges), {}};
  const auto comp_shapes = shapes(g.edges, out.comps);
  std::vector<std::vector<std::size_t>> members(out.comps.count);
  for (std::size_t v = 0; v < g.size(); ++v) members[out.comps.of[v]].push_back(v);
  out.of_component.resize(out.comps.count);

  for (std::size_t c = 0; c < out.comps.count; ++c) {
    NodeClass cls;
    const auto& shape = comp_shapes[c];
    bool child_countable = false;
    bool child_continuum = false;
    std::size_t child_total = 0;
    for (std::size_t v : members[c]) {
      for (const auto& e : g.edges[v]) {
        const std::size_t t = out.comps.of[e.target];
        if (t == c) continue;
        const NodeClass& child = out.of_component[t];
        child_continuum = child_continuum || child.kind == K::Continuum;
        child_countable = child_countable || child.kind == K::CountablyInfinite;
        if (child.kind == K::Finite) child_total = checked_add(child_total, child.count);
      }
    }
    if (shape.has_two_cycles() || child_continuum) {
      cls.kind = K::Continuum;
    } else if (child_countable || (shape.has_cycle() && shape.exits > 0)) {
      cls.kind = K::CountablyInfinite;
    } else if (shape.has_cycle()) {
      cls = {K::Finite, 1};
    } else {
      cls = {K::Finite, child_total};
    }
    out.of_component[c] = cls;
  }
  return out;
}

void collect_witnesses(const ExpansionGraph& g, const Classification& cls, std::size_t v, DigitString& path,
                       std::vector<EPWord>& out) {
  const std::size_t c = cls.comps.of[v];
  const bool on_cycle = std::any_of(g.edges[v].begin(), g.edges[v].end(),
                                    [&](const auto& e) { return cls.comps.of[e.target] == c; });
  if (on_cycle) {
    // A terminal cycle of a finite class: each node has exactly one edge.
    DigitString period;
    std::size_t u = v;
    do {
      period.push_back(g.edges[u].front().digit);
      u = g.edges[u].front().target;
    } while (u != v);
    out.emplace_back(path, std::move(period));
    return;
  }
  for (const auto& e : g.edges[v]) {
    path.push_back(e.digit);
    collect_witnesses(g, cls, e.target, path, out);
    path.pop_back();
  }
}

Cardinality classify_graph(const ExpansionGraph& g) {
  Cardinality out;
  out.explored_nodes = g.size();
  out.evidence = "graph";
  if (g.empty()) return out;
  const Classification cls = classify_nodes(g);
  const NodeClass& root = cls.at(g.root);
  out.kind = root.kind;
  if (root.kind == Cardinality::Kind::Finite) {
    out.count = root.count;
    DigitString path;
    collect_witnesses(g, cls, g.root, path, out.witnesses);
    std::sort(out.witnesses.begin(), out.witnesses.end());
  }
  return out;
}

bool inside(const FieldElement& v, const ContinuumCertificate& cert) { return !(v < cert.lo) && !(cert.hi < v); }

}  // namespace

ExpansionGraph build_graph(const FieldElement& x, const Base& base, std::size_t node_cap) {
  if (node_cap == 0) throw Error(ErrorKind::InvalidArgument, "node cap must be positive");
  Explorer ex(x, base);
  while (!ex.done()) {
    if (ex.size() > node_cap) {
      throw Error(ErrorKind::CapExceeded, "follower graph exceeds " + std::to_string(node_cap) + " nodes");
    }
    ex.step();
  }
  if (ex.size() > node_cap) {
    throw Error(ErrorKind::CapExceeded, "follower graph exceeds " + std::to_string(node_cap) + " nodes");
  }
  return prune(ex.nodes(), ex.edges());
}

Cardinality classify(const FieldElement& x, const Base& base, std::size_t node_cap) {
  if (node_cap == 0) throw Error(ErrorKind::InvalidArgument, "node cap must be positive");
  constexpr std::size_t kCertificateThreshold = 256;
  Explorer ex(x, base);
  std::size_t checkpoint = 64;
  const ContinuumCertificate* cert = nullptr;
  bool cert_tried = false;
  std::size_t cert_checked = 0;

  auto continuum = [&](const char* evidence) {
    Cardinality c;
    c.kind = Cardinality::Kind::Continuum;
    c.explored_nodes = ex.size();
    c.evidence = evidence;
    return c;
  };

  while (!ex.done() && ex.size() <= node_cap) {
    ex.step();
    if (!cert_tried && ex.size() >= kCertificateThreshold) {
      cert_tried = true;
      if (const auto& found = base.continuum_certificate()) cert = &*found;
    }
    if (cert != nullptr) {
      for (; cert_checked < ex.size(); ++cert_checked) {
        if (inside(ex.nodes()[cert_checked], *cert)) return continuum("double-cover interval");
      }
    }
    if (ex.processed() == checkpoint && !ex.done()) {
      checkpoint *= 4;
      if (any_two_cycle_component(ex.explored_edges())) return continuum("two-cycle component");
    }
  }
  if (ex.done() && ex.size() <= node_cap) return classify_graph(prune(ex.nodes(), ex.edges()));

  if (any_two_cycle_component(ex.explored_edges())) return continuum("two-cycle component");
  Cardinality c;
  c.kind = Cardinality::Kind::UnresolvedAtCap;
  c.explored_nodes = ex.size();
  c.evidence = "node cap " + std::to_string(node_cap);
  return c;
}

NullInfiniteReport null_infinite_check(const FieldElement& x, const Base& base, std::size_t node_cap) {
  const ExpansionGraph g = build_graph(x, base, node_cap);
  NullInfiniteReport report;
  if (g.empty()) return report;
  const Classification cls = classify_nodes(g);
  report.null_infinite = cls.at(g.root).kind == Cardinality::Kind::CountablyInfinite;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.edges[v].size() < 2) continue;
    NodeDiagnostic diag{g.nodes[v], {}};
    for (Digit d : kAscending) {
      BranchDiagnostic b{d};
      for (const auto& e : g.edges[v]) {
        if (e.digit != d) continue;
        b.usable = true;
        b.kind = cls.at(e.target).kind;
        b.count = cls.at(e.target).count;
      }
      diag.branches.push_back(b);
    }
    report.switch_nodes.push_back(std::move(diag));
  }
  return report;
}

BkWitness witness_for_Bk(const Base& base, std::size_t k, std::size_t node_cap) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  DigitString pre{Digit::Zero};
  pre.insert(pre.end(), k - 1, Digit::Q);
  std::optional<std::size_t> gap;
  DigitString period;
  switch (base.regime()) {
    case Regime::SubCritical:
      if (k >= 2) throw Error(ErrorKind::NoWitness, "no point has exactly " + std::to_string(k) + " expansions for q <= q_c");
      pre.clear();
      period = {Digit::Zero};
      break;
    case Regime::Middle:
      gap = alpha_gap_index(base);
      period.assign(*gap + 1, Digit::One);
      period.push_back(Digit::Q);
      break;
    case Regime::Super:
      period = {Digit::One, Digit::Q};
      break;
  }
  BkWitness w{EPWord(std::move(pre), std::move(period)), gap, {}};
  w.verification = classify(eval(w.word, base), base, node_cap);
  const auto& v = w.verification;
  if (v.kind != Cardinality::Kind::UnresolvedAtCap && !v.is_finite(k)) {
    throw Error(ErrorKind::WitnessMismatch,
                w.word.to_string() + " has " + describe(v) + " expansions, expected " + std::to_string(k));
  }
  return w;
}

BaseMembership classify_base(const Base& base) {
  BaseMembership m;
  m.continuum = true;
  m.countable = base.value().compare(Rational(2)) != std::strong_ordering::less;
  m.multiple_k = base.regime() != Regime::SubCritical;
  return m;
}

namespace {

// Decides membership of remainders in E_q. Below q* the attractor is the
// whole hull; above it, liveness comes from a pruned follower graph.
class AttractorOracle {
 public:
  AttractorOracle(const FieldElement& x, const Base& base) : base_(base) {
    if (base.regime() != Regime::Super) return;
    try {
      graph_ = build_graph(x, base);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
    }
  }

  bool contains(const FieldElement& v) {
    if (!base_.in_hull(v)) return false;
    if (base_.regime() != Regime::Super) return true;
    if (graph_) {
      if (!lookup_) {
        lookup_.emplace();
        for (std::size_t i = 0; i < graph_->size(); ++i) lookup_->emplace(graph_->nodes[i], true);
      }
      // Every remainder of x that lies in E_q survives pruning.
      return lookup_->contains(v);
    }
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    const bool in = !build_graph(v, base_).empty();
    memo_.emplace(v, in);
    return in;
  }

 private:
  const Base& base_;
  std::optional<ExpansionGraph> graph_;
  std::optional<std::unordered_map<FieldElement, bool, FieldElementHash>> lookup_;
  std::unordered_map<FieldElement, bool, FieldElementHash> memo_;
};

void check_depth(std::size_t depth) {
  if (depth > kMaxExactDepth) {
    throw Error(ErrorKind::OutOfRange, "exact prefix counting is limited to depth " + std::to_string(kMaxExactDepth));
  }
}

}  // namespace

BigInt count_prefixes_to_depth(const FieldElement& x, const Base& base, std::size_t depth) {
  check_depth(depth);
  AttractorOracle oracle(x, base);
  if (!oracle.contains(x)) return BigInt(0);
  std::unordered_map<FieldElement, BigInt, FieldElementHash> layer{{x, BigInt(1)}};
  for (std::size_t i = 0; i < depth; ++i) {
    std::unordered_map<FieldElement, BigInt, FieldElementHash> next;
    for (const auto& [v, n] : layer) {
      const FieldElement qv = v * base.q();
      for (Digit d : kAscending) {
        FieldElement w = qv - base.digit_value(d);
        if (oracle.contains(w)) next[std::move(w)] += n;
      }
    }
    layer = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [v, n] : layer) total += n;
  return total;
}

BigInt count_prefixes_to_depth(const RationalInterval& x, const Base& base, std::size_t depth) {
  const Rational width = dyadic_width(80);
  const RationalInterval q = base.q().enclose(width);
  const RationalInterval m = base.attractor_max().enclose(width);
  auto clip = [&](RationalInterval j) -> std::optional<RationalInterval> {
    if (j.hi < 0 || j.lo > m.hi) return std::nullopt;
    return RationalInterval{std::max(j.lo, Rational(0)), std::min(j.hi, m.hi)};
  };
  std::vector<RationalInterval> layer;
  if (auto j = clip(x)) layer.push_back(*j);
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<RationalInterval> next;
    for (const auto& j : layer) {
      const RationalInterval scaled = j * q;
      for (Digit d : kAscending) {
        const RationalInterval shifted = d == Digit::Zero  ? scaled
                                         : d == Digit::One ? scaled + Rational(-1)
                                                           : scaled - q;
        if (auto c = clip(shifted)) next.push_back(*c);
      }
    }
    layer = std::move(next);
  }
  return BigInt(static_cast<unsigned long>(layer.size()));
}

std::vector<DigitString> prefixes_to_depth(const FieldElement& x, const Base& base, std::size_t depth) {
  check_depth(depth);
  AttractorOracle oracle(x, base);
  std::vector<DigitString> out;
  if (!oracle.contains(x)) return out;
  std::vector<std::pair<DigitString, FieldElement>> layer{{{}, x}};
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<std::pair<DigitString, FieldElement>> next;
    for (const auto& [s, v] : layer) {
      const FieldElement qv = v * base.q();
      for (Digit d : kAscending) {
        FieldElement w = qv - base.digit_value(d);
        if (!oracle.contains(w)) continue;
        DigitString t = s;
        t.push_back(d);
        next.emplace_back(std::move(t), std::move(w));
      }
    }
    layer = std::move(next);
  }
  for (auto& [s, v] : layer) out.push_back(std::move(s));
  return out;
}

}  // namespace triexp
