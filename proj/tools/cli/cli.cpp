#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "parse.hpp"
#include "triexp/census.hpp"
#include "triexp/dimension.hpp"
#include "triexp/verify.hpp"

namespace triexp::cli {

using nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CapExceeded: return kExitCap;
    case ErrorKind::Io: return kExitIo;
    default: return kExitUsage;
  }
}

namespace {

struct Common {
  bool json = false;
  int precision = kDefaultPrecision;
};

ordered_json header(const char* command) { return ordered_json{{"schema", 1}, {"command", command}}; }

ordered_json approx(const DimReport& r, double v) {
  return {{"decimal", r.decimal(v)}, {"precision", r.precision}, {"provenance", "approximated"}};
}

ordered_json dim_json(const DimReport& r) {
  if (r.is_exact()) {
    ordered_json j{{"kind", "exact"}, {"formula", r.formula()}};
    j["value"] = approx(r, r.value());
    return j;
  }
  return {{"kind", "bounds"}, {"lo", approx(r, r.lo)}, {"hi", approx(r, r.hi)}};
}

std::string dim_text(const DimReport& r) {
  if (r.is_exact()) {
    return r.decimal(r.value()) + " (exact " + r.formula() + ", " + std::to_string(r.precision) + " digits)";
  }
  return "[" + r.decimal(r.lo) + ", " + r.decimal(r.hi) + "] (bounds, " + std::to_string(r.precision) + " digits)";
}

ordered_json base_json(const Base& b) {
  return {{"value", b.describe()}, {"decimal", b.value().to_decimal(12)}, {"regime", to_string(b.regime())}};
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// ---- expand ----

struct ExpandArgs {
  std::string x, base, mode = "greedy";
  std::size_t n = 20;
};

int cmd_expand(const ExpandArgs& a, const Common& c, std::ostream& out) {
  const Base b = parse_base(a.base);
  const FieldElement x = parse_point(a.x, b);
  FiniteWord digits;
  std::optional<FieldElement> remainder;
  if (a.mode == "greedy") {
    GreedyResult g = greedy_digits(x, b, a.n);
    digits = std::move(g.word);
    remainder = std::move(g.remainder);
  } else {
    digits = quasi_greedy_digits(x, b, a.n);
    FieldElement qn = b.element(Rational(1));
    for (std::size_t i = 0; i < a.n; ++i) qn = qn * b.q();
    remainder = (x - eval(digits.digits, b)) * qn;
  }
  if (c.json) {
    ordered_json j = header("expand");
    j["base"] = base_json(b);
    j["x"] = x.to_string();
    j["mode"] = a.mode;
    j["digits"] = digits.to_string();
    j["remainder"] = {{"exact", remainder->to_string()}, {"provenance", "exact"}};
    emit(out, j);
  } else {
    out << digits.to_string() << "\n";
    out << "remainder: " << remainder->to_string() << "\n";
  }
  return kExitOk;
}

// ---- alpha ----

int cmd_alpha(const std::string& base, std::size_t n, const Common& c, std::ostream& out) {
  const Base b = parse_base(base);
  const AlphaExpansion a = alpha(b, n);
  if (c.json) {
    ordered_json j = header("alpha");
    j["base"] = base_json(b);
    j["prefix"] = a.prefix.to_string();
    j["closure"] = a.closure ? ordered_json(a.closure->to_string()) : ordered_json(nullptr);
    emit(out, j);
  } else {
    out << a.prefix.to_string() << "\n";
    out << "closure: " << (a.closure ? a.closure->to_string() : "none within " + std::to_string(n) + " digits") << "\n";
  }
  return kExitOk;
}

// ---- count ----

struct CountArgs {
  std::string word, x, base;
  std::optional<std::size_t> cap;
  bool diagnose = false;
};

const char* branch_text(const BranchDiagnostic& d, std::string& buf) {
  if (!d.usable) return "0";
  buf = std::string(to_string(d.kind));
  if (d.kind == Cardinality::Kind::Finite) buf += " " + std::to_string(d.count);
  return buf.c_str();
}

int cmd_count(const CountArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const Base b = parse_base(a.base);
  const std::size_t cap = a.cap ? *a.cap : node_cap_from_env();
  const std::string& text = a.word.empty() ? a.x : a.word;
  const FieldElement x = a.word.empty() ? parse_point(text, b) : eval(EPWord::parse(text), b);
  const Cardinality card = classify(x, b, cap);
  std::optional<NullInfiniteReport> diag;
  if (a.diagnose && card.kind != Cardinality::Kind::UnresolvedAtCap) diag = null_infinite_check(x, b, cap);

  if (c.json) {
    ordered_json j = header("count");
    j["base"] = base_json(b);
    j["x"] = x.to_string();
    j["class"] = to_string(card.kind);
    if (card.kind == Cardinality::Kind::Finite) j["count"] = card.count;
    j["witnesses"] = ordered_json::array();
    for (const auto& w : card.witnesses) j["witnesses"].push_back(w.to_string());
    j["explored_nodes"] = card.explored_nodes;
    j["evidence"] = card.evidence;
    if (diag) {
      ordered_json nodes = ordered_json::array();
      for (const auto& n : diag->switch_nodes) {
        ordered_json branches = ordered_json::object();
        std::string buf;
        for (const auto& br : n.branches) branches[std::string(1, to_char(br.digit))] = branch_text(br, buf);
        nodes.push_back({{"value", n.value.to_string()}, {"branches", branches}});
      }
      j["null_infinite"] = diag->null_infinite;
      j["switch_nodes"] = nodes;
    }
    emit(out, j);
  } else {
    out << describe(card) << "\n";
    for (const auto& w : card.witnesses) out << w.to_string() << "\n";
    if (diag) {
      out << "null-infinite: " << (diag->null_infinite ? "yes" : "no") << "\n";
      for (const auto& n : diag->switch_nodes) {
        out << "  " << n.value.to_string() << ":";
        std::string buf;
        for (const auto& br : n.branches) out << " " << to_char(br.digit) << "->" << branch_text(br, buf);
        out << "\n";
      }
    }
  }
  if (card.kind == Cardinality::Kind::UnresolvedAtCap) {
    err << "unresolved after " << card.explored_nodes << " nodes; raise --cap or TRIEXP_NODE_CAP\n";
    return kExitCap;
  }
  return kExitOk;
}

// ---- classify-base ----

int cmd_classify_base(const std::string& base, const Common& c, std::ostream& out) {
  const Base b = parse_base(base);
  const BaseMembership m = classify_base(b);
  if (c.json) {
    ordered_json j = header("classify-base");
    j["base"] = base_json(b);
    j["B_1"] = m.unique;
    j["B_k"] = m.multiple_k;
    j["B_aleph0"] = m.countable;
    j["B_continuum"] = m.continuum;
    emit(out, j);
  } else {
    auto yes = [](bool v) { return v ? "yes" : "no"; };
    out << "regime: " << to_string(b.regime()) << "\n";
    out << "B_1: " << yes(m.unique) << "\n";
    out << "B_k (k>=2): " << yes(m.multiple_k) << "\n";
    out << "B_aleph0: " << yes(m.countable) << "\n";
    out << "B_continuum: " << yes(m.continuum) << "\n";
  }
  return kExitOk;
}

// ---- dim ----

struct DimArgs {
  std::string base, what = "all";
  std::size_t k = 2;
  std::size_t depth = kDefaultBlockDepth;
};

int cmd_dim(const DimArgs& a, const Common& c, std::ostream& out) {
  const Base b = parse_base(a.base);
  const int p = c.precision;
  std::vector<std::pair<std::string, std::variant<DimReport, std::string>>> rows;
  auto add = [&](std::string name, auto&& compute) {
    try {
      rows.emplace_back(std::move(name), compute());
    } catch (const Error& e) {
      if (a.what != "all") throw;
      rows.emplace_back(std::move(name), std::string(e.what()));
    }
  };
  const bool all = a.what == "all";
  if (all || a.what == "attractor") add("dim_E", [&] { return dim_attractor(b, p); });
  if (all || a.what == "univoque") add("dim_U", [&] { return dim_univoque(b, p, a.depth); });
  if (all || a.what == "multi") add("dim_U_k", [&] { return dim_multi(b, a.k, p, a.depth); });
  if (all || a.what == "continuum") add("dim_U_continuum", [&] { return dim_continuum(b, p); });
  if (a.what == "bounds") add("dim_U_bounds", [&] { return dim_univoque_bounds(b, a.depth, p); });
  std::optional<DeltaBound> delta;
  if ((all && b.regime() == Regime::Middle) || a.what == "delta") delta = delta_lower_bound(b, p);
  if (rows.empty() && !delta) throw Error(ErrorKind::InvalidArgument, "unknown dimension '" + a.what + "'");

  if (c.json) {
    ordered_json j = header("dim");
    j["base"] = base_json(b);
    for (const auto& [name, v] : rows) {
      j[name] = std::holds_alternative<DimReport>(v) ? dim_json(std::get<DimReport>(v))
                                                     : ordered_json{{"error", std::get<std::string>(v)}};
    }
    if (delta) j["delta"] = {{"m", delta->m}, {"bound", dim_json(delta->bound)}};
    emit(out, j);
  } else {
    for (const auto& [name, v] : rows) {
      out << name << (name == "dim_U_k" ? " (k=" + std::to_string(a.k) + ")" : "") << ": "
          << (std::holds_alternative<DimReport>(v) ? dim_text(std::get<DimReport>(v)) : std::get<std::string>(v))
          << "\n";
    }
    if (delta) out << "delta (m=" << delta->m << "): " << dim_text(delta->bound) << "\n";
  }
  return kExitOk;
}

// ---- witness ----

int cmd_witness(const std::string& base, std::size_t k, std::optional<std::size_t> cap, const Common& c,
                std::ostream& out, std::ostream& err) {
  const Base b = parse_base(base);
  const BkWitness w = witness_for_Bk(b, k, cap ? *cap : node_cap_from_env());
  if (c.json) {
    ordered_json j = header("witness");
    j["base"] = base_json(b);
    j["k"] = k;
    j["word"] = w.word.to_string();
    j["m"] = w.gap_index ? ordered_json(*w.gap_index) : ordered_json(nullptr);
    j["verification"] = describe(w.verification);
    emit(out, j);
  } else {
    out << w.word.to_string() << "\n";
    if (w.gap_index) out << "m: " << *w.gap_index << "\n";
    out << "verified: " << describe(w.verification) << "\n";
  }
  if (!w.verified()) {
    err << "witness could not be verified within the node cap\n";
    return kExitCap;
  }
  return kExitOk;
}

// ---- sweep ----

struct SweepArgs {
  std::string qmin, qmax, out = "-";
  std::size_t steps = 11;
  std::size_t depth = kDefaultBlockDepth;
  unsigned threads = 0;
};

std::string sweep_row(const Rational& q, std::size_t depth, int precision) {
  const Base b = Base::rational(q);
  const DimReport e = dim_attractor(b, precision);
  const DimReport u = dim_univoque(b, precision, depth);
  std::ostringstream row;
  row << to_decimal(q, precision) << "," << e.decimal(e.value()) << "," << u.decimal(u.lo) << "," << u.decimal(u.hi)
      << ",";
  if (b.regime() == Regime::Middle) {
    const DeltaBound d = delta_lower_bound(b, precision);
    row << d.m << "," << d.bound.decimal(d.bound.value());
  } else {
    row << ",";
  }
  return row.str();
}

int cmd_sweep(const SweepArgs& a, const Common& c, std::ostream& out) {
  const Rational lo = parse_rational(a.qmin);
  const Rational hi = parse_rational(a.qmax);
  if (!(lo > 1) || !(lo < hi)) throw Error(ErrorKind::InvalidArgument, "sweep needs 1 < qmin < qmax");
  if (a.steps == 0) throw Error(ErrorKind::InvalidArgument, "steps must be at least 1");

  std::vector<Rational> grid;
  for (std::size_t i = 0; i < a.steps; ++i) {
    grid.push_back(a.steps == 1 ? lo : lo + (hi - lo) * make_rational(static_cast<long>(i), static_cast<long>(a.steps - 1)));
  }
  // Open the destination first so an unwritable path fails before the work.
  std::ofstream file;
  if (a.out != "-") {
    file.open(a.out);
    if (!file) throw Error(ErrorKind::Io, "cannot write '" + a.out + "'");
  }

  std::vector<std::string> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(a.threads ? a.threads : hw, grid.size()));
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = sweep_row(grid[i], a.depth, c.precision);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::ostream& dest = a.out == "-" ? out : file;
  dest << "q,dim_E,dim_U_lo,dim_U_hi,delta_m,delta_bound\n";
  for (const auto& r : rows) dest << r << "\n";
  dest.flush();
  if (!dest) throw Error(ErrorKind::Io, "write to '" + a.out + "' failed");
  if (a.out != "-") out << "wrote " << rows.size() << " rows to " << a.out << "\n";
  return kExitOk;
}

// ---- verify-paper ----

int cmd_verify(std::uint64_t seed, const Common& c, std::ostream& out) {
  const auto results = run_acceptance(seed);
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (c.json) {
    ordered_json j = header("verify-paper");
    j["checks"] = ordered_json::array();
    for (const auto& r : results) {
      j["checks"].push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    j["passed"] = passed;
    j["total"] = results.size();
    emit(out, j);
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << "\n";
    }
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return passed == static_cast<std::ptrdiff_t>(results.size()) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expansions in base q over the digits 0, 1 and q", "triexp"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Emit a JSON report");
  app.add_option("--precision", common.precision, "Decimal digits in printed values")
      ->check(CLI::Range(0, kMaxPrecision));

  ExpandArgs ea;
  auto* expand = app.add_subcommand("expand", "Greedy or quasi-greedy digits of a point");
  expand->add_option("--x", ea.x, "Word pre(per)* or value in q")->required();
  expand->add_option("--base", ea.base, "Base")->required();
  expand->add_option("--mode", ea.mode, "greedy or quasi-greedy")
      ->check(CLI::IsMember({"greedy", "quasi-greedy"}));
  expand->add_option("--n", ea.n, "Number of digits");

  std::string alpha_base;
  std::size_t alpha_n = 32;
  auto* alpha_cmd = app.add_subcommand("alpha", "Quasi-greedy expansion of q - 1");
  alpha_cmd->add_option("--base", alpha_base, "Base")->required();
  alpha_cmd->add_option("--n", alpha_n, "Number of digits");

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Cardinality of the set of expansions of a point");
  auto* word_opt = count->add_option("--word", ca.word, "Point as a word pre(per)*");
  auto* x_opt = count->add_option("--x", ca.x, "Point as a word or value in q");
  word_opt->excludes(x_opt);
  count->add_option("--base", ca.base, "Base")->required();
  count->add_option("--cap", ca.cap, "Node cap for the follower graph")->check(CLI::PositiveNumber);
  count->add_flag("--diagnose", ca.diagnose, "Show branch classes at switch nodes");

  std::string cb_base;
  auto* cb = app.add_subcommand("classify-base", "Which cardinality classes occur for this base");
  cb->add_option("--base", cb_base, "Base")->required();

  DimArgs da;
  auto* dim = app.add_subcommand("dim", "Hausdorff dimensions");
  dim->add_option("--base", da.base, "Base")->required();
  dim->add_option("--what", da.what, "all, attractor, univoque, multi, continuum, bounds or delta")
      ->check(CLI::IsMember({"all", "attractor", "univoque", "multi", "continuum", "bounds", "delta"}));
  dim->add_option("--k", da.k, "Multiplicity for --what multi")->check(CLI::PositiveNumber);
  dim->add_option("--depth", da.depth, "Block length for subshift bounds");

  std::string wb;
  std::size_t wk = 1;
  std::optional<std::size_t> wcap;
  auto* witness = app.add_subcommand("witness", "A point with exactly k expansions");
  witness->add_option("--base", wb, "Base")->required();
  witness->add_option("--k", wk, "Number of expansions")->required()->check(CLI::PositiveNumber);
  witness->add_option("--cap", wcap, "Node cap for verification")->check(CLI::PositiveNumber);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Dimension table over a rational grid of bases");
  sweep->add_option("--qmin", sa.qmin, "Smallest base")->required();
  sweep->add_option("--qmax", sa.qmax, "Largest base")->required();
  sweep->add_option("--steps", sa.steps, "Number of grid points");
  sweep->add_option("--depth", sa.depth, "Block length for subshift bounds");
  sweep->add_option("--out", sa.out, "CSV path, - for stdout");
  sweep->add_option("--threads", sa.threads, "Worker threads, 0 for all cores");

  std::uint64_t seed = kDefaultCheckSeed;
  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance checks");
  verify->alias("verify");
  verify->add_option("--seed", seed, "Seed for the sampled checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(ea, common, out);
    if (*alpha_cmd) return cmd_alpha(alpha_base, alpha_n, common, out);
    if (*count) {
      if (ca.word.empty() && ca.x.empty()) throw Error(ErrorKind::InvalidArgument, "count needs --word or --x");
      return cmd_count(ca, common, out, err);
    }
    if (*cb) return cmd_classify_base(cb_base, common, out);
    if (*dim) return cmd_dim(da, common, out);
    if (*witness) return cmd_witness(wb, wk, wcap, common, out, err);
    if (*sweep) return cmd_sweep(sa, common, out);
    if (*verify) return cmd_verify(seed, common, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace triexp::cli
