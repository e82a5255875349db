#include "bnscope/report.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

namespace bnscope {

namespace {

using Json = nlohmann::ordered_json;

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}

  template <typename Fn>
  auto run(const char* phase, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      PhaseClock& clock;
      const char* phase;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
        clock.sink_.emplace_back(phase, d.count());
      }
    } record{*this, phase, start};
    return fn();
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
};

Json state_json(Word x, int n) { return Json{{"state", to_bitstring(x, n)}, {"word", x}}; }

const char* filter_name(SignFilter f) {
  switch (f) {
    case SignFilter::Positive: return "positive";
    case SignFilter::Negative: return "negative";
    case SignFilter::All: break;
  }
  return "all";
}

std::string sign_text(Sign s) { return std::string(1, sign_char(s)); }

CycleCensus count_local(const std::vector<LocalCycle>& cycles) {
  CycleCensus c;
  for (const auto& lc : cycles) (lc.cycle.sign == Sign::Positive ? c.positive : c.negative)++;
  return c;
}

}  // namespace

AnalysisReport analyze(const BooleanNetwork& f, const AnalysisOptions& options) {
  AnalysisReport r;
  r.n = f.dimension();
  r.source = options.source;
  PhaseClock clock(r.timings);
  if (options.fixed_points) r.fixed_points = clock.run("fixed_points", [&] { return fixed_points(f); });
  if (options.attractors) r.attractors = clock.run("attractors", [&] { return attractors(f); });
  r.global_graph = clock.run("global_graph", [&] { return global_graph(f); });
  clock.run("global_cycles", [&] {
    try {
      CycleCensus census;
      for (const auto& c : enumerate_cycles(r.global_graph)) {
        (c.sign == Sign::Positive ? census.positive : census.negative)++;
      }
      r.global_cycles = census;
    } catch (const CycleLimitExceeded&) {
      r.global_cycles.reset();
    }
    return 0;
  });
  if (options.local_cycles) {
    r.local_filter = *options.local_cycles;
    r.local_cycles = clock.run("local_cycles", [&] { return local_cycles(f, *options.local_cycles); });
  }
  if (options.nonexpansive) r.nonexpansive = clock.run("nonexpansive", [&] { return is_nonexpansive(f); });
  return r;
}

std::string AnalysisReport::to_json(bool with_timings) const {
  Json j;
  j["schema"] = "bnscope.analysis/1";
  j["network"] = Json{{"n", n}, {"source", source}};
  if (fixed_points) {
    Json list = Json::array();
    for (Word x : *fixed_points) list.push_back(state_json(x, n));
    j["fixed_points"] = list;
  }
  if (attractors) {
    Json list = Json::array();
    for (const auto& a : *attractors) {
      Json states = Json::array();
      for (Word x : a.states) states.push_back(state_json(x, n));
      list.push_back(Json{{"size", a.states.size()},
                          {"states", states},
                          {"is_fixed_point", a.is_fixed_point},
                          {"is_cyclic", a.is_cyclic},
                          {"is_attractive_cycle", a.is_attractive_cycle},
                          {"is_antipodal", a.is_antipodal}});
    }
    j["attractors"] = list;
  }
  Json edges = Json::array();
  for (const auto& e : global_graph.edges()) {
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"sign", sign_text(e.sign)}});
  }
  j["global_graph"] = Json{{"vertices", global_graph.vertex_count()}, {"edges", edges}};

  Json census;
  if (global_cycles) {
    census["global"] = Json{{"positive", global_cycles->positive}, {"negative", global_cycles->negative}};
  } else {
    census["global"] = nullptr;
  }
  if (local_cycles) {
    const CycleCensus local = count_local(*local_cycles);
    const bool pos = local_filter != SignFilter::Negative;
    const bool neg = local_filter != SignFilter::Positive;
    census["filter"] = filter_name(local_filter);
    census["local"] = Json{{"positive", pos ? Json(local.positive) : Json()},
                           {"negative", neg ? Json(local.negative) : Json()}};
    if (global_cycles) {
      census["nonlocal"] = Json{{"positive", pos ? Json(global_cycles->positive - local.positive) : Json()},
                                {"negative", neg ? Json(global_cycles->negative - local.negative) : Json()}};
    }
    Json list = Json::array();
    for (const auto& lc : *local_cycles) {
      Json signs = Json::array();
      for (Sign s : lc.cycle.signs) signs.push_back(sign_text(s));
      list.push_back(Json{{"vertices", lc.cycle.vertices},
                          {"signs", signs},
                          {"sign", sign_text(lc.cycle.sign)},
                          {"witness", state_json(lc.witness, n)}});
    }
    census["local_cycles"] = list;
  }
  j["cycles"] = census;
  if (nonexpansive) j["nonexpansive"] = *nonexpansive;
  if (with_timings) {
    Json t;
    for (const auto& [phase, seconds] : timings) t[phase] = seconds;
    j["timings"] = t;
  }
  return j.dump(2) + "\n";
}

std::string AnalysisReport::to_text(bool with_timings) const {
  std::ostringstream out;
  out << "network: n = " << n;
  if (!source.empty()) out << " (" << source << ")";
  out << "\n";
  if (fixed_points) {
    out << "fixed points: " << fixed_points->size() << "\n";
    for (Word x : *fixed_points) out << "  " << to_bitstring(x, n) << "\n";
  }
  if (attractors) {
    out << "attractors: " << attractors->size() << "\n";
    for (const auto& a : *attractors) {
      out << "  size " << a.states.size();
      if (a.is_fixed_point) out << ", fixed point";
      if (a.is_cyclic) out << ", cyclic";
      if (a.is_attractive_cycle) out << ", attractive cycle";
      if (a.is_antipodal) out << ", antipodal";
      out << ":";
      const std::size_t shown = std::min<std::size_t>(a.states.size(), 16);
      for (std::size_t t = 0; t < shown; ++t) out << ' ' << to_bitstring(a.states[t], n);
      if (shown < a.states.size()) out << " ...";
      out << "\n";
    }
  }
  out << "global graph: " << global_graph.edge_count() << " edges\n";
  if (global_cycles) {
    out << "global cycles: " << global_cycles->positive << " positive, " << global_cycles->negative
        << " negative\n";
  } else {
    out << "global cycles: more than the enumeration cap\n";
  }
  if (local_cycles) {
    const CycleCensus local = count_local(*local_cycles);
    out << "local cycles (" << filter_name(local_filter) << "):";
    if (local_filter != SignFilter::Negative) out << ' ' << local.positive << " positive";
    if (local_filter == SignFilter::All) out << ',';
    if (local_filter != SignFilter::Positive) out << ' ' << local.negative << " negative";
    out << "\n";
    for (const auto& lc : *local_cycles) {
      out << "  " << lc.cycle.to_string() << " at " << to_bitstring(lc.witness, n) << "\n";
    }
  }
  if (nonexpansive) out << "non-expansive: " << (*nonexpansive ? "yes" : "no") << "\n";
  if (with_timings) {
    for (const auto& [phase, seconds] : timings) out << "time " << phase << ": " << seconds << " s\n";
  }
  return out.str();
}

std::string async_dot(const BooleanNetwork& f, std::string_view name) {
  const int n = f.dimension();
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    out << "  \"" << to_bitstring(static_cast<Word>(x), n) << "\";\n";
  }
  for (const auto& [from, to] : async_edges(f)) {
    out << "  \"" << to_bitstring(from, n) << "\" -> \"" << to_bitstring(to, n) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bnscope
