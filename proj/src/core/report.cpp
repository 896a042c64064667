#include "report.hpp"

#include <json.hpp>
#include <sstream>

namespace whm {

using json = nlohmann::ordered_json;

CodeAnalysis analyze_code(const LinearCode& code, const WeightedSpace& space, const OracleLimits& limits, bool with_lp) {
  CodeAnalysis a;
  a.length = code.length();
  a.dimension = code.dimension();
  a.min_distance = exact_min_weighted_distance(code, space, limits);
  a.capability = exact_capability(code, space, limits);
  a.bracket = t_interval_from_d(space, a.min_distance);
  a.singleton_capability = singleton_bound(space, static_cast<long>(a.dimension));
  a.packing_k = packing_bound(space, a.capability);
  a.singleton_k = singleton_k_for_t(space, a.capability);
  a.lp_k = with_lp ? lp_bound(space, a.capability) : -1;
  a.covering_k = covering_bound(space, a.capability);
  return a;
}

std::string bound_table_csv(const BoundTable& table, bool with_optimum) {
  std::ostringstream out;
  out << "t,packing,singleton,lp,covering" << (with_optimum ? ",lp_optimum" : "") << '\n';
  for (const auto& r : table.rows) {
    out << r.t << ',' << r.packing << ',' << r.singleton << ',' << r.lp << ',' << r.covering;
    if (with_optimum) out << ',' << r.lp_optimum.get_str();
    out << '\n';
  }
  return out.str();
}

std::string bound_table_json(const BoundTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"t", r.t},
                    {"packing", r.packing},
                    {"singleton", r.singleton},
                    {"lp", r.lp},
                    {"covering", r.covering},
                    {"lp_optimum", r.lp_optimum.get_str()}});
  }
  return rows.dump(2) + "\n";
}

std::string profiles_text(const std::vector<WeightProfile>& profiles) {
  std::string out;
  for (const auto& p : profiles) out += profile_to_string(p) + "\n";
  return out;
}

std::string gcc_summary_json(const GccCode& gcc) {
  json levels = json::array();
  for (std::size_t j = 0; j < gcc.levels(); ++j) {
    json sizes = json::array(), inner = json::array();
    for (std::size_t l = 0; l < gcc.blocks(); ++l) {
      sizes.push_back(gcc.symbol_size(j, l));
      inner.push_back(gcc.inner_distance(j, l));
    }
    levels.push_back({{"outer_dimension", gcc.outer(j).dimension()},
                      {"outer_distance", gcc.outer_distance(j)},
                      {"symbol_sizes", sizes},
                      {"inner_distances", inner}});
  }
  json j = {{"N", gcc.length()},
            {"k", gcc.dimension()},
            {"designed_distance", gcc.designed_distance()},
            {"capability_bound", gcc.capability_bound()},
            {"levels", levels}};
  return j.dump(2) + "\n";
}

std::string decode_report_json(const DecodeReport& report) {
  json levels = json::array();
  for (const auto& lv : report.levels) {
    json inner = json::array(), rel = json::array(), syms = json::array();
    for (const auto& b : lv.blocks) {
      if (b.zero_width) {
        inner.push_back("empty");
      } else if (b.failed) {
        inner.push_back("FAIL");
      } else {
        inner.push_back(b.estimate);
      }
      rel.push_back(b.reliability);
      syms.push_back(b.symbol);
    }
    json outer = lv.outer_failed ? json("FAIL") : json(lv.outer_decision);
    levels.push_back({{"inner", inner},
                      {"symbols", syms},
                      {"reliabilities", rel},
                      {"outer", outer},
                      {"correlation", lv.correlation},
                      {"candidates", lv.candidates}});
  }
  const std::string status =
      report.ok() ? "ok" : "outer-failure-at-level-" + std::to_string(*report.failed_level + 1);
  json j = {{"codeword", report.codeword}, {"levels", levels}, {"status", status}};
  return j.dump(2) + "\n";
}

std::string analysis_json(const CodeAnalysis& a) {
  json bounds = {{"packing_k", a.packing_k},
                 {"singleton_k", a.singleton_k},
                 {"covering_k", a.covering_k},
                 {"singleton_capability", a.singleton_capability}};
  if (a.lp_k >= 0) bounds["lp_k"] = a.lp_k;
  json j = {{"N", a.length},
            {"k", a.dimension},
            {"d", a.min_distance},
            {"t", a.capability},
            {"t_bracket", {a.bracket.low, a.bracket.high}},
            {"bounds_at_t", bounds}};
  return j.dump(2) + "\n";
}

std::string decoder_check_json(const DecoderCheckReport& r, long t) {
  json j = {{"t", t},
            {"total", r.total},
            {"failures", r.failures},
            {"codewords", r.codewords},
            {"errors", r.errors},
            {"sampled", r.sampled}};
  if (r.counterexample_codeword) {
    j["counterexample"] = {{"codeword", *r.counterexample_codeword}, {"error", *r.counterexample_error}};
  }
  return j.dump(2) + "\n";
}

std::string frontier_csv(const std::vector<SearchPoint>& points, bool by_distance, bool with_recipe) {
  std::ostringstream out;
  out << (by_distance ? "d,k" : "t,k") << (with_recipe ? ",recipe" : "") << '\n';
  for (const auto& p : points) {
    out << (by_distance ? p.d : p.t) << ',' << p.k;
    if (with_recipe) out << ",\"" << p.recipe << '"';
    out << '\n';
  }
  return out.str();
}

}  // namespace whm
