#pragma once

#include <string>
#include <vector>

#include "bounds.hpp"
#include "code.hpp"
#include "construct.hpp"
#include "decode.hpp"
#include "oracle.hpp"
#include "search.hpp"

namespace whm {

/// Exact figures of one code plus the bounds at its capability.
struct CodeAnalysis {
  std::size_t length = 0;
  std::size_t dimension = 0;
  long min_distance = 0;
  long capability = 0;
  CapabilityInterval bracket{0, 0};  // implied by min_distance
  long singleton_capability = 0;     // best capability at this dimension
  long packing_k = 0;                // dimension bounds at the capability
  long singleton_k = 0;
  long lp_k = 0;
  long covering_k = 0;
};

CodeAnalysis analyze_code(const LinearCode& code, const WeightedSpace& space, const OracleLimits& limits = {},
                          bool with_lp = true);

std::string bound_table_csv(const BoundTable& table, bool with_optimum = false);
std::string bound_table_json(const BoundTable& table);
std::string profiles_text(const std::vector<WeightProfile>& profiles);
std::string gcc_summary_json(const GccCode& gcc);
std::string decode_report_json(const DecodeReport& report);
std::string analysis_json(const CodeAnalysis& analysis);
std::string decoder_check_json(const DecoderCheckReport& report, long t);
/// "t,k" (or "d,k") rows of a frontier; with_recipe appends a quoted recipe column.
std::string frontier_csv(const std::vector<SearchPoint>& points, bool by_distance, bool with_recipe = false);

}  // namespace whm
