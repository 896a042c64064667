#include "decode.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace whm {

GmdOutcome gmd_decode(const PolyalphabeticCode& outer, std::size_t distance, std::span<const Vector> symbols,
                      std::span<const long> reliabilities) {
  const std::size_t n = outer.symbol_count();
  if (symbols.size() != n || reliabilities.size() != n) {
    throw ParameterError("GMD decoding needs one symbol and one reliability per outer position");
  }
  Vector received;
  received.reserve(outer.total_length());
  std::vector<std::size_t> effective;
  for (std::size_t i = 0; i < n; ++i) {
    if (symbols[i].size() != static_cast<std::size_t>(outer.symbol_sizes()[i])) {
      throw ParameterError("outer symbol " + std::to_string(i + 1) + " has the wrong width");
    }
    if (reliabilities[i] < 0) throw ParameterError("reliabilities must be non-negative");
    received.insert(received.end(), symbols[i].begin(), symbols[i].end());
    if (outer.symbol_sizes()[i] > 0) effective.push_back(i);
  }
  std::stable_sort(effective.begin(), effective.end(),
                   [&](std::size_t a, std::size_t b) { return reliabilities[a] < reliabilities[b]; });

  std::vector<Vector> candidates;
  const std::size_t max_erasures = std::min(distance - 1, effective.size());
  for (std::size_t theta = 0; theta <= max_erasures; ++theta) {
    const std::span<const std::size_t> erased(effective.data(), theta);
    auto c = erasure_decode(outer, received, erased, distance);
    if (c && std::find(candidates.begin(), candidates.end(), *c) == candidates.end()) candidates.push_back(std::move(*c));
  }

  GmdOutcome out;
  out.candidates = candidates.size();
  for (const auto& c : candidates) {
    long corr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (outer.symbol_sizes()[i] == 0) continue;
      const auto a = outer.symbol(c, i);
      corr += std::equal(a.begin(), a.end(), symbols[i].begin()) ? reliabilities[i] : -reliabilities[i];
    }
    if (!out.codeword || corr > out.correlation) {
      out.codeword = c;
      out.correlation = corr;
    }
  }
  return out;
}

DecodeReport gcc_decode(const GccCode& gcc, std::span<const Element> received) {
  if (received.size() != gcc.length()) {
    throw ParameterError("received word has length " + std::to_string(received.size()) + ", expected " +
                         std::to_string(gcc.length()));
  }
  const Field& f = gcc.field();
  for (auto x : received) {
    if (!f.contains(x)) throw ParameterError("received symbol " + std::to_string(x) + " is not in " + f.describe());
  }
  const WeightedSpace& space = gcc.space();
  DecodeReport report;
  report.codeword.assign(gcc.length(), 0);
  Vector residual(received.begin(), received.end());

  for (std::size_t j = 0; j < gcc.levels(); ++j) {
    LevelRecord level;
    std::vector<Vector> symbols;
    std::vector<long> reliabilities;
    for (std::size_t l = 0; l < gcc.blocks(); ++l) {
      InnerRecord rec;
      const auto width = static_cast<std::size_t>(gcc.symbol_size(j, l));
      const std::span<const Element> block(residual.data() + space.offset(l), static_cast<std::size_t>(space.blocks()[l]));
      if (width == 0) {
        rec.zero_width = true;
      } else if (auto b = gcc.chain(l).code(j).bmd_decode(block)) {
        rec.symbol = gcc.chain(l).quotient_decode_message(j, *b);
        const long d = static_cast<long>(gcc.inner_distance(j, l));
        const long dist = static_cast<long>(hamming_distance(block, *b));
        rec.reliability = space.lambda()[l] * std::max(0L, d - 2 * dist);
        rec.estimate = std::move(*b);
      } else {
        rec.failed = true;
        rec.symbol.assign(width, 0);
      }
      symbols.push_back(rec.symbol);
      reliabilities.push_back(rec.reliability);
      level.blocks.push_back(std::move(rec));
    }

    const PolyalphabeticCode& outer = gcc.outer(j);
    GmdOutcome gmd = gmd_decode(outer, gcc.outer_distance(j), symbols, reliabilities);
    level.candidates = gmd.candidates;
    if (gmd.codeword) {
      level.outer_decision = std::move(*gmd.codeword);
      level.correlation = gmd.correlation;
    } else {
      level.outer_failed = true;
      level.outer_decision.assign(outer.total_length(), 0);
      if (!report.failed_level) report.failed_level = j;
    }

    for (std::size_t l = 0; l < gcc.blocks(); ++l) {
      const Vector part = gcc.chain(l).quotient_encode(j, outer.symbol(level.outer_decision, l));
      const auto off = static_cast<std::size_t>(space.offset(l));
      for (std::size_t i = 0; i < part.size(); ++i) {
        report.codeword[off + i] = f.add(report.codeword[off + i], part[i]);
        residual[off + i] = f.sub(residual[off + i], part[i]);
      }
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace whm
