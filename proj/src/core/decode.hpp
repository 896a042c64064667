#pragma once

#include <optional>
#include <span>
#include <vector>

#include "construct.hpp"

namespace whm {

struct GmdOutcome {
  std::optional<Vector> codeword;  // outer codeword, concatenated symbols
  long correlation = 0;
  std::size_t candidates = 0;
};

/// Generalized minimum distance decoding of a polyalphabetic code.
/// Positions are ordered by ascending reliability (ties by index); for every
/// erasure count 0..d-1 the least reliable positions are erased and an
/// errors-and-erasures decode is attempted. Among the distinct candidates the
/// one with the largest correlation sum(alpha * (+1 agree / -1 disagree))
/// wins, first found on ties. Zero-width symbols take no part.
GmdOutcome gmd_decode(const PolyalphabeticCode& outer, std::size_t distance, std::span<const Vector> symbols,
                      std::span<const long> reliabilities);

struct InnerRecord {
  bool zero_width = false;
  bool failed = false;
  Vector estimate;  // b'_{j,l}, empty on failure
  Vector symbol;    // a'_{j,l}
  long reliability = 0;
};

struct LevelRecord {
  std::vector<InnerRecord> blocks;
  bool outer_failed = false;
  Vector outer_decision;  // zeros when the outer decoder failed
  long correlation = 0;
  std::size_t candidates = 0;
};

struct DecodeReport {
  Vector codeword;
  std::vector<LevelRecord> levels;
  std::optional<std::size_t> failed_level;  // first level whose outer decode failed (0-based)
  bool ok() const { return !failed_level.has_value(); }
};

/// Multistage decoding: per level, bounded-distance inner decoding with
/// reliabilities lambda_l * max(0, d(B_{j,l}) - 2 d(r, b')), GMD outer
/// decoding, re-encoding and cancellation from the residual.
DecodeReport gcc_decode(const GccCode& gcc, std::span<const Element> received);

}  // namespace whm
