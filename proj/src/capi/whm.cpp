#include "whm/whm.h"

#include <algorithm>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "report.hpp"

struct whm_space {
  whm::WeightedSpace space;
};
struct whm_code {
  whm::LinearCode code;
};
struct whm_gcc {
  whm::GccCode gcc;
};

struct whm_gcc_builder {
  whm::WeightedSpace space;
  std::size_t levels;
  std::vector<std::optional<whm::NestedChain>> chains;

  struct Outer {
    enum class Kind { unset, full, rows, mother } kind = Kind::unset;
    whm::Rows rows;
    std::optional<whm::LinearCode> mother;
    std::optional<std::size_t> mother_distance;  // known for named families
  };
  std::vector<Outer> outers;
};

namespace {

thread_local std::string last_error;

whm_status fail(whm_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
whm_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return WHM_OK;
  } catch (const whm::ParameterError& e) {
    return fail(WHM_ERR_PARAM, e.what());
  } catch (const whm::ExhaustionRefused& e) {
    return fail(WHM_ERR_EXHAUSTION, e.what());
  } catch (const whm::DefectError& e) {
    return fail(WHM_ERR_INTERNAL, std::string("internal defect: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(WHM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(WHM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw whm::ParameterError(std::string(what) + " is null");
}

std::vector<std::string> split_list(const char* text) {
  std::vector<std::string> out;
  std::stringstream in(text == nullptr ? "" : text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(item.substr(a, item.find_last_not_of(" \t") - a + 1));
  }
  return out;
}

std::vector<int> quotient_sizes(const whm_gcc_builder& b, std::size_t level) {
  std::vector<int> sizes;
  for (std::size_t l = 0; l < b.chains.size(); ++l) {
    if (!b.chains[l]) throw whm::ParameterError("chain of block " + std::to_string(l + 1) + " is not set");
    sizes.push_back(static_cast<int>(b.chains[l]->quotient_dimension(level)));
  }
  return sizes;
}

}  // namespace

extern "C" {

const char* whm_last_error(void) { return last_error.c_str(); }

void whm_string_free(char* s) { delete[] s; }

whm_status whm_space_create(uint32_t q, const int* blocks, const int* lambda, size_t count, whm_space** out) {
  return guarded([&] {
    require(out, "output handle");
    if (count > 0) {
      require(blocks, "blocks");
      require(lambda, "lambda");
    }
    *out = new whm_space{whm::WeightedSpace(q, std::vector<int>(blocks, blocks + count),
                                            std::vector<int>(lambda, lambda + count))};
  });
}

void whm_space_free(whm_space* space) { delete space; }

int whm_space_length(const whm_space* space) { return space ? space->space.length() : 0; }

whm_status whm_enumerate_profiles(const whm_space* space, long t, int diff, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "output string");
    const auto profiles = diff ? whm::diff_ball_profiles(space->space, t) : whm::ball_profiles(space->space, t);
    *out = copy_string(whm::profiles_text(profiles));
  });
}

whm_status whm_bounds(const whm_space* space, long t_min, long t_max, const char* format, int with_optimum, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "output string");
    const std::string fmt = format ? format : "csv";
    if (fmt != "csv" && fmt != "json") throw whm::ParameterError("unknown format '" + fmt + "' (csv or json)");
    const auto table = whm::bound_table(space->space, t_min, t_max);
    *out = copy_string(fmt == "csv" ? whm::bound_table_csv(table, with_optimum != 0) : whm::bound_table_json(table));
  });
}

whm_status whm_code_family(const char* family, uint32_t q, uint32_t degree, size_t n, size_t k, whm_code** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "output handle");
    const auto fam = whm::parse_family(family);
    if (!fam) throw whm::ParameterError(std::string("unknown code family '") + family + "'");
    const whm::FieldPtr f = degree > 1 ? whm::make_extension_field(q, degree) : whm::make_prime_field(q);
    *out = new whm_code{whm::named_code(*fam, f, n, k)};
  });
}

whm_status whm_code_parse(const char* text, whm_code** out) {
  return guarded([&] {
    require(text, "matrix text");
    require(out, "output handle");
    *out = new whm_code{whm::parse_code_matrix(text)};
  });
}

void whm_code_free(whm_code* code) { delete code; }

size_t whm_code_length(const whm_code* code) { return code ? code->code.length() : 0; }

size_t whm_code_dimension(const whm_code* code) { return code ? code->code.dimension() : 0; }

uint32_t whm_code_degree(const whm_code* code) { return code ? code->code.field().degree() : 0; }

whm_status whm_code_format(const whm_code* code, char** out) {
  return guarded([&] {
    require(code, "code");
    require(out, "output string");
    *out = copy_string(whm::format_code_matrix(code->code));
  });
}

whm_status whm_analyze(const whm_code* code, const whm_space* space, uint64_t codeword_limit, uint64_t ambient_limit,
                       int with_lp, char** out) {
  return guarded([&] {
    require(code, "code");
    require(space, "space");
    require(out, "output string");
    whm::OracleLimits limits;
    if (codeword_limit) limits.codewords = codeword_limit;
    if (ambient_limit) limits.ambient = ambient_limit;
    if (!code->code.field().is_prime() || code->code.field().order() != space->space.q()) {
      throw whm::ParameterError("code must be over F_" + std::to_string(space->space.q()));
    }
    *out = copy_string(whm::analysis_json(whm::analyze_code(code->code, space->space, limits, with_lp != 0)));
  });
}

whm_status whm_gcc_builder_create(const whm_space* space, size_t levels, whm_gcc_builder** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "output handle");
    if (levels < 1) throw whm::ParameterError("levels must be at least 1");
    auto* b = new whm_gcc_builder{space->space, levels, {}, {}};
    b->chains.resize(space->space.block_count());
    b->outers.resize(levels);
    *out = b;
  });
}

void whm_gcc_builder_free(whm_gcc_builder* builder) { delete builder; }

whm_status whm_gcc_builder_set_chain(whm_gcc_builder* builder, size_t block, const whm_code* const* codes, size_t count) {
  return guarded([&] {
    require(builder, "builder");
    require(codes, "codes");
    if (block >= builder->chains.size()) throw whm::ParameterError("block index " + std::to_string(block) + " out of range");
    if (count != builder->levels) {
      throw whm::ParameterError("chain of block " + std::to_string(block + 1) + " has " + std::to_string(count) +
                                " codes, expected " + std::to_string(builder->levels));
    }
    std::vector<whm::LinearCode> list;
    for (size_t i = 0; i < count; ++i) {
      require(codes[i], "chain code");
      list.push_back(codes[i]->code);
    }
    builder->chains[block].emplace(std::move(list));
  });
}

namespace {
whm_gcc_builder::Outer& outer_slot(whm_gcc_builder* builder, size_t level) {
  require(builder, "builder");
  if (level >= builder->outers.size()) throw whm::ParameterError("level index " + std::to_string(level) + " out of range");
  builder->outers[level] = {};
  return builder->outers[level];
}
}  // namespace

whm_status whm_gcc_builder_set_outer_full(whm_gcc_builder* builder, size_t level) {
  return guarded([&] { outer_slot(builder, level).kind = whm_gcc_builder::Outer::Kind::full; });
}

whm_status whm_gcc_builder_set_outer_code(whm_gcc_builder* builder, size_t level, const whm_code* code) {
  return guarded([&] {
    require(code, "outer code");
    auto& slot = outer_slot(builder, level);
    if (!code->code.field().is_prime()) throw whm::ParameterError("explicit outer codes must be over the prime field");
    slot.kind = whm_gcc_builder::Outer::Kind::rows;
    slot.rows = code->code.generator();
  });
}

whm_status whm_gcc_builder_set_outer_family(whm_gcc_builder* builder, size_t level, const char* family, size_t k) {
  return guarded([&] {
    require(family, "family");
    const auto fam = whm::parse_family(family);
    if (!fam || *fam == whm::CodeFamily::full || *fam == whm::CodeFamily::hamming) {
      throw whm::ParameterError(std::string("unsupported mother family '") + family + "' (repetition, parity, rs)");
    }
    auto& slot = outer_slot(builder, level);
    auto sizes = quotient_sizes(*builder, level);
    const std::size_t n = sizes.size();
    std::size_t dim = k;
    if (dim == 0) {
      if (*fam == whm::CodeFamily::reed_solomon) throw whm::ParameterError("rs mother needs a dimension");
      dim = *fam == whm::CodeFamily::repetition ? 1 : n - 1;
    }
    if (dim < 1 || dim > n) throw whm::ParameterError("mother dimension " + std::to_string(dim) + " out of range");
    std::sort(sizes.begin(), sizes.end());
    const int mu = sizes[dim - 1];
    if (mu < 1) throw whm::ParameterError("level " + std::to_string(level + 1) + " has no symbol of width >= 1 at rank " + std::to_string(dim));
    const whm::FieldPtr ext = whm::make_extension_field(builder->space.q(), static_cast<std::uint32_t>(mu));
    slot.kind = whm_gcc_builder::Outer::Kind::mother;
    slot.mother = whm::named_code(*fam, ext, n, *fam == whm::CodeFamily::reed_solomon ? dim : 0);
    if (slot.mother->dimension() != dim) throw whm::ParameterError("mother family does not have dimension " + std::to_string(dim));
    slot.mother_distance = whm::family_distance(*fam, n, dim);
  });
}

whm_status whm_gcc_builder_set_outer_mother(whm_gcc_builder* builder, size_t level, const whm_code* mother) {
  return guarded([&] {
    require(mother, "mother code");
    auto& slot = outer_slot(builder, level);
    slot.kind = whm_gcc_builder::Outer::Kind::mother;
    slot.mother = mother->code;
  });
}

whm_status whm_gcc_build(const whm_gcc_builder* builder, int use_declared, whm_gcc** out) {
  return guarded([&] {
    require(builder, "builder");
    require(out, "output handle");
    std::vector<whm::NestedChain> chains;
    for (std::size_t l = 0; l < builder->chains.size(); ++l) {
      if (!builder->chains[l]) throw whm::ParameterError("chain of block " + std::to_string(l + 1) + " is not set");
      chains.push_back(*builder->chains[l]);
    }
    const whm::FieldPtr f = whm::make_prime_field(builder->space.q());
    std::vector<whm::PolyalphabeticCode> outers;
    for (std::size_t j = 0; j < builder->levels; ++j) {
      const auto& slot = builder->outers[j];
      const auto sizes = quotient_sizes(*builder, j);
      switch (slot.kind) {
        case whm_gcc_builder::Outer::Kind::unset:
          throw whm::ParameterError("outer code of level " + std::to_string(j + 1) + " is not set");
        case whm_gcc_builder::Outer::Kind::full:
          outers.push_back(whm::full_poly_code(f, sizes));
          break;
        case whm_gcc_builder::Outer::Kind::rows:
          outers.emplace_back(f, sizes, slot.rows);
          break;
        case whm_gcc_builder::Outer::Kind::mother: {
          whm::PolyalphabeticCode a = whm::poly_from_mother_any_order(*slot.mother, sizes);
          a.declare_distance(slot.mother_distance ? *slot.mother_distance : slot.mother->min_distance());
          outers.push_back(std::move(a));
          break;
        }
      }
    }
    whm::GccOptions options;
    options.use_declared_distances = use_declared != 0;
    *out = new whm_gcc{whm::GccCode(builder->space, std::move(chains), std::move(outers), options)};
  });
}

void whm_gcc_free(whm_gcc* gcc) { delete gcc; }

size_t whm_gcc_length(const whm_gcc* gcc) { return gcc ? gcc->gcc.length() : 0; }

size_t whm_gcc_dimension(const whm_gcc* gcc) { return gcc ? gcc->gcc.dimension() : 0; }

long whm_gcc_designed_distance(const whm_gcc* gcc) { return gcc ? gcc->gcc.designed_distance() : -1; }

long whm_gcc_capability_bound(const whm_gcc* gcc) { return gcc ? gcc->gcc.capability_bound() : -1; }

whm_status whm_gcc_summary(const whm_gcc* gcc, char** out) {
  return guarded([&] {
    require(gcc, "code");
    require(out, "output string");
    *out = copy_string(whm::gcc_summary_json(gcc->gcc));
  });
}

whm_status whm_gcc_generator(const whm_gcc* gcc, whm_code** out) {
  return guarded([&] {
    require(gcc, "code");
    require(out, "output handle");
    *out = new whm_code{gcc->gcc.as_linear_code()};
  });
}

whm_status whm_gcc_encode(const whm_gcc* gcc, const uint32_t* message, uint32_t* codeword) {
  return guarded([&] {
    require(gcc, "code");
    require(message, "message");
    require(codeword, "codeword buffer");
    const auto c = gcc->gcc.encode_flat(std::span<const uint32_t>(message, gcc->gcc.dimension()));
    std::copy(c.begin(), c.end(), codeword);
  });
}

whm_status whm_gcc_decode(const whm_gcc* gcc, const uint32_t* received, size_t length, int* ok, char** out) {
  return guarded([&] {
    require(gcc, "code");
    require(received, "received word");
    require(out, "output string");
    if (length != gcc->gcc.length()) {
      throw whm::ParameterError("received word has length " + std::to_string(length) + ", expected " +
                                std::to_string(gcc->gcc.length()));
    }
    const auto report = whm::gcc_decode(gcc->gcc, std::span<const uint32_t>(received, length));
    if (ok) *ok = report.ok() ? 1 : 0;
    *out = copy_string(whm::decode_report_json(report));
  });
}

whm_status whm_gcc_check(const whm_gcc* gcc, long t, uint64_t seed, uint64_t codeword_limit, uint64_t ambient_limit,
                         uint64_t* failures, char** out) {
  return guarded([&] {
    require(gcc, "code");
    require(out, "output string");
    whm::OracleLimits limits;
    if (codeword_limit) limits.codewords = codeword_limit;
    if (ambient_limit) limits.ambient = ambient_limit;
    const auto report = whm::exhaustive_decoder_check(gcc->gcc, t, seed, limits);
    if (failures) *failures = report.failures;
    *out = copy_string(whm::decoder_check_json(report, t));
  });
}

whm_status whm_search(const whm_space* space, const char* inner, const char* outer, size_t max_levels, int with_recipe,
                      char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "output string");
    whm::SearchMenu menu;
    menu.max_levels = max_levels;
    if (inner) {
      menu.inner.clear();
      for (const auto& name : split_list(inner)) {
        const auto fam = whm::parse_family(name);
        if (!fam) throw whm::ParameterError("unknown code family '" + name + "' in the inner menu");
        menu.inner.push_back(*fam);
      }
    }
    if (outer) {
      menu.outer.clear();
      for (const auto& name : split_list(outer)) {
        if (name == "full") {
          menu.outer.push_back(whm::OuterKind::full);
        } else if (name == "parity") {
          menu.outer.push_back(whm::OuterKind::parity);
        } else if (name == "repetition") {
          menu.outer.push_back(whm::OuterKind::repetition);
        } else if (name == "rs" || name == "reed_solomon") {
          menu.outer.push_back(whm::OuterKind::reed_solomon);
        } else {
          throw whm::ParameterError("unknown outer option '" + name + "' (full, parity, repetition, rs)");
        }
      }
    }
    const auto result = whm::search_frontier(space->space, menu);
    *out = copy_string(whm::frontier_csv(result.t_frontier, false, with_recipe != 0) + "\n" +
                       whm::frontier_csv(result.d_frontier, true, with_recipe != 0));
  });
}

}  // extern "C"
