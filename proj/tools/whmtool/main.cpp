// whmtool: command-line front end over the whm C API.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "whm/whm.h"

namespace {

using whmtool::ConfigError;
using whmtool::RunConfig;

// Carries a library status to main's exit code.
struct ApiFailure {
  whm_status status;
  std::string message;
};

void check(whm_status s) {
  if (s != WHM_OK) throw ApiFailure{s, whm_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using SpacePtr = std::unique_ptr<whm_space, Deleter<whm_space, whm_space_free>>;
using CodePtr = std::unique_ptr<whm_code, Deleter<whm_code, whm_code_free>>;
using BuilderPtr = std::unique_ptr<whm_gcc_builder, Deleter<whm_gcc_builder, whm_gcc_builder_free>>;
using GccPtr = std::unique_ptr<whm_gcc, Deleter<whm_gcc, whm_gcc_free>>;
using StringPtr = std::unique_ptr<char, Deleter<char, whm_string_free>>;

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ConfigError("cannot write " + out_path);
  out << text;
}

SpacePtr make_space(const RunConfig& cfg) {
  whm_space* s = nullptr;
  check(whm_space_create(cfg.space.q, cfg.space.blocks.data(), cfg.space.lambda.data(), cfg.space.blocks.size(), &s));
  return SpacePtr(s);
}

// "a b c; d e f" -> matrix text with the given header prefix.
std::string rows_to_matrix(std::uint32_t q, const std::string& body) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in(body);
  std::string row;
  while (std::getline(in, row, ';')) {
    std::stringstream r(row);
    std::vector<std::string> items;
    std::string x;
    while (r >> x) items.push_back(x);
    if (!items.empty()) rows.push_back(std::move(items));
  }
  if (rows.empty()) throw ConfigError("rows() has no rows");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ConfigError("rows() has rows of different lengths");
  }
  std::string text = std::to_string(q) + " " + std::to_string(rows.front().size()) + " " + std::to_string(rows.size()) + "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) text += (i ? " " : "") + r[i];
    text += "\n";
  }
  return text;
}

CodePtr make_code(const whmtool::CodeSpec& spec, std::uint32_t q, std::size_t n) {
  whm_code* c = nullptr;
  switch (spec.kind) {
    case whmtool::CodeSpec::Kind::family:
      check(whm_code_family(spec.family.c_str(), q, 1, n, spec.k, &c));
      break;
    case whmtool::CodeSpec::Kind::rows:
      check(whm_code_parse(rows_to_matrix(q, spec.text).c_str(), &c));
      break;
    case whmtool::CodeSpec::Kind::file:
      check(whm_code_parse(read_file(spec.text).c_str(), &c));
      break;
  }
  return CodePtr(c);
}

GccPtr make_gcc(const RunConfig& cfg, const whm_space* space) {
  if (!cfg.gcc) throw ConfigError("this command needs a [gcc] section");
  const auto& g = *cfg.gcc;
  whm_gcc_builder* raw = nullptr;
  check(whm_gcc_builder_create(space, g.levels, &raw));
  BuilderPtr builder(raw);
  for (std::size_t l = 0; l < g.chains.size(); ++l) {
    std::vector<CodePtr> owned;
    std::vector<const whm_code*> codes;
    for (const auto& spec : g.chains[l]) {
      owned.push_back(make_code(spec, cfg.space.q, static_cast<std::size_t>(cfg.space.blocks[l])));
      codes.push_back(owned.back().get());
    }
    check(whm_gcc_builder_set_chain(builder.get(), l, codes.data(), codes.size()));
  }
  for (std::size_t j = 0; j < g.outers.size(); ++j) {
    const auto& o = g.outers[j];
    switch (o.kind) {
      case whmtool::OuterSpec::Kind::full:
        check(whm_gcc_builder_set_outer_full(builder.get(), j));
        break;
      case whmtool::OuterSpec::Kind::mother_family:
        check(whm_gcc_builder_set_outer_family(builder.get(), j, o.code.family.c_str(), o.code.k));
        break;
      case whmtool::OuterSpec::Kind::code: {
        // A matrix over an extension field is read as a polyalphabetic mother.
        const CodePtr c = make_code(o.code, cfg.space.q, 0);
        if (whm_code_degree(c.get()) > 1) {
          check(whm_gcc_builder_set_outer_mother(builder.get(), j, c.get()));
        } else {
          check(whm_gcc_builder_set_outer_code(builder.get(), j, c.get()));
        }
        break;
      }
    }
  }
  whm_gcc* gcc = nullptr;
  check(whm_gcc_build(builder.get(), g.declared_distances ? 1 : 0, &gcc));
  return GccPtr(gcc);
}

std::vector<std::uint32_t> read_word(const std::string& path) {
  std::stringstream in(read_file(path));
  std::vector<std::uint32_t> word;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const unsigned long x = std::stoul(tok, &used);
      if (used != tok.size() || x > 0xffffffffUL) throw std::invalid_argument(tok);
      word.push_back(static_cast<std::uint32_t>(x));
    } catch (const std::logic_error&) {
      throw ConfigError("received word: '" + tok + "' is not a field element");
    }
  }
  return word;
}

std::string gnuplot_script(const std::string& csv_path) {
  return "set datafile separator ','\n"
         "set key autotitle columnhead\n"
         "set xlabel 't'\n"
         "set ylabel 'k'\n"
         "plot for [c=2:5] '" + csv_path + "' using 1:c with steps\n";
}

struct Options {
  std::string config;
  std::string out;
  std::string format;
  long t_min = 0;
  long t_max = -1;
  long t = -1;
  bool diff = false;
  bool lp_optimum = false;
  bool no_lp = false;
  bool recipes = false;
  std::string gnuplot;
  std::string code;
  std::string received;
  std::string matrix;
  long check_t = -1;
  std::uint64_t seed = 1;
};

std::string resolved_out(const Options& opt, const RunConfig& cfg) {
  if (!opt.out.empty()) return opt.out;
  return cfg.output.path.value_or("");
}

std::string resolved_format(const Options& opt, const RunConfig& cfg) {
  if (!opt.format.empty()) return opt.format;
  return cfg.output.format.value_or("csv");
}

void cmd_bounds(const Options& opt) {
  const RunConfig cfg = whmtool::load_config(opt.config);
  const SpacePtr space = make_space(cfg);
  long t_max = opt.t_max;
  if (t_max < 0) {
    long total = 0;
    for (std::size_t l = 0; l < cfg.space.blocks.size(); ++l) total += static_cast<long>(cfg.space.blocks[l]) * cfg.space.lambda[l];
    t_max = (total + 1) / 2;
  }
  const std::string format = resolved_format(opt, cfg);
  const std::string out = resolved_out(opt, cfg);
  emit(take([&] {
         char* s = nullptr;
         check(whm_bounds(space.get(), opt.t_min, t_max, format.c_str(), opt.lp_optimum ? 1 : 0, &s));
         return s;
       }()),
       out);
  if (!opt.gnuplot.empty()) {
    if (format != "csv" || out.empty()) throw ConfigError("--gnuplot needs CSV output written with --out");
    emit(gnuplot_script(out), opt.gnuplot);
  }
}

void cmd_construct(const Options& opt) {
  const RunConfig cfg = whmtool::load_config(opt.config);
  const SpacePtr space = make_space(cfg);
  const GccPtr gcc = make_gcc(cfg, space.get());
  std::string text;
  if (resolved_format(opt, cfg) == "json") {
    char* s = nullptr;
    check(whm_gcc_summary(gcc.get(), &s));
    text = take(s);
  } else {
    text = "N=" + std::to_string(whm_gcc_length(gcc.get())) + "\n" + "k=" + std::to_string(whm_gcc_dimension(gcc.get())) +
           "\n" + "d=" + std::to_string(whm_gcc_designed_distance(gcc.get())) + "\n" +
           "t=" + std::to_string(whm_gcc_capability_bound(gcc.get())) + "\n";
  }
  if (opt.check_t >= 0) {
    char* s = nullptr;
    std::uint64_t failures = 0;
    check(whm_gcc_check(gcc.get(), opt.check_t, opt.seed, cfg.limits.codewords, cfg.limits.ambient, &failures, &s));
    text += take(s);
  }
  emit(text, resolved_out(opt, cfg));
  if (!opt.matrix.empty()) {
    whm_code* raw = nullptr;
    check(whm_gcc_generator(gcc.get(), &raw));
    const CodePtr code(raw);
    char* s = nullptr;
    check(whm_code_format(code.get(), &s));
    emit(take(s), opt.matrix);
  }
}

void cmd_analyze(const Options& opt) {
  const RunConfig cfg = whmtool::load_config(opt.config);
  const SpacePtr space = make_space(cfg);
  CodePtr code;
  if (!opt.code.empty()) {
    whm_code* raw = nullptr;
    check(whm_code_parse(read_file(opt.code).c_str(), &raw));
    code.reset(raw);
  } else {
    const GccPtr gcc = make_gcc(cfg, space.get());
    whm_code* raw = nullptr;
    check(whm_gcc_generator(gcc.get(), &raw));
    code.reset(raw);
  }
  char* s = nullptr;
  check(whm_analyze(code.get(), space.get(), cfg.limits.codewords, cfg.limits.ambient, opt.no_lp ? 0 : 1, &s));
  emit(take(s), resolved_out(opt, cfg));
}

void cmd_decode(const Options& opt) {
  const RunConfig cfg = whmtool::load_config(opt.config);
  const SpacePtr space = make_space(cfg);
  const GccPtr gcc = make_gcc(cfg, space.get());
  const auto word = read_word(opt.received);
  char* s = nullptr;
  int ok = 0;
  check(whm_gcc_decode(gcc.get(), word.data(), word.size(), &ok, &s));
  emit(take(s), resolved_out(opt, cfg));
}

void cmd_search(const Options& opt) {
  const RunConfig cfg = whmtool::load_config(opt.config);
  const SpacePtr space = make_space(cfg);
  const whmtool::SearchSection menu = cfg.search.value_or(whmtool::SearchSection{});
  char* s = nullptr;
  check(whm_search(space.get(), menu.inner ? menu.inner->c_str() : nullptr, menu.outer ? menu.outer->c_str() : nullptr,
                   menu.max_levels, opt.recipes ? 1 : 0, &s));
  emit(take(s), resolved_out(opt, cfg));
}

void cmd_enumerate(const Options& opt) {
  const RunConfig cfg = whmtool::load_config(opt.config);
  const SpacePtr space = make_space(cfg);
  char* s = nullptr;
  check(whm_enumerate_profiles(space.get(), opt.t, opt.diff ? 1 : 0, &s));
  emit(take(s), resolved_out(opt, cfg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted-Hamming-metric bounds, constructions and decoders"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "Configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "Write output to this path instead of stdout");
  };

  auto* bounds = app.add_subcommand("bounds", "Dimension bounds for a range of t");
  add_common(bounds);
  bounds->add_option("--t-min", opt.t_min, "First t")->check(CLI::NonNegativeNumber);
  bounds->add_option("--t-max", opt.t_max, "Last t (default: half the total weight, rounded up)");
  bounds->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_flag("--lp-optimum", opt.lp_optimum, "Add the exact LP optimum column");
  bounds->add_option("--gnuplot", opt.gnuplot, "Also write a gnuplot script for the CSV");

  auto* construct = app.add_subcommand("construct", "Assemble a generalized concatenated code");
  add_common(construct);
  construct->add_option("--format", opt.format, "csv (key=value text) or json")->check(CLI::IsMember({"csv", "json"}));
  construct->add_option("--matrix", opt.matrix, "Write the generator matrix here");
  construct->add_option("--check-t", opt.check_t, "Verify the decoder on every error of weight <= T");
  construct->add_option("--seed", opt.seed, "Seed for sampled codewords");

  auto* analyze = app.add_subcommand("analyze", "Exact distance and capability of a code");
  add_common(analyze);
  analyze->add_option("--code", opt.code, "Generator matrix file (default: the [gcc] code)")->check(CLI::ExistingFile);
  analyze->add_flag("--no-lp", opt.no_lp, "Skip the linear-programming bound");

  auto* decode = app.add_subcommand("decode", "Multistage decoding of a received word");
  add_common(decode);
  decode->add_option("--received", opt.received, "Whitespace-separated received word")->required()->check(CLI::ExistingFile);

  auto* search = app.add_subcommand("search", "Frontier of constructions over a component-code menu");
  add_common(search);
  search->add_flag("--recipes", opt.recipes, "Add the recipe of each frontier point");

  auto* enumerate = app.add_subcommand("enumerate", "Profiles of the ball or of its difference set");
  add_common(enumerate);
  enumerate->add_option("--t", opt.t, "Radius")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--diff", opt.diff, "Difference set instead of the ball");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*bounds) cmd_bounds(opt);
    if (*construct) cmd_construct(opt);
    if (*analyze) cmd_analyze(opt);
    if (*decode) cmd_decode(opt);
    if (*search) cmd_search(opt);
    if (*enumerate) cmd_enumerate(opt);
  } catch (const ConfigError& e) {
    std::cerr << "whmtool: " << e.what() << '\n';
    return 2;
  } catch (const ApiFailure& e) {
    std::cerr << "whmtool: " << e.message << '\n';
    return static_cast<int>(e.status);
  } catch (const std::exception& e) {
    std::cerr << "whmtool: internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
