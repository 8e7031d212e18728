// Copyright 2026 The sphtile Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// sphtile: generate, verify, draw and transform tilings of the sphere by
// regular polygons.
//
// Exit codes: 0 ok, 1 usage, 2 verification failure, 3 construction error.

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sphtile/catalog.h"
#include "sphtile/lemmas.h"
#include "sphtile/render.h"
#include "sphtile/tiling_file.h"
#include "sphtile/verify.h"

namespace {

using namespace sphtile;

constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kConstruction = 3;

struct Failure : std::runtime_error {
  Failure(int code, const std::string& what)
      : std::runtime_error(what), code(code) {}
  int code;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_text(path, text);
  }
}

// Unreadable files are usage errors; files that do not describe a tiling on
// the unit sphere fail verification.
Tiling load(const std::string& path) {
  try {
    return load_tiling(path);
  } catch (const std::invalid_argument& e) {
    throw Failure(kVerifyFailed, e.what());
  } catch (const std::runtime_error& e) {
    throw Failure(kUsage, e.what());
  }
}

VerifyOptions tolerances(const std::string& flag) {
  try {
    return flag.empty() ? VerifyOptions::from_env() : VerifyOptions::parse(flag);
  } catch (const std::invalid_argument& e) {
    throw Failure(kUsage, e.what());
  }
}

// Prints a one-line summary; returns the exit code.
int summarize(const Tiling& t, const VerificationReport& r) {
  fmt::print("{}: {} tiles, {}\n", t.family.to_string(), t.tiles.size(),
             to_string(r.classification));
  fmt::print(
      "  area residual {:.3e}, tile drift {:.3e}, vertices {} full / {} half "
      "/ {} malformed, edges {} full / {} partial, overlaps {}\n",
      r.area_residual, r.max_tile_drift, r.count(VertexClass::kFull),
      r.count(VertexClass::kHalf), r.count(VertexClass::kMalformed),
      r.count(EdgeMatch::kFullFull), r.count(EdgeMatch::kPartial),
      r.overlap_pairs.size());
  if (r.valid()) return 0;
  std::fflush(stdout);
  for (const std::string& d : r.diagnostics) fmt::print(stderr, "  {}\n", d);
  return kVerifyFailed;
}

template <typename Fn>
auto constructing(Fn fn) {
  try {
    return fn();
  } catch (const ConstructionError& e) {
    throw Failure(kConstruction, e.what());
  } catch (const std::logic_error& e) {  // bad parameters, failed audits
    throw Failure(kConstruction, e.what());
  }
}

std::pair<double, double> parse_view(const std::string& text) {
  const std::size_t comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    const std::string lat = text.substr(0, comma), lon = text.substr(comma + 1);
    const double a = std::stod(lat, &used);
    if (used != lat.size()) throw std::invalid_argument("");
    const double b = std::stod(lon, &used);
    if (used != lon.size()) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    throw Failure(kUsage,
                  fmt::format("--view '{}' is not 'lat,lon' in degrees", text));
  }
}

std::string describe(const ParamRange& p) {
  return fmt::format("{} in {}{:.10g}, {:.10g}{}", p.name, p.lo_open ? "(" : "[",
                     p.lo, p.hi, p.hi_open ? ")" : "]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilings of the sphere by regular polygons"};
  app.require_subcommand(1);
  int code = 0;

  // generate
  std::string family, out_path;
  std::optional<double> angle, twist;
  auto* gen = app.add_subcommand("generate", "Write a catalog tiling");
  gen->add_option("--family", family, "Family id, e.g. kaleidoscope:tri-tri")
      ->required();
  gen->add_option("--angle", angle, "Small tile angle in radians (kaleidoscope)");
  gen->add_option("--twist", twist, "Bottom hemisphere turn in radians");
  gen->add_option("-o,--output", out_path, "Output file (stdout if omitted)");
  gen->callback([&] {
    std::map<std::string, double> params;
    if (angle) params["angle"] = *angle;
    if (twist) params["twist"] = *twist;
    const Tiling t = constructing([&] { return generate(family, params); });
    emit(dump(tiling_to_json(t)), out_path);
  });

  // verify
  std::string in_path, tol, report_path;
  auto* ver = app.add_subcommand("verify", "Check a tiling file");
  ver->add_option("input", in_path, "Tiling file")->required();
  ver->add_option("--tol", tol,
                  "'area' or 'area,cluster' (default: SPHTILE_TOL or 1e-8,1e-7)");
  ver->add_option("--report", report_path, "Write the JSON report here");
  ver->callback([&] {
    const VerifyOptions options = tolerances(tol);
    const Tiling t = load(in_path);
    const VerificationReport r = full_report(t, options);
    if (!report_path.empty()) emit(dump(report_to_json(r, t)), report_path);
    code = summarize(t, r);
  });

  // render
  std::string projection = "ortho", view = "30,45";
  int size = 600;
  auto* ren = app.add_subcommand("render", "Draw a tiling as SVG");
  ren->add_option("input", in_path, "Tiling file")->required();
  ren->add_option("--projection", projection, "ortho or stereo");
  ren->add_option("--view", view, "Image center 'lat,lon' in degrees");
  ren->add_option("--size", size, "Image size in pixels")
      ->check(CLI::PositiveNumber);
  ren->add_option("-o,--output", out_path, "Output file (stdout if omitted)");
  ren->callback([&] {
    RenderOptions o;
    try {
      o.projection = parse_projection(projection);
    } catch (const std::invalid_argument& e) {
      throw Failure(kUsage, e.what());
    }
    std::tie(o.view_lat, o.view_lon) = parse_view(view);
    if (std::abs(o.view_lat) > 90) {
      throw Failure(kUsage, fmt::format("--view latitude {} is outside [-90, 90]",
                                        o.view_lat));
    }
    o.size = size;
    emit(render_svg(load(in_path), o), out_path);
  });

  // export
  auto* exp = app.add_subcommand("export", "Write tile outlines as Wavefront OBJ");
  exp->add_option("input", in_path, "Tiling file")->required();
  exp->add_option("-o,--output", out_path, "Output file (stdout if omitted)");
  exp->callback([&] { emit(export_obj(load(in_path)), out_path); });

  // lemmas
  std::string filter;
  bool as_json = false;
  auto* lem = app.add_subcommand("lemmas", "Recompute the published constants");
  lem->add_option("--filter", filter, "Only checks whose id contains this");
  lem->add_flag("--json", as_json, "Print the check manifest as JSON");
  lem->callback([&] {
    const std::vector<LemmaCheck> checks = run_lemma_checks(filter);
    if (checks.empty()) {
      throw Failure(kUsage, fmt::format("no check id contains '{}'", filter));
    }
    int failed = 0;
    for (const LemmaCheck& c : checks) failed += !c.passed;
    if (as_json) {
      emit(dump(lemmas_to_json(checks)), "");
    } else {
      for (const LemmaCheck& c : checks) {
        fmt::print("{} [{}] {}: {}", c.passed ? "PASS" : "FAIL", c.criterion,
                   c.id, c.anchor);
        if (!c.expected.empty()) {
          fmt::print("; computed [{:.10g}] expected [{:.10g}] {} (tol {:g})",
                     fmt::join(c.computed, ", "), fmt::join(c.expected, ", "),
                     c.unit, c.tolerance);
        }
        if (!c.detail.empty()) fmt::print("; {}", c.detail);
        fmt::print("\n");
      }
      fmt::print("{} of {} checks pass\n", checks.size() - failed, checks.size());
    }
    code = failed == 0 ? 0 : kVerifyFailed;
  });

  // compose
  std::vector<int> patch;
  auto* com = app.add_subcommand(
      "compose", "Merge seven tiles into a magic triangle and re-verify");
  com->add_option("input", in_path, "Tiling file")->required();
  com->add_option("--patch", patch,
                  "Tile ids of the patch (default: the first one found)")
      ->delimiter(',');
  com->add_option("-o,--output", out_path, "Output file (stdout if omitted)");
  com->callback([&] {
    const Tiling t = load(in_path);
    const Tiling c = constructing([&] {
      if (patch.empty()) {
        const auto found = find_magic_patches(t);
        if (found.empty()) {
          throw std::invalid_argument(fmt::format(
              "{} has no patch that composes into a magic triangle",
              t.family.to_string()));
        }
        patch = found.front();
      }
      return compose(t, patch);
    });
    emit(dump(tiling_to_json(c)), out_path);
    fmt::print(stderr, "composed tiles {}\n", patch);
    code = summarize(c, full_report(c, tolerances("")));
  });

  // decompose
  std::optional<int> tile;
  auto* dec = app.add_subcommand(
      "decompose", "Split magic triangles into their seven tiles and re-verify");
  dec->add_option("input", in_path, "Tiling file")->required();
  dec->add_option("--tile", tile, "Tile id (default: every magic triangle)");
  dec->add_option("-o,--output", out_path, "Output file (stdout if omitted)");
  dec->callback([&] {
    const Tiling t = load(in_path);
    const Tiling d =
        constructing([&] { return tile ? decompose(t, *tile) : decompose_all(t); });
    emit(dump(tiling_to_json(d)), out_path);
    code = summarize(d, full_report(d, tolerances("")));
  });

  // list
  auto* lst = app.add_subcommand("list", "Print the family manifest");
  lst->callback([&] {
    for (const ManifestEntry& e : family_manifest()) {
      std::vector<std::string> ranges;
      for (const ParamRange& p : e.params) ranges.push_back(describe(p));
      fmt::print("{:<62} {}", e.family, e.group);
      if (!ranges.empty()) fmt::print("; {}", fmt::join(ranges, ", "));
      if (!e.absorbed_into.empty()) fmt::print("; same as {}", e.absorbed_into);
      fmt::print("\n");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int parsed = app.exit(e);
    return parsed == 0 ? 0 : kUsage;
  } catch (const Failure& e) {
    fmt::print(stderr, "sphtile: {}\n", e.what());
    return e.code;
  } catch (const std::exception& e) {
    fmt::print(stderr, "sphtile: {}\n", e.what());
    return kUsage;
  }
  return code;
}
