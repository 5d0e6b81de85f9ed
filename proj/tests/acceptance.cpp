// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Every numeric claim is checked in exact arithmetic; timing ceilings are
// wall-clock.

#include <uhg/census.hpp>
#include <uhg/constructions.hpp>
#include <uhg/duality.hpp>
#include <uhg/error.hpp>
#include <uhg/metric.hpp>
#include <uhg/script.hpp>
#include <uhg/theorems.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace uhg;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

bool run_green(Outcome& out, const std::string& id, int trials, const FieldCtx& ctx,
               std::uint64_t seed = 2026) {
  CheckReport r = run_check(id, trials, seed, ctx);
  out.require(r.failures == 0, id + " over " + ctx.str() + ": " + r.summary_line());
  out.require(r.passes > 0, id + " over " + ctx.str() + " never ran a full trial");
  return r.failures == 0;
}

void criterion_metric_agreement(Outcome& out) {
  FieldCtx q = FieldCtx::rationals();
  run_green(out, "quadrance_cross_ratio", 1000, q);
  run_green(out, "spread_cross_ratio", 1000, q);
}

void criterion_law_suite(Outcome& out) {
  const char* ids[] = {"triple_quad", "triple_spread", "pythagoras",    "pythagoras_dual",
                       "spread_law",  "cross_law",     "cross_law_dual"};
  const char* fields[] = {"rational", "fp:7", "fp:11", "fp:101"};
  for (const char* f : fields) {
    FieldCtx ctx = FieldCtx::parse(f);
    for (const char* id : ids) run_green(out, id, 1000, ctx);
  }
}

void criterion_48_64(Outcome& out) {
  FieldCtx q = FieldCtx::rationals();
  run_green(out, "theorem_48_64", 1000, q);
  run_green(out, "theorem_48_64_dual", 1000, q);

  std::array<Point, 4> n = {Point(q, 1, 0, 1), Point(q, 0, 1, 1), Point(q, -1, 0, 1),
                            Point(q, 0, -1, 1)};
  Fq P = spread(join(n[0], n[1]), join(n[2], n[3]));
  Fq R = spread(join(n[0], n[2]), join(n[1], n[3]));
  Fq T = spread(join(n[0], n[3]), join(n[1], n[2]));
  std::array<Fq, 3> got = {P, R, T};
  std::array<Fq, 3> want = {Fq(q, 1), Fq(q, -8), Fq(q, -8)};
  out.require(std::is_permutation(got.begin(), got.end(), want.begin()),
              "hand quadrangle spreads are not {1, -8, -8}");
  out.require(reciprocal_sum_residual(P, R, T).is_zero(),
              "hand quadrangle reciprocal sum misses 3/4");
}

void criterion_constants(Outcome& out) {
  FieldCtx q = FieldCtx::rationals();
  run_green(out, "pentagon_null_product", 100, q);
  run_green(out, "cevian_thinness", 100, q);
  run_green(out, "altitude_thinness", 100, q);
  run_green(out, "null_subtended", 100, q);
}

void criterion_cubics(Outcome& out) {
  FieldCtx q = FieldCtx::rationals();
  run_green(out, "canonical_cubic", 100, q);
  run_green(out, "canonical_points", 100, q);
  run_green(out, "jumping_jack", 1000, q);

  Fq a = Fq::parse(q, "9/8");
  out.require(canonical_cubic_residual(a, a).is_zero(), "canonical cubic misses [9/8, 9/8]");
  Fq b = Fq::parse(q, "1/4");
  out.require(jumping_jack_residual(b, b).is_zero(), "jumping jack cubic misses [1/4, 1/4]");
}

void criterion_constructions(Outcome& out) {
  FieldCtx q = FieldCtx::rationals();
  run_green(out, "orthocenter_duality", 1000, q);
  run_green(out, "circumcenter_structure", 300, q);
  run_green(out, "double_median", 100, q);
  run_green(out, "double_points", 100, q);
}

void criterion_reflections(Outcome& out) {
  run_green(out, "reflection_isometry", 1000, FieldCtx::rationals());
}

void criterion_parabola(Outcome& out) {
  FieldCtx q = FieldCtx::rationals();
  run_green(out, "parabola", 100, q);
  run_green(out, "parabola_chords", 100, q);
}

void criterion_limiting(Outcome& out) {
  FieldCtx q = FieldCtx::rationals();
  CheckReport r = run_check("bolyai", 200, 2026, q);
  out.require(r.failures == 0, "bolyai: " + r.summary_line());
  out.require(r.passes >= 100, "bolyai completed only " + std::to_string(r.passes) +
                                   " constructions out of 200 attempts");
}

void criterion_census(Outcome& out) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L}) {
    CensusReport r = census(p, false);
    out.require(r.null_points == p + 1,
                "census fp:" + std::to_string(p) + " counted " +
                    std::to_string(r.null_points) + " null points");
  }
  CensusReport seven = census(7, false);
  out.require(seven.total_points == 57 && seven.null_points == 8,
              "census fp:7 exhaustion mismatch");
}

void criterion_corpus(Outcome& out) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(UHG_CORPUS_DIR))
    if (e.path().extension() == ".uhg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  out.require(files.size() == 10, "expected 10 corpus scripts, found " +
                                      std::to_string(files.size()));

  for (const fs::path& f : files) {
    std::ifstream in(f);
    std::ostringstream os;
    os << in.rdbuf();
    script::ParseResult pr = script::parse(os.str());
    out.require(pr.ok(), f.filename().string() + " failed to parse");
    if (!pr.ok()) continue;
    script::ParseResult rt = script::parse(script::pretty(*pr.program));
    out.require(rt.ok() && *rt.program == *pr.program,
                f.filename().string() + " does not round-trip");
    script::Evaluation ev = script::evaluate(*pr.program);
    out.require(ev.all_passed, f.filename().string() + " has failing statements:\n" + ev.str());
  }

  FieldCtx q = FieldCtx::rationals();
  for (const std::string& id : theorem_ids()) {
    CheckReport r = run_check(id, 128, 2026, q);
    out.require(r.failures == 0, "check " + id + ": " + r.summary_line());
  }
}

struct Criterion {
  int number;
  const char* label;
  std::function<void(Outcome&)> fn;
  double ceiling_s;
};

}  // namespace

int main() {
  std::vector<Criterion> table = {
      {1, "metric closed forms equal their cross-ratio forms", criterion_metric_agreement, 5.0},
      {2, "trigonometric law residuals vanish over four fields", criterion_law_suite, 60.0},
      {3, "null quadrangle constants 48 and 64 with reciprocal sum", criterion_48_64, 60.0},
      {4, "pentagon, thinness, and subtended constants", criterion_constants, 60.0},
      {5, "canonical and jumping jack cubics with curve points", criterion_cubics, 60.0},
      {6, "orthocenter, circumline, and double triangle structure", criterion_constructions, 60.0},
      {7, "reflections are involutive isometries along both paths", criterion_reflections, 60.0},
      {8, "parabola locus, sum, and chord identities", criterion_parabola, 60.0},
      {9, "limiting lines through the null points of the base line", criterion_limiting, 60.0},
      {10, "finite field census counts p+1 null points", criterion_census, 10.0},
      {11, "script corpus green and full registry exits clean", criterion_corpus, 600.0},
  };

  bool all = true;
  for (const Criterion& c : table) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      c.fn(out);
    } catch (const Error& e) {
      out.require(false, std::string("unexpected error: ") + e.what());
    } catch (const std::exception& e) {
      out.require(false, std::string("unexpected exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.ceiling_s) out.require(false, "time ceiling exceeded");
    std::printf("criterion %2d %s (%.2fs)  %s\n", c.number, out.pass ? "PASS" : "FAIL", secs,
                c.label);
    if (!out.pass) {
      std::printf("    %s\n", out.note.c_str());
      all = false;
    }
  }
  return all ? 0 : 1;
}
