#include "tamp1d/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tamp1d/counterexamples.hpp"
#include "tamp1d/function_io.hpp"
#include "tamp1d/norms.hpp"
#include "tamp1d/plot.hpp"
#include "tamp1d/step_function.hpp"
#include "tamp1d/tamping.hpp"
#include "tamp1d/verify.hpp"

namespace tamp1d {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string text;
  bool json = false;

  void attach(CLI::App& cmd) {
    auto* file = cmd.add_option("file", path, "function file ('-' reads stdin)");
    auto* inline_text = cmd.add_option("--text", text, "function given inline, one 'lo hi value' per line");
    file->excludes(inline_text);
    cmd.add_flag("--json", json, "write the result as JSON");
  }

  bool given() const { return !path.empty() || !text.empty(); }

  StepFunction load() const {
    if (!given()) throw UsageError("missing input function (FILE, '-' or --text)");
    try {
      if (!text.empty()) return parse_function(text);
      if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return parse_function(buffer.str());
      }
      if (!fs::exists(path)) throw UsageError("no such file: " + path);
      return load_function(path);
    } catch (const ParseError& e) {
      throw UsageError((path.empty() ? std::string("input") : path) + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }

  void write(std::ostream& out, const StepFunction& fn) const {
    out << (json ? format_function_json(fn) + "\n" : format_function_text(fn));
  }
};

StepFunction tamp_by_voxels(const StepFunction& fn, TampingTrace* trace) {
  VoxelTampResult result = tamp_voxel(exact_voxelization(fn));
  if (trace) *trace = std::move(result.trace);
  return voxel_to_step(result.voxels);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content) || !file.flush()) {
    throw Failure("cannot write " + path.string());
  }
}

Rational parse_positive(const std::string& text, const char* what) {
  Rational value;
  try {
    value = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  if (value <= 0) throw UsageError(std::string(what) + " must be positive");
  return value;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rearrangement by tamping of non-negative step functions on the half-line", "tamp1d"};
  app.require_subcommand(1);

  // tamp
  Input tamp_input;
  std::string method = "level";
  bool trace_flag = false;
  auto* tamp_cmd = app.add_subcommand("tamp", "tamp a step function");
  tamp_input.attach(*tamp_cmd);
  tamp_cmd->add_option("--method", method, "level, voxel, double-schwarz or check-all")
      ->check(CLI::IsMember({"level", "voxel", "double-schwarz", "check-all"}));
  tamp_cmd->add_flag("--trace", trace_flag, "with --method voxel or check-all, emit the pivot trace as JSON");

  // schwarz
  Input schwarz_input;
  auto* schwarz_cmd = app.add_subcommand("schwarz", "non-increasing rearrangement");
  schwarz_input.attach(*schwarz_cmd);

  // upper-bound
  Input bound_input;
  auto* bound_cmd = app.add_subcommand("upper-bound", "best non-decreasing upper bound, with s and sigma");
  bound_input.attach(*bound_cmd);

  // hollows
  Input hollows_input;
  std::string hollows_level;
  auto* hollows_cmd = app.add_subcommand("hollows", "hollows of a function");
  hollows_input.attach(*hollows_cmd);
  hollows_cmd->add_option("--level", hollows_level, "level (default: all levels)");

  // norm
  Input norm_input;
  double norm_p = 2.0;
  auto* norm_cmd = app.add_subcommand("norm", "L^p norm");
  norm_input.attach(*norm_cmd);
  norm_cmd->add_option("--p", norm_p, "exponent >= 1")->check(CLI::Range(1.0, 1e6));

  // hs-norm
  Input hs_input;
  double hs_s = 0.25;
  auto* hs_cmd = app.add_subcommand("hs-norm", "squared H^s half-norm, 0 < s < 1/2");
  hs_input.attach(*hs_cmd);
  hs_cmd->add_option("--s", hs_s, "order s");

  // verify
  std::string suite = "all";
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "randomized property suites");
  verify_cmd->add_option("--suite", suite, "intervals, stepfn, tamping, norms or all")
      ->check(CLI::IsMember(verify_suites()));
  verify_cmd->add_option("--cases", cases, "cases per property");
  verify_cmd->add_option("--seed", seed, "random seed")->envname("TAMP1D_SEED");

  // counterexample
  std::string which;
  auto* counter_cmd = app.add_subcommand("counterexample", "reproduce the negative results");
  counter_cmd->add_option("name", which, "riesz, hs or hardy-littlewood")
      ->required()
      ->check(CLI::IsMember({"riesz", "hs", "hardy-littlewood"}));

  // plot
  Input plot_input;
  std::string demo;
  std::size_t samples = 512;
  std::string format = "csv";
  std::string output;
  auto* plot_cmd = app.add_subcommand("plot", "CSV or SVG graphs");
  plot_input.attach(*plot_cmd);
  plot_cmd->add_option("--demo", demo, "built-in demo")->check(CLI::IsMember({"xsin2"}));
  plot_cmd->add_option("--samples", samples, "demo resolution (cells on [0,1])")->check(CLI::Range(2, 1 << 20));
  plot_cmd->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  plot_cmd->add_option("-o,--output", output, "output file, or directory for --demo");

  std::vector<std::string> argv_storage{"tamp1d"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*tamp_cmd) {
      const StepFunction fn = tamp_input.load();
      if (trace_flag && method != "voxel" && method != "check-all") {
        throw UsageError("--trace needs --method voxel or check-all");
      }
      TampingTrace trace;
      StepFunction result;
      if (method == "level") {
        result = tamp(fn);
      } else if (method == "double-schwarz") {
        result = fn.is_zero() ? fn : tamp_double_schwarz(fn);
      } else if (method == "voxel") {
        result = tamp_by_voxels(fn, &trace);
      } else {
        result = tamp(fn);
        if (!fn.is_zero() && tamp_double_schwarz(fn) != result) {
          throw Failure("double Schwarz route disagrees with the level-set route");
        }
        try {
          if (tamp_by_voxels(fn, &trace) != result) {
            throw Failure("voxel route disagrees with the level-set route");
          }
        } catch (const std::length_error& e) {
          if (trace_flag) throw Failure(e.what());
          err << "note: voxel route skipped (" << e.what() << ")\n";
        }
      }
      if (trace_flag) {
        nlohmann::json doc{{"function", function_to_json(result)}, {"trace", trace_to_json(trace)}};
        out << doc.dump(2) << "\n";
      } else {
        tamp_input.write(out, result);
      }
    } else if (*schwarz_cmd) {
      schwarz_input.write(out, schwarz(schwarz_input.load()));
    } else if (*bound_cmd) {
      const StepFunction fn = bound_input.load();
      const MonotoneStep bound = best_upper_bound(fn);
      for (std::size_t i = 0; i < bound.values.size(); ++i) {
        out << to_string(bound.cuts[i]) << " " << to_string(bound.cuts[i + 1]) << " "
            << to_string(bound.values[i]) << "\n";
      }
      out << to_string(bound.cuts.back()) << " inf " << to_string(bound.terminal) << "\n";
      if (!fn.is_zero()) {
        const ArgmaxAnchors anchors = s_sigma(fn);
        out << "# s = " << to_string(anchors.s) << ", sigma = " << to_string(anchors.sigma) << "\n";
      }
    } else if (*hollows_cmd) {
      const StepFunction fn = hollows_input.load();
      const IntervalSet set = hollows_level.empty()
                                  ? hollows(fn)
                                  : hollows(fn, parse_positive(hollows_level, "--level"));
      for (const auto& part : set.parts()) out << to_string(part.lo) << " " << to_string(part.hi) << "\n";
    } else if (*norm_cmd) {
      out << format_significant(lp_norm(norm_input.load(), norm_p)) << "\n";
    } else if (*hs_cmd) {
      if (!(hs_s > 0 && hs_s < 0.5)) throw UsageError("--s must lie in (0, 1/2)");
      out << format_significant(hs_halfnorm(hs_input.load(), hs_s)) << "\n";
    } else if (*verify_cmd) {
      const VerifyReport report = run_verify(suite, cases, seed);
      out << report.format();
      return report.ok() ? exit_ok : exit_violation;
    } else if (*counter_cmd) {
      if (which == "riesz") {
        const RieszComparison r = riesz_comparison(1, 2, 3, 4, 10, 5);
        out << "middle 1_[1,2]+1_[3,4], outer 1_[0,10], band |x-y| <= 5\n";
        out << "plain  " << to_string(r.plain) << "\n";
        out << "tamped " << to_string(r.tamped) << "\n";
        out << (r.plain > r.tamped ? "RIESZ INEQUALITY FAILS" : "no failure") << "\n";
        return r.plain > r.tamped ? exit_ok : exit_violation;
      }
      if (which == "hs") {
        out << "psi = 1_[a,b] + 1_[c,d] + 1_[0,e]\n";
        bool all_fail = true;
        for (const auto& in : hs_failure_instances()) {
          const HsComparison c = hs_counterexample_pair(in.s, in.a, in.b, in.c, in.d, in.e);
          const bool increased = c.after > c.before;
          all_fail = all_fail && increased;
          out << "s = " << format_significant(in.s, 3) << "  (a,b,c,d,e) = (" << to_string(in.a) << ","
              << to_string(in.b) << "," << to_string(in.c) << "," << to_string(in.d) << ","
              << to_string(in.e) << ")  before " << format_significant(c.before, 8) << "  after "
              << format_significant(c.after, 8) << "  " << (increased ? "NOT DECREASED" : "decreased")
              << "\n";
        }
        return all_fail ? exit_ok : exit_violation;
      }
      const StepFunction phi = StepFunction::indicator(0, Rational(1, 4)) + StepFunction::indicator(1, 2);
      const StepFunction psi = StepFunction::indicator(1, 2);
      const HardyLittlewoodGap gap = hardy_littlewood_gap(phi, psi);
      out << "phi = 1_[0,1/4]+1_[1,2], psi = 1_[1,2]\n";
      out << "plain  " << to_string(gap.plain) << "\n";
      out << "tamped " << to_string(gap.tamped) << "\n";
      out << (gap.plain > gap.tamped ? "HARDY-LITTLEWOOD FAILS FOR TAMPING" : "no failure") << "\n";
      return gap.plain > gap.tamped ? exit_ok : exit_violation;
    } else if (*plot_cmd) {
      const auto render = [&](const StepFunction& fn) {
        const auto points = step_outline(fn);
        return format == "csv" ? to_csv(points) : to_svg(points);
      };
      if (!demo.empty()) {
        if (plot_input.given()) throw UsageError("give either a function or --demo");
        const StepFunction original = xsin2_step(samples);
        const fs::path dir = output.empty() ? fs::path(".") : fs::path(output);
        const std::pair<const char*, StepFunction> curves[] = {
            {"original", original}, {"schwarz", schwarz(original)}, {"tamped", tamp_double_schwarz(original)}};
        for (const auto& [name, fn] : curves) {
          const fs::path file = dir / ("xsin2_" + std::string(name) + "." + format);
          write_file(file, render(fn));
          out << file.string() << "\n";
        }
      } else {
        if (!plot_input.given()) throw UsageError("plot needs a function or --demo");
        const std::string content = render(plot_input.load());
        if (output.empty()) {
          out << content;
        } else {
          write_file(output, content);
        }
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Failure& e) {
    err << "error: " << e.what() << "\n";
    return exit_violation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_violation;
  }
  return exit_ok;
}

}  // namespace tamp1d
