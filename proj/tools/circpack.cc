#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "circpack/aptas.h"
#include "circpack/io.h"
#include "circpack/svg.h"
#include "circpack/verify.h"

namespace {

using namespace circpack;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kParse = 2;
constexpr int kIncomplete = 3;

struct SolveFlags {
  std::string instance;
  std::string output;
  std::optional<int> r;
  std::string gamma;
  std::string backend = "continuous";
  std::uint64_t seed = 1;
  std::optional<int> budget;
};

int default_budget() {
  if (const char* env = std::getenv("CIRCPACK_BUDGET")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("CIRCPACK_BUDGET must be a positive integer");
  }
  return BackendOptions{}.restarts;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("instance", f.instance, "instance JSON file")->required();
  cmd->add_option("-o,--out", f.output, "write the packing here (default: stdout, summary to stderr)");
  cmd->add_option("--r", f.r, "accuracy parameter r (eps = 1/r), a multiple of 3");
  cmd->add_option("--gamma", f.gamma, "height augmentation, e.g. 1/10");
  cmd->add_option("--backend", f.backend, "oracle backend")->check(CLI::IsMember({"continuous", "grid"}));
  cmd->add_option("--seed", f.seed, "oracle seed");
  cmd->add_option("--budget", f.budget, "oracle restarts per configuration (default $CIRCPACK_BUDGET or 6)")
      ->check(CLI::PositiveNumber);
}

struct Setup {
  InstanceFile file;
  int r = 3;
  Rational gamma;
  AptasOptions options;
};

Setup load(const SolveFlags& f) {
  Setup s;
  s.file = parse_instance(read_text_file(f.instance));
  s.r = f.r ? *f.r : s.file.r.value_or(3);
  if (s.r < 3 || s.r % 3 != 0) throw ParseError("r must be a positive multiple of 3");
  if (!f.gamma.empty()) {
    try {
      s.gamma = parse_rational(f.gamma);
    } catch (const std::exception& e) {
      throw ParseError(std::string("--gamma: ") + e.what());
    }
  } else {
    s.gamma = s.file.gamma.value_or(Rational(1, 10));
  }
  if (s.gamma <= 0) throw ParseError("gamma must be positive");
  s.options.large.backend.kind = parse_backend(f.backend);
  s.options.large.backend.seed = f.seed;
  s.options.large.backend.restarts = f.budget ? *f.budget : default_budget();
  return s;
}

PackingMeta meta_for(const SolveFlags& f, const Setup& s) {
  PackingMeta m;
  m.seed = f.seed;
  m.backend = f.backend;
  m.parameters["r"] = std::to_string(s.r);
  m.parameters["gamma"] = to_string(s.gamma);
  m.parameters["restarts"] = std::to_string(s.options.large.backend.restarts);
  return m;
}

// PackingFile to the output (or stdout); summary to stdout, or stderr when
// stdout carries the packing.
void emit(const SolveFlags& f, const PackingFile& pf, const std::string& summary) {
  const std::string text = serialize_packing(pf);
  if (f.output.empty()) {
    std::cout << text;
    std::cerr << summary << "\n";
  } else {
    write_text_file(f.output, text);
    std::cout << summary << "\n";
  }
}

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_pack_bins(const SolveFlags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Setup s = load(f);
  Algorithm1Result res = pack_bins(s.file.instance, s.r, s.gamma, s.options);
  PackingFile pf{res.packing, meta_for(f, s)};
  const bool valid = verify_packing(s.file.instance, pf.packing).valid;
  emit(f, pf,
       "bins=" + std::to_string(pf.packing.bins.size()) +
           " lower_bound=" + std::to_string(area_lower_bound(s.file.instance)) +
           " bin_height=" + to_string(pf.packing.bin_height) + " valid=" + (valid ? "1" : "0") +
           " wall_ms=" + std::to_string(elapsed_ms(t0)));
  return valid ? kOk : kInvalid;
}

int cmd_pack_strip(const SolveFlags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Setup s = load(f);
  const Instance& inst = s.file.instance;
  StripResult res = pack_strip(inst.circles, inst.w, s.r, s.gamma, s.options);
  PackingFile pf{res.packing, meta_for(f, s)};
  pf.meta.achieved_height = res.height;
  Rational area;
  for (const auto& c : inst.circles) area += pi_lower() * c.radius * c.radius;
  Instance strip = inst;
  strip.h = res.height;
  const bool valid = inst.circles.empty() || verify_packing(strip, pf.packing).valid;
  emit(f, pf,
       "height=" + to_string(res.height) + " height_approx=" + std::to_string(res.height.get_d()) +
           " stacked_bins=" + std::to_string(res.stacked_bins) +
           " lower_bound=" + std::to_string(Rational(area / inst.w).get_d()) + " valid=" + (valid ? "1" : "0") +
           " wall_ms=" + std::to_string(elapsed_ms(t0)));
  return valid ? kOk : kInvalid;
}

int cmd_pack_resource(const SolveFlags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Setup s = load(f);
  ResourceResult res = pack_resource_augmented(s.file.instance, s.r, s.options);
  Setup shown = s;
  shown.gamma = Rational(1, s.r);
  PackingFile pf{res.run.packing, meta_for(f, shown)};
  pf.meta.parameters.erase("gamma");
  pf.meta.parameters["epsilon"] = to_string(Rational(1, s.r));
  const bool valid = verify_packing(s.file.instance, pf.packing).valid;
  emit(f, pf,
       "bins=" + std::to_string(pf.packing.bins.size()) +
           " lower_bound=" + std::to_string(area_lower_bound(s.file.instance)) +
           " bin_height=" + to_string(pf.packing.bin_height) + " strips=" + std::to_string(res.strips) +
           " valid=" + (valid ? "1" : "0") + " wall_ms=" + std::to_string(elapsed_ms(t0)));
  return valid ? kOk : kInvalid;
}

std::string describe(const Violation& v) {
  std::string s = "bin=" + std::to_string(v.bin);
  if (v.kind == Violation::Kind::kOverlap) {
    s += " overlap i=" + std::to_string(v.i) + " j=" + std::to_string(v.j);
  } else {
    s += " out_of_bounds i=" + std::to_string(v.i) + " side=" + side_name(v.side);
  }
  return s + " deficit=" + to_string(v.deficit);
}

int cmd_verify(const std::string& instance_path, const std::string& packing_path) {
  const InstanceFile inst = parse_instance(read_text_file(instance_path));
  const PackingFile pf = parse_packing(read_text_file(packing_path));
  VerificationReport report;
  try {
    report = verify_packing(inst.instance, pf.packing);
  } catch (const std::invalid_argument& e) {
    std::cout << "valid=0 error=\"" << e.what() << "\"\n";
    return kInvalid;
  }
  if (report.valid) {
    std::cout << "valid=1 bins=" << pf.packing.bins.size() << "\n";
    return kOk;
  }
  std::cout << "valid=0 violations=" << report.violations.size() << " first: " << describe(report.violations.front())
            << "\n";
  return kInvalid;
}

int cmd_lower_bound(const std::string& instance_path) {
  const InstanceFile inst = parse_instance(read_text_file(instance_path));
  std::cout << "lower_bound=" << area_lower_bound(inst.instance) << "\n";
  return kOk;
}

int cmd_render(const std::string& packing_path, const std::string& instance_path, const std::string& out_path,
               const SvgOptions& options) {
  const PackingFile pf = parse_packing(read_text_file(packing_path));
  const InstanceFile inst = parse_instance(read_text_file(instance_path));
  std::map<int, Rational> radius;
  for (const auto& c : inst.instance.circles) radius[c.id] = c.radius;
  const std::string svg = render_svg(pf.packing, radius, options);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    write_text_file(out_path, svg);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circpack: exact circle bin and strip packing"};
  app.require_subcommand(1);

  SolveFlags bins_flags, strip_flags, resource_flags;
  auto* bins = app.add_subcommand("pack-bins", "pack into bins of size w x (1 + gamma) h");
  add_solve_flags(bins, bins_flags);
  auto* strip = app.add_subcommand("pack-strip", "pack into a strip of width w (bin h is ignored)");
  add_solve_flags(strip, strip_flags);
  auto* resource = app.add_subcommand("pack-resource", "resource-augmented packing with eps = 1/r");
  add_solve_flags(resource, resource_flags);

  std::string v_instance, v_packing;
  auto* verify = app.add_subcommand("verify", "exact validity check; exit 0 iff valid");
  verify->add_option("instance", v_instance, "instance JSON file")->required();
  verify->add_option("packing", v_packing, "packing JSON file")->required();

  std::string lb_instance;
  auto* lower = app.add_subcommand("lower-bound", "area lower bound on the number of bins");
  lower->add_option("instance", lb_instance, "instance JSON file")->required();

  std::string r_packing, r_instance, r_out;
  SvgOptions svg;
  auto* render = app.add_subcommand("render", "draw a packing as SVG");
  render->add_option("packing", r_packing, "packing JSON file")->required();
  render->add_option("--instance", r_instance, "instance JSON file (radii)")->required();
  render->add_option("--out", r_out, "SVG path (default: stdout)");
  render->add_option("--scale", svg.scale, "pixels per unit")->check(CLI::PositiveNumber);
  render->add_option("--grid", svg.grid_level, "overlay cells of side w / base^level")->check(CLI::NonNegativeNumber);
  render->add_option("--grid-base", svg.grid_base, "grid subdivision base")->check(CLI::Range(2, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*bins) return cmd_pack_bins(bins_flags);
    if (*strip) return cmd_pack_strip(strip_flags);
    if (*resource) return cmd_pack_resource(resource_flags);
    if (*verify) return cmd_verify(v_instance, v_packing);
    if (*lower) return cmd_lower_bound(lb_instance);
    if (*render) return cmd_render(r_packing, r_instance, r_out, svg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const OracleIncompleteness& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIncomplete;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kParse;
}
