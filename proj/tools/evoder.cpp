#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "evoder/analysis.hpp"
#include "evoder/parse.hpp"
#include "evoder/report.hpp"

namespace fs = std::filesystem;
using namespace evoder;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kInconsistent = 3, kCheckFalse = 4 };

struct Options {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::string algebra_path;
  std::string matrix_path;
  std::string directory;
};

std::string join_indices(const std::vector<int>& zero_based, const char* sep = " ") {
  std::string out;
  for (std::size_t t = 0; t < zero_based.size(); ++t) {
    if (t) out += sep;
    out += std::to_string(zero_based[t] + 1);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Analysis load(const std::string& path) { return analyze(parse_algebra(read_text_file(path))); }

int inconsistency_exit(const Analysis& a, const std::string& path) {
  if (a.consistent()) return kOk;
  const auto& c = a.conflicts.front();
  std::cerr << "error: Inconsistency: " << path << ": " << to_string(c.rule) << " proved (" << c.cell.row + 1 << ","
            << c.cell.col + 1 << ") zero but basis element " << c.basis_index + 1 << " is nonzero there\n";
  return kInconsistent;
}

// ---- human-readable renderers ------------------------------------------------

void print_analyze(const Analysis& a) {
  std::cout << "dimension: " << a.algebra.dimension() << "\n";
  std::cout << "structure matrix:\n" << format_aligned(a.algebra.structure());
  std::cout << "arrows:\n";
  for (int i = 0; i < a.graph.size(); ++i) {
    const auto& d = a.graph.descendants(i);
    std::cout << "  " << i + 1 << " -> " << (d.empty() ? std::string("(none)") : join_indices(d)) << "\n";
  }
  std::cout << "sinks: " << (a.properties.sinks.empty() ? std::string("none") : join_indices(a.properties.sinks))
            << "\n";
  std::cout << "non-degenerate: " << yes_no(a.properties.non_degenerate) << "\n";
  std::cout << "connected: " << yes_no(a.properties.connected) << "\n";
  std::cout << "cycle: "
            << (a.properties.cycle ? join_indices(a.properties.cycle->vertices, " -> ") : std::string("none")) << "\n";
  std::cout << "twin partition:\n";
  for (const auto& cls : a.partition.classes()) {
    std::cout << "  {" << join_indices(cls.members, ",") << "}  with loop {" << join_indices(cls.with_loop, ",")
              << "}  without loop {" << join_indices(cls.without_loop, ",") << "}\n";
  }
  std::cout << "twin-free: " << yes_no(a.twin_free) << "\n";
}

void print_derive(const Analysis& a) {
  std::cout << "derivation dimension: " << a.space.dimension << "\n";
  for (std::size_t b = 0; b < a.space.basis.size(); ++b) {
    std::cout << "basis element " << b + 1 << ":\n" << format_aligned(a.space.basis[b]);
  }
}

void print_certify(const Analysis& a) {
  const auto certs = certificates(a.pattern);
  const int n = a.algebra.dimension();
  std::cout << "structural zeros: " << certs.size() << " of " << n * n << "\n";
  for (const auto& c : certs) {
    std::cout << "  d(" << c.cell.row + 1 << "," << c.cell.col + 1 << ") = 0  step " << c.step + 1 << "  "
              << to_string(c.rule);
    if (!c.witness.indices.empty()) std::cout << "  indices [" << join_indices(c.witness.indices, ",") << "]";
    if (!c.witness.values.empty()) {
      std::cout << "  values [";
      for (std::size_t t = 0; t < c.witness.values.size(); ++t) std::cout << (t ? "," : "") << c.witness.values[t].str();
      std::cout << "]";
    }
    std::cout << "\n";
  }
  std::cout << "consistent with solver: " << yes_no(a.consistent()) << "\n";
}

void print_classify(const Analysis& a, int n) {
  if (!a.classification) {
    std::cout << "classification: NotApplicable (n must be 3; got " << n << ")\n";
    return;
  }
  const auto& m = a.classification->match;
  switch (m.verdict) {
    case MatchVerdict::NotApplicable:
      std::cout << "classification: NotApplicable (" << m.reason << ")\n";
      return;
    case MatchVerdict::TwinFree:
      std::cout << "classification: TwinFree\n";
      return;
    case MatchVerdict::Type:
      std::cout << "classification: type " << m.type << " with i=" << m.assignment[0] + 1
                << " j=" << m.assignment[1] + 1 << " k=" << m.assignment[2] + 1 << " (" << m.arrows << " arrows)\n";
      break;
  }
  const auto& t = *a.classification->check;
  std::cout << "template:\n";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const auto& cell = t.cells[static_cast<std::size_t>(r * 3 + c)];
      std::cout << "  d(" << r + 1 << "," << c + 1 << "): "
                << (cell.status == CellStatus::RequiredZero ? std::string("0")
                    : cell.status == CellStatus::Free       ? std::string("free")
                                                            : cell.relation)
                << "\n";
    }
  }
  std::cout << "template parameters: " << t.parameter_count << "\n";
  std::cout << "solver dimension: " << t.solver_dimension << "\n";
  std::cout << "template check: " << (t.passes ? "passes" : "fails") << "\n";
  if (t.violation) {
    const auto& v = *t.violation;
    std::cout << "table discrepancy: basis element " << v.basis_index + 1 << " has d(" << v.cell.row + 1 << ","
              << v.cell.col + 1 << ") = " << v.actual.str() << ", relation \"" << v.relation << "\" gives "
              << (v.expected ? v.expected->str() : std::string("undefined")) << "\n";
  }
}

// ---- commands ----------------------------------------------------------------

int run_analysis_command(const std::string& command, const Options& opt) {
  const Analysis a = load(opt.algebra_path);
  if (opt.json) {
    Json out;
    if (command == "analyze") {
      out = report_json(a);
    } else if (command == "derive") {
      out = to_json(a.space);
    } else if (command == "certify") {
      out["zero_certificates"] = Json::array();
      for (const auto& c : certificates(a.pattern)) out["zero_certificates"].push_back(to_json(c));
      out["consistent"] = a.consistent();
      out["conflicts"] = conflicts_json(a.conflicts);
    } else {
      if (a.classification) {
        out = to_json(a.classification->match);
        if (a.classification->check) out["template_check"] = to_json(*a.classification->check);
      } else {
        out = Json{{"verdict", "NotApplicable"}, {"arrows", a.graph.arrow_count()}, {"reason", "n must be 3"}};
      }
    }
    std::cout << dump(out);
  } else if (command == "analyze") {
    print_analyze(a);
  } else if (command == "derive") {
    print_derive(a);
  } else if (command == "certify") {
    print_certify(a);
  } else {
    print_classify(a, a.algebra.dimension());
  }
  return inconsistency_exit(a, opt.algebra_path);
}

int run_check(const Options& opt) {
  const EvolutionAlgebra algebra = parse_algebra(read_text_file(opt.algebra_path));
  const RationalMatrix d = parse_matrix(read_text_file(opt.matrix_path));
  const LeibnizCheck result = is_derivation(algebra, d);
  if (opt.json) {
    std::cout << dump(to_json(result));
  } else {
    std::cout << "is derivation: " << yes_no(result.holds) << "\n";
    if (result.first_violation) {
      std::cout << "first violation: " << result.first_violation->label() << " residual " << result.residual.str()
                << "\n";
    }
  }
  return result.holds ? kOk : kCheckFalse;
}

struct BatchItem {
  std::string path;
  std::optional<Analysis> analysis;
  std::string error_kind;
  std::string error;
};

BatchItem derive_file(const std::string& path) {
  BatchItem item{path, std::nullopt, {}, {}};
  try {
    item.analysis = load(path);
  } catch (const Error& e) {
    item.error_kind = e.kind();
    item.error = e.what();
  }
  return item;
}

int run_batch(const Options& opt) {
  if (!fs::is_directory(opt.directory)) throw Error("IoError", "not a directory: " + opt.directory);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(opt.directory)) {
    if (entry.is_regular_file()) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<BatchItem> items(paths.size());
  std::vector<std::future<void>> jobs;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::size_t t = next++; t < paths.size(); t = next++) items[t] = derive_file(paths[t]);
    }));
  }
  for (auto& j : jobs) j.get();

  int code = kOk;
  Json out = Json::array();
  for (const auto& item : items) {
    if (!item.analysis) {
      std::cerr << "error: " << item.error_kind << ": " << item.path << ": " << item.error << "\n";
      code = std::max<int>(code, kParse);
      if (opt.json) out.push_back(Json{{"path", item.path}, {"error", item.error_kind + ": " + item.error}});
      else std::cout << item.path << ": error\n";
      continue;
    }
    const Analysis& a = *item.analysis;
    if (opt.json) {
      Json entry{{"path", item.path}};
      const Json space = to_json(a.space);
      for (const auto& [key, value] : space.items()) entry[key] = value;
      out.push_back(std::move(entry));
    } else {
      std::cout << item.path << ": dimension " << a.space.dimension << "\n";
      for (std::size_t b = 0; b < a.space.basis.size(); ++b) {
        std::cout << "  basis element " << b + 1 << ":\n" << format_aligned(a.space.basis[b], "    ");
      }
    }
    if (!a.consistent()) code = std::max<int>(code, inconsistency_exit(a, item.path));
  }
  if (opt.json) std::cout << dump(out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derivations of evolution algebras with exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print deterministic JSON instead of text");
  app.add_option("--seed", opt.seed, "Seed for commands that generate data");

  auto* analyze_cmd = app.add_subcommand("analyze", "Graph properties and twin partition");
  auto* derive_cmd = app.add_subcommand("derive", "Derivation space dimension and basis");
  auto* certify_cmd = app.add_subcommand("certify", "Structural zero certificates checked against the solver");
  auto* classify_cmd = app.add_subcommand("classify", "Type of a three-dimensional algebra and its template check");
  for (auto* cmd : {analyze_cmd, derive_cmd, certify_cmd, classify_cmd}) {
    cmd->add_option("algebra", opt.algebra_path, "Structure matrix file")->required();
  }
  auto* check_cmd = app.add_subcommand("check", "Whether a matrix is a derivation of an algebra");
  check_cmd->add_option("algebra", opt.algebra_path, "Structure matrix file")->required();
  check_cmd->add_option("matrix", opt.matrix_path, "Candidate derivation matrix file")->required();
  auto* batch_cmd = app.add_subcommand("batch", "Run derive over every file in a directory");
  batch_cmd->add_option("directory", opt.directory, "Directory of structure matrix files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: Usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check_cmd) return run_check(opt);
    if (*batch_cmd) return run_batch(opt);
    const std::string command = app.get_subcommands().front()->get_name();
    return run_analysis_command(command, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kParse;
  }
}
