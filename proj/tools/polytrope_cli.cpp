// Command-line front end over the C API. Results go to stdout (or --out),
// diagnostics to stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polytrope/polytrope.h"

namespace {

enum Exit { kOk = 0, kValidation = 1, kMalformed = 2, kResource = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_code(pt_status s) {
  switch (s) {
    case PT_OK:
      return kOk;
    case PT_MALFORMED:
      return kMalformed;
    case PT_RESOURCE_LIMIT:
      return kResource;
    default:
      return kValidation;
  }
}

void check(pt_status s) {
  if (s != PT_OK) throw Failure{exit_code(s), pt_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { pt_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct MatrixDeleter {
  void operator()(pt_matrix* p) const { pt_matrix_free(p); }
};
struct SetDeleter {
  void operator()(pt_complete_set* p) const { pt_complete_set_free(p); }
};
struct ConeDeleter {
  void operator()(pt_cone* p) const { pt_cone_free(p); }
};
using Matrix = std::unique_ptr<pt_matrix, MatrixDeleter>;
using Set = std::unique_ptr<pt_complete_set, SetDeleter>;
using Cone = std::unique_ptr<pt_cone, ConeDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Failure{kMalformed, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Matrix load_matrix(const std::string& path) {
  pt_matrix* m = nullptr;
  check(pt_matrix_parse(read_input(path).c_str(), &m));
  return Matrix(m);
}

Set load_set(const std::string& path) {
  pt_complete_set* g = nullptr;
  check(pt_complete_set_parse(read_input(path).c_str(), &g));
  return Set(g);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Failure{kMalformed, "cannot write " + path};
  out << text;
}

struct Options {
  std::string out;
  std::uint64_t seed = 1;
  int threads = 0;
  int limit = 0;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_file(opt.out, text);
  }
}

void enforce_limit(const Options& opt, std::size_t count, const char* what) {
  if (opt.limit > 0 && count > static_cast<std::size_t>(opt.limit)) {
    throw Failure{kResource, std::to_string(count) + " " + what + " exceed --limit " + std::to_string(opt.limit)};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical eigenvalues, polytropes and the fan of polytrope types"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--out", opt.out, "Write results to this file instead of stdout");
  app.add_option("--seed", opt.seed, "Seed for sampling");
  app.add_option("--threads", opt.threads, "Worker threads (default: POLYTROPE_THREADS or 1)");
  app.add_option("--limit", opt.limit, "Fail with exit code 3 when an output list would exceed this size");

  std::string matrix_path;
  std::string dot_path;
  std::string first_path;
  std::string second_path;
  int n = 0;
  bool open_only = false;
  bool reversal = false;
  std::string selection = "open";
  std::string suite;
  int trials = 100;

  auto add_matrix_input = [&](CLI::App* sub) {
    sub->add_option("matrix,--matrix", matrix_path, "Matrix JSON file ('-' for stdin)");
  };

  auto* eig = app.add_subcommand("eig", "Eigenvalue and eigenspace vertices");
  add_matrix_input(eig);
  auto* star = app.add_subcommand("star", "Kleene star of the normalized matrix");
  add_matrix_input(star);
  auto* poly = app.add_subcommand("polytrope", "Polytrope vertices and critical graph");
  add_matrix_input(poly);
  poly->add_option("--dot", dot_path, "Also write the critical graph DOT here");
  auto* cls = app.add_subcommand("classify", "Complete set of connected relations of a matrix");
  add_matrix_input(cls);
  cls->add_option("--dot", dot_path, "Also write the critical graph DOT here");
  auto* cone = app.add_subcommand("cone", "Irredundant H-representation of a cone");
  cone->add_option("set", first_path, "Complete set JSON file")->required();
  auto* jn = app.add_subcommand("join", "Join of two complete sets");
  jn->add_option("first", first_path, "Complete set JSON file")->required();
  jn->add_option("second", second_path, "Complete set JSON file")->required();
  auto* val = app.add_subcommand("validate", "Check the complete-set axioms");
  val->add_option("set", first_path, "Complete set JSON file")->required();
  auto* en = app.add_subcommand("enumerate", "Face lattice (n <= 3) or open cones (n <= 4)");
  en->add_option("--n", n, "Number of nodes")->required();
  en->add_flag("--open", open_only, "Only the open cones");
  auto* tab = app.add_subcommand("table", "Cone counts by codimension, sink sizes and equality tags (CSV)");
  tab->add_option("--n", n, "Number of nodes")->required();
  auto* orb = app.add_subcommand("orbits", "Orbits under node relabeling");
  orb->add_option("--n", n, "Number of nodes")->required();
  orb->add_flag("--reversal", reversal, "Also identify edge-reversed cones");
  orb->add_option("--select", selection, "open, lattice or simple")
      ->check(CLI::IsMember({"open", "lattice", "simple"}));
  auto* ver = app.add_subcommand("verify", "Compare fast paths against brute-force oracles");
  ver->add_option("--suite", suite, "eigen, star, linearity, lp or codim")
      ->required()
      ->check(CLI::IsMember({"eigen", "star", "linearity", "lp", "codim"}));
  ver->add_option("--n", n, "Number of nodes")->required();
  ver->add_option("--trials", trials, "Samples per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    auto need_matrix = [&] {
      if (matrix_path.empty()) throw Failure{kMalformed, "a matrix file is required"};
      return load_matrix(matrix_path);
    };

    if (eig->parsed()) {
      char* s = nullptr;
      check(pt_eig_json(need_matrix().get(), &s));
      emit(opt, take(s));
    } else if (star->parsed()) {
      char* s = nullptr;
      check(pt_star_json(need_matrix().get(), &s));
      emit(opt, take(s));
    } else if (poly->parsed()) {
      const Matrix m = need_matrix();
      char* s = nullptr;
      check(pt_polytrope_json(m.get(), &s));
      emit(opt, take(s));
      if (!dot_path.empty()) {
        char* dot = nullptr;
        check(pt_critical_dot(m.get(), &dot));
        write_file(dot_path, take(dot));
      }
    } else if (cls->parsed()) {
      const Matrix m = need_matrix();
      pt_complete_set* g = nullptr;
      check(pt_classify(m.get(), &g));
      const Set owned(g);
      char* s = nullptr;
      check(pt_complete_set_to_json(g, &s));
      emit(opt, take(s));
      if (!dot_path.empty()) {
        char* dot = nullptr;
        check(pt_critical_dot(m.get(), &dot));
        write_file(dot_path, take(dot));
      }
    } else if (cone->parsed()) {
      const Set g = load_set(first_path);
      pt_cone* k = nullptr;
      check(pt_cone_of(g.get(), &k));
      const Cone owned(k);
      char* s = nullptr;
      check(pt_cone_to_json(k, &s));
      emit(opt, take(s));
    } else if (jn->parsed()) {
      const Set g = load_set(first_path);
      const Set h = load_set(second_path);
      pt_complete_set* j = nullptr;
      check(pt_join(g.get(), h.get(), &j));
      const Set owned(j);
      char* s = nullptr;
      check(pt_complete_set_to_json(j, &s));
      emit(opt, take(s));
    } else if (val->parsed()) {
      const Set g = load_set(first_path);
      int valid = 0;
      char* report = nullptr;
      check(pt_complete_set_validate(g.get(), &valid, &report));
      const std::string text = take(report);
      if (valid) {
        emit(opt, "OK\n");
      } else {
        emit(opt, text);
        const auto j = nlohmann::json::parse(text);
        for (const auto& v : j.at("violations")) {
          std::cerr << "violation (" << v.at("clause").get<std::string>() << "): " << v.at("message").get<std::string>()
                    << "\n";
        }
        return kValidation;
      }
    } else if (en->parsed()) {
      char* s = nullptr;
      check(pt_enumerate_json(n, open_only ? 1 : 0, opt.threads, &s));
      const std::string text = take(s);
      enforce_limit(opt, nlohmann::json::parse(text).at("elements").size(), "elements");
      emit(opt, text);
    } else if (tab->parsed()) {
      char* s = nullptr;
      check(pt_table_csv(n, opt.threads, &s));
      emit(opt, take(s));
    } else if (orb->parsed()) {
      const pt_orbit_selection sel = selection == "lattice" ? PT_ORBITS_LATTICE
                                     : selection == "simple" ? PT_ORBITS_SIMPLE
                                                             : PT_ORBITS_OPEN;
      char* s = nullptr;
      check(pt_orbits_json(n, sel, reversal ? 1 : 0, opt.threads, &s));
      const std::string text = take(s);
      enforce_limit(opt, nlohmann::json::parse(text).at("selected").get<std::size_t>(), "elements");
      emit(opt, text);
    } else if (ver->parsed()) {
      enforce_limit(opt, static_cast<std::size_t>(trials < 0 ? 0 : trials), "trials");
      int pass = 0;
      char* report = nullptr;
      check(pt_verify(suite.c_str(), n, trials, opt.seed, opt.threads, &pass, &report));
      emit(opt, take(report));
      if (!pass) {
        std::cerr << "verify " << suite << ": mismatches found\n";
        return kValidation;
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
