#include "polytrope/polytrope.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "classify.hpp"
#include "cones.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "serialize.hpp"
#include "verify.hpp"

struct pt_matrix {
  polytrope::TropMatrix value;
};

struct pt_complete_set {
  polytrope::CompleteSet value;
};

struct pt_cone {
  polytrope::Cone value;
};

namespace {

using namespace polytrope;

thread_local std::string last_error;

pt_status to_status(Status s) { return static_cast<pt_status>(static_cast<int>(s)); }

template <typename F>
pt_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return PT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.status());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PT_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PT_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(Status::malformed, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) {
  require(out, "output");
  *out = dup_string(j.dump(2) + "\n");
}

void require_valid(const CompleteSet& g) {
  const auto report = validate_complete(g);
  if (!report.ok) fail(Status::invalid, "not a complete set: " + report.violations.front().message);
}

Json vertices_to_json(const TropPolytopeVertices& v) {
  Json columns = Json::array();
  for (int c : v.columns) columns.push_back(c + 1);
  return Json{{"vertices", points_to_json(v.vertices)}, {"columns", std::move(columns)}};
}

}  // namespace

extern "C" {

const char* pt_last_error(void) { return last_error.c_str(); }

void pt_string_free(char* s) { std::free(s); }

pt_status pt_matrix_parse(const char* json, pt_matrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = new pt_matrix{matrix_from_json(parse_json_text(json))};
  });
}

pt_status pt_matrix_to_json(const pt_matrix* a, char** out) {
  return guarded([&] {
    require(a, "matrix");
    emit(out, matrix_to_json(a->value));
  });
}

void pt_matrix_free(pt_matrix* a) { delete a; }

pt_status pt_eigenvalue(const pt_matrix* a, char** out) {
  return guarded([&] {
    require(a, "matrix");
    require(out, "output");
    *out = dup_string(format_rational(eigenvalue(a->value)));
  });
}

pt_status pt_eig_json(const pt_matrix* a, char** out) {
  return guarded([&] {
    require(a, "matrix");
    Json j{{"lambda", format_rational(eigenvalue(a->value))}};
    j.update(vertices_to_json(eigenspace_vertices(a->value)));
    emit(out, j);
  });
}

pt_status pt_star_json(const pt_matrix* a, char** out) {
  return guarded([&] {
    require(a, "matrix");
    emit(out, matrix_to_json(kleene_star(normalize(a->value))));
  });
}

pt_status pt_polytrope_json(const pt_matrix* a, char** out) {
  return guarded([&] {
    require(a, "matrix");
    Json j{{"lambda", format_rational(eigenvalue(a->value))}};
    j.update(vertices_to_json(polytrope_vertices(a->value)));
    j["critical_dot"] = critical_graph_to_dot(critical_graph(a->value));
    emit(out, j);
  });
}

pt_status pt_critical_dot(const pt_matrix* a, char** out) {
  return guarded([&] {
    require(a, "matrix");
    require(out, "output");
    *out = dup_string(critical_graph_to_dot(critical_graph(a->value)));
  });
}

pt_status pt_classify(const pt_matrix* a, pt_complete_set** out) {
  return guarded([&] {
    require(a, "matrix");
    require(out, "output");
    *out = new pt_complete_set{classify(a->value)};
  });
}

pt_status pt_complete_set_parse(const char* json, pt_complete_set** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = new pt_complete_set{complete_set_from_json(parse_json_text(json))};
  });
}

pt_status pt_complete_set_validate(const pt_complete_set* g, int* valid, char** report) {
  return guarded([&] {
    require(g, "complete set");
    require(valid, "valid");
    const auto r = validate_complete(g->value);
    *valid = r.ok ? 1 : 0;
    if (report != nullptr) emit(report, report_to_json(r));
  });
}

pt_status pt_complete_set_to_json(const pt_complete_set* g, char** out) {
  return guarded([&] {
    require(g, "complete set");
    emit(out, complete_set_to_json(g->value));
  });
}

pt_status pt_complete_set_to_dot(const pt_complete_set* g, char** out) {
  return guarded([&] {
    require(g, "complete set");
    require(out, "output");
    *out = dup_string(complete_set_to_dot(g->value));
  });
}

void pt_complete_set_free(pt_complete_set* g) { delete g; }

pt_status pt_join(const pt_complete_set* g, const pt_complete_set* h, pt_complete_set** out) {
  return guarded([&] {
    require(g, "first complete set");
    require(h, "second complete set");
    require(out, "output");
    if (g->value.n() != h->value.n()) fail(Status::invalid, "complete sets have different n");
    require_valid(g->value);
    require_valid(h->value);
    *out = new pt_complete_set{join(g->value, h->value)};
  });
}

pt_status pt_leq(const pt_complete_set* g, const pt_complete_set* h, int* out) {
  return guarded([&] {
    require(g, "first complete set");
    require(h, "second complete set");
    require(out, "output");
    if (g->value.n() != h->value.n()) fail(Status::invalid, "complete sets have different n");
    require_valid(g->value);
    require_valid(h->value);
    *out = leq(g->value, h->value) ? 1 : 0;
  });
}

pt_status pt_cone_of(const pt_complete_set* g, pt_cone** out) {
  return guarded([&] {
    require(g, "complete set");
    require(out, "output");
    require_valid(g->value);
    *out = new pt_cone{minimal_representation(psi_complete(g->value))};
  });
}

pt_status pt_cone_to_json(const pt_cone* k, char** out) {
  return guarded([&] {
    require(k, "cone");
    emit(out, cone_to_json(k->value));
  });
}

pt_status pt_cone_codim(const pt_cone* k, int* out) {
  return guarded([&] {
    require(k, "cone");
    require(out, "output");
    *out = codim_rank(k->value);
  });
}

pt_status pt_cone_contains(const pt_cone* k, const pt_matrix* a, int* out) {
  return guarded([&] {
    require(k, "cone");
    require(a, "matrix");
    require(out, "output");
    if (k->value.n != a->value.size()) fail(Status::invalid, "matrix and cone have different n");
    *out = contains(k->value, a->value) ? 1 : 0;
  });
}

pt_status pt_cone_interior_point(const pt_cone* k, pt_matrix** out) {
  return guarded([&] {
    require(k, "cone");
    require(out, "output");
    *out = new pt_matrix{interior_point(k->value)};
  });
}

void pt_cone_free(pt_cone* k) { delete k; }

pt_status pt_enumerate_json(int n, int open_only, int threads, char** out) {
  return guarded([&] {
    const int t = resolve_threads(threads);
    if (open_only) {
      const auto ccf = enumerate_ccf(n, t);
      Json elements = Json::array();
      for (std::size_t i = 0; i < ccf.size(); ++i) {
        Json e{{"id", i}};
        e["parts"] = complete_set_to_json(ccf[i]).at("parts");
        elements.push_back(std::move(e));
      }
      emit(out, Json{{"n", n}, {"count", ccf.size()}, {"elements", std::move(elements)}});
    } else {
      emit(out, lattice_to_json(face_lattice(n, t)));
    }
  });
}

pt_status pt_table_csv(int n, int threads, char** out) {
  return guarded([&] {
    require(out, "output");
    *out = dup_string(ntable_to_csv(n_table(face_lattice(n, resolve_threads(threads)))));
  });
}

pt_status pt_orbits_json(int n, pt_orbit_selection selection, int reversal, int threads, char** out) {
  return guarded([&] {
    const int t = resolve_threads(threads);
    std::vector<CompleteSet> elements;
    bool ignore_loops = false;
    switch (selection) {
      case PT_ORBITS_OPEN:
        elements = enumerate_ccf(n, t);
        break;
      case PT_ORBITS_LATTICE:
        elements = face_lattice(n, t).elements;
        break;
      case PT_ORBITS_SIMPLE: {
        const auto lattice = face_lattice(n, t);
        for (std::size_t i = 0; i < lattice.elements.size(); ++i) {
          const auto lambda = sink_profile(lattice.elements[i]);
          const bool singletons = static_cast<int>(lambda.size()) == n;
          if (singletons && lattice.counts[i].path == 0 && lattice.counts[i].cycle == 0) {
            elements.push_back(lattice.elements[i]);
          }
        }
        ignore_loops = true;
        break;
      }
      default:
        fail(Status::malformed, "unknown orbit selection");
    }
    const auto classes = orbits(elements, reversal != 0, ignore_loops, t);
    Json out_classes = Json::array();
    std::size_t members = 0;
    for (const auto& orbit : classes) {
      Json list = Json::array();
      for (const auto& g : orbit) list.push_back(complete_set_to_json(g).at("parts"));
      members += orbit.size();
      out_classes.push_back(Json{{"size", orbit.size()}, {"members", std::move(list)}});
    }
    emit(out, Json{{"n", n},
                   {"selected", elements.size()},
                   {"distinct", members},
                   {"reversal", reversal != 0},
                   {"ignore_loops", ignore_loops},
                   {"orbit_count", classes.size()},
                   {"orbits", std::move(out_classes)}});
  });
}

pt_status pt_verify(const char* suite, int n, int trials, uint64_t seed, int threads, int* pass, char** report) {
  return guarded([&] {
    require(suite, "suite");
    require(pass, "pass");
    const auto r = run_verify(suite, n, trials, seed, resolve_threads(threads));
    *pass = r.pass ? 1 : 0;
    if (report != nullptr) emit(report, r.details);
  });
}

}  // extern "C"
