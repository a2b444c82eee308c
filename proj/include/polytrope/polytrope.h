#ifndef POLYTROPE_POLYTROPE_H
#define POLYTROPE_POLYTROPE_H

#include <stdint.h>

#if defined(POLYTROPE_BUILDING_LIBRARY)
#define PT_API __attribute__((visibility("default")))
#else
#define PT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pt_status {
  PT_OK = 0,
  PT_INVALID = 1,        /* input parsed but violates a precondition */
  PT_MALFORMED = 2,      /* unparsable input or bad argument */
  PT_RESOURCE_LIMIT = 3, /* size guard exceeded */
  PT_POSITIVE_CYCLE = 4,
  PT_DEGENERATE = 5,
  PT_INTERNAL = 6
} pt_status;

typedef enum pt_orbit_selection {
  PT_ORBITS_OPEN = 0,    /* complete connected functions */
  PT_ORBITS_LATTICE = 1, /* every face-lattice element */
  PT_ORBITS_SIMPLE = 2   /* singleton sinks, no equalities, self-loops ignored */
} pt_orbit_selection;

typedef struct pt_matrix pt_matrix;
typedef struct pt_complete_set pt_complete_set;
typedef struct pt_cone pt_cone;

/* Message of the last failed call on this thread; empty after a success. */
PT_API const char* pt_last_error(void);
/* Strings returned through char** outputs are owned by the caller. */
PT_API void pt_string_free(char* s);

/* {"n": 2, "entries": [["0","-1"],["-1","0"]]}; entries are "p/q" strings or integers. */
PT_API pt_status pt_matrix_parse(const char* json, pt_matrix** out);
PT_API pt_status pt_matrix_to_json(const pt_matrix* a, char** out);
PT_API void pt_matrix_free(pt_matrix* a);

PT_API pt_status pt_eigenvalue(const pt_matrix* a, char** out);
/* {"lambda", "vertices"} of the eigenspace. */
PT_API pt_status pt_eig_json(const pt_matrix* a, char** out);
/* Kleene star of the normalized matrix. */
PT_API pt_status pt_star_json(const pt_matrix* a, char** out);
/* {"lambda", "vertices", "columns", "critical_dot"} of the polytrope. */
PT_API pt_status pt_polytrope_json(const pt_matrix* a, char** out);
PT_API pt_status pt_critical_dot(const pt_matrix* a, char** out);
PT_API pt_status pt_classify(const pt_matrix* a, pt_complete_set** out);

/* {"n": 3, "parts": [{"edges": [[1,2],...]},...]}; nodes are 1-indexed. Parsing
   checks structure only, see pt_complete_set_validate. */
PT_API pt_status pt_complete_set_parse(const char* json, pt_complete_set** out);
/* *valid is 1 or 0; report is {"valid", "violations"} and may be NULL. */
PT_API pt_status pt_complete_set_validate(const pt_complete_set* g, int* valid, char** report);
PT_API pt_status pt_complete_set_to_json(const pt_complete_set* g, char** out);
PT_API pt_status pt_complete_set_to_dot(const pt_complete_set* g, char** out);
PT_API void pt_complete_set_free(pt_complete_set* g);

/* Both return PT_INVALID when an argument is not a valid complete set. */
PT_API pt_status pt_join(const pt_complete_set* g, const pt_complete_set* h, pt_complete_set** out);
PT_API pt_status pt_leq(const pt_complete_set* g, const pt_complete_set* h, int* out);

/* Irredundant H-representation of the cone indexed by g. */
PT_API pt_status pt_cone_of(const pt_complete_set* g, pt_cone** out);
PT_API pt_status pt_cone_to_json(const pt_cone* k, char** out);
PT_API pt_status pt_cone_codim(const pt_cone* k, int* out);
/* *out is 1 when every equality and inequality holds at a. */
PT_API pt_status pt_cone_contains(const pt_cone* k, const pt_matrix* a, int* out);
PT_API pt_status pt_cone_interior_point(const pt_cone* k, pt_matrix** out);
PT_API void pt_cone_free(pt_cone* k);

/* threads <= 0 falls back to POLYTROPE_THREADS, then 1. */
PT_API pt_status pt_enumerate_json(int n, int open_only, int threads, char** out);
PT_API pt_status pt_table_csv(int n, int threads, char** out);
PT_API pt_status pt_orbits_json(int n, pt_orbit_selection selection, int reversal, int threads, char** out);
/* suite: eigen, star, linearity, lp or codim. */
PT_API pt_status pt_verify(const char* suite, int n, int trials, uint64_t seed, int threads, int* pass, char** report);

#ifdef __cplusplus
}
#endif

#endif /* POLYTROPE_POLYTROPE_H */
