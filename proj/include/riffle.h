/* C interface to the riffle-shuffle distance library.
 *
 * All computations run behind two opaque handle types: a context carrying
 * options and the last error, and a result set of pre-formatted rows.  Every
 * command fills a riffle_rows* whose cells are strings; identical inputs
 * produce identical bytes.  No call touches global state except
 * riffle_set_precision, which adjusts the process-wide floating precision.
 */
#ifndef RIFFLE_H
#define RIFFLE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RIFFLE_API
#else
#define RIFFLE_API __attribute__((visibility("default")))
#endif

/* Values double as process exit codes for the bundled CLI. */
typedef enum riffle_status {
    RIFFLE_OK = 0,
    RIFFLE_ERR_USAGE = 2,    /* malformed input or argument */
    RIFFLE_ERR_CAPACITY = 3, /* a work budget would be exceeded */
    RIFFLE_ERR_INTERNAL = 4
} riffle_status;

typedef struct riffle_ctx riffle_ctx;
typedef struct riffle_rows riffle_rows;

RIFFLE_API riffle_ctx* riffle_ctx_new(void);
RIFFLE_API void riffle_ctx_free(riffle_ctx* ctx);

/* Decimal places in value cells; 0..50, default 3. */
RIFFLE_API riffle_status riffle_set_digits(riffle_ctx* ctx, int digits);

/* Working precision for the non-rational bound evaluations, in decimal
 * digits; 10..10000, default 50.  Process-wide. */
RIFFLE_API riffle_status riffle_set_precision(riffle_ctx* ctx, int digits10);

/* name "states": cap on enumerated configurations (exhaustive oracle state
 * spaces, tabulated sample cells).  name "terms": cap on summed or
 * enumerated terms (digit sequences, composition sums, DP multiplies,
 * polynomial degree). */
RIFFLE_API riffle_status riffle_set_budget(riffle_ctx* ctx, const char* name,
                                           uint64_t value);

/* After a failing call: a message, and a JSON object with "code" and
 * "message" plus "budget", "flag", "needed", "limit" for capacity errors.
 * Pointers remain valid until the next failing call on the same ctx. */
RIFFLE_API const char* riffle_last_error(const riffle_ctx* ctx);
RIFFLE_API const char* riffle_last_error_json(const riffle_ctx* ctx);

/* Deck expressions: preset names (bd52, blackjack, suits, redblack, zener)
 * or comma-separated pile sizes, each optionally COUNTxSIZE ("4x13").
 *
 * Shuffle expressions: "3", "1..12", or "2,4,8", combinable ("1,5..7").
 * With as_hands == 0 the numbers are shuffle counts k and a = 2^k hands are
 * dealt; with as_hands != 0 they are hand counts a directly.
 *
 * On success *out owns the result and must be released with
 * riffle_rows_free.  On failure *out is NULL and the error is recorded. */

/* Separation of the sorted deck; method "exact", "rot", or "both". */
RIFFLE_API riffle_status riffle_cmd_sep(riffle_ctx* ctx, const char* deck,
                                        const char* shuffles, int as_hands,
                                        const char* method, riffle_rows** out);

/* One tracked card among n; start is "bottom", "top", or a 1-based position
 * from the top. */
RIFFLE_API riffle_status riffle_cmd_track(riffle_ctx* ctx, int n, const char* start,
                                          const char* shuffles, int as_hands,
                                          riffle_rows** out);

/* Full ordering of n distinct cards. */
RIFFLE_API riffle_status riffle_cmd_fulldeck(riffle_ctx* ctx, int n,
                                             const char* shuffles, int as_hands,
                                             riffle_rows** out);

/* Two-sided bounds for the tracked bottom card plus the n/(2a) tail. */
RIFFLE_API riffle_status riffle_cmd_bounds(riffle_ctx* ctx, int n,
                                           const char* shuffles, int as_hands,
                                           riffle_rows** out);

/* One riffle of half+half two-color decks, sorted and alternating starts. */
RIFFLE_API riffle_status riffle_cmd_redblack(riffle_ctx* ctx, int half,
                                             riffle_rows** out);

/* Exhaustive enumeration; feasible only for tiny decks and hand counts. */
RIFFLE_API riffle_status riffle_cmd_oracle(riffle_ctx* ctx, const char* deck,
                                           const char* shuffles, int as_hands,
                                           riffle_rows** out);

/* Monte Carlo estimate; feature "arrangement", "tracked", or "colorword";
 * start as in riffle_cmd_track, read only for "tracked".  Identical
 * arguments give identical rows for any worker count. */
RIFFLE_API riffle_status riffle_cmd_simulate(riffle_ctx* ctx, const char* deck,
                                             const char* shuffles, int as_hands,
                                             uint64_t samples, uint64_t seed,
                                             const char* feature, const char* start,
                                             unsigned workers, riffle_rows** out);

/* Reference tables recomputed beside their published figures; id is "AS",
 * "sep", "thumb", or "AD". */
RIFFLE_API riffle_status riffle_cmd_table(riffle_ctx* ctx, const char* id,
                                          riffle_rows** out);

RIFFLE_API size_t riffle_rows_count(const riffle_rows* rows);
RIFFLE_API size_t riffle_column_count(void);
RIFFLE_API const char* riffle_column_name(size_t column); /* NULL out of range */
RIFFLE_API const char* riffle_rows_cell(const riffle_rows* rows, size_t row,
                                        size_t column); /* NULL out of range */

/* Whole-result renderings; free with riffle_free_string. */
RIFFLE_API char* riffle_rows_csv(const riffle_rows* rows);
RIFFLE_API char* riffle_rows_json(const riffle_rows* rows);
RIFFLE_API char* riffle_rows_table(const riffle_rows* rows);

RIFFLE_API void riffle_rows_free(riffle_rows* rows);
RIFFLE_API void riffle_free_string(char* text);

RIFFLE_API const char* riffle_version(void);

#ifdef __cplusplus
}
#endif

#endif /* RIFFLE_H */
