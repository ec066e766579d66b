#include "riffle.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "riffle/asymptotics.hpp"
#include "riffle/errors.hpp"
#include "riffle/report.hpp"
#include "riffle/tables.hpp"

struct riffle_ctx {
    riffle::Budgets budgets;
    int digits = 3;
    std::string last_error;
    std::string last_error_json;
};

struct riffle_rows {
    riffle::report::Rows rows;
};

namespace {

std::string json_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

void record(riffle_ctx* ctx, int code, const std::string& message) {
    ctx->last_error = message;
    ctx->last_error_json = "{\"code\": " + std::to_string(code) +
                           ", \"message\": " + json_quote(message) + "}";
}

void record(riffle_ctx* ctx, const riffle::CapacityError& e) {
    ctx->last_error = e.what();
    ctx->last_error_json = "{\"code\": 3, \"message\": " + json_quote(e.what()) +
                           ", \"budget\": " + json_quote(e.budget) +
                           ", \"flag\": " + json_quote(e.flag) +
                           ", \"needed\": " + std::to_string(e.needed) +
                           ", \"limit\": " + std::to_string(e.limit) + "}";
}

template <typename Fn>
riffle_status guarded(riffle_ctx* ctx, riffle_rows** out, Fn&& fn) {
    if (ctx == nullptr) return RIFFLE_ERR_USAGE;
    if (out != nullptr) *out = nullptr;
    try {
        fn();
        return RIFFLE_OK;
    } catch (const riffle::CapacityError& e) {
        record(ctx, e);
        return RIFFLE_ERR_CAPACITY;
    } catch (const riffle::InputError& e) {
        record(ctx, 2, e.what());
        return RIFFLE_ERR_USAGE;
    } catch (const std::exception& e) {
        record(ctx, 4, e.what());
        return RIFFLE_ERR_INTERNAL;
    }
}

std::string require(const char* text, const char* name) {
    if (text == nullptr) throw riffle::InputError(std::string(name) + " must not be NULL");
    return text;
}

void emit(riffle_rows** out, riffle::report::Rows rows) {
    if (out == nullptr) throw riffle::InputError("out must not be NULL");
    *out = new riffle_rows{std::move(rows)};
}

riffle::report::ShuffleSet shuffle_set(const char* shuffles, int as_hands) {
    return riffle::report::parse_shuffle_set(require(shuffles, "shuffles"), as_hands == 0);
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

} // namespace

riffle_ctx* riffle_ctx_new(void) {
    return new (std::nothrow) riffle_ctx;
}

void riffle_ctx_free(riffle_ctx* ctx) {
    delete ctx;
}

riffle_status riffle_set_digits(riffle_ctx* ctx, int digits) {
    return guarded(ctx, nullptr, [&] {
        if (digits < 0 || digits > 50) throw riffle::InputError("digits must be in 0..50");
        ctx->digits = digits;
    });
}

riffle_status riffle_set_precision(riffle_ctx* ctx, int digits10) {
    return guarded(ctx, nullptr, [&] {
        if (digits10 < 10 || digits10 > 10000)
            throw riffle::InputError("precision must be in 10..10000 digits");
        riffle::asym::set_default_precision(static_cast<unsigned>(digits10));
    });
}

riffle_status riffle_set_budget(riffle_ctx* ctx, const char* name, uint64_t value) {
    return guarded(ctx, nullptr, [&] {
        std::string which = require(name, "name");
        if (value == 0) throw riffle::InputError("budget must be positive");
        if (which == "states") {
            ctx->budgets.states = value;
            ctx->budgets.chain_dim = value;
        } else if (which == "terms") {
            ctx->budgets.outcomes = value;
            ctx->budgets.compositions = value;
            ctx->budgets.dp_work = value;
            ctx->budgets.gf_degree =
                value > 1'000'000 ? 1'000'000 : static_cast<int>(value);
        } else {
            throw riffle::InputError("budget name must be states or terms");
        }
    });
}

const char* riffle_last_error(const riffle_ctx* ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

const char* riffle_last_error_json(const riffle_ctx* ctx) {
    return ctx == nullptr ? "{}" : ctx->last_error_json.c_str();
}

riffle_status riffle_cmd_sep(riffle_ctx* ctx, const char* deck, const char* shuffles,
                             int as_hands, const char* method, riffle_rows** out) {
    return guarded(ctx, out, [&] {
        emit(out, riffle::report::cmd_sep(
                      riffle::DeckSpec::parse(require(deck, "deck")),
                      shuffle_set(shuffles, as_hands),
                      riffle::report::parse_sep_method(require(method, "method")),
                      ctx->digits, ctx->budgets));
    });
}

riffle_status riffle_cmd_track(riffle_ctx* ctx, int n, const char* start,
                               const char* shuffles, int as_hands, riffle_rows** out) {
    return guarded(ctx, out, [&] {
        emit(out, riffle::report::cmd_track(n, require(start, "start"),
                                            shuffle_set(shuffles, as_hands), ctx->digits));
    });
}

riffle_status riffle_cmd_fulldeck(riffle_ctx* ctx, int n, const char* shuffles,
                                  int as_hands, riffle_rows** out) {
    return guarded(ctx, out, [&] {
        emit(out, riffle::report::cmd_fulldeck(n, shuffle_set(shuffles, as_hands),
                                               ctx->digits));
    });
}

riffle_status riffle_cmd_bounds(riffle_ctx* ctx, int n, const char* shuffles,
                                int as_hands, riffle_rows** out) {
    return guarded(ctx, out, [&] {
        emit(out, riffle::report::cmd_bounds(n, shuffle_set(shuffles, as_hands),
                                             ctx->digits));
    });
}

riffle_status riffle_cmd_redblack(riffle_ctx* ctx, int half, riffle_rows** out) {
    return guarded(ctx, out,
                   [&] { emit(out, riffle::report::cmd_redblack(half, ctx->digits)); });
}

riffle_status riffle_cmd_oracle(riffle_ctx* ctx, const char* deck, const char* shuffles,
                                int as_hands, riffle_rows** out) {
    return guarded(ctx, out, [&] {
        emit(out, riffle::report::cmd_oracle(riffle::DeckSpec::parse(require(deck, "deck")),
                                             shuffle_set(shuffles, as_hands), ctx->digits,
                                             ctx->budgets));
    });
}

riffle_status riffle_cmd_simulate(riffle_ctx* ctx, const char* deck, const char* shuffles,
                                  int as_hands, uint64_t samples, uint64_t seed,
                                  const char* feature, const char* start,
                                  unsigned workers, riffle_rows** out) {
    return guarded(ctx, out, [&] {
        emit(out, riffle::report::cmd_simulate(
                      riffle::DeckSpec::parse(require(deck, "deck")),
                      shuffle_set(shuffles, as_hands), samples, seed,
                      require(feature, "feature"), require(start, "start"), workers,
                      ctx->digits, ctx->budgets));
    });
}

riffle_status riffle_cmd_table(riffle_ctx* ctx, const char* id, riffle_rows** out) {
    return guarded(ctx, out, [&] {
        emit(out, riffle::report::cmd_table(require(id, "id"), ctx->digits, ctx->budgets));
    });
}

size_t riffle_rows_count(const riffle_rows* rows) {
    return rows == nullptr ? 0 : rows->rows.rows.size();
}

size_t riffle_column_count(void) {
    return riffle::report::kColumnCount;
}

const char* riffle_column_name(size_t column) {
    if (column >= static_cast<size_t>(riffle::report::kColumnCount)) return nullptr;
    return riffle::report::kColumnNames[column];
}

const char* riffle_rows_cell(const riffle_rows* rows, size_t row, size_t column) {
    if (rows == nullptr || row >= rows->rows.rows.size() ||
        column >= static_cast<size_t>(riffle::report::kColumnCount))
        return nullptr;
    return rows->rows.rows[row].col(static_cast<int>(column)).c_str();
}

char* riffle_rows_csv(const riffle_rows* rows) {
    return rows == nullptr ? nullptr : copy_string(riffle::report::to_csv(rows->rows));
}

char* riffle_rows_json(const riffle_rows* rows) {
    return rows == nullptr ? nullptr : copy_string(riffle::report::to_json(rows->rows));
}

char* riffle_rows_table(const riffle_rows* rows) {
    return rows == nullptr ? nullptr : copy_string(riffle::report::to_table(rows->rows));
}

void riffle_rows_free(riffle_rows* rows) {
    delete rows;
}

void riffle_free_string(char* text) {
    std::free(text);
}

const char* riffle_version(void) {
    return "riffle 1.0.0";
}
