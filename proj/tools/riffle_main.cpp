// Command-line front end.  Everything of substance lives behind the shared
// library's C interface; this file only parses arguments and prints.
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "riffle.h"

namespace {

struct Options {
    std::string format = "csv";
    int digits = 3;
    int precision = 0; // 0: leave the library default
    std::uint64_t budget_states = 0;
    std::uint64_t budget_terms = 0;
    std::uint64_t seed = 0;

    std::string deck;
    std::string k_text;
    std::string a_text;
    std::string method = "exact";
    std::string start = "bottom";
    std::string feature = "arrangement";
    std::string table_id;
    int n = 0;
    std::uint64_t samples = 100000;
    unsigned workers = 1;
};

// Returns the shuffle expression and whether it lists hand counts.
std::pair<std::string, int> shuffles_of(const Options& opt) {
    if (!opt.k_text.empty()) return {opt.k_text, 0};
    return {opt.a_text, 1};
}

void add_shuffle_flags(CLI::App* cmd, Options& opt) {
    auto* k = cmd->add_option("--k", opt.k_text, "shuffle counts (a = 2^k); e.g. 3, 1..12, 2,5");
    auto* a = cmd->add_option("--a", opt.a_text, "hand counts; same grammar as --k");
    k->excludes(a);
    a->excludes(k);
    cmd->final_callback([k, a] {
        if ((k->count() == 0) == (a->count() == 0))
            throw CLI::ValidationError("exactly one of --k or --a is required");
    });
}

int fail(riffle_ctx* ctx, riffle_status status) {
    if (status == RIFFLE_ERR_CAPACITY)
        std::fprintf(stderr, "%s\n", riffle_last_error_json(ctx));
    else
        std::fprintf(stderr, "error: %s\n", riffle_last_error(ctx));
    return static_cast<int>(status);
}

int emit(riffle_ctx* ctx, riffle_rows* rows, const std::string& format) {
    char* text = nullptr;
    if (format == "csv")
        text = riffle_rows_csv(rows);
    else if (format == "json")
        text = riffle_rows_json(rows);
    else
        text = riffle_rows_table(rows);
    if (text == nullptr) {
        riffle_rows_free(rows);
        std::fprintf(stderr, "error: out of memory\n");
        return static_cast<int>(RIFFLE_ERR_INTERNAL);
    }
    std::fputs(text, stdout);
    riffle_free_string(text);
    riffle_rows_free(rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact and asymptotic mixing distances for riffle shuffles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", [] { return std::string(riffle_version()); });
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    app.add_option("--digits", opt.digits, "decimal places in values")
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "working decimal digits for bounds");
    app.add_option("--seed", opt.seed, "simulation seed")->capture_default_str();
    app.add_option("--budget-states", opt.budget_states, "cap on enumerated configurations");
    app.add_option("--budget-terms", opt.budget_terms, "cap on summed or enumerated terms");

    auto* sep = app.add_subcommand("sep", "separation of the sorted deck");
    sep->add_option("--deck", opt.deck, "preset name or pile sizes")->required();
    sep->add_option("--method", opt.method, "exact, rot, or both")->capture_default_str();
    add_shuffle_flags(sep, opt);

    auto* track = app.add_subcommand("track", "distances for one tracked card");
    track->add_option("--n", opt.n, "number of cards")->required();
    track->add_option("--start", opt.start, "bottom, top, or 1-based position")
        ->capture_default_str();
    add_shuffle_flags(track, opt);

    auto* fulldeck = app.add_subcommand("fulldeck", "distances for the full ordering");
    fulldeck->add_option("--n", opt.n, "number of cards")->required();
    add_shuffle_flags(fulldeck, opt);

    auto* bounds = app.add_subcommand("bounds", "bottom-card bounds and tail estimate");
    bounds->add_option("--n", opt.n, "number of cards")->required();
    add_shuffle_flags(bounds, opt);

    auto* redblack = app.add_subcommand("redblack", "one riffle of a two-color deck");
    redblack->add_option("--n", opt.n, "cards per color")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive enumeration (tiny decks)");
    oracle->add_option("--deck", opt.deck, "preset name or pile sizes")->required();
    add_shuffle_flags(oracle, opt);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
    simulate->add_option("--deck", opt.deck, "preset name or pile sizes")->required();
    simulate->add_option("--samples", opt.samples, "number of sampled shuffles")
        ->capture_default_str();
    simulate->add_option("--feature", opt.feature, "arrangement, tracked, or colorword")
        ->capture_default_str();
    simulate->add_option("--start", opt.start, "tracked card start")->capture_default_str();
    simulate->add_option("--workers", opt.workers, "worker threads")->capture_default_str();
    add_shuffle_flags(simulate, opt);

    auto* table = app.add_subcommand("table", "recompute a reference table");
    table->add_option("--id", opt.table_id, "AS, sep, thumb, or AD")->required();

    // Let the global options appear after the subcommand as well.
    for (CLI::App* cmd : app.get_subcommands(static_cast<bool (*)(const CLI::App*)>(
             [](const CLI::App*) { return true; })))
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return static_cast<int>(RIFFLE_ERR_USAGE);
    }

    riffle_ctx* ctx = riffle_ctx_new();
    if (ctx == nullptr) {
        std::fprintf(stderr, "error: out of memory\n");
        return static_cast<int>(RIFFLE_ERR_INTERNAL);
    }
    struct CtxGuard {
        riffle_ctx* ctx;
        ~CtxGuard() { riffle_ctx_free(ctx); }
    } guard{ctx};

    riffle_status status = riffle_set_digits(ctx, opt.digits);
    if (status == RIFFLE_OK && opt.precision != 0)
        status = riffle_set_precision(ctx, opt.precision);
    if (status == RIFFLE_OK && opt.budget_states != 0)
        status = riffle_set_budget(ctx, "states", opt.budget_states);
    if (status == RIFFLE_OK && opt.budget_terms != 0)
        status = riffle_set_budget(ctx, "terms", opt.budget_terms);
    if (status != RIFFLE_OK) return fail(ctx, status);

    riffle_rows* rows = nullptr;
    auto [shuffles, as_hands] = shuffles_of(opt);
    if (sep->parsed())
        status = riffle_cmd_sep(ctx, opt.deck.c_str(), shuffles.c_str(), as_hands,
                                opt.method.c_str(), &rows);
    else if (track->parsed())
        status = riffle_cmd_track(ctx, opt.n, opt.start.c_str(), shuffles.c_str(),
                                  as_hands, &rows);
    else if (fulldeck->parsed())
        status = riffle_cmd_fulldeck(ctx, opt.n, shuffles.c_str(), as_hands, &rows);
    else if (bounds->parsed())
        status = riffle_cmd_bounds(ctx, opt.n, shuffles.c_str(), as_hands, &rows);
    else if (redblack->parsed())
        status = riffle_cmd_redblack(ctx, opt.n, &rows);
    else if (oracle->parsed())
        status = riffle_cmd_oracle(ctx, opt.deck.c_str(), shuffles.c_str(), as_hands, &rows);
    else if (simulate->parsed())
        status = riffle_cmd_simulate(ctx, opt.deck.c_str(), shuffles.c_str(), as_hands,
                                     opt.samples, opt.seed, opt.feature.c_str(),
                                     opt.start.c_str(), opt.workers, &rows);
    else
        status = riffle_cmd_table(ctx, opt.table_id.c_str(), &rows);

    if (status != RIFFLE_OK) return fail(ctx, status);
    return emit(ctx, rows, opt.format);
}
