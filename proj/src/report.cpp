#include "riffle/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <string_view>

#include "riffle/asymptotics.hpp"
#include "riffle/exact.hpp"
#include "riffle/montecarlo.hpp"
#include "riffle/oracle.hpp"
#include "riffle/rational.hpp"

namespace riffle::report {

const char* const kColumnNames[kColumnCount] = {
    "deck", "a", "k", "metric", "value", "method", "error_bound", "provenance"};

const std::string& Row::col(int i) const {
    switch (i) {
        case 0: return deck;
        case 1: return a;
        case 2: return k;
        case 3: return metric;
        case 4: return value;
        case 5: return method;
        case 6: return error_bound;
        default: return provenance;
    }
}

namespace {

std::uint64_t parse_u64(std::string_view item) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size())
        throw InputError("expected a nonnegative integer, got '" + std::string(item) + "'");
    return value;
}

void check_one(std::uint64_t value, bool is_k) {
    if (is_k && value > 63) throw InputError("k must be at most 63");
    if (!is_k && value == 0) throw InputError("hand count a must be positive");
}

struct KAndHands {
    std::string k;
    std::string a;
    std::uint64_t hands;
};

KAndHands resolve(const ShuffleSet& set, std::size_t index) {
    std::uint64_t v = set.values.at(index);
    check_one(v, set.values_are_k);
    if (set.values_are_k)
        return {std::to_string(v), std::to_string(std::uint64_t{1} << v),
                std::uint64_t{1} << v};
    return {"", std::to_string(v), v};
}

int resolve_start(int n, const std::string& start) {
    if (start == "bottom") return n;
    if (start == "top") return 1;
    std::uint64_t pos = parse_u64(start);
    if (pos < 1 || pos > static_cast<std::uint64_t>(n))
        throw InputError("start position out of range 1..n");
    return static_cast<int>(pos);
}

mc::Feature parse_feature(const std::string& text) {
    if (text == "arrangement") return mc::Feature::kArrangement;
    if (text == "tracked") return mc::Feature::kTracked;
    if (text == "colorword") return mc::Feature::kColorWord;
    throw InputError("feature must be arrangement, tracked, or colorword");
}

std::string fraction_string(const BigRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool needs_quoting(const std::string& field) {
    return field.find_first_of(",\"\n") != std::string::npos;
}

void append_csv_field(std::string& out, const std::string& field) {
    if (!needs_quoting(field)) {
        out += field;
        return;
    }
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

void append_json_string(std::string& out, const std::string& text) {
    out += '"';
    for (unsigned char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += '"';
}

} // namespace

ShuffleSet parse_shuffle_set(const std::string& text, bool values_are_k) {
    ShuffleSet set;
    set.values_are_k = values_are_k;
    std::string_view rest = text;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) throw InputError("empty item in '" + text + "'");
        auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            std::uint64_t v = parse_u64(item);
            check_one(v, values_are_k);
            set.values.push_back(v);
        } else {
            std::uint64_t lo = parse_u64(item.substr(0, dots));
            std::uint64_t hi = parse_u64(item.substr(dots + 2));
            if (hi < lo) throw InputError("range '" + std::string(item) + "' is empty");
            check_one(hi, values_are_k);
            check_one(lo, values_are_k);
            for (std::uint64_t v = lo; v <= hi; ++v) set.values.push_back(v);
        }
    }
    if (set.values.empty()) throw InputError("no shuffle counts given");
    return set;
}

std::uint64_t hands_for(const ShuffleSet& set, std::size_t index) {
    return resolve(set, index).hands;
}

SepMethod parse_sep_method(const std::string& text) {
    if (text == "exact") return SepMethod::kExact;
    if (text == "rot") return SepMethod::kRuleOfThumb;
    if (text == "both") return SepMethod::kBoth;
    throw InputError("method must be exact, rot, or both");
}

Rows cmd_sep(const DeckSpec& deck, const ShuffleSet& shuffles, SepMethod method,
             int digits, const Budgets& budgets) {
    deck.validate();
    const std::string label = deck.label();
    const auto piles = static_cast<std::uint64_t>(deck.pile_count());
    Rows out;
    for (std::size_t i = 0; i < shuffles.values.size(); ++i) {
        auto sh = resolve(shuffles, i);
        if (method != SepMethod::kRuleOfThumb) {
            BigRat sep = exact::general_sep(deck, sh.hands, budgets);
            out.rows.push_back({label, sh.a, sh.k, "SEP", format_decimal(sep, digits),
                                "sorted-start-dp", "", "exact"});
        }
        if (method != SepMethod::kExact) {
            if (sh.hands < piles) {
                out.rows.push_back({label, sh.a, sh.k, "SEP", "", "rule-of-thumb", "",
                                    "inapplicable: hands < piles; exact separation is 1"});
            } else {
                auto rot = asym::rule_of_thumb_sep(deck, sh.hands);
                std::string bound =
                    rot.eta_bound ? format_decimal(*rot.eta_bound, digits) : "";
                std::string prov = rot.valid ? "estimate" : "estimate; " + rot.note;
                out.rows.push_back({label, sh.a, sh.k, "SEP",
                                    format_decimal(rot.estimate, digits), "rule-of-thumb",
                                    bound, prov});
            }
        }
    }
    return out;
}

Rows cmd_track(int n, const std::string& start, const ShuffleSet& shuffles, int digits) {
    int pos = resolve_start(n, start);
    const std::string label = "card" + std::to_string(pos) + "of" + std::to_string(n);
    Rows out;
    for (std::size_t i = 0; i < shuffles.values.size(); ++i) {
        auto sh = resolve(shuffles, i);
        auto d = exact::tracked_card_distances(n, sh.hands, pos);
        out.rows.push_back(
            {label, sh.a, sh.k, "TV", format_decimal(d.tv, digits), "card-row", "", "exact"});
        out.rows.push_back(
            {label, sh.a, sh.k, "SEP", format_decimal(d.sep, digits), "card-row", "", "exact"});
    }
    return out;
}

Rows cmd_fulldeck(int n, const ShuffleSet& shuffles, int digits) {
    const std::string label = "bd" + std::to_string(n);
    Rows out;
    for (std::size_t i = 0; i < shuffles.values.size(); ++i) {
        auto sh = resolve(shuffles, i);
        auto d = exact::full_deck_distances(n, sh.hands);
        out.rows.push_back({label, sh.a, sh.k, "TV", format_decimal(d.tv, digits),
                            "bayer-diaconis", "", "exact"});
        out.rows.push_back({label, sh.a, sh.k, "SEP", format_decimal(d.sep, digits),
                            "bayer-diaconis", "", "exact"});
    }
    return out;
}

Rows cmd_bounds(int n, const ShuffleSet& shuffles, int digits) {
    const std::string label = "card" + std::to_string(n) + "of" + std::to_string(n);
    Rows out;
    for (std::size_t i = 0; i < shuffles.values.size(); ++i) {
        auto sh = resolve(shuffles, i);
        auto sep = asym::bottom_card_sep_bounds(n, sh.hands);
        auto tv = asym::bottom_card_tv_bounds(n, sh.hands);
        BigRat tail = asym::sep_tail_estimate(n, sh.hands);
        out.rows.push_back({label, sh.a, sh.k, "SEP_LOWER", format_decimal(sep.lower, digits),
                            "geometric-bounds", "", "bound"});
        out.rows.push_back({label, sh.a, sh.k, "SEP_UPPER", format_decimal(sep.upper, digits),
                            "geometric-bounds", "", "bound"});
        out.rows.push_back({label, sh.a, sh.k, "TV_LOWER", asym::format_real(tv.lower, digits),
                            "geometric-bounds", "", "bound"});
        out.rows.push_back({label, sh.a, sh.k, "TV_UPPER", asym::format_real(tv.upper, digits),
                            "geometric-bounds", "", "bound"});
        out.rows.push_back({label, sh.a, sh.k, "SEP_TAIL", format_decimal(tail, digits),
                            "tail-estimate", "", "estimate; = " + fraction_string(tail)});
    }
    return out;
}

Rows cmd_redblack(int half, int digits) {
    DeckSpec deck{{half, half}};
    const std::string label = deck.label();
    Rows out;
    out.rows.push_back({label, "2", "1", "TV", format_decimal(exact::redblack_tv(half), digits),
                        "color-block-form", "", "exact"});
    out.rows.push_back({label, "2", "1", "TV_ALT",
                        format_decimal(exact::alternating_tv(half), digits),
                        "alternating-form", "", "exact; alternating start"});
    return out;
}

Rows cmd_oracle(const DeckSpec& deck, const ShuffleSet& shuffles, int digits,
                const Budgets& budgets) {
    deck.validate();
    const std::string label = deck.label();
    Rows out;
    for (std::size_t i = 0; i < shuffles.values.size(); ++i) {
        auto sh = resolve(shuffles, i);
        auto chain = oracle::build_quotient_chain(deck, sh.hands, budgets);
        auto brute = oracle::brute_distances(chain, sorted_word(deck));
        out.rows.push_back({label, sh.a, sh.k, "TV", format_decimal(brute.tv, digits),
                            "exhaustive", "", "oracle; = " + fraction_string(brute.tv)});
        out.rows.push_back({label, sh.a, sh.k, "SEP", format_decimal(brute.sep, digits),
                            "exhaustive", "", "oracle; = " + fraction_string(brute.sep)});
        out.rows.push_back({label, sh.a, sh.k, "MIN_MASS",
                            format_decimal(brute.min_mass, digits), "exhaustive", "",
                            "oracle; = " + fraction_string(brute.min_mass)});
        out.rows.push_back({label, sh.a, sh.k, "ARGMIN", word_string(brute.argmin),
                            "exhaustive", "",
                            brute.argmin_unique ? "oracle; unique minimizer"
                                                : "oracle; tied minimizer"});
        out.rows.push_back({label, sh.a, sh.k, "STATES",
                            std::to_string(chain.states.size()), "exhaustive", "",
                            "oracle"});
    }
    return out;
}

Rows cmd_simulate(const DeckSpec& deck, const ShuffleSet& shuffles,
                  std::uint64_t repetitions, std::uint64_t seed,
                  const std::string& feature, const std::string& start,
                  unsigned workers, int digits, const Budgets& budgets) {
    deck.validate();
    const std::string label = deck.label();
    Rows out;
    for (std::size_t i = 0; i < shuffles.values.size(); ++i) {
        auto sh = resolve(shuffles, i);
        mc::SamplerConfig config;
        config.deck = deck;
        config.a = sh.hands;
        config.repetitions = repetitions;
        config.seed = seed;
        config.feature = parse_feature(feature);
        config.tracked_start =
            config.feature == mc::Feature::kTracked ? resolve_start(deck.cards(), start) : 0;
        config.workers = workers;
        auto rep = mc::estimate_distances(config, budgets);
        // workers deliberately left out: the row must not depend on them.
        std::string prov = "empirical; seed=" + std::to_string(seed) +
                           "; samples=" + std::to_string(repetitions);
        out.rows.push_back({label, sh.a, sh.k, "TV", format_decimal(rep.tv, digits),
                            "gsr-sample", asym::format_real(rep.tv_std_error, digits),
                            prov});
        if (rep.sep)
            out.rows.push_back({label, sh.a, sh.k, "SEP", format_decimal(*rep.sep, digits),
                                "gsr-sample", "", prov});
        else
            out.rows.push_back({label, sh.a, sh.k, "SEP", "", "gsr-sample", "",
                                prov + "; some cells unsampled"});
        out.rows.push_back({label, sh.a, sh.k, "CELLS", std::to_string(rep.cells()),
                            "gsr-sample", "", prov});
    }
    return out;
}

std::string to_csv(const Rows& rows) {
    std::string out;
    for (int c = 0; c < kColumnCount; ++c) {
        if (c) out += ',';
        out += kColumnNames[c];
    }
    out += '\n';
    for (const Row& row : rows.rows) {
        for (int c = 0; c < kColumnCount; ++c) {
            if (c) out += ',';
            append_csv_field(out, row.col(c));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Rows& rows) {
    std::string out = "[";
    bool first_row = true;
    for (const Row& row : rows.rows) {
        out += first_row ? "\n" : ",\n";
        first_row = false;
        out += "  {\n";
        for (int c = 0; c < kColumnCount; ++c) {
            out += "    ";
            append_json_string(out, kColumnNames[c]);
            out += ": ";
            append_json_string(out, row.col(c));
            out += c + 1 < kColumnCount ? ",\n" : "\n";
        }
        out += "  }";
    }
    out += rows.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

std::string to_table(const Rows& rows) {
    std::size_t width[kColumnCount];
    for (int c = 0; c < kColumnCount; ++c) width[c] = std::string_view(kColumnNames[c]).size();
    for (const Row& row : rows.rows)
        for (int c = 0; c < kColumnCount; ++c)
            width[c] = std::max(width[c], row.col(c).size());
    auto emit = [&](std::string& out, int c, const std::string& cell, bool last) {
        out += cell;
        if (!last) out.append(width[c] - cell.size() + 2, ' ');
    };
    std::string out;
    for (int c = 0; c < kColumnCount; ++c)
        emit(out, c, kColumnNames[c], c + 1 == kColumnCount);
    out += '\n';
    for (const Row& row : rows.rows) {
        for (int c = 0; c < kColumnCount; ++c)
            emit(out, c, row.col(c), c + 1 == kColumnCount);
        out += '\n';
    }
    return out;
}

} // namespace riffle::report
