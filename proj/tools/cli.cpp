#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyck/catalan.hpp"
#include "dyck/codec.hpp"
#include "dyck/error.hpp"
#include "dyck/generate.hpp"
#include "dyck/navigate.hpp"
#include "dyck/polynomials.hpp"
#include "dyck/triangle.hpp"

namespace dyck::cli {

namespace {

using Json = nlohmann::ordered_json;

// Coordinates and semilengths past this are refused instead of attempting
// a triangle fill that cannot fit in memory.
constexpr std::size_t kMaxCoordinate = std::size_t{1} << 32;

struct Options {
    bool json = false;
    bool quiet = false;
};

/// One result: an ordered payload plus how it reads in text mode.
struct Record {
    Json payload = Json::object();
    /// Key printed alone under --quiet (and always, when `bare`).
    std::string primary;
    bool bare = false;
};

std::string text_of(const Json& value, char separator = ' ') {
    if (value.is_null())
        return "";
    if (value.is_string())
        return value.get<std::string>();
    if (value.is_array()) {
        std::string joined;
        for (const auto& item : value) {
            if (!joined.empty())
                joined += separator;
            joined += text_of(item, separator);
        }
        return joined;
    }
    return value.dump();
}

class Emitter {
public:
    Emitter(const Options& opts, std::ostream& out, std::ostream& err)
        : opts_(opts), out_(out), err_(err) {}

    void result(Record rec) {
        if (opts_.json) {
            Json line = Json::object();
            line["ok"] = true;
            for (auto& [key, value] : rec.payload.items())
                line[key] = value;
            out_ << line.dump() << '\n';
            return;
        }
        if (opts_.quiet || rec.bare) {
            const Json& value = rec.payload.at(rec.primary);
            if (!value.is_null())
                out_ << text_of(value) << '\n';
            return;
        }
        std::string line;
        for (const auto& [key, value] : rec.payload.items()) {
            if (!line.empty())
                line += ' ';
            line += key + '=' + (value.is_null() ? std::string("none") : text_of(value, ','));
        }
        out_ << line << '\n';
    }

    void failure(const std::string& message, std::optional<std::size_t> position) {
        failed_ = true;
        if (opts_.json) {
            Json line = Json::object();
            line["ok"] = false;
            line["error"] = message;
            if (position)
                line["position"] = *position;
            out_ << line.dump() << '\n';
            return;
        }
        err_ << "error: " << message << '\n';
    }

    bool failed() const noexcept { return failed_; }

private:
    const Options& opts_;
    std::ostream& out_;
    std::ostream& err_;
    bool failed_ = false;
};

std::size_t parse_small(const std::string& text, const char* what) {
    const BigInt value = parse_natural(text);
    if (value > kMaxCoordinate)
        throw DomainError(std::string(what) + " " + text + " is too large");
    return static_cast<std::size_t>(value);
}

/// Runs `body` and turns library exceptions into error records.
void guarded(Emitter& emit, const std::function<void()>& body) {
    try {
        body();
    } catch (const ParseError& e) {
        emit.failure(e.what(), e.position());
    } catch (const Error& e) {
        emit.failure(e.what(), std::nullopt);
    }
}

/// Applies `handle` to the single argument, or to every line of `in` when
/// the argument is "-".
void each_input(const std::string& arg, std::istream& in, Emitter& emit,
                const std::function<void(const std::string&)>& handle) {
    if (arg != "-") {
        guarded(emit, [&] { handle(arg); });
        return;
    }
    std::string line;
    while (std::getline(in, line))
        guarded(emit, [&] { handle(line); });
}

Json rank_payload(const DyckWord& word, const RankResult& r) {
    Json p = Json::object();
    p["word"] = word.str();
    p["n"] = r.n;
    p["relative"] = to_decimal(r.relative);
    p["absolute"] = to_decimal(r.absolute);
    return p;
}

Json node_json(Node node) {
    return Json::array({node.i, node.j});
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Identify elements of the lexicographic series of Dyck words", "dyck"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_flag("--json", opts.json, "Emit one JSON object per result");
    app.add_flag("--quiet", opts.quiet, "Print only the primary value of each result");

    Emitter emit(opts, out, err);
    const Codec& codec = Codec::standard();
    std::function<void()> action;

    std::string word_arg;
    auto* validate = app.add_subcommand("validate", "Check that a word is a Dyck word");
    validate->add_option("word", word_arg, "Word, or - to read words from stdin")->required();
    validate->callback([&] {
        action = [&] {
            each_input(word_arg, in, emit, [&](const std::string& text) {
                const DyckWord w = DyckWord::parse(text);
                Record rec;
                rec.payload["word"] = w.str();
                rec.payload["n"] = w.semilength();
                rec.primary = "word";
                emit.result(std::move(rec));
            });
        };
    });

    auto* rank_cmd = app.add_subcommand("rank", "Index of a word in the series");
    rank_cmd->add_option("word", word_arg, "Word, or - to read words from stdin")->required();
    rank_cmd->callback([&] {
        action = [&] {
            each_input(word_arg, in, emit, [&](const std::string& text) {
                const DyckWord w = DyckWord::parse(text);
                emit.result({rank_payload(w, codec.rank(w)), "absolute", false});
            });
        };
    });

    std::vector<std::string> unrank_args;
    bool relative = false;
    auto* unrank_cmd = app.add_subcommand("unrank", "Word at an absolute (or relative) index");
    unrank_cmd->add_flag("--relative", relative, "Take <n> <relative-index> instead");
    unrank_cmd->add_option("index", unrank_args, "Absolute index, - for stdin, or <n> <rel>")
        ->required()
        ->expected(1, 2);
    unrank_cmd->callback([&] {
        if (unrank_args.size() != (relative ? 2u : 1u))
            throw CLI::ValidationError("unrank", relative ? "expected <n> <relative-index>"
                                                          : "expected <absolute-index>");
        action = [&] {
            if (relative) {
                guarded(emit, [&] {
                    const std::size_t n = parse_small(unrank_args[0], "semilength");
                    const BigInt rel = parse_natural(unrank_args[1]);
                    const DyckWord w = codec.unrank_relative(n, rel);
                    emit.result({rank_payload(w, codec.rank(w)), "word", false});
                });
                return;
            }
            each_input(unrank_args[0], in, emit, [&](const std::string& text) {
                auto [w, r] = codec.unrank(parse_natural(text));
                emit.result({rank_payload(w, r), "word", false});
            });
        };
    });

    auto* next_cmd = app.add_subcommand("next", "Following element of the series");
    next_cmd->add_option("word", word_arg, "Word, or - to read words from stdin")->required();
    next_cmd->callback([&] {
        action = [&] {
            each_input(word_arg, in, emit, [&](const std::string& text) {
                const DyckWord w = DyckWord::parse(text);
                Record rec;
                rec.payload["word"] = w.str();
                rec.payload["result"] = successor(w, codec).str();
                rec.primary = "result";
                rec.bare = true;
                emit.result(std::move(rec));
            });
        };
    });

    auto* prev_cmd = app.add_subcommand("prev", "Preceding element of the series");
    prev_cmd->add_option("word", word_arg, "Word, or - to read words from stdin")->required();
    prev_cmd->callback([&] {
        action = [&] {
            each_input(word_arg, in, emit, [&](const std::string& text) {
                const DyckWord w = DyckWord::parse(text);
                Record rec;
                rec.payload["word"] = w.str();
                const auto before = predecessor(w, codec);
                rec.payload["result"] = before ? Json(before->str()) : Json(nullptr);
                rec.primary = "result";
                rec.bare = true;
                emit.result(std::move(rec));
            });
        };
    });

    std::string n_arg;
    std::string limit_arg;
    auto* gen = app.add_subcommand("gen", "List the 2n-range in series order");
    gen->add_option("n", n_arg, "Semilength")->required();
    gen->add_option("--limit", limit_arg, "Stop after K words");
    gen->callback([&] {
        action = [&] {
            guarded(emit, [&] {
                const std::size_t n = parse_small(n_arg, "semilength");
                std::optional<BigInt> limit;
                if (!limit_arg.empty())
                    limit = parse_natural(limit_arg);
                BigInt emitted = 0;
                for (const DyckWord& w : generate(n)) {
                    if (limit && emitted >= *limit)
                        break;
                    ++emitted;
                    Record rec;
                    rec.payload["word"] = w.str();
                    rec.payload["relative"] = to_decimal(emitted);
                    rec.primary = "word";
                    rec.bare = true;
                    emit.result(std::move(rec));
                }
            });
        };
    });

    auto* cat = app.add_subcommand("catalan", "The n-th Catalan number");
    cat->add_option("n", n_arg, "Index")->required();
    cat->callback([&] {
        action = [&] {
            guarded(emit, [&] {
                const std::size_t n = parse_small(n_arg, "index");
                Record rec;
                rec.payload["n"] = n;
                rec.payload["value"] = to_decimal(catalan(n));
                rec.primary = "value";
                rec.bare = true;
                emit.result(std::move(rec));
            });
        };
    });

    std::string i_arg;
    std::string j_arg;
    bool use_poly = false;
    auto* dyn = app.add_subcommand("dyn", "Dyck-triangle label d(i, j)");
    dyn->add_option("i", i_arg, "Position")->required();
    dyn->add_option("j", j_arg, "Unbalance")->required();
    dyn->add_flag("--poly", use_poly, "Evaluate through the Dyck polynomial p_j");
    dyn->callback([&] {
        action = [&] {
            guarded(emit, [&] {
                const std::size_t i = parse_small(i_arg, "position");
                const std::size_t j = parse_small(j_arg, "unbalance");
                Record rec;
                rec.payload["i"] = i;
                rec.payload["j"] = j;
                rec.payload["route"] = use_poly ? "poly" : "dp";
                rec.payload["value"] = to_decimal(use_poly ? dynamics_poly(i, j) : dynamics(i, j));
                rec.primary = "value";
                rec.bare = true;
                emit.result(std::move(rec));
            });
        };
    });

    auto* paths = app.add_subcommand("paths", "Number of 2n-paths through (i, j)");
    paths->add_option("n", n_arg, "Semilength")->required();
    paths->add_option("i", i_arg, "Position")->required();
    paths->add_option("j", j_arg, "Unbalance")->required();
    paths->callback([&] {
        action = [&] {
            guarded(emit, [&] {
                const std::size_t n = parse_small(n_arg, "semilength");
                const std::size_t i = parse_small(i_arg, "position");
                const std::size_t j = parse_small(j_arg, "unbalance");
                Record rec;
                rec.payload["n"] = n;
                rec.payload["i"] = i;
                rec.payload["j"] = j;
                rec.payload["forward"] = to_decimal(dynamics(i, j));
                rec.payload["inverse"] = to_decimal(inverse_dynamics(i, j, n));
                rec.payload["paths"] = to_decimal(paths_through(n, i, j));
                rec.primary = "paths";
                emit.result(std::move(rec));
            });
        };
    });

    auto* poly = app.add_subcommand("poly", "Coefficients of the Dyck polynomial p_j");
    poly->add_option("j", j_arg, "Unbalance")->required();
    poly->callback([&] {
        action = [&] {
            guarded(emit, [&] {
                const std::size_t j = parse_small(j_arg, "unbalance");
                Json coeffs = Json::array();
                for (const BigInt& a : poly_coefficients(j))
                    coeffs.push_back(to_decimal(a));
                Record rec;
                rec.payload["j"] = j;
                rec.payload["coefficients"] = std::move(coeffs);
                rec.primary = "coefficients";
                rec.bare = true;
                emit.result(std::move(rec));
            });
        };
    });

    auto* seg = app.add_subcommand("segments", "Main/difference/dead segment sizes for x");
    seg->add_option("i_x", i_arg, "Position of x")->required();
    seg->add_option("j_x", j_arg, "Unbalance of x")->required();
    seg->callback([&] {
        action = [&] {
            guarded(emit, [&] {
                const Node x{parse_small(i_arg, "position"), parse_small(j_arg, "unbalance")};
                const SegmentSummary s = summarize_segments(x);
                Record rec;
                rec.payload["x"] = node_json(x);
                rec.payload["height"] = s.height;
                rec.payload["main"] = s.main;
                rec.payload["difference"] = s.difference;
                rec.payload["dead"] = s.dead;
                rec.payload["wedge_top"] = s.wedge_top ? node_json(*s.wedge_top) : Json(nullptr);
                rec.primary = "dead";
                emit.result(std::move(rec));
            });
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    if (!action) {
        err << app.help();
        return kUsage;
    }
    action();
    return emit.failed() ? kDomain : kOk;
}

} // namespace dyck::cli
