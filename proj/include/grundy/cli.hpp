#pragma once

// Command-line front door. Commands compute single values (sg, psi, hooks,
// fcount, pprime), print sg tables, and run verification suites. Output is
// line-oriented UTF-8: human-readable text by default, TSV for tables, one
// self-describing JSON object per line with --json.
//
// Exit codes: 0 success, 1 a suite expected to pass produced a
// counterexample, 2 usage error.

#include "grundy/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace grundy::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "grundy.v1";
inline constexpr Nat kDefaultBoundCap = 12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json record(const std::string& command, json inputs, json result) {
    return json{{"schema", kSchema},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)}};
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

inline Nat parse_nat(const std::string& s) {
    if (s.empty()) throw UsageError("expected a number, got an empty field");
    Nat value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw UsageError("not a number: '" + s + "'");
        value = value * 10 + static_cast<Nat>(c - '0');
    }
    return value;
}

/// Comma-separated coordinates; semicolons separate sum components.
inline std::vector<Position> parse_components(const std::string& text) {
    std::string cleaned = strip_spaces(text);
    std::vector<Position> components;
    for (const std::string& chunk : split(cleaned, ';')) {
        Position coords;
        if (!chunk.empty())
            for (const std::string& field : split(chunk, ',')) coords.push_back(parse_nat(field));
        components.push_back(std::move(coords));
    }
    return components;
}

struct ParsedGame {
    GameSpec spec;
    std::vector<std::size_t> part_arities; // one entry per sum component
    std::string echo;
};

inline GameSpec parse_explicit_file(const std::string& path, std::size_t& arity_out) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open game file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw UsageError("empty game file: " + path);
    line = strip_spaces(line);
    if (line.rfind("m=", 0) != 0) throw UsageError("game file must start with m=<arity>");
    std::size_t arity = static_cast<std::size_t>(parse_nat(line.substr(2)));
    if (arity == 0) throw UsageError("arity must be positive");
    std::vector<Position> moves;
    std::set<Position> positions;
    bool in_positions = false;
    while (std::getline(in, line)) {
        line = strip_spaces(line);
        if (line.empty()) continue;
        if (line == "positions:") {
            in_positions = true;
            continue;
        }
        Position v;
        for (const std::string& field : split(line, ',')) v.push_back(parse_nat(field));
        if (v.size() != arity) throw UsageError("vector of wrong arity in game file: " + line);
        if (in_positions)
            positions.insert(std::move(v));
        else
            moves.push_back(std::move(v));
    }
    if (moves.empty()) throw UsageError("game file lists no moves");
    if (positions.empty()) throw UsageError("game file lists no positions");
    arity_out = arity;
    return explicit_game(arity, std::move(positions), std::move(moves));
}

inline GameSpec parse_single_game(const std::string& text, std::size_t& arity_out) {
    if (text.rfind("nim:", 0) == 0) {
        std::size_t m = static_cast<std::size_t>(parse_nat(text.substr(4)));
        if (m == 0) throw UsageError("arity must be positive");
        arity_out = m;
        return nim_game(m);
    }
    if (text.rfind("welter:", 0) == 0) {
        std::size_t m = static_cast<std::size_t>(parse_nat(text.substr(7)));
        if (m == 0) throw UsageError("arity must be positive");
        arity_out = m;
        return welter_game(m);
    }
    if (text.rfind("explicit:@", 0) == 0) return parse_explicit_file(text.substr(10), arity_out);
    throw UsageError("unrecognized game: '" + text +
                     "' (expected nim:<m>, welter:<m>, explicit:@<file> or sum:...)");
}

/// Grammar: nim:<m> | welter:<m> | explicit:@<file> | sum:<part>+<part>+...
inline ParsedGame parse_game(const std::string& raw) {
    std::string text = strip_spaces(raw);
    if (text.rfind("sum:", 0) == 0) {
        std::vector<GameSpec> parts;
        std::vector<std::size_t> arities;
        for (const std::string& chunk : split(text.substr(4), '+')) {
            std::size_t arity = 0;
            parts.push_back(parse_single_game(chunk, arity));
            arities.push_back(arity);
        }
        if (parts.size() < 2) throw UsageError("a sum needs at least two components");
        return ParsedGame{disjunctive_sum(std::move(parts)), std::move(arities), text};
    }
    std::size_t arity = 0;
    GameSpec spec = parse_single_game(text, arity);
    return ParsedGame{std::move(spec), {arity}, text};
}

inline Position parse_position(const ParsedGame& game, const std::string& text) {
    std::vector<Position> components = parse_components(text);
    if (components.size() != game.part_arities.size())
        throw UsageError("position has " + std::to_string(components.size()) +
                         " components, game has " + std::to_string(game.part_arities.size()));
    Position flat;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].size() != game.part_arities[i])
            throw UsageError("component " + std::to_string(i + 1) + " has wrong arity");
        flat.insert(flat.end(), components[i].begin(), components[i].end());
    }
    return flat;
}

/// Shapes: comma lists of weakly decreasing parts, semicolon-separated for
/// tuples; the empty string is the empty diagram.
inline DiagramTuple parse_shapes(const std::string& text) {
    DiagramTuple shapes;
    for (const Position& parts : parse_components(text)) {
        try {
            shapes.emplace_back(std::vector<Nat>(parts));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("not a partition: ") + e.what());
        }
    }
    return shapes;
}

inline std::string format_shape(const YoungDiagram& y) {
    std::string out;
    for (std::size_t i = 0; i < y.parts().size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(y.parts()[i]);
    }
    return out;
}

inline std::string format_shapes(const DiagramTuple& shapes) {
    std::string out;
    for (std::size_t l = 0; l < shapes.size(); ++l) {
        if (l) out.push_back(';');
        out += format_shape(shapes[l]);
    }
    return out;
}

inline json shapes_json(const DiagramTuple& shapes) {
    json out = json::array();
    for (const YoungDiagram& y : shapes) {
        json one = json::array();
        for (Nat part : y.parts()) one.push_back(part);
        out.push_back(one);
    }
    return out;
}

inline Nat bound_cap() {
    if (const char* env = std::getenv("GRUNDY_MAX_BOUND")) return parse_nat(env);
    return kDefaultBoundCap;
}

inline void check_bound(Nat bound) {
    if (bound > bound_cap())
        throw UsageError("bound " + std::to_string(bound) + " exceeds the safety cap " +
                         std::to_string(bound_cap()) + " (set GRUNDY_MAX_BOUND to raise it)");
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct Output {
    std::ostream& out;
    bool as_json = false;

    void line(const std::string& text, const json& rec) const {
        if (as_json)
            out << rec.dump() << "\n";
        else
            out << text << "\n";
    }
};

inline int cmd_sg(const Output& io, const std::string& game_text,
                  const std::string& position_text, Nat p, bool saturated,
                  std::optional<Nat> bound_opt) {
    ParsedGame game = parse_game(game_text);
    Position a = parse_position(game, position_text);
    if (!game.spec.positions.contains(a))
        throw UsageError("position is not in the game's position set");
    Nat bound = bound_opt.value_or(a.empty() ? 0 : *std::max_element(a.begin(), a.end()));
    check_bound(bound);
    GameSpec spec = saturated ? saturate(game.spec, p) : game.spec;
    EvalTable table(std::move(spec), bound);
    Nat sg = table.sg(a);
    Nat lg = table.lg(a);
    json inputs{{"game", game.echo},
                {"position", position_text},
                {"saturate", saturated},
                {"bound", bound}};
    if (saturated) inputs["p"] = p;
    io.line("sg=" + std::to_string(sg) + " lg=" + std::to_string(lg),
            record("sg", inputs, json{{"sg", sg}, {"lg", lg}}));
    return 0;
}

inline int cmd_table(const Output& io, const std::string& game_text, Nat p, bool saturated,
                     Nat bound) {
    ParsedGame game = parse_game(game_text);
    check_bound(bound);
    GameSpec spec = saturated ? saturate(game.spec, p) : game.spec;
    std::size_t m = spec.arity;
    if (!io.as_json && m > 2)
        throw UsageError("grid rendering needs arity <= 2; use --json for records");
    EvalTable table(std::move(spec), bound);
    json inputs{{"game", game.echo}, {"saturate", saturated}, {"bound", bound}};
    if (saturated) inputs["p"] = p;
    if (io.as_json) {
        for_each_position(game.spec.positions, bound, [&](const Position& a) {
            json pos = json::array();
            for (Nat x : a) pos.push_back(x);
            io.line("", record("table", inputs,
                               json{{"position", pos}, {"sg", table.sg(a)}, {"lg", table.lg(a)}}));
        });
        return 0;
    }
    std::ostringstream grid;
    if (m == 1) {
        for (Nat a = 0; a <= bound; ++a) grid << "\t" << a;
        grid << "\n";
        for (Nat a = 0; a <= bound; ++a) grid << (a == 0 ? "sg" : "") << "\t" << table.sg({a});
        grid << "\n";
    } else {
        for (Nat col = 0; col <= bound; ++col) grid << "\t" << col;
        grid << "\n";
        for (Nat row = 0; row <= bound; ++row) {
            grid << row;
            for (Nat col = 0; col <= bound; ++col) {
                grid << "\t";
                Position a{row, col};
                if (game.spec.positions.contains(a))
                    grid << table.sg(a);
                else
                    grid << "-";
            }
            grid << "\n";
        }
    }
    io.out << grid.str();
    return 0;
}

inline int cmd_psi(const Output& io, const std::string& shape_text, Nat p) {
    DiagramTuple shapes = parse_shapes(shape_text);
    Nat value = psi_diagram(p, shapes);
    io.line("psi=" + std::to_string(value),
            record("psi", json{{"shape", shape_text}, {"p", p}},
                   json{{"psi", value}, {"cells", cells(shapes)}}));
    return 0;
}

inline int cmd_hooks(const Output& io, const std::string& shape_text) {
    DiagramTuple shapes = parse_shapes(shape_text);
    std::vector<Nat> hooks = hook_lengths(shapes);
    std::string text;
    json arr = json::array();
    for (std::size_t i = 0; i < hooks.size(); ++i) {
        if (i) text.push_back(',');
        text += std::to_string(hooks[i]);
        arr.push_back(hooks[i]);
    }
    io.line("hooks=" + text,
            record("hooks", json{{"shape", shape_text}}, json{{"hooks", arr}}));
    return 0;
}

inline int cmd_fcount(const Output& io, const std::string& shape_text) {
    DiagramTuple shapes = parse_shapes(shape_text);
    BigCount count = tableau_count(shapes);
    std::string decimal = to_decimal(count);
    io.line(decimal, record("fcount", json{{"shape", shape_text}},
                            json{{"count", decimal}, {"cells", cells(shapes)}}));
    return 0;
}

inline int cmd_pprime(const Output& io, const std::string& shape_text, Nat p) {
    if (!is_prime(p)) throw UsageError("p must be prime for pprime");
    DiagramTuple shapes = parse_shapes(shape_text);
    DiagramTuple z = find_pprime_subdiagram(p, shapes);
    std::string z_text = format_shapes(z);
    std::string f_text = to_decimal(tableau_count(z));
    io.line("Z=" + z_text + " f=" + f_text,
            record("pprime", json{{"shape", shape_text}, {"p", p}},
                   json{{"Z", shapes_json(z)}, {"cells", cells(z)}, {"f", f_text}}));
    return 0;
}

inline int cmd_padic(const Output& io, const std::string& op, Nat p,
                     const std::vector<Nat>& values) {
    json inputs{{"op", op}, {"p", p}, {"values", values}};
    auto one_arg = [&]() {
        if (values.size() != 1) throw UsageError(op + " takes exactly one value");
        return values.front();
    };
    if (op == "add") {
        Nat result = nim_sum(p, values);
        io.line(std::to_string(result), record("padic", inputs, json{{"value", result}}));
    } else if (op == "diff") {
        if (values.size() != 2) throw UsageError("diff takes exactly two values");
        Nat result = nim_diff(p, values[0], values[1]);
        io.line(std::to_string(result), record("padic", inputs, json{{"value", result}}));
    } else if (op == "ord") {
        Order result = ord(p, one_arg());
        std::string text = result.is_infinity() ? "infinity" : std::to_string(result.value());
        io.line(text, record("padic", inputs, json{{"value", text}}));
    } else if (op == "pnorm") {
        Nat result = pnorm(p, one_arg());
        io.line(std::to_string(result), record("padic", inputs, json{{"value", result}}));
    } else if (op == "repdigit") {
        Nat result = repdigit_allnines(p, one_arg());
        io.line(std::to_string(result), record("padic", inputs, json{{"value", result}}));
    } else {
        throw UsageError("unknown padic op '" + op + "' (add, diff, ord, pnorm, repdigit)");
    }
    return 0;
}

inline json verdict_json(const verify::Verdict& v) {
    json params = json::object();
    for (const auto& [key, value] : v.params) params[key] = value;
    json result{{"pass", v.pass},
                {"positions_checked", v.positions_checked},
                {"elapsed_seconds", v.elapsed_seconds}};
    if (v.witness) result["witness"] = *v.witness;
    return record("verify", json{{"suite", v.suite}, {"params", params}}, result);
}

/// Fits generic overrides to one suite: --bound fans out to suites that
/// split their bound by arity; keys a suite does not have are an error when
/// the suite was named explicitly and are skipped when sweeping 'all'.
inline verify::Params adapt_overrides(const verify::SuiteInfo& info,
                                      const verify::Params& overrides, bool strict) {
    verify::Params out;
    for (const auto& [key, value] : overrides) {
        if (info.defaults.find(key) != info.defaults.end()) {
            out[key] = value;
            continue;
        }
        if (key == "bound") {
            bool remapped = false;
            for (const char* split_key : {"bound2", "bound3"})
                if (info.defaults.find(split_key) != info.defaults.end()) {
                    out[split_key] = value;
                    remapped = true;
                }
            if (remapped) continue;
        }
        if (strict)
            throw UsageError("suite '" + info.name + "' has no parameter '" + key + "'");
    }
    return out;
}

inline int cmd_verify(const Output& io, const std::string& which, bool list_only,
                      const verify::Params& overrides) {
    if (list_only) {
        for (const verify::SuiteInfo& info : verify::list_suites()) {
            std::string defaults;
            for (const auto& [key, value] : info.defaults) {
                if (!defaults.empty()) defaults += " ";
                defaults += key + "=" + (key == "p" && value == 0 ? "2,3,5"
                                                                  : std::to_string(value));
            }
            io.line(info.name + "\t" + info.claim + "\t" + defaults,
                    record("verify-list",
                           json{{"suite", info.name}},
                           json{{"claim", info.claim}, {"defaults", defaults}}));
        }
        return 0;
    }
    std::vector<verify::SuiteInfo> picked;
    for (const verify::SuiteInfo& info : verify::list_suites())
        if (which == "all" || info.name == which) picked.push_back(info);
    if (picked.empty()) throw UsageError("unknown suite: " + which);
    bool all_pass = true;
    for (const verify::SuiteInfo& info : picked) {
        verify::Verdict v =
            verify::run_suite(info.name, adapt_overrides(info, overrides, which != "all"));
        std::ostringstream text;
        text << "suite=" << v.suite << " " << (v.pass ? "pass" : "FAIL")
             << " checked=" << v.positions_checked;
        if (v.witness) text << " witness=" << v.witness->dump();
        io.line(text.str(), verdict_json(v));
        all_pass = all_pass && v.pass;
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sprague-Grundy calculator for carry-free base-p game arithmetic"};
    app.require_subcommand(1);
    app.fallthrough(true); // lets --json appear after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object per line");

    std::string game_text, position_text, shape_text, suite = "all";
    Nat p = 2;
    bool saturated = false;
    bool list_only = false;
    std::optional<Nat> bound_opt;
    Nat table_bound = 7;
    std::vector<std::string> overrides_kv;

    CLI::App* sg = app.add_subcommand("sg", "Sprague-Grundy and longest-walk value of a position");
    sg->add_option("game", game_text)->required();
    sg->add_option("position", position_text)->required();
    sg->add_option("--p", p, "base for --saturate");
    sg->add_flag("--saturate", saturated, "evaluate the canonical p-saturation");
    sg->add_option("--bound", [&bound_opt](const std::vector<std::string>& vals) {
        bound_opt = parse_nat(vals.front());
        return true;
    }, "evaluation bound (default: the largest coordinate)");

    CLI::App* table = app.add_subcommand("table", "sg grid over the in-bound box");
    table->add_option("game", game_text)->required();
    table->add_option("--p", p);
    table->add_flag("--saturate", saturated);
    table->add_option("--bound", table_bound);

    CLI::App* psi_cmd = app.add_subcommand("psi", "closed-form value of a shape or shape tuple");
    psi_cmd->add_option("shape", shape_text);
    psi_cmd->add_option("--p", p)->required();

    CLI::App* hooks_cmd = app.add_subcommand("hooks", "sorted hook-length multiset");
    hooks_cmd->add_option("shape", shape_text);

    CLI::App* fcount_cmd = app.add_subcommand("fcount", "standard tableau count");
    fcount_cmd->add_option("shape", shape_text);

    CLI::App* pprime_cmd =
        app.add_subcommand("pprime", "subshape of psi_p cells with count prime to p");
    pprime_cmd->add_option("shape", shape_text);
    pprime_cmd->add_option("--p", p)->required();

    std::string padic_op;
    std::vector<Nat> padic_values;
    CLI::App* padic_cmd =
        app.add_subcommand("padic", "carry-free digit arithmetic: add, diff, ord, pnorm, repdigit");
    padic_cmd->add_option("op", padic_op)->required();
    padic_cmd->add_option("values", padic_values);
    padic_cmd->add_option("--p", p)->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("suite", suite, "suite name or 'all'");
    verify_cmd->add_flag("--list", list_only, "list registered suites");
    verify_cmd->add_option("--set", overrides_kv, "override a suite parameter, key=value");
    std::optional<Nat> verify_p, verify_bound;
    verify_cmd->add_option("--p", [&verify_p](const std::vector<std::string>& vals) {
        verify_p = parse_nat(vals.front());
        return true;
    });
    verify_cmd->add_option("--bound", [&verify_bound](const std::vector<std::string>& vals) {
        verify_bound = parse_nat(vals.front());
        return true;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Output io{out, as_json};
    try {
        if (sg->parsed()) return cmd_sg(io, game_text, position_text, p, saturated, bound_opt);
        if (table->parsed()) return cmd_table(io, game_text, p, saturated, table_bound);
        if (psi_cmd->parsed()) return cmd_psi(io, shape_text, p);
        if (hooks_cmd->parsed()) return cmd_hooks(io, shape_text);
        if (fcount_cmd->parsed()) return cmd_fcount(io, shape_text);
        if (pprime_cmd->parsed()) return cmd_pprime(io, shape_text, p);
        if (padic_cmd->parsed()) return cmd_padic(io, padic_op, p, padic_values);
        if (verify_cmd->parsed()) {
            verify::Params overrides;
            if (verify_p) overrides["p"] = *verify_p;
            if (verify_bound) {
                overrides["bound"] = *verify_bound;
            }
            for (const std::string& kv : overrides_kv) {
                auto pos = kv.find('=');
                if (pos == std::string::npos)
                    throw UsageError("--set expects key=value, got '" + kv + "'");
                overrides[kv.substr(0, pos)] = parse_nat(kv.substr(pos + 1));
            }
            return cmd_verify(io, suite, list_only, overrides);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace grundy::cli
