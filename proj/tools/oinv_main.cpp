#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oinv/census.hpp"
#include "oinv/delta1.hpp"
#include "oinv/errors.hpp"
#include "oinv/invariant_m.hpp"
#include "oinv/json_io.hpp"
#include "oinv/moves.hpp"

namespace {

using oinv::Json;

Json load_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(path);
        if (!file) throw oinv::ParseError("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw oinv::ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

// schema errors carry the field context; prefix the file they came from
template <class Fn>
auto load_with_context(const std::string& path, Fn&& parse) {
    const Json doc = load_json(path);
    try {
        return parse(doc);
    } catch (const oinv::ParseError& e) {
        throw oinv::ParseError("'" + path + "': " + e.what());
    }
}

oinv::Census load_census(const std::string& path) {
    return load_with_context(path, [](const Json& j) { return oinv::census_from_json(j); });
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto sep = text.find("..", 1);  // skip a leading minus sign
    if (sep == std::string::npos)
        throw oinv::ParseError("bad range '" + text + "' (expected A..B, e.g. -3..3)");
    try {
        const std::int64_t lo = std::stoll(text.substr(0, sep));
        const std::int64_t hi = std::stoll(text.substr(sep + 2));
        if (lo > hi) throw oinv::ParseError("bad range '" + text + "': lower bound above upper");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw oinv::ParseError("bad range '" + text + "'");
    } catch (const std::out_of_range&) {
        throw oinv::ParseError("bad range '" + text + "'");
    }
}

std::vector<oinv::Move> parse_move_list_text(const std::string& text) {
    std::vector<oinv::Move> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(start, end - start);
        if (!item.empty()) out.push_back(oinv::parse_move(item));
        start = end + 1;
        if (end == text.size()) break;
    }
    if (out.empty()) throw oinv::ParseError("empty move list");
    return out;
}

std::string identity_line(const oinv::IdentityCheck& check) {
    std::ostringstream out;
    if (check.value)
        out << "value=" << check.value->get_str();
    else
        out << "value=undefined";
    out << " expected=" << check.expected.get_str() << (check.ok ? " ok" : " VIOLATED");
    return out.str();
}

std::string degree_list(const std::vector<std::int64_t>& degrees) {
    if (degrees.empty()) return "none";
    std::ostringstream out;
    out << "at degrees ";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) out << ", ";
        out << degrees[i];
    }
    return out.str();
}

int cmd_validate(const std::string& census_path, bool json_out) {
    const oinv::Census census = load_census(census_path);
    const oinv::CensusReport report = oinv::validate(census);
    if (json_out) {
        emit(oinv::report_to_json(report));
    } else {
        std::cout << "parity failures: " << degree_list(report.odd_counts) << "\n"
                  << "negative counts: " << degree_list(report.negative_counts) << "\n"
                  << "even identity: " << identity_line(report.even_identity) << "\n"
                  << "odd identity: " << identity_line(report.odd_identity) << "\n"
                  << "clean: " << (report.clean() ? "yes" : "no") << "\n";
    }
    return report.clean() ? 0 : 1;
}

int cmd_eval(const std::string& census_path, const std::string& invariant, bool json_out) {
    const oinv::Census census = load_census(census_path);
    if (invariant == "fk") {
        const oinv::GUElement value = oinv::fk_of(census);
        if (json_out)
            emit(oinv::gu_to_json(value));
        else
            std::cout << "fk = " << oinv::describe(value) << "\n";
    } else if (invariant == "k") {
        const oinv::OElement value = oinv::k_of(census);
        if (json_out)
            emit(oinv::o_to_json(value));
        else
            std::cout << "k = " << oinv::describe(value) << "\n";
    } else if (invariant == "u") {
        const oinv::Int value = oinv::u_of(census);
        if (json_out)
            emit(oinv::int_to_json(value));
        else
            std::cout << "u = " << value.get_str() << "\n";
    } else {
        const oinv::Z2 value = oinv::uhat_of(census);
        if (json_out)
            emit(Json(value.value()));
        else
            std::cout << "uhat = " << oinv::describe(value) << "\n";
    }
    return 0;
}

int cmd_moves(const std::string& census_path, const std::string& apply_text,
              const std::string& moves_path, const std::string& emit_mode, bool json_out) {
    const oinv::Census census = load_census(census_path);
    std::vector<oinv::Move> moves;
    if (!apply_text.empty())
        moves = parse_move_list_text(apply_text);
    else
        moves = load_with_context(moves_path, [](const Json& j) { return oinv::moves_from_json(j); });

    if (emit_mode == "census") {
        const oinv::Census result = oinv::apply_sequence(census, moves);
        if (json_out)
            emit(oinv::census_to_json(result));
        else
            std::cout << oinv::describe(result);
        return 0;
    }

    // trace: the full trajectory, starting census included
    std::vector<oinv::Census> trail{census};
    for (const oinv::Move& move : moves)
        trail.push_back(oinv::apply_move(trail.back(), move.symbol, move.dir));
    if (json_out) {
        Json out = Json::array();
        for (const oinv::Census& c : trail) out.push_back(oinv::census_to_json(c));
        emit(out);
    } else {
        std::cout << "step 0 (initial):\n" << oinv::describe(trail.front());
        for (std::size_t i = 0; i < moves.size(); ++i)
            std::cout << "step " << i + 1 << " (" << oinv::format_move(moves[i]) << "):\n"
                      << oinv::describe(trail[i + 1]);
    }
    return 0;
}

int cmd_symbols(const std::string& range_text, const std::string& which, bool json_out) {
    const auto [lo, hi] = parse_range(range_text);
    const std::vector<oinv::CESymbol> symbols = oinv::symbols_in_window(lo, hi);

    auto value_json = [&which](const oinv::CESymbol& s) -> Json {
        if (which == "gu") return oinv::gu_to_json(oinv::g_universal(s));
        if (which == "uk") return oinv::o_to_json(oinv::u_k_closed(s));
        if (which == "um") return Json(oinv::u_M(s).value());
        if (which == "uq") return Json(oinv::u_Q(s).value());
        return oinv::int_to_json(oinv::u_U(s));
    };
    auto value_text = [&which](const oinv::CESymbol& s) -> std::string {
        if (which == "gu") return oinv::describe(oinv::g_universal(s));
        if (which == "uk") return oinv::describe(oinv::u_k_closed(s));
        if (which == "um") return oinv::describe(oinv::u_M(s));
        if (which == "uq") return oinv::describe(oinv::u_Q(s));
        return oinv::u_U(s).get_str();
    };

    if (json_out) {
        Json out = Json::array();
        for (const oinv::CESymbol& s : symbols)
            out.push_back(Json{{"symbol", oinv::format_symbol(s)}, {"value", value_json(s)}});
        emit(out);
    } else {
        for (const oinv::CESymbol& s : symbols)
            std::cout << oinv::format_symbol(s) << ": " << value_text(s) << "\n";
    }
    return 0;
}

int cmd_check_relations(const std::string& which, std::int64_t window, bool json_out) {
    const auto violations = oinv::check_relations_named(which, window);
    if (json_out) {
        emit(oinv::violations_to_json(violations));
    } else {
        std::cout << "violations: " << violations.size() << "\n";
        for (const auto& v : violations)
            std::cout << v.relation << " at m=" << v.deg << ": lhs=" << v.lhs << " rhs=" << v.rhs
                      << "\n";
    }
    return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order-one invariant evaluator for immersed-surface censuses"};
    app.require_subcommand(1);

    std::string output_mode = "text";
    app.add_option("--output", output_mode, "output mode")
        ->check(CLI::IsMember({"json", "text"}));

    std::string census_path, invariant = "fk", apply_text, moves_path, emit_mode = "census";
    std::string range_text, which, first_path, second_path, diffeo_path;
    std::int64_t genus = 0, window = 20;
    int side = -1;

    auto* validate_cmd = app.add_subcommand("validate", "check census realizability identities");
    validate_cmd->add_option("--census", census_path, "census file or -")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an invariant on a census");
    eval_cmd->add_option("--census", census_path, "census file or -")->required();
    eval_cmd->add_option("--invariant", invariant, "fk, u, uhat or k")
        ->required()
        ->check(CLI::IsMember({"fk", "u", "uhat", "k"}));

    auto* moves_cmd = app.add_subcommand("moves", "apply a sequence of CE moves to a census");
    moves_cmd->add_option("--census", census_path, "census file or -")->required();
    auto* apply_opt = moves_cmd->add_option("--apply", apply_text, "inline list, e.g. T3@0:+,T3@0:-");
    auto* moves_opt = moves_cmd->add_option("--moves", moves_path, "move list file (JSON array)");
    apply_opt->excludes(moves_opt);
    moves_cmd->add_option("--emit", emit_mode, "census or trace")
        ->check(CLI::IsMember({"census", "trace"}));

    auto* mirror_cmd = app.add_subcommand("mirror", "orientation-reversal transform of a census");
    mirror_cmd->add_option("--census", census_path, "census file or -")->required();

    auto* standard_cmd = app.add_subcommand("standard", "standard unknotted census");
    standard_cmd->add_option("--genus", genus, "surface genus")
        ->required()
        ->check(CLI::NonNegativeNumber);
    standard_cmd->add_option("--side", side, "degree label of the compact side, -1 or 1")
        ->required()
        ->check(CLI::IsMember({-1, 1}));

    auto* mdiffeo_cmd = app.add_subcommand("m-diffeo", "M difference for a diffeomorphism action");
    mdiffeo_cmd->add_option("diffeo", diffeo_path, "diffeo file or -")->required();

    auto* membed_cmd = app.add_subcommand("m-embed", "M difference of two embeddings");
    membed_cmd->add_option("first", first_path, "embedding file or -")->required();
    membed_cmd->add_option("second", second_path, "embedding file or -")->required();

    auto* qembed_cmd = app.add_subcommand("q-embed", "Q difference of two embeddings");
    qembed_cmd->add_option("first", first_path, "embedding file or -")->required();
    qembed_cmd->add_option("second", second_path, "embedding file or -")->required();

    auto* uembed_cmd = app.add_subcommand("u-embed", "U difference of two embeddings");
    uembed_cmd->add_option("first", first_path, "embedding file or -")->required();
    uembed_cmd->add_option("second", second_path, "embedding file or -")->required();

    auto* symbols_cmd = app.add_subcommand("symbols", "table of symbol values");
    symbols_cmd->add_option("--range", range_text, "degree range A..B")->required();
    symbols_cmd->add_option("--which", which, "gu, uk, um, uq or uu")
        ->required()
        ->check(CLI::IsMember({"gu", "uk", "um", "uq", "uu"}));

    auto* check_cmd = app.add_subcommand("check-relations", "relation check for a symbol table");
    check_cmd->add_option("--which", which, "gu, uk, um, uq or uu")
        ->required()
        ->check(CLI::IsMember({"gu", "uk", "um", "uq", "uu"}));
    check_cmd->add_option("--window", window, "check degrees |m| <= window")
        ->check(CLI::NonNegativeNumber);

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool json_out = output_mode == "json";
    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(census_path, json_out);
        if (app.got_subcommand(eval_cmd)) return cmd_eval(census_path, invariant, json_out);
        if (app.got_subcommand(moves_cmd)) {
            if (apply_text.empty() && moves_path.empty())
                throw oinv::ParseError("moves: give --apply or --moves");
            return cmd_moves(census_path, apply_text, moves_path, emit_mode, json_out);
        }
        if (app.got_subcommand(mirror_cmd)) {
            const oinv::Census result = oinv::mirror(load_census(census_path));
            if (json_out)
                emit(oinv::census_to_json(result));
            else
                std::cout << oinv::describe(result);
            return 0;
        }
        if (app.got_subcommand(standard_cmd)) {
            const oinv::Census result = oinv::standard_census(genus, side);
            if (json_out)
                emit(oinv::census_to_json(result));
            else
                std::cout << oinv::describe(result);
            return 0;
        }
        if (app.got_subcommand(mdiffeo_cmd)) {
            const oinv::DiffeoAction action =
                load_with_context(diffeo_path, [](const Json& j) { return oinv::diffeo_from_json(j); });
            const oinv::Z2 m = oinv::m_diffeo(action);
            const oinv::Z2 q = oinv::q_diff_diffeo(action);
            if (json_out)
                emit(Json{{"m", m.value()}, {"q", q.value()}});
            else
                std::cout << "M = " << oinv::describe(m) << "\nQ = " << oinv::describe(q) << "\n";
            return 0;
        }
        if (app.got_subcommand(membed_cmd) || app.got_subcommand(qembed_cmd) ||
            app.got_subcommand(uembed_cmd)) {
            const oinv::EmbeddingSides first = load_with_context(
                first_path, [](const Json& j) { return oinv::embedding_from_json(j); });
            const oinv::EmbeddingSides second = load_with_context(
                second_path, [](const Json& j) { return oinv::embedding_from_json(j); });
            if (app.got_subcommand(membed_cmd)) {
                const oinv::Z2 m = oinv::m_embeddings(first, second);
                if (json_out)
                    emit(Json{{"m", m.value()}});
                else
                    std::cout << "M = " << oinv::describe(m) << "\n";
            } else if (app.got_subcommand(qembed_cmd)) {
                const oinv::Z2 m = oinv::m_embeddings(first, second);
                const oinv::Z2 eps_hat(first.c_side == second.c_side ? 0 : 1);
                const oinv::Z2 q = oinv::q_diff_embeddings(first, second);
                if (json_out)
                    emit(Json{{"m", m.value()}, {"epsilon_hat", eps_hat.value()}, {"q", q.value()}});
                else
                    std::cout << "M = " << oinv::describe(m) << "\nepsilon_hat = "
                              << oinv::describe(eps_hat) << "\nQ = " << oinv::describe(q) << "\n";
            } else {
                const int eps = oinv::epsilon_pair(first, second);
                const oinv::Int u = oinv::u_diff_embeddings(first, second);
                if (json_out)
                    emit(Json{{"epsilon", eps}, {"u", oinv::int_to_json(u)}});
                else
                    std::cout << "epsilon = " << eps << "\nU = " << u.get_str() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(symbols_cmd)) return cmd_symbols(range_text, which, json_out);
        if (app.got_subcommand(check_cmd)) return cmd_check_relations(which, window, json_out);
    } catch (const oinv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
