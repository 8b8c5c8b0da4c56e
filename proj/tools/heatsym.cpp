// heatsym: exact symmetry hierarchy and conservation-law toolkit for the
// (3+1)-dimensional diffusion equation U_t = Uxx + Uyy + Uzz.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage or parse
// error, 3 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "heatsym/counting.hpp"
#include "heatsym/expr.hpp"
#include "heatsym/json_io.hpp"
#include "heatsym/rank.hpp"

namespace {

using namespace heatsym;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    std::string format = "text";
    int jobs = 1;
    bool slow = false;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int gate_slow(const Options& opt, int n) {
    if (n >= 5 && !opt.slow) {
        std::cerr << "order " << n << " rank computations are gated behind --slow\n";
        return kExitUsage;
    }
    return kExitOk;
}

std::string rational_map_text(const std::map<int, Rational>& m) {
    if (m.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [gen, c] : m) {
        Rational mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) s += "-";
        } else {
            s += c.is_negative() ? " - " : " + ";
        }
        if (!mag.is_one()) s += mag.str() + " ";
        s += "X" + std::to_string(gen);
        first = false;
    }
    return s;
}

Json rational_map_json(const std::map<int, Rational>& m) {
    Json j = Json::object();
    for (const auto& [gen, c] : m) j["X" + std::to_string(gen)] = c.str();
    return j;
}

// ---------------------------------------------------------------- count

int cmd_count(const Options& opt, int n, const std::string& mode) {
    if (int rc = gate_slow(opt, n)) return rc;

    long long rank = 0;
    if (mode == "all") {
        RankAccumulator acc;
        for (const auto& [w, q] : word_characteristics(n, WordMode::all, opt.jobs))
            acc.insert(q);
        rank = acc.rank();
    } else {
        rank = independent_count(n, opt.jobs).enumerated_rank;
    }
    long long formula = formula_N(n);
    bool agree = rank == formula;

    Json deps_same = Json::array(), deps_cross = Json::array(), totals = Json::array();
    for (int k = 0; k <= n; ++k) {
        deps_same.push_back(deps_same_order(k));
        deps_cross.push_back(deps_cross_order(k));
        totals.push_back(dependency_total(k));
    }

    if (json_mode(opt)) {
        Json j;
        j["order"] = n;
        j["mode"] = mode;
        j["word_count"] =
            enumerate_words(n, mode == "all" ? WordMode::all : WordMode::nondecreasing).size();
        j["enumerated_rank"] = rank;
        j["formula_N"] = formula;
        j["deps_same"] = deps_same;
        j["deps_cross"] = deps_cross;
        j["dependency_totals"] = totals;
        j["agree"] = agree;
        emit(j);
    } else {
        std::cout << "order " << n << " (" << mode << " words)\n";
        std::cout << "  enumerated rank : " << rank << "\n";
        std::cout << "  closed form N   : " << formula << "\n";
        for (int k = 0; k <= n; ++k)
            std::cout << "  order " << k << ": same-order deps " << deps_same_order(k)
                      << ", cross-order deps " << deps_cross_order(k) << ", new total "
                      << dependency_total(k) << "\n";
        std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------- basis

int cmd_basis(const Options& opt, int n, const std::string& out_path) {
    if (int rc = gate_slow(opt, n)) return rc;
    auto entries = basis(n, opt.jobs);

    Json arr = Json::array();
    for (const auto& [w, q] : entries) {
        Json item;
        item["word"] = word_to_json(w);
        item["characteristic"] = diff_to_json(q);
        arr.push_back(std::move(item));
    }
    std::ofstream out(out_path);
    if (!out.good()) {
        std::cerr << "cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    out << arr.dump(2) << "\n";
    if (!out.good()) {
        std::cerr << "write to '" << out_path << "' failed\n";
        return kExitIo;
    }

    if (json_mode(opt)) {
        Json j;
        j["order"] = n;
        j["size"] = entries.size();
        j["formula_N"] = formula_N(n);
        j["out"] = out_path;
        emit(j);
    } else {
        std::cout << "wrote " << entries.size() << " basis characteristics (order <= " << n
                  << ", N = " << formula_N(n) << ") to " << out_path << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- apply

int cmd_apply(const Options& opt, const std::string& words) {
    WordCombo combo = parse_word_combo(words);
    DiffFunction q = evaluate_combo(combo);
    bool symm = residual(q).is_zero();

    if (json_mode(opt)) {
        Json j;
        j["input"] = words;
        j["characteristic"] = diff_to_json(q);
        j["text"] = render(q);
        j["residual_zero"] = symm;
        emit(j);
    } else {
        std::cout << render(q) << "\n";
        if (!symm) std::cout << "warning: residual is nonzero\n";
    }
    return kExitOk;
}

// ------------------------------------------------------- verify-symmetry

int cmd_verify_symmetry(const Options& opt, const std::string& expr) {
    DiffFunction q = parse_characteristic(expr);
    DiffFunction res = residual(q);
    bool ok = res.is_zero();

    if (json_mode(opt)) {
        Json j;
        j["expr"] = expr;
        j["characteristic"] = diff_to_json(q);
        j["residual"] = diff_to_json(res);
        j["is_symmetry"] = ok;
        emit(j);
    } else {
        std::cout << (ok ? "symmetry verified: " : "NOT a symmetry: ") << render(q) << "\n";
        if (!ok) std::cout << "residual: " << render(res) << "\n";
    }
    return ok ? kExitOk : kExitVerifyFail;
}

// ------------------------------------------------------ verify-relations

int cmd_verify_relations(const Options& opt, const std::string& path, bool printed_only) {
    std::ifstream in(path);
    if (!in.good()) {
        std::cerr << "cannot read fixture '" << path << "'\n";
        return kExitIo;
    }
    Json parsed;
    try {
        parsed = Json::parse(in);
    } catch (const Json::parse_error& e) {
        std::cerr << "malformed fixture: " << e.what() << "\n";
        return kExitUsage;
    }
    std::vector<WordRelation> relations = relations_from_json(parsed);

    Json results = Json::array();
    int total = 0, passed = 0, failed_expected = 0, failed_unexpected = 0;
    for (const auto& rel : relations) {
        if (printed_only && !rel.as_printed) continue;
        ++total;
        RelationVerdict v = verify_relation(rel);
        if (v.holds)
            ++passed;
        else if (rel.typo)
            ++failed_expected;
        else
            ++failed_unexpected;

        if (json_mode(opt)) {
            Json item;
            item["name"] = rel.name;
            item["source"] = rel.source;
            item["as_printed"] = rel.as_printed;
            item["typo"] = rel.typo;
            if (!rel.corrects.empty()) item["corrects"] = rel.corrects;
            item["lhs"] = rel.lhs.src;
            item["rhs"] = rel.rhs.src;
            item["holds"] = v.holds;
            if (!v.holds) item["residual"] = render(v.residual);
            results.push_back(std::move(item));
        } else {
            std::cout << (v.holds ? "PASS " : "FAIL ") << rel.name << " [" << rel.source << "]"
                      << (rel.typo ? " (flagged typo)" : "");
            if (!v.holds) std::cout << "  residual: " << render(v.residual);
            std::cout << "\n";
        }
    }

    bool ok = failed_unexpected == 0;
    if (json_mode(opt)) {
        Json j;
        j["fixture"] = path;
        j["results"] = results;
        j["summary"]["total"] = total;
        j["summary"]["passed"] = passed;
        j["summary"]["failed_flagged_typos"] = failed_expected;
        j["summary"]["failed_unexpected"] = failed_unexpected;
        j["ok"] = ok;
        emit(j);
    } else {
        std::cout << passed << "/" << total << " hold";
        if (failed_expected) std::cout << ", " << failed_expected << " flagged typos fail";
        if (failed_unexpected) std::cout << ", " << failed_unexpected << " UNEXPECTED failures";
        std::cout << "\n";
    }
    return ok ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------- commutators

int cmd_commutators(const Options& opt) {
    TableReport rep = verify_table();
    bool ok = rep.all_expanded && rep.antisymmetry_ok && rep.jacobi_ok &&
              rep.subalgebra_first_ten_closed && rep.disagreements == 0;

    if (json_mode(opt)) {
        Json entries = Json::array();
        for (const auto& e : rep.entries) {
            Json item;
            item["left"] = "X" + std::to_string(e.left);
            item["right"] = "X" + std::to_string(e.right);
            item["computed"] = rational_map_json(e.computed);
            item["recorded"] = rational_map_json(e.recorded);
            item["expansion_ok"] = e.expansion_ok;
            item["agree"] = e.agree;
            entries.push_back(std::move(item));
        }
        Json j;
        j["x5_convention"] = "X5 = -x d/dz + z d/dx (mirrors the fifth recursion operator)";
        j["entries"] = entries;
        j["all_expanded"] = rep.all_expanded;
        j["antisymmetry_ok"] = rep.antisymmetry_ok;
        j["jacobi_ok"] = rep.jacobi_ok;
        j["subalgebra_first_ten_closed"] = rep.subalgebra_first_ten_closed;
        j["disagreements"] = rep.disagreements;
        j["ok"] = ok;
        emit(j);
    } else {
        std::cout << "convention: X5 = -x d/dz + z d/dx (mirrors the fifth recursion "
                     "operator)\n";
        for (const auto& e : rep.entries) {
            if (e.computed.empty() && e.recorded.empty()) continue;
            std::cout << "[X" << e.left << ", X" << e.right
                      << "] = " << rational_map_text(e.computed)
                      << (e.agree ? "" : "   (table lists " + rational_map_text(e.recorded) + ")")
                      << "\n";
        }
        std::cout << "all remaining brackets are zero\n";
        std::cout << "expansion in span{X1..X13}: " << (rep.all_expanded ? "ok" : "FAILED")
                  << "\n";
        std::cout << "antisymmetry: " << (rep.antisymmetry_ok ? "ok" : "FAILED") << "\n";
        std::cout << "jacobi identity: " << (rep.jacobi_ok ? "ok" : "FAILED") << "\n";
        std::cout << "span{X1..X10} closed under bracket: "
                  << (rep.subalgebra_first_ten_closed ? "ok" : "FAILED") << "\n";
        std::cout << "disagreements with the recorded table: " << rep.disagreements << "\n";
    }
    return ok ? kExitOk : kExitVerifyFail;
}

// ------------------------------------------------------------- conserve

Json law_report(const ConservedVector& T) {
    Json j;
    j["vector"] = conserved_to_json(T);
    j["vector_text"]["Tt"] = render(T.Tt);
    j["vector_text"]["Tx"] = render(T.Tx);
    j["vector_text"]["Ty"] = render(T.Ty);
    j["vector_text"]["Tz"] = render(T.Tz);
    DivergenceReport div = divergence(T);
    j["divergence_on_shell"] = diff_to_json(div.on_shell);
    j["conserved"] = div.conserved;
    if (div.conserved) {
        Multiplier m = multiplier(T);
        j["multiplier"] = poly_to_json(m.value);
        j["multiplier_text"] = m.value.str();
        j["adjoint_ok"] = m.adjoint_ok;
        j["multiplier_trivial"] = m.value.is_zero();
        j["trivial_first_kind"] = is_trivial_first_kind(T);
        j["equivalent_to_base"] = equivalent(T, base_conserved_vector());
    }
    return j;
}

void law_report_text(const ConservedVector& T) {
    std::cout << "T^t = " << render(T.Tt) << "\n";
    std::cout << "T^x = " << render(T.Tx) << "\n";
    std::cout << "T^y = " << render(T.Ty) << "\n";
    std::cout << "T^z = " << render(T.Tz) << "\n";
    DivergenceReport div = divergence(T);
    std::cout << "on-shell divergence: " << render(div.on_shell) << "\n";
    if (!div.conserved) {
        std::cout << "NOT conserved\n";
        return;
    }
    Multiplier m = multiplier(T);
    std::cout << "multiplier: " << m.value.str()
              << (m.adjoint_ok ? "  (solves adjoint equation)" : "  (ADJOINT CHECK FAILED)")
              << "\n";
    std::cout << "trivial (first kind): " << (is_trivial_first_kind(T) ? "yes" : "no") << "\n";
    std::cout << "multiplier-trivial: " << (m.value.is_zero() ? "yes" : "no") << "\n";
    std::cout << "equivalent to the base law: "
              << (equivalent(T, base_conserved_vector()) ? "yes" : "no") << "\n";
}

int cmd_conserve(const Options& opt, const std::string& expr) {
    DiffFunction q = parse_characteristic(expr);
    DiffFunction res = residual(q);
    if (!res.is_zero()) {
        std::cerr << "'" << expr
                  << "' is not a symmetry characteristic; residual: " << render(res) << "\n";
        return kExitVerifyFail;
    }
    ConservedVector gen = generate_evolutionary(q, base_conserved_vector());
    if (json_mode(opt)) {
        Json j;
        j["characteristic"] = diff_to_json(q);
        j["characteristic_text"] = render(q);
        Json law = law_report(gen);
        for (auto& [key, val] : law.items()) j[key] = val;
        emit(j);
    } else {
        std::cout << "characteristic: " << render(q) << "\n";
        law_report_text(gen);
    }
    return kExitOk;
}

// ------------------------------------------------------------- classify

int cmd_classify(const Options& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        std::cerr << "cannot read vector file '" << path << "'\n";
        return kExitIo;
    }
    Json parsed;
    try {
        parsed = Json::parse(in);
    } catch (const Json::parse_error& e) {
        std::cerr << "malformed vector file: " << e.what() << "\n";
        return kExitUsage;
    }
    ConservedVector T = conserved_from_json(parsed);
    DivergenceReport div = divergence(T);

    // association of each point generator, and the bracket prediction
    // beside the multiplier verdict of the vector that generator produces
    Json analysis = Json::array();
    std::vector<int> associated;
    if (div.conserved) {
        const auto& gens = point_generators();
        for (int n = 1; n <= 13; ++n)
            if (invariance_check(gens[static_cast<size_t>(n - 1)], T)) associated.push_back(n);
        for (int n = 1; n <= 13; ++n) {
            const PointVectorField& x = gens[static_cast<size_t>(n - 1)];
            Json item;
            item["generator"] = "X" + std::to_string(n);
            item["associated"] =
                std::find(associated.begin(), associated.end(), n) != associated.end();
            bool predicts = false;
            Json witnesses = Json::array();
            for (int yn : associated) {
                BracketTrivialityCheck chk =
                    theorem_1_1_check(x, gens[static_cast<size_t>(yn - 1)], T);
                if (chk.predicts_trivial) {
                    predicts = true;
                    Json w;
                    w["y"] = "X" + std::to_string(yn);
                    w["b"] = chk.proportional_to_y->str();
                    witnesses.push_back(std::move(w));
                }
            }
            item["bracket_predicts_trivial"] = predicts;
            item["bracket_witnesses"] = witnesses;
            ConservedVector gen_vec = generate_point(x, T);
            DivergenceReport gen_div = divergence(gen_vec);
            item["generated_conserved"] = gen_div.conserved;
            if (gen_div.conserved) {
                Multiplier m = multiplier(gen_vec);
                item["generated_multiplier"] = m.value.str();
                item["generated_multiplier_trivial"] = m.value.is_zero();
            }
            analysis.push_back(std::move(item));
        }
    }

    if (json_mode(opt)) {
        Json j = law_report(T);
        Json assoc = Json::array();
        for (int n : associated) assoc.push_back("X" + std::to_string(n));
        j["associated_generators"] = assoc;
        j["generator_analysis"] = analysis;
        emit(j);
    } else {
        law_report_text(T);
        if (div.conserved) {
            std::cout << "associated point symmetries:";
            for (int n : associated) std::cout << " X" << n;
            std::cout << "\n";
            std::cout << "generator analysis (bracket prediction vs multiplier):\n";
            for (const auto& item : analysis) {
                std::cout << "  " << item["generator"].get<std::string>()
                          << ": predicts trivial "
                          << (item["bracket_predicts_trivial"].get<bool>() ? "yes" : "no");
                if (item["generated_conserved"].get<bool>())
                    std::cout << ", generated multiplier "
                              << item["generated_multiplier"].get<std::string>();
                std::cout << "\n";
            }
        }
    }
    return div.conserved ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact symmetry hierarchy and conservation laws of the (3+1)-dimensional "
        "diffusion equation"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for characteristic generation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--slow", opt.slow, "allow order >= 5 rank computations");

    int order = 0;
    std::string mode = "nondecreasing";
    auto* count = app.add_subcommand("count", "enumerated rank vs the closed form");
    count->add_option("n", order, "maximum word length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--mode", mode, "word set to rank")
        ->check(CLI::IsMember({"nondecreasing", "all"}))
        ->capture_default_str();

    std::string out_path;
    auto* basis_cmd = app.add_subcommand("basis", "write the greedy word basis to a file");
    basis_cmd->add_option("n", order, "maximum word length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    basis_cmd->add_option("--out", out_path, "output file")->required();

    std::string words;
    auto* apply_cmd = app.add_subcommand("apply", "apply an operator word to the seed U");
    apply_cmd->add_option("words", words, "e.g. \"R1 R8\"")->required();

    std::string expr;
    auto* verify_cmd = app.add_subcommand("verify-symmetry", "residual check of an expression");
    verify_cmd->add_option("expr", expr, "e.g. \"2t*Ux + x*U\"")->required();

    std::string fixture;
    bool printed_only = false;
    auto* relations_cmd = app.add_subcommand("verify-relations", "verify a relation fixture file");
    relations_cmd->add_option("fixture", fixture, "fixture JSON path")->required();
    relations_cmd->add_flag("--printed-only", printed_only, "skip corrected forms");

    auto* commutators_cmd =
        app.add_subcommand("commutators", "verify the point-symmetry bracket table");

    std::string conserve_expr;
    auto* conserve_cmd =
        app.add_subcommand("conserve", "generate a conservation law from a characteristic");
    conserve_cmd->add_option("expr", conserve_expr, "symmetry characteristic")->required();

    std::string vector_path;
    auto* classify_cmd = app.add_subcommand("classify", "classify a conserved vector file");
    classify_cmd->add_option("vector", vector_path, "ConservedVector JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(opt, order, mode);
        if (basis_cmd->parsed()) return cmd_basis(opt, order, out_path);
        if (apply_cmd->parsed()) return cmd_apply(opt, words);
        if (verify_cmd->parsed()) return cmd_verify_symmetry(opt, expr);
        if (relations_cmd->parsed()) return cmd_verify_relations(opt, fixture, printed_only);
        if (commutators_cmd->parsed()) return cmd_commutators(opt);
        if (conserve_cmd->parsed()) return cmd_conserve(opt, conserve_expr);
        if (classify_cmd->parsed()) return cmd_classify(opt, vector_path);
    } catch (const ExprError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
