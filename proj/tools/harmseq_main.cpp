#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmseq/construct.hpp"
#include "harmseq/errors.hpp"
#include "harmseq/group.hpp"
#include "harmseq/groupspec.hpp"
#include "harmseq/intseq.hpp"
#include "harmseq/search.hpp"
#include "harmseq/table_io.hpp"
#include "harmseq/verify.hpp"

using nlohmann::json;
using namespace harmseq;

namespace {

// Exit codes: 0 success/true, 1 predicate false, 2 impossible/unsupported,
// 3 not constructed (budget), 4 input error.
enum ExitCode { kOk = 0, kFalse = 1, kImpossible = 2, kNotConstructed = 3, kInputError = 4 };

struct Options {
    std::string format = "text";
    unsigned long long budget = kDefaultBudget;
    std::string seed_order = "canonical";  // reserved
};

std::vector<std::string> names_of(const FiniteGroup& g, const std::vector<int>& seq) {
    std::vector<std::string> out;
    out.reserve(seq.size());
    for (int a : seq) out.push_back(g.name(a));
    return out;
}

std::string join_names(const FiniteGroup& g, const std::vector<int>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += " ";
        out += g.name(seq[i]);
    }
    return out;
}

json report_json(const StrategyReport& r) {
    json w = json::object();
    for (const auto& [k, v] : r.witnesses) w[k] = v;
    return json{{"strategy", r.strategy}, {"witnesses", w}, {"certified", r.certified}};
}

// One whitespace-separated sequence per non-blank line; tokens are canonical
// element names or #i index literals.
std::vector<std::vector<int>> read_sequences(const std::string& path, const FiniteGroup& g) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open sequence file: " + path);
    std::vector<std::vector<int>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<int> seq;
        std::string tok;
        while (ls >> tok) {
            auto idx = g.index_of(tok);
            if (!idx)
                throw InputError("unknown element name '" + tok + "' on line " +
                                 std::to_string(lineno));
            seq.push_back(*idx);
        }
        if (!seq.empty()) out.push_back(std::move(seq));
    }
    return out;
}

int cmd_construct(const Options& opt, const std::string& spec_text, const std::string& kind) {
    auto ast = parse_group_spec(spec_text);
    GroupPtr g = realize_group(ast);
    const std::string spec = canonical_spec(ast);

    ConstructStatus status;
    StrategyReport report;
    std::vector<int> seq, seq_r;
    if (kind == "matched") {
        MatchedPairResult r = matched_pair(g, opt.budget);
        status = r.status;
        report = r.report;
        if (r.pair) { seq = r.pair->h_seq; seq_r = r.pair->r_seq; }
    } else {
        RHarmoniousResult r = r_harmonious(g, opt.budget);
        status = r.status;
        report = r.report;
        if (r.seq) seq = r.seq->items;
    }
    if (status != ConstructStatus::Found) {
        for (const auto& a : report.attempts) std::cerr << a << "\n";
        if (status == ConstructStatus::Impossible) {
            std::cerr << "impossible: no such sequence exists for " << spec << "\n";
            return kImpossible;
        }
        std::cerr << "not constructed: all strategies failed for " << spec << "\n";
        return kNotConstructed;
    }
    auto products = consecutive_products(*g, seq);
    if (opt.format == "json") {
        json out{{"group", spec},
                 {"order", g->order()},
                 {"kind", kind},
                 {"sequence", names_of(*g, seq)},
                 {"products", names_of(*g, products)},
                 {"strategy", report_json(report)},
                 {"certified", report.certified}};
        if (!seq_r.empty()) out["sequence_r"] = names_of(*g, seq_r);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << join_names(*g, seq) << "\n";
        if (!seq_r.empty()) std::cout << join_names(*g, seq_r) << "\n";
        std::cerr << "strategy: " << report.strategy << " (certified)\n";
    }
    return kOk;
}

int cmd_verify(const Options& opt, const std::string& spec_text, const std::string& kind,
               const std::string& file) {
    auto ast = parse_group_spec(spec_text);
    GroupPtr g = realize_group(ast);
    auto seqs = read_sequences(file, *g);
    if (seqs.empty()) throw InputError("sequence file holds no sequence: " + file);

    bool ok;
    std::string why;
    if (kind == "matched") {
        if (seqs.size() < 2)
            throw InputError("matched verification needs two sequences (h then r)");
        ok = is_matched_pair(*g, seqs[0], seqs[1], &why);
    } else if (kind == "harmonious") {
        ok = is_harmonious(*g, seqs[0], &why);
    } else if (kind == "r-harmonious") {
        ok = is_r_harmonious(*g, seqs[0], &why);
    } else {
        ok = is_symmetric_harmonious(*g, seqs[0], &why);
    }
    if (opt.format == "json") {
        json out{{"group", canonical_spec(ast)}, {"kind", kind}, {"ok", ok}};
        if (!ok) out["reason"] = why;
        std::cout << out.dump(2) << "\n";
    }
    if (!ok) {
        std::cerr << "not " << kind << ": " << why << "\n";
        return kFalse;
    }
    return kOk;
}

int cmd_intseq(const Options& opt, long long n) {
    auto pair = intseq::build_matched(n);  // throws UnsupportedError -> exit 2
    std::string why;
    bool ok = intseq::verify_matched_int(pair, &why);
    auto join = [](const intseq::Seq& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s;
    };
    if (opt.format == "json") {
        std::cout << json{{"n", n}, {"k", pair.k}, {"k_prime", pair.k_prime}, {"verified", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "n: " << n << "\n";
        std::cout << "k: " << join(pair.k) << "\n";
        std::cout << "k': " << join(pair.k_prime) << "\n";
        std::cout << "verified: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? kOk : kFalse;
}

int cmd_search(const Options& opt, const std::string& spec_text, const std::string& kind) {
    auto ast = parse_group_spec(spec_text);
    GroupPtr g = realize_group(ast);
    SearchOutcome o;
    if (kind == "harmonious") o = search_harmonious(g, opt.budget);
    else if (kind == "r-harmonious") o = search_r_harmonious(g, opt.budget);
    else if (kind == "symmetric") o = search_symmetric_harmonious(g, opt.budget);
    else o = search_matched(g, opt.budget);

    json out{{"group", canonical_spec(ast)},
             {"kind", kind},
             {"status", to_string(o.status)},
             {"nodes_explored", o.nodes_explored},
             {"budget", o.budget}};
    if (o.status == SearchStatus::Found) {
        out["sequence"] = names_of(*g, o.sequence);
        if (!o.sequence_r.empty()) out["sequence_r"] = names_of(*g, o.sequence_r);
    }
    std::cout << out.dump(2) << "\n";
    switch (o.status) {
        case SearchStatus::Found: return kOk;
        case SearchStatus::NotExists: return kImpossible;
        case SearchStatus::BudgetExceeded: return kNotConstructed;
    }
    return kOk;
}

int cmd_hall_paige(const Options& opt, const std::string& spec_text) {
    auto ast = parse_group_spec(spec_text);
    GroupPtr g = realize_group(ast);
    Sylow2Class c = hall_paige_check(g);
    if (opt.format == "json") {
        std::cout << json{{"group", canonical_spec(ast)},
                          {"order", g->order()},
                          {"class", to_string(c)},
                          {"satisfies_hall_paige", c != Sylow2Class::Cyclic2Sylow}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << to_string(c) << "\n";
    }
    return c == Sylow2Class::Cyclic2Sylow ? kFalse : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonious and R-harmonious sequences in finite groups"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", opt.budget, "Node budget for exhaustive searches")
        ->capture_default_str();
    app.add_option("--seed-order", opt.seed_order, "Reserved; only 'canonical' is implemented")
        ->check(CLI::IsMember({"canonical"}))
        ->capture_default_str();

    std::string spec, kind, file;
    long long n = 0;

    auto* construct = app.add_subcommand("construct", "Construct a certified sequence");
    construct->add_option("--group", spec, "Group spec, e.g. Z9, D12, SD(Z3;Z7;2)")->required();
    construct->add_option("--kind", kind, "What to construct")
        ->check(CLI::IsMember({"matched", "r-harmonious"}))
        ->required();

    auto* verify = app.add_subcommand("verify", "Verify sequences from a file");
    verify->add_option("--group", spec)->required();
    verify->add_option("--kind", kind)
        ->check(CLI::IsMember({"harmonious", "r-harmonious", "symmetric", "matched"}))
        ->required();
    verify->add_option("--file", file, "Sequence file, one sequence per line")->required();

    auto* intseq_cmd = app.add_subcommand("intseq", "Harmoniously matched integer sequences");
    intseq_cmd->add_option("--n", n, "Sequence length (odd, >= 5, != 3 mod 12)")->required();

    auto* search = app.add_subcommand("search", "Exhaustive backtracking search");
    search->add_option("--group", spec)->required();
    search->add_option("--kind", kind)
        ->check(CLI::IsMember({"harmonious", "r-harmonious", "symmetric", "matched"}))
        ->required();

    auto* hp = app.add_subcommand("hall-paige", "Classify a Sylow 2-subgroup");
    hp->add_option("--group", spec)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kInputError : kOk;
    }

    try {
        if (construct->parsed()) return cmd_construct(opt, spec, kind);
        if (verify->parsed()) return cmd_verify(opt, spec, kind, file);
        if (intseq_cmd->parsed()) return cmd_intseq(opt, n);
        if (search->parsed()) return cmd_search(opt, spec, kind);
        if (hp->parsed()) return cmd_hall_paige(opt, spec);
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kImpossible;
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kNotConstructed;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kInputError;
}
