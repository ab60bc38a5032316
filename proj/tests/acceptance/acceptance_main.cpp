// Acceptance suite: runs each acceptance criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion (sub-parts get their own lines).
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "harmseq/construct.hpp"
#include "harmseq/errors.hpp"
#include "harmseq/group.hpp"
#include "harmseq/groupspec.hpp"
#include "harmseq/intseq.hpp"
#include "harmseq/search.hpp"
#include "harmseq/table_io.hpp"
#include "harmseq/verify.hpp"

using namespace harmseq;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(const std::string& id, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> by_names(const FiniteGroup& g, const char* tokens) {
    std::istringstream in(tokens);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) out.push_back(*g.index_of(tok));
    return out;
}

std::string run_cli(const std::string& cli, const std::string& args, int* code) {
    std::string cmd = cli + " " + args;
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    if (!p) { *code = -1; return out; }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int st = pclose(p);
    *code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return out;
}

// -------------------------------------------------------------------------
void criterion1(const std::string& cli) {
    auto t0 = Clock::now();
    int code = 0;
    std::string out = run_cli(cli, "intseq --n 9", &code);
    double dt = seconds_since(t0);
    bool ok = code == 0 &&
              out.find("k: 10,-10,-3,4,2,0,-2,-4,3\n") != std::string::npos &&
              out.find("k': 10,-4,2,-3,-10,4,-2,3\n") != std::string::npos;
    std::ostringstream d;
    d << "intseq --n 9 byte-exact, " << dt << " s";
    report("1", ok && dt < 0.1, d.str());
}

void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string first_bad;
    for (long long n = 5; n <= 499 && ok; n += 2) {
        if (n % 12 == 3) continue;
        auto pair = intseq::build_matched(n);
        std::string why;
        if (!intseq::verify_matched_int(pair, &why)) {
            ok = false;
            first_bad = "n=" + std::to_string(n) + ": " + why;
            break;
        }
        const auto& k = pair.k;
        if (k[0] + k[1] != 0) { ok = false; first_bad = "mirror k0+k1, n=" + std::to_string(n); }
        for (long long i = 2; i <= n - 1 && ok; ++i)
            if (k[i] + k[n + 1 - i] != 0) {
                ok = false;
                first_bad = "mirror, n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        long long zero_at = std::find(k.begin(), k.end(), 0LL) - k.begin();
        std::set<long long> image;
        for (long long j = 1; j <= n - 1 && ok; ++j) {
            long long s = intseq::sigma_map(n, j);
            image.insert(s);
            if (s == zero_at) { ok = false; first_bad = "sigma hits zero index, n=" + std::to_string(n); }
        }
        if (ok && static_cast<long long>(image.size()) != n - 1) {
            ok = false;
            first_bad = "sigma not injective, n=" + std::to_string(n);
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream d;
    d << "family sweep n in [5,499], " << dt << " s";
    if (!first_bad.empty()) d << " (" << first_bad << ")";
    report("2", ok && dt < 1.0, d.str());
}

void criterion3() {
    // D12 / D16 pairs transcribed from the printed example. Both transcriptions
    // are harmonious / R-harmonious with shared endpoints, but their full
    // products are not the identity, so is_matched_pair honestly rejects them.
    auto d12 = make_dihedral(12);
    auto g12 = by_names(*d12, "r 1 r^3 s r^5 rs r^2 r^4 r^4s r^2s r^3s r^5s");
    auto r12 = by_names(*d12, "r r^2 r^3 s r^4 r^3s r^2s r^4s r^5 rs r^5s");
    std::string why12;
    bool ok12 = is_matched_pair(*d12, g12, r12, &why12);
    report("3 (D12 pair)", ok12, ok12 ? "" : "transcription rejected: " + why12);

    auto d16 = make_dihedral(16);
    auto g16 = by_names(*d16, "r^2 r r^6 s r^3s r^7 r^3 r^5 r^4s r^6s r^5s rs r^4 r^7s 1 r^2s");
    auto r16 = by_names(*d16, "r^2 r^5 r^6s r^4 r^3s rs s r^5s r^7s r^3 r r^4s r^6 r^7 r^2s");
    std::string why16;
    bool ok16 = is_matched_pair(*d16, g16, r16, &why16);
    report("3 (D16 pair)", ok16, ok16 ? "" : "transcription rejected: " + why16);

    auto g21 = make_semidirect_cyclic({3}, 7, {2});
    auto seq = by_names(*g21,
                        "x^4 y^2 x^4y x^5y x^5 x^6y y x^6 x^3y x^4y^2 x^6y^2 xy x x^2y^2 xy^2 "
                        "x^2 x^3 x^5y^2 x^2y x^3y^2");
    auto expected = by_names(*g21,
                             "x^4y^2 x^2 y^2 xy x^4y x^6y^2 x^5y x^2y x^4 y x^3 x^3y x^3y^2 "
                             "x^6y x^2y^2 x^5 xy^2 x^6 x x^5y^2");
    bool ok21 = is_r_harmonious(*g21, seq) && consecutive_products(*g21, seq) == expected;
    report("3 (order-21 sequence)", ok21, "R-harmonious with the listed products, in order");
}

void criterion4() {
    auto z9 = make_cyclic(9);
    auto pair = mext(z9, trivial_subgroup(z9));
    bool ok = pair.h_seq == std::vector<int>{1, 8, 6, 4, 2, 0, 7, 5, 3} &&
              pair.r_seq == std::vector<int>{1, 5, 2, 6, 8, 4, 7, 3};
    report("4", ok, "mext(Z9, trivial) residue lists");
}

void criterion5() {
    auto t0 = Clock::now();
    auto o1 = search_r_harmonious(make_cyclic(3), 10'000'000);
    double t1 = seconds_since(t0);
    bool ok1 = o1.status == SearchStatus::NotExists && t1 < 10.0;

    t0 = Clock::now();
    auto o2 = search_r_harmonious(make_dihedral(8), 10'000'000);
    double t2 = seconds_since(t0);
    bool ok2 = o2.status == SearchStatus::NotExists && t2 < 10.0;

    auto o3 = search_harmonious(make_direct_product(make_cyclic(2), make_cyclic(2)));
    bool ok3 = o3.status == SearchStatus::NotExists;

    std::ostringstream d;
    d << "Z3 " << to_string(o1.status) << " " << t1 << " s; D8 " << to_string(o2.status) << " "
      << t2 << " s; Z2xZ2 harmonious " << to_string(o3.status);
    report("5", ok1 && ok2 && ok3, d.str());
}

void criterion6() {
    auto t0 = Clock::now();
    auto g55 = make_semidirect_cyclic({5}, 11, {3});
    auto r55 = matched_pair(g55);
    auto z9 = make_cyclic(9);
    auto r9 = matched_pair(z9);
    double dt = seconds_since(t0);
    bool ok = r55.status == ConstructStatus::Found && r55.report.strategy == "main1" &&
              r55.report.witnesses.at("m") == "5" && r55.report.witnesses.at("H_order") == "11" &&
              r9.status == ConstructStatus::Found && r9.report.strategy == "main1" &&
              r9.report.witnesses.at("m") == "9" &&
              is_matched_pair(*g55, r55.pair->h_seq, r55.pair->r_seq) &&
              is_matched_pair(*z9, r9.pair->h_seq, r9.pair->r_seq);
    std::ostringstream d;
    d << "main1 on Z11:Z5 (m=5, |H|=11) and Z9 (m=9), " << dt << " s";
    report("6", ok && dt < 5.0, d.str());
}

void criterion7() {
    auto t0 = Clock::now();
    auto d60 = make_direct_product(make_dihedral(12), make_cyclic(5));
    auto r60 = matched_pair(d60);
    auto g81 = make_semidirect_cyclic({3, 3}, 9, {4, 1});
    auto r81 = matched_pair(g81);
    double dt = seconds_since(t0);
    bool ok = r60.status == ConstructStatus::Found && r60.report.strategy == "main2" &&
              r81.status == ConstructStatus::Found && r81.report.strategy == "main2" &&
              is_matched_pair(*d60, r60.pair->h_seq, r60.pair->r_seq) &&
              is_matched_pair(*g81, r81.pair->h_seq, r81.pair->r_seq);
    std::ostringstream d;
    d << "main2 on D12xZ5 and (Z3xZ3):Z9, " << dt << " s";
    report("7", ok && dt < 30.0, d.str());
}

void criterion8(const std::string& data_dir) {
    struct Entry {
        std::string name;
        GroupPtr g;
        int expect;  // 1 = Found, 0 = NotExists, -1 = unconstrained
    };
    auto klein = make_direct_product(make_cyclic(2), make_cyclic(2));
    std::vector<Entry> catalogue{
        {"Z2", make_cyclic(2), 0},
        {"Z3", make_cyclic(3), 0},
        {"Z4", make_cyclic(4), 0},
        {"Z5", make_cyclic(5), 1},
        {"Z6", make_cyclic(6), 0},
        {"Z7", make_cyclic(7), 1},
        {"Z8", make_cyclic(8), 0},
        {"Z9", make_cyclic(9), 1},
        {"Z10", make_cyclic(10), 0},
        {"Z11", make_cyclic(11), 1},
        {"Z12", make_cyclic(12), 0},
        {"Z2xZ2", klein, 1},
        {"Z2xZ4", make_direct_product(make_cyclic(2), make_cyclic(4)), 1},
        {"Z2xZ6", make_direct_product(make_cyclic(2), make_cyclic(6)), 1},
        {"Z2xZ2xZ2", make_direct_product(klein, make_cyclic(2)), 1},
        {"Z3xZ3", make_direct_product(make_cyclic(3), make_cyclic(3)), 1},
        {"D6", make_dihedral(6), 0},
        {"D8", make_dihedral(8), -1},
        {"D10", make_dihedral(10), 0},
        {"D12", make_dihedral(12), -1},
        {"Q8", load_cayley_table_file(data_dir + "/q8.table"), -1},
    };
    bool ok = true;
    std::string detail;
    for (const auto& e : catalogue) {
        auto o = search_r_harmonious(e.g);
        bool cyc = hall_paige_check(e.g) == Sylow2Class::Cyclic2Sylow;
        if (cyc && o.status != SearchStatus::NotExists) {
            ok = false;
            detail = e.name + ": cyclic Sylow-2 but search says " + to_string(o.status);
            break;
        }
        if (e.expect == 1 && o.status != SearchStatus::Found) {
            ok = false;
            detail = e.name + ": expected Found, got " + to_string(o.status);
            break;
        }
        if (e.expect == 0 && o.status != SearchStatus::NotExists) {
            ok = false;
            detail = e.name + ": expected NotExists, got " + to_string(o.status);
            break;
        }
        if (o.status == SearchStatus::Found && !is_r_harmonious(*e.g, o.sequence)) {
            ok = false;
            detail = e.name + ": witness fails the verifier";
            break;
        }
    }
    report("8", ok, ok ? "21-group catalogue matches the cited classification" : detail);
}

void criterion9(const std::string& data_dir) {
    std::vector<GroupPtr> catalogue{
        make_cyclic(1), make_cyclic(5), make_cyclic(7), make_cyclic(9), make_cyclic(11),
        make_cyclic(13), make_cyclic(15),
        make_direct_product(make_cyclic(2), make_cyclic(2)),
        make_direct_product(make_cyclic(2), make_cyclic(4)),
        make_direct_product(make_cyclic(3), make_cyclic(3)),
        make_dihedral(8), make_dihedral(12), make_dihedral(16),
        make_semidirect_cyclic({3}, 7, {2}),
        make_semidirect_cyclic({5}, 11, {3}),
        make_direct_product(make_dihedral(12), make_cyclic(5)),
        make_semidirect_cyclic({3, 3}, 9, {4, 1}),
        load_cayley_table_file(data_dir + "/q8.table"),
    };
    bool ok = true;
    std::string detail;
    int produced = 0;
    for (const auto& g : catalogue) {
        try {
            if (g->order() % 2 == 1) {
                auto s = symmetric_harmonious(g);
                ++produced;
                if (!is_symmetric_harmonious(*g, s.items)) throw std::logic_error("symmetric");
            }
            auto mp = matched_pair(g, g->order() > 16 ? 200'000 : kDefaultBudget);
            if (mp.status == ConstructStatus::Found) {
                ++produced;
                if (!is_matched_pair(*g, mp.pair->h_seq, mp.pair->r_seq))
                    throw std::logic_error("matched");
            }
            auto rh = r_harmonious(g, g->order() > 16 ? 200'000 : kDefaultBudget);
            if (rh.status == ConstructStatus::Found) {
                ++produced;
                if (!is_r_harmonious(*g, rh.seq->items)) throw std::logic_error("r-harmonious");
            }
        } catch (const BudgetExceededError&) {
            // a bounded search giving up is not a certification failure
        } catch (const std::exception& e) {
            ok = false;
            detail = "order " + std::to_string(g->order()) + ": " + e.what();
            break;
        }
    }
    std::ostringstream d;
    d << produced << " constructed sequences, all certified";
    report("9", ok && produced > 0, ok ? d.str() : detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <path-to-cli> <data-dir>\n";
        return 2;
    }
    const std::string cli = argv[1], data = argv[2];
    try {
        criterion1(cli);
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8(data);
        criterion9(data);
    } catch (const std::exception& e) {
        std::cout << "FAIL (exception): " << e.what() << "\n";
        return 1;
    }
    if (g_failures) {
        std::cout << g_failures << " criterion check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
