// Runs every suite once and prints one PASS/FAIL line per acceptance criterion.
// Failing checks are listed above the summary. Exit status is nonzero if any
// criterion fails.

#include "rstir/verify.hpp"

#include <cstdio>
#include <iostream>
#include <map>

using namespace rstir;

namespace {

struct Line {
    long checks = 0, failed = 0;
    double seconds = 0;
    std::vector<std::string> failures;
};

std::string serialize(const std::vector<CheckResult>& rs) {
    std::string s;
    for (const auto& c : rs) s += dump(to_json(c)) + "\n";
    return s;
}

// criterion 9: same output across repeated runs and across thread counts
Line determinism(const VerifyConfig& base) {
    Line line;
    auto check = [&](const std::string& what, bool ok) {
        ++line.checks;
        if (!ok) {
            ++line.failed;
            line.failures.push_back(what);
        }
    };
    VerifyConfig one = base, many = base;
    one.threads = 1;
    many.threads = 4;
    for (const auto& [suite, filter] : std::vector<std::pair<std::string, std::string>>{
             {"mc", "composition"}, {"mc", "gibbs"}, {"mc", "lah_n10_k3_r1/2"}, {"clt", "stam"}}) {
        const auto a = serialize(run_suite(suite, one, filter));
        const auto b = serialize(run_suite(suite, one, filter));
        const auto c = serialize(run_suite(suite, many, filter));
        check(suite + "/" + filter + " repeated run", a == b);
        check(suite + "/" + filter + " 1 vs 4 threads", a == c);
    }
    auto draw = [](unsigned threads) {
        std::string s;
        for (const auto& c : run_replicas<IncompleteComposition>(
                 1000, 7, 0, threads, [](Rng& g) { return r_composition_dirichlet(4, 2, Rational(1), g); }))
            s += dump(to_json(c)) + "\n";
        for (const auto& p : run_replicas<IncompletePartition>(
                 1000, 7, 0, threads, [](Rng& g) { return gibbs_r_partition(9, Rational(2), Rational(1), g).partition; }))
            s += dump(to_json(p)) + "\n";
        return s;
    };
    const auto s1 = draw(1);
    check("sample repeated run", s1 == draw(1));
    check("sample 1 vs 3 threads", s1 == draw(3));
    return line;
}

}  // namespace

int main(int argc, char** argv) {
    VerifyConfig cfg;
    if (argc > 1) cfg.scale = std::atof(argv[1]);  // smoke runs only; thresholds assume 1.0

    // time budgets in seconds, from the criteria text
    const std::map<int, double> budget = {{1, 10}, {3, 60}, {5, 600}, {7, 1200}};
    const std::map<int, std::string> title = {
        {1, "exact identities"},          {2, "triangles vs oracles"}, {3, "enumeration equivalence"},
        {4, "three-route Lah pmf"},       {5, "sampler fidelity"},     {6, "mixture identities"},
        {7, "limit theorems"},            {8, "expected profile"},     {9, "determinism"}};

    std::map<int, Line> lines;
    long supporting = 0, supporting_failed = 0;
    for (const char* suite : {"exact", "oracle", "mc", "clt"}) {
        for (const auto& c : run_suite(suite, cfg)) {
            if (c.criterion == 0) {
                ++supporting;
                if (!c.pass) {
                    ++supporting_failed;
                    std::cout << "  supporting check failed: " << c.suite << '/' << c.name << ' ' << c.detail << '\n';
                }
                continue;
            }
            auto& l = lines[c.criterion];
            ++l.checks;
            l.seconds += c.seconds;
            if (!c.pass) {
                ++l.failed;
                l.failures.push_back(c.suite + "/" + c.name + " " + c.detail);
            }
        }
    }
    lines[9] = determinism(cfg);

    bool all = true;
    for (const auto& [k, l] : lines)
        for (const auto& f : l.failures) std::cout << "  criterion " << k << " failure: " << f << '\n';
    for (int k = 1; k <= 9; ++k) {
        auto& l = lines[k];
        const auto b = budget.find(k);
        const bool in_time = b == budget.end() || l.seconds < b->second;
        const bool pass = l.checks > 0 && l.failed == 0 && in_time;
        all = all && pass;
        char buf[256];
        std::snprintf(buf, sizeof buf, "criterion %d (%s): %s  [%ld checks, %ld failed, %.1f s%s]", k,
                      title.at(k).c_str(), pass ? "PASS" : "FAIL", l.checks, l.failed, l.seconds,
                      in_time ? "" : ", over time budget");
        std::cout << buf << '\n';
    }
    std::cout << "supporting checks: " << supporting - supporting_failed << '/' << supporting << " passed\n";
    return all ? 0 : 1;
}
