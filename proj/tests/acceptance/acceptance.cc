#include <chipkit/harness/suites.hh>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <thread>

using namespace chipkit;
using namespace chipkit::harness;
using json = nlohmann::json;

namespace {

struct Criterion {
    int number;
    std::string text;
    std::vector<std::string> suites;
    // scope checks on top of every instance passing; returns a failure note or ""
    std::function<std::string(const std::map<std::string, VerificationReport> &)> scope;
};

auto count_if(const VerificationReport & r, const std::function<bool(const InstanceRecord &)> & pred) -> long long
{
    return std::count_if(r.instances.begin(), r.instances.end(), pred);
}

auto order_of(const InstanceRecord & rec) -> int
{
    return rec.graph6.empty() ? 0 : rec.graph6[0] - 63;
}

auto params_set(const VerificationReport & r, const std::string & key) -> std::set<int>
{
    std::set<int> out;
    for (const auto & rec : r.instances)
        if (rec.params.contains(key))
            out.insert(rec.params[key].get<int>());
    return out;
}

auto expect(bool ok, const std::string & note) -> std::string { return ok ? "" : note; }

}

int main(int argc, char ** argv)
{
    SuiteConfig config;
    config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (argc > 1)
        config.cache_dir = argv[1];

    std::vector<Criterion> criteria = {
        {1, "chi_p(K_n^(p)) = p+1, omega_TM at p and p-1 for p in {1,2,3}, n in {3,4,5}", {"S1"},
         [](const auto & r) {
             const auto & s = r.at("S1");
             return expect(s.instances.size() == 9 && params_set(s, "p") == std::set<int>{1, 2, 3} && params_set(s, "n") == std::set<int>{3, 4, 5}, "grid incomplete");
         }},
        {2, "chi_s(G^(1))^2 >= chi(G) and chi_s(G^(1)) <= max(chi(G), 3) on all connected graphs n <= 7", {"S2"},
         [](const auto & r) {
             const auto & s = r.at("S2");
             auto corpus = [](const InstanceRecord & i) { return i.params.value("source", "") == "corpus"; };
             long long seven = count_if(s, [&](const InstanceRecord & i) { return corpus(i) && order_of(i) == 7; });
             return expect(count_if(s, corpus) == 996 && seven == 853, "corpus is not all 996 connected graphs n <= 7 (853 of order 7)");
         }},
        {3, "chi(G) <= chi_(p+1)(G^(p))^(p+1), chi_(p+1)(G^(p)) <= max(chi(G), p+2) with a valid constructive colouring, p in {1,2}, n <= 5", {"S3"},
         [](const auto & r) {
             const auto & s = r.at("S3");
             return expect(s.config["max_n"] == 5 && params_set(s, "p") == std::set<int>{1, 2} && s.instances.size() == 2 * 31, "scope incomplete");
         }},
        {4, "chi_p(G)^p >= chi_TM(G, p-1, n): n <= 8 for p = 2, n <= 7 for p = 3", {"S4"},
         [](const auto & r) {
             const auto & s = r.at("S4");
             long long p2 = count_if(s, [](const InstanceRecord & i) { return i.params["p"] == 2; });
             long long p3 = count_if(s, [](const InstanceRecord & i) { return i.params["p"] == 3; });
             return expect(p2 == 12113 && p3 == 996, "corpus sizes differ from 12113 (n <= 8) and 996 (n <= 7)");
         }},
        {5, "h_5(C_5[K_1]) = 1, h_5(C_5[K_2]) = 32, h_7(C_7[K_2]) = 128, closed form on the full grid, even-hole-free", {"S7"},
         [](const auto & r) {
             const auto & s = r.at("S7");
             long long frozen = count_if(s, [](const InstanceRecord & i) { return i.expected.contains("holes_per_block"); });
             return expect(s.instances.size() == 12 && frozen == 9, "grid or frozen counts missing");
         }},
        {6, "K_(1,t)-free => Delta < binom(omega+t-2, t-1), 200 seeded graphs for t = 3 and t = 4", {"S5"},
         [](const auto & r) {
             const auto & s = r.at("S5");
             long long t3 = count_if(s, [](const InstanceRecord & i) { return i.params["t"] == 3; });
             long long t4 = count_if(s, [](const InstanceRecord & i) { return i.params["t"] == 4; });
             return expect(t3 == 200 && t4 == 200, "sample counts differ from 200");
         }},
        {7, "product colouring is a chi_2 colouring within chi * a^(chi-1) on all connected graphs n <= 6", {"S8"},
         [](const auto & r) {
             const auto & s = r.at("S8");
             return expect(s.config["max_n"] == 6 && s.config["p"] == 2 && s.instances.size() == 143, "scope incomplete");
         }},
        {8, "directed path on k+1 vertices against T_k over all orientations of graphs n <= 4, k in {1,2,3}", {"S9"},
         [](const auto & r) {
             const auto & s = r.at("S9");
             return expect(params_set(s, "k") == std::set<int>{1, 2, 3} && s.config["sample_n"] == 4, "scope incomplete");
         }},
        {9, "certificate, chi-chain, biclique, embedding and walk-power properties on the n <= 7 corpus plus 500 random graphs", {"S11", "PROPS"},
         [](const auto & r) {
             bool ok = true;
             for (const auto * id : {"S11", "PROPS"}) {
                 const auto & s = r.at(id);
                 ok &= count_if(s, [](const InstanceRecord & i) { return i.params.value("source", "") == "corpus"; }) == 996;
                 ok &= count_if(s, [](const InstanceRecord & i) { return i.params.value("source", "") == "random"; }) == 500;
             }
             return expect(ok, "corpus or random sample incomplete");
         }},
    };

    int failed = 0;
    for (const auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::map<std::string, VerificationReport> reports;
        std::string note;
        try {
            for (const auto & id : c.suites) {
                auto rep = run_suite(id, config);
                if (! rep.passed() && note.empty())
                    note = id + ": " + std::to_string(rep.failures()) + " failing instance(s)";
                reports.emplace(id, std::move(rep));
            }
            if (note.empty())
                note = c.scope(reports);
        }
        catch (const std::exception & e) {
            note = std::string("error: ") + e.what();
        }
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::size_t instances = 0;
        for (const auto & [id, rep] : reports)
            instances += rep.instances.size();
        bool pass = note.empty();
        failed += ! pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << " [";
        for (std::size_t i = 0; i < c.suites.size(); ++i)
            std::cout << (i ? "," : "") << c.suites[i];
        std::cout << "] " << c.text << " (" << instances << " instances, " << static_cast<long long>(ms) << " ms)";
        if (! pass)
            std::cout << ": " << note;
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
