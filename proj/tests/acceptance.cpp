// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "devries/suites.hpp"

using namespace devries;

namespace {

int failures = 0;
std::int64_t total_ms = 0;

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void line(const std::string& name, bool pass, const std::string& detail) {
    std::cout << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    std::cout.flush();
    if (!pass) ++failures;
}

void criterion(const std::string& name, std::int64_t budget_ms,
               const std::function<std::pair<bool, std::string>()>& run) {
    std::int64_t t0 = now_ms();
    auto [pass, detail] = run();
    std::int64_t elapsed = now_ms() - t0;
    total_ms += elapsed;
    std::string info = detail.empty() ? "" : detail + ", ";
    info += std::to_string(elapsed) + " ms";
    if (budget_ms > 0 && elapsed > budget_ms) {
        pass = false;
        info += " > budget " + std::to_string(budget_ms) + " ms";
    }
    line(name, pass, info);
}

std::string first_failure(const CheckReport& r) {
    for (const auto& it : r.items)
        if (!it.pass && !it.skipped) return it.name + ": " + it.detail;
    return "";
}

std::pair<bool, std::string> verdict(const CheckReport& r) {
    return {r.all_pass(), r.all_pass() ? "" : first_failure(r)};
}

std::pair<bool, std::string> merge(std::initializer_list<CheckReport> reports) {
    for (const auto& r : reports)
        if (!r.all_pass()) return {false, r.suite + " — " + first_failure(r)};
    return {true, ""};
}

} // namespace

int main() {
    const std::uint64_t seed = 20260808;

    criterion("criterion-01 dv-axioms-interval", 30000, [&] {
        return verdict(dv_interval_suite(seed, 1000));
    });

    criterion("criterion-02 finite-rigidity", 10000, [&] { return verdict(rigidity_suite()); });

    criterion("criterion-03 proximity-axioms-P1-P10", 60000, [&] {
        IntervalCarrier ic;
        return merge({prox_axiom_suite(ic, seed, DomainKind::integers, 500),
                      prox_axiom_suite(ic, seed + 1, DomainKind::rationals, 500)});
    });

    criterion("criterion-04 oracle-equivalence", 0, [&] {
        return merge({oracle_equivalence_suite(seed, DomainKind::integers, 1000),
                      oracle_equivalence_suite(seed + 1, DomainKind::rationals, 1000)});
    });

    criterion("criterion-05 level-set-formulas", 0, [&] {
        return merge({level_formula_suite(seed, DomainKind::integers, 500),
                      level_formula_suite(seed + 1, DomainKind::rationals, 500)});
    });

    criterion("criterion-06 power-proximity-properties", 0, [&] {
        return merge({prox_theorem_suite(seed, DomainKind::integers, 500),
                      prox_theorem_suite(seed + 1, DomainKind::rationals, 500)});
    });

    criterion("criterion-07 form-roundtrips", 0, [&] {
        return merge({roundtrip_suite(seed, DomainKind::integers, 500),
                      roundtrip_suite(seed + 1, DomainKind::rationals, 500)});
    });

    criterion("criterion-08 five-way-ends", 60000, [&] {
        return verdict(ends_agreement_suite(seed, 40));
    });

    criterion("criterion-09 duality-roundtrip", 0, [&] {
        return verdict(duality_suite(seed, 60));
    });

    criterion("criterion-10 morphism-machinery", 0, [&] {
        return verdict(morphism_suite(seed, 200));
    });

    criterion("criterion-11 fring-identities", 0, [&] {
        IntervalCarrier ic;
        FiniteCarrier fc(3);
        return merge({fring_suite(ic, seed, DomainKind::rationals, 1000),
                      fring_suite(fc, seed + 1, DomainKind::integers, 1000)});
    });

    criterion("criterion-12 determinism", 0, [&] {
        std::string a = dv_interval_suite(seed, 200).render_kv() +
                        oracle_equivalence_suite(seed, DomainKind::rationals, 200).render_kv() +
                        morphism_suite(seed, 50).render_kv();
        std::string b = dv_interval_suite(seed, 200).render_kv() +
                        oracle_equivalence_suite(seed, DomainKind::rationals, 200).render_kv() +
                        morphism_suite(seed, 50).render_kv();
        if (a != b) return std::pair<bool, std::string>{false, "reports differ between runs"};
        return std::pair<bool, std::string>{true, "byte-identical reports"};
    });

    bool under_budget = total_ms < 5 * 60 * 1000;
    line("criterion-12 full-suite-runtime", under_budget,
         std::to_string(total_ms) + " ms of 300000 ms");

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass\n"
                                : "ACCEPTANCE: " + std::to_string(failures) + " failures\n");
    return failures == 0 ? 0 : 1;
}
