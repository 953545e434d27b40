// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
//   1  catalogue regression against the per-residue fixture files
//   2  GL_n family claims for n in {3,4,5}, odd q in {3,5,7,9}
//   3  oracle = cyclic rule on all block direct sums, n <= 12, dim <= 12
//   4  oracle = elementary abelian rule, ranks 2 and 3, dim <= 12
//   5  oracle = exceptional rules on the GL_2(F_2) and GL_2(F_3) models
//   6  Clifford square sign of diagonal involutions, m <= 8
//   7  property suite (cocycle law, order independence, direct sums,
//      divisibility, restriction stability)

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "spinor/fixtures.hpp"
#include "spinor/verify.hpp"

using namespace spinor;

namespace {

struct Criterion {
    std::string label;
    std::vector<CheckOutcome> outcomes;
    double seconds = 0;

    bool pass() const {
        for (const auto& o : outcomes)
            if (!o.pass) return false;
        return true;
    }
    long checked() const {
        long n = 0;
        for (const auto& o : outcomes) n += o.checked;
        return n;
    }
};

template <typename Fn>
Criterion run(const std::string& label, Fn&& fn) {
    Criterion c{label, {}, 0};
    auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if constexpr (std::is_same_v<decltype(result), CheckOutcome>)
        c.outcomes.push_back(std::move(result));
    else
        c.outcomes = std::move(result);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20240901;
    std::string data_dir = default_data_dir();
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--seed") seed = std::stoull(argv[i + 1]);
        if (flag == "--data-dir") data_dir = argv[i + 1];
    }

    std::vector<Criterion> criteria;
    criteria.push_back(run("C1 catalogue-regression",
                           [&] { return check_catalogue_regression(data_dir); }));
    criteria.push_back(run("C2 gl_n-families", [&] { return check_series_claims(seed); }));
    criteria.push_back(run("C3 oracle-cyclic", [] { return check_cyclic_agreement(); }));
    criteria.push_back(run("C4 oracle-elem-abelian", [] { return check_elem_abelian_agreement(); }));
    criteria.push_back(run("C5 oracle-exceptional", [] { return check_exceptional_agreement(); }));
    criteria.push_back(run("C6 lemma-ab", [] { return check_lemma_ab(); }));
    criteria.push_back(run("C7 properties", [&] { return check_properties(seed); }));

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        bool pass = c.pass();
        all_pass = all_pass && pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.label << "  (" << c.checked()
                  << " checks, " << c.seconds << " s)\n";
        for (const auto& o : c.outcomes)
            if (!o.pass) std::cout << "      " << o.name << ": " << o.detail << "\n";
    }
    std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all_pass ? 0 : 1;
}
