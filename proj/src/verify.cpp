#include "spinor/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "spinor/catalog.hpp"
#include "spinor/cocycle.hpp"
#include "spinor/errors.hpp"
#include "spinor/fixtures.hpp"
#include "spinor/registry.hpp"
#include "spinor/verdict.hpp"

namespace spinor {

namespace {

const unsigned long kCatalogueQs[] = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27};
const unsigned kSeriesRanks[] = {3, 4, 5};
const unsigned long kSeriesQs[] = {3, 5, 7, 9};

void note_failure(CheckOutcome& out, const std::string& what) {
    out.pass = false;
    if (out.detail.size() > 400) return;  // keep the report line readable
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what;
}

}  // namespace

CheckOutcome check_catalogue_regression(const std::string& data_dir) {
    CheckOutcome out{"catalogue-regression", true, 0, ""};
    for (unsigned long qv : kCatalogueQs) {
        PrimePower q = parse_prime_power(qv);
        CatalogueFixture fx = load_catalogue_fixture(data_dir, q.mod8());
        for (const OirDescriptor& d : enumerate_oirs_gl2(q)) {
            bool expected = fixture_predicts_spinorial(fx, d);
            bool actual = decide_gl_congruence(q, char_pair(d)).spinorial;
            ++out.checked;
            if (expected != actual)
                note_failure(out, d.describe() + ": fixture says " +
                                      (expected ? "spinorial" : "aspinorial") + ", rule says " +
                                      (actual ? "spinorial" : "aspinorial"));
        }
    }
    return out;
}

namespace {

/// All multisets of size n over {0, .., m-1}, as sorted index vectors.
void for_each_multiset(unsigned n, unsigned long m, std::vector<unsigned long>& cur,
                       unsigned long lo, const std::function<void(const std::vector<unsigned long>&)>& f) {
    if (cur.size() == n) {
        f(cur);
        return;
    }
    for (unsigned long v = lo; v < m; ++v) {
        cur.push_back(v);
        for_each_multiset(n, m, cur, v, f);
        cur.pop_back();
    }
}

std::vector<unsigned long> random_symmetric_tuple(unsigned n, unsigned long qm, std::mt19937_64& rng) {
    std::vector<unsigned long> idx;
    std::uniform_int_distribution<unsigned long> any(0, qm - 1);
    while (idx.size() < n) {
        if (idx.size() + 2 <= n && (rng() & 1)) {
            unsigned long c = any(rng);
            idx.push_back(c);
            idx.push_back(c == 0 ? 0 : qm - c);
        } else {
            idx.push_back((rng() & 1) && qm % 2 == 0 ? qm / 2 : 0);  // a quadratic character
        }
    }
    return idx;
}

}  // namespace

std::vector<CheckOutcome> check_series_claims(std::uint64_t seed) {
    std::vector<CheckOutcome> outs;
    std::mt19937_64 rng(seed);

    CheckOutcome steinberg{"series-steinberg", true, 0, ""};
    for (unsigned n : kSeriesRanks)
        for (unsigned long qv : kSeriesQs) {
            PrimePower q = parse_prime_power(qv);
            Verdict v = decide_gl(n, q, char_pair_gl_n(GlnSteinberg{n, q}));
            ++steinberg.checked;
            if (!v.spinorial)
                note_failure(steinberg, "Steinberg n=" + std::to_string(n) + " q=" + std::to_string(qv) +
                                            " not spinorial (m=" + to_decimal(v.m) + ")");
        }
    outs.push_back(steinberg);

    CheckOutcome series{"series-principal-series", true, 0, ""};
    for (unsigned n : kSeriesRanks) {
        for (unsigned long qv : kSeriesQs) {
            PrimePower q = parse_prime_power(qv);
            unsigned long qm = qv - 1;
            auto check_tuple = [&](const std::vector<unsigned long>& idx) {
                std::vector<LinearChar> chars;
                for (unsigned long i : idx) chars.emplace_back(qm, i);
                if (!is_orthogonal_principal_series(chars)) return;
                Verdict v = decide_gl(n, q, char_pair_gl_n(GlnPrincipalSeries{n, q, idx}));
                ++series.checked;
                if (!v.spinorial) {
                    std::ostringstream os;
                    os << "orthogonal principal series n=" << n << " q=" << qv << " indices";
                    for (unsigned long i : idx) os << ' ' << i;
                    os << " not spinorial";
                    note_failure(series, os.str());
                }
            };
            if (n <= 4 && qv <= 7) {
                std::vector<unsigned long> cur;
                for_each_multiset(n, qm, cur, 0, check_tuple);
            } else {
                for (int t = 0; t < 200; ++t) check_tuple(random_symmetric_tuple(n, qm, rng));
            }
        }
    }
    outs.push_back(series);

    CheckOutcome cuspidal{"series-cuspidal", true, 0, ""};
    for (unsigned n : kSeriesRanks) {
        for (unsigned long qv : kSeriesQs) {
            PrimePower q = parse_prime_power(qv);
            Verdict v = decide_gl(n, q, cuspidal_family_pair(n, q));
            ++cuspidal.checked;
            if (!v.spinorial)
                note_failure(cuspidal, "cuspidal family n=" + std::to_string(n) + " q=" +
                                           std::to_string(qv) + " not spinorial");
            if (n % 2 != 0) continue;
            // genuine regular orthogonal theta for even n: exhaustive index scan
            Int modulus;
            mpz_ui_pow_ui(modulus.get_mpz_t(), qv, n);
            modulus -= 1;
            Int qh;
            mpz_ui_pow_ui(qh.get_mpz_t(), qv, n / 2);
            long found = 0;
            for (Int idx = qh - 1; idx < modulus; idx += qh - 1) {
                // theta^tau = theta^{-1} forces (q^{n/2}+1) idx = 0, i.e.
                // (q^{n/2}-1) | idx; scan that arithmetic progression
                if ((idx * (qh + 1)) % modulus != 0) continue;
                GlnCuspidal c{n, q, idx};
                if (!is_regular_gl_n(c)) continue;
                Verdict w = decide_gl(n, q, char_pair_gl_n(c));
                ++cuspidal.checked;
                ++found;
                if (!w.spinorial)
                    note_failure(cuspidal, "cuspidal n=" + std::to_string(n) + " q=" + std::to_string(qv) +
                                               " theta=" + to_decimal(idx) + " not spinorial");
            }
            if (found == 0)
                note_failure(cuspidal, "no regular orthogonal theta found for n=" + std::to_string(n) +
                                           " q=" + std::to_string(qv));
        }
    }
    outs.push_back(cuspidal);

    CheckOutcome aspin{"series-aspinorial-exists", true, 0, ""};
    for (unsigned n : kSeriesRanks)
        for (unsigned long qv : kSeriesQs) {
            PrimePower q = parse_prime_power(qv);
            // S(chi_0 o det) with chi_0 odd: pair (2, -2), m = 2
            Verdict v = decide_gl(n, q, CharPair(2, -2, "S(chi0 o det)"));
            ++aspin.checked;
            if (v.spinorial)
                note_failure(aspin, "S(chi0 o det) n=" + std::to_string(n) + " q=" + std::to_string(qv) +
                                        " unexpectedly spinorial");
        }
    outs.push_back(aspin);

    return outs;
}

namespace {

/// Direct-sum enumeration over an ordered block list with a dimension
/// budget; visits every nonempty multiset exactly once.
void for_each_block_sum(const std::vector<OrthRep>& blocks, std::size_t budget, std::size_t first,
                        const OrthRep* acc, const std::function<void(const OrthRep&)>& f) {
    for (std::size_t i = first; i < blocks.size(); ++i) {
        if (blocks[i].dim > budget) continue;
        OrthRep next = acc ? direct_sum(*acc, blocks[i]) : blocks[i];
        f(next);
        for_each_block_sum(blocks, budget - blocks[i].dim, i, &next, f);
    }
}

}  // namespace

CheckOutcome check_cyclic_agreement() {
    CheckOutcome out{"oracle-cyclic", true, 0, ""};
    for (unsigned n = 1; n <= 12; ++n) {
        GroupPtr cn = cyclic_group(n);
        std::vector<OrthRep> blocks;
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            blocks.push_back(cyclic_perm_model(cn, d));
            if (n % 2 == 0)
                blocks.push_back(sign_twist(blocks.back(), cyclic_sign_character(n),
                                            blocks.back().name + "*sgn"));
        }
        for (const OrthRep& b : blocks) validate_orth_rep(b);
        for_each_block_sum(blocks, 12, 0, nullptr, [&](const OrthRep& rep) {
            bool oracle = oracle_decide(rep).spinorial;
            bool rule = cyclic_rule_verdict(rep, n).spinorial;
            ++out.checked;
            if (oracle != rule)
                note_failure(out, "C_" + std::to_string(n) + " " + rep.name + ": oracle " +
                                      (oracle ? "spinorial" : "aspinorial") + ", rule disagrees");
        });
    }
    return out;
}

CheckOutcome check_elem_abelian_agreement() {
    CheckOutcome out{"oracle-elem-abelian", true, 0, ""};
    for (unsigned rank = 2; rank <= 3; ++rank) {
        GroupPtr group = elementary_abelian_group(rank);
        unsigned nchars = 1u << rank;
        std::vector<std::vector<int>> chars(nchars);
        for (unsigned c = 0; c < nchars; ++c) {
            chars[c].resize(nchars);
            for (unsigned e = 0; e < nchars; ++e)
                chars[c][e] = std::popcount(c & e) % 2 ? -1 : 1;
        }
        // all multiplicity vectors with total dim in [1, 12]
        std::vector<unsigned> mult(nchars, 0);
        std::vector<std::vector<int>> stack;
        auto run_current = [&]() {
            OrthRep rep = diagonal_char_rep(group, stack);
            bool oracle = oracle_decide(rep).spinorial;
            bool rule = elementary_rule_verdict(rep, rank).spinorial;
            ++out.checked;
            if (oracle != rule) {
                std::ostringstream os;
                os << "rank " << rank << " multiplicities";
                for (unsigned c = 0; c < nchars; ++c) os << ' ' << mult[c];
                os << ": oracle " << (oracle ? "spinorial" : "aspinorial") << ", rule disagrees";
                note_failure(out, os.str());
            }
        };
        std::function<void(unsigned, unsigned)> rec = [&](unsigned c, unsigned budget) {
            if (c == nchars) {
                if (!stack.empty()) run_current();
                return;
            }
            for (unsigned k = 0; k <= budget; ++k) {
                if (k > 0) {
                    mult[c] = k;
                    stack.push_back(chars[c]);
                }
                rec(c + 1, budget - k);
            }
            for (unsigned k = 1; k <= mult[c]; ++k) stack.pop_back();
            mult[c] = 0;
        };
        rec(0, 12);
    }
    return out;
}

CheckOutcome check_exceptional_agreement() {
    CheckOutcome out{"oracle-exceptional", true, 0, ""};
    const char* names[] = {"s3-perm3",    "s3-perm3-sgn",    "s3-perm6",    "s3-perm6-sgn",
                           "gl2f3-borel", "gl2f3-borel-sgn", "gl2f3-vectors", "gl2f3-vectors-sgn"};
    for (const char* name : names) {
        const CuratedRep* entry = find_curated(name);
        if (!entry) {
            note_failure(out, std::string("missing curated rep ") + name);
            continue;
        }
        OrthRep rep = entry->build();
        validate_orth_rep(rep);
        bool oracle = oracle_decide(rep).spinorial;
        bool rule = entry->rule(rep).spinorial;
        ++out.checked;
        if (oracle != rule)
            note_failure(out, std::string(name) + ": oracle " + (oracle ? "spinorial" : "aspinorial") +
                                  ", rule disagrees");
    }
    return out;
}

CheckOutcome check_lemma_ab() {
    CheckOutcome out{"lemma-ab-clifford-square", true, 0, ""};
    const std::size_t dim = 8;
    RatMat form = RatMat::identity(dim);
    CliffordAlgebra alg(form);
    for (unsigned m = 0; m <= 8; ++m) {
        RatMat a = RatMat::identity(dim);
        for (unsigned i = 0; i < m; ++i) a.at(i, i) = -1;
        CliffordElem lift = lift_element(a, form);
        CliffordElem square = alg.mul(lift, lift);
        ++out.checked;
        if (!square.is_scalar()) {
            note_failure(out, "lift square is not scalar at m=" + std::to_string(m));
            continue;
        }
        int expected = (m * (m + 1) / 2) % 2 == 0 ? 1 : -1;
        if (sign_of(square.scalar_part()) != expected)
            note_failure(out, "lift square sign wrong at m=" + std::to_string(m));
    }
    return out;
}

OrthRep restrict_cyclic(const OrthRep& rep, unsigned d) {
    unsigned n = rep.group->order();
    if (d == 0 || n % d != 0) throw InvariantViolation("restriction needs d | n");
    unsigned step = n / d;
    OrthRep out;
    out.group = cyclic_group(d);
    out.dim = rep.dim;
    out.form = rep.form;
    out.name = rep.name + "|C" + std::to_string(d);
    for (unsigned k = 0; k < d; ++k) out.matrix.push_back(rep.matrix[(k * step) % n]);
    return out;
}

namespace {

/// Determinant parity of each representing matrix, as a 0/1 vector: the
/// number of mirrors in any reflection decomposition mod 2.
std::vector<int> det_parity(const OrthRep& rep) {
    std::vector<int> par;
    par.reserve(rep.group->order());
    for (const RatMat& m : rep.matrix) par.push_back(sign_of(determinant(m)) < 0 ? 1 : 0);
    return par;
}

}  // namespace

std::vector<CheckOutcome> check_properties(std::uint64_t seed) {
    std::vector<CheckOutcome> outs;

    // cocycle law on freshly extracted cocycles across a mixed family
    CheckOutcome law{"property-cocycle-law", true, 0, ""};
    std::vector<OrthRep> family;
    for (unsigned n : {2u, 3u, 4u, 6u, 8u}) family.push_back(regular_rep(cyclic_group(n)));
    family.push_back(regular_rep(elementary_abelian_group(2), "klein-regular"));
    family.push_back(find_curated("s3-perm3")->build());
    family.push_back(find_curated("gl2f3-borel")->build());
    for (const OrthRep& rep : family) {
        SignCocycle c = extract_cocycle(rep);
        try {
            c.validate();  // exhaustive triple check
            ++law.checked;
        } catch (const Error& e) {
            note_failure(law, rep.name + ": " + e.what());
        }
    }
    outs.push_back(law);

    // decomposition-order independence: shuffled pivot orders give a
    // cocycle in the same class, and the same coboundary verdict
    CheckOutcome order{"property-order-independence", true, 0, ""};
    std::mt19937_64 rng(seed);
    for (const OrthRep& rep : family) {
        SignCocycle base = extract_cocycle(rep);
        for (int round = 0; round < 3; ++round) {
            SignCocycle shuffled = extract_cocycle(rep, random_pivot_orders(rep, rng()));
            SignCocycle ratio = pointwise_product(base, shuffled);
            ++order.checked;
            if (!is_coboundary(ratio))
                note_failure(order, rep.name + ": reshuffled cocycle is not cohomologous");
            if (is_coboundary(base) != is_coboundary(shuffled))
                note_failure(order, rep.name + ": verdict depends on decomposition order");
        }
    }
    outs.push_back(order);

    // direct-sum multiplicativity, in its exact form: the cocycle of a sum
    // is the pointwise product of the block cocycles times the cup term
    // (-1)^{k2(g) k1(h)} from the determinant parities. The plain pointwise
    // product is exact whenever either block lands in SO.
    CheckOutcome sums{"property-direct-sum", true, 0, ""};
    {
        GroupPtr c4 = cyclic_group(4);
        GroupPtr c6 = cyclic_group(6);
        std::vector<std::pair<OrthRep, OrthRep>> pairs;
        pairs.emplace_back(cyclic_perm_model(c4, 4), cyclic_perm_model(c4, 2));
        pairs.emplace_back(sign_twist(cyclic_perm_model(c4, 4), cyclic_sign_character(4)),
                           cyclic_perm_model(c4, 4));
        pairs.emplace_back(diagonal_char_rep(c4, {cyclic_sign_character(4)}, "sign"),
                           diagonal_char_rep(c4, {cyclic_sign_character(4)}, "sign"));
        pairs.emplace_back(cyclic_perm_model(c6, 6), cyclic_perm_model(c6, 3));
        GroupPtr v4 = elementary_abelian_group(2);
        pairs.emplace_back(regular_rep(v4), regular_rep(v4));
        for (const auto& [a, b] : pairs) {
            SignCocycle ca = extract_cocycle(a), cb = extract_cocycle(b);
            SignCocycle csum = extract_cocycle(direct_sum(a, b));
            std::vector<int> ka = det_parity(a), kb = det_parity(b);
            unsigned n = a.group->order();
            bool plain_applicable =
                std::all_of(ka.begin(), ka.end(), [](int k) { return k == 0; }) ||
                std::all_of(kb.begin(), kb.end(), [](int k) { return k == 0; });
            ++sums.checked;
            for (unsigned g = 0; g < n && sums.pass; ++g)
                for (unsigned h = 0; h < n; ++h) {
                    int cup = (kb[g] & ka[h]) ? -1 : 1;
                    if (csum.sign(g, h) != ca.sign(g, h) * cb.sign(g, h) * cup) {
                        note_failure(sums, a.name + " + " + b.name + ": twisted multiplicativity fails");
                        break;
                    }
                    if (plain_applicable && csum.sign(g, h) != ca.sign(g, h) * cb.sign(g, h)) {
                        note_failure(sums, a.name + " + " + b.name + ": plain multiplicativity fails");
                        break;
                    }
                }
        }
    }
    outs.push_back(sums);

    // divisibility-by-8 claims
    CheckOutcome div8{"property-divisibility", true, 0, ""};
    for (unsigned long qv = 3; qv <= 49; qv += 2) {
        PrimePower q;
        try {
            q = parse_prime_power(qv);
        } catch (const NotAPrimePower&) {
            continue;
        }
        for (unsigned m = 2; m <= 6; ++m) {
            ++div8.checked;
            if (psi(m, q) % 8 != 0)
                note_failure(div8, "psi(" + std::to_string(m) + ", " + std::to_string(qv) +
                                       ") not divisible by 8");
        }
        for (unsigned n = 4; n <= 7; ++n) {
            ++div8.checked;
            if (q_factorial(n, q) % 8 != 0)
                note_failure(div8, "[" + std::to_string(n) + "]_" + std::to_string(qv) +
                                       "! not divisible by 8");
        }
    }
    outs.push_back(div8);

    // restriction stability: for even d | n the verdict of a C_n
    // representation matches the verdict of its restriction to C_d,
    // through both the rule and the oracle
    CheckOutcome restr{"property-restriction-stability", true, 0, ""};
    for (unsigned n : {4u, 6u, 8u, 10u, 12u}) {
        GroupPtr cn = cyclic_group(n);
        std::vector<OrthRep> reps;
        reps.push_back(regular_rep(cn));
        reps.push_back(sign_twist(reps.back(), cyclic_sign_character(n)));
        for (unsigned d = 2; d < n; ++d)
            if (n % d == 0) reps.push_back(cyclic_perm_model(cn, d));
        for (const OrthRep& rep : reps) {
            bool full_rule = cyclic_rule_verdict(rep, n).spinorial;
            bool full_oracle = oracle_decide(rep).spinorial;
            for (unsigned d = 2; d < n; d += 2) {
                if (n % d != 0) continue;
                OrthRep res = restrict_cyclic(rep, d);
                bool res_rule = cyclic_rule_verdict(res, d).spinorial;
                bool res_oracle = oracle_decide(res).spinorial;
                ++restr.checked;
                if (full_rule != res_rule || full_oracle != res_oracle || full_rule != full_oracle)
                    note_failure(restr, rep.name + " restricted to C_" + std::to_string(d) +
                                            ": verdicts diverge");
            }
        }
    }
    outs.push_back(restr);

    return outs;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const std::string& data_dir) {
    SuiteReport report{suite, {}};
    bool all = suite == "all";
    if (suite == "catalogue" || all) report.checks.push_back(check_catalogue_regression(data_dir));
    if (suite == "series" || all) {
        auto cs = check_series_claims(seed);
        report.checks.insert(report.checks.end(), cs.begin(), cs.end());
    }
    if (suite == "oracle" || all) {
        report.checks.push_back(check_cyclic_agreement());
        report.checks.push_back(check_elem_abelian_agreement());
        report.checks.push_back(check_exceptional_agreement());
        report.checks.push_back(check_lemma_ab());
    }
    if (suite == "properties" || all) {
        auto cs = check_properties(seed);
        report.checks.insert(report.checks.end(), cs.begin(), cs.end());
    }
    if (report.checks.empty())
        throw InvariantViolation("unknown suite \"" + suite +
                                 "\" (expected catalogue, series, oracle, properties or all)");
    return report;
}

}  // namespace spinor
