#include "spinor/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinor/catalog.hpp"
#include "spinor/cocycle.hpp"
#include "spinor/errors.hpp"
#include "spinor/fixtures.hpp"
#include "spinor/registry.hpp"
#include "spinor/verdict.hpp"
#include "spinor/verdict_record.hpp"
#include "spinor/verify.hpp"

namespace spinor {

namespace {

struct DecideArgs {
    std::string group;
    unsigned n = 0;
    unsigned long q = 0;
    std::string theta1;
    std::string theta_a1;
    std::vector<std::string> theta_inv;
    std::string format = "json";
};

std::pair<std::string, Int> parse_element_value(const std::string& s, const std::string& fallback_name) {
    auto eq = s.find('=');
    if (eq == std::string::npos) return {fallback_name, Int(s)};
    return {s.substr(0, eq), Int(s.substr(eq + 1))};
}

/// "e1", "e2e3", ... -> generator bitmask
unsigned parse_elem2_mask(const std::string& name, unsigned rank) {
    unsigned mask = 0;
    std::size_t i = 0;
    while (i < name.size()) {
        if (name[i] != 'e') throw InvariantViolation("bad element name \"" + name + "\" (want e1, e1e2, ...)");
        ++i;
        std::size_t start = i;
        while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
        if (start == i) throw InvariantViolation("bad element name \"" + name + "\"");
        unsigned gen = static_cast<unsigned>(std::stoul(name.substr(start, i - start)));
        if (gen == 0 || gen > rank)
            throw InvariantViolation("generator e" + std::to_string(gen) + " outside rank " +
                                     std::to_string(rank));
        mask |= 1u << (gen - 1);
    }
    if (mask == 0) throw InvariantViolation("element name names no generators");
    return mask;
}

void push_verdict(VerdictRecord& rec, const Verdict& v) {
    rec.m = v.m;
    rec.rule = rule_name(v.rule);
    rec.spinorial = v.spinorial;
    rec.parameters.emplace_back("residue_class", v.residue_class);
    if (!v.failing_element.empty()) rec.parameters.emplace_back("failing_element", v.failing_element);
}

int cmd_decide(const DecideArgs& a, std::ostream& out, std::ostream& err) {
    VerdictRecord rec;
    rec.group = a.group;
    rec.family = "input";
    auto require = [&](bool ok, const std::string& flag) {
        if (!ok) throw InvariantViolation("--" + flag + " is required for --group " + a.group);
    };
    try {
        if (a.group == "gl" || a.group == "gsp") {
            require(a.n > 0, "n");
            require(a.q > 0, "q");
            require(!a.theta1.empty(), "theta1");
            require(!a.theta_a1.empty(), "theta-a1");
            PrimePower q = parse_prime_power(a.q);
            CharPair pair{Int(a.theta1), Int(a.theta_a1)};
            rec.parameters.emplace_back("n", std::to_string(a.n));
            rec.parameters.emplace_back("q", std::to_string(a.q));
            rec.theta_1 = pair.theta_1;
            rec.theta_inv = pair.theta_a1;
            push_verdict(rec, a.group == "gl" ? decide_gl(a.n, q, pair) : decide_gsp(a.n, q, pair));
        } else if (a.group == "cyclic") {
            require(a.n > 0, "n");
            require(!a.theta1.empty(), "theta1");
            Int t1(a.theta1);
            Int tinv = t1;
            if (!a.theta_inv.empty()) tinv = parse_element_value(a.theta_inv.front(), "g^(n/2)").second;
            else if (a.n % 2 == 0)
                throw InvariantViolation("--theta-inv (value at g^(n/2)) is required for even n");
            CharPair pair{t1, tinv};
            rec.parameters.emplace_back("n", std::to_string(a.n));
            rec.theta_1 = pair.theta_1;
            rec.theta_inv = pair.theta_a1;
            push_verdict(rec, decide_cyclic(a.n, pair));
        } else if (a.group == "elem2") {
            require(a.n > 0, "n");
            require(!a.theta1.empty(), "theta1");
            std::map<unsigned, Int> values;
            for (const std::string& s : a.theta_inv) {
                auto [name, value] = parse_element_value(s, "");
                values[parse_elem2_mask(name, a.n)] = value;
            }
            Int t1(a.theta1);
            rec.parameters.emplace_back("rank", std::to_string(a.n));
            rec.theta_1 = t1;
            Verdict v = decide_elementary_abelian(a.n, values, t1);
            rec.theta_inv = values.at(1);
            push_verdict(rec, v);
        } else {
            // the finite exceptional cases, keyed by their element names
            static const std::map<std::string, std::pair<ExceptionalGroup, std::string>> cases = {
                {"gl2f2", {ExceptionalGroup::Gl2F2, "u"}},
                {"gl2f3", {ExceptionalGroup::Gl2F3, "a1"}},
                {"gl2f4", {ExceptionalGroup::Gl2F4, "(12)(34)"}},
                {"gl3f2", {ExceptionalGroup::Gl3F2, "u1"}},
                {"gl4f2", {ExceptionalGroup::Gl4F2, "(12)(34)"}},
                {"gl3f4", {ExceptionalGroup::Gl3F4, ""}},
            };
            auto it = cases.find(a.group);
            if (it == cases.end()) throw InvariantViolation("unknown group \"" + a.group + "\"");
            require(!a.theta1.empty(), "theta1");
            ExceptionalValues v;
            v.theta_1 = Int(a.theta1);
            for (const std::string& s : a.theta_inv) {
                auto [name, value] = parse_element_value(s, it->second.second);
                v.theta[name] = value;
            }
            rec.theta_1 = v.theta_1;
            Verdict verdict = decide_exceptional(it->second.first, v);
            rec.theta_inv = v.theta.count(it->second.second) ? v.theta.at(it->second.second) : v.theta_1;
            push_verdict(rec, verdict);
        }
    } catch (const ExceptionalCase& e) {
        err << "error: " << e.what() << "\n";
        if (a.n == 3 && a.q == 4)
            err << "hint: GL_3(F_4) is the open case; no spinoriality criterion is available\n";
        else
            err << "hint: use --group gl2f2 / gl2f3 / gl2f4 / gl3f2 / gl4f2 with the case's character values\n";
        return 2;
    }
    RecordWriter writer(out, parse_format(a.format));
    writer.write(rec);
    writer.finish();
    return 0;
}

int cmd_catalogue(unsigned long qv, const std::string& format, std::ostream& out) {
    if (qv < 3 || qv > 10000)
        throw InvariantViolation("--q must be an odd prime power in [3, 10000]");
    PrimePower q = parse_prime_power(qv);
    RecordWriter writer(out, parse_format(format));
    enumerate_oirs_gl2(q, [&](const OirDescriptor& d) {
        CharPair pair = char_pair(d);
        Verdict v = decide_gl_congruence(q, pair);
        VerdictRecord rec;
        rec.group = "gl2";
        rec.family = family_name(d.family);
        rec.parameters.emplace_back("q", std::to_string(qv));
        switch (d.family) {
            case OirFamily::Linear:
            case OirFamily::SteinbergTwist:
            case OirFamily::DoubledLinear:
            case OirFamily::DoubledSteinbergTwist:
                rec.parameters.emplace_back("chi", std::to_string(d.a));
                break;
            case OirFamily::PrincipalSeries:
            case OirFamily::DoubledPrincipalSeries:
                rec.parameters.emplace_back("chi1", std::to_string(d.a));
                rec.parameters.emplace_back("chi2", std::to_string(d.b));
                break;
            case OirFamily::Cuspidal:
            case OirFamily::DoubledCuspidal:
                rec.parameters.emplace_back("theta", std::to_string(d.a));
                break;
        }
        rec.theta_1 = pair.theta_1;
        rec.theta_inv = pair.theta_a1;
        push_verdict(rec, v);
        writer.write(rec);
    });
    writer.finish();
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& data_dir,
               std::ostream& out) {
    SuiteReport report = run_suite(suite, seed, data_dir);
    for (const CheckOutcome& c : report.checks) {
        out << c.name << ": " << c.checked << " checked, " << (c.pass ? "ok" : "FAIL");
        if (!c.pass) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << (report.pass() ? "PASS" : "FAIL") << "\n";
    return report.pass() ? 0 : 1;
}

OrthRep rep_from_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open generator file " + path);
    nlohmann::json j;
    in >> j;
    std::string kind = j.value("kind", std::string("matrix"));
    // the oracle refuses groups beyond order 64, so stop the closure there
    const std::size_t closure_cap = 65;
    if (kind == "perm") {
        unsigned degree = j.at("degree").get<unsigned>();
        std::vector<Perm> gens;
        for (const auto& g : j.at("generators")) {
            Perm p = g.get<Perm>();
            if (p.size() != degree) throw InvariantViolation("generator degree mismatch");
            gens.push_back(std::move(p));
        }
        auto closed = perm_group_closure(gens, closure_cap);
        return perm_matrix_rep(closed.group, closed.elements, path);
    }
    if (kind != "matrix") throw InvariantViolation("generator file kind must be perm or matrix");
    unsigned dim = j.at("dim").get<unsigned>();
    auto read_matrix = [&](const nlohmann::json& rows) {
        RatMat m(dim, dim);
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned k = 0; k < dim; ++k) {
                Rat v(rows.at(i).at(k).get<std::string>());
                v.canonicalize();
                m.at(i, k) = v;
            }
        return m;
    };
    std::vector<RatMat> gens;
    for (const auto& g : j.at("generators")) gens.push_back(read_matrix(g));
    auto closed = ratmat_group_closure(gens, closure_cap);
    OrthRep rep;
    rep.group = closed.group;
    rep.dim = dim;
    rep.form = j.contains("form") ? read_matrix(j.at("form")) : RatMat::identity(dim);
    rep.matrix = std::move(closed.elements);
    rep.name = path;
    return rep;
}

int cmd_oracle(const std::string& rep_name, const std::string& gens_path, const std::string& format,
               std::ostream& out) {
    VerdictRecord rec;
    OrthRep rep;
    const CuratedRep* curated = nullptr;
    if (!rep_name.empty()) {
        curated = find_curated(rep_name);
        if (!curated) {
            std::string known;
            for (const CuratedRep& r : curated_reps()) known += " " + r.name;
            throw InvariantViolation("unknown curated rep \"" + rep_name + "\"; available:" + known);
        }
        rep = curated->build();
        rec.group = curated->group_tag;
        rec.family = curated->family;
        rec.parameters.emplace_back("rep", rep_name);
    } else {
        rep = rep_from_generator_file(gens_path);
        rec.group = "file";
        rec.family = "generators";
        rec.parameters.emplace_back("path", gens_path);
    }
    validate_orth_rep(rep);
    bool oracle = oracle_decide(rep).spinorial;
    rec.parameters.emplace_back("oracle", oracle ? "spinorial" : "aspinorial");
    rec.theta_1 = Int(static_cast<unsigned long>(rep.dim));
    if (curated) {
        Verdict v = curated->rule(rep);
        rec.theta_inv = rec.theta_1 - 2 * v.m;
        push_verdict(rec, v);
        rec.parameters.emplace_back("agreement", v.spinorial == oracle ? "true" : "false");
    } else {
        rec.theta_inv = rec.theta_1;
        rec.m = 0;
        rec.rule = rule_name(Rule::OracleOnly);
        rec.spinorial = oracle;
    }
    RecordWriter writer(out, parse_format(format));
    writer.write(rec);
    writer.finish();
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spinoriality of orthogonal representations of finite groups"};
    app.require_subcommand(1);

    DecideArgs d;
    CLI::App* decide = app.add_subcommand("decide", "closed-form verdict from character values");
    decide->add_option("--group", d.group, "gl, gsp, cyclic, elem2, gl2f2, gl2f3, gl2f4, gl3f2, gl4f2")
        ->required();
    decide->add_option("--n", d.n, "rank (GL/GSp), cyclic order, or elementary abelian rank");
    decide->add_option("--q", d.q, "prime power");
    decide->add_option("--theta1", d.theta1, "character value at the identity (dimension)");
    decide->add_option("--theta-a1", d.theta_a1, "character value at a_1");
    decide->add_option("--theta-inv", d.theta_inv,
                       "character value at a named involution (element=value, repeatable)");
    decide->add_option("--format", d.format, "json, csv or md");

    unsigned long cat_q = 0;
    std::string cat_format = "json";
    CLI::App* catalogue = app.add_subcommand("catalogue", "all GL_2(F_q) OIRs with verdicts");
    catalogue->add_option("--q", cat_q, "odd prime power, 3 <= q <= 10^4")->required();
    catalogue->add_option("--format", cat_format, "json, csv or md");

    std::string suite = "all";
    std::uint64_t seed = 20240901;
    std::string data_dir = default_data_dir();
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "catalogue, series, oracle, properties or all");
    verify->add_option("--seed", seed, "seed for the randomized property checks");
    verify->add_option("--data-dir", data_dir, "directory holding the fixture files");

    std::string rep_name, gens_path;
    std::string oracle_format = "json";
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force Clifford/cocycle verdict");
    CLI::Option* rep_opt = oracle->add_option("--rep", rep_name, "curated representation name");
    oracle->add_option("--gens", gens_path, "JSON generator file (perm or matrix kind)")
        ->excludes(rep_opt);
    oracle->add_option("--format", oracle_format, "json, csv or md");

    std::vector<std::string> argv_like(args.rbegin(), args.rend());
    try {
        app.parse(argv_like);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (decide->parsed()) return cmd_decide(d, out, err);
        if (catalogue->parsed()) return cmd_catalogue(cat_q, cat_format, out);
        if (verify->parsed()) return cmd_verify(suite, seed, data_dir, out);
        if (oracle->parsed()) {
            if (rep_name.empty() && gens_path.empty())
                throw InvariantViolation("oracle needs --rep or --gens");
            return cmd_oracle(rep_name, gens_path, oracle_format, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";  // bad integers, malformed JSON
        return 2;
    }
    return 2;
}

}  // namespace spinor
