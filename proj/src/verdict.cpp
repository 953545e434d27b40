#include "spinor/verdict.hpp"

#include "spinor/errors.hpp"

namespace spinor {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::CyclicOdd: return "cyclic_odd";
        case Rule::Cyclic0Mod4: return "cyclic_0_mod_4";
        case Rule::Cyclic2Mod4: return "cyclic_2_mod_4";
        case Rule::ElementaryAbelian: return "elementary_abelian";
        case Rule::GlEvenQ: return "gl_even_q";
        case Rule::Gl1Mod4: return "gl_q_1_mod_4";
        case Rule::Gl3Mod4: return "gl_q_3_mod_4";
        case Rule::GspEvenQ: return "gsp_even_q";
        case Rule::Gsp1Mod4: return "gsp_q_1_mod_4";
        case Rule::Gsp3Mod4: return "gsp_q_3_mod_4";
        case Rule::Gl2F2: return "gl2_f2";
        case Rule::Gl2F3: return "gl2_f3";
        case Rule::Gl2F4: return "gl2_f4";
        case Rule::Gl3F2: return "gl3_f2";
        case Rule::Gl4F2: return "gl4_f2";
        case Rule::OracleOnly: return "oracle";
    }
    return "?";
}

const char* exceptional_group_name(ExceptionalGroup g) {
    switch (g) {
        case ExceptionalGroup::Gl2F2: return "gl2f2";
        case ExceptionalGroup::Gl2F3: return "gl2f3";
        case ExceptionalGroup::Gl2F4: return "gl2f4";
        case ExceptionalGroup::Gl3F2: return "gl3f2";
        case ExceptionalGroup::Gl4F2: return "gl4f2";
        case ExceptionalGroup::Gl3F4: return "gl3f4";
    }
    return "?";
}

bool involution_lift_rule(const Int& m) {
    if (m < 0) throw InvariantViolation("multiplicity m must be nonnegative");
    return mod4_is_0_or_3(m);
}

Verdict decide_cyclic(unsigned long n, const CharPair& pair) {
    Verdict v;
    v.m = pair.m();
    if (n % 2 == 1) {
        v.rule = Rule::CyclicOdd;
        v.residue_class = "n odd";
        v.spinorial = true;
    } else if (n % 4 == 0) {
        v.rule = Rule::Cyclic0Mod4;
        v.residue_class = "n = 0 (mod 4)";
        v.spinorial = residue_mod4(v.m) == 0;
    } else {
        v.rule = Rule::Cyclic2Mod4;
        v.residue_class = "n = 2 (mod 4)";
        v.spinorial = mod4_is_0_or_3(v.m);
    }
    return v;
}

Verdict decide_elementary_abelian(unsigned rank, const std::map<unsigned, Int>& theta_by_element,
                                  const Int& theta_1) {
    Verdict v;
    v.rule = Rule::ElementaryAbelian;
    v.residue_class = "rank " + std::to_string(rank);
    v.spinorial = true;
    unsigned count = (1u << rank) - 1;
    for (unsigned e = 1; e <= count; ++e)
        if (!theta_by_element.count(e))
            throw MissingElement("no character value for element mask " + std::to_string(e));
    for (unsigned e = 1; e <= count; ++e) {
        Int me = CharPair(theta_1, theta_by_element.at(e)).m();
        if (e == 1) v.m = me;
        if (!mod4_is_0_or_3(me)) {
            v.spinorial = false;
            v.m = me;
            v.failing_element = "e" + std::to_string(e);
            break;
        }
    }
    return v;
}

bool is_gl_exceptional(unsigned n, unsigned long q) {
    return (n == 2 && (q == 2 || q == 3 || q == 4)) || (n == 3 && (q == 2 || q == 4)) ||
           (n == 4 && q == 2);
}

namespace {

Verdict three_case_rule(const PrimePower& q, const CharPair& pair, Rule even_rule, Rule one_rule,
                        Rule three_rule) {
    Verdict v;
    v.m = pair.m();
    if (q.is_even()) {
        v.rule = even_rule;
        v.residue_class = "q even";
        v.spinorial = true;
    } else if (q.mod4() == 1) {
        v.rule = one_rule;
        v.residue_class = "q = 1 (mod 4)";
        v.spinorial = residue_mod4(v.m) == 0;
    } else {
        v.rule = three_rule;
        v.residue_class = "q = 3 (mod 4)";
        v.spinorial = mod4_is_0_or_3(v.m);
    }
    return v;
}

}  // namespace

Verdict decide_gl(unsigned n, const PrimePower& q, const CharPair& pair) {
    if (is_gl_exceptional(n, q.q))
        throw ExceptionalCase("(n, q) = (" + std::to_string(n) + ", " + std::to_string(q.q) +
                              ") is outside the generic GL rule; use the dedicated criterion");
    return three_case_rule(q, pair, Rule::GlEvenQ, Rule::Gl1Mod4, Rule::Gl3Mod4);
}

Verdict decide_gl_congruence(const PrimePower& q, const CharPair& pair) {
    return three_case_rule(q, pair, Rule::GlEvenQ, Rule::Gl1Mod4, Rule::Gl3Mod4);
}

Verdict decide_gsp(unsigned n, const PrimePower& q, const CharPair& pair) {
    (void)n;  // the exceptional set is unenumerated; the caller asserts validity
    return three_case_rule(q, pair, Rule::GspEvenQ, Rule::Gsp1Mod4, Rule::Gsp3Mod4);
}

namespace {

const Int& required(const ExceptionalValues& v, const std::string& name) {
    auto it = v.theta.find(name);
    if (it == v.theta.end())
        throw MissingElement("missing character value at \"" + name + "\"");
    return it->second;
}

/// All m_e ≡ 0 or 3 mod 4 over the named elements, in order.
Verdict conjunction_rule(Rule rule, const ExceptionalValues& v,
                         std::initializer_list<const char*> elements) {
    Verdict out;
    out.rule = rule;
    out.spinorial = true;
    bool first = true;
    for (const char* name : elements) {
        Int me = CharPair(v.theta_1, required(v, name)).m();
        if (first) {
            out.m = me;
            first = false;
        }
        if (!mod4_is_0_or_3(me)) {
            out.spinorial = false;
            out.m = me;
            out.failing_element = name;
            break;
        }
    }
    out.residue_class = "m = " + std::to_string(residue_mod4(out.m)) + " (mod 4)";
    return out;
}

/// Theta(1) ≡ Theta((12)(34)) mod 8, i.e. m ≡ 0 mod 4.
Verdict mod8_rule(Rule rule, const ExceptionalValues& v) {
    Verdict out;
    out.rule = rule;
    out.m = CharPair(v.theta_1, required(v, "(12)(34)")).m();
    out.spinorial = residue_mod4(out.m) == 0;
    out.residue_class = "theta difference = " + to_decimal(mod_floor(2 * out.m, 8)) + " (mod 8)";
    if (!out.spinorial) out.failing_element = "(12)(34)";
    return out;
}

}  // namespace

Verdict decide_exceptional(ExceptionalGroup g, const ExceptionalValues& v) {
    switch (g) {
        case ExceptionalGroup::Gl2F2:
            return conjunction_rule(Rule::Gl2F2, v, {"u"});
        case ExceptionalGroup::Gl2F3:
            return conjunction_rule(Rule::Gl2F3, v, {"a1", "minus1"});
        case ExceptionalGroup::Gl2F4:
            return mod8_rule(Rule::Gl2F4, v);
        case ExceptionalGroup::Gl3F2:
            return conjunction_rule(Rule::Gl3F2, v, {"u1", "u2"});
        case ExceptionalGroup::Gl4F2:
            return mod8_rule(Rule::Gl4F2, v);
        case ExceptionalGroup::Gl3F4:
            throw Gl3F4Unsupported("no spinoriality criterion is known for GL_3(F_4)");
    }
    throw InvariantViolation("unknown exceptional group");
}

}  // namespace spinor
