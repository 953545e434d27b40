#pragma once

#include <map>
#include <string>

#include "spinor/char_pair.hpp"
#include "spinor/prime_power.hpp"

namespace spinor {

/// Which closed-form criterion produced a verdict. The tag determines the
/// congruence test applied to m.
enum class Rule {
    CyclicOdd,        // n odd: always spinorial
    Cyclic0Mod4,      // n ≡ 0 mod 4: m ≡ 0 mod 4
    Cyclic2Mod4,      // n ≡ 2 mod 4: m ≡ 0 or 3 mod 4
    ElementaryAbelian,// every m_e ≡ 0 or 3 mod 4
    GlEvenQ,          // q even: always spinorial
    Gl1Mod4,          // q ≡ 1 mod 4: m ≡ 0 mod 4
    Gl3Mod4,          // q ≡ 3 mod 4: m ≡ 0 or 3 mod 4
    GspEvenQ,
    Gsp1Mod4,
    Gsp3Mod4,
    Gl2F2,            // m at the unipotent ≡ 0 or 3 mod 4
    Gl2F3,            // m at diag(-1,1) and m' at -I both ≡ 0 or 3 mod 4
    Gl2F4,            // Theta(1) ≡ Theta((12)(34)) mod 8
    Gl3F2,            // m at u_1 and u_2 both ≡ 0 or 3 mod 4
    Gl4F2,            // Theta(1) ≡ Theta((12)(34)) mod 8
    OracleOnly,       // brute-force cocycle verdict, no closed form applied
};

const char* rule_name(Rule r);

/// Decision with audit trail: the multiplicity m that was tested, the rule
/// applied, and the congruence datum it branched on. For multi-involution
/// rules m is the value that settled the verdict (the first failing one, or
/// the first element's when all pass); failing_element names it.
struct Verdict {
    bool spinorial = false;
    Int m = 0;
    Rule rule = Rule::OracleOnly;
    std::string residue_class;
    std::string failing_element;
};

/// An involution with m eigenvalues -1 has a Pin lift squaring to
/// (-1)^{m(m+1)/2}; the lift squares to 1 iff m ≡ 0 or 3 mod 4.
bool involution_lift_rule(const Int& m);

/// Cyclic group C_n. For n even, `pair` must be measured at the order-2
/// element g^{n/2}; for n odd the pair is ignored (always spinorial).
Verdict decide_cyclic(unsigned long n, const CharPair& pair);

/// Elementary abelian 2-group of the given rank. theta_by_element maps each
/// nonidentity element, keyed by its generator bitmask in [1, 2^rank), to
/// Theta_pi(e); throws MissingElement if any is absent.
Verdict decide_elementary_abelian(unsigned rank, const std::map<unsigned, Int>& theta_by_element,
                                  const Int& theta_1);

/// GL_n(F_q) outside the exceptional set
/// S = {(2,2),(2,3),(2,4),(3,2),(3,4),(4,2)}; pair measured at
/// a_1 = diag(-1,1,...,1). Throws ExceptionalCase for (n,q) in S.
Verdict decide_gl(unsigned n, const PrimePower& q, const CharPair& pair);

/// The bare three-case congruence (q even / q mod 4) without the
/// exceptional-set gate. The GL_2 catalogue applies this for every odd q
/// including q = 3, where it agrees with the dedicated two-involution
/// criterion on all OIRs (the central element contributes m' ≡ 0 mod 4
/// throughout; cross-checked in the tests).
Verdict decide_gl_congruence(const PrimePower& q, const CharPair& pair);

bool is_gl_exceptional(unsigned n, unsigned long q);

/// GSp_{2n}(F_q) with a_1 = diag(-1 x n, 1 x n). Same three-case rule as
/// decide_gl; the finitely many exceptional (n, q) are not enumerated in
/// the source material, so validity is asserted by the caller.
Verdict decide_gsp(unsigned n, const PrimePower& q, const CharPair& pair);

enum class ExceptionalGroup { Gl2F2, Gl2F3, Gl2F4, Gl3F2, Gl4F2, Gl3F4 };

const char* exceptional_group_name(ExceptionalGroup g);

/// Character values required by the exceptional rules, keyed by element name:
///   Gl2F2: "u"          (the unipotent [[1,1],[0,1]])
///   Gl2F3: "a1", "minus1"  (diag(-1,1) and -I)
///   Gl2F4: "(12)(34)"   (the A_5 class under GL_2(F_4) ⊃ SL_2(F_4) ≅ A_5)
///   Gl3F2: "u1", "u2"   (the two order-2 unipotent classes)
///   Gl4F2: "(12)(34)"   (the A_8 class under GL_4(F_2) ≅ A_8)
struct ExceptionalValues {
    Int theta_1;
    std::map<std::string, Int> theta;
};

/// The per-case criteria for (n,q) in S. Throws Gl3F4Unsupported for
/// GL_3(F_4) (open case) and MissingElement when a required value is absent.
Verdict decide_exceptional(ExceptionalGroup g, const ExceptionalValues& v);

}  // namespace spinor
