#include "spinor/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace spinor {

const char* family_name(OirFamily f) {
    switch (f) {
        case OirFamily::Linear: return "linear";
        case OirFamily::PrincipalSeries: return "principal_series";
        case OirFamily::SteinbergTwist: return "steinberg";
        case OirFamily::Cuspidal: return "cuspidal";
        case OirFamily::DoubledLinear: return "s_linear";
        case OirFamily::DoubledPrincipalSeries: return "s_principal_series";
        case OirFamily::DoubledSteinbergTwist: return "s_steinberg";
        case OirFamily::DoubledCuspidal: return "s_cuspidal";
    }
    return "?";
}

std::string OirDescriptor::describe() const {
    std::ostringstream os;
    os << family_name(family) << "(q=" << q.q;
    switch (family) {
        case OirFamily::Linear:
        case OirFamily::SteinbergTwist:
        case OirFamily::DoubledLinear:
        case OirFamily::DoubledSteinbergTwist:
            os << ", chi=" << a;
            break;
        case OirFamily::PrincipalSeries:
        case OirFamily::DoubledPrincipalSeries:
            os << ", chi1=" << a << ", chi2=" << b;
            break;
        case OirFamily::Cuspidal:
        case OirFamily::DoubledCuspidal:
            os << ", theta=" << a;
            break;
    }
    os << ")";
    return os.str();
}

namespace {

unsigned long inv_index(unsigned long i, unsigned long modulus) {
    return i == 0 ? 0 : modulus - i;
}

bool quadratic(unsigned long i, unsigned long modulus) {
    return (unsigned __int128)i * 2 % modulus == 0;
}

unsigned long tau_index(unsigned long i, const PrimePower& q) {
    unsigned long m = q.q * q.q - 1;
    return static_cast<unsigned long>((unsigned __int128)i * q.q % m);
}

unsigned long cuspidal_orbit_min(unsigned long i, const PrimePower& q) {
    return std::min(i, tau_index(i, q));
}

unsigned long doubled_cuspidal_orbit_min(unsigned long i, const PrimePower& q) {
    unsigned long m = q.q * q.q - 1;
    unsigned long t = tau_index(i, q);
    return std::min({i, t, inv_index(i, m), inv_index(t, m)});
}

std::pair<unsigned long, unsigned long> sorted_pair(unsigned long x, unsigned long y) {
    return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

bool pair_inversion_symmetric(unsigned long x, unsigned long y, unsigned long modulus) {
    return sorted_pair(x, y) == sorted_pair(inv_index(x, modulus), inv_index(y, modulus));
}

void require_odd(const PrimePower& q) {
    if (q.is_even()) throw EvenQ("q = " + std::to_string(q.q) + " is even; the catalogue assumes q odd");
}

}  // namespace

void validate(const OirDescriptor& d) {
    require_odd(d.q);
    unsigned long qm = d.q.q - 1;           // |F_q^x|
    unsigned long q2m = d.q.q * d.q.q - 1;  // |F_{q^2}^x|
    auto fail = [&](const char* why) {
        throw InvariantViolation(d.describe() + ": " + why);
    };
    switch (d.family) {
        case OirFamily::Linear:
        case OirFamily::SteinbergTwist:
            if (d.a >= qm || !quadratic(d.a, qm)) fail("chi must be quadratic");
            break;
        case OirFamily::PrincipalSeries:
            if (d.a >= qm || d.b >= qm || d.a >= d.b) fail("need chi1 < chi2 in canonical form");
            if (!pair_inversion_symmetric(d.a, d.b, qm)) fail("multiset {chi, chi'} must be inversion-symmetric");
            break;
        case OirFamily::Cuspidal: {
            RegularChar th{d.q, d.a};
            if (d.a >= q2m || !is_regular(th)) fail("theta must be regular");
            if (!is_orthogonal_theta(th)) fail("theta must satisfy theta^tau = theta^{-1}");
            if (d.a != cuspidal_orbit_min(d.a, d.q)) fail("theta not the tau-orbit representative");
            break;
        }
        case OirFamily::DoubledLinear:
        case OirFamily::DoubledSteinbergTwist:
            if (d.a >= qm || quadratic(d.a, qm)) fail("chi must not be quadratic");
            if (d.a > inv_index(d.a, qm)) fail("chi not canonical under inversion");
            break;
        case OirFamily::DoubledPrincipalSeries:
            if (d.a >= qm || d.b >= qm || d.a >= d.b) fail("need chi1 < chi2 in canonical form");
            if (pair_inversion_symmetric(d.a, d.b, qm)) fail("pi(chi1, chi2) is orthogonal, not doubled");
            if (sorted_pair(inv_index(d.a, qm), inv_index(d.b, qm)) < std::make_pair(d.a, d.b))
                fail("pair not canonical under simultaneous inversion");
            break;
        case OirFamily::DoubledCuspidal: {
            RegularChar th{d.q, d.a};
            if (d.a >= q2m || !is_regular(th)) fail("theta must be regular");
            if (is_orthogonal_theta(th)) fail("pi_theta is orthogonal, not doubled");
            if (d.a != doubled_cuspidal_orbit_min(d.a, d.q)) fail("theta not the orbit representative");
            break;
        }
    }
}

void enumerate_oirs_gl2(const PrimePower& q, const std::function<void(const OirDescriptor&)>& emit) {
    require_odd(q);
    unsigned long qm = q.q - 1;
    unsigned long q2m = q.q * q.q - 1;
    unsigned long half = qm / 2;

    // linear characters: the two quadratic ones (trivial and sgn)
    emit({OirFamily::Linear, q, 0});
    emit({OirFamily::Linear, q, half});

    // orthogonal principal series: pi(1, sgn), then pi(chi, chi^{-1}) for
    // non-quadratic chi up to inversion
    emit({OirFamily::PrincipalSeries, q, 0, half});
    for (unsigned long i = 1; i < half; ++i)
        emit({OirFamily::PrincipalSeries, q, i, qm - i});

    emit({OirFamily::SteinbergTwist, q, 0});
    emit({OirFamily::SteinbergTwist, q, half});

    for (unsigned long i = 1; i < q2m; ++i) {
        RegularChar th{q, i};
        if (!is_regular(th)) continue;
        if (!is_orthogonal_theta(th)) continue;
        if (i != cuspidal_orbit_min(i, q)) continue;
        emit({OirFamily::Cuspidal, q, i});
    }

    for (unsigned long i = 1; i < half; ++i)  // non-quadratic, canonical under inversion
        emit({OirFamily::DoubledLinear, q, i});

    for (unsigned long i = 0; i < qm; ++i) {
        for (unsigned long j = i + 1; j < qm; ++j) {
            if (pair_inversion_symmetric(i, j, qm)) continue;
            if (sorted_pair(inv_index(i, qm), inv_index(j, qm)) < std::make_pair(i, j)) continue;
            emit({OirFamily::DoubledPrincipalSeries, q, i, j});
        }
    }

    for (unsigned long i = 1; i < half; ++i)
        emit({OirFamily::DoubledSteinbergTwist, q, i});

    for (unsigned long i = 1; i < q2m; ++i) {
        RegularChar th{q, i};
        if (!is_regular(th)) continue;
        if (is_orthogonal_theta(th)) continue;
        if (i != doubled_cuspidal_orbit_min(i, q)) continue;
        emit({OirFamily::DoubledCuspidal, q, i});
    }
}

std::vector<OirDescriptor> enumerate_oirs_gl2(const PrimePower& q) {
    std::vector<OirDescriptor> out;
    enumerate_oirs_gl2(q, [&](const OirDescriptor& d) { out.push_back(d); });
    return out;
}

CharPair char_pair(const OirDescriptor& d) {
    validate(d);
    unsigned long qm = d.q.q - 1;
    auto chi_at_minus_one = [&](unsigned long i) { return eval_at_minus_one(LinearChar(qm, i)); };
    Int t1, ta1;
    switch (d.family) {
        case OirFamily::Linear:
            t1 = 1;
            ta1 = chi_at_minus_one(d.a);
            break;
        case OirFamily::PrincipalSeries:
            t1 = Int(d.q.q) + 1;
            ta1 = chi_at_minus_one(d.a) + chi_at_minus_one(d.b);
            break;
        case OirFamily::SteinbergTwist:
            t1 = d.q.q;
            ta1 = chi_at_minus_one(d.a);
            break;
        case OirFamily::Cuspidal:
            t1 = Int(d.q.q) - 1;
            ta1 = 0;
            break;
        case OirFamily::DoubledLinear:
            t1 = 2;
            ta1 = 2 * chi_at_minus_one(d.a);
            break;
        case OirFamily::DoubledPrincipalSeries:
            t1 = 2 * (Int(d.q.q) + 1);
            ta1 = 2 * (chi_at_minus_one(d.a) + chi_at_minus_one(d.b));
            break;
        case OirFamily::DoubledSteinbergTwist:
            t1 = 2 * Int(d.q.q);
            ta1 = 2 * chi_at_minus_one(d.a);
            break;
        case OirFamily::DoubledCuspidal:
            t1 = 2 * (Int(d.q.q) - 1);
            ta1 = 0;
            break;
    }
    return CharPair(t1, ta1, d.describe());
}

CharPair char_pair_gl_n(const GlnSteinberg& s) {
    if (s.n < 3) throw BadRank("Steinberg pair formulas here require n >= 3");
    require_odd(s.q);
    Int qi(s.q.q);
    Int t1, ta1;
    mpz_pow_ui(t1.get_mpz_t(), qi.get_mpz_t(), s.n * (s.n - 1) / 2);
    mpz_pow_ui(ta1.get_mpz_t(), qi.get_mpz_t(), (s.n - 1) * (s.n - 2) / 2);
    return CharPair(t1, ta1, "steinberg(n=" + std::to_string(s.n) + ", q=" + std::to_string(s.q.q) + ")");
}

CharPair char_pair_gl_n(const GlnPrincipalSeries& ps) {
    if (ps.n < 3) throw BadRank("principal series pair formulas here require n >= 3");
    require_odd(ps.q);
    if (ps.chi_indices.size() != ps.n)
        throw InvariantViolation("principal series of GL_n needs exactly n characters");
    std::vector<LinearChar> chars;
    chars.reserve(ps.n);
    for (unsigned long i : ps.chi_indices) chars.emplace_back(ps.q.q - 1, i);
    if (!is_orthogonal_principal_series(chars))
        throw NotOrthogonal("character multiset is not inversion-symmetric");
    Int sum = 0;
    for (const LinearChar& c : chars) sum += eval_at_minus_one(c);
    return CharPair(q_factorial(ps.n, ps.q), q_factorial(ps.n - 1, ps.q) * sum,
                    "principal_series(n=" + std::to_string(ps.n) + ", q=" + std::to_string(ps.q.q) + ")");
}

bool is_regular_gl_n(const GlnCuspidal& c) {
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), c.q.q, c.n);
    modulus -= 1;
    Int idx = mod_floor(c.theta_index, modulus);
    Int qpow = 1;
    for (unsigned j = 1; j < c.n; ++j) {
        qpow *= c.q.q;
        if ((idx * (qpow - 1)) % modulus == 0) return false;  // theta^{q^j} = theta
    }
    return true;
}

CharPair char_pair_gl_n(const GlnCuspidal& c) {
    if (c.n < 3) throw BadRank("cuspidal pair formulas here require n >= 3");
    require_odd(c.q);
    if (!is_regular_gl_n(c)) throw NotRegular("theta is fixed by a Galois translate");
    if (c.n % 2 != 0)
        throw NotOrthogonal("no order-2 Galois symmetry for odd n: pi_theta is never orthogonal");
    Int modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), c.q.q, c.n);
    modulus -= 1;
    Int idx = mod_floor(c.theta_index, modulus);
    Int qh;
    mpz_ui_pow_ui(qh.get_mpz_t(), c.q.q, c.n / 2);
    if ((idx * (qh + 1)) % modulus != 0)
        throw NotOrthogonal("theta does not satisfy theta o tau = theta^{-1}");
    return cuspidal_family_pair(c.n, c.q);
}

CharPair cuspidal_family_pair(unsigned n, const PrimePower& q) {
    if (n < 3) throw BadRank("cuspidal pair formulas here require n >= 3");
    return CharPair(psi(n - 1, q), 0,
                    "cuspidal(n=" + std::to_string(n) + ", q=" + std::to_string(q.q) + ")");
}

bool is_orthogonal_principal_series(const std::vector<LinearChar>& chars) {
    if (chars.empty()) return true;
    unsigned long modulus = chars.front().modulus;
    std::vector<unsigned long> idx, neg;
    idx.reserve(chars.size());
    neg.reserve(chars.size());
    for (const LinearChar& c : chars) {
        if (c.modulus != modulus)
            throw MixedModulus("principal series characters must share a modulus");
        idx.push_back(c.index);
        neg.push_back(c.inverse().index);
    }
    std::sort(idx.begin(), idx.end());
    std::sort(neg.begin(), neg.end());
    return idx == neg;
}

}  // namespace spinor
