#include "spinor/clifford.hpp"

#include <algorithm>
#include <bit>
#include <memory>

#include "spinor/errors.hpp"

namespace spinor {

CliffordElem CliffordElem::scalar(const Rat& v) {
    CliffordElem e;
    if (v != 0) e.t_.emplace_back(0, v);
    return e;
}

CliffordElem CliffordElem::monomial(std::uint32_t mask, const Rat& coeff) {
    CliffordElem e;
    if (coeff != 0) e.t_.emplace_back(mask, coeff);
    return e;
}

CliffordElem CliffordElem::from_raw(Terms raw) {
    CliffordElem e;
    e.assign_normalized(std::move(raw));
    return e;
}

void CliffordElem::assign_normalized(Terms&& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < raw.size()) {
        std::uint32_t mask = raw[i].first;
        Rat sum = std::move(raw[i].second);
        for (++i; i < raw.size() && raw[i].first == mask; ++i) sum += raw[i].second;
        if (sum != 0) {
            raw[out].first = mask;
            raw[out].second = std::move(sum);
            ++out;
        }
    }
    raw.resize(out);
    t_ = std::move(raw);
}

Rat CliffordElem::scalar_part() const {
    if (!t_.empty() && t_.front().first == 0) return t_.front().second;
    return Rat(0);
}

void CliffordElem::add_term(std::uint32_t mask, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), mask,
                               [](const Term& t, std::uint32_t m) { return t.first < m; });
    if (it != t_.end() && it->first == mask) {
        it->second += coeff;
        if (it->second == 0) t_.erase(it);
    } else {
        t_.emplace(it, mask, coeff);
    }
}

void CliffordElem::add(const CliffordElem& other) {
    for (const Term& t : other.t_) add_term(t.first, t.second);
}

void CliffordElem::scale(const Rat& f) {
    if (f == 0) {
        t_.clear();
        return;
    }
    for (Term& t : t_) t.second *= f;
}

CliffordAlgebra::CliffordAlgebra(RatMat form) : form_(std::move(form)), dim_(form_.rows()) {
    if (form_.rows() != form_.cols()) throw DimensionMismatch("Clifford form must be square");
    if (dim_ > 16) throw CapExceeded("Clifford algebra dimension capped at 16");
    diagonal_ = form_.is_diagonal();
    unit_diag_.resize(dim_);
    for (unsigned j = 0; j < dim_; ++j) unit_diag_[j] = form_.at(j, j) == 1;
}

CliffordElem CliffordAlgebra::vector(const std::vector<Rat>& coords) const {
    if (coords.size() != dim_) throw DimensionMismatch("vector length does not match the algebra");
    CliffordElem::Terms raw;
    for (unsigned j = 0; j < dim_; ++j)
        if (coords[j] != 0) raw.emplace_back(1u << j, coords[j]);
    return CliffordElem::from_raw(std::move(raw));
}

Rat CliffordAlgebra::vector_norm(const std::vector<Rat>& coords) const {
    return bilinear(form_, coords, coords);
}

// e_mask * e_j, appended to raw with `append` OR-ed onto every output mask.
// `append` holds generators already known to sit above everything still
// moving.
void CliffordAlgebra::mul_monomial_gen(std::uint32_t mask, const Rat& coeff, unsigned j,
                                       std::uint32_t append, CliffordElem::Terms& raw) const {
    std::uint32_t jbit = 1u << j;
    if (diagonal_) {
        // only e_j itself multiplies nontrivially; everything above j just
        // anticommutes past it
        std::uint32_t above = mask & ~(jbit | (jbit - 1));
        bool neg = std::popcount(above) % 2 != 0;
        if (mask & jbit) {
            std::uint32_t out = (mask ^ jbit) | append;
            if (unit_diag_[j]) {
                raw.emplace_back(out, neg ? coeff : Rat(-coeff));  // times -1
            } else {
                Rat c = coeff * form_.at(j, j);
                raw.emplace_back(out, neg ? std::move(c) : Rat(-c));
            }
        } else {
            raw.emplace_back(mask | jbit | append, neg ? Rat(-coeff) : coeff);
        }
        return;
    }
    if (mask == 0 || (mask >> 1) < jbit) {  // top factor at or below j
        if (mask & jbit) {
            raw.emplace_back((mask ^ jbit) | append, coeff * -form_.at(j, j));
        } else {
            raw.emplace_back(mask | jbit | append, coeff);
        }
        return;
    }
    unsigned t = 31u - static_cast<unsigned>(std::countl_zero(mask));
    std::uint32_t rest = mask ^ (1u << t);
    // e_rest e_t e_j = -(e_rest e_j) e_t - 2 Phi(t, j) e_rest
    mul_monomial_gen(rest, -coeff, j, append | (1u << t), raw);
    const Rat& cross = form_.at(t, j);
    if (cross != 0) raw.emplace_back(rest | append, coeff * -2 * cross);
}

CliffordElem CliffordAlgebra::mul_vector(const CliffordElem& a, const std::vector<Rat>& coords) const {
    CliffordElem::Terms scratch;
    CliffordElem out = a;
    fold_vector(out, coords, scratch);
    return out;
}

void CliffordAlgebra::fold_vector(CliffordElem& a, const std::vector<Rat>& coords,
                                  CliffordElem::Terms& scratch) const {
    if (coords.size() != dim_) throw DimensionMismatch("vector length does not match the algebra");
    // monomial x single-coordinate vector: update in place, no allocation.
    // This is the whole story for diagonal +-1 representations, whose lifts
    // stay monomials throughout.
    if (diagonal_ && a.t_.size() == 1) {
        unsigned j = dim_, nnz = 0;
        for (unsigned i = 0; i < dim_ && nnz < 2; ++i)
            if (coords[i] != 0) {
                j = i;
                ++nnz;
            }
        if (nnz == 1) {
            auto& [mask, coeff] = a.t_.front();
            std::uint32_t jbit = 1u << j;
            unsigned negs = std::popcount(mask & ~(jbit | (jbit - 1)));
            coeff *= coords[j];
            if (mask & jbit) {
                if (!unit_diag_[j]) coeff *= form_.at(j, j);
                ++negs;  // e_j e_j = -Phi(j, j)
                mask ^= jbit;
            } else {
                mask |= jbit;
            }
            if (negs % 2 != 0) coeff = -coeff;
            return;
        }
        if (nnz == 0) {
            a.t_.clear();
            return;
        }
    }
    scratch.clear();
    scratch.reserve(a.term_count() * 2);
    for (unsigned j = 0; j < dim_; ++j) {
        if (coords[j] == 0) continue;
        if (coords[j] == 1) {
            for (const auto& [mask, c] : a.terms()) mul_monomial_gen(mask, c, j, 0, scratch);
        } else {
            for (const auto& [mask, c] : a.terms()) mul_monomial_gen(mask, c * coords[j], j, 0, scratch);
        }
    }
    CliffordElem::Terms recycled = a.take_terms();
    a.assign_normalized(std::move(scratch));
    scratch = std::move(recycled);
}

CliffordElem CliffordAlgebra::mul(const CliffordElem& a, const CliffordElem& b) const {
    CliffordElem out;
    for (const auto& [mb, cb] : b.terms()) {
        if (mb >= (1u << dim_)) throw DimensionMismatch("monomial outside the algebra");
        CliffordElem cur;
        {
            CliffordElem::Terms scaled(a.terms());
            for (auto& t : scaled) t.second *= cb;
            cur = CliffordElem::from_raw(std::move(scaled));
        }
        for (unsigned j = 0; j < dim_; ++j) {
            if (!(mb & (1u << j))) continue;
            CliffordElem::Terms raw;
            raw.reserve(cur.term_count() * 2);
            for (const auto& [m, c] : cur.terms()) mul_monomial_gen(m, c, j, 0, raw);
            cur = CliffordElem::from_raw(std::move(raw));
        }
        out.add(cur);
    }
    return out;
}

CliffordElem clifford_mul(const CliffordElem& a, const CliffordElem& b, const RatMat& form) {
    return CliffordAlgebra(form).mul(a, b);
}

namespace {

// sparse view of a coordinate vector
struct SparseVec {
    std::vector<std::pair<unsigned, Rat>> nz;
};

SparseVec sparsify(const std::vector<Rat>& v) {
    SparseVec s;
    for (unsigned i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.nz.emplace_back(i, v[i]);
    return s;
}

SparseVec apply_form(const RatMat& B, const SparseVec& v, bool identity_form) {
    if (identity_form) return v;
    SparseVec w;
    for (unsigned i = 0; i < B.rows(); ++i) {
        Rat acc;
        for (const auto& [k, vk] : v.nz) acc += B.at(i, k) * vk;
        if (acc != 0) w.nz.emplace_back(i, acc);
    }
    return w;
}

Rat dot_sparse(const SparseVec& a, const SparseVec& b) {
    Rat acc;
    for (const auto& [i, ai] : a.nz)
        for (const auto& [j, bj] : b.nz)
            if (i == j) acc += ai * bj;
    return acc;
}

// r_v M in place, given w = B v and nv = B(v, v)
void reflect_columns(RatMat& M, const SparseVec& v, const SparseVec& w, const Rat& nv) {
    std::size_t dim = M.cols();
    // mirrors of signed permutation matrices: r_{c e_p} negates row p, and
    // r_{c(e_a -+ e_b)} (equal diagonal form entries) swaps rows a and b,
    // negating both in the + case
    if (v.nz.size() == 1 && w.nz.size() == 1 && v.nz[0].first == w.nz[0].first) {
        std::size_t p = v.nz[0].first;
        for (std::size_t j = 0; j < dim; ++j) {
            Rat& x = M.at(p, j);
            if (x != 0) x = -x;
        }
        return;
    }
    if (v.nz.size() == 2 && w.nz.size() == 2 && v.nz[0].first == w.nz[0].first &&
        v.nz[1].first == w.nz[1].first && w.nz[0].second * v.nz[1].second == w.nz[1].second * v.nz[0].second) {
        const Rat& va = v.nz[0].second;
        const Rat& vb = v.nz[1].second;
        if (va == vb || va == -vb) {
            std::size_t a = v.nz[0].first, b = v.nz[1].first;
            bool negate = va == vb;
            for (std::size_t j = 0; j < dim; ++j) {
                std::swap(M.at(a, j), M.at(b, j));
                if (negate) {
                    Rat& xa = M.at(a, j);
                    Rat& xb = M.at(b, j);
                    if (xa != 0) xa = -xa;
                    if (xb != 0) xb = -xb;
                }
            }
            return;
        }
    }
    Rat t, f;
    for (std::size_t j = 0; j < dim; ++j) {
        t = 0;
        for (const auto& [k, wk] : w.nz) {
            const Rat& mkj = M.at(k, j);
            if (mkj != 0) t += wk * mkj;
        }
        if (t == 0) continue;
        f = 2 * t / nv;
        for (const auto& [k, vk] : v.nz) M.at(k, j) -= f * vk;
    }
}

}  // namespace

void apply_reflection(RatMat& M, const RatMat& B, const std::vector<Rat>& v) {
    SparseVec sv = sparsify(v);
    SparseVec w = apply_form(B, sv, B.is_identity());
    Rat nv = dot_sparse(sv, w);
    if (nv == 0) throw InvariantViolation("reflection in an isotropic vector");
    reflect_columns(M, sv, w, nv);
}

std::vector<std::vector<Rat>> reflection_decompose(const RatMat& M, const RatMat& B) {
    std::vector<unsigned> order(M.rows());
    for (unsigned i = 0; i < order.size(); ++i) order[i] = i;
    return reflection_decompose(M, B, order);
}

std::vector<std::vector<Rat>> reflection_decompose(const RatMat& M, const RatMat& B,
                                                   const std::vector<unsigned>& pivot_order) {
    std::size_t dim = M.rows();
    if (M.cols() != dim || B.rows() != dim || B.cols() != dim)
        throw DimensionMismatch("reflection_decompose needs square M, B of equal size");
    {
        std::vector<bool> seen(dim, false);
        for (unsigned p : pivot_order)
            if (p >= dim || seen[p]) throw InvariantViolation("pivot order must be a permutation");
            else seen[p] = true;
        if (pivot_order.size() != dim) throw InvariantViolation("pivot order must be a permutation");
    }
    bool id_form = B.is_identity();
    // per-dimension workspace: assigning into warmed-up mpq slots avoids
    // reallocating 2*dim^2 limbs on every decomposition
    static thread_local std::unique_ptr<RatMat> workspace[17];
    if (!workspace[dim]) workspace[dim] = std::make_unique<RatMat>(dim, dim);
    RatMat& cur = *workspace[dim];
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) cur.at(i, j) = M.at(i, j);
    std::vector<std::vector<Rat>> mirrors;
    for (unsigned pivot : pivot_order) {
        bool fixed = true;
        for (std::size_t i = 0; i < dim && fixed; ++i)
            fixed = cur.at(i, pivot) == (i == pivot ? 1 : 0);
        if (fixed) continue;
        std::vector<Rat> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = cur.at(i, pivot);
        v[pivot] -= 1;
        SparseVec sv = sparsify(v);
        SparseVec w = apply_form(B, sv, id_form);
        Rat nv = dot_sparse(sv, w);
        if (nv == 0)
            throw InvariantViolation("isotropic mirror vector: form is not positive definite");
        reflect_columns(cur, sv, w, nv);
        mirrors.push_back(std::move(v));
    }
    // r_{v_k} ... r_{v_1} M = 1 and reflections are involutions, so this is
    // exactly the statement M = r_{v_1} ... r_{v_k}
    if (!cur.is_identity())
        throw InvariantViolation("reflection product does not reproduce the input matrix");
    return mirrors;
}

CliffordElem lift_element(const RatMat& M, const RatMat& B) {
    CliffordAlgebra alg(B);
    CliffordElem out = CliffordElem::scalar(1);
    for (const auto& v : reflection_decompose(M, B)) out = alg.mul_vector(out, v);
    return out;
}

}  // namespace spinor
