#include "qhex/mvpoly.hpp"

#include <algorithm>
#include <set>

#include "qhex/errors.hpp"

namespace qhex {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw std::invalid_argument("variable names must be distinct");
}

std::size_t VarSet::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("unknown variable: " + name);
    return static_cast<std::size_t>(it - names_.begin());
}

MultiLaurent MultiLaurent::constant(const VarSet& vars, const BigRational& c) {
    MultiLaurent p(vars);
    if (c != 0) p.terms_.push_back({ExpVec(vars.size(), 0), c});
    return p;
}

MultiLaurent MultiLaurent::monomial(const VarSet& vars, const BigRational& c, const std::string& var,
                                    std::int64_t e) {
    MultiLaurent p(vars);
    if (c != 0) {
        ExpVec exps(vars.size(), 0);
        exps[vars.index_of(var)] = e;
        p.terms_.push_back({std::move(exps), c});
    }
    return p;
}

MultiLaurent MultiLaurent::from_terms(VarSet vars, std::vector<Term> terms) {
    std::map<ExpVec, BigRational> acc;
    for (auto& t : terms) {
        if (t.exps.size() != vars.size()) throw std::invalid_argument("exponent vector length mismatch");
        acc[t.exps] += t.coeff;
    }
    MultiLaurent p(std::move(vars));
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    return p;
}

MultiLaurent MultiLaurent::embed(const VarSet& single_var, const LaurentPoly& p) {
    if (single_var.size() != 1) throw std::invalid_argument("embed requires a one-variable VarSet");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) terms.push_back({ExpVec{t.exp}, t.coeff});
    return from_terms(single_var, std::move(terms));
}

void MultiLaurent::require_same_vars(const MultiLaurent& r) const {
    if (vars_ != r.vars_) throw std::invalid_argument("variable-set mismatch");
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent p(vars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.exps, -t.coeff});
    return p;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& r) const {
    require_same_vars(r);
    std::map<ExpVec, BigRational> acc;
    for (const auto& t : terms_) acc[t.exps] += t.coeff;
    for (const auto& t : r.terms_) acc[t.exps] += t.coeff;
    MultiLaurent p(vars_);
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    return p;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& r) const { return *this + (-r); }

MultiLaurent MultiLaurent::operator*(const MultiLaurent& r) const {
    require_same_vars(r);
    std::map<ExpVec, BigRational> acc;
    for (const auto& a : terms_) {
        for (const auto& b : r.terms_) {
            ExpVec e(vars_.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = exp_add(a.exps[i], b.exps[i]);
            acc[std::move(e)] += a.coeff * b.coeff;
        }
    }
    MultiLaurent p(vars_);
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    return p;
}

bool MultiLaurent::operator==(const MultiLaurent& r) const {
    if (vars_ != r.vars_ || terms_.size() != r.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != r.terms_[i].exps || terms_[i].coeff != r.terms_[i].coeff) return false;
    return true;
}

BigRational MultiLaurent::eval(const std::vector<BigRational>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point length mismatch");
    BigRational sum(0);
    for (const auto& t : terms_) {
        BigRational prod = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            std::int64_t e = t.exps[i];
            if (e == 0) continue;
            if (point[i] == 0) {
                if (e < 0) throw std::domain_error("zero assigned to variable with negative exponent");
                prod = 0;
                continue;
            }
            BigInt np, dp;
            unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
            mpz_pow_ui(np.get_mpz_t(), point[i].get_num().get_mpz_t(), ae);
            mpz_pow_ui(dp.get_mpz_t(), point[i].get_den().get_mpz_t(), ae);
            prod *= (e > 0) ? make_rational(np, dp) : make_rational(dp, np);
        }
        sum += prod;
    }
    return sum;
}

MultiLaurent mv_det(const std::vector<std::vector<MultiLaurent>>& m, std::size_t size_bound) {
    const std::size_t n = m.size();
    if (n > size_bound) throw SizeBoundExceeded("matrix size exceeds symbolic determinant bound");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    if (n == 0) throw std::invalid_argument("empty multivariate determinant");
    const VarSet& vars = m[0][0].vars();
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.vars() != vars) throw std::invalid_argument("variable-set mismatch");

    // Cofactor expansion along the first remaining row, tracked by a column mask.
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t>& active) -> MultiLaurent {
        if (active.empty()) return MultiLaurent::constant(vars, BigRational(1));
        MultiLaurent sum = MultiLaurent::zero(vars);
        for (std::size_t idx = 0; idx < active.size(); ++idx) {
            const MultiLaurent& entry = m[row][active[idx]];
            if (entry.is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(active.size() - 1);
            for (std::size_t j = 0; j < active.size(); ++j)
                if (j != idx) rest.push_back(active[j]);
            MultiLaurent sub = self(self, row + 1, rest);
            MultiLaurent contrib = entry * sub;
            sum = (idx % 2 == 0) ? sum + contrib : sum - contrib;
        }
        return sum;
    };
    return rec(rec, 0, cols);
}

}  // namespace qhex
