#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhex/laurent.hpp"

namespace qhex {

/// Ordered set of distinct variable names. The order is fixed for the
/// lifetime of any polynomial built over it.
class VarSet {
  public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t index_of(const std::string& name) const;  // throws if absent

    bool operator==(const VarSet& r) const { return names_ == r.names_; }
    bool operator!=(const VarSet& r) const { return !(*this == r); }

  private:
    std::vector<std::string> names_;
};

/// Sparse multivariate Laurent polynomial over BigRational. Exponent vectors
/// have one entry per variable of the VarSet; canonical form keeps them
/// pairwise distinct, lexicographically sorted, with no zero coefficients.
class MultiLaurent {
  public:
    using ExpVec = std::vector<std::int64_t>;
    struct Term {
        ExpVec exps;
        BigRational coeff;
    };

    MultiLaurent() = default;
    explicit MultiLaurent(VarSet vars) : vars_(std::move(vars)) {}

    static MultiLaurent zero(const VarSet& vars) { return MultiLaurent(vars); }
    static MultiLaurent constant(const VarSet& vars, const BigRational& c);
    /// c * v^e for a single variable v of the set.
    static MultiLaurent monomial(const VarSet& vars, const BigRational& c, const std::string& var,
                                 std::int64_t e);
    static MultiLaurent from_terms(VarSet vars, std::vector<Term> terms);

    /// Embeds a univariate Laurent polynomial into a one-variable VarSet.
    static MultiLaurent embed(const VarSet& single_var, const LaurentPoly& p);

    const VarSet& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiLaurent operator-() const;
    MultiLaurent operator+(const MultiLaurent& r) const;
    MultiLaurent operator-(const MultiLaurent& r) const;
    MultiLaurent operator*(const MultiLaurent& r) const;

    bool operator==(const MultiLaurent& r) const;
    bool operator!=(const MultiLaurent& r) const { return !(*this == r); }

    /// Exact evaluation; one value per variable, in VarSet order. Assigning
    /// zero to a variable that occurs with a negative exponent is an error.
    BigRational eval(const std::vector<BigRational>& point) const;

  private:
    void require_same_vars(const MultiLaurent& r) const;

    VarSet vars_;
    std::vector<Term> terms_;
};

/// Exact determinant by cofactor expansion. Entries must share one VarSet;
/// sizes above the bound are rejected.
MultiLaurent mv_det(const std::vector<std::vector<MultiLaurent>>& m, std::size_t size_bound = 4);

}  // namespace qhex
