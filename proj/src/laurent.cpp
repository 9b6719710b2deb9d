#include "qhex/laurent.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace qhex {

LaurentPoly LaurentPoly::monomial(const BigRational& coeff, std::int64_t exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back({exp, coeff});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::map<std::int64_t, BigRational> acc;
    for (auto& t : terms) acc[t.exp] += t.coeff;
    LaurentPoly p;
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    return p;
}

std::int64_t LaurentPoly::min_exp() const { return terms_.front().exp; }
std::int64_t LaurentPoly::max_exp() const { return terms_.back().exp; }

const BigRational* LaurentPoly::coeff_at(std::int64_t exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, std::int64_t e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return &it->coeff;
    return nullptr;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.exp, -t.coeff});
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& r) const {
    // Merge of two sorted term lists.
    LaurentPoly p;
    p.terms_.reserve(terms_.size() + r.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < r.terms_.size()) {
        if (terms_[i].exp < r.terms_[j].exp) {
            p.terms_.push_back(terms_[i++]);
        } else if (terms_[i].exp > r.terms_[j].exp) {
            p.terms_.push_back(r.terms_[j++]);
        } else {
            BigRational c = terms_[i].coeff + r.terms_[j].coeff;
            if (c != 0) p.terms_.push_back({terms_[i].exp, c});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
    for (; j < r.terms_.size(); ++j) p.terms_.push_back(r.terms_[j]);
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& r) const { return *this + (-r); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& r) const {
    if (is_zero() || r.is_zero()) return zero();
    std::map<std::int64_t, BigRational> acc;
    for (const auto& a : terms_)
        for (const auto& b : r.terms_) acc[exp_add(a.exp, b.exp)] += a.coeff * b.coeff;
    LaurentPoly p;
    for (auto& [e, c] : acc)
        if (c != 0) p.terms_.push_back({e, c});
    return p;
}

LaurentPoly LaurentPoly::scaled(const BigRational& c) const {
    if (c == 0) return zero();
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.exp, t.coeff * c});
    return p;
}

LaurentPoly LaurentPoly::pow(std::uint64_t n) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

bool LaurentPoly::operator==(const LaurentPoly& r) const {
    if (terms_.size() != r.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != r.terms_[i].exp || terms_[i].coeff != r.terms_[i].coeff) return false;
    return true;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t t) const {
    if (t < 1) throw std::invalid_argument("substitute_power requires t >= 1");
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& term : terms_) p.terms_.push_back({exp_mul(term.exp, t), term.coeff});
    return p;  // t >= 1 preserves exponent order and distinctness
}

BigRational LaurentPoly::eval(const BigRational& x) const {
    BigRational sum(0);
    for (const auto& t : terms_) {
        if (t.exp < 0 && x == 0) throw std::domain_error("eval at 0 with negative exponent");
        BigRational p(1);
        if (x != 0) {
            BigInt num_pow, den_pow;
            unsigned long e = static_cast<unsigned long>(t.exp < 0 ? -t.exp : t.exp);
            mpz_pow_ui(num_pow.get_mpz_t(), x.get_num().get_mpz_t(), e);
            mpz_pow_ui(den_pow.get_mpz_t(), x.get_den().get_mpz_t(), e);
            p = t.exp >= 0 ? make_rational(num_pow, den_pow) : make_rational(den_pow, num_pow);
        } else {
            p = (t.exp == 0) ? BigRational(1) : BigRational(0);
        }
        sum += t.coeff * p;
    }
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        BigRational c = t.coeff;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (t.exp == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "q";
            if (t.exp != 1) os << "^" << t.exp;
        }
    }
    return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly::zero();
    // Powers of q are units, so shift both operands to ordinary polynomials
    // (min exponent 0) and run plain long division there. Exactness in the
    // Laurent ring is exactness of that division.
    const std::int64_t shift = exp_sub(a.min_exp(), b.min_exp());
    auto rebase = [](const LaurentPoly& p) {
        std::vector<LaurentPoly::Term> ts;
        for (const auto& t : p.terms()) ts.push_back({exp_sub(t.exp, p.min_exp()), t.coeff});
        return LaurentPoly::from_terms(std::move(ts));
    };
    LaurentPoly rem = rebase(a);
    const LaurentPoly div = rebase(b);
    const std::int64_t deg_b = div.max_exp();
    const BigRational& lead_b = div.terms().back().coeff;
    std::vector<LaurentPoly::Term> quo;
    while (!rem.is_zero() && rem.max_exp() >= deg_b) {
        LaurentPoly::Term t{rem.max_exp() - deg_b, rem.terms().back().coeff / lead_b};
        quo.push_back({exp_add(t.exp, shift), t.coeff});
        rem = rem - div * LaurentPoly::monomial(t.coeff, t.exp);
    }
    if (!rem.is_zero()) throw InexactDivision("polynomial division leaves a remainder");
    return LaurentPoly::from_terms(std::move(quo));
}

std::string to_canonical_json(const LaurentPoly& p) {
    // Built by hand so the byte sequence is fully deterministic.
    std::ostringstream os;
    os << "{\"var\":\"q\",\"terms\":[";
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) os << ",";
        first = false;
        os << "{\"exp\":" << t.exp << ",\"num\":\"" << t.coeff.get_num().get_str()
           << "\",\"den\":\"" << t.coeff.get_den().get_str() << "\"}";
    }
    os << "]}";
    return os.str();
}

namespace {

bool is_decimal_integer(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

LaurentPoly laurent_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || j.value("var", "") != "q" || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("malformed polynomial JSON");
    std::vector<LaurentPoly::Term> terms;
    std::int64_t prev_exp = 0;
    bool have_prev = false;
    for (const auto& item : j["terms"]) {
        if (!item.is_object() || !item.contains("exp") || !item.contains("num") || !item.contains("den"))
            throw std::invalid_argument("malformed polynomial term");
        if (!item["exp"].is_number_integer()) throw std::invalid_argument("term exponent must be an integer");
        std::int64_t exp = item["exp"].get<std::int64_t>();
        std::string num = item["num"].get<std::string>();
        std::string den = item["den"].get<std::string>();
        if (!is_decimal_integer(num, true) || !is_decimal_integer(den, false))
            throw std::invalid_argument("term coefficient must use decimal strings");
        BigInt n(num, 10), d(den, 10);
        if (d <= 0) throw std::invalid_argument("term denominator must be positive");
        BigInt g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (n != 0 && g != 1) throw std::invalid_argument("term coefficient must be gcd-reduced");
        if (n == 0) throw std::invalid_argument("zero terms are not canonical");
        if (have_prev && exp <= prev_exp) throw std::invalid_argument("terms must be strictly ascending by exp");
        prev_exp = exp;
        have_prev = true;
        terms.push_back({exp, make_rational(n, d)});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qhex
