#include "vknot/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vknot {

namespace {

// Merge two sorted term vectors, dropping cancellations.
template <typename Term, typename Key>
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs,
                              bool negate_rhs, Key key) {
    std::vector<Term> out;
    out.reserve(lhs.size() + rhs.size());
    std::size_t i = 0, j = 0;
    while (i < lhs.size() && j < rhs.size()) {
        if (key(lhs[i]) < key(rhs[j])) {
            out.push_back(lhs[i++]);
        } else if (key(rhs[j]) < key(lhs[i])) {
            out.push_back(rhs[j]);
            if (negate_rhs) out.back().second = -out.back().second;
            ++j;
        } else {
            BigInt c = negate_rhs ? BigInt(lhs[i].second - rhs[j].second)
                                  : BigInt(lhs[i].second + rhs[j].second);
            if (c != 0) out.emplace_back(key(lhs[i]), std::move(c));
            ++i;
            ++j;
        }
    }
    for (; i < lhs.size(); ++i) out.push_back(lhs[i]);
    for (; j < rhs.size(); ++j) {
        out.push_back(rhs[j]);
        if (negate_rhs) out.back().second = -out.back().second;
    }
    return out;
}

template <typename Term>
void insert_term(std::vector<Term>& terms, typename Term::first_type key, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), key,
                               [](const Term& t, const typename Term::first_type& k) {
                                   return t.first < k;
                               });
    if (it != terms.end() && it->first == key) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    } else {
        terms.insert(it, Term(key, coeff));
    }
}

void append_coeff(std::string& out, const BigInt& coeff, bool first, bool bare) {
    BigInt mag = coeff < 0 ? BigInt(-coeff) : coeff;
    if (first) {
        if (coeff < 0) out += '-';
    } else {
        out += coeff < 0 ? " - " : " + ";
    }
    if (bare || mag != 1) out += mag.str();
}

}  // namespace

BracketPoly BracketPoly::monomial(Monomial m, BigInt coeff) {
    BracketPoly p;
    if (coeff != 0) p.terms_.emplace_back(m, std::move(coeff));
    return p;
}

BracketPoly& BracketPoly::operator+=(const BracketPoly& rhs) {
    terms_ = merge_terms(terms_, rhs.terms_, false, [](const Term& t) { return t.first; });
    return *this;
}

BracketPoly& BracketPoly::operator-=(const BracketPoly& rhs) {
    terms_ = merge_terms(terms_, rhs.terms_, true, [](const Term& t) { return t.first; });
    return *this;
}

BracketPoly operator*(const BracketPoly& lhs, const BracketPoly& rhs) {
    BracketPoly out;
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            out.add_term({ml.a + mr.a, ml.b + mr.b, ml.k + mr.k}, cl * cr);
        }
    }
    return out;
}

BracketPoly BracketPoly::shifted(std::int32_t da, std::int32_t db, std::int32_t dk,
                                 const BigInt& c) const {
    BracketPoly out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [m, coeff] : terms_) {
        out.terms_.emplace_back(Monomial{m.a + da, m.b + db, m.k + dk}, coeff * c);
    }
    return out;
}

void BracketPoly::shift_inplace(std::int32_t da, std::int32_t db, std::int32_t dk) {
    for (auto& [m, coeff] : terms_) {
        m.a += da;
        m.b += db;
        m.k += dk;
    }
}

void BracketPoly::add_term(Monomial m, const BigInt& coeff) {
    insert_term(terms_, m, coeff);
}

BracketPoly BracketPoly::swapped_ab() const {
    BracketPoly out;
    for (const auto& [m, coeff] : terms_) {
        out.add_term({m.b, m.a, m.k}, coeff);
    }
    return out;
}

std::string BracketPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        bool constant = m.a == 0 && m.b == 0 && m.k == 0;
        append_coeff(out, coeff, first, constant);
        first = false;
        auto power = [&out](const char* var, std::int32_t e) {
            if (e == 0) return;
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        };
        power("A", m.a);
        power("B", m.b);
        power("d", m.k);
    }
    return out;
}

std::string BracketPoly::to_json() const {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        if (!first) out += ',';
        first = false;
        out += "{\"A\":" + std::to_string(m.a) + ",\"B\":" + std::to_string(m.b) +
               ",\"d\":" + std::to_string(m.k) + ",\"c\":" + coeff.str() + "}";
    }
    out += "]}";
    return out;
}

Laurent Laurent::monomial(std::int64_t exponent, BigInt coeff) {
    Laurent p;
    if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
    return p;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
    terms_ = merge_terms(terms_, rhs.terms_, false, [](const Term& t) { return t.first; });
    return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
    Laurent out;
    for (const auto& [el, cl] : lhs.terms_) {
        for (const auto& [er, cr] : rhs.terms_) {
            out.add_term(el + er, cl * cr);
        }
    }
    return out;
}

Laurent Laurent::shifted(std::int64_t shift, const BigInt& c) const {
    Laurent out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, coeff] : terms_) {
        out.terms_.emplace_back(e + shift, coeff * c);
    }
    return out;
}

void Laurent::add_term(std::int64_t exponent, const BigInt& coeff) {
    insert_term(terms_, exponent, coeff);
}

Laurent Laurent::mirrored() const {
    Laurent out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out.terms_.emplace_back(-it->first, it->second);
    }
    return out;
}

std::string Laurent::to_string_quarter() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, coeff] : terms_) {
        append_coeff(out, coeff, first, e == 0);
        first = false;
        if (e == 0) continue;
        out += 't';
        if (e == 4) continue;  // plain "t"
        std::int64_t g = std::gcd(std::int64_t(4), e < 0 ? -e : e);
        std::int64_t num = e / g, den = 4 / g;
        if (den == 1) {
            out += "^" + std::to_string(num);
        } else {
            out += "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
        }
    }
    return out;
}

std::string Laurent::to_string_plain(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, coeff] : terms_) {
        append_coeff(out, coeff, first, e == 0);
        first = false;
        if (e == 0) continue;
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string Laurent::to_json_quarter() const {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const auto& [e, coeff] : terms_) {
        if (!first) out += ',';
        first = false;
        out += "{\"q4\":" + std::to_string(e) + ",\"c\":" + coeff.str() + "}";
    }
    out += "]}";
    return out;
}

QuarterLaurent specialize_jones(const BracketPoly& p) {
    QuarterLaurent out;
    for (const auto& [m, coeff] : p.terms()) {
        // A^a B^b -> t^((b - a)/4); d^k -> (-1)^k (t^(-1/2) + t^(1/2))^k.
        std::int64_t base = std::int64_t(m.b) - std::int64_t(m.a);
        BigInt sign = (m.k % 2 == 0) ? 1 : -1;
        BigInt binom = 1;
        for (std::int32_t j = 0; j <= m.k; ++j) {
            out.add_term(base + 4 * j - 2 * m.k, coeff * sign * binom);
            binom = binom * (m.k - j) / (j + 1);
        }
    }
    return out;
}

QuarterLaurent normalize_writhe(const BracketPoly& p, std::int64_t w) {
    BigInt sign = (w % 2 == 0) ? 1 : -1;
    return specialize_jones(p).shifted(3 * w, sign);
}

Laurent specialize_bracket_normalized(const BracketPoly& p) {
    Laurent out;
    for (const auto& [m, coeff] : p.terms()) {
        // A^a B^b -> A^(a-b); d^k -> (-1)^k (A^2 + A^-2)^k.
        std::int64_t base = std::int64_t(m.a) - std::int64_t(m.b);
        BigInt sign = (m.k % 2 == 0) ? 1 : -1;
        BigInt binom = 1;
        for (std::int32_t j = 0; j <= m.k; ++j) {
            out.add_term(base + 4 * j - 2 * m.k, coeff * sign * binom);
            binom = binom * (m.k - j) / (j + 1);
        }
    }
    return out;
}

}  // namespace vknot
