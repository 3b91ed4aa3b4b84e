#include "friezelab/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "friezelab/errors.hpp"

namespace friezelab {

namespace {

void require_same_nvars(const LaurentPoly& p, const LaurentPoly& q, const char* op) {
    if (p.nvars() != q.nvars()) {
        std::ostringstream os;
        os << op << ": variable-count mismatch (" << p.nvars() << " vs " << q.nvars() << ")";
        throw InvalidInput(os.str());
    }
}

Exponents shifted(const Exponents& e, const Exponents& by, int sign) {
    Exponents out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i] + sign * by[i];
    return out;
}

LaurentPoly::TermMap shift_terms(const LaurentPoly::TermMap& terms, const Exponents& by, int sign) {
    LaurentPoly::TermMap out;
    for (const auto& [e, c] : terms) out.emplace_hint(out.end(), shifted(e, by, sign), c);
    return out;
}

// Exact division of polynomials with nonnegative exponents, reducing the
// lex-leading term of the remainder by the lex-leading term of the divisor.
LaurentPoly::TermMap divide_polynomials(LaurentPoly::TermMap remainder,
                                        const LaurentPoly::TermMap& divisor) {
    const auto& [lead_exps, lead_coeff] = *divisor.rbegin();
    LaurentPoly::TermMap quotient;
    Exponents step(lead_exps.size());
    while (!remainder.empty()) {
        const auto top = std::prev(remainder.end());
        for (std::size_t i = 0; i < step.size(); ++i) {
            step[i] = top->first[i] - lead_exps[i];
            if (step[i] < 0) throw NotDivisible("leading monomial not divisible");
        }
        if (top->second % lead_coeff != 0) throw NotDivisible("leading coefficient not divisible");
        const BigInt factor = top->second / lead_coeff;
        quotient.emplace(step, factor);
        for (const auto& [e, c] : divisor) {
            Exponents target = shifted(e, step, 1);
            auto it = remainder.find(target);
            if (it == remainder.end()) {
                remainder.emplace(std::move(target), -factor * c);
            } else {
                it->second -= factor * c;
                if (it->second == 0) remainder.erase(it);
            }
        }
    }
    return quotient;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::string monomial_string(const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, const BigInt& c) {
    return monomial(nvars, c, Exponents(nvars, 0));
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const BigInt& c, Exponents exps) {
    if (exps.size() != nvars) throw InvalidInput("monomial: exponent vector has wrong length");
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
    if (i < 1 || i > nvars) throw InvalidInput("variable index out of range");
    Exponents e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, BigInt(1), std::move(e));
}

void LaurentPoly::add_term(const Exponents& exps, const BigInt& c) {
    if (exps.size() != nvars_) throw InvalidInput("add_term: exponent vector has wrong length");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Exponents LaurentPoly::min_exponents() const {
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw InvalidInput("evaluate: point has wrong dimension");
    for (const auto& v : point) {
        if (v <= 0) throw InvalidInput("evaluate: coordinates must be positive");
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            const unsigned k = static_cast<unsigned>(std::abs(e[i]));
            const Rational base = e[i] >= 0 ? point[i] : Rational(1) / point[i];
            for (unsigned j = 0; j < k; ++j) term *= base;
        }
        total += term;
    }
    return total;
}

BigInt LaurentPoly::evaluate_at_ones() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    Exponents denom(nvars_, 0);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) denom[i] = std::max(denom[i], -e[i]);
    }
    std::vector<std::pair<Exponents, BigInt>> numer;
    for (const auto& [e, c] : terms_) numer.emplace_back(shifted(e, denom, 1), c);
    std::sort(numer.begin(), numer.end(), [](const auto& a, const auto& b) {
        const int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db) return da < db;
        return a.first > b.first;
    });

    std::string num;
    for (const auto& [e, c] : numer) {
        const std::string mono = monomial_string(e);
        BigInt mag = abs(c);
        if (num.empty()) {
            if (c < 0) num += '-';
        } else {
            num += c < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            num += mag.str();
        } else {
            if (mag != 1) num += mag.str() + '*';
            num += mono;
        }
    }
    const std::string den = monomial_string(denom);
    if (den.empty()) return num;
    const bool wrap_num = numer.size() > 1;
    const bool wrap_den = std::count_if(denom.begin(), denom.end(), [](int d) { return d != 0; }) > 1;
    return (wrap_num ? "(" + num + ")" : num) + "/" + (wrap_den ? "(" + den + ")" : den);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    require_same_nvars(*this, other, "add");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    require_same_nvars(*this, other, "sub");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out(p.nvars_);
    for (const auto& [e, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_nvars(p, q, "mul");
    LaurentPoly out(p.nvars_);
    Exponents e(p.nvars_);
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            out.add_term(e, cp * cq);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const LaurentPoly& p, const LaurentPoly& q) {
    if (auto c = p.nvars_ <=> q.nvars_; c != 0) return c;
    auto a = p.terms_.begin();
    auto b = q.terms_.begin();
    for (; a != p.terms_.end() && b != q.terms_.end(); ++a, ++b) {
        if (auto c = a->first <=> b->first; c != 0) return c;
        if (a->second != b->second) {
            return a->second < b->second ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    if (a == p.terms_.end() && b == q.terms_.end()) return std::strong_ordering::equal;
    return a == p.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly pow(const LaurentPoly& p, unsigned exponent) {
    LaurentPoly result = LaurentPoly::constant(p.nvars(), BigInt(1));
    LaurentPoly base = p;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_nvars(p, q, "div_exact");
    if (q.is_zero()) throw InvalidInput("div_exact: division by zero");
    if (p.is_zero()) return LaurentPoly(p.nvars());

    // Clear negative exponents, divide as ordinary polynomials, restore the shift.
    const Exponents shift_p = p.min_exponents();
    const Exponents shift_q = q.min_exponents();
    LaurentPoly::TermMap quotient =
        divide_polynomials(shift_terms(p.terms(), shift_p, -1), shift_terms(q.terms(), shift_q, -1));

    const Exponents restore = shifted(shift_p, shift_q, -1);
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : quotient) out.add_term(shifted(e, restore, 1), c);
    return out;
}

}  // namespace friezelab
