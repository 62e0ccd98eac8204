#include "dmf/poly.hpp"

#include <algorithm>
#include <cctype>

#include "dmf/error.hpp"

namespace dmf {

PolyA::PolyA(FqPtr field, std::vector<std::uint32_t> coeffs)
    : F_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& x : c_)
        if (x >= F_->q()) throw Error("coefficient out of range for F_q");
    trim();
}

void PolyA::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyA PolyA::one(FqPtr field) { return constant(std::move(field), 1); }

PolyA PolyA::constant(FqPtr field, std::uint32_t value) {
    PolyA r(std::move(field));
    if (value != 0) r.c_ = {value};
    return r;
}

PolyA PolyA::variable(FqPtr field) {
    PolyA r(std::move(field));
    r.c_ = {0, 1};
    return r;
}

PolyA PolyA::monomial(FqPtr field, std::uint32_t c, int e) {
    PolyA r(std::move(field));
    if (c != 0) {
        r.c_.assign(static_cast<std::size_t>(e) + 1, 0);
        r.c_.back() = c;
    }
    return r;
}

PolyA PolyA::operator+(const PolyA& o) const {
    PolyA r(F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        std::uint32_t a = i < c_.size() ? c_[i] : 0;
        std::uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        r.c_[i] = F_->add(a, b);
    }
    r.trim();
    return r;
}

PolyA PolyA::operator-(const PolyA& o) const {
    PolyA r(F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        std::uint32_t a = i < c_.size() ? c_[i] : 0;
        std::uint32_t b = i < o.c_.size() ? o.c_[i] : 0;
        r.c_[i] = F_->sub(a, b);
    }
    r.trim();
    return r;
}

PolyA PolyA::operator-() const {
    PolyA r(F_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->neg(c_[i]);
    return r;
}

PolyA PolyA::operator*(const PolyA& o) const {
    if (is_zero() || o.is_zero()) return PolyA(F_);
    PolyA r(F_);
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    if (F_->prime_field()) {
        const std::uint64_t p = F_->q();
        std::vector<std::uint64_t> acc(r.c_.size(), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const std::uint64_t a = c_[i];
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += a * o.c_[j];
        }
        for (std::size_t k = 0; k < acc.size(); ++k)
            r.c_[k] = static_cast<std::uint32_t>(acc[k] % p);
    } else {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
        }
    }
    r.trim();
    return r;
}

PolyA PolyA::scaled(std::uint32_t s) const {
    PolyA r(F_);
    if (s == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c_[i], s);
    r.trim();
    return r;
}

PolyA PolyA::pow(long e) const {
    if (e < 0) throw Error("negative polynomial power");
    PolyA acc = one(F_), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

PolyA PolyA::shifted(int e) const {
    if (is_zero()) return *this;
    PolyA r(F_);
    r.c_.assign(static_cast<std::size_t>(e), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<PolyA, PolyA> PolyA::divmod(const PolyA& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    PolyA rem = *this;
    PolyA quo(F_);
    const int dd = divisor.degree();
    if (degree() >= dd) quo.c_.assign(static_cast<std::size_t>(degree() - dd) + 1, 0);
    const std::uint32_t lc_inv = F_->inv(divisor.leading());
    while (rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const std::uint32_t f = F_->mul(rem.leading(), lc_inv);
        quo.c_[static_cast<std::size_t>(shift)] = f;
        for (int j = 0; j <= dd; ++j) {
            auto& x = rem.c_[static_cast<std::size_t>(shift + j)];
            x = F_->sub(x, F_->mul(f, divisor.coeff(j)));
        }
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

PolyA PolyA::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(F_->inv(leading()));
}

std::uint32_t PolyA::eval(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F_->add(F_->mul(acc, x), *it);
    return acc;
}

long PolyA::ord_at(const PolyA& d) const {
    if (is_zero()) return kValInfinity;
    if (d.is_constant()) throw Error("ord_at requires a non-constant divisor");
    long e = 0;
    PolyA cur = *this;
    while (true) {
        auto [q, r] = cur.divmod(d);
        if (!r.is_zero()) return e;
        cur = q;
        ++e;
    }
}

PolyA gcd(const PolyA& a, const PolyA& b) {
    PolyA x = a, y = b;
    while (!y.is_zero()) {
        PolyA r = x % y;
        x = y;
        y = r;
    }
    return x.make_monic();
}

long poly_ord_at(const PolyA& f, const PolyA& pi) { return f.ord_at(pi); }

bool PolyA::canonical_less(const PolyA& a, const PolyA& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::vector<PolyA> monic_polys(const FqPtr& field, int degree) {
    std::vector<PolyA> out;
    const std::uint32_t q = field->q();
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) count *= q;
    out.reserve(count);
    for (std::uint64_t key = 0; key < count; ++key) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(degree) + 1, 0);
        c.back() = 1;
        std::uint64_t k = key;
        for (int i = 0; i < degree; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(k % q);
            k /= q;
        }
        out.push_back(PolyA(field, std::move(c)));
    }
    std::sort(out.begin(), out.end(), PolyA::canonical_less);
    return out;
}

std::string PolyA::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = degree(); e >= 0; --e) {
        const std::uint32_t c = coeff(e);
        if (c == 0) continue;
        if (!s.empty()) s += '+';
        if (e == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) {
                s += std::to_string(c);
                s += '*';
            }
            s += 'T';
            if (e > 1) {
                s += '^';
                s += std::to_string(e);
            }
        }
    }
    return s;
}

PolyA PolyA::parse(const FqPtr& field, std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parse_uint = [&]() -> std::uint64_t {
        std::uint64_t v = 0;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (v > (1ULL << 40)) throw ParseError("number too large in polynomial");
            ++i;
        }
        if (i == start) throw ParseError("expected a number in polynomial text");
        return v;
    };

    PolyA result(field);
    skip_ws();
    if (i >= text.size()) throw ParseError("empty polynomial text");
    bool first = true;
    while (true) {
        skip_ws();
        bool negate = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            negate = text[i] == '-';
            ++i;
            skip_ws();
        } else if (!first) {
            break;
        }
        first = false;

        std::uint32_t coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::uint64_t v = parse_uint();
            if (field->prime_field()) {
                coeff = static_cast<std::uint32_t>(v % field->q());
            } else {
                if (v >= field->q()) throw ParseError("coefficient index out of range for F_q");
                coeff = static_cast<std::uint32_t>(v);
            }
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exp = 0;
        if (i < text.size() && (text[i] == 'T' || text[i] == 't')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                exp = static_cast<int>(parse_uint());
                if (exp > 100000) throw ParseError("exponent too large in polynomial");
            }
        } else if (!have_coeff) {
            throw ParseError("expected a term in polynomial text");
        }
        if (negate) coeff = field->neg(coeff);
        result += PolyA::monomial(field, coeff, exp);
        skip_ws();
        if (i >= text.size() || (text[i] != '+' && text[i] != '-')) break;
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters in polynomial text");
    return result;
}

}  // namespace dmf
