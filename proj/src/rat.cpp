#include "dmf/rat.hpp"

#include "dmf/error.hpp"
#include "dmf/prime.hpp"

namespace dmf {

RatK::RatK(PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("zero denominator in K");
    if (num_.is_zero()) {
        den_ = PolyA::one(num_.field());
        return;
    }
    if (!den_.is_one()) {
        PolyA g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    if (!den_.is_monic()) {
        const std::uint32_t s = num_.field()->inv(den_.leading());
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

RatK RatK::operator+(const RatK& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatK(Raw{}, num_ + o.num_, den_);
    return RatK(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatK RatK::operator-(const RatK& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatK(Raw{}, num_ - o.num_, den_);
    return RatK(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatK RatK::operator-() const { return RatK(Raw{}, -num_, den_); }

RatK RatK::operator*(const RatK& o) const {
    if (is_zero() || o.is_zero()) return zero(field());
    if (den_.is_one() && o.den_.is_one()) return RatK(Raw{}, num_ * o.num_, den_);
    // Cross-cancel first to keep intermediate degrees small.
    const PolyA g1 = gcd(num_, o.den_);
    const PolyA g2 = gcd(o.num_, den_);
    const PolyA n = (g1.is_one() ? num_ : num_ / g1) * (g2.is_one() ? o.num_ : o.num_ / g2);
    const PolyA d = (g2.is_one() ? den_ : den_ / g2) * (g1.is_one() ? o.den_ : o.den_ / g1);
    return RatK(n, d);
}

RatK RatK::inverse() const {
    if (is_zero()) throw Error("division by zero in K");
    return RatK(den_, num_);
}

RatK RatK::operator/(const RatK& o) const { return *this * o.inverse(); }

RatK RatK::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatK acc = one(field()), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

long RatK::vpi(const PrimePi& pi) const {
    if (is_zero()) return kValInfinity;
    return num_.ord_at(pi.poly()) - den_.ord_at(pi.poly());
}

long rat_vpi(const RatK& x, const PrimePi& pi) { return x.vpi(pi); }

std::string RatK::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto side = [](const PolyA& p) {
        std::string s = p.to_string();
        if (s.find('+') != std::string::npos) s = "(" + s + ")";
        return s;
    };
    return side(num_) + "/" + side(den_);
}

RatK RatK::parse(const FqPtr& field, std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto unparen = [&strip](std::string_view s) {
        s = strip(s);
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
            // Only strip if the parens actually match each other.
            int depth = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                if (s[i] == ')') {
                    --depth;
                    if (depth == 0 && i + 1 != s.size()) return s;
                }
            }
            return strip(s.substr(1, s.size() - 2));
        }
        return s;
    };

    text = strip(text);
    // Split on the top-level '/'.
    int depth = 0;
    std::size_t slash = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) {
            if (slash != std::string_view::npos) throw ParseError("multiple '/' in rational text");
            slash = i;
        }
    }
    if (slash == std::string_view::npos) return RatK(PolyA::parse(field, unparen(text)));
    PolyA num = PolyA::parse(field, unparen(text.substr(0, slash)));
    PolyA den = PolyA::parse(field, unparen(text.substr(slash + 1)));
    return RatK(std::move(num), std::move(den));
}

}  // namespace dmf
