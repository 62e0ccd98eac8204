#include "dmf/fq.hpp"

#include <algorithm>

namespace dmf {
namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Digits = std::vector<std::uint32_t>;  // coefficients mod p, constant first

Digits unpack(std::uint32_t v, int p, int r) {
    Digits d(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        d[static_cast<std::size_t>(i)] = v % static_cast<std::uint32_t>(p);
        v /= static_cast<std::uint32_t>(p);
    }
    return d;
}

std::uint32_t pack(const Digits& d, int p) {
    std::uint32_t v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        v = v * static_cast<std::uint32_t>(p) + *it;
    return v;
}

int deg(const Digits& d) {
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        if (d[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// Schoolbook product of digit polynomials mod p.
Digits dmul(const Digits& a, const Digits& b, int p) {
    if (deg(a) < 0 || deg(b) < 0) return {};
    Digits out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % static_cast<std::uint32_t>(p);
    }
    return out;
}

// In-place remainder of a by monic m, coefficients mod p.
void dmod(Digits& a, const Digits& m, int p) {
    const int dm = deg(m);
    for (int i = deg(a); i >= dm && dm >= 0; i = deg(a)) {
        const std::uint32_t c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            auto& x = a[static_cast<std::size_t>(i - dm + j)];
            const std::uint32_t sub = (c * m[static_cast<std::size_t>(j)]) % static_cast<std::uint32_t>(p);
            x = (x + static_cast<std::uint32_t>(p) - sub) % static_cast<std::uint32_t>(p);
        }
    }
    a.resize(static_cast<std::size_t>(std::max(deg(a) + 1, 0)));
}

bool dirreducible(const Digits& f, int p) {
    const int df = deg(f);
    if (df < 1) return false;
    // Trial division by every monic polynomial of degree <= df / 2.
    for (int e = 1; 2 * e <= df; ++e) {
        std::uint32_t count = 1;
        for (int i = 0; i < e; ++i) count *= static_cast<std::uint32_t>(p);
        for (std::uint32_t idx = 0; idx < count; ++idx) {
            Digits g = unpack(idx, p, e);
            g.push_back(1);  // monic of degree e
            Digits rem = f;
            dmod(rem, g, p);
            if (deg(rem) < 0) return false;
        }
    }
    return true;
}

}  // namespace

std::shared_ptr<const Fq> Fq::make(int p, int r, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p) || p == 2) throw ConfigError("field characteristic must be an odd prime");
    if (r < 1) throw ConfigError("field extension degree must be positive");
    long q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > (1L << 20)) throw ConfigError("field size exceeds the supported desk scale");
    }

    auto F = std::shared_ptr<Fq>(new Fq());
    F->p_ = p;
    F->r_ = r;
    F->q_ = static_cast<std::uint32_t>(q);
    if (r == 1) {
        if (!modulus.empty()) throw ConfigError("modulus given for a prime field");
        return F;
    }

    if (modulus.empty()) {
        // Lexicographically smallest monic irreducible of degree r: compare
        // the tuple (c_{r-1}, ..., c_1, c_0) — constant coefficient last.
        std::uint32_t count = 1;
        for (int i = 0; i < r; ++i) count *= static_cast<std::uint32_t>(p);
        for (std::uint32_t key = 0; key < count; ++key) {
            Digits low(static_cast<std::size_t>(r), 0);
            std::uint32_t k = key;
            for (int i = r - 1; i >= 0; --i) {
                low[static_cast<std::size_t>(i)] = k % static_cast<std::uint32_t>(p);
                k /= static_cast<std::uint32_t>(p);
            }
            Digits cand = low;
            cand.push_back(1);
            if (dirreducible(cand, p)) {
                F->mod_ = cand;
                break;
            }
        }
        if (F->mod_.empty()) throw ConfigError("no irreducible modulus found");
    } else {
        if (static_cast<int>(modulus.size()) != r + 1 || modulus.back() != 1)
            throw ConfigError("modulus must be monic of degree r");
        for (auto& c : modulus) c %= static_cast<std::uint32_t>(p);
        if (modulus.back() != 1) throw ConfigError("modulus must be monic of degree r");
        if (!dirreducible(modulus, p)) throw ConfigError("modulus is reducible over F_p");
        F->mod_ = std::move(modulus);
    }
    return F;
}

std::uint32_t Fq::add(std::uint32_t a, std::uint32_t b) const {
    if (r_ == 1) {
        std::uint32_t s = a + b;
        if (s >= q_) s -= q_;
        return s;
    }
    Digits da = unpack(a, p_, r_), db = unpack(b, p_, r_);
    for (int i = 0; i < r_; ++i) {
        da[static_cast<std::size_t>(i)] += db[static_cast<std::size_t>(i)];
        if (da[static_cast<std::size_t>(i)] >= static_cast<std::uint32_t>(p_))
            da[static_cast<std::size_t>(i)] -= static_cast<std::uint32_t>(p_);
    }
    return pack(da, p_);
}

std::uint32_t Fq::neg(std::uint32_t a) const {
    if (r_ == 1) return a == 0 ? 0 : q_ - a;
    Digits d = unpack(a, p_, r_);
    for (auto& c : d)
        if (c != 0) c = static_cast<std::uint32_t>(p_) - c;
    return pack(d, p_);
}

std::uint32_t Fq::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Fq::mul(std::uint32_t a, std::uint32_t b) const {
    if (r_ == 1) return (a * b) % q_;
    if (a == 0 || b == 0) return 0;
    Digits prod = dmul(unpack(a, p_, r_), unpack(b, p_, r_), p_);
    dmod(prod, mod_, p_);
    prod.resize(static_cast<std::size_t>(r_), 0);
    return pack(prod, p_);
}

std::uint32_t Fq::pow(std::uint32_t a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    std::uint32_t base = a, acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint32_t Fq::inv(std::uint32_t a) const {
    if (a == 0) throw Error("division by zero in F_q");
    if (r_ == 1) {
        // Extended Euclid on integers.
        long t = 0, nt = 1, rr = q_, nr = a;
        while (nr != 0) {
            long quo = rr / nr;
            t -= quo * nt;
            std::swap(t, nt);
            rr -= quo * nr;
            std::swap(rr, nr);
        }
        t %= q_;
        if (t < 0) t += q_;
        return static_cast<std::uint32_t>(t);
    }
    return pow(a, static_cast<long>(q_) - 2);
}

std::uint32_t Fq::from_int(long n) const {
    long m = n % p_;
    if (m < 0) m += p_;
    return static_cast<std::uint32_t>(m);
}

bool Fq::same_field(const Fq& other) const {
    return p_ == other.p_ && r_ == other.r_ && mod_ == other.mod_;
}

std::string Fq::describe() const {
    std::string s = "F_" + std::to_string(q_);
    if (r_ > 1) s += " (p=" + std::to_string(p_) + ", r=" + std::to_string(r_) + ")";
    return s;
}

}  // namespace dmf
