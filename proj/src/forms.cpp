#include "dmf/forms.hpp"

#include <future>
#include <map>
#include <mutex>
#include <unordered_map>

#include "dmf/error.hpp"

namespace dmf {
namespace {

std::string field_key(const FqPtr& F) {
    std::string s = "p" + std::to_string(F->p()) + "r" + std::to_string(F->r());
    for (auto c : F->modulus()) s += "_" + std::to_string(c);
    return s;
}

// Generator memo table: immutable values behind shared futures so that
// concurrent readers wait for a single computation per key.
class FormCache {
public:
    static FormCache& instance() {
        static FormCache c;
        return c;
    }

    template <class T, class Fn>
    std::shared_ptr<const T> get(const std::string& key, Fn&& make) {
        std::shared_future<std::shared_ptr<const void>> fut;
        std::promise<std::shared_ptr<const void>> prom;
        bool owner = false;
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = map_.find(key);
            if (it == map_.end()) {
                fut = prom.get_future().share();
                map_.emplace(key, fut);
                owner = true;
            } else {
                fut = it->second;
            }
        }
        if (owner) {
            try {
                auto value = std::make_shared<const T>(make());
                prom.set_value(std::static_pointer_cast<const void>(value));
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lk(mu_);
                    map_.erase(key);
                }
                prom.set_exception(std::current_exception());
            }
        }
        return std::static_pointer_cast<const T>(fut.get());
    }

    void clear() {
        std::lock_guard<std::mutex> lk(mu_);
        map_.clear();
    }

private:
    std::mutex mu_;
    std::unordered_map<std::string, std::shared_future<std::shared_ptr<const void>>> map_;
};

// Memoized small powers of a fixed series, truncated at a fixed precision.
class PowerTable {
public:
    PowerTable(const USeries& base, int trunc) : trunc_(trunc) {
        pw_[1] = base.prec() > trunc ? base.truncated(trunc) : base;
    }

    const USeries& get(int e) {
        auto it = pw_.find(e);
        if (it != pw_.end()) return it->second;
        const USeries& lo = get(e / 2);
        const USeries& hi = get(e - e / 2);
        USeries prod = series_mul(lo, hi);
        if (prod.prec() > trunc_) prod = prod.truncated(trunc_);
        return pw_.emplace(e, std::move(prod)).first->second;
    }

private:
    int trunc_;
    std::map<int, USeries> pw_;
};

PolyA poly_lcm(const PolyA& a, const PolyA& b) {
    if (a.is_zero() || b.is_zero()) return PolyA::zero(a.field());
    return (a * (b / gcd(a, b))).make_monic();
}

USeries eisenstein_tilde_impl(const FqPtr& F, int k, int N, int cutoff) {
    const int q = static_cast<int>(F->q());
    if (k < 1 || k % (q - 1) != 0) throw NotEvenWeight("eisenstein weight must be >= 1 with (q-1) | k");

    const GossPoly G = goss_poly(F, k);
    std::vector<int> support;
    for (int j : G.support())
        if (j % (q - 1) == 0) support.push_back(j);  // unit sum collapse

    // Scale the Goss coefficients to A by the lcm of their denominators, so
    // the whole lattice sum accumulates in A.
    PolyA mu = PolyA::one(F);
    for (int j : support) mu = poly_lcm(mu, G.coeff(j).den());
    std::vector<std::pair<int, PolyA>> scaled;  // (j, mu * g_{k,j})
    for (int j : support) {
        const RatK s = G.coeff(j) * RatK(mu);
        scaled.emplace_back(j, s.num());
    }

    USeries acc(F, N);  // integral accumulator, to be divided by mu
    const int jmin = support.empty() ? 1 : support.front();
    long qe = 1;
    for (int e = 0; e <= cutoff; ++e, qe *= q) {
        if (qe * jmin >= N) break;
        for (const PolyA& a : monic_polys(F, e)) {
            const USeries t = t_series(a, N);
            PowerTable pows(t, N);
            for (const auto& [j, g] : scaled) {
                if (qe * j >= N) break;
                acc.add_in_place(pows.get(j).scaled(RatK(g)));
            }
        }
    }

    USeries out(F, N);
    const RatK muinv = RatK(PolyA::one(F), mu);
    for (int n = 0; n < N; ++n)
        if (!acc.coeff(n).is_zero()) out.set_coeff(n, -(acc.coeff(n) * muinv));
    out.set_coeff(0, out.coeff(0) - zeta_ratio(F, k));
    return out;
}

long pow_long(long b, int e) {
    long v = 1;
    while (e-- > 0) v *= b;
    return v;
}

}  // namespace

SeriesForm::SeriesForm(USeries series, long weight, int type, Level level,
                       std::optional<PolyA> pi)
    : s_(std::move(series)), weight_(weight), type_(type), level_(level), pi_(std::move(pi)) {
    const int qm1 = static_cast<int>(s_.field()->q()) - 1;
    type_ = ((type_ % qm1) + qm1) % qm1;
    if (weight_ < 0) throw InvalidForm("negative weight");
    if (((weight_ - 2 * type_) % qm1 + qm1) % qm1 != 0)
        throw InvalidForm("weight/type violate k = 2l (mod q-1)");
    for (int i = 0; i < s_.prec(); ++i)
        if (!s_.coeff(i).is_zero() && (i - type_) % qm1 != 0)
            throw InvalidForm("coefficient support violates the type-l condition at u^" +
                              std::to_string(i));
    if (level_ == Level::pi && !pi_) throw InvalidForm("level-pi form without pi");
    if (level_ == Level::one) pi_.reset();
}

int monic_cutoff(const FqPtr& field, int N) {
    int B = 0;
    long qe = 1;
    while (qe < N) {
        qe *= field->q();
        ++B;
    }
    return B;
}

USeries eisenstein_tilde(const FqPtr& field, int k, int N) {
    return eisenstein_tilde(field, k, N, monic_cutoff(field, N));
}

USeries eisenstein_tilde(const FqPtr& field, int k, int N, int cutoff) {
    const std::string key = field_key(field) + "|eis|" + std::to_string(k) + "|" +
                            std::to_string(N) + "|" + std::to_string(cutoff);
    auto ptr = FormCache::instance().get<USeries>(
        key, [&] { return eisenstein_tilde_impl(field, k, N, cutoff); });
    return *ptr;
}

SeriesForm gd_series(const PrimePi& pi, int N) {
    return gd_series_of_degree(pi.field(), pi.degree(), N);
}

SeriesForm gd_series_of_degree(const FqPtr& field, int d, int N) {
    const std::string key = field_key(field) + "|gd|" + std::to_string(d) + "|" + std::to_string(N);
    auto ptr = FormCache::instance().get<SeriesForm>(key, [&] {
        const long k = pow_long(field->q(), d) - 1;
        const Brackets b = bracket_D_L(field, d);
        USeries s = eisenstein_tilde(field, static_cast<int>(k), N);
        RatK scale(b.L);
        if (d % 2 == 0) scale = -scale;  // (-1)^{d+1}
        return SeriesForm(s.scaled(scale), k, 0, Level::one);
    });
    return *ptr;
}

SeriesForm delta_series(const FqPtr& field, int N) {
    const std::string key = field_key(field) + "|delta|" + std::to_string(N);
    auto ptr = FormCache::instance().get<SeriesForm>(key, [&] {
        const int q = static_cast<int>(field->q());
        const Brackets b1 = bracket_D_L(field, 1);
        const Brackets b2 = bracket_D_L(field, 2);
        const USeries e2 = eisenstein_tilde(field, q * q - 1, N);
        // (T^q - T)^q Etilde_{q-1}^{q+1} computed through g_1 = L_1 Etilde_{q-1}
        // to keep the power integral: equals g_1^{q+1} / (T^q - T).
        const SeriesForm g1 = gd_series_of_degree(field, 1, N);
        USeries pw = g1.series().pow(q + 1);
        if (pw.prec() > N) pw = pw.truncated(N);
        USeries s = e2.scaled(RatK(b2.bracket)) + pw.scaled(RatK(PolyA::one(field), b1.bracket));
        return SeriesForm(std::move(s), static_cast<long>(q) * q - 1, 0, Level::one);
    });
    return *ptr;
}

SeriesForm h_series(const FqPtr& field, int N) {
    const std::string key = field_key(field) + "|h|" + std::to_string(N);
    auto ptr = FormCache::instance().get<SeriesForm>(key, [&] {
        const int q = static_cast<int>(field->q());
        const SeriesForm delta = delta_series(field, N + q - 2);
        const USeries body = (-delta.series()).shifted_down(q - 1);
        const USeries root = series_root(body, q - 1);
        return SeriesForm(-root.shifted_up(1), q + 1, 1, Level::one);
    });
    return *ptr;
}

USeries e_series(const FqPtr& field, int N) {
    const std::string key = field_key(field) + "|e|" + std::to_string(N);
    auto ptr = FormCache::instance().get<USeries>(key, [&] {
        USeries acc(field, N);
        long qe = 1;
        for (int e = 0; e <= monic_cutoff(field, N); ++e, qe *= field->q()) {
            if (qe >= N) break;
            for (const PolyA& a : monic_polys(field, e))
                acc.add_in_place(t_series(a, N).scaled(RatK(a)));
        }
        return acc;
    });
    return *ptr;
}

SeriesForm e_star_series(const PrimePi& pi, int N) {
    const std::string key =
        field_key(pi.field()) + "|estar|" + pi.poly().to_string() + "|" + std::to_string(N);
    auto ptr = FormCache::instance().get<SeriesForm>(key, [&] {
        const long qd = pi.qd();
        const int inner = static_cast<int>((N + qd - 1) / qd);
        const USeries E = e_series(pi.field(), N);
        const USeries tpi = t_series(pi.poly(), static_cast<int>(inner * qd));
        USeries comp = series_compose(E.truncated(inner), tpi);
        if (comp.prec() > N) comp = comp.truncated(N);
        const USeries estar = E - comp.scaled(RatK(pi.poly()));
        return SeriesForm(estar, 2, 1, Level::pi, pi.poly());
    });
    return *ptr;
}

SeriesForm generator_series(const FqPtr& field, BaseForm base, int d, int N) {
    switch (base) {
        case BaseForm::gd:
            return gd_series_of_degree(field, d, N);
        case BaseForm::h:
            return h_series(field, N);
        case BaseForm::delta:
            return delta_series(field, N);
    }
    throw Error("unknown generator");
}

USeries iota_generator_series(const PrimePi& pi, BaseForm base, int d, int N) {
    const std::string key = field_key(pi.field()) + "|iota|" + std::to_string(static_cast<int>(base)) +
                            "|" + std::to_string(d) + "|" + pi.poly().to_string() + "|" +
                            std::to_string(N);
    auto ptr = FormCache::instance().get<USeries>(key, [&] {
        const long qd = pi.qd();
        const int inner = static_cast<int>((N + qd - 1) / qd);
        const SeriesForm f = generator_series(pi.field(), base, d, std::max(N, inner));
        const USeries tpi = t_series(pi.poly(), static_cast<int>(inner * qd));
        USeries comp = series_compose(f.series().truncated(inner), tpi);
        return comp.prec() > N ? comp.truncated(N) : comp;
    });
    return *ptr;
}

void clear_form_cache() { FormCache::instance().clear(); }

}  // namespace dmf
