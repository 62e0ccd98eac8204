#include "dmf/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "dmf/error.hpp"

namespace dmf {
namespace {

using nlohmann::json;

json rep_json(const CongruenceReport& r) {
    json j{{"left", r.left},
           {"right", r.right},
           {"pi", r.pi.to_string()},
           {"order", r.order},
           {"holds", r.holds},
           {"prec_compared", r.prec_compared}};
    if (r.witness_exponent) {
        j["witness_exponent"] = *r.witness_exponent;
        j["witness_coeff"] = r.witness_coeff;
    }
    return j;
}

std::string val_str(long v) {
    if (v == kValInfinity) return "+inf";
    if (v == kValNegInfinity) return "-inf";
    return std::to_string(v);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

USeries one_series(const FqPtr& F, int N) {
    return USeries::constant(F, RatK::one(F), N);
}

// ---------------------------------------------------------------- checks

CheckResult check_a1(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const SeriesForm gd = gd_series(pi, cfg.prec);
    const auto rep = congruent(gd.series(), one_series(cfg.field(), cfg.prec), pi, 1, "g_d", "1");
    return {"A1", "g_d reduces to 1 mod pi", rep.holds, json{{"congruence", rep_json(rep)}}};
}

CheckResult check_a2(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const SeriesForm gd = gd_series(pi, cfg.prec);
    const USeries E = e_series(cfg.field(), cfg.prec);
    const auto rep = congruent(E, -partial(gd).series().truncated(cfg.prec), pi, 1, "E",
                               "-partial(g_d)");
    return {"A2", "E matches -partial(g_d) mod pi", rep.holds, json{{"congruence", rep_json(rep)}}};
}

CheckResult check_a3(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const auto rep = congruent(e_star_series(pi, cfg.prec).series(), e_series(cfg.field(), cfg.prec),
                               pi, 1, "E*", "E");
    return {"A3", "E* matches E mod pi", rep.holds, json{{"congruence", rep_json(rep)}}};
}

CheckResult check_a4(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const OldPoly estar = OldPoly::estar_form(pi);
    const bool symbolic = w_action(estar) == -estar;
    const USeries flat = flatten(estar, cfg.prec);
    const USeries flat_w = flatten(w_action(estar), cfg.prec);
    const bool flattened = flat_w == -flat;
    return {"A4", "W sends E* to -E*, symbolically and after flattening", symbolic && flattened,
            json{{"symbolic", symbolic}, {"flattened", flattened}}};
}

CheckResult check_a5(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const USeries estar = e_star_series(pi, cfg.prec).series();
    const USeries u = u_operator(estar, pi);
    const int upto = static_cast<int>(cfg.prec / pi.qd());
    const bool pass = u.prec() >= upto && estar.agrees_with(u.truncated(upto), upto);
    return {"A5", "U fixes E* up to floor(N/q^d) coefficients", pass,
            json{{"prec_compared", upto}}};
}

CheckResult check_a6(const SuiteConfig& cfg) {
    const FqPtr F = cfg.field();
    const SeriesForm delta = delta_series(F, cfg.prec);
    const SeriesForm dd = partial(delta);
    const bool dzero = dd.series().known_zero();
    const USeries lhs = theta(delta.series());
    USeries rhs = series_mul(e_series(F, cfg.prec + 1), delta.series());
    const int upto = std::min(lhs.prec(), rhs.prec());
    const bool texact = lhs.truncated(upto) == rhs.truncated(upto);
    return {"A6", "partial Delta vanishes; Theta Delta equals E Delta exactly", dzero && texact,
            json{{"partial_delta_zero", dzero},
                 {"theta_delta_equals_E_delta", texact},
                 {"prec", dd.prec()}}};
}

CheckResult check_a7(const SuiteConfig& cfg) {
    const FqPtr F = cfg.field();
    const long q = F->q();
    const SeriesForm delta = delta_series(F, cfg.prec);
    const SeriesForm g1 = gd_series_of_degree(F, 1, cfg.prec);
    json details = json::array();
    bool pass = true;
    long e = 1;
    for (int i = 1; i <= 2; ++i) {
        e *= q;
        USeries fser = series_mul(g1.series().pow(e), delta.series());
        if (fser.prec() > cfg.prec) fser = fser.truncated(cfg.prec);
        const SeriesForm f(fser, (q - 1) * e + q * q - 1, 0, Level::one);
        const bool zero = partial(f).series().known_zero();
        pass = pass && zero;
        details.push_back(json{{"i", i}, {"weight", f.weight()}, {"partial_zero", zero}});
    }
    return {"A7", "partial(g_1^{q^i} Delta) vanishes for i = 1, 2", pass,
            json{{"cases", details}}};
}

CheckResult check_a8(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const OldPoly delta = OldPoly::level1_form(pi, BaseForm::delta);
    const OldPoly gdh =
        OldPoly::level1_form(pi, BaseForm::gd) * OldPoly::level1_form(pi, BaseForm::h);
    json details = json::array();
    bool pass = true;
    for (const auto& [name, f] : {std::pair<std::string, const OldPoly*>{"delta", &delta},
                                  {"g_d*h", &gdh}}) {
        const auto plus = w_eigenvalue(oldform_pair(*f, +1));
        const auto minus = w_eigenvalue(oldform_pair(*f, -1));
        const bool ok = plus == 1 && minus == -1;
        pass = pass && ok;
        details.push_back(json{{"base", name},
                               {"plus_eigenvalue", plus ? json(*plus) : json()},
                               {"minus_eigenvalue", minus ? json(*minus) : json()}});
    }
    return {"A8", "oldform pairs are W-eigenvectors with signs +1 and -1", pass,
            json{{"cases", details}}};
}

CheckResult check_a9(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const FqPtr F = cfg.field();
    const long qd = pi.qd();
    const int q = static_cast<int>(F->q());
    json details = json::array();
    bool pass = true;
    for (int k : {2, 4, q * q - 1}) {
        const OldPoly gk = gk_form(k, pi);
        const auto one_rep =
            congruent(flatten(gk, cfg.prec), one_series(F, cfg.prec), pi, 1, "g_(k)", "1");
        const long bound = (k - 1) * (qd - 1) / 2 + (k - 1);
        const long v = series_vpi(flatten(w_action(gk), cfg.prec), pi);
        const bool vok = v >= bound;
        pass = pass && one_rep.holds && vok;
        details.push_back(json{{"k", k},
                               {"is_one_mod_pi", one_rep.holds},
                               {"w_image_valuation", val_str(v)},
                               {"required", bound}});
    }
    return {"A9", "g_(k) is 1 mod pi and its W-image gains the stated pi-power", pass,
            json{{"cases", details}}};
}

CheckResult check_a10(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const long qd = pi.qd();
    const int N = std::max<int>(cfg.prec, static_cast<int>(qd) * 12);
    const USeries Fser = trace_level_one(OldPoly::estar_form(pi) * gk_form(2, pi), N);
    const USeries estar = e_star_series(pi, N).series();
    const auto rep = congruent(Fser, estar.truncated(Fser.prec()), pi, 1, "F", "E*");

    const SeriesForm Fform(Fser, qd + 1, 1, Level::one);
    const long w = filtration(Fform, pi);

    const auto [Ad, Bd] = ad_bd(pi, N);
    const bool coprime = isobaric_coprime(reduce_isobaric(Ad, pi), reduce_isobaric(Bd, pi));

    const bool pass = rep.holds && w == qd + 1 && coprime;
    return {"A10", "trace of E* g_(2) realizes E* at level 1 with full filtration", pass,
            json{{"congruence", rep_json(rep)},
                 {"filtration", val_str(w)},
                 {"expected", qd + 1},
                 {"Ad_Bd_coprime_mod_pi", coprime}}};
}

json proof_report_json(const ProofTraceReport& r) {
    json j{{"k", r.k},
           {"l", r.l},
           {"alpha", r.alpha},
           {"beta", r.beta},
           {"k_coprime_p", r.k_coprime_p},
           {"premise", rep_json(r.premise)},
           {"h_integral", r.h_integral},
           {"F_congruent_kf", rep_json(r.f_congruent_kf)},
           {"H_congruent_chain", rep_json(r.h_congruent_chain)},
           {"w_F", val_str(r.w_F)},
           {"w_F_hypothesis", r.w_f_hypothesis},
           {"hypothesis_holds", r.hypothesis_holds},
           {"w_H", val_str(r.w_H)},
           {"h_weight_bound", r.h_weight_bound},
           {"w_H_within_bound", r.w_h_within_bound},
           {"conclusion", r.conclusion},
           {"all_checks_pass", r.all_checks_pass}};
    if (r.h_vs_estar) j["H_vs_minus_kEstar_f"] = rep_json(*r.h_vs_estar);
    if (r.h_vs_bd_f) j["H_vs_partial_gd_F"] = rep_json(*r.h_vs_bd_f);
    if (r.w_bd_f) j["w_partial_gd_F"] = val_str(*r.w_bd_f);
    return j;
}

CheckResult check_a11(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const FqPtr F = cfg.field();
    const long q = F->q();
    const long k = q * q - 1;
    const int N = std::max(cfg.prec, proof_trace_min_prec(k, pi));

    const OldPoly delta = OldPoly::level1_form(pi, BaseForm::delta);
    const OldPoly f = oldform_pair(delta, +1);
    const OldPoly g = OldPoly::estar_form(pi) * oldform_pair(delta, -1);
    const ProofTraceReport rep = proof_trace(f, g, N);

    const bool pass = rep.all_checks_pass && rep.alpha == 1 && rep.beta == 1 &&
                      rep.w_F == q * q - 1 && !rep.hypothesis_holds && rep.h_vs_bd_f &&
                      rep.h_vs_bd_f->holds && rep.w_bd_f && rep.w_H == *rep.w_bd_f;
    return {"A11", "counterexample replay: the congruence chain holds and the filtration drops",
            pass, json{{"report", proof_report_json(rep)}, {"prec_used", N}}};
}

CheckResult check_a12(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const FqPtr F = cfg.field();
    const long q = F->q();
    const long qd = pi.qd();
    json details;
    bool pass = true;

    const long w_gd = filtration(gd_series(pi, cfg.prec), pi);
    const long w_delta = filtration(delta_series(F, cfg.prec), pi);
    const SeriesForm pih(h_series(F, cfg.prec).series().scaled(RatK(pi.poly())),
                         q + 1, 1, Level::one);
    const long w_pih = filtration(pih, pi);
    details["w_gd"] = val_str(w_gd);
    details["w_delta"] = val_str(w_delta);
    details["w_pi_h"] = val_str(w_pih);
    pass = pass && w_gd == 0 && w_delta == q * q - 1 && w_pih == kValNegInfinity;

    // Search-oracle agreement on every admissible (weight, type) instance
    // up to 2(q^2-1), with deterministic pseudo-random isobaric inputs.
    const long wmax = 2 * (q * q - 1);
    const int P = std::min<int>(cfg.prec, static_cast<int>(wmax) + 24);
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<std::uint32_t> dc(0, F->q() - 1);
    json cases = json::array();
    int agreements = 0, instances = 0;
    for (long k0 = 0; k0 <= wmax; ++k0) {
        for (int l = 0; l < static_cast<int>(q) - 1; ++l) {
            const auto mons = enumerate_monomials(F, k0, l);
            if (mons.empty()) continue;
            IsobarPoly phi(F, k0, l);
            for (const auto& [i, j] : mons) {
                std::vector<std::uint32_t> c = {dc(rng), dc(rng), dc(rng)};
                phi.set(i, j, RatK(PolyA(F, std::move(c))));
            }
            if (phi.is_zero()) continue;
            const SeriesForm f(phi.expand(P), k0, l, Level::one);
            const long w_fast = filtration(f, pi);
            const long w_slow = filtration_bruteforce(f, pi);
            const bool agree = w_fast == w_slow;
            const bool congr = w_fast == kValNegInfinity || (f.weight() - w_fast) % (qd - 1) == 0;
            pass = pass && agree && congr;
            ++instances;
            agreements += agree;
            if (!agree)
                cases.push_back(json{{"weight", k0},
                                     {"type", l},
                                     {"divisibility", val_str(w_fast)},
                                     {"search", val_str(w_slow)}});
        }
    }
    details["oracle_instances"] = instances;
    details["oracle_agreements"] = agreements;
    if (!cases.empty()) details["disagreements"] = cases;

    // Named drop instances ride along.
    const SeriesForm g1 = gd_series_of_degree(F, 1, P);
    const SeriesForm g1h(series_mul(g1.series(), h_series(F, P).series()).truncated(P),
                         (q - 1) + (q + 1), 1, Level::one);
    const long w_g1h_fast = filtration(g1h, pi);
    const long w_g1h_slow = filtration_bruteforce(g1h, pi);
    details["w_g1h"] = val_str(w_g1h_fast);
    pass = pass && w_g1h_fast == w_g1h_slow;

    return {"A12", "filtration unit values, weight congruence, search-oracle agreement", pass,
            details};
}

CheckResult check_a13(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const FqPtr F = cfg.field();
    const int nprime = 50;
    const int uprec = 30;
    const PowerSums S = inverse_root_power_sums(pi, nprime, uprec);
    const AdditivePoly rho = carlitz_coeffs(pi.poly());

    // (sum_n s_n t^{n-1})(rho_pi(t) - 1/u) + pi = 0, coefficientwise in t.
    bool identity = true;
    for (int m = 0; m + 1 + pi.qd() < nprime && identity; ++m) {
        USeries acc(F, uprec - 1);
        long qi = 1;
        for (int i = 0; i <= rho.tau_degree(); ++i, qi *= F->q()) {
            const long n = m + 1 - qi;
            if (n >= 1)
                acc.add_in_place(
                    S.s(static_cast<int>(n)).truncated(uprec - 1).scaled(RatK(rho.coeff(i))));
        }
        acc = acc - S.s(m + 1).shifted_down(1);
        if (m == 0) acc.set_coeff(0, acc.coeff(0) + RatK(pi.poly()));
        identity = acc.known_zero();
    }

    // U preserves pi-integrality on random pi-integral series.
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> dd(0, 3);
    std::uniform_int_distribution<std::uint32_t> dc(0, F->q() - 1);
    bool monotone = true;
    int samples = 0;
    for (int it = 0; it < 20; ++it) {
        USeries f(F, 40);
        for (int n = 0; n < 40; ++n) {
            std::vector<std::uint32_t> num(static_cast<std::size_t>(dd(rng)) + 1);
            for (auto& x : num) x = dc(rng);
            PolyA den(F);
            do {
                std::vector<std::uint32_t> dv(static_cast<std::size_t>(dd(rng)) + 1);
                for (auto& x : dv) x = dc(rng);
                den = PolyA(F, std::move(dv));
            } while (den.is_zero() || den.divisible_by(pi.poly()));
            f.set_coeff(n, RatK(PolyA(F, std::move(num)), std::move(den)));
        }
        const long vf = series_vpi(f, pi);
        const long vu = series_vpi(u_operator(f, pi), pi);
        monotone = monotone && vu >= vf;
        ++samples;
    }
    return {"A13", "power-sum defining identity; U preserves pi-integrality",
            identity && monotone,
            json{{"identity_n", nprime}, {"identity_holds", identity},
                 {"random_samples", samples}, {"valuation_monotone", monotone}}};
}

CheckResult check_a14(const SuiteConfig& cfg) {
    const PrimePi pi = cfg.pi();
    const FqPtr F = cfg.field();
    const long qd = pi.qd();
    json details = json::array();
    bool pass = true;
    for (const auto& [name, base] : {std::pair<std::string, BaseForm>{"g_1", BaseForm::gd},
                                     {"h", BaseForm::h},
                                     {"delta", BaseForm::delta}}) {
        const USeries f = generator_series(F, base, 1, static_cast<int>(cfg.prec / qd)).series();
        const bool annihilated = u_operator(v_operator(f, pi), pi).known_zero();

        const OldPoly atom = OldPoly::level1_form(pi, base, 1);
        const USeries tr = trace_level_one(atom, cfg.prec);
        const USeries direct = generator_series(F, base, 1, cfg.prec).series();
        const bool restored = tr == direct.truncated(tr.prec());

        pass = pass && annihilated && restored;
        details.push_back(
            json{{"form", name}, {"u_v_zero", annihilated}, {"trace_identity", restored}});
    }
    return {"A14", "U after V annihilates; the trace restores level-1 forms", pass,
            json{{"cases", details}}};
}

// ---------------------------------------------------------------- runner

const std::vector<std::pair<std::string, std::vector<CheckResult (*)(const SuiteConfig&)>>>&
suite_table() {
    static const std::vector<std::pair<std::string, std::vector<CheckResult (*)(const SuiteConfig&)>>>
        table = {
            {"congruences", {check_a1, check_a2, check_a3}},
            {"operators", {check_a4, check_a5, check_a6, check_a7, check_a8, check_a13, check_a14}},
            {"existence", {check_a9, check_a10}},
            {"counterexample", {check_a11}},
            {"filtration", {check_a12}},
        };
    return table;
}

std::vector<CheckResult> run_checks(const std::vector<CheckResult (*)(const SuiteConfig&)>& fns,
                                    const SuiteConfig& cfg) {
    std::vector<CheckResult> out(fns.size());
    auto run_one = [&](std::size_t i) {
        try {
            out[i] = fns[i](cfg);
        } catch (const std::exception& e) {
            out[i] = CheckResult{"", "check aborted", false, json{{"error", e.what()}}};
        }
    };
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || fns.size() <= 1) {
        for (std::size_t i = 0; i < fns.size(); ++i) run_one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const std::size_t nworkers = std::min<std::size_t>(jobs, fns.size());
    for (std::size_t w = 0; w < nworkers; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < fns.size(); i = next.fetch_add(1))
                run_one(i);
        });
    for (auto& t : workers) t.join();
    return out;
}

}  // namespace

FqPtr SuiteConfig::field() const { return Fq::make(p, r, modulus); }

PrimePi SuiteConfig::pi() const { return PrimePi::parse(field(), pi_text); }

void SuiteConfig::validate() const {
    const FqPtr F = field();
    const long q = F->q();
    if (prec < 4 * q * q)
        throw ConfigError("precision " + std::to_string(prec) + " is below the minimum " +
                          std::to_string(4 * q * q) + " for q = " + std::to_string(q));
    if (format != "json" && format != "table")
        throw ConfigError("format must be json or table");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    (void)pi();
}

std::string SuiteConfig::label() const {
    std::string s = "q=" + std::to_string(field()->q()) + " pi=" + pi_text +
                    " N=" + std::to_string(prec);
    return s;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fns] : suite_table()) names.push_back(name);
    names.push_back("all");
    return names;
}

SuiteResult run_suite(const std::string& id, const SuiteConfig& cfg) {
    cfg.validate();
    std::vector<CheckResult (*)(const SuiteConfig&)> fns;
    bool found = false;
    for (const auto& [name, list] : suite_table()) {
        if (id == name || id == "all") {
            fns.insert(fns.end(), list.begin(), list.end());
            found = true;
        }
    }
    if (!found) throw ConfigError("unknown suite '" + id + "'");

    SuiteResult res;
    res.suite = id;
    res.cfg = cfg;
    const auto t0 = std::chrono::steady_clock::now();
    res.checks = run_checks(fns, cfg);
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    res.all_pass = true;
    for (const auto& c : res.checks) res.all_pass = res.all_pass && c.pass;

    json hashed = json::array();
    for (const auto& c : res.checks)
        hashed.push_back(json{{"id", c.id}, {"pass", c.pass}, {"details", c.details}});
    res.repro_hash = fnv1a(hashed.dump());
    return res;
}

json SuiteResult::to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks)
        checks_json.push_back(
            json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    json j{{"suite", suite},
           {"q", cfg.field()->q()},
           {"r", cfg.r},
           {"pi", cfg.pi_text},
           {"prec", cfg.prec},
           {"checks", checks_json},
           {"pass", all_pass}};
    if (!cfg.modulus.empty()) j["modulus"] = cfg.modulus;
    std::ostringstream h;
    h << std::hex << repro_hash;
    j["hash"] = h.str();
    return j;
}

std::string SuiteResult::to_table() const {
    std::ostringstream os;
    os << "suite " << suite << " [" << cfg.label() << "]\n";
    for (const auto& c : checks)
        os << "  " << c.id << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
    os << (all_pass ? "PASS" : "FAIL") << "  (" << checks.size() << " checks, "
       << static_cast<long>(wall_ms) << " ms, hash " << std::hex << repro_hash << ")\n";
    return os.str();
}

long filtration_bruteforce(const SeriesForm& f, const PrimePi& pi) {
    if (f.level() != Level::one) throw InvalidForm("filtration needs a level-1 form");
    const FqPtr& F = f.field();
    const long q = F->q();
    const ResField R(pi);
    const ResSeries fbar = series_reduce_mod_pi(f.series(), pi);
    if (fbar.known_zero()) return kValNegInfinity;

    const int P = f.prec();
    for (long k0 = 0; k0 < f.weight(); ++k0) {
        // Monomials of weight k0 over every type at once: members of M_{k0}.
        std::vector<IsobarPoly::Key> mons;
        for (long j = 0; (q + 1) * j <= k0; ++j) {
            const long rest = k0 - (q + 1) * j;
            if (rest % (q - 1) == 0) mons.push_back({rest / (q - 1), j});
        }
        if (mons.empty()) continue;
        if (mons.back().second + 2 >= P)
            throw PrecisionError("filtration_bruteforce: precision too low at weight " +
                                 std::to_string(k0));

        std::vector<PolyA> residual(static_cast<std::size_t>(P), PolyA::zero(F));
        for (int n = 0; n < P; ++n) residual[static_cast<std::size_t>(n)] = fbar.coeff(n);
        const SeriesForm g1 = gd_series_of_degree(F, 1, P);
        const SeriesForm h = h_series(F, P);
        for (const auto& [i, j] : mons) {
            const PolyA r = residual[static_cast<std::size_t>(j)];
            if (r.is_zero()) continue;
            USeries mon = series_mul(g1.series().pow(i), h.series().pow(j));
            if (mon.prec() > P) mon = mon.truncated(P);
            const ResSeries mbar = series_reduce_mod_pi(mon, pi);
            const PolyA c = R.mul(r, R.inv(mbar.coeff(static_cast<int>(j))));
            for (int n = 0; n < P; ++n)
                residual[static_cast<std::size_t>(n)] =
                    R.sub(residual[static_cast<std::size_t>(n)], R.mul(c, mbar.coeff(n)));
        }
        bool zero = true;
        for (const PolyA& x : residual) zero = zero && x.is_zero();
        if (zero) return k0;
    }
    return f.weight();
}

nlohmann::json congruence_report_json(const CongruenceReport& rep) { return rep_json(rep); }

nlohmann::json proof_trace_report_json(const ProofTraceReport& rep) {
    return proof_report_json(rep);
}

std::vector<SuiteConfig> acceptance_matrix() {
    std::vector<SuiteConfig> out;
    for (const char* pitext : {"T", "T+1", "T^2+1"}) {
        SuiteConfig c;
        c.p = 3;
        c.pi_text = pitext;
        c.prec = 365;
        out.push_back(c);
    }
    SuiteConfig c5;
    c5.p = 5;
    c5.pi_text = "T";
    c5.prec = 130;
    out.push_back(c5);
    return out;
}

}  // namespace dmf
