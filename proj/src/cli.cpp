#include "dmf/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "dmf/error.hpp"
#include "dmf/verify.hpp"

namespace dmf {
namespace {

using nlohmann::json;

struct FieldArgs {
    long q = 3;
    int r = 1;
    std::string modulus_text;
    std::string pi_text = "T";
    int prec = 365;
    std::string format = "json";
    std::string out;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "field size (a power of an odd prime, or the characteristic)");
        cmd->add_option("--r", r, "extension degree; with --r, --q is the characteristic");
        cmd->add_option("--modulus", modulus_text,
                        "defining polynomial digits over F_p, constant first, e.g. 1,0,1");
        cmd->add_option("--pi", pi_text, "monic irreducible pi as polynomial text");
        cmd->add_option("--prec", prec, "u-series precision N");
        cmd->add_option("--format", format, "output format: json or table")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", out, "write the report to this file as well");
    }

    std::pair<int, int> p_and_r() const {
        long qq = q;
        if (r > 1) return {static_cast<int>(qq), r};  // interpret --q as p
        int p = 2;
        while (p * p <= qq && qq % p != 0) ++p;
        if (qq % p != 0) p = static_cast<int>(qq);
        int rr = 0;
        long rest = qq;
        while (rest > 1 && rest % p == 0) {
            rest /= p;
            ++rr;
        }
        if (rest != 1) throw ConfigError("--q must be a prime power");
        return {p, rr};
    }

    std::vector<std::uint32_t> modulus_digits() const {
        std::vector<std::uint32_t> out_digits;
        std::string cur;
        for (char c : modulus_text + ",") {
            if (c == ',') {
                if (!cur.empty()) out_digits.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                cur += c;
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                throw ConfigError("--modulus takes comma-separated digits");
            }
        }
        return out_digits;
    }

    FqPtr field() const {
        const auto [p, rr] = p_and_r();
        return Fq::make(p, rr, modulus_digits());
    }

    PrimePi pi() const { return PrimePi::parse(field(), pi_text); }
};

void emit(const json& j, const FieldArgs& args) {
    const std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!args.out.empty()) {
        std::ofstream f(args.out);
        if (!f) throw ConfigError("cannot open output file " + args.out);
        f << text;
    }
}

json series_json(const USeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeff_strings()) coeffs.push_back(c);
    return coeffs;
}

void emit_series(const FieldArgs& args, const std::string& kind, const std::string& name,
                 const USeries& s, std::optional<long> weight, std::optional<int> type,
                 std::optional<std::string> level) {
    if (args.format == "table") {
        std::cout << kind << " " << name << " [q=" << args.field()->q() << " pi=" << args.pi_text
                  << "]\n";
        for (int n = 0; n < s.prec(); ++n)
            if (!s.coeff(n).is_zero())
                std::cout << "  u^" << n << ": " << s.coeff(n).to_string() << "\n";
        return;
    }
    const auto [p, r] = args.p_and_r();
    json j{{"q", args.field()->q()}, {"r", r}, {"pi", args.pi_text},
           {kind == "expand" ? "form" : "op", name}, {"prec", s.prec()},
           {"coeffs", series_json(s)}};
    if (!args.field()->modulus().empty()) j["modulus"] = args.field()->modulus();
    if (weight) j["weight"] = *weight;
    if (type) j["type"] = *type;
    if (level) j["level"] = *level;
    emit(j, args);
}

struct NamedForm {
    USeries series;
    long weight;
    int type;
    std::string level;
};

NamedForm named_form(const std::string& name, const FieldArgs& args) {
    const FqPtr F = args.field();
    const int N = args.prec;
    if (name == "h") {
        const SeriesForm f = h_series(F, N);
        return {f.series(), f.weight(), f.type(), "one"};
    }
    if (name == "delta") {
        const SeriesForm f = delta_series(F, N);
        return {f.series(), f.weight(), f.type(), "one"};
    }
    if (name == "e") return {e_series(F, N), 2, 1, "one"};
    if (name == "e_star") {
        const SeriesForm f = e_star_series(args.pi(), N);
        return {f.series(), f.weight(), f.type(), "pi"};
    }
    if (name == "gd") {
        const SeriesForm f = gd_series(args.pi(), N);
        return {f.series(), f.weight(), f.type(), "one"};
    }
    if (name.size() == 2 && name[0] == 'g' && name[1] >= '1' && name[1] <= '9') {
        const SeriesForm f = gd_series_of_degree(F, name[1] - '0', N);
        return {f.series(), f.weight(), f.type(), "one"};
    }
    throw ConfigError("unknown form '" + name +
                      "' (expected g1.., gd, h, delta, e, e_star)");
}

int cmd_expand(const FieldArgs& args, const std::string& form) {
    const NamedForm f = named_form(form, args);
    emit_series(args, "expand", form, f.series, f.weight, f.type, f.level);
    return 0;
}

int cmd_filtration(const FieldArgs& args, const std::string& form) {
    const PrimePi pi = args.pi();
    SeriesForm f = [&]() -> SeriesForm {
        std::ifstream in(form);
        if (in) {
            json j;
            in >> j;
            FieldArgs file_args = args;
            file_args.q = j.at("q").get<long>();
            file_args.r = j.value("r", 1);
            const FqPtr F = file_args.field();
            std::vector<RatK> coeffs;
            for (const auto& c : j.at("coeffs")) coeffs.push_back(RatK::parse(F, c.get<std::string>()));
            return SeriesForm(USeries(F, std::move(coeffs)), j.at("weight").get<long>(),
                              j.at("type").get<int>(), Level::one);
        }
        const NamedForm nf = named_form(form, args);
        if (nf.level != "one") throw ConfigError("filtration needs a level-1 form");
        return SeriesForm(nf.series, nf.weight, nf.type, Level::one);
    }();

    const long w = filtration(f, pi);
    json iso = json::array();
    const IsobarPoly phi = isobaric_solve(f);
    for (const auto& [key, c] : phi.terms())
        iso.push_back(json::array({key.first, key.second, c.to_string()}));
    json j{{"form", form},
           {"q", args.field()->q()},
           {"pi", args.pi_text},
           {"weight", f.weight()},
           {"type", f.type()},
           {"filtration", w == kValNegInfinity ? json("-inf") : json(w)},
           {"isobaric", iso}};
    emit(j, args);
    return 0;
}

int cmd_op(const FieldArgs& args, const std::string& opname, const std::string& expr) {
    const PrimePi pi = args.pi();
    const FqPtr F = args.field();
    const int N = args.prec;

    if (opname == "theta") {
        emit_series(args, "op", "theta", theta(eval_series_expr(expr, pi, N)), std::nullopt,
                    std::nullopt, std::nullopt);
        return 0;
    }
    if (opname == "partial") {
        const OldPoly f = parse_oldform_expr(expr, pi);
        const USeries flat = flatten(f, N);
        USeries s = theta(flat);
        const RatK k = RatK::from_int(F, f.weight());
        if (!k.is_zero()) s = s + series_mul(e_series(F, N), flat).scaled(k);
        emit_series(args, "op", "partial", s, f.weight() + 2, f.type_l() + 1, std::nullopt);
        return 0;
    }
    if (opname == "u") {
        emit_series(args, "op", "u", u_operator(eval_series_expr(expr, pi, N), pi), std::nullopt,
                    std::nullopt, std::nullopt);
        return 0;
    }
    if (opname == "v") {
        const long qd = pi.qd();
        const int inner = static_cast<int>((N + qd - 1) / qd);
        USeries v = v_operator(eval_series_expr(expr, pi, inner), pi);
        if (v.prec() > N) v = v.truncated(N);
        emit_series(args, "op", "v", v, std::nullopt, std::nullopt, std::nullopt);
        return 0;
    }
    if (opname == "w") {
        const OldPoly f = parse_oldform_expr(expr, pi);
        const OldPoly w = w_action(f);
        json monos = json::array();
        for (const auto& m : w.monomials()) {
            json atoms = json::array();
            for (const auto& [atom, e] : m.factors) atoms.push_back(json::array({atom.name(), e}));
            monos.push_back(json{{"coeff", m.coeff.to_string()}, {"atoms", atoms}});
        }
        const auto eig = w_eigenvalue(f);
        json j{{"op", "w"},
               {"q", F->q()},
               {"pi", args.pi_text},
               {"weight", w.weight()},
               {"type", w.type_l()},
               {"monomials", monos}};
        if (eig) j["eigenvalue"] = *eig;
        emit(j, args);
        return 0;
    }
    if (opname == "trace") {
        const OldPoly f = parse_oldform_expr(expr, pi);
        emit_series(args, "op", "trace", trace_level_one(f, N), f.weight(), f.type_l(), "one");
        return 0;
    }
    throw ConfigError("unknown op '" + opname + "' (theta|partial|u|v|w|trace)");
}

int cmd_verify(const FieldArgs& args, const std::string& suite, int jobs) {
    const auto [p, r] = args.p_and_r();
    SuiteConfig cfg;
    cfg.p = p;
    cfg.r = r;
    cfg.modulus = args.modulus_digits();
    cfg.pi_text = args.pi_text;
    cfg.prec = args.prec;
    cfg.format = args.format;
    cfg.out = args.out;
    cfg.jobs = jobs;

    const SuiteResult res = run_suite(suite, cfg);
    if (args.format == "table") {
        std::cout << res.to_table();
        if (!args.out.empty()) {
            std::ofstream f(args.out);
            if (!f) throw ConfigError("cannot open output file " + args.out);
            f << res.to_table();
        }
    } else {
        for (const auto& c : res.checks)
            std::cerr << c.id << " [" << cfg.label() << "] " << (c.pass ? "pass" : "FAIL") << " - "
                      << c.name << "\n";
        emit(res.to_json(), args);
    }
    return res.all_pass ? 0 : 1;
}

int cmd_proof_trace(const FieldArgs& args, const std::string& fexpr, const std::string& gexpr) {
    const PrimePi pi = args.pi();
    const OldPoly f = parse_oldform_expr(fexpr, pi);
    const OldPoly g = parse_oldform_expr(gexpr, pi);
    const int N = std::max(args.prec, proof_trace_min_prec(f.weight(), pi));
    const ProofTraceReport rep = proof_trace(f, g, N);
    json j = proof_trace_report_json(rep);
    j["prec_used"] = N;
    emit(j, args);
    return rep.all_checks_pass ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"exact u-series calculator and verifier for Drinfeld modular forms over F_q[T]"};
    app.require_subcommand(1);

    FieldArgs ex_args, fi_args, op_args, ve_args, pt_args;
    std::string ex_form = "delta", fi_form = "delta", op_name, op_expr, suite = "all";
    std::string pt_f, pt_g;
    int jobs = 1;

    auto* ex = app.add_subcommand("expand", "u-series expansion of a named form");
    ex_args.attach(ex);
    ex->add_option("--form", ex_form, "g1.., gd, h, delta, e, e_star")->required();

    auto* fi = app.add_subcommand("filtration", "weight filtration of a level-1 form");
    fi_args.attach(fi);
    fi->add_option("--form", fi_form, "named form or a JSON file from 'expand'")->required();

    auto* op = app.add_subcommand("op", "apply an operator to a form expression");
    op_args.attach(op);
    op->add_option("name", op_name, "theta|partial|u|v|w|trace")->required();
    op->add_option("--in", op_expr, "form expression")->required();

    auto* ve = app.add_subcommand("verify", "run named verification suites");
    ve_args.attach(ve);
    ve->add_option("--suite", suite, "congruences|operators|existence|counterexample|filtration|all");
    ve->add_option("--jobs", jobs, "number of concurrent checks");

    auto* pt = app.add_subcommand("proof-trace", "replay the filtration argument for theta f = g");
    pt_args.attach(pt);
    pt->add_option("--f", pt_f, "form expression, W-eigenvector of weight k")->required();
    pt->add_option("--g", pt_g, "form expression, W-eigenvector of weight k+2")->required();

    try {
        app.parse(argc, argv);
        if (ex->parsed()) return cmd_expand(ex_args, ex_form);
        if (fi->parsed()) return cmd_filtration(fi_args, fi_form);
        if (op->parsed()) return cmd_op(op_args, op_name, op_expr);
        if (ve->parsed()) return cmd_verify(ve_args, suite, jobs);
        if (pt->parsed()) return cmd_proof_trace(pt_args, pt_f, pt_g);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dmf
