// Command-line front end: parses .awb.json documents and runs the library's
// verifiers and computations. Exit codes: 0 all requested assertions hold,
// 1 an assertion failed, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "awb/eightterm.hpp"
#include "awb/io.hpp"

namespace {

using namespace awb;
using awb::io::Document;
using nlohmann::json;

struct Options {
    std::string file;
    std::string field_override;
    bool machine = false;
    std::string name, algebra, representation, module, extension, subspace, ideal;
    std::string left_name, right_name, cochain, dm, da;
    int degree = 1;
    std::string ext_mode;  // cocycle | build | sum
};

int exit_ok(bool ok) { return ok ? 0 : 1; }

template <Field K>
std::string triple_str(const Awb<K>& a, const std::array<std::size_t, 3>& t) {
    return "(" + a.labels[t[0]] + "," + a.labels[t[1]] + "," + a.labels[t[2]] + ")";
}

template <Field K>
const Awb<K>& need_algebra(const Document<K>& doc, const std::string& name) {
    auto it = doc.algebras.find(name);
    if (it == doc.algebras.end()) throw io::parse_error("no algebra named \"" + name + "\"");
    return it->second;
}
template <Field K>
const Matrix<K>& need_map(const Document<K>& doc, const std::string& name) {
    auto it = doc.maps.find(name);
    if (it == doc.maps.end()) throw io::parse_error("no map named \"" + name + "\"");
    return it->second;
}
template <Field K>
const Representation<K>& need_rep(const Document<K>& doc, const std::string& name) {
    auto it = doc.representations.find(name);
    if (it == doc.representations.end())
        throw io::parse_error("no representation named \"" + name + "\"");
    return it->second;
}
template <Field K>
const AbelianExtension<K>& need_ext(const Document<K>& doc, const std::string& name) {
    auto it = doc.extensions.find(name);
    if (it == doc.extensions.end()) throw io::parse_error("no extension named \"" + name + "\"");
    return it->second.ext;
}
template <Field K>
const CrossedModule<K>& need_cm(const Document<K>& doc, const std::string& name) {
    auto it = doc.crossed_modules.find(name);
    if (it == doc.crossed_modules.end())
        throw io::parse_error("no crossed module named \"" + name + "\"");
    return it->second.cm;
}
template <Field K>
const CrossedExtension<K>& need_ce(const Document<K>& doc, const std::string& name) {
    auto it = doc.crossed_extensions.find(name);
    if (it == doc.crossed_extensions.end())
        throw io::parse_error("no crossed extension named \"" + name + "\"");
    return it->second.ce;
}

template <Field K>
json vec_json(const Vec<K>& v) {
    json a = json::array();
    for (const K& x : v) a.push_back(x.str());
    return a;
}

template <Field K>
int cmd_verify(const Document<K>& doc, const Options& opt) {
    bool all_ok = true;
    json out = json::object();
    auto note = [&](const std::string& kind, const std::string& name, bool ok,
                    const std::string& detail = "") {
        all_ok = all_ok && ok;
        if (opt.machine)
            out[kind][name] = json{{"ok", ok}, {"detail", detail}};
        else
            std::cout << kind << " " << name << ": " << (ok ? "ok" : "FAIL")
                      << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    };
    auto want = [&](const std::string& name) { return opt.name.empty() || name == opt.name; };
    for (const auto& [name, a] : doc.algebras) {
        if (!want(name)) continue;
        AwbReport r = verify_awb(a);
        std::string detail;
        if (!r.associative)
            detail = "associativity FAILS at " + triple_str(a, *r.counterexample);
        else if (!r.fundamental)
            detail = "fundamental identity FAILS at " + triple_str(a, *r.counterexample);
        note("algebra", name, r.ok(), detail);
    }
    for (const auto& [name, r] : doc.representations) {
        if (!want(name)) continue;
        ActionReport ar = verify_representation(r);
        note("representation", name, ar.ok,
             ar.ok ? "" : "equation " + std::to_string(*ar.failed_equation) + " fails");
    }
    for (const auto& [name, na] : doc.actions) {
        if (!want(name)) continue;
        const Awb<K>& a = need_algebra(doc, na.algebra);
        const Awb<K>& m = need_algebra(doc, na.module);
        if (!a.validated || !m.validated) {
            note("action", name, false, "carrier algebras fail verification");
            continue;
        }
        ActionReport ar = verify_action(a, m, na.act);
        note("action", name, ar.ok,
             ar.ok ? "" : "equation " + std::to_string(*ar.failed_equation) + " fails");
    }
    for (const auto& [name, e] : doc.extensions) {
        if (!want(name)) continue;
        ExtensionReport r = verify_extension(e.ext);
        note("extension", name, r.ok(),
             r.ok() ? "" : (!r.exact ? "not exact" : "structure maps fail"));
    }
    for (const auto& [name, c] : doc.crossed_modules) {
        if (!want(name)) continue;
        note("crossed_module", name, verify_crossed_module(c.cm).ok());
    }
    for (const auto& [name, c] : doc.crossed_extensions) {
        if (!want(name)) continue;
        note("crossed_extension", name, verify_crossed_extension(c.ce).ok());
    }
    if (opt.machine) std::cout << out.dump(2) << "\n";
    return exit_ok(all_ok);
}

template <Field K>
int cmd_ideals(const Document<K>& doc, const Options& opt) {
    const Awb<K>& a = need_algebra(doc, opt.algebra);
    Subspace<K> u = Subspace<K>::span_cols(need_map(doc, opt.subspace));
    IdealReport r = ideal_predicates(a, u);
    json out{{"subalgebra", r.subalgebra},
             {"left_ideal", r.left_ideal},
             {"right_ideal", r.right_ideal},
             {"two_sided", r.two_sided}};
    if (r.two_sided) {
        CommutatorIdeal<K> ci = commutator_ideal(a, u, u);
        out["commutator_ideal_dim"] = ci.space.dim();
        out["commutator_ideal_is_ambient_ideal"] = ci.is_a_ideal;
    }
    if (opt.machine)
        std::cout << out.dump(2) << "\n";
    else {
        std::cout << "subalgebra: " << (r.subalgebra ? "yes" : "no") << "\n"
                  << "left ideal: " << (r.left_ideal ? "yes" : "no") << "\n"
                  << "right ideal: " << (r.right_ideal ? "yes" : "no") << "\n"
                  << "two-sided ideal: " << (r.two_sided ? "yes" : "no") << "\n";
        if (r.two_sided)
            std::cout << "commutator ideal [[U,U]]: dim "
                      << out["commutator_ideal_dim"].get<std::size_t>()
                      << (out["commutator_ideal_is_ambient_ideal"].get<bool>()
                              ? " (an ideal of the ambient algebra)"
                              : " (not an ambient ideal)")
                      << "\n";
    }
    return 0;
}

template <Field K>
int cmd_center(const Document<K>& doc, const Options& opt) {
    const Awb<K>& a = need_algebra(doc, opt.algebra);
    Subspace<K> z = center(a);
    if (opt.machine) {
        json basis = json::array();
        for (std::size_t i = 0; i < z.dim(); ++i) basis.push_back(vec_json(z.basis_vector(i)));
        std::cout << json{{"dim", z.dim()}, {"basis", basis}}.dump(2) << "\n";
    } else {
        std::cout << "center: dim " << z.dim() << "\n";
        for (std::size_t i = 0; i < z.dim(); ++i) {
            std::cout << " ";
            for (const K& x : z.basis_vector(i)) std::cout << " " << x.str();
            std::cout << "\n";
        }
    }
    return 0;
}

template <Field K>
int cmd_cohomology(const Document<K>& doc, const Options& opt) {
    const Representation<K>& rep = need_rep(doc, opt.representation);
    int n = opt.degree;
    Cohomology<K> h = cohomology(rep, n);
    json out{{"degree", n},
             {"dim", h.dim()},
             {"cocycles", h.cocycles.dim()},
             {"coboundaries", h.coboundaries.dim()},
             {"cochain_dims",
              json{{"lower", k_space_dim(rep, n - 2)},
                   {"here", k_space_dim(rep, n - 1)},
                   {"upper", k_space_dim(rep, n)}}},
             {"extrapolated", h.extrapolated}};
    if (opt.machine) {
        json reps = json::array();
        for (const Vec<K>& v : h.class_basis) reps.push_back(vec_json(v));
        out["representatives"] = reps;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "dim H^" << n << " = " << h.dim() << "\n";
        std::cout << "cochain dims: " << k_space_dim(rep, n - 2) << " -> "
                  << k_space_dim(rep, n - 1) << " -> " << k_space_dim(rep, n)
                  << "; cocycles " << h.cocycles.dim() << ", coboundaries "
                  << h.coboundaries.dim() << (h.extrapolated ? " [extrapolated degree]" : "")
                  << "\n";
    }
    return 0;
}

template <Field K>
int cmd_derivations(const Document<K>& doc, const Options& opt) {
    if (!opt.algebra.empty()) {
        const Awb<K>& a = need_algebra(doc, opt.algebra);
        DerAwb<K> d = der_awb(a);
        if (opt.machine)
            std::cout << json{{"dim", d.space.dim()}, {"lie_closed", d.lie_closed}}.dump(2)
                      << "\n";
        else
            std::cout << "dim Der = " << d.space.dim()
                      << (d.lie_closed ? " (closed under commutators)" : " (NOT closed)")
                      << "\n";
        return exit_ok(d.lie_closed);
    }
    const Representation<K>& rep = need_rep(doc, opt.representation);
    Subspace<K> d = derivation_space(rep);
    if (opt.machine)
        std::cout << json{{"dim", d.dim()}}.dump(2) << "\n";
    else
        std::cout << "dim Der = " << d.dim() << "\n";
    return 0;
}

template <Field K>
int cmd_ext(const Document<K>& doc, const Options& opt) {
    if (opt.ext_mode == "cocycle") {
        const AbelianExtension<K>& e = need_ext(doc, opt.extension);
        KCochain<K> z = cocycle_of_extension(e);
        json out{{"f", io::detail::cochain_json(z.f)}, {"g", io::detail::cochain_json(z.g)}};
        if (opt.machine)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << "cocycle f: " << out["f"].dump() << "\ncocycle g: " << out["g"].dump()
                      << "\n";
        return 0;
    }
    if (opt.ext_mode == "build") {
        auto it = doc.cochains.find(opt.cochain);
        if (it == doc.cochains.end())
            throw io::parse_error("no cochain named \"" + opt.cochain + "\"");
        if (it->second.degree != 0) throw io::parse_error("ext build expects a degree-0 cochain");
        const Representation<K>& rep = need_rep(doc, it->second.representation);
        AbelianExtension<K> e = extension_from_cocycle(rep, it->second.z);
        bool ok = verify_extension(e).ok();
        json out{{"dim", e.total.dim()},
                 {"product", io::detail::tensor_json(e.total.product)},
                 {"bracket", io::detail::tensor_json(e.total.bracket)},
                 {"verified", ok}};
        std::cout << (opt.machine ? out.dump(2)
                                  : "built extension of dim " + std::to_string(e.total.dim()) +
                                        ", verified: " + (ok ? "yes" : "no"))
                  << "\n";
        return exit_ok(ok);
    }
    if (opt.ext_mode == "sum") {
        const AbelianExtension<K>& e1 = need_ext(doc, opt.left_name);
        const AbelianExtension<K>& e2 = need_ext(doc, opt.right_name);
        AbelianExtension<K> s = baer_sum(e1, e2);
        Cohomology<K> h1 = cohomology(e1.rep, 1);
        Vec<K> lhs = h1.normal_form(k_flatten(cocycle_of_extension(s)));
        Vec<K> rhs =
            h1.normal_form(k_flatten(cocycle_of_extension(e1) + cocycle_of_extension(e2)));
        bool additive = lhs == rhs;
        json out{{"dim", s.total.dim()}, {"class_additive", additive}};
        std::cout << (opt.machine ? out.dump(2)
                                  : "Baer sum has dim " + std::to_string(s.total.dim()) +
                                        "; classes add: " + (additive ? "yes" : "NO"))
                  << "\n";
        return exit_ok(additive);
    }
    throw io::parse_error("ext: unknown mode \"" + opt.ext_mode + "\"");
}

template <Field K>
int cmd_wells(const Document<K>& doc, const Options& opt) {
    const AbelianExtension<K>& e = need_ext(doc, opt.extension);
    WellsReport<K> r = wells_sequence_report(e);
    json out{{"dims",
              json{{"z_minus1", r.dim_z},
                   {"der_e_m", r.dim_der_em},
                   {"compatible_pairs", r.dim_d},
                   {"h1", r.dim_h1}}},
             {"sigma_injective", r.sigma_injective},
             {"im_sigma_eq_ker_kappa", r.im_sigma_eq_ker_kappa},
             {"im_kappa_eq_ker_omega", r.im_kappa_eq_ker_omega},
             {"split", r.split},
             {"corollary_dims", r.corollary_dims},
             {"exact", r.ok()}};
    if (opt.machine)
        std::cout << out.dump(2) << "\n";
    else {
        std::cout << "dims (Z^-1, Der(E|M), D, H^1) = (" << r.dim_z << ", " << r.dim_der_em
                  << ", " << r.dim_d << ", " << r.dim_h1 << ")\n"
                  << "Ker(sigma) = 0: " << (r.sigma_injective ? "yes" : "NO") << "\n"
                  << "Im(sigma) = Ker(kappa): " << (r.im_sigma_eq_ker_kappa ? "yes" : "NO")
                  << "\n"
                  << "Im(kappa) = Ker(omega): " << (r.im_kappa_eq_ker_omega ? "yes" : "NO")
                  << "\n";
        if (r.split)
            std::cout << "split: dim Der(E|M) = dim D + dim Z^-1: "
                      << (r.corollary_dims ? "yes" : "NO") << "\n";
    }
    return exit_ok(r.ok());
}

template <Field K>
int cmd_extend_check(const Document<K>& doc, const Options& opt) {
    const AbelianExtension<K>& e = need_ext(doc, opt.extension);
    DerPair<K> pair{need_map(doc, opt.dm), need_map(doc, opt.da)};
    ExtendOutcome<K> out = extend_pair(e, pair);
    std::string reason = out.reason == ExtendReason::extended ? "extensible"
                         : out.reason == ExtendReason::incompatible
                             ? "incompatible pair"
                             : "nonzero obstruction class";
    if (opt.machine) {
        json j{{"extensible", out.d_e.has_value()}, {"reason", reason}};
        if (out.d_e) j["lift"] = io::detail::map_json(*out.d_e);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << reason << "\n";
        if (out.d_e)
            for (std::size_t i = 0; i < out.d_e->rows(); ++i) {
                for (std::size_t j = 0; j < out.d_e->cols(); ++j)
                    std::cout << (j ? " " : "") << (*out.d_e)(i, j).str();
                std::cout << "\n";
            }
    }
    return exit_ok(out.d_e.has_value());
}

template <Field K>
int cmd_crossed_verify(const Document<K>& doc, const Options& opt) {
    if (!opt.module.empty()) {
        const CrossedModule<K>& cm = need_cm(doc, opt.module);
        CrossedModuleReport r = verify_crossed_module(cm);
        json out{{"mu_hom", r.mu_hom},
                 {"action", r.action_ok},
                 {"cm1", r.cm1},
                 {"cm2", r.cm2},
                 {"ker_in_center", r.ker_in_center},
                 {"im_ideal", r.im_ideal},
                 {"im_trivial_on_ker", r.im_trivial_on_ker},
                 {"ok", r.ok()}};
        std::cout << (opt.machine ? out.dump(2)
                                  : std::string("crossed module: ") + (r.ok() ? "ok" : "FAIL"))
                  << "\n";
        return exit_ok(r.ok());
    }
    const CrossedExtension<K>& ce = need_ce(doc, opt.extension);
    CrossedExtensionReport r = verify_crossed_extension(ce);
    json out{{"crossed_module", r.cm_ok},
             {"sigma", r.sigma_hom},
             {"exact_at_mm", r.exact_mm},
             {"exact_at_aaa", r.exact_aaa},
             {"induced_representation", r.induced_matches},
             {"ok", r.ok()}};
    std::cout << (opt.machine ? out.dump(2)
                              : std::string("crossed extension: ") + (r.ok() ? "ok" : "FAIL"))
              << "\n";
    return exit_ok(r.ok());
}

template <Field K>
int cmd_eta(const Document<K>& doc, const Options& opt) {
    const CrossedExtension<K>& ce = need_ce(doc, opt.extension);
    Cohomology<K> h2 = cohomology(ce.rep, 2);
    Vec<K> cls = eta_class(ce, h2);
    bool zero = vec_is_zero(cls);
    if (opt.machine)
        std::cout << json{{"zero", zero}, {"class", vec_json(cls)}, {"h2_dim", h2.dim()}}.dump(2)
                  << "\n";
    else
        std::cout << "eta class is " << (zero ? "zero" : "NONZERO") << " in H^2 of dim "
                  << h2.dim() << "\n";
    return 0;
}

template <Field K>
int cmd_baer(const Document<K>& doc, const Options& opt) {
    const CrossedExtension<K>& x = need_ce(doc, opt.left_name);
    const CrossedExtension<K>& y = need_ce(doc, opt.right_name);
    CrossedExtension<K> s = baer_sum_ce(x, y);
    Cohomology<K> h2 = cohomology(x.rep, 2);
    bool additive = eta_class(s, h2) == vec_add(eta_class(x, h2), eta_class(y, h2));
    bool verified = verify_crossed_extension(s).ok();
    if (opt.machine)
        std::cout << json{{"verified", verified}, {"eta_additive", additive}}.dump(2) << "\n";
    else
        std::cout << "Baer sum verified: " << (verified ? "yes" : "NO")
                  << "; eta additive: " << (additive ? "yes" : "NO") << "\n";
    return exit_ok(verified && additive);
}

template <Field K>
int cmd_internal_cat(const Document<K>& doc, const Options& opt) {
    const CrossedModule<K>& cm = need_cm(doc, opt.module);
    InternalCategory<K> ic = to_internal_category(cm);
    FromInternalCategory<K> back = from_internal_category(ic);
    bool cat_ok = verify_internal_category(ic).ok();
    bool round = back.cm.m == cm.m && back.cm.a == cm.a && back.cm.mu == cm.mu &&
                 back.cm.act == cm.act;
    if (opt.machine)
        std::cout << json{{"category_ok", cat_ok}, {"round_trip_exact", round}}.dump(2) << "\n";
    else
        std::cout << "internal category ok: " << (cat_ok ? "yes" : "NO")
                  << "; round trip tensor-exact: " << (round ? "yes" : "NO") << "\n";
    return exit_ok(cat_ok && round);
}

template <Field K>
int cmd_eight_term(const Document<K>& doc, const Options& opt) {
    const Awb<K>& a = need_algebra(doc, opt.algebra);
    Subspace<K> b = Subspace<K>::span_cols(need_map(doc, opt.ideal));
    const Representation<K>& m = need_rep(doc, opt.representation);
    EightTermReport<K> r = eight_term_report(a, b, m);
    json out{{"dims",
              json{{"h0_quotient", r.dim_h0_q},
                   {"h0_total", r.dim_h0_a},
                   {"hom_bab_m", r.dim_hom},
                   {"h1_quotient", r.dim_h1_q},
                   {"h1_total", r.dim_h1_a}}},
             {"exact_at_first_four_nodes",
              json::array({r.exact_at_h0_q, r.exact_at_h0_a, r.exact_at_hom, r.exact_at_h1_q})},
             {"r_tau_star_vanishes", r.r_tau_star_vanishes},
             {"gamma_r_vanishes", r.gamma_r_vanishes},
             {"tau_star_gamma_vanishes", r.tau_star_gamma_vanishes},
             {"connecting_map", "reconstructed"},
             {"ok", r.ok()}};
    if (opt.machine)
        std::cout << out.dump(2) << "\n";
    else {
        std::cout << "dims (H0(A/B), H0(A), Hom(B_ab,M), H1(A/B), H1(A)) = (" << r.dim_h0_q
                  << ", " << r.dim_h0_a << ", " << r.dim_hom << ", " << r.dim_h1_q << ", "
                  << r.dim_h1_a << ")\n"
                  << "exact at the first four nodes: "
                  << (r.exact_at_h0_q && r.exact_at_h0_a && r.exact_at_hom && r.exact_at_h1_q
                          ? "yes"
                          : "NO")
                  << "\n"
                  << "composites r tau*, gamma r, tau* gamma vanish: "
                  << (r.r_tau_star_vanishes && r.gamma_r_vanishes && r.tau_star_gamma_vanishes
                          ? "yes"
                          : "NO")
                  << " (connecting map: reconstructed)\n";
    }
    return exit_ok(r.ok());
}

template <Field K>
int run(const std::string& command, const std::string& text, const Options& opt) {
    Document<K> doc = io::parse_document_text<K>(text, opt.field_override);
    if (command == "verify") return cmd_verify(doc, opt);
    if (command == "ideals") return cmd_ideals(doc, opt);
    if (command == "center") return cmd_center(doc, opt);
    if (command == "cohomology") return cmd_cohomology(doc, opt);
    if (command == "derivations") return cmd_derivations(doc, opt);
    if (command == "ext") return cmd_ext(doc, opt);
    if (command == "wells") return cmd_wells(doc, opt);
    if (command == "extend-check") return cmd_extend_check(doc, opt);
    if (command == "crossed") return cmd_crossed_verify(doc, opt);
    if (command == "eta") return cmd_eta(doc, opt);
    if (command == "baer") return cmd_baer(doc, opt);
    if (command == "internal-cat") return cmd_internal_cat(doc, opt);
    if (command == "eight-term") return cmd_eight_term(doc, opt);
    throw io::parse_error("unknown command \"" + command + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebra-with-bracket toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* c) {
        c->add_option("file", opt.file, "input document (.awb.json)")->required();
        c->add_option("--field", opt.field_override,
                      "override the document field (Q or Fp:<prime>)");
        c->add_flag("--json", opt.machine, "machine-readable output");
    };

    CLI::App* verify = app.add_subcommand("verify", "verify named objects");
    add_common(verify);
    verify->add_option("--name", opt.name, "verify a single object");

    CLI::App* ideals = app.add_subcommand("ideals", "ideal predicates and commutator ideal");
    add_common(ideals);
    ideals->add_option("--algebra", opt.algebra)->required();
    ideals->add_option("--subspace", opt.subspace, "map whose columns span the subspace")
        ->required();

    CLI::App* centerc = app.add_subcommand("center", "center of an algebra");
    add_common(centerc);
    centerc->add_option("--algebra", opt.algebra)->required();

    CLI::App* coh = app.add_subcommand("cohomology", "cone cohomology of a representation");
    add_common(coh);
    coh->add_option("--representation", opt.representation)->required();
    coh->add_option("--degree", opt.degree, "degree n >= 0")->required();

    CLI::App* der = app.add_subcommand("derivations", "derivation spaces");
    add_common(der);
    der->add_option("--representation", opt.representation);
    der->add_option("--algebra", opt.algebra);

    CLI::App* ext = app.add_subcommand("ext", "abelian extension calculus");
    ext->add_option("mode", opt.ext_mode, "cocycle | build | sum")->required();
    add_common(ext);
    ext->add_option("--extension", opt.extension);
    ext->add_option("--cochain", opt.cochain);
    ext->add_option("--left", opt.left_name);
    ext->add_option("--right", opt.right_name);

    CLI::App* wells = app.add_subcommand("wells", "Wells sequence report");
    add_common(wells);
    wells->add_option("--extension", opt.extension)->required();

    CLI::App* extch = app.add_subcommand("extend-check", "extensibility of a derivation pair");
    add_common(extch);
    extch->add_option("--extension", opt.extension)->required();
    extch->add_option("--dm", opt.dm, "map giving d_M")->required();
    extch->add_option("--da", opt.da, "map giving d_A")->required();

    CLI::App* crossed = app.add_subcommand("crossed", "crossed structures");
    crossed->require_subcommand(1);
    CLI::App* cverify = crossed->add_subcommand("verify", "verify a crossed module or extension");
    add_common(cverify);
    cverify->add_option("--module", opt.module);
    cverify->add_option("--extension", opt.extension);

    CLI::App* eta = app.add_subcommand("eta", "H^2 class of a crossed extension");
    add_common(eta);
    eta->add_option("--extension", opt.extension)->required();

    CLI::App* baer = app.add_subcommand("baer", "Baer sum of crossed extensions");
    add_common(baer);
    baer->add_option("--left", opt.left_name)->required();
    baer->add_option("--right", opt.right_name)->required();

    CLI::App* icat = app.add_subcommand("internal-cat", "internal-category round trip");
    add_common(icat);
    icat->add_option("--module", opt.module)->required();

    CLI::App* eight = app.add_subcommand("eight-term", "eight-term sequence report");
    add_common(eight);
    eight->add_option("--algebra", opt.algebra)->required();
    eight->add_option("--ideal", opt.ideal, "map whose columns span the ideal")->required();
    eight->add_option("--representation", opt.representation, "representation of the quotient")
        ->required();

    CLI11_PARSE(app, argc, argv);

    std::string command;
    for (CLI::App* sub : app.get_subcommands()) command = sub->get_name();

    std::ifstream in(opt.file);
    if (!in) {
        std::cerr << "error: cannot open " << opt.file << "\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();

    try {
        // choose the field: override wins, otherwise the document's declaration
        std::string field = opt.field_override;
        if (field.empty()) {
            try {
                nlohmann::json peek = nlohmann::json::parse(text);
                if (peek.contains("field") && peek["field"].is_string())
                    field = peek["field"].get<std::string>();
            } catch (const nlohmann::json::parse_error&) {
                // the typed parser below reports line/column
            }
            if (field.empty()) field = "Q";
        }
        if (field == "Q") return run<awb::Q>(command, text, opt);
        if (field.rfind("Fp:", 0) == 0) {
            long p = std::stol(field.substr(3));
            awb::Fp::set_modulus(static_cast<std::uint32_t>(p));
            return run<awb::Fp>(command, text, opt);
        }
        std::cerr << "error: unknown field \"" << field << "\"\n";
        return 2;
    } catch (const awb::io::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const awb::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
