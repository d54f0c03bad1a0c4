#pragma once

// Command-line front end. `run` never throws: usage and parse errors exit 1,
// failed mathematical preconditions exit 2, exhausted budgets exit 3.

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "eqhom/coarse.hpp"
#include "eqhom/duality.hpp"
#include "eqhom/group_homology.hpp"
#include "eqhom/todd_coxeter.hpp"

namespace eqhom::cli {

namespace detail {

struct UsageError : Error {
    using Error::Error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::shared_ptr<const SimplicialComplex> read_complex(const std::string& path) {
    return std::make_shared<const SimplicialComplex>(load_complex(read_file(path)));
}

inline EquivariantComplexPtr cover_for(const std::shared_ptr<const SimplicialComplex>& k, std::size_t max_cosets) {
    return build_universal_cover(k, max_cosets).cover;
}

inline IntRepresentation read_coefficients(const std::string& path, const GroupModelPtr& group) {
    return parse_representation(read_file(path), group);
}

inline GroupModelPtr finite_group(const std::string& path, std::size_t max_cosets) {
    auto pres = parse_presentation(read_file(path));
    auto tc = todd_coxeter(pres, max_cosets);
    if (tc.exceeded())
        throw NotFinite("coset enumeration exceeded " + std::to_string(max_cosets) + " cosets");
    return *tc.model;
}

inline void print_homology(std::ostream& out, const std::vector<AbelianGroupInvariants>& h, const std::string& prefix) {
    for (std::size_t k = 0; k < h.size(); ++k) out << prefix << k << " = " << h[k].to_string() << "\n";
}

inline std::string coords(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

inline TriangulatedManifold manifold(const std::shared_ptr<const SimplicialComplex>& k) {
    return orient(k, static_cast<std::size_t>(std::max(0, k->dimension())));
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact equivariant homology, duality and coarse flow probes", "eqhom"};
    app.require_subcommand(1);
    app.fallthrough();
    std::size_t max_cosets = 20000;
    app.add_option("--max-cosets", max_cosets, "Coset enumeration budget")->capture_default_str();

    std::string file, coeff, pres_file, group_spec, method = "both", format = "text", factor = "f2";
    std::size_t n = 1, power = 1, radius = 1, rank = 5;
    std::int64_t bound = 1;

    auto* homology_cmd = app.add_subcommand("homology", "Integral homology, optionally with local coefficients");
    auto* cohomology_cmd = app.add_subcommand("cohomology", "Integral cohomology, optionally with local coefficients");
    auto* pd_cmd = app.add_subcommand("pd-check", "Cap with the fundamental class in every degree");
    for (auto* c : {homology_cmd, cohomology_cmd, pd_cmd}) {
        c->add_option("file", file, "Complex file")->required();
        c->add_option("--coeff", coeff, "Coefficient module file");
    }
    auto* pi1_cmd = app.add_subcommand("pi1", "Edge-path presentation of the fundamental group");
    auto* cover_cmd = app.add_subcommand("cover", "Universal cover for finite fundamental group");
    auto* essential_cmd = app.add_subcommand("essential", "Berstein-Svarc pairing with the fundamental class");
    for (auto* c : {pi1_cmd, cover_cmd, essential_cmd}) c->add_option("file", file, "Complex file")->required();
    auto* bs_cmd = app.add_subcommand("bs-class", "Class of a cup power of the Berstein-Svarc cocycle");
    auto* pert_cmd = app.add_subcommand("pert", "Image of a cup power of the Berstein-Svarc cocycle in the cover");
    for (auto* c : {bs_cmd, pert_cmd}) {
        c->add_option("file", file, "Complex file")->required();
        c->add_option("--power", power, "Cup power")->required();
    }
    auto* gh_cmd = app.add_subcommand("group-homology", "Homology of a finite group");
    gh_cmd->add_option("pres", pres_file, "Presentation file")->required();
    gh_cmd->add_option("--n", n, "Degree")->required();
    gh_cmd->add_option("--method", method, "bar, shift or both")->check(CLI::IsMember({"bar", "shift", "both"}));
    auto* chain_cmd = app.add_subcommand("shift-chain", "H_{n-k}(pi; I^k) for k = 0..n-1");
    chain_cmd->add_option("pres", pres_file, "Presentation file")->required();
    chain_cmd->add_option("--n", n, "Degree")->required();
    auto* ball_cmd = app.add_subcommand("ball", "Cayley ball statistics");
    auto* ponzi_cmd = app.add_subcommand("ponzi", "Bounded flow with net inflow 1 at inner vertices");
    auto* minb_cmd = app.add_subcommand("min-bound", "Least flow bound admitting a certificate");
    auto* folner_cmd = app.add_subcommand("folner", "Isoperimetric ratios of balls up to a radius");
    for (auto* c : {ball_cmd, ponzi_cmd, minb_cmd, folner_cmd}) {
        c->add_option("group", group_spec, "z<n>, z^<n>, f<k> or A*B")->required();
        c->add_option("--radius", radius, "Ball radius")->required();
    }
    ponzi_cmd->add_option("--bound", bound, "Per-edge flow bound")->capture_default_str();
    auto* gromov_cmd = app.add_subcommand("gromov-report", "Report for T^n times a non-amenable factor");
    gromov_cmd->add_option("--rank", rank, "Torus rank")->required();
    gromov_cmd->add_option("--radius", radius, "Ball radius")->required();
    gromov_cmd->add_option("--factor", factor, "Factor group shorthand")->capture_default_str();
    gromov_cmd->add_option("--format", format, "text or kv")->check(CLI::IsMember({"text", "kv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    using namespace detail;
    try {
        std::ostringstream o;
        if (homology_cmd->parsed() || cohomology_cmd->parsed()) {
            const bool co = cohomology_cmd->parsed();
            auto k = read_complex(file);
            if (coeff.empty()) {
                print_homology(o, co ? eqhom::cohomology(*k) : eqhom::homology(*k), co ? "H^" : "H");
            } else {
                auto x = cover_for(k, max_cosets);
                auto l = read_coefficients(coeff, x->group());
                print_homology(o, co ? local_cohomology(*x, l) : local_homology(*x, l), co ? "H^" : "H");
            }
        } else if (pi1_cmd->parsed()) {
            auto k = read_complex(file);
            auto g = fundamental_group(*k);
            o << format_presentation(g.presentation);
            auto tc = todd_coxeter_simplified(g.presentation, max_cosets);
            if (tc.exceeded())
                o << "order = unknown (coset enumeration exceeded " << max_cosets << " cosets)\n";
            else
                o << "order = " << (*tc.model)->order() << "\n";
        } else if (cover_cmd->parsed()) {
            auto k = read_complex(file);
            auto c = build_universal_cover(k, max_cosets);
            o << "group order = " << c.group->order() << "\n";
            for (std::size_t d = 0; d <= c.cover->dimension(); ++d)
                o << "cells" << d << " = " << c.cover->cell_count(d) << " (" << k->count(d) << " x " << c.group->order()
                  << ")\n";
            bool dd = true;
            for (std::size_t d = 2; d <= c.cover->dimension(); ++d) dd = dd && c.cover->boundary_squares_to_zero(d);
            o << "boundary squares to zero over Zpi = " << (dd ? "yes" : "no") << "\n";
            o << "deck action free = " << (c.cover->action_is_free() ? "yes" : "no") << "\n";
            print_homology(o, c.cover->cover_chain_complex().homology(), "cover H");
        } else if (pd_cmd->parsed()) {
            auto k = read_complex(file);
            auto m = manifold(k);
            EquivariantComplexPtr x;
            IntRepresentation l = trivial_rep(make_trivial_group());
            if (coeff.empty()) {
                x = trivial_cover(k);
                l = trivial_rep(x->group());
            } else {
                x = cover_for(k, max_cosets);
                l = read_coefficients(coeff, x->group());
            }
            auto rep = pd_check(m, x, l);
            for (const auto& d : rep.degrees)
                o << "H^" << d.k << " = " << d.cohomology.to_string() << " -> H" << m.dim - d.k << " = "
                  << d.homology.to_string() << " : " << (d.isomorphism ? "isomorphism" : "NOT an isomorphism") << "\n";
            o << (rep.ok() ? "PD OK" : "PD FAILED") << "\n";
            out << o.str();
            return rep.ok() ? 0 : 2;
        } else if (essential_cmd->parsed()) {
            auto k = read_complex(file);
            auto m = manifold(k);
            auto x = cover_for(k, max_cosets);
            auto r = essentiality_pairing(m, x);
            o << "pi order = " << x->order() << "\n";
            o << "H0(M; I^" << m.dim << ") = " << r.ambient.to_string() << "\n";
            o << "pairing = " << coords(r.coordinates) << "\n";
            o << (r.is_zero() ? "INESSENTIAL" : "ESSENTIAL") << "\n";
        } else if (bs_cmd->parsed() || pert_cmd->parsed()) {
            auto k = read_complex(file);
            auto x = cover_for(k, max_cosets);
            auto b = cup_power(berstein_svarc(x), power);
            if (bs_cmd->parsed()) {
                auto r = cohomology_class(b);
                o << "H^" << power << "(M; I^" << power << ") = " << r.ambient.to_string() << "\n";
                o << "class = " << coords(r.coordinates) << "\n";
            } else {
                auto r = pert_finite(b);
                o << "H^" << power << "(cover; Z^" << b.rank() << ") = " << r.ambient.to_string() << "\n";
                o << "pert = " << coords(r.coordinates) << "\n";
            }
        } else if (gh_cmd->parsed()) {
            auto g = finite_group(pres_file, max_cosets);
            std::optional<AbelianGroupInvariants> bar, shift;
            if (method != "shift") bar = bar_homology(g, n);
            if (method != "bar") shift = shift_homology(g, n);
            if (bar) o << "bar: H" << n << " = " << bar->to_string() << "\n";
            if (shift) o << "shift: H" << n << " = " << shift->to_string() << "\n";
            if (bar && shift) {
                o << (*bar == *shift ? "AGREE" : "DISAGREE") << "\n";
                out << o.str();
                return *bar == *shift ? 0 : 2;
            }
        } else if (chain_cmd->parsed()) {
            auto g = finite_group(pres_file, max_cosets);
            auto r = shift_chain_check(g, n);
            for (std::size_t i = 0; i < r.values.size(); ++i)
                o << "H" << n - i << "(pi; I^" << i << ") = " << r.values[i].to_string() << "\n";
            o << (r.all_equal() ? "EQUAL" : "NOT EQUAL") << "\n";
            out << o.str();
            return r.all_equal() ? 0 : 2;
        } else if (ball_cmd->parsed()) {
            auto b = cayley_ball(parse_group_shorthand(group_spec), radius);
            o << "group = " << b.group->describe() << "\n";
            o << "radius = " << radius << "\n";
            o << "vertices = " << b.size() << "\n";
            o << "inner = " << b.inner_count() << "\n";
            o << "shell = " << b.size() - b.inner_count() << "\n";
            o << "edges = " << b.edges.size() << "\n";
        } else if (ponzi_cmd->parsed()) {
            auto b = cayley_ball(parse_group_shorthand(group_spec), radius);
            auto r = ponzi_feasible(b, bound);
            o << "radius = " << radius << ", bound = " << bound << ", inner = " << r.demand << "\n";
            if (r.feasible) {
                std::int64_t used = 0;
                for (auto f : r.certificate->flow) used = std::max<std::int64_t>(used, f < 0 ? -f : f);
                o << "FEASIBLE\n";
                o << "max |flow| = " << used << "\n";
                o << "certificate = " << (verify_certificate(b, *r.certificate) ? "verified" : "FAILED") << "\n";
            } else {
                o << "INFEASIBLE\n";
                o << "max flow = " << r.flow_value << " < demand " << r.demand << "\n";
                o << "cut capacity = " << r.cut->capacity << " ("
                  << (verify_cut(b, bound, *r.cut) ? "verified" : "FAILED") << ")\n";
            }
        } else if (minb_cmd->parsed()) {
            auto b = cayley_ball(parse_group_shorthand(group_spec), radius);
            auto r = min_ponzi_bound(b);
            o << "radius = " << radius << ", inner = " << b.inner_count() << "\n";
            o << "t_min = " << r.t_min << "\n";
            o << "certificate = " << (verify_certificate(b, r.certificate) ? "verified" : "FAILED") << "\n";
            if (r.cut)
                o << "cut at t = " << r.t_min - 1 << ": capacity " << r.cut->capacity << " < " << r.cut->demand << " ("
                  << (verify_cut(b, r.t_min - 1, *r.cut) ? "verified" : "FAILED") << ")\n";
        } else if (folner_cmd->parsed()) {
            auto g = parse_group_shorthand(group_spec);
            for (std::size_t r = 1; r <= radius; ++r) {
                auto iso = isoperimetric_ratio(cayley_ball(g, r));
                o << "R = " << r << ": inner = " << iso.inner << ", crossing = " << iso.crossing
                  << ", ratio = " << format_rational(iso.ratio) << ", flux bound = " << iso.flux_bound() << "\n";
            }
        } else if (gromov_cmd->parsed()) {
            auto rep = gromov_counterexample_report(rank, radius, factor);
            out << (format == "kv" ? rep.to_kv() : rep.to_text());
            return rep.certified ? 0 : 2;
        }
        out << o.str();
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: parse: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        err << "error: budget: " << e.what() << "\n";
        return 3;
    } catch (const PreconditionError& e) {
        err << "error: precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace eqhom::cli
