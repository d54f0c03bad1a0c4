#pragma once

// Finite-radius probes of uniformly finite 0-homology on Cayley graphs of
// infinite groups: balls, bounded-divergence ("Ponzi") flows, isoperimetric
// counts, and the report for torus times a non-amenable factor.

#include <algorithm>
#include <boost/rational.hpp>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eqhom/duality.hpp"
#include "eqhom/groups.hpp"
#include "eqhom/maxflow.hpp"

namespace eqhom {

struct CayleyBall {
    GroupModelPtr group;
    std::size_t radius = 0;
    std::vector<Element> vertices;        // BFS discovery order
    std::vector<std::size_t> depth;
    std::vector<std::optional<std::size_t>> parent;  // BFS tree
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v
    std::map<Element, std::size_t> index;

    std::size_t size() const { return vertices.size(); }
    bool inner(std::size_t v) const { return depth[v] + 1 <= radius; }
    std::size_t inner_count() const {
        return static_cast<std::size_t>(std::count_if(depth.begin(), depth.end(), [&](std::size_t d) { return d + 1 <= radius; }));
    }
};

/// BFS ball of radius R; neighbours are tried in the order s1, s1^-1, s2, ...
inline CayleyBall cayley_ball(const GroupModelPtr& group, std::size_t radius) {
    if (group->is_finite()) throw UnsupportedModel("Cayley balls of finite groups stabilize; use an infinite model");
    if (radius < 1) throw PreconditionError("radius must be at least 1");
    const std::size_t ng = group->generator_count();
    std::vector<Element> steps;
    for (std::size_t i = 0; i < ng; ++i) {
        steps.push_back(group->generator(i));
        steps.push_back(group->inverse(group->generator(i)));
    }
    CayleyBall b;
    b.group = group;
    b.radius = radius;
    auto add = [&](Element e, std::size_t d, std::optional<std::size_t> parent) {
        b.index.emplace(e, b.vertices.size());
        b.vertices.push_back(std::move(e));
        b.depth.push_back(d);
        b.parent.push_back(parent);
    };
    add(group->identity(), 0, std::nullopt);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        if (b.depth[i] == radius) continue;
        for (const auto& s : steps) {
            Element w = group->multiply(b.vertices[i], s);
            if (!b.index.count(w)) add(std::move(w), b.depth[i] + 1, i);
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
        for (const auto& s : steps) {
            auto it = b.index.find(group->multiply(b.vertices[i], s));
            if (it != b.index.end() && it->second != i) edges.insert(std::minmax(i, it->second));
        }
    b.edges.assign(edges.begin(), edges.end());
    return b;
}

/// Certificate flow: flow[e] > 0 means mass moves from edges[e].first to
/// edges[e].second.
struct PonziCertificate {
    std::int64_t bound = 0;
    std::vector<std::int64_t> flow;
};

/// Obstruction: a cut in the reduction network of capacity below the demand.
struct InfeasibleCut {
    std::vector<bool> ball_source_side;  // per ball vertex
    std::int64_t capacity = 0;
    std::int64_t demand = 0;
};

struct PonziResult {
    bool feasible = false;
    std::int64_t bound = 0;
    std::int64_t flow_value = 0;
    std::int64_t demand = 0;
    std::optional<PonziCertificate> certificate;
    std::optional<InfeasibleCut> cut;
};

/// Independent check: |flow| ≤ t on every edge and net inflow exactly 1 at
/// every inner vertex.
inline bool verify_certificate(const CayleyBall& b, const PonziCertificate& c) {
    if (c.flow.size() != b.edges.size() || c.bound < 1) return false;
    std::vector<std::int64_t> net(b.size(), 0);
    for (std::size_t e = 0; e < b.edges.size(); ++e) {
        if (c.flow[e] > c.bound || -c.flow[e] > c.bound) return false;
        net[b.edges[e].second] += c.flow[e];
        net[b.edges[e].first] -= c.flow[e];
    }
    for (std::size_t v = 0; v < b.size(); ++v)
        if (b.inner(v) && net[v] != 1) return false;
    return true;
}

/// Recomputes the capacity of a cut in the reduction network from the ball.
inline std::int64_t cut_capacity(const CayleyBall& b, std::int64_t t, const std::vector<bool>& side) {
    std::int64_t cap = 0;
    for (std::size_t v = 0; v < b.size(); ++v) {
        if (!b.inner(v) && !side[v]) return FlowNetwork::infinity;  // source -> shell crosses
        if (b.inner(v) && side[v]) cap += 1;                         // v -> sink crosses
    }
    for (const auto& [u, v] : b.edges)
        if (side[u] != side[v]) cap += t;
    return cap;
}

inline bool verify_cut(const CayleyBall& b, std::int64_t t, const InfeasibleCut& cut) {
    return cut.ball_source_side.size() == b.size() && cut.demand == static_cast<std::int64_t>(b.inner_count()) &&
           cut_capacity(b, t, cut.ball_source_side) == cut.capacity && cut.capacity < cut.demand;
}

/// Super source -> shell (unbounded), every ball edge both ways (t), inner
/// vertex -> super sink (1). Feasible iff the max flow saturates the sink.
inline PonziResult ponzi_feasible(const CayleyBall& b, std::int64_t t) {
    if (t < 1) throw PreconditionError("bound must be at least 1");
    const std::size_t n = b.size(), src = n, snk = n + 1;
    FlowNetwork net(n + 2);
    for (std::size_t v = 0; v < n; ++v) {
        if (b.inner(v))
            net.add_edge(v, snk, 1);
        else
            net.add_edge(src, v, FlowNetwork::infinity);
    }
    std::vector<std::pair<std::size_t, std::size_t>> ids;
    for (const auto& [u, v] : b.edges) ids.push_back({net.add_edge(u, v, t), net.add_edge(v, u, t)});
    auto mf = max_flow(net, src, snk);
    PonziResult r;
    r.bound = t;
    r.flow_value = mf.value;
    r.demand = static_cast<std::int64_t>(b.inner_count());
    r.feasible = mf.value == r.demand;
    if (r.feasible) {
        PonziCertificate c{t, {}};
        for (const auto& [uv, vu] : ids) c.flow.push_back(net.flow(uv) - net.flow(vu));
        r.certificate = std::move(c);
    } else {
        InfeasibleCut c;
        c.ball_source_side.assign(mf.source_side.begin(), mf.source_side.begin() + static_cast<std::ptrdiff_t>(n));
        c.capacity = mf.cut_capacity;
        c.demand = r.demand;
        r.cut = std::move(c);
    }
    return r;
}

struct MinBoundResult {
    std::int64_t t_min = 0;
    PonziCertificate certificate;         // at t_min
    std::optional<InfeasibleCut> cut;     // at t_min - 1, when t_min > 1
};

inline MinBoundResult min_ponzi_bound(const CayleyBall& b) {
    std::int64_t lo = 1, hi = std::max<std::int64_t>(1, static_cast<std::int64_t>(b.inner_count()));
    auto top = ponzi_feasible(b, hi);
    if (!top.feasible) throw PreconditionError("ball admits no bounded flow at t = |inner|");
    PonziResult best = std::move(top);
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        auto r = ponzi_feasible(b, mid);
        if (r.feasible) {
            hi = mid;
            best = std::move(r);
        } else {
            lo = mid + 1;
        }
    }
    MinBoundResult out{hi, *best.certificate, std::nullopt};
    if (hi > 1) out.cut = ponzi_feasible(b, hi - 1).cut;
    return out;
}

/// Explicit t = 1 scheme on the BFS tree of a free group of rank ≥ 2: the
/// root designates one child, designated vertices designate two, the rest
/// one; every designated vertex sends 1 to its parent.
inline PonziCertificate free_group_ponzi(const CayleyBall& b) {
    const auto* f = std::get_if<FreeGroup>(&b.group->variant());
    if (!f || f->rank < 2) throw ModelMismatch("explicit scheme needs a free group of rank at least 2");
    std::vector<std::vector<std::size_t>> children(b.size());
    for (std::size_t v = 1; v < b.size(); ++v) children[*b.parent[v]].push_back(v);
    std::vector<bool> designated(b.size(), false);
    for (std::size_t v = 0; v < b.size(); ++v) {
        std::size_t want = v == 0 ? 1 : designated[v] ? 2 : 1;
        for (std::size_t i = 0; i < want && i < children[v].size(); ++i) designated[children[v][i]] = true;
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_id;
    for (std::size_t e = 0; e < b.edges.size(); ++e) edge_id.emplace(b.edges[e], e);
    PonziCertificate c{1, std::vector<std::int64_t>(b.edges.size(), 0)};
    for (std::size_t v = 1; v < b.size(); ++v) {
        if (!designated[v]) continue;
        std::size_t p = *b.parent[v];
        std::size_t e = edge_id.at(std::minmax(v, p));
        c.flow[e] = v == b.edges[e].first ? 1 : -1;
    }
    return c;
}

struct IsoperimetricRatio {
    std::size_t inner = 0;
    std::size_t crossing = 0;  // edges between the inner set and the shell
    boost::rational<std::int64_t> ratio;

    /// ceil(inner / crossing): the flux lower bound on t.
    std::int64_t flux_bound() const {
        return crossing == 0 ? 0 : static_cast<std::int64_t>((inner + crossing - 1) / crossing);
    }
};

inline IsoperimetricRatio isoperimetric_ratio(const CayleyBall& b) {
    IsoperimetricRatio r;
    r.inner = b.inner_count();
    for (const auto& [u, v] : b.edges)
        if (b.inner(u) != b.inner(v)) ++r.crossing;
    if (r.crossing == 0) throw PreconditionError("ball has no boundary edges");
    r.ratio = boost::rational<std::int64_t>(static_cast<std::int64_t>(r.inner), static_cast<std::int64_t>(r.crossing));
    return r;
}

inline std::string format_rational(const boost::rational<std::int64_t>& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// ---------------------------------------------------------------------------
// Künneth bookkeeping for products of spaces

inline AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a, const AbelianGroupInvariants& b) {
    std::vector<Integer> orders(a.free_rank + b.free_rank, Integer(0));
    orders.insert(orders.end(), a.torsion.begin(), a.torsion.end());
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    return invariants_from_cyclic(0, orders);
}

namespace detail {
inline std::vector<Integer> cyclic_factors(const AbelianGroupInvariants& a) {
    std::vector<Integer> f(a.free_rank, Integer(0));
    f.insert(f.end(), a.torsion.begin(), a.torsion.end());
    return f;
}
}  // namespace detail

/// A ⊗ B: Z/m ⊗ Z/n = Z/gcd, Z ⊗ X = X.
inline AbelianGroupInvariants tensor_invariants(const AbelianGroupInvariants& a, const AbelianGroupInvariants& b) {
    std::vector<Integer> out;
    for (const auto& x : detail::cyclic_factors(a))
        for (const auto& y : detail::cyclic_factors(b)) out.push_back(gcd(x, y));
    return invariants_from_cyclic(0, out);
}

/// Tor(A, B): only torsion pairs contribute Z/gcd.
inline AbelianGroupInvariants tor_invariants(const AbelianGroupInvariants& a, const AbelianGroupInvariants& b) {
    std::vector<Integer> out;
    for (const auto& x : a.torsion)
        for (const auto& y : b.torsion) out.push_back(gcd(x, y));
    return invariants_from_cyclic(0, out);
}

/// H_*(X × Y) from H_*(X) and H_*(Y).
inline std::vector<AbelianGroupInvariants> kunneth(const std::vector<AbelianGroupInvariants>& hx,
                                                   const std::vector<AbelianGroupInvariants>& hy) {
    if (hx.empty() || hy.empty()) return {};
    std::vector<AbelianGroupInvariants> out(hx.size() + hy.size() - 1);
    for (std::size_t i = 0; i < hx.size(); ++i)
        for (std::size_t j = 0; j < hy.size(); ++j) {
            out[i + j] = direct_sum(out[i + j], tensor_invariants(hx[i], hy[j]));
            if (i + j + 1 < out.size()) out[i + j + 1] = direct_sum(out[i + j + 1], tor_invariants(hx[i], hy[j]));
        }
    return out;
}

/// H_*(T^n) by iterated Künneth from the circle.
inline std::vector<AbelianGroupInvariants> torus_homology_kunneth(std::size_t n) {
    const std::vector<AbelianGroupInvariants> circle{{1, {}}, {1, {}}};
    std::vector<AbelianGroupInvariants> h{{1, {}}};
    for (std::size_t i = 0; i < n; ++i) h = kunneth(h, circle);
    return h;
}

/// Kuhn triangulation of T^n on the 3^n grid: one simplex per base point and
/// coordinate permutation.
inline SimplicialComplex torus_triangulation(std::size_t n) {
    if (n == 0) return SimplicialComplex(std::vector<Simplex>{Simplex{0}});
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= 3;
    std::vector<Simplex> facets;
    std::vector<std::size_t> perm(n);
    for (std::size_t base = 0; base < count; ++base) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::size_t> x(n);
            for (std::size_t i = 0, t = base; i < n; ++i, t /= 3) x[i] = t % 3;
            auto encode = [&] {
                std::size_t e = 0;
                for (std::size_t i = n; i-- > 0;) e = e * 3 + x[i];
                return e;
            };
            Simplex s{encode()};
            for (auto p : perm) {
                x[p] = (x[p] + 1) % 3;
                s.push_back(encode());
            }
            std::sort(s.begin(), s.end());
            facets.push_back(std::move(s));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return SimplicialComplex(facets);
}

// ---------------------------------------------------------------------------
// Group shorthands

/// `z<n>` or `z^<n>` (Z^n), `f<k>` (free of rank k), `A*B` (direct product).
inline GroupModelPtr parse_group_shorthand(const std::string& text) {
    if (auto star = text.find('*'); star != std::string::npos)
        return direct_product(parse_group_shorthand(text.substr(0, star)), parse_group_shorthand(text.substr(star + 1)));
    auto number = [&](std::size_t from) -> std::size_t {
        std::string digits = text.substr(from);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("bad group shorthand '" + text + "'");
        return static_cast<std::size_t>(std::stoul(digits));
    };
    if (text.size() >= 2 && text[0] == 'z') {
        std::size_t n = number(text[1] == '^' ? 2 : 1);
        if (n == 0) throw ParseError("rank must be positive in '" + text + "'");
        return make_free_abelian(n);
    }
    if (text.size() >= 2 && text[0] == 'f') {
        std::size_t n = number(1);
        if (n == 0) throw ParseError("rank must be positive in '" + text + "'");
        return make_free(n);
    }
    throw ParseError("unknown group shorthand '" + text + "' (expected z<n>, z^<n>, f<k> or A*B)");
}

// ---------------------------------------------------------------------------
// Report for T^n × (non-amenable factor)

struct TorusClassRecord {
    std::size_t rank = 0;
    AbelianGroupInvariants top_homology;
    std::string method;              // "triangulation" or "kunneth"
    std::optional<IntVector> fundamental_class_coordinates;
    bool nonzero = false;
};

struct RadiusRecord {
    std::size_t radius = 0;
    std::size_t ball = 0;
    IsoperimetricRatio iso;
    std::int64_t t_min = 0;
};

struct GromovReport {
    std::size_t rank = 0;
    std::size_t radius = 0;
    std::string factor;
    bool warn_low_rank = false;
    TorusClassRecord torus;
    CayleyBall factor_ball;
    IsoperimetricRatio factor_iso;
    bool explicit_scheme = false;   // tree scheme applies to the factor
    bool certificate_verified = false;
    std::int64_t factor_t_min = 0;
    std::vector<RadiusRecord> trace;
    bool certified = false;

    std::string to_text() const;
    std::string to_kv() const;
};

inline TorusClassRecord torus_class(std::size_t n) {
    TorusClassRecord r;
    r.rank = n;
    if (n <= 3) {
        auto k = std::make_shared<SimplicialComplex>(torus_triangulation(n));
        auto m = orient(k, n);
        auto x = trivial_cover(k);
        auto cls = homology_class(integer_chain(x, n, fundamental_class(m)));
        r.top_homology = cls.ambient;
        r.method = "triangulation";
        r.fundamental_class_coordinates = cls.coordinates;
        r.nonzero = !cls.is_zero();
    } else {
        r.top_homology = torus_homology_kunneth(n).at(n);
        r.method = "kunneth";
        r.nonzero = r.top_homology == AbelianGroupInvariants{1, {}};
    }
    return r;
}

inline GromovReport gromov_counterexample_report(std::size_t n, std::size_t radius, const std::string& factor = "f2") {
    if (n < 1) throw PreconditionError("rank must be at least 1");
    if (radius < 2) throw PreconditionError("radius must be at least 2");
    GromovReport rep;
    rep.rank = n;
    rep.radius = radius;
    rep.factor = factor;
    rep.warn_low_rank = n < 4;
    rep.torus = torus_class(n);
    auto group = parse_group_shorthand(factor);
    rep.factor_ball = cayley_ball(group, radius);
    rep.factor_iso = isoperimetric_ratio(rep.factor_ball);
    const auto* f = std::get_if<FreeGroup>(&group->variant());
    rep.explicit_scheme = f && f->rank >= 2;
    if (rep.explicit_scheme) {
        rep.certificate_verified = verify_certificate(rep.factor_ball, free_group_ponzi(rep.factor_ball));
        rep.factor_t_min = min_ponzi_bound(rep.factor_ball).t_min;
    } else {
        for (std::size_t r = 1; r <= radius; ++r) {
            CayleyBall b = cayley_ball(group, r);
            RadiusRecord rec{r, b.size(), isoperimetric_ratio(b), min_ponzi_bound(b).t_min};
            rep.trace.push_back(rec);
        }
        rep.factor_t_min = rep.trace.back().t_min;
    }
    rep.certified = rep.torus.nonzero && rep.explicit_scheme && rep.certificate_verified && rep.factor_t_min == 1;
    return rep;
}

inline std::string GromovReport::to_text() const {
    std::ostringstream s;
    if (warn_low_rank) s << "warning: rank " << rank << " is below 4; the construction is stated for n >= 4\n";
    s << "[H_n(Z^n)]\n";
    s << "  n = " << rank << "\n";
    s << "  H_" << rank << "(T^" << rank << ") = " << torus.top_homology.to_string() << " via " << torus.method << "\n";
    if (torus.fundamental_class_coordinates) {
        s << "  [T^" << rank << "] coordinates = (";
        for (std::size_t i = 0; i < torus.fundamental_class_coordinates->size(); ++i)
            s << (i ? ", " : "") << (*torus.fundamental_class_coordinates)[i];
        s << ")\n";
    }
    s << "  T^" << rank << " is a model of BZ^" << rank << ", so [T^" << rank << "] "
      << (torus.nonzero ? "is nonzero" : "is ZERO") << " in H_" << rank << "(Z^" << rank << ")\n";
    s << "[" << (factor == "f2" ? std::string("F2") : factor) << " ponzi]\n";
    s << "  radius = " << radius << ", ball = " << factor_ball.size() << ", inner = " << factor_iso.inner
      << ", crossing = " << factor_iso.crossing << ", ratio = " << format_rational(factor_iso.ratio) << "\n";
    if (explicit_scheme) {
        s << "  tree scheme certificate with t = 1: " << (certificate_verified ? "verified" : "FAILED") << "\n";
        s << "  max-flow t_min = " << factor_t_min << "\n";
    } else {
        s << "  no explicit scheme for this factor; t_min growth trace:\n";
        for (const auto& r : trace)
            s << "    R = " << r.radius << ": ball = " << r.ball << ", inner = " << r.iso.inner
              << ", crossing = " << r.iso.crossing << ", flux bound = " << r.iso.flux_bound() << ", t_min = " << r.t_min
              << "\n";
    }
    s << "  this is a finite-radius probe, not a proof of vanishing\n";
    s << "[tensor argument]\n";
    s << "  pi_1(M) = Z^" << rank << " x " << factor << "\n";
    s << "  pert([T^" << rank << "] (x) 1) = pert([T^" << rank << "]) (x) pert(1)\n";
    s << "  [T^" << rank << "] is nonzero; pert(1) = 0 in H_0^uf exactly when the factor is non-amenable\n";
    if (certified)
        s << "  verdict: certified at radius " << radius << " (bounded flow with t = 1 on the factor)\n";
    else
        s << "  verdict: declined (no uniform t = 1 scheme for the factor; bounded flows need growing t)\n";
    return s.str();
}

inline std::string GromovReport::to_kv() const {
    std::ostringstream s;
    s << "rank = " << rank << "\n";
    s << "radius = " << radius << "\n";
    s << "factor = " << factor << "\n";
    s << "warning.low_rank = " << (warn_low_rank ? "yes" : "no") << "\n";
    s << "torus.top_homology = " << torus.top_homology.to_string() << "\n";
    s << "torus.method = " << torus.method << "\n";
    s << "torus.class_nonzero = " << (torus.nonzero ? "yes" : "no") << "\n";
    s << "ponzi.ball = " << factor_ball.size() << "\n";
    s << "ponzi.inner = " << factor_iso.inner << "\n";
    s << "ponzi.crossing = " << factor_iso.crossing << "\n";
    s << "ponzi.ratio = " << format_rational(factor_iso.ratio) << "\n";
    s << "ponzi.explicit_scheme = " << (explicit_scheme ? "yes" : "no") << "\n";
    if (explicit_scheme) s << "ponzi.certificate = " << (certificate_verified ? "verified" : "failed") << "\n";
    s << "ponzi.t_min = " << factor_t_min << "\n";
    if (!trace.empty()) {
        s << "ponzi.t_min_trace = ";
        for (std::size_t i = 0; i < trace.size(); ++i) s << (i ? "," : "") << trace[i].t_min;
        s << "\n";
        s << "ponzi.flux_bound_trace = ";
        for (std::size_t i = 0; i < trace.size(); ++i) s << (i ? "," : "") << trace[i].iso.flux_bound();
        s << "\n";
    }
    s << "tensor.statement = pert([T^n] (x) 1) = pert([T^n]) (x) pert(1)\n";
    s << "verdict = " << (certified ? "certified" : "declined") << "\n";
    return s.str();
}

}  // namespace eqhom
