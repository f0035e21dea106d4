#include "nicx/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nicx/characters.hpp"
#include "nicx/errors.hpp"
#include "nicx/homology.hpp"
#include "nicx/morse.hpp"
#include "nicx/series.hpp"
#include "nicx/sigma.hpp"

namespace nicx {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         std::string detail = "") {
    out.push_back(CheckResult{name, pass, std::move(detail)});
}

template <class A, class B>
void add_eq(std::vector<CheckResult>& out, const std::string& name, const A& got,
            const B& want) {
    std::ostringstream d;
    d << "got " << got << ", want " << want;
    out.push_back(CheckResult{name, got == want, d.str()});
}

bool all_trivial(const ReducedHomology& h) {
    for (const auto& [d, g] : h)
        if (d >= 0 && !g.trivial()) return false;
    return true;
}

std::string tag(int n, int k) {
    return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

// ---------------------------------------------------------------- morse ----

void suite_morse(std::vector<CheckResult>& out, int) {
    for (int n = 4; n <= 5; ++n) {
        for (int k = 3; k <= n - 1; ++k) {
            SimplicialComplex c = build_delta_k1k(n, k);
            MorseMatching m = apm_matching(n, k);
            MatchingReport rep = is_acyclic_perfect_matching(c, m);
            std::ostringstream d;
            d << "matching=" << rep.matching << " perfect=" << rep.perfect
              << " acyclic=" << rep.acyclic << " pairs=" << m.pairs.size();
            add(out, "structured matching " + tag(n, k) + " is acyclic and perfect",
                rep.all(), d.str());

            MatchingDigraph g = build_matching_digraph(c);
            add(out, "cycle searches agree on the structured matching " + tag(n, k),
                matching_has_cycle_layered(g, m) == matching_has_cycle_full(g, m));

            CollapseResult col = collapse_by_matching(c, m);
            add(out, "greedy collapse along the matching " + tag(n, k) + " removes everything",
                col.ok && col.trace.size() * 2 == g.nodes.size(), col.reason);
        }
        for (int k = 2; k <= n - 1; ++k) {
            SimplicialComplex c = build_delta_k(n, k);
            add(out, "restricted-neighborhood complex " + tag(n, k) + " has vanishing homology",
                all_trivial(reduced_homology(c)));
        }
        for (int k = 3; k <= n - 1; ++k) {
            SimplicialComplex c = build_delta_k1k(n, k);
            add(out, "bridge-conditioned complex " + tag(n, k) + " has vanishing homology",
                all_trivial(reduced_homology(c)));
        }
    }

    // hollow triangle with the classic cyclically matched Hasse diagram:
    // both cycle detectors must fire
    SimplicialComplex tri = SimplicialComplex::from_faces(3, {1, 2, 4, 3, 6, 5});
    MorseMatching bad;
    bad.pairs = {{1, 3}, {2, 6}, {4, 5}};
    MatchingDigraph tg = build_matching_digraph(tri);
    bool lay = matching_has_cycle_layered(tg, bad);
    bool full = matching_has_cycle_full(tg, bad);
    add(out, "both cycle searches detect the cyclic triangle matching", lay && full);
    MatchingReport trep = is_acyclic_perfect_matching(tri, bad);
    add(out, "cyclic triangle matching is flagged non-acyclic and imperfect",
        trep.matching && !trep.perfect && !trep.acyclic);
}

// -------------------------------------------------------------- duality ----

void suite_duality(std::vector<CheckResult>& out, int jobs) {
    for (int n = 4; n <= 5; ++n) {
        SimplicialComplex m = matching_complex(n);
        SimplicialComplex d = not_i_connected_complex(n, 2, n - 2, -1, 0, jobs);
        SimplicialComplex dual = alexander_dual(m);
        add(out, "dual of the matching complex equals the not-" + std::to_string(n - 2) +
                     "-connected complex (n=" + std::to_string(n) + ")",
            dual.levels == d.levels);

        int edges = n * (n - 1) / 2;
        ReducedHomology hm = reduced_homology(m);
        ReducedHomology hd = reduced_homology(d);
        auto grp = [](const ReducedHomology& h, int i) {
            auto it = h.find(i);
            return it == h.end() ? HomologyGroup{} : it->second;
        };
        bool betti_ok = true, torsion_ok = true;
        for (int i = -1; i <= edges; ++i) {
            if (grp(hm, i).betti != grp(hd, edges - i - 3).betti) betti_ok = false;
            if (grp(hm, i).torsion != grp(hd, edges - i - 4).torsion) torsion_ok = false;
        }
        add(out, "free parts match across the duality (n=" + std::to_string(n) + ")",
            betti_ok);
        add(out, "torsion matches across the duality with the extra shift (n=" +
                     std::to_string(n) + ")",
            torsion_ok);
    }

    SimplicialComplex m5 = matching_complex(5);
    SimplicialComplex d5 = not_i_connected_complex(5, 2, 3, -1, 0, jobs);
    auto b = [](const ReducedHomology& h, int i) {
        auto it = h.find(i);
        return it == h.end() ? 0ll : it->second.betti;
    };
    ReducedHomology hm5 = reduced_homology(m5, {1});
    ReducedHomology hd5 = reduced_homology(d5, {6});
    add_eq(out, "first betti number of the 5-point matching complex", b(hm5, 1), 6ll);
    add_eq(out, "betti number 6 of the not-3-connected complex on 5 vertices", b(hd5, 6),
           6ll);
}

// ---------------------------------------------------------------- sigma ----

void suite_sigma(std::vector<CheckResult>& out, int) {
    add_eq(out, "clique-block lattice size (n=3, k=2)",
           sigma_lattice(3, 2).graphs.size(), std::size_t(8));

    EgfSequence m2 = mobius_series(2, 10);
    EgfSequence m3 = mobius_series(3, 10);
    for (int n = 3; n <= 5; ++n) {
        SigmaLattice s2 = sigma_lattice(n, 2);
        long long mu2 = moebius(s2.poset, s2.poset.bottom, s2.poset.top);
        BigInt want = -factorial_big(n - 2);
        add_eq(out, "lattice moebius value " + tag(n, 2) + " is -(n-2)!", BigInt(mu2), want);
        add_eq(out, "lattice moebius value " + tag(n, 2) + " matches the log-series route",
               BigInt(mu2), m2.at(n));

        SigmaLattice s3 = sigma_lattice(n, 3);
        long long mu3 = moebius(s3.poset, s3.poset.bottom, s3.poset.top);
        add_eq(out, "lattice moebius value " + tag(n, 3) + " matches the log-series route",
               BigInt(mu3), m3.at(n));
    }

    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {4, 3}, {5, 3}, {6, 4}}) {
        SigmaLattice s = sigma_lattice(n, k);
        auto types = classify_covers(s);
        add_eq(out, "every cover of " + tag(n, k) + " matches exactly one shape",
               types.size(), s.poset.cover_pairs().size());
        if (k <= 3) {
            ChainReport r = rank_and_chain_spectrum(s);
            add(out, "rank function of " + tag(n, k) + " increases by one along covers",
                r.rank_checked && r.graded);
        }
    }

    auto lengths_want = [](int n, int k) {
        std::set<int> want;
        for (int t = 1; t <= (n - 1) / (k - 1); ++t) want.insert((n - 2) - t * (k - 3));
        return want;
    };
    for (auto [n, k] : {std::pair{6, 4}, {7, 4}, {7, 5}}) {
        SigmaLattice s = sigma_lattice(n, k);
        ChainReport r = rank_and_chain_spectrum(s);
        std::ostringstream d;
        d << "lengths {";
        for (int l : r.chain_lengths) d << ' ' << l;
        d << " }";
        add(out, "maximal chain lengths of " + tag(n, k) + " follow the closed form",
            r.chain_lengths == lengths_want(n, k), d.str());
    }
}

// --------------------------------------------------------------- series ----

BigInt signed_partition_sum(int n, int k) {
    BigInt acc = 0;
    for_each_set_partition(n, [&](const std::vector<std::uint32_t>& blocks) {
        for (std::uint32_t b : blocks)
            if (popcount(Face(b)) >= k) return;
        int m = int(blocks.size());
        BigInt term = factorial_big(m - 1);
        acc += (m % 2 == 1) ? term : -term;
    });
    return acc;
}

BigInt alpha_brute(int n, int k) {
    SigmaLattice s = sigma_lattice(n, k);
    BigInt acc = 0;
    for (int id = 0; id < int(s.graphs.size()); ++id) {
        Face g = s.graphs[id];
        if (component_partition(n, g).size() != 1) continue;
        Graph gr(n);
        gr.edges = Bits128{g, 0};
        BlockDecomposition bd = block_decomposition(gr);
        if (std::find(bd.cutpoints.begin(), bd.cutpoints.end(), n - 1) !=
            bd.cutpoints.end())
            continue;
        acc += moebius(s.poset, s.poset.bottom, id);
    }
    return acc;
}

void suite_series(std::vector<CheckResult>& out, int) {
    RationalSeries x = RationalSeries::x(10);
    RationalSeries f = x / (RationalSeries::constant(1, 10) + x);
    add(out, "both reversion routes invert x/(1+x) to x/(1-x)",
        reversion(f) == reversion_lagrange(f) &&
            reversion(f) == x / (RationalSeries::constant(1, 10) - x));
    RationalSeries g = x * p_k_series(2, 10) / p_k_series(3, 10);
    add(out, "both reversion routes agree on the block-ratio series",
        reversion(g) == reversion_lagrange(g));
    add(out, "exp undoes log on the small-block series",
        exp_series(log_series(p_k_series(3, 10))) == p_k_series(3, 10));

    for (int k = 2; k <= 4; ++k) {
        EgfSequence tau = tau_series(k, 6);
        bool ok = true;
        std::ostringstream d;
        for (int n = 1; n <= 6; ++n) {
            BigInt brute = signed_partition_sum(n, k);
            if (brute != tau.at(n)) {
                ok = false;
                d << "n=" << n << ": got " << tau.at(n) << ", want " << brute << "; ";
            }
        }
        add(out, "log-series values match the signed partition sums (k=" +
                     std::to_string(k) + ")",
            ok, d.str());
    }

    for (int k = 2; k <= 3; ++k) {
        EgfSequence a = alpha_series(k, 5);
        bool ok = true;
        std::ostringstream d;
        for (int n = std::max(2, k); n <= 5; ++n) {
            BigInt brute = alpha_brute(n, k);
            if (brute != a.at(n)) {
                ok = false;
                d << "n=" << n << ": got " << a.at(n) << ", want " << brute << "; ";
            }
        }
        add(out, "integrated log-series matches the lattice moebius sums (k=" +
                     std::to_string(k) + ")",
            ok, d.str());
    }

    EgfSequence m2 = mobius_series(2, 10);
    bool m2ok = true;
    for (int n = 2; n <= 10; ++n)
        if (m2.at(n) != -factorial_big(n - 2)) m2ok = false;
    add(out, "compositional-inverse route gives -(n-2)! for k=2", m2ok);

    EgfSequence m3 = mobius_series(3, 9);
    const long long frozen3[] = {0, 0, -1, 3, -21, 180, -2010, 27090, -430290};
    bool m3ok = true;
    for (int n = 1; n <= 9; ++n)
        if (m3.at(n) != BigInt(frozen3[n - 1])) m3ok = false;
    add(out, "compositional-inverse route reproduces the frozen k=3 values", m3ok);

    SeriesWithValues g3 = dual_euler_series_nminus3(8);
    SeriesWithValues cp = cycles_paths_series(8);
    RationalSeries x8 = RationalSeries::x(8);
    EgfSequence g2v = egf_values(-exp_series(x8 - Rat(1, 2) * (x8 * x8)));
    bool g2ok = true, g3ok = true, cpok = true;
    std::ostringstream dg2, dg3, dcp;
    for (int n = 1; n <= 8; ++n) {
        if (n >= 2) {
            std::int64_t chi = matching_complex(n).reduced_euler();
            if (g2v.at(n) != BigInt(chi)) {
                g2ok = false;
                dg2 << "n=" << n << ": got " << g2v.at(n) << ", want " << chi << "; ";
            }
        }
        std::int64_t chi_nc4 = paths_cycles_complex(n, true).reduced_euler();
        if (g3.values.at(n) != BigInt(chi_nc4)) {
            g3ok = false;
            dg3 << "n=" << n << ": got " << g3.values.at(n) << ", want " << chi_nc4 << "; ";
        }
        std::int64_t chi_all = paths_cycles_complex(n, false).reduced_euler();
        if (cp.values.at(n) != BigInt(chi_all)) {
            cpok = false;
            dcp << "n=" << n << ": got " << cp.values.at(n) << ", want " << chi_all << "; ";
        }
    }
    add(out, "degree-one closed form matches the matching-complex euler characteristics",
        g2ok, dg2.str());
    add(out, "degree-two closed form matches the 4-cycle-free path/cycle complexes",
        g3ok, dg3.str());
    add(out, "unrestricted path/cycle closed form matches its complexes", cpok, dcp.str());

    EgfSequence probe;
    probe.order = 6;
    probe.values = {BigInt(0), BigInt(1), BigInt(3), BigInt(-2), BigInt(5), BigInt(0),
                    BigInt(7)};
    add(out, "exponential formula holds for a sample coefficient sequence",
        exponential_formula_check(probe, 6));

    bool integral = true;
    std::ostringstream di;
    for (const LabeledSeries& ls : table6_series(12)) {
        try {
            egf_values(ls.series);
        } catch (const check_failure& e) {
            integral = false;
            di << ls.name << ": " << e.what() << "; ";
        }
    }
    add(out, "all closed-form generating functions have integer coefficient values",
        integral, di.str());
}

// ----------------------------------------------------------- characters ----

std::vector<int> edge_permutation(int n, const std::vector<int>& vperm) {
    std::vector<int> out(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) {
            int ia = vperm[std::size_t(a)], ib = vperm[std::size_t(b)];
            out[std::size_t(pair_rank(a, b))] =
                pair_rank(std::min(ia, ib), std::max(ia, ib));
        }
    return out;
}

void suite_characters(std::vector<CheckResult>& out, int) {
    bool lie_ok = true;
    std::ostringstream dl;
    for (int n = 2; n <= 10; ++n) {
        ClassFunction closed = lie_character(n);
        ClassFunction induced = lie_character_induced(n);
        if (closed.values != induced.values) {
            lie_ok = false;
            dl << "n=" << n << " differs; ";
        }
    }
    add(out, "closed-form and induced cyclic characters agree up to n=10", lie_ok,
        dl.str());

    ClassFunction w4 = omega_n2(4);
    std::vector<Rat> frozen{Rat(2), Rat(0), Rat(2), Rat(-1), Rat(0)};
    add(out, "squared character values at n=4 match the frozen vector",
        w4.values == frozen);

    for (int n = 4; n <= 5; ++n) {
        SimplicialComplex c = not_i_connected_complex(n, 2, 2);
        ClassFunction w = omega_n2(n);
        bool ok = true;
        std::ostringstream d;
        for (std::size_t i = 0; i < w.classes.size(); ++i) {
            std::vector<int> vperm = representative_of(w.classes[i]);
            long long tr = fixed_point_moebius_trace(edge_permutation(n, vperm), c);
            if (w.values[i] != Rat(tr)) {
                ok = false;
                d << "class " << i << ": character " << rat_string(w.values[i])
                  << " vs trace " << tr << "; ";
            }
        }
        add(out, "squared character equals the fixed-point moebius trace (n=" +
                     std::to_string(n) + ")",
            ok, d.str());
    }

    bool cyc_ok = true, norm_ok = true;
    std::ostringstream dm, dn;
    for (int n = 3; n <= 11; ++n) {
        if (omega_cn_trivial(n) != trivial_multiplicity(n)) {
            cyc_ok = false;
            dm << "n=" << n << ": averaged " << omega_cn_trivial(n).str() << " vs closed form "
               << trivial_multiplicity(n).str() << "; ";
        }
        ClassFunction w = omega_n2(n);
        Rat norm = inner_product(w, w);
        if (boost::multiprecision::denominator(norm) != 1 || norm < 0) {
            norm_ok = false;
            dn << "n=" << n << ": norm " << rat_string(norm) << "; ";
        }
    }
    add(out, "cyclic-group averaging reproduces the closed-form trivial multiplicity",
        cyc_ok, dm.str());
    add(out, "squared character has nonnegative integer self-inner-product", norm_ok, dn.str());

    bool count_ok = true;
    for (int n = 2; n <= 9; ++n) {
        BigInt total = 0;
        for (const CycleType& t : classes_of(n)) total += class_size(t);
        if (total != factorial_big(n)) count_ok = false;
    }
    add(out, "class sizes sum to n!", count_ok);
}

} // namespace

std::vector<CheckResult> verify_suite(const std::string& suite, int jobs) {
    std::vector<CheckResult> out;
    bool all = suite == "all";
    bool known = all;
    if (all || suite == "morse") { suite_morse(out, jobs); known = true; }
    if (all || suite == "duality") { suite_duality(out, jobs); known = true; }
    if (all || suite == "sigma") { suite_sigma(out, jobs); known = true; }
    if (all || suite == "series") { suite_series(out, jobs); known = true; }
    if (all || suite == "characters") { suite_characters(out, jobs); known = true; }
    if (!known)
        throw invalid_request("unknown verify suite: " + suite +
                              " (use morse|duality|sigma|series|characters|all)");
    return out;
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    int failed = 0;
    for (const CheckResult& c : checks) {
        nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        if (!c.pass) ++failed;
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"checks", std::move(arr)},
                          {"total", checks.size()},
                          {"failed", failed},
                          {"pass", failed == 0}};
}

} // namespace nicx
