#include "nicx/complexes.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

#include "nicx/errors.hpp"

namespace nicx {

std::int64_t FVector::reduced_euler() const {
    std::int64_t chi = 0;
    for (std::size_t j = 0; j < counts.size(); ++j)
        chi += (j % 2 == 0) ? -counts[j] : counts[j]; // counts[j] sits in dim j-1
    return chi;
}

SimplicialComplex SimplicialComplex::from_faces(int universe, std::vector<Face> faces) {
    SimplicialComplex c;
    c.universe = universe;
    for (Face f : faces) {
        if (f == 0) continue;
        c.levels[popcount(f) - 1].push_back(f);
    }
    for (auto& [d, lv] : c.levels) {
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    }
    c.complete = true;
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int universe, std::vector<Face> facets) {
    std::sort(facets.begin(), facets.end(), [](Face a, Face b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<Face> maximal;
    for (Face f : facets) {
        bool covered = false;
        for (Face g : maximal)
            if ((f & ~g) == 0) {
                covered = true;
                break;
            }
        if (!covered) maximal.push_back(f);
    }
    SimplicialComplex c;
    c.universe = universe;
    c.facets = std::move(maximal);
    c.has_facets = true;
    return c;
}

const std::vector<Face>& SimplicialComplex::level(int d) const {
    auto it = levels.find(d);
    if (it == levels.end()) throw invalid_request("complex: dimension not enumerated");
    return it->second;
}

std::int64_t SimplicialComplex::stored_face_count() const {
    std::int64_t n = 0;
    for (const auto& [d, lv] : levels) n += std::int64_t(lv.size());
    return n;
}

int SimplicialComplex::dim() const {
    if (!levels.empty()) {
        for (auto it = levels.rbegin(); it != levels.rend(); ++it)
            if (!it->second.empty()) return it->first;
        return -1;
    }
    if (has_facets) {
        int d = -1;
        for (Face f : facets) d = std::max(d, popcount(f) - 1);
        return d;
    }
    return -1;
}

bool SimplicialComplex::is_face(Face f) const {
    if (f == 0) return true;
    if (complete || level_stored(popcount(f) - 1)) {
        auto it = levels.find(popcount(f) - 1);
        if (it == levels.end()) {
            if (complete) return false;
            throw invalid_request("complex: membership undecidable (dimension missing)");
        }
        return std::binary_search(it->second.begin(), it->second.end(), f);
    }
    if (has_facets) {
        for (Face g : facets)
            if ((f & ~g) == 0) return true;
        return false;
    }
    throw invalid_request("complex: membership undecidable");
}

FVector SimplicialComplex::f_vector() const {
    if (!complete) throw invalid_request("f_vector requires full enumeration");
    FVector f;
    f.counts.assign(std::size_t(dim() + 2), 0);
    f.counts[0] = 1;
    for (const auto& [d, lv] : levels)
        if (!lv.empty()) f.counts[std::size_t(d + 1)] = std::int64_t(lv.size());
    return f;
}

std::int64_t SimplicialComplex::reduced_euler() const { return f_vector().reduced_euler(); }

std::vector<Face> SimplicialComplex::compute_facets() const {
    if (!complete) throw invalid_request("compute_facets requires full enumeration");
    std::vector<Face> out;
    if (stored_face_count() == 0) {
        out.push_back(0);
        return out;
    }
    for (const auto& [d, lv] : levels) {
        for (Face f : lv) {
            bool maximal = true;
            for (int j = 0; j < universe && maximal; ++j) {
                if (f & (Face(1) << j)) continue;
                if (is_face(f | (Face(1) << j))) maximal = false;
            }
            if (maximal) out.push_back(f);
        }
    }
    return out;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::vector<Face> out;
    out.push_back(0);
    for (const auto& [d, lv] : levels) out.insert(out.end(), lv.begin(), lv.end());
    return out;
}

SimplicialComplex SimplicialComplex::window(int d) const {
    if (d < 0) throw invalid_request("window: dimension must be >= 0");
    SimplicialComplex w;
    w.universe = universe;
    for (int dd = std::max(0, d - 1); dd <= d + 1; ++dd) {
        auto it = levels.find(dd);
        if (it != levels.end())
            w.levels[dd] = it->second;
        else if (complete)
            w.levels[dd] = {};
        else
            throw invalid_request("window: dimension not enumerated");
    }
    return w;
}

namespace {

std::vector<Face> extend_level(const std::vector<Face>& faces, int m,
                               const std::function<bool(Face)>& pred, int jobs) {
    auto run = [&](std::size_t lo, std::size_t hi, std::vector<Face>& dst) {
        for (std::size_t t = lo; t < hi; ++t) {
            Face f = faces[t];
            int top = 63 - std::countl_zero(f);
            for (int j = top + 1; j < m; ++j) {
                Face g = f | (Face(1) << j);
                if (pred(g)) dst.push_back(g);
            }
        }
    };
    if (jobs <= 1 || faces.size() < 2048) {
        std::vector<Face> out;
        run(0, faces.size(), out);
        return out;
    }
    int nt = std::min<int>(jobs, int(std::thread::hardware_concurrency() > 0
                                         ? std::thread::hardware_concurrency()
                                         : 4));
    std::vector<std::vector<Face>> parts(static_cast<std::size_t>(nt));
    std::vector<std::thread> threads;
    std::size_t chunk = (faces.size() + std::size_t(nt) - 1) / std::size_t(nt);
    for (int t = 0; t < nt; ++t) {
        std::size_t lo = std::size_t(t) * chunk;
        std::size_t hi = std::min(faces.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(run, lo, hi, std::ref(parts[std::size_t(t)]));
    }
    for (auto& th : threads) th.join();
    std::vector<Face> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

} // namespace

std::map<int, std::vector<Face>> enumerate_closed(int universe,
                                                  const std::function<bool(Face)>& pred,
                                                  int max_dim, std::uint64_t face_guard,
                                                  int jobs) {
    if (universe < 0 || universe > 64)
        throw invalid_request("enumerate_closed: universe must fit in 64 bits");
    std::map<int, std::vector<Face>> out;
    std::vector<Face> cur;
    for (int j = 0; j < universe; ++j)
        if (pred(Face(1) << j)) cur.push_back(Face(1) << j);
    std::uint64_t total = cur.size();
    if (face_guard && total > face_guard) throw infeasible("face enumeration exceeds guard");
    int d = 0;
    while (!cur.empty()) {
        const std::vector<Face>& stored = out.emplace(d, std::move(cur)).first->second;
        if (max_dim >= 0 && d == max_dim) break;
        std::vector<Face> next = extend_level(stored, universe, pred, jobs);
        std::sort(next.begin(), next.end());
        total += next.size();
        if (face_guard && total > face_guard) throw infeasible("face enumeration exceeds guard");
        cur = std::move(next);
        ++d;
    }
    return out;
}

std::function<bool(Face)> not_i_connected_predicate(int n, int k, int i) {
    if (n < 2 || n > kMaxVertices) throw invalid_request("need 2 <= n <= 16");
    if (k < 2 || k > n) throw invalid_request("need 2 <= k <= n");
    if (i < 1 || i > n - 1) throw invalid_request("need 1 <= i <= n-1");
    if (k == 2) {
        return [n, i](Face f) {
            std::array<std::uint32_t, kMaxVertices> adj{};
            Face m = f;
            while (m) {
                int idx = std::countr_zero(m);
                m &= m - 1;
                auto [a, b] = pair_unrank(idx);
                adj[a] |= (1u << b);
                adj[b] |= (1u << a);
            }
            return !is_i_connected_adj(adj, n, i);
        };
    }
    std::uint64_t u = binom(n, k);
    if (u > 64) throw infeasible("hyperedge universe exceeds 64 bits");
    std::vector<std::uint32_t> em(static_cast<std::size_t>(u));
    for (int idx = 0; idx < int(u); ++idx) em[std::size_t(idx)] = kset_mask(k, idx);
    return [n, i, em = std::move(em)](Face f) {
        std::array<std::uint32_t, kMaxVertices> adj{};
        Face m = f;
        while (m) {
            int idx = std::countr_zero(m);
            m &= m - 1;
            std::uint32_t e = em[std::size_t(idx)];
            std::uint32_t vbits = e;
            while (vbits) {
                int v = std::countr_zero(vbits);
                vbits &= vbits - 1;
                adj[v] |= e & ~(1u << v);
            }
        }
        return !is_i_connected_adj(adj, n, i);
    };
}

SimplicialComplex not_i_connected_complex(int n, int k, int i, int dim_bound,
                                          std::uint64_t face_guard, int jobs) {
    auto pred = not_i_connected_predicate(n, k, i);
    int u = (k == 2) ? Graph::universe_size(n) : int(binom(n, k));
    SimplicialComplex c;
    c.universe = u;
    c.levels = enumerate_closed(u, pred, dim_bound, face_guard, jobs);
    c.complete = dim_bound < 0 || c.levels.empty() || c.levels.rbegin()->first < dim_bound;
    return c;
}

std::vector<Face> maximal_separable_facets(int n, int i) {
    if (i < 2 || i > n - 1) throw invalid_request("need 2 <= i <= n-1");
    int u = Graph::universe_size(n);
    std::vector<Face> out;
    for_each_k_subset(n, i - 1, [&](Face a_bits) {
        std::uint32_t A = std::uint32_t(a_bits);
        std::uint32_t rest = ((1u << n) - 1) & ~A;
        int anchor = std::countr_zero(rest); // canonical side: B contains min of rest
        std::uint32_t others = rest & ~(1u << anchor);
        // iterate subsets of `others` joining the anchor's side
        std::uint32_t sub = 0;
        while (true) {
            std::uint32_t B = (1u << anchor) | sub;
            std::uint32_t C = rest & ~B;
            if (C != 0) {
                Face f = 0;
                for (int idx = 0; idx < u; ++idx) {
                    auto [a, b] = pair_unrank(idx);
                    bool cross = ((B >> a) & 1 && (C >> b) & 1) || ((C >> a) & 1 && (B >> b) & 1);
                    if (!cross) f |= Face(1) << idx;
                }
                out.push_back(f);
            }
            if (sub == others) break;
            sub = (sub - others) & others; // next subset of others
        }
    });
    return out;
}

SimplicialComplex matching_complex(int n, std::uint64_t face_guard) {
    if (n < 1 || n > kMaxVertices) throw invalid_request("need 1 <= n <= 16");
    if (n >= 2 && Graph::universe_size(n) > 64)
        throw infeasible("edge universe exceeds 64 bits");
    int u = (n >= 2) ? Graph::universe_size(n) : 0;
    auto pred = [](Face f) {
        std::uint32_t used = 0;
        Face m = f;
        while (m) {
            int idx = std::countr_zero(m);
            m &= m - 1;
            auto [a, b] = pair_unrank(idx);
            std::uint32_t e = (1u << a) | (1u << b);
            if (used & e) return false;
            used |= e;
        }
        return true;
    };
    SimplicialComplex c;
    c.universe = u;
    c.levels = enumerate_closed(u, pred, -1, face_guard);
    c.complete = true;
    return c;
}

SimplicialComplex chessboard_complex(int m, int n, std::uint64_t face_guard) {
    if (m < 1 || n < 1) throw invalid_request("need m, n >= 1");
    if (m * n > 64) throw infeasible("board exceeds 64 cells");
    int u = m * n;
    auto pred = [m](Face f) {
        std::uint32_t rows = 0, cols = 0;
        Face x = f;
        while (x) {
            int idx = std::countr_zero(x);
            x &= x - 1;
            int r = idx % m, c = idx / m;
            if ((rows >> r) & 1 || (cols >> c) & 1) return false;
            rows |= 1u << r;
            cols |= 1u << c;
        }
        return true;
    };
    SimplicialComplex c;
    c.universe = u;
    c.levels = enumerate_closed(u, pred, -1, face_guard);
    c.complete = true;
    return c;
}

SimplicialComplex paths_cycles_complex(int n, bool forbid_c4, std::uint64_t face_guard) {
    if (n < 1 || n > kMaxVertices) throw invalid_request("need 1 <= n <= 16");
    int u = (n >= 2) ? Graph::universe_size(n) : 0;
    auto pred = [n, forbid_c4](Face f) {
        std::array<std::uint32_t, kMaxVertices> adj{};
        std::array<int, kMaxVertices> deg{};
        Face m = f;
        while (m) {
            int idx = std::countr_zero(m);
            m &= m - 1;
            auto [a, b] = pair_unrank(idx);
            if (++deg[a] > 2 || ++deg[b] > 2) return false;
            adj[a] |= (1u << b);
            adj[b] |= (1u << a);
        }
        if (!forbid_c4) return true;
        // reject components that are 4-cycles
        std::uint32_t left = (1u << n) - 1;
        while (left) {
            std::uint32_t comp = left & (~left + 1);
            while (true) {
                std::uint32_t grown = comp, fr = comp;
                while (fr) {
                    int v = std::countr_zero(fr);
                    fr &= fr - 1;
                    grown |= adj[v];
                }
                if (grown == comp) break;
                comp = grown;
            }
            if (std::popcount(comp) == 4) {
                int edges_in = 0;
                Face mm = f;
                while (mm) {
                    int idx = std::countr_zero(mm);
                    mm &= mm - 1;
                    auto [a, b] = pair_unrank(idx);
                    if (((comp >> a) & 1) && ((comp >> b) & 1)) ++edges_in;
                }
                if (edges_in == 4) return false;
            }
            left &= ~comp;
        }
        return true;
    };
    SimplicialComplex c;
    c.universe = u;
    c.levels = enumerate_closed(u, pred, -1, face_guard);
    c.complete = true;
    return c;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
    int m = c.universe;
    if (m < 1 || m > 24) throw infeasible("dual enumeration needs 1 <= universe <= 24");
    Face full = (m == 64) ? ~Face(0) : ((Face(1) << m) - 1);
    if (c.is_face(full)) throw invalid_request("alexander_dual: full universe is a face");
    std::vector<Face> faces;
    for (Face b = 1; b <= full; ++b)
        if (!c.is_face(full ^ b)) faces.push_back(b);
    return SimplicialComplex::from_faces(m, std::move(faces));
}

void write_facet_file(std::ostream& os, const SimplicialComplex& c) {
    std::vector<Face> fs = c.has_facets ? c.facets : c.compute_facets();
    os << "universe " << c.universe << "\n";
    for (Face f : fs) {
        bool first = true;
        for_each_bit(f, [&](int j) {
            if (!first) os << ' ';
            os << j;
            first = false;
        });
        os << "\n";
    }
}

SimplicialComplex read_facet_file(std::istream& is) {
    std::string header;
    int m = 0;
    if (!(is >> header) || header != "universe" || !(is >> m) || m < 0 || m > 64)
        throw invalid_request("facet file: bad header");
    std::string line;
    std::getline(is, line); // rest of header line
    std::vector<Face> facets;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        Face f = 0;
        int j;
        bool any = false;
        while (ls >> j) {
            if (j < 0 || j >= m) throw invalid_request("facet file: index out of range");
            f |= Face(1) << j;
            any = true;
        }
        if (any || !line.empty()) facets.push_back(f);
    }
    if (facets.empty()) facets.push_back(0);
    return SimplicialComplex::from_facets(m, std::move(facets));
}

} // namespace nicx
