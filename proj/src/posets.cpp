#include "nicx/posets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "nicx/combinat.hpp"
#include "nicx/errors.hpp"

namespace nicx {

namespace {

constexpr std::uint64_t bit64(int i) { return std::uint64_t{1} << (i & 63); }

int row_popcount(const std::uint64_t* row, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
    return c;
}

} // namespace

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x)
        for (int y : covers_up[std::size_t(x)]) out.emplace_back(x, y);
    return out;
}

std::string FinitePoset::label(int x) const {
    if (x < 0 || x >= n) throw invalid_request("element id out of range");
    if (labels.empty()) return std::to_string(x);
    return labels[std::size_t(x)];
}

FinitePoset poset_from_up_bits(int n, std::vector<std::uint64_t> up,
                               std::vector<std::string> labels) {
    if (n < 0) throw invalid_request("poset size must be nonnegative");
    int words = (n + 63) / 64;
    if (up.size() != std::size_t(n) * words)
        throw invalid_request("relation bitset has the wrong shape");
    if (!labels.empty() && labels.size() != std::size_t(n))
        throw invalid_request("label count mismatch");

    FinitePoset p;
    p.n = n;
    p.words = words;
    p.labels = std::move(labels);
    p.up = std::move(up);
    p.down.assign(std::size_t(n) * words, 0);

    for (int x = 0; x < n; ++x) {
        const std::uint64_t* row = &p.up[std::size_t(x) * words];
        if (!((row[x >> 6] >> (x & 63)) & 1))
            throw invalid_request("relation is not reflexive");
        for (int w = 0; w < (x >> 6); ++w)
            if (row[w]) throw invalid_request("element ids are not topologically sorted");
        if (row[x >> 6] & (bit64(x) - 1))
            throw invalid_request("element ids are not topologically sorted");
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int y = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                p.down[std::size_t(y) * words + (x >> 6)] |= bit64(x);
            }
        }
    }
    // transitivity: everything above y stays above x whenever x <= y
    for (int x = 0; x < n; ++x) {
        const std::uint64_t* rx = &p.up[std::size_t(x) * words];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = rx[w];
            while (bits) {
                int y = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* ry = &p.up[std::size_t(y) * words];
                for (int w2 = 0; w2 < words; ++w2)
                    if (ry[w2] & ~rx[w2])
                        throw invalid_request("relation is not transitive");
            }
        }
    }

    p.covers_up.assign(std::size_t(n), {});
    std::vector<std::uint64_t> dom(static_cast<std::size_t>(words));
    for (int y = 0; y < n; ++y) {
        std::fill(dom.begin(), dom.end(), 0);
        const std::uint64_t* dy = &p.down[std::size_t(y) * words];
        for (int w = (y >> 6); w >= 0; --w) {
            std::uint64_t bits = dy[w];
            if (w == (y >> 6)) bits &= bit64(y) - 1; // strictly below y
            while (bits) {
                int x = w * 64 + 63 - std::countl_zero(bits);
                bits ^= bit64(x);
                if ((dom[std::size_t(w)] >> (x & 63)) & 1) continue;
                p.covers_up[std::size_t(x)].push_back(y);
                const std::uint64_t* dx = &p.down[std::size_t(x) * words];
                for (int w2 = 0; w2 <= w; ++w2) dom[std::size_t(w2)] |= dx[w2];
            }
        }
    }
    for (auto& v : p.covers_up) std::sort(v.begin(), v.end());

    int nmin = 0, nmax = 0;
    for (int x = 0; x < n; ++x) {
        if (row_popcount(&p.down[std::size_t(x) * words], words) == 1) {
            ++nmin;
            p.bottom = x;
        }
        if (row_popcount(&p.up[std::size_t(x) * words], words) == 1) {
            ++nmax;
            p.top = x;
        }
    }
    if (nmin != 1) p.bottom = -1;
    if (nmax != 1) p.top = -1;
    return p;
}

FinitePoset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                              std::vector<std::string> labels) {
    int words = (n + 63) / 64;
    std::vector<std::vector<int>> upstairs(static_cast<std::size_t>(n));
    for (auto [a, b] : covers) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw invalid_request("cover edge out of range");
        if (a >= b)
            throw invalid_request("cover edges must go from lower to higher id");
        upstairs[std::size_t(a)].push_back(b);
    }
    std::vector<std::uint64_t> up(std::size_t(n) * words);
    for (int x = n - 1; x >= 0; --x) {
        std::uint64_t* rx = &up[std::size_t(x) * words];
        rx[x >> 6] |= bit64(x);
        for (int y : upstairs[std::size_t(x)]) {
            const std::uint64_t* ry = &up[std::size_t(y) * words];
            for (int w = 0; w < words; ++w) rx[w] |= ry[w];
        }
    }
    return poset_from_up_bits(n, std::move(up), std::move(labels));
}

long long moebius(const FinitePoset& p, int x, int y) {
    if (x < 0 || y < 0 || x >= p.n || y >= p.n)
        throw invalid_request("element id out of range");
    if (!p.leq(x, y)) throw invalid_request("moebius needs comparable elements x <= y");
    if (x == y) return 1;
    const int W = p.words;
    std::vector<long long> mu(std::size_t(p.n), 0);
    mu[std::size_t(x)] = 1;
    const std::uint64_t* ux = &p.up[std::size_t(x) * W];
    const std::uint64_t* dy = &p.down[std::size_t(y) * W];
    for (int w = 0; w < W; ++w) {
        std::uint64_t bits = ux[w] & dy[w];
        while (bits) {
            int z = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            if (z == x) continue;
            const std::uint64_t* dz = &p.down[std::size_t(z) * W];
            long long s = 0;
            for (int w2 = 0; w2 <= (z >> 6); ++w2) {
                std::uint64_t bb = dz[w2] & ux[w2];
                if (w2 == (z >> 6)) bb &= bit64(z) - 1;
                while (bb) {
                    s += mu[std::size_t(w2 * 64 + std::countr_zero(bb))];
                    bb &= bb - 1;
                }
            }
            mu[std::size_t(z)] = -s;
        }
    }
    return mu[std::size_t(y)];
}

long long moebius_full(const FinitePoset& p) {
    if (p.bottom < 0 || p.top < 0)
        throw invalid_request("poset has no marked bottom/top");
    return moebius(p, p.bottom, p.top);
}

SimplicialComplex order_complex(const FinitePoset& p, std::uint64_t face_guard) {
    if (p.n > 64) throw infeasible("order complex universe exceeds 64 elements");
    std::vector<Face> chains;
    std::function<void(Face, int)> grow = [&](Face mask, int last) {
        chains.push_back(mask);
        if (face_guard && chains.size() > face_guard)
            throw infeasible("order complex has too many chains");
        for (int w = last + 1; w < p.n; ++w)
            if (p.leq(last, w)) grow(mask | (Face{1} << w), w);
    };
    for (int z = 0; z < p.n; ++z) grow(Face{1} << z, z);
    return SimplicialComplex::from_faces(p.n, std::move(chains));
}

FinitePoset face_lattice(const SimplicialComplex& c) {
    if (!c.complete)
        throw invalid_request("face lattice needs a fully enumerated complex");
    std::vector<Face> faces = c.all_faces();
    int m = int(faces.size());
    std::vector<std::string> labels;
    labels.reserve(std::size_t(m) + 1);
    for (Face f : faces) {
        std::string s;
        for_each_bit(f, [&](int b) {
            if (!s.empty()) s += ' ';
            s += std::to_string(b + 1);
        });
        labels.push_back(s.empty() ? "-" : s);
    }
    labels.push_back("^");
    auto leq = [&faces, m](int i, int j) {
        if (j == m) return true;
        if (i == m) return false;
        return (faces[std::size_t(i)] & ~faces[std::size_t(j)]) == 0;
    };
    return poset_from_leq(m + 1, leq, std::move(labels));
}

namespace {

using Partition = std::vector<std::uint32_t>;

std::vector<Partition> all_partitions(int n, int k) {
    std::vector<Partition> parts;
    for_each_set_partition(n, [&](const std::vector<std::uint32_t>& blocks) {
        if (k > 1)
            for (std::uint32_t b : blocks)
                if (std::popcount(b) > 1 && std::popcount(b) < k) return;
        Partition q(blocks);
        std::sort(q.begin(), q.end());
        parts.push_back(std::move(q));
    });
    std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return parts;
}

FinitePoset refinement_poset(int n, const std::vector<Partition>& parts) {
    std::vector<std::string> labels;
    labels.reserve(parts.size());
    for (const Partition& q : parts) labels.push_back(partition_label(n, q));
    auto leq = [&parts, n](int i, int j) {
        const Partition& a = parts[std::size_t(i)];
        const Partition& b = parts[std::size_t(j)];
        std::array<std::uint32_t, 16> owner{};
        for (std::uint32_t blk : b) {
            std::uint32_t bits = blk;
            while (bits) {
                owner[std::size_t(std::countr_zero(bits))] = blk;
                bits &= bits - 1;
            }
        }
        for (std::uint32_t blk : a)
            if (blk & ~owner[std::size_t(std::countr_zero(blk))]) return false;
        return true;
    };
    return poset_from_leq(int(parts.size()), leq, std::move(labels));
}

} // namespace

std::string partition_label(int n, const std::vector<std::uint32_t>& blocks) {
    std::vector<std::uint32_t> sorted(blocks);
    std::sort(sorted.begin(), sorted.end(),
              [](std::uint32_t a, std::uint32_t b) {
                  return std::countr_zero(a) < std::countr_zero(b);
              });
    std::string out;
    for (std::uint32_t blk : sorted) {
        if (!out.empty()) out += '|';
        bool first = true;
        std::uint32_t bits = blk;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            if (!first && n > 9) out += ',';
            out += std::to_string(v + 1);
            first = false;
        }
    }
    return out;
}

FinitePoset partition_lattice(int n) {
    if (n < 1 || n > kMaxVertices) throw invalid_request("partition lattice needs 1 <= n <= 16");
    if (n > 8) throw infeasible("partition lattice too large");
    return refinement_poset(n, all_partitions(n, 1));
}

FinitePoset k_equal_lattice(int n, int k) {
    if (n < 1 || n > kMaxVertices || k < 2)
        throw invalid_request("k-equal lattice needs 1 <= n <= 16 and k >= 2");
    if (n > 8) throw infeasible("k-equal lattice too large");
    return refinement_poset(n, all_partitions(n, k));
}

FinitePoset boolean_lattice(int n) {
    if (n < 0 || n > 12) throw invalid_request("boolean lattice needs 0 <= n <= 12");
    std::vector<std::uint32_t> sets;
    sets.reserve(std::size_t(1) << n);
    for (std::uint32_t s = 0; s < (1u << n); ++s) sets.push_back(s);
    std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    std::vector<std::string> labels;
    labels.reserve(sets.size());
    for (std::uint32_t s : sets) {
        std::string out;
        std::uint32_t bits = s;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            if (!out.empty()) out += ' ';
            out += std::to_string(v + 1);
        }
        labels.push_back(out.empty() ? "-" : out);
    }
    auto leq = [&sets](int i, int j) {
        return (sets[std::size_t(i)] & ~sets[std::size_t(j)]) == 0;
    };
    return poset_from_leq(int(sets.size()), leq, std::move(labels));
}

namespace {

FinitePoset subposet(const FinitePoset& p, const std::vector<int>& ids) {
    std::vector<std::string> labels;
    if (!p.labels.empty()) {
        labels.reserve(ids.size());
        for (int id : ids) labels.push_back(p.labels[std::size_t(id)]);
    }
    auto leq = [&p, &ids](int i, int j) {
        return p.leq(ids[std::size_t(i)], ids[std::size_t(j)]);
    };
    return poset_from_leq(int(ids.size()), leq, std::move(labels));
}

} // namespace

FinitePoset interval(const FinitePoset& p, int x, int y) {
    if (x < 0 || y < 0 || x >= p.n || y >= p.n)
        throw invalid_request("element id out of range");
    if (!p.leq(x, y)) throw invalid_request("interval needs comparable elements x <= y");
    std::vector<int> ids;
    const std::uint64_t* ux = &p.up[std::size_t(x) * p.words];
    const std::uint64_t* dy = &p.down[std::size_t(y) * p.words];
    for (int w = 0; w < p.words; ++w) {
        std::uint64_t bits = ux[w] & dy[w];
        while (bits) {
            ids.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return subposet(p, ids);
}

FinitePoset proper_part(const FinitePoset& p) {
    if (p.bottom < 0 || p.top < 0)
        throw invalid_request("proper part needs marked bottom and top");
    std::vector<int> ids;
    for (int x = 0; x < p.n; ++x)
        if (x != p.bottom && x != p.top) ids.push_back(x);
    return subposet(p, ids);
}

FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
    long long m = (long long)p.n * q.n;
    if (m > 10000) throw infeasible("poset product too large");
    std::vector<std::string> labels;
    labels.reserve(std::size_t(m));
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < q.n; ++b)
            labels.push_back("(" + p.label(a) + ";" + q.label(b) + ")");
    auto leq = [&p, &q](int i, int j) {
        int qa = q.n;
        return p.leq(i / qa, j / qa) && q.leq(i % qa, j % qa);
    };
    return poset_from_leq(int(m), leq, std::move(labels));
}

namespace {

std::vector<int> wl_colors(const FinitePoset& p) {
    std::vector<std::vector<int>> covers_down(static_cast<std::size_t>(p.n));
    for (auto [x, y] : p.cover_pairs()) covers_down[std::size_t(y)].push_back(x);
    std::vector<int> col(static_cast<std::size_t>(p.n));
    for (int x = 0; x < p.n; ++x)
        col[std::size_t(x)] =
            row_popcount(&p.up[std::size_t(x) * p.words], p.words) * (p.n + 1) +
            row_popcount(&p.down[std::size_t(x) * p.words], p.words);
    int classes = 0;
    for (;;) {
        std::map<std::vector<int>, int> relabel;
        std::vector<int> next(static_cast<std::size_t>(p.n));
        for (int x = 0; x < p.n; ++x) {
            std::vector<int> sig{col[std::size_t(x)]};
            std::vector<int> nb;
            for (int y : p.covers_up[std::size_t(x)]) nb.push_back(col[std::size_t(y)]);
            std::sort(nb.begin(), nb.end());
            sig.push_back(-1);
            sig.insert(sig.end(), nb.begin(), nb.end());
            nb.clear();
            for (int y : covers_down[std::size_t(x)]) nb.push_back(col[std::size_t(y)]);
            std::sort(nb.begin(), nb.end());
            sig.push_back(-2);
            sig.insert(sig.end(), nb.begin(), nb.end());
            auto [it, fresh] = relabel.emplace(std::move(sig), int(relabel.size()));
            next[std::size_t(x)] = it->second;
            (void)fresh;
        }
        if (int(relabel.size()) == classes) return next;
        classes = int(relabel.size());
        col = std::move(next);
    }
}

} // namespace

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
    if (p.n != q.n) return false;
    if (p.n > 5000) throw invalid_request("isomorphism test limited to 5000 elements");
    if (p.cover_pairs().size() != q.cover_pairs().size()) return false;
    std::vector<int> cp = wl_colors(p), cq = wl_colors(q);
    {
        std::vector<int> a(cp), b(cq);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::map<int, std::vector<int>> bucket;
    for (int y = 0; y < q.n; ++y) bucket[cq[std::size_t(y)]].push_back(y);
    std::vector<int> order(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) order[std::size_t(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto sa = bucket[cp[std::size_t(a)]].size(), sb = bucket[cp[std::size_t(b)]].size();
        if (sa != sb) return sa < sb;
        return a < b;
    });
    std::vector<int> image(std::size_t(p.n), -1);
    std::vector<char> used(std::size_t(q.n), 0);
    std::vector<int> assigned;
    std::function<bool(std::size_t)> place = [&](std::size_t step) {
        if (step == order.size()) return true;
        int a = order[step];
        for (int b : bucket[cp[std::size_t(a)]]) {
            if (used[std::size_t(b)]) continue;
            bool ok = true;
            for (int a2 : assigned) {
                int b2 = image[std::size_t(a2)];
                if (p.leq(a, a2) != q.leq(b, b2) || p.leq(a2, a) != q.leq(b2, b)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[std::size_t(a)] = b;
            used[std::size_t(b)] = 1;
            assigned.push_back(a);
            if (place(step + 1)) return true;
            assigned.pop_back();
            used[std::size_t(b)] = 0;
            image[std::size_t(a)] = -1;
        }
        return false;
    };
    return place(0);
}

nlohmann::json poset_to_json(const FinitePoset& p) {
    nlohmann::json j;
    j["size"] = p.n;
    if (!p.labels.empty()) j["labels"] = p.labels;
    nlohmann::json covers = nlohmann::json::array();
    for (auto [x, y] : p.cover_pairs()) covers.push_back({x, y});
    j["covers"] = covers;
    if (p.bottom >= 0) j["bottom"] = p.bottom;
    if (p.top >= 0) j["top"] = p.top;
    return j;
}

} // namespace nicx
