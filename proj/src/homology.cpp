#include "nicx/homology.hpp"

#include <algorithm>

#include "nicx/errors.hpp"

namespace nicx {

namespace {

const std::vector<Face> kNoFaces;

// Faces of dimension d, treating unstored dimensions of a complete complex
// as empty.  Windowed complexes must have the dimension materialized.
const std::vector<Face>& faces_at(const SimplicialComplex& c, int d) {
    if (d < 0) throw invalid_request("faces_at: negative dimension");
    auto it = c.levels.find(d);
    if (it != c.levels.end()) return it->second;
    if (c.complete) return kNoFaces;
    throw invalid_request("homology: dimension " + std::to_string(d) +
                          " not enumerated");
}

std::int64_t face_count(const SimplicialComplex& c, int d) {
    if (d == -1) return 1;
    return std::int64_t(faces_at(c, d).size());
}

HomologyGroup group_from(std::int64_t fd, const SNFResult& del_d,
                         const SNFResult& del_d1) {
    HomologyGroup g;
    g.betti = fd - del_d.rank() - del_d1.rank();
    for (const BigInt& q : del_d1.diag)
        if (q > 1) g.torsion.push_back(q);
    return g;
}

} // namespace

SparseMatZ boundary_matrix(const SimplicialComplex& c, int d) {
    if (d < 0) throw invalid_request("boundary_matrix: d must be >= 0");
    const std::vector<Face>& cols = faces_at(c, d);
    SparseMatZ m;
    m.cols = int(cols.size());
    m.col.resize(cols.size());
    if (d == 0) {
        m.rows = 1;
        for (std::size_t j = 0; j < cols.size(); ++j) m.col[j] = {{0, 1}};
        return m;
    }
    const std::vector<Face>& rows = faces_at(c, d - 1);
    m.rows = int(rows.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Face f = cols[j];
        int sign = 1;
        for (Face rest = f; rest;) {
            Face bit = rest & (~rest + 1);
            rest ^= bit;
            Face sub = f ^ bit;
            auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            if (it == rows.end() || *it != sub)
                throw invalid_request("boundary_matrix: complex is not downward closed "
                                      "on the stored window");
            m.col[j].emplace_back(int(it - rows.begin()), sign);
            sign = -sign;
        }
    }
    return m;
}

ReducedHomology reduced_homology(const SimplicialComplex& c,
                                 const std::vector<int>& dims) {
    if (!c.complete && c.levels.empty())
        throw invalid_request("reduced_homology needs enumerated faces");
    std::vector<int> want = dims;
    if (want.empty())
        for (int d = -1; d <= c.dim(); ++d) want.push_back(d);
    std::map<int, SNFResult> snf; // d -> SNF of ∂_d; ∂_{-1} and beyond-top are rank 0
    auto snf_of = [&](int d) -> const SNFResult& {
        auto it = snf.find(d);
        if (it == snf.end())
            it = snf.emplace(d, sparse_snf(boundary_matrix(c, d))).first;
        return it->second;
    };
    static const SNFResult kZeroMap;
    ReducedHomology h;
    for (int d : want) {
        if (d < -1) throw invalid_request("reduced_homology: dimension below -1");
        const SNFResult& low = d == -1 ? kZeroMap : snf_of(d);
        const SNFResult& high = snf_of(d + 1);
        h[d] = group_from(face_count(c, d), low, high);
    }
    return h;
}

HomologyGroup homology_window(const SimplicialComplex& c, int d) {
    if (d < -1) throw invalid_request("homology_window: dimension below -1");
    SNFResult low = d == -1 ? SNFResult{} : sparse_snf(boundary_matrix(c, d));
    SNFResult high = sparse_snf(boundary_matrix(c, d + 1));
    return group_from(face_count(c, d), low, high);
}

std::string group_to_string(const HomologyGroup& g) {
    if (g.trivial()) return "0";
    std::string s;
    auto append = [&](const std::string& part) {
        if (!s.empty()) s += " + ";
        s += part;
    };
    if (g.betti > 0) {
        std::string part = "Z";
        if (g.betti > 1) part += "^" + std::to_string(g.betti);
        append(part);
    }
    for (std::size_t i = 0; i < g.torsion.size();) {
        std::size_t j = i;
        while (j < g.torsion.size() && g.torsion[j] == g.torsion[i]) ++j;
        std::string part = "Z_" + g.torsion[i].str();
        if (j - i > 1) part += "^" + std::to_string(j - i);
        append(part);
        i = j;
    }
    return s;
}

} // namespace nicx
