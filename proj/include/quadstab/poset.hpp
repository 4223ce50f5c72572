#pragma once

// Finite posets with validated axioms, order complexes, the layered poset
// X_m(P), and the combinatorial reductive poset of decorated lists: elements
// are lists of (rank >= 1, class in P) pairs with fixed total (n, rho),
// ordered by merging consecutive blocks (rank sums, class ⋆-products). The
// proper part is in order-preserving bijection with the barycentric
// subdivision of X_{n-1}(P) via partial sums.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadstab/group.hpp"
#include "quadstab/simplicial.hpp"

namespace quadstab {

class FinitePoset {
public:
    FinitePoset() = default;

    FinitePoset(std::string name, std::vector<std::string> labels, std::vector<std::vector<bool>> relation)
        : name_(std::move(name)), labels_(std::move(labels)), le_(std::move(relation)) {
        const long n = size();
        if (static_cast<long>(le_.size()) != n)
            throw std::invalid_argument("FinitePoset: relation size mismatch");
        for (const auto& row : le_)
            if (static_cast<long>(row.size()) != n)
                throw std::invalid_argument("FinitePoset: relation size mismatch");
        for (long i = 0; i < n; ++i)
            if (!le_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
                throw std::invalid_argument("FinitePoset: relation not reflexive");
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                if (i != j && le(i, j) && le(j, i))
                    throw std::invalid_argument("FinitePoset: relation not antisymmetric");
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                if (!le(i, j)) continue;
                for (long k = 0; k < n; ++k)
                    if (le(j, k) && !le(i, k))
                        throw std::invalid_argument("FinitePoset: relation not transitive");
            }
    }

    long size() const { return static_cast<long>(labels_.size()); }
    const std::string& name() const { return name_; }
    const std::string& label(long i) const { return labels_[static_cast<std::size_t>(i)]; }
    bool le(long i, long j) const { return le_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool lt(long i, long j) const { return i != j && le(i, j); }

    // index of the unique maximum element, or -1
    long terminal_element() const {
        for (long t = 0; t < size(); ++t) {
            bool top = true;
            for (long i = 0; i < size(); ++i) top = top && le(i, t);
            if (top) return t;
        }
        return -1;
    }

    FinitePoset without_element(long drop, const std::string& new_name) const {
        std::vector<std::string> labels;
        std::vector<long> keep;
        for (long i = 0; i < size(); ++i)
            if (i != drop) {
                keep.push_back(i);
                labels.push_back(label(i));
            }
        std::vector<std::vector<bool>> le_new(keep.size(), std::vector<bool>(keep.size(), false));
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) le_new[a][b] = le(keep[a], keep[b]);
        return FinitePoset(new_name, std::move(labels), std::move(le_new));
    }

    // all nonempty chains, as ascending index sequences
    std::vector<std::vector<long>> chains() const {
        std::vector<std::vector<long>> out;
        std::vector<long> cur;
        auto rec = [&](auto&& self, long last) -> void {
            for (long j = 0; j < size(); ++j) {
                if (last >= 0 && !lt(last, j)) continue;
                cur.push_back(j);
                out.push_back(cur);
                self(self, j);
                cur.pop_back();
            }
        };
        rec(rec, -1);
        return out;
    }

    SimplicialComplex order_complex() const {
        std::vector<std::string> names;
        for (long i = 0; i < size(); ++i) names.push_back(label(i));
        return SimplicialComplex::from_facets("order complex of " + name_, std::move(names), chains());
    }

    // plain-text interchange: an "elements:" line plus one "le:" line per
    // strict relation (labels must be whitespace-free)
    std::string to_text() const {
        std::ostringstream os;
        os << "elements:";
        for (const auto& l : labels_) os << " " << l;
        os << "\n";
        for (long i = 0; i < size(); ++i)
            for (long j = 0; j < size(); ++j)
                if (lt(i, j)) os << "le: " << label(i) << " " << label(j) << "\n";
        return os.str();
    }

    static FinitePoset from_text(const std::string& text, const std::string& name = "poset") {
        std::istringstream in(text);
        std::string line;
        std::vector<std::string> labels;
        std::map<std::string, long> index;
        std::vector<std::pair<long, long>> rels;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string head;
            if (!(ls >> head)) continue;
            if (head == "elements:") {
                std::string l;
                while (ls >> l) {
                    if (index.count(l)) throw std::invalid_argument("duplicate element '" + l + "'");
                    index[l] = static_cast<long>(labels.size());
                    labels.push_back(l);
                }
            } else if (head == "le:") {
                std::string a, b;
                if (!(ls >> a >> b)) throw std::invalid_argument("bad le: line in poset text");
                if (!index.count(a) || !index.count(b))
                    throw std::invalid_argument("le: line uses unknown element");
                rels.emplace_back(index.at(a), index.at(b));
            } else {
                throw std::invalid_argument("unknown directive '" + head + "' in poset text");
            }
        }
        std::vector<std::vector<bool>> le(labels.size(), std::vector<bool>(labels.size(), false));
        for (std::size_t i = 0; i < labels.size(); ++i) le[i][i] = true;
        for (const auto& [a, b] : rels) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        return FinitePoset(name, std::move(labels), std::move(le));
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> le_;
};

// X_m(P): elements {1..m} x P with (r, a) < (r', a') iff r < r'. Its order
// complex is the m-fold join of |P|-point discrete sets.
inline FinitePoset x_poset(long m, const FiniteAbelianGroup& P) {
    if (m < 1) throw std::invalid_argument("x_poset: need m >= 1");
    const long q = P.order();
    std::vector<std::string> labels;
    for (long r = 1; r <= m; ++r)
        for (long a = 0; a < q; ++a) labels.push_back("(" + std::to_string(r) + "," + P.element_name(a) + ")");
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(m * q), std::vector<bool>(static_cast<std::size_t>(m * q), false));
    for (long i = 0; i < m * q; ++i)
        for (long j = 0; j < m * q; ++j) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) || (i / q < j / q);
    return FinitePoset("X_" + std::to_string(m) + "(" + P.name_str() + ")", std::move(labels), std::move(le));
}

inline FinitePoset face_poset(const SimplicialComplex& k) {
    std::vector<std::string> labels;
    std::vector<std::vector<long>> faces;
    for (long d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) {
            faces.push_back(s);
            labels.push_back(k.simplex_name(s));
        }
    std::vector<std::vector<bool>> le(faces.size(), std::vector<bool>(faces.size(), false));
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = 0; b < faces.size(); ++b)
            le[a][b] = std::includes(faces[b].begin(), faces[b].end(), faces[a].begin(), faces[a].end());
    return FinitePoset("face poset of " + k.name(), std::move(labels), std::move(le));
}

inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    return face_poset(k).order_complex();
}

// ---- decorated-list (reductive) posets --------------------------------------

struct RBSList {
    std::vector<std::pair<long, long>> blocks; // (rank >= 1, class index)

    long total_rank() const {
        long s = 0;
        for (const auto& [r, a] : blocks) s += r;
        return s;
    }

    long total_class(const FiniteAbelianGroup& P) const {
        long c = P.identity();
        for (const auto& [r, a] : blocks) c = P.op(c, a);
        return c;
    }

    std::string name(const FiniteAbelianGroup& P) const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) os << ",";
            os << "(" << blocks[i].first << "," << P.element_name(blocks[i].second) << ")";
        }
        os << ")";
        return os.str();
    }

    friend bool operator==(const RBSList& a, const RBSList& b) { return a.blocks == b.blocks; }
    friend bool operator<(const RBSList& a, const RBSList& b) { return a.blocks < b.blocks; }
};

// y covers-or-equals x when y is obtained from x by merging consecutive
// blocks; rank sums make the grouping unique, so the check is a single scan.
inline bool rbs_le(const RBSList& x, const RBSList& y, const FiniteAbelianGroup& P) {
    if (y.blocks.size() > x.blocks.size()) return false;
    std::size_t i = 0;
    for (const auto& [rank, cls] : y.blocks) {
        long r = 0, c = P.identity();
        while (r < rank) {
            if (i >= x.blocks.size()) return false;
            r += x.blocks[i].first;
            c = P.op(c, x.blocks[i].second);
            ++i;
        }
        if (r != rank || c != cls) return false;
    }
    return i == x.blocks.size();
}

struct RBSPoset {
    long n = 0;
    long rho = 0;
    std::vector<RBSList> elements;
    FinitePoset poset;
};

// all lists with total (n, rho), ordered by consecutive merges; the one-block
// list is the terminal element
inline RBSPoset rbs_poset(long n, long rho, const FiniteAbelianGroup& P) {
    if (n < 1) throw std::invalid_argument("rbs_poset: need n >= 1");
    RBSPoset out;
    out.n = n;
    out.rho = rho;
    // compositions of n, classes free on all but the last block
    std::vector<std::pair<long, long>> cur;
    auto rec = [&](auto&& self, long rest, long cls_so_far) -> void {
        for (long r = 1; r <= rest; ++r) {
            if (r == rest) {
                cur.emplace_back(r, P.op(P.inverse(cls_so_far), rho));
                out.elements.push_back(RBSList{cur});
                cur.pop_back();
                continue;
            }
            for (long a = 0; a < P.order(); ++a) {
                cur.emplace_back(r, a);
                self(self, rest - r, P.op(cls_so_far, a));
                cur.pop_back();
            }
        }
    };
    rec(rec, n, P.identity());
    std::sort(out.elements.begin(), out.elements.end());

    std::vector<std::string> labels;
    for (const auto& e : out.elements) labels.push_back(e.name(P));
    std::vector<std::vector<bool>> le(out.elements.size(), std::vector<bool>(out.elements.size(), false));
    for (std::size_t a = 0; a < out.elements.size(); ++a)
        for (std::size_t b = 0; b < out.elements.size(); ++b)
            le[a][b] = rbs_le(out.elements[a], out.elements[b], P);
    out.poset = FinitePoset("RBS(" + std::to_string(n) + "," + P.element_name(rho) + ";" + P.name_str() + ")",
                            std::move(labels), std::move(le));
    return out;
}

// the full subposet on everything except the terminal one-block list
inline RBSPoset boundary_rbs(long n, long rho, const FiniteAbelianGroup& P) {
    RBSPoset full = rbs_poset(n, rho, P);
    RBSPoset out;
    out.n = n;
    out.rho = rho;
    long drop = -1;
    for (std::size_t i = 0; i < full.elements.size(); ++i) {
        if (full.elements[i].blocks.size() == 1) drop = static_cast<long>(i);
        else out.elements.push_back(full.elements[i]);
    }
    out.poset = full.poset.without_element(
        drop, "boundary RBS(" + std::to_string(n) + "," + P.element_name(rho) + ";" + P.name_str() + ")");
    return out;
}

// partial sums, dropping the full one: a proper list with k >= 2 blocks maps
// to a (k-1)-element chain in X_{n-1}(P)
inline std::vector<std::pair<long, long>> rbs_to_sdx(const RBSList& list, const FiniteAbelianGroup& P) {
    if (list.blocks.size() < 2)
        throw std::domain_error("rbs_to_sdx: the one-block list has no chain image");
    std::vector<std::pair<long, long>> chain;
    long r = 0, c = P.identity();
    for (std::size_t i = 0; i + 1 < list.blocks.size(); ++i) {
        r += list.blocks[i].first;
        c = P.op(c, list.blocks[i].second);
        chain.emplace_back(r, c);
    }
    return chain;
}

// successive differences plus a final balancing block
inline RBSList sdx_to_rbs(const std::vector<std::pair<long, long>>& chain, long n, long rho,
                          const FiniteAbelianGroup& P) {
    RBSList out;
    long prev_r = 0, prev_c = P.identity();
    for (const auto& [r, c] : chain) {
        if (r <= prev_r || r >= n) throw std::invalid_argument("sdx_to_rbs: chain ranks must increase within 1..n-1");
        out.blocks.emplace_back(r - prev_r, P.op(P.inverse(prev_c), c));
        prev_r = r;
        prev_c = c;
    }
    out.blocks.emplace_back(n - prev_r, P.op(P.inverse(prev_c), rho));
    return out;
}

} // namespace quadstab
