#pragma once

// Finite simplicial complexes given by facets (downward closure implied),
// their simplicial chain complexes (augmented or not), and the matching
// complex M({1..n}) whose simplices are partial matchings.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quadstab/chain.hpp"

namespace quadstab {

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(std::string name, std::vector<std::string> vertex_names,
                                         const std::vector<std::vector<long>>& facets) {
        SimplicialComplex k;
        k.name_ = std::move(name);
        k.vertex_names_ = std::move(vertex_names);
        std::set<std::vector<long>> seen;
        for (auto facet : facets) {
            std::sort(facet.begin(), facet.end());
            facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
            for (long v : facet)
                if (v < 0 || v >= static_cast<long>(k.vertex_names_.size()))
                    throw std::invalid_argument("SimplicialComplex: facet vertex out of range");
            // all nonempty subsets
            std::size_t sz = facet.size();
            for (unsigned long mask = 1; mask < (1ul << sz); ++mask) {
                std::vector<long> s;
                for (std::size_t i = 0; i < sz; ++i)
                    if (mask & (1ul << i)) s.push_back(facet[i]);
                seen.insert(std::move(s));
            }
        }
        for (const auto& s : seen) {
            std::size_t d = s.size() - 1;
            if (k.simplices_.size() <= d) k.simplices_.resize(d + 1);
            k.simplices_[d].push_back(s);
        }
        return k; // per-dimension lists inherit the set's lex order
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    long dimension() const { return static_cast<long>(simplices_.size()) - 1; }
    bool empty() const { return simplices_.empty(); }

    const std::vector<std::vector<long>>& simplices(long d) const {
        static const std::vector<std::vector<long>> none;
        if (d < 0 || d > dimension()) return none;
        return simplices_[static_cast<std::size_t>(d)];
    }

    long simplex_count() const {
        long total = 0;
        for (const auto& layer : simplices_) total += static_cast<long>(layer.size());
        return total;
    }

    std::string simplex_name(const std::vector<long>& s) const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) os << ",";
            os << vertex_names_[static_cast<std::size_t>(s[i])];
        }
        os << "}";
        return os.str();
    }

    // augmented = true gives the reduced chain complex (empty simplex in
    // degree -1)
    FreeChainComplex chain_complex(bool augmented, long cap = 1L << 40) const {
        long total = simplex_count() + (augmented ? 1 : 0);
        if (total > cap)
            throw ResourceLimitError("chain complex of " + (name_.empty() ? std::string("complex") : name_) + " has " +
                                     std::to_string(total) + " cells, over the cap of " + std::to_string(cap));
        long lo = augmented ? -1 : 0;
        long hi = std::max(dimension(), lo);
        std::vector<long> dims;
        for (long d = lo; d <= hi; ++d)
            dims.push_back(d == -1 ? 1 : static_cast<long>(simplices(d).size()));

        std::vector<std::map<std::vector<long>, long>> index(static_cast<std::size_t>(hi) + 1);
        for (long d = 0; d <= hi; ++d)
            for (std::size_t i = 0; i < simplices(d).size(); ++i)
                index[static_cast<std::size_t>(d)].emplace(simplices(d)[i], static_cast<long>(i));

        std::vector<ExactMatrix> boundaries;
        for (long d = lo + 1; d <= hi; ++d) {
            ExactMatrix m(dims[static_cast<std::size_t>(d - 1 - lo)], dims[static_cast<std::size_t>(d - lo)]);
            if (d == 0) {
                for (long col = 0; col < static_cast<long>(simplices(0).size()); ++col) m.set(0, col, 1);
            } else {
                for (long col = 0; col < static_cast<long>(simplices(d).size()); ++col) {
                    const auto& s = simplices(d)[static_cast<std::size_t>(col)];
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        std::vector<long> face;
                        face.reserve(s.size() - 1);
                        for (std::size_t j = 0; j < s.size(); ++j)
                            if (j != i) face.push_back(s[j]);
                        long row = index[static_cast<std::size_t>(d - 1)].at(face);
                        m.add_to(row, col, (i % 2 == 0) ? mpq_class(1) : mpq_class(-1));
                    }
                }
            }
            boundaries.push_back(std::move(m));
        }
        return FreeChainComplex(lo, std::move(dims), std::move(boundaries));
    }

    // plain-text interchange: one "vertices:" line, one "facet:" line per
    // maximal simplex (vertex names must be whitespace-free)
    std::string to_text() const {
        std::ostringstream os;
        os << "vertices:";
        for (const auto& v : vertex_names_) os << " " << v;
        os << "\n";
        for (long d = dimension(); d >= 0; --d)
            for (const auto& s : simplices(d)) {
                bool maximal = true;
                for (long d2 = d + 1; d2 <= dimension() && maximal; ++d2)
                    for (const auto& t : simplices(d2))
                        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                            maximal = false;
                            break;
                        }
                if (!maximal) continue;
                os << "facet:";
                for (long v : s) os << " " << vertex_names_[static_cast<std::size_t>(v)];
                os << "\n";
            }
        return os.str();
    }

    static SimplicialComplex from_text(const std::string& text, const std::string& name = "complex") {
        std::istringstream in(text);
        std::string line;
        std::vector<std::string> names;
        std::map<std::string, long> index;
        std::vector<std::vector<long>> facets;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string head;
            if (!(ls >> head)) continue;
            if (head == "vertices:") {
                std::string v;
                while (ls >> v) {
                    if (index.count(v)) throw std::invalid_argument("duplicate vertex '" + v + "'");
                    index[v] = static_cast<long>(names.size());
                    names.push_back(v);
                }
            } else if (head == "facet:") {
                std::vector<long> f;
                std::string v;
                while (ls >> v) {
                    auto it = index.find(v);
                    if (it == index.end()) throw std::invalid_argument("facet uses unknown vertex '" + v + "'");
                    f.push_back(it->second);
                }
                facets.push_back(std::move(f));
            } else {
                throw std::invalid_argument("unknown directive '" + head + "' in complex text");
            }
        }
        return from_facets(name, std::move(names), facets);
    }

private:
    std::string name_;
    std::vector<std::string> vertex_names_;
    std::vector<std::vector<std::vector<long>>> simplices_; // by dimension, lex sorted
};

inline HomologyResult reduced_homology(const SimplicialComplex& k, const CoefficientDomain& domain,
                                       long cap = 1L << 40) {
    return homology(k.chain_complex(true, cap), domain);
}

// The matching complex M({1..n}): vertices are 2-element subsets of {1..n},
// simplices are pairwise-disjoint collections. On a complete graph every
// maximal matching has floor(n/2) edges.
inline SimplicialComplex matching_complex(long n) {
    if (n < 2) throw std::invalid_argument("matching_complex: need n >= 2");
    std::vector<std::string> names;
    std::map<std::pair<long, long>, long> edge_index;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) {
            edge_index[{i, j}] = static_cast<long>(names.size());
            names.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
        }

    std::vector<std::vector<long>> facets;
    std::vector<long> current;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    long skips_allowed = n % 2;
    auto rec = [&](auto&& self, long skips_left) -> void {
        long v = 0;
        for (long i = 1; i <= n; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                v = i;
                break;
            }
        if (v == 0) {
            facets.push_back(current);
            return;
        }
        used[static_cast<std::size_t>(v)] = true;
        for (long w = v + 1; w <= n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = true;
            current.push_back(edge_index.at({v, w}));
            self(self, skips_left);
            current.pop_back();
            used[static_cast<std::size_t>(w)] = false;
        }
        if (skips_left > 0) self(self, skips_left - 1); // leave v unmatched
        used[static_cast<std::size_t>(v)] = false;
    };
    rec(rec, skips_allowed);
    return SimplicialComplex::from_facets("M({1.." + std::to_string(n) + "})", std::move(names), facets);
}

} // namespace quadstab
