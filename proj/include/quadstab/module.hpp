#pragma once

// Finitely presented N-graded modules over A_P, realized grading by grading
// as explicit vector spaces with degree-(+1) action matrices, plus module
// Tor via the reduced bar complex B_d = I^{⊗d} ⊗ M.
//
// Text format (one item per line, '#' comments):
//   gen <label> <grading>
//   rel <grading> <term> [+|- <term>]*
// where <term> is coeff*p*label (p an element of P, named by residue tuple)
// or coeff*label for a scalar term in the grading of the generator itself.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadstab/ap_algebra.hpp"
#include "quadstab/bounds.hpp"
#include "quadstab/linalg.hpp"

namespace quadstab {

struct GradedModulePresentation {
    struct Generator {
        std::string label;
        long grading;
    };
    struct Term {
        mpq_class coeff;
        bool has_p = true;
        long p_elem = 0;
        long gen = 0; // generator index
    };
    struct Relation {
        long grading;
        std::vector<Term> terms;
    };

    std::vector<Generator> generators;
    std::vector<Relation> relations;

    long generator_index(const std::string& label) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i].label == label) return static_cast<long>(i);
        throw std::invalid_argument("presentation references unknown generator '" + label + "'");
    }

    void add_generator(const std::string& label, long grading) {
        for (const auto& g : generators)
            if (g.label == label) throw std::invalid_argument("duplicate generator label '" + label + "'");
        if (grading < 0) throw std::invalid_argument("generator grading must be >= 0");
        generators.push_back({label, grading});
    }

    // term in an existing relation under construction
    static Term term(const mpq_class& coeff, long p_elem, long gen) { return Term{coeff, true, p_elem, gen}; }
    static Term scalar_term(const mpq_class& coeff, long gen) { return Term{coeff, false, 0, gen}; }

    void add_relation(long grading, std::vector<Term> terms) {
        for (const auto& t : terms) {
            if (t.gen < 0 || t.gen >= static_cast<long>(generators.size()))
                throw std::invalid_argument("relation references unknown generator");
            long g = generators[static_cast<std::size_t>(t.gen)].grading;
            if (t.has_p && grading - g < 1)
                throw std::invalid_argument("relation term needs coefficient degree >= 1");
            if (!t.has_p && grading != g)
                throw std::invalid_argument("scalar relation term must sit in the generator's grading");
        }
        relations.push_back({grading, std::move(terms)});
    }

    static GradedModulePresentation parse(const std::string& text, const FiniteAbelianGroup& P) {
        GradedModulePresentation pres;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string head;
            if (!(ls >> head)) continue;
            if (head == "gen") {
                std::string label;
                long grading;
                if (!(ls >> label >> grading)) throw std::invalid_argument("bad gen line: " + line);
                pres.add_generator(label, grading);
            } else if (head == "rel") {
                long grading;
                if (!(ls >> grading)) throw std::invalid_argument("bad rel line: " + line);
                std::vector<Term> terms;
                std::string tok;
                int sign = 1;
                while (ls >> tok) {
                    if (tok == "+") { sign = 1; continue; }
                    if (tok == "-") { sign = -1; continue; }
                    // coeff*p*label or coeff*label
                    auto p1 = tok.find('*');
                    if (p1 == std::string::npos) throw std::invalid_argument("bad relation term: " + tok);
                    mpq_class coeff(tok.substr(0, p1));
                    coeff.canonicalize();
                    std::string rest = tok.substr(p1 + 1);
                    auto p2 = rest.rfind('*');
                    Term t;
                    if (p2 == std::string::npos) {
                        t = scalar_term(sign * coeff, 0);
                        t.gen = pres.generator_index(rest);
                    } else {
                        t = term(sign * coeff, P.parse_element(rest.substr(0, p2)), 0);
                        t.gen = pres.generator_index(rest.substr(p2 + 1));
                    }
                    terms.push_back(t);
                    sign = 1;
                }
                pres.add_relation(grading, std::move(terms));
            } else {
                throw std::invalid_argument("unknown directive '" + head + "' in presentation");
            }
        }
        return pres;
    }

    std::string format(const FiniteAbelianGroup& P) const {
        std::ostringstream out;
        for (const auto& g : generators) out << "gen " << g.label << " " << g.grading << "\n";
        for (const auto& r : relations) {
            out << "rel " << r.grading;
            bool first = true;
            for (const auto& t : r.terms) {
                mpq_class c = t.coeff;
                if (first) {
                    out << " ";
                    if (sgn(c) < 0) { out << "- "; c = -c; }
                } else {
                    out << (sgn(c) < 0 ? " - " : " + ");
                    if (sgn(c) < 0) c = -c;
                }
                out << c.get_str() << "*";
                if (t.has_p) out << P.element_name(t.p_elem) << "*";
                out << generators[static_cast<std::size_t>(t.gen)].label;
                first = false;
            }
            out << "\n";
        }
        return out.str();
    }
};

// The module of the worked example over A_{Z/2}: generated by X, X' in
// grading 1 and six classes in grading 2, with lambda*X = sigma*X',
// lambda*X' = sigma*X, and the grading-2 classes annihilated by sigma and
// lambda. Ground field F_2.
inline GradedModulePresentation example_module_presentation() {
    GradedModulePresentation p;
    p.add_generator("X", 1);
    p.add_generator("X'", 1);
    for (const char* g : {"U", "T", "B", "C", "C'", "D'"}) p.add_generator(g, 2);
    using GP = GradedModulePresentation;
    p.add_relation(2, {GP::term(1, 1, 0), GP::term(-1, 0, 1)}); // lambda*X - sigma*X'
    p.add_relation(2, {GP::term(1, 1, 1), GP::term(-1, 0, 0)}); // lambda*X' - sigma*X
    for (long g = 2; g <= 7; ++g) {
        p.add_relation(3, {GP::term(1, 0, g)});
        p.add_relation(3, {GP::term(1, 1, g)});
    }
    return p;
}

// A/sigma: one generator in grading 0, relation sigma*gen.
inline GradedModulePresentation quotient_by_sigma_presentation() {
    GradedModulePresentation p;
    p.add_generator("g", 0);
    p.add_relation(1, {GradedModulePresentation::term(1, 0, 0)});
    return p;
}

// The free module A itself.
inline GradedModulePresentation free_module_presentation() {
    GradedModulePresentation p;
    p.add_generator("g", 0);
    return p;
}

// Seeded random small presentations for property tests. Uses plain modular
// draws so a fixed seed pins the exact sequence.
template <class Rng>
GradedModulePresentation random_presentation(Rng& rng, const FiniteAbelianGroup& P, long max_gens = 3,
                                             long max_rels = 4, long max_grading = 3) {
    GradedModulePresentation pres;
    long ngens = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_gens));
    for (long i = 0; i < ngens; ++i)
        pres.add_generator("g" + std::to_string(i), static_cast<long>(rng() % static_cast<unsigned long>(max_grading + 1)));
    long nrels = static_cast<long>(rng() % static_cast<unsigned long>(max_rels + 1));
    const long coeff_pool[] = {1, -1, 1, 2, -1, 1};
    for (long r = 0; r < nrels; ++r) {
        long grading = static_cast<long>(rng() % static_cast<unsigned long>(max_grading)) + 1;
        std::vector<GradedModulePresentation::Term> terms;
        long nterms = 1 + static_cast<long>(rng() % 3);
        for (long k = 0; k < nterms; ++k) {
            long gen = static_cast<long>(rng() % static_cast<unsigned long>(ngens));
            long gi = pres.generators[static_cast<std::size_t>(gen)].grading;
            if (gi > grading) continue;
            mpq_class c(coeff_pool[rng() % 6]);
            if (gi == grading)
                terms.push_back(GradedModulePresentation::scalar_term(c, gen));
            else
                terms.push_back(GradedModulePresentation::term(
                    c, static_cast<long>(rng() % static_cast<unsigned long>(P.order())), gen));
        }
        if (!terms.empty()) pres.add_relation(grading, std::move(terms));
    }
    return pres;
}

template <class Field>
class RealizedModule {
public:
    using Elem = typename Field::Elem;

    RealizedModule(const Field& F, const APAlgebra& alg, const GradedModulePresentation& pres, long N)
        : field_(F), alg_(&alg), N_(N) {
        const FiniteAbelianGroup& P = alg.group();
        const long ng = static_cast<long>(pres.generators.size());
        for (const auto& g : pres.generators)
            if (g.grading > N)
                throw std::invalid_argument("realize_module: window smaller than a generator grading");

        // free module basis per grading: (gen i, unit) if grading matches,
        // else (gen i, rho) for each rho when gen grading < n
        free_basis_.resize(static_cast<std::size_t>(N) + 1);
        for (long n = 0; n <= N; ++n) {
            for (long i = 0; i < ng; ++i) {
                long gi = pres.generators[static_cast<std::size_t>(i)].grading;
                if (gi == n) free_basis_[static_cast<std::size_t>(n)].push_back({i, -1});
                else if (gi < n)
                    for (long rho = 0; rho < P.order(); ++rho)
                        free_basis_[static_cast<std::size_t>(n)].push_back({i, rho});
            }
        }

        auto column_of = [&](long n, long gen, long rho_or_unit) {
            const auto& basis = free_basis_[static_cast<std::size_t>(n)];
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (basis[k].first == gen && basis[k].second == rho_or_unit) return static_cast<long>(k);
            throw std::logic_error("realize_module: free basis lookup failed");
        };

        quotients_.resize(static_cast<std::size_t>(N) + 1);
        for (long n = 0; n <= N; ++n) {
            std::vector<std::vector<Elem>> rel_rows;
            for (const auto& r : pres.relations) {
                if (r.grading > n) continue;
                long k = n - r.grading;
                long reps = (k == 0) ? 1 : P.order();
                for (long rho = 0; rho < reps; ++rho) {
                    std::vector<Elem> row(free_basis_[static_cast<std::size_t>(n)].size(), F.zero());
                    for (const auto& t : r.terms) {
                        long col;
                        if (k == 0) {
                            col = column_of(n, t.gen, t.has_p ? t.p_elem : -1);
                        } else if (t.has_p) {
                            col = column_of(n, t.gen, P.op(rho, t.p_elem));
                        } else {
                            col = column_of(n, t.gen, rho);
                        }
                        row[static_cast<std::size_t>(col)] =
                            F.add(row[static_cast<std::size_t>(col)], F.from_rational(t.coeff));
                    }
                    rel_rows.push_back(std::move(row));
                }
            }
            quotients_[static_cast<std::size_t>(n)] =
                QuotientSpace<Field>(F, static_cast<long>(free_basis_[static_cast<std::size_t>(n)].size()), rel_rows);
        }

        // action matrices act(p): M(n) -> M(n+1)
        actions_.assign(static_cast<std::size_t>(P.order()),
                        std::vector<DenseMatrix<Field>>(static_cast<std::size_t>(N), DenseMatrix<Field>()));
        for (long p = 0; p < P.order(); ++p) {
            for (long n = 0; n + 1 <= N; ++n) {
                const auto& src = quotients_[static_cast<std::size_t>(n)];
                const auto& dst = quotients_[static_cast<std::size_t>(n + 1)];
                DenseMatrix<Field> m(dst.dim(), src.dim(), F);
                for (long j = 0; j < src.dim(); ++j) {
                    auto [gen, x] = free_basis_[static_cast<std::size_t>(n)]
                                               [static_cast<std::size_t>(src.basis_columns()[static_cast<std::size_t>(j)])];
                    long target = (x < 0) ? p : P.op(p, x);
                    std::vector<Elem> vec(free_basis_[static_cast<std::size_t>(n + 1)].size(), F.zero());
                    vec[static_cast<std::size_t>(column_of(n + 1, gen, target))] = F.one();
                    auto coords = dst.reduce(F, vec);
                    for (long i = 0; i < dst.dim(); ++i) m.at(i, j) = coords[static_cast<std::size_t>(i)];
                }
                actions_[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)] = std::move(m);
            }
        }
    }

    const Field& field() const { return field_; }
    const APAlgebra& algebra() const { return *alg_; }
    long window() const { return N_; }
    long dim(long n) const {
        if (n < 0 || n > N_) return 0;
        return quotients_[static_cast<std::size_t>(n)].dim();
    }
    std::vector<long> dims() const {
        std::vector<long> out;
        for (long n = 0; n <= N_; ++n) out.push_back(dim(n));
        return out;
    }

    // act(p) : M(n) -> M(n+1)
    const DenseMatrix<Field>& action(long p, long n) const {
        return actions_[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
    }

    // <k, rho> . v for v in M(n), landing in M(n+k)
    std::vector<Elem> act_element(long k, long rho, long n, const std::vector<Elem>& v) const {
        const Field& F = field_;
        (void)F;
        std::vector<Elem> cur = apply(action(rho, n), v);
        long sigma = alg_->group().identity();
        for (long step = 1; step < k; ++step) cur = apply(action(sigma, n + step), cur);
        return cur;
    }

    std::vector<Elem> apply(const DenseMatrix<Field>& m, const std::vector<Elem>& v) const {
        std::vector<Elem> out(static_cast<std::size_t>(m.rows), field_.zero());
        for (long i = 0; i < m.rows; ++i) {
            Elem acc = field_.zero();
            for (long j = 0; j < m.cols; ++j)
                if (!field_.is_zero(m.at(i, j)))
                    acc = field_.add(acc, field_.mul(m.at(i, j), v[static_cast<std::size_t>(j)]));
            out[static_cast<std::size_t>(i)] = acc;
        }
        return out;
    }

private:
    Field field_;
    const APAlgebra* alg_;
    long N_;
    std::vector<std::vector<std::pair<long, long>>> free_basis_; // (gen, rho or -1 for unit)
    std::vector<QuotientSpace<Field>> quotients_;
    std::vector<std::vector<DenseMatrix<Field>>> actions_;
};

// ---- module Tor via the reduced bar complex --------------------------------

namespace detail {

// basis key: (m, n_1..n_d, rho_1..rho_d, j) packed into one vector
template <class Field>
struct ModuleBarBasis {
    std::vector<std::vector<long>> elems;
    std::map<std::vector<long>, long> index;

    void build(long n, long d, long p_order, const RealizedModule<Field>& M) {
        for (long m = 0; m <= n - d; ++m) {
            if (M.dim(m) == 0) continue;
            for (const auto& comp : compositions(n - m, d)) {
                std::vector<long> rhos(static_cast<std::size_t>(d), 0);
                while (true) {
                    for (long j = 0; j < M.dim(m); ++j) {
                        std::vector<long> key;
                        key.reserve(2 * static_cast<std::size_t>(d) + 2);
                        key.push_back(m);
                        key.insert(key.end(), comp.begin(), comp.end());
                        key.insert(key.end(), rhos.begin(), rhos.end());
                        key.push_back(j);
                        index.emplace(key, static_cast<long>(elems.size()));
                        elems.push_back(std::move(key));
                    }
                    long i = d - 1;
                    for (; i >= 0; --i) {
                        if (++rhos[static_cast<std::size_t>(i)] < p_order) break;
                        rhos[static_cast<std::size_t>(i)] = 0;
                    }
                    if (i < 0) break;
                }
            }
        }
    }
};

} // namespace detail

template <class Rows, class Elem>
void add_sparse_entry(Rows& rows, long r, long c, const Elem& v) {
    rows[static_cast<std::size_t>(r)].emplace_back(c, v);
}

// The grading-n slice of the reduced bar complex B_d = I^{⊗d} ⊗ M with its
// field-valued boundary matrices (row-sparse). Faces 1..d-1 merge adjacent
// tensor slots with sign (-1)^(i-1); face d acts on the module with sign
// (-1)^(d-1).
template <class Field>
struct ModuleBarSlice {
    long n = 0;
    std::vector<long> dims;                 // dims[d], d = 0..d_top
    std::vector<SparseRows<Field>> boundaries; // boundaries[d-1]: B_d -> B_{d-1}
};

template <class Field>
ModuleBarSlice<Field> module_bar_slice(const RealizedModule<Field>& M, long n, long d_top) {
    const Field& F = M.field();
    const APAlgebra& alg = M.algebra();
    const long p = alg.group().order();
    std::vector<detail::ModuleBarBasis<Field>> bases(static_cast<std::size_t>(d_top) + 1);
    for (long d = 0; d <= d_top; ++d) bases[static_cast<std::size_t>(d)].build(n, d, p, M);

    ModuleBarSlice<Field> slice;
    slice.n = n;
    for (long d = 0; d <= d_top; ++d)
        slice.dims.push_back(static_cast<long>(bases[static_cast<std::size_t>(d)].elems.size()));

    for (long d = 1; d <= d_top; ++d) {
        const auto& src = bases[static_cast<std::size_t>(d)];
        const auto& dst = bases[static_cast<std::size_t>(d - 1)];
        SparseRows<Field> rows(dst.elems.size());
        for (long col = 0; col < static_cast<long>(src.elems.size()); ++col) {
            const auto& key = src.elems[static_cast<std::size_t>(col)];
            long m = key[0];
            auto comp_at = [&](long i) { return key[static_cast<std::size_t>(1 + i)]; };
            auto rho_at = [&](long i) { return key[static_cast<std::size_t>(1 + d + i)]; };
            long j = key[static_cast<std::size_t>(1 + 2 * d)];
            // merge faces 1..d-1
            for (long i = 0; i + 1 < d; ++i) {
                std::vector<long> merged;
                merged.push_back(m);
                for (long q = 0; q < d; ++q)
                    if (q != i + 1) merged.push_back(comp_at(q) + (q == i ? comp_at(i + 1) : 0));
                for (long q = 0; q < d; ++q) {
                    if (q == i + 1) continue;
                    long rho = rho_at(q);
                    if (q == i) rho = alg.group().op(rho, rho_at(i + 1));
                    merged.push_back(rho);
                }
                merged.push_back(j);
                long row = dst.index.at(merged);
                add_sparse_entry(rows, row, col, (i % 2 == 0) ? F.one() : F.neg(F.one()));
            }
            // action face d: the last tensor factor acts on the module
            std::vector<typename Field::Elem> v(static_cast<std::size_t>(M.dim(m)), F.zero());
            v[static_cast<std::size_t>(j)] = F.one();
            auto w = M.act_element(comp_at(d - 1), rho_at(d - 1), m, v);
            typename Field::Elem sign = ((d - 1) % 2 == 0) ? F.one() : F.neg(F.one());
            long m2 = m + comp_at(d - 1);
            for (long j2 = 0; j2 < static_cast<long>(w.size()); ++j2) {
                if (F.is_zero(w[static_cast<std::size_t>(j2)])) continue;
                std::vector<long> target;
                target.push_back(m2);
                for (long q = 0; q + 1 < d; ++q) target.push_back(comp_at(q));
                for (long q = 0; q + 1 < d; ++q) target.push_back(rho_at(q));
                target.push_back(j2);
                long row = dst.index.at(target);
                add_sparse_entry(rows, row, col, F.mul(sign, w[static_cast<std::size_t>(j2)]));
            }
        }
        for (auto& r : rows) {
            std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            // accumulate duplicates, drop zeros
            std::vector<std::pair<long, typename Field::Elem>> clean;
            for (const auto& e : r) {
                if (!clean.empty() && clean.back().first == e.first)
                    clean.back().second = F.add(clean.back().second, e.second);
                else
                    clean.push_back(e);
            }
            r.clear();
            for (auto& e : clean)
                if (!F.is_zero(e.second)) r.push_back(std::move(e));
        }
        slice.boundaries.push_back(std::move(rows));
    }
    return slice;
}

// Tor^{A}_{n,d}(k, M) dimensions for n <= N, d <= D over the module's field.
template <class Field>
TorTable bar_tor_module(const RealizedModule<Field>& M, long N, long D) {
    const Field& F = M.field();
    if (N > M.window()) throw std::invalid_argument("bar_tor_module: window exceeds realization");

    TorTable t;
    t.max_n = N;
    t.max_d = D;
    t.dims.assign(static_cast<std::size_t>(N) + 1, std::vector<long>(static_cast<std::size_t>(D) + 1, 0));

    for (long n = 0; n <= N; ++n) {
        long d_top = std::min(n, D + 1);
        ModuleBarSlice<Field> slice = module_bar_slice(M, n, d_top);
        std::vector<long> ranks(static_cast<std::size_t>(d_top) + 2, 0); // ranks[d] = rank of B_d -> B_{d-1}
        for (long d = 1; d <= d_top; ++d) {
            SparseRows<Field> rows = slice.boundaries[static_cast<std::size_t>(d - 1)];
            ranks[static_cast<std::size_t>(d)] =
                sparse_rank(F, rows, slice.dims[static_cast<std::size_t>(d)]);
        }
        for (long d = 0; d <= std::min(n, D); ++d) {
            long dim_d = slice.dims[static_cast<std::size_t>(d)];
            long r_out = (d >= 1) ? ranks[static_cast<std::size_t>(d)] : 0;
            long r_in = (d + 1 <= d_top) ? ranks[static_cast<std::size_t>(d + 1)] : 0;
            long h = dim_d - r_out - r_in;
            if (h < 0) throw std::logic_error("bar_tor_module: negative homology dimension");
            t.dims[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)] = h;
        }
    }
    return t;
}

// ---- h-numbers, regularity, stabilization ----------------------------------

struct HNumber {
    Bound value;
    long window = 0; // max grading inspected
};

inline HNumber h_number(const TorTable& t, long d) {
    Bound b = Bound::neg_inf();
    for (long n = 0; n <= t.max_n; ++n)
        if (t.dim(n, d) != 0) b = Bound::of(n);
    return HNumber{b, t.max_n};
}

enum class CheckStatus { pass, fail, inconclusive };

struct RegularityCheck {
    long d = 0;
    HNumber h_d;
    Bound bound; // d - 1 + h_1
    CheckStatus status = CheckStatus::inconclusive;
};

struct RegularityReport {
    HNumber h1;
    std::vector<RegularityCheck> checks;
    bool all_pass = true;       // no failure and nothing inconclusive
    bool any_failure = false;
};

// h_d(M) <= d - 1 + h_1(M) for 2 <= d <= d_max, within the window N.
// A visible violation is a definite failure; a bound at or beyond the window
// edge cannot be certified and is reported as inconclusive.
template <class Field>
RegularityReport verify_regularity_lemma(const RealizedModule<Field>& M, long d_max, long N) {
    TorTable t = bar_tor_module(M, N, d_max);
    RegularityReport rep;
    rep.h1 = h_number(t, 1);
    for (long d = 2; d <= d_max; ++d) {
        RegularityCheck c;
        c.d = d;
        c.h_d = h_number(t, d);
        c.bound = rep.h1.value.plus(d - 1);
        if (!c.h_d.value.leq(c.bound)) {
            c.status = CheckStatus::fail;
            rep.any_failure = true;
            rep.all_pass = false;
        } else if (c.bound.finite && c.bound.value >= N) {
            c.status = CheckStatus::inconclusive;
            rep.all_pass = false;
        } else {
            c.status = CheckStatus::pass;
        }
        rep.checks.push_back(c);
    }
    return rep;
}

struct StabilizationReport {
    long d = 0;
    long window = 0;
    std::vector<std::pair<long, bool>> surjective_at; // (n, joint map onto M(n))
    bool pass = true;                                 // surjective for all 2d < n <= N
};

// Surjectivity of the joint map  ⊕_p M(n-1) -> M(n), (x_p) |-> sum p . x_p.
template <class Field>
StabilizationReport verify_stabilization_surjectivity(const RealizedModule<Field>& M, long d) {
    const Field& F = M.field();
    const long P = M.algebra().group().order();
    StabilizationReport rep;
    rep.d = d;
    rep.window = M.window();
    for (long n = 1; n <= M.window(); ++n) {
        long target = M.dim(n);
        bool surj;
        if (target == 0) {
            surj = true;
        } else {
            SparseRows<Field> rows(static_cast<std::size_t>(target));
            long col0 = 0;
            for (long p = 0; p < P; ++p) {
                const auto& m = M.action(p, n - 1);
                for (long i = 0; i < m.rows; ++i)
                    for (long j = 0; j < m.cols; ++j)
                        if (!F.is_zero(m.at(i, j)))
                            rows[static_cast<std::size_t>(i)].emplace_back(col0 + j, m.at(i, j));
                col0 += m.cols;
            }
            for (auto& r : rows)
                std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            surj = sparse_rank(F, rows, col0) == target;
        }
        rep.surjective_at.emplace_back(n, surj);
        if (n > 2 * d && !surj) rep.pass = false;
    }
    return rep;
}

} // namespace quadstab
