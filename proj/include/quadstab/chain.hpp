#pragma once

// Free chain complexes over Z (or Q) with exact boundary matrices, and their
// homology over a runtime coefficient domain. Over a field the result is a
// dimension per degree; over Z, free rank plus invariant factors (torsion of
// H_d comes from the Smith form of the incoming boundary d_{d+1}).

#include <stdexcept>
#include <string>
#include <vector>

#include "quadstab/abelian.hpp"
#include "quadstab/arith.hpp"
#include "quadstab/linalg.hpp"
#include "quadstab/matrix.hpp"
#include "quadstab/smith.hpp"

namespace quadstab {

class FreeChainComplex {
public:
    // dims[i] = dim C_{min_degree + i}; boundaries[i] : C_{min_degree+i+1} -> C_{min_degree+i}
    FreeChainComplex(long min_degree, std::vector<long> dims, std::vector<ExactMatrix> boundaries)
        : min_degree_(min_degree), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
        if (dims_.empty()) throw std::invalid_argument("FreeChainComplex: empty degree range");
        if (boundaries_.size() + 1 != dims_.size())
            throw std::invalid_argument("FreeChainComplex: need one boundary per consecutive degree pair");
        for (std::size_t i = 0; i < boundaries_.size(); ++i) {
            if (boundaries_[i].rows() != dims_[i] || boundaries_[i].cols() != dims_[i + 1])
                throw std::invalid_argument("FreeChainComplex: boundary shape mismatch at degree " +
                                            std::to_string(min_degree_ + static_cast<long>(i) + 1));
        }
        for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i) {
            if (!(boundaries_[i] * boundaries_[i + 1]).is_zero())
                throw std::invalid_argument("FreeChainComplex: d∘d != 0 at degree " +
                                            std::to_string(min_degree_ + static_cast<long>(i) + 2));
        }
    }

    long min_degree() const { return min_degree_; }
    long max_degree() const { return min_degree_ + static_cast<long>(dims_.size()) - 1; }

    long dim(long d) const {
        if (d < min_degree() || d > max_degree()) return 0;
        return dims_[static_cast<std::size_t>(d - min_degree_)];
    }

    // d_d : C_d -> C_{d-1}, defined for min_degree < d <= max_degree
    const ExactMatrix& boundary(long d) const {
        if (d <= min_degree() || d > max_degree())
            throw std::out_of_range("FreeChainComplex: no boundary at degree " + std::to_string(d));
        return boundaries_[static_cast<std::size_t>(d - min_degree_ - 1)];
    }

    bool has_boundary(long d) const { return d > min_degree() && d <= max_degree(); }

private:
    long min_degree_;
    std::vector<long> dims_;
    std::vector<ExactMatrix> boundaries_;
};

struct HomologyResult {
    CoefficientDomain domain = CoefficientDomain::integers();
    long min_degree = 0;
    std::vector<AbelianInvariants> groups;

    long max_degree() const { return min_degree + static_cast<long>(groups.size()) - 1; }

    const AbelianInvariants& at(long d) const {
        static const AbelianInvariants zero{};
        if (d < min_degree || d > max_degree()) return zero;
        return groups[static_cast<std::size_t>(d - min_degree)];
    }

    long dim(long d) const { return at(d).free_rank; }

    // "Z/3", "Z^2" over the integers; "Q", "F3^2" over a field
    std::string group_string(long d) const {
        const AbelianInvariants& g = at(d);
        if (domain.kind() == CoefficientDomain::Kind::integers) return g.to_string();
        if (g.free_rank == 0) return "0";
        return domain.name() + (g.free_rank == 1 ? "" : "^" + std::to_string(g.free_rank));
    }
};

inline HomologyResult homology(const FreeChainComplex& c, const CoefficientDomain& domain) {
    HomologyResult out;
    out.domain = domain;
    out.min_degree = c.min_degree();

    const long lo = c.min_degree(), hi = c.max_degree();
    std::vector<long> ranks(static_cast<std::size_t>(hi - lo + 2), 0); // ranks[d-lo] = rank d_d
    CoefficientDomain rank_domain =
        domain.kind() == CoefficientDomain::Kind::integers ? CoefficientDomain::rationals() : domain;
    for (long d = lo + 1; d <= hi; ++d)
        ranks[static_cast<std::size_t>(d - lo)] = rank(c.boundary(d), rank_domain);

    for (long d = lo; d <= hi; ++d) {
        AbelianInvariants g;
        long r_in = (d < hi) ? ranks[static_cast<std::size_t>(d - lo + 1)] : 0;
        long r_out = (d > lo) ? ranks[static_cast<std::size_t>(d - lo)] : 0;
        g.free_rank = c.dim(d) - r_in - r_out;
        if (g.free_rank < 0) throw std::logic_error("homology: negative rank");
        if (domain.kind() == CoefficientDomain::Kind::integers && d < hi) {
            SmithForm sf = smith_normal_form(c.boundary(d + 1));
            for (const auto& f : sf.invariant_factors)
                if (f > 1) g.factors.push_back(f);
        }
        out.groups.push_back(std::move(g));
    }
    return out;
}

} // namespace quadstab
