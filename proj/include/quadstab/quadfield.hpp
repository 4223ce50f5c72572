#pragma once

// Exact arithmetic in Q(w) with w^2 = -5, 2x2 matrices over it, and the two
// built-in rank-2 presentations with their defining matrices: the special
// linear group of the free rank-2 module and of its twisted companion. Every
// relator can be verified by exact matrix evaluation, and the order-2
// conjugation action used for the general-linear extensions is certified
// against candidate words the same way.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadstab/abelian.hpp"
#include "quadstab/presentation.hpp"

namespace quadstab {

struct QuadInt { // a + b*w, w^2 = -5, exact rational coordinates
    mpq_class a, b;

    QuadInt(long x = 0) : a(x), b(0) {}
    QuadInt(mpq_class a_, mpq_class b_) : a(std::move(a_)), b(std::move(b_)) {}

    static QuadInt omega() { return QuadInt(0, 1); }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return QuadInt(x.a + y.a, x.b + y.b); }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return QuadInt(x.a - y.a, x.b - y.b); }
    friend QuadInt operator-(const QuadInt& x) { return QuadInt(-x.a, -x.b); }
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
        return QuadInt(x.a * y.a - 5 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    QuadInt inverse() const {
        mpq_class norm = a * a + 5 * b * b;
        if (sgn(norm) == 0) throw std::domain_error("QuadInt: inverse of zero");
        return QuadInt(a / norm, -b / norm);
    }

    std::string to_string() const {
        if (sgn(b) == 0) return a.get_str();
        std::ostringstream os;
        if (sgn(a) != 0) os << a.get_str() << (sgn(b) > 0 ? "+" : "");
        if (b == 1) os << "w";
        else if (b == -1) os << "-w";
        else os << b.get_str() << "w";
        return os.str();
    }
};

struct Mat2 {
    QuadInt e[2][2];

    static Mat2 identity() {
        Mat2 m;
        m.e[0][0] = 1;
        m.e[1][1] = 1;
        return m;
    }

    static Mat2 of(QuadInt a, QuadInt b, QuadInt c, QuadInt d) {
        Mat2 m;
        m.e[0][0] = std::move(a);
        m.e[0][1] = std::move(b);
        m.e[1][0] = std::move(c);
        m.e[1][1] = std::move(d);
        return m;
    }

    QuadInt det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        Mat2 m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.e[i][j] = x.e[i][0] * y.e[0][j] + x.e[i][1] * y.e[1][j];
        return m;
    }

    Mat2 inverse() const {
        QuadInt d = det();
        QuadInt inv = d.inverse();
        return of(inv * e[1][1], -(inv * e[0][1]), -(inv * e[1][0]), inv * e[0][0]);
    }

    Mat2 power(long k) const {
        Mat2 base = k >= 0 ? *this : inverse();
        Mat2 out = identity();
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) out = out * base;
        return out;
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!(x.e[i][j] == y.e[i][j])) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[[" << e[0][0].to_string() << "," << e[0][1].to_string() << "],[" << e[1][0].to_string() << ","
           << e[1][1].to_string() << "]]";
        return os.str();
    }
};

inline Mat2 eval_word(const Word& w, const std::vector<Mat2>& assignment) {
    Mat2 out = Mat2::identity();
    for (const auto& [g, e] : w.syllables) {
        if (g < 0 || g >= static_cast<long>(assignment.size()))
            throw std::invalid_argument("eval_word: assignment does not cover generator");
        out = out * assignment[static_cast<std::size_t>(g)].power(e);
    }
    return out;
}

struct MatrixPresentation {
    GroupPresentation pres;
    std::vector<Mat2> matrices; // one per generator
};

// Rank-2 special linear presentation over Z[w]: generators J T U A B C.
inline MatrixPresentation builtin_swan_sl2() {
    MatrixPresentation mp;
    mp.pres.generators = {"J", "T", "U", "A", "B", "C"};
    for (const char* r : {"J^2", "J T J^-1 T^-1", "J U J^-1 U^-1", "J A J^-1 A^-1", "J B J^-1 B^-1",
                          "J C J^-1 C^-1", "T U T^-1 U^-1", "A^2 J^-1", "B^2 J^-1", "(T A)^3 J^-1",
                          "(A B)^2 J^-1", "(A U B U^-1)^2 J^-1", "A C A (J T C T^-1)^-1",
                          "U B U^-1 C B (J T C T^-1)^-1"})
        mp.pres.add_relator(r);
    const QuadInt w = QuadInt::omega();
    mp.matrices = {
        Mat2::of(-1, 0, 0, -1),                                       // J
        Mat2::of(1, 1, 0, 1),                                         // T
        Mat2::of(1, w, 0, 1),                                         // U
        Mat2::of(0, -1, 1, 0),                                        // A
        Mat2::of(-w, 2, 2, w),                                        // B
        Mat2::of(-w - QuadInt(4), -(w + w), w + w, w - QuadInt(4)),   // C
    };
    return mp;
}

// Rank-2 special linear presentation of the twisted module: generators
// J A V C D, with the half-integer entry (1+w)/2.
inline MatrixPresentation builtin_fgt_sl() {
    MatrixPresentation mp;
    mp.pres.generators = {"J", "A", "V", "C", "D"};
    for (const char* r : {"J^2", "J A J^-1 A^-1", "J V J^-1 V^-1", "J C J^-1 C^-1", "J D J^-1 D^-1",
                          "A V A^-1 V^-1", "C D C^-1 D^-1", "(A C^-1)^2 J^-1", "(D V^-1)^3",
                          "(C D^-1 V A^-1)^3"})
        mp.pres.add_relator(r);
    const QuadInt w = QuadInt::omega();
    const QuadInt half_1_plus_w(mpq_class(1, 2), mpq_class(1, 2));
    mp.matrices = {
        Mat2::of(-1, 0, 0, -1),                  // J
        Mat2::of(1, 1, 0, 1),                    // A
        Mat2::of(1, half_1_plus_w, 0, 1),        // V
        Mat2::of(1, 0, 2, 1),                    // C
        Mat2::of(1, 0, QuadInt(1) - w, 1),       // D
    };
    return mp;
}

inline Mat2 conjugation_matrix_e() { return Mat2::of(-1, 0, 0, 1); }

struct RelatorCheck {
    std::string relator;
    bool pass = false;
    std::string value; // evaluated matrix when failing
};

struct RelatorReport {
    std::vector<RelatorCheck> checks;
    bool relators_pass = true;
    bool determinants_pass = true;
};

// Every relator must evaluate to the identity matrix, and every generator
// must have determinant 1.
inline RelatorReport verify_relators(const GroupPresentation& p, const std::vector<Mat2>& assignment) {
    if (assignment.size() != p.generators.size())
        throw std::invalid_argument("verify_relators: assignment must cover every generator");
    RelatorReport rep;
    for (const auto& r : p.relators) {
        Mat2 value = eval_word(r, assignment);
        RelatorCheck c;
        c.relator = r.format(p.generators);
        c.pass = (value == Mat2::identity());
        if (!c.pass) {
            c.value = value.to_string();
            rep.relators_pass = false;
        }
        rep.checks.push_back(std::move(c));
    }
    for (const auto& m : assignment)
        if (!(m.det() == QuadInt(1))) rep.determinants_pass = false;
    return rep;
}

struct ConjugationCertificate {
    std::string generator;
    std::string image_word;
    bool pass = false;
    std::string lhs, rhs; // printed matrices on mismatch
};

// Verifies E g E^-1 = candidate(g) in matrices, generator by generator. This
// certifies a conjugation action; it never searches for one.
inline std::vector<ConjugationCertificate> derive_conjugation_action(const MatrixPresentation& mp, const Mat2& E,
                                                                     const std::vector<Word>& candidates) {
    if (candidates.size() != mp.pres.generators.size())
        throw std::invalid_argument("derive_conjugation_action: candidate words must cover every generator");
    std::vector<ConjugationCertificate> out;
    for (std::size_t g = 0; g < candidates.size(); ++g) {
        ConjugationCertificate c;
        c.generator = mp.pres.generators[g];
        c.image_word = candidates[g].format(mp.pres.generators);
        Mat2 lhs = E * mp.matrices[g] * E.inverse();
        Mat2 rhs = eval_word(candidates[g], mp.matrices);
        c.pass = (lhs == rhs);
        if (!c.pass) {
            c.lhs = lhs.to_string();
            c.rhs = rhs.to_string();
        }
        out.push_back(std::move(c));
    }
    return out;
}

// conjugation action of E on the free-module presentation
inline std::vector<Word> swan_e_action(const GroupPresentation& p) {
    std::vector<std::string> imgs = {"J", "T^-1", "U^-1", "A^-1", "J U B U^-1", "T C^-1 T^-1"};
    std::vector<Word> out;
    for (const auto& s : imgs) out.push_back(parse_word(s, p.generators));
    return out;
}

// conjugation action of E on the twisted-module presentation
inline std::vector<Word> fgt_e_action(const GroupPresentation& p) {
    std::vector<std::string> imgs = {"J", "A^-1", "V^-1", "C^-1", "D^-1"};
    std::vector<Word> out;
    for (const auto& s : imgs) out.push_back(parse_word(s, p.generators));
    return out;
}

struct AbelianizationTableEntry {
    long rank = 0;
    std::string column; // "free" or "twisted"
    AbelianInvariants value;
    std::string source; // "computed" or "literature"
};

// The rank-1..4 abelianization table: ranks 1 and 2 are computed here; the
// rank-3 and rank-4 entries are recorded literature values, labelled as such.
inline std::vector<AbelianizationTableEntry> abelianization_table(long n_max = 4) {
    std::vector<AbelianizationTableEntry> out;
    GroupPresentation units;
    units.generators = {"u"};
    units.add_relator("u^2");
    AbelianInvariants z2 = abelianize(units);
    for (const char* col : {"free", "twisted"})
        out.push_back({1, col, z2, "computed"});

    if (n_max >= 2) {
        auto swan = builtin_swan_sl2();
        auto gl_free = semidirect_z2(swan.pres, swan_e_action(swan.pres), Word::one());
        out.push_back({2, "free", abelianize(gl_free), "computed"});
        auto fgt = builtin_fgt_sl();
        auto gl_twisted = semidirect_z2(fgt.pres, fgt_e_action(fgt.pres), Word::one());
        out.push_back({2, "twisted", abelianize(gl_twisted), "computed"});
    }
    for (long r = 3; r <= n_max; ++r)
        for (const char* col : {"free", "twisted"})
            out.push_back({r, col, AbelianInvariants::cyclic(2), "literature"});
    return out;
}

} // namespace quadstab
