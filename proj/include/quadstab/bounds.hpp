#pragma once

// Support-bound propagation for the chart induction behind the stability
// theorem. Entries are upper bounds h_s(t) on the top grading of a trigraded
// spectral-sequence term; the value -inf marks empty support. Row 0 is
// axiomatic input; in each later row the two leftmost columns are bounded by
// the possible d^r differential sources (r >= 2), and columns s >= 2 follow
// from the module-regularity estimates.

#include <stdexcept>
#include <string>
#include <vector>

namespace quadstab {

struct Bound {
    bool finite = false;
    long value = 0;

    static Bound neg_inf() { return Bound{false, 0}; }
    static Bound of(long v) { return Bound{true, v}; }

    Bound plus(long k) const { return finite ? of(value + k) : neg_inf(); }

    static Bound max(const Bound& a, const Bound& b) {
        if (!a.finite) return b;
        if (!b.finite) return a;
        return of(a.value > b.value ? a.value : b.value);
    }

    bool leq(const Bound& b) const {
        if (!finite) return true;
        if (!b.finite) return false;
        return value <= b.value;
    }

    friend bool operator==(const Bound& a, const Bound& b) {
        return a.finite == b.finite && (!a.finite || a.value == b.value);
    }

    std::string to_string() const { return finite ? std::to_string(value) : "-inf"; }
};

struct Flags {
    bool axiom3 = false;
    bool axiom4 = false;

    Flags() = default;
    Flags(bool a3, bool a4) : axiom3(a3), axiom4(a4) {
        if (axiom4 && !axiom3)
            throw std::invalid_argument("Flags: axiom4 requires axiom3");
    }

    static Flags parse(const std::string& s) {
        if (s.empty() || s == "none") return Flags();
        if (s == "III") return Flags(true, false);
        if (s == "III,IV" || s == "IV" || s == "III+IV") return Flags(true, true);
        throw std::invalid_argument("Flags: cannot parse '" + s + "' (use none, III, or III,IV)");
    }

    std::string name() const { return axiom4 ? "III,IV" : (axiom3 ? "III" : "none"); }
};

// Row-0 inputs: h_s(0) bounds the support of the s-th module homology of the
// degree-0 part. The axioms sharpen s = 2 and s = 3.
inline Bound row_zero(const Flags& flags, long s) {
    if (s < 0) throw std::domain_error("row_zero: s must be >= 0");
    if (s == 0) return Bound::of(0);
    if (s == 1) return Bound::neg_inf();
    if (s == 2) return Bound::of(flags.axiom3 ? 2 : 3);
    if (s == 3) return Bound::of(flags.axiom4 ? 3 : 4);
    return Bound::of(s + 1);
}

// Regularity estimates for columns s >= 2, given the bounds h0, h1 already
// established in the same row. Regime selection:
//   (i)   base: h_2 <= max(3+h0, 1+h1); for d >= 3, h_d <= d+1+max(h0, h1-1)
//   (ii)  axiom3: h_2 <= 2+max(h0, h1-1)
//   (iii) axiom3+axiom4: h_d <= d+max(h0, h1-1) for d <= 3
// d >= 4 always uses regime (i).
inline Bound lemma_estimates(const Flags& flags, const Bound& h0, const Bound& h1, long d) {
    if (d < 2) throw std::domain_error("lemma_estimates: defined for d >= 2 only");
    Bound m = Bound::max(h0, h1.plus(-1));
    if (flags.axiom4 && d <= 3) return m.plus(d);
    if (flags.axiom3 && d == 2) return m.plus(2);
    if (d == 2) return Bound::max(h0.plus(3), h1.plus(1));
    return m.plus(d + 1);
}

struct BoundTable {
    Flags flags;
    long s_max = 0, t_max = 0;
    std::vector<std::vector<Bound>> rows; // rows[t][s]

    const Bound& at(long s, long t) const {
        return rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
    }
};

// Fill the table row by row. Row t >= 1, s in {0,1}: every differential
// d^r, r >= 2, into position (s, t) comes from (s+r, t-r+1), so
//   h_s(t) <= max over r >= 2 with t-r+1 >= 0 of h_{s+r}(t-r+1).
// Columns s >= 2 then follow from lemma_estimates on the same row. Rows are
// computed internally out to column max(s_max, t_max+2) so every needed
// differential source exists.
inline BoundTable propagate(const Flags& flags, long t_max, long s_max) {
    if (t_max < 0 || s_max < 0) throw std::invalid_argument("propagate: negative window");
    long s_wide = std::max(s_max, t_max + 2);
    std::vector<std::vector<Bound>> wide(static_cast<std::size_t>(t_max) + 1);
    for (long t = 0; t <= t_max; ++t) {
        auto& row = wide[static_cast<std::size_t>(t)];
        row.resize(static_cast<std::size_t>(s_wide) + 1);
        if (t == 0) {
            for (long s = 0; s <= s_wide; ++s) row[static_cast<std::size_t>(s)] = row_zero(flags, s);
            continue;
        }
        for (long s = 0; s <= 1; ++s) {
            Bound b = Bound::neg_inf();
            for (long r = 2; t - r + 1 >= 0; ++r)
                b = Bound::max(b, wide[static_cast<std::size_t>(t - r + 1)][static_cast<std::size_t>(s + r)]);
            row[static_cast<std::size_t>(s)] = b;
        }
        for (long s = 2; s <= s_wide; ++s)
            row[static_cast<std::size_t>(s)] =
                lemma_estimates(flags, row[0], row[1], s);
    }
    BoundTable out;
    out.flags = flags;
    out.s_max = s_max;
    out.t_max = t_max;
    out.rows.resize(static_cast<std::size_t>(t_max) + 1);
    for (long t = 0; t <= t_max; ++t)
        out.rows[static_cast<std::size_t>(t)].assign(wide[static_cast<std::size_t>(t)].begin(),
                                                     wide[static_cast<std::size_t>(t)].begin() + s_max + 1);
    return out;
}

struct ClosedFormCheck {
    long s = 0, t = 0;
    Bound table_value;
    long closed_form = 0;
    bool holds = false;
    bool equality = false;
};

struct ClosedFormReport {
    Flags flags;
    long t_max = 0;
    std::vector<ClosedFormCheck> checks;
    bool all_hold = true;
};

// Closed forms read off the charts. Columns s <= 1 are checked for every
// flag set; the s >= 2 forms are chart-side statements and are only checked
// where the charts establish them (no flags, and axiom3). With both axioms
// the s >= 2 closed form concerns a different invariant than the chart
// tracks, so it is not asserted here.
inline ClosedFormReport verify_closed_forms(const Flags& flags, long t_max) {
    const long s_need = 10;
    BoundTable table = propagate(flags, t_max, s_need);
    ClosedFormReport rep;
    rep.flags = flags;
    rep.t_max = t_max;
    auto check = [&](long s, long t, long bound) {
        ClosedFormCheck c;
        c.s = s;
        c.t = t;
        c.table_value = table.at(s, t);
        c.closed_form = bound;
        c.holds = c.table_value.leq(Bound::of(bound));
        c.equality = c.table_value == Bound::of(bound);
        rep.all_hold = rep.all_hold && c.holds;
        rep.checks.push_back(c);
    };
    for (long t = 1; t <= t_max; ++t) {
        if (!flags.axiom3) {
            check(0, t, 3 * t);
            check(1, t, 3 * t + 1);
            for (long s = 2; s <= s_need; ++s) check(s, t, 3 * t + 1 + s);
        } else if (!flags.axiom4) {
            check(0, t, 3 * t - 1);
            check(1, t, 3 * t + 1);
            check(2, t, 3 * t + 2);
            for (long s = 3; s <= s_need; ++s) check(s, t, 3 * t + 1 + s);
        } else {
            check(0, t, 2 * t);
            check(1, t, 2 * t + 1);
        }
    }
    return rep;
}

} // namespace quadstab
