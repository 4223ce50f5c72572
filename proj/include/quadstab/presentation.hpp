#pragma once

// Finitely presented groups: free-reduced words, relators, abelianization by
// Smith normal form of the exponent-sum matrix, and order-2 semidirect
// extensions presented by an extra generator e with e^2 and conjugation
// relators.
//
// Text format: a line "gens: J T U A B C", then one relator per line in word
// syntax, e.g. "(T A)^3 J^-1". Parentheses group, ^ takes integer exponents.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadstab/abelian.hpp"
#include "quadstab/matrix.hpp"
#include "quadstab/smith.hpp"

namespace quadstab {

struct Word {
    std::vector<std::pair<long, long>> syllables; // (generator, exponent != 0), adjacent generators distinct

    static Word one() { return Word{}; }

    static Word generator(long g, long exp = 1) {
        Word w;
        if (exp != 0) w.syllables.emplace_back(g, exp);
        return w;
    }

    bool empty() const { return syllables.empty(); }

    void append(long g, long exp) {
        if (exp == 0) return;
        if (!syllables.empty() && syllables.back().first == g) {
            syllables.back().second += exp;
            if (syllables.back().second == 0) syllables.pop_back();
        } else {
            syllables.emplace_back(g, exp);
        }
    }

    Word concat(const Word& other) const {
        Word out = *this;
        for (const auto& [g, e] : other.syllables) out.append(g, e);
        return out;
    }

    Word inverse() const {
        Word out;
        for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) out.append(it->first, -it->second);
        return out;
    }

    Word power(long k) const {
        Word out;
        Word base = k >= 0 ? *this : inverse();
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) out = out.concat(base);
        return out;
    }

    // conjugacy-class representative move, used by the invariance tests
    Word cyclic_permutation() const {
        if (syllables.empty()) return *this;
        Word head = generator(syllables[0].first, syllables[0].second);
        Word rest;
        for (std::size_t i = 1; i < syllables.size(); ++i) rest.append(syllables[i].first, syllables[i].second);
        return rest.concat(head);
    }

    std::string format(const std::vector<std::string>& names) const {
        std::string s;
        for (const auto& [g, e] : syllables) {
            if (!s.empty()) s += " ";
            s += names[static_cast<std::size_t>(g)];
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.syllables == b.syllables; }
};

namespace detail {

struct WordParser {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    const std::vector<std::string>& names;

    WordParser(const std::string& text, const std::vector<std::string>& gen_names) : names(gen_names) {
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
            if (c == '(' || c == ')' || c == '^') { tokens.push_back(std::string(1, c)); ++i; continue; }
            if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i + 1;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                tokens.push_back(text.substr(i, j - i));
                i = j;
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) ++j;
            if (j == i) throw std::invalid_argument("cannot tokenize word: " + text);
            tokens.push_back(text.substr(i, j - i));
            i = j;
        }
    }

    bool at(const std::string& t) const { return pos < tokens.size() && tokens[pos] == t; }

    long gen_index(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<long>(i);
        throw std::invalid_argument("unknown generator '" + name + "' in word");
    }

    Word parse_word(bool inside_parens) {
        Word out;
        while (pos < tokens.size()) {
            if (at(")")) {
                if (!inside_parens) throw std::invalid_argument("unbalanced ')' in word");
                return out;
            }
            Word atom;
            if (at("(")) {
                ++pos;
                atom = parse_word(true);
                if (!at(")")) throw std::invalid_argument("missing ')' in word");
                ++pos;
            } else {
                atom = Word::generator(gen_index(tokens[pos]));
                ++pos;
            }
            long exp = 1;
            if (at("^")) {
                ++pos;
                if (pos >= tokens.size()) throw std::invalid_argument("dangling '^' in word");
                exp = std::stol(tokens[pos]);
                ++pos;
            }
            out = out.concat(atom.power(exp));
        }
        if (inside_parens) throw std::invalid_argument("missing ')' in word");
        return out;
    }
};

} // namespace detail

inline Word parse_word(const std::string& text, const std::vector<std::string>& gen_names) {
    detail::WordParser p(text, gen_names);
    return p.parse_word(false);
}

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    long gen_index(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return static_cast<long>(i);
        throw std::invalid_argument("unknown generator '" + name + "'");
    }

    void add_relator(const std::string& text) { relators.push_back(parse_word(text, generators)); }

    static GroupPresentation parse(const std::string& text) {
        GroupPresentation p;
        std::istringstream in(text);
        std::string line;
        bool have_gens = false;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string first;
            if (!(ls >> first)) continue;
            if (first == "gens:") {
                if (have_gens) throw std::invalid_argument("duplicate gens: line");
                std::string name;
                while (ls >> name) {
                    for (const auto& g : p.generators)
                        if (g == name) throw std::invalid_argument("duplicate generator name '" + name + "'");
                    p.generators.push_back(name);
                }
                have_gens = true;
            } else {
                if (!have_gens) throw std::invalid_argument("relator before gens: line");
                p.add_relator(line);
            }
        }
        if (!have_gens) throw std::invalid_argument("presentation has no gens: line");
        return p;
    }

    std::string format() const {
        std::string s = "gens:";
        for (const auto& g : generators) s += " " + g;
        s += "\n";
        for (const auto& r : relators) s += r.format(generators) + "\n";
        return s;
    }
};

// SNF of the relators-by-generators exponent matrix: torsion = invariant
// factors > 1, free rank = generators - rank.
inline AbelianInvariants abelianize(const GroupPresentation& p) {
    ExactMatrix m(static_cast<long>(p.relators.size()), static_cast<long>(p.generators.size()));
    for (long r = 0; r < static_cast<long>(p.relators.size()); ++r)
        for (const auto& [g, e] : p.relators[static_cast<std::size_t>(r)].syllables)
            m.add_to(r, g, e);
    SmithForm sf = smith_normal_form(m);
    AbelianInvariants out;
    out.free_rank = static_cast<long>(p.generators.size()) - sf.rank;
    for (const auto& f : sf.invariant_factors)
        if (f > 1) out.factors.push_back(f);
    return out;
}

// Presentation of the extension by an order-2 element acting through phi:
// adds e with relators e^2 (eSquare)^-1 and e g e^-1 phi(g)^-1.
inline GroupPresentation semidirect_z2(const GroupPresentation& p, const std::vector<Word>& phi,
                                       const Word& e_square, const std::string& e_name = "E") {
    if (phi.size() != p.generators.size())
        throw std::invalid_argument("semidirect_z2: action must cover every generator");
    GroupPresentation out = p;
    long e = static_cast<long>(out.generators.size());
    out.generators.push_back(e_name);
    out.relators.push_back(Word::generator(e, 2).concat(e_square.inverse()));
    for (long g = 0; g < e; ++g) {
        Word conj = Word::generator(e, 1)
                        .concat(Word::generator(g, 1))
                        .concat(Word::generator(e, -1))
                        .concat(phi[static_cast<std::size_t>(g)].inverse());
        out.relators.push_back(conj);
    }
    return out;
}

} // namespace quadstab
