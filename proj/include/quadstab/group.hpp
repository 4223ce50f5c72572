#pragma once

// Finite abelian groups presented as products of cyclic factors. Elements are
// packed mixed-radix indices; index 0 is the identity.

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadstab {

class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<long> factor_orders = {}) : factors_(std::move(factor_orders)) {
        order_ = 1;
        for (long m : factors_) {
            if (m < 1) throw std::invalid_argument("FiniteAbelianGroup: factor order must be >= 1");
            order_ *= m;
        }
    }

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(); }
    static FiniteAbelianGroup cyclic(long n) { return FiniteAbelianGroup({n}); }

    // "1", "Z2", "Z2xZ2", "Z4xZ6", ...
    static FiniteAbelianGroup parse(const std::string& spec) {
        if (spec == "1" || spec == "0" || spec == "triv") return trivial();
        std::vector<long> fs;
        std::size_t i = 0;
        while (i < spec.size()) {
            if (spec[i] != 'Z' && spec[i] != 'z')
                throw std::invalid_argument("cannot parse group spec '" + spec + "'");
            ++i;
            std::size_t j = i;
            while (j < spec.size() && isdigit(static_cast<unsigned char>(spec[j]))) ++j;
            if (j == i) throw std::invalid_argument("cannot parse group spec '" + spec + "'");
            fs.push_back(std::stol(spec.substr(i, j - i)));
            i = j;
            if (i < spec.size()) {
                if (spec[i] != 'x' && spec[i] != 'X')
                    throw std::invalid_argument("cannot parse group spec '" + spec + "'");
                ++i;
            }
        }
        return FiniteAbelianGroup(fs);
    }

    long order() const { return order_; }
    const std::vector<long>& factor_orders() const { return factors_; }
    long identity() const { return 0; }

    long op(long a, long b) const {
        check(a);
        check(b);
        long out = 0, stride = 1;
        for (long m : factors_) {
            long xa = a % m, xb = b % m;
            out += ((xa + xb) % m) * stride;
            stride *= m;
            a /= m;
            b /= m;
        }
        return out;
    }

    long inverse(long a) const {
        check(a);
        long out = 0, stride = 1;
        for (long m : factors_) {
            long xa = a % m;
            out += ((m - xa) % m) * stride;
            stride *= m;
            a /= m;
        }
        return out;
    }

    std::vector<long> tuple(long a) const {
        check(a);
        std::vector<long> t;
        t.reserve(factors_.size());
        for (long m : factors_) {
            t.push_back(a % m);
            a /= m;
        }
        return t;
    }

    long from_tuple(const std::vector<long>& t) const {
        if (t.size() != factors_.size())
            throw std::invalid_argument("FiniteAbelianGroup: tuple arity mismatch");
        long out = 0, stride = 1;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            long x = t[i] % factors_[i];
            if (x < 0) x += factors_[i];
            out += x * stride;
            stride *= factors_[i];
        }
        return out;
    }

    // single factor: "1"; several: "(1,0)"
    std::string element_name(long a) const {
        auto t = tuple(a);
        if (t.empty()) return "0";
        if (t.size() == 1) return std::to_string(t[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(t[i]);
        }
        return s + ")";
    }

    long parse_element(const std::string& name) const {
        std::string s = name;
        if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        std::vector<long> t;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) t.push_back(std::stol(item));
        if (factors_.empty() && (t.empty() || (t.size() == 1 && t[0] == 0))) return 0;
        if (t.size() != factors_.size())
            throw std::invalid_argument("cannot parse element '" + name + "' of group " + name_str());
        return from_tuple(t);
    }

    std::string name_str() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "x";
            s += "Z" + std::to_string(factors_[i]);
        }
        return s;
    }

private:
    void check(long a) const {
        if (a < 0 || a >= order_) throw std::out_of_range("FiniteAbelianGroup: element index out of range");
    }

    std::vector<long> factors_;
    long order_;
};

} // namespace quadstab
