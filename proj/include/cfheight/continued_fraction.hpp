#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfheight/fraction.hpp"
#include "cfheight/numeric.hpp"

namespace cfheight {

// Simple continued fraction [0; a_1, ..., a_n] of a proper fraction.
// Every rational in (0,1) except 1/t has two such forms: the canonical one
// with a_n >= 2 and the alternate one ending ..., a_n - 1, 1.
class CFExpansion {
  public:
    explicit CFExpansion(std::vector<Int> quotients) : quotients_(std::move(quotients)) {
        if (quotients_.empty())
            throw std::invalid_argument("continued fraction needs at least one quotient");
        for (const Int& a : quotients_)
            if (a < 1)
                throw std::invalid_argument("partial quotients must be positive, got " + a.str());
    }

    std::span<const Int> quotients() const { return quotients_; }
    std::size_t length() const { return quotients_.size(); }
    const Int& quotient(std::size_t i) const {  // 1-based, matching a_1..a_n
        if (i < 1 || i > quotients_.size()) throw std::out_of_range("quotient index");
        return quotients_[i - 1];
    }
    bool canonical() const { return quotients_.back() >= 2; }

    std::string str() const {
        std::ostringstream os;
        os << "[0;";
        for (std::size_t i = 0; i < quotients_.size(); ++i)
            os << (i ? "," : "") << quotients_[i].str();
        os << "]";
        return os.str();
    }

    friend bool operator==(const CFExpansion& a, const CFExpansion& b) {
        return a.quotients_ == b.quotients_;
    }

  private:
    std::vector<Int> quotients_;
};

// Euclidean expansion; always returns the canonical form (the final Euclid
// quotient is the last remainder before gcd, which is >= 2 for any reduced
// proper fraction).
inline CFExpansion expand(const ReducedFraction& f) {
    std::vector<Int> q;
    Int a = f.den(), b = f.num();
    while (b != 0) {
        q.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
    }
    return CFExpansion(std::move(q));
}

// Exact value of [0; a_1, ..., a_n] as a ReducedFraction.
inline ReducedFraction value(const CFExpansion& e) {
    Int p2 = 0, p1 = 1;  // p_{-2}, p_{-1}
    Int q2 = 1, q1 = 0;
    for (const Int& a : e.quotients()) {
        Int p0 = a * p1 + p2;
        Int q0 = a * q1 + q2;
        p2 = std::exchange(p1, std::move(p0));
        q2 = std::exchange(q1, std::move(q0));
    }
    if (p1 >= q1) throw std::invalid_argument("expansion " + e.str() + " has value >= 1");
    return ReducedFraction(std::move(p1), std::move(q1));
}

// Switches between the canonical form and the trailing-1 form of the same
// value. Applying it twice is the identity.
inline CFExpansion toggle_form(const CFExpansion& e) {
    std::vector<Int> q(e.quotients().begin(), e.quotients().end());
    if (q.size() == 1 && q.back() == 1)
        throw std::invalid_argument("[0;1] has no alternate form inside (0, 1)");
    if (q.back() == 1) {
        q.pop_back();
        q.back() += 1;
    } else {
        q.back() -= 1;
        q.push_back(1);
    }
    return CFExpansion(std::move(q));
}

// Inclusive index range into a quotient list. The two degenerate encodings
// follow the continuant conventions below: hi == lo - 1 is the empty range
// (continuant 1) and hi == lo - 2 is the length minus-one range (continuant 0).
struct IndexRange {
    std::ptrdiff_t lo;
    std::ptrdiff_t hi;
};

// Continuant E[x_lo, ..., x_hi] over a slice of `values`:
//   E[] = 1, E over a length -1 range = 0,
//   E[x_s..x_t] = x_t * E[x_s..x_{t-1}] + E[x_s..x_{t-2}].
// With those seeds the usual convergent recurrences are the special cases
// q_k = E[a_1..a_k] and p_k = E[a_0..a_k] (a_0 = 0).
template <typename Z>
Z continuant(std::span<const Z> values, IndexRange range) {
    const auto n = static_cast<std::ptrdiff_t>(values.size());
    if (range.hi < range.lo - 2) throw std::out_of_range("continuant: hi < lo - 2");
    if (range.hi < range.lo) {
        if (range.lo < 0 || range.lo > n + 1) throw std::out_of_range("continuant: empty range out of bounds");
        return range.hi == range.lo - 1 ? Z(1) : Z(0);
    }
    if (range.lo < 0 || range.hi >= n) throw std::out_of_range("continuant: range out of bounds");
    Z em2 = 0, em1 = 1;  // E over [lo..i-2], [lo..i-1]
    for (std::ptrdiff_t i = range.lo; i <= range.hi; ++i) {
        Z e = values[static_cast<std::size_t>(i)] * em1 + em2;
        em2 = std::exchange(em1, std::move(e));
    }
    return em1;
}

template <typename Z>
Z continuant(std::span<const Z> values) {
    return continuant(values, IndexRange{0, static_cast<std::ptrdiff_t>(values.size()) - 1});
}

template <typename Z>
Z continuant(const std::vector<Z>& values, IndexRange range) {
    return continuant(std::span<const Z>(values), range);
}

template <typename Z>
Z continuant(const std::vector<Z>& values) {
    return continuant(std::span<const Z>(values));
}

// Convergents p_k/q_k of [0; a_1, ..., a_n], indexed k = -2..n with
//   q_{-2} = 1, q_{-1} = 0, q_k = a_k q_{k-1} + q_{k-2}   (a_0 = 0),
// and the symmetric recurrence for p starting from p_{-2} = 0, p_{-1} = 1.
class ConvergentTable {
  public:
    explicit ConvergentTable(CFExpansion expansion) : e_(std::move(expansion)) {
        const auto n = e_.length();
        p_.reserve(n + 3);
        q_.reserve(n + 3);
        p_ = {0, 1};
        q_ = {1, 0};
        for (std::size_t k = 0; k <= n; ++k) {
            Int a = k == 0 ? Int(0) : e_.quotient(k);
            p_.push_back(a * p_[k + 1] + p_[k]);
            q_.push_back(a * q_[k + 1] + q_[k]);
        }
    }

    std::ptrdiff_t order() const { return static_cast<std::ptrdiff_t>(e_.length()); }
    const CFExpansion& expansion() const { return e_; }

    const Int& p(std::ptrdiff_t k) const { return at(p_, k); }
    const Int& q(std::ptrdiff_t k) const { return at(q_, k); }

  private:
    const Int& at(const std::vector<Int>& v, std::ptrdiff_t k) const {
        if (k < -2 || k > order()) throw std::out_of_range("convergent index " + std::to_string(k));
        return v[static_cast<std::size_t>(k + 2)];
    }

    CFExpansion e_;
    std::vector<Int> p_;
    std::vector<Int> q_;
};

inline ConvergentTable convergents(const CFExpansion& e) { return ConvergentTable(e); }

// Intermediants at index i: alpha * q_{i-1} + q_{i-2} for alpha = 1..a_i.
// Strictly increasing; the last element is q_i itself.
inline std::vector<Int> intermediants(const ConvergentTable& t, std::ptrdiff_t i) {
    if (i < 1 || i > t.order()) throw std::out_of_range("intermediant index " + std::to_string(i));
    std::vector<Int> out;
    const Int& a = t.expansion().quotient(static_cast<std::size_t>(i));
    for (Int alpha = 1; alpha <= a; ++alpha) out.push_back(alpha * t.q(i - 1) + t.q(i - 2));
    return out;
}

}  // namespace cfheight
