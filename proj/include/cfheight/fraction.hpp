#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cfheight/numeric.hpp"

namespace cfheight {

// A rational r/m in lowest terms with 0 < r < m. This is the domain of the
// normalized height function; the constructor enforces the invariants so
// downstream code never has to re-check them.
class ReducedFraction {
  public:
    ReducedFraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ < 2 || num_ < 1 || num_ >= den_)
            throw std::invalid_argument("fraction " + num_.str() + "/" + den_.str() +
                                        " is not in (0, 1)");
        if (gcd(num_, den_) != 1)
            throw std::invalid_argument("fraction " + num_.str() + "/" + den_.str() +
                                        " is not in lowest terms (gcd = " +
                                        gcd(num_, den_).str() + ")");
    }

    // Parses "R/M".
    static ReducedFraction parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            throw std::invalid_argument("expected R/M, got '" + std::string(text) + "'");
        try {
            return ReducedFraction(Int(std::string(text.substr(0, slash))),
                                   Int(std::string(text.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("expected R/M, got '" + std::string(text) + "'");
        }
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    Rat value() const { return Rat(num_, den_); }
    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend bool operator==(const ReducedFraction& a, const ReducedFraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend auto operator<=>(const ReducedFraction& a, const ReducedFraction& b) {
        // Proper fractions with positive denominators: cross-multiply.
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

  private:
    Int num_;
    Int den_;
};

}  // namespace cfheight
