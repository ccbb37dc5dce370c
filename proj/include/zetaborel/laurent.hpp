#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zetaborel/bernoulli.hpp"
#include "zetaborel/rational.hpp"

namespace zetaborel {

/// Coefficient vectors over the Laurent basis
///
///   { (-1)^(n-1) (n-1)! / z^n,  1,  z^n / n!   |  n = 1, 2, 3, ... }
///
/// written (..., a_{-2}, a_{-1} | a_0, a_1, a_2, ...). A vector stores the
/// window [lo, hi] (lo <= 0 <= hi) explicitly; `tail` records whether the
/// coefficients outside the window are known to vanish or are merely not
/// represented (truncated view of an infinite-support object).
enum class Tail { ZeroBeyondWindow, TruncatedUnknown };

class LaurentVec {
public:
    LaurentVec() : lo_(0), hi_(0), a_{Rat(0)} {}

    LaurentVec(int lo, int hi, std::vector<Rat> coeffs, Tail tail = Tail::ZeroBeyondWindow)
        : lo_(lo), hi_(hi), a_(std::move(coeffs)), tail_(tail) {
        if (lo_ > 0 || hi_ < 0) throw std::invalid_argument("LaurentVec: window must contain 0");
        if (a_.size() != static_cast<std::size_t>(hi_ - lo_ + 1))
            throw std::invalid_argument("LaurentVec: coefficient count does not match window");
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    Tail tail() const { return tail_; }

    /// Component a_n. Outside the window this is 0 for ZeroBeyondWindow
    /// vectors and a caller error for truncated ones.
    const Rat& at(int n) const {
        if (n < lo_ || n > hi_) {
            if (tail_ == Tail::TruncatedUnknown)
                throw std::out_of_range("LaurentVec::at: component outside truncated window");
            static const Rat zero(0);
            return zero;
        }
        return a_[static_cast<std::size_t>(n - lo_)];
    }

    bool operator==(const LaurentVec& o) const {
        const int l = std::min(lo_, o.lo_), h = std::max(hi_, o.hi_);
        if (tail_ != o.tail_) return false;
        for (int n = l; n <= h; ++n)
            if (at(n) != o.at(n)) return false;
        return true;
    }

private:
    int lo_, hi_;
    std::vector<Rat> a_;
    Tail tail_ = Tail::ZeroBeyondWindow;
};

inline LaurentVec identity_vec() { return LaurentVec(0, 0, {Rat(1)}); }

/// alpha*f + beta*g on the merged window.
inline LaurentVec linear_combine(const Rat& alpha, const LaurentVec& f, const Rat& beta,
                                 const LaurentVec& g) {
    const int lo = std::min(f.lo(), g.lo()), hi = std::max(f.hi(), g.hi());
    std::vector<Rat> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) {
        // A truncated input contributes unknown values outside its own
        // window, but inside the merged window every index is inside at
        // least one input; read the other through at() only when safe.
        Rat fa = (n >= f.lo() && n <= f.hi()) || f.tail() == Tail::ZeroBeyondWindow ? f.at(n) : Rat(0);
        Rat ga = (n >= g.lo() && n <= g.hi()) || g.tail() == Tail::ZeroBeyondWindow ? g.at(n) : Rat(0);
        c.push_back(alpha * fa + beta * ga);
    }
    const Tail tail = (f.tail() == Tail::ZeroBeyondWindow && g.tail() == Tail::ZeroBeyondWindow)
                          ? Tail::ZeroBeyondWindow
                          : Tail::TruncatedUnknown;
    return LaurentVec(lo, hi, std::move(c), tail);
}

/// The generalized product. Component n >= 0:
///
///   (f.g)_n = sum_{k<0} <n, n-k> a_k b_{n-k}
///           + sum_{0<=k<=n} C(n,k) a_k b_{n-k}
///           + sum_{k>n} <n, k> a_k b_{n-k}
///
/// and component -n (n > 0):
///
///   (f.g)_{-n} = sum_{k<=-n} (-1)^(n+k) C(-k-1, n-1) a_k b_{-n-k}
///              + sum_{-n<k<0} (1/k) (1/C(n-1, -k)) a_k b_{-n-k}
///              + sum_{k>=0} (-1)^k C(n+k-1, n-1) a_k b_{-n-k}.
///
/// Both inputs must have finite support (ZeroBeyondWindow): every sum above
/// is then finite and the result is exact on the full product window
/// [lo_f + lo_g, hi_f + hi_g]; components beyond it vanish identically
/// (each raw z-power of the product lies in that range). Infinite-support
/// tails must go through neg_component_stream and the Borel engine instead.
inline LaurentVec laurent_mul(const LaurentVec& f, const LaurentVec& g) {
    if (f.tail() != Tail::ZeroBeyondWindow || g.tail() != Tail::ZeroBeyondWindow)
        throw std::invalid_argument("laurent_mul: inputs must have finite support");

    const int lo = std::min(0, f.lo() + g.lo());
    const int hi = std::max(0, f.hi() + g.hi());
    std::vector<Rat> c(static_cast<std::size_t>(hi - lo + 1), Rat(0));

    auto term_range = [&](int out, int& kmin, int& kmax) {
        // a_k b_{out-k} nonzero only when k and out-k are in the windows
        kmin = std::max(f.lo(), out - g.hi());
        kmax = std::min(f.hi(), out - g.lo());
    };

    for (int n = 0; n <= hi; ++n) {
        int kmin, kmax;
        term_range(n, kmin, kmax);
        Rat s = 0;
        for (int k = kmin; k <= kmax; ++k) {
            const Rat prod = f.at(k) * g.at(n - k);
            if (prod == 0) continue;
            if (k < 0)
                s += gen_binom(n, n - k) * prod;
            else if (k <= n)
                s += Rat(binomial(n, k)) * prod;
            else
                s += gen_binom(n, k) * prod;
        }
        c[static_cast<std::size_t>(n - lo)] = s;
    }
    for (int n = 1; n <= -lo; ++n) {
        int kmin, kmax;
        term_range(-n, kmin, kmax);
        Rat s = 0;
        for (int k = kmin; k <= kmax; ++k) {
            const Rat prod = f.at(k) * g.at(-n - k);
            if (prod == 0) continue;
            if (k <= -n) {
                const int sign = ((n + k) % 2 == 0) ? 1 : -1;
                s += Rat(sign * binomial(-k - 1, n - 1)) * prod;
            } else if (k < 0) {
                s += make_rat(BigInt(1), BigInt(k) * binomial(n - 1, -k)) * prod;
            } else {
                const int sign = (k % 2 == 0) ? 1 : -1;
                s += Rat(sign * binomial(n + k - 1, n - 1)) * prod;
            }
        }
        c[static_cast<std::size_t>(-n - lo)] = s;
    }
    return LaurentVec(lo, hi, std::move(c));
}

/// Componentwise product (the section-1.2 "vector multiplication"), on the
/// intersection window.
inline LaurentVec pointwise_mul(const LaurentVec& f, const LaurentVec& g) {
    const int lo = std::max(f.lo(), g.lo()), hi = std::min(f.hi(), g.hi());
    std::vector<Rat> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) c.push_back(f.at(n) * g.at(n));
    const Tail tail = (f.tail() == Tail::ZeroBeyondWindow && g.tail() == Tail::ZeroBeyondWindow)
                          ? Tail::ZeroBeyondWindow
                          : Tail::TruncatedUnknown;
    return LaurentVec(lo, hi, std::move(c), tail);
}

/// The named vectors of sections 1.2-1.3, materialized on [0, K]. These are
/// truncations of infinite Taylor vectors, so they carry TruncatedUnknown --
/// except id, which is genuinely finite. Products of truncations are exact
/// in components 0..K (the Taylor convolution at n only reads indices <= n),
/// which is how the identity suites use them; construct with
/// `as_finite = true` to reinterpret the window as finite support for
/// feeding laurent_mul.
enum class NamedElement { Identity, J, B, H, Minus1H, Minus1B };

inline LaurentVec named_element(NamedElement which, int K, const Rat& c = Rat(1),
                                bool as_finite = true) {
    if (K < 0) throw std::invalid_argument("named_element: window bound must be >= 0");
    const Tail tail = as_finite ? Tail::ZeroBeyondWindow : Tail::TruncatedUnknown;
    std::vector<Rat> a;
    a.reserve(static_cast<std::size_t>(K + 1));
    switch (which) {
        case NamedElement::Identity:
            return identity_vec();
        case NamedElement::J: {
            if (c == 0) throw std::domain_error("named_element: j-element requires c != 0");
            Rat p = 1;
            for (int k = 0; k <= K; ++k, p *= c) a.push_back(p);
            break;
        }
        case NamedElement::B:
            for (int k = 0; k <= K; ++k) a.push_back(bernoulli(static_cast<std::size_t>(k)));
            break;
        case NamedElement::H:
            for (int k = 0; k <= K; ++k) a.push_back(make_rat(1, k + 1));
            break;
        case NamedElement::Minus1H:
            for (int k = 0; k <= K; ++k) a.push_back(make_rat(k % 2 == 0 ? 1 : -1, k + 1));
            break;
        case NamedElement::Minus1B:
            for (int k = 0; k <= K; ++k) {
                Rat b = bernoulli(static_cast<std::size_t>(k));
                a.push_back(k % 2 == 0 ? b : -b);
            }
            break;
    }
    return LaurentVec(0, K, std::move(a), tail);
}

/// Conversion between basis coefficients a_n and raw Laurent coefficients
/// c_n (coefficient of z^n): c_{-m} = a_{-m} (-1)^(m-1) (m-1)!, c_m = a_m/m!.
inline Rat basis_to_raw(int n, const Rat& a) {
    if (n >= 0) return a / Rat(factorial(n));
    const int m = -n;
    const int sign = (m - 1) % 2 == 0 ? 1 : -1;
    return a * Rat(sign * factorial(m - 1));
}

inline Rat raw_to_basis(int n, const Rat& c) {
    if (n >= 0) return c * Rat(factorial(n));
    const int m = -n;
    const int sign = (m - 1) % 2 == 0 ? 1 : -1;
    return c / Rat(sign * factorial(m - 1));
}

/// Textual form "(a_lo, ..., a_{-1} | a_0, ..., a_hi)".
inline std::string format_vec(const LaurentVec& v) {
    std::ostringstream out;
    out << '(';
    for (int n = v.lo(); n < 0; ++n) {
        out << rat_to_string(v.at(n));
        if (n != -1) out << ", ";
    }
    out << " | ";
    for (int n = 0; n <= v.hi(); ++n) {
        if (n) out << ", ";
        out << rat_to_string(v.at(n));
    }
    out << ')';
    return out.str();
}

inline LaurentVec parse_vec(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("parse_vec: expected '(a,... | a,...)', got '" +
                                     std::string(text) + "'");
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw bad();
    s = s.substr(1, s.size() - 2);
    const auto bar = s.find('|');
    if (bar == std::string_view::npos) throw bad();
    auto split = [&](std::string_view part) {
        std::vector<Rat> out;
        part = trim(part);
        if (part.empty()) return out;
        std::size_t pos = 0;
        while (pos <= part.size()) {
            auto comma = part.find(',', pos);
            if (comma == std::string_view::npos) comma = part.size();
            out.push_back(rat_from_string(std::string(trim(part.substr(pos, comma - pos)))));
            pos = comma + 1;
        }
        return out;
    };
    std::vector<Rat> neg = split(s.substr(0, bar));
    std::vector<Rat> pos = split(s.substr(bar + 1));
    if (pos.empty()) throw bad();
    const int lo = -static_cast<int>(neg.size());
    const int hi = static_cast<int>(pos.size()) - 1;
    neg.insert(neg.end(), pos.begin(), pos.end());
    return LaurentVec(lo, hi, std::move(neg));
}

/// A pure coefficient stream: generator(k) for k >= 0 always yields the same
/// value. Used for infinite tails the window representation cannot hold.
template <class T>
struct Stream {
    std::function<T(int)> gen;
    std::string label;
    T operator()(int k) const { return gen(k); }
};

using RatStream = Stream<Rat>;

/// Third-sum rows of the negative-component product formula, for a
/// Taylor-only f against a pure negative tail g (the other two sums vanish):
///
///   c_k = (-1)^k C(n+k-1, n-1) a_k b_{-n-k},   k = 0, 1, 2, ...
///
/// `negtail(m)` supplies b_{-(m+1)} for m >= 0. The stream is returned raw
/// and unsummed -- these tails are typically divergent and belong to the
/// Borel engine.
inline RatStream neg_component_stream(const RatStream& taylor, const RatStream& negtail, int n) {
    if (n < 1) throw std::domain_error("neg_component_stream: n must be >= 1");
    auto gen = [taylor, negtail, n](int k) -> Rat {
        const int sign = (k % 2 == 0) ? 1 : -1;
        return Rat(sign * binomial(n + k - 1, n - 1)) * taylor(k) * negtail(n + k - 1);
    };
    return RatStream{gen, "negcomp[" + std::to_string(-n) + "](" + taylor.label + ", " + negtail.label + ")"};
}

// Rational Taylor side against a floating tail (zeta-dependent streams).
template <class Real>
Stream<Real> neg_component_stream(const RatStream& taylor, const Stream<Real>& negtail, int n) {
    if (n < 1) throw std::domain_error("neg_component_stream: n must be >= 1");
    auto gen = [taylor, negtail, n](int k) -> Real {
        const int sign = (k % 2 == 0) ? 1 : -1;
        const Rat w = Rat(sign * binomial(n + k - 1, n - 1)) * taylor(k);
        return to_real<Real>(w) * negtail(n + k - 1);
    };
    return Stream<Real>{gen, "negcomp[" + std::to_string(-n) + "](" + taylor.label + ", " + negtail.label + ")"};
}

/// Numeric (floating) coefficient vector; only used where exactness is
/// impossible, e.g. the zeta'(s) vector whose entries involve zeta values.
template <class Real>
struct NumericLaurentVec {
    int lo = 0, hi = 0;
    std::vector<Real> a;  // a[i] is the coefficient at index lo + i
    Tail tail = Tail::TruncatedUnknown;

    Real at(int n) const {
        if (n < lo || n > hi) {
            if (tail == Tail::TruncatedUnknown)
                throw std::out_of_range("NumericLaurentVec::at: outside truncated window");
            return Real(0);
        }
        return a[static_cast<std::size_t>(n - lo)];
    }
};

/// The vector (..., 3(zeta(4)-1), 2(zeta(3)-1), zeta(2)-1 | 0, 0, ...):
/// a_{-n} = n (zeta(n+1) - 1) for 1 <= n <= depth, Taylor part zero.
template <class Real, class ZetaFn>
NumericLaurentVec<Real> zeta_prime_vec(int depth, ZetaFn&& zeta) {
    if (depth < 1) throw std::domain_error("zeta_prime_vec: depth must be >= 1");
    NumericLaurentVec<Real> v;
    v.lo = -depth;
    v.hi = 0;
    v.tail = Tail::TruncatedUnknown;
    v.a.resize(static_cast<std::size_t>(depth + 1));
    for (int n = 1; n <= depth; ++n)
        v.a[static_cast<std::size_t>(depth - n)] = Real(n) * (zeta(n + 1) - Real(1));
    v.a.back() = Real(0);
    return v;
}

/// Partial-sum residual of the convergent recursion obtained by reading the
/// -(s-1) component of (-1H) . zeta'(s) at s = n + 1: the row sum
///
///   sum_r C(n+r-1, n-1) / (r+1) * (n+r) (zeta(n+r+1) - 1)
///
/// telescopes to 1. Returns |partial sum - 1| after `terms` terms.
template <class Real, class ZetaFn>
Real check_eq_2_9(int n, int terms, ZetaFn&& zeta) {
    if (n < 1) throw std::domain_error("check_eq_2_9: n must be >= 1");
    RatStream minus1H{[](int k) { return make_rat(k % 2 == 0 ? 1 : -1, k + 1); }, "-1H"};
    Stream<Real> tail{[&zeta](int m) {
                          // b_{-(m+1)} = (m+1) (zeta(m+2) - 1)
                          return Real(m + 1) * (zeta(m + 2) - Real(1));
                      },
                      "zeta'"};
    auto row = neg_component_stream(minus1H, tail, n);
    Real sum = 0;
    for (int k = 0; k < terms; ++k) sum += row(k);
    using std::abs;
    return abs(sum - Real(1));
}

}  // namespace zetaborel
