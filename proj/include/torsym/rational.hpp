#pragma once

// Exact rational arithmetic over 64-bit integers with overflow checking.
// All coordinates, Gram entries and translation parts in this library are
// Rat values; nothing is ever rounded.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <functional>

namespace torsym {

struct arithmetic_overflow : std::runtime_error {
    arithmetic_overflow() : std::runtime_error("rational arithmetic overflow") {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw arithmetic_overflow{};
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Rational number, always in lowest terms with positive denominator.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        return make(n, (__int128)a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        return make(n, (__int128)a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    /// Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Fractional part in [0, 1).
    Rat mod1() const { return *this - Rat(floor()); }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Parses "p", "p/q" or "-p/q".
    static Rat parse(std::string_view s) {
        auto bar = s.find('/');
        try {
            if (bar == std::string_view::npos)
                return Rat(std::stoll(std::string(s)));
            std::int64_t p = std::stoll(std::string(s.substr(0, bar)));
            std::int64_t q = std::stoll(std::string(s.substr(bar + 1)));
            if (q == 0) throw parse_error("zero denominator in '" + std::string(s) + "'");
            return Rat(p, q);
        } catch (const std::invalid_argument&) {
            throw parse_error("bad rational '" + std::string(s) + "'");
        } catch (const std::out_of_range&) {
            throw parse_error("rational out of range '" + std::string(s) + "'");
        }
    }

private:
    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational division by zero");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = 1;
        {
            __int128 x = a, y = d;
            while (y != 0) { __int128 t = x % y; x = y; y = t; }
            g = x == 0 ? 1 : x;
        }
        Rat r;
        r.num_ = detail::checked(n / g);
        r.den_ = detail::checked(d / g);
        return r;
    }

    void reduce() {
        if (den_ == 0) throw std::domain_error("rational division by zero");
        if (den_ < 0) { num_ = detail::checked(-(__int128)num_); den_ = detail::checked(-(__int128)den_); }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace torsym

template <>
struct std::hash<torsym::Rat> {
    std::size_t operator()(const torsym::Rat& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};
