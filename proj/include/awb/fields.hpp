#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace awb {

/// Error type for all precondition / input violations in the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar backed by GMP. Arithmetic never rounds and
/// division by zero throws instead of aborting.
class Q {
public:
    Q() : v_(0) {}
    Q(long n) : v_(n) {}
    Q(int n) : v_(n) {}
    Q(long num, long den) {
        if (den == 0) throw error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    friend Q operator+(const Q& a, const Q& b) { return Q(a.v_ + b.v_); }
    friend Q operator-(const Q& a, const Q& b) { return Q(a.v_ - b.v_); }
    friend Q operator*(const Q& a, const Q& b) { return Q(a.v_ * b.v_); }
    friend Q operator/(const Q& a, const Q& b) {
        if (b.is_zero()) throw error("division by zero");
        return Q(a.v_ / b.v_);
    }
    Q operator-() const { return Q(-v_); }
    Q& operator+=(const Q& b) { v_ += b.v_; return *this; }
    Q& operator-=(const Q& b) { v_ -= b.v_; return *this; }
    Q& operator*=(const Q& b) { v_ *= b.v_; return *this; }

    friend bool operator==(const Q& a, const Q& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Q& a, const Q& b) { return a.v_ != b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    /// Canonical fraction string: "2", "-3/4".
    std::string str() const { return v_.get_str(); }

    /// Parses "n" or "n/d" (exact, no decimals). Returns nullopt on bad syntax.
    static std::optional<Q> parse(const std::string& s) {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
                return std::nullopt;
        mpq_class v;
        if (v.set_str(s, 10) != 0) return std::nullopt;
        if (v.get_den() == 0) return std::nullopt;
        v.canonicalize();
        Q q;
        q.v_ = v;
        return q;
    }

    static const char* field_name() { return "Q"; }
    static std::string field_spec() { return "Q"; }

private:
    explicit Q(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Prime field scalar with an NTL-style session modulus. The modulus is
/// fixed per computation session via set_modulus(); mixing moduli without
/// resetting is undefined by contract (values do not carry their field).
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long n) : v_(reduce(n)) {}
    Fp(int n) : v_(reduce(n)) {}

    static void set_modulus(std::uint32_t p) {
        if (p < 2 || !is_prime(p)) throw error("Fp modulus must be a prime >= 2");
        modulus_ref() = p;
    }
    static std::uint32_t modulus() {
        std::uint32_t p = modulus_ref();
        if (p == 0) throw error("Fp modulus not set");
        return p;
    }

    friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % modulus()); }
    friend Fp operator-(Fp a, Fp b) {
        std::uint32_t p = modulus();
        return from_raw((a.v_ + p - b.v_) % p);
    }
    friend Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<std::uint32_t>(
            (std::uint64_t(a.v_) * b.v_) % modulus()));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const {
        std::uint32_t p = modulus();
        return from_raw(v_ == 0 ? 0 : p - v_);
    }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint32_t raw() const { return v_; }

    Fp inverse() const {
        if (v_ == 0) throw error("division by zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = modulus(), new_r = v_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += modulus();
        return from_raw(static_cast<std::uint32_t>(t));
    }

    std::string str() const { return std::to_string(v_); }

    /// Parses "n" or "n/d"; d must be invertible mod p.
    static std::optional<Fp> parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                std::size_t pos = 0;
                long n = std::stol(s, &pos);
                if (pos != s.size()) return std::nullopt;
                return Fp(n);
            }
            std::size_t pos = 0;
            long n = std::stol(s.substr(0, slash), &pos);
            if (pos != slash) return std::nullopt;
            long d = std::stol(s.substr(slash + 1), &pos);
            if (pos != s.size() - slash - 1) return std::nullopt;
            Fp den(d);
            if (den.is_zero()) return std::nullopt;  // e.g. "1/2" over F2
            return Fp(n) / den;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    static const char* field_name() { return "Fp"; }
    static std::string field_spec() { return "Fp:" + std::to_string(modulus()); }

private:
    static std::uint32_t& modulus_ref() {
        static std::uint32_t p = 0;
        return p;
    }
    static std::uint32_t reduce(long n) {
        long p = modulus();
        long r = n % p;
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
    static Fp from_raw(std::uint32_t v) {
        Fp x;
        x.v_ = v;
        return x;
    }
    static bool is_prime(std::uint32_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
    std::uint32_t v_;
};

template <class K>
concept Field = requires(K a, K b) {
    K();
    K(0);
    K(1);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

/// Scoped modulus for tests that hop between prime fields.
struct FpScope {
    explicit FpScope(std::uint32_t p) { Fp::set_modulus(p); }
};

}  // namespace awb
