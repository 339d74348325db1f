#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace enh {

/// Exact arithmetic only: every scalar is either a reduced rational or an
/// F2 bit. Fields are compile-time tags so the linear algebra and all
/// complex-building code is monomorphized per field; the CLI dispatches
/// once on its --field flag.
struct Q {
    using Elem = mpq_class;
    static constexpr bool is_f2 = false;
    static const char* name() { return "Q"; }
    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static Elem from_int(long n) { return Elem(n); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem inv(const Elem& a) { return 1 / a; }
    static std::string str(const Elem& a) { return a.get_str(); }
};

struct F2 {
    using Elem = std::uint8_t;  // 0 or 1
    static constexpr bool is_f2 = true;
    static const char* name() { return "F2"; }
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem from_int(long n) { return static_cast<Elem>(((n % 2) + 2) % 2); }
    static bool is_zero(Elem a) { return a == 0; }
    static Elem neg(Elem a) { return a; }
    static Elem add(Elem a, Elem b) { return a ^ b; }
    static Elem sub(Elem a, Elem b) { return a ^ b; }
    static Elem mul(Elem a, Elem b) { return a & b; }
    static Elem div(Elem a, Elem b)
    {
        if (!b)
            throw std::domain_error("division by zero in F2");
        return a;
    }
    static Elem inv(Elem a) { return div(1, a); }
    static std::string str(Elem a) { return a ? "1" : "0"; }
};

}  // namespace enh
