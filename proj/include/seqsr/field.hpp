#pragma once

#include <cstdint>
#include <string>

#include "seqsr/errors.hpp"

namespace seqsr {

/// Coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec prime(std::int64_t p) {
        if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
            throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
        FieldSpec f;
        f.p_ = p;
        return f;
    }

    /// "q" or a prime, as accepted on the command line.
    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q" || s == "0") return rationals();
        std::int64_t p = 0;
        try {
            std::size_t pos = 0;
            p = std::stoll(s, &pos);
            if (pos != s.size()) throw InputError("");
        } catch (const std::exception&) {
            throw InputError("field must be 'q' or a prime, got '" + s + "'");
        }
        return prime(p);
    }

    bool is_rational() const noexcept { return p_ == 0; }
    /// 0 for the rationals.
    std::int64_t characteristic() const noexcept { return p_; }

    std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    static bool is_prime(std::int64_t p) {
        if (p < 2) return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    std::int64_t p_ = 0;
};

}  // namespace seqsr
