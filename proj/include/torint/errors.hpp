#pragma once

#include <stdexcept>
#include <string>

namespace torint {

// Error categories. Unsolvable systems, empty intersections and
// non-transversal pairs are ordinary return values, not errors; these are
// reserved for contract violations and bad input.
enum class errc {
    ambient_mismatch,
    not_primitive,
    infinite_order_translation,
    enumeration_too_large,
    unknown_corpus,
    parse_error,
    internal_check_failed,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) throw error(code, what);
}

}  // namespace torint
