#include "forestcol/params.hpp"

#include <cstdlib>

namespace forestcol {

Rational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            std::int64_t num = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return Rational(num, 1);
        }
        size_t used = 0;
        std::int64_t num = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("trailing characters");
        std::int64_t den = std::stoll(text.substr(slash + 1), &used);
        if (used != text.size() - slash - 1) throw std::invalid_argument("trailing characters");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected rational 'p' or 'p/q', got '" + text + "'");
    }
}

}  // namespace forestcol
