#include "toyqm/field.hpp"

#include <charconv>

namespace toyqm {

std::string F5::to_string() const {
    return std::to_string(v_);
}

F5 F5::parse(std::string_view text) {
    int n = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("not a field element: '" + std::string(text) + "'");
    return F5(n);
}

} // namespace toyqm
