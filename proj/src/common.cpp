#include "pdskit/common.hpp"

namespace pdskit {

const char* to_string(SearchStatus s) noexcept {
    switch (s) {
        case SearchStatus::Found: return "ok";
        case SearchStatus::Absent: return "absent";
        case SearchStatus::GaveUp: return "gave-up";
    }
    return "?";
}

std::string format_list(const std::vector<std::uint32_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string format_word(const Word& w) { return format_list(w); }

}  // namespace pdskit
