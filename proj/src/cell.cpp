#include "homcert/cell.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace homcert {

Cell Cell::from_colors(const std::vector<std::vector<int>>& colors) {
    std::vector<std::uint64_t> entries;
    entries.reserve(colors.size());
    for (const auto& list : colors) {
        if (list.empty())
            throw std::invalid_argument("cell: empty color set");
        std::uint64_t mask = 0;
        for (int c : list) {
            if (c < 1 || c > 64)
                throw std::invalid_argument("cell: color out of range [1,64]");
            mask |= std::uint64_t{1} << (c - 1);
        }
        entries.push_back(mask);
    }
    return Cell(std::move(entries));
}

std::strong_ordering Cell::operator<=>(const Cell& other) const {
    const std::size_t n = std::min(entries_.size(), other.entries_.size());
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t a = entries_[v];
        std::uint64_t b = other.entries_[v];
        // Walk both masks from the lowest bit up: this is exactly a
        // lexicographic comparison of the two sorted color lists.
        while (a != 0 && b != 0) {
            std::uint64_t la = a & -a;
            std::uint64_t lb = b & -b;
            if (la != lb)
                return la < lb ? std::strong_ordering::less
                               : std::strong_ordering::greater;
            a ^= la;
            b ^= lb;
        }
        if (a != b)  // shorter list is a strict prefix -> smaller
            return a == 0 ? std::strong_ordering::less
                          : std::strong_ordering::greater;
    }
    return entries_.size() <=> other.entries_.size();
}

std::string Cell::to_string() const {
    std::string out;
    for (std::size_t v = 0; v < entries_.size(); ++v) {
        if (v)
            out += ';';
        out += '{';
        bool first = true;
        for (std::uint64_t m = entries_[v]; m != 0; m &= m - 1) {
            if (!first)
                out += ',';
            first = false;
            out += std::to_string(std::countr_zero(m) + 1);
        }
        out += '}';
    }
    return out;
}

Cell Cell::parse(std::string_view text) {
    std::vector<std::uint64_t> entries;
    std::size_t pos = 0;
    auto fail = [&]() -> Cell {
        throw std::invalid_argument("cell: cannot parse \"" + std::string(text) + "\"");
    };
    while (pos < text.size()) {
        if (text[pos] != '{')
            return fail();
        ++pos;
        std::uint64_t mask = 0;
        while (pos < text.size() && text[pos] != '}') {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos,
                                             text.data() + text.size(), value);
            if (ec != std::errc() || value < 1 || value > 64)
                return fail();
            mask |= std::uint64_t{1} << (value - 1);
            pos = static_cast<std::size_t>(ptr - text.data());
            if (pos < text.size() && text[pos] == ',')
                ++pos;
        }
        if (pos >= text.size() || mask == 0)
            return fail();
        ++pos;  // '}'
        entries.push_back(mask);
        if (pos < text.size()) {
            if (text[pos] != ';')
                return fail();
            ++pos;
        }
    }
    if (entries.empty())
        return fail();
    return Cell(std::move(entries));
}

int cell_dim(const Cell& c) {
    int d = 0;
    for (std::uint64_t mask : c.entries())
        d += std::popcount(mask) - 1;
    return d;
}

}  // namespace homcert
