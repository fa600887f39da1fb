#ifndef LERCH_TOOLS_PARSE_HPP
#define LERCH_TOOLS_PARSE_HPP

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <lerch/branch.hpp>

namespace lerch::tools
{

namespace detail
{

// Reads one signed real at text[pos]; "+" / "-" alone (before an 'i') reads as 1.
inline std::optional<double> read_real(const std::string &text, std::size_t &pos, bool allow_bare_sign)
{
    const char *begin = text.c_str() + pos;
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end != begin && errno == 0) {
        // strtod accepts "inf"/"nan" and hex; reject those.
        for (const char *c = begin; c != end; ++c) {
            if (*c == 'x' || *c == 'X' || *c == 'n' || *c == 'N') {
                return std::nullopt;
            }
        }
        pos += static_cast<std::size_t>(end - begin);
        return v;
    }
    if (allow_bare_sign && (*begin == '+' || *begin == '-')) {
        pos += 1;
        return *begin == '-' ? -1.0 : 1.0;
    }
    if (allow_bare_sign && *begin == 'i') {
        return 1.0;
    }
    return std::nullopt;
}

} // namespace detail

/// Parses "re", "imi", "re+imi" or "re-imi" (no spaces). A bare "i" stands for 1i.
inline std::optional<cplx> parse_complex(const std::string &text)
{
    if (text.empty() || text.find(' ') != std::string::npos) {
        return std::nullopt;
    }
    std::size_t pos = 0;
    const auto first = detail::read_real(text, pos, true);
    if (!first) {
        return std::nullopt;
    }
    if (pos == text.size()) {
        return cplx(*first, 0.0);
    }
    if (text[pos] == 'i' && pos + 1 == text.size()) {
        return cplx(0.0, *first);
    }
    if (text[pos] != '+' && text[pos] != '-') {
        return std::nullopt;
    }
    const auto second = detail::read_real(text, pos, true);
    if (!second || pos + 1 != text.size() || text[pos] != 'i') {
        return std::nullopt;
    }
    return cplx(*first, *second);
}

inline std::string format_real(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_complex(cplx z)
{
    std::string out = format_real(z.real());
    const double im = z.imag();
    out += (std::signbit(im) ? "-" : "+");
    out += format_real(std::abs(im));
    out += "i";
    return out;
}

struct GridAxis {
    char name = 'z';
    cplx from, to;
    int count = 0;

    std::vector<cplx> points() const
    {
        std::vector<cplx> out;
        for (int i = 0; i < count; ++i) {
            const double t = (count == 1) ? 0.0 : static_cast<double>(i) / (count - 1);
            out.push_back(from + (to - from) * t);
        }
        return out;
    }
};

/// Parses "z=a:b:n,s=a:b:n,w=a:b:n" with complex endpoints. An empty string is
/// the empty grid. Every axis must appear exactly once.
inline std::optional<std::vector<GridAxis>> parse_grid(const std::string &text)
{
    std::vector<GridAxis> axes;
    if (text.empty()) {
        return axes;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.size() < 3 || item[1] != '=' || (item[0] != 'z' && item[0] != 's' && item[0] != 'w')) {
            return std::nullopt;
        }
        const std::string body = item.substr(2);
        const std::size_t c1 = body.find(':');
        const std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : body.find(':', c1 + 1);
        if (c2 == std::string::npos) {
            return std::nullopt;
        }
        const auto from = parse_complex(body.substr(0, c1));
        const auto to = parse_complex(body.substr(c1 + 1, c2 - c1 - 1));
        const std::string count = body.substr(c2 + 1);
        if (!from || !to || count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
            return std::nullopt;
        }
        for (const auto &a : axes) {
            if (a.name == item[0]) {
                return std::nullopt;
            }
        }
        axes.push_back({item[0], *from, *to, std::stoi(count)});
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (axes.size() != 3) {
        return std::nullopt;
    }
    return axes;
}

} // namespace lerch::tools

#endif
