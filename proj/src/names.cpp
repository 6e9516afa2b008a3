#include <pdaprune/names.h>

#include <algorithm>
#include <cctype>

namespace pdaprune {

StackString reversed(StackString s)
{
    std::reverse(s.begin(), s.end());
    return s;
}

StackString concat(const StackString& top, const StackString& rest)
{
    StackString out;
    out.reserve(top.size() + rest.size());
    out.insert(out.end(), top.begin(), top.end());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

StackString make_stack(std::initializer_list<std::string_view> names)
{
    StackString out;
    out.reserve(names.size());
    for (auto n : names)
        out.emplace_back(std::string(n));
    return out;
}

std::string to_string(const StackString& s)
{
    if (s.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += s[i].str();
    }
    return out;
}

bool is_valid_name(std::string_view name) noexcept
{
    if (name.empty())
        return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '#';
    });
}

} // namespace pdaprune
