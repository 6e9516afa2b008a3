#include <pdaprune/error.h>

namespace pdaprune {

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics)
{
    std::string out = "invalid pda";
    for (const auto& d : diagnostics)
        out += "\n  " + d.message;
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error(summarize(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

} // namespace pdaprune
